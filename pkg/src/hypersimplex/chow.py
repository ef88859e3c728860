"""Minkowski weight spaces on the normal fan of a hypersimplex.

Codimension-r cones of the fan are labelled by disjoint pairs of index
sets (ones, zeros) with len(ones) + len(zeros) = n - r - 1, len(ones) < k
and len(zeros) < n - k.  A Minkowski weight is a rational-valued function
on these cones satisfying linear balancing conditions; the rank of the
weight space is the Chow-Betti number in codimension r.  This module
computes that rank two ways: as the nullity of the balancing system
(the oracle) and by a closed binomial-sum formula, and it constructs and
checks the explicit 0/1 basis weights behind the formula.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple

from .exact_linalg import (RationalMatrix, binomial, rank_exact,
                           sparse_rank_exact, sparse_rank_mod_p, subsets_lex)

DEFAULT_PRIME = 10007


class ConePair(NamedTuple):
    """Cone label: coordinates pinned to one and to zero (disjoint, sorted)."""

    ones: tuple
    zeros: tuple


@dataclass(frozen=True)
class ConeSet:
    """All codimension-r cone labels for one (r, k, n), in canonical order.

    Cones are ordered by len(zeros) ascending, then lexicographically.
    The level of a cone is the gap between len(ones) and its maximum
    feasible value; levels ascend with len(zeros).
    """

    r: int
    k: int
    n: int
    cones: tuple
    max_ones: int
    min_ones: int

    @property
    def num_levels(self) -> int:
        return self.max_ones - self.min_ones + 1 if self.cones else 0

    def level(self, cone: ConePair) -> int:
        return self.max_ones - len(cone.ones)

    def index(self) -> dict:
        return {c: i for i, c in enumerate(self.cones)}


def enumerate_cones(r: int, k: int, n: int) -> ConeSet:
    """All cone labels for codimension r in the (k, n) fan.

    Accepts any 1 <= k <= n - 1 (the fan is defined for all of them; the
    closed formula below additionally wants k <= n/2) and 0 <= r <= n - 1.
    """
    if not (n >= 2 and 1 <= k <= n - 1):
        raise ValueError(f"need 1 <= k <= n-1, got k={k}, n={n}")
    if not 0 <= r <= n - 1:
        raise ValueError(f"need 0 <= r <= n-1, got r={r}")
    total = n - r - 1
    lo = max(0, total - (n - k - 1))
    hi = min(k - 1, total)
    cones = []
    for a in range(lo, hi + 1):
        b = total - a
        for ones in itertools.combinations(range(1, n + 1), a):
            rest = [x for x in range(1, n + 1) if x not in ones]
            for zeros in itertools.combinations(rest, b):
                cones.append(ConePair(ones, zeros))
    cones.sort(key=lambda c: (len(c.zeros), c.ones, c.zeros))
    if not cones:
        return ConeSet(r, k, n, (), -1, 0)
    return ConeSet(r, k, n, tuple(cones), hi, lo)


def _iter_mixed_rows(cs: ConeSet, index: dict):
    """Sparse rows for the mixed second-difference balancing condition.

    One row per disjoint (base_ones, base_zeros, {x, y}) with x < y:
    moving x or y into the ones part versus the zeros part must agree.
    """
    n, k, r = cs.n, cs.k, cs.r
    total = n - r - 2
    lo = max(0, total - (n - k - 2))
    hi = min(k - 2, total)
    for a in range(lo, hi + 1):
        b = total - a
        if b < 0:
            continue
        for base_ones in itertools.combinations(range(1, n + 1), a):
            rest = [x for x in range(1, n + 1) if x not in base_ones]
            for base_zeros in itertools.combinations(rest, b):
                cand = [x for x in rest if x not in base_zeros]
                for x, y in itertools.combinations(cand, 2):
                    row = {}
                    for cone, sgn in (
                        (ConePair(tuple(sorted(base_ones + (x,))), base_zeros), 1),
                        (ConePair(tuple(sorted(base_ones + (y,))), base_zeros), -1),
                        (ConePair(base_ones, tuple(sorted(base_zeros + (x,)))), -1),
                        (ConePair(base_ones, tuple(sorted(base_zeros + (y,)))), 1),
                    ):
                        j = index[cone]
                        row[j] = row.get(j, 0) + sgn
                    yield {j: v for j, v in row.items() if v}


def _iter_saturated_rows(cs: ConeSet, index: dict):
    """Sparse rows forcing constancy on the saturated groups.

    Cones whose ones part has maximal size k - 1 must agree across all
    choices of zeros part, and dually for zeros parts of size n - k - 1;
    a spanning set of consecutive lexicographic pairs is emitted.
    """
    n, k, r = cs.n, cs.k, cs.r
    b = n - r - 1 - (k - 1)
    if 0 <= b <= n - k - 1:
        for ones in itertools.combinations(range(1, n + 1), k - 1):
            rest = [x for x in range(1, n + 1) if x not in ones]
            group = [ConePair(ones, z) for z in itertools.combinations(rest, b)]
            for c1, c2 in zip(group, group[1:]):
                yield {index[c1]: 1, index[c2]: -1}
    a = n - r - 1 - (n - k - 1)
    if 0 <= a <= k - 1:
        for zeros in itertools.combinations(range(1, n + 1), n - k - 1):
            rest = [x for x in range(1, n + 1) if x not in zeros]
            group = [ConePair(o, zeros) for o in itertools.combinations(rest, a)]
            for c1, c2 in zip(group, group[1:]):
                yield {index[c1]: 1, index[c2]: -1}


def iter_balancing_rows(cs: ConeSet):
    """All balancing-condition rows as sparse {column: coefficient} dicts.

    Columns refer to positions in cs.cones; mixed second-difference rows
    come first, then the saturated-group rows.
    """
    index = cs.index()
    yield from _iter_mixed_rows(cs, index)
    yield from _iter_saturated_rows(cs, index)


def balancing_matrix(cs: ConeSet) -> RationalMatrix:
    """Dense balancing system; one row per instantiated condition."""
    ncols = len(cs.cones)
    rows = []
    for sparse in iter_balancing_rows(cs):
        row = [0] * ncols
        for j, v in sparse.items():
            row[j] = v
        rows.append(row)
    return RationalMatrix(len(rows), ncols, rows)


def _merged_classes(cs: ConeSet):
    """Quotient the cones by the saturated-group equalities via union-find.

    Returns (class_of, nclasses) where class_of[i] is the class index of
    cone i.  Identifying variables forced equal leaves the kernel dimension
    of the remaining system unchanged while shrinking it substantially.
    """
    ncones = len(cs.cones)
    parent = list(range(ncones))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    index = cs.index()
    for row in _iter_saturated_rows(cs, index):
        a, b = row.keys()
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    roots = {}
    class_of = []
    for i in range(ncones):
        r = find(i)
        if r not in roots:
            roots[r] = len(roots)
        class_of.append(roots[r])
    return class_of, len(roots)


def _reduced_rows(cs: ConeSet, class_of):
    """Mixed-condition rows over the merged classes, one spanning chain per
    base pair: differences of consecutive single-move rows span the same
    row space as all pairwise ones."""
    n, k, r = cs.n, cs.k, cs.r
    index = cs.index()
    total = n - r - 2
    lo = max(0, total - (n - k - 2))
    hi = min(k - 2, total)
    for a in range(lo, hi + 1):
        b = total - a
        if b < 0:
            continue
        for base_ones in itertools.combinations(range(1, n + 1), a):
            rest = [x for x in range(1, n + 1) if x not in base_ones]
            for base_zeros in itertools.combinations(rest, b):
                cand = [x for x in rest if x not in base_zeros]
                moves = []
                for x in cand:
                    up = index[ConePair(tuple(sorted(base_ones + (x,))), base_zeros)]
                    dn = index[ConePair(base_ones, tuple(sorted(base_zeros + (x,))))]
                    moves.append((class_of[up], class_of[dn]))
                for (u1, d1), (u2, d2) in zip(moves, moves[1:]):
                    row = {}
                    for j, sgn in ((u1, 1), (d1, -1), (u2, -1), (d2, 1)):
                        row[j] = row.get(j, 0) + sgn
                    row = {j: v for j, v in row.items() if v}
                    if row:
                        yield row


def chow_betti_oracle(r: int, k: int, n: int, mode: str = "exact",
                      prime: int = DEFAULT_PRIME) -> int:
    """Chow-Betti number as the nullity of the balancing system.

    Equals len(cones) - rank(balancing matrix), computed on an equivalent
    reduced system: variables merged along the saturated-group equalities
    and the mixed conditions re-spanned, which preserves the kernel
    dimension.  mode="exact" uses rational elimination; mode="mod_p"
    eliminates over GF(prime), which can only over-report the nullity.
    """
    if r == 0:
        # constants are the only weights on the full-dimensional cones
        return 1
    cs = enumerate_cones(r, k, n)
    class_of, nclasses = _merged_classes(cs)
    rows = _reduced_rows(cs, class_of)
    if mode == "exact":
        rank = sparse_rank_exact(rows)
    elif mode == "mod_p":
        rank = sparse_rank_mod_p(rows, prime)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return nclasses - rank


def chow_betti_formula(r: int, k: int, n: int) -> int:
    """Closed-form Chow-Betti number in codimension r.

    Partial binomial sums: up to r - 1 while r <= k, capped at k - 1 in
    the middle band, and back down to n - r - 1 once r >= n - k.
    """
    if not (n >= 2 and 1 <= k <= n // 2):
        raise ValueError(f"need 1 <= k <= n//2, got k={k}, n={n}")
    if not 0 <= r <= n - 1:
        raise ValueError(f"need 0 <= r <= n-1, got r={r}")
    if r == 0:
        return 1
    if r <= k:
        top = r - 1
    elif r < n - k:
        top = k - 1
    else:
        top = n - r - 1
    return sum(binomial(n, i) for i in range(top + 1))


@dataclass(frozen=True)
class MinkowskiWeight:
    """A rational-valued function on the cones of a ConeSet."""

    cone_set: ConeSet
    values: dict

    def as_vector(self):
        return [self.values.get(c, 0) for c in self.cone_set.cones]

    def satisfies_balancing(self) -> bool:
        """Exact check of every balancing condition."""
        vec = self.as_vector()
        for row in iter_balancing_rows(self.cone_set):
            if sum(coef * vec[j] for j, coef in row.items()) != 0:
                return False
        return True


def basis_weight(subset, cs: ConeSet) -> MinkowskiWeight:
    """The 0/1 weight attached to a subset of {1..n}.

    Value 1 exactly on cones whose label covers the subset and whose zeros
    part meets it in exactly level(cone) elements.  The subset must be
    smaller than the number of levels.
    """
    subset = tuple(sorted(subset))
    if len(subset) >= cs.num_levels:
        raise ValueError(
            f"subset size {len(subset)} needs to be below the "
            f"{cs.num_levels} levels of this cone set")
    sset = set(subset)
    values = {}
    for cone in cs.cones:
        if sset <= set(cone.ones) | set(cone.zeros) and \
                len(sset & set(cone.zeros)) == cs.level(cone):
            values[cone] = 1
    return MinkowskiWeight(cs, values)


def admissible_subsets(cs: ConeSet):
    """All subsets indexing basis weights, ordered by size then lex."""
    out = []
    for size in range(cs.num_levels):
        out.extend(subsets_lex(range(1, cs.n + 1), size))
    return out


def stacked_basis_matrix(cs: ConeSet) -> RationalMatrix:
    """Matrix with one row per admissible subset's weight, one column per cone."""
    rows = [basis_weight(s, cs).as_vector() for s in admissible_subsets(cs)]
    return RationalMatrix(len(rows), len(cs.cones), rows)


def verify_basis(r: int, k: int, n: int, mode: str = "exact",
                 prime: int = DEFAULT_PRIME) -> dict:
    """Cross-check the claimed basis of the weight space at (r, k, n).

    Confirms that every candidate weight satisfies balancing, that the
    stacked candidate matrix has full row rank, and that the count agrees
    with both the closed formula and the nullity oracle.
    """
    if r < 1:
        raise ValueError("need r >= 1; codimension 0 carries only constants")
    cs = enumerate_cones(r, k, n)
    subsets = admissible_subsets(cs)
    basis_ok = all(basis_weight(s, cs).satisfies_balancing() for s in subsets)
    rank = rank_exact(stacked_basis_matrix(cs))
    formula = chow_betti_formula(r, k, n)
    oracle = chow_betti_oracle(r, k, n, mode=mode, prime=prime)
    return {
        "r": r,
        "k": k,
        "n": n,
        "betti_formula": formula,
        "betti_oracle": oracle,
        "basis_count": len(subsets),
        "basis_ok": basis_ok,
        "independent": rank == len(subsets),
        "mode": mode,
    }
