"""Growth series of the dual type-A root lattice in rank n - 1.

The lattice is modelled as Z^n modulo the all-ones vector; the images of
+-e_1, ..., +-e_n are its shortest vectors.  Because those generators form
a unimodular system, word length in the Cayley graph equals the norm whose
unit ball is their convex hull, so breadth-first search counts lattice
points shell by shell.  The generating function of the shell sizes is a
rational function with denominator (1 - x)^(n-1); its numerator is the
coordinator polynomial, which this module computes from the sequence and
by closed formula.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact_linalg import IntPolynomial, binomial


@dataclass(frozen=True)
class LatticeClass:
    """Residue of an integer n-vector modulo the all-ones vector.

    The stored representative is unique: a multiple of (1, ..., 1) is
    subtracted so the coordinate sum lands in [0, n-1].
    """

    rep: tuple

    @classmethod
    def from_vector(cls, vec) -> "LatticeClass":
        return cls(canonicalize(tuple(vec)))

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.rep)

    def negate(self) -> "LatticeClass":
        return LatticeClass.from_vector(tuple(-v for v in self.rep))


def canonicalize(vec: tuple) -> tuple:
    """Unique representative: subtract t*(1,..,1) so the sum is in [0, n-1]."""
    n = len(vec)
    t = sum(vec) // n
    if t:
        return tuple(v - t for v in vec)
    return vec


@dataclass(frozen=True)
class CoordinationSequence:
    """Shell sizes S(0), S(1), ..., S(K) around the origin."""

    n: int
    values: tuple

    def __post_init__(self):
        if not self.values or self.values[0] != 1 or any(v < 0 for v in self.values):
            raise ValueError("need S(0) = 1 and nonnegative shell sizes")


def generators(n: int) -> list:
    """Classes of the 2n signed unit vectors, deduplicated.

    All 2n are distinct for n >= 3; for n = 2 opposite generators coincide
    and only two classes remain.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    out = []
    seen = set()
    for i in range(n):
        for sign in (1, -1):
            vec = tuple(sign if j == i else 0 for j in range(n))
            c = canonicalize(vec)
            if c not in seen:
                seen.add(c)
                out.append(LatticeClass(c))
    return out


def coordination_sequence(n: int, depth: int) -> CoordinationSequence:
    """Shell sizes up to the given depth by BFS over the Cayley graph."""
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    gens = [g.rep for g in generators(n)]
    origin = (0,) * n
    seen = {origin}
    frontier = [origin]
    values = [1]
    for _ in range(depth):
        nxt = []
        for point in frontier:
            for g in gens:
                neighbor = canonicalize(tuple(a + b for a, b in zip(point, g)))
                if neighbor not in seen:
                    seen.add(neighbor)
                    nxt.append(neighbor)
        values.append(len(nxt))
        frontier = nxt
    return CoordinationSequence(n, tuple(values))


def shell_distances(n: int, depth: int) -> dict:
    """Map canonical representative -> BFS distance, for every point reached."""
    gens = [g.rep for g in generators(n)]
    origin = (0,) * n
    dist = {origin: 0}
    frontier = [origin]
    for d in range(1, depth + 1):
        nxt = []
        for point in frontier:
            for g in gens:
                neighbor = canonicalize(tuple(a + b for a, b in zip(point, g)))
                if neighbor not in dist:
                    dist[neighbor] = d
                    nxt.append(neighbor)
        frontier = nxt
    return dist


def coordinator_from_sequence(n: int, seq) -> IntPolynomial:
    """Numerator of the growth series over (1 - x)^(n-1).

    Takes the shell sizes S(0), ..., S(K) with K >= n - 1; the first n
    determine the numerator by finite differences, and every further entry
    must be reproduced exactly by the expansion, otherwise the sequence is
    not consistent with this denominator and a ValueError is raised.
    """
    values = seq.values if isinstance(seq, CoordinationSequence) else tuple(seq)
    if len(values) < n:
        raise ValueError(f"need at least {n} shell sizes, got {len(values)}")
    coeffs = []
    for r in range(len(values)):
        c = sum((-1) ** (r - j) * binomial(n - 1, r - j) * values[j]
                for j in range(r + 1))
        coeffs.append(c)
    if any(c != 0 for c in coeffs[n:]):
        bad = next(r for r in range(n, len(coeffs)) if coeffs[r] != 0)
        raise ValueError(
            f"shell sizes are inconsistent with a degree-{n - 1} numerator "
            f"over (1-x)^{n - 1} at index {bad}")
    return IntPolynomial(coeffs[:n])


def coordinator_formula(n: int) -> IntPolynomial:
    """Closed-form coordinator polynomial: partial binomial sums up to the
    middle, mirrored by the palindrome symmetry h_r = h_{n-1-r}."""
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    out = []
    for r in range(n):
        s = min(r, n - 1 - r)
        out.append(sum(binomial(n, i) for i in range(s + 1)))
    return IntPolynomial(out)


def format_oeis(values) -> str:
    """Comma-separated sequence text, OEIS style."""
    return ", ".join(str(v) for v in values)


def growth_record(n: int, seq, coordinator) -> dict:
    """JSON-ready record {n, S, coordinator}."""
    values = seq.values if isinstance(seq, CoordinationSequence) else tuple(seq)
    coeffs = coordinator.coeffs if isinstance(coordinator, IntPolynomial) \
        else tuple(coordinator)
    return {"n": n, "S": list(values), "coordinator": list(coeffs)}
