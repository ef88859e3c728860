"""Exact integer and rational linear algebra kernels.

Dense integer polynomials, dense rational matrices with fraction-free rank
computation, a sparse echelon rank routine (exact and mod p), and the 0/1
set-inclusion matrices between subset layers of {1..n}.

Everything here is pure Python over arbitrary-precision integers and
``fractions.Fraction``; all functions are deterministic and side-effect free.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0, with the convention of 0 outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def subsets_lex(universe, size: int):
    """All size-subsets of an iterable of ints, as sorted tuples in lex order."""
    return list(itertools.combinations(sorted(universe), size))


class IntPolynomial:
    """Dense polynomial with arbitrary-precision integer coefficients.

    Coefficients are stored low degree first; the zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(int(c) for c in cs)

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPolynomial":
        if e < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"IntPolynomial({self.coeffs})"


@lru_cache(maxsize=None)
def x_minus_1_power(e: int) -> IntPolynomial:
    """(x - 1)**e, cached."""
    if e == 0:
        return IntPolynomial.one()
    return x_minus_1_power(e - 1) * IntPolynomial((-1, 1))


def poly_substitute_x_minus_1(p: IntPolynomial) -> IntPolynomial:
    """Return q with q(x) = p(x - 1), computed exactly by Horner's rule."""
    shift = IntPolynomial((-1, 1))
    acc = IntPolynomial.zero()
    for c in reversed(p.coeffs):
        acc = acc * shift + IntPolynomial((c,))
    return acc


class RationalMatrix:
    """Dense matrix of exact rationals (Fraction or int entries)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        self.rows = rows
        self.cols = cols
        self.entries = [list(row) for row in entries]
        if len(self.entries) != rows or any(len(r) != cols for r in self.entries):
            raise ValueError(f"expected {rows}x{cols} entries")

    @classmethod
    def from_rows(cls, entries) -> "RationalMatrix":
        entries = [list(r) for r in entries]
        cols = len(entries[0]) if entries else 0
        return cls(len(entries), cols, entries)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalMatrix):
            return (self.rows, self.cols) == (other.rows, other.cols) and all(
                self.entries[i][j] == other.entries[i][j]
                for i in range(self.rows)
                for j in range(self.cols)
            )
        return NotImplemented

    def matvec(self, vec):
        """Exact matrix-vector product."""
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch")
        return [sum(r[j] * vec[j] for j in range(self.cols)) for r in self.entries]

    def __repr__(self) -> str:
        return f"RationalMatrix({self.rows}x{self.cols})"


def _integer_rows(m: RationalMatrix):
    """Copy of the rows with denominators cleared row by row.

    Scaling a row by a positive integer leaves the rank unchanged.
    """
    out = []
    for row in m.entries:
        denom = 1
        for v in row:
            if isinstance(v, Fraction):
                denom = denom * v.denominator // gcd(denom, v.denominator)
        out.append([int(v * denom) for v in row])
    return out


def rank_exact(m: RationalMatrix) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination.

    Denominators are cleared row by row first; pivoting is deterministic
    (first row with a nonzero entry, scanning columns left to right).
    """
    a = _integer_rows(m)
    nrows, ncols = len(a), m.cols
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank >= nrows:
            break
        pivot_row = None
        for i in range(rank, nrows):
            if a[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != rank:
            a[rank], a[pivot_row] = a[pivot_row], a[rank]
        piv = a[rank][col]
        prow = a[rank]
        for i in range(rank + 1, nrows):
            ri = a[i]
            f = ri[col]
            if f:
                for c in range(col, ncols):
                    ri[c] = (piv * ri[c] - f * prow[c]) // prev
            elif piv != prev:
                for c in range(col, ncols):
                    ri[c] = (piv * ri[c]) // prev
        prev = piv
        rank += 1
    return rank


def rank_mod_p(m: RationalMatrix, p: int) -> int:
    """Rank of m reduced mod p; raises if any denominator is divisible by p.

    Always <= rank_exact(m): reduction mod p can only lose rank.
    """
    a = []
    for row in m.entries:
        red = []
        for v in row:
            if isinstance(v, Fraction):
                if v.denominator % p == 0:
                    raise ValueError(f"denominator of {v} is divisible by p={p}")
                red.append(v.numerator * pow(v.denominator, p - 2, p) % p)
            else:
                red.append(int(v) % p)
        a.append(red)
    nrows, ncols = len(a), m.cols
    rank = 0
    for col in range(ncols):
        if rank >= nrows:
            break
        pivot_row = None
        for i in range(rank, nrows):
            if a[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != rank:
            a[rank], a[pivot_row] = a[pivot_row], a[rank]
        inv = pow(a[rank][col], p - 2, p)
        prow = [(v * inv) % p for v in a[rank]]
        a[rank] = prow
        for i in range(rank + 1, nrows):
            f = a[i][col]
            if f:
                ri = a[i]
                for c in range(col, ncols):
                    ri[c] = (ri[c] - f * prow[c]) % p
        rank += 1
    return rank


def sparse_rank_exact(rows) -> int:
    """Rank over the rationals of sparse rows given as {column: value} dicts.

    Incremental echelon form: each incoming row is reduced against the pivot
    rows collected so far (pivot = smallest column index, normalized to 1).
    Exact Fraction arithmetic; insertion order is deterministic.
    """
    echelon: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        r = {j: Fraction(v) for j, v in row.items() if v}
        while r:
            j = min(r)
            e = echelon.get(j)
            if e is None:
                f = r.pop(j)
                echelon[j] = {c: v / f for c, v in r.items()}
                break
            f = r.pop(j)
            for c, v in e.items():
                nv = r.get(c, 0) - f * v
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
    return len(echelon)


def sparse_rank_mod_p(rows, p: int) -> int:
    """Rank mod p of sparse rows given as {column: value} dicts.

    Same elimination strategy as sparse_rank_exact, over GF(p).
    """
    echelon: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {}
        for j, v in row.items():
            v %= p
            if v:
                r[j] = v
        while r:
            j = min(r)
            e = echelon.get(j)
            if e is None:
                inv = pow(r.pop(j), p - 2, p)
                echelon[j] = {c: (v * inv) % p for c, v in r.items()}
                break
            f = r.pop(j)
            for c, v in e.items():
                nv = (r.get(c, 0) - f * v) % p
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
    return len(echelon)


def set_inclusion_matrix(i: int, j: int, n: int) -> RationalMatrix:
    """0/1 inclusion matrix between the i-subsets and j-subsets of {1..n}.

    Rows are indexed by i-subsets and columns by j-subsets, both in
    lexicographic order; the entry is 1 iff the row subset is contained in
    the column subset.
    """
    if not (0 <= i <= n and 0 <= j <= n):
        raise ValueError(f"need 0 <= i, j <= n, got i={i}, j={j}, n={n}")
    row_sets = subsets_lex(range(1, n + 1), i)
    col_sets = subsets_lex(range(1, n + 1), j)
    entries = [
        [1 if set(a) <= set(b) else 0 for b in col_sets] for a in row_sets
    ]
    return RationalMatrix(len(row_sets), len(col_sets), entries)
