"""Toric h- and g-polynomials of Eulerian posets, and closed forms.

Implements Stanley's recursive definition: the h-polynomial of a graded
poset sums, over all elements below the top, the g-polynomial of the lower
interval times a power of (x - 1); the g-polynomial truncates the
difference sequence of h at half the degree.  For the face lattice of a
polytope this yields the toric h-vector, which for simplicial polytopes
agrees with the usual h-vector computed from face counts.

The recursion memoizes g-polynomials of lower intervals, keyed by the
poset's structure keys when present (isomorphic intervals are computed
once), falling back to element identity.
"""

from __future__ import annotations

from .exact_linalg import IntPolynomial, binomial, x_minus_1_power
from .face_lattice import (EulerianPoset, NotEulerianError, is_eulerian,
                           lower_interval)


def toric_h_poly(poset: EulerianPoset, validate: bool = False) -> IntPolynomial:
    """Toric h-polynomial of a graded poset with unique bottom and top.

    The poset must be Eulerian for the result to be meaningful; pass
    validate=True to run the full Mobius-function check first (quadratic,
    so off by default for large lattices).
    """
    if validate and not is_eulerian(poset):
        raise NotEulerianError("poset is not Eulerian")
    return _h_poly(poset, {})


def toric_g_poly(poset: EulerianPoset, validate: bool = False) -> IntPolynomial:
    """Toric g-polynomial: difference sequence of h, truncated at half degree."""
    if validate and not is_eulerian(poset):
        raise NotEulerianError("poset is not Eulerian")
    return _g_from_h(_h_poly(poset, {}), poset.rank_top)


def _memo_key(poset: EulerianPoset, p: int):
    key = poset.structure_keys[p]
    if key is not None:
        return key
    return ("element", poset.origins[p])


def _h_poly(poset: EulerianPoset, memo: dict) -> IntPolynomial:
    """h of the full poset; g of lower intervals is shared through memo."""
    if poset.rank_top == 0:
        return IntPolynomial.one()
    top_rank = poset.rank_top
    # group contributions by (interval type, rank): count * g * (x-1)^codim
    groups: dict = {}
    representative: dict = {}
    for p in range(poset.m):
        if p == poset.top:
            continue
        key = _memo_key(poset, p)
        groups[(key, poset.ranks[p])] = groups.get((key, poset.ranks[p]), 0) + 1
        representative.setdefault(key, p)
    h = IntPolynomial.zero()
    for (key, rank), count in sorted(groups.items(), key=lambda kv: repr(kv[0])):
        g = memo.get(key)
        if g is None:
            sub = lower_interval(poset, representative[key])
            g = _g_from_h(_h_poly(sub, memo), sub.rank_top)
            memo[key] = g
        h = h + count * (g * x_minus_1_power(top_rank - rank - 1))
    return h


def _g_from_h(h: IntPolynomial, rank: int) -> IntPolynomial:
    if rank == 0:
        return IntPolynomial.one()
    half = (rank - 1) // 2
    out = [h[0]]
    for i in range(1, half + 1):
        out.append(h[i] - h[i - 1])
    return IntPolynomial(out)


def usual_h_from_f(f, d: int):
    """Usual h-vector of a simplicial d-polytope from its f-vector.

    Expands sum_{i=0}^{d} f_{i-1} (x-1)^{d-i} with f_{-1} = 1 (the empty
    face counts, the polytope itself does not) and reads the coefficients
    off as h_0 x^d + ... + h_d.  Returns the tuple (h_0, ..., h_d).
    """
    f = tuple(f)
    if len(f) != d:
        raise ValueError(f"need {d} face counts f_0..f_{d - 1}, got {len(f)}")
    poly = IntPolynomial.zero()
    for i in range(d + 1):
        count = 1 if i == 0 else f[i - 1]
        poly = poly + count * x_minus_1_power(d - i)
    return tuple(poly[d - r] for r in range(d + 1))


def toric_h_formula(k: int, n: int):
    """Closed-form toric h-vector (h_0 .. h_{n-1}) of the dual hypersimplex.

    Entry r equals the partial binomial sum sum_{i<=r} C(n, i) while
    r <= k - 1, stays at the level sum_{i<=k-1} C(n, i) through the middle,
    and mirrors back down by the symmetry h_r = h_{n-1-r}.
    """
    if not (n >= 2 and 1 <= k <= n // 2):
        raise ValueError(f"need 1 <= k <= n//2, got k={k}, n={n}")
    out = []
    for r in range(n):
        s = min(r, n - 1 - r, k - 1)
        out.append(sum(binomial(n, i) for i in range(s + 1)))
    return tuple(out)
