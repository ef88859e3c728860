"""Cross-checking sweep: every closed formula against its independent oracle.

Each check compares two routes to the same invariant (recursion vs formula,
nullity vs formula, breadth-first search vs formula) or tests a structural
property (symmetry, unimodality, Eulerian-ness, basis validity).  Results
stream as (name, ok, detail) tuples so the command line can print one line
per check and exit nonzero on the first-failing instance.

Formulas are looked up through their modules at call time, so replacing
e.g. toric_h.toric_h_formula is enough to make the sweep fail; the fault
injection tests rely on this.
"""

from __future__ import annotations

from math import comb

from . import chow, face_lattice, growth, toric_h
from .exact_linalg import rank_exact, set_inclusion_matrix

MODP_THRESHOLD = 9  # balancing systems at n >= 9 are ranked mod p


def _toric_checks(max_n: int):
    for n in range(2, max_n + 1):
        for k in range(1, n // 2 + 1):
            lattice = face_lattice.hypersimplex_face_poset(k, n)
            dual = face_lattice.dualize(lattice)
            recursion = toric_h.toric_h_poly(dual)
            got = tuple(recursion[i] for i in range(n))
            want = tuple(toric_h.toric_h_formula(k, n))
            yield (f"toric-h recursion vs formula (k={k}, n={n})",
                   got == want and recursion.degree == n - 1,
                   f"recursion={got} formula={want}")
            sym = all(got[r] == got[n - 1 - r] for r in range(n))
            yield (f"toric-h symmetry (k={k}, n={n})", sym, f"{got}")
            first_half = got[: (n - 1) // 2 + 1]
            unimodal = all(a <= b for a, b in zip(first_half, first_half[1:]))
            unimodal = unimodal and got[0] == 1
            yield (f"toric-h first-half unimodality (k={k}, n={n})",
                   unimodal, f"{got}")
            yield (f"toric-h sum rule (k={k}, n={n})",
                   sum(got) == k * comb(n, k),
                   f"sum={sum(got)} expected={k * comb(n, k)}")
            fv = face_lattice.f_vector(dual)
            usual = toric_h.usual_h_from_f(fv, n - 1)
            yield (f"toric-h first half vs usual h (k={k}, n={n})",
                   usual[:k] == want[:k],
                   f"usual={usual[:k]} toric={want[:k]}")


def _face_lattice_checks(max_n: int):
    for n in range(2, min(max_n, 8) + 1):
        for k in range(1, n // 2 + 1):
            lattice = face_lattice.hypersimplex_face_poset(k, n)
            dual = face_lattice.dualize(lattice)
            fv = face_lattice.f_vector(dual)
            want = tuple(2 ** (r + 1) * comb(n, r + 1) for r in range(k))
            yield (f"dual f-vector closed form (k={k}, n={n})",
                   fv[:k] == want, f"got={fv[:k]} want={want}")
            euler = sum((-1) ** r * fr for r, fr in enumerate(fv))
            yield (f"Euler relation on dual (k={k}, n={n})",
                   euler == 1 - (-1) ** (n - 1),
                   f"alternating sum={euler}")
            if n <= 6:
                yield (f"Eulerian check (k={k}, n={n})",
                       face_lattice.is_eulerian(lattice)
                       and face_lattice.is_eulerian(dual),
                       "Mobius condition")


def _chow_checks(max_n: int, mode: str, prime: int):
    for n in range(4, max_n + 1):
        for k in range(2, n // 2 + 1):
            inst_mode = "mod_p" if n >= MODP_THRESHOLD else mode
            for r in range(1, n):
                formula = chow.chow_betti_formula(r, k, n)
                oracle = chow.chow_betti_oracle(r, k, n, mode=inst_mode,
                                                prime=prime)
                yield (f"chow-betti formula vs oracle (r={r}, k={k}, n={n}, "
                       f"mode={inst_mode})",
                       formula == oracle,
                       f"formula={formula} oracle={oracle}")
            if n <= 8:
                for r in range(1, n):
                    report = chow.verify_basis(r, k, n, mode=inst_mode,
                                               prime=prime)
                    ok = (report["basis_ok"] and report["independent"]
                          and report["basis_count"] == report["betti_formula"]
                          == report["betti_oracle"])
                    yield (f"basis weights (r={r}, k={k}, n={n})", ok,
                           f"{report}")


def _set_inclusion_checks(max_n: int):
    for n in range(2, min(max_n, 8) + 1):
        for i in range(0, n + 1):
            for j in range(i, n - i + 1):
                rank = rank_exact(set_inclusion_matrix(i, j, n))
                yield (f"set-inclusion rank (i={i}, j={j}, n={n})",
                       rank == comb(n, i),
                       f"rank={rank} expected={comb(n, i)}")


def _growth_checks(max_n: int):
    for n in range(2, min(max_n, 7) + 1):
        seq = growth.coordination_sequence(n, n + 2)
        from_bfs = growth.coordinator_from_sequence(n, seq)
        formula = growth.coordinator_formula(n)
        yield (f"coordinator BFS vs formula (n={n})",
               from_bfs == formula,
               f"bfs={from_bfs.coeffs} formula={formula.coeffs}")
        coeffs = formula.coeffs
        yield (f"coordinator palindrome (n={n})",
               coeffs == coeffs[::-1], f"{coeffs}")
    for n in range(4, max_n + 1, 2):
        half = n // 2
        coord = tuple(growth.coordinator_formula(n)[i] for i in range(half))
        tor = tuple(toric_h.toric_h_formula(half, n))[:half]
        yield (f"coordinator vs toric-h first half (n={n})",
               coord == tor, f"coordinator={coord} toric={tor}")


def _chow_symmetry_checks(max_n: int):
    for n in range(4, min(max_n, 7) + 1):
        for k in range(2, n // 2 + 1):
            if n - k == k:
                continue
            for r in range(1, n):
                a = chow.chow_betti_oracle(r, k, n)
                b = chow.chow_betti_oracle(r, n - k, n)
                yield (f"chow-betti k symmetry (r={r}, k={k}, n={n})",
                       a == b, f"{a} vs {b}")


def iter_verification(max_n: int, mode: str = "exact",
                      prime: int = chow.DEFAULT_PRIME):
    """Yield (name, ok, detail) for the full sweep up to max_n."""
    yield from _toric_checks(max_n)
    yield from _face_lattice_checks(max_n)
    yield from _set_inclusion_checks(max_n)
    yield from _chow_checks(max_n, mode, prime)
    yield from _chow_symmetry_checks(max_n)
    yield from _growth_checks(max_n)


def run_verification(max_n: int, mode: str = "exact",
                     prime: int = chow.DEFAULT_PRIME, out=None):
    """Run the sweep; returns the list of failing (name, detail) pairs."""
    failures = []
    passed = 0
    for name, ok, detail in iter_verification(max_n, mode, prime):
        if ok:
            passed += 1
            if out:
                out(f"PASS {name}")
        else:
            failures.append((name, detail))
            if out:
                out(f"FAIL {name}: {detail}")
    if out:
        out(f"{passed} checks passed, {len(failures)} failed")
    return failures
