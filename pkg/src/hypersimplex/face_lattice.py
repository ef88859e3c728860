"""Face lattices of hypersimplices and their polar duals, as graded posets.

The hypersimplex with parameters (k, n) is the convex hull of the 0/1
vectors in R^n with exactly k ones.  Its proper faces are obtained by
pinning a set of coordinates to 1 (the ``ones`` part) and a disjoint set to
0 (the ``zeros`` part); no coordinates are ever needed.  Posets are stored
via covering pairs together with a rank function, and every constructed
poset has a unique least and greatest element.

Elements are addressed by integer index.  Each element optionally carries a
``structure_key`` naming the isomorphism type of its lower interval; these
keys let the toric h recursion share work across isomorphic intervals.
"""

from __future__ import annotations

import itertools
import json


class NotEulerianError(ValueError):
    """Raised when an operation requires an Eulerian poset and the check fails."""


class EulerianPoset:
    """Finite graded poset with unique bottom and top, given by covers.

    Args:
        ranks: rank of each element; the bottom must have rank 0.
        covers: iterable of (lower, upper) index pairs; each cover must
            raise rank by exactly 1 (this makes the poset graded).
        labels: optional per-element payload describing the element.
        structure_keys: optional per-element hashable key identifying the
            isomorphism type of the lower interval [bottom, p].
        upper_keys: same for the upper interval [p, top]; dualization swaps
            the two key families.
        origins: indices of the elements in the poset this one was carved
            out of; used to memoize interval computations.
    """

    __slots__ = ("m", "ranks", "covers", "up", "down", "labels",
                 "structure_keys", "upper_keys", "origins",
                 "bottom", "top", "_downset_cache")

    def __init__(self, ranks, covers, labels=None, structure_keys=None,
                 upper_keys=None, origins=None):
        self.ranks = tuple(int(r) for r in ranks)
        self.m = len(self.ranks)
        if self.m == 0:
            raise ValueError("poset must be nonempty")
        self.covers = tuple((int(lo), int(hi)) for lo, hi in covers)
        self.labels = tuple(labels) if labels is not None else (None,) * self.m
        self.structure_keys = (tuple(structure_keys) if structure_keys is not None
                               else (None,) * self.m)
        self.upper_keys = (tuple(upper_keys) if upper_keys is not None
                           else (None,) * self.m)
        self.origins = (tuple(origins) if origins is not None
                        else tuple(range(self.m)))
        up = [[] for _ in range(self.m)]
        down = [[] for _ in range(self.m)]
        for lo, hi in self.covers:
            if self.ranks[hi] != self.ranks[lo] + 1:
                raise ValueError(f"cover {lo} < {hi} does not raise rank by 1")
            up[lo].append(hi)
            down[hi].append(lo)
        self.up = tuple(tuple(sorted(u)) for u in up)
        self.down = tuple(tuple(sorted(d)) for d in down)
        bottoms = [i for i in range(self.m) if not self.down[i]]
        tops = [i for i in range(self.m) if not self.up[i]]
        if len(bottoms) != 1 or len(tops) != 1:
            raise ValueError("poset must have a unique bottom and top")
        self.bottom, self.top = bottoms[0], tops[0]
        if self.ranks[self.bottom] != 0:
            raise ValueError("bottom element must have rank 0")
        self._downset_cache = None

    @property
    def rank_top(self) -> int:
        return self.ranks[self.top]

    def __len__(self) -> int:
        return self.m

    def __repr__(self) -> str:
        return f"EulerianPoset({self.m} elements, rank {self.rank_top})"

    def downset(self, p: int) -> set:
        """All q <= p, computed by breadth-first search over covers."""
        seen = {p}
        stack = [p]
        while stack:
            q = stack.pop()
            for d in self.down[q]:
                if d not in seen:
                    seen.add(d)
                    stack.append(d)
        return seen

    def downset_masks(self):
        """Bitmask of the downset of every element (bit q set iff q <= p).

        Computed once and cached; the poset is otherwise immutable, so a
        benign idempotent write is safe under concurrent readers.
        """
        if self._downset_cache is None:
            order = sorted(range(self.m), key=lambda i: self.ranks[i])
            masks = [0] * self.m
            for p in order:
                mask = 1 << p
                for d in self.down[p]:
                    mask |= masks[d]
                masks[p] = mask
            self._downset_cache = masks
        return self._downset_cache

    def leq(self, p: int, q: int) -> bool:
        """True iff p <= q."""
        return bool(self.downset_masks()[q] >> p & 1)


def lower_interval(poset: EulerianPoset, p: int) -> EulerianPoset:
    """The induced subposet [bottom, p] with inherited ranks and keys."""
    members = sorted(poset.downset(p), key=lambda i: (poset.ranks[i], i))
    index = {old: new for new, old in enumerate(members)}
    covers = [(index[lo], index[hi]) for lo, hi in poset.covers
              if lo in index and hi in index]
    return EulerianPoset(
        [poset.ranks[i] for i in members],
        covers,
        labels=[poset.labels[i] for i in members],
        structure_keys=[poset.structure_keys[i] for i in members],
        upper_keys=[None] * len(members),
        origins=[poset.origins[i] for i in members],
    )


def dualize(poset: EulerianPoset) -> EulerianPoset:
    """Order-dual poset: covers reversed, rank r mapped to rank(top) - r.

    Lower-interval keys and upper-interval keys trade places, so the dual
    of a hypersimplex face lattice carries, on each element, the structure
    key of the primal face it came from.
    """
    top_rank = poset.rank_top
    return EulerianPoset(
        [top_rank - r for r in poset.ranks],
        [(hi, lo) for lo, hi in poset.covers],
        labels=poset.labels,
        structure_keys=poset.upper_keys,
        upper_keys=poset.structure_keys,
    )


def hypersimplex_face_poset(k: int, n: int) -> EulerianPoset:
    """Face lattice of the (k, n) hypersimplex.

    Elements: the empty face; one vertex per k-subset of {1..n}; and one
    face per disjoint pair (ones, zeros) with len(ones) < k and
    len(zeros) < n - k, which pins those coordinates to 1 and 0.  The pair
    (ones, zeros) = (emptyset, emptyset) is the polytope itself and sits on
    top.  A face has rank n - len(ones) - len(zeros) = dimension + 1.

    Structure keys record lower-interval types ("hs", k', n') for faces,
    which are smaller hypersimplices.  Upper keys record upper-interval
    types: Boolean lattices ("bool", a, b) for faces and the vertex-figure
    dual ("vfig", k, n - k) for vertices; dualize() turns these into the
    dual lattice's lower-interval keys.
    """
    if n < 2 or not 1 <= k <= n - 1:
        raise ValueError(f"need n >= 2 and 1 <= k <= n-1, got k={k}, n={n}")
    ground = range(1, n + 1)
    ranks = [0]
    labels = [("empty",)]
    lower_keys = [("one",)]
    upper_keys = [("all", k, n)]
    vertex_index = {}
    for vertex in itertools.combinations(ground, k):
        vertex_index[vertex] = len(ranks)
        ranks.append(1)
        labels.append(("vertex", vertex))
        lower_keys.append(("point",))
        upper_keys.append(("vfig", k, n - k))
    face_index = {}
    for a in range(k):
        for b in range(n - k):
            for ones in itertools.combinations(ground, a):
                rest = [x for x in ground if x not in ones]
                for zeros in itertools.combinations(rest, b):
                    face_index[(ones, zeros)] = len(ranks)
                    ranks.append(n - a - b)
                    labels.append(("face", ones, zeros))
                    lower_keys.append(("hs", k - a, n - a - b))
                    upper_keys.append(("bool", a, b))
    covers = [(0, vi) for vi in vertex_index.values()]
    for (ones, zeros), fi in face_index.items():
        if n - len(ones) - len(zeros) == 2:
            # an edge covers its two endpoints
            free = [x for x in ground if x not in ones and x not in zeros]
            for x in free:
                covers.append((vertex_index[tuple(sorted(ones + (x,)))], fi))
        for x in ones:
            rem = tuple(y for y in ones if y != x)
            covers.append((fi, face_index[(rem, zeros)]))
        for x in zeros:
            rem = tuple(y for y in zeros if y != x)
            covers.append((fi, face_index[(ones, rem)]))
    return EulerianPoset(ranks, covers, labels=labels,
                         structure_keys=lower_keys, upper_keys=upper_keys)


def f_vector(poset: EulerianPoset):
    """Face counts by dimension: entry r counts elements of rank r + 1.

    Covers the proper nonempty faces, dimensions 0 .. rank(top) - 2.
    """
    counts = [0] * max(poset.rank_top - 1, 0)
    for p in range(poset.m):
        r = poset.ranks[p]
        if 1 <= r <= poset.rank_top - 1:
            counts[r - 1] += 1
    return tuple(counts)


def is_eulerian(poset: EulerianPoset) -> bool:
    """Check that every nontrivial interval has Mobius function (-1)^length.

    Equivalently, every interval of positive length contains equally many
    elements of odd and even rank.  Quadratic in the number of elements;
    meant for the modest lattices the test sweeps use.
    """
    masks = poset.downset_masks()
    by_rank = sorted(range(poset.m), key=lambda i: (poset.ranks[i], i))
    for p in range(poset.m):
        mu = {p: 1}
        for q in by_rank:
            if poset.ranks[q] <= poset.ranks[p] or not masks[q] >> p & 1:
                continue
            total = 0
            for z, v in mu.items():
                if masks[q] >> z & 1:
                    total += v
            mu[q] = -total
            if mu[q] != (-1) ** (poset.ranks[q] - poset.ranks[p]):
                return False
    return True


def poset_debug_json(poset: EulerianPoset) -> str:
    """JSON dump {elements: [{id, rank, key}], covers: [[lo, hi]]}."""
    doc = {
        "elements": [
            {
                "id": p,
                "rank": poset.ranks[p],
                "key": list(poset.structure_keys[p]) if poset.structure_keys[p] else None,
            }
            for p in range(poset.m)
        ],
        "covers": [[lo, hi] for lo, hi in poset.covers],
    }
    return json.dumps(doc)
