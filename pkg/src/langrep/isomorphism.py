"""Graph isomorphism testing and exhaustive small-graph enumeration.

Both are exact and deliberately independent of the language machinery so
they can serve as cross-validation oracles.  Sizes are capped: isomorphism
at order 10, enumeration at order 7 (1044 classes).
"""

from __future__ import annotations

import itertools

from .errors import CapacityError
from .graphs import Graph

ISO_ORDER_CAP = 10
ENUM_ORDER_CAP = 7


def _refine_invariant(g: Graph, v) -> tuple:
    deg = g.degree(v)
    nbr_degs = tuple(sorted(g.degree(u) for u in g.neighbors(v)))
    return (deg, nbr_degs)


def isomorphic(g: Graph, h: Graph):
    """A vertex bijection turning g into h, or None.

    Backtracking over degree-compatible candidates; feasible up to the
    order cap, which errs on the side of exactness over speed."""
    if g.order != h.order or g.size != h.size:
        return None
    if g.order > ISO_ORDER_CAP:
        raise CapacityError(f"isomorphism test capped at order {ISO_ORDER_CAP}")
    if g.degree_sequence() != h.degree_sequence():
        return None

    ginv = {v: _refine_invariant(g, v) for v in g.vertices}
    hinv = {v: _refine_invariant(h, v) for v in h.vertices}
    if sorted(ginv.values()) != sorted(hinv.values()):
        return None

    # match highest-degree vertices first to fail fast
    gorder = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    candidates = {
        v: [u for u in h.vertices if hinv[u] == ginv[v]] for v in gorder
    }

    mapping: dict = {}
    used: set = set()

    def extend(i: int):
        if i == len(gorder):
            return True
        v = gorder[i]
        for u in candidates[v]:
            if u in used:
                continue
            ok = True
            for w, uw in mapping.items():
                if g.has_edge(v, w) != h.has_edge(u, uw):
                    ok = False
                    break
            if ok:
                mapping[v] = u
                used.add(u)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.remove(u)
        return False

    if extend(0):
        return dict(mapping)
    return None


def automorphism_count(g: Graph) -> int:
    count = 0
    inv = {v: _refine_invariant(g, v) for v in g.vertices}
    gorder = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    candidates = {v: [u for u in g.vertices if inv[u] == inv[v]] for v in gorder}
    mapping: dict = {}
    used: set = set()

    def extend(i: int):
        nonlocal count
        if i == len(gorder):
            count += 1
            return
        v = gorder[i]
        for u in candidates[v]:
            if u in used:
                continue
            if all(g.has_edge(v, w) == g.has_edge(u, uw) for w, uw in mapping.items()):
                mapping[v] = u
                used.add(u)
                extend(i + 1)
                del mapping[v]
                used.remove(u)

    extend(0)
    return count


def distinct_labelings(g: Graph):
    """All distinct graphs obtained by permuting g's labels (the labelled
    copies of g's isomorphism class on the same vertex set), each with one
    relabeling map realizing it."""
    seen = {}
    vs = g.vertices
    for perm in itertools.permutations(vs):
        mapping = dict(zip(vs, perm))
        img = g.relabel(mapping)
        if img.edges not in seen:
            seen[img.edges] = (img, mapping)
    return list(seen.values())


def _triangle_count(g: Graph) -> int:
    t = 0
    for u, v in g.edges:
        t += len(g.neighbors(u) & g.neighbors(v))
    return t // 3


def _enum_invariant(g: Graph) -> tuple:
    return (
        g.degree_sequence(),
        tuple(sorted(tuple(sorted(g.degree(u) for u in g.neighbors(v))) for v in g.vertices)),
        _triangle_count(g),
    )


_ENUM_CACHE: dict = {}


def enumerate_graphs(n: int):
    """One representative per isomorphism class of order n, by augmenting
    the (n-1)-representatives with one vertex over every neighborhood."""
    if n < 1:
        raise ValueError("order must be positive")
    if n > ENUM_ORDER_CAP:
        raise CapacityError(f"enumeration capped at order {ENUM_ORDER_CAP}")
    if n in _ENUM_CACHE:
        return list(_ENUM_CACHE[n])
    if n == 1:
        result = [Graph(["v1"])]
    else:
        smaller = enumerate_graphs(n - 1)
        new = f"v{n}"
        buckets: dict = {}
        for g in smaller:
            old = g.vertices
            for bits in range(1 << (n - 1)):
                nbrs = [old[i] for i in range(n - 1) if bits >> i & 1]
                cand = Graph(
                    old + (new,), list(g.edges) + [(new, u) for u in nbrs]
                )
                key = _enum_invariant(cand)
                group = buckets.setdefault(key, [])
                if not any(isomorphic(cand, other) for other in group):
                    group.append(cand)
        result = [g for group in buckets.values() for g in group]
        result.sort(key=lambda g: (g.size, sorted(g.edges)))
    _ENUM_CACHE[n] = result
    return list(result)
