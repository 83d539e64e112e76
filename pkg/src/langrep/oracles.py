"""Definition-literal graph-class oracles and structural witnesses.

Every oracle decides membership by brute force straight from a textbook
characterization, independently of the language machinery, so the two
routes can cross-validate each other.  Intended for small orders (the test
batteries use up to 7); the exhaustive searches are memoized per call.

Witness variants return the structure the constructive theorems consume:
interval event sequences, chord diagrams, permutation diagrams, transitive
orientations, creation sequences, nested orderings, convex orderings and
halfline models.
"""

from __future__ import annotations

import itertools

from .graphs import Graph

CLASS_TAGS = (
    "null", "complete", "cluster", "cograph", "bipartite", "cobipartite",
    "split", "threshold", "interval", "co-interval", "circle", "co-circle",
    "permutation", "comparability", "cocomparability", "bipartite-chain",
    "co-bipartite-chain", "convex", "bico-convex", "interval-bigraph",
    "halfline", "complete-multipartite",
)


def oracle(tag: str, g: Graph) -> bool:
    try:
        fn = _ORACLES[tag]
    except KeyError:
        raise ValueError(f"unknown class tag {tag!r}")
    return fn(g)


# --- elementary classes -----------------------------------------------------


def is_null(g: Graph) -> bool:
    return g.size == 0


def is_complete(g: Graph) -> bool:
    n = g.order
    return g.size == n * (n - 1) // 2


def is_cluster(g: Graph) -> bool:
    return all(is_complete(g.induced(c)) for c in g.components())


def is_cograph(g: Graph) -> bool:
    # P4-free characterization, checked over all 4-subsets
    for quad in itertools.combinations(g.vertices, 4):
        h = g.induced(quad)
        if h.size == 3 and sorted(h.degree(v) for v in quad) == [1, 1, 2, 2]:
            # 3 edges with degree sequence (1,1,2,2) is exactly a path
            return False
    return True


def is_bipartite(g: Graph) -> bool:
    return g.bipartition() is not None


def is_cobipartite(g: Graph) -> bool:
    return is_bipartite(g.complement())


def is_chordal(g: Graph) -> bool:
    """Greedy simplicial elimination; succeeds on exactly the chordal graphs."""
    remaining = set(g.vertices)
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    while remaining:
        pick = None
        for v in sorted(remaining):
            nb = adj[v]
            if all(b in adj[a] for a, b in itertools.combinations(sorted(nb), 2)):
                pick = v
                break
        if pick is None:
            return False
        for u in adj[pick]:
            adj[u].discard(pick)
        remaining.discard(pick)
        del adj[pick]
    return True


def is_split(g: Graph) -> bool:
    return is_chordal(g) and is_chordal(g.complement())


def is_threshold(g: Graph) -> bool:
    return threshold_creation_sequence(g) is not None


def threshold_creation_sequence(g: Graph):
    """Creation sequence [(vertex, kind)] with kind 'isolated' or
    'universal', listed in creation order, or None."""
    remaining = set(g.vertices)
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    peeled = []
    # peel largest names first so the reversed sequence creates ascending
    while remaining:
        pick = kind = None
        for v in sorted(remaining, reverse=True):
            if not adj[v]:
                pick, kind = v, "isolated"
                break
        if pick is None:
            for v in sorted(remaining, reverse=True):
                if len(adj[v]) == len(remaining) - 1:
                    pick, kind = v, "universal"
                    break
        if pick is None:
            return None
        for u in adj[pick]:
            adj[u].discard(pick)
        remaining.discard(pick)
        del adj[pick]
        peeled.append((pick, kind))
    return list(reversed(peeled))


def is_complete_multipartite(g: Graph) -> bool:
    return is_cluster(g.complement())


# --- intersection models ----------------------------------------------------


def interval_event_sequence(g: Graph):
    """A distinct-endpoint interval model as a sequence of (vertex, 'open' or
    'close') events, or None.  Opening v while u is open forces an edge uv;
    closing v is legal once every neighbor of v has been opened."""
    vs = g.vertices
    all_closed = frozenset(vs)
    seen = set()

    def rec(open_set, closed, events):
        if closed == all_closed:
            return events
        key = (open_set, closed)
        if key in seen:
            return None
        seen.add(key)
        for v in vs:
            if v in open_set or v in closed:
                continue
            if all(g.has_edge(v, u) for u in open_set):
                got = rec(open_set | {v}, closed, events + [(v, "open")])
                if got is not None:
                    return got
        for v in sorted(open_set):
            if g.neighbors(v) <= (open_set | closed) - {v}:
                got = rec(open_set - {v}, closed | {v}, events + [(v, "close")])
                if got is not None:
                    return got
        return None

    return rec(frozenset(), frozenset(), [])


def is_interval(g: Graph) -> bool:
    return interval_event_sequence(g) is not None


def is_co_interval(g: Graph) -> bool:
    return is_interval(g.complement())


def circle_chord_word(g: Graph):
    """A chord diagram as a 2-uniform letter sequence (the circle cut open
    just before the first endpoint of the least vertex), or None.  Chords
    cross, i.e. their letters alternate, exactly on the edges."""
    vs = g.vertices
    n = len(vs)

    def rec(seq, opened, closed):
        if len(seq) == 2 * n:
            return seq
        # close a currently open chord
        for v in sorted(opened):
            ok = True
            for u in vs:
                if u == v or u not in opened and u not in closed:
                    continue
                if u in opened:
                    iu = opened[u]
                    crosses = iu > opened[v]  # u opened inside v's arc
                    if crosses != g.has_edge(u, v):
                        ok = False
                        break
            if ok:
                newly = dict(opened)
                pos = newly.pop(v)
                got = rec(seq + [v], newly, {**closed, v: (pos, len(seq))})
                if got is not None:
                    return got
        # open a new chord
        for v in sorted(set(vs) - set(opened) - set(closed)):
            if seq and v < seq[0]:
                continue  # the cut starts at the least vertex
            if not seq and v != min(vs):
                continue
            if any(g.has_edge(v, u) for u in closed):
                continue  # a finished chord can no longer cross v
            got = rec(seq + [v], {**opened, v: len(seq)}, closed)
            if got is not None:
                return got
        return None

    return rec([], {}, {})


def is_circle(g: Graph) -> bool:
    return circle_chord_word(g) is not None


def is_co_circle(g: Graph) -> bool:
    return is_circle(g.complement())


def interval_bigraph_model(g: Graph):
    """(left, right, events) for an interval bigraph model with all-distinct
    endpoints, where only cross-side overlaps are constrained, or None."""
    if not is_bipartite(g):
        return None
    for left, right in _bipartitions(g):
        side = {v: (v in left) for v in g.vertices}
        vs = g.vertices
        all_closed = frozenset(vs)
        seen = set()

        def rec(open_set, closed, events):
            if closed == all_closed:
                return events
            key = (open_set, closed)
            if key in seen:
                return None
            seen.add(key)
            for v in vs:
                if v in open_set or v in closed:
                    continue
                if all(
                    side[u] == side[v] or g.has_edge(v, u) for u in open_set
                ) and not any(side[u] != side[v] and g.has_edge(v, u) for u in closed):
                    got = rec(open_set | {v}, closed, events + [(v, "open")])
                    if got is not None:
                        return got
            for v in sorted(open_set):
                if g.neighbors(v) <= open_set | closed:
                    got = rec(open_set - {v}, closed | {v}, events + [(v, "close")])
                    if got is not None:
                        return got
            return None

        events = rec(frozenset(), frozenset(), [])
        if events is not None:
            return sorted(left), sorted(right), events
    return None


def is_interval_bigraph(g: Graph) -> bool:
    return interval_bigraph_model(g) is not None


# --- order-based classes ----------------------------------------------------


def permutation_diagram(g: Graph):
    """A pair of linear orders (top, bottom) whose inversions are exactly
    the edges, or None."""
    vs = g.vertices
    for top in itertools.permutations(vs):
        pos = {v: i for i, v in enumerate(top)}
        # the bottom order is forced pairwise; it exists iff the forced
        # tournament is transitive, i.e. its out-degrees are all distinct
        wins = {v: 0 for v in vs}
        for u, v in itertools.combinations(vs, 2):
            before = u if pos[u] < pos[v] else v
            after = v if before is u else u
            if g.has_edge(u, v):
                wins[after] += 1  # order flipped on the bottom line
            else:
                wins[before] += 1
        if len(set(wins.values())) == len(vs):
            bottom = sorted(vs, key=lambda v: -wins[v])
            return list(top), bottom
    return None


def is_permutation(g: Graph) -> bool:
    return permutation_diagram(g) is not None


def transitive_orientation(g: Graph):
    """A transitive orientation as a set of arcs, or None."""
    edges = sorted(g.edges)

    def closure(arcs):
        # propagate u->v->w with uw an edge to u->w; fail on forced conflicts
        arcs = set(arcs)
        changed = True
        while changed:
            changed = False
            for (a, b), (c, d) in itertools.product(list(arcs), repeat=2):
                if b == c and a != d:
                    if not g.has_edge(a, d):
                        return None
                    if (d, a) in arcs:
                        return None
                    if (a, d) not in arcs:
                        arcs.add((a, d))
                        changed = True
        return arcs

    def rec(arcs, idx):
        while idx < len(edges):
            u, v = edges[idx]
            if (u, v) in arcs or (v, u) in arcs:
                idx += 1
                continue
            for arc in ((u, v), (v, u)):
                closed = closure(arcs | {arc})
                if closed is not None:
                    got = rec(closed, idx + 1)
                    if got is not None:
                        return got
            return None
        return arcs

    return rec(set(), 0)


def is_comparability(g: Graph) -> bool:
    return transitive_orientation(g) is not None


def is_cocomparability(g: Graph) -> bool:
    return is_comparability(g.complement())


# --- bipartite shape classes ------------------------------------------------


def _bipartitions(g: Graph):
    """All 2-colorings (left, right) of a bipartite graph, as frozensets;
    components flip independently and each side may end up empty."""
    comps = []
    color = {}
    for root in g.vertices:
        if root in color:
            continue
        color[root] = 0
        comp = [root]
        stack = [root]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in color:
                    color[y] = 1 - color[x]
                    comp.append(y)
                    stack.append(y)
                elif color[y] == color[x]:
                    return
        comps.append(comp)
    for flips in itertools.product((0, 1), repeat=len(comps)):
        left, right = set(), set()
        for comp, flip in zip(comps, flips):
            for v in comp:
                if color[v] ^ flip == 0:
                    left.add(v)
                else:
                    right.add(v)
        yield frozenset(left), frozenset(right)


def nested_ordering(g: Graph):
    """(A-ordering, B-ordering) realizing a bipartite chain structure:
    A sorted so neighborhoods grow, B sorted so that every N(a) is a prefix
    of B.  Returns None when g is not a bipartite chain graph."""
    for left, right in _bipartitions(g):
        a_sorted = sorted(left, key=lambda v: (g.degree(v), v))
        ok = all(
            g.neighbors(a_sorted[i]) <= g.neighbors(a_sorted[i + 1])
            for i in range(len(a_sorted) - 1)
        )
        if not ok:
            continue
        # b covered earlier (by a smaller a) must come first
        def threshold(b):
            for i, a in enumerate(a_sorted):
                if g.has_edge(a, b):
                    return i
            return len(a_sorted)

        b_sorted = sorted(right, key=lambda b: (-g.degree(b), threshold(b), b))
        prefix_ok = True
        for a in a_sorted:
            nb = g.neighbors(a)
            if set(b_sorted[: len(nb)]) != set(nb):
                prefix_ok = False
                break
        if prefix_ok:
            return a_sorted, b_sorted
    return None


def is_bipartite_chain(g: Graph) -> bool:
    return nested_ordering(g) is not None


def is_co_bipartite_chain(g: Graph) -> bool:
    return is_bipartite_chain(g.complement())


def convex_ordering(g: Graph):
    """(ordered side, other side) such that every neighborhood on the other
    side is a consecutive run, or None."""
    if not is_bipartite(g):
        return None
    for left, right in _bipartitions(g):
        for ordered, other in ((left, right), (right, left)):
            base = sorted(ordered)
            for perm in itertools.permutations(base):
                pos = {v: i for i, v in enumerate(perm)}
                good = True
                for y in other:
                    spots = sorted(pos[x] for x in g.neighbors(y))
                    if spots and spots[-1] - spots[0] + 1 != len(spots):
                        good = False
                        break
                if good:
                    return list(perm), sorted(other)
    return None


def is_convex(g: Graph) -> bool:
    return convex_ordering(g) is not None


def bipartite_complement(g: Graph, left, right) -> Graph:
    cross = [
        (a, b) for a in left for b in right if not g.has_edge(a, b)
    ]
    return Graph(g.vertices, cross)


def is_bico_convex(g: Graph) -> bool:
    if not is_bipartite(g):
        return False
    for left, right in _bipartitions(g):
        if is_convex(bipartite_complement(g, left, right)):
            return True
    return False


# --- halflines --------------------------------------------------------------


def halfline_model(g: Graph):
    """A halfline intersection model ({v: (side, value)}) with side 1 for
    rightward rays [a, inf) and side 2 for leftward rays (-inf, a], or None.
    Rays on one side always meet; a cross pair meets iff a_1 <= a_2."""
    comp = g.complement()
    if not is_bipartite(comp):
        return None
    for left, right in _bipartitions(comp):
        # left and right are cliques of g; cross edges must form a staircase
        y1 = sorted(left, key=lambda v: (-len(g.neighbors(v) & right), v))
        y2 = sorted(right, key=lambda v: (len(g.neighbors(v) & left), v))
        t = {}
        ok = True
        for x in y1:
            nset = g.neighbors(x) & right
            k = len(y2) - len(nset)
            if set(y2[k:]) != nset:
                ok = False
                break
            t[x] = k
        if not ok:
            continue
        model = {}
        for j, y in enumerate(y2):
            model[y] = (2, float(j + 1))
        for x in y1:
            model[x] = (1, t[x] + 0.5)
        return model
    return None


def is_halfline(g: Graph) -> bool:
    """Halfline intersection graphs are exactly the chordal cobipartite
    graphs; halfline_model supplies the witness when one exists."""
    return is_chordal(g) and is_cobipartite(g)


# --- width parameters -------------------------------------------------------


def treewidth_exact(g: Graph) -> int:
    """Exact treewidth by elimination-order dynamic programming over
    subsets; fine up to order 8."""
    vs = g.vertices
    n = len(vs)
    idx = {v: i for i, v in enumerate(vs)}

    def q(mask, v):
        # neighbors of v reachable through eliminated vertices in mask
        start = idx[v]
        seen = 1 << start
        stack = [start]
        out = 0
        while stack:
            x = stack.pop()
            for u in g.neighbors(vs[x]):
                i = idx[u]
                if seen >> i & 1:
                    continue
                seen |= 1 << i
                if mask >> i & 1:
                    stack.append(i)
                else:
                    out += 1
        return out

    dp = {0: -1}
    for mask in range(1, 1 << n):
        best = None
        for i in range(n):
            if not mask >> i & 1:
                continue
            prev = mask ^ (1 << i)
            cand = max(dp[prev], q(prev, vs[i]))
            if best is None or cand < best:
                best = cand
        dp[mask] = best
    return dp[(1 << n) - 1]


def degeneracy(g: Graph) -> int:
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    best = 0
    while adj:
        v = min(adj, key=lambda x: (len(adj[x]), x))
        best = max(best, len(adj[v]))
        for u in adj[v]:
            adj[u].discard(v)
        del adj[v]
    return best


_ORACLES = {
    "null": is_null,
    "complete": is_complete,
    "cluster": is_cluster,
    "cograph": is_cograph,
    "bipartite": is_bipartite,
    "cobipartite": is_cobipartite,
    "chordal": is_chordal,
    "split": is_split,
    "threshold": is_threshold,
    "interval": is_interval,
    "co-interval": is_co_interval,
    "circle": is_circle,
    "co-circle": is_co_circle,
    "permutation": is_permutation,
    "comparability": is_comparability,
    "cocomparability": is_cocomparability,
    "bipartite-chain": is_bipartite_chain,
    "co-bipartite-chain": is_co_bipartite_chain,
    "convex": is_convex,
    "bico-convex": is_bico_convex,
    "interval-bigraph": is_interval_bigraph,
    "halfline": is_halfline,
    "complete-multipartite": is_complete_multipartite,
}


def recognize(tag: str, g: Graph) -> bool:
    """Dispatch to the named class recognizer."""
    try:
        fn = _ORACLES[tag]
    except KeyError:
        raise ValueError(f"unknown class tag {tag!r}; known: {sorted(_ORACLES)}")
    return fn(g)
