"""Constructive word builders for representable graph classes.

Every builder consumes a structural witness (model, ordering, permutation,
creation sequence) from the oracles module, emits a word, and then verifies
the word against the class's canonical language before returning it.  A
failed verification raises BuildError: the constructions juggle dense index
bookkeeping, and the check turns any slip into a loud failure instead of a
silently wrong word.

Vertex enumeration order inside builders is the lexicographic token order,
so outputs are deterministic.
"""

from __future__ import annotations

from functools import lru_cache

from . import oracles
from .errors import BuildError
from .graphs import Graph
from .languages import Language, parse_language
from .represent import evaluate
from .words import VertexWord

# canonical language of each buildable tag, in the language mini-grammar
CANONICAL_SPECS = {
    "palindrome": "palindrome",
    "copy": "copy",
    "copy-complement": "not(copy)",
    "lyndon": "lyndon",
    "bipartite": "and(palindrome,wrep)",
    "bipartite-lyndon-odd": "lyndon-odd",
    "comparability": "dyck",
    "interval": "<0101,0110>",
    "convex": "<010>",
    "interval-bigraph": "<01110,01101,01011,01100,01010,01001>",
    "permutation": "<0110>",
    "circle": "<0101>",
    "threshold": "<01,001>",
    "bipartite-chain": "<001>",
    "halfline": "halfline",
    "co-circle": "<0011,0110>",
    "cograph-wrep-like": "wrep",
    "cograph-containment-like": "<0110>",
    "split": "or(and(palindrome,wrep),"
             "and(even-counts,re:(0|1)*0(0|1)*1(0|1)*|(0|1)*1(0|1)*0(0|1)*))",
    "cobipartite": "or(not(palindrome),not(wrep))",
    "cluster": "balanced",
}


@lru_cache(maxsize=None)
def canonical_language(tag: str) -> Language:
    return parse_language(CANONICAL_SPECS[tag])


def _verify(letters, tag: str, g: Graph) -> VertexWord:
    word = VertexWord(letters)
    if evaluate(word, canonical_language(tag)) != g:
        raise BuildError(f"construction-verification-failed: {tag}")
    return word


def _sorted_vertices(g: Graph):
    return list(g.vertices)


def _bipartition_or_error(g: Graph, tag: str):
    parts = g.bipartition()
    if parts is None:
        raise BuildError(f"{tag}: graph is not bipartite")
    left, right = parts
    if not left and right:
        left, right = right, left
    return sorted(left), sorted(right)


# --- universal builders -----------------------------------------------------


def build_palindrome(g: Graph) -> VertexWord:
    """Nested-palindrome word: w_1 = v_1 v_1, and each later vertex wraps the
    previous word as v u w v u^R with u its earlier non-neighbors ascending."""
    vs = _sorted_vertices(g)
    word = [vs[0], vs[0]]
    for i, v in enumerate(vs[1:], start=1):
        u = [x for x in vs[:i] if not g.has_edge(v, x)]
        word = [v] + u + word + [v] + list(reversed(u))
    return _verify(word, "palindrome", g)


def _copy_halves(g: Graph):
    # block u_i: non-neighbors of v_i among v_1..v_i, ascending (v_i itself
    # is always last); the two halves interleave blocks and separators in
    # opposite order, so a pair projects onto equal halves iff it is an edge
    vs = _sorted_vertices(g)
    blocks = []
    for i, v in enumerate(vs):
        blocks.append([x for x in vs[:i] if not g.has_edge(v, x)] + [v])
    first = []
    second = []
    for v, blk in zip(vs, blocks):
        first.extend(blk)
        first.append(v)
        second.append(v)
        second.extend(blk)
    return first + second


def build_copy(g: Graph) -> VertexWord:
    return _verify(_copy_halves(g), "copy", g)


def build_copy_complement(g: Graph) -> VertexWord:
    """Copy word of the complement graph; under the complement language it
    represents g itself, with length exactly 4n + 2m."""
    letters = _copy_halves(g.complement())
    if len(letters) != 4 * g.order + 2 * g.size:
        raise BuildError("copy-complement: length bookkeeping is off")
    return _verify(letters, "copy-complement", g)


def build_lyndon(g: Graph) -> VertexWord:
    """1^3 2^3 ... n^3 then per vertex i the tail block v_i v_i u_i with
    v_i = i..n and u_i = i i x_i i i y_i (x_i, y_i the later neighbors and
    later non-neighbors, ascending)."""
    vs = _sorted_vertices(g)
    word = []
    for v in vs:
        word += [v, v, v]
    for i, v in enumerate(vs):
        tail = vs[i:]
        x = [u for u in vs[i + 1:] if g.has_edge(v, u)]
        y = [u for u in vs[i + 1:] if not g.has_edge(v, u)]
        word += tail + tail + [v, v] + x + [v, v] + y
    return _verify(word, "lyndon", g)


# --- bipartite-style builders ----------------------------------------------


def _alternating_word(a_side, b_side, adjacent):
    # v_0 u_1 v_1 ... u_s v_s with u_i = x_i a_i y_i; the B enumeration is
    # split around a_i into neighbors (x) and non-neighbors (y)
    word = list(a_side)
    for i, a in enumerate(a_side):
        word += [b for b in b_side if adjacent(a, b)]
        word.append(a)
        word += [b for b in b_side if not adjacent(a, b)]
        word += [c for c in a_side if c != a]
    return word


def build_bipartite_palindrome(g: Graph) -> VertexWord:
    a_side, b_side = _bipartition_or_error(g, "bipartite")
    word = _alternating_word(a_side, b_side, g.has_edge)
    return _verify(word, "bipartite", g)


def build_bipartite_lyndon_odd(g: Graph) -> VertexWord:
    """a_1^3..a_s^3 b_1^2..b_t^2 x_1..x_s b_1^2..b_t^2 with
    x_i = a_i^2 y_i y_i a_i^2, y_i enumerating N(a_i); the second B tail
    keeps every A-B edge pattern a Lyndon word."""
    a_side, b_side = _bipartition_or_error(g, "bipartite-lyndon-odd")
    word = []
    for a in a_side:
        word += [a, a, a]
    b_tail = []
    for b in b_side:
        b_tail += [b, b]
    word += b_tail
    for a in a_side:
        y = [b for b in b_side if g.has_edge(a, b)]
        word += [a, a] + y + y + [a, a]
    word += b_tail
    return _verify(word, "bipartite-lyndon-odd", g)


# --- order-based builders ---------------------------------------------------


def build_comparability(g: Graph, order=None) -> VertexWord:
    """z z_{v_1} ... z_{v_n} over a linear extension of a transitive
    orientation; z_v = y_v v x_v with x_v the strict upper set of v."""
    vs = _sorted_vertices(g)
    if order is None:
        arcs = oracles.transitive_orientation(g)
        if arcs is None:
            raise BuildError("comparability: no transitive orientation exists")
    else:
        arcs = {(u, v) for u, v in order}
        _validate_partial_order(g, arcs)
    above = {v: {w for (u, w) in arcs if u == v} for v in vs}
    ext = _linear_extension(vs, arcs)
    word = list(ext)
    for v in ext:
        word += [w for w in ext if w != v and w not in above[v]]
        word.append(v)
        word += [w for w in ext if w in above[v]]
    if len(word) != g.order * (g.order + 1):
        raise BuildError("comparability: length bookkeeping is off")
    return _verify(word, "comparability", g)


def _validate_partial_order(g: Graph, arcs):
    seen = set()
    for u, v in arcs:
        if not g.has_edge(u, v):
            raise ValueError(f"order relates non-adjacent pair ({u},{v})")
        if (v, u) in arcs:
            raise ValueError(f"order is not antisymmetric on ({u},{v})")
        seen.add(frozenset((u, v)))
    if len(seen) != g.size:
        raise ValueError("order does not orient every edge")
    for u, v in arcs:
        for w, x in arcs:
            if v == w and (u, x) not in arcs:
                raise ValueError(
                    f"order is not transitive: {u}<{v}<{x} but not {u}<{x}"
                )


def _linear_extension(vs, arcs):
    preds = {v: set() for v in vs}
    for u, v in arcs:
        preds[v].add(u)
    out = []
    left = set(vs)
    while left:
        ready = sorted(v for v in left if not (preds[v] & left))
        if not ready:
            raise ValueError("order contains a cycle")
        out.append(ready[0])
        left.discard(ready[0])
    return out


def build_permutation(g: Graph, pi=None) -> VertexWord:
    """Top-line enumeration followed by the bottom-line enumeration; edges
    are exactly the inverted pairs."""
    if pi is None:
        diagram = oracles.permutation_diagram(g)
        if diagram is None:
            raise BuildError("permutation: no diagram exists")
        top, bottom = diagram
    else:
        top = list(g.vertices)
        bottom = list(pi)
        if sorted(bottom) != top:
            raise ValueError("pi is not a permutation of the vertex set")
    return _verify(list(top) + list(bottom), "permutation", g)


def build_circle(g: Graph, chords=None) -> VertexWord:
    """The chord diagram read around the circle as a 2-uniform word."""
    if chords is None:
        chords = oracles.circle_chord_word(g)
        if chords is None:
            raise BuildError("circle: no chord diagram exists")
    chords = list(chords)
    profile = {}
    for tok in chords:
        profile[tok] = profile.get(tok, 0) + 1
    if set(profile) != set(g.vertices) or set(profile.values()) - {2}:
        raise ValueError("chord sequence is not 2-uniform over the vertex set")
    return _verify(chords, "circle", g)


def build_threshold(g: Graph) -> VertexWord:
    """Creation-sequence word: vv for a vertex added isolated, v for one
    added universal."""
    seq = oracles.threshold_creation_sequence(g)
    if seq is None:
        raise BuildError("threshold: no creation sequence exists")
    word = []
    for v, kind in seq:
        word += [v] if kind == "universal" else [v, v]
    return _verify(word, "threshold", g)


def build_bipartite_chain(g: Graph) -> VertexWord:
    """First occurrences of B, then stage i places the second occurrences
    of the newly covered part of the neighborhood chain and a_i itself."""
    ordering = oracles.nested_ordering(g)
    if ordering is None:
        raise BuildError("bipartite-chain: no nested ordering exists")
    a_side, b_side = ordering
    word = list(b_side)
    doubled = set()
    for a in a_side:
        for b in b_side:
            if b in doubled or not g.has_edge(a, b):
                continue
            word.append(b)
            doubled.add(b)
        word.append(a)
    return _verify(word, "bipartite-chain", g)


# --- intersection-model builders --------------------------------------------


def build_interval(g: Graph) -> VertexWord:
    """Interval-model endpoints scanned left to right; 2-uniform."""
    events = oracles.interval_event_sequence(g)
    if events is None:
        raise BuildError("interval: no interval model exists")
    return _verify([v for v, _ in events], "interval", g)


def build_convex(g: Graph) -> VertexWord:
    """Point letters once in the convex order; each vertex of the other side
    becomes an interval whose two letters bracket its neighborhood run."""
    ordering = oracles.convex_ordering(g)
    if ordering is None:
        raise BuildError("convex: no convex ordering exists")
    points, intervals = ordering
    pos = {p: i for i, p in enumerate(points)}
    runs = {}
    for a in intervals:
        spots = sorted(pos[b] for b in g.neighbors(a))
        runs[a] = (spots[0], spots[-1]) if spots else None
    word = []
    for a in intervals:
        if runs[a] is None:
            word += [a, a]
    for k, point in enumerate(points):
        word += sorted(a for a in intervals if runs[a] and runs[a][1] == k - 1)
        word += sorted(a for a in intervals if runs[a] and runs[a][0] == k)
        word.append(point)
    word += sorted(a for a in intervals if runs[a] and runs[a][1] == len(points) - 1)
    return _verify(word, "convex", g)


def build_interval_bigraph(g: Graph) -> VertexWord:
    """Bigraph interval model scanned left to right, then the A side
    appended once each, giving frequentnesses 3 (A) and 2 (B)."""
    model = oracles.interval_bigraph_model(g)
    if model is None:
        raise BuildError("interval-bigraph: no bigraph model exists")
    left, _right, events = model
    word = [v for v, _ in events] + list(left)
    return _verify(word, "interval-bigraph", g)


def build_halfline(g: Graph) -> VertexWord:
    """Endpoint-sorted enumeration; right-bounded rays doubled by a tail;
    isolated vertices appended as vvv (frequentness 3 is a hole of the
    language, so they attach to nothing)."""
    vs = _sorted_vertices(g)
    isolates = sorted(g.isolated_vertices())
    core = [v for v in vs if v not in set(isolates)]
    word = []
    if core:
        model = oracles.halfline_model(g.induced(core))
        if model is None:
            raise BuildError("halfline: core has no halfline model")
        word += sorted(core, key=lambda v: (model[v][1], v))
        word += sorted(
            (v for v in core if model[v][0] == 2), key=lambda v: (model[v][1], v)
        )
    for v in isolates:
        word += [v, v, v]
    return _verify(word, "halfline", g)


def build_co_circle(g: Graph) -> VertexWord:
    """Chord diagram of the complement of the non-isolated core, then each
    isolate once; singleton letters attach to nothing here, while in the
    complement view they form a universal clique tail."""
    vs = _sorted_vertices(g)
    isolates = sorted(g.isolated_vertices())
    core = [v for v in vs if v not in set(isolates)]
    word = []
    if core:
        chords = oracles.circle_chord_word(g.induced(core).complement())
        if chords is None:
            raise BuildError("co-circle: complement core is not a circle graph")
        word += chords
    word += isolates
    return _verify(word, "co-circle", g)


# --- cographs ---------------------------------------------------------------


def build_cograph(g: Graph, mode: str = "wrep-like") -> VertexWord:
    """Even-decomposition recursion: every intermediate word splits into two
    halves with each vertex once per half; x = w1 u1 w2 u2 glues parts so
    the cross pattern alternates, y = w1 u1 u2 w2 so it nests.  Which of the
    two means union and which join depends on the language family."""
    if mode not in ("wrep-like", "containment-like"):
        raise ValueError(f"unknown cograph mode {mode!r}")
    tag = f"cograph-{mode}"
    alternating_joins = mode == "wrep-like"

    def glue(parts, join: bool):
        w1, w2 = parts[0]
        for u1, u2 in parts[1:]:
            if join == alternating_joins:
                w1, w2 = w1 + u1, w2 + u2
            else:
                w1, w2 = w1 + u1, u2 + w2
        return w1, w2

    def rec(sub: Graph):
        if sub.order == 1:
            v = sub.vertices[0]
            return [v], [v]
        comps = sorted(sub.components(), key=min)
        if len(comps) > 1:
            return glue([rec(sub.induced(c)) for c in comps], join=False)
        cocomps = sorted(sub.complement().components(), key=min)
        if len(cocomps) > 1:
            return glue([rec(sub.induced(c)) for c in cocomps], join=True)
        raise BuildError("cograph: graph contains an induced P4")

    half1, half2 = rec(g)
    return _verify(half1 + half2, tag, g)


# --- split and cobipartite composites ---------------------------------------


def split_partition(g: Graph):
    """(clique, independent) split partition via the degree-sequence
    threshold test, or None."""
    vs = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in vs]
    k = 0
    for i, d in enumerate(degs, start=1):
        if d >= i - 1:
            k = i
    if sum(degs[:k]) != k * (k - 1) + sum(degs[k:]):
        return None
    clique, independent = vs[:k], vs[k:]
    for i, u in enumerate(clique):
        for v in clique[i + 1:]:
            if not g.has_edge(u, v):
                return None
    for i, u in enumerate(independent):
        for v in independent[i + 1:]:
            if g.has_edge(u, v):
                return None
    return sorted(clique), sorted(independent)


def build_split(g: Graph) -> VertexWord:
    """Alternating-palindrome word on the clique-vs-independent cross edges;
    the clique side turns into a clique through the even-even count branch.
    When the clique has even size the plain word's counts land odd, so a
    B-then-A tail bumps both sides' parities into place."""
    parts = split_partition(g)
    if parts is None:
        raise BuildError("split: no split partition exists")
    clique, independent = parts
    if not clique:
        word = list(independent)
    else:
        word = _alternating_word(clique, independent, g.has_edge)
        if len(clique) % 2 == 0:
            word += independent + clique
    return _verify(word, "split", g)


def build_cobipartite(g: Graph) -> VertexWord:
    """Alternating-palindrome word of the complement; flipping the language
    to the complement disjunction flips the represented graph back to g."""
    comp = g.complement()
    a_side, b_side = _bipartition_or_error(comp, "cobipartite")
    word = _alternating_word(a_side, b_side, comp.has_edge)
    return _verify(word, "cobipartite", g)


def build_cluster(g: Graph) -> VertexWord:
    """Component j's vertices each appear j times; equal counts inside a
    component, unequal across components."""
    comps = sorted(g.components(), key=min)
    word = []
    for j, comp in enumerate(comps, start=1):
        for u in comp:
            for v in comp:
                if u < v and not g.has_edge(u, v):
                    raise BuildError("cluster: component is not a clique")
        for v in sorted(comp):
            word += [v] * j
    return _verify(word, "cluster", g)


# --- interval models as words ----------------------------------------------


def interval_model_from_word(word: VertexWord) -> dict:
    """{v: (first, last)} occurrence positions; rebuilds the interval model
    of a (1,2)-uniform or 2-uniform word."""
    first = {}
    last = {}
    for i, tok in enumerate(word):
        first.setdefault(tok, i)
        last[tok] = i
    return {v: (first[v], last[v]) for v in first}


def word_from_interval_model(model: dict) -> VertexWord:
    """Scan model endpoints left to right; point intervals contribute one
    letter, proper intervals two."""
    events = []
    for v, (lo, hi) in model.items():
        if hi < lo:
            raise ValueError(f"interval of {v} ends before it starts")
        events.append((lo, str(v)))
        if hi != lo:
            events.append((hi, str(v)))
    events.sort()
    return VertexWord([v for _, v in events])


# --- infinite-language normal forms -----------------------------------------


@lru_cache(maxsize=None)
def _equivalence_languages(which: str):
    if which == "0ast1ast":
        return parse_language("hull(re:0*1*)"), parse_language("<0011>")
    return parse_language("hull(re:0(0|1)*1)"), parse_language("<0011,0101>")


def _trim_to_ends(word: VertexWord, which: str) -> VertexWord:
    infinite, finite = _equivalence_languages(which)
    profile = word.frequency_profile()
    lifted = []
    for tok in word:
        lifted.append(tok)
        if profile[tok] == 1:
            lifted.append(tok)
    first = {}
    last = {}
    for i, tok in enumerate(lifted):
        first.setdefault(tok, i)
        last[tok] = i
    out = VertexWord(
        [tok for i, tok in enumerate(lifted) if i in (first[tok], last[tok])]
    )
    if evaluate(out, finite) != evaluate(word, infinite):
        raise BuildError(f"construction-verification-failed: normalize-{which}")
    return out


def normalize_0ast1ast(word: VertexWord) -> VertexWord:
    """2-uniform normal form equivalent to the word under hull(0*1*): only
    the relative order of first and last occurrences matters there."""
    return _trim_to_ends(word, "0ast1ast")


def normalize_0any1(word: VertexWord) -> VertexWord:
    """2-uniform normal form equivalent to the word under hull(0(0|1)*1):
    membership of a pair pattern only depends on its outermost letters."""
    return _trim_to_ends(word, "0any1")


# builder registry for the command line and the class table
BUILDERS = {
    "palindrome": build_palindrome,
    "copy": build_copy,
    "copy-complement": build_copy_complement,
    "lyndon": build_lyndon,
    "bipartite": build_bipartite_palindrome,
    "bipartite-lyndon-odd": build_bipartite_lyndon_odd,
    "comparability": build_comparability,
    "interval": build_interval,
    "convex": build_convex,
    "interval-bigraph": build_interval_bigraph,
    "permutation": build_permutation,
    "circle": build_circle,
    "threshold": build_threshold,
    "bipartite-chain": build_bipartite_chain,
    "halfline": build_halfline,
    "co-circle": build_co_circle,
    "cograph-wrep-like": build_cograph,
    "cograph-containment-like": lambda g: build_cograph(g, "containment-like"),
    "split": build_split,
    "cobipartite": build_cobipartite,
    "cluster": build_cluster,
}
