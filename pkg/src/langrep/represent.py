"""Graph-from-word evaluation, verification, bounded search, decomposition.

The central relation: given a symmetric binary language L and a word w over
a vertex alphabet, u and v are adjacent iff the pairwise projection of w
(u to 0, v to 1, everything else erased) lies in L.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .errors import CapacityError
from .graphs import Graph
from .isomorphism import distinct_labelings, isomorphic
from .languages import (
    FiniteLanguage,
    GrammarLanguage,
    Language,
    RegularLanguage,
    require_symmetric,
)
from .automata import count_window_dfa
from .grammar import intersect_regular
from .words import VertexWord

DEFAULT_NODE_BUDGET = 10**8

# words with counts (k, l) number C(k+l, k); pair-nonemptiness scans them
# for opaque languages, so keep an explicit ceiling
ENUMERATION_BUDGET = 2 * 10**6


def evaluate(word: VertexWord, lang: Language) -> Graph:
    """The graph induced by word under lang: one membership query per
    unordered vertex pair, in the pair's ascending orientation."""
    require_symmetric(lang)
    vs = sorted(word.alphabet())
    edges = []
    for u, v in itertools.combinations(vs, 2):
        if lang.contains(word.project(u, v)):
            edges.append((u, v))
    return Graph(vs, edges)


@dataclass(frozen=True)
class CheckReport:
    match: bool
    produced: Graph
    mapping: dict | None = None
    first_diff: tuple | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.match


def check(word: VertexWord, lang: Language, expected: Graph) -> CheckReport:
    """Verdict of isomorphic(evaluate(word, lang), expected); on mismatch
    with coinciding vertex sets, reports the first differing pair in the
    evaluated graph's own labeling."""
    produced = evaluate(word, lang)
    mapping = isomorphic(produced, expected)
    if mapping is not None:
        return CheckReport(True, produced, mapping=mapping, message="match")
    if set(produced.vertices) == set(expected.vertices):
        for u, v in itertools.combinations(produced.vertices, 2):
            if produced.has_edge(u, v) != expected.has_edge(u, v):
                state = "unexpected edge" if produced.has_edge(u, v) else "missing edge"
                return CheckReport(
                    False, produced, first_diff=(u, v),
                    message=f"mismatch at pair ({u},{v}): {state}",
                )
    return CheckReport(False, produced, message="mismatch: no isomorphism")


def _normalize_bounds(g: Graph, freq_bounds) -> dict:
    if isinstance(freq_bounds, dict):
        table = {v: sorted(set(freq_bounds[v])) for v in g.vertices}
    else:
        allowed = sorted(set(freq_bounds))
        table = {v: allowed for v in g.vertices}
    for v, allowed in table.items():
        if not allowed or any(m < 1 for m in allowed):
            raise ValueError(f"invalid multiplicity bounds for {v}: {allowed}")
    return table


def search(
    g: Graph,
    lang: Language,
    freq_bounds,
    max_len: int | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> VertexWord | None:
    """Bounded exhaustive search for a word w with evaluate(w, lang) equal
    to g on g's own labels, or None when the bounded space is exhausted.

    freq_bounds is a set of allowed multiplicities, or a per-vertex dict.
    Words are explored in canonical form (first occurrences in ascending
    vertex order) against every distinct relabeling of g, which covers all
    words up to the relabeling isomorphism.  A pair of letters prunes the
    branch as soon as no completion of its projection can agree with g.
    """
    require_symmetric(lang)
    bounds = _normalize_bounds(g, freq_bounds)
    budget = [node_budget]
    feas_cache: dict = {}

    def feasible_pair(prefix: str, r0: int, r1: int):
        # (can reach lang, can avoid lang) over all interleavings of the
        # remaining r0 zeros and r1 ones appended to prefix
        key = (prefix, r0, r1)
        got = feas_cache.get(key)
        if got is None:
            if r0 == 0 and r1 == 0:
                inside = lang.contains(prefix)
                got = (inside, not inside)
            else:
                can_in = can_out = False
                if r0:
                    a, b = feasible_pair(prefix + "0", r0 - 1, r1)
                    can_in |= a
                    can_out |= b
                if r1 and not (can_in and can_out):
                    a, b = feasible_pair(prefix + "1", r0, r1 - 1)
                    can_in |= a
                    can_out |= b
                got = (can_in, can_out)
            feas_cache[key] = got
        return got

    def feasible(prefix: str, r0: int, r1: int, want_in: bool) -> bool:
        got = feasible_pair(prefix, r0, r1)
        return got[0] if want_in else got[1]

    for relabeled, sigma in distinct_labelings(g):
        inverse = {b: a for a, b in sigma.items()}
        vs = relabeled.vertices
        n = len(vs)
        per_vertex = [bounds[inverse[v]] for v in vs]
        for mults in itertools.product(*per_vertex):
            total = sum(mults)
            if max_len is not None and total > max_len:
                continue
            # screen the multiplicity vector: every pair must admit some
            # interleaving agreeing with g before any arrangement is tried
            if any(
                not feasible("", mults[i], mults[j], relabeled.has_edge(vs[i], vs[j]))
                for i in range(n)
                for j in range(i + 1, n)
            ):
                continue
            word = _dfs_canonical(relabeled, lang, vs, mults, total, feasible, budget)
            if word is not None:
                return VertexWord([inverse[c] for c in word])
    return None


def _dfs_canonical(h, lang, vs, mults, total, feasible, budget):
    n = len(vs)
    index = {v: i for i, v in enumerate(vs)}
    remaining = list(mults)
    pair_proj: dict = {
        (vs[i], vs[j]): [] for i in range(n) for j in range(i + 1, n)
    }
    word: list = []

    def proj_key(a, b):
        return (a, b) if a < b else (b, a)

    def ok_after(c) -> bool:
        # every pair involving c must still admit an agreeing completion
        for d in vs:
            if d == c:
                continue
            key = proj_key(c, d)
            bits = "".join(pair_proj[key])
            r_first = remaining[index[key[0]]]
            r_second = remaining[index[key[1]]]
            want = h.has_edge(c, d)
            if not feasible(bits, r_first, r_second, want):
                return False
        return True

    def rec(next_new: int) -> bool:
        budget[0] -= 1
        if budget[0] < 0:
            raise CapacityError("search node budget exhausted")
        if len(word) == total:
            return True
        candidates = [
            v for i, v in enumerate(vs[:next_new]) if remaining[i] > 0
        ]
        if next_new < n:
            candidates.append(vs[next_new])
        for c in candidates:
            i = index[c]
            bumped = i == next_new
            remaining[i] -= 1
            word.append(c)
            for d in vs:
                if d == c:
                    continue
                key = proj_key(c, d)
                pair_proj[key].append("0" if key[0] == c else "1")
            if ok_after(c) and rec(next_new + 1 if bumped else next_new):
                return True
            for d in vs:
                if d == c:
                    continue
                pair_proj[proj_key(c, d)].pop()
            word.pop()
            remaining[i] += 1
        return False

    if rec(0):
        return list(word)
    return None


@dataclass(frozen=True)
class Decomposition:
    pairs: frozenset
    parts: dict  # (k, l) -> Graph over V_{k,l} with only the cross edges
    whole: Graph


def pair_nonempty(lang: Language, k: int, ell: int) -> bool:
    """Does lang contain a word with letter counts {k, ell} (either
    polarity)?  Decided exactly per language kind."""
    if isinstance(lang, FiniteLanguage):
        return any({b.count("0"), b.count("1")} == {k, ell} for b in lang.words)
    window = count_window_dfa(k, ell)
    if k != ell:
        window = window.union(count_window_dfa(ell, k))
    if isinstance(lang, RegularLanguage):
        return not lang.dfa.intersect(window).is_empty()
    if isinstance(lang, GrammarLanguage):
        return not intersect_regular(lang.cfg, window).is_empty()
    # opaque membership: enumerate all words with the two count profiles
    profiles = {(k, ell), (ell, k)}
    for zeros, ones in profiles:
        length = zeros + ones
        if comb(length, zeros) > ENUMERATION_BUDGET:
            raise CapacityError(
                f"pair ({k},{ell}) enumeration exceeds budget for opaque language"
            )
        for positions in itertools.combinations(range(length), zeros):
            chars = ["1"] * length
            for p in positions:
                chars[p] = "0"
            if lang.contains("".join(chars)):
                return True
    return False


def decompose(word: VertexWord, lang: Language) -> Decomposition:
    """Split the induced graph by frequentness pairs: the listed pairs are
    all (k, l) realized among the word's letter frequentnesses for which
    lang holds some word with those counts, even when the corresponding
    edge set is empty."""
    whole = evaluate(word, lang)
    freq = word.frequency_profile()
    realized = sorted(set(freq.values()))
    pairs = []
    for i, k in enumerate(realized):
        for ell in realized[i:]:
            if pair_nonempty(lang, k, ell):
                pairs.append((k, ell))
    parts = {}
    union_edges = set()
    for k, ell in pairs:
        members = [v for v in sorted(word.alphabet()) if freq[v] in (k, ell)]
        sub = evaluate(word.project_set(members), lang)
        cross = [
            (u, v) for u, v in sub.edges if {freq[u], freq[v]} == ({k, ell} if k != ell else {k})
        ]
        parts[(k, ell)] = Graph(members, cross)
        union_edges.update(tuple(sorted(e)) for e in cross)
    if union_edges != set(whole.edges):
        raise AssertionError("decomposition union identity violated")
    return Decomposition(frozenset(pairs), parts, whole)
