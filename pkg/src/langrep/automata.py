"""Deterministic finite automata over the alphabet {0, 1}.

Small self-contained machinery: regular-expression compilation (syntax tree
to nondeterministic machine to determinized Dfa), product constructions,
complement by accepting-set flip, and decision helpers (emptiness,
equivalence, shortest accepted word).  States are integers; every Dfa is
total over both input symbols.
"""

from __future__ import annotations

from collections import deque

from .errors import FormatError

ALPHABET = ("0", "1")


class Dfa:
    """Total deterministic automaton; ``trans[q]`` is a (on-0, on-1) pair."""

    __slots__ = ("trans", "start", "accept")

    def __init__(self, trans, start, accept):
        self.trans = tuple((int(a), int(b)) for a, b in trans)
        self.start = int(start)
        self.accept = frozenset(accept)
        n = len(self.trans)
        for a, b in self.trans:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError("transition out of range")
        if not 0 <= self.start < n:
            raise ValueError("start state out of range")
        if any(not 0 <= q < n for q in self.accept):
            raise ValueError("accept state out of range")

    def __len__(self):
        return len(self.trans)

    def accepts(self, b: str) -> bool:
        q = self.start
        for c in b:
            q = self.trans[q][0] if c == "0" else self.trans[q][1]
        return q in self.accept

    def complement(self) -> "Dfa":
        return Dfa(self.trans, self.start, set(range(len(self))) - self.accept)

    def swap01(self) -> "Dfa":
        """Image under the complement-morphism: exchange the 0 and 1 moves."""
        return Dfa([(b, a) for a, b in self.trans], self.start, self.accept)

    def product(self, other: "Dfa", combine) -> "Dfa":
        """Reachable pair construction; ``combine`` joins acceptance bits."""
        index = {}
        trans = []
        accept = set()
        todo = deque()

        def key(p, q):
            if (p, q) not in index:
                index[(p, q)] = len(trans)
                trans.append(None)
                if combine(p in self.accept, q in other.accept):
                    accept.add(index[(p, q)])
                todo.append((p, q))
            return index[(p, q)]

        start = key(self.start, other.start)
        while todo:
            p, q = todo.popleft()
            i = index[(p, q)]
            trans[i] = (
                key(self.trans[p][0], other.trans[q][0]),
                key(self.trans[p][1], other.trans[q][1]),
            )
        return Dfa(trans, start, accept)

    def intersect(self, other):
        return self.product(other, lambda a, b: a and b)

    def union(self, other):
        return self.product(other, lambda a, b: a or b)

    def is_empty(self) -> bool:
        return self.shortest_accepted() is None

    def shortest_accepted(self):
        """Length-lexicographically least accepted word, or None."""
        if self.start in self.accept:
            return ""
        seen = {self.start}
        todo = deque([(self.start, "")])
        while todo:
            q, w = todo.popleft()
            for c, q2 in zip(ALPHABET, self.trans[q]):
                if q2 not in seen:
                    if q2 in self.accept:
                        return w + c
                    seen.add(q2)
                    todo.append((q2, w + c))
        return None

    def equivalent(self, other: "Dfa") -> bool:
        return self.product(other, lambda a, b: a != b).is_empty()

    def reverse(self) -> "Dfa":
        """Automaton for the reversal language, via reversed-edge subset
        construction starting from the accepting set."""
        rev = {(q, c): set() for q in range(len(self)) for c in (0, 1)}
        for q, (a, b) in enumerate(self.trans):
            rev[(a, 0)].add(q)
            rev[(b, 1)].add(q)
        return _determinize(frozenset(self.accept), lambda s, c: frozenset(
            x for q in s for x in rev[(q, c)]), lambda s: self.start in s)


def _determinize(start_set, step, is_accept) -> Dfa:
    index = {start_set: 0}
    trans = [None]
    accept = set()
    if is_accept(start_set):
        accept.add(0)
    todo = deque([start_set])
    while todo:
        s = todo.popleft()
        row = []
        for c in (0, 1):
            t = step(s, c)
            if t not in index:
                index[t] = len(trans)
                trans.append(None)
                if is_accept(t):
                    accept.add(index[t])
                todo.append(t)
            row.append(index[t])
        trans[index[s]] = tuple(row)
    return Dfa(trans, 0, accept)


def dfa_from_finite(words) -> Dfa:
    """Trie-shaped Dfa for a finite set of binary words."""
    words = set(words)
    prefixes = {""}
    for w in words:
        for i in range(len(w) + 1):
            prefixes.add(w[:i])
    order = sorted(prefixes, key=lambda p: (len(p), p))
    index = {p: i for i, p in enumerate(order)}
    trap = len(order)
    trans = []
    for p in order:
        trans.append(tuple(index.get(p + c, trap) for c in ALPHABET))
    trans.append((trap, trap))
    return Dfa(trans, index[""], {index[w] for w in words})


# --- regular expressions ----------------------------------------------------
#
# Surface syntax: literals 0 and 1, e for the empty word, (), |, juxtaposition
# for concatenation, postfix *.  Compiled through a Thompson-style epsilon
# machine, then determinized.


def compile_regex(expr: str) -> Dfa:
    ast = _RegexParser(expr).parse()
    nfa = _Nfa()
    s, t = nfa.build(ast)
    return nfa.determinize(s, t)


class _RegexParser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else None

    def take(self):
        c = self.peek()
        self.pos += 1
        return c

    def parse(self):
        node = self._alternation()
        if self.peek() is not None:
            raise FormatError(f"unexpected {self.peek()!r} in regex", self.pos)
        return node

    def _alternation(self):
        branches = [self._concat()]
        while self.peek() == "|":
            self.take()
            branches.append(self._concat())
        return branches[0] if len(branches) == 1 else ("alt", branches)

    def _concat(self):
        parts = []
        while self.peek() not in (None, "|", ")"):
            parts.append(self._starred())
        if not parts:
            # the syntax has an explicit 'e'; an empty branch is a slip
            raise FormatError("empty regex branch (use 'e' for the empty word)", self.pos)
        return parts[0] if len(parts) == 1 else ("cat", parts)

    def _starred(self):
        node = self._atom()
        while self.peek() == "*":
            self.take()
            node = ("star", node)
        return node

    def _atom(self):
        c = self.take()
        if c == "(":
            node = self._alternation()
            if self.take() != ")":
                raise FormatError("unbalanced parenthesis in regex", self.pos)
            return node
        if c in ("0", "1"):
            return ("lit", c)
        if c == "e":
            return ("eps",)
        raise FormatError(f"bad regex character {c!r}", self.pos - 1)


class _Nfa:
    def __init__(self):
        self.eps = []
        self.step = []

    def _state(self):
        self.eps.append(set())
        self.step.append({})
        return len(self.eps) - 1

    def build(self, node):
        kind = node[0]
        if kind == "eps":
            s = self._state()
            return s, s
        if kind == "lit":
            s, t = self._state(), self._state()
            self.step[s][node[1]] = t
            return s, t
        if kind == "alt":
            s, t = self._state(), self._state()
            for sub in node[1]:
                a, b = self.build(sub)
                self.eps[s].add(a)
                self.eps[b].add(t)
            return s, t
        if kind == "cat":
            first, last = None, None
            for sub in node[1]:
                a, b = self.build(sub)
                if first is None:
                    first = a
                else:
                    self.eps[last].add(a)
                last = b
            return first, last
        if kind == "star":
            a, b = self.build(node[1])
            s = self._state()
            self.eps[s].add(a)
            self.eps[b].add(s)
            return s, s
        raise AssertionError(kind)

    def _closure(self, states):
        out = set(states)
        todo = list(states)
        while todo:
            q = todo.pop()
            for r in self.eps[q]:
                if r not in out:
                    out.add(r)
                    todo.append(r)
        return frozenset(out)

    def determinize(self, start, final) -> Dfa:
        def step(s, c):
            sym = ALPHABET[c]
            nxt = {self.step[q][sym] for q in s if sym in self.step[q]}
            return self._closure(nxt)

        return _determinize(self._closure({start}), step, lambda s: final in s)


def count_window_dfa(zeros: int, ones: int) -> Dfa:
    """Accepts exactly the words with ``zeros`` 0s and ``ones`` 1s."""
    # grid of (seen zeros, seen ones) plus a trap for overshoot
    idx = {}
    for i in range(zeros + 1):
        for j in range(ones + 1):
            idx[(i, j)] = len(idx)
    trap = len(idx)
    trans = []
    for i in range(zeros + 1):
        for j in range(ones + 1):
            on0 = idx[(i + 1, j)] if i < zeros else trap
            on1 = idx[(i, j + 1)] if j < ones else trap
            trans.append((on0, on1))
    trans.append((trap, trap))
    return Dfa(trans, idx[(0, 0)], {idx[(zeros, ones)]})


def both_symbols_dfa() -> Dfa:
    """Accepts words containing at least one 0 and at least one 1, i.e. the
    complement of 0*+1*.  Four states: nothing seen, 0 seen, 1 seen, both."""
    start, seen0, seen1, both = 0, 1, 2, 3
    trans = [
        (seen0, seen1),
        (seen0, both),
        (both, seen1),
        (both, both),
    ]
    return Dfa(trans, start, {both})
