"""Words over vertex alphabets and binary pattern words.

A vertex word is a nonempty sequence of vertex tokens.  Projecting a vertex
word onto an ordered pair (u, v) yields a binary word: occurrences of u
become 0, occurrences of v become 1, everything else vanishes.  Binary words
are plain strings over {0, 1} and may be empty.
"""

from __future__ import annotations

from .errors import FormatError

Vertex = str

_BAD_TOKEN_CHARS = set(" \t\n\r,")


def check_token(tok: str) -> str:
    if not tok or any(c in _BAD_TOKEN_CHARS for c in tok):
        raise FormatError(f"invalid vertex token {tok!r}")
    return tok


class VertexWord:
    """Immutable nonempty word over an arbitrary vertex alphabet."""

    __slots__ = ("letters",)

    def __init__(self, letters):
        letters = tuple(letters)
        if not letters:
            raise ValueError("vertex word must be nonempty")
        for tok in letters:
            check_token(tok)
        object.__setattr__(self, "letters", letters)

    def __setattr__(self, name, value):
        raise AttributeError("VertexWord is immutable")

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __eq__(self, other):
        return isinstance(other, VertexWord) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return f"VertexWord({self.text()!r})"

    @staticmethod
    def parse(text: str) -> "VertexWord":
        """Parse a word: whitespace- or comma-separated tokens, or, when the
        text contains no separators, one single-character token per symbol."""
        text = text.strip()
        if not text:
            raise FormatError("empty word text")
        if any(c in _BAD_TOKEN_CHARS for c in text):
            toks = [t for t in text.replace(",", " ").split() if t]
            return VertexWord(toks)
        return VertexWord(list(text))

    def text(self) -> str:
        """Inverse of parse: contiguous when all tokens are single characters."""
        if all(len(t) == 1 for t in self.letters):
            return "".join(self.letters)
        return " ".join(self.letters)

    def alphabet(self) -> frozenset:
        return frozenset(self.letters)

    def frequency_profile(self) -> dict:
        prof: dict = {}
        for tok in self.letters:
            prof[tok] = prof.get(tok, 0) + 1
        return prof

    def is_k_uniform(self, k: int) -> bool:
        return all(c == k for c in self.frequency_profile().values())

    def reverse(self) -> "VertexWord":
        return VertexWord(reversed(self.letters))

    def project(self, u: Vertex, v: Vertex) -> str:
        """The pair morphism h_{u,v}: u -> 0, v -> 1, other letters -> empty."""
        if u == v:
            raise ValueError("projection endpoints must be distinct")
        out = []
        for tok in self.letters:
            if tok == u:
                out.append("0")
            elif tok == v:
                out.append("1")
        return "".join(out)

    def project_set(self, keep) -> "VertexWord":
        """The projective morphism h_A keeping only letters in ``keep``."""
        keep = frozenset(keep)
        out = [tok for tok in self.letters if tok in keep]
        if not out:
            raise ValueError("projection onto a set disjoint from the alphabet")
        return VertexWord(out)

    def relabel(self, mapping) -> "VertexWord":
        return VertexWord(mapping[tok] for tok in self.letters)


def check_binary(b: str) -> str:
    if any(c not in "01" for c in b):
        raise FormatError(f"not a binary word: {b!r}")
    return b


def complement_word(b: str) -> str:
    """The 0 <-> 1 involution on binary words."""
    return b.translate(_COMPLEMENT)


_COMPLEMENT = str.maketrans("01", "10")


def normal_form(b: str) -> str:
    """Lexicographic minimum of b and its complement; a canonical
    representative of the two-element symmetry orbit."""
    bc = complement_word(b)
    return b if b <= bc else bc


def reverse_word(b: str) -> str:
    return b[::-1]
