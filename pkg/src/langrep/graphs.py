"""Finite simple graphs with string-labelled vertices.

Immutable value type plus the structural operations the representation
theorems use: complement, disjoint union, join, induced subgraphs, twin
insertion, and the textual formats (JSON object, edge list, DOT output).
"""

from __future__ import annotations

import json

from .errors import FormatError
from .words import check_token


def _edge(u, v):
    if u == v:
        raise ValueError(f"loop at {u!r}")
    return (u, v) if u <= v else (v, u)


class Graph:
    """Simple graph; vertex set nonempty, no loops, no multi-edges."""

    __slots__ = ("vertices", "edges", "_adj")

    def __init__(self, vertices, edges=()):
        vs = tuple(sorted(set(vertices)))
        if not vs:
            raise ValueError("graph needs at least one vertex")
        for v in vs:
            check_token(v)
        vset = set(vs)
        es = set()
        for u, v in edges:
            if u not in vset or v not in vset:
                raise ValueError(f"edge endpoint {u!r}/{v!r} not a vertex")
            es.add(_edge(u, v))
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", frozenset(es))
        adj = {v: set() for v in vs}
        for u, v in es:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", {v: frozenset(s) for v, s in adj.items()})

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # -- basic queries -------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.edges)

    def has_edge(self, u, v) -> bool:
        return u != v and v in self._adj[u]

    def neighbors(self, v) -> frozenset:
        return self._adj[v]

    def degree(self, v) -> int:
        return len(self._adj[v])

    def isolated_vertices(self):
        return tuple(v for v in self.vertices if not self._adj[v])

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"Graph(n={self.order}, m={self.size})"

    # -- constructions -------------------------------------------------------

    def complement(self) -> "Graph":
        vs = self.vertices
        es = [
            (u, v)
            for i, u in enumerate(vs)
            for v in vs[i + 1:]
            if not self.has_edge(u, v)
        ]
        return Graph(vs, es)

    def union(self, other: "Graph") -> "Graph":
        """Disjoint union; vertex sets must not overlap."""
        if set(self.vertices) & set(other.vertices):
            raise ValueError("union requires disjoint vertex sets")
        return Graph(self.vertices + other.vertices, list(self.edges) + list(other.edges))

    def join(self, other: "Graph") -> "Graph":
        base = self.union(other)
        extra = [(u, v) for u in self.vertices for v in other.vertices]
        return Graph(base.vertices, list(base.edges) + extra)

    def induced(self, keep) -> "Graph":
        keep = set(keep)
        if not keep <= set(self.vertices):
            raise ValueError("induced set contains unknown vertices")
        return Graph(keep, [(u, v) for u, v in self.edges if u in keep and v in keep])

    def relabel(self, mapping) -> "Graph":
        return Graph(
            [mapping[v] for v in self.vertices],
            [(mapping[u], mapping[v]) for u, v in self.edges],
        )

    def add_twin(self, v, new, *, true_twin: bool) -> "Graph":
        """Add ``new`` with the same neighborhood as v; a true twin is also
        adjacent to v itself."""
        if new in self._adj:
            raise ValueError(f"vertex {new!r} already present")
        es = list(self.edges) + [(new, u) for u in self._adj[v]]
        if true_twin:
            es.append((new, v))
        return Graph(self.vertices + (new,), es)

    def add_isolated(self, new) -> "Graph":
        if new in self._adj:
            raise ValueError(f"vertex {new!r} already present")
        return Graph(self.vertices + (new,), self.edges)

    def add_universal(self, new) -> "Graph":
        if new in self._adj:
            raise ValueError(f"vertex {new!r} already present")
        return Graph(
            self.vertices + (new,),
            list(self.edges) + [(new, v) for v in self.vertices],
        )

    # -- traversals ----------------------------------------------------------

    def components(self):
        seen = set()
        comps = []
        for root in self.vertices:
            if root in seen:
                continue
            comp = {root}
            stack = [root]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def bipartition(self):
        """A 2-coloring (set, set) or None; isolated vertices go left."""
        color = {}
        for root in self.vertices:
            if root in color:
                continue
            color[root] = 0
            stack = [root]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if y not in color:
                        color[y] = 1 - color[x]
                        stack.append(y)
                    elif color[y] == color[x]:
                        return None
        left = frozenset(v for v in self.vertices if color[v] == 0)
        right = frozenset(v for v in self.vertices if color[v] == 1)
        return left, right

    def degree_sequence(self):
        return tuple(sorted(len(self._adj[v]) for v in self.vertices))


# --- convenient families ----------------------------------------------------


def _labels(n, prefix="v"):
    return [f"{prefix}{i}" for i in range(1, n + 1)]


def null_graph(n, labels=None) -> Graph:
    return Graph(labels or _labels(n))


def complete_graph(n, labels=None) -> Graph:
    vs = labels or _labels(n)
    return Graph(vs, [(u, v) for i, u in enumerate(vs) for v in vs[i + 1:]])


def path_graph(n, labels=None) -> Graph:
    vs = labels or _labels(n)
    return Graph(vs, list(zip(vs, vs[1:])))


def cycle_graph(n, labels=None) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    vs = labels or _labels(n)
    return Graph(vs, list(zip(vs, vs[1:])) + [(vs[-1], vs[0])])


def complete_bipartite(a, b, labels=None) -> Graph:
    vs = labels or _labels(a + b)
    left, right = vs[:a], vs[a:]
    return Graph(vs, [(u, v) for u in left for v in right])


# --- text formats -----------------------------------------------------------


def graph_to_json(g: Graph) -> str:
    return json.dumps(
        {"vertices": list(g.vertices), "edges": [sorted(e) for e in sorted(g.edges)]}
    )


def graph_from_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"bad graph JSON: {exc}")
    if not isinstance(obj, dict) or "vertices" not in obj:
        raise FormatError("graph JSON needs a 'vertices' field")
    vertices = obj["vertices"]
    edges = obj.get("edges", [])
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise FormatError("'vertices' must be a list of strings")
    if len(set(vertices)) != len(vertices):
        raise FormatError("duplicate vertex in graph JSON")
    pairs = []
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            raise FormatError(f"bad edge entry {e!r}")
        pairs.append((e[0], e[1]))
    try:
        return Graph(vertices, pairs)
    except ValueError as exc:
        raise FormatError(str(exc))


def graph_to_edge_list(g: Graph) -> str:
    lines = [f"{g.order} {g.size}"]
    isolated = g.isolated_vertices()
    if isolated:
        lines.append("v: " + " ".join(isolated))
    for u, v in sorted(g.edges):
        lines.append(f"{u} {v}")
    return "\n".join(lines)


def graph_from_edge_list(text: str) -> Graph:
    """First line ``n m``; then optional ``v:`` lines naming edge-free
    vertices and one ``u v`` line per edge."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty edge list")
    head = lines[0].split()
    if len(head) != 2 or not all(t.lstrip("-").isdigit() for t in head):
        raise FormatError(f"bad header line {lines[0]!r} (want 'n m')")
    n, m = int(head[0]), int(head[1])
    vertices = []
    edges = []
    for ln in lines[1:]:
        if ln.startswith("v:"):
            vertices.extend(ln[2:].split())
            continue
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line {ln!r}")
        edges.append((parts[0], parts[1]))
        vertices.extend(parts)
    g = Graph(set(vertices), edges)
    if g.order != n or g.size != m:
        raise FormatError(
            f"header says n={n} m={m} but body has n={g.order} m={g.size}"
        )
    return g


def graph_to_dot(g: Graph, name="G") -> str:
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        lines.append(f'  "{v}";')
    for u, v in sorted(g.edges):
        lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines)


def parse_graph(text: str) -> Graph:
    """Accept either the JSON object form or the edge-list form."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return graph_from_json(text)
    return graph_from_edge_list(text)
