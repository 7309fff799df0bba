"""Per-vertex edge selections, removable edge sets and their recognition.

The key reformulation used throughout the solvers: an edge set F is the image
of some selection with budget s exactly when (V, F) can be oriented with
out-degree at most s everywhere.  For s = 1 that is the quasi-unicyclic
(pseudoforest) condition, checkable per component by comparing edge and
vertex counts; for larger budgets we run a path-reversal orientation test.
Searching over sparse edge sets instead of vertex-indexed selection mappings
is what keeps the exact solvers feasible: the feasible sets form a
downward-closed family, and a selection is reconstructed only at the end.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .graph import Graph

Edge = tuple[int, int]


def _norm(e: Iterable[int]) -> Edge:
    u, v = e
    return (u, v) if u < v else (v, u)


class UnionFind:
    """Union-find with per-root vertex/edge counters and an undo stack.

    add_edge answers, in amortized near-constant time, whether the growing
    edge set stays a pseudoforest (every component keeps edges <= vertices).
    No path compression so that operations can be rolled back exactly.
    """

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n
        self.verts = [1] * n
        self.edges = [0] * n
        self.trail: list[tuple] = []

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def add_edge(self, u: int, v: int) -> bool:
        """Record edge (u, v); returns False if some component now has
        more edges than vertices (operation is still recorded for undo)."""
        ru, rv = self.find(u), self.find(v)
        if ru == rv:
            self.edges[ru] += 1
            self.trail.append(("self", ru))
            return self.edges[ru] <= self.verts[ru]
        if self.rank[ru] < self.rank[rv]:
            ru, rv = rv, ru
        bumped = self.rank[ru] == self.rank[rv]
        if bumped:
            self.rank[ru] += 1
        self.parent[rv] = ru
        self.verts[ru] += self.verts[rv]
        self.edges[ru] += self.edges[rv] + 1
        self.trail.append(("merge", ru, rv, bumped))
        return self.edges[ru] <= self.verts[ru]

    def checkpoint(self) -> int:
        return len(self.trail)

    def rollback(self, mark: int) -> None:
        while len(self.trail) > mark:
            op = self.trail.pop()
            if op[0] == "self":
                self.edges[op[1]] -= 1
            else:
                _, ru, rv, bumped = op
                self.parent[rv] = rv
                self.verts[ru] -= self.verts[rv]
                self.edges[ru] -= self.edges[rv] + 1
                if bumped:
                    self.rank[ru] -= 1


@dataclass(frozen=True)
class SSelection:
    """Assignment of at most s incident edges to each vertex."""

    s: int
    assignment: tuple[tuple[Edge, ...], ...]  # per-vertex tuples of edges

    @property
    def n(self) -> int:
        return len(self.assignment)

    def removed_edges(self) -> frozenset[Edge]:
        return frozenset(e for edges in self.assignment for e in edges)

    def validate(self, G: Graph) -> None:
        if self.n != G.n:
            raise ValueError("selection sized for a different graph")
        if self.s < 0:
            raise ValueError("budget must be non-negative")
        for v, edges in enumerate(self.assignment):
            if len(edges) > self.s:
                raise ValueError(f"vertex {v} selects {len(edges)} > s = {self.s} edges")
            for e in edges:
                if v not in e:
                    raise ValueError(f"edge {e} assigned to non-incident vertex {v}")
                if _norm(e) not in G.edges:
                    raise ValueError(f"selected edge {e} not in the graph")

    def to_pairs(self) -> list[tuple[int, int]]:
        """JSON form: (vertex, other endpoint) pairs, sorted."""
        pairs = []
        for v, edges in enumerate(self.assignment):
            for u, w in edges:
                pairs.append((v, w if u == v else u))
        return sorted(pairs)

    def to_json(self) -> str:
        return json.dumps({"s": self.s, "pairs": self.to_pairs()})

    @classmethod
    def from_pairs(cls, n: int, s: int, pairs: Iterable[tuple[int, int]]) -> "SSelection":
        assignment: list[list[Edge]] = [[] for _ in range(n)]
        for v, w in pairs:
            assignment[v].append(_norm((v, w)))
        return cls(s, tuple(tuple(sorted(a)) for a in assignment))

    @classmethod
    def from_json(cls, n: int, text: str) -> "SSelection":
        data = json.loads(text)
        return cls.from_pairs(n, data["s"], [tuple(p) for p in data["pairs"]])

    @classmethod
    def empty(cls, n: int, s: int = 1) -> "SSelection":
        return cls(s, tuple(() for _ in range(n)))


@dataclass(frozen=True)
class RemovedGraph:
    base: Graph
    selection: SSelection
    removed_edges: frozenset[Edge]
    result: Graph


def is_quasi_unicyclic(G: Graph) -> bool:
    """True iff every component is a tree or unicyclic (edges <= vertices)."""
    uf = UnionFind(G.n)
    ok = True
    for u, v in G.edges:
        ok &= uf.add_edge(u, v)
    return ok


def edge_set_is_pseudoforest(n: int, edges: Iterable[Edge]) -> bool:
    uf = UnionFind(n)
    return all(uf.add_edge(u, v) for u, v in edges)


def orient_with_cap(n: int, edges: Sequence[Edge], cap: int):
    """Try to orient `edges` with out-degree <= cap at every vertex.

    Returns (heads, None) on success, where heads[i] is the head of edges[i],
    or (None, witness) on failure with a vertex set inducing more than
    cap * |witness| of the given edges (the density obstruction).
    """
    if cap < 0:
        raise ValueError("cap must be non-negative")
    if cap == 0:
        if not edges:
            return [], None
        return None, sorted({v for e in edges for v in e})
    outdeg = [0] * n
    tails = [0] * len(edges)
    heads = [0] * len(edges)
    out_arcs: list[set[int]] = [set() for _ in range(n)]

    for eid, (u, v) in enumerate(edges):
        tail, head = (u, v) if outdeg[u] <= outdeg[v] else (v, u)
        tails[eid], heads[eid] = tail, head
        out_arcs[tail].add(eid)
        outdeg[tail] += 1
        while outdeg[tail] > cap:
            # hunt for slack along directed paths; reverse to rebalance
            parent_arc: dict[int, int] = {}
            visited = {tail}
            queue = deque([tail])
            target = None
            while queue and target is None:
                x = queue.popleft()
                for aid in out_arcs[x]:
                    y = heads[aid]
                    if y in visited:
                        continue
                    visited.add(y)
                    parent_arc[y] = aid
                    if outdeg[y] < cap:
                        target = y
                        break
                    queue.append(y)
            if target is None:
                # saturated reachable set = too-dense vertex set
                return None, sorted(visited)
            y = target
            while y != tail:
                aid = parent_arc[y]
                t = tails[aid]
                out_arcs[t].discard(aid)
                outdeg[t] -= 1
                tails[aid], heads[aid] = y, t
                out_arcs[y].add(aid)
                outdeg[y] += 1
                y = t
    return heads, None


def is_removable(F: Iterable[Edge], G: Graph, s: int):
    """Whether F is the edge image of some s-selection on G.

    Returns (True, orientation) with orientation mapping each edge of F to
    its head under a cap-s orientation (the other endpoint selects it),
    or (False, None).
    """
    F = sorted(_norm(e) for e in F)
    for e in F:
        if e not in G.edges:
            raise ValueError(f"edge {e} not in the graph")
    if s == 1 and not edge_set_is_pseudoforest(G.n, F):
        return False, None
    heads, _ = orient_with_cap(G.n, F, s)
    if heads is None:
        return False, None
    return True, {e: heads[i] for i, e in enumerate(F)}


def selection_from_edge_set(F: Iterable[Edge], G: Graph, s: int) -> SSelection:
    """Injective selection realizing F: every edge assigned to exactly one
    endpoint (the tail of a cap-s orientation)."""
    F = sorted(_norm(e) for e in F)
    ok, orientation = is_removable(F, G, s)
    if not ok:
        raise ValueError(f"edge set is not removable at budget s = {s}")
    assignment: list[list[Edge]] = [[] for _ in range(G.n)]
    for e in F:
        head = orientation[e]
        tail = e[0] if e[1] == head else e[1]
        assignment[tail].append(e)
    sel = SSelection(s, tuple(tuple(sorted(a)) for a in assignment))
    sel.validate(G)
    return sel


def apply_selection(G: Graph, f: SSelection) -> RemovedGraph:
    f.validate(G)
    removed = f.removed_edges()
    result = Graph(G.n, G.edges - removed)
    return RemovedGraph(G, f, removed, result)


def selection_digraph(G: Graph, f: SSelection) -> list[tuple[int, int]]:
    """Arc list (v, w) for f(v) = vw; only defined for budget 1.
    Two-cycles appear when both endpoints select the same edge."""
    if f.s != 1:
        raise ValueError("selection digraph is defined for s = 1 only")
    f.validate(G)
    arcs = []
    for v, edges in enumerate(f.assignment):
        for u, w in edges:
            arcs.append((v, w if u == v else u))
    return sorted(arcs)


DEFAULT_ENUM_ALL_EDGE_CAP = 20
DEFAULT_ENUM_MAXIMAL_EDGE_CAP = 24


def enumerate_removable_sets(G: Graph, s: int, mode: str = "all",
                             edge_cap: int | None = None) -> Iterator[frozenset[Edge]]:
    """Stream the removable edge sets of G at budget s.

    mode 'all' yields every removable set exactly once; 'maximal' yields
    exactly the inclusion-maximal ones.  Feasibility is incremental
    (union-find with rollback for s = 1, orientation retest otherwise); the
    guard caps keep the exponential walk at desk scale.
    """
    if mode not in ("all", "maximal"):
        raise ValueError("mode must be 'all' or 'maximal'")
    if s < 0:
        raise ValueError("budget must be non-negative")
    cap = edge_cap if edge_cap is not None else (
        DEFAULT_ENUM_ALL_EDGE_CAP if mode == "all" else DEFAULT_ENUM_MAXIMAL_EDGE_CAP)
    if G.m > cap:
        raise ValueError(f"graph has {G.m} edges, enumeration guard is {cap}")
    if s == 0:
        yield frozenset()
        return
    edges = G.sorted_edges()
    m = len(edges)
    current: list[Edge] = []

    if s == 1:
        uf = UnionFind(G.n)

        def try_push(e):
            mark = uf.checkpoint()
            if uf.add_edge(*e):
                return mark
            uf.rollback(mark)
            return None

        def undo(mark):
            uf.rollback(mark)

        def addable(e):
            mark = try_push(e)
            if mark is None:
                return False
            undo(mark)
            return True
    else:
        def try_push(e):
            heads, _ = orient_with_cap(G.n, current + [e], s)
            return -1 if heads is not None else None

        def undo(mark):
            pass

        def addable(e):
            heads, _ = orient_with_cap(G.n, current + [e], s)
            return heads is not None

    def dfs(i: int):
        if i == m:
            if mode == "all":
                yield frozenset(current)
            else:
                chosen = set(current)
                if all(e in chosen or not addable(e) for e in edges):
                    yield frozenset(current)
            return
        e = edges[i]
        mark = try_push(e)
        if mark is not None:
            current.append(e)
            yield from dfs(i + 1)
            current.pop()
            undo(mark)
        yield from dfs(i + 1)

    yield from dfs(0)
