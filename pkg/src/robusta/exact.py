"""Exact ground-truth solvers for classical and robust graph parameters.

Two tiers everywhere: specialized branch-and-bound searches sized for desk
scale (the defaults below), and a brute-force oracle tier that enumerates
every removable edge set on small instances.  The oracle is deliberately
dumb; the test suite uses it to certify the clever searches.

Strategy notes for the robust (selection-adversarial) parameters:

* chi_s: partition search.  A graph is k-colorable after removing some
  budget-s selection iff the vertex set splits into k classes each inducing
  a subgraph orientable with out-degree <= s (for s = 1: quasi-unicyclic),
  because an optimal selection only ever removes monochromatic edges.
* alpha_s: the best selection deletes exactly the edges inside the target
  set, so alpha_s equals the largest vertex set whose induced subgraph is
  orientable with out-degree <= s.  For s = 1 this is the same search as
  iota.
* omega_s: decision form.  omega_s <= v iff some removable set meets every
  (v+1)-clique; we branch on the edges of an uncovered clique, with density
  (Turan-type), coverage-counting and edge-disjoint-packing prunes.
* theta_s: decision form mirrored.  theta_s > B is witnessed by a removable
  set whose removal defeats every B-class clique cover; branch on the
  internal edges of a concrete minimum cover of the current removed graph.
* chi_prime_s: two phases.  First minimize the maximum degree D* of the
  removed graph (deficit-driven branching); the answer is then D* or D*+1,
  settled by hunting for a maximal removable set whose removal leaves a
  D*-edge-chromatic graph.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field, asdict

from .graph import Graph
from .poly import edge_coloring_upper
from .selection import (Edge, UnionFind, enumerate_removable_sets,
                        is_removable, orient_with_cap, selection_from_edge_set)


class CapExceeded(ValueError):
    """Instance is larger than the configured solver cap."""


@dataclass
class SolverCaps:
    chi_n: int = 16
    theta_n: int = 16
    arboricity_n: int = 16
    omega_n: int = 20
    alpha_n: int = 20
    iota_n: int = 20
    robust_chi_n: int = 16
    robust_n: int = 12
    oracle_edges: int = 18
    chi_prime_edges: int = 45
    canonical_n: int = 10
    explorer_n: int = 7
    filters_n: int = 16

    def override(self, **kw) -> "SolverCaps":
        data = asdict(self)
        data.update({k: v for k, v in kw.items() if v is not None})
        return SolverCaps(**data)


DEFAULT_CAPS = SolverCaps()

CLASSICAL = ("chi", "omega", "alpha", "theta", "chi_prime", "arboricity", "degeneracy")
ROBUST = ("chi", "omega", "alpha", "theta", "chi_prime")


@dataclass
class ParameterResult:
    parameter: str
    s: int
    value: int
    certificate: dict
    stats: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps({
            "parameter": self.parameter,
            "s": self.s,
            "value": self.value,
            "certificate": self.certificate,
            "stats": self.stats,
        }, sort_keys=True)


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


# ---------------------------------------------------------------------------
# classical solvers (bitmask based)
# ---------------------------------------------------------------------------


def _max_clique(n: int, masks: list[int]):
    """Largest clique via branch and bound with a greedy coloring bound."""
    best_mask = 0
    best_size = 0
    nodes = 0

    def expand(rmask, rsize, pmask):
        nonlocal best_mask, best_size, nodes
        nodes += 1
        if pmask == 0:
            if rsize > best_size:
                best_mask, best_size = rmask, rsize
            return
        classes: list[int] = []
        colored: list[tuple[int, int]] = []
        for v in _bits(pmask):
            for ci in range(len(classes)):
                if not (classes[ci] & masks[v]):
                    classes[ci] |= 1 << v
                    colored.append((v, ci + 1))
                    break
            else:
                classes.append(1 << v)
                colored.append((v, len(classes)))
        colored.sort(key=lambda t: t[1])
        for v, c in reversed(colored):
            if rsize + c <= best_size:
                return
            expand(rmask | (1 << v), rsize + 1, pmask & masks[v])
            pmask &= ~(1 << v)

    full = (1 << n) - 1
    expand(0, 0, full)
    return sorted(_bits(best_mask)), nodes


def _dsatur(n: int, masks: list[int]) -> list[int]:
    color = [-1] * n
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]
    degs = [_popcount(masks[v]) for v in range(n)]
    for _ in range(n):
        v = max((u for u in range(n) if color[u] < 0),
                key=lambda u: (len(neighbor_colors[u]), degs[u], -u))
        c = 0
        while c in neighbor_colors[v]:
            c += 1
        color[v] = c
        for w in _bits(masks[v]):
            neighbor_colors[w].add(c)
    return color


def _k_coloring(n: int, masks: list[int], k: int, clique: list[int]):
    """Backtracking k-coloring decision with the clique precolored."""
    if len(clique) > k:
        return None, 0
    color = [-1] * n
    for i, v in enumerate(clique):
        color[v] = i
    nodes = 0

    def options(v):
        used = {color[w] for w in _bits(masks[v]) if color[w] >= 0}
        cap = min(k, max((c for c in color if c >= 0), default=-1) + 2)
        return [c for c in range(cap) if c not in used]

    def rec():
        nonlocal nodes
        nodes += 1
        pick, opts = -1, None
        for v in range(n):
            if color[v] >= 0:
                continue
            o = options(v)
            if opts is None or len(o) < len(opts):
                pick, opts = v, o
                if not o:
                    break
        if pick < 0:
            return True
        for c in opts:
            color[pick] = c
            if rec():
                return True
            color[pick] = -1
        return False

    ok = rec()
    return (color[:] if ok else None), nodes


def _chromatic(n: int, masks: list[int]):
    if n == 0:
        return 0, [], 0
    clique, nodes = _max_clique(n, masks)
    lb = len(clique)
    greedy = _dsatur(n, masks)
    ub = max(greedy) + 1
    if lb == ub:
        return ub, greedy, nodes
    for k in range(lb, ub):
        coloring, extra = _k_coloring(n, masks, k, clique)
        nodes += extra
        if coloring is not None:
            return k, coloring, nodes
    return ub, greedy, nodes


def _edge_coloring_decision(G: Graph, k: int):
    """Proper edge coloring with <= k colors, or None.  Edges at one maximum
    degree vertex are precolored (color permutations are symmetries)."""
    edges = G.sorted_edges()
    if not edges:
        return {}, 0
    if G.max_degree() > k:
        return None, 0
    anchor = max(range(G.n), key=lambda v: (G.degree(v), -v))
    anchor_edges = [(anchor, w) if anchor < w else (w, anchor) for w in G.adj[anchor]]
    assign: dict[Edge, int] = {}
    used: list[int] = [0] * G.n  # color bitmask per vertex
    for i, e in enumerate(sorted(anchor_edges)):
        assign[e] = i
        used[e[0]] |= 1 << i
        used[e[1]] |= 1 << i
    rest = [e for e in edges if e not in assign]
    full = (1 << k) - 1
    nodes = 0

    def rec():
        nonlocal nodes
        nodes += 1
        pick = None
        pick_free = None
        for e in rest:
            if e in assign:
                continue
            free = full & ~(used[e[0]] | used[e[1]])
            cnt = _popcount(free)
            if pick is None or cnt < pick_free[1]:
                pick, pick_free = e, (free, cnt)
                if cnt == 0:
                    break
        if pick is None:
            return True
        free = pick_free[0]
        if free == 0:
            return False
        for c in _bits(free):
            assign[pick] = c
            used[pick[0]] |= 1 << c
            used[pick[1]] |= 1 << c
            if rec():
                return True
            del assign[pick]
            used[pick[0]] &= ~(1 << c)
            used[pick[1]] &= ~(1 << c)
        return False

    ok = rec()
    return (dict(assign) if ok else None), nodes


def _chi_prime(G: Graph):
    m = G.m
    if m == 0:
        return 0, {}, 0
    delta = G.max_degree()
    if delta <= 1:
        return 1, {e: 0 for e in G.edges}, 0
    if m > delta * (G.n // 2):
        # overfull: more edges than delta disjoint near-perfect matchings hold
        return delta + 1, edge_coloring_upper(G), 0
    coloring, nodes = _edge_coloring_decision(G, delta)
    if coloring is not None:
        return delta, coloring, nodes
    return delta + 1, edge_coloring_upper(G), nodes


# ---------------------------------------------------------------------------
# class feasibility predicates and the partition engine
# ---------------------------------------------------------------------------


def _induced_edges(G: Graph, mask: int) -> list[Edge]:
    return [e for e in G.edges if (mask >> e[0]) & 1 and (mask >> e[1]) & 1]


def _mask_orientable(G: Graph, mask: int, s: int) -> bool:
    edges = _induced_edges(G, mask)
    if s == 1:
        uf = UnionFind(G.n)
        return all(uf.add_edge(u, v) for u, v in edges)
    if s == 0:
        return not edges
    heads, _ = orient_with_cap(G.n, edges, s)
    return heads is not None


def _mask_forest(G: Graph, mask: int) -> bool:
    uf = UnionFind(G.n)
    for u, v in _induced_edges(G, mask):
        ru, rv = uf.find(u), uf.find(v)
        if ru == rv:
            return False
        uf.add_edge(u, v)
    return True


def _min_partition(G: Graph, feasible, lb: int = 1):
    """Fewest classes with every class mask accepted by `feasible`.

    Iterative deepening over k; vertices placed in descending degree order;
    only the first empty class is tried (class symmetry).
    Returns (k, class masks, nodes).
    """
    n = G.n
    if n == 0:
        return 0, [], 0
    order = sorted(range(n), key=lambda v: (-G.degree(v), v))
    nodes = 0

    def decide(k):
        nonlocal nodes
        classes = [0] * k

        def rec(i):
            nonlocal nodes
            nodes += 1
            if i == n:
                return True
            v = order[i]
            vb = 1 << v
            seen_empty = False
            for ci in range(k):
                if classes[ci] == 0:
                    if seen_empty:
                        continue
                    seen_empty = True
                if feasible(classes[ci] | vb):
                    classes[ci] |= vb
                    if rec(i + 1):
                        return True
                    classes[ci] &= ~vb
            return False

        return classes if rec(0) else None

    for k in range(max(1, lb), n + 1):
        classes = decide(k)
        if classes is not None:
            return k, [c for c in classes if c], nodes
    raise AssertionError("singleton partition must always succeed")


def _max_feasible_subset(G: Graph, feasible):
    """Largest vertex mask accepted by `feasible` (monotone decreasing)."""
    n = G.n
    order = sorted(range(n), key=lambda v: (G.degree(v), v))
    best = 0
    best_size = 0
    nodes = 0

    def rec(i, mask, size):
        nonlocal best, best_size, nodes
        nodes += 1
        if size + (n - i) <= best_size:
            return
        if i == n:
            if size > best_size:
                best, best_size = mask, size
            return
        v = order[i]
        cand = mask | (1 << v)
        if feasible(cand):
            rec(i + 1, cand, size + 1)
        rec(i + 1, mask, size)

    rec(0, 0, 0)
    return best, nodes


# ---------------------------------------------------------------------------
# classical parameter front end
# ---------------------------------------------------------------------------


def _require(cond: bool, what: str, n: int, cap: int):
    if not cond:
        raise CapExceeded(f"{what}: instance size {n} exceeds cap {cap}")


def classical_parameter(G: Graph, which: str, caps: SolverCaps = DEFAULT_CAPS) -> ParameterResult:
    t0 = time.perf_counter()
    masks = G.adjacency_masks()
    nodes = 0
    if which == "chi":
        _require(G.n <= caps.chi_n, "chi", G.n, caps.chi_n)
        value, coloring, nodes = _chromatic(G.n, masks)
        cert = {"coloring": coloring}
    elif which == "omega":
        _require(G.n <= caps.omega_n, "omega", G.n, caps.omega_n)
        clique, nodes = _max_clique(G.n, masks)
        value, cert = max(len(clique), 1 if G.n else 0), {"clique": clique}
    elif which == "alpha":
        _require(G.n <= caps.alpha_n, "alpha", G.n, caps.alpha_n)
        co = G.complement().adjacency_masks()
        ind, nodes = _max_clique(G.n, co)
        value, cert = max(len(ind), 1 if G.n else 0), {"independent_set": ind}
    elif which == "theta":
        _require(G.n <= caps.theta_n, "theta", G.n, caps.theta_n)
        co = G.complement().adjacency_masks()
        value, coloring, nodes = _chromatic(G.n, co)
        cover = [[] for _ in range(value)]
        for v, c in enumerate(coloring):
            cover[c].append(v)
        cert = {"clique_cover": [sorted(c) for c in cover if c]}
        value = len(cert["clique_cover"])
    elif which == "chi_prime":
        _require(G.m <= caps.chi_prime_edges, "chi_prime", G.m, caps.chi_prime_edges)
        value, coloring, nodes = _chi_prime(G)
        cert = {"edge_coloring": [[list(e), c] for e, c in sorted(coloring.items())]}
    elif which == "arboricity":
        _require(G.n <= caps.arboricity_n, "arboricity", G.n, caps.arboricity_n)
        value, class_masks, nodes = _min_partition(G, lambda mask: _mask_forest(G, mask))
        cert = {"forest_partition": [sorted(_bits(c)) for c in class_masks]}
    elif which == "degeneracy":
        from .poly import degeneracy_order
        value, order = degeneracy_order(G)
        cert = {"elimination_ordering": order}
    else:
        raise ValueError(f"unknown classical parameter {which!r}")
    elapsed = (time.perf_counter() - t0) * 1000
    return ParameterResult(which, 0, value, cert, {"nodes": nodes, "elapsed_ms": elapsed})


# ---------------------------------------------------------------------------
# robust solvers
# ---------------------------------------------------------------------------


def robust_chromatic(G: Graph, s: int = 1, caps: SolverCaps = DEFAULT_CAPS) -> ParameterResult:
    """chi_s by partition search, with partition + selection + coloring certificate."""
    t0 = time.perf_counter()
    if s == 0:
        return classical_parameter(G, "chi", caps)
    _require(G.n <= caps.robust_chi_n, "robust chi", G.n, caps.robust_chi_n)
    value, class_masks, nodes = _min_partition(G, lambda mask: _mask_orientable(G, mask, s))
    classes = [sorted(_bits(c)) for c in class_masks]
    intra = [e for e in G.sorted_edges()
             if any((c >> e[0]) & 1 and (c >> e[1]) & 1 for c in class_masks)]
    sel = selection_from_edge_set(intra, G, s)
    coloring = [0] * G.n
    for ci, c in enumerate(classes):
        for v in c:
            coloring[v] = ci
    cert = {
        "partition": classes,
        "selection": sel.to_pairs(),
        "removed_edges": [list(e) for e in sorted(sel.removed_edges())],
        "coloring": coloring,
    }
    elapsed = (time.perf_counter() - t0) * 1000
    return ParameterResult("chi", s, value, cert,
                           {"nodes": nodes, "elapsed_ms": elapsed})


def iota(G: Graph, caps: SolverCaps = DEFAULT_CAPS) -> ParameterResult:
    """Largest vertex set inducing a quasi-unicyclic subgraph."""
    t0 = time.perf_counter()
    _require(G.n <= caps.iota_n, "iota", G.n, caps.iota_n)
    best, nodes = _max_feasible_subset(G, lambda mask: _mask_orientable(G, mask, 1))
    elapsed = (time.perf_counter() - t0) * 1000
    return ParameterResult("iota", 1, _popcount(best),
                           {"inducing_set": sorted(_bits(best))},
                           {"nodes": nodes, "elapsed_ms": elapsed})


def _alpha_robust(G: Graph, s: int):
    best, nodes = _max_feasible_subset(G, lambda mask: _mask_orientable(G, mask, s))
    vs = sorted(_bits(best))
    F = _induced_edges(G, best)
    return len(vs), {"removed_edges": [list(e) for e in sorted(F)],
                     "independent_set": vs}, nodes


def _cliques_of_size(G: Graph, size: int) -> list[tuple[int, ...]]:
    masks = G.adjacency_masks()
    out: list[tuple[int, ...]] = []

    def extend(partial: list[int], cand: int, start: int):
        if len(partial) == size:
            out.append(tuple(partial))
            return
        for v in _bits(cand):
            if v < start:
                continue
            extend(partial + [v], cand & masks[v], v + 1)

    extend([], (1 << G.n) - 1, 0)
    return out


def _edge_ids(G: Graph) -> tuple[list[Edge], dict[Edge, int]]:
    edges = G.sorted_edges()
    return edges, {e: i for i, e in enumerate(edges)}


class _HitCounter:
    def __init__(self):
        self.nodes = 0


def _hit_all_targets(G: Graph, s: int, target_masks: list[int],
                     counter: _HitCounter):
    """A removable set (edge list) meeting every target edge-mask, or None.

    Branch and bound on the target with the fewest addable edges, with a
    visited-set over partial removals, a coverage-counting prune and a
    greedy edge-disjoint packing prune.
    """
    edges, eid = _edge_ids(G)
    n, m = G.n, len(edges)
    budget = s * n
    if not target_masks:
        return []
    if any(mask == 0 for mask in target_masks):
        return None
    per_edge = [0] * m  # targets containing each edge, as index masks
    for qi, mask in enumerate(target_masks):
        for ei in _bits(mask):
            per_edge[ei] |= 1 << qi
    static_cov = [_popcount(pm) for pm in per_edge]
    max_static = max(static_cov) if static_cov else 0
    all_q = (1 << len(target_masks)) - 1
    visited: set[int] = set()
    uf = UnionFind(n) if s == 1 else None
    scan_cap = 128  # prunes stay sound when scans stop early

    def rec(F: list[Edge], fmask: int, unhit: int):
        counter.nodes += 1
        if unhit == 0:
            return list(F)
        if len(F) >= budget:
            return None
        if fmask in visited:
            return None
        visited.add(fmask)
        if s == 1:
            def addable_test(e):
                mark = uf.checkpoint()
                ok = uf.add_edge(*e)
                uf.rollback(mark)
                return ok
        else:
            def addable_test(e):
                heads, _ = orient_with_cap(n, F + [e], s)
                return heads is not None
        addset = 0
        addable = []
        for ei in range(m):
            if not (fmask >> ei) & 1 and addable_test(edges[ei]):
                addset |= 1 << ei
                addable.append(ei)
        if not addable:
            return None
        left = budget - len(F)
        n_unhit = _popcount(unhit)
        if n_unhit > left * max_static:
            return None
        if n_unhit <= scan_cap:
            maxcov = max(_popcount(per_edge[ei] & unhit) for ei in addable)
            if maxcov == 0 or n_unhit > left * maxcov:
                return None
        # greedy edge-disjoint packing: disjoint unhit targets need
        # pairwise-distinct removed edges (early-capped scan, still sound)
        packed = 0
        taken = 0
        scanned = 0
        for qi in _bits(unhit):
            scanned += 1
            if scanned > scan_cap and packed <= left:
                break
            qm = target_masks[qi]
            if qm & taken:
                continue
            if not (qm & addset):
                return None  # an unhit target with no addable edge
            taken |= qm
            packed += 1
            if packed > left:
                return None
        # branch on an unhit target with few addable edges
        target_opts = None
        scanned = 0
        for qi in _bits(unhit):
            scanned += 1
            opts = list(_bits(target_masks[qi] & addset))
            if target_opts is None or len(opts) < len(target_opts):
                target_opts = opts
                if len(opts) <= 1:
                    break
            if scanned > scan_cap:
                break
        if not target_opts:
            return None
        target_opts.sort(key=lambda ei: -static_cov[ei])
        for ei in target_opts:
            e = edges[ei]
            if s == 1:
                mark = uf.checkpoint()
                uf.add_edge(*e)
            F.append(e)
            res = rec(F, fmask | (1 << ei), unhit & ~per_edge[ei])
            F.pop()
            if s == 1:
                uf.rollback(mark)
            if res is not None:
                return res
        return None

    return rec([], 0, all_q)


def _omega_robust(G: Graph, s: int):
    if G.n == 0:
        return 0, {"removed_edges": [], "clique": []}, 0
    base = classical_parameter(G, "omega")
    omega0 = base.value
    edges, eid = _edge_ids(G)
    n, m = G.n, G.m
    budget = s * n
    counter = _HitCounter()

    def decision(v):
        """A removable set meeting every (v+1)-clique, or None."""
        if v >= omega0:
            return []
        # density: any removed graph keeps >= m - budget edges; above the
        # Turan threshold a (v+1)-clique is unavoidable
        if v >= 1 and (m - budget) > (1 - 1 / v) * n * n / 2:
            return None
        cliques = _cliques_of_size(G, v + 1)
        if not cliques:
            return []
        cmask = []
        for Q in cliques:
            mask = 0
            for a, b in itertools.combinations(Q, 2):
                mask |= 1 << eid[(a, b)]
            cmask.append(mask)
        return _hit_all_targets(G, s, cmask, counter)

    for v in range(1, omega0 + 1):
        F = decision(v)
        if F is not None:
            H = Graph(n, G.edges - set(F))
            clique, extra = _max_clique(n, H.adjacency_masks())
            counter.nodes += extra
            if not clique and H.n:
                clique = [0]
            return v, {"removed_edges": [list(e) for e in sorted(F)],
                       "clique": clique}, counter.nodes
    raise AssertionError("decision at v = omega must succeed")


class _ThetaCache:
    def __init__(self, G: Graph):
        self.G = G
        self.memo: dict[frozenset, tuple[int, list[list[int]]]] = {}

    def theta(self, removed: frozenset[Edge]):
        got = self.memo.get(removed)
        if got is None:
            H = Graph(self.G.n, self.G.edges - removed)
            co = H.complement().adjacency_masks()
            value, coloring, _ = _chromatic(H.n, co)
            cover: list[list[int]] = [[] for _ in range(value)]
            for v, c in enumerate(coloring):
                cover[c].append(v)
            got = (value, [sorted(c) for c in cover if c])
            self.memo[removed] = got
        return got


def _clique_partition_targets(G: Graph, B: int, eid: dict[Edge, int]) -> list[int]:
    """Edge masks of the intra-class edges of every partition of V into
    exactly B cliques of G, reduced to the inclusion-minimal masks.

    theta(G - F) > B holds iff F meets all of them: a cover of G - F is a
    clique partition of G avoiding F, and partitions with fewer classes
    only carry larger edge masks (splitting a class strictly shrinks one).
    """
    n = G.n
    masks: set[int] = set()
    classes: list[list[int]] = []
    class_masks: list[int] = []

    def rec(v: int, mask: int):
        if len(classes) > B or len(classes) + (n - v) < B:
            return
        if v == n:
            if len(classes) == B:
                masks.add(mask)
            return
        for i, cls in enumerate(classes):
            if all(G.has_edge(u, v) for u in cls):
                add = 0
                for u in cls:
                    add |= 1 << eid[(u, v) if u < v else (v, u)]
                cls.append(v)
                rec(v + 1, mask | add)
                cls.pop()
        classes.append([v])
        rec(v + 1, mask)
        classes.pop()

    rec(0, 0)
    ordered = sorted(masks, key=_popcount)
    kept: list[int] = []
    for mask in ordered:
        if not any(km & mask == km for km in kept):
            kept.append(mask)
    return kept


def _theta_robust(G: Graph, s: int):
    """Ascend from greedy incumbents; each improvement step finds a removable
    set defeating every B-class clique partition (a hitting problem over
    the partitions' intra-class edge masks)."""
    n = G.n
    if n == 0:
        return 0, {"removed_edges": [], "clique_cover": []}, 0
    edges, eid = _edge_ids(G)
    counter = _HitCounter()

    def theta_cover(F: frozenset[Edge]):
        H = Graph(n, G.edges - F)
        value, coloring, _ = _chromatic(n, H.complement().adjacency_masks())
        cover: list[list[int]] = [[] for _ in range(value)]
        for v, c in enumerate(coloring):
            cover[c].append(v)
        return value, [sorted(c) for c in cover if c]

    best_F: frozenset[Edge] = frozenset()
    best_val, best_cover = theta_cover(best_F)
    # greedy incumbent: a maximal removable set grown in edge order
    greedy = _maximal_extension(G, s, frozenset())
    val, cover = theta_cover(greedy)
    if val > best_val:
        best_val, best_F, best_cover = val, greedy, cover

    while best_val < n:
        targets = _clique_partition_targets(G, best_val, eid)
        F = _hit_all_targets(G, s, targets, counter)
        if F is None:
            break
        val, cover = theta_cover(frozenset(F))
        assert val > best_val
        best_val, best_F, best_cover = val, frozenset(F), cover
    return best_val, {"removed_edges": [list(e) for e in sorted(best_F)],
                      "clique_cover": best_cover}, counter.nodes


def _min_max_degree(G: Graph, s: int):
    """(D*, witness F): minimum over removable F of max degree of G - F."""
    n, m = G.n, G.m
    if m == 0:
        return 0, [], 0
    budget = s * n
    degs = [G.degree(v) for v in range(n)]
    lo = max(0, min(degs) - 2 * s)
    if m > budget:
        lo = max(lo, -(-(2 * (m - budget)) // n))
    nodes = 0

    def decision(v):
        nonlocal nodes
        visited: set[frozenset] = set()

        def residual(F, x):
            return degs[x] - sum(1 for e in F if x in e)

        def rec(F: frozenset[Edge]):
            nonlocal nodes
            nodes += 1
            if F in visited:
                return None
            visited.add(F)
            over = [(residual(F, x) - v, x) for x in range(n) if residual(F, x) > v]
            if not over:
                return F
            deficit = sum(d for d, _ in over)
            if len(F) + -(-deficit // 2) > budget:
                return None
            over.sort(reverse=True)
            _, x = over[0]
            cand = []
            for w in G.adj[x]:
                e = (x, w) if x < w else (w, x)
                if e in F:
                    continue
                ok, _ = _try_add(F, e)
                if ok:
                    cand.append(e)
            if len(cand) < residual(F, x) - v:
                return None
            for e in cand:
                res = rec(F | {e})
                if res is not None:
                    return res
            return None

        def _try_add(F, e):
            if s == 1:
                uf = UnionFind(n)
                return all(uf.add_edge(a, b) for a, b in list(F) + [e]), None
            heads, _ = orient_with_cap(n, list(F) + [e], s)
            return heads is not None, None

        return rec(frozenset())

    v = lo
    while True:
        F = decision(v)
        if F is not None:
            return v, sorted(F), nodes
        v += 1


def _chi_prime_robust(G: Graph, s: int):
    n, m = G.n, G.m
    if m == 0:
        return 0, {"removed_edges": [], "edge_coloring": []}, 0
    dstar, F0, nodes = _min_max_degree(G, s)
    if dstar == 0:
        # some removable set deletes every edge; F0 witnesses it
        assert Graph(n, G.edges - frozenset(F0)).m == 0
        return 0, {"removed_edges": [list(e) for e in sorted(F0)],
                   "edge_coloring": []}, nodes

    # hunt for a maximal removable set whose removal is D*-edge-chromatic
    edges = G.sorted_edges()
    degs = [G.degree(v) for v in range(n)]
    found: dict | None = None

    def leaf_test(F: frozenset[Edge]):
        nonlocal nodes
        H = Graph(n, G.edges - F)
        if H.max_degree() > dstar:
            return None
        if H.m > dstar * (n // 2):
            return None
        coloring, extra = _edge_coloring_decision(H, dstar)
        nodes += extra
        if coloring is None:
            return None
        return {"removed_edges": [list(e) for e in sorted(F)],
                "edge_coloring": [[list(e), c] for e, c in sorted(coloring.items())]}

    uf = UnionFind(n) if s == 1 else None
    current: list[Edge] = []

    def try_push(e):
        if s == 1:
            mark = uf.checkpoint()
            if uf.add_edge(*e):
                return mark
            uf.rollback(mark)
            return None
        heads, _ = orient_with_cap(n, current + [e], s)
        return -1 if heads is not None else None

    def addable(F_set, e):
        if s == 1:
            mark = uf.checkpoint()
            ok = uf.add_edge(*e)
            uf.rollback(mark)
            return ok
        heads, _ = orient_with_cap(n, current + [e], s)
        return heads is not None

    def dfs(i: int):
        nonlocal found, nodes
        if found is not None:
            return
        nodes += 1
        # degree prune: every vertex must still be reducible to <= dstar
        for x in range(n):
            have = sum(1 for e in current if x in e)
            future = sum(1 for j in range(i, m) if x in edges[j])
            if degs[x] - have - future > dstar:
                return
        if i == m:
            F = frozenset(current)
            for e in edges:
                if e not in F and addable(F, e):
                    return  # not maximal
            found = leaf_test(F)
            return
        e = edges[i]
        mark = try_push(e)
        if mark is not None:
            current.append(e)
            dfs(i + 1)
            current.pop()
            if s == 1:
                uf.rollback(mark)
        dfs(i + 1)

    dfs(0)
    if found is not None:
        return dstar, found, nodes
    F = _maximal_extension(G, s, frozenset(F0))
    H = Graph(n, G.edges - F)
    coloring = edge_coloring_upper(H)
    used = len(set(coloring.values()))
    assert used <= dstar + 1
    return dstar + 1, {"removed_edges": [list(e) for e in sorted(F)],
                       "edge_coloring": [[list(e), c] for e, c in sorted(coloring.items())]}, nodes


def _maximal_extension(G: Graph, s: int, F: frozenset[Edge]) -> frozenset[Edge]:
    out = set(F)
    for e in G.sorted_edges():
        if e in out:
            continue
        trial = sorted(out | {e})
        if s == 1:
            uf = UnionFind(G.n)
            if all(uf.add_edge(a, b) for a, b in trial):
                out.add(e)
        else:
            heads, _ = orient_with_cap(G.n, trial, s)
            if heads is not None:
                out.add(e)
    return frozenset(out)


# ---------------------------------------------------------------------------
# robust front end: exact, oracle and maximal-enumeration tiers
# ---------------------------------------------------------------------------


def _classical_eval(G: Graph, which: str):
    masks = G.adjacency_masks()
    if which == "chi":
        v, col, _ = _chromatic(G.n, masks)
        return v, {"coloring": col}
    if which == "omega":
        c, _ = _max_clique(G.n, masks)
        return max(len(c), 1 if G.n else 0), {"clique": c}
    if which == "alpha":
        c, _ = _max_clique(G.n, G.complement().adjacency_masks())
        return max(len(c), 1 if G.n else 0), {"independent_set": c}
    if which == "theta":
        v, col, _ = _chromatic(G.n, G.complement().adjacency_masks())
        cover: list[list[int]] = [[] for _ in range(v)]
        for u, c in enumerate(col):
            cover[c].append(u)
        cover = [sorted(c) for c in cover if c]
        return len(cover), {"clique_cover": cover}
    if which == "chi_prime":
        v, col, _ = _chi_prime(G)
        return v, {"edge_coloring": [[list(e), c] for e, c in sorted(col.items())]}
    raise ValueError(f"unknown robust parameter {which!r}")


_MINIMIZED = {"chi": True, "omega": True, "chi_prime": True, "alpha": False, "theta": False}


def oracle_robust(G: Graph, which: str, s: int,
                  caps: SolverCaps = DEFAULT_CAPS) -> ParameterResult:
    """Exhaustive enumeration over every removable set; the test oracle."""
    t0 = time.perf_counter()
    _require(G.m <= caps.oracle_edges, "oracle", G.m, caps.oracle_edges)
    minimize = _MINIMIZED[which]
    best = None
    count = 0
    for F in enumerate_removable_sets(G, s, "all", edge_cap=caps.oracle_edges):
        count += 1
        H = Graph(G.n, G.edges - F)
        val, cert = _classical_eval(H, which)
        if best is None or (val < best[0] if minimize else val > best[0]):
            best = (val, F, cert)
    val, F, cert = best
    cert = dict(cert)
    cert["removed_edges"] = [list(e) for e in sorted(F)]
    elapsed = (time.perf_counter() - t0) * 1000
    return ParameterResult(which, s, val, cert,
                           {"nodes": count, "elapsed_ms": elapsed})


def robust_via_maximal(G: Graph, which: str, s: int,
                       caps: SolverCaps = DEFAULT_CAPS) -> ParameterResult:
    """Generic solver over inclusion-maximal removable sets (monotonicity:
    removing more edges never hurts the objective)."""
    t0 = time.perf_counter()
    minimize = _MINIMIZED[which]
    best = None
    count = 0
    for F in enumerate_removable_sets(G, s, "maximal"):
        count += 1
        H = Graph(G.n, G.edges - F)
        val, cert = _classical_eval(H, which)
        if best is None or (val < best[0] if minimize else val > best[0]):
            best = (val, F, cert)
    val, F, cert = best
    cert = dict(cert)
    cert["removed_edges"] = [list(e) for e in sorted(F)]
    elapsed = (time.perf_counter() - t0) * 1000
    return ParameterResult(which, s, val, cert,
                           {"nodes": count, "elapsed_ms": elapsed})


def robust_parameter(G: Graph, which: str, s: int, engine: str = "exact",
                     caps: SolverCaps = DEFAULT_CAPS) -> ParameterResult:
    if which not in ROBUST:
        raise ValueError(f"unknown robust parameter {which!r}")
    if s < 0:
        raise ValueError("budget must be non-negative")
    if s == 0:
        return classical_parameter(G, which, caps)
    if engine == "oracle":
        return oracle_robust(G, which, s, caps)
    if engine == "maximal":
        return robust_via_maximal(G, which, s, caps)
    if engine != "exact":
        raise ValueError(f"unknown engine {engine!r}")
    if which == "chi":
        return robust_chromatic(G, s, caps)
    _require(G.n <= caps.robust_n, f"robust {which}", G.n, caps.robust_n)
    t0 = time.perf_counter()
    if which == "alpha":
        value, cert, nodes = _alpha_robust(G, s)
    elif which == "omega":
        value, cert, nodes = _omega_robust(G, s)
    elif which == "theta":
        value, cert, nodes = _theta_robust(G, s)
    else:
        value, cert, nodes = _chi_prime_robust(G, s)
    elapsed = (time.perf_counter() - t0) * 1000
    return ParameterResult(which, s, value, cert,
                           {"nodes": nodes, "elapsed_ms": elapsed})


# ---------------------------------------------------------------------------
# canonical forms
# ---------------------------------------------------------------------------


def canonical_form(G: Graph, cap: int | None = None) -> str:
    """Label string equal for two graphs iff they are isomorphic.

    Minimal adjacency bit string over all vertex orderings, searched with
    row-wise greedy pruning and twin elimination.  Sized for n <= 10.
    """
    n = G.n
    limit = cap if cap is not None else DEFAULT_CAPS.canonical_n
    if n > limit:
        raise CapExceeded(f"canonical_form: {n} exceeds cap {limit}")
    if n == 0:
        return "n0:"
    masks = G.adjacency_masks()
    best: list[int] | None = None
    perm: list[int] = []
    rows: list[int] = []
    used = 0

    def candidates():
        cands = []
        for v in range(n):
            if (used >> v) & 1:
                continue
            row = 0
            for j, u in enumerate(perm):
                if (masks[v] >> u) & 1:
                    row |= 1 << j
            cands.append((row, v))
        if not cands:
            return []
        best_row = min(r for r, _ in cands)
        chosen = [v for r, v in cands if r == best_row]
        # drop twins: interchangeable vertices lead to identical completions
        kept: list[int] = []
        for v in chosen:
            dup = False
            for u in kept:
                strip = ~((1 << u) | (1 << v))
                if masks[u] & strip == masks[v] & strip:
                    dup = True
                    break
            if not dup:
                kept.append(v)
        return [(best_row, v) for v in kept]

    def rec():
        nonlocal best, used
        pos = len(perm)
        if pos == n:
            if best is None or rows < best:
                best = rows[:]
            return
        for row, v in candidates():
            if best is not None:
                prefix = rows + [row]
                if prefix > best[:pos + 1]:
                    continue
            perm.append(v)
            rows.append(row)
            used |= 1 << v
            rec()
            used &= ~(1 << v)
            rows.pop()
            perm.pop()

    rec()
    payload = "".join(format(r, "x") + "." for r in best)
    return f"n{n}:{payload}"
