"""Standalone re-validation of parameter certificates.

A certificate never proves optimality; it proves achievement: the value is
realized by the exhibited structure (selection plus coloring / clique /
independent set / cover / edge coloring).  Optimality is the solvers'
contract, cross-checked in the test suite against the brute-force oracle.
"""

from __future__ import annotations

import json
import sys

from .graph import Graph
from .selection import UnionFind, is_removable


class CertificateError(ValueError):
    pass


def _edges(cert, key="removed_edges"):
    return frozenset(tuple(sorted(e)) for e in cert.get(key, []))


def _check_removed(G: Graph, cert: dict, s: int) -> frozenset:
    F = _edges(cert)
    if s == 0:
        if F:
            raise CertificateError("classical certificate removes edges")
        return F
    ok, _ = is_removable(F, G, s)
    if not ok:
        raise CertificateError(f"removed set is not removable at budget {s}")
    return F


def validate_result(G: Graph, result: dict) -> None:
    """Raise CertificateError unless the certificate achieves the value."""
    param = result["parameter"]
    s = result.get("s", 0)
    value = result["value"]
    cert = result["certificate"]

    if param == "chi":
        F = _check_removed(G, cert, s) if s else frozenset()
        coloring = cert["coloring"]
        if len(coloring) != G.n:
            raise CertificateError("coloring length mismatch")
        if G.n and len(set(coloring)) > value:
            raise CertificateError("coloring uses more colors than the value")
        for u, v in G.edges:
            if (u, v) not in F and coloring[u] == coloring[v]:
                raise CertificateError(f"surviving edge ({u},{v}) monochromatic")
        if s and "partition" in cert:
            seen: set[int] = set()
            for cls in cert["partition"]:
                seen.update(cls)
            if seen != set(range(G.n)):
                raise CertificateError("partition does not cover the vertices")
    elif param == "omega":
        F = _check_removed(G, cert, s) if s else frozenset()
        clique = cert["clique"]
        if len(clique) != value:
            raise CertificateError("clique size differs from the value")
        for i, u in enumerate(clique):
            for v in clique[i + 1:]:
                e = (u, v) if u < v else (v, u)
                if e not in G.edges or e in F:
                    raise CertificateError(f"clique pair ({u},{v}) is not a surviving edge")
    elif param == "alpha":
        F = _check_removed(G, cert, s) if s else frozenset()
        S = cert["independent_set"]
        if len(S) != value:
            raise CertificateError("independent set size differs from the value")
        for i, u in enumerate(S):
            for v in S[i + 1:]:
                e = (u, v) if u < v else (v, u)
                if e in G.edges and e not in F:
                    raise CertificateError(f"pair ({u},{v}) stays adjacent")
    elif param == "theta":
        F = _check_removed(G, cert, s) if s else frozenset()
        cover = cert["clique_cover"]
        if cover is None:
            raise CertificateError("certificate omits the clique cover")
        if len(cover) != value:
            raise CertificateError("cover size differs from the value")
        seen: set[int] = set()
        for cls in cover:
            for u in cls:
                if u in seen:
                    raise CertificateError(f"vertex {u} covered twice")
                seen.add(u)
            for i, u in enumerate(cls):
                for v in cls[i + 1:]:
                    e = (u, v) if u < v else (v, u)
                    if e not in G.edges or e in F:
                        raise CertificateError(f"cover class pair ({u},{v}) not adjacent after removal")
        if seen != set(range(G.n)):
            raise CertificateError("cover misses vertices")
    elif param == "chi_prime":
        F = _check_removed(G, cert, s) if s else frozenset()
        coloring = {tuple(sorted(e)): c for e, c in cert["edge_coloring"]}
        survivors = G.edges - F
        if set(coloring) != set(survivors):
            raise CertificateError("edge coloring does not match the surviving edges")
        if len(set(coloring.values())) > value:
            raise CertificateError("edge coloring uses more colors than the value")
        for v in range(G.n):
            seen_colors = set()
            for w in G.adj[v]:
                e = (v, w) if v < w else (w, v)
                if e in coloring:
                    if coloring[e] in seen_colors:
                        raise CertificateError(f"edge colors clash at vertex {v}")
                    seen_colors.add(coloring[e])
    elif param == "arboricity":
        classes = cert["forest_partition"]
        seen = set()
        for cls in classes:
            seen.update(cls)
            uf = UnionFind(G.n)
            cset = set(cls)
            for u, v in G.edges:
                if u in cset and v in cset:
                    if uf.find(u) == uf.find(v):
                        raise CertificateError("forest class contains a cycle")
                    uf.add_edge(u, v)
        if seen != set(range(G.n)) or len(classes) != value:
            raise CertificateError("forest partition invalid")
    elif param == "degeneracy":
        order = cert["elimination_ordering"]
        if sorted(order) != list(range(G.n)):
            raise CertificateError("ordering is not a permutation")
        pos = {v: i for i, v in enumerate(order)}
        worst = 0
        for v in range(G.n):
            worst = max(worst, sum(1 for w in G.adj[v] if pos[w] < pos[v]))
        if worst > value:
            raise CertificateError("ordering exceeds the claimed degeneracy")
    elif param == "iota":
        W = set(cert["inducing_set"])
        if len(W) != value:
            raise CertificateError("inducing set size differs from the value")
        uf = UnionFind(G.n)
        for u, v in G.edges:
            if u in W and v in W:
                if not uf.add_edge(u, v):
                    raise CertificateError("induced subgraph is not quasi-unicyclic")
    else:
        raise CertificateError(f"unknown parameter {param!r}")


def validate_result_json(G: Graph, text: str) -> None:
    validate_result(G, json.loads(text))


def _main(argv) -> int:
    if len(argv) != 3:
        print("usage: python -m robusta.certify RESULT.json GRAPH.{col,edges}",
              file=sys.stderr)
        return 2
    from .graphio import read_graph_file
    fmt = "dimacs" if argv[2].endswith(".col") else "edgelist"
    G, _ = read_graph_file(argv[2], fmt)
    with open(argv[1], "r", encoding="utf-8") as fh:
        data = json.load(fh)
    results = data if isinstance(data, list) else [data]
    for r in results:
        validate_result(G, r)
    print(f"{len(results)} certificate(s) valid")
    return 0


if __name__ == "__main__":
    raise SystemExit(_main(sys.argv))
