"""Cayley graphs on Sym_n generated by T_n and the block transposition graph.

The canonical block transposition graph uses the right-invariant rule:
``u ~ v`` iff ``u⁻¹∘v`` is a block transposition.  Vertices are indexed
0..V-1 and ``Graph.legend`` maps each index to its domain object.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Literal, Sequence, TextIO

import numpy as np

from .cuts import (
    CutPoints,
    PartitionClass,
    as_permutation,
    classify,
    cuts_from_permutation,
    enumerate_tn,
)
from .perm import Permutation, compose, inverse, perm_array, rank_rows
from .toric import Convention

DEFAULT_MAX_CAYLEY_N = 7


class BoundError(ValueError):
    """A size guard refused to build or search an object."""


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    legend: tuple[Hashable, ...]
    neighbors: tuple[tuple[int, ...], ...]
    name: str = field(default="G")

    @classmethod
    def from_edges(cls, n: int, legend: Sequence[Hashable], edges: Iterable[tuple[int, int]],
                   name: str = "G") -> Graph:
        nbrs: list[set[int]] = [set() for _ in legend]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        if len(set(legend)) != len(legend):
            raise ValueError("legend must be injective")
        return cls(n, tuple(legend), tuple(tuple(sorted(s)) for s in nbrs), name)

    @property
    def vertex_count(self) -> int:
        return len(self.legend)

    @cached_property
    def index(self) -> dict[Hashable, int]:
        return {label: v for v, label in enumerate(self.legend)}

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(nb) for nb in self.neighbors)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nb in enumerate(self.neighbors) for v in nb if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(nb) for nb in self.neighbors) // 2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n, self.legend, self.neighbors) == (other.n, other.legend, other.neighbors)

    def __hash__(self) -> int:
        return hash((self.n, self.legend, self.neighbors))


def complete_graph(k: int) -> Graph:
    return Graph.from_edges(0, list(range(k)), ((u, v) for u in range(k) for v in range(u + 1, k)),
                            name=f"K{k}")


# -- construction ---------------------------------------------------------------


def is_bt_edge(u: CutPoints, v: CutPoints, convention: Convention = "right") -> bool:
    pu, pv = as_permutation(u), as_permutation(v)
    if convention == "right":
        q = compose(inverse(pu), pv)
    else:
        q = compose(pv, inverse(pu))
    return cuts_from_permutation(q) is not None


def build_bt_graph(n: int, convention: Convention = "right") -> Graph:
    """The block transposition graph on vertex set T_n."""
    vertices = enumerate_tn(n)
    perms = [as_permutation(c) for c in vertices]
    invs = [inverse(p) for p in perms]
    edges = []
    for a in range(len(vertices)):
        for b in range(a + 1, len(vertices)):
            q = compose(invs[a], perms[b]) if convention == "right" else compose(perms[b], invs[a])
            if cuts_from_permutation(q) is not None:
                edges.append((a, b))
    name = "BTbar" if convention == "right" else "BT"
    return Graph.from_edges(n, vertices, edges, name=f"{name}{n}")


def build_cayley(n: int, convention: Convention = "left",
                 max_n: int = DEFAULT_MAX_CAYLEY_N) -> Graph:
    """Cay(Sym_n, T_n); vertex v is the permutation of lexicographic rank v.

    ``left``: π ~ σ∘π, ``right``: π ~ π∘σ.
    """
    if n > max_n:
        raise BoundError(f"Cayley graph for n={n} exceeds bound max_n={max_n}")
    if n < 2:
        raise ValueError("Cayley graph needs n >= 2")
    P = perm_array(n)
    gens = [np.array(as_permutation(c).zero_based(), dtype=np.int8) for c in enumerate_tn(n)]
    cols = []
    for s in gens:
        moved = s[P] if convention == "left" else P[:, s]
        cols.append(rank_rows(moved))
    nbr = np.sort(np.stack(cols, axis=1), axis=1)
    legend = tuple(Permutation.from_zero_based(row) for row in P.tolist())
    neighbors = tuple(tuple(row) for row in nbr.tolist())
    return Graph(n, legend, neighbors, name=f"Cay{n}{convention[0]}")


# -- structure ------------------------------------------------------------------


def degree_report(g: Graph) -> dict[int, int]:
    """Degree -> number of vertices with that degree."""
    report: dict[int, int] = {}
    for nb in g.neighbors:
        report[len(nb)] = report.get(len(nb), 0) + 1
    return dict(sorted(report.items()))


def is_k_regular(g: Graph, k: int) -> bool:
    return all(len(nb) == k for nb in g.neighbors)


def vertices_of_class(g: Graph, *classes: PartitionClass) -> list[int]:
    return [v for v, c in enumerate(g.legend) if classify(c) in classes]


def bipartite_degrees(g: Graph, part_a: Iterable[int], part_b: Iterable[int]) -> dict[int, int]:
    """Cross-degree of every vertex of both parts, counting only A-B edges."""
    a, b = set(part_a), set(part_b)
    if a & b:
        raise ValueError(f"parts overlap in {sorted(a & b)}")
    out = {}
    for v in sorted(a | b):
        other = b if v in a else a
        out[v] = sum(1 for w in g.neighbors[v] if w in other)
    return out


def common_neighbors(g: Graph, u: int, v: int) -> frozenset[int]:
    return g.adjacency[u] & g.adjacency[v]


def maximal_two_cliques(g: Graph) -> list[tuple[int, int]]:
    """Edges whose endpoints have no common neighbour."""
    return [(u, v) for u, v in g.edges() if not common_neighbors(g, u, v)]


def is_clique(g: Graph, vertices: Sequence[int]) -> bool:
    vs = list(vertices)
    return all(g.has_edge(vs[a], vs[b]) for a in range(len(vs)) for b in range(a + 1, len(vs)))


@dataclass(frozen=True)
class CliqueEdge:
    m: int
    endpoints: tuple[CutPoints, CutPoints]


def expected_em_edges(n: int) -> list[CliqueEdge]:
    """The closed-form edges e_0, ..., e_n of the maximal 2-cliques."""
    if n < 4:
        raise ValueError(f"e_m edges need n >= 4, got n={n}")
    s = lambda i, j, k: CutPoints(n, i, j, k)  # noqa: E731
    edges = [CliqueEdge(l, (s(l, l + 1, l + 3), s(l, l + 2, l + 3))) for l in range(n - 2)]
    edges.append(CliqueEdge(n - 2, (s(0, n - 2, n - 1), s(0, n - 2, n))))
    edges.append(CliqueEdge(n - 1, (s(1, n - 1, n), s(0, 1, n - 1))))
    edges.append(CliqueEdge(n, (s(0, 2, n), s(1, 2, n))))
    return edges


def vertex_set_V(n: int) -> list[CutPoints]:
    """Endpoints of all e_m, deduplicated, in lexicographic order."""
    return sorted({c for e in expected_em_edges(n) for c in e.endpoints})


def induced(g: Graph, vertices: Iterable[int], name: str | None = None) -> Graph:
    keep = sorted(set(vertices))
    pos = {v: a for a, v in enumerate(keep)}
    edges = [(pos[u], pos[v]) for u in keep for v in g.neighbors[u] if v in pos and u < v]
    return Graph.from_edges(g.n, [g.legend[v] for v in keep], edges, name=name or f"{g.name}_sub")


def build_btv_graph(n: int) -> Graph:
    g = build_bt_graph(n)
    return induced(g, (g.index[c] for c in vertex_set_V(n)), name=f"BTbarV{n}")


def hamiltonian_cycle_V(n: int) -> list[CutPoints]:
    """Explicit Hamiltonian cycle of the graph induced on V, starting at σ(0,2,3)."""
    if n < 5:
        raise ValueError(f"Hamiltonian cycle construction needs n >= 5, got n={n}")
    s = lambda i, j, k: CutPoints(n, i, j, k)  # noqa: E731
    path = []
    for l in range(n - 3):
        path += [s(l, l + 2, l + 3), s(l, l + 1, l + 3)]
    path += [
        s(n - 3, n - 1, n), s(n - 3, n - 2, n), s(0, n - 2, n), s(0, n - 2, n - 1),
        s(0, 1, n - 1), s(1, n - 1, n), s(1, 2, n), s(0, 2, n),
    ]
    return path


def validate_cycle(g: Graph, cycle: Sequence[Hashable]) -> list[str]:
    """Problems found with ``cycle`` as a Hamiltonian cycle of ``g`` (empty if valid)."""
    problems = []
    idx = []
    for label in cycle:
        if label not in g.index:
            problems.append(f"{label} is not a vertex")
        else:
            idx.append(g.index[label])
    if problems:
        return problems
    if len(set(idx)) != len(idx):
        problems.append("a vertex is repeated")
    if len(idx) != g.vertex_count:
        problems.append(f"cycle has {len(idx)} vertices, graph has {g.vertex_count}")
    for a, b in zip(idx, idx[1:] + idx[:1]):
        if not g.has_edge(a, b):
            problems.append(f"{g.legend[a]} -- {g.legend[b]} is not an edge")
    return problems


# -- export ---------------------------------------------------------------------


def label_text(label: Hashable) -> str:
    if isinstance(label, Permutation):
        return f"[{label}]"
    return str(label)


ExportFormat = Literal["edges", "dot", "json"]


def export(g: Graph, fmt: ExportFormat, sink: TextIO) -> None:
    edges = g.edges()
    if fmt == "edges":
        for v, label in enumerate(g.legend):
            sink.write(f"# legend: {v} {label_text(label)}\n")
        for u, v in edges:
            sink.write(f"{u} {v}\n")
    elif fmt == "dot":
        sink.write("graph G {\n")
        for v, label in enumerate(g.legend):
            sink.write(f'  {v} [label="{label_text(label)}"];\n')
        for u, v in edges:
            sink.write(f"  {u} -- {v};\n")
        sink.write("}\n")
    elif fmt == "json":
        doc = {
            "n": g.n,
            "vertices": [label_text(label) for label in g.legend],
            "edges": [[u, v] for u, v in edges],
        }
        sink.write(json.dumps(doc) + "\n")
    else:
        raise ValueError(f"unknown format {fmt!r}")


def cayley_size(n: int) -> int:
    return math.factorial(n)
