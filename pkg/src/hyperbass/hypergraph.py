"""k-partite hypergraphs, directed hypergraphs, digraphs, and matchings.

Vertex names are stable strings; every linear order used downstream (parts,
hyperedge lists, the directed vertex order) derives from input order here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .codes import BinaryMatrix
from .poly import WeightSeries


@dataclass(frozen=True)
class KEdge:
    verts: tuple[str, ...]
    weight: Fraction


class KPartiteHypergraph:
    """Hypergraph on k disjoint ordered parts; every edge takes one vertex per part."""

    def __init__(self, parts: Sequence[Sequence[str]],
                 edges: Sequence[tuple[Sequence[str], Fraction | int]]):
        self.k = len(parts)
        self.parts = [list(p) for p in parts]
        self.part_index: list[dict[str, int]] = []
        seen: set[str] = set()
        for part in self.parts:
            idx = {}
            for i, name in enumerate(part):
                if name in seen:
                    raise ValueError(f"duplicate vertex name {name!r}")
                seen.add(name)
                idx[name] = i
            self.part_index.append(idx)
        self.edges: list[KEdge] = []
        for verts, weight in edges:
            verts = tuple(verts)
            if len(verts) != self.k:
                raise ValueError("edge must take one vertex per part")
            for p, v in enumerate(verts):
                if v not in self.part_index[p]:
                    raise ValueError(f"vertex {v!r} not in part {p + 1}")
            self.edges.append(KEdge(verts, Fraction(weight)))
        # global vertex ids: parts concatenated in order
        self.offsets = []
        total = 0
        for part in self.parts:
            self.offsets.append(total)
            total += len(part)
        self.n_vertices = total
        self.edge_masks = []
        for e in self.edges:
            mask = 0
            for p, v in enumerate(e.verts):
                mask |= 1 << (self.offsets[p] + self.part_index[p][v])
            self.edge_masks.append(mask)

    def global_id(self, part: int, name: str) -> int:
        return self.offsets[part] + self.part_index[part][name]

    def vertex_names(self) -> list[str]:
        return [v for part in self.parts for v in part]


@dataclass(frozen=True)
class Matching:
    edge_indices: tuple[int, ...]

    @staticmethod
    def of(indices: Iterable[int]) -> "Matching":
        return Matching(tuple(sorted(set(indices))))

    def __len__(self) -> int:
        return len(self.edge_indices)


def is_almost_disjoint(H: KPartiteHypergraph) -> bool:
    """True iff every pair of distinct edges shares at most one vertex."""
    for i in range(len(H.edges)):
        vi = set(H.edges[i].verts)
        for j in range(i + 1, len(H.edges)):
            if len(vi.intersection(H.edges[j].verts)) > 1:
                return False
    return True


def is_matching(H: KPartiteHypergraph, M: Matching) -> bool:
    mask = 0
    for e in M.edge_indices:
        em = H.edge_masks[e]
        if mask & em:
            return False
        mask |= em
    return True


def is_perfect(H: KPartiteHypergraph, M: Matching) -> bool:
    mask = 0
    for e in M.edge_indices:
        em = H.edge_masks[e]
        if mask & em:
            return False
        mask |= em
    return mask == (1 << H.n_vertices) - 1


def matching_weight(H: KPartiteHypergraph, M: Matching) -> Fraction:
    return sum((H.edges[e].weight for e in M.edge_indices), Fraction(0))


def enumerate_perfect_matchings(H: KPartiteHypergraph) -> Iterator[Matching]:
    """All perfect matchings, deterministically.

    Branches on the least-id uncovered vertex and tries its edges in input
    order, so the output order is a function of the input alone.
    """
    sizes = {len(p) for p in H.parts}
    if len(sizes) > 1:
        raise ValueError("parts must have equal sizes")
    full = (1 << H.n_vertices) - 1
    edges_at = [[] for _ in range(H.n_vertices)]
    for ei, mask in enumerate(H.edge_masks):
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            edges_at[v].append(ei)
            m &= m - 1

    chosen: list[int] = []

    def extend(covered: int) -> Iterator[Matching]:
        if covered == full:
            yield Matching(tuple(sorted(chosen)))
            return
        v = (~covered & (covered + 1 if False else -1)).bit_length()  # placeholder
        # least uncovered vertex
        v = 0
        while covered >> v & 1:
            v += 1
        for ei in edges_at[v]:
            em = H.edge_masks[ei]
            if covered & em:
                continue
            chosen.append(ei)
            yield from extend(covered | em)
            chosen.pop()

    yield from extend(0)


def incidence_matrix(H: KPartiteHypergraph) -> BinaryMatrix:
    """V x E matrix over F2, rows in global vertex order, columns in edge order."""
    bits = [0] * H.n_vertices
    for j, mask in enumerate(H.edge_masks):
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            bits[v] |= 1 << j
            m &= m - 1
    return BinaryMatrix(H.n_vertices, len(H.edges), tuple(bits))


def matching_enumerator(H: KPartiteHypergraph,
                        weights: Sequence[Fraction | int] | None = None
                        ) -> WeightSeries:
    """Sum of z^{total weight} over perfect matchings of H."""
    if weights is None:
        ws = [e.weight for e in H.edges]
    else:
        ws = [Fraction(w) for w in weights]
    terms: dict[Fraction, int] = {}
    for M in enumerate_perfect_matchings(H):
        q = sum((ws[e] for e in M.edge_indices), Fraction(0))
        terms[q] = terms.get(q, 0) + 1
    return WeightSeries(terms)


@dataclass(frozen=True)
class DirectedEdge:
    verts: tuple[int, ...]
    weight: Fraction
    sign: int


class DirectedHypergraph:
    """Ordered directed hyperedges over a linearly ordered vertex list.

    Each hyperedge is an ordered tuple of pairwise distinct vertex indices;
    the sign field carries entry negations picked up along the pipeline.
    """

    def __init__(self, vertices: Sequence[str],
                 edges: Sequence[tuple[Sequence[int], Fraction | int, int]]):
        self.vertices = list(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex name")
        self.edges: list[DirectedEdge] = []
        arity = None
        for verts, weight, sign in edges:
            verts = tuple(verts)
            if arity is None:
                arity = len(verts)
            elif len(verts) != arity:
                raise ValueError("mixed hyperedge arities")
            if len(set(verts)) != len(verts):
                raise ValueError("hyperedge vertices must be distinct")
            if any(not 0 <= v < len(self.vertices) for v in verts):
                raise ValueError("vertex index out of range")
            if sign not in (1, -1):
                raise ValueError("sign must be +-1")
            self.edges.append(DirectedEdge(verts, Fraction(weight), sign))
        self.arity = arity if arity is not None else 4

    def with_signs(self, signs: Sequence[int]) -> "DirectedHypergraph":
        return DirectedHypergraph(
            self.vertices,
            [(e.verts, e.weight, s) for e, s in zip(self.edges, signs)])

    def negated(self) -> "DirectedHypergraph":
        return self.with_signs([-e.sign for e in self.edges])


@dataclass(frozen=True)
class Digraph:
    """Plain digraph; arcs are ordered pairs of vertex indices, no loops."""

    vertices: tuple[str, ...]
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for u, v in self.arcs:
            if u == v:
                raise ValueError("loop arc")

    @staticmethod
    def from_names(vertices: Sequence[str],
                   arcs: Sequence[Sequence[str]]) -> "Digraph":
        index = {name: i for i, name in enumerate(vertices)}
        if len(index) != len(vertices):
            raise ValueError("duplicate vertex name")
        return Digraph(tuple(vertices),
                       tuple((index[u], index[v]) for u, v in arcs))


# ---------------------------------------------------------------------------
# JSON interchange

def load_hypergraph_json(data: dict) -> tuple[KPartiteHypergraph, Matching | None]:
    parts = [[str(v) for v in part] for part in data["parts"]]
    if int(data.get("k", len(parts))) != len(parts):
        raise ValueError("k does not match number of parts")
    edges = [(tuple(str(v) for v in e["verts"]), Fraction(e.get("weight", 0)))
             for e in data["edges"]]
    H = KPartiteHypergraph(parts, edges)
    matching = None
    if "matching" in data and data["matching"] is not None:
        matching = Matching.of(int(i) for i in data["matching"])
    return H, matching


def dump_hypergraph_json(H: KPartiteHypergraph, matching: Matching | None = None,
                         signs: Sequence[int] | None = None) -> dict:
    edges = []
    for i, e in enumerate(H.edges):
        rec: dict = {"verts": list(e.verts), "weight": str(e.weight)}
        if signs is not None:
            rec["sign"] = signs[i]
        edges.append(rec)
    out: dict = {"k": H.k, "parts": [list(p) for p in H.parts], "edges": edges}
    if matching is not None:
        out["matching"] = list(matching.edge_indices)
    return out


def load_digraph_json(data: dict) -> Digraph:
    return Digraph.from_names([str(v) for v in data["vertices"]],
                              [[str(u), str(v)] for u, v in data["arcs"]])


def load_dhg_json(data: dict) -> DirectedHypergraph:
    vertices = [str(v) for v in data["vertices"]]
    index = {name: i for i, name in enumerate(vertices)}
    edges = []
    for e in data["edges"]:
        verts = tuple(index[str(v)] for v in e["verts"])
        edges.append((verts, Fraction(e.get("weight", 0)),
                      int(e.get("sign", 1))))
    return DirectedHypergraph(vertices, edges)


def dump_dhg_json(D: DirectedHypergraph) -> dict:
    return {
        "vertices": list(D.vertices),
        "edges": [{"verts": [D.vertices[v] for v in e.verts],
                   "weight": str(e.weight), "sign": e.sign}
                  for e in D.edges],
    }
