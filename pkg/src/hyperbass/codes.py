"""Binary linear codes, GF(2) elimination, and even-set oracles.

Vectors over F2 are Python ints used as bitmasks (bit i = coordinate i),
which keeps elimination and codeword enumeration allocation-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .poly import WeightSeries

ENUMERATION_GUARD = 24


@dataclass(frozen=True)
class BinaryMatrix:
    rows: int
    cols: int
    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) != self.rows:
            raise ValueError("row count mismatch")
        for row in self.bits:
            if row >> self.cols:
                raise ValueError("row has bits beyond cols")

    @staticmethod
    def from_lists(rows: Sequence[Sequence[int]], cols: int | None = None
                   ) -> "BinaryMatrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        bits = []
        for row in rows:
            mask = 0
            for j, v in enumerate(row):
                if v % 2:
                    mask |= 1 << j
            bits.append(mask)
        return BinaryMatrix(len(bits), cols, tuple(bits))

    def rank(self) -> int:
        return len(_rref(list(self.bits), self.cols)[1])


def _rref(rows: list[int], cols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form in place; returns (rows, pivot column list)."""
    pivots: list[int] = []
    r = 0
    for col in range(cols):
        sel = next((i for i in range(r, len(rows)) if rows[i] >> col & 1), None)
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] >> col & 1:
                rows[i] ^= rows[r]
        pivots.append(col)
        r += 1
    return rows, pivots


def kernel_basis(M: BinaryMatrix) -> list[int]:
    """Basis of {x : Mx = 0}, one bitmask per basis vector.

    Size is cols - rank(M); the basis assigns one vector per free column,
    with pivot coordinates filled by back-substitution.
    """
    rows, pivot_cols = _rref(list(M.bits), M.cols)
    pivot_set = set(pivot_cols)
    basis = []
    for free in range(M.cols):
        if free in pivot_set:
            continue
        vec = 1 << free
        for ri, pc in enumerate(pivot_cols):
            if rows[ri] >> free & 1:
                vec |= 1 << pc
        basis.append(vec)
    return basis


class Code:
    """A binary linear code given by a basis, with rational coordinate weights."""

    def __init__(self, n: int, basis: Iterable[int],
                 weights: Sequence[Fraction | int] | None = None):
        self.n = n
        self.basis = list(basis)
        if weights is None:
            weights = [Fraction(1)] * n
        if len(weights) != n:
            raise ValueError("need one weight per coordinate")
        self.weights = [Fraction(w) for w in weights]
        mat = BinaryMatrix(len(self.basis), n, tuple(self.basis))
        if mat.rank() != len(self.basis):
            raise ValueError("basis vectors are linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.basis)


def weight_enumerator(C: Code) -> WeightSeries:
    """Sum of z^{w(c)} over all 2^dim codewords, w(c) = weight of the support.

    Walks the codewords in Gray-code order so each step XORs a single basis
    vector and adjusts the running weight by the flipped coordinates only.
    """
    if C.dim > ENUMERATION_GUARD:
        raise ValueError(f"dimension {C.dim} exceeds guard {ENUMERATION_GUARD}")
    support_bits = [[j for j in range(C.n) if b >> j & 1] for b in C.basis]
    terms = {Fraction(0): 1}
    word = 0
    weight = Fraction(0)
    for i in range(1, 1 << C.dim):
        flip = (i & -i).bit_length() - 1
        for j in support_bits[flip]:
            if word >> j & 1:
                weight -= C.weights[j]
            else:
                weight += C.weights[j]
        word ^= C.basis[flip]
        terms[weight] = terms.get(weight, 0) + 1
    return WeightSeries(terms)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with stable vertex names and ordered edges."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError("loop edge")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError("parallel edge")
            seen.add(key)

    @staticmethod
    def from_names(vertices: Sequence[str],
                   edges: Sequence[Sequence[str]]) -> "Graph":
        index = {name: i for i, name in enumerate(vertices)}
        if len(index) != len(vertices):
            raise ValueError("duplicate vertex name")
        pairs = tuple((index[u], index[v]) for u, v in edges)
        return Graph(tuple(vertices), pairs)

    def incidence_matrix(self) -> BinaryMatrix:
        bits = [0] * len(self.vertices)
        for j, (u, v) in enumerate(self.edges):
            bits[u] |= 1 << j
            bits[v] |= 1 << j
        return BinaryMatrix(len(self.vertices), len(self.edges), tuple(bits))


def even_set_enumerator(G: Graph,
                        weights: Sequence[Fraction | int] | None = None
                        ) -> WeightSeries:
    """Sum of z^{w(E')} over edge subsets E' with every vertex degree even.

    Independent of the kernel route on purpose: this is a direct subset scan
    (Gray-code order, incremental degree parities), used as the oracle against
    weight_enumerator of the cycle-space code.
    """
    m = len(G.edges)
    if m > ENUMERATION_GUARD:
        raise ValueError(f"{m} edges exceed guard {ENUMERATION_GUARD}")
    if weights is None:
        weights = [Fraction(1)] * m
    weights = [Fraction(w) for w in weights]
    terms = {Fraction(0): 1}
    parity = 0
    in_set = 0
    weight = Fraction(0)
    for i in range(1, 1 << m):
        e = (i & -i).bit_length() - 1
        u, v = G.edges[e]
        parity ^= (1 << u) | (1 << v)
        if in_set >> e & 1:
            weight -= weights[e]
        else:
            weight += weights[e]
        in_set ^= 1 << e
        if parity == 0:
            terms[weight] = terms.get(weight, 0) + 1
    return WeightSeries(terms)


def load_code_json(data: dict) -> Code:
    n = int(data["n"])
    basis = []
    for row in data["basis"]:
        if len(row) != n:
            raise ValueError("basis row length != n")
        mask = 0
        for j, v in enumerate(row):
            if int(v) % 2:
                mask |= 1 << j
        basis.append(mask)
    weights = [Fraction(w) for w in data.get("weights", ["1"] * n)]
    return Code(n, basis, weights)


def load_graph_json(data: dict) -> tuple[Graph, list[Fraction]]:
    G = Graph.from_names([str(v) for v in data["vertices"]],
                         [[str(u), str(v)] for u, v in data["edges"]])
    weights = [Fraction(w) for w in data.get("weights",
                                             ["1"] * len(G.edges))]
    if len(weights) != len(G.edges):
        raise ValueError("need one weight per edge")
    return G, weights
