"""Undirected graphs over bitmask adjacency rows, and the intersection graph builder."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator

from .arith import divisors
from .errors import VertexCapExceeded
from .groups import FiniteGroup
from .subgroups import CyclicSubgroup, cyclic_subgroups

DEFAULT_VERTEX_CAP = 5000


def bits(mask: int) -> Iterator[int]:
    while mask:
        lsb = mask & -mask
        yield lsb.bit_length() - 1
        mask ^= lsb


class Graph:
    """Simple undirected graph; adj[v] is the neighbor set of v as a bitmask."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        self.n = n
        self.adj = [0] * n
        for u, v in edges:
            self.add_edge(u, v)

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError("self-loops are not allowed")
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u

    def degree(self, v: int) -> int:
        if not (0 <= v < self.n):
            raise IndexError(f"vertex {v} out of range")
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        g = Graph(self.n)
        g.adj = [(full ^ a) & ~(1 << v) for v, a in enumerate(self.adj)]
        return g

    def component_masks(self) -> list[int]:
        """Connected components as vertex bitmasks, ordered by smallest vertex."""
        seen = 0
        out = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = 1 << s
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            out.append(comp)
        return out

    def subgraph(self, vertices: list[int]) -> "Graph":
        """Induced subgraph with vertices relabeled to 0..k-1 in the given order."""
        pos = {v: i for i, v in enumerate(vertices)}
        g = Graph(len(vertices))
        for i, v in enumerate(vertices):
            m = 0
            for w in bits(self.adj[v]):
                if w in pos:
                    m |= 1 << pos[w]
            g.adj[i] = m
        return g

    def is_clique_mask(self, mask: int) -> bool:
        for v in bits(mask):
            if (self.adj[v] | 1 << v) & mask != mask:
                return False
        return True

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, tuple(self.adj)))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count()})"


def complete_graph(n: int) -> Graph:
    g = Graph(n)
    full = (1 << n) - 1
    g.adj = [full & ~(1 << v) for v in range(n)]
    return g


def complete_bipartite(a: int, b: int) -> Graph:
    g = Graph(a + b)
    left = (1 << a) - 1
    right = ((1 << (a + b)) - 1) ^ left
    g.adj = [right] * a + [left] * b
    return g


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    out = Graph(g.n + h.n)
    out.adj[: g.n] = list(g.adj)
    out.adj[g.n:] = [a << g.n for a in h.adj]
    return out


@dataclass(frozen=True)
class IntersectionGraph:
    """The intersection graph of cyclic subgroups of one finite group."""

    vertices: tuple[CyclicSubgroup, ...]
    graph: Graph
    source_descriptor: str

    @property
    def n(self) -> int:
        return self.graph.n


def build(group: FiniteGroup, vertex_cap: int = DEFAULT_VERTEX_CAP) -> IntersectionGraph:
    """Vertices are the proper nontrivial cyclic subgroups in canonical order;
    two are adjacent iff their element sets share more than the identity."""
    subs = cyclic_subgroups(group)
    if len(subs) > vertex_cap:
        raise VertexCapExceeded(
            f"{group.descriptor}: {len(subs)} vertices exceeds cap {vertex_cap}"
        )
    k = len(subs)
    g = Graph(k)
    masks = [s.mask for s in subs]
    for i in range(k):
        mi = masks[i]
        for j in range(i + 1, k):
            inter = mi & masks[j]
            if inter & (inter - 1):  # at least 2 common elements
                g.add_edge(i, j)
    return IntersectionGraph(tuple(subs), g, group.descriptor)


def zn_divisor_graph(n: int) -> tuple[list[int], Graph]:
    """Intersection graph of Z_n in its divisor representation.

    Vertices are the divisors d of n with 1 < d < n (one cyclic subgroup per
    divisor); adjacency is gcd(d, e) > 1.  This is the fast oracle form used
    for large-n sweeps.
    """
    ds = [d for d in divisors(n) if 1 < d < n]
    g = Graph(len(ds))
    for i, d in enumerate(ds):
        for j in range(i + 1, len(ds)):
            if gcd(d, ds[j]) > 1:
                g.add_edge(i, j)
    return ds, g
