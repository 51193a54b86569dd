"""Undirected simple graphs, combinatorial Laplacians, induced subgraphs,
and eigenvector sign supports."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


class GraphError(ValueError):
    """Invalid graph construction input."""


class EndpointOutOfRange(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on nodes 0..n-1 with a canonical edge tuple.

    Edges are stored once each as (u, v) with u < v, sorted lexicographically.
    Instances are immutable and safe to share.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=int)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1.0
        return a

    def neighbors(self, i: int) -> list[int]:
        out = []
        for u, v in self.edges:
            if u == i:
                out.append(v)
            elif v == i:
                out.append(u)
        return sorted(out)

    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Endpoint index arrays (us, vs), empty int arrays for no edges."""
        if not self.edges:
            return np.zeros(0, dtype=int), np.zeros(0, dtype=int)
        e = np.array(self.edges, dtype=int)
        return e[:, 0], e[:, 1]


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate and canonicalize an edge list into a Graph.

    Raises EndpointOutOfRange, SelfLoopError, or DuplicateEdgeError on bad
    input; duplicates are detected after canonicalizing endpoint order.
    """
    if n < 0:
        raise GraphError(f"node count must be nonnegative, got {n}")
    seen: set[tuple[int, int]] = set()
    canon: list[tuple[int, int]] = []
    for pair in edges:
        u, v = pair
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise EndpointOutOfRange(f"edge ({u},{v}) has endpoint outside [0,{n})")
        if u == v:
            raise SelfLoopError(f"self-loop at node {u}")
        if u > v:
            u, v = v, u
        if (u, v) in seen:
            raise DuplicateEdgeError(f"duplicate edge ({u},{v})")
        seen.add((u, v))
        canon.append((u, v))
    return Graph(n=n, edges=tuple(sorted(canon)))


def laplacian(g: Graph) -> np.ndarray:
    """Combinatorial Laplacian L = D - A as a dense symmetric array."""
    L = np.zeros((g.n, g.n))
    for u, v in g.edges:
        L[u, u] += 1.0
        L[v, v] += 1.0
        L[u, v] -= 1.0
        L[v, u] -= 1.0
    return L


@dataclass(frozen=True)
class SignSupport:
    """Partition of the node set by eigenvector sign, with a zero band.

    Nodes with |y_i| <= tau land in `zero` and belong to neither support.
    """

    positive: tuple[int, ...]
    negative: tuple[int, ...]
    zero: tuple[int, ...]
    tau: float


def default_zero_tau(y: np.ndarray) -> float:
    """Default zero band: 1e-9 times the largest entry magnitude."""
    y = np.asarray(y, dtype=float)
    return 1e-9 * float(np.max(np.abs(y))) if y.size else 0.0


def sign_support(y: np.ndarray, tau: float | None = None) -> SignSupport:
    """Split nodes into positive / negative / zero sets at threshold tau."""
    y = np.asarray(y, dtype=float)
    if tau is None:
        tau = default_zero_tau(y)
    if tau < 0:
        raise ValueError(f"tau must be nonnegative, got {tau}")
    pos = tuple(int(i) for i in np.flatnonzero(y > tau))
    neg = tuple(int(i) for i in np.flatnonzero(y < -tau))
    rest = tuple(i for i in range(len(y)) if i not in set(pos) and i not in set(neg))
    return SignSupport(positive=pos, negative=neg, zero=rest, tau=tau)


@dataclass(frozen=True)
class InducedSubgraph:
    """Subgraph induced by a node subset, with the index map back to the parent."""

    graph: Graph
    to_parent: tuple[int, ...]

    def to_parent_set(self, sub_nodes: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted(self.to_parent[i] for i in sub_nodes))


def induced_subgraph(g: Graph, nodes: Iterable[int]) -> InducedSubgraph:
    """Induce on `nodes`, keeping exactly the edges with both endpoints inside."""
    sel = sorted(set(int(i) for i in nodes))
    for i in sel:
        if not 0 <= i < g.n:
            raise EndpointOutOfRange(f"node {i} outside [0,{g.n})")
    index = {p: s for s, p in enumerate(sel)}
    sub_edges = [
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    ]
    return InducedSubgraph(
        graph=Graph(n=len(sel), edges=tuple(sorted(sub_edges))),
        to_parent=tuple(sel),
    )


def weights_from_eigenvector(y: np.ndarray) -> np.ndarray:
    """Node weights w_i = y_i**2."""
    y = np.asarray(y, dtype=float)
    return y * y


def connected_components(g: Graph) -> list[list[int]]:
    """Components by BFS, each sorted, ordered by smallest node."""
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = [s]
        while queue:
            u = queue.pop()
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1
