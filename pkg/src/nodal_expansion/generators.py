"""Deterministic graph family generators.

Randomized families draw from numpy's PCG64 seeded with the given 64-bit
value, so an identical (family, params, seed) triple always reproduces the
same graph bit for bit.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

import numpy as np

from .graph import Graph, build_graph, is_connected


class GenerationError(ValueError):
    pass


def gen_path(n: int) -> Graph:
    if n < 1:
        raise GenerationError(f"path needs n >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise GenerationError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise GenerationError(f"complete graph needs n >= 1, got {n}")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n,p)."""
    if n < 1:
        raise GenerationError(f"gnp needs n >= 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise GenerationError(f"edge probability {p} outside [0,1]")
    rng = np.random.default_rng(seed)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return build_graph(n, edges)


def gen_random_regular(
    n: int, d: int, seed: int, max_retries: int = 1000
) -> Graph:
    """Simple d-regular graph via the pairing (configuration) model.

    Stubs are shuffled and paired; any attempt producing a self-loop or a
    parallel edge is rejected wholesale and retried, up to max_retries.
    """
    if n * d % 2 != 0:
        raise GenerationError(f"n*d = {n}*{d} must be even")
    if not 0 <= d < n:
        raise GenerationError(f"degree {d} must satisfy 0 <= d < n={n}")
    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(n), d)
    for _ in range(max_retries):
        perm = rng.permutation(stubs)
        pairs = perm.reshape(-1, 2)
        edges: set[tuple[int, int]] = set()
        ok = True
        for u, v in pairs:
            u, v = int(u), int(v)
            if u == v:
                ok = False
                break
            if u > v:
                u, v = v, u
            if (u, v) in edges:
                ok = False
                break
            edges.add((u, v))
        if ok:
            return build_graph(n, sorted(edges))
    raise GenerationError(
        f"pairing model failed to produce a simple {d}-regular graph "
        f"on {n} nodes within {max_retries} retries"
    )


def gen_expander_path_expander(
    n_block: int,
    d: int,
    path_len: int | None = None,
    seed: int = 0,
) -> Graph:
    """Two isomorphic d-regular blocks bridged by a path of new nodes.

    Block 2 is an index-shifted copy of block 1 (so the blocks are
    isomorphic by construction).  Path nodes are 2*n_block ..
    2*n_block+path_len-1 in a chain; the first path node attaches to node 0
    of block 1 and the last to node 0 of block 2.  path_len defaults to
    2*n_block, matching the combined block size.
    """
    if path_len is None:
        path_len = 2 * n_block
    if path_len < 1:
        raise GenerationError(f"path_len must be >= 1, got {path_len}")
    block = gen_random_regular(n_block, d, seed)
    edges: list[tuple[int, int]] = list(block.edges)
    edges += [(u + n_block, v + n_block) for u, v in block.edges]
    first_path = 2 * n_block
    edges += [(first_path + i, first_path + i + 1) for i in range(path_len - 1)]
    edges.append((0, first_path))
    edges.append((n_block, first_path + path_len - 1))
    return build_graph(2 * n_block + path_len, edges)


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """All connected labeled graphs on n nodes by raw edge-subset
    enumeration (2^(n(n-1)/2) candidates; fine up to n = 6)."""
    all_edges = list(combinations(range(n), 2))
    for mask in range(1 << len(all_edges)):
        edges = [e for i, e in enumerate(all_edges) if (mask >> i) & 1]
        g = Graph(n=n, edges=tuple(edges))
        if is_connected(g):
            yield g


def sample_connected_graphs(n: int, count: int, seed: int) -> Iterator[Graph]:
    """`count` distinct random connected labeled graphs on n nodes, sampled
    by uniform edge-subset masks with rejection (fixed seed, deterministic)."""
    all_edges = list(combinations(range(n), 2))
    rng = np.random.default_rng(seed)
    seen: set[int] = set()
    produced = 0
    while produced < count:
        mask = int(rng.integers(0, 1 << len(all_edges)))
        if mask in seen:
            continue
        seen.add(mask)
        edges = [e for i, e in enumerate(all_edges) if (mask >> i) & 1]
        g = Graph(n=n, edges=tuple(edges))
        if is_connected(g):
            produced += 1
            yield g
