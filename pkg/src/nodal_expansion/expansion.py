"""Weighted expansion, expander verdicts, and (k,c)-partition search.

The expansion of a node subset S under nonnegative node weights w is

    phi(S) = sum over edges {i,j} crossing S of sqrt(w_i w_j)
             / min(w(S), w(V \\ S)),

defined whenever 0 < w(S) < w(V).  The crossing sum runs over edges only;
nodes of zero weight contribute nothing to either side of the ratio, so
exact searches enumerate over the positive-weight nodes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .graph import Graph, induced_subgraph, laplacian

EXACT_BIPARTITION_CAP = 20
EXACT_SET_PARTITION_CAP = 12
DEFAULT_BUDGET = 1000

_CHUNK = 1 << 15


class ExpansionError(ValueError):
    pass


class UndefinedCut(ExpansionError):
    """phi requested for a set with w(S) = 0 or w(S) = w(V)."""


class ExactCapExceeded(ExpansionError):
    pass


@dataclass(frozen=True)
class CutValue:
    numerator: float
    denominator: float

    @property
    def phi(self) -> float:
        return self.numerator / self.denominator


@dataclass(frozen=True)
class ExpanderVerdict:
    is_expander: bool
    c: float
    witness: tuple[int, ...] | None
    mode: str
    min_phi: float | None = None


@dataclass(frozen=True)
class PartitionCertificate:
    """A verified k-way split: disjoint classes covering the ground set, each
    with its expansion value computed in the ground graph."""

    classes: tuple[tuple[int, ...], ...]
    phis: tuple[float, ...]
    c: float
    valid: bool


def _check_weights(g: Graph, w: np.ndarray) -> np.ndarray:
    w = np.asarray(w, dtype=float)
    if w.shape != (g.n,):
        raise ExpansionError(f"weights shape {w.shape} does not match n={g.n}")
    if np.any(w < 0):
        raise ExpansionError("weights must be nonnegative")
    return w


def phi(g: Graph, w: np.ndarray, S: Iterable[int]) -> CutValue:
    """Expansion of S; raises UndefinedCut unless 0 < w(S) < w(V)."""
    w = _check_weights(g, w)
    sel = set(int(i) for i in S)
    for i in sel:
        if not 0 <= i < g.n:
            raise ExpansionError(f"node {i} outside [0,{g.n})")
    # complement weight summed directly (not total - w_s) so that
    # phi(S) == phi(V \ S) holds exactly in floating point
    w_s = float(sum(w[i] for i in range(g.n) if i in sel))
    w_rest = float(sum(w[i] for i in range(g.n) if i not in sel))
    if w_s <= 0 or w_rest <= 0:
        raise UndefinedCut(
            f"w(S)={w_s} must lie strictly between 0 and w(V)={w_s + w_rest}"
        )
    num = 0.0
    for u, v in g.edges:
        if (u in sel) != (v in sel):
            num += float(np.sqrt(w[u] * w[v]))
    return CutValue(numerator=num, denominator=min(w_s, w_rest))


def _exact_min_phi(g: Graph, w: np.ndarray) -> tuple[float, tuple[int, ...]]:
    """Minimum phi over all bipartitions with 0 < w(S) < w(V), and the first
    (hence lexicographically determined) minimizing positive-weight set.

    Vectorized over bitmasks of the positive-weight nodes; the lowest
    positive-weight node is pinned to the complement, halving the space.
    """
    pos = [i for i in range(g.n) if w[i] > 0]
    p = len(pos)
    if p < 2:
        raise UndefinedCut("fewer than two positive-weight nodes; no proper cut")
    free = pos[1:]  # pos[0] pinned outside S
    col = {node: j for j, node in enumerate(free)}
    w_free = w[free]
    total = float(w[pos].sum())

    us, vs = g.edge_arrays()
    keep = (w[us] > 0) & (w[vs] > 0)
    us, vs = us[keep], vs[keep]
    sqrt_e = np.sqrt(w[us] * w[vs])
    # column p-1 is a sentinel always-False column for the pinned node
    cu = np.array([col.get(int(u), p - 1) for u in us], dtype=int)
    cv = np.array([col.get(int(v), p - 1) for v in vs], dtype=int)

    best_phi = np.inf
    best_mask = 0
    n_masks = 1 << (p - 1)
    shifts = np.arange(p - 1)
    for start in range(1, n_masks, _CHUNK):
        masks = np.arange(start, min(start + _CHUNK, n_masks), dtype=np.int64)
        bits = ((masks[:, None] >> shifts) & 1).astype(bool)
        w_s = bits @ w_free
        ok = (w_s > 0) & (w_s < total)
        if not ok.any():
            continue
        bits_ext = np.concatenate(
            [bits, np.zeros((len(masks), 1), dtype=bool)], axis=1
        )
        if len(cu):
            num = (bits_ext[:, cu] ^ bits_ext[:, cv]) @ sqrt_e
        else:
            num = np.zeros(len(masks))
        denom = np.minimum(w_s, total - w_s)
        with np.errstate(divide="ignore", invalid="ignore"):
            vals = np.where(ok, num / denom, np.inf)
        i = int(np.argmin(vals))
        if vals[i] < best_phi:
            best_phi = float(vals[i])
            best_mask = int(masks[i])
    witness = tuple(free[j] for j in range(p - 1) if (best_mask >> j) & 1)
    return best_phi, witness


def is_expander(
    g: Graph,
    w: np.ndarray,
    c: float,
    mode: str = "exact",
    budget: int = DEFAULT_BUDGET,
) -> ExpanderVerdict:
    """Decide whether every proper-weight cut has phi >= c.

    Exact mode enumerates all bipartitions (positive-weight nodes only, cap
    EXACT_BIPARTITION_CAP) and is a proof either way.  Heuristic mode runs
    sweep cuts and is a proof only when it finds a witness.
    """
    w = _check_weights(g, w)
    if c <= 0:
        raise ExpansionError(f"threshold c must be positive, got {c}")
    if float(w.sum()) <= 0:
        raise ExpansionError("total weight must be positive")
    n_pos = int(np.count_nonzero(w > 0))
    if n_pos < 2:
        # no proper cut exists: vacuously an expander
        return ExpanderVerdict(is_expander=True, c=c, witness=None, mode=mode)
    if mode == "exact":
        if g.n > EXACT_BIPARTITION_CAP:
            raise ExactCapExceeded(
                f"n={g.n} exceeds exact bipartition cap {EXACT_BIPARTITION_CAP}"
            )
        min_phi, witness = _exact_min_phi(g, w)
        if min_phi < c:
            return ExpanderVerdict(False, c, witness, "exact", min_phi)
        return ExpanderVerdict(True, c, None, "exact", min_phi)
    if mode != "heuristic":
        raise ExpansionError(f"unknown mode {mode!r}")
    best: tuple[float, tuple[int, ...]] | None = None
    for order in _candidate_orders(g, w):
        S, cut = sweep_cut(g, w, order)
        if best is None or cut.phi < best[0]:
            best = (cut.phi, S)
    if best is not None and best[0] < c:
        # re-verify the witness by direct evaluation
        assert phi(g, w, best[1]).phi < c
        return ExpanderVerdict(False, c, best[1], "heuristic", best[0])
    return ExpanderVerdict(True, c, None, "heuristic", best[0] if best else None)


def _fiedler_order(g: Graph, w: np.ndarray) -> list[int]:
    """Nodes sorted by the Fiedler vector of the Laplacian, positive-weight
    nodes first, index as final tie-break."""
    if g.n == 1:
        return [0]
    L = laplacian(g)
    _, vecs = np.linalg.eigh(L)
    f = vecs[:, 1]
    return sorted(range(g.n), key=lambda i: (w[i] <= 0, float(f[i]), i))


def _candidate_orders(g: Graph, w: np.ndarray) -> list[list[int]]:
    orders = [_fiedler_order(g, w)]
    orders.append(sorted(range(g.n), key=lambda i: (w[i] <= 0, -w[i], i)))
    orders.append(sorted(range(g.n), key=lambda i: (w[i] <= 0, i)))
    return orders


def sweep_cut(
    g: Graph, w: np.ndarray, order: Sequence[int]
) -> tuple[tuple[int, ...], CutValue]:
    """Best prefix of `order` by phi; ties go to the shorter prefix.

    `order` must be a permutation of the nodes with positive-weight nodes
    first.  Raises if the weights are all zero.
    """
    w = _check_weights(g, w)
    if float(w.sum()) <= 0:
        raise ExpansionError("all-zero weights")
    order = [int(i) for i in order]
    if sorted(order) != list(range(g.n)):
        raise ExpansionError("order is not a permutation of the nodes")
    seen_zero = False
    for i in order:
        if w[i] <= 0:
            seen_zero = True
        elif seen_zero:
            raise ExpansionError("positive-weight nodes must precede zero-weight ones")
    total = float(w.sum())
    best: tuple[float, int] | None = None
    w_s = 0.0
    in_s = np.zeros(g.n, dtype=bool)
    us, vs = g.edge_arrays()
    sqrt_e = np.sqrt(w[us] * w[vs]) if len(us) else np.zeros(0)
    for t, node in enumerate(order[:-1], start=1):
        in_s[node] = True
        w_s += float(w[node])
        if not 0 < w_s < total:
            continue
        num = float(sqrt_e[in_s[us] ^ in_s[vs]].sum()) if len(us) else 0.0
        val = num / min(w_s, total - w_s)
        if best is None or val < best[0]:
            best = (val, t)
    if best is None:
        raise UndefinedCut("no prefix with proper weight")
    S = tuple(sorted(order[: best[1]]))
    return S, phi(g, w, S)


def _restricted_growth_strings(n: int, k: int) -> Iterator[list[int]]:
    """All assignments of n items to exactly k blocks, in restricted-growth
    (lexicographic) order; prunes branches that cannot reach k blocks."""
    a = [0] * n

    def rec(i: int, b: int) -> Iterator[list[int]]:
        if i == n:
            if b == k:
                yield list(a)
            return
        hi = min(b, k - 1)  # new block only if still needed/allowed
        for val in range(hi + 1):
            nb = b + 1 if val == b else b
            if nb + (n - i - 1) < k:
                continue
            a[i] = val
            yield from rec(i + 1, nb)

    if 0 < k <= n:
        yield from rec(0, 0)


def _attach_zero_weight_nodes(
    g: Graph, w: np.ndarray, classes: list[list[int]]
) -> list[list[int]]:
    """Assign zero-weight nodes to the class of their lowest-index assigned
    neighbor (iterated); stragglers join the first class."""
    assign = {}
    for ci, cls in enumerate(classes):
        for i in cls:
            assign[i] = ci
    pending = [i for i in range(g.n) if i not in assign]
    changed = True
    while pending and changed:
        changed = False
        for i in list(pending):
            nbrs = [j for j in g.neighbors(i) if j in assign]
            if nbrs:
                assign[i] = assign[min(nbrs)]
                pending.remove(i)
                changed = True
    for i in pending:
        assign[i] = 0
    out: list[list[int]] = [[] for _ in classes]
    for i in sorted(assign):
        out[assign[i]].append(i)
    return out


def _certify(
    g: Graph, w: np.ndarray, classes: list[list[int]], c: float
) -> PartitionCertificate:
    """Re-verify a candidate partition by direct phi evaluation."""
    covered = sorted(itertools.chain.from_iterable(classes))
    if covered != list(range(g.n)):
        raise ExpansionError("classes do not partition the node set")
    if len(classes) == 1:
        valid = float(w.sum()) > 0
        return PartitionCertificate(
            classes=(tuple(sorted(classes[0])),), phis=(), c=c, valid=valid
        )
    phis = []
    valid = True
    for cls in classes:
        if float(sum(w[i] for i in cls)) <= 0:
            valid = False
            phis.append(np.inf)
            continue
        val = phi(g, w, cls).phi
        phis.append(val)
        if not val < c:
            valid = False
    return PartitionCertificate(
        classes=tuple(tuple(sorted(cls)) for cls in classes),
        phis=tuple(float(p) for p in phis),
        c=c,
        valid=valid,
    )


def find_partition(
    g: Graph,
    w: np.ndarray,
    k: int,
    c: float,
    mode: str = "exact",
    budget: int = DEFAULT_BUDGET,
) -> PartitionCertificate | None:
    """Search for a partition into k positive-weight classes, each phi < c.

    k=1 is trivially valid (there is no cut to measure).  Exact mode
    enumerates set partitions of the positive-weight nodes via restricted
    growth strings (cap EXACT_SET_PARTITION_CAP); None is then a proof of
    non-partitionability.  Heuristic None proves nothing.  Every returned
    certificate has been re-verified by direct phi evaluation.
    """
    w = _check_weights(g, w)
    if c <= 0:
        raise ExpansionError(f"threshold c must be positive, got {c}")
    if k < 1:
        raise ExpansionError(f"k must be at least 1, got {k}")
    if k == 1:
        if float(w.sum()) <= 0:
            return None
        return _certify(g, w, [list(range(g.n))], c)
    pos = [i for i in range(g.n) if w[i] > 0]
    if len(pos) < k:
        return None
    if mode == "exact":
        if len(pos) > EXACT_SET_PARTITION_CAP:
            raise ExactCapExceeded(
                f"{len(pos)} positive-weight nodes exceed set-partition cap "
                f"{EXACT_SET_PARTITION_CAP}"
            )
        for rgs in _restricted_growth_strings(len(pos), k):
            classes: list[list[int]] = [[] for _ in range(k)]
            for idx, block in enumerate(rgs):
                classes[block].append(pos[idx])
            cert = _certify(g, w, _attach_zero_weight_nodes(g, w, classes), c)
            if cert.valid:
                return cert
        return None
    if mode != "heuristic":
        raise ExpansionError(f"unknown mode {mode!r}")
    return _heuristic_partition(g, w, k, c, budget)


def _heuristic_partition(
    g: Graph, w: np.ndarray, k: int, c: float, budget: int
) -> PartitionCertificate | None:
    """Recursive sweep-cut splitting followed by greedy single-node moves."""
    pos = [i for i in range(g.n) if w[i] > 0]
    classes: list[list[int]] = [list(pos)]
    while len(classes) < k:
        # split the heaviest splittable class by a Fiedler sweep
        order_idx = sorted(
            range(len(classes)),
            key=lambda ci: -float(sum(w[i] for i in classes[ci])),
        )
        split_done = False
        for ci in order_idx:
            cls = classes[ci]
            if len(cls) < 2:
                continue
            sub = induced_subgraph(g, cls)
            w_sub = np.array([w[p] for p in sub.to_parent])
            try:
                order = _fiedler_order(sub.graph, w_sub)
                S, _ = sweep_cut(sub.graph, w_sub, order)
            except ExpansionError:
                continue
            part_a = sorted(sub.to_parent[i] for i in S)
            part_b = sorted(set(cls) - set(part_a))
            classes[ci] = part_a
            classes.append(part_b)
            split_done = True
            break
        if not split_done:
            return None
    full = _attach_zero_weight_nodes(g, w, classes)
    cert = _certify(g, w, full, c)
    steps = 0
    while not cert.valid and steps < budget:
        steps += 1
        improved = _greedy_move(g, w, full, c)
        if not improved:
            break
        cert = _certify(g, w, full, c)
    return cert if cert.valid else None


def _greedy_move(
    g: Graph, w: np.ndarray, classes: list[list[int]], c: float
) -> bool:
    """Move one boundary node between classes if it lowers the worst phi.
    Mutates `classes`; returns whether a move was made."""
    assign = {}
    for ci, cls in enumerate(classes):
        for i in cls:
            assign[i] = ci

    def worst() -> float:
        vals = []
        for cls in classes:
            if not cls or float(sum(w[i] for i in cls)) <= 0:
                return np.inf
            try:
                vals.append(phi(g, w, cls).phi)
            except UndefinedCut:
                return np.inf
        return max(vals)

    base = worst()
    for u, v in g.edges:
        for a, b in ((u, v), (v, u)):
            ca, cb = assign[a], assign[b]
            if ca == cb or len(classes[ca]) <= 1:
                continue
            classes[ca].remove(a)
            classes[cb].append(a)
            if worst() < base:
                classes[cb].sort()
                return True
            classes[cb].remove(a)
            classes[ca].append(a)
            classes[ca].sort()
    return False


def max_partitionable(
    g: Graph,
    w: np.ndarray,
    c: float,
    mode: str = "exact",
    budget: int = DEFAULT_BUDGET,
) -> tuple[int, PartitionCertificate | None]:
    """Largest k with a valid (k,c)-partition under the given mode.

    (k,c)-partitionability is downward closed (merging two classes keeps
    every phi below c), so the first failing k ends the search.  Heuristic
    mode therefore yields a lower bound rather than the true maximum.
    """
    w = _check_weights(g, w)
    if c <= 0:
        raise ExpansionError(f"threshold c must be positive, got {c}")
    best_k = 0
    best_cert: PartitionCertificate | None = None
    n_pos = int(np.count_nonzero(w > 0))
    for k in range(1, max(n_pos, 1) + 1):
        cert = find_partition(g, w, k, c, mode=mode, budget=budget)
        if cert is None:
            break
        best_k, best_cert = k, cert
    return best_k, best_cert
