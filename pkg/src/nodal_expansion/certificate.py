"""Proof-object construction and mechanical verification of the nodal
expansion theorem.

Given an eigenvector y of the k-th Laplacian eigenvalue, weights w = y^2,
and the half-gap c = (lambda_{k+1} - lambda_k)/2, the theorem bounds the
partition counts of the positive and negative support subgraphs: if the
positive side splits into a classes of expansion < c and the negative side
into b such classes, then a + b <= k.

Every step of the argument is rebuilt numerically and checked with an
explicit tolerance and slack:

  * M = L - lambda_k I annihilates y;
  * the class-restricted unit vectors give a Gram-style matrix
    B_ij = <y_hat^i, M y_hat^j> with a forced sign pattern and B z = 0;
  * interlacing: lambda_i - lambda_k <= mu_i for B's spectrum mu;
  * the comparison matrix C (same-side off-diagonals of B, diagonals chosen
    so C z = 0) has diagonal entries bounded by per-class expansions;
  * C - B is diagonally dominant after symmetric scaling by diag(z), hence
    positive semidefinite, so mu_max <= lambda_max(C);
  * lambda_max(C) < 2c whenever every class expansion is below c.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import expansion as xp
from .graph import Graph, induced_subgraph, laplacian, sign_support
from .spectral import (
    SpectralDecomposition,
    eigendecompose,
    select_eigenpair,
    spectral_gap_c,
)


class CertificateError(ValueError):
    pass


def default_tolerance(L: np.ndarray) -> float:
    """Scale-aware tolerance for all proof-step checks."""
    n = L.shape[0]
    scale = float(np.max(np.abs(L))) if L.size else 0.0
    return 1e-8 * (1.0 + scale * n)


@dataclass
class ProofObjects:
    """All numerical objects of the proof for one (graph, k, partition)."""

    graph: Graph
    k: int
    lambda_k: float
    lambda_k1: float | None
    c: float | None
    M: np.ndarray
    parts: tuple[tuple[int, ...], ...]  # positive-side classes first
    a: int
    b: int
    y: np.ndarray
    w: np.ndarray
    y_split: np.ndarray  # row i = y restricted to parts[i]
    z: np.ndarray
    B: np.ndarray
    mu: np.ndarray
    C: np.ndarray | None = None
    tolerance: float = 0.0


@dataclass(frozen=True)
class CheckRecord:
    name: str
    passed: bool
    slack: float
    tolerance: float
    flags: tuple[str, ...] = ()

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": bool(self.passed),
            "slack": float(self.slack),
            "tolerance": float(self.tolerance),
        }


@dataclass
class TheoremReport:
    graph: Graph
    k: int
    values: np.ndarray
    c: float
    a: int
    b: int
    a_plus_b_le_k: bool
    mode: str
    checks: list[CheckRecord]
    pos_classes: tuple[tuple[int, ...], ...]
    neg_classes: tuple[tuple[int, ...], ...]
    multiplicity_flag: bool = False
    degenerate_gap_flag: bool = False

    @property
    def theorem_holds(self) -> bool:
        return self.a_plus_b_le_k or self.degenerate_gap_flag

    def as_dict(self) -> dict:
        flags = []
        if self.multiplicity_flag:
            flags.append("eigenvalue_multiplicity")
        if self.degenerate_gap_flag:
            flags.append("degenerate_gap")
        return {
            "graph": {"n": self.graph.n, "edges": [list(e) for e in self.graph.edges]},
            "k": self.k,
            "lambda": [float(v) for v in self.values],
            "c": float(self.c),
            "a": self.a,
            "b": self.b,
            "theorem_holds": bool(self.theorem_holds),
            "mode": self.mode,
            "flags": flags,
            "checks": [c.as_dict() for c in self.checks],
            "partitions": {
                "positive": [list(cls) for cls in self.pos_classes],
                "negative": [list(cls) for cls in self.neg_classes],
            },
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.as_dict(), **kwargs)


def _validate_classes(
    side: str, classes: Sequence[Sequence[int]], support: set[int]
) -> list[tuple[int, ...]]:
    seen: set[int] = set()
    out = []
    for cls in classes:
        nodes = tuple(sorted(int(i) for i in cls))
        if not nodes:
            raise CertificateError(f"empty class on {side} side")
        for i in nodes:
            if i not in support:
                raise CertificateError(f"node {i} outside the {side} support")
            if i in seen:
                raise CertificateError(f"node {i} repeated across {side} classes")
            seen.add(i)
        out.append(nodes)
    if seen != support:
        raise CertificateError(f"{side} classes do not cover the {side} support")
    return out


def build_proof_objects(
    g: Graph,
    k: int,
    pos_classes: Sequence[Sequence[int]],
    neg_classes: Sequence[Sequence[int]],
    decomposition: SpectralDecomposition | None = None,
) -> ProofObjects:
    """Assemble M, the split vectors, their norms z, and the matrix B for the
    given partitions of the two supports of the k-th eigenvector."""
    L = laplacian(g)
    d = decomposition if decomposition is not None else eigendecompose(L)
    sel = select_eigenpair(d, k)
    y, lam = sel.y, sel.lambda_k
    supp = sign_support(y)
    pos = _validate_classes("positive", pos_classes, set(supp.positive))
    neg = _validate_classes("negative", neg_classes, set(supp.negative))
    parts = tuple(pos) + tuple(neg)
    if not parts:
        raise CertificateError("no classes given; both supports empty")
    M = L - lam * np.eye(g.n)
    y_split = np.zeros((len(parts), g.n))
    for i, cls in enumerate(parts):
        y_split[i, list(cls)] = y[list(cls)]
    z = np.linalg.norm(y_split, axis=1)
    if np.any(z <= 0):
        raise CertificateError("class with zero norm (off-support class?)")
    y_hat = y_split / z[:, None]
    B = y_hat @ M @ y_hat.T
    B = (B + B.T) / 2.0
    mu = np.linalg.eigvalsh(B)
    lam_k1 = float(d.values[k]) if k < d.n else None
    c = spectral_gap_c(d, k) if k < d.n else None
    return ProofObjects(
        graph=g,
        k=k,
        lambda_k=lam,
        lambda_k1=lam_k1,
        c=c,
        M=M,
        parts=parts,
        a=len(pos),
        b=len(neg),
        y=y,
        w=y * y,
        y_split=y_split,
        z=z,
        B=B,
        mu=mu,
        tolerance=default_tolerance(L),
    )


def check_B_sign_pattern(p: ProofObjects) -> CheckRecord:
    """Same-side off-diagonal entries of B are <= 0; cross-side entries >= 0."""
    tol = p.tolerance
    margins = [np.inf]
    m = p.a + p.b
    for i in range(m):
        for j in range(m):
            if i == j:
                continue
            same_side = (i < p.a) == (j < p.a)
            margins.append(-p.B[i, j] if same_side else p.B[i, j])
    slack = float(min(margins))
    return CheckRecord("B_sign_pattern", slack >= -tol, slack, tol)


def check_Bz_zero(p: ProofObjects) -> CheckRecord:
    """B z = 0, the algebraic consequence of M y = 0."""
    tol = p.tolerance
    resid = float(np.max(np.abs(p.B @ p.z)))
    scale = 1.0 + float(np.max(np.abs(p.B))) * float(np.max(np.abs(p.z)))
    slack = -resid / scale
    return CheckRecord("Bz_zero", slack >= -tol, slack, tol)


def check_interlacing(
    p: ProofObjects, spectrum: SpectralDecomposition
) -> CheckRecord:
    """lambda_i - lambda_k <= mu_i for i = 1..a+b (interlacing for the
    principal submatrix B of M in the split-vector basis)."""
    tol = p.tolerance
    m = p.a + p.b
    lam = np.asarray(spectrum.values[:m], dtype=float)
    margins = p.mu[:m] - (lam - p.lambda_k)
    slack = float(np.min(margins))
    return CheckRecord("interlacing", slack >= -tol, slack, tol)


def build_C(p: ProofObjects) -> np.ndarray:
    """Comparison matrix: same-side off-diagonals copied from B, cross-side
    zero, diagonals chosen so that C z = 0 side by side."""
    m = p.a + p.b
    if m < 2:
        raise CertificateError("C needs at least two classes")
    C = np.zeros((m, m))
    for i in range(m):
        for j in range(m):
            if i != j and (i < p.a) == (j < p.a):
                C[i, j] = p.B[i, j]
    for i in range(m):
        side = range(p.a) if i < p.a else range(p.a, m)
        C[i, i] = -sum(p.z[r] / p.z[i] * p.B[i, r] for r in side if r != i)
    p.C = C
    return C


def class_expansions(
    g: Graph, w: np.ndarray, p: ProofObjects
) -> list[float | None]:
    """Per-class expansion computed inside each class's own support subgraph.
    None marks a class covering its entire side (expansion undefined)."""
    supp = sign_support(p.y)
    out: list[float | None] = []
    for i, cls in enumerate(p.parts):
        side_nodes = supp.positive if i < p.a else supp.negative
        if set(cls) == set(side_nodes):
            out.append(None)
            continue
        sub = induced_subgraph(g, side_nodes)
        inv = {parent: s for s, parent in enumerate(sub.to_parent)}
        w_sub = np.array([w[parent] for parent in sub.to_parent])
        out.append(xp.phi(sub.graph, w_sub, [inv[i] for i in cls]).phi)
    return out


def check_C_diagonal(
    p: ProofObjects, phis: Sequence[float | None]
) -> CheckRecord:
    """Two facts about C's diagonal: the exact cut identity
    C_ii z_i^2 = sum of sqrt(w_u w_v) over same-side edges leaving class i,
    and the bound C_ii <= phi_i (the class's expansion in its support
    subgraph), hence < c for a valid certificate."""
    if p.C is None:
        build_C(p)
    tol = p.tolerance
    flags: list[str] = []
    margins = [np.inf]
    m = p.a + p.b
    assign = {}
    for i, cls in enumerate(p.parts):
        for node in cls:
            assign[node] = i
    cut_mass = np.zeros(m)
    for u, v in p.graph.edges:
        iu, iv = assign.get(u), assign.get(v)
        if iu is None or iv is None or iu == iv:
            continue
        if (iu < p.a) != (iv < p.a):
            continue
        contrib = float(np.sqrt(p.w[u] * p.w[v]))
        cut_mass[iu] += contrib
        cut_mass[iv] += contrib
    scale = 1.0 + float(np.max(np.abs(cut_mass)))
    for i in range(m):
        ident = abs(p.C[i, i] * p.z[i] ** 2 - cut_mass[i]) / scale
        margins.append(-ident)  # equality: slack 0 at exactness
        if phis[i] is None:
            flags.append(f"class_{i}_covers_whole_side")
            margins.append(-abs(p.C[i, i]))  # must be exactly zero
        else:
            margins.append(phis[i] - p.C[i, i])
    slack = float(min(margins))
    return CheckRecord("C_diagonal", slack >= -tol, slack, tol, tuple(flags))


def check_CminusB_psd(p: ProofObjects) -> CheckRecord:
    """C - B is positive semidefinite: structurally (scaling by diag(z) on
    both sides yields nonnegative diagonal, nonpositive off-diagonal, and
    zero row sums, i.e. a diagonally dominant matrix) and spectrally
    (lambda_min >= 0).

    Note the scaling: with E = C - B and D = diag(z), the matrix D E D has
    row sums z_i * (E z)_i = 0; congruence by the invertible D carries its
    semidefiniteness back to E."""
    if p.C is None:
        build_C(p)
    tol = p.tolerance
    E = p.C - p.B
    D = np.diag(p.z)
    S = D @ E @ D
    margins = [np.inf]
    m = p.a + p.b
    for i in range(m):
        margins.append(S[i, i])
        for j in range(m):
            if i != j:
                margins.append(-S[i, j])
    row_resid = float(np.max(np.abs(S.sum(axis=1))))
    margins.append(-row_resid / (1.0 + float(np.max(np.abs(S)))))
    margins.append(float(np.linalg.eigvalsh(E)[0]))
    slack = float(min(margins))
    return CheckRecord("CminusB_psd", slack >= -tol, slack, tol)


def check_lambda_max_C(p: ProofObjects, phis: Sequence[float | None]) -> CheckRecord:
    """lambda_max(C) < 2c, valid when every class expansion is below c; when
    a+b = k+1 also verify the chain
    lambda_{k+1} - lambda_k <= mu_{a+b} <= lambda_max(C)."""
    if p.C is None:
        build_C(p)
    if p.c is None:
        raise CertificateError("no upper eigenvalue: k = n has no gap")
    for i, v in enumerate(phis):
        if v is not None and not v < p.c:
            raise CertificateError(
                f"class {i} has expansion {v} >= c={p.c}; precondition violated"
            )
    tol = p.tolerance
    lam_max_C = float(np.linalg.eigvalsh(p.C)[-1])
    margins = [2.0 * p.c - lam_max_C]
    flags: list[str] = []
    if p.a + p.b == p.k + 1:
        flags.append("chain_checked")
        mu_top = float(p.mu[-1])
        margins.append(mu_top - (p.lambda_k1 - p.lambda_k))
        margins.append(lam_max_C - mu_top)
    slack = float(min(margins))
    return CheckRecord("lambda_max_C", slack >= -tol, slack, tol, tuple(flags))


def _map_cert_to_parent(
    cert: xp.PartitionCertificate | None, sub
) -> tuple[tuple[int, ...], ...]:
    if cert is None:
        return ()
    return tuple(
        tuple(sorted(sub.to_parent[i] for i in cls)) for cls in cert.classes
    )


def verify_theorem1(
    g: Graph,
    k: int,
    mode: str = "exact",
    budget: int = xp.DEFAULT_BUDGET,
) -> TheoremReport:
    """Verify the main theorem for (g, k): find the largest certified class
    counts a, b of the two support subgraphs at threshold c and test
    a + b <= k, attaching a CheckRecord for every proof step.

    A degenerate gap (c below tolerance) short-circuits: nothing is
    (k',c)-partitionable for k' >= 2 since expansions are nonnegative."""
    if g.n == 0:
        raise CertificateError("empty graph")
    if not 1 <= k <= g.n - 1:
        raise CertificateError(f"k={k} outside [1,{g.n - 1}]")
    L = laplacian(g)
    tol = default_tolerance(L)
    d = eigendecompose(L)
    sel = select_eigenpair(d, k)
    y = sel.y
    w = y * y
    c = spectral_gap_c(d, k)
    supp = sign_support(y)
    if c <= tol:
        a = 1 if supp.positive else 0
        b = 1 if supp.negative else 0
        return TheoremReport(
            graph=g, k=k, values=d.values, c=c, a=a, b=b,
            a_plus_b_le_k=a + b <= k, mode=mode, checks=[],
            pos_classes=(supp.positive,) if supp.positive else (),
            neg_classes=(supp.negative,) if supp.negative else (),
            multiplicity_flag=sel.multiplicity_flag, degenerate_gap_flag=True,
        )
    # the theorem's partition counts use the strict inequality phi < c; a
    # tolerance margin keeps float noise at phi == c from inflating a or b
    c_search = c - tol
    sides = []
    for nodes in (supp.positive, supp.negative):
        if not nodes:
            sides.append((0, ()))
            continue
        sub = induced_subgraph(g, nodes)
        w_sub = np.array([w[parent] for parent in sub.to_parent])
        k_side, cert = xp.max_partitionable(
            sub.graph, w_sub, c_search, mode=mode, budget=budget
        )
        sides.append((k_side, _map_cert_to_parent(cert, sub)))
    (a, pos_cls), (b, neg_cls) = sides
    checks: list[CheckRecord] = []
    if a + b >= 1:
        p = build_proof_objects(g, k, pos_cls, neg_cls, decomposition=d)
        checks.append(check_B_sign_pattern(p))
        checks.append(check_Bz_zero(p))
        checks.append(check_interlacing(p, d))
        if a + b >= 2:
            build_C(p)
            phis = class_expansions(g, w, p)
            checks.append(check_C_diagonal(p, phis))
            checks.append(check_CminusB_psd(p))
            if all(v is None or v < c for v in phis):
                checks.append(check_lambda_max_C(p, phis))
    return TheoremReport(
        graph=g, k=k, values=d.values, c=c, a=a, b=b,
        a_plus_b_le_k=a + b <= k, mode=mode, checks=checks,
        pos_classes=pos_cls, neg_classes=neg_cls,
        multiplicity_flag=sel.multiplicity_flag, degenerate_gap_flag=False,
    )


@dataclass
class CorollaryReport:
    graph: Graph
    c: float
    positive_verdict: xp.ExpanderVerdict | None
    negative_verdict: xp.ExpanderVerdict | None
    flags: list[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(
            v is None or v.is_expander
            for v in (self.positive_verdict, self.negative_verdict)
        )

    def as_dict(self) -> dict:
        def vd(v):
            if v is None:
                return None
            return {
                "is_expander": bool(v.is_expander),
                "mode": v.mode,
                "min_phi": None if v.min_phi is None else float(v.min_phi),
                "witness": None if v.witness is None else list(v.witness),
            }

        return {
            "graph": {"n": self.graph.n, "edges": [list(e) for e in self.graph.edges]},
            "c": float(self.c),
            "holds": bool(self.holds),
            "positive": vd(self.positive_verdict),
            "negative": vd(self.negative_verdict),
            "flags": list(self.flags),
        }


def verify_corollary1(g: Graph, budget: int = xp.DEFAULT_BUDGET) -> CorollaryReport:
    """Both support subgraphs of the second eigenvector are
    (lambda_3 - lambda_2)/2-expanders with respect to the squared entries."""
    if g.n < 3:
        raise CertificateError("corollary needs at least 3 nodes")
    d = eigendecompose(laplacian(g))
    sel = select_eigenpair(d, 2)
    y = sel.y
    w = y * y
    c = spectral_gap_c(d, 2)
    supp = sign_support(y)
    flags = []
    tol = default_tolerance(laplacian(g))
    if c <= tol:
        flags.append("degenerate_gap")
    # strict threshold minus tolerance: phi == c must not read as a violation
    c_test = c - tol
    verdicts: list[xp.ExpanderVerdict | None] = []
    for nodes in (supp.positive, supp.negative):
        if not nodes:
            verdicts.append(None)
            flags.append("empty_support")
            continue
        sub = induced_subgraph(g, nodes)
        w_sub = np.array([w[parent] for parent in sub.to_parent])
        if c_test <= 0:
            verdicts.append(None)
            continue
        try:
            v = xp.is_expander(sub.graph, w_sub, c_test, mode="exact")
        except xp.ExactCapExceeded:
            v = xp.is_expander(sub.graph, w_sub, c_test, mode="heuristic", budget=budget)
            flags.append("heuristic_fallback")
        if v.witness is not None:
            v = xp.ExpanderVerdict(
                v.is_expander, v.c,
                sub.to_parent_set(v.witness), v.mode, v.min_phi,
            )
        verdicts.append(v)
    return CorollaryReport(
        graph=g, c=c,
        positive_verdict=verdicts[0], negative_verdict=verdicts[1],
        flags=flags,
    )


def verify_prop_sum(
    g: Graph,
    k: int,
    pos_classes: Sequence[Sequence[int]],
    neg_classes: Sequence[Sequence[int]],
) -> CheckRecord:
    """Gap-vs-expansion-sum bound for a+b = k+1:

        lambda_{a+b} - lambda_{a+b-1} <= sum of all class expansions,

    via the trace route: the gap is at most mu_{a+b} (interlacing plus
    C - B PSD), mu_{a+b} <= trace(C) (C itself is PSD), and each diagonal
    entry of C is at most the matching class expansion.  A class covering
    its whole side has undefined expansion; it contributes 0 (its C diagonal
    entry is exactly 0) and is flagged."""
    a, b = len(pos_classes), len(neg_classes)
    if a + b != k + 1:
        raise CertificateError(f"a+b={a + b} must equal k+1={k + 1}")
    p = build_proof_objects(g, k, pos_classes, neg_classes)
    build_C(p)
    tol = p.tolerance
    phis = class_expansions(g, p.w, p)
    flags = tuple(
        f"class_{i}_covers_whole_side" for i, v in enumerate(phis) if v is None
    )
    phi_sum = float(sum(v for v in phis if v is not None))
    d = eigendecompose(laplacian(g))
    gap = float(d.values[a + b - 1] - d.values[a + b - 2])
    mu_top = float(p.mu[-1])
    trace_C = float(np.trace(p.C))
    margins = [
        phi_sum - gap,
        trace_C - mu_top,
        float(np.linalg.eigvalsh(p.C)[0]),  # C is PSD
    ]
    slack = float(min(margins))
    return CheckRecord("prop_sum", slack >= -tol, slack, tol, flags)
