import numpy as np
import pytest

from nodal_expansion import certificate as ct
from nodal_expansion.generators import gen_gnp
from nodal_expansion.graph import build_graph, is_connected, laplacian, sign_support
from nodal_expansion.spectral import eigendecompose, select_eigenpair


def k2():
    return build_graph(2, [(0, 1)])


def p4():
    return build_graph(4, [(0, 1), (1, 2), (2, 3)])


def barbell():
    # two triangles joined by an edge
    return build_graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)])


class TestBuildProofObjects:
    def test_k2_hand_example(self):
        p = ct.build_proof_objects(k2(), 2, [[0]], [[1]])
        assert p.a == 1 and p.b == 1
        assert np.allclose(p.z, [1 / np.sqrt(2), 1 / np.sqrt(2)], atol=1e-12)
        assert np.allclose(p.B, [[-1, 1], [1, -1]], atol=1e-12)
        assert np.allclose(p.mu, [-2, 0], atol=1e-12)

    def test_p4_sign_structure(self):
        p = ct.build_proof_objects(p4(), 2, [[0], [1]], [[2, 3]])
        assert p.a == 2 and p.b == 1
        assert p.B[0, 1] <= 1e-12  # same side
        assert p.B[0, 2] >= -1e-12 and p.B[1, 2] >= -1e-12  # cross side

    def test_off_support_class_rejected(self):
        with pytest.raises(ct.CertificateError):
            ct.build_proof_objects(p4(), 2, [[0], [2]], [[3]])

    def test_empty_class_rejected(self):
        with pytest.raises(ct.CertificateError):
            ct.build_proof_objects(p4(), 2, [[0, 1], []], [[2, 3]])

    def test_My_is_zero(self):
        for g, k in ((p4(), 2), (barbell(), 2), (barbell(), 3)):
            p = ct.build_proof_objects(
                g, k, *_whole_side_classes(g, k)
            )
            assert np.max(np.abs(p.M @ p.y)) <= 1e-8 * (1 + abs(p.lambda_k))

    def test_split_vectors_orthonormal(self):
        p = ct.build_proof_objects(p4(), 2, [[0], [1]], [[2, 3]])
        y_hat = p.y_split / p.z[:, None]
        gram = y_hat @ y_hat.T
        assert np.max(np.abs(gram - np.eye(3))) <= 1e-9

    def test_B_edge_sum_cross_check(self):
        # off-diagonal entries equal the explicit edge sum
        # -(sum over edges between the classes of y_u y_v) / (z_i z_j)
        g = barbell()
        d = eigendecompose(laplacian(g))
        supp = sign_support(select_eigenpair(d, 3).y)
        pos = [[i] for i in supp.positive]
        neg = [list(supp.negative)]
        p = ct.build_proof_objects(g, 3, pos, neg)
        for i, ci in enumerate(p.parts):
            for j, cj in enumerate(p.parts):
                if i == j:
                    continue
                s = -sum(
                    p.y[u] * p.y[v]
                    for u, v in g.edges
                    if (u in ci and v in cj) or (u in cj and v in ci)
                )
                assert abs(p.B[i, j] - s / (p.z[i] * p.z[j])) <= 1e-9


def _whole_side_classes(g, k):
    d = eigendecompose(laplacian(g))
    y = select_eigenpair(d, k).y
    supp = sign_support(y)
    pos = [list(supp.positive)] if supp.positive else []
    neg = [list(supp.negative)] if supp.negative else []
    return pos, neg


class TestChecks:
    def test_k2_all_steps(self):
        p = ct.build_proof_objects(k2(), 2, [[0]], [[1]])
        d = eigendecompose(laplacian(k2()))
        assert ct.check_B_sign_pattern(p).passed
        assert ct.check_Bz_zero(p).passed
        rec = ct.check_interlacing(p, d)
        assert rec.passed and abs(rec.slack) <= 1e-12  # exact equality here
        C = ct.build_C(p)
        assert np.allclose(C, 0, atol=1e-12)  # no same-side partners
        phis = ct.class_expansions(k2(), p.w, p)
        assert phis == [None, None]
        assert ct.check_C_diagonal(p, phis).passed
        rec = ct.check_CminusB_psd(p)
        assert rec.passed
        assert np.allclose(p.C - p.B, [[1, -1], [-1, 1]], atol=1e-12)
        p.c = 1.0  # k = n leaves no gap; any positive threshold works here
        assert ct.check_lambda_max_C(p, phis).passed

    def test_p4_all_steps(self):
        g = p4()
        d = eigendecompose(laplacian(g))
        p = ct.build_proof_objects(g, 2, [[0], [1]], [[2, 3]], decomposition=d)
        assert ct.check_B_sign_pattern(p).passed
        rec = ct.check_Bz_zero(p)
        assert rec.passed and abs(rec.slack) <= 1e-9
        assert ct.check_interlacing(p, d).passed
        ct.build_C(p)
        assert p.C[0, 0] >= -1e-12
        assert np.max(np.abs(p.C @ p.z)) <= 1e-9
        phis = ct.class_expansions(g, p.w, p)
        # hand values: both positive-side classes see the single support edge
        assert abs(phis[0] - (1 + np.sqrt(2))) < 1e-9
        assert abs(phis[1] - (1 + np.sqrt(2))) < 1e-9
        assert phis[2] is None
        assert abs(p.C[0, 0] - (np.sqrt(2) - 1)) < 1e-9
        assert ct.check_C_diagonal(p, phis).passed
        assert ct.check_CminusB_psd(p).passed

    def test_lambda_max_C_precondition(self):
        g = p4()
        p = ct.build_proof_objects(g, 2, [[0], [1]], [[2, 3]])
        ct.build_C(p)
        with pytest.raises(ct.CertificateError):
            # claim a tiny threshold so the class expansions violate it
            p2 = ct.build_proof_objects(g, 2, [[0], [1]], [[2, 3]])
            p2.c = 1e-6
            ct.build_C(p2)
            ct.check_lambda_max_C(p2, ct.class_expansions(g, p2.w, p2))


class TestVerifyTheorem1:
    def test_p4_k2(self):
        r = ct.verify_theorem1(p4(), 2)
        assert (r.a, r.b) == (1, 1)
        assert r.theorem_holds and not r.degenerate_gap_flag
        assert all(c.passed for c in r.checks)

    def test_c4_degenerate(self):
        c4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        r = ct.verify_theorem1(c4, 2)
        assert r.degenerate_gap_flag and r.theorem_holds

    def test_small_connected_sweep(self):
        rng = np.random.default_rng(3)
        done = 0
        while done < 25:
            n = int(rng.integers(3, 7))
            g = gen_gnp(n, 0.6, int(rng.integers(1 << 32)))
            if not is_connected(g):
                continue
            for k in range(2, n):
                r = ct.verify_theorem1(g, k)
                assert r.theorem_holds
            done += 1

    def test_k_out_of_range(self):
        with pytest.raises(ct.CertificateError):
            ct.verify_theorem1(p4(), 4)

    def test_report_schema(self):
        r = ct.verify_theorem1(p4(), 2)
        d = r.as_dict()
        assert set(d) == {
            "graph", "k", "lambda", "c", "a", "b", "theorem_holds",
            "mode", "flags", "checks", "partitions",
        }
        assert set(d["partitions"]) == {"positive", "negative"}
        for chk in d["checks"]:
            assert set(chk) == {"name", "passed", "slack", "tolerance"}


class TestVerifyCorollary1:
    def test_p4(self):
        r = ct.verify_corollary1(p4())
        assert r.holds
        assert abs(r.c - np.sqrt(2) / 2) < 1e-9

    def test_p3_single_node_supports(self):
        r = ct.verify_corollary1(build_graph(3, [(0, 1), (1, 2)]))
        assert r.holds  # one-node supports have no proper cut

    def test_triangle_barbell(self):
        r = ct.verify_corollary1(barbell())
        assert r.holds


class TestVerifyPropSum:
    def test_p4_k2(self):
        rec = ct.verify_prop_sum(p4(), 2, [[0], [1]], [[2, 3]])
        assert rec.passed
        assert "class_2_covers_whole_side" in rec.flags
        # direct inequality: lambda_3 - lambda_2 <= phi sum
        gap = 2 - (2 - np.sqrt(2))
        assert gap <= 2 * (1 + np.sqrt(2)) + 1e-9

    def test_k2_k1_inconsistent_example_raises(self):
        # the lambda_1 eigenvector of connected K2 is constant, so {1} is
        # not inside the negative support; the construction must refuse it
        with pytest.raises(ct.CertificateError):
            ct.verify_prop_sum(k2(), 1, [[0]], [[1]])

    def test_wrong_count_rejected(self):
        with pytest.raises(ct.CertificateError):
            ct.verify_prop_sum(p4(), 2, [[0, 1]], [[2, 3]])

    def test_random_instances(self):
        rng = np.random.default_rng(8)
        done = 0
        while done < 15:
            n = int(rng.integers(5, 9))
            g = gen_gnp(n, 0.5, int(rng.integers(1 << 32)))
            if not is_connected(g):
                continue
            k = 3
            d = eigendecompose(laplacian(g))
            y = select_eigenpair(d, k).y
            supp = sign_support(y)
            if len(supp.positive) < 2 or len(supp.negative) < 2:
                continue
            pos = [[supp.positive[0]], list(supp.positive[1:])]
            neg = [[supp.negative[0]], list(supp.negative[1:])]
            rec = ct.verify_prop_sum(g, k, pos, neg)
            assert rec.passed
            done += 1
