"""The two companion results, numerically.

Corollary: for k = 2, both sign supports of the second eigenvector are
c-expanders under the squared-entry weights, c = (lambda_3 - lambda_2)/2.

Sum proposition: when the supports do split into a + b = k + 1 classes,
the gap lambda_{k+1} - lambda_k is at most the sum of all class
expansions.
"""

import numpy as np

from nodal_expansion import (
    eigendecompose,
    gen_gnp,
    is_connected,
    laplacian,
    select_eigenpair,
    sign_support,
    verify_corollary1,
    verify_prop_sum,
)

# Corollary on a batch of random connected graphs.
rng = np.random.default_rng(5)
print("corollary, 20 random connected graphs:")
done = 0
while done < 20:
    n = int(rng.integers(5, 12))
    g = gen_gnp(n, 0.4, int(rng.integers(1 << 32)))
    if not is_connected(g):
        continue
    r = verify_corollary1(g)
    mins = [
        None if v is None or v.min_phi is None else round(v.min_phi, 4)
        for v in (r.positive_verdict, r.negative_verdict)
    ]
    print(f"  n={n:2d} c={r.c:.4f} holds={r.holds} side min phis={mins}")
    assert r.holds
    done += 1

# Sum proposition: singleton-vs-rest classes on each side give a+b = k+1
# whenever both supports have at least two nodes.
print("\nsum proposition (a + b = k + 1), k = 3:")
done = 0
while done < 8:
    n = int(rng.integers(6, 10))
    g = gen_gnp(n, 0.5, int(rng.integers(1 << 32)))
    if not is_connected(g):
        continue
    d = eigendecompose(laplacian(g))
    supp = sign_support(select_eigenpair(d, 3).y)
    if len(supp.positive) < 2 or len(supp.negative) < 2:
        continue
    pos = [[supp.positive[0]], list(supp.positive[1:])]
    neg = [[supp.negative[0]], list(supp.negative[1:])]
    rec = verify_prop_sum(g, 3, pos, neg)
    gap = d.values[3] - d.values[2]
    print(f"  n={n:2d} gap={gap:.4f} slack={rec.slack:.4f} passed={rec.passed}")
    assert rec.passed
    done += 1
