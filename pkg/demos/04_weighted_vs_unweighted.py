"""Why the weights matter: two expanders joined by a long path.

Take two copies of a random 3-regular expander bridged by a path.  The
second eigenvector is nearly constant on each block and crosses zero along
the path, so its positive support contains one block plus half the path.

Unweighted, that support is a poor expander: cutting the path in half
costs one edge over many nodes.  Under the squared-eigenvector weights the
path carries almost no mass, the cheap path cuts have tiny denominators
too, and the support is a genuine c-expander with a large margin -- the
guarantee the k = 2 corollary makes.
"""

import numpy as np

from nodal_expansion import (
    eigendecompose,
    gen_expander_path_expander,
    induced_subgraph,
    is_expander,
    laplacian,
    select_eigenpair,
    sign_support,
)

g = gen_expander_path_expander(10, 3, path_len=20, seed=7)
d = eigendecompose(laplacian(g))
lam2, lam3 = d.values[1], d.values[2]
c = (lam3 - lam2) / 2
print(f"n={g.n} m={len(g.edges)}")
print(f"lambda_2={lam2:.6f} lambda_3={lam3:.6f} c={c:.6f}")
print("lambda_2 below the gap lambda_3 - lambda_2:", lam2 < lam3 - lam2)

y = select_eigenpair(d, 2).y
supp = sign_support(y)
print(f"\npositive support: {len(supp.positive)} nodes (block 1 + half the path)")

sub = induced_subgraph(g, supp.positive)
w = (y * y)[list(sub.to_parent)]

weighted = is_expander(sub.graph, w, c, mode="exact")
unweighted = is_expander(sub.graph, np.ones(sub.graph.n), c, mode="exact")
print(f"\nweighted   min phi = {weighted.min_phi:.4f}  (c = {c:.4f})")
print(f"unweighted min phi = {unweighted.min_phi:.4f}")
print("weighted support is a c-expander:", weighted.is_expander)

# The unweighted optimum is the half-path cut: one edge / (path_len/2).
cheap = is_expander(sub.graph, np.ones(sub.graph.n), 2 / 20 + 1e-9, mode="exact")
print("\ncheapest unweighted cut:", cheap.witness)
print("its phi:", cheap.min_phi, "= 2/path_len")
print(
    "weighted/unweighted margin ratio:",
    round(weighted.min_phi / unweighted.min_phi, 2),
)
