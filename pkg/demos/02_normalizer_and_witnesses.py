"""
Symmetry from the group side
============================

Every automorphism that normalizes the translations is a sigma map (fixes
the two parts) or a delta map (swaps them).  Both kinds can be found from
Aut(G) alone, and two explicit ones already prove transitivity.
"""

from metabicay.bicayley import compute_F, compute_I, normalizer_decomposition
from metabicay.havt import HavtParams, certify_with_witnesses, construct_havt, havt_witnesses
from metabicay.metacyclic import GroupParams, enumerate_automorphisms
from metabicay.symmetry.search import automorphism_group

G = GroupParams(5, 2, 1, 1)
auts = enumerate_automorphisms(G)
print("|Aut(G)| =", len(auts))

c = construct_havt(HavtParams(G, m=1, k=4, l=0))
F = compute_F(c.graph, auts)
I = compute_I(c.graph, auts)
print("|F| =", len(F), " |I| =", len(I))

# translations, F and one delta map generate the normalizer
N = normalizer_decomposition(c.graph, auts)
print("normalizer order:", N.order())

# here the normalizer is already the whole automorphism group
A = automorphism_group(c.graph)
print("|Aut(graph)| =", A.order(), " equal:", N == A)

# the fast path: two maps written down from the parameters
w = havt_witnesses(c)
print("tau: a ->", w.tau.image_a, "  lambda: a ->", w.lam.image_a, ", b ->", w.lam.image_b)
cert = certify_with_witnesses(c, w)
print("vertex orbits:", cert.vertex_orbits, " edge orbits:", cert.edge_orbits,
      " certified:", cert.ok)
