"""
The 54-vertex half-arc-transitive graph
=======================================

Build the smallest member of the family over the metacyclic group of order
27, then let the automorphism engine confirm its symmetry type.
"""

from metabicay.havt import HavtParams, construct_havt
from metabicay.metacyclic import GroupParams
from metabicay.symmetry.analysis import classify_symmetry, orbits_on
from metabicay.symmetry.search import automorphism_group

# G = <a, b | a^9 = b^3 = 1, b^-1 a b = a^4>
G = GroupParams(p=3, alpha=2, beta=1, gamma=1)
print(G, "has order", G.order)

# m = 1, k = 2, l = 0; the quadratic has two roots and "+" picks one of them
c = construct_havt(HavtParams(G, m=1, k=2, l=0, sign="+"))
print("e =", c.e.value, " n =", c.n.value)
print("T  =", [t.value for t in c.T])
print("T' =", [t.value for t in c.Tprime])
print("S  =", sorted(c.S))
print(c.graph.n, "vertices, valency", c.valency)

# the full automorphism group, found by refinement and backtracking
A = automorphism_group(c.graph)
print("|Aut| =", A.order())

# two arc orbits: every edge is reachable, but never in both directions
print("arc orbit sizes:", [len(o) for o in orbits_on(c.graph, A, "arcs")])

report = classify_symmetry(c.graph, A)
print(report.label, "- vertex stabilizer of order", report.stabilizer_order,
      "cyclic" if report.stabilizer_is_cyclic else "non-cyclic")
