"""
No locally transitive graphs of small valency
=============================================

Run through every connection set S with 1 in S, |S| <= 3 and <S> = G, one
per Aut(G)-class, and test each bipartite graph for local transitivity.
"""

from collections import Counter

from metabicay.metacyclic import GroupParams
from metabicay.symmetry.analysis import survey_small_connection_sets

G = GroupParams(5, 2, 1, 1)
report = survey_small_connection_sets(G, max_size=3)

print(len(report.entries), "classes covering", report.generating_sets, "connection sets")
print(Counter(e.report.label for e in report.entries))
for e in report.entries[:5]:
    print(sorted(e.S), "|Aut| =", e.report.aut_order, e.report.label)

# the point of the exercise
print("locally transitive:", len(report.hits))
