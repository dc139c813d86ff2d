"""
Positive tropical membership for a linear ideal
===============================================

The oriented matroid of a linear ideal has as circuits the sign patterns of
its minimal-support linear forms. For the cycle space of the K4 digraph
these are the oriented cycles, and membership of w in the positive tropical
variety reduces to acyclicity of M_w.
"""

from posbergman.initial import in_positive_bergman_fan
from posbergman.om import (
    circuits_from_matrix,
    incidence_matrix,
    kernel_rows,
    matroid_of_columns,
)
from posbergman.trees import kn_edges, kn_oriented_matroid

A = incidence_matrix(4, kn_edges(4))
cycles = kernel_rows(A)
for row in cycles:
    print([str(x) for x in row])

M = circuits_from_matrix(cycles)
print("same as K4:", M == kn_oriented_matroid(4)[0] == matroid_of_columns(A))

for w in [(1, 1, 1, 1, 1, 0), (0, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0)]:
    print(w, "member:", in_positive_bergman_fan(M, w))

# the incidence matrix's own row space is the cut space: its circuits are bonds
print("row space of the incidence matrix:", circuits_from_matrix(A))
