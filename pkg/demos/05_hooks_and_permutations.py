"""
Hook lengths and increasing trees
=================================

The positive complex of K_n has (n-1)! maximal cells. A coarse cell with
binary shape t contains (n-1)!/prod d(v) of them, d(v) counting the internal
vertices at or below v. Each such cell is an increasing labeling, and
increasing trees are in bijection with permutations.
"""

import math

from posbergman.shapes import (
    hook_count,
    increasing_labelings,
    permutation_of_tree,
    planar_binary_shapes,
    shape_of_increasing,
    tree_of_permutation,
)

for n in (4, 5):
    shapes = planar_binary_shapes(n)
    counts = [hook_count(t) for t in shapes]
    brute = [len(increasing_labelings(t)) for t in shapes]
    print(f"n={n}: {counts}  sum={sum(counts)}={math.factorial(n - 1)}  brute force agrees: {counts == brute}")

# %%
# Split a permutation at its minimum, recursively
t = tree_of_permutation("57316284")
print("root", t.label, "| shape", shape_of_increasing(t))
print("read back:", "".join(map(str, permutation_of_tree(t))))
