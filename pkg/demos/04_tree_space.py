"""
Equidistant trees and the space of phylogenetic trees
=====================================================

A point of the Bergman fan of K_n is an ultrametric: the distance vector of
a unique equidistant tree. Being in the positive fan for a leaf order means
the tree can be drawn with its leaves in that order.
"""

import itertools
from fractions import Fraction

from posbergman.trees import (
    POSITIVITY_MODES,
    EquidistantTree,
    Node,
    associahedron_poset,
    check_duality,
    coarse_poset_positive,
    covering_statistics,
    distance_vector,
    is_anti_isomorphic,
    is_positive_point,
    tree_from_point,
)

T = EquidistantTree(3, Node(Fraction(0), (Node(Fraction(1), (Node(Fraction(2), (1, 2)), 3)), 4)))
w = distance_vector(T)
print("distances (12,13,14,23,24,34):", [str(x) for x in w])
print("recovered shape:", tree_from_point(w).shape())

# %%
# Which leaf orders make w positive? All five tests agree.
for perm in itertools.permutations(range(1, 5)):
    answers = {m: is_positive_point(w, perm, m) for m in POSITIVITY_MODES}
    assert len(set(answers.values())) == 1
    if answers["fan"]:
        print("positive for", "".join(map(str, perm)))

# %%
# The coarse cells of the positive complex are the planar tree shapes;
# with a top attached the poset is dual to the associahedron.
for n in (4, 5):
    P = coarse_poset_positive(n)
    Q = associahedron_poset(n)
    check_duality(P, Q)
    print(f"n={n}: {len(P.elements)} elements, anti-isomorphic: {is_anti_isomorphic(P, Q)}")

# %%
# Every maximal cell of B(K_n) lies in 2^(n-1) of the n! positive complexes
r = covering_statistics(4)
print(r.total, "cells, each in", sorted(set(r.counts)), "complexes;",
      "first-fixed orders cover:", r.covered_by_first_fixed)
