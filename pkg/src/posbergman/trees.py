"""The complete graph K_n: its oriented matroid, equidistant trees, and positivity.

Edges of K_n are the pairs (i, j), i < j, in lexicographic order; edge k of
that list is ground-set element k + 1, oriented i -> j.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction

from .bergman import coarse_cells, fine_cells
from .errors import CapacityError, InputError
from .initial import (
    flag_of,
    in_positive_bergman_fan,
    is_positive_flag,
    representative_weight,
    weight_vector,
)
from .om import OrientedMatroid, SignedSet, reorient
from .shapes import TreeShape, associahedron_faces, associahedron_leq

KN_MAX = 7


def kn_edges(n):
    return list(itertools.combinations(range(1, n + 1), 2))


def edge_index(n):
    return {e: k for k, e in enumerate(kn_edges(n), start=1)}


def n_from_edge_count(m):
    n = (1 + math.isqrt(1 + 8 * m)) // 2
    if n * (n - 1) // 2 != m:
        raise InputError(f"{m} is not the edge count of a complete graph")
    return n


@lru_cache(maxsize=None)
def kn_oriented_matroid(n):
    """Oriented matroid of K_n with edges oriented i -> j for i < j.

    Returns ``(M, edges)``; ``edges[k]`` is the pair labeled ``k + 1``.
    """
    if n < 3:
        raise InputError("K_n needs n >= 3")
    if n > KN_MAX:
        raise CapacityError(f"K_n is supported for n <= {KN_MAX}")
    edges = kn_edges(n)
    idx = edge_index(n)
    m = len(edges)
    circuits = []
    for size in range(3, n + 1):
        for verts in itertools.combinations(range(1, n + 1), size):
            first, rest = verts[0], verts[1:]
            for order in itertools.permutations(rest):
                if order[0] > order[-1]:
                    continue  # each cycle once per direction
                cycle = (first,) + order
                pos, neg = [], []
                for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                    k = idx[(min(a, b), max(a, b))]
                    (pos if a < b else neg).append(k)
                circuits.append(SignedSet.from_parts(m, pos, neg))
    return OrientedMatroid(m, circuits), tuple(edges)


def permutation_reversals(perm):
    """Edges whose orientation under pi_a -> pi_b (a < b) opposes i -> j (i < j)."""
    perm = tuple(perm)
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise InputError(f"{perm} is not a permutation of 1..{n}")
    where = {v: i for i, v in enumerate(perm)}
    return [k for k, (i, j) in enumerate(kn_edges(n), start=1) if where[j] < where[i]]


@lru_cache(maxsize=None)
def _kn_oriented_by(perm):
    M, _ = kn_oriented_matroid(len(perm))
    return reorient(M, permutation_reversals(perm))


def kn_oriented_by(perm):
    """Oriented matroid of K_n under the acyclic orientation o(pi)."""
    return _kn_oriented_by(tuple(perm))


# ---------------------------------------------------------------------------
# Equidistant trees


@dataclass(frozen=True)
class Node:
    height: Fraction
    children: tuple


@dataclass(frozen=True)
class EquidistantTree:
    """Rooted tree with leaves 1..n; internal vertices carry their height below the root.

    Every leaf sits at height ``h``. Internal edges must have positive length,
    so an internal child is strictly deeper than its parent. Leaf edges may
    have any length, which keeps the whole Bergman fan (a set closed under
    adding a constant) in reach.
    """

    h: Fraction
    root: Node

    def __post_init__(self):
        object.__setattr__(self, "h", Fraction(self.h))
        if self.root.height != 0:
            raise InputError("the root has height 0")
        leaves = []

        def walk(node):
            if len(node.children) < 2:
                raise InputError("internal vertices need at least two children")
            for c in node.children:
                if isinstance(c, Node):
                    if not c.height > node.height:
                        raise InputError("internal edges must have positive length")
                    walk(c)
                else:
                    leaves.append(c)

        walk(self.root)
        if sorted(leaves) != list(range(1, len(leaves) + 1)):
            raise InputError(f"leaves must be labeled 1..n, got {sorted(leaves)}")

    @property
    def n(self):
        return len(self.leaf_order())

    def leaf_order(self):
        out = []

        def walk(node):
            for c in node.children:
                if isinstance(c, Node):
                    walk(c)
                else:
                    out.append(c)

        walk(self.root)
        return out

    def lca_heights(self):
        """Height of the lowest common ancestor for every pair i < j."""
        out = {}

        def walk(node):
            groups = []
            for c in node.children:
                groups.append(walk(c) if isinstance(c, Node) else [c])
            for a, b in itertools.combinations(groups, 2):
                for i in a:
                    for j in b:
                        out[(min(i, j), max(i, j))] = node.height
            return [x for g in groups for x in g]

        walk(self.root)
        return out

    def shape(self):
        def rec(node):
            return tuple(rec(c) if isinstance(c, Node) else c for c in node.children)

        return TreeShape.labeled(rec(self.root))

    def to_json(self):
        def rec(node):
            return {
                "height": _frac_str(node.height),
                "children": [rec(c) if isinstance(c, Node) else {"leaf": c} for c in node.children],
            }

        return {"h": _frac_str(self.h), "root": rec(self.root)}

    @classmethod
    def from_json(cls, data):
        def rec(obj):
            if "leaf" in obj:
                return int(obj["leaf"])
            return Node(Fraction(obj["height"]), tuple(rec(c) for c in obj["children"]))

        try:
            return cls(Fraction(data["h"]), rec(data["root"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed tree JSON: {exc}") from exc


def _frac_str(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def distance_vector(tree):
    """Leaf-to-leaf path lengths d_ij = 2h - 2h(lca), in lexicographic edge order."""
    lca = tree.lca_heights()
    return tuple(2 * tree.h - 2 * lca[e] for e in kn_edges(tree.n))


def ultrametric_violation(w):
    """First triangle (i, j, k) whose maximum weight is attained only once, else None."""
    w = weight_vector(w)
    n = n_from_edge_count(len(w))
    idx = edge_index(n)
    for i, j, k in itertools.combinations(range(1, n + 1), 3):
        vals = sorted([w[idx[(i, j)] - 1], w[idx[(i, k)] - 1], w[idx[(j, k)] - 1]])
        if vals[1] != vals[2]:
            return (i, j, k)
    return None


def tree_from_point(w):
    """The equidistant tree whose distance vector is ``w``.

    Clusters merge at the distinct values of ``w`` taken in decreasing
    order from the root; equal values merge simultaneously.
    """
    w = weight_vector(w)
    bad = ultrametric_violation(w)
    if bad is not None:
        raise InputError(f"not in the Bergman fan: triangle {bad} has a unique maximum")
    n = n_from_edge_count(len(w))
    idx = edge_index(n)

    def d(i, j):
        return w[idx[(min(i, j), max(i, j))] - 1]

    h = max(w) / 2

    def build(S):
        top = max(d(i, j) for i, j in itertools.combinations(S, 2))
        parts = []
        for x in S:
            for part in parts:
                if d(x, part[0]) < top:
                    part.append(x)
                    break
            else:
                parts.append([x])
        kids = tuple(p[0] if len(p) == 1 else build(p) for p in parts)
        return Node(h - top / 2, kids)

    return EquidistantTree(h, build(list(range(1, n + 1))))


# ---------------------------------------------------------------------------
# Positivity of a point with respect to a leaf order


POSITIVITY_MODES = ("fan", "cycles", "triangles", "branching", "planar")


def is_positive_point(w, perm, mode="fan"):
    """Whether ``w`` lies in the positive Bergman fan of K_n oriented by ``perm``.

    fan:       M_w is acyclic for the orientation o(perm).
    cycles:    every cycle attains its maximum on both signs.
    triangles: every triangle attains its maximum on both signs.
    branching: for leaves i, j, k in perm order, j never splits off first.
    planar:    the tree can be drawn with leaves in perm order.
    """
    w = weight_vector(w)
    perm = tuple(perm)
    n = len(perm)
    if n_from_edge_count(len(w)) != n:
        raise InputError("weight vector and permutation disagree on n")
    bad = ultrametric_violation(w)
    if bad is not None:
        raise InputError(f"not in the Bergman fan: triangle {bad} has a unique maximum")
    where = {v: i for i, v in enumerate(perm)}
    idx = edge_index(n)

    def d(a, b):
        return w[idx[(min(a, b), max(a, b))] - 1]

    if mode == "fan":
        return in_positive_bergman_fan(kn_oriented_by(perm), w)
    if mode == "cycles":
        return is_positive_flag(kn_oriented_by(perm), flag_of(w), mode=2)
    if mode == "triangles":
        for tri in itertools.combinations(range(1, n + 1), 3):
            p, q, r = sorted(tri, key=where.get)
            # cycle p -> q -> r -> p under o(perm): pq, qr forward, pr backward
            top = max(d(p, q), d(q, r), d(p, r))
            if not (d(p, r) == top and top in (d(p, q), d(q, r))):
                return False
        return True
    tree = tree_from_point(w)
    if mode == "branching":
        lca = tree.lca_heights()

        def depth(a, b):
            return lca[(min(a, b), max(a, b))]

        for tri in itertools.combinations(range(1, n + 1), 3):
            i, j, k = sorted(tri, key=where.get)
            if depth(i, k) > depth(i, j):
                return False
        return True
    if mode == "planar":
        return _drawable(tree.root, where)
    raise InputError(f"unknown mode {mode!r}")


def _drawable(node, where):
    """Every subtree occupies a contiguous block of positions."""
    ok = True

    def walk(v):
        nonlocal ok
        pos = []
        for c in v.children:
            pos.extend(walk(c) if isinstance(c, Node) else [where[c]])
        if max(pos) - min(pos) + 1 != len(pos):
            ok = False
        return pos

    walk(node)
    return ok


# ---------------------------------------------------------------------------
# Coarse poset of the positive complex and the associahedron


@dataclass
class ShapePoset:
    """Finite poset on tree shapes; ``leq`` holds the strict relation pairs."""

    elements: list
    less: set

    def leq(self, a, b):
        return a == b or (a, b) in self.less

    def hasse(self):
        import networkx as nx

        G = nx.DiGraph()
        G.add_nodes_from(range(len(self.elements)))
        index = {x: i for i, x in enumerate(self.elements)}
        for a, b in self.less:
            if not any((a, c) in self.less and (c, b) in self.less for c in self.elements):
                G.add_edge(index[a], index[b])
        return G


TOP = "1^"


def coarse_poset_positive(n, check=True):
    """Face poset of the coarse subdivision of the positive complex of K_n, with a top added.

    Elements are the tree shapes of the coarse cells (read off each cell's
    representative point); the star tree is the empty face coming from the
    trivial flag. sigma < tau iff sigma is obtained from tau by contracting
    internal edges.
    """
    if n > KN_MAX:
        raise CapacityError(f"coarse poset supported for n <= {KN_MAX}")
    M, _ = kn_oriented_matroid(n)
    summary = coarse_cells(M, positive=True, check=check)
    shapes = []
    for cell in summary.coarse_cells:
        found = {tree_from_point(representative_weight(f)).shape() for f in cell.flags}
        if len(found) != 1:
            raise AssertionError(f"coarse cell spans several tree types: {found}")
        (s,) = found
        if not s.is_order_planar():
            raise AssertionError(f"shape {s} is not drawn with leaves in order")
        shapes.append(s)
    if len(set(shapes)) != len(shapes):
        raise AssertionError("two coarse cells share a tree type")
    members = set(shapes)
    less = set()
    for t in shapes:
        for s in t.contractions():
            if s in members:
                less.add((s, t))
        less.add((t, TOP))
    return ShapePoset(shapes + [TOP], less)


EMPTY_FACE = "0^"


def associahedron_poset(n):
    """All faces of the associahedron, the polytope (no brackets) and the empty face included."""
    faces = associahedron_faces(n)
    less = {(F, G) for F in faces for G in faces if F != G and associahedron_leq(F, G)}
    less |= {(EMPTY_FACE, F) for F in faces}
    return ShapePoset([EMPTY_FACE] + faces, less)


def bracketing_of(shape):
    """Clusters of an order-planar shape as intervals (a, b); the top goes to the empty face."""
    if shape == TOP:
        return EMPTY_FACE
    return frozenset((min(c), max(c)) for c in shape.clusters())


def check_duality(P, Q):
    """Verify that ``bracketing_of`` is an order-reversing bijection P -> Q.

    Returns the bijection as a dict; raises AssertionError on any failure.
    """
    phi = {x: bracketing_of(x) for x in P.elements}
    if len(set(phi.values())) != len(phi) or set(phi.values()) != set(Q.elements):
        raise AssertionError("bracketing map is not a bijection onto the faces")
    for x in P.elements:
        for y in P.elements:
            if P.leq(x, y) != Q.leq(phi[y], phi[x]):
                raise AssertionError(f"order not reversed at {x}, {y}")
    return phi


def is_anti_isomorphic(P, Q):
    """Graph-matching test: Hasse(P) is isomorphic to the reversed Hasse(Q)."""
    import networkx as nx

    return nx.is_isomorphic(P.hasse(), Q.hasse().reverse(copy=True))


# ---------------------------------------------------------------------------
# Covering of B(K_n) by the positive complexes of all orientations


@dataclass
class CoveringReport:
    n: int
    cells: list
    counts: list
    covered_by_first_fixed: bool

    @property
    def total(self):
        return len(self.cells)

    @property
    def expected_total(self):
        n = self.n
        return math.factorial(n) * math.factorial(n - 1) // 2 ** (n - 1)

    @property
    def uniform(self):
        return set(self.counts) == {2 ** (self.n - 1)}


def covering_statistics(n, max_n=5):
    """For every full-dimensional fine cell of B(K_n), count the orientations whose
    positive complex contains it."""
    if n > max_n:
        raise CapacityError(f"covering statistics supported for n <= {max_n}")
    M, _ = kn_oriented_matroid(n)
    cells = fine_cells(M, positive=False, check=False).maximal
    perms = list(itertools.permutations(range(1, n + 1)))
    oriented = {p: kn_oriented_by(p) for p in perms}
    counts, covered = [], True
    for flag in cells:
        hits = [p for p in perms if is_positive_flag(oriented[p], flag, mode=2)]
        counts.append(len(hits))
        if not any(p[0] == 1 for p in hits):
            covered = False
    return CoveringReport(n, cells, counts, covered)
