"""Rooted leaf-labeled tree shapes, increasing trees, and the associahedron.

A shape is a nested tuple: a leaf is an ``int`` label, an internal vertex is
a tuple of at least two children. Child order is the planar order.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional

from .errors import CapacityError, InputError


def _leaves(node):
    if isinstance(node, int):
        return [node]
    return [x for child in node for x in _leaves(child)]


def _canon(node):
    return _canon_min(node)[0]


def _canon_min(node):
    """Canonical form together with the smallest leaf below ``node``."""
    if isinstance(node, int):
        return node, node
    kids = sorted((_canon_min(c) for c in node), key=lambda km: km[1])
    if len(kids) < 2:
        raise InputError("internal vertices need at least two children")
    return tuple(k for k, _ in kids), kids[0][1]


@dataclass(frozen=True)
class TreeShape:
    """Combinatorial type of a rooted tree with leaves labeled ``1..n``.

    Shapes built through :meth:`labeled` are canonical: children are sorted by
    their smallest leaf, so two shapes compare equal iff they have the same
    clusters.
    """

    root: tuple

    def __post_init__(self):
        leaves = _leaves(self.root)
        if sorted(leaves) != list(range(1, len(leaves) + 1)):
            raise InputError(f"leaves must be labeled 1..n, got {sorted(leaves)}")
        if isinstance(self.root, int) and len(leaves) != 1:
            raise InputError("bad root")

        def check(node):
            if isinstance(node, tuple):
                if len(node) < 2:
                    raise InputError("internal vertices need at least two children")
                for c in node:
                    check(c)

        check(self.root)

    @classmethod
    def labeled(cls, root):
        return cls(_canon(root))

    @classmethod
    def from_clusters(cls, n, clusters):
        """Shape whose non-root internal vertices have the given leaf sets."""
        clusters = sorted({frozenset(c) for c in clusters}, key=len)
        full = frozenset(range(1, n + 1))
        for c in clusters:
            if len(c) < 2 or not c < full:
                raise InputError(f"bad cluster {sorted(c)}")

        def rec(S):
            inside = [c for c in clusters if c < S]
            maximal = [c for c in inside if not any(c < d for d in inside)]
            covered = set().union(*maximal) if maximal else set()
            kids = [rec(c) for c in maximal] + sorted(S - covered)
            return tuple(kids)

        for a, b in itertools.combinations(clusters, 2):
            if a & b and not (a <= b or b <= a):
                raise InputError("clusters must be nested or disjoint")
        return cls.labeled(rec(full))

    @property
    def n(self):
        return len(_leaves(self.root))

    def leaves(self):
        return _leaves(self.root)

    def internal_nodes(self):
        """Internal vertices in preorder."""
        out = []

        def walk(node):
            if isinstance(node, tuple):
                out.append(node)
                for c in node:
                    walk(c)

        walk(self.root)
        return out

    def clusters(self):
        """Leaf sets of the non-root internal vertices."""
        return frozenset(frozenset(_leaves(v)) for v in self.internal_nodes()[1:])

    def is_binary(self):
        return all(len(v) == 2 for v in self.internal_nodes())

    def is_order_planar(self):
        """True iff the leaves read 1..n from left to right."""
        return self.leaves() == list(range(1, self.n + 1))

    def contract(self, cluster):
        """Contract the internal edge above the vertex with leaf set ``cluster``."""
        cluster = frozenset(cluster)

        def rec(node):
            if isinstance(node, int):
                return (node,)
            kids = []
            for c in node:
                if isinstance(c, tuple) and frozenset(_leaves(c)) == cluster:
                    kids.extend(rec_children(c))
                else:
                    kids.extend(rec(c))
            return (tuple(kids),)

        def rec_children(node):
            out = []
            for c in node:
                out.extend(rec(c))
            return out

        if cluster not in self.clusters():
            raise InputError(f"{sorted(cluster)} is not a cluster of this shape")
        (root,) = rec(self.root)
        return TreeShape(root)

    def contractions(self):
        """Every shape reachable by contracting internal edges, excluding self."""
        seen = set()
        frontier = [self]
        while frontier:
            nxt = []
            for t in frontier:
                for c in t.clusters():
                    s = t.contract(c)
                    if s not in seen:
                        seen.add(s)
                        nxt.append(s)
            frontier = nxt
        return seen

    def __str__(self):
        def fmt(node):
            if isinstance(node, int):
                return str(node)
            return "(" + ",".join(fmt(c) for c in node) + ")"

        return fmt(self.root)


def planar_binary_shapes(n):
    """All binary shapes whose leaves read 1..n left to right (Catalan(n-1) many)."""

    def rec(lo, hi):
        if lo == hi:
            return [lo]
        out = []
        for mid in range(lo, hi):
            for left in rec(lo, mid):
                for right in rec(mid + 1, hi):
                    out.append((left, right))
        return out

    return [TreeShape(t) for t in rec(1, n)]


def binary_shapes(n):
    """All leaf-labeled rooted binary shapes on n leaves, canonical form ((2n-3)!! many)."""
    if n == 1:
        return [TreeShape(1)]
    out = []
    # insert leaf n on every edge (including above the root) of each shape on n-1 leaves
    for t in binary_shapes(n - 1):

        def inserts(node):
            yield (node, n)
            if isinstance(node, tuple):
                a, b = node
                for x in inserts(a):
                    yield (x, b)
                for y in inserts(b):
                    yield (a, y)

        for new in inserts(t.root):
            out.append(TreeShape.labeled(new))
    return out


def hook_count(shape):
    """(n-1)! / prod_v d(v) for a binary shape, d(v) = internal vertices below and at v."""
    denom = 1

    def walk(node):
        nonlocal denom
        if isinstance(node, int):
            return 0
        if len(node) != 2:
            raise InputError("hook_count needs a binary shape")
        d = 1 + walk(node[0]) + walk(node[1])
        denom *= d
        return d

    walk(shape.root)
    return math.factorial(shape.n - 1) // denom


# ---------------------------------------------------------------------------
# Increasing trees


@dataclass(frozen=True)
class IncreasingTree:
    """Binary tree on labeled vertices; ``left``/``right`` are ``None`` when absent."""

    label: int
    left: Optional["IncreasingTree"] = None
    right: Optional["IncreasingTree"] = None

    def labels(self):
        out = [self.label]
        for c in (self.left, self.right):
            if c is not None:
                out.extend(c.labels())
        return out

    def is_increasing(self):
        return all(
            c is None or (c.label > self.label and c.is_increasing())
            for c in (self.left, self.right)
        )

    def to_json(self):
        return {
            "label": self.label,
            "left": self.left.to_json() if self.left else None,
            "right": self.right.to_json() if self.right else None,
        }


def _skeleton(shape):
    """Preorder list of (parent index, side) for the internal vertices of a binary shape."""
    out = []

    def walk(node, parent, side):
        idx = len(out)
        out.append((parent, side))
        for s, c in enumerate(node):
            if isinstance(c, tuple):
                walk(c, idx, s)

    walk(shape.root, None, None)
    return out


def _build(skel, labels):
    kids = {i: [None, None] for i in range(len(skel))}
    for i in range(len(skel) - 1, 0, -1):
        p, side = skel[i]
        kids[p][side] = IncreasingTree(labels[i], *kids[i])
    return IncreasingTree(labels[0], *kids[0])


def increasing_labelings(shape, max_vertices=9):
    """All labelings of the internal vertices by 1..k increasing away from the root.

    Brute force over all k! labelings.
    """
    if not shape.is_binary():
        raise InputError("increasing labelings are built for binary shapes")
    skel = _skeleton(shape)
    k = len(skel)
    if k > max_vertices:
        raise CapacityError(f"{k} internal vertices exceeds the bound {max_vertices}")
    out = []
    for labels in itertools.permutations(range(1, k + 1)):
        if all(p is None or labels[p] < labels[i] for i, (p, _) in enumerate(skel)):
            out.append(_build(skel, labels))
    return out


def permutation_of_tree(tree):
    """In-order reading: left subtree, root label, right subtree."""
    if tree is None:
        return ()
    return permutation_of_tree(tree.left) + (tree.label,) + permutation_of_tree(tree.right)


def parse_permutation(perm):
    if isinstance(perm, str):
        return tuple(int(ch) for ch in perm)
    return tuple(int(x) for x in perm)


def tree_of_permutation(perm):
    """Inverse of :func:`permutation_of_tree`: split at the minimum entry."""
    perm = parse_permutation(perm)
    if len(set(perm)) != len(perm):
        raise InputError("permutation has repeated entries")
    if not perm:
        return None
    i = perm.index(min(perm))
    return IncreasingTree(perm[i], tree_of_permutation(perm[:i]), tree_of_permutation(perm[i + 1:]))


def shape_of_increasing(tree):
    """The planar binary shape obtained by hanging leaves 1..k+1 on the empty slots."""
    counter = itertools.count(1)

    def rec(t):
        if t is None:
            return next(counter)
        left = rec(t.left)
        right = rec(t.right)
        return (left, right)

    return TreeShape(rec(tree))


# ---------------------------------------------------------------------------
# Associahedron from bracketings


def associahedron_faces(n):
    """Nonempty faces of the associahedron on a word of n letters.

    A face is a set of pairwise nested-or-disjoint brackets (intervals of
    2..n-1 consecutive letters); the empty set is the whole polytope and
    maximal sets (n-2 brackets) are vertices.
    """
    brackets = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if b - a + 1 < n]

    def compatible(x, y):
        (a, b), (c, d) = x, y
        return b < c or d < a or (a <= c and d <= b) or (c <= a and b <= d)

    out = []

    def grow(chosen, start):
        out.append(frozenset(chosen))
        for i in range(start, len(brackets)):
            br = brackets[i]
            if all(compatible(br, x) for x in chosen):
                chosen.append(br)
                grow(chosen, i + 1)
                chosen.pop()

    grow([], 0)
    return out


def associahedron_leq(F, G):
    """Face order: more brackets means a smaller face."""
    return F >= G


def kirkman_count(n, k):
    """Planar rooted trees with n leaves and k internal vertices (Kirkman-Cayley numbers)."""
    if k < 1 or k > n - 1:
        return 0
    return math.comb(n - 2, k - 1) * math.comb(n + k - 1, k - 1) // k
