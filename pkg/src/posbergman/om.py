"""Signed sets and oriented matroids given by their signed circuits.

Elements of the ground set are the integers ``1..n``. Internally every subset
is an ``int`` bit mask with element ``e`` stored in bit ``e - 1``.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
import sympy

from .errors import COVECTOR_CAP, SUBSET_CAP, CapacityError, InputError, check_capacity


def mask_of(elements):
    m = 0
    for e in elements:
        if e < 1:
            raise InputError(f"ground-set elements start at 1, got {e}")
        m |= 1 << (e - 1)
    return m


def elements_of(mask):
    """Sorted list of the elements in ``mask``."""
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return out


def popcount(mask):
    return bin(mask).count("1")


def full_mask(n):
    return (1 << n) - 1


@dataclass(frozen=True)
class SignedSet:
    """A pair of disjoint subsets (positive part, negative part) of ``[n]``."""

    n: int
    pmask: int
    nmask: int

    def __post_init__(self):
        if self.n < 0:
            raise InputError("ground size must be non-negative")
        if self.pmask & self.nmask:
            raise InputError("positive and negative parts overlap")
        if (self.pmask | self.nmask) >> self.n:
            raise InputError(f"signed set exceeds ground set [1..{self.n}]")

    @classmethod
    def from_parts(cls, n, pos=(), neg=()):
        return cls(n, mask_of(pos), mask_of(neg))

    @classmethod
    def from_signs(cls, n, signed_elements):
        """Build from a sequence like ``(1, -2, 4)``: negative entries go to the negative part."""
        pos = [e for e in signed_elements if e > 0]
        neg = [-e for e in signed_elements if e < 0]
        return cls.from_parts(n, pos, neg)

    @classmethod
    def from_vector(cls, values):
        """Sign pattern of a vector of numbers (index 0 is element 1)."""
        p = n = 0
        for i, v in enumerate(values):
            if v > 0:
                p |= 1 << i
            elif v < 0:
                n |= 1 << i
        return cls(len(values), p, n)

    @property
    def pos(self):
        return frozenset(elements_of(self.pmask))

    @property
    def neg(self):
        return frozenset(elements_of(self.nmask))

    @property
    def support_mask(self):
        return self.pmask | self.nmask

    @property
    def support(self):
        return frozenset(elements_of(self.support_mask))

    @property
    def zero_set(self):
        return frozenset(elements_of(full_mask(self.n) & ~self.support_mask))

    def sign(self, e):
        bit = 1 << (e - 1)
        if self.pmask & bit:
            return 1
        if self.nmask & bit:
            return -1
        return 0

    def __neg__(self):
        return SignedSet(self.n, self.nmask, self.pmask)

    def key(self):
        return (elements_of(self.pmask), elements_of(self.nmask))

    def canonical(self):
        """The lexicographically smaller of ``self`` and ``-self``."""
        other = -self
        return self if self.key() <= other.key() else other

    def restrict(self, mask):
        return SignedSet(self.n, self.pmask & mask, self.nmask & mask)

    def __str__(self):
        parts = [str(e) for e in elements_of(self.pmask)]
        parts += ["-" + str(e) for e in elements_of(self.nmask)]
        return "(" + " ".join(sorted(parts, key=lambda s: int(s.lstrip("-")))) + ")"


def is_orthogonal(x, y):
    """Sign orthogonality: agreement and disagreement sets are both empty or both nonempty."""
    if x.n != y.n:
        raise InputError("signed sets live on different ground sets")
    agree = (x.pmask & y.pmask) | (x.nmask & y.nmask)
    disagree = (x.pmask & y.nmask) | (x.nmask & y.pmask)
    return (agree == 0) == (disagree == 0)


class OrientedMatroid:
    """An oriented matroid on ``[n]`` stored as one canonical circuit per +/- pair.

    The constructor does not check the circuit axioms; use :meth:`validate`.
    """

    def __init__(self, n, circuits=()):
        reps = set()
        for c in circuits:
            if c.n != n:
                raise InputError(f"circuit {c} has ground size {c.n}, expected {n}")
            reps.add(c.canonical())
        self.n = n
        self.circuits = tuple(sorted(reps, key=SignedSet.key))
        self._frozen = frozenset(self.circuits)
        self._supports = tuple(c.support_mask for c in self.circuits)

    @classmethod
    def from_signs(cls, n, circuits):
        return cls(n, [SignedSet.from_signs(n, c) for c in circuits])

    def __eq__(self, other):
        return (
            isinstance(other, OrientedMatroid)
            and self.n == other.n
            and self._frozen == other._frozen
        )

    def __hash__(self):
        return hash((self.n, self._frozen))

    def __repr__(self):
        body = ", ".join(str(c) for c in self.circuits)
        return f"OrientedMatroid(n={self.n}, circuits=[{body}])"

    def signed_circuits(self):
        """Every signed circuit, both orientations of each pair."""
        out = []
        for c in self.circuits:
            out.append(c)
            out.append(-c)
        return out

    def support_masks(self):
        return self._supports

    def validate(self, **kw):
        return validate_circuits(self.signed_circuits(), n=self.n, **kw)


# ---------------------------------------------------------------------------
# Circuit axioms


@dataclass
class Violation:
    axiom: str
    witnesses: tuple

    def __str__(self):
        return f"{self.axiom}: " + ", ".join(str(w) for w in self.witnesses)


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.violations

    def __bool__(self):
        return self.passed


def validate_circuits(circuits, n=None, *, all_violations=False, strong=False):
    """Check C1-C4 on a collection of signed sets taken literally.

    With ``strong=True`` the elimination axiom is checked in its strong form
    C4' (an extra element ``f`` must survive in the eliminated circuit); for
    collections satisfying C1-C3 the two forms agree.
    """
    circuits = list(dict.fromkeys(circuits))
    sizes = {c.n for c in circuits}
    if n is not None:
        sizes.add(n)
    if len(sizes) > 1:
        raise InputError(f"inconsistent ground sizes {sorted(sizes)}")

    report = ValidationReport()

    def flag(axiom, *witnesses):
        report.violations.append(Violation(axiom, witnesses))
        return not all_violations

    members = set(circuits)
    for c in circuits:
        if c.support_mask == 0 and flag("C1", c):
            return report
    for c in circuits:
        if -c not in members and flag("C2", c):
            return report
    for x, y in itertools.combinations(circuits, 2):
        sx, sy = x.support_mask, y.support_mask
        if sx == sy:
            if x != -y and flag("C3", x, y):
                return report
        elif sx & sy == sx or sx & sy == sy:
            small, big = (x, y) if sx & sy == sx else (y, x)
            if flag("C3", small, big):
                return report

    if not circuits:
        return report
    cp = np.array([c.pmask for c in circuits], dtype=np.int64)
    cn = np.array([c.nmask for c in circuits], dtype=np.int64)
    supp = cp | cn
    axiom = "C4'" if strong else "C4"
    for x0 in circuits:
        for x1 in circuits:
            if x1 == -x0:
                continue
            emask = x0.pmask & x1.nmask
            if not emask:
                continue
            P = x0.pmask | x1.pmask
            N = x0.nmask | x1.nmask
            cand = ((cp & ~P) == 0) & ((cn & ~N) == 0)
            fmask = (x0.pmask & ~x1.nmask) | (x0.nmask & ~x1.pmask)
            for e in elements_of(emask):
                ok = cand & ((supp & (1 << (e - 1))) == 0)
                if not strong:
                    if not ok.any() and flag(axiom, x0, x1, e):
                        return report
                    continue
                for f in elements_of(fmask):
                    if not (ok & ((supp & (1 << (f - 1))) != 0)).any():
                        if flag(axiom, x0, x1, e, f):
                            return report
    return report


# ---------------------------------------------------------------------------
# Unsigned structure


def has_loops(M):
    return any(popcount(s) == 1 for s in M.support_masks())


def is_acyclic(M):
    """True iff no circuit is all-positive (checks both orientations of each pair)."""
    return not any(c.pmask == 0 or c.nmask == 0 for c in M.circuits)


def is_independent(M, mask):
    return not any(s & mask == s for s in M.support_masks())


def rank_of(M, elements):
    """Rank of a subset, by greedy growth of an independent set."""
    mask = elements if isinstance(elements, int) else mask_of(elements)
    supports = M.support_masks()
    indep = 0
    for e in elements_of(mask):
        trial = indep | (1 << (e - 1))
        if not any(s & trial == s for s in supports):
            indep = trial
    return popcount(indep)


def rank(M):
    return rank_of(M, full_mask(M.n))


def closure(M, elements):
    """Smallest flat containing ``elements``."""
    mask = elements if isinstance(elements, int) else mask_of(elements)
    supports = M.support_masks()
    changed = True
    while changed:
        changed = False
        for s in supports:
            rest = s & ~mask
            if rest and rest & (rest - 1) == 0:
                mask |= rest
                changed = True
    return mask


def is_flat(M, elements):
    mask = elements if isinstance(elements, int) else mask_of(elements)
    for s in M.support_masks():
        rest = s & ~mask
        if rest and rest & (rest - 1) == 0:
            return False
    return True


def flats(M, bound=None):
    """All flats as bit masks, sorted by (rank, mask)."""
    check_capacity(M.n, bound, SUBSET_CAP, "flat enumeration")
    bottom = closure(M, 0)
    seen = {bottom}
    frontier = [bottom]
    while frontier:
        nxt = []
        for F in frontier:
            for e in range(M.n):
                if F >> e & 1:
                    continue
                G = closure(M, F | (1 << e))
                if G not in seen:
                    seen.add(G)
                    nxt.append(G)
        frontier = nxt
    return sorted(seen, key=lambda F: (rank_of(M, F), F))


def _independence_table(M):
    n = M.n
    masks = np.arange(1 << n, dtype=np.int64)
    dep = np.zeros(1 << n, dtype=bool)
    for s in M.support_masks():
        dep |= (masks & s) == s
    return ~dep


def bases(M, bound=None):
    """All bases (maximal subsets containing no circuit support) as frozensets."""
    check_capacity(M.n, bound, SUBSET_CAP, "basis enumeration")
    indep = _independence_table(M)
    masks = np.arange(1 << M.n, dtype=np.int64)
    maximal = indep.copy()
    for e in range(M.n):
        bit = 1 << e
        grown = masks | bit
        maximal &= ((masks & bit) != 0) | ~indep[grown]
    found = [int(m) for m in np.nonzero(maximal)[0]]
    sizes = {popcount(m) for m in found}
    if len(sizes) > 1:
        raise InputError(f"maximal independent sets have sizes {sorted(sizes)}; not a matroid")
    return {frozenset(elements_of(m)) for m in found}


def basis_sign_product(M, B1, B2):
    """chi(B1) * chi(B2) for ordered bases differing in exactly one element.

    When the swapped elements sit at the same position this is
    ``-C(e) C(f)`` for the circuit ``C`` inside ``B1 | B2``; otherwise the
    sign of the reordering is folded in.
    """
    B1, B2 = list(B1), list(B2)
    s1, s2 = set(B1), set(B2)
    r = rank(M)
    if len(s1) != len(B1) or len(s2) != len(B2):
        raise InputError("ordered bases must not repeat elements")
    for B in (B1, B2):
        if len(B) != r or not is_independent(M, mask_of(B)):
            raise InputError(f"{B} is not a basis")
    if len(s1 - s2) != 1:
        raise InputError("bases must differ in exactly one element")
    (e,) = s1 - s2
    (f,) = s2 - s1
    union = mask_of(s1 | s2)
    inside = [c for c in M.circuits if c.support_mask & union == c.support_mask]
    if len(inside) != 1:
        raise InputError("expected exactly one circuit inside B1 | B2")
    c = inside[0]
    aligned = [f if x == e else x for x in B1]
    return -c.sign(e) * c.sign(f) * _permutation_sign(aligned, B2)


def _permutation_sign(a, b):
    pos = {x: i for i, x in enumerate(b)}
    perm = [pos[x] for x in a]
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


# ---------------------------------------------------------------------------
# Covectors and positive flats


def _sign_vectors(n):
    """Arrays (pos, neg) of masks for all 3^n sign vectors."""
    pos = np.zeros(1, dtype=np.int64)
    neg = np.zeros(1, dtype=np.int64)
    for e in range(n):
        bit = np.int64(1 << e)
        pos = np.concatenate([pos, pos | bit, pos])
        neg = np.concatenate([neg, neg, neg | bit])
    return pos, neg


def _orthogonal_to_all(M, pos, neg):
    keep = np.ones(len(pos), dtype=bool)
    for c in M.circuits:
        agree = (pos & c.pmask) | (neg & c.nmask)
        disagree = (pos & c.nmask) | (neg & c.pmask)
        keep &= (agree == 0) == (disagree == 0)
    return keep


def covectors(M, bound=None):
    """All sign vectors orthogonal to every circuit (brute force over 3^n)."""
    check_capacity(M.n, bound, COVECTOR_CAP, "covector enumeration")
    pos, neg = _sign_vectors(M.n)
    keep = _orthogonal_to_all(M, pos, neg)
    return frozenset(
        SignedSet(M.n, int(p), int(q)) for p, q in zip(pos[keep], neg[keep])
    )


def positive_covectors(M, bound=None):
    """Covectors with entries in {+, 0}, found over the 2^n nonnegative sign vectors."""
    check_capacity(M.n, bound, SUBSET_CAP, "positive covector enumeration")
    pos = np.arange(1 << M.n, dtype=np.int64)
    neg = np.zeros_like(pos)
    keep = _orthogonal_to_all(M, pos, neg)
    return frozenset(SignedSet(M.n, int(p), 0) for p in pos[keep])


def positive_flats(M, method="covector", bound=None):
    """Positive flats as frozensets.

    ``method="covector"`` takes zero sets of positive covectors (plus the
    whole ground set); ``method="contraction"`` keeps the flats F with M/F
    acyclic. Both are meant for acyclic M; for other M the empty set is
    correctly excluded but a warning is issued.
    """
    if not is_acyclic(M):
        warnings.warn("positive flats are defined for acyclic oriented matroids", stacklevel=2)
    top = full_mask(M.n)
    if method == "covector":
        found = {top & ~v.pmask for v in positive_covectors(M, bound)}
    elif method == "contraction":
        found = {F for F in flats(M, bound) if is_acyclic(contract(M, F)[0])}
    else:
        raise InputError(f"unknown method {method!r}")
    found.add(top)
    return {frozenset(elements_of(F)) for F in found}


def is_positive_flat(M, elements):
    """True iff ``elements`` is the zero set of a positive covector (the full set always is)."""
    mask = elements if isinstance(elements, int) else mask_of(elements)
    v = SignedSet(M.n, full_mask(M.n) & ~mask, 0)
    return all(is_orthogonal(v, c) for c in M.circuits)


# ---------------------------------------------------------------------------
# Minors and reorientation


def contract(M, elements):
    """Contraction M/S, re-indexed onto ``1..n-|S|``.

    Returns ``(M/S, index_map)`` where ``index_map`` sends each surviving old
    element to its new label.
    """
    S = elements if isinstance(elements, int) else mask_of(elements)
    keep = [e for e in range(1, M.n + 1) if not S >> (e - 1) & 1]
    index_map = {old: new for new, old in enumerate(keep, start=1)}
    rest = {}
    for c in M.circuits:
        r = c.restrict(~S)
        if r.support_mask:
            rest.setdefault(r.support_mask, set()).add(r.canonical())
    supports = sorted(rest, key=popcount)
    minimal = []
    for s in supports:
        if not any(t & s == t for t in minimal):
            minimal.append(s)
    m = len(keep)
    out = []
    for s in minimal:
        for r in rest[s]:
            out.append(SignedSet.from_parts(
                m,
                [index_map[e] for e in elements_of(r.pmask)],
                [index_map[e] for e in elements_of(r.nmask)],
            ))
    return OrientedMatroid(m, out), index_map


def reorient(M, elements):
    """Reverse the sign of ``elements`` in every circuit."""
    A = elements if isinstance(elements, int) else mask_of(elements)
    out = []
    for c in M.circuits:
        keep_p, keep_n = c.pmask & ~A, c.nmask & ~A
        out.append(SignedSet(M.n, keep_p | (c.nmask & A), keep_n | (c.pmask & A)))
    return OrientedMatroid(M.n, out)


def relabel(M, mapping):
    """Rename element ``e`` to ``mapping[e]``; ``mapping`` must be a permutation of 1..n."""
    if sorted(mapping[e] for e in range(1, M.n + 1)) != list(range(1, M.n + 1)):
        raise InputError("relabeling is not a permutation of the ground set")
    return OrientedMatroid(M.n, [
        SignedSet.from_parts(M.n, [mapping[e] for e in c.pos], [mapping[e] for e in c.neg])
        for c in M.circuits
    ])


# ---------------------------------------------------------------------------
# Realizable constructions


def _to_rational_matrix(rows, n=None):
    rows = [[Fraction(x) for x in row] for row in rows]
    if n is None:
        n = len(rows[0]) if rows else 0
    for row in rows:
        if len(row) != n:
            raise InputError(f"matrix row has {len(row)} entries, expected {n}")
    return sympy.Matrix(len(rows), n, [sympy.Rational(x.numerator, x.denominator) for r in rows for x in r]), n


def circuits_from_matrix(rows, n=None, bound=None):
    """Oriented matroid whose circuits are the sign patterns of the
    minimal-support nonzero vectors in the row space of ``rows``.

    Arithmetic is exact. A zero (or empty) matrix gives the free matroid.
    """
    A, n = _to_rational_matrix(rows, n)
    check_capacity(n, bound, SUBSET_CAP, "circuits_from_matrix")
    if A.rows == 0:
        return OrientedMatroid(n)
    R, pivots = A.rref()
    r = len(pivots)
    R = R[:r, :]
    if r == 0:
        return OrientedMatroid(n)
    found = set()
    # A minimal-support vector y*R vanishes on r-1 independent columns and
    # nowhere else forced; enumerate those column sets.
    for H in itertools.combinations(range(n), r - 1):
        if r == 1:
            ys = [sympy.Matrix([[1]])]
        else:
            sub = R[:, list(H)]
            if sub.rank() != r - 1:
                continue
            ys = [v.T for v in sub.T.nullspace()]
        for y in ys:
            v = y * R
            found.add(SignedSet.from_vector([x for x in v]).canonical())
    supports = sorted({c.support_mask for c in found}, key=popcount)
    minimal = set()
    for s in supports:
        if not any(t & s == t for t in minimal):
            minimal.add(s)
    return OrientedMatroid(n, [c for c in found if c.support_mask in minimal])


def kernel_rows(rows, n=None):
    """Exact basis of the null space of ``rows`` (as lists of Fractions)."""
    A, n = _to_rational_matrix(rows, n)
    if A.rows == 0:
        return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    return [
        [Fraction(int(x.p), int(x.q)) for x in v]
        for v in A.nullspace()
    ]


def matroid_of_columns(rows, n=None, bound=None):
    """Oriented matroid of the column vectors of ``rows`` (circuits = minimal linear dependencies)."""
    if n is None:
        n = len(rows[0]) if rows else 0
    return circuits_from_matrix(kernel_rows(rows, n), n=n, bound=bound)


def incidence_matrix(n_vertices, arcs):
    """Signed vertex-arc incidence matrix: column for arc (u, v) has -1 at u and +1 at v."""
    rows = [[0] * len(arcs) for _ in range(n_vertices)]
    for j, (u, v) in enumerate(arcs):
        if u == v:
            raise InputError("loops are not supported")
        rows[u - 1][j] -= 1
        rows[v - 1][j] += 1
    return rows


def from_digraph(arcs):
    """Oriented matroid of a simple digraph; arc ``k`` of ``arcs`` is element ``k+1``.

    Circuits are the cycles of the underlying graph, signed + on arcs
    traversed forward and - on arcs traversed backward.
    """
    import networkx as nx

    index = {}
    for k, (u, v) in enumerate(arcs, start=1):
        key = frozenset((u, v))
        if key in index or u == v:
            raise InputError("from_digraph needs a simple digraph")
        index[key] = (k, u, v)
    G = nx.Graph()
    G.add_edges_from(arcs)
    n = len(arcs)
    out = []
    for cyc in nx.simple_cycles(G):
        pos, neg = [], []
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            k, u, _ = index[frozenset((a, b))]
            (pos if u == a else neg).append(k)
        out.append(SignedSet.from_parts(n, pos, neg))
    return OrientedMatroid(n, out)
