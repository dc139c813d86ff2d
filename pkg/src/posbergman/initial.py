"""Weight vectors, flags, and the initial oriented matroid M_w."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .om import (
    OrientedMatroid,
    SignedSet,
    bases,
    elements_of,
    full_mask,
    has_loops,
    is_acyclic,
    is_flat,
    is_positive_flat,
    mask_of,
    popcount,
)


def weight_vector(values):
    """Coerce numbers or ``"p/q"`` strings to a tuple of Fractions."""
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class Flag:
    """A chain  {} = F_0 < F_1 < ... < F_k < F_{k+1} = [n].

    ``chain`` holds only the proper part F_1..F_k as frozensets.
    """

    n: int
    chain: tuple = ()

    def __post_init__(self):
        chain = tuple(frozenset(F) for F in self.chain)
        object.__setattr__(self, "chain", chain)
        prev = frozenset()
        ground = frozenset(range(1, self.n + 1))
        for F in chain + (ground,):
            if not F <= ground:
                raise InputError(f"{sorted(F)} is not a subset of [1..{self.n}]")
            if not (prev < F):
                raise InputError("flag must be strictly increasing from {} to [n]")
            prev = F

    @classmethod
    def from_masks(cls, n, masks):
        return cls(n, tuple(frozenset(elements_of(m)) for m in masks))

    @property
    def masks(self):
        return tuple(mask_of(F) for F in self.chain)

    def full_chain(self):
        """All members F_0..F_{k+1} as bit masks."""
        return (0,) + self.masks + (full_mask(self.n),)

    def __str__(self):
        inner = " < ".join("{" + ",".join(map(str, sorted(F))) + "}" for F in self.chain)
        return f"{{}} < {inner + ' < ' if inner else ''}[{self.n}]"


def flag_of(w):
    """The flag of level sets of ``w``, ordered by increasing weight."""
    w = weight_vector(w)
    levels = sorted(set(w))
    chain, acc = [], frozenset()
    for value in levels[:-1]:
        acc = acc | {i + 1 for i, x in enumerate(w) if x == value}
        chain.append(acc)
    return Flag(len(w), tuple(chain))


def representative_weight(flag):
    """Canonical point of a weight class: weight i on F_{i+1} minus F_i."""
    w = [None] * flag.n
    prev = frozenset()
    for i, F in enumerate(flag.chain + (frozenset(range(1, flag.n + 1)),)):
        for e in F - prev:
            w[e - 1] = Fraction(i)
        prev = F
    return tuple(w)


def _as_weight(M, w):
    if isinstance(w, Flag):
        if w.n != M.n:
            raise InputError("flag and matroid have different ground sizes")
        return representative_weight(w)
    w = weight_vector(w)
    if len(w) != M.n:
        raise InputError(f"weight vector has length {len(w)}, expected {M.n}")
    return w


def level_masks(w):
    """Bit masks of the level sets of ``w``, from highest weight to lowest."""
    out = {}
    for i, x in enumerate(w):
        out[x] = out.get(x, 0) | (1 << i)
    return [out[x] for x in sorted(out, reverse=True)]


def _init_by_levels(c, levels):
    supp = c.support_mask
    for lm in levels:
        if lm & supp:
            return c.restrict(lm)
    raise InputError("init of an empty signed set")


def init_circuit(c, w):
    """Restriction of ``c`` to the elements where ``w`` is largest."""
    return _init_by_levels(c, level_masks(weight_vector(w)))


def matroid_mw(M, w):
    """The initial oriented matroid: inclusion-minimal members of {init_w(C)}.

    ``w`` may be a weight vector or a :class:`Flag`.
    """
    levels = level_masks(_as_weight(M, w))
    by_support = {}
    for c in M.circuits:
        ic = _init_by_levels(c, levels).canonical()
        by_support.setdefault(ic.support_mask, set()).add(ic)
    minimal = []
    for s in sorted(by_support, key=popcount):
        if not any(t & s == t for t in minimal):
            minimal.append(s)
    out = []
    for s in minimal:
        # non-minimal supports may legitimately carry conflicting signs
        if len(by_support[s]) > 1:
            a, b = sorted(by_support[s], key=SignedSet.key)[:2]
            raise InputError(
                f"initial forms {a} and {b} share a support but are not proportional"
            )
        out.extend(by_support[s])
    return OrientedMatroid(M.n, out)


def weight_of(w, elements):
    return sum((w[e - 1] for e in elements), Fraction(0))


def min_weight_bases(M, w, bound=None):
    w = _as_weight(M, w)
    all_bases = bases(M, bound)
    best = min(weight_of(w, B) for B in all_bases)
    return {B for B in all_bases if weight_of(w, B) == best}


MODES = (1, 2, 3)


def is_valid_flag(M, flag, mode=1):
    """Whether the weight class of ``flag`` lies in the Bergman fan.

    mode 1: M_F has no loops.
    mode 2: every circuit's initial form has at least two elements.
    mode 3: every member F_0..F_{k+1} of the flag is a flat.
    """
    if mode == 1:
        return not has_loops(matroid_mw(M, flag))
    if mode == 2:
        levels = level_masks(representative_weight(flag))
        return all(popcount(_init_by_levels(c, levels).support_mask) >= 2 for c in M.circuits)
    if mode == 3:
        return all(is_flat(M, F) for F in flag.full_chain())
    raise InputError(f"unknown mode {mode!r}")


def is_positive_flag(M, flag, mode=1):
    """Whether the weight class of ``flag`` lies in the positive Bergman fan.

    mode 1: M_F is acyclic.
    mode 2: every circuit's initial form has a positive and a negative element.
    mode 3: every member F_0..F_{k+1} of the flag is a positive flat.

    Mode 3 includes F_0 = {} so that a non-acyclic M (whose empty set is not
    a positive flat) is rejected consistently with the other modes.
    """
    if mode == 1:
        return is_acyclic(matroid_mw(M, flag))
    if mode == 2:
        levels = level_masks(representative_weight(flag))
        for c in M.circuits:
            ic = _init_by_levels(c, levels)
            if not (ic.pmask and ic.nmask):
                return False
        return True
    if mode == 3:
        return all(is_positive_flat(M, F) for F in flag.full_chain())
    raise InputError(f"unknown mode {mode!r}")


def in_bergman_fan(M, w):
    return not has_loops(matroid_mw(M, w))


def in_positive_bergman_fan(M, w):
    return is_acyclic(matroid_mw(M, w))


def all_flags(n):
    """Every flag of [n], one per ordered set partition (Fubini many)."""
    ground = list(range(1, n + 1))

    def blocks(rest):
        if not rest:
            yield ()
            return
        for k in range(1, len(rest) + 1):
            for first in itertools.combinations(rest, k):
                left = [e for e in rest if e not in first]
                for tail in blocks(left):
                    yield (first,) + tail

    for parts in blocks(ground):
        chain, acc = [], frozenset()
        for block in parts[:-1]:
            acc = acc | set(block)
            chain.append(acc)
        yield Flag(n, tuple(chain))


def random_flag(n, rng):
    """A flag drawn by assigning each element one of ``n`` random levels."""
    levels = [rng.randrange(n) for _ in range(n)]
    return flag_of(levels)
