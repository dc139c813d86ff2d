"""Lattices of flats, fine and coarse subdivisions of (positive) Bergman complexes."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError
from .initial import Flag, is_positive_flag, is_valid_flag, matroid_mw
from .om import (
    elements_of,
    flats,
    has_loops,
    is_acyclic,
    mask_of,
    positive_flats,
    rank_of,
)


@dataclass(frozen=True)
class FaceLattice:
    """Subsets of [n] ordered by containment, stored as bit masks."""

    n: int
    masks: tuple
    ranks: tuple

    @property
    def bottom(self):
        return self.masks[0]

    @property
    def top(self):
        return self.masks[-1]

    @property
    def elements(self):
        return [frozenset(elements_of(m)) for m in self.masks]

    def __len__(self):
        return len(self.masks)

    def proper_part(self):
        return [m for m in self.masks if m not in (self.bottom, self.top)]

    def covers(self):
        """Pairs (a, b) with b covering a."""
        out = []
        for a in self.masks:
            above = [b for b in self.masks if b != a and a & b == a]
            for b in above:
                if not any(c != b and a & c == a and c & b == c for c in above):
                    out.append((a, b))
        return out


def _lattice(M, masks):
    masks = sorted(set(masks), key=lambda F: (rank_of(M, F), F))
    lat = FaceLattice(M.n, tuple(masks), tuple(rank_of(M, F) for F in masks))
    if any(lat.bottom & m != lat.bottom or m & lat.top != m for m in masks):
        raise InputError("collection has no bottom/top under containment")
    return lat


def lattice_of_flats(M, bound=None):
    return _lattice(M, flats(M, bound))


def las_vergnas_lattice(M, bound=None):
    """Positive flats ordered by containment (acyclic M only)."""
    if not is_acyclic(M):
        raise InputError("the Las Vergnas face lattice needs an acyclic oriented matroid")
    return _lattice(M, [mask_of(F) for F in positive_flats(M, bound=bound)])


def chains(masks):
    """All nonempty strictly increasing chains in ``masks`` (a containment order)."""
    masks = list(masks)
    above = {a: [b for b in masks if b != a and a & b == a] for a in masks}
    out = []

    def grow(chain):
        out.append(tuple(chain))
        for b in above[chain[-1]]:
            chain.append(b)
            grow(chain)
            chain.pop()

    for a in sorted(masks, key=lambda m: (bin(m).count("1"), m)):
        grow([a])
    out.sort(key=lambda c: (len(c), c))
    return out


@dataclass
class CoarseCell:
    mw: object
    flags: list
    full_dimensional: bool

    @property
    def dim(self):
        return max(len(f.chain) for f in self.flags) - 1


@dataclass
class CellComplexSummary:
    """Cells of the fine subdivision (one flag per chain) and optionally the coarse one.

    A chain with k proper flats is a (k-1)-cell.
    """

    n: int
    positive: bool
    cells: list
    maximal: list
    coarse_cells: list = field(default=None)

    @property
    def f_vector(self):
        return f_vector(self)

    @property
    def euler_char(self):
        return euler_characteristic(self)

    @property
    def fine_cells_by_dim(self):
        return dict(enumerate(self.f_vector))

    @property
    def full_dimensional_coarse(self):
        return [c for c in self.coarse_cells or () if c.full_dimensional]


def f_vector(summary):
    if not summary.cells:
        return []
    top = max(len(f.chain) for f in summary.cells)
    out = [0] * top
    for f in summary.cells:
        out[len(f.chain) - 1] += 1
    return out


def euler_characteristic(summary):
    """Alternating sum of the f-vector; the empty complex has 0."""
    return sum((-1) ** i * k for i, k in enumerate(f_vector(summary)))


def _maximal_chains(lat, all_chains):
    cover = set(lat.covers())
    proper = set(lat.proper_part())
    out = []
    for c in all_chains:
        steps = [lat.bottom, *c, lat.top]
        if all((a, b) in cover for a, b in zip(steps, steps[1:])) and set(c) <= proper:
            out.append(c)
    return out


def fine_cells(M, positive=False, check=True, bound=None):
    """Chains in the proper part of the lattice of flats (or of positive flats).

    An empty summary is returned when the fan is empty (loops, or a
    non-acyclic M with ``positive=True``). With ``check=True`` every chain
    is re-tested as a flag through the initial matroid.
    """
    if has_loops(M) or (positive and not is_acyclic(M)):
        return CellComplexSummary(M.n, positive, [], [])
    lat = las_vergnas_lattice(M, bound) if positive else lattice_of_flats(M, bound)
    all_chains = chains(lat.proper_part())
    maximal = set(_maximal_chains(lat, all_chains))
    test = is_positive_flag if positive else is_valid_flag
    cells, top = [], []
    for c in all_chains:
        flag = Flag.from_masks(M.n, c)
        if check and not test(M, flag):
            raise AssertionError(f"chain {flag} fails the flag test")
        cells.append(flag)
        if c in maximal:
            top.append(flag)
    return CellComplexSummary(M.n, positive, cells, top)


def coarse_cells(M, positive=False, check=True, bound=None):
    """Group fine cells by their initial oriented matroid.

    The trivial flag (the lineality space, i.e. the empty face of the
    complex) is included as a cell of dimension -1 whenever it lies in the
    fan; it is full-dimensional only when the complex itself is empty.
    """
    summary = fine_cells(M, positive, check, bound)
    trivial = Flag(M.n, ())
    test = is_positive_flag if positive else is_valid_flag
    groups = {}
    if test(M, trivial):
        groups[matroid_mw(M, trivial)] = [trivial]
    for flag in summary.cells:
        groups.setdefault(matroid_mw(M, flag), []).append(flag)
    maximal = set(summary.maximal)
    if not summary.cells:
        maximal.add(trivial)
    summary.coarse_cells = [
        CoarseCell(mw, flags, any(f in maximal for f in flags))
        for mw, flags in groups.items()
    ]
    summary.coarse_cells.sort(key=lambda c: (-c.dim, sorted(c.flags[0].masks)))
    return summary


def is_sphere_euler_char(chi, rank):
    """Euler characteristic expected of the (rank-2)-sphere; rank 1 gives the empty set."""
    dim = rank - 2
    if dim < 0:
        return chi == 0
    return chi == (2 if dim % 2 == 0 else 0)

