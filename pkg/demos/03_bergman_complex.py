"""
Fine and coarse subdivisions
============================

The Bergman complex is the order complex of the proper part of the lattice
of flats; the positive one uses the lattice of positive flats instead.
"""

from posbergman.bergman import coarse_cells, fine_cells, is_sphere_euler_char
from posbergman.om import rank
from posbergman.trees import kn_oriented_matroid

print(" n | positive: max cells  f-vector      chi | all: max cells  chi")
for n in (3, 4, 5):
    M, _ = kn_oriented_matroid(n)
    pos = fine_cells(M, positive=True)
    full = fine_cells(M, check=False)
    sphere = is_sphere_euler_char(pos.euler_char, rank(M))
    print(f"{n:>2} | {len(pos.maximal):>18}  {str(pos.f_vector):<12} {pos.euler_char:>3}"
          f" | {len(full.maximal):>14} {full.euler_char:>4}   sphere ok: {sphere}")

# %%
# Grouping fine cells by M_w gives the coarse subdivision.
# For K4 the positive part is a pentagon.
M, _ = kn_oriented_matroid(4)
s = coarse_cells(M, positive=True)
for cell in s.coarse_cells:
    flags = ", ".join(str(f) for f in cell.flags)
    print(f"dim {cell.dim:>2}  {len(cell.mw.circuits)} circuits  {flags}")
print("full-dimensional:", len(s.full_dimensional_coarse))
