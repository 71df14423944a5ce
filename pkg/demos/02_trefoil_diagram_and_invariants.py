"""Project the lattice trefoil, read its codes, and compute invariants.

Run: python3 demos/02_trefoil_diagram_and_invariants.py
"""

from cubeknot import catalog
from cubeknot.diagram import build_diagram, format_gauss, gauss_code, pd_code, writhe
from cubeknot.invariants import colorings, determinant, jones, jones_t
from cubeknot.lattice import from_vertices
from cubeknot.qpi import stats

for name in ("trefoil24", "fig8"):
    k = catalog.get(name)
    d = build_diagram(k)
    print(f"== {name}: {len(k)} edges, {len(d)} crossings, writhe {writhe(d)}")
    print("Gauss:", format_gauss(gauss_code(d)))
    print("PD:   ", pd_code(d))
    print("3-colorings:", colorings(d, 3).count, " 5-colorings:", colorings(d, 5).count)
    print("determinant:", determinant(d))
    j = jones(d)
    print("Jones in A:", j)
    print("Jones in t:", {str(e): c for e, c in sorted(jones_t(j).items())})

# mirror image: the polynomial flips A -> 1/A, so the trefoil is chiral
tref = catalog.get("trefoil24")
mirror = from_vertices([(x, y, -z) for x, y, z in tref.vertices])
print("mirror Jones:", jones(build_diagram(mirror)))

print(f"exact sign tests needing interval refinement: {stats.interval_calls}, max bits {stats.max_bits}")
