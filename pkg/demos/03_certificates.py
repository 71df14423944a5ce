"""Find a move certificate, check it independently, and try a hopeless pair.

Run: python3 demos/03_certificates.py
"""

import time

from cubeknot import catalog
from cubeknot.diagram import build_diagram
from cubeknot.invariants import jones
from cubeknot.moves import format_certificate, replay
from cubeknot.search import SearchBudget, find_certificate, simplify, verify_certificate

stair = catalog.get("unknot12")
square = catalog.get("unknot4")

t0 = time.time()
result = find_certificate(stair, square)
print(f"staircase -> square in {time.time() - t0:.1f}s")
print(format_certificate(result.certificate, result.stats.lines()))
print("verified:", verify_certificate(stair, result.certificate, square))

# greedy shortening gives a certificate too
short, cert = simplify(stair)
print(f"simplify: {len(stair)} -> {len(short)} edges in {len(cert)} moves; replay matches:",
      replay(cert) == short)

# no certificate exists here, and the Jones polynomials say why
tref = catalog.get("trefoil24")
budget = SearchBudget(max_states=20_000)
miss = find_certificate(square, tref, budget)
print("square vs trefoil found:", miss.found, "after", miss.stats.states, "states")
print("Jones:", jones(build_diagram(square)), "vs", jones(build_diagram(tref)))
