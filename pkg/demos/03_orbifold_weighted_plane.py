"""Hilbert series of the weighted projective plane P(1,1,n) via its strata.

P(1,1,n) has an open smooth part and one singular point of type
A^2 / Z_n with weights (1, 1).  The Euler characteristic of the smooth part
is 2 (three torus-fixed points minus the singular one).  The orbifold
formula multiplies the local contributions; the toric fixed-point product
computes the same series independently.

Run: python demos/03_orbifold_weighted_plane.py
"""
from pathlib import Path

from hilbpow import (AbelianQuotient, OrbifoldSpec, Ring, RingElement, Smooth, Stratum,
                     integrate, toric_euler_global)
from hilbpow.orbifold import load_spec

N = 8
for n in (2, 3, 4):
    sing = AbelianQuotient(2, ((n, (1, 1)),))
    spec = OrbifoldSpec(2, Ring.INTEGER, N, (
        Stratum("smooth part", RingElement.constant(Ring.INTEGER, 2), Smooth(2)),
        Stratum(f"1/{n}(1,1) point", RingElement.constant(Ring.INTEGER, 1), sing),
    ))
    lhs = integrate(spec)
    rhs = toric_euler_global([Smooth(2), Smooth(2), sing], N)
    print(f"P(1,1,{n}):", [c.evaluate_at_one() for c in lhs.coefficient_list()],
          "agrees with fixed points:", lhs == rhs)

# Motivic version from a spec file; the punctual series of the A1 point is
# supplied explicitly (Hilb^2 at the singular point is a P^2).
spec = load_spec(Path(__file__).parent / "specs" / "p112_motivic_explicit.json")
H = integrate(spec)
print("\nmotivic P(1,1,2):", H)
print("Euler specialization:", H.specialize(Ring.INTEGER))
