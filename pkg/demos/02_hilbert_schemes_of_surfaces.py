"""Hilbert schemes of points on smooth surfaces, motivically and at Euler level.

Run: python demos/02_hilbert_schemes_of_surfaces.py
"""
from hilbpow import Ring, Smooth, cell_class_sum, global_smooth_series, punctual_series

N = 5

# The punctual series of the plane at the origin: coefficient n is the sum
# over partitions of n of L^(n - parts).
germ = punctual_series(Smooth(2), Ring.MOTIVIC, N)
print("H_(A^2,0) =", germ)
for n in range(1, N + 1):
    assert germ.coefficient((n,)) == cell_class_sum(n)

# A smooth surface X: H_X = H_(A^2,0) ^ [X].
for name, cls in [("A^2", "L^2"), ("P^2", "1 + L + L^2"), ("P^1 x P^1", "1 + 2*L + L^2")]:
    H = global_smooth_series(cls, 2, Ring.MOTIVIC, 3)
    print(f"\nH_{name} up to T^3:")
    for (n,), c in H.items():
        print(f"  [Hilb^{n}] = {c}")
    print("  Euler characteristics:", [c.evaluate_at_one() for c in H.coefficient_list()])

# Hodge-Deligne level: substitute L -> uv.
print("\nP^2 at Hodge level:", global_smooth_series("1 + L + L^2", 2, Ring.MOTIVIC, 2).specialize(Ring.HODGE))
