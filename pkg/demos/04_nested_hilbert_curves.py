"""Nested Hilbert schemes of points on curves, in two variables.

The coefficient of T1^a T2^b counts pairs Z1 <= Z2 of lengths a <= b.

Run: python demos/04_nested_hilbert_curves.py
"""
from hilbpow import NestedContext, Ring, nested_global_smooth, nested_punctual_curve
from hilbpow.nested import diagonal_slice, last_variable_slice

ctx = NestedContext(depth=2, ring=Ring.MOTIVIC, trunc=4)
print("punctual, smooth curve germ:", nested_punctual_curve(ctx))

P1 = nested_global_smooth("1 + L", 1, ctx)
print("\nnested series of P^1:")
for (a, b), c in P1.items():
    print(f"  [Z^({a},{b})] = {c}")

# Z^(0,n) and Z^(n,n) are both Hilb^n.
print("\nT1 = 0 slice:   ", last_variable_slice(P1))
print("diagonal slice: ", diagonal_slice(P1))
