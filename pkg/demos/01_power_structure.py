"""Power structure basics: factor a series, then raise it to a ring element.

Run: python demos/01_power_structure.py
"""
from hilbpow import MultiSeries, Ring, decompose, parse_element, power, recompose

# 1 + T factors as (1 - T)^-1 (1 - T^2)^1
A = MultiSeries.from_list("integer", [1, 1], trunc=6)
D = decompose(A)
print("1 + T  =  prod (1 - T^k)^(-s_k) with")
for k, s in D.items():
    print(f"   s_{k[0]} = {s}")
print("recomposed:", recompose(D))

# Integer exponents agree with ordinary powers ...
print("(1+T)^3  =", power(A, 3))
print("(1+T)^-1 =", power(A, -1))

# ... but the exponent may be any element of Z[L].  (1-T)^(-[X]) is the
# Kapranov zeta function: Sym^n of the affine line is A^n, of P^1 is P^n.
geometric = MultiSeries.from_list("motivic", [1] * 5)
for cls in ("L", "1 + L"):
    print(f"(1-T)^-({cls}) =", power(geometric, parse_element(cls, Ring.MOTIVIC)))

# Exponential laws hold exactly, e.g. A^(m+n) = A^m A^n for classes m, n.
B = MultiSeries.from_list("motivic", [parse_element(c, "motivic") for c in ["1", "L", "1-L", "2"]])
m, n = parse_element("1+L", "motivic"), parse_element("L^2-2", "motivic")
print("A^(m+n) == A^m A^n:", power(B, m + n) == power(B, m) * power(B, n))

# Bivariate series work the same way.
C = MultiSeries("integer", 2, 4, {(0, 0): 1, (1, 0): 1, (0, 1): 2, (1, 1): -1})
print("bivariate round trip:", recompose(decompose(C)) == C)
