"""Tour of the k-deformed gamma/beta/Pochhammer primitives.

The deformation Gamma_k(z) = k**(z/k-1) Gamma(z/k) keeps the classical
recurrence in the rescaled form Gamma_k(z + k) = z Gamma_k(z) and is
normalized so Gamma_k(k) = 1 for every k.
"""

import math

from kspecfun import k_beta, k_gamma, k_pochhammer, log_k_gamma

print("=== normalization: Gamma_k(k) = 1 ===")
for k in (0.5, 1.0, 2.0, 3.3):
    print(f"  k={k:<4}  Gamma_k(k) = {k_gamma(k, k)!r}")

print("\n=== recurrence Gamma_k(x+k) = x Gamma_k(x) ===")
for k, x in ((0.5, 0.7), (2.0, 3.1), (3.3, 10.0)):
    lhs = k_gamma(k, x + k)
    rhs = x * k_gamma(k, x)
    print(f"  k={k}, x={x}:  {lhs:.12g}  vs  {rhs:.12g}")

print("\n=== classical values at k = 1 ===")
print(f"  Gamma(5)    = {k_gamma(1, 5):.15g}   (4! = 24)")
print(f"  Gamma(1/2)  = {k_gamma(1, 0.5):.15g}   (sqrt(pi) = {math.sqrt(math.pi):.15g})")
print(f"  Gamma(-1/2) = {k_gamma(1, -0.5):.15g}   (-2 sqrt(pi), via reflection)")

print("\n=== huge arguments stay in log space ===")
g = log_k_gamma(1.0, 501.0)
print(f"  Gamma(501) = 500!  ->  log_abs = {g.log_abs:.12f}, sign = {g.sign}")
print(f"  (the value itself would overflow; exp(log_abs) only on demand)")

print("\n=== the k-beta function ===")
print(f"  B_1(2, 3)   = {k_beta(1, 2, 3):.15g}   (classical B(2,3) = 1/12)")
print(f"  B_2(2, 2)   = {k_beta(2, 2, 2):.15g}   ((1/2) B(1,1) = 1/2)")
print(f"  symmetric bit-for-bit: {k_beta(1.7, 2.3, 4.1) == k_beta(1.7, 4.1, 2.3)}")

print("\n=== k-Pochhammer with real index ===")
print(f"  (1)_{{4,1}}    = {k_pochhammer(1, 1, 4):.15g}   (rising factorial 4!)")
print(f"  (2)_{{1.5,2}}  = {k_pochhammer(2, 2, 1.5):.15g}   (non-integer index)")
print(f"  (x)_{{0,k}}    = {k_pochhammer(2, 2.7, 0)!r}   (empty product, exact)")
