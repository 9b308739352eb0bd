"""The k-deformed Fox-Wright series with up to four parameter pairs a side."""

import math

from kspecfun import WrightParams, k_gamma, wright_k

print("=== identical pairs cancel, leaving exp(z) ===")
for k in (1.0, 2.5):
    p = WrightParams(k, ((1.3, 0.7),), ((1.3, 0.7),))
    r = wright_k(p, 1.0)
    print(f"  k={k}: {r.value:.15g}   (e = {math.e:.15g})")

print("\n=== a Bessel-type value: sum 1/(Gamma(1+n) n!) = I_0(2) ===")
r = wright_k(WrightParams(1.0, (), ((1.0, 1.0),)), 1.0)
print(f"  {r.value:.15g}  in {r.terms_used} terms")

print("\n=== z = 0 returns the bare gamma product ===")
p = WrightParams(2.0, ((2.0, 1.0),), ((1.5, 0.7), (2.5, 1.1)))
r = wright_k(p, 0.0)
want = k_gamma(2.0, 2.0) / (k_gamma(2.0, 1.5) * k_gamma(2.0, 2.5))
print(f"  series head: {r.value:.15g}   direct product: {want:.15g}")

print("\n=== the growth index guards convergence ===")
good = WrightParams(1.0, ((1.0, 1.0),), ((1.0, 1.5),))
print(f"  weights (1.0 up, 1.5 down): index = {good.growth_index}")
try:
    WrightParams(1.0, ((1.0, 2.5),), ((1.0, 1.0),))
except Exception as exc:
    print(f"  weights (2.5 up, 1.0 down) rejected: {exc}")
