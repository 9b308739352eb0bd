"""The Mittag-Leffler hierarchy, from exp(z) to the six-parameter k-form.

Every reduction is a parameter collapse of the same engine, so the named
functions agree with the general one bit for bit, and familiar closed forms
drop out along the way.
"""

import math

from kspecfun import (
    MLParams,
    ml_classic,
    ml_k,
    ml_prabhakar,
    ml_salim,
    ml_salim_faraj,
    ml_shukla,
    ml_wiman,
)

print("=== closed forms recovered by parameter collapse ===")
rows = [
    ("exp(1)", ml_k(MLParams(1, 1, 1, 1, 1, 1, 1), 1.0).value, math.e),
    ("exp(2)", ml_classic(1.0, 2.0).value, math.e**2),
    ("cosh(1) = E_{2,1}(1)", ml_wiman(2.0, 1.0, 1.0).value, math.cosh(1.0)),
    ("sinh(1) = E_{2,2}(1)", ml_wiman(2.0, 2.0, 1.0).value, math.sinh(1.0)),
    ("(e-1)   = E_{1,2}(1)", ml_wiman(1.0, 2.0, 1.0).value, math.e - 1.0),
    ("1/e     = E_{1,1}(-1)", ml_wiman(1.0, 1.0, -1.0).value, 1.0 / math.e),
    ("1.5 sqrt(e)  (weighted)", ml_prabhakar(1, 1, 2, 0.5).value, 1.5 * math.sqrt(math.e)),
    ("2 (telescoping ratio)", ml_salim(1, 1, 2, 3, 1.0).value, 2.0),
]
for label, got, want in rows:
    print(f"  {label:<26} {got:.15g}   (exact {want:.15g})")

print("\n=== the collapse chain is bit-for-bit ===")
z = 1.3
pairs = [
    ("one-parameter", ml_classic(1.7, z).value,
     ml_k(MLParams(1, 1.7, 1, 1, 1, 1, 1), z).value),
    ("two-parameter", ml_wiman(1.7, 2.2, z).value,
     ml_k(MLParams(1, 1.7, 2.2, 1, 1, 1, 1), z).value),
    ("weighted numerator", ml_prabhakar(1.7, 2.2, 1.4, z).value,
     ml_k(MLParams(1, 1.7, 2.2, 1.4, 1, 1, 1), z).value),
    ("real stride q", ml_shukla(1.7, 2.2, 1.4, 0.6, z).value,
     ml_k(MLParams(1, 1.7, 2.2, 1.4, 1, 1, 0.6), z).value),
    ("Pochhammer denominator", ml_salim(1.7, 2.2, 1.4, 1.9, z).value,
     ml_k(MLParams(1, 1.7, 2.2, 1.4, 1.9, 1, 1), z).value),
    ("both strides", ml_salim_faraj(1.7, 2.2, 1.4, 1.9, 1.2, 0.8, z).value,
     ml_k(MLParams(1, 1.7, 2.2, 1.4, 1.9, 1.2, 0.8), z).value),
]
for label, a, b in pairs:
    print(f"  {label:<24} identical: {a == b}")

print("\n=== truncation diagnostics ===")
r = ml_k(MLParams(2, 1.5, 1.2, 1.1, 1.3, 1.0, 0.9), -1.5)
print(f"  value = {r.value:.15g}")
print(f"  terms_used = {r.terms_used}, last |term| = {r.last_term_abs:.2e}")
print(f"  converged = {r.converged}, tail decreasing = {r.tail_decreasing}")
print(f"  final term ratio = {r.final_term_ratio:.3f}  (must stay below 1)")

print("\n=== the convergence condition q < alpha + p is enforced ===")
try:
    MLParams(1, 1, 1, 1, 1, 1, 2.0)
except Exception as exc:
    print(f"  q = alpha + p rejected: {type(exc).__name__}: {exc}")
