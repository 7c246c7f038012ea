"""Principal moduli from eta quotients.

Every symbol in the catalog carries an eta quotient T whose expansion
starts q^-1 + O(1), and T * (T composed with the level-m Fricke
involution) is exactly constant -- the defining pair of properties.
"""

from mjtheta.catalog import load_catalog
from mjtheta.eta import eta_expand, format_eta, verify_fricke_constant

for lam in load_catalog()[:8]:
    T = eta_expand(lam.eta, 6)
    c = verify_fricke_constant(lam.eta, lam.m, 40)
    head = " + ".join(f"{v}q^{x}" for x, v in T.items()[:4])
    print(f"{lam.symbol:14s} T = {format_eta(lam.eta):24s} "
          f"= {head} + ...   T*(T|W) = {c}")

print()
print("the constant is always a perfect power of a small prime:")
for lam in load_catalog():
    c = verify_fricke_constant(lam.eta, lam.m, 40)
    print(f"  {lam.symbol:14s} {c}")
