"""Reading the shipped coefficient tables.

The 16 symbols outside the distinguished 23 ship verbatim coefficient
tables.  The symmetry group of each symbol acts on the residue index, and
the tables are exactly invariant; the two positivity audits split the
catalog along the distinguished/plain line.
"""

from mjtheta.catalog import (
    check_positivity_phi, check_positivity_sigma, get_lambency, load_catalog,
)

lam = get_lambency("6+2")
f = lam.fixture
print("6+2, residue 1, discriminants 1, 1-24, 1-48, ...:")
print("  ", [f.get(1 - 24 * n, 1) for n in range(8)])
print("group elements a(K) =", lam.K, "so row 5 copies row 1:")
print("  ", [f.get(1 - 24 * n, 5) for n in range(8)])
print("row 3 is forced to vanish by the group:",
      [f.get(9 - 24 * n, 3) for n in range(0, 40, 8)])
print()

good = [x.symbol for x in load_catalog() if check_positivity_sigma(x)]
print(f"sigma-positivity selects {len(good)} symbols:")
print("  ", ", ".join(good))
bad = [x.symbol for x in load_catalog()
       if x.fixture is not None and not check_positivity_phi(x)]
print(f"phi-positivity rejects all {len(bad)} table-bearing symbols.")
