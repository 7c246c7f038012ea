"""Classical mock theta functions from the coefficient tables.

Each table row expresses a named Eulerian q-series as a sliced, shifted
combination of theta-coefficient streams.  Rows whose source table ships
with the package verify exactly; the rest need ingested data.
"""

from mjtheta.errors import MissingSource
from mjtheta.mocktheta import (
    eulerian, row_names, verify_table14_15, verify_watson,
)

print("third-order f(q) =", eulerian("3:f", 8))
print("fifth-order F0(q) =", eulerian("5:F0", 8))
print()

for name in row_names():
    try:
        rep = verify_table14_15(name, order=8)
        print(f"{name:8s} {rep['status']}  (depth {rep['depth']})")
    except MissingSource:
        print(f"{name:8s} skipped -- needs ingested data")

print()
for rep in verify_watson(40):
    print(rep["identity"], rep["status"], "to order", rep["depth"])
