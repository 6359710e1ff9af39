"""How far does th-2 hold?  Scan it modulo Phi_n and Phi_n^2 side by side.

For d = 2 both moduli pass; for larger d only the first power holds.
"""

import sys

from qcongr.claims import builtin, verify, with_modulus_power

n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 25

print(f"{'d':>2} {'n':>3}  mod Phi_n  mod Phi_n^2")
for d in range(2, 6):
    for n in range(2 * d + 1, n_max + 1, 2 * d):
        c = builtin("th-2", d=d, n=n)
        one = verify(with_modulus_power(c, 1)).outcome.value
        two = verify(c).outcome.value
        print(f"{d:>2} {n:>3}  {one:<9}  {two}")
