"""Write a congruence in the claim language, lower it and check a few cases.

Run with ``python3 demos/custom_claim.py``.
"""

from qcongr import dsl
from qcongr.claims import verify

TEXT = """
# q-analogue of sum_{k<n} 1 = n vanishing mod n
claim "geometric" params n
  require n >= 2
: sum k=0..n-1 of q^k ~= 0 mod Phi(n)^1

# same, but squared modulus: false
claim "geometric-2" params n
  require n >= 2
: sum k=0..n-1 of q^k ~= 0 mod Phi(n)^2
"""

for ast in dsl.parse_module(dsl.ClaimSource(TEXT, "demo")):
    print(dsl.pretty(ast))
    for n in (5, 6, 12):
        print("   ", verify(dsl.lower(ast, {"n": n})).pretty())
