"""Compare the half sum of (1/2)_k^3/k!^3 with +-Gamma_p(1/4)^4 modulo p^2."""

from fractions import Fraction

from qcongr.padlim import gamma_p, primes_below, van_hamme_sum

for p in primes_below(60):
    if p % 4 != 1:
        continue
    s = van_hamme_sum(p)
    g = gamma_p(Fraction(1, 4), p, 2) ** 4
    sign = "+" if s == g else "-" if s == -g else "?"
    print(f"p={p:>2}  sum={s.value:>5}  Gamma_p(1/4)^4={g.value:>5}  sum = {sign}Gamma_p(1/4)^4")
