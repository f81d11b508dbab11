"""Independent reference values frozen into the C++ unit tests.

Run with `python3 tests/oracles/oracles.py`. Uses sympy for primes and
mpmath for high-precision arithmetic; none of this shares code with the
C++ implementation.
"""
import cmath
import math
from collections import Counter

import mpmath as mp
from sympy import primerange, factorint, mobius, totient

mp.mp.dps = 30
P = 10**7
primes = list(primerange(2, P + 1))

print("pi(1000) =", len(list(primerange(2, 1001))))

s = math.fsum(math.log(p) ** 2 / p**2 for p in primes)
print("sum (log p)^2/p^2, p<=1e7 =", repr(s))
s = math.fsum(math.log(p) / (p - 1) ** 2 for p in primes)
print("sum log p/(p-1)^2, p<=1e7 =", repr(s))
s = math.fsum(math.log(p) / (p * (p - 1)) for p in primes)
print("sum log p/(p(p-1)), p<=1e7 =", repr(s))
s = math.fsum(math.log(p) * (2 * p - 1) / (p * (p - 1) ** 2) for p in primes)
print("sum_{j>=2} j log p/p^j, p<=1e7 =", repr(s))
lnprod = math.fsum(math.log1p(1 / (p**3 - p**2 - 2 * p)) for p in primes if p > 2)
print("prod p>2 (1+1/(p^3-p^2-2p)), p<=1e7 =", repr(math.exp(lnprod)))
print("z (partial product) =", repr(8 * math.sqrt(2 * math.exp(lnprod))))
print("sum sqrt(n)/2^(n/2) =", mp.nsum(lambda n: mp.sqrt(n) / 2 ** (n / 2), [1, mp.inf]))
print("sum sqrt(n+1)/2^(n/2) =", mp.nsum(lambda n: mp.sqrt(n + 1) / 2 ** (n / 2), [1, mp.inf]))
print("sum log n/n^2 =", -mp.zeta(2, derivative=1))

# Moebius exponential sum at alpha = 1/3, N = 1000.
acc = sum(int(mobius(n)) * cmath.exp(2j * math.pi * n / 3) for n in range(1, 1001))
print("mobius e(n/3), N=1000 =", repr(acc.real), repr(acc.imag))

# Exhaustive congruence counts n1 u1 == n2 u2 (mod q).
def congruence_count(q, N, U, M):
    c = Counter()
    for u in range(1, U + 1):
        if math.gcd(u, q) != 1:
            continue
        for n in range(M, M + N + 1):
            c[(n * u) % q] += 1
    return sum(v * v for v in c.values())

for inst in [(499, 400, 28, 0), (997, 600, 33, 0), (1009, 500, 30, 17)]:
    print("congruence count", inst, "=", congruence_count(*inst))

# Explicit Burgess-type bound, q = 1e5 exact, m = 2.29, k = 1, N = 1e4.
q = mp.mpf(10) ** 5
L = mp.log(q)
LL = mp.log(L)
logd = L / LL * mp.log(2) * (1 + 1 / LL + mp.mpf("4.7626") / LL**2)
tb = mp.mpf("2.29") * mp.e ** (mp.mpf(3) / 2 * logd) * mp.sqrt(10**4) * q ** (mp.mpf(3) / 16) * mp.sqrt(L * LL)
print("tb_bound example =", tb)

# v1 at m = 0.53, log10 q = 400.
L = 400 * mp.log(10)
print("v1(0.53, 1e400) =", 2 * (1 + 2 / (mp.e * L)) / mp.mpf("0.53"))

# Lemma 3.1 right-hand side at n = 12.
L = mp.log(12)
LL = mp.log(L)
print("divisor rhs(12) =", L / LL * (mp.log(2) + mp.log(2) / LL + mp.mpf("4.7626") * mp.log(2) / LL**2))

# Logarithmic integral at 100.
print("Li(100) =", mp.quad(lambda t: 1 / mp.log(t), [2, 100]))

# F-S crossover at eps = 1/10, h1 = 2727.
print("crossover even =", (2727 - mp.mpf(1) / 2) * mp.pi**2 / (mp.mpf(1) / 4 - 2 * mp.mpf(1) / 10))
print("crossover odd  =", (5449 - 1) * mp.pi / (mp.mpf(1) / 8 - mp.mpf(1) / 10))

# Quadratic character mod 5: max partial sum / (sqrt(5) log 5).
print("pv ratio q=5 =", 1 / (mp.sqrt(5) * mp.log(5)))
