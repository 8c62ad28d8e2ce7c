#!/usr/bin/env python3
"""High-precision reference values for the test suite.

Evaluates, at 40 significant digits, the quantities that the Rust tests
freeze as expected values: special-function constants, g at sample
points, and xi'/xi at sample points. Every formula is evaluated
term by term with mpmath, independently of the Rust implementation.
"""

import mpmath as mp

mp.mp.dps = 40


def primes_upto(n):
    sieve = [True] * (n + 1)
    sieve[0:2] = [False, False]
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = [False] * len(sieve[p * p :: p])
    return [p for p in range(2, n + 1) if sieve[p]]


def mangoldt_pairs(limit):
    """(n, log p) for all prime powers n <= limit."""
    out = []
    for p in primes_upto(int(limit)):
        q = p
        while q <= limit:
            out.append((q, mp.log(p)))
            q *= p
    return sorted(out)


def prime_term_sum(t):
    limit = mp.floor(mp.e**t)
    total = mp.mpf(0)
    for n, logp in mangoldt_pairs(int(limit)):
        total += logp / mp.sqrt(n) * (t - mp.log(n))
    return total


def g_explicit(t):
    t = mp.mpf(t)
    a = -4 * (mp.e ** (t / 2) + mp.e ** (-t / 2) - 2)
    b = prime_term_sum(t)
    c = -(t / 2) * (mp.digamma(mp.mpf(1) / 4) - mp.log(mp.pi))
    d = (mp.e ** (-t / 2) * mp.lerchphi(mp.e ** (-2 * t), 2, mp.mpf(1) / 4)
         - mp.lerchphi(1, 2, mp.mpf(1) / 4)) / 4
    return a + b + c + d


def xi_log_deriv(s):
    s = mp.mpc(s)
    return (1 / (s - 1) + 1 / s - mp.log(mp.pi) / 2 + mp.digamma(s / 2) / 2
            + mp.zeta(s, derivative=1) / mp.zeta(s))


def show(label, v):
    print(f"{label:34s} {mp.nstr(v, 25)}")


show("euler_gamma", mp.euler)
show("log_pi", mp.log(mp.pi))
show("catalan", mp.catalan)
show("psi(1/4)", mp.digamma(mp.mpf(1) / 4))
show("psi(1/4) closed form", -mp.euler - mp.pi / 2 - 3 * mp.log(2))
show("phi(1,2,1/4)", mp.lerchphi(1, 2, mp.mpf(1) / 4))
show("phi closed form pi^2+8G", mp.pi**2 + 8 * mp.catalan)
show("phi(e^-2,2,1/4)", mp.lerchphi(mp.e**-2, 2, mp.mpf(1) / 4))
show("gamma_1 (first zero)", mp.zetazero(1).imag)

for t in ["0.5", "1", "2", "5", "10"]:
    show(f"g({t})", g_explicit(mp.mpf(t)))
show("prime_term_sum(2)", prime_term_sum(mp.mpf(2)))

show("xi'/xi(2)", xi_log_deriv(2).real)
show("xi'/xi(2.5)", xi_log_deriv(2.5).real)
show("xi'/xi(2.5-1i)", xi_log_deriv(mp.mpc(2.5, -1)))
show("xi'/xi(2+3i)", xi_log_deriv(mp.mpc(2, 3)))
show("xi'/xi(1.5+3i)", xi_log_deriv(mp.mpc(1.5, 3)))
show("zeta'/zeta(2)", mp.zeta(2, derivative=1) / mp.zeta(2))

# Fourier rhs (1/z^2) xi'/xi(1/2 - iz) at the acceptance z points
for z in [mp.mpc(0, 2), mp.mpc(1, 2), mp.mpc(-3, 1.5)]:
    s = mp.mpf(1) / 2 - mp.mpc(0, 1) * z
    show(f"(1/z^2)xi'/xi at z={z}", xi_log_deriv(s) / z**2)

# Chebyshev psi(10^6)
show("psi_chebyshev(1e6)", sum(lp for _, lp in mangoldt_pairs(10**6)))
