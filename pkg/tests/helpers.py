"""Shared independent oracles: high-precision series, brute-force sums and
quadratures that never touch the library's own evaluation paths."""

import mpmath as mp


def erf_maclaurin(x, dps: int = 40) -> float:
    """erf via its Maclaurin series summed at high precision:
    erf(x) = (2/sqrt(pi)) sum_k (-1)^k x^(2k+1) / (k! (2k+1))."""
    with mp.workdps(dps):
        xm = mp.mpf(x)
        power = xm        # (-1)^k x^(2k+1) / k!
        total = xm
        k = 0
        limit = mp.mpf(10) ** (-(dps - 5))
        while True:
            k += 1
            power *= -xm * xm / k
            term = power / (2 * k + 1)
            total += term
            if abs(term) < limit * max(abs(total), mp.mpf(1)) and k > 8:
                break
        return float(2 / mp.sqrt(mp.pi) * total)


def brute_sum(term, n_terms: int) -> float:
    """Plain brute-force partial sum at high precision."""
    with mp.workdps(40):
        return float(mp.fsum(mp.mpf(term(n)) for n in range(n_terms)))


def brute_boltzmann_moments(energies, beta):
    """(Z, <E>, Var E) by direct high-precision summation over the supplied
    energy list (long enough that the tail is negligible)."""
    with mp.workdps(50):
        b = mp.mpf(beta)
        ws = [mp.e ** (-b * mp.mpf(e)) for e in energies]
        z = mp.fsum(ws)
        m1 = mp.fsum(w * mp.mpf(e) for w, e in zip(ws, energies)) / z
        m2 = mp.fsum(w * mp.mpf(e) ** 2 for w, e in zip(ws, energies)) / z
        return float(z), float(m1), float(m2 - m1 * m1)


def mp_quad(f, points) -> float:
    """High-precision quadrature oracle (tanh-sinh, mpmath)."""
    with mp.workdps(40):
        return float(mp.quad(f, points))
