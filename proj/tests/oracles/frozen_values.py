"""High-precision reference values frozen into the C++ tests.

Run with: python3 tests/oracles/frozen_values.py
Every quantity is computed from its defining series or formula with mpmath,
independently of the C++ implementation.
"""
import mpmath as mp


def direct_2f1(a, b, c, x, dps):
    """Partial summation of the defining series until terms vanish at `dps` digits."""
    with mp.workdps(dps):
        a, b, c, x = mp.mpf(a), mp.mpf(b), mp.mpf(c), mp.mpf(x)
        term, total, n = mp.mpf(1), mp.mpf(1), 0
        eps = mp.mpf(10) ** (-dps + 5)
        while True:
            term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * x
            n += 1
            total += term
            if abs(term) < eps * abs(total) and n > 10:
                return total


def alpha_map(alpha, coeffs, z, dps=50):
    with mp.workdps(dps):
        alpha = mp.mpf(alpha)
        z = mp.mpc(z)
        t = abs(z) ** 2
        out = mp.mpc(0)
        for k, c in coeffs.items():
            m = abs(k)
            F = direct_2f1(-alpha / 2, m - alpha / 2, m + 1, t, dps)
            out += mp.mpc(c) * F * (z ** m if k >= 0 else mp.conj(z) ** m)
        return out


def phi(alpha, beta, lam, x):
    alpha, beta, lam, x = map(mp.mpf, (alpha, beta, lam, x))
    a = mp.gamma(1 + alpha / 2) / mp.gamma(1 + alpha)
    bracket = ((2 - alpha) * x ** 2 / (1 - x) + 2 * a / (1 - x) ** 3 - 2 * a
               + (2 * a - 1) * x ** 2 / (1 - x ** 2))
    return beta - 2 * lam / (2 - alpha) * bracket


def main():
    mp.mp.dps = 60
    print("hyp2f1(-0.5,0.5,2;0.999) =", mp.nstr(direct_2f1(-0.5, 0.5, 2, "0.999", 200), 25))
    v = alpha_map(1, {1: 1, -2: 2j}, mp.mpf("0.5"))
    print("evaluate(a=1,c1=1,c-2=2i,0.5) =", mp.nstr(v.real, 25), mp.nstr(v.imag, 25))
    print("kernel(1,0.5) =", mp.nstr(mp.pi / 4 * mp.mpf("0.75") ** 2 / mp.mpf("0.5") ** 3, 25))
    c1 = mp.gamma(1.5) ** 2 / mp.gamma(2)
    print("c1*F(-1/2,-1/2;1;0.16) =", mp.nstr(c1 * direct_2f1(-0.5, -0.5, 1, "0.16", 60), 25))
    print("phi(1,1,1;0.05) =", mp.nstr(phi(1, 1, 1, "0.05"), 25))
    print("a(1.5) =", mp.nstr(mp.gamma(1.75) / mp.gamma(2.5), 25))
    print("cor22(k=2,a=1) =", mp.nstr(mp.gamma(1.5) * mp.gamma(3.5) / 3, 25))
    print("term bound rhs(k=1,a=1) =", mp.nstr(1 - 8 / (3 * mp.pi), 25))
    g = lambda r: (3 - r * r) / (r * (1 - r * r))
    r = mp.findroot(lambda r: mp.diff(g, r), 0.63)
    print("m-constant r*, m =", mp.nstr(r, 25), mp.nstr(g(r), 25))
    # root of phi for (1,1,1) by high-precision bisection
    lo, hi = mp.mpf(0), mp.mpf("0.5")
    for _ in range(200):
        mid = (lo + hi) / 2
        if phi(1, 1, 1, mid) > 0:
            lo = mid
        else:
            hi = mid
    print("rho0(1,1,1) =", mp.nstr(lo, 25))


if __name__ == "__main__":
    main()
