"""Independent values of C(1,4m;s) and the structure functions built from it.

For the harmonic polynomial P(p) = Re (p1 + i p2)^{4m} the theta series
Theta(x) = sum' P(p) exp(-pi x |p|^2) obeys Theta(1/x) = x^{1+4m} Theta(x), so

    Gamma(s+2m) pi^{-s-2m} C(1,4m;s) = int_1^inf (x^{s+2m-1} + x^{2m-s}) Theta(x) dx,

valid for every s. C(0,1) = 4 zeta(s) L_{-4}(s) comes from mpmath directly.
Nothing here shares code with the C++ kernels.

Run: python3 theta_oracle.py
"""

import mpmath as mp

mp.mp.dps = 40
RADIUS = 14  # exp(-pi * 14^2) is far below the working precision


def theta(m, x):
    k = 4 * m
    acc = mp.mpf(0)
    for p1 in range(-RADIUS, RADIUS + 1):
        for p2 in range(-RADIUS, RADIUS + 1):
            if p1 == 0 and p2 == 0:
                continue
            r2 = p1 * p1 + p2 * p2
            acc += mp.re(mp.mpc(p1, p2) ** k) * mp.exp(-mp.pi * x * r2)
    return acc


_theta_cache = {}


def completed(m, s):
    key = m
    if key not in _theta_cache:
        _theta_cache[key] = mp.memoize(lambda x: theta(m, x))
    th = _theta_cache[key]
    s = mp.mpc(s)
    f = lambda x: (x ** (s + 2 * m - 1) + x ** (2 * m - s)) * th(x)
    return mp.quad(f, [1, 2, 4, 8, mp.inf])


def c14m(m, s):
    s = mp.mpc(s)
    return completed(m, s) * mp.pi ** (s + 2 * m) / mp.gamma(s + 2 * m)


def c01(s):
    return 4 * mp.zeta(s) * mp.dirichlet(s, [0, 1, 0, -1])


def f2m(m, s):
    num = mp.mpf(1)
    den = mp.mpf(1)
    for j in range(1, 2 * m + 1):
        num *= j - s
        den *= j - 1 + s
    return num / den


def delta3(m, s):
    s = mp.mpc(s)
    return mp.gamma(s) ** 2 * mp.pi ** (-2 * s) / f2m(m, s) * c01(s) * c14m(m, s)


def phi2(s):
    # (1/2i) log F_2 on the branch continuous from the critical line (t > 0)
    s = mp.mpc(s)
    logf = sum(mp.log(j - s) - mp.log(j - 1 + s) for j in (1, 2))
    return -0.5j * logf + mp.pi


def main():
    print("C(1,4;2.5)  =", mp.nstr(c14m(1, 2.5), 25))
    print("C(1,4;4)    =", mp.nstr(c14m(1, 4), 25))
    print("C(1,4;3)    =", mp.nstr(c14m(1, 3), 25))
    print("C(1,8;2)    =", mp.nstr(c14m(2, 2), 25))
    print("C(1,4;0.5+14i) =", mp.nstr(c14m(1, mp.mpc(0.5, 14)), 25))
    print("C(1,4;-1.5+3i) =", mp.nstr(c14m(1, mp.mpc(-1.5, 3)), 25))
    print("C(0,1;2)    =", mp.nstr(c01(2), 25))

    d = lambda x: mp.re(delta3(1, x))
    print("Delta3(1;1/2)  =", mp.nstr(d(0.5), 20))
    print("Delta3'(1;1/2) =", mp.nstr(mp.diff(d, 0.5), 20))

    # real-axis critical points of Delta3 (m = 1): where the Im-null contours leave the axis
    for guess in (0.3, 1.68, -2.66, 4.21):
        root = mp.findroot(lambda x: mp.diff(d, x), guess)
        print("Delta3' = 0 on the real axis at", mp.nstr(root, 12))

    # Laurent coefficients at the poles: s = 1 (double), s = 0 and s = 2 (simple)
    eps = mp.mpf("1e-8")
    print("(s-1)^2 Delta3 at s=1 :", mp.nstr(mp.re(delta3(1, 1 + eps)) * eps ** 2, 10))
    print("s Delta3 at s=0       :", mp.nstr(mp.re(delta3(1, eps)) * eps, 10))
    print("(s-2) Delta3 at s=2   :", mp.nstr(mp.re(delta3(1, 2 + eps)) * eps, 10))

    print("phi_2(1/2 + i sqrt3/2) =", mp.nstr(phi2(mp.mpc(0.5, mp.sqrt(3) / 2)), 20))

    # Delta4 = C(1,4)/C(0,1) at a point right of the strip
    s = mp.mpc(3.5, 7)
    print("Delta4(1;3.5+7i) =", mp.nstr(c14m(1, s) / c01(s), 20))


if __name__ == "__main__":
    main()
