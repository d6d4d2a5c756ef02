"""Regenerate the Chebyshev tables in ``src/qcwaves/_cyltables.py``.

Development utility only; requires mpmath. The shipped library never imports
it. The tables hold Chebyshev coefficients of the slowly varying amplitude
functions of the large-argument representation

    J_nu(x) = sqrt(2/(pi x)) * (P_nu(x) cos(chi) - Q_nu(x) sin(chi))
    Y_nu(x) = sqrt(2/(pi x)) * (P_nu(x) sin(chi) + Q_nu(x) cos(chi))

with chi = x - (2 nu + 1) pi / 4, fitted in the variable t = 2 (XCUT/x)^2 - 1
on x in [XCUT, inf). P_nu and 8x*Q_nu are smooth even functions of 1/x, so a
degree-29 fit reaches double precision. Coefficients are computed at 50
significant digits from mpmath reference values and written verbatim.

Run from the repository root:

    python tools/generate_cylinder_tables.py > src/qcwaves/_cyltables.py
"""

import mpmath as mp

mp.mp.dps = 50

XCUT = mp.mpf(4)
N_COEFF = 30


def _chi(nu, x):
    return x - (2 * nu + 1) * mp.pi / 4


def _p_of_u(nu, u):
    if u == 0:
        return mp.mpf(1)
    x = XCUT / mp.sqrt(u)
    c, s = mp.cos(_chi(nu, x)), mp.sin(_chi(nu, x))
    return mp.sqrt(mp.pi * x / 2) * (mp.besselj(nu, x) * c + mp.bessely(nu, x) * s)


def _qt_of_u(nu, u):
    if u == 0:
        return mp.mpf(4 * nu * nu - 1)
    x = XCUT / mp.sqrt(u)
    c, s = mp.cos(_chi(nu, x)), mp.sin(_chi(nu, x))
    q = mp.sqrt(mp.pi * x / 2) * (mp.bessely(nu, x) * c - mp.besselj(nu, x) * s)
    return 8 * x * q


def _cheb_coeffs(f, n):
    js = list(range(n))
    fvals = [f((mp.cos(mp.pi * (j + mp.mpf(1) / 2) / n) + 1) / 2) for j in js]
    coeffs = []
    for k in range(n):
        acc = mp.mpf(0)
        for j in js:
            acc += fvals[j] * mp.cos(mp.pi * k * (j + mp.mpf(1) / 2) / n)
        coeffs.append(2 * acc / n)
    coeffs[0] /= 2
    return coeffs


def main():
    print('"""Frozen Chebyshev tables for the cylinder-function amplitude factors.')
    print()
    print("Generated by tools/generate_cylinder_tables.py; do not edit by hand.")
    print('"""')
    print()
    print(f"XCUT = {float(XCUT)!r}")
    for nu in (0, 1):
        for name, f in ((f"P{nu}", lambda u, nu=nu: _p_of_u(nu, u)),
                        (f"QT{nu}", lambda u, nu=nu: _qt_of_u(nu, u))):
            cs = _cheb_coeffs(f, N_COEFF)
            print()
            print(f"{name} = (")
            for c in cs:
                print(f"    {mp.nstr(c, 18, strip_zeros=False)},")
            print(")")


if __name__ == "__main__":
    main()
