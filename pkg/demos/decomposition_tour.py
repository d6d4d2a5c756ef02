"""Demo: how the phonon-phason coupling shapes the two shear modes.

Run from the repository root:

    python demos/decomposition_tour.py
"""

import math

from qcwaves import QcMaterial, decompose, wave_parameters


def describe(label, m, omega):
    d = decompose(m)
    wp = wave_parameters(d, m.rho, omega)
    print(f"--- {label}")
    print(f"    c44={m.c44:g} Pa, R3={m.R3:g} Pa, K2={m.K2:g} Pa, rho={m.rho:g} kg/m^3")
    print(f"    effective moduli a1={d.a1:.6g} Pa, a2={d.a2:.6g} Pa")
    print(f"    mixing angle psi = {math.degrees(d.psi):.4f} deg")
    print(f"    fast wave c1 = {wp.c1:.2f} m/s (k1 = {wp.k1:.4g} 1/m)")
    print(f"    slow wave c2 = {wp.c2:.2f} m/s (k2 = {wp.k2:.4g} 1/m)")


def main():
    omega = 2.0 * math.pi * 1e6  # 1 MHz

    # the shipped synthetic demo material: weak coupling, distinct moduli
    describe("demo material (weak coupling)",
             QcMaterial(c44=4.2e10, R3=1.2e9, K2=2.4e10, rho=4186.0), omega)

    # symmetric moduli: the modes mix maximally (psi = 45 deg) at any R3 > 0
    describe("equal moduli (maximal mixing)",
             QcMaterial(c44=3.0e10, R3=5.0e9, K2=3.0e10, rho=4186.0), omega)

    # R3 = 0: the system is two uncoupled isotropic anti-plane problems
    describe("uncoupled limit (R3 = 0)",
             QcMaterial(c44=4.2e10, R3=0.0, K2=2.4e10, rho=4186.0), omega)

    # sweep the coupling: psi and the speed split grow with R3
    print("--- coupling sweep at c44=4.2e10, K2=2.4e10")
    print(f"    {'R3 [Pa]':>10} {'psi [deg]':>10} {'c1 [m/s]':>10} {'c2 [m/s]':>10}")
    for r3 in (0.0, 1e9, 5e9, 1.5e10, 2.9e10):
        m = QcMaterial(c44=4.2e10, R3=r3, K2=2.4e10, rho=4186.0)
        d = decompose(m)
        wp = wave_parameters(d, m.rho, omega)
        print(f"    {r3:10.3g} {math.degrees(d.psi):10.4f} {wp.c1:10.2f} {wp.c2:10.2f}")


if __name__ == "__main__":
    main()
