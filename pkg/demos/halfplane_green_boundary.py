"""Demo: the image construction kills the boundary traction exactly.

Compares the traction of a single buried source on the surface x2 = 0 with
the traction of the half-plane Green's function (source + mirror image):
the first is order one, the second cancels to the last bit.

    python demos/halfplane_green_boundary.py
"""

import math

import numpy as np

from qcwaves import (
    QcMaterial,
    decompose,
    fundamental_displacement,
    fundamental_traction,
    green_displacement,
    green_traction,
    image_point,
    wave_parameters,
)


def main():
    m = QcMaterial(c44=4.2e10, R3=1.2e9, K2=2.4e10, rho=4186.0)
    omega = 2.0 * math.pi * 1e6
    wp = wave_parameters(decompose(m), m.rho, omega)
    lam2 = 2.0 * math.pi / wp.k2

    xi = (0.0, -0.7 * lam2)  # source buried ~0.7 wavelengths deep
    print(f"source at {xi[0]:.4g}, {xi[1]:.4g} m; image at {image_point(xi)}")
    print(f"{'x1/lambda2':>10} {'|t| single source':>18} {'|t| with image':>16}")
    n = (0.0, 1.0)
    for frac in (-3.0, -1.0, -0.3, 0.0, 0.4, 1.2, 2.5):
        x = (frac * lam2, 0.0)
        single = np.max(np.abs(fundamental_traction(m, x, xi, omega, n)))
        total = np.max(np.abs(green_traction(m, x, xi, omega, n)))
        print(f"{frac:10.2f} {single:18.6e} {total:16.1e}")

    # displacements on the boundary are just doubled (r = r~ there)
    x = (1.3 * lam2, 0.0)
    g = green_displacement(m, x, xi, omega)
    print("\nGreen displacement on the boundary (doubled free-space kernel):")
    print(f"  g[0,0] = {g[0, 0]:.6e}")
    print(f"  u31 doubling holds: {abs(g[0, 0] / 2.0):.6e} per source")

    # off the boundary the image contribution fades with depth
    print("\nrelative size of the image correction with receiver depth:")
    for depth in (0.1, 0.5, 1.0, 3.0, 8.0):
        x = (0.6 * lam2, -depth * lam2)
        v = fundamental_displacement(m, x, xi, omega)
        g = green_displacement(m, x, xi, omega)
        rel = np.linalg.norm(g - v) / np.linalg.norm(v)
        print(f"  depth {depth:4.1f} lambda2: ||g - v|| / ||v|| = {rel:.3f}")


if __name__ == "__main__":
    main()
