"""Half-plane Green's function by the method of images.

The half-plane is fixed by convention as x2 < 0 with traction-free boundary
x2 = 0. For a source xi strictly inside, the image source sits at
xi~ = (xi1, -xi2) and

    g*(x, xi, omega) = v*(x, xi, omega) + v*(x, xi~, omega)

satisfies the equations of motion in the half-plane (the image point lies
outside, so its kernel is regular there) and has exactly zero phonon and
phason traction on x2 = 0: the normal derivative of the image term is the
negative of that of the direct term on the boundary. Evaluating the
displacement on the boundary itself is allowed; only a source on the
boundary is rejected, because source and image would coincide.
"""

from __future__ import annotations

import numpy as np

from .errors import PointOutsideHalfPlane, SourceOnBoundary, SourceOutsideHalfPlane
from .kernels import fundamental_displacement, fundamental_traction
from .material import QcMaterial

__all__ = ["image_point", "green_displacement", "green_traction"]


def image_point(xi) -> tuple[float, float]:
    """Mirror a source at xi (xi2 < 0) across the boundary: (xi1, -xi2)."""
    xi1, xi2 = float(xi[0]), float(xi[1])
    if xi2 == 0.0:
        raise SourceOnBoundary("source on x2 = 0: image construction degenerates")
    if xi2 > 0.0:
        raise SourceOutsideHalfPlane(f"source must have xi2 < 0; got xi2 = {xi2}")
    return (xi1, -xi2)


def _check_field_point(x) -> None:
    if float(x[1]) > 0.0:
        raise PointOutsideHalfPlane(f"field point must have x2 <= 0; got x2 = {x[1]}")


def green_displacement(m: QcMaterial, x, xi, omega: float) -> np.ndarray:
    """Half-plane Green's displacement g* = v*(r) + v*(r~), shape (2, 2)."""
    _check_field_point(x)
    xi_im = image_point(xi)
    return fundamental_displacement(m, x, xi, omega) + fundamental_displacement(
        m, x, xi_im, omega
    )


def green_traction(m: QcMaterial, x, xi, omega: float, n) -> np.ndarray:
    """Half-plane Green's traction for unit normal n, shape (2, 2).

    Sum of the fundamental tractions of the real and image sources; on
    x2 = 0 with n = (0, 1) the two contributions cancel exactly.
    """
    _check_field_point(x)
    xi_im = image_point(xi)
    return fundamental_traction(m, x, xi, omega, n) + fundamental_traction(
        m, x, xi_im, omega, n
    )
