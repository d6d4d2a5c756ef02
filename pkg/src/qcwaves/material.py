"""Quasicrystal material data and the 2x2 spectral decomposition.

A 1D hexagonal quasicrystal under anti-plane strain carries one phonon and
one phason displacement coupled through the symmetric material matrix

    C = [[c44, R3],
         [R3,  K2]].

Diagonalizing C with a rotation Q decouples the equations of motion into two
independent Helmholtz problems with effective shear moduli a1 >= a2 (the
eigenvalues of C), which is what every other module in this package builds
on. Wave numbers follow as k_i = omega * sqrt(rho / a_i) and phase speeds as
c_i = sqrt(a_i / rho), so mode 1 is the fast wave and mode 2 the slow one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    CouplingTooStrong,
    NonPositiveDensity,
    NonPositiveFrequency,
    NonPositiveModulus,
)

__all__ = [
    "QcMaterial",
    "SpectralDecomposition",
    "WaveParameters",
    "validate",
    "decompose",
    "wave_parameters",
]


@dataclass(frozen=True)
class QcMaterial:
    """Material constants of a 1D hexagonal quasicrystal, SI units.

    Attributes:
        c44: phonon shear modulus [Pa]
        R3:  phonon-phason coupling modulus [Pa]
        K2:  phason modulus [Pa]
        rho: mass density [kg/m^3]

    Instances are plain value objects; call :func:`validate` to check the
    well-posedness conditions. R3 = 0 is accepted and yields two uncoupled
    isotropic anti-plane problems.
    """

    c44: float
    R3: float
    K2: float
    rho: float

    def matrix(self) -> np.ndarray:
        """The symmetric 2x2 material matrix C."""
        return np.array([[self.c44, self.R3], [self.R3, self.K2]], dtype=float)


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigen-decomposition of the material matrix C.

    a1 >= a2 > 0 are the eigenvalues (effective shear moduli) and psi in
    [0, pi/2] parametrizes the rotation Q = [[cos psi, -sin psi],
    [sin psi, cos psi]] whose columns are the unit eigenvectors, so that
    Q^T C Q = diag(a1, a2).
    """

    a1: float
    a2: float
    psi: float

    @property
    def cos_psi(self) -> float:
        return math.cos(self.psi)

    @property
    def sin_psi(self) -> float:
        return math.sin(self.psi)

    def rotation(self) -> np.ndarray:
        """The orthogonal matrix Q with eigenvector columns."""
        c, s = self.cos_psi, self.sin_psi
        return np.array([[c, -s], [s, c]])


@dataclass(frozen=True)
class WaveParameters:
    """Wavenumbers and phase speeds of the two shear modes at one frequency.

    k1 <= k2 and c1 >= c2 because a1 >= a2; k_i * c_i = omega.
    """

    omega: float
    k1: float
    k2: float
    c1: float
    c2: float


def validate(m: QcMaterial) -> None:
    """Check the well-posedness conditions; raise a specific error if violated.

    Requires c44 > 0, K2 > 0, R3 >= 0, rho > 0 and c44*K2 - R3^2 > 0.
    Accepts arbitrary numeric input (NaN fails the positivity checks).
    """
    if not (m.c44 > 0.0) or not (m.K2 > 0.0) or not (m.R3 >= 0.0):
        raise NonPositiveModulus(
            f"need c44 > 0, K2 > 0, R3 >= 0; got c44={m.c44}, K2={m.K2}, R3={m.R3}"
        )
    if not (m.rho > 0.0):
        raise NonPositiveDensity(f"need rho > 0; got rho={m.rho}")
    det = m.c44 * m.K2 - m.R3 * m.R3
    if not (det > 0.0):
        raise CouplingTooStrong(
            f"need c44*K2 - R3^2 > 0; got {det} (coupling too strong)"
        )


def decompose(m: QcMaterial) -> SpectralDecomposition:
    """Diagonalize the material matrix C.

    Returns a1 >= a2 > 0 and the rotation angle psi in [0, pi/2].

    a1 takes the + branch of the quadratic formula; a2 is computed as
    det(C)/a1 to stay accurate for nearly singular C. At R3 = 0 the
    eigenvector formula degenerates (0/0) and psi is assigned its
    continuity limit: 0 for c44 >= K2, pi/2 for c44 < K2.
    """
    validate(m)
    trace = m.c44 + m.K2
    det = m.c44 * m.K2 - m.R3 * m.R3
    # sum-of-squares form of the discriminant: no cancellation
    disc = math.hypot(m.c44 - m.K2, 2.0 * m.R3)
    a1 = 0.5 * (trace + disc)
    a2 = det / a1
    if m.R3 == 0.0:
        psi = 0.0 if m.c44 >= m.K2 else 0.5 * math.pi
    else:
        # cos psi : sin psi = R3 : (a1 - c44).  For c44 >= K2 the direct
        # difference a1 - c44 cancels; the eigenvalue identity
        # (a1 - c44)(a1 - K2) = R3^2 gives it through the well-conditioned
        # gap a1 - K2 instead. atan2 keeps psi accurate near both 0 and
        # pi/2, where the arccos form of the same angle loses all digits.
        if m.c44 >= m.K2:
            gap = 0.5 * ((m.c44 - m.K2) + disc)
            excess = m.R3 * m.R3 / gap
        else:
            excess = 0.5 * ((m.K2 - m.c44) + disc)
        psi = math.atan2(excess, m.R3)
    return SpectralDecomposition(a1=a1, a2=a2, psi=psi)


def wave_parameters(d: SpectralDecomposition, rho: float, omega: float) -> WaveParameters:
    """Wavenumbers k_i = omega*sqrt(rho/a_i) and speeds c_i = sqrt(a_i/rho)."""
    if not (omega > 0.0):
        raise NonPositiveFrequency(f"need omega > 0; got {omega}")
    if not (rho > 0.0):
        raise NonPositiveDensity(f"need rho > 0; got {rho}")
    k1 = omega * math.sqrt(rho / d.a1)
    k2 = omega * math.sqrt(rho / d.a2)
    c1 = math.sqrt(d.a1 / rho)
    c2 = math.sqrt(d.a2 / rho)
    return WaveParameters(omega=omega, k1=k1, k2=k2, c1=c1, c2=c2)
