"""Curvature of implicit hypersurfaces f^{-1}(c) in R^N.

Orientation is fixed by the unit normal grad(f)/|grad(f)|. The shape
operator is minus the derivative of that normal field restricted to the
tangent space; in an orthonormal tangent basis T it reduces to
W = -(T^t H T)/|grad f| because T^t annihilates the rank-one correction
of the normalized gradient's Jacobian. Principal curvatures are the
eigenvalues of W, the Gauss-Kronecker curvature their product, the mean
curvature their average (trace over N-1).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

import numpy as np

from .autodiff import gradient, hessian
from .fields import ScalarField
from .linalg import cluster_multiplicities, complement_basis, jacobi_eigh

CRITICAL_GRADIENT_FLOOR = 1e-10
TANGENCY_TOL = 1e-8


class OffSurfaceError(ValueError):
    """Point does not satisfy |f(p) - level| <= on_surface_tol."""


class CriticalPointError(ValueError):
    """Gradient magnitude at the point is below the critical floor."""


class NonTangentVectorError(ValueError):
    """Vector handed to a tangent-space operation is not tangent."""


@dataclass(frozen=True)
class ImplicitHypersurface:
    """Level set field^{-1}(level) with its on-surface tolerance."""

    field: ScalarField
    level: float = 0.0
    on_surface_tol: float | None = None

    @property
    def ambient_dim(self) -> int:
        return self.field.arity

    def surface_tol(self) -> float:
        if self.on_surface_tol is not None:
            return self.on_surface_tol
        return 1e-9 * (1.0 + abs(self.level))

    def contains(self, p) -> bool:
        p = np.asarray(p, dtype=float)
        return abs(float(self.field([float(x) for x in p])) - self.level) <= self.surface_tol()


@dataclass(frozen=True)
class CurvatureReport:
    """Everything the pipeline knows about the surface at one point."""

    point: np.ndarray
    normal: np.ndarray
    tangent_basis: np.ndarray
    weingarten: np.ndarray
    curvatures: list  # (value, multiplicity) pairs, descending
    gauss_kronecker: float
    mean: float
    eigenvalues: np.ndarray = dataclass_field(repr=False, default=None)


def _checked_gradient(s: ImplicitHypersurface, p) -> tuple[np.ndarray, np.ndarray, float]:
    p = np.asarray(p, dtype=float)
    if p.ndim != 1 or p.size != s.ambient_dim:
        raise ValueError(f"point must have {s.ambient_dim} coordinates, got {p.size}")
    value = float(s.field([float(x) for x in p]))
    if abs(value - s.level) > s.surface_tol():
        raise OffSurfaceError(
            f"point is off-surface: field value {value!r} vs level {s.level!r}"
        )
    g = gradient(s.field, p)
    gnorm = float(np.sqrt(g @ g))
    if gnorm <= CRITICAL_GRADIENT_FLOOR:
        raise CriticalPointError(f"gradient magnitude {gnorm:.3e} below critical floor")
    return p, g, gnorm


def unit_normal(s: ImplicitHypersurface, p) -> np.ndarray:
    """Oriented unit normal grad(f)/|grad(f)| at an on-surface point."""
    _, g, gnorm = _checked_gradient(s, p)
    return g / gnorm


def weingarten_matrix(s: ImplicitHypersurface, p) -> tuple[np.ndarray, np.ndarray]:
    """Shape operator in an orthonormal tangent basis; returns (W, basis).

    W = -(T^t H T)/|grad f| with T the Householder complement basis of the
    gradient and H the field Hessian, symmetric up to roundoff.
    """
    p, g, gnorm = _checked_gradient(s, p)
    basis = complement_basis(g)
    hess = hessian(s.field, p)
    w = -(basis.T @ hess @ basis) / gnorm
    return w, basis


def weingarten_apply(s: ImplicitHypersurface, p, v) -> np.ndarray:
    """Shape operator applied to a tangent vector, as an ambient vector.

    Computes -(I - N N^t) H v / |grad f|, which stays in the tangent space.
    """
    p, g, gnorm = _checked_gradient(s, p)
    v = np.asarray(v, dtype=float)
    if v.shape != p.shape:
        raise ValueError("vector dimension does not match the ambient dimension")
    vnorm = float(np.sqrt(v @ v))
    if abs(float(v @ g)) > TANGENCY_TOL * vnorm * gnorm:
        raise NonTangentVectorError("vector is not tangent to the surface at p")
    normal = g / gnorm
    hv = hessian(s.field, p) @ v
    return -(hv - normal * float(normal @ hv)) / gnorm


def second_fundamental_form(s: ImplicitHypersurface, p, v, w) -> float:
    """Bilinear form <L(v), w> on tangent vectors; symmetric in (v, w)."""
    w = np.asarray(w, dtype=float)
    _, g, gnorm = _checked_gradient(s, p)
    if abs(float(w @ g)) > TANGENCY_TOL * float(np.sqrt(w @ w)) * gnorm:
        raise NonTangentVectorError("second argument is not tangent to the surface at p")
    return float(weingarten_apply(s, p, v) @ w)


def curvature_report(s: ImplicitHypersurface, p, cluster_tol: float = 1e-6) -> CurvatureReport:
    """Normal, tangent basis, shape operator, and all curvatures at p."""
    p, g, gnorm = _checked_gradient(s, p)
    w, basis = weingarten_matrix(s, p)
    spectrum = jacobi_eigh(w)
    curvatures = cluster_multiplicities(spectrum.values, cluster_tol)
    n_tangent = s.ambient_dim - 1
    return CurvatureReport(
        point=p,
        normal=g / gnorm,
        tangent_basis=basis,
        weingarten=w,
        curvatures=curvatures,
        gauss_kronecker=float(np.prod(spectrum.values)),
        mean=float(np.sum(spectrum.values) / n_tangent),
        eigenvalues=spectrum.values,
    )


def fd_hessian_oracle(field: ScalarField, p, step: float) -> np.ndarray:
    """Central-finite-difference Hessian, the AD-independent second-derivative check."""
    if step <= 0:
        raise ValueError("step must be positive")
    p = np.asarray(p, dtype=float)
    n = p.size

    def f(x):
        return float(field([float(v) for v in x]))

    hess = np.empty((n, n))
    for i in range(n):
        ei = np.zeros(n)
        ei[i] = step
        for j in range(i, n):
            ej = np.zeros(n)
            ej[j] = step
            val = (f(p + ei + ej) - f(p + ei - ej) - f(p - ei + ej) + f(p - ei - ej)) / (
                4.0 * step * step
            )
            hess[i, j] = val
            hess[j, i] = val
    return hess
