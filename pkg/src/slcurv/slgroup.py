"""Exact geometry of SL(n, R) = det^{-1}(1) as a hypersurface in R^{n^2}.

Closed forms at the identity: the Gauss map A -> (A^{-1})^t / |A^{-1}|,
its spherical image {unit-norm matrices with positive determinant}, the
shape operator H -> n^{-1/2} H^t on trace-zero H, the two principal
curvatures +-n^{-1/2} with their multiplicities, and the derived
Gauss-Kronecker and mean curvatures. Matrices are plain numpy arrays;
preconditions (det 1, unit norm, zero trace) are enforced at the call
boundary. Seeded samplers supply random group and rotation points for
cross-checks against the numeric pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import det_inverse, determinant, frobenius_norm

UNIMODULAR_TOL = 1e-9
UNIT_NORM_TOL = 1e-9


@dataclass(frozen=True)
class SLCurvatureSummary:
    """The exact curvature data of SL(n, R) at the identity."""

    n: int
    kappa_plus: float
    mult_plus: int
    kappa_minus: float
    mult_minus: int
    gauss_kronecker: float
    mean: float

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "kappa_plus": self.kappa_plus,
            "mult_plus": self.mult_plus,
            "kappa_minus": self.kappa_minus,
            "mult_minus": self.mult_minus,
            "gauss_kronecker": self.gauss_kronecker,
            "mean": self.mean,
        }


def _as_square(a) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def _require_unimodular(a: np.ndarray) -> None:
    d = determinant(a)
    if abs(d - 1.0) > UNIMODULAR_TOL:
        raise ValueError(f"matrix determinant {d!r} is not 1 within {UNIMODULAR_TOL}")


def _require_trace_zero(h: np.ndarray) -> None:
    if abs(float(np.trace(h))) > 1e-9 * (1.0 + frobenius_norm(h)):
        raise ValueError("matrix is not trace-zero, so it is not tangent at the identity")


def gauss_map(a) -> np.ndarray:
    """Unit normal of SL(n) at a: (a^{-1})^t / |a^{-1}|_F."""
    a = _as_square(a)
    _require_unimodular(a)
    _, inv = det_inverse(a)
    return inv.T / frobenius_norm(inv)


def spherical_image_contains(u) -> bool:
    """Whether a unit-Frobenius-norm matrix lies in the Gauss-map image."""
    u = _as_square(u)
    if abs(frobenius_norm(u) - 1.0) > UNIT_NORM_TOL:
        raise ValueError("spherical_image_contains expects a unit-Frobenius-norm matrix")
    return determinant(u) > 0.0


def gauss_map_preimage(u) -> np.ndarray:
    """The SL(n) point whose Gauss map is u.

    Rescales u by det(u)^{-1/n} to land on det = 1, then inverts the
    transpose; gauss_map of the result reproduces u.
    """
    u = _as_square(u)
    if abs(frobenius_norm(u) - 1.0) > UNIT_NORM_TOL:
        raise ValueError("gauss_map_preimage expects a unit-Frobenius-norm matrix")
    d = determinant(u)
    if d <= 0.0:
        raise ValueError(f"matrix determinant {d!r} is not positive, not in the spherical image")
    n = u.shape[0]
    c = d ** (-1.0 / n) * u
    _, b = det_inverse(c.T)
    return b


def weingarten_identity(h) -> np.ndarray:
    """Shape operator of SL(n) at the identity on a trace-zero matrix: n^{-1/2} h^t."""
    h = _as_square(h)
    _require_trace_zero(h)
    n = h.shape[0]
    return h.T / np.sqrt(n)


def sym_skew_decompose(h) -> tuple[np.ndarray, np.ndarray]:
    """Split a trace-zero matrix into (trace-zero symmetric, skew-symmetric)."""
    h = _as_square(h)
    _require_trace_zero(h)
    return 0.5 * (h + h.T), 0.5 * (h - h.T)


def principal_curvatures_identity(n: int) -> list[tuple[float, int]]:
    """[(+n^{-1/2}, (n^2+n-2)/2), (-n^{-1/2}, (n^2-n)/2)]."""
    if n < 2:
        raise ValueError("principal curvatures are defined for n >= 2")
    kappa = n ** -0.5
    return [(kappa, (n * n + n - 2) // 2), (-kappa, (n * n - n) // 2)]


def curvature_summary(n: int) -> SLCurvatureSummary:
    """All exact curvature scalars of SL(n) at the identity."""
    if n < 2:
        raise ValueError("curvature summary is defined for n >= 2")
    mult_plus = (n * n + n - 2) // 2
    mult_minus = (n * n - n) // 2
    kappa = n ** -0.5
    return SLCurvatureSummary(
        n=n,
        kappa_plus=kappa,
        mult_plus=mult_plus,
        kappa_minus=-kappa,
        mult_minus=mult_minus,
        gauss_kronecker=(-1.0) ** mult_minus * float(n) ** (-(n * n - 1) / 2.0),
        mean=1.0 / (np.sqrt(n) * (n + 1)),
    )


def fundamental_forms(h) -> tuple[float, float]:
    """(first, second) fundamental forms of SL(n) at the identity on trace-zero h.

    First form: tr(h^t h), the ambient inner product. Second form:
    n^{-1/2} tr(h h).
    """
    h = _as_square(h)
    _require_trace_zero(h)
    n = h.shape[0]
    first = float(np.sum(h * h))
    second = float(np.trace(h @ h)) / np.sqrt(n)
    return first, second


def random_sl(n: int, seed: int) -> np.ndarray:
    """Seeded random SL(n) matrix: uniform entries, rescaled onto det = 1.

    Resamples while |det| < 0.05 so the det^{-1/n} rescaling stays
    well-conditioned; a negative determinant is fixed by negating row 0.
    """
    if n < 2:
        raise ValueError("random_sl is defined for n >= 2")
    rng = np.random.default_rng(seed)
    for _ in range(1000):
        a = rng.uniform(-1.0, 1.0, size=(n, n))
        d = determinant(a)
        if abs(d) >= 0.05:
            break
    else:
        raise RuntimeError("random_sl failed to draw a usable matrix in 1000 attempts")
    if d < 0.0:
        a[0] = -a[0]
        d = -d
    return a * d ** (-1.0 / n)


def random_special_orthogonal(n: int, seed: int) -> np.ndarray:
    """Seeded random rotation: QR-orthonormalized Gaussian matrix with det +1."""
    if n < 2:
        raise ValueError("random_special_orthogonal is defined for n >= 2")
    rng = np.random.default_rng(seed)
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    q = q * np.where(np.diag(r) >= 0.0, 1.0, -1.0)
    if determinant(q) < 0.0:
        q[:, 0] = -q[:, 0]
    return q
