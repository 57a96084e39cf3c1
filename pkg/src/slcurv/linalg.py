"""Small dense real linear algebra used by the curvature pipeline.

Everything here targets desk scale (dimension a few dozen): LU with partial
pivoting for determinant/inverse, a Householder-reflector complement basis,
and a cyclic Jacobi eigensolver for symmetric matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

PIVOT_FLOOR = 1e-300  # only exact-scale underflow counts as singular


class SingularMatrixError(ValueError):
    """Pivot magnitude fell below the underflow floor during elimination."""


class NonSymmetricMatrixError(ValueError):
    """Symmetric eigensolver fed a matrix that is not symmetric."""


class JacobiConvergenceError(RuntimeError):
    """Off-diagonal mass failed to reach tolerance within the sweep budget."""


@dataclass(frozen=True)
class EigenSpectrum:
    """Eigenvalues sorted descending with matching orthonormal columns."""

    values: np.ndarray
    vectors: np.ndarray


def _as_square(a) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def _lu_factor(a: np.ndarray):
    """Doolittle LU with partial pivoting; returns (lu, perm, sign).

    Raises SingularMatrixError when no usable pivot remains.
    """
    n = a.shape[0]
    lu = a.copy()
    perm = np.arange(n)
    sign = 1.0
    for k in range(n):
        piv = k + int(np.argmax(np.abs(lu[k:, k])))
        if abs(lu[piv, k]) < PIVOT_FLOOR:
            raise SingularMatrixError(f"pivot below {PIVOT_FLOOR} in column {k}")
        if piv != k:
            lu[[k, piv]] = lu[[piv, k]]
            perm[[k, piv]] = perm[[piv, k]]
            sign = -sign
        lu[k + 1 :, k] /= lu[k, k]
        lu[k + 1 :, k + 1 :] -= np.outer(lu[k + 1 :, k], lu[k, k + 1 :])
    return lu, perm, sign


def determinant(a) -> float:
    """Determinant via LU; a vanishing pivot column yields 0.0, not an error."""
    a = _as_square(a)
    try:
        lu, _, sign = _lu_factor(a)
    except SingularMatrixError:
        return 0.0
    return float(sign * np.prod(np.diag(lu)))


def det_inverse(a) -> tuple[float, np.ndarray]:
    """Determinant and inverse from one LU factorization."""
    a = _as_square(a)
    n = a.shape[0]
    lu, perm, sign = _lu_factor(a)
    det = float(sign * np.prod(np.diag(lu)))
    # solve A X = I: permute, forward-substitute L (unit diagonal), back-substitute U
    x = np.eye(n)[perm]
    for k in range(1, n):
        x[k] -= lu[k, :k] @ x[:k]
    for k in range(n - 1, -1, -1):
        x[k] -= lu[k, k + 1 :] @ x[k + 1 :]
        x[k] /= lu[k, k]
    return det, x


def frobenius_norm(a) -> float:
    """Euclidean norm of the flattened entries."""
    a = np.asarray(a, dtype=float)
    return float(np.sqrt(np.sum(a * a)))


def complement_basis(g) -> np.ndarray:
    """Orthonormal basis of the hyperplane orthogonal to g, as N x (N-1) columns.

    Columns 1..N-1 of the Householder reflector that maps g/|g| onto the
    first coordinate axis. Deterministic for fixed g.
    """
    g = np.asarray(g, dtype=float)
    if g.ndim != 1:
        raise ValueError("complement_basis expects a vector")
    norm = float(np.sqrt(g @ g))
    if norm <= 1e-12:
        raise ValueError("cannot build a complement basis for a (near-)zero vector")
    u = g / norm
    v = u.copy()
    v[0] += 1.0 if u[0] >= 0.0 else -1.0
    refl = np.eye(g.size) - np.outer(v, v) * (2.0 / (v @ v))
    return refl[:, 1:]


def jacobi_eigh(a, tol: float = 1e-12) -> EigenSpectrum:
    """Cyclic (row-ordered) Jacobi eigendecomposition of a symmetric matrix.

    Sweeps until the off-diagonal Frobenius mass drops to tol * |A|_F,
    at most 100 sweeps. Values come back sorted descending, vectors as the
    matching orthonormal columns.
    """
    a = _as_square(a)
    norm = frobenius_norm(a)
    if frobenius_norm(a - a.T) > 1e-8 * (1.0 + norm):
        raise NonSymmetricMatrixError("jacobi_eigh requires a symmetric matrix")
    n = a.shape[0]
    work = 0.5 * (a + a.T)
    vecs = np.eye(n)
    for _ in range(100):
        off_part = work.copy()
        np.fill_diagonal(off_part, 0.0)
        if frobenius_norm(off_part) <= tol * norm:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = work[p, q]
                if apq == 0.0:
                    continue
                diff = work[q, q] - work[p, p]
                if abs(apq) < 1e-153 * max(1.0, abs(diff)):
                    # entry is subnormal-scale relative to the diagonal gap;
                    # the exact rotation is a no-op to machine precision
                    work[p, q] = 0.0
                    work[q, p] = 0.0
                    continue
                tau = diff / (2.0 * apq)
                t = np.sign(tau) if tau != 0.0 else 1.0
                t /= abs(tau) + np.sqrt(1.0 + tau * tau)
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                colp = work[:, p].copy()
                colq = work[:, q].copy()
                work[:, p] = c * colp - s * colq
                work[:, q] = s * colp + c * colq
                rowp = work[p, :].copy()
                rowq = work[q, :].copy()
                work[p, :] = c * rowp - s * rowq
                work[q, :] = s * rowp + c * rowq
                work[p, q] = 0.0
                work[q, p] = 0.0
                vp = vecs[:, p].copy()
                vecs[:, p] = c * vp - s * vecs[:, q]
                vecs[:, q] = s * vp + c * vecs[:, q]
    else:
        raise JacobiConvergenceError("no convergence within 100 Jacobi sweeps")
    values = np.diag(work).copy()
    order = np.argsort(-values, kind="stable")
    return EigenSpectrum(values=values[order], vectors=vecs[:, order])


def cluster_multiplicities(values, cluster_tol: float = 1e-6) -> list[tuple[float, int]]:
    """Greedy left-to-right clustering of a descending value sequence.

    A value joins the open cluster iff it lies within cluster_tol of the
    cluster's first element; each cluster reports its mean and size.
    """
    values = np.asarray(values, dtype=float)
    if values.ndim != 1:
        raise ValueError("cluster_multiplicities expects a vector of values")
    if values.size and np.any(np.diff(values) > 0):
        raise ValueError("values must be sorted in descending order")
    clusters: list[tuple[float, int]] = []
    start = 0
    for i in range(1, values.size + 1):
        if i == values.size or abs(values[i] - values[start]) > cluster_tol:
            chunk = values[start:i]
            clusters.append((float(chunk.mean()), int(chunk.size)))
            start = i
    return clusters
