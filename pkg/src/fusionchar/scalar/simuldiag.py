"""Simultaneous diagonalization of commuting complex matrices."""
from __future__ import annotations

import numpy as np

from ..errors import CommutativityError, DegeneracyError

DEFAULT_TOL = 1e-9
DEFAULT_MAX_RESAMPLE = 8


def check_commuting(mats, tol: float = DEFAULT_TOL) -> tuple[int, int] | None:
    """Return the first non-commuting index pair, or None."""
    for a in range(len(mats)):
        for b in range(a + 1, len(mats)):
            A, B = mats[a], mats[b]
            comm = np.abs(A @ B - B @ A).max(initial=0.0)
            if comm > tol * max(1.0, np.linalg.norm(A) * np.linalg.norm(B)):
                return a, b
    return None


def simuldiag(mats, tol: float = DEFAULT_TOL, max_resample: int = DEFAULT_MAX_RESAMPLE,
              seed: int = 0) -> list[tuple[np.ndarray, np.ndarray]]:
    """Common eigenvectors of a commuting family.

    Diagonalizes a random rational combination of the inputs. Eigenvalues of
    the combination that agree within ``tol`` are grouped; a group is
    accepted only if every input acts as a scalar on it. Otherwise the
    combination is resampled, up to ``max_resample`` times.

    Returns ``n`` pairs ``(v, lam)`` where ``lam[i] = v* M_i v / v* v``.
    """
    mats = [np.asarray(M, dtype=complex) for M in mats]
    if not mats:
        raise ValueError("need at least one matrix")
    n = mats[0].shape[0]
    if any(M.shape != (n, n) for M in mats):
        raise ValueError("matrices must be square and of equal size")
    bad = check_commuting(mats, tol)
    if bad is not None:
        raise CommutativityError(f"input matrices {bad[0]} and {bad[1]} do not commute")

    rng = np.random.default_rng(seed)
    norms = [max(np.linalg.norm(M, 2), 1.0) for M in mats]
    last_reason = "no attempt made"
    for _ in range(max(1, max_resample)):
        # dyadic rationals are represented exactly in floating point
        t = rng.integers(1, 2 ** 20, size=len(mats)) / 2 ** 20
        C = sum(ti * M for ti, M in zip(t, mats))
        w, V = np.linalg.eig(C)
        scale = max(1.0, np.abs(w).max(initial=0.0))
        groups = _cluster(w, tol * scale)
        pairs, reason = _accept(groups, V, mats, norms, tol)
        if pairs is not None:
            return pairs
        last_reason = reason
    raise DegeneracyError(f"simultaneous diagonalization failed after {max_resample} "
                          f"combinations: {last_reason}")


def _cluster(w: np.ndarray, radius: float) -> list[list[int]]:
    order = np.lexsort((w.imag, w.real))
    groups: list[list[int]] = []
    for idx in order:
        for g in groups:
            if abs(w[g[0]] - w[idx]) <= radius:
                g.append(int(idx))
                break
        else:
            groups.append([int(idx)])
    return groups


def _accept(groups, V, mats, norms, tol):
    pairs = []
    for g in groups:
        block = V[:, g]
        block = block / np.linalg.norm(block, axis=0)
        sv = np.linalg.svd(block, compute_uv=False)
        if sv[-1] < np.sqrt(tol):
            return None, "combination is not diagonalizable (defective eigenspace)"
        if len(g) > 1:
            block, _ = np.linalg.qr(block)
        for k in range(block.shape[1]):
            v = block[:, k]
            vv = np.vdot(v, v).real
            lams = np.array([np.vdot(v, M @ v) / vv for M in mats])
            for M, lam, nrm in zip(mats, lams, norms):
                if np.linalg.norm(M @ v - lam * v) > tol * nrm * np.sqrt(vv):
                    return None, "eigenvalue collision in the random combination"
            pairs.append((v, lams))
    return pairs, None
