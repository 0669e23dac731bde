"""Bloch and real-space single-excitation Hamiltonians, winding numbers,
spectra, and chiral-symmetry diagnostics.

Basis ordering is (A_1, B_1, A_2, B_2, ...): site 2n is the A state of cell
n+1, site 2n+1 the B state.  The inter-cell block above the diagonal is
R = [[t_p, -t_c], [t_c, -t_p]]; Rt sits below.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla

from .errors import EigensolverFailure, GapClosed
from .model import LatticeParams

__all__ = [
    "BlochPoint",
    "PhasePoint",
    "RealSpaceHamiltonian",
    "SpectrumResult",
    "bloch_hamiltonian",
    "winding_number",
    "real_space_hamiltonian",
    "chiral_operator",
    "spectrum",
    "hamiltonian_bands",
    "midgap_states",
]

_SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]])


@dataclass(frozen=True)
class BlochPoint:
    """Bloch vector components at one crystal momentum."""

    k: float
    d_y: float
    d_z: float

    @property
    def h(self) -> np.ndarray:
        """2x2 Bloch Hamiltonian d_y sigma_y + d_z sigma_z."""
        return self.d_y * _SIGMA_Y + self.d_z * _SIGMA_Z

    @property
    def gap(self) -> float:
        return float(np.hypot(self.d_y, self.d_z))


@dataclass(frozen=True)
class PhasePoint:
    winding: int
    gap_at_k0: float


@dataclass(frozen=True)
class RealSpaceHamiltonian:
    matrix: np.ndarray
    n_cells: int


@dataclass(frozen=True)
class SpectrumResult:
    energies: np.ndarray          # ascending, length 2N
    states: np.ndarray            # columns match energies
    zero_mode_indices: tuple      # the two indices with minimal |E|
    edge_bulk_gap: float


def bloch_hamiltonian(params: LatticeParams, k: float) -> BlochPoint:
    """d_y(k) = 2 t_c sin k, d_z(k) = delta + 2 t_p cos k for k in [-pi, pi)."""
    if not (-np.pi <= k < np.pi):
        raise ValueError(f"k = {k} outside [-pi, pi)")
    return BlochPoint(
        k=float(k),
        d_y=2.0 * params.t_c * np.sin(k),
        d_z=params.delta + 2.0 * params.t_p * np.cos(k),
    )


def _bloch_arrays(params: LatticeParams, ks: np.ndarray):
    return 2.0 * params.t_c * np.sin(ks), params.delta + 2.0 * params.t_p * np.cos(ks)


def winding_number(params: LatticeParams, n_k: int = 256) -> PhasePoint:
    """Winding of (d_y, d_z) around the origin over one Brillouin-zone loop.

    Discrete angle accumulation: the signed angle increments are summed over
    the closed loop and divided by 2*pi.  The magnitude is reported, so the
    result does not depend on the traversal orientation.
    """
    if n_k < 64:
        raise ValueError("n_k must be >= 64")
    ks = -np.pi + 2.0 * np.pi * np.arange(n_k) / n_k
    d_y, d_z = _bloch_arrays(params, ks)
    gap = float(np.min(np.hypot(d_y, d_z)))
    if gap < 1e-12:
        raise GapClosed(f"Bloch gap {gap:.3e} below 1e-12; winding undefined at a transition")
    angles = np.arctan2(d_z, d_y)
    inc = np.diff(np.concatenate([angles, angles[:1]]))
    inc = (inc + np.pi) % (2.0 * np.pi) - np.pi
    nu = int(round(abs(float(np.sum(inc)) / (2.0 * np.pi))))
    return PhasePoint(winding=nu, gap_at_k0=gap)


def coupling_block(params: LatticeParams) -> np.ndarray:
    """Inter-cell block R placed above the diagonal."""
    return np.array([[params.t_p, -params.t_c], [params.t_c, -params.t_p]])


def real_space_hamiltonian(params: LatticeParams, periodic: bool = False) -> RealSpaceHamiltonian:
    """Open-chain 2N x 2N Hamiltonian; periodic=True adds the wraparound block
    (consistency testing only, not a production mode)."""
    n = params.n_cells
    dim = 2 * n
    h = np.zeros((dim, dim))
    cells = np.arange(n)
    h[2 * cells, 2 * cells] = params.delta
    h[2 * cells + 1, 2 * cells + 1] = -params.delta
    r = coupling_block(params)
    for i in range(n - 1):
        h[2 * i: 2 * i + 2, 2 * i + 2: 2 * i + 4] = r
        h[2 * i + 2: 2 * i + 4, 2 * i: 2 * i + 2] = r.T
    if periodic:
        h[dim - 2: dim, 0:2] += r
        h[0:2, dim - 2: dim] += r.T
    return RealSpaceHamiltonian(matrix=h, n_cells=n)


def chiral_operator(n_cells: int) -> np.ndarray:
    """Block-diagonal per-cell sigma_x; satisfies S H S = -H exactly."""
    s = np.zeros((2 * n_cells, 2 * n_cells))
    i = np.arange(n_cells)
    s[2 * i, 2 * i + 1] = 1.0
    s[2 * i + 1, 2 * i] = 1.0
    return s


def spectrum(ham: RealSpaceHamiltonian) -> SpectrumResult:
    """Full dense eigendecomposition with mid-gap identification."""
    try:
        energies, states = np.linalg.eigh(ham.matrix)
    except np.linalg.LinAlgError as exc:
        raise EigensolverFailure(str(exc)) from exc
    by_abs = np.argsort(np.abs(energies), kind="stable")
    zm = _pick_zero_modes(energies, states, by_abs, ham.n_cells)
    bulk = [i for i in range(len(energies)) if i not in zm]
    e_zm = energies[list(zm)]
    gap = float(min(abs(energies[b] - e) for b in bulk for e in e_zm))
    return SpectrumResult(
        energies=energies,
        states=states,
        zero_mode_indices=zm,
        edge_bulk_gap=gap,
    )


def _pick_zero_modes(energies, states, by_abs, n_cells):
    """Two minimal-|E| indices; |E| ties broken by weight on cells 1 and N."""
    cut = np.abs(energies[by_abs[1]]) + 1e-12
    cand = [int(i) for i in by_abs if np.abs(energies[i]) <= cut]
    if len(cand) > 2:
        edge_sites = [0, 1, 2 * n_cells - 2, 2 * n_cells - 1]
        cand.sort(key=lambda i: (np.abs(energies[i]), -float(np.sum(states[edge_sites, i] ** 2))))
    return tuple(sorted(cand[:2]))


def hamiltonian_bands(params: LatticeParams, diagonal_shift=None) -> np.ndarray:
    """Upper-banded storage (bandwidth 3) of the open-chain Hamiltonian,
    in the layout eig_banded expects: ab[u + i - j, j] = H[i, j], u = 3.

    diagonal_shift, when given, is a length-2N array added to the diagonal
    (on-site disorder).
    """
    n = params.n_cells
    dim = 2 * n
    ab = np.zeros((4, dim))
    i = np.arange(n)
    ab[3, 2 * i] = params.delta
    ab[3, 2 * i + 1] = -params.delta
    if diagonal_shift is not None:
        shift = np.asarray(diagonal_shift, dtype=float)
        if shift.shape != (dim,):
            raise ValueError(f"diagonal_shift must have shape ({dim},)")
        ab[3, :] += shift
    if n > 1:
        j = np.arange(n - 1)
        ab[2, 2 * j + 2] = params.t_c        # (B_n, A_{n+1})
        ab[1, 2 * j + 2] = params.t_p        # (A_n, A_{n+1})
        ab[1, 2 * j + 3] = -params.t_p       # (B_n, B_{n+1})
        ab[0, 2 * j + 3] = -params.t_c       # (A_n, B_{n+1})
    return ab


def midgap_states(params: LatticeParams, diagonal_shift=None):
    """Middle four eigenpairs of the (optionally disordered) open chain,
    sorted by |E|, via the banded selected-eigenpair solver.

    Returns (energies, vectors) with vectors in columns.  O(N) per call,
    which keeps large-N sweeps off the dense eigensolver.
    """
    n = params.n_cells
    ab = hamiltonian_bands(params, diagonal_shift)
    lo = max(0, n - 2)
    hi = min(2 * n - 1, n + 1)
    try:
        w, v = sla.eig_banded(
            ab, lower=False, select="i", select_range=(lo, hi), check_finite=False
        )
    except (sla.LinAlgError, ValueError) as exc:
        raise EigensolverFailure(str(exc)) from exc
    order = np.argsort(np.abs(w), kind="stable")
    return w[order], v[:, order]
