"""Three-site blocks, ground states, reduced states, and coupling maps.

Both chains are renormalized by three-site blocks with two bonds (1-2, 2-3)
and a J/4 interaction prefactor.  Basis convention throughout: |s1 s2 s3>
with site 1 the most significant bit and spin-up = 0, so the one-down XXZ
amplitudes sit at indices 1, 2, 4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NotDensityMatrix
from .xstate import XState

XXZ_FIXED_POINTS = (0.0, 1.0)
XY_FIXED_POINTS = (-1.0, 0.0, 1.0)

_SX = np.array([[0.0, 1.0], [1.0, 0.0]])
_SZ = np.array([[1.0, 0.0], [0.0, -1.0]])
_XX = np.kron(_SX, _SX)
_YY = np.kron(np.array([[0.0, -1.0j], [1.0j, 0.0]]), np.array([[0.0, -1.0j], [1.0j, 0.0]])).real
_ZZ = np.kron(_SZ, _SZ)
_ID2 = np.eye(2)


@dataclass(frozen=True)
class XXZParams:
    """Anisotropic Heisenberg couplings: exchange j, anisotropy delta >= 0.

    j = 0.0 is admitted because the renormalized amplitude underflows to zero
    on the Neel side once delta overflows; negative or non-finite j is not.
    """

    j: float
    delta: float

    def __post_init__(self):
        if not np.isfinite(self.j) or self.j < 0.0:
            raise DomainError(f"exchange coupling must be finite and >= 0, got {self.j}")
        if np.isnan(self.delta) or self.delta < 0.0:
            raise DomainError(f"anisotropy must be >= 0, got {self.delta}")


@dataclass(frozen=True)
class XYParams:
    """XY couplings: exchange j, anisotropy |gamma| <= 1."""

    j: float
    gamma: float

    def __post_init__(self):
        if not np.isfinite(self.j) or self.j < 0.0:
            raise DomainError(f"exchange coupling must be finite and >= 0, got {self.j}")
        if not abs(self.gamma) <= 1.0:
            raise DomainError(f"anisotropy must satisfy |gamma| <= 1, got {self.gamma}")


@dataclass(frozen=True, eq=False)
class BlockState8:
    """Real unit-norm amplitude vector of a three-site block state."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=float)
        if amp.shape != (8,):
            raise DomainError(f"expected 8 amplitudes, got shape {amp.shape}")
        if abs(np.dot(amp, amp) - 1.0) > 1e-10:
            raise DomainError("block state is not normalized")
        object.__setattr__(self, "amplitudes", amp)


def q_of_delta(delta: float) -> float:
    """Ground-sector root q = -(delta + sqrt(delta^2 + 8))/2; q(1) = -2."""
    if math.isnan(delta) or delta < 0.0:
        raise DomainError(f"delta must be >= 0, got {delta}")
    # plain-float arithmetic so delta -> inf propagates without numpy warnings
    return -0.5 * (delta + math.sqrt(delta * delta + 8.0))


def xxz_rg_step(params: XXZParams) -> XXZParams:
    """One coupling-map step J' = J (2q/(2+q^2))^2, delta' = delta q^2/4."""
    q = q_of_delta(params.delta)
    q2 = q * q
    # 4 q^2/(2+q^2)^2 rewritten to survive q2 = inf
    j_factor = 4.0 / (q2 + 4.0 + 4.0 / q2)
    return XXZParams(params.j * j_factor, params.delta * q2 / 4.0)


def xxz_ground_states(delta: float) -> tuple[BlockState8, BlockState8]:
    """Degenerate ground doublet of the open three-site XXZ block.

    First ket lives in the one-down sector (indices 1, 2, 4 with amplitudes
    1, q, 1), the second in its spin-flipped mirror (indices 3, 5, 6).
    """
    q = q_of_delta(delta)
    norm = np.sqrt(2.0 + q * q)
    first = np.zeros(8)
    first[[1, 2, 4]] = np.array([1.0, q, 1.0]) / norm
    second = np.zeros(8)
    second[[3, 5, 6]] = np.array([1.0, q, 1.0]) / norm
    return BlockState8(first), BlockState8(second)


def xxz_rho13(delta: float) -> XState:
    """Sites-(1,3) reduced state of the first XXZ ground ket.

    Equals diag(q^2, 1, 1, 0)/(2+q^2) with inner coherence b = 1/(2+q^2).
    Written via 1/(1 + 2/q^2) so the delta -> inf asymptote stays finite.
    """
    q = q_of_delta(delta)
    q2 = q * q
    d1 = 1.0 / (1.0 + 2.0 / q2)
    w = 1.0 / (2.0 + q2)
    return XState(d1, w, w, 0.0, 0.0, w)


def xy_rg_step(params: XYParams) -> XYParams:
    """One coupling-map step J' = J (3g^2+1)/(2(1+g^2)), g' = (g^3+3g)/(3g^2+1)."""
    g = params.gamma
    g2 = g * g
    j_next = params.j * (3.0 * g2 + 1.0) / (2.0 * (1.0 + g2))
    g_next = (g * g2 + 3.0 * g) / (3.0 * g2 + 1.0)
    # the exact map never leaves [-1, 1]; clamp rounding overshoot near +-1
    return XYParams(j_next, max(-1.0, min(1.0, g_next)))


def xy_ground_states(gamma: float) -> tuple[BlockState8, BlockState8]:
    """Degenerate ground doublet of the open three-site XY block.

    First ket spans indices 1, 2, 4, 7 (odd down-spin parity); the second is
    its exact spin-flip partner on indices 0, 3, 5, 6.
    """
    if not abs(gamma) <= 1.0:
        raise DomainError(f"|gamma| must be <= 1, got {gamma}")
    root = np.sqrt(1.0 + gamma * gamma)
    norm = 2.0 * root
    first = np.zeros(8)
    first[[1, 2, 4, 7]] = np.array([-root, np.sqrt(2.0), -root, np.sqrt(2.0) * gamma]) / norm
    second = np.zeros(8)
    second[[0, 3, 5, 6]] = np.array([-np.sqrt(2.0) * gamma, root, -np.sqrt(2.0), root]) / norm
    return BlockState8(first), BlockState8(second)


def xy_rho13(gamma: float) -> XState:
    """Sites-(1,3) reduced state of the first XY ground ket."""
    if not abs(gamma) <= 1.0:
        raise DomainError(f"|gamma| must be <= 1, got {gamma}")
    g2 = gamma * gamma
    denom = 4.0 * (1.0 + g2)
    return XState(
        2.0 / denom,
        (1.0 + g2) / denom,
        (1.0 + g2) / denom,
        2.0 * g2 / denom,
        2.0 * gamma / denom,
        0.25,
    )


def g_of_gamma(gamma: float) -> float:
    """Plotting variable g = (1+gamma)/(1-gamma); pole at gamma = 1."""
    if gamma == 1.0:
        raise DomainError("g diverges at gamma = 1")
    return (1.0 + gamma) / (1.0 - gamma)


def gamma_of_g(g: float) -> float:
    """Inverse map gamma = (g-1)/(g+1); pole at g = -1."""
    if g == -1.0:
        raise DomainError("gamma diverges at g = -1")
    return (g - 1.0) / (g + 1.0)


def _xxz_delta_map(delta: float) -> float:
    q = q_of_delta(delta)
    return delta * q * q / 4.0


def _xy_gamma_map(gamma: float) -> float:
    return (gamma ** 3 + 3.0 * gamma) / (3.0 * gamma * gamma + 1.0)


def fixed_points(model: str) -> list[tuple[float, str]]:
    """Coupling-map fixed points with stability from |map'| vs 1.

    The derivative is taken by a small finite difference, one-sided at domain
    boundaries (delta = 0, gamma = +-1).
    """
    if model == "xxz":
        points, mapping, lo, hi = XXZ_FIXED_POINTS, _xxz_delta_map, 0.0, np.inf
    elif model == "xy":
        points, mapping, lo, hi = XY_FIXED_POINTS, _xy_gamma_map, -1.0, 1.0
    else:
        raise DomainError(f"unknown model {model!r}")
    h = 1e-7
    out = []
    for p in points:
        a, b = max(p - h, lo), min(p + h, hi)
        slope = (mapping(b) - mapping(a)) / (b - a)
        out.append((p, "stable" if abs(slope) < 1.0 else "unstable"))
    return out


def block_hamiltonian(params) -> np.ndarray:
    """Dense 8x8 real symmetric Hamiltonian of the open three-site block."""
    if isinstance(params, XXZParams):
        bond = params.j / 4.0 * (_XX + _YY + params.delta * _ZZ)
    elif isinstance(params, XYParams):
        bond = params.j / 4.0 * ((1.0 + params.gamma) * _XX + (1.0 - params.gamma) * _YY)
    else:
        raise DomainError(f"unsupported parameter type {type(params).__name__}")
    return np.kron(bond, _ID2) + np.kron(_ID2, bond)


def ground_energy(params) -> float:
    """Closed-form ground energy of the three-site block."""
    if isinstance(params, XXZParams):
        return params.j * q_of_delta(params.delta) / 2.0
    if isinstance(params, XYParams):
        return -params.j * np.sqrt(2.0 * (1.0 + params.gamma ** 2)) / 2.0
    raise DomainError(f"unsupported parameter type {type(params).__name__}")


def ground_states(params) -> tuple[BlockState8, BlockState8]:
    """Closed-form degenerate ground doublet for either model."""
    if isinstance(params, XXZParams):
        return xxz_ground_states(params.delta)
    if isinstance(params, XYParams):
        return xy_ground_states(params.gamma)
    raise DomainError(f"unsupported parameter type {type(params).__name__}")


def reduced_state(params) -> XState:
    """Edge-pair state of the first ground ket after tracing the middle site."""
    if isinstance(params, XXZParams):
        return xxz_rho13(params.delta)
    if isinstance(params, XYParams):
        return xy_rho13(params.gamma)
    raise DomainError(f"unsupported parameter type {type(params).__name__}")
