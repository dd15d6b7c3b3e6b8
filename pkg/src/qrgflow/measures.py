"""Correlation measures for two-qubit X states.

All entropies are in bits.  Closed forms follow the X-state block structure;
the optimal-discord routine falls back to the brute-force oracle when the
coherence condition guaranteeing optimality of a Pauli measurement fails.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from math import log2, sqrt

from .errors import DomainError, InvalidDistribution
from .oracle import brute_force_discord
from .xstate import XState, marginal_a, marginal_b, spectrum, to_bloch

# Condition number of the entropy differences stays ~1, so exact-zero
# measures can round to ~-1e-16; anything worse is a real sign error.
_NEG_CLIP = 1e-9


def _clip_tiny(value: float) -> float:
    if -_NEG_CLIP < value < 0.0:
        return 0.0
    return value


def shannon_entropy(p, tol: float = 1e-9) -> float:
    """Shannon entropy in bits of a probability vector."""
    p = [float(x) for x in p]
    if any(x < -tol or x > 1.0 + tol for x in p):
        raise InvalidDistribution(f"entry outside [0, 1]: {p}")
    if abs(sum(p) - 1.0) > tol:
        raise InvalidDistribution(f"probabilities sum to {sum(p)}, not 1")
    total = 0.0
    for x in p:
        if x > 0.0:
            total -= x * log2(min(x, 1.0))
    return total


def binary_mix_entropy(z: float, tol: float = 1e-12) -> float:
    """Entropy of the pair (1 +- sqrt(z))/2; decreasing from 1 at z=0 to 0 at z=1."""
    if z < -tol or z > 1.0 + tol:
        raise DomainError(f"binary_mix_entropy argument {z} outside [0, 1]")
    r = sqrt(min(max(z, 0.0), 1.0))
    total = 0.0
    for x in ((1.0 + r) / 2.0, (1.0 - r) / 2.0):
        if x > 0.0:
            total -= x * log2(x)
    return total


def _entropy_of(values) -> float:
    total = 0.0
    for x in values:
        if x > 0.0:
            total -= x * log2(min(float(x), 1.0))
    return total


def _state_entropy(s: XState) -> float:
    return _entropy_of(spectrum(s))


def concurrence(s: XState) -> float:
    """Entanglement of formation witness 2*max(0, |a|-sqrt(d2 d3), |b|-sqrt(d1 d4))."""
    return 2.0 * max(
        0.0,
        abs(s.a) - sqrt(max(s.d2 * s.d3, 0.0)),
        abs(s.b) - sqrt(max(s.d1 * s.d4, 0.0)),
    )


def mutual_information(s: XState) -> float:
    """S(A) + S(B) - S(AB) in bits."""
    ma, mb = marginal_a(s), marginal_b(s)
    return _clip_tiny(
        _entropy_of((ma.p0, ma.p1)) + _entropy_of((mb.p0, mb.p1)) - _state_entropy(s)
    )


def _sigma_z_conditional(s: XState, side: str) -> float:
    """sum_k p_k S(rho_k) for a sigma_z measurement on the given side."""
    if side == "a":
        branches = ((s.d1, s.d2), (s.d3, s.d4))
    else:
        branches = ((s.d1, s.d3), (s.d2, s.d4))
    total = 0.0
    for u, v in branches:
        p = u + v
        if p > 0.0:
            total += p * _entropy_of((u / p, v / p))
    return total


def discord_sigma_z(s: XState, side: str = "a") -> float:
    """Quantum discord for a sigma_z projective measurement."""
    marg = marginal_a(s) if side == "a" else marginal_b(s)
    value = _entropy_of((marg.p0, marg.p1)) - _state_entropy(s) + _sigma_z_conditional(s, side)
    return _clip_tiny(value)


def _sigma_xy_conditional(s: XState, axis: str, side: str) -> float:
    """Equatorial-measurement conditional entropy f(w^2 + t^2); outcomes equiprobable."""
    bloch = to_bloch(s)
    t = bloch.t1 if axis == "x" else bloch.t2
    w = bloch.y if side == "a" else bloch.x
    return binary_mix_entropy(min(w * w + t * t, 1.0))


def discord_sigma_xy(s: XState, axis: str, side: str = "a") -> float:
    """Quantum discord for a sigma_x or sigma_y projective measurement."""
    if axis not in ("x", "y"):
        raise DomainError(f"axis must be 'x' or 'y', got {axis!r}")
    marg = marginal_a(s) if side == "a" else marginal_b(s)
    value = (
        _entropy_of((marg.p0, marg.p1)) - _state_entropy(s) + _sigma_xy_conditional(s, axis, side)
    )
    return _clip_tiny(value)


@dataclass(frozen=True)
class DiscordBreakdown:
    """Ingredients of the discord minimization.

    s_a is the measured side's marginal entropy, s_ab the state entropy, and
    cond_x/y/z the average conditional entropies of the three Pauli
    measurements.  optimal_basis is 'x', 'y', 'z', or 'brute-force' when the
    coherence guard fails and the oracle minimum is returned instead.
    """

    s_a: float
    s_ab: float
    cond_x: float
    cond_y: float
    cond_z: float
    optimal_basis: str


def _pauli_guard(s: XState) -> bool:
    """Coherence condition under which some Pauli measurement is optimal."""
    gap = abs(sqrt(max(s.d1 * s.d4, 0.0)) - sqrt(max(s.d2 * s.d3, 0.0)))
    return gap <= abs(s.a) + abs(s.b)


def discord_optimal(s: XState, side: str = "a") -> tuple[float, DiscordBreakdown]:
    """Quantum discord minimized over measurement bases.

    Under the coherence guard the minimum over {sigma_x, sigma_y, sigma_z} is
    exact (the t1 >= t2 rule picks between the equatorial pair); otherwise the
    brute-force direction search provides the value.
    """
    marg = marginal_a(s) if side == "a" else marginal_b(s)
    s_marg = _entropy_of((marg.p0, marg.p1))
    s_ab = _state_entropy(s)
    cond = {
        "x": _sigma_xy_conditional(s, "x", side),
        "y": _sigma_xy_conditional(s, "y", side),
        "z": _sigma_z_conditional(s, side),
    }
    if _pauli_guard(s):
        basis = min(cond, key=cond.get)
        value = s_marg - s_ab + cond[basis]
    else:
        basis = "brute-force"
        value, _ = brute_force_discord(s, side=side)
    return _clip_tiny(value), DiscordBreakdown(
        s_a=s_marg,
        s_ab=s_ab,
        cond_x=cond["x"],
        cond_y=cond["y"],
        cond_z=cond["z"],
        optimal_basis=basis,
    )


def mid(s: XState) -> float:
    """Measurement-induced disturbance S(dephased) - S(state).

    The dephasing basis is the marginal eigenbasis, which for X states is the
    sigma_z product basis; when a marginal is maximally mixed the eigenbasis
    is not unique and the sigma_z convention is kept.
    """
    return _clip_tiny(_entropy_of(s.diagonal) - _state_entropy(s))


def geometric_discord(s: XState, side: str = "a") -> float:
    """Hilbert-Schmidt distance (x2) to the nearest classical-quantum state."""
    bloch = to_bloch(s)
    w = bloch.x if side == "a" else bloch.y
    t_sq = (bloch.t1 ** 2, bloch.t2 ** 2, bloch.t3 ** 2)
    total = t_sq[0] + t_sq[1] + t_sq[2] + w * w
    return 0.25 * (total - max(t_sq[0], t_sq[1], t_sq[2] + w * w))


def min_nonlocality(s: XState, side: str = "a") -> float:
    """Measurement-induced nonlocality; branch switches when the local Bloch vector vanishes."""
    bloch = to_bloch(s)
    w = bloch.x if side == "a" else bloch.y
    t_sq = (bloch.t1 ** 2, bloch.t2 ** 2, bloch.t3 ** 2)
    if abs(w) > 1e-9:
        return 0.25 * (t_sq[0] + t_sq[1])
    return 0.25 * (t_sq[0] + t_sq[1] + t_sq[2] - min(t_sq))


def chsh_max(s: XState) -> float:
    """Maximal CHSH expectation 2*sqrt of the two largest squared t entries."""
    bloch = to_bloch(s)
    t_sq = sorted((bloch.t1 ** 2, bloch.t2 ** 2, bloch.t3 ** 2))
    return 2.0 * sqrt(t_sq[1] + t_sq[2])


@dataclass(frozen=True)
class MeasureSet:
    """All correlation measures of one state, side-A conventions."""

    concurrence: float
    qd_optimal: float
    qd_sigma_x: float
    qd_sigma_y: float
    qd_sigma_z: float
    mid: float
    gd: float
    min_nl: float
    chsh_max: float


# CSV column name -> evaluator; also the canonical measure ordering.
MEASURE_FUNCS = {
    "concurrence": concurrence,
    "qd_optimal": lambda s: discord_optimal(s)[0],
    "qd_sigma_x": lambda s: discord_sigma_xy(s, "x"),
    "qd_sigma_y": lambda s: discord_sigma_xy(s, "y"),
    "qd_sigma_z": discord_sigma_z,
    "mid": mid,
    "gd": geometric_discord,
    "min": min_nonlocality,
    "chsh_max": chsh_max,
}

MEASURE_NAMES = tuple(MEASURE_FUNCS)


def measure_all(s: XState) -> MeasureSet:
    """Evaluate every measure on one state (measurements on side A)."""
    values = [MEASURE_FUNCS[name](s) for name in MEASURE_NAMES]
    return MeasureSet(*values)


def measure_set_values(ms: MeasureSet) -> tuple[float, ...]:
    return tuple(getattr(ms, f.name) for f in fields(MeasureSet))
