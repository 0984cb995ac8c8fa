"""
Two-source combination rules: Dempster, Smets, Yager, Dubois & Prade (and
its static alias dsmh), Inagaki's weighted family with its extremal member,
the adaptive conjunctive/disjunctive mixture (generic and symmetric), and
proportional conflict redistribution.

Every rule consumes two validated closed-world mass functions on a shared
frame and is a pure function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from .core import (
    ConflictDecomposition,
    FocalSet,
    FrameMismatchError,
    MassFunction,
    conflict,
    conjunctive,
    disjunctive,
)

__all__ = [
    "TotalConflictError",
    "DegenerateError",
    "InvalidBetaError",
    "AcrCoefficients",
    "alpha0",
    "beta0",
    "sacr_coefficients",
    "dempster",
    "smets",
    "yager",
    "dubois_prade",
    "dsmh",
    "inagaki_generic",
    "inagaki_extreme",
    "acr_generic",
    "acr_inagaki_weights",
    "sacr",
    "pcr",
    "pcr_shares",
    "ConflictShare",
    "RULES",
]

TOTAL_CONFLICT_TOL = 1e-12
WEIGHT_SUM_TOL = 1e-9


class TotalConflictError(ArithmeticError):
    """Dempster's rule was applied at k12 = 1, where it cannot be used."""


class DegenerateError(ArithmeticError):
    """The rule's redistribution target is empty or its formula is undefined."""


class InvalidBetaError(ValueError):
    """A supplied mixture weighting violates its endpoint contract."""


def dempster(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Normalized conjunctive rule: divide every non-empty conjunctive mass
    by 1 - k12. Raises TotalConflictError at k12 = 1."""
    conj = conjunctive(m1, m2)
    k12 = conj.mass(m1.frame.empty_set())
    if 1.0 - k12 <= TOTAL_CONFLICT_TOL:
        raise TotalConflictError(
            "total conflict between sources (k12=1); Dempster's rule cannot be used"
        )
    scale = 1.0 / (1.0 - k12)
    out = {fs: v * scale for fs, v in conj.entries.items() if not fs.is_empty}
    return MassFunction(m1.frame, out)


def smets(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Unnormalized conjunctive rule: the conflict stays on ∅ (open world)."""
    return conjunctive(m1, m2)


def yager(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Conjunctive rule with the conflict transferred to total ignorance."""
    conj = conjunctive(m1, m2)
    empty = m1.frame.empty_set()
    full = m1.frame.full_set()
    out = {fs: v for fs, v in conj.entries.items() if not fs.is_empty}
    k12 = conj.mass(empty)
    if k12:
        out[full] = out.get(full, 0.0) + k12
    return MassFunction(m1.frame, out)


def dubois_prade(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Conjunctive masses plus each disjoint pair's product moved to X∪Y."""
    conj = conjunctive(m1, m2)
    out = {fs: v for fs, v in conj.entries.items() if not fs.is_empty}
    for x, a in m1.entries.items():
        for y, b in m2.entries.items():
            if (x & y).is_empty:
                u = x | y
                out[u] = out.get(u, 0.0) + a * b
    return MassFunction(m1.frame, out)


def dsmh(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Static two-source fusion on an exclusive frame coincides with
    Dubois & Prade's rule; exposed under its own name for completeness."""
    return dubois_prade(m1, m2)


def _check_weights(frame, weights: Mapping[FocalSet, float]) -> None:
    total = 0.0
    for fs, w in weights.items():
        if fs.width != frame.size:
            raise FrameMismatchError("weight set width does not match frame")
        if fs.is_empty:
            raise ValueError("weights must be assigned to non-empty sets only")
        if w < 0.0:
            raise ValueError(f"negative weight {w!r} on {fs.label(frame)}")
        total += w
    if abs(total - 1.0) > WEIGHT_SUM_TOL:
        raise ValueError(f"weights sum to {total!r}, not 1")


def inagaki_generic(
    m1: MassFunction, m2: MassFunction, weights: Mapping[FocalSet, float]
) -> MassFunction:
    """Inagaki's weighted redistribution: each non-empty A receives
    m∧(A) + w(A)·k12 for a caller-chosen unit-sum weight assignment."""
    conj = conjunctive(m1, m2)
    _check_weights(m1.frame, weights)
    k12 = conj.mass(m1.frame.empty_set())
    out = {fs: v for fs, v in conj.entries.items() if not fs.is_empty}
    for fs, w in weights.items():
        share = w * k12
        if share:
            out[fs] = out.get(fs, 0.0) + share
    return MassFunction(m1.frame, out)


def inagaki_extreme(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """The extremal member of Inagaki's family: the conflict is distributed
    so that ratios between the masses of any two sets other than the frame
    are preserved. Θ keeps its conjunctive mass."""
    conj = conjunctive(m1, m2)
    empty = m1.frame.empty_set()
    full = m1.frame.full_set()
    k12 = conj.mass(empty)
    receivers = {
        fs: v for fs, v in conj.entries.items() if not fs.is_empty and fs != full
    }
    if k12 == 0.0:
        return MassFunction(
            m1.frame, {fs: v for fs, v in conj.entries.items() if not fs.is_empty}
        )
    s = sum(receivers.values())
    if s == 0.0:
        raise DegenerateError("no focal element other than Θ can receive the conflict")
    factor = 1.0 + k12 / s
    out = {fs: v * factor for fs, v in receivers.items()}
    theta_mass = conj.mass(full)
    if theta_mass:
        out[full] = theta_mass
    return MassFunction(m1.frame, out)


@dataclass(frozen=True)
class AcrCoefficients:
    """Mixture weights of the adaptive rule, evaluated at one conflict level."""

    alpha: float
    beta: float
    conflict: float


def alpha0(k: float) -> float:
    """Disjunctive weight of the symmetric adaptive rule: k / (1 - k + k²)."""
    return k / (1.0 - k + k * k)


def beta0(k: float) -> float:
    """Conjunctive weight of the symmetric adaptive rule: (1 - k) / (1 - k + k²)."""
    return (1.0 - k) / (1.0 - k + k * k)


def sacr_coefficients(k: float) -> AcrCoefficients:
    return AcrCoefficients(alpha0(k), beta0(k), k)


def _acr_combine(
    m1: MassFunction, m2: MassFunction, alpha: float, beta: float
) -> MassFunction:
    conj = conjunctive(m1, m2)
    disj = disjunctive(m1, m2)
    out: dict[FocalSet, float] = {}
    for fs, v in conj.entries.items():
        if not fs.is_empty:
            out[fs] = beta * v
    for fs, v in disj.entries.items():
        out[fs] = out.get(fs, 0.0) + alpha * v
    return MassFunction(m1.frame, out)


def acr_generic(
    m1: MassFunction, m2: MassFunction, beta: Callable[[float], float]
) -> MassFunction:
    """Adaptive mixture α·m∨ + β·m∧ for a caller-supplied decreasing weight
    β with β(0)=1 and β(1)=0; α follows from the normalization constraint
    α(k) = 1 - (1-k)·β(k)."""
    if abs(beta(0.0) - 1.0) > TOTAL_CONFLICT_TOL or abs(beta(1.0)) > TOTAL_CONFLICT_TOL:
        raise InvalidBetaError("beta must satisfy beta(0)=1 and beta(1)=0")
    k12 = conflict(m1, m2).total
    b = beta(k12)
    if not 0.0 <= b <= 1.0:
        raise InvalidBetaError(f"beta({k12!r}) = {b!r} is outside [0, 1]")
    a = 1.0 - (1.0 - k12) * b
    return _acr_combine(m1, m2, a, b)


def sacr(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Symmetric adaptive rule: the mixture with the closed-form weights
    α0, β0, which is conjunctive at zero conflict and disjunctive at total
    conflict."""
    k12 = conflict(m1, m2).total
    return _acr_combine(m1, m2, alpha0(k12), beta0(k12))


def acr_inagaki_weights(
    m1: MassFunction, m2: MassFunction, beta: Callable[[float], float]
) -> dict[FocalSet, float]:
    """The (possibly negative) Inagaki weights that reproduce the adaptive
    mixture: w(A) = (1-β)/k12 · [m∨(A) - m∧(A)] + β·m∨(A).

    Diagnostic only; undefined at k12 = 0, where the mixture is plainly
    conjunctive.
    """
    k12 = conflict(m1, m2).total
    if k12 == 0.0:
        raise DegenerateError("weights are undefined at zero conflict")
    b = beta(k12)
    conj = conjunctive(m1, m2)
    disj = disjunctive(m1, m2)
    weights: dict[FocalSet, float] = {}
    for fs in set(conj.entries) | set(disj.entries):
        if fs.is_empty:
            continue
        weights[fs] = (1.0 - b) / k12 * (disj.mass(fs) - conj.mass(fs)) + b * disj.mass(fs)
    return weights


@dataclass(frozen=True)
class ConflictShare:
    """One directional redistribution term of the proportional rule.

    The partial conflicting product m_i(x)·m_j(y) of a disjoint pair is
    returned to x and y in the ratio m_i(x) : m_j(y).
    """

    x: FocalSet
    y: FocalSet
    product: float
    to_x: float
    to_y: float


def pcr_shares(m1: MassFunction, m2: MassFunction) -> list[ConflictShare]:
    """All directional redistribution terms, one per ordered disjoint focal
    pair (x from the first source, y from the second)."""
    shares: list[ConflictShare] = []
    for x in sorted(m1.entries, key=lambda fs: fs.bits):
        a = m1.entries[x]
        for y in sorted(m2.entries, key=lambda fs: fs.bits):
            if not (x & y).is_empty:
                continue
            b = m2.entries[y]
            denom = a + b
            if denom == 0.0:
                continue
            product = a * b
            shares.append(ConflictShare(x, y, product, a * a * b / denom, b * b * a / denom))
    return shares


def pcr(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Proportional conflict redistribution: conjunctive masses plus every
    partial conflicting product returned to the two sets that generated it,
    proportionally to their individual masses."""
    conj = conjunctive(m1, m2)
    out = {fs: v for fs, v in conj.entries.items() if not fs.is_empty}
    for share in pcr_shares(m1, m2):
        if share.to_x:
            out[share.x] = out.get(share.x, 0.0) + share.to_x
        if share.to_y:
            out[share.y] = out.get(share.y, 0.0) + share.to_y
    return MassFunction(m1.frame, out)


# Stable lowercase identifiers for the CLI and file outputs.
RULES: dict[str, Callable[[MassFunction, MassFunction], MassFunction]] = {
    "dempster": dempster,
    "smets": smets,
    "yager": yager,
    "dubois-prade": dubois_prade,
    "dsmh": dsmh,
    "inagaki": inagaki_extreme,
    "sacr": sacr,
    "pcr": pcr,
}
