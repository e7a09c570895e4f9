"""Sharp operator-norm constants and their numerical verification.

The exact constants, with Delta = 1/pbar_2 - 1/pbar_1 and the angular mass
omega_small = Q * omega_big:

    hardy            p/(p-1) * omega_small^Delta
    dual_hardy       p       * omega_small^Delta
    weighted_hardy   omega_small^Delta * int_0^1 t^{-Q/p} w(t) dt
    weighted_cesaro  omega_small^Delta * int_0^1 t^{-Q(1-1/p)} w(t) dt

Verification runs two independent probes against each constant.  From
below, the power-tail family

    f_eps(r) = r^{-(Q/p + eps)} for r > 1, zero otherwise

has operator-norm ratio approaching the constant as eps -> 0; ratios are
computed end to end by certified quadrature and packaged with the constant
into RatioReports.  From above, randomized admissible profiles (mixtures
of truncated powers and exponential bumps, metadata-admissible by
construction) must never beat the constant beyond tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .geometry import HeisSpace
from .mixed_norm import MixedExponents, radial_norm_with_error
from .operators import OperatorKind, apply_operator
from .quadrature import (
    DivergentIntegralError,
    QuadratureSpec,
    RadialProfile,
    exp_profile,
    mixture_profile,
    power_profile,
)

__all__ = [
    "UnboundedOperatorError",
    "SharpnessViolationError",
    "SharpConstantQuery",
    "ExtremalFamily",
    "RatioReport",
    "theoretical_constant",
    "extremal_profile",
    "extremal_ratio",
    "convergence_table",
    "upper_bound_probe",
    "DEFAULT_EPS_GRID",
]

DEFAULT_EPS_GRID = (0.1, 0.03, 0.01, 0.003, 0.001)


class UnboundedOperatorError(ArithmeticError):
    """The defining weight moment diverges: no finite operator norm."""


class SharpnessViolationError(AssertionError):
    """A probed ratio exceeded the theoretical constant beyond tolerance."""


@dataclass(frozen=True)
class SharpConstantQuery:
    kind: OperatorKind
    exps: MixedExponents
    space: HeisSpace


@dataclass(frozen=True)
class ExtremalFamily:
    """One member of the power-tail family driving the lower bounds."""

    epsilon: float
    profile: RadialProfile

    def __post_init__(self) -> None:
        if not (0.0 < self.epsilon < 1.0):
            raise ValueError(f"epsilon must lie in (0, 1), got {self.epsilon}")


@dataclass(frozen=True)
class RatioReport:
    """A computed norm ratio against the theoretical constant.

    relative_gap = 1 - ratio / constant; error_estimate is a relative
    bound on the computed ratio, combining the quadrature certificates of
    numerator and denominator with the nested-evaluation tolerance.
    """

    epsilon: float
    ratio: float
    constant: float
    relative_gap: float
    error_estimate: float
    seeds_and_tolerances: dict = field(default_factory=dict)


def _weight_moment_exponent(kind: OperatorKind, p: float, q: float) -> float:
    if kind.tag == "weighted_hardy":
        return -q / p
    return -q * (1.0 - 1.0 / p)


def theoretical_constant(q: SharpConstantQuery, spec: QuadratureSpec | None = None) -> float:
    """Closed-form sharp constant for the query; exact moments for power weights.

    Raises UnboundedOperatorError when the defining weight moment diverges
    (the operator has no finite norm for that weight).
    """
    exps, space = q.exps, q.space
    omega_delta = space.omega_small ** exps.delta
    if q.kind.tag == "hardy":
        return exps.p / (exps.p - 1.0) * omega_delta
    if q.kind.tag == "dual_hardy":
        return exps.p * omega_delta
    try:
        moment = q.kind.weight.moment(_weight_moment_exponent(q.kind, exps.p, space.q), spec)
    except DivergentIntegralError as exc:
        raise UnboundedOperatorError(
            f"unbounded operator for this weight: {exc}"
        ) from exc
    return omega_delta * moment


def extremal_profile(eps: float, p: float, space: HeisSpace) -> ExtremalFamily:
    """f_eps = r^{-(Q/p + eps)} beyond radius 1, zero inside."""
    prof = power_profile(-(space.q / p + eps), support=(1.0, math.inf))
    return ExtremalFamily(epsilon=eps, profile=prof)


def extremal_ratio(
    q: SharpConstantQuery, eps: float, spec: QuadratureSpec | None = None
) -> RatioReport:
    """Norm ratio ||T f_eps||_{p, pbar2} / ||f_eps||_{p, pbar1} by quadrature."""
    spec = spec or QuadratureSpec()
    constant = theoretical_constant(q, spec)
    fam = extremal_profile(eps, q.exps.p, q.space)
    out = apply_operator(q.kind, fam.profile, q.space, spec)
    num = radial_norm_with_error(out, q.exps.p, q.exps.p_bar_2, q.space, spec)
    den = radial_norm_with_error(fam.profile, q.exps.p, q.exps.p_bar_1, q.space, spec)
    ratio = num.value / den.value
    rel_err = num.error / num.value + den.error / den.value
    return RatioReport(
        epsilon=eps,
        ratio=ratio,
        constant=constant,
        relative_gap=1.0 - ratio / constant,
        error_estimate=rel_err,
        seeds_and_tolerances={
            "rel_tol": spec.rel_tol,
            "abs_tol": spec.abs_tol,
            "inner_rel_tol": spec.inner().rel_tol,
        },
    )


def convergence_table(
    q: SharpConstantQuery,
    eps_list: Sequence[float] = DEFAULT_EPS_GRID,
    spec: QuadratureSpec | None = None,
) -> list[RatioReport]:
    """One RatioReport per epsilon, for a strictly decreasing grid in (0, 1)."""
    eps_list = list(eps_list)
    if not eps_list:
        raise ValueError("epsilon grid is empty")
    if any(not (0.0 < e < 1.0) for e in eps_list):
        raise ValueError("epsilon grid must lie inside (0, 1)")
    if any(b >= a for a, b in zip(eps_list[:-1], eps_list[1:])):
        raise ValueError("epsilon grid must be strictly decreasing")
    return [extremal_ratio(q, eps, spec) for eps in eps_list]


def _random_admissible_profile(rng: np.random.Generator, q: SharpConstantQuery) -> RadialProfile:
    """A random mixture with finite mixed norm and finite operator output.

    Tail exponents are drawn below -Q/p and origin exponents above -Q/p, so
    the norm integrals converge by construction; weighted kinds narrow the
    origin draw further so the weight moments stay finite.
    """
    p, Q = q.exps.p, float(q.space.q)
    origin_floor = -Q / p + 0.1
    if q.kind.tag == "weighted_hardy":
        origin_floor = max(origin_floor, -q.kind.weight.zero_exponent - 0.9)
    tail_ceiling = -Q / p - 0.1
    if q.kind.tag == "weighted_cesaro":
        tail_ceiling = min(tail_ceiling, q.kind.weight.zero_exponent + 1.0 - Q - 0.1)

    parts: list[RadialProfile] = []
    cut = float(rng.uniform(0.3, 3.0))
    # head piece on (0, cut]
    a0 = float(rng.uniform(origin_floor, 2.0))
    parts.append(power_profile(a0, coeff=float(rng.uniform(0.2, 1.0)), support=(0.0, cut)))
    # tail piece on (cut, inf)
    at = float(rng.uniform(-Q / p - 2.0, tail_ceiling))
    parts.append(power_profile(at, coeff=float(rng.uniform(0.2, 1.0)), support=(cut, math.inf)))
    if rng.uniform() < 0.5:
        parts.append(exp_profile(float(rng.uniform(0.5, 3.0)),
                                 exponent=float(rng.uniform(0.0, 1.5)),
                                 coeff=float(rng.uniform(0.2, 1.0))))
    return mixture_profile(parts)


def upper_bound_probe(
    q: SharpConstantQuery,
    trials: int,
    seed: int,
    spec: QuadratureSpec | None = None,
) -> RatioReport:
    """Max norm ratio over random admissible profiles; must stay below the constant.

    Returns the worst-case RatioReport (epsilon is NaN for probes).  Raises
    SharpnessViolationError if any ratio beats constant * (1 + 1e-6) plus
    the computed quadrature allowance, which the boundedness theorems rule
    out.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    spec = spec or QuadratureSpec()
    constant = theoretical_constant(q, spec)
    worst: RatioReport | None = None
    for trial in range(trials):
        key = np.array([seed & 0xFFFFFFFFFFFFFFFF, 0x9E3779B9 + trial], dtype=np.uint64)
        rng = np.random.Generator(np.random.Philox(key=key))
        f = _random_admissible_profile(rng, q)
        out = apply_operator(q.kind, f, q.space, spec)
        num = radial_norm_with_error(out, q.exps.p, q.exps.p_bar_2, q.space, spec)
        den = radial_norm_with_error(f, q.exps.p, q.exps.p_bar_1, q.space, spec)
        ratio = num.value / den.value
        rel_err = num.error / num.value + den.error / den.value
        report = RatioReport(
            epsilon=math.nan,
            ratio=ratio,
            constant=constant,
            relative_gap=1.0 - ratio / constant,
            error_estimate=rel_err,
            seeds_and_tolerances={
                "seed": seed, "trial": trial,
                "rel_tol": spec.rel_tol, "abs_tol": spec.abs_tol,
            },
        )
        if ratio > constant * (1.0 + 1e-6 + rel_err):
            raise SharpnessViolationError(
                f"probe trial {trial} (seed {seed}) gave ratio {ratio!r} above "
                f"constant {constant!r} beyond tolerance"
            )
        if worst is None or report.ratio > worst.ratio:
            worst = report
    return worst
