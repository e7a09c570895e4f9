"""The four Hardy-type operators on radial profiles.

Every operator acts through its exact one-dimensional reduction, valid for
radial functions on H^n (Q = 2n + 2):

    hardy          H f(r)   = (Q / r^Q) int_0^r f(s) s^{Q-1} ds
    dual_hardy     H* f(r)  = Q int_r^inf f(s) / s ds
    weighted_hardy Hw f(r)  = int_0^1 f(t r) w(t) dt
    weighted_cesaro H*w f(r) = int_0^1 f(r / t) t^{-Q} w(t) dt

Outputs are lazily evaluated profiles: each evaluation runs one certified
quadrature in the substitution variable sigma = s / r (log domain), so the
power scaling demanded by downstream norm integrals never overflows.
Output decay metadata is propagated symbolically from the input metadata,
which keeps improper-integral certification sound end to end.  Divergence
is always detected from metadata up front and raised as a typed error.

Non-radial inputs reach these operators only after the radialization step
of the mixed-norm module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .geometry import HeisPoint, HeisSpace, koranyi_norm
from .quadrature import (
    DivergentIntegralError,
    QuadratureSpec,
    RadialProfile,
    certified_log_integral,
    integrate_power_weighted,
    product_profile,
    zero_profile,
)

__all__ = [
    "WeightFunction",
    "power_weight",
    "weight_from_callable",
    "OperatorKind",
    "HARDY",
    "DUAL_HARDY",
    "hardy",
    "dual_hardy",
    "weighted_hardy",
    "weighted_cesaro",
    "apply_operator",
    "apply_pointwise",
    "duality_pairing_check",
]

# log-slope sentinel matching an exponentially decaying tail
_EXP_TAIL = -1e9


def _effective_tail(f: RadialProfile) -> float:
    """Tail exponent with bounded supports treated as infinitely fast decay."""
    if math.isfinite(f.support[1]):
        return _EXP_TAIL
    return f.tail_exponent


@dataclass(frozen=True)
class WeightFunction:
    """Nonnegative weight on [0, 1] with its vanishing order at t = 0.

    Power-law weights w(t) = c t^beta carry exact closed-form moments;
    anything else integrates through the certified engine.
    """

    eval: Callable[[np.ndarray], np.ndarray]
    family: str  # "power" or "general"
    c: float
    beta: float
    zero_exponent: float

    def eval_log(self, v) -> np.ndarray:
        """w(e^v) for v <= 0."""
        v = np.asarray(v, dtype=float)
        if self.family == "power":
            return self.c * np.exp(self.beta * v)
        with np.errstate(under="ignore"):
            t = np.exp(np.maximum(v, -745.0))
        return np.asarray(self.eval(t), dtype=float)

    def moment(self, exponent: float, spec: QuadratureSpec | None = None) -> float:
        """int_0^1 t^exponent w(t) dt, exact for the power family."""
        if self.family == "power":
            s = exponent + self.beta + 1.0
            if s <= 0:
                raise DivergentIntegralError(
                    f"weight moment diverges: exponent sum {s} <= 0"
                )
            return self.c / s
        spec = spec or QuadratureSpec()
        rate = exponent + self.zero_exponent + 1.0
        if rate <= 0:
            raise DivergentIntegralError(
                f"weight moment diverges: t -> 0 rate {rate} <= 0"
            )
        res = certified_log_integral(
            lambda v: self.eval_log(v) * np.exp((exponent + 1.0) * v),
            -math.inf, 0.0, rate_lo=rate, rate_hi=1.0, spec=spec,
        )
        return res.value


def power_weight(c: float = 1.0, beta: float = 0.0) -> WeightFunction:
    if c <= 0:
        raise ValueError("power-law weight needs c > 0")

    def ev(t):
        return c * np.asarray(t, dtype=float) ** beta

    return WeightFunction(eval=ev, family="power", c=c, beta=beta, zero_exponent=beta)


def weight_from_callable(fn: Callable[[np.ndarray], np.ndarray], zero_exponent: float) -> WeightFunction:
    return WeightFunction(eval=fn, family="general", c=math.nan, beta=math.nan,
                          zero_exponent=zero_exponent)


@dataclass(frozen=True)
class OperatorKind:
    """Which operator to apply; weighted variants carry their weight."""

    tag: str  # "hardy" | "dual_hardy" | "weighted_hardy" | "weighted_cesaro"
    weight: WeightFunction | None = None

    def __post_init__(self) -> None:
        if self.tag not in ("hardy", "dual_hardy", "weighted_hardy", "weighted_cesaro"):
            raise ValueError(f"unknown operator tag {self.tag!r}")
        if self.tag in ("weighted_hardy", "weighted_cesaro") and self.weight is None:
            raise ValueError(f"{self.tag} requires a weight function")

    @property
    def is_weighted(self) -> bool:
        return self.weight is not None


HARDY = OperatorKind("hardy")
DUAL_HARDY = OperatorKind("dual_hardy")


def _lazy_output(
    pointwise: Callable[[float, float], float],
    origin_exponent: float,
    tail_exponent: float,
    support: tuple[float, float],
    exp_rate: float | None,
    breakpoints: tuple[float, ...],
) -> RadialProfile:
    """Wrap a scalar (u, kappa) -> value rule as a profile (looped over arrays)."""

    def lv(u, kappa):
        u = np.asarray(u, dtype=float)
        shape = u.shape
        flat = np.atleast_1d(u).ravel()
        out = np.empty_like(flat)
        for i, ui in enumerate(flat):
            out[i] = pointwise(float(ui), kappa)
        return out.reshape(shape)

    return RadialProfile(
        lv, origin_exponent, tail_exponent,
        support=support, exp_rate=exp_rate, breakpoints=breakpoints,
    )


def hardy(f: RadialProfile, space: HeisSpace, spec: QuadratureSpec | None = None) -> RadialProfile:
    """Ball average (Q / r^Q) int_0^r f(s) s^{Q-1} ds as a lazy profile.

    Needs f integrable against s^{Q-1} near the origin.  The output decays
    no slower than r^{-Q} at infinity and inherits f's origin behavior,
    capped at order zero.
    """
    spec = (spec or QuadratureSpec()).inner()
    q = float(space.q)
    if f.is_zero:
        return zero_profile()
    if f.support[0] == 0.0 and f.origin_exponent + q <= 0:
        raise DivergentIntegralError(
            f"hardy: f diverges too fast at the origin "
            f"(origin exponent {f.origin_exponent} <= -Q)"
        )
    sup_lo, sup_hi = f.support
    f_breaks = f.log_breakpoints()

    def point(u: float, kappa: float) -> float:
        # (Hf)(e^u) e^{kappa u} = Q int f.logeval(u+v, kappa) e^{(Q-kappa) v} dv
        # over v <= min(0, log sup_hi - u), v >= log sup_lo - u.
        v_hi = min(0.0, (math.log(sup_hi) - u) if math.isfinite(sup_hi) else 0.0)
        v_lo = (math.log(sup_lo) - u) if sup_lo > 0.0 else -math.inf
        if not v_lo < v_hi:
            return 0.0
        res = certified_log_integral(
            lambda v: f.logeval(u + v, kappa) * np.exp((q - kappa) * v),
            v_lo, v_hi,
            rate_lo=f.origin_exponent + q,
            rate_hi=1.0,
            spec=spec,
            seeds=tuple(b - u for b in f_breaks),
        )
        return q * res.value

    return _lazy_output(
        point,
        origin_exponent=min(f.origin_exponent, 0.0),
        tail_exponent=max(_effective_tail(f), -q),
        support=(sup_lo, math.inf),
        exp_rate=None,
        breakpoints=f.breakpoints,
    )


def dual_hardy(f: RadialProfile, space: HeisSpace, spec: QuadratureSpec | None = None) -> RadialProfile:
    """Q int_r^inf f(s) / s ds as a lazy profile.

    Needs f(s)/s integrable at infinity (tail exponent < 0).  Below the
    support of f the output is constant; at zero it picks up at worst a
    logarithm, recorded as an arbitrarily small negative order.
    """
    spec = (spec or QuadratureSpec()).inner()
    q = float(space.q)
    if f.is_zero:
        return zero_profile()
    if math.isinf(f.support[1]) and f.exp_rate is None and f.tail_exponent >= 0:
        raise DivergentIntegralError(
            f"dual_hardy: tail exponent {f.tail_exponent} >= 0, divergent tail"
        )
    sup_lo, sup_hi = f.support
    f_breaks = f.log_breakpoints()

    def point(u: float, kappa: float) -> float:
        # (H*f)(e^u) e^{kappa u} = Q int f.logeval(u+v, kappa) e^{-kappa v} dv,
        # v >= max(0, log sup_lo - u), v <= log sup_hi - u.
        v_lo = max(0.0, (math.log(sup_lo) - u) if sup_lo > 0.0 else 0.0)
        v_hi = (math.log(sup_hi) - u) if math.isfinite(sup_hi) else math.inf
        if not v_lo < v_hi:
            return 0.0
        res = certified_log_integral(
            lambda v: f.logeval(u + v, kappa) * np.exp(-kappa * v),
            v_lo, v_hi,
            rate_lo=1.0,
            rate_hi=-f.tail_exponent,
            spec=spec,
            seeds=tuple(b - u for b in f_breaks),
            exp_tail=f.exp_rate is not None,
        )
        return q * res.value

    if f.origin_exponent > 0 or sup_lo > 0.0:
        origin = 0.0
    elif f.origin_exponent == 0.0:
        origin = -1e-6  # logarithmic blowup, bounded by any negative power
    else:
        origin = f.origin_exponent
    return _lazy_output(
        point,
        origin_exponent=origin,
        tail_exponent=f.tail_exponent if f.exp_rate is None else -1.0,
        support=(0.0, sup_hi),
        exp_rate=f.exp_rate,
        breakpoints=f.breakpoints,
    )


def weighted_hardy(
    f: RadialProfile, w: WeightFunction, space: HeisSpace, spec: QuadratureSpec | None = None
) -> RadialProfile:
    """int_0^1 f(t r) w(t) dt as a lazy profile.

    Needs w(t) f(t r) integrable on (0, 1), i.e. f's origin exponent plus
    w's vanishing order above -1.  The output tail is the slower of f's own
    tail and r^{-(beta0 + 1)} from the dilation flow crossing the weight.
    """
    spec = (spec or QuadratureSpec()).inner()
    if f.is_zero:
        return zero_profile()
    if f.support[0] == 0.0 and f.origin_exponent + w.zero_exponent + 1.0 <= 0:
        raise DivergentIntegralError(
            f"weighted_hardy: divergent moment "
            f"(origin {f.origin_exponent} + weight order {w.zero_exponent} <= -1)"
        )
    sup_lo, sup_hi = f.support
    f_breaks = f.log_breakpoints()
    if w.family == "power":
        # weight exponent folded into a single exp keeps the factors in
        # float range even on slowly converging windows
        def t_factor(v, kappa):
            return w.c * np.exp((w.beta + 1.0 - kappa) * v)
    else:
        def t_factor(v, kappa):
            return w.eval_log(v) * np.exp((1.0 - kappa) * v)

    def point(u: float, kappa: float) -> float:
        # r^kappa Hw f(r) = int f.logeval(u+v, kappa) e^{-kappa v} w(e^v) e^v dv, v <= 0
        v_hi = min(0.0, (math.log(sup_hi) - u) if math.isfinite(sup_hi) else 0.0)
        v_lo = (math.log(sup_lo) - u) if sup_lo > 0.0 else -math.inf
        if not v_lo < v_hi:
            return 0.0
        res = certified_log_integral(
            lambda v: f.logeval(u + v, kappa) * t_factor(v, kappa),
            v_lo, v_hi,
            rate_lo=f.origin_exponent + w.zero_exponent + 1.0,
            rate_hi=1.0,
            spec=spec,
            seeds=tuple(b - u for b in f_breaks),
        )
        return res.value

    return _lazy_output(
        point,
        origin_exponent=f.origin_exponent,
        tail_exponent=max(_effective_tail(f), -(w.zero_exponent + 1.0)),
        support=(sup_lo, math.inf),
        exp_rate=None,
        breakpoints=f.breakpoints,
    )


def weighted_cesaro(
    f: RadialProfile, w: WeightFunction, space: HeisSpace, spec: QuadratureSpec | None = None
) -> RadialProfile:
    """int_0^1 f(r / t) t^{-Q} w(t) dt as a lazy profile.

    The t -> 0 end of the flow sweeps f's tail against t^{-Q} w(t); the
    screening condition (weight order) - Q - (tail exponent) > -1 is
    required and checked up front.
    """
    spec = (spec or QuadratureSpec()).inner()
    q = float(space.q)
    if f.is_zero:
        return zero_profile()
    tail_rate = w.zero_exponent + 1.0 - q - f.tail_exponent
    if math.isinf(f.support[1]) and f.exp_rate is None and tail_rate <= 0:
        raise DivergentIntegralError(
            f"weighted_cesaro: divergent at t -> 0 "
            f"(screening rate {tail_rate} <= 0)"
        )
    sup_lo, sup_hi = f.support
    f_breaks = f.log_breakpoints()
    if w.family == "power":
        def t_factor(v, kappa):
            return w.c * np.exp((q - 1.0 - kappa - w.beta) * v)
    else:
        def t_factor(v, kappa):
            return w.eval_log(-v) * np.exp((q - 1.0 - kappa) * v)

    def point(u: float, kappa: float) -> float:
        # r^kappa H*w f(r) = int_0^inf f.logeval(u+v, kappa) e^{(Q-1-kappa) v} w(e^{-v}) dv
        v_lo = max(0.0, (math.log(sup_lo) - u) if sup_lo > 0.0 else 0.0)
        v_hi = (math.log(sup_hi) - u) if math.isfinite(sup_hi) else math.inf
        if not v_lo < v_hi:
            return 0.0
        res = certified_log_integral(
            lambda v: f.logeval(u + v, kappa) * t_factor(v, kappa),
            v_lo, v_hi,
            rate_lo=1.0,
            rate_hi=tail_rate,
            spec=spec,
            seeds=tuple(b - u for b in f_breaks),
            exp_tail=f.exp_rate is not None,
        )
        return res.value

    own_origin = f.origin_exponent if sup_lo == 0.0 else math.inf
    return _lazy_output(
        point,
        origin_exponent=min(own_origin, w.zero_exponent + 1.0 - q),
        tail_exponent=f.tail_exponent,
        support=(0.0, sup_hi),
        exp_rate=f.exp_rate,
        breakpoints=f.breakpoints + ((sup_lo,) if sup_lo > 0.0 else ()),
    )


def apply_operator(
    kind: OperatorKind, f: RadialProfile, space: HeisSpace, spec: QuadratureSpec | None = None
) -> RadialProfile:
    if kind.tag == "hardy":
        return hardy(f, space, spec)
    if kind.tag == "dual_hardy":
        return dual_hardy(f, space, spec)
    if kind.tag == "weighted_hardy":
        return weighted_hardy(f, kind.weight, space, spec)
    return weighted_cesaro(f, kind.weight, space, spec)


def apply_pointwise(
    kind: OperatorKind,
    f: RadialProfile,
    x: HeisPoint,
    space: HeisSpace,
    spec: QuadratureSpec | None = None,
) -> float:
    """Evaluate the operator at a general point through r = |x|_h."""
    r = koranyi_norm(x)
    if r == 0.0:
        raise ValueError("operators are defined away from the group origin")
    out = apply_operator(kind, f, space, spec)
    return float(out.eval(r))


def duality_pairing_check(
    f: RadialProfile,
    g: RadialProfile,
    w: WeightFunction,
    space: HeisSpace,
    spec: QuadratureSpec | None = None,
) -> tuple[float, float]:
    """Both sides of the adjointness identity between Hw and H*w.

    Returns (lhs, rhs) with
        lhs = omega_small * int f(r) (Hw g)(r) r^{Q-1} dr
        rhs = omega_small * int g(r) (H*w f)(r) r^{Q-1} dr,
    each by its own nested quadrature; callers assert closeness.
    """
    spec = spec or QuadratureSpec()
    q = float(space.q)

    def pairing(a: RadialProfile, b: RadialProfile) -> float:
        prod = product_profile(a, b)
        if prod.is_zero:
            return 0.0
        if prod.support[0] == 0.0 and prod.origin_exponent + q <= 0:
            raise DivergentIntegralError("pairing diverges at the origin")
        if math.isinf(prod.support[1]) and prod.exp_rate is None and prod.tail_exponent + q >= 0:
            raise DivergentIntegralError("pairing diverges at infinity")
        return integrate_power_weighted(prod, q, (0.0, math.inf), spec).value

    lhs = space.omega_small * pairing(f, weighted_hardy(g, w, space, spec))
    rhs = space.omega_small * pairing(g, weighted_cesaro(f, w, space, spec))
    return lhs, rhs
