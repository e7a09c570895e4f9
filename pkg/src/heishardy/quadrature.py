"""Certified 1-D radial quadrature and seeded Monte Carlo sampling.

Radial integrals of the form  int g(r) r^{Q-1} dr  over (0, infinity) are
computed in the log-radius variable u = log r with an adaptive 15-point
Gauss-Kronrod rule.  Working in u has three payoffs at once:

* power-law endpoint singularities at r -> 0 become plain exponential
  decay toward u = -infinity,
* slowly decaying tails r^{-1-s} (s as small as 1e-3 here) become
  exponentials e^{-s u} whose certified truncation point follows from the
  decay metadata in closed form,
* radii far beyond float64 range never need to be materialized, because
  profiles are evaluated through ``logeval(u, kappa) = f(e^u) e^{kappa u}``
  with the measure power folded in before anything can overflow.

Truncation is always driven by declared decay exponents, never by blind
sampling: the neglected mass is bounded by a closed-form power-law (or
exponential) tail estimate pushed below abs_tol/10, with the bound's
constant estimated by probing the integrand and doubling.

The Monte Carlo half of the module draws uniform points of the Koranyi
unit ball by rejection from the enclosing box [-1, 1]^{2n+1}, using
counter-based Philox streams keyed by (seed, round): the candidate for
index i in round t is a pure function of (seed, t, i), so batches are
bitwise reproducible and disjoint index ranges can be produced
independently with identical results.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .geometry import HeisSpace, koranyi_norm_array, sphere_project_array

__all__ = [
    "DivergentIntegralError",
    "ToleranceNotReachedError",
    "QuadratureSpec",
    "QuadResult",
    "RadialProfile",
    "power_profile",
    "exp_profile",
    "constant_profile",
    "zero_profile",
    "mixture_profile",
    "scaled_profile",
    "product_profile",
    "abs_power_profile",
    "profile_from_callable",
    "integrate_radial",
    "integrate_power_weighted",
    "certified_log_integral",
    "SampleBatch",
    "mc_ball_sample",
    "mc_sphere_sample",
]


class DivergentIntegralError(ArithmeticError):
    """Decay metadata says the requested integral diverges."""


class ToleranceNotReachedError(ArithmeticError):
    """Subdivision budget exhausted; carries the best estimate found."""

    def __init__(self, message: str, estimate: float, error: float):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


@dataclass(frozen=True)
class QuadratureSpec:
    rel_tol: float = 1e-8
    abs_tol: float = 1e-14
    max_subdivisions: int = 2000

    def __post_init__(self) -> None:
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ValueError("tolerances must be strictly positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")

    def inner(self) -> "QuadratureSpec":
        """Tighter spec for quadratures nested inside another integrand."""
        return QuadratureSpec(
            rel_tol=max(self.rel_tol * 1e-2, 1e-13),
            abs_tol=max(self.abs_tol * 1e-2, 1e-18),
            max_subdivisions=self.max_subdivisions,
        )


@dataclass(frozen=True)
class QuadResult:
    value: float
    error: float


# 15-point Kronrod nodes with the embedded 7-point Gauss weights at the odd
# positions (QUADPACK dqk15 constants).
_XK = np.array([
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898, 0.0,
    0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759,
    0.991455371120813,
])
_WK = np.array([
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
    0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979,
    0.022935322010529,
])
_WG = np.zeros(15)
_WG[1::2] = [
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469, 0.381830050505119, 0.279705391489277,
    0.129484966168870,
]


def _panel(fun: Callable[[np.ndarray], np.ndarray], a: float, b: float) -> tuple[float, float]:
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    y = np.asarray(fun(mid + half * _XK), dtype=float)
    if not np.all(np.isfinite(y)):
        raise ArithmeticError(f"integrand not finite on panel [{a}, {b}]")
    ik = half * float(_WK @ y)
    ig = half * float(_WG @ y)
    return ik, abs(ik - ig)


def _adaptive(
    fun: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    rel_tol: float,
    abs_tol: float,
    max_panels: int,
    seeds: Sequence[float] = (),
) -> tuple[float, float]:
    """Globally adaptive GK15 bisection over [a, b] with seeded panel edges."""
    if not b > a:
        return 0.0, 0.0
    edges = sorted({a, b, *(s for s in seeds if a < s < b)})
    panels: list[list[float]] = []
    total = 0.0
    err = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        v, e = _panel(fun, lo, hi)
        panels.append([lo, hi, v, e])
        total += v
        err += e
    heap = [(-p[3], i) for i, p in enumerate(panels)]
    heapq.heapify(heap)
    frozen = 0.0  # error on panels at machine resolution, not reducible
    while err + frozen > max(rel_tol * abs(total), abs_tol):
        if len(panels) >= max_panels or not heap:
            value = math.fsum(p[2] for p in panels)
            if not heap:
                return value, err + frozen
            raise ToleranceNotReachedError(
                f"tolerance not reached after {len(panels)} panels "
                f"(estimate {value!r}, error {err + frozen!r})",
                estimate=value,
                error=err + frozen,
            )
        neg_err, i = heapq.heappop(heap)
        if -neg_err != panels[i][3]:
            continue  # stale entry
        lo, hi, v_old, e_old = panels[i]
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            frozen += e_old
            err -= e_old
            panels[i][3] = 0.0
            continue
        v1, e1 = _panel(fun, lo, mid)
        v2, e2 = _panel(fun, mid, hi)
        total += v1 + v2 - v_old
        err += e1 + e2 - e_old
        panels[i] = [lo, mid, v1, e1]
        heapq.heappush(heap, (-e1, i))
        panels.append([mid, hi, v2, e2])
        heapq.heappush(heap, (-e2, len(panels) - 1))
    return math.fsum(p[2] for p in panels), err + frozen


def _ladder(a: float, b: float, cap_near: float, cap_far: float) -> list[float]:
    """Dyadic seed points growing away from `a` toward `b`, width-capped.

    The near-edge cap resolves structure on the local decay scale; the far
    cap bounds panel widths so smooth exponential variation stays inside
    the rule's reach on every panel.
    """
    width = b - a
    cap_near = max(cap_near, width / 64.0)
    cap_far = max(cap_far, width / 64.0)
    seeds = []
    step = min(cap_near, width) / 2.0
    if step <= 0:
        return seeds
    x = a + step
    while x < b and len(seeds) < 160:
        seeds.append(x)
        step = min(step * 2.0, cap_far)
        x += step
    return seeds


def _two_sided_seeds(a: float, b: float, cap_lo: float, cap_hi: float) -> set[float]:
    cap = max(cap_lo, cap_hi)
    left = _ladder(a, b, cap_lo, cap)
    right = [a + b - s for s in _ladder(a, b, cap_hi, cap)]
    return set(left) | set(right)


_TRUNC_EFOLDS = 45.0  # window length, in e-folds of decay, beyond which we cut


def certified_log_integral(
    fun: Callable[[np.ndarray], np.ndarray],
    u_lo: float,
    u_hi: float,
    rate_lo: float,
    rate_hi: float,
    spec: QuadratureSpec,
    seeds: Sequence[float] = (),
    exp_tail: bool = False,
    center: float | None = None,
) -> QuadResult:
    """Adaptive integral of fun(u) du over [u_lo, u_hi] with certified cutoffs.

    Endpoints may be infinite.  Toward u_lo the integrand must obey
    |fun| <= C e^{rate_lo (u - center)} with rate_lo > 0, and toward u_hi
    |fun| <= C e^{-rate_hi (u - center)} with rate_hi > 0 (unless exp_tail
    is set, in which case the upper cutoff is found by scanning for the
    doubly-exponential collapse).  The envelope constants are estimated by
    probing fun near the mass center and doubling; windows are cut where
    the envelope bound drops below abs_tol/10 and the neglected mass joins
    the returned error estimate.  Finite windows far longer than the decay
    scale are cut the same way, which also keeps profile evaluations away
    from regions where individual factors of an integrand would leave
    float range.
    """
    with np.errstate(over="ignore", under="ignore", invalid="ignore"):
        return _certified_log_integral_impl(
            fun, u_lo, u_hi, rate_lo, rate_hi, spec, seeds, exp_tail, center
        )


def _certified_log_integral_impl(
    fun, u_lo, u_hi, rate_lo, rate_hi, spec, seeds, exp_tail, center
) -> QuadResult:
    if center is None:
        center = 0.0
        if math.isfinite(u_lo):
            center = max(center, u_lo)
        if math.isfinite(u_hi):
            center = min(center, u_hi)
    trunc_err = 0.0
    offsets = np.array([0.5, 1.0, 2.0, 4.0, 8.0, 12.0])

    if math.isinf(u_hi) and exp_tail:
        u = center + 1.0
        for _ in range(300):
            g0 = abs(float(fun(np.array(u))))
            g1 = abs(float(fun(np.array(u + 0.5))))
            if g0 < spec.abs_tol / 20.0 and g1 <= g0 * math.exp(-0.5) + spec.abs_tol / 100.0:
                break
            u += 1.0
        else:
            raise DivergentIntegralError("no certified cutoff for exponential tail")
        u_hi = u
        trunc_err += abs(float(fun(np.array(u)))) * 2.0
    elif math.isinf(u_hi) or rate_hi * (u_hi - center) > _TRUNC_EFOLDS:
        if not rate_hi > 0:
            raise DivergentIntegralError(
                f"non-decaying upper tail (rate {rate_hi} <= 0); divergent integral"
            )
        probes = center + offsets
        c_est = 2.0 * float(np.max(np.abs(fun(probes)) * np.exp(rate_hi * offsets)))
        if c_est == 0.0:
            u_hi = min(u_hi, center + 13.0)
        else:
            width = max(math.log(20.0 * c_est / (spec.abs_tol * rate_hi)) / rate_hi, 13.0)
            if center + width < u_hi:
                u_hi = center + width
                trunc_err += c_est * math.exp(-rate_hi * width) / rate_hi

    if math.isinf(u_lo) or rate_lo * (center - u_lo) > _TRUNC_EFOLDS:
        if not rate_lo > 0:
            raise DivergentIntegralError(
                f"non-decaying lower tail (rate {rate_lo} <= 0); divergent integral"
            )
        base = min(center, u_hi)
        probes = base - offsets
        c_est = 2.0 * float(np.max(np.abs(fun(probes)) * np.exp(rate_lo * offsets)))
        if c_est == 0.0:
            u_lo = max(u_lo, base - 13.0)
        else:
            width = max(math.log(20.0 * c_est / (spec.abs_tol * rate_lo)) / rate_lo, 13.0)
            if base - width > u_lo:
                u_lo = base - width
                trunc_err += c_est * math.exp(-rate_lo * width) / rate_lo

    if not u_lo < u_hi:
        return QuadResult(0.0, trunc_err)

    cap_lo = 4.0 / max(abs(rate_lo), 0.25)
    cap_hi = 4.0 / max(abs(rate_hi), 0.25) if not exp_tail else 2.0
    all_seeds = _two_sided_seeds(u_lo, u_hi, cap_lo, cap_hi)
    all_seeds.update(s for s in seeds if u_lo < s < u_hi)
    value, err = _adaptive(
        fun, u_lo, u_hi,
        rel_tol=spec.rel_tol, abs_tol=spec.abs_tol,
        max_panels=spec.max_subdivisions, seeds=sorted(all_seeds),
    )
    return QuadResult(value, err + trunc_err)


# --- radial profiles ----------------------------------------------------------


class RadialProfile:
    """A radial function r in (0, inf) -> R with decay metadata.

    The metadata is what makes improper integrals certifiable:
    |f(r)| = O(r^origin_exponent) as r -> 0+ and O(r^tail_exponent) as
    r -> infinity, with an optional factor e^{-exp_rate * r} that beats
    every power.  `support` clips the function to an interval; outside it
    the profile evaluates to zero, and a bounded support makes the tail
    exponent irrelevant.

    Evaluation goes through ``logeval(u, kappa) = f(e^u) * e^{kappa u}`` so
    measure powers can be folded in without overflow at extreme radii.
    """

    def __init__(
        self,
        logeval: Callable[[np.ndarray, float], np.ndarray],
        origin_exponent: float,
        tail_exponent: float,
        support: tuple[float, float] = (0.0, math.inf),
        exp_rate: float | None = None,
        breakpoints: tuple[float, ...] = (),
        is_zero: bool = False,
    ):
        lo, hi = support
        if not (0.0 <= lo < hi):
            raise ValueError(f"support must satisfy 0 <= lo < hi, got {support}")
        self._logeval = logeval
        self.origin_exponent = float(origin_exponent)
        self.tail_exponent = float(tail_exponent)
        self.support = (float(lo), float(hi))
        self.exp_rate = exp_rate
        self.breakpoints = tuple(sorted({b for b in breakpoints if 0.0 < b < math.inf}))
        self.is_zero = is_zero

    def logeval(self, u, kappa: float = 0.0) -> np.ndarray:
        u = np.asarray(u, dtype=float)
        if self.is_zero:
            return np.zeros_like(u)
        vals = np.asarray(self._logeval(u, kappa), dtype=float)
        lo, hi = self.support
        if lo > 0.0 or math.isfinite(hi):
            ulo = math.log(lo) if lo > 0.0 else -math.inf
            uhi = math.log(hi) if math.isfinite(hi) else math.inf
            vals = np.where((u >= ulo) & (u <= uhi), vals, 0.0)
        return vals

    def eval(self, r):
        r = np.asarray(r, dtype=float)
        if np.any(r <= 0):
            raise ValueError("radial profiles are defined for r > 0 only")
        out = self.logeval(np.log(r), 0.0)
        return float(out) if out.ndim == 0 else out

    __call__ = eval

    def effective_interval(self, lo: float, hi: float) -> tuple[float, float]:
        return max(lo, self.support[0]), min(hi, self.support[1])

    def log_breakpoints(self) -> tuple[float, ...]:
        pts = [math.log(b) for b in self.breakpoints]
        for s in self.support:
            if 0.0 < s < math.inf:
                pts.append(math.log(s))
        return tuple(sorted(set(pts)))


# tail exponent sentinel for profiles whose decay is exponential
_EXP_TAIL = -1e9


def power_profile(
    exponent: float,
    coeff: float = 1.0,
    support: tuple[float, float] = (0.0, math.inf),
) -> RadialProfile:
    """coeff * r^exponent, optionally truncated to `support`."""

    def lv(u, kappa):
        return coeff * np.exp((exponent + kappa) * u)

    return RadialProfile(lv, origin_exponent=exponent, tail_exponent=exponent, support=support)


def exp_profile(rate: float, exponent: float = 0.0, coeff: float = 1.0) -> RadialProfile:
    """coeff * r^exponent * e^{-rate * r} with rate > 0."""
    if not rate > 0:
        raise ValueError("decay rate must be positive")

    def lv(u, kappa):
        arg = (exponent + kappa) * u - rate * np.exp(u)
        return coeff * np.exp(arg)

    return RadialProfile(lv, origin_exponent=exponent, tail_exponent=_EXP_TAIL, exp_rate=rate)


def constant_profile(c: float, support: tuple[float, float] = (0.0, math.inf)) -> RadialProfile:
    return power_profile(0.0, c, support)


def zero_profile() -> RadialProfile:
    return RadialProfile(
        lambda u, kappa: np.zeros_like(np.asarray(u, dtype=float)),
        origin_exponent=0.0, tail_exponent=_EXP_TAIL, is_zero=True,
    )


def mixture_profile(parts: Sequence[RadialProfile]) -> RadialProfile:
    """Pointwise sum; metadata takes the worst case over the parts."""
    parts = [p for p in parts if not p.is_zero]
    if not parts:
        return zero_profile()
    if len(parts) == 1:
        return parts[0]

    def lv(u, kappa):
        acc = parts[0].logeval(u, kappa).copy()
        for p in parts[1:]:
            acc = acc + p.logeval(u, kappa)
        return acc

    lo = min(p.support[0] for p in parts)
    hi = max(p.support[1] for p in parts)
    # only parts that actually reach an edge grade the behavior there
    at_lo = [p for p in parts if p.support[0] == lo]
    at_hi = [p for p in parts if p.support[1] == hi]
    exp_rate = None
    if math.isinf(hi) and all(p.exp_rate is not None for p in at_hi):
        exp_rate = min(p.exp_rate for p in at_hi)
    breaks = []
    for p in parts:
        breaks.extend(p.breakpoints)
        breaks.extend(s for s in p.support if 0.0 < s < math.inf)
    return RadialProfile(
        lv,
        origin_exponent=min(p.origin_exponent for p in at_lo),
        tail_exponent=max(p.tail_exponent for p in at_hi),
        support=(lo, hi),
        exp_rate=exp_rate,
        breakpoints=tuple(breaks),
    )


def scaled_profile(f: RadialProfile, c: float) -> RadialProfile:
    if c == 0.0 or f.is_zero:
        return zero_profile()
    return RadialProfile(
        lambda u, kappa: c * f.logeval(u, kappa),
        origin_exponent=f.origin_exponent,
        tail_exponent=f.tail_exponent,
        support=f.support,
        exp_rate=f.exp_rate,
        breakpoints=f.breakpoints,
    )


def product_profile(f: RadialProfile, g: RadialProfile) -> RadialProfile:
    """Pointwise product; exponents add, supports intersect."""
    if f.is_zero or g.is_zero:
        return zero_profile()
    lo = max(f.support[0], g.support[0])
    hi = min(f.support[1], g.support[1])
    if not lo < hi:
        return zero_profile()
    rate = None
    if f.exp_rate is not None or g.exp_rate is not None:
        rate = (f.exp_rate or 0.0) + (g.exp_rate or 0.0)
    return RadialProfile(
        lambda u, kappa: f.logeval(u, 0.5 * kappa) * g.logeval(u, 0.5 * kappa),
        origin_exponent=f.origin_exponent + g.origin_exponent,
        tail_exponent=max(f.tail_exponent + g.tail_exponent, _EXP_TAIL),
        support=(lo, hi),
        exp_rate=rate,
        breakpoints=f.breakpoints + g.breakpoints,
    )


def abs_power_profile(f: RadialProfile, p: float) -> RadialProfile:
    """|f|^p with the decay metadata scaled by p."""
    if f.is_zero:
        return zero_profile()
    return RadialProfile(
        lambda u, kappa: np.abs(f.logeval(u, kappa / p)) ** p,
        origin_exponent=p * f.origin_exponent,
        tail_exponent=max(p * f.tail_exponent, _EXP_TAIL),
        support=f.support,
        exp_rate=None if f.exp_rate is None else p * f.exp_rate,
        breakpoints=f.breakpoints,
    )


def profile_from_callable(
    fn: Callable[[np.ndarray], np.ndarray],
    origin_exponent: float,
    tail_exponent: float,
    support: tuple[float, float] = (0.0, math.inf),
    exp_rate: float | None = None,
    breakpoints: tuple[float, ...] = (),
) -> RadialProfile:
    """Wrap a plain vectorized r -> f(r) callable.

    Evaluates fn at r = e^u directly, so it is only safe while the radii of
    interest stay within float range; prefer the structured constructors
    for anything that must survive extreme radii.
    """

    def lv(u, kappa):
        u = np.asarray(u, dtype=float)
        r = np.exp(np.clip(u, -700.0, 700.0))
        return np.asarray(fn(r), dtype=float) * np.exp(kappa * u)

    return RadialProfile(
        lv, origin_exponent, tail_exponent,
        support=support, exp_rate=exp_rate, breakpoints=breakpoints,
    )


# --- radial integration --------------------------------------------------------


def integrate_power_weighted(
    f: RadialProfile,
    kappa: float,
    interval: tuple[float, float],
    spec: QuadratureSpec,
) -> QuadResult:
    """Certified value of  int_interval f(r) r^{kappa - 1} dr."""
    lo, hi = interval
    if not (0.0 <= lo < hi):
        raise ValueError(f"bad interval {interval}")
    if f.is_zero:
        return QuadResult(0.0, 0.0)
    lo, hi = f.effective_interval(lo, hi)
    if not lo < hi:
        return QuadResult(0.0, 0.0)

    u_lo = math.log(lo) if lo > 0.0 else -math.inf
    u_hi = math.log(hi) if math.isfinite(hi) else math.inf
    rate_lo = f.origin_exponent + kappa          # required > 0 if u_lo = -inf
    rate_hi = -(f.tail_exponent + kappa)         # required > 0 if u_hi = +inf
    return certified_log_integral(
        lambda u: f.logeval(u, kappa),
        u_lo, u_hi, rate_lo, rate_hi, spec,
        seeds=f.log_breakpoints(),
        exp_tail=f.exp_rate is not None,
    )


def integrate_radial(
    g: RadialProfile,
    space: HeisSpace,
    interval: tuple[float, float] = (0.0, math.inf),
    spec: QuadratureSpec | None = None,
) -> QuadResult:
    """int g(r) r^{Q-1} dr over the interval, with a certified error estimate.

    Raises DivergentIntegralError when decay metadata rules out convergence
    and ToleranceNotReachedError (carrying the best estimate) when the
    subdivision budget runs out.
    """
    spec = spec or QuadratureSpec()
    return integrate_power_weighted(g, float(space.q), interval, spec)


# --- Monte Carlo samplers -------------------------------------------------------


@dataclass
class SampleBatch:
    """Points drawn in or on the Koranyi unit ball/sphere.

    coords has shape (count, 2n+1).  attempts counts every candidate the
    rejection loop consumed, so acceptance_rate = count / attempts.
    """

    coords: np.ndarray
    seed: int
    acceptance_rate: float
    attempts: int
    kind: str = "ball"

    def __len__(self) -> int:
        return len(self.coords)

    def radii(self) -> np.ndarray:
        return koranyi_norm_array(self.coords)


def mc_ball_sample(space: HeisSpace, count: int, seed: int) -> SampleBatch:
    """Uniform points of {|x|_h <= 1} by rejection from the box [-1, 1]^{2n+1}.

    The ball sits inside the box because |x|_h <= 1 forces both the
    horizontal square-sum and the last coordinate into [-1, 1].  Candidate
    row i of round t comes from the Philox stream keyed (seed, t), so the
    accepted point at index i depends only on (seed, t, i).
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    d = space.dim
    out = np.empty((count, d), dtype=float)
    pending = np.arange(count)
    attempts = 0
    for rnd in range(10_000):
        key = np.array([seed & 0xFFFFFFFFFFFFFFFF, rnd], dtype=np.uint64)
        gen = np.random.Generator(np.random.Philox(key=key))
        cand = gen.random((count, d)) * 2.0 - 1.0
        cand = cand[pending]
        attempts += len(pending)
        accept = koranyi_norm_array(cand) <= 1.0
        out[pending[accept]] = cand[accept]
        pending = pending[~accept]
        if len(pending) == 0:
            break
    else:  # pragma: no cover - acceptance probability is ~0.2 per round minimum
        raise RuntimeError("rejection sampling failed to fill the batch")
    return SampleBatch(
        coords=out, seed=seed, acceptance_rate=count / attempts,
        attempts=attempts, kind="ball",
    )


def mc_sphere_sample(space: HeisSpace, count: int, seed: int) -> SampleBatch:
    """Uniform points of the unit gauge sphere via delta_{1/|x|_h} projection.

    Under the polar factorization dx = r^{Q-1} dr dtheta the projected
    angle of a uniform ball point has law dtheta / omega_small and is
    independent of the radius, whose own density is Q r^{Q-1} on [0, 1].
    """
    ball = mc_ball_sample(space, count, seed)
    coords = sphere_project_array(ball.coords, space.n)
    return SampleBatch(
        coords=coords, seed=seed, acceptance_rate=ball.acceptance_rate,
        attempts=ball.attempts, kind="sphere",
    )
