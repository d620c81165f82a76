"""Network reliability, hazard, aging, and stochastic-ordering diagnostics.

Reliability under a shock model has two equivalent mixture representations,
both evaluated here and asserted to agree:

* count mixture   R(t) = sum_k beta_k P(count at t = k)
* arrival mixture R(t) = sum_k b_k P(k-th shock after t)

where beta_k is the survival weight after k shocks and b_k = beta_{k-1} -
beta_k.  The infinite sums are truncated at the smallest K whose Poisson
tail is below ``TRUNCATION_EPS``; since every beta_k <= 1 the truncation
error of the count mixture is bounded by the same epsilon.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np
from scipy.special import gammaincc

from .network import Network
from .shocks import (
    TRUNCATION_EPS,
    BetaSequence,
    Binomial,
    DamageModel,
    Fatal,
    FirstArrivalLaw,
    OnePerShock,
    _count_pmf_row,
    beta_general,
    truncation_index,
)
from .signatures import SignatureVector, TailVector, t_signature, tail

__all__ = [
    "ComparisonReport",
    "HazardCurve",
    "ModelConfig",
    "OrderingVerdict",
    "RatioProfile",
    "ReliabilityCurve",
    "TP2Verdict",
    "compare_networks",
    "default_grid",
    "hazard_curve",
    "hazard_weights",
    "ihr_ratio_profile",
    "ihra_check",
    "order_check",
    "reliability_component_model",
    "reliability_fatal",
    "reliability_shock_model",
    "tp2_check",
]

_SLACK = 1e-12


@dataclass(frozen=True)
class ReliabilityCurve:
    """Reliability values over an increasing time grid.

    ``stderr`` is populated by Monte Carlo estimators only;
    ``truncation_bound`` bounds the series-truncation error of analytic
    curves (and is 0.0 for exact finite mixtures).
    """

    grid: np.ndarray
    values: np.ndarray
    stderr: np.ndarray | None
    truncation_bound: float

    def value_at(self, t: float) -> float:
        idx = int(np.argmin(np.abs(self.grid - t)))
        if abs(float(self.grid[idx]) - t) > 1e-9:
            raise ValueError(f"t={t} is not a grid point")
        return float(self.values[idx])


@dataclass(frozen=True)
class OrderingVerdict:
    """Outcome of a stochastic-order check; witness set iff it fails."""

    relation: str
    holds: bool
    witness: int | float | None


@dataclass(frozen=True)
class RatioProfile:
    """Consecutive survival-weight ratios beta_{k+1}/beta_k and monotonicity."""

    ratios: np.ndarray
    non_increasing: bool
    first_increase: int | None


@dataclass(frozen=True)
class TP2Verdict:
    """Result of an adjacent 2x2 minor scan of a non-negative kernel."""

    holds: bool
    witness: tuple[int, int] | None


@dataclass(frozen=True)
class HazardCurve:
    grid: np.ndarray
    values: np.ndarray


def _validate_grid(grid: Sequence[float]) -> np.ndarray:
    arr = np.asarray(grid, dtype=float)
    if arr.ndim != 1 or len(arr) == 0:
        raise ValueError("grid must be a non-empty 1-d sequence")
    if arr[0] < 0 or np.any(np.diff(arr) <= 0):
        raise ValueError("grid must be non-negative and strictly increasing")
    return arr


def _tie_signature_of(net_or_sig: Union[Network, SignatureVector]) -> SignatureVector:
    if isinstance(net_or_sig, Network):
        return t_signature(net_or_sig)
    return net_or_sig


def reliability_shock_model(
    net_or_sig: Union[Network, SignatureVector],
    law: FirstArrivalLaw,
    damage: DamageModel,
    grid: Sequence[float],
) -> ReliabilityCurve:
    """Reliability curve under a shock model with non-fatal damage.

    Accepts a network (its tie signature is computed) or a signature vector.
    A tie signature gives the shock-model law proper; a classical signature
    gives the independent-failure target used to validate mechanistic
    simulation.  Both mixture representations are evaluated at every grid
    point and must agree within 10x the truncation bound.
    """
    if isinstance(damage, Fatal):
        raise ValueError("fatal damage is evaluated by reliability_fatal")
    sig = _tie_signature_of(net_or_sig)
    tail_values = tail(sig).as_floats()
    grid_arr = _validate_grid(grid)
    lam_grid = np.asarray(law.mvf(grid_arr), dtype=float)

    kmax = truncation_index(float(lam_grid[-1]))
    betas = np.array([beta_general(tail_values, damage, k) for k in range(kmax + 1)])
    jumps = betas[:-1] - betas[1:]  # b_k for k = 1..kmax

    values = np.empty_like(grid_arr)
    for i, lam in enumerate(lam_grid):
        k_t = truncation_index(float(lam))
        pmf = _count_pmf_row(float(lam), k_t)
        count_val = float(pmf @ betas[: k_t + 1])
        # arrival survivals for k > K are within eps of 1, so the neglected
        # arrival-mixture tail equals beta_K up to eps * beta_K
        surv = gammaincc(np.arange(1, k_t + 1), float(lam))
        arrival_val = float(surv @ jumps[:k_t]) + float(betas[k_t])
        if abs(count_val - arrival_val) > 10.0 * TRUNCATION_EPS:
            raise ArithmeticError(
                f"mixture representations disagree at t={grid_arr[i]}: "
                f"{count_val} vs {arrival_val}"
            )
        values[i] = count_val
    return ReliabilityCurve(
        grid=grid_arr, values=values, stderr=None, truncation_bound=TRUNCATION_EPS
    )


def reliability_component_model(
    sig: SignatureVector, law: FirstArrivalLaw, grid: Sequence[float]
) -> ReliabilityCurve:
    """Reliability when component failures themselves arrive as the process.

    R(t) = sum_{i=0..n-1} tail_i P(count at t = i); counts at or beyond n
    carry tail weight zero, so the finite sum is exact.
    """
    if sig.kind != "classical":
        raise ValueError("component model takes the classical signature")
    tail_values = np.array(tail(sig).as_floats())
    grid_arr = _validate_grid(grid)
    lam_grid = np.asarray(law.mvf(grid_arr), dtype=float)
    values = np.empty_like(grid_arr)
    for i, lam in enumerate(lam_grid):
        pmf = _count_pmf_row(float(lam), sig.n - 1)
        values[i] = float(pmf @ tail_values)
    return ReliabilityCurve(grid=grid_arr, values=values, stderr=None, truncation_bound=0.0)


def reliability_fatal(
    sig: SignatureVector, law: FirstArrivalLaw, grid: Sequence[float]
) -> ReliabilityCurve:
    """Reliability under fatal shocks arriving as the given process.

    Evaluates both finite representations (arrival-survival mixture over the
    fatal signature and count mixture over its tails) and asserts agreement
    within 1e-12.
    """
    if sig.kind != "fatal":
        raise ValueError("fatal model takes the fatal signature")
    probs = np.array([float(p) for p in sig.probabilities])
    tail_values = np.array(tail(sig).as_floats())
    grid_arr = _validate_grid(grid)
    lam_grid = np.asarray(law.mvf(grid_arr), dtype=float)
    n = sig.n
    values = np.empty_like(grid_arr)
    for i, lam in enumerate(lam_grid):
        surv = gammaincc(np.arange(1, n + 1), float(lam))
        arrival_val = float(surv @ probs)
        pmf = _count_pmf_row(float(lam), n - 1)
        count_val = float(pmf @ tail_values)
        if abs(arrival_val - count_val) > 1e-12:
            raise ArithmeticError(
                f"fatal representations disagree at t={grid_arr[i]}: "
                f"{arrival_val} vs {count_val}"
            )
        values[i] = arrival_val
    return ReliabilityCurve(grid=grid_arr, values=values, stderr=None, truncation_bound=0.0)


def hazard_weights(
    net_or_sig: Union[Network, SignatureVector],
    law: FirstArrivalLaw,
    damage: DamageModel,
    t: float,
) -> np.ndarray:
    """Conditional shock-index weights at time t (they sum to 1).

    Entry k-1 is the probability that the network dies exactly at shock k
    given survival to t.
    """
    sig = _tie_signature_of(net_or_sig)
    tail_values = tail(sig).as_floats()
    lam = float(law.mvf(t))
    k_t = max(truncation_index(lam), 1)
    betas = np.array([beta_general(tail_values, damage, k) for k in range(k_t + 1)])
    jumps = betas[:-1] - betas[1:]
    surv = gammaincc(np.arange(1, k_t + 1), lam)
    raw = jumps * surv
    total = float(raw.sum())
    if total <= 0.0:
        raise ArithmeticError(f"reliability underflow at t={t}")
    return raw / total


def hazard_curve(
    net_or_sig: Union[Network, SignatureVector],
    law: FirstArrivalLaw,
    damage: DamageModel,
    grid: Sequence[float],
) -> HazardCurve:
    """Hazard rate of the network lifetime via the arrival-hazard mixture.

    lambda(t) = sum_k p_k(t) lambda_k(t) with p_k the conditional weights of
    :func:`hazard_weights` and lambda_k the hazard of the k-th arrival; the
    sum collapses to rate(t) * sum_k b_k pmf(k-1) / sum_k b_k surv(k).
    Grid points where the denominator underflows are dropped with a warning.
    """
    sig = _tie_signature_of(net_or_sig)
    tail_values = tail(sig).as_floats()
    grid_arr = _validate_grid(grid)
    lam_grid = np.asarray(law.mvf(grid_arr), dtype=float)
    rate_grid = np.asarray(law.rate(grid_arr), dtype=float)

    kmax = truncation_index(float(lam_grid[-1]))
    betas = np.array([beta_general(tail_values, damage, k) for k in range(kmax + 1)])
    jumps = betas[:-1] - betas[1:]

    ts: list[float] = []
    vals: list[float] = []
    for i, lam in enumerate(lam_grid):
        k_t = max(truncation_index(float(lam)), 1)
        pmf = _count_pmf_row(float(lam), k_t - 1)
        numer = rate_grid[i] * float(pmf @ jumps[:k_t])
        surv = gammaincc(np.arange(1, k_t + 1), float(lam))
        denom = float(surv @ jumps[:k_t]) + float(betas[k_t])
        if denom < 1e-280:
            warnings.warn(
                f"reliability underflow at t={grid_arr[i]}; hazard curve truncated",
                RuntimeWarning,
                stacklevel=2,
            )
            break
        ts.append(float(grid_arr[i]))
        vals.append(numer / denom)
    return HazardCurve(grid=np.array(ts), values=np.array(vals))


def ihra_check(
    beta: BetaSequence | Sequence[float], kmax: int | None = None
) -> OrderingVerdict:
    """Check that (beta_k)^(1/k) is non-increasing in k (aging-on-average).

    Returns a verdict with the first violating k when it fails; tolerance
    1e-12 on the compared roots.
    """
    values = beta.values if isinstance(beta, BetaSequence) else tuple(beta)
    if kmax is None:
        kmax = len(values) - 1
    if kmax < 2:
        raise ValueError("need kmax >= 2")
    if kmax > len(values) - 1:
        raise ValueError(f"beta sequence too short for kmax={kmax}")
    prev = values[1]
    for k in range(1, kmax):
        nxt = values[k + 1] ** (1.0 / (k + 1))
        if nxt > prev + _SLACK:
            return OrderingVerdict(relation="ihra", holds=False, witness=k)
        prev = nxt
    return OrderingVerdict(relation="ihra", holds=True, witness=None)


def ihr_ratio_profile(
    beta: BetaSequence | Sequence[float], kmax: int | None = None
) -> RatioProfile:
    """Consecutive ratios beta_{k+1}/beta_k for k = 0..kmax-1.

    ``first_increase`` is the smallest index i >= 1 with
    ratios[i] > ratios[i-1] (strictly, beyond 1e-12), i.e. the first place
    the conditional per-shock survival stops decreasing.
    """
    values = beta.values if isinstance(beta, BetaSequence) else tuple(beta)
    if kmax is None:
        kmax = len(values) - 1
    if kmax > len(values) - 1:
        raise ValueError(f"beta sequence too short for kmax={kmax}")
    if any(v <= 0.0 for v in values[:kmax]):
        raise ValueError("ratios need beta_k > 0 up to kmax")
    ratios = np.array([values[k + 1] / values[k] for k in range(kmax)])
    first_increase: int | None = None
    for i in range(1, len(ratios)):
        if ratios[i] > ratios[i - 1] + _SLACK:
            first_increase = i
            break
    return RatioProfile(
        ratios=ratios, non_increasing=first_increase is None, first_increase=first_increase
    )


def _pad_pmfs(a: Sequence[float], b: Sequence[float]) -> tuple[np.ndarray, np.ndarray]:
    a_arr = np.asarray(a, dtype=float)
    b_arr = np.asarray(b, dtype=float)
    for name, arr in (("a", a_arr), ("b", b_arr)):
        if np.any(arr < -1e-15):
            raise ValueError(f"{name} has negative entries")
        if arr.sum() > 1.0 + 1e-9:
            raise ValueError(f"{name} sums to more than 1")
    length = max(len(a_arr), len(b_arr))
    return (
        np.pad(a_arr, (0, length - len(a_arr))),
        np.pad(b_arr, (0, length - len(b_arr))),
    )


def order_check(a: Sequence[float], b: Sequence[float], relation: str) -> OrderingVerdict:
    """Check a <= b in the st, hr or lr order for pmfs on indices 1, 2, ...

    Mass missing from a sub-pmf (sum < 1) is treated as sitting beyond the
    listed support.  Witnesses are 1-based indices of the first violation.
    """
    if relation not in ("st", "hr", "lr"):
        raise ValueError(f"unknown relation {relation!r}")
    a_arr, b_arr = _pad_pmfs(a, b)
    surv_a = 1.0 - np.cumsum(a_arr)
    surv_b = 1.0 - np.cumsum(b_arr)

    if relation == "st":
        for i in range(len(a_arr)):
            if surv_a[i] > surv_b[i] + _SLACK:
                return OrderingVerdict("st", False, i + 1)
        return OrderingVerdict("st", True, None)

    if relation == "hr":
        # survival ratio b/a must be non-decreasing while a has mass left
        last = 1.0  # ratio at index 0 (both survivals are 1)
        for i in range(len(a_arr)):
            if surv_a[i] <= _SLACK:
                break
            ratio = surv_b[i] / surv_a[i]
            if ratio < last - _SLACK:
                return OrderingVerdict("hr", False, i + 1)
            last = max(last, ratio)
        return OrderingVerdict("hr", True, None)

    # lr: pointwise density ratio non-decreasing over the union of supports;
    # a zero in a with mass in b is legal only past the top of a's support
    last_ratio: float | None = None
    b_past_a = False
    for i in range(len(a_arr)):
        ai, bi = a_arr[i], b_arr[i]
        if ai <= 0.0 and bi <= 0.0:
            continue
        if ai <= 0.0:
            b_past_a = True
            continue
        if b_past_a:
            return OrderingVerdict("lr", False, i + 1)
        ratio = bi / ai
        if last_ratio is not None and ratio < last_ratio - _SLACK:
            return OrderingVerdict("lr", False, i + 1)
        last_ratio = ratio
    return OrderingVerdict("lr", True, None)


def tp2_check(matrix: Sequence[Sequence[float]]) -> TP2Verdict:
    """Check a non-negative kernel for total positivity of order 2.

    Scans every adjacent 2x2 minor (sufficient for strictly positive
    kernels): product differences must be >= -1e-12 times the local product
    scale.  Returns the first violating (row, col) when it fails.
    """
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] < 2 or m.shape[1] < 2:
        raise ValueError("need a 2-d matrix with at least two rows and columns")
    if np.any(m < 0):
        raise ValueError("kernel must be non-negative")
    main = m[:-1, :-1] * m[1:, 1:]
    anti = m[:-1, 1:] * m[1:, :-1]
    scale = np.maximum(np.maximum(main, anti), 1e-300)
    bad = main - anti < -1e-12 * scale
    if bad.any():
        i, j = np.argwhere(bad)[0]
        return TP2Verdict(holds=False, witness=(int(i), int(j)))
    return TP2Verdict(holds=True, witness=None)


def _scalar_shock_value(
    tail_values: Sequence[float], law: FirstArrivalLaw, damage: DamageModel, t: float
) -> float:
    lam = float(law.mvf(t))
    k_t = truncation_index(lam)
    pmf = _count_pmf_row(lam, k_t)
    betas = np.array([beta_general(tail_values, damage, k) for k in range(k_t + 1)])
    return float(pmf @ betas)


def default_grid(
    net_or_sig: Union[Network, SignatureVector],
    law: FirstArrivalLaw,
    damage: DamageModel | None = None,
    points: int = 200,
    floor: float = 1e-3,
    model: str = "shock",
) -> np.ndarray:
    """Evaluation grid [0, t_max] with t_max found by bisection.

    t_max is the time where the analytic reliability of the chosen model
    ("shock", "component" or "fatal") first drops below ``floor``; the grid
    is ``points`` equally spaced values.
    """
    if model == "shock":
        if damage is None:
            raise ValueError("shock model needs a damage model")
        sig = _tie_signature_of(net_or_sig)
        tail_values = tail(sig).as_floats()

        def value(t: float) -> float:
            return _scalar_shock_value(tail_values, law, damage, t)

    elif model in ("component", "fatal"):
        sig = net_or_sig
        if not isinstance(sig, SignatureVector):
            raise ValueError(f"{model} model needs an explicit signature")
        probs = np.array([float(p) for p in sig.probabilities])
        tail_arr = np.array(tail(sig).as_floats())

        def value(t: float) -> float:
            lam = float(law.mvf(t))
            if model == "fatal":
                return float(gammaincc(np.arange(1, sig.n + 1), lam) @ probs)
            return float(_count_pmf_row(lam, sig.n - 1) @ tail_arr)

    else:
        raise ValueError(f"unknown model {model!r}")

    hi = 1.0
    for _ in range(80):
        if value(hi) < floor:
            break
        hi *= 2.0
    else:
        raise ArithmeticError("could not bracket t_max; reliability does not decay?")
    lo = 0.0
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if value(mid) < floor:
            hi = mid
        else:
            lo = mid
    return np.linspace(0.0, hi, points)


@dataclass(frozen=True)
class ModelConfig:
    """One side of a network comparison: tie signature + arrival law + damage."""

    signature: SignatureVector
    law: FirstArrivalLaw
    damage: Binomial
    label: str = ""

    def __post_init__(self) -> None:
        if not isinstance(self.damage, Binomial):
            raise ValueError("comparisons support binomial damage only")


@dataclass(frozen=True)
class ComparisonReport:
    """Premise checks and observed conclusions for a two-network comparison."""

    grid: np.ndarray
    curve_1: ReliabilityCurve
    curve_2: ReliabilityCurve
    premise_p: bool
    premise_p_equal: bool
    premise_law_st: OrderingVerdict
    premise_law_equal: bool
    premise_sig_st: OrderingVerdict
    premise_sig_hr: OrderingVerdict
    premise_count_tp2: TP2Verdict
    st_predicted: bool
    st_observed: OrderingVerdict
    hr_predicted: bool
    hr_observed: OrderingVerdict
    curves_cross: bool

    def format(self) -> str:
        def yn(flag: bool) -> str:
            return "yes" if flag else "no"

        def verdict(v: OrderingVerdict) -> str:
            if v.holds:
                return "yes"
            return f"no (first violation at {v.witness})"

        lines = [
            "premise                              verdict",
            "-----------------------------------  -------",
            f"p1 >= p2                             {yn(self.premise_p)}",
            f"p1 == p2                             {yn(self.premise_p_equal)}",
            f"first-arrival st order (G1 <= G2)    {verdict(self.premise_law_st)}",
            f"identical arrival law                {yn(self.premise_law_equal)}",
            f"signature st order (s1 <= s2)        {verdict(self.premise_sig_st)}",
            f"signature hr order (s1 <= s2)        {verdict(self.premise_sig_hr)}",
            f"count pmf TP2                        {yn(self.premise_count_tp2.holds)}",
            "",
            "conclusion                           predicted  observed",
            "-----------------------------------  ---------  --------",
            f"lifetime st order (T1 <= T2)         {yn(self.st_predicted):9}  {verdict(self.st_observed)}",
            f"lifetime hr order (T1 <= T2)         {yn(self.hr_predicted):9}  {verdict(self.hr_observed)}",
            "",
            f"reliability curves cross: {yn(self.curves_cross)}",
        ]
        return "\n".join(lines)


def compare_networks(
    cfg_1: ModelConfig, cfg_2: ModelConfig, grid: Sequence[float] | None = None
) -> ComparisonReport:
    """Check ordering-theorem premises numerically and test the conclusions.

    Premises: per-shock failure probabilities ordered/equal, first-arrival
    survivals pointwise ordered/equal, signatures st/hr ordered, and the
    count pmf TP2.  Conclusions: pointwise dominance of the reliability
    curves (st) and monotone survival ratio (hr), each reported with the
    first violating grid time when false.
    """
    if grid is None:
        g1 = default_grid(cfg_1.signature, cfg_1.law, cfg_1.damage)
        g2 = default_grid(cfg_2.signature, cfg_2.law, cfg_2.damage)
        t_max = max(float(g1[-1]), float(g2[-1]))
        grid_arr = np.linspace(0.0, t_max, len(g1))
    else:
        grid_arr = _validate_grid(grid)

    curve_1 = reliability_shock_model(cfg_1.signature, cfg_1.law, cfg_1.damage, grid_arr)
    curve_2 = reliability_shock_model(cfg_2.signature, cfg_2.law, cfg_2.damage, grid_arr)

    p1, p2 = cfg_1.damage.p, cfg_2.damage.p
    premise_p = p1 >= p2
    premise_p_equal = p1 == p2

    g1_surv = np.asarray(cfg_1.law.survival_first(grid_arr), dtype=float)
    g2_surv = np.asarray(cfg_2.law.survival_first(grid_arr), dtype=float)
    law_bad = np.nonzero(g1_surv > g2_surv + _SLACK)[0]
    premise_law_st = OrderingVerdict(
        "st", len(law_bad) == 0, float(grid_arr[law_bad[0]]) if len(law_bad) else None
    )
    premise_law_equal = bool(np.max(np.abs(g1_surv - g2_surv)) <= _SLACK)

    s1 = [float(p) for p in cfg_1.signature.probabilities]
    s2 = [float(p) for p in cfg_2.signature.probabilities]
    premise_sig_st = order_check(s1, s2, "st")
    premise_sig_hr = order_check(s1, s2, "hr")

    lam_max = float(np.asarray(cfg_1.law.mvf(grid_arr[-1])))
    kcols = truncation_index(lam_max) + 1
    interior = grid_arr[grid_arr > 0]
    pmf_matrix = np.vstack(
        [
            _count_pmf_row(float(np.asarray(cfg_1.law.mvf(t))), kcols - 1)
            for t in interior
        ]
    )
    premise_count_tp2 = tp2_check(pmf_matrix)

    st_predicted = premise_p and premise_law_st.holds and premise_sig_st.holds
    hr_predicted = (
        premise_p_equal
        and premise_law_equal
        and premise_sig_hr.holds
        and premise_count_tp2.holds
    )

    tol = 1e-9
    st_bad = np.nonzero(curve_1.values > curve_2.values + tol)[0]
    st_observed = OrderingVerdict(
        "st", len(st_bad) == 0, float(grid_arr[st_bad[0]]) if len(st_bad) else None
    )

    hr_holds = True
    hr_witness: float | None = None
    last_ratio = -math.inf
    for i in range(len(grid_arr)):
        v1, v2 = float(curve_1.values[i]), float(curve_2.values[i])
        if v1 <= 1e-12:
            break
        ratio = v2 / v1
        if ratio < last_ratio - 1e-9:
            hr_holds = False
            hr_witness = float(grid_arr[i])
            break
        last_ratio = max(last_ratio, ratio)
    hr_observed = OrderingVerdict("hr", hr_holds, hr_witness)

    diff = curve_2.values - curve_1.values
    signs = np.sign(diff[np.abs(diff) > tol])
    curves_cross = bool(len(signs) > 1 and np.any(signs[:-1] != signs[1:]))

    return ComparisonReport(
        grid=grid_arr,
        curve_1=curve_1,
        curve_2=curve_2,
        premise_p=premise_p,
        premise_p_equal=premise_p_equal,
        premise_law_st=premise_law_st,
        premise_law_equal=premise_law_equal,
        premise_sig_st=premise_sig_st,
        premise_sig_hr=premise_sig_hr,
        premise_count_tp2=premise_count_tp2,
        st_predicted=st_predicted,
        st_observed=st_observed,
        hr_predicted=hr_predicted,
        hr_observed=hr_observed,
        curves_cross=curves_cross,
    )
