"""Shock-arrival laws, per-shock damage models, and survival-weight sequences.

Arrival laws are counting processes with independent Poisson increments,
specified through their mean value function L(t) = E[number of shocks by t];
the time to the first shock then has survival exp(-L(t)).  Supported
families:

* ``Exponential(rate)``        L(t) = rate * t
* ``Weibull(shape, scale)``    L(t) = (t / scale) ** shape
* ``LinearHazard(a, b)``       hazard a + 2bt, so L(t) = a t + b t**2
* ``PiecewiseMVF(knots)``      linear interpolation of tabulated (t, L) pairs

Damage models give the law of the number of components failing per shock:
``Binomial(p)`` (every surviving component fails independently with
probability p), ``OnePerShock`` (exactly one failure per shock) and
``Fatal`` (at least one failure per shock; handled by its own signature).

The survival weights beta_k = P(network survives k shocks) couple a tie
signature to the shock count.  Under binomial damage they have two
equivalent closed forms, kept as independent implementations:

    beta*_k = sum_{j=0..n-1} tail_j C(n,j) (1 - q^k)^j q^(k(n-j))
    beta*_k = sum_{j=1..n} s_j * (1 - I(j, n-j+1; 1 - q^k))

where I is the regularized incomplete beta function.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from math import comb
from typing import Sequence, Union

import numpy as np
from scipy.special import betainc, gammainc, gammaincc, gammaln

from .signatures import SignatureVector, TailVector

__all__ = [
    "BetaSequence",
    "Binomial",
    "DamageModel",
    "Exponential",
    "Fatal",
    "FirstArrivalLaw",
    "LinearHazard",
    "OnePerShock",
    "PiecewiseMVF",
    "ShockSignature",
    "Weibull",
    "arrival_survival",
    "beta_general",
    "beta_sequence",
    "beta_star",
    "beta_star_incbeta",
    "count_pmf",
    "cumulative_damage_pmf",
    "parse_damage",
    "parse_law",
    "st_signature",
    "truncation_index",
]

ArrayLike = Union[float, np.ndarray]

# Poisson tail mass accepted when truncating infinite shock-count mixtures.
TRUNCATION_EPS = 1e-12


class FirstArrivalLaw(ABC):
    """Counting-process law defined by its mean value function."""

    @abstractmethod
    def mvf(self, t: ArrayLike) -> ArrayLike:
        """Mean value function L(t); L(0) = 0, non-decreasing, continuous."""

    @abstractmethod
    def rate(self, t: ArrayLike) -> ArrayLike:
        """Instantaneous rate L'(t)."""

    @abstractmethod
    def inverse_mvf(self, u: ArrayLike) -> ArrayLike:
        """Inverse of the mean value function (smallest t with L(t) >= u)."""

    def survival_first(self, t: ArrayLike) -> ArrayLike:
        """Survival of the first-arrival time: exp(-L(t))."""
        return np.exp(-np.asarray(self.mvf(t), dtype=float))


@dataclass(frozen=True)
class Exponential(FirstArrivalLaw):
    """Constant-rate arrivals: L(t) = rate * t."""

    rate_constant: float

    def __post_init__(self) -> None:
        if self.rate_constant <= 0:
            raise ValueError("rate must be > 0")

    def mvf(self, t):
        return self.rate_constant * np.asarray(t, dtype=float)

    def rate(self, t):
        return np.full_like(np.asarray(t, dtype=float), self.rate_constant)

    def inverse_mvf(self, u):
        return np.asarray(u, dtype=float) / self.rate_constant


@dataclass(frozen=True)
class Weibull(FirstArrivalLaw):
    """Power-law mean value function: L(t) = (t / scale) ** shape."""

    shape: float
    scale: float

    def __post_init__(self) -> None:
        if self.shape <= 0 or self.scale <= 0:
            raise ValueError("shape and scale must be > 0")

    def mvf(self, t):
        return (np.asarray(t, dtype=float) / self.scale) ** self.shape

    def rate(self, t):
        t = np.asarray(t, dtype=float)
        with np.errstate(divide="ignore"):
            return (self.shape / self.scale) * (t / self.scale) ** (self.shape - 1.0)

    def inverse_mvf(self, u):
        return self.scale * np.asarray(u, dtype=float) ** (1.0 / self.shape)


@dataclass(frozen=True)
class LinearHazard(FirstArrivalLaw):
    """Linearly increasing rate a + 2bt, so L(t) = a t + b t**2.

    With (a, b) = (1, 1) the first-arrival survival is exp(-t - t**2).
    """

    a: float
    b: float

    def __post_init__(self) -> None:
        if self.a < 0 or self.b < 0 or self.a + self.b <= 0:
            raise ValueError("need a >= 0, b >= 0, a + b > 0")

    def mvf(self, t):
        t = np.asarray(t, dtype=float)
        return self.a * t + self.b * t * t

    def rate(self, t):
        return self.a + 2.0 * self.b * np.asarray(t, dtype=float)

    def inverse_mvf(self, u):
        u = np.asarray(u, dtype=float)
        if self.b == 0:
            return u / self.a
        return (np.sqrt(self.a * self.a + 4.0 * self.b * u) - self.a) / (2.0 * self.b)


@dataclass(frozen=True)
class PiecewiseMVF(FirstArrivalLaw):
    """Tabulated mean value function, linear between knots.

    Knots are (t, L) pairs starting at (0, 0) with non-decreasing L;
    beyond the last knot L continues with the final segment's slope.
    """

    knots: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        if len(self.knots) < 2:
            raise ValueError("need at least two knots")
        ts = [t for t, _ in self.knots]
        ls = [l for _, l in self.knots]
        if ts[0] != 0.0 or ls[0] != 0.0:
            raise ValueError("mean value table must start at (0, 0)")
        if any(t2 <= t1 for t1, t2 in zip(ts, ts[1:])):
            raise ValueError("knot times must be strictly increasing")
        if any(l2 < l1 for l1, l2 in zip(ls, ls[1:])):
            raise ValueError("mean values must be non-decreasing")

    def _arrays(self) -> tuple[np.ndarray, np.ndarray]:
        ts = np.array([t for t, _ in self.knots], dtype=float)
        ls = np.array([l for _, l in self.knots], dtype=float)
        return ts, ls

    def _last_slope(self) -> float:
        (t1, l1), (t2, l2) = self.knots[-2], self.knots[-1]
        return (l2 - l1) / (t2 - t1)

    def mvf(self, t):
        ts, ls = self._arrays()
        t = np.asarray(t, dtype=float)
        base = np.interp(t, ts, ls)
        overhang = np.maximum(t - ts[-1], 0.0) * self._last_slope()
        return base + overhang

    def rate(self, t):
        ts, ls = self._arrays()
        t = np.asarray(t, dtype=float)
        slopes = np.diff(ls) / np.diff(ts)
        idx = np.clip(np.searchsorted(ts, t, side="right") - 1, 0, len(slopes) - 1)
        return slopes[idx]

    def inverse_mvf(self, u):
        # bisection against mvf; flat segments make an analytic inverse
        # ambiguous, so the smallest t with L(t) >= u is returned
        def invert_one(target: float) -> float:
            if target <= 0.0:
                return 0.0
            slope = self._last_slope()
            t_last, l_last = self.knots[-1]
            if target > l_last:
                if slope <= 0.0:
                    return math.inf
                return t_last + (target - l_last) / slope
            lo, hi = 0.0, t_last
            while hi - lo > 1e-10 * max(1.0, hi):
                mid = 0.5 * (lo + hi)
                if float(self.mvf(mid)) >= target:
                    hi = mid
                else:
                    lo = mid
            return hi

        u = np.asarray(u, dtype=float)
        if u.ndim == 0:
            return invert_one(float(u))
        return np.array([invert_one(x) for x in u])


@dataclass(frozen=True)
class Binomial:
    """Every surviving component fails independently with probability p.

    p = 1 is accepted as the degenerate one-shot boundary (q = 0); the CLI
    restricts itself to the open interval.
    """

    p: float

    def __post_init__(self) -> None:
        if not 0.0 < self.p <= 1.0:
            raise ValueError("p must lie in (0, 1]")

    @property
    def q(self) -> float:
        return 1.0 - self.p


@dataclass(frozen=True)
class OnePerShock:
    """Exactly one surviving component fails at each shock."""


@dataclass(frozen=True)
class Fatal:
    """Every shock fails at least one component (fatal-shock model)."""


DamageModel = Union[Binomial, OnePerShock, Fatal]


def _poisson_logpmf(lam: float, k: ArrayLike) -> np.ndarray:
    k = np.asarray(k, dtype=float)
    return k * math.log(lam) - lam - gammaln(k + 1.0)


def count_pmf(law: FirstArrivalLaw, t: float, k: int) -> float:
    """P(shock count at time t equals k) = exp(-L) L**k / k!.

    Computed in log space so large mean values do not underflow.
    """
    if t < 0:
        raise ValueError("t must be >= 0")
    if k < 0:
        raise ValueError("k must be >= 0")
    lam = float(law.mvf(t))
    if lam == 0.0:
        return 1.0 if k == 0 else 0.0
    return float(np.exp(_poisson_logpmf(lam, k)))


def _count_pmf_row(lam: float, kmax: int) -> np.ndarray:
    # pmf over k = 0..kmax for a fixed mean, evaluated in log space
    if lam == 0.0:
        row = np.zeros(kmax + 1)
        row[0] = 1.0
        return row
    return np.exp(_poisson_logpmf(lam, np.arange(kmax + 1)))


def arrival_survival(law: FirstArrivalLaw, t: float, k: int) -> float:
    """P(k-th shock arrives after t) = P(count at t <= k - 1)."""
    if t < 0:
        raise ValueError("t must be >= 0")
    if k < 1:
        raise ValueError("k must be >= 1")
    lam = float(law.mvf(t))
    # Poisson cdf at k-1 equals the regularized upper incomplete gamma at k
    return float(gammaincc(k, lam))


def truncation_index(lam: float, eps: float = TRUNCATION_EPS) -> int:
    """Smallest K with P(Poisson(lam) > K) < eps."""
    if lam < 0:
        raise ValueError("lam must be >= 0")
    if lam == 0.0:
        return 0
    hi = max(8, int(lam + 12.0 * math.sqrt(lam + 1.0) + 30.0))
    while float(gammainc(hi + 1, lam)) >= eps:
        hi *= 2
    lo = 0
    while lo < hi:
        mid = (lo + hi) // 2
        if float(gammainc(mid + 1, lam)) < eps:
            hi = mid
        else:
            lo = mid + 1
    return lo


def cumulative_damage_pmf(n: int, q: float, k: int, j: int) -> float:
    """P(exactly j of n components have failed after k binomial shocks).

    Each component survives one shock with probability q independently, so
    after k shocks it is still alive with probability q**k:
    C(n,j) (1 - q^k)^j q^(k(n-j)).
    """
    if not 0 <= j <= n:
        raise ValueError(f"j must lie in 0..{n}, got {j}")
    if k < 1:
        raise ValueError("k must be >= 1")
    alive = q**k
    return comb(n, j) * (1.0 - alive) ** j * alive ** (n - j)


def _tail_floats(sig_tail: TailVector | Sequence[float]) -> np.ndarray:
    if isinstance(sig_tail, TailVector):
        return np.array(sig_tail.as_floats())
    return np.asarray(sig_tail, dtype=float)


def beta_star(sig_tail: TailVector | Sequence[float], n: int, q: float, k: int) -> float:
    """Survival weight after k binomial-damage shocks (sum form).

    beta*_0 = 1; for k >= 1 the failed-count law of
    :func:`cumulative_damage_pmf` is mixed against the signature tail.
    """
    tail_values = _tail_floats(sig_tail)
    if len(tail_values) != n:
        raise ValueError(f"tail length {len(tail_values)} != n = {n}")
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return 1.0
    alive = q**k
    js = np.arange(n)
    terms = [
        tail_values[j] * comb(n, j) * (1.0 - alive) ** j * alive ** (n - j)
        for j in js
    ]
    return float(sum(terms))


def beta_star_incbeta(sig: SignatureVector, q: float, k: int) -> float:
    """Survival weight after k binomial shocks via the incomplete-beta form.

    Independent of :func:`beta_star`; the two must agree to ~1e-12.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return 1.0
    n = sig.n
    x = 1.0 - q**k
    total = 0.0
    for j, s in enumerate(sig.probabilities, start=1):
        if s == 0:
            continue
        total += float(s) * (1.0 - float(betainc(j, n - j + 1, x)))
    return total


def beta_general(
    sig_tail: TailVector | Sequence[float], damage: DamageModel, k: int
) -> float:
    """Survival weight after k shocks for binomial or one-per-shock damage."""
    if isinstance(damage, Fatal):
        raise ValueError(
            "fatal damage has its own representation; use the fatal signature"
        )
    tail_values = _tail_floats(sig_tail)
    n = len(tail_values)
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return 1.0
    if isinstance(damage, Binomial):
        return beta_star(tail_values, n, damage.q, k)
    # one failure per shock: after k shocks exactly k components are down
    return float(tail_values[k]) if k < n else 0.0


@dataclass(frozen=True)
class BetaSequence:
    """Survival weights beta_0..beta_K with truncation accounting.

    ``tail_bound`` is beta_K itself: the total shock-signature mass beyond
    the truncation index.
    """

    values: tuple[float, ...]
    truncation_index: int
    tail_bound: float

    def __post_init__(self) -> None:
        if not self.values or abs(self.values[0] - 1.0) > 1e-12:
            raise ValueError("beta_0 must be 1")
        if len(self.values) != self.truncation_index + 1:
            raise ValueError("values must cover k = 0..truncation_index")
        v = np.asarray(self.values)
        if np.any(v < -1e-12) or np.any(v > 1.0 + 1e-12):
            raise ValueError("beta values must lie in [0, 1]")
        if np.any(np.diff(v) > 1e-12):
            raise ValueError("beta values must be non-increasing")


def beta_sequence(
    sig_tail: TailVector | Sequence[float], damage: DamageModel, kmax: int
) -> BetaSequence:
    """Evaluate the survival weights for k = 0..kmax."""
    values = tuple(beta_general(sig_tail, damage, k) for k in range(kmax + 1))
    return BetaSequence(values=values, truncation_index=kmax, tail_bound=values[-1])


@dataclass(frozen=True)
class ShockSignature:
    """Shock-index failure law: values[k-1] = P(dies exactly at shock k).

    ``tail`` is the mass beyond the truncation index (1 - sum of values).
    """

    values: tuple[float, ...]
    tail: float


def st_signature(beta: BetaSequence | Sequence[float]) -> ShockSignature:
    """Successive differences b_k = beta_{k-1} - beta_k, k = 1..K."""
    values = beta.values if isinstance(beta, BetaSequence) else tuple(beta)
    if not values or abs(values[0] - 1.0) > 1e-12:
        raise ValueError("beta_0 must be 1")
    diffs = []
    for prev, cur in zip(values, values[1:]):
        d = prev - cur
        if d < -1e-12:
            raise ValueError("beta sequence is not non-increasing")
        diffs.append(max(d, 0.0))
    return ShockSignature(values=tuple(diffs), tail=float(values[-1]))


def parse_law(spec: str) -> FirstArrivalLaw:
    """Build an arrival law from a CLI specification string.

    Formats: ``exp:rate=R``, ``weibull:shape=K,scale=S``, ``linhaz:a=A,b=B``
    (rate a + 2bt), ``mvf:file=PATH`` (CSV of t,L pairs).
    """
    head, _, rest = spec.partition(":")
    params: dict[str, str] = {}
    if rest:
        for item in rest.split(","):
            key, eq, value = item.partition("=")
            if not eq:
                raise ValueError(f"malformed law parameter {item!r} in {spec!r}")
            params[key.strip()] = value.strip()
    try:
        if head == "exp":
            return Exponential(rate_constant=float(params.pop("rate")))
        if head == "weibull":
            return Weibull(shape=float(params.pop("shape")), scale=float(params.pop("scale")))
        if head == "linhaz":
            return LinearHazard(a=float(params.pop("a")), b=float(params.pop("b")))
        if head == "mvf":
            path = params.pop("file")
            table = np.loadtxt(path, delimiter=",", comments="#", ndmin=2)
            knots = tuple((float(t), float(l)) for t, l in table)
            return PiecewiseMVF(knots=knots)
    except KeyError as exc:
        raise ValueError(f"law {spec!r} is missing parameter {exc.args[0]!r}") from None
    raise ValueError(
        f"unknown law {spec!r}; expected exp:, weibull:, linhaz: or mvf:"
    )


def parse_damage(spec: str) -> DamageModel:
    """Build a damage model from ``binomial:p=P``, ``oneper`` or ``fatal``."""
    head, _, rest = spec.partition(":")
    if head == "binomial":
        key, eq, value = rest.partition("=")
        if key.strip() != "p" or not eq:
            raise ValueError(f"binomial damage needs p=..., got {spec!r}")
        p = float(value)
        if not 0.0 < p < 1.0:
            raise ValueError("p must lie strictly between 0 and 1")
        return Binomial(p=p)
    if head == "oneper" and not rest:
        return OnePerShock()
    if head == "fatal" and not rest:
        return Fatal()
    raise ValueError(f"unknown damage model {spec!r}")
