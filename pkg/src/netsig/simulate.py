"""Event-driven Monte Carlo oracle for the analytic reliability formulas.

Two simulation semantics are provided because they genuinely differ:

* ``model_faithful`` draws the killing failure count M from the tie
  signature (or the killing shock index from the fatal signature),
  independently of the per-shock damage draws, exactly as the mixture
  formulas assume.  Its empirical curve must match the analytic shock-model
  curve for the same signature.

* ``mechanistic`` simulates the physical story on the network itself: each
  shock fails every surviving link independently with probability p and the
  network dies when the failed set first becomes a cut.  Under this story
  the killing count and the damage sizes are *not* independent, so on
  non-series networks the curve matches the classical-tail mixture
  (independent link states), not the tie-signature mixture.  Both targets
  are exposed by the analysis module; the gap between them is a real model
  property, not an estimator error.

Shock arrival times are generated by inversion: the k-th arrival is
L^{-1}(E_1 + .. + E_k) with unit exponentials E_i.  Trials are simulated in
fixed blocks of ``BLOCK_TRIALS``; each block draws from its own generator
seeded by (seed, block index), so results are reproducible bit-for-bit and
independent of how blocks are scheduled across workers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .network import Network, up_table
from .reliability import ReliabilityCurve, _validate_grid
from .shocks import Binomial, DamageModel, Fatal, FirstArrivalLaw, OnePerShock
from .signatures import SignatureVector, fatal_signature, t_signature

__all__ = [
    "BLOCK_TRIALS",
    "SimConfig",
    "mc_reliability_curve",
    "sample_nhpp_arrivals",
    "simulate_lifetime",
]

BLOCK_TRIALS = 8192


@dataclass(frozen=True)
class SimConfig:
    """Simulation recipe: model inputs, semantics, trial count, seed."""

    law: FirstArrivalLaw
    damage: DamageModel
    mode: str
    trials: int
    seed: int
    network: Network | None = None
    signature: SignatureVector | None = None

    def __post_init__(self) -> None:
        if self.mode not in ("model_faithful", "mechanistic"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.mode == "mechanistic":
            if self.network is None:
                raise ValueError("mechanistic mode requires a network")
            if not isinstance(self.damage, Binomial):
                raise ValueError("mechanistic mode simulates binomial damage only")
        else:
            if self.signature is None and self.network is None:
                raise ValueError("model_faithful mode requires a signature or network")

    def effective_signature(self) -> SignatureVector:
        """The signature driving model-faithful draws (derived if absent)."""
        want = "fatal" if isinstance(self.damage, Fatal) else "tie"
        if self.signature is not None:
            if self.signature.kind != want:
                raise ValueError(
                    f"model_faithful with this damage needs a {want} signature, "
                    f"got {self.signature.kind}"
                )
            return self.signature
        assert self.network is not None
        if want == "fatal":
            return fatal_signature(self.network)
        return t_signature(self.network)


def sample_nhpp_arrivals(
    law: FirstArrivalLaw, horizon: float, rng: np.random.Generator
) -> np.ndarray:
    """Arrival times up to ``horizon``, by inversion of the mean value function."""
    if horizon <= 0:
        raise ValueError("horizon must be > 0")
    lam_max = float(np.asarray(law.mvf(horizon)))
    sums: list[np.ndarray] = []
    total = 0.0
    while total <= lam_max:
        chunk = np.cumsum(rng.exponential(size=max(16, int(lam_max) + 8))) + total
        sums.append(chunk)
        total = float(chunk[-1])
    cum = np.concatenate(sums)
    cum = cum[cum <= lam_max]
    return np.asarray(law.inverse_mvf(cum), dtype=float).reshape(-1)


def _draw_indices(probs: np.ndarray, size: int, rng: np.random.Generator) -> np.ndarray:
    # categorical draw of 1-based signature indices
    return rng.choice(len(probs), size=size, p=probs) + 1


def _batch_model_faithful(
    cfg: SimConfig, size: int, rng: np.random.Generator
) -> np.ndarray:
    sig = cfg.effective_signature()
    probs = np.array([float(p) for p in sig.probabilities])
    probs = probs / probs.sum()
    n = sig.n
    index = _draw_indices(probs, size, rng)

    if isinstance(cfg.damage, (OnePerShock, Fatal)):
        # lifetime is exactly the index-th arrival: invert an Erlang sum
        return np.asarray(cfg.law.inverse_mvf(rng.gamma(shape=index)), dtype=float)

    p = cfg.damage.p
    lifetimes = np.full(size, np.inf)
    failed = np.zeros(size, dtype=np.int64)
    cum_exp = np.zeros(size)
    active = np.arange(size)
    while active.size:
        cum_exp[active] += rng.exponential(size=active.size)
        failed[active] += rng.binomial(n - failed[active], p)
        arrived = np.asarray(cfg.law.inverse_mvf(cum_exp[active]), dtype=float)
        done = failed[active] >= index[active]
        starved = ~np.isfinite(arrived)  # plateaued mean value: no more shocks
        lifetimes[active[done & ~starved]] = arrived[done & ~starved]
        active = active[~done & ~starved]
    return lifetimes


def _batch_mechanistic(cfg: SimConfig, size: int, rng: np.random.Generator) -> np.ndarray:
    net = cfg.network
    assert net is not None and isinstance(cfg.damage, Binomial)
    n = net.n
    table = np.array(up_table(net), dtype=bool)
    bit_weights = 1 << np.arange(n)
    p = cfg.damage.p

    lifetimes = np.full(size, np.inf)
    alive_links = np.ones((size, n), dtype=bool)
    cum_exp = np.zeros(size)
    active = np.arange(size)
    while active.size:
        cum_exp[active] += rng.exponential(size=active.size)
        hits = rng.random((active.size, n)) < p
        alive_links[active] &= ~hits
        masks = (~alive_links[active]) @ bit_weights
        down = ~table[masks]
        arrived = np.asarray(cfg.law.inverse_mvf(cum_exp[active]), dtype=float)
        starved = ~np.isfinite(arrived)
        lifetimes[active[down & ~starved]] = arrived[down & ~starved]
        active = active[~down & ~starved]
    return lifetimes


def _simulate_block(cfg: SimConfig, size: int, rng: np.random.Generator) -> np.ndarray:
    if cfg.mode == "mechanistic":
        return _batch_mechanistic(cfg, size, rng)
    return _batch_model_faithful(cfg, size, rng)


def simulate_lifetime(cfg: SimConfig, rng: np.random.Generator) -> float:
    """One lifetime draw under the configured semantics."""
    return float(_simulate_block(cfg, 1, rng)[0])


def simulate_lifetimes(cfg: SimConfig) -> np.ndarray:
    """All ``cfg.trials`` lifetimes, in trial order.

    Trials are partitioned into blocks of ``BLOCK_TRIALS``; block b draws
    from ``default_rng((seed, b))``, making the result independent of block
    scheduling.
    """
    out = np.empty(cfg.trials)
    start = 0
    block = 0
    while start < cfg.trials:
        size = min(BLOCK_TRIALS, cfg.trials - start)
        rng = np.random.default_rng((cfg.seed, block))
        out[start : start + size] = _simulate_block(cfg, size, rng)
        start += size
        block += 1
    return out


def mc_reliability_curve(cfg: SimConfig, grid) -> ReliabilityCurve:
    """Empirical survival curve with per-point binomial standard errors."""
    grid_arr = _validate_grid(grid)
    lifetimes = np.sort(simulate_lifetimes(cfg))
    survivors = cfg.trials - np.searchsorted(lifetimes, grid_arr, side="right")
    values = survivors / cfg.trials
    stderr = np.sqrt(values * (1.0 - values) / cfg.trials)
    return ReliabilityCurve(
        grid=grid_arr, values=values, stderr=stderr, truncation_bound=0.0
    )
