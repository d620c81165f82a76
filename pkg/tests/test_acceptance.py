"""Acceptance gate: one test per release criterion, each printing PASS/FAIL.

Run as ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines alongside the pytest verdicts.

Criteria 2 and 6 pin externally supplied reference values that exact
enumeration disproves (details printed by the tests and summarized in the
README); they fail deliberately instead of being weakened.
"""

import math
import random
import time
from fractions import Fraction
from itertools import combinations

import numpy as np

from netsig.network import is_up
from netsig.partitions import count_ordered_partitions, enumerate_ordered_partitions
from netsig.reliability import (
    ihr_ratio_profile,
    ihra_check,
    order_check,
    reliability_fatal,
    reliability_shock_model,
    tp2_check,
)
from netsig.shocks import (
    Binomial,
    Exponential,
    Fatal,
    LinearHazard,
    OnePerShock,
    Weibull,
    _count_pmf_row,
    beta_sequence,
    beta_star,
    beta_star_incbeta,
    truncation_index,
)
from netsig.signatures import (
    classical_signature,
    death_number,
    fatal_signature,
    killing_shock_index,
    t_signature,
    tail,
)
from netsig.simulate import SimConfig, mc_reliability_curve

from conftest import make_parallel_net, make_random_net, make_series_net
from test_signatures import DEATH_NUMBERS, KILLING_INDICES

F = Fraction
EXP1 = Exponential(rate_constant=1.0)
WEI21 = Weibull(shape=2.0, scale=1.0)
LIN11 = LinearHazard(a=1.0, b=1.0)
ALL_LAWS = (EXP1, WEI21, LIN11)


def _report(number: int, ok: bool, text: str) -> None:
    print(f"ACCEPTANCE {number:2d}: {'PASS' if ok else 'FAIL'} - {text}")


def test_criterion_01_exact_signatures_and_tables(three_link_net):
    start = time.perf_counter()
    tie = t_signature(three_link_net).probabilities
    classical = classical_signature(three_link_net).probabilities
    fatal = fatal_signature(three_link_net).probabilities
    deaths = {pi: death_number(three_link_net, pi) for pi in enumerate_ordered_partitions(3)}
    killings = {pi: killing_shock_index(three_link_net, pi) for pi in deaths}
    elapsed = time.perf_counter() - start

    ok = (
        tie == (F(6, 13), F(7, 13), F(0))
        and classical == (F(1, 3), F(2, 3), F(0))
        and fatal == (F(7, 13), F(6, 13), F(0))
        and deaths == DEATH_NUMBERS
        and killings == KILLING_INDICES
        and elapsed < 1.0
    )
    _report(1, ok, f"3-link exact signatures + 13-row tables ({elapsed * 1e3:.0f} ms)")
    assert tie == (F(6, 13), F(7, 13), F(0))
    assert classical == (F(1, 3), F(2, 3), F(0))
    assert fatal == (F(7, 13), F(6, 13), F(0))
    assert deaths == DEATH_NUMBERS
    assert killings == KILLING_INDICES
    assert elapsed < 1.0


def test_criterion_02_bridge_tie_signature(bridge_net):
    start = time.perf_counter()
    tie = t_signature(bridge_net).probabilities
    elapsed = time.perf_counter() - start
    required = (F(0), F(77, 270), F(154, 270), F(39, 270), F(0))
    ok = tie == required and elapsed < 1.0
    _report(2, ok, f"bridge tie signature equals the reference vector ({elapsed * 1e3:.0f} ms)")
    if not ok:
        print(
            "             note: enumeration of all 541 ordered partitions"
            " (cross-checked partition-by-partition against the"
            " linear-extension oracle) gives (0, 154/541, 309/541, 78/541, 0)."
            " The reference vector reduces to counts (154, 308, 78) over 540,"
            " one 3-block partition short of the full 541; since 541 is prime,"
            " no uniform enumeration can yield denominator 270."
        )
    assert elapsed < 1.0
    assert tie == required


def test_criterion_03_partition_counts():
    expected = [1, 3, 13, 75, 541]

    def by_recurrence(n: int) -> int:
        values = [1]
        for m in range(1, n + 1):
            values.append(
                sum(math.comb(m, k) * values[m - k] for k in range(1, m + 1))
            )
        return values[n]

    closed = [count_ordered_partitions(n) for n in range(1, 6)]
    recur = [by_recurrence(n) for n in range(1, 6)]
    enum = [sum(1 for _ in enumerate_ordered_partitions(n)) for n in range(1, 6)]
    ok = closed == expected and recur == expected and enum == expected
    _report(3, ok, "ordered-partition counts 1,3,13,75,541 by three routes")
    assert closed == expected
    assert recur == expected
    assert enum == expected


def test_criterion_04_series_closed_form():
    worst = 0.0
    from netsig.reliability import default_grid

    for n in (1, 2, 3):
        sig = t_signature(make_series_net(n))
        for p in (0.1, 0.5):
            q = 1.0 - p
            for law in ALL_LAWS:
                grid = default_grid(sig, law, Binomial(p=p), points=200)
                curve = reliability_shock_model(sig, law, Binomial(p=p), grid)
                lam = np.asarray(law.mvf(grid), dtype=float)
                target = np.exp(-lam * (1.0 - q**n))
                worst = max(worst, float(np.max(np.abs(curve.values - target))))
    ok = worst < 1e-10
    _report(4, ok, f"series reliability matches the closed form (max err {worst:.2e})")
    assert worst < 1e-10


def test_criterion_05_dual_formula_agreement(three_link_net, bridge_net):
    rng = random.Random(1234)
    fixtures = [
        three_link_net,
        bridge_net,
        make_series_net(2),
        make_series_net(6),
        make_parallel_net(4),
        make_random_net(rng, 5),
        make_random_net(rng, 6),
    ]
    qs = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9]

    worst_beta = 0.0
    for net in fixtures:
        sig = t_signature(net)
        sig_tail = tail(sig)
        for q in qs:
            for k in range(0, 101):
                a = beta_star(sig_tail, net.n, q, k)
                b = beta_star_incbeta(sig, q, k)
                worst_beta = max(worst_beta, abs(a - b))

    # count mixture vs arrival mixture, recomputed here independently of the
    # internal consistency assertion
    worst_mix = 0.0
    grid = np.linspace(0.0, 4.0, 50)
    for net in (three_link_net, bridge_net):
        sig_tail = tail(t_signature(net))
        for law in ALL_LAWS:
            for damage in (Binomial(p=0.3), OnePerShock()):
                from netsig.shocks import beta_general
                from scipy.special import gammaincc

                for t in grid:
                    lam = float(np.asarray(law.mvf(t)))
                    k_t = truncation_index(lam)
                    betas = np.array(
                        [beta_general(sig_tail, damage, k) for k in range(k_t + 1)]
                    )
                    pmf = _count_pmf_row(lam, k_t)
                    count_val = float(pmf @ betas)
                    jumps = betas[:-1] - betas[1:]
                    surv = gammaincc(np.arange(1, k_t + 1), lam)
                    arrival_val = float(surv @ jumps) + float(betas[k_t])
                    worst_mix = max(worst_mix, abs(count_val - arrival_val))

    # the two fatal-shock representations
    worst_fatal = 0.0
    from scipy.special import gammaincc

    for net in (three_link_net, bridge_net, make_series_net(3)):
        sig = fatal_signature(net)
        probs = np.array([float(x) for x in sig.probabilities])
        tails = np.array(tail(sig).as_floats())
        for law in ALL_LAWS:
            for t in grid:
                lam = float(np.asarray(law.mvf(t)))
                arrival = float(gammaincc(np.arange(1, net.n + 1), lam) @ probs)
                count = float(_count_pmf_row(lam, net.n - 1) @ tails)
                worst_fatal = max(worst_fatal, abs(arrival - count))

    ok = worst_beta < 1e-12 and worst_mix < 1e-11 and worst_fatal < 1e-12
    _report(
        5,
        ok,
        f"dual formulas agree (beta {worst_beta:.1e}, mixtures {worst_mix:.1e}, "
        f"fatal {worst_fatal:.1e})",
    )
    assert worst_beta < 1e-12
    assert worst_mix < 1e-11  # 10 x truncation bound
    assert worst_fatal < 1e-12


def test_criterion_06_ihra(three_link_net, bridge_net):
    qs = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9]

    def violations(nets):
        found = []
        for net in nets:
            sig_tail = tail(t_signature(net))
            for q in qs:
                betas = beta_sequence(sig_tail, Binomial(p=1.0 - q), 51)
                verdict = ihra_check(betas, 50)
                if not verdict.holds:
                    found.append((net.endpoints, sorted(net.terminals), q, verdict.witness))
        return found

    named = [bridge_net, three_link_net, make_series_net(3), make_parallel_net(3)]
    named_failures = violations(named)

    rng = random.Random(20240601)
    random_nets = [make_random_net(rng, rng.choice([5, 6])) for _ in range(20)]
    random_failures = violations(random_nets)

    ok = not named_failures and not random_failures
    _report(
        6,
        ok,
        "survival-weight IHRA on named fixtures and 20 random 5-6 link networks",
    )
    if random_failures and not named_failures:
        eps, terms, q, k = random_failures[0]
        print(
            "             note: the named fixtures all satisfy the IHRA root"
            " inequality, but generic networks need not. First random"
            f" counterexample: links {eps}, terminals {terms}, q={q}, root"
            f" comparison fails at k={k} (confirmed in exact rational"
            " arithmetic). Minimal hand-checkable case: one relevant link"
            " plus one irrelevant link gives tie vector (2/3, 1/3) and"
            " beta_1^2 - beta_2 = -2 q^2 (1-q)^2 / 9 < 0 for every q in"
            " (0,1), so the claimed guarantee fails at k=1 there."
        )
    assert not named_failures, named_failures[:3]
    assert not random_failures, random_failures[:3]


def test_criterion_07_bridge_not_ihr(bridge_net):
    sig_tail = tail(t_signature(bridge_net))
    betas = beta_sequence(sig_tail, Binomial(p=0.5), 31)
    profile = ihr_ratio_profile(betas, 30)
    ok = not profile.non_increasing and profile.first_increase is not None
    _report(
        7,
        ok,
        f"bridge q=0.5 weight ratio strictly increases at index "
        f"{profile.first_increase}",
    )
    assert not profile.non_increasing
    assert profile.first_increase is not None and profile.first_increase <= 30


def test_criterion_08_arrival_law_orderings(bridge_net):
    sig = t_signature(bridge_net)
    damage = Binomial(p=0.1)
    grid = np.linspace(0.0, 6.0, 200)
    lin = reliability_shock_model(sig, LIN11, damage, grid).values
    exp = reliability_shock_model(sig, EXP1, damage, grid).values
    wei = reliability_shock_model(sig, WEI21, damage, grid).values
    lin_below = bool(np.all(lin <= exp + 1e-11) and np.all(lin <= wei + 1e-11))
    diff = exp - wei
    signs = np.sign(diff[np.abs(diff) > 1e-9])
    crosses = bool(len(signs) > 1 and np.any(signs[:-1] != signs[1:]))
    ok = lin_below and crosses
    _report(8, ok, "linear-hazard curve dominated; exponential/Weibull curves cross")
    assert lin_below
    assert crosses


def test_criterion_09_monte_carlo_oracle(three_link_net, bridge_net):
    start = time.perf_counter()
    grid = np.array([0.5, 1.0, 2.0])
    trials = 100_000
    worst_z = 0.0
    seed = 1000
    for net in (bridge_net, three_link_net):
        tie = t_signature(net)
        fatal = fatal_signature(net)
        for law in ALL_LAWS:
            seed += 1
            cfg = SimConfig(
                law=law, damage=Binomial(p=0.1), mode="model_faithful",
                trials=trials, seed=seed, signature=tie,
            )
            mc = mc_reliability_curve(cfg, grid)
            analytic = reliability_shock_model(tie, law, Binomial(p=0.1), grid)
            z = np.abs(mc.values - analytic.values) / np.maximum(mc.stderr, 1e-9)
            worst_z = max(worst_z, float(z.max()))

            seed += 1
            cfg_f = SimConfig(
                law=law, damage=Fatal(), mode="model_faithful",
                trials=trials, seed=seed, signature=fatal,
            )
            mc_f = mc_reliability_curve(cfg_f, grid)
            analytic_f = reliability_fatal(fatal, law, grid)
            z_f = np.abs(mc_f.values - analytic_f.values) / np.maximum(mc_f.stderr, 1e-9)
            worst_z = max(worst_z, float(z_f.max()))
    elapsed = time.perf_counter() - start
    ok = worst_z <= 3.0 and elapsed < 60.0
    _report(
        9,
        ok,
        f"Monte Carlo within 3 SE of analytic curves (worst z {worst_z:.2f}, "
        f"{elapsed:.1f} s)",
    )
    assert worst_z <= 3.0
    assert elapsed < 60.0


def test_criterion_10_mechanistic_target(bridge_net):
    grid = np.array([0.5, 1.0, 2.0])
    trials = 100_000
    cfg = SimConfig(
        law=EXP1, damage=Binomial(p=0.5), mode="mechanistic",
        trials=trials, seed=777, network=bridge_net,
    )
    mc = mc_reliability_curve(cfg, grid)
    classical_target = reliability_shock_model(
        classical_signature(bridge_net), EXP1, Binomial(p=0.5), grid
    )
    tie_curve = reliability_shock_model(
        t_signature(bridge_net), EXP1, Binomial(p=0.5), grid
    )
    z = np.abs(mc.values - classical_target.values) / np.maximum(mc.stderr, 1e-9)
    gap = tie_curve.values - classical_target.values
    ok = bool(np.all(z <= 3.0))
    _report(
        10,
        ok,
        "mechanistic simulation matches the independent-link mixture "
        f"(worst z {float(z.max()):.2f}); gap of the tie-signature curve to that "
        f"target at t=(0.5,1,2): {np.array2string(gap, precision=4)}",
    )
    assert np.all(z <= 3.0)


def test_criterion_11_property_suites(three_link_net, bridge_net):
    rng = random.Random(99)

    # structure-function coherence on fixtures and random networks
    nets = [three_link_net, bridge_net] + [make_random_net(rng, 5) for _ in range(4)]
    for net in nets:
        ids = list(net.link_ids)
        for _ in range(60):
            base = {i for i in ids if rng.random() < 0.4}
            extra = base | {i for i in ids if rng.random() < 0.3}
            if not is_up(net, base):
                assert not is_up(net, extra)
        assert is_up(net, ())
        assert not is_up(net, ids)

    # exact normalization of all three signature kinds
    for net in nets:
        for compute in (classical_signature, t_signature, fatal_signature):
            assert sum(compute(net).probabilities) == 1

    # lr => hr => st on random pmf pairs, checked when the stronger holds
    np_rng = np.random.default_rng(512)
    lr_seen = hr_seen = 0
    for trial in range(100):
        n = int(np_rng.integers(2, 6))
        a = np_rng.dirichlet(np.ones(n))
        if trial % 2 == 0:
            factor = np.cumprod(np.concatenate(([1.0], np_rng.uniform(1.0, 2.0, n - 1))))
            b = a * factor
            b = b / b.sum()
        else:
            b = np_rng.dirichlet(np.ones(n))
        a_list, b_list = a.tolist(), b.tolist()
        if order_check(a_list, b_list, "lr").holds:
            lr_seen += 1
            assert order_check(a_list, b_list, "hr").holds
        if order_check(a_list, b_list, "hr").holds:
            hr_seen += 1
            assert order_check(a_list, b_list, "st").holds
    assert lr_seen >= 20 and hr_seen >= lr_seen

    # TP2 of the count pmf on random laws and random grids
    for _ in range(20):
        law = [
            Exponential(rate_constant=np_rng.uniform(0.2, 3.0)),
            Weibull(shape=np_rng.uniform(0.5, 3.0), scale=np_rng.uniform(0.5, 2.0)),
            LinearHazard(a=np_rng.uniform(0.0, 2.0), b=np_rng.uniform(0.1, 2.0)),
        ][int(np_rng.integers(3))]
        ts = np.sort(np_rng.uniform(0.05, 5.0, 12))
        ts = np.unique(ts)
        if len(ts) < 2:
            continue
        lam_max = float(np.asarray(law.mvf(ts[-1])))
        cols = truncation_index(lam_max) + 1
        matrix = np.vstack(
            [_count_pmf_row(float(np.asarray(law.mvf(t))), cols - 1) for t in ts]
        )
        assert tp2_check(matrix).holds

    # hazard mixture against the numerical derivative of -log reliability
    from netsig.reliability import hazard_curve

    worst_rel = 0.0
    h = 1e-3
    hazard_cases = [
        (t_signature(bridge_net), WEI21, Binomial(p=0.3), 0.9),
        (t_signature(three_link_net), LIN11, Binomial(p=0.5), 0.7),
        (t_signature(bridge_net), EXP1, OnePerShock(), 1.2),
    ]
    for sig, law, damage, t0 in hazard_cases:
        fine = np.array([t0 - h, t0, t0 + h])
        curve = reliability_shock_model(sig, law, damage, fine)
        numeric = (math.log(curve.values[0]) - math.log(curve.values[2])) / (2 * h)
        mixture = hazard_curve(sig, law, damage, fine).values[1]
        worst_rel = max(worst_rel, abs(mixture - numeric) / abs(numeric))
    assert worst_rel < 1e-4

    _report(
        11,
        True,
        f"property suites hold (lr pairs {lr_seen}, hazard rel err {worst_rel:.1e})",
    )
