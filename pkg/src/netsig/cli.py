"""Command-line front end: network files in, CSV/plain-text reports out.

Exit codes: 0 success, 1 usage or validation error, 2 numeric failure
(underflow, enumeration limit).  Every CSV starts with ``#`` comment lines
echoing the manifest, so outputs are self-describing and reruns with the
same arguments are byte-identical.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Sequence

import numpy as np

from .network import NetworkFormatError, load_network
from .partitions import EnumerationLimitError
from .reliability import (
    ModelConfig,
    compare_networks,
    default_grid,
    hazard_curve,
    ihr_ratio_profile,
    ihra_check,
    reliability_component_model,
    reliability_fatal,
    reliability_shock_model,
    tp2_check,
)
from .shocks import (
    Binomial,
    Fatal,
    OnePerShock,
    beta_sequence,
    parse_damage,
    parse_law,
    truncation_index,
    _count_pmf_row,
)
from .signatures import (
    classical_signature,
    fatal_signature,
    t_signature,
    t_signature_mc,
    tail as sig_tail,
)
from .simulate import SimConfig, mc_reliability_curve

LAW_HELP = (
    "arrival law: exp:rate=R | weibull:shape=K,scale=S | "
    "linhaz:a=A,b=B (rate a+2bt, mean value a*t+b*t^2) | mvf:file=CSV"
)
DAMAGE_HELP = "damage model: binomial:p=P | oneper | fatal"
GRID_HELP = "time grid: start:stop:points (e.g. 0:5:200) or auto[:points]"


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")


def _manifest_lines(args: argparse.Namespace, skip: Sequence[str] = ()) -> list[str]:
    items = []
    for key, value in sorted(vars(args).items()):
        # output/plot paths do not affect the computation; identical runs
        # must stay byte-identical wherever they are written
        if key in ("func", "output", "plot") or key in skip or value is None:
            continue
        items.append(f"# {key}={value}")
    return items


def _parse_grid_spec(spec: str, auto_builder) -> np.ndarray:
    if spec.startswith("auto"):
        _, _, rest = spec.partition(":")
        points = int(rest) if rest else 200
        return auto_builder(points)
    parts = spec.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid spec {spec!r} is not start:stop:points or auto[:N]")
    start, stop, points = float(parts[0]), float(parts[1]), int(parts[2])
    return np.linspace(start, stop, points)


def _curve_csv(args, curve, extra_comments: Sequence[str] = ()) -> str:
    lines = _manifest_lines(args)
    lines.extend(extra_comments)
    lines.append("t,reliability,stderr,truncation_bound")
    for i, t in enumerate(curve.grid):
        stderr = "" if curve.stderr is None else _fmt(float(curve.stderr[i]))
        lines.append(
            f"{_fmt(float(t))},{_fmt(float(curve.values[i]))},{stderr},"
            f"{_fmt(curve.truncation_bound)}"
        )
    return "\n".join(lines)


def _common_denominator_pairs(probabilities) -> list[tuple[int, int]]:
    # print the whole vector over one denominator so zero entries stay
    # aligned with their siblings (0/13 rather than 0/1)
    denom = 1
    for p in probabilities:
        denom = denom * p.denominator // math.gcd(denom, p.denominator)
    return [(p.numerator * (denom // p.denominator), denom) for p in probabilities]


def cmd_signature(args: argparse.Namespace) -> int:
    net = load_network(args.network)
    kinds = ["classical", "tie", "fatal"] if args.kind == "all" else [args.kind]
    lines = _manifest_lines(args)
    if args.mc:
        if args.kind != "tie":
            raise ValueError("--mc estimates the tie signature only")
        est = t_signature_mc(net, trials=args.mc, seed=args.seed)
        lines.append("kind,index,numerator,denominator,decimal,stderr")
        pairs = _common_denominator_pairs(est.vector.probabilities)
        for i, (p, (num, den)) in enumerate(
            zip(est.vector.probabilities, pairs), start=1
        ):
            lines.append(
                f"tie,{i},{num},{den},{_fmt(float(p))},{_fmt(est.stderr[i - 1])}"
            )
    else:
        compute = {
            "classical": classical_signature,
            "tie": t_signature,
            "fatal": fatal_signature,
        }
        lines.append("kind,index,numerator,denominator,decimal")
        for kind in kinds:
            try:
                sig = compute[kind](net)
            except EnumerationLimitError as exc:
                raise EnumerationLimitError(
                    f"{exc}; rerun with --kind tie --mc TRIALS --seed SEED"
                ) from None
            pairs = _common_denominator_pairs(sig.probabilities)
            for i, (p, (num, den)) in enumerate(
                zip(sig.probabilities, pairs), start=1
            ):
                lines.append(f"{kind},{i},{num},{den},{_fmt(float(p))}")
    _write_text(args.output, "\n".join(lines))
    return 0


def _resolve_model(args, net):
    """Signature + damage consistent with the requested reliability model."""
    damage = parse_damage(args.damage) if args.damage else None
    if args.model == "shock":
        if damage is None:
            raise ValueError("--model shock needs --damage binomial:p=... or oneper")
        if isinstance(damage, Fatal):
            raise ValueError("fatal damage is evaluated by --model fatal")
        return t_signature(net), damage
    if args.model == "component":
        if damage is not None:
            raise ValueError("--model component takes no damage model")
        return classical_signature(net), None
    if args.model == "fatal":
        if damage is not None and not isinstance(damage, Fatal):
            raise ValueError("--model fatal is incompatible with non-fatal damage")
        return fatal_signature(net), Fatal()
    raise ValueError(f"unknown model {args.model!r}")


def cmd_reliability(args: argparse.Namespace) -> int:
    net = load_network(args.network)
    law = parse_law(args.law)
    sig, damage = _resolve_model(args, net)

    def auto(points: int) -> np.ndarray:
        return default_grid(sig, law, damage, points=points, model=args.model)

    grid = _parse_grid_spec(args.grid, auto)
    if args.model == "shock":
        curve = reliability_shock_model(sig, law, damage, grid)
    elif args.model == "component":
        curve = reliability_component_model(sig, law, grid)
    else:
        curve = reliability_fatal(sig, law, grid)
    _write_text(args.output, _curve_csv(args, curve))
    if args.plot:
        from .plotting import plot_curves

        plot_curves(
            args.plot,
            [(f"{args.model} model", curve.grid, curve.values)],
            title=f"reliability ({args.law})",
        )
    return 0


def cmd_hazard(args: argparse.Namespace) -> int:
    net = load_network(args.network)
    law = parse_law(args.law)
    damage = parse_damage(args.damage)
    if isinstance(damage, Fatal):
        raise ValueError("hazard mixture supports binomial or oneper damage")
    sig = t_signature(net)

    def auto(points: int) -> np.ndarray:
        return default_grid(sig, law, damage, points=points)

    grid = _parse_grid_spec(args.grid, auto)
    grid = grid[grid > 0]  # hazard at t=0 needs no report; avoid 0-rate corner
    hz = hazard_curve(sig, law, damage, grid)
    lines = _manifest_lines(args)
    lines.append("t,hazard")
    for t, v in zip(hz.grid, hz.values):
        lines.append(f"{_fmt(float(t))},{_fmt(float(v))}")
    _write_text(args.output, "\n".join(lines))
    if args.plot:
        from .plotting import plot_curves

        plot_curves(
            args.plot,
            [("hazard", hz.grid, hz.values)],
            ylabel="hazard rate",
            title=f"hazard ({args.law})",
        )
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    net = load_network(args.network)
    report: list[str] = []
    plot_payload = None
    if args.check in ("ihra", "ihr-ratio"):
        if args.q is None:
            raise ValueError(f"--check {args.check} needs --q")
        if not 0.0 < args.q < 1.0:
            raise ValueError("--q must lie in (0, 1)")
        kmax = args.kmax or (50 if args.check == "ihra" else 30)
        sig = t_signature(net)
        betas = beta_sequence(sig_tail(sig), Binomial(p=1.0 - args.q), kmax + 1)
        if args.check == "ihra":
            verdict = ihra_check(betas, kmax)
            if verdict.holds:
                report.append(f"IHRA check (q={args.q:g}, k<={kmax}): holds")
            else:
                report.append(
                    f"IHRA check (q={args.q:g}): VIOLATED at k={verdict.witness}"
                )
        else:
            profile = ihr_ratio_profile(betas, kmax)
            if profile.non_increasing:
                report.append(
                    f"survival-weight ratio (q={args.q:g}, k<={kmax}): "
                    "monotone non-increasing"
                )
            else:
                report.append(
                    f"survival-weight ratio (q={args.q:g}, k<={kmax}): NOT monotone; "
                    f"first increase at ratio index {profile.first_increase}"
                )
            report.append("k,ratio")
            for k, r in enumerate(profile.ratios):
                report.append(f"{k},{_fmt(float(r))}")
            plot_payload = ("sequence", profile.ratios)
    elif args.check == "tp2":
        if not args.law:
            raise ValueError("--check tp2 needs --law")
        law = parse_law(args.law)
        grid = (
            np.linspace(0.05, 5.0, 40)
            if args.grid == "auto"
            else _parse_grid_spec(args.grid, lambda p: np.linspace(0.05, 5.0, p))
        )
        grid = grid[grid > 0]
        lam_max = float(np.asarray(law.mvf(grid[-1])))
        kcols = truncation_index(lam_max) + 1
        matrix = np.vstack(
            [_count_pmf_row(float(np.asarray(law.mvf(t))), kcols - 1) for t in grid]
        )
        verdict = tp2_check(matrix)
        if verdict.holds:
            report.append(f"TP2 check of count pmf ({args.law}): holds")
        else:
            report.append(
                f"TP2 check of count pmf ({args.law}): VIOLATED at minor {verdict.witness}"
            )
    else:
        raise ValueError(f"unknown check {args.check!r}")
    _write_text(args.output, "\n".join(report))
    if args.plot and plot_payload is not None:
        from .plotting import plot_sequence

        plot_sequence(
            args.plot,
            plot_payload[1],
            xlabel="k",
            ylabel="beta(k+1)/beta(k)",
            title=f"consecutive survival-weight ratio (q={args.q:g})",
        )
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    net1 = load_network(args.network_1)
    net2 = load_network(args.network_2)
    law1, law2 = parse_law(args.law_1), parse_law(args.law_2)
    dmg1, dmg2 = parse_damage(args.damage_1), parse_damage(args.damage_2)
    if not isinstance(dmg1, Binomial) or not isinstance(dmg2, Binomial):
        raise ValueError("compare supports binomial damage only")
    cfg1 = ModelConfig(signature=t_signature(net1), law=law1, damage=dmg1, label="1")
    cfg2 = ModelConfig(signature=t_signature(net2), law=law2, damage=dmg2, label="2")
    grid = None
    if args.grid != "auto":
        grid = _parse_grid_spec(args.grid, lambda p: None)
    report = compare_networks(cfg1, cfg2, grid)
    header = "\n".join(_manifest_lines(args))
    _write_text(args.output, header + "\n" + report.format())
    if args.plot:
        from .plotting import plot_curves

        plot_curves(
            args.plot,
            [
                (f"network 1 ({args.law_1}, p={dmg1.p:g})", report.grid, report.curve_1.values),
                (f"network 2 ({args.law_2}, p={dmg2.p:g})", report.grid, report.curve_2.values),
            ],
            title="reliability comparison",
        )
    return 0


def cmd_simulate(args: argparse.Namespace) -> int:
    net = load_network(args.network)
    law = parse_law(args.law)
    damage = parse_damage(args.damage)
    mode = args.mode.replace("-", "_")
    cfg = SimConfig(
        law=law, damage=damage, mode=mode, trials=args.trials, seed=args.seed,
        network=net,
    )

    def auto(points: int) -> np.ndarray:
        if isinstance(damage, Fatal):
            return default_grid(fatal_signature(net), law, points=points, model="fatal")
        if mode == "mechanistic":
            return default_grid(classical_signature(net), law, damage, points=points)
        return default_grid(t_signature(net), law, damage, points=points)

    grid = _parse_grid_spec(args.grid, auto)
    curve = mc_reliability_curve(cfg, grid)
    _write_text(args.output, _curve_csv(args, curve))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netsig",
        description="Signature and shock-model reliability analysis of two-state networks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sig = sub.add_parser("signature", help="exact or estimated signature vectors")
    p_sig.add_argument("network", help="network description file")
    p_sig.add_argument(
        "--kind", choices=["classical", "tie", "fatal", "all"], default="all"
    )
    p_sig.add_argument("--mc", type=int, default=0, metavar="TRIALS",
                       help="estimate the tie signature by sampling")
    p_sig.add_argument("--seed", type=int, default=0)
    p_sig.add_argument("-o", "--output", default=None, help="output CSV (default stdout)")
    p_sig.set_defaults(func=cmd_signature)

    p_rel = sub.add_parser("reliability", help="analytic reliability curve CSV")
    p_rel.add_argument("network")
    p_rel.add_argument("--law", required=True, help=LAW_HELP)
    p_rel.add_argument("--damage", default=None, help=DAMAGE_HELP)
    p_rel.add_argument("--model", choices=["shock", "component", "fatal"], default="shock")
    p_rel.add_argument("--grid", default="auto", help=GRID_HELP)
    p_rel.add_argument("-o", "--output", default=None)
    p_rel.add_argument("--plot", default=None, metavar="PNG", help="render curve to file")
    p_rel.set_defaults(func=cmd_reliability)

    p_haz = sub.add_parser("hazard", help="hazard-rate curve CSV")
    p_haz.add_argument("network")
    p_haz.add_argument("--law", required=True, help=LAW_HELP)
    p_haz.add_argument("--damage", required=True, help=DAMAGE_HELP)
    p_haz.add_argument("--grid", default="auto", help=GRID_HELP)
    p_haz.add_argument("-o", "--output", default=None)
    p_haz.add_argument("--plot", default=None, metavar="PNG")
    p_haz.set_defaults(func=cmd_hazard)

    p_chk = sub.add_parser("check", help="aging / total-positivity diagnostics")
    p_chk.add_argument("network")
    p_chk.add_argument("--check", choices=["ihra", "ihr-ratio", "tp2"], required=True)
    p_chk.add_argument("--q", type=float, default=None,
                       help="per-shock component survival probability")
    p_chk.add_argument("--kmax", type=int, default=None)
    p_chk.add_argument("--law", default=None, help=LAW_HELP + " (tp2 only)")
    p_chk.add_argument("--grid", default="auto", help=GRID_HELP + " (tp2 only)")
    p_chk.add_argument("-o", "--output", default=None)
    p_chk.add_argument("--plot", default=None, metavar="PNG")
    p_chk.set_defaults(func=cmd_check)

    p_cmp = sub.add_parser("compare", help="ordering-theorem premise/conclusion report")
    p_cmp.add_argument("network_1")
    p_cmp.add_argument("network_2")
    p_cmp.add_argument("--law1", dest="law_1", required=True, help=LAW_HELP)
    p_cmp.add_argument("--law2", dest="law_2", required=True, help=LAW_HELP)
    p_cmp.add_argument("--damage1", dest="damage_1", required=True, help=DAMAGE_HELP)
    p_cmp.add_argument("--damage2", dest="damage_2", required=True, help=DAMAGE_HELP)
    p_cmp.add_argument("--grid", default="auto", help=GRID_HELP)
    p_cmp.add_argument("-o", "--output", default=None)
    p_cmp.add_argument("--plot", default=None, metavar="PNG")
    p_cmp.set_defaults(func=cmd_compare)

    p_sim = sub.add_parser("simulate", help="Monte Carlo reliability curve CSV")
    p_sim.add_argument("network")
    p_sim.add_argument("--mode", choices=["model-faithful", "mechanistic"],
                       default="model-faithful")
    p_sim.add_argument("--law", required=True, help=LAW_HELP)
    p_sim.add_argument("--damage", required=True, help=DAMAGE_HELP)
    p_sim.add_argument("--trials", type=int, required=True)
    p_sim.add_argument("--seed", type=int, required=True)
    p_sim.add_argument("--grid", default="auto", help=GRID_HELP)
    p_sim.add_argument("-o", "--output", default=None)
    p_sim.set_defaults(func=cmd_simulate)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; our contract reserves 2 for
        # numeric failures and 1 for usage/validation
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except (EnumerationLimitError, ArithmeticError, OverflowError) as exc:
        print(f"netsig: numeric failure: {exc}", file=sys.stderr)
        return 2
    except (NetworkFormatError, ValueError, OSError) as exc:
        print(f"netsig: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
