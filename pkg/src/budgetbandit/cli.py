"""Command-line surface: solve instances, run experiments, sweep the schedule
exponent, and emit CSV artifacts.

Exit codes: 0 success, 2 validation error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .config import ConfigError, ExperimentConfig
from .instance import InstanceError, ProblemInstance
from .lp import enumerate_bases, optimal_set, stability_radius
from .simulate import ReplicationSummary, feasibility_report, replicate

EXIT_VALIDATION = 2
EXIT_IO = 3

SUMMARY_COLUMNS = ("beta", "n", "mean_avg_outcome", "sd", "ci_lo", "ci_hi",
                   "mean_avg_cost", "regret")


def _fmt(v) -> str:
    return format(float(v), ".12g")


def _parse_floats(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError as e:
        raise InstanceError(f"expected comma-separated numbers, got {text!r}") from e


def _support_str(instance: ProblemInstance, support) -> str:
    return "{" + ",".join(str(i + 1) for i in sorted(support)) + "}"


def cmd_solve(args) -> int:
    instance = ProblemInstance(_parse_floats(args.costs), args.budget)
    means = _parse_floats(args.means)
    opt = optimal_set(instance, means, exact=args.exact)
    eps = stability_radius(instance, means, exact=args.exact)

    print(f"instance: k={instance.k} costs={instance.costs} "
          f"budget={instance.budget} d={instance.d}")
    print(f"candidate bases: {len(enumerate_bases(instance))}")
    header = f"{'basis':>10} {'x':>28} {'y':>8} {'lam':>8} {'g':>8} {'z':>8} " \
             f"{'degen':>6} {'optimal':>8}"
    print(header)
    for sol, flag in zip(opt.solutions, opt.optimal_flags):
        arms = _support_str(instance, [instance.original_index(a)
                                       for a in sol.basis.arms])
        xs = "(" + ",".join(_fmt(v) for v in sol.x) + ")"
        print(f"{arms:>10} {xs:>28} {_fmt(sol.y):>8} {_fmt(sol.lam):>8} "
              f"{_fmt(sol.g):>8} {_fmt(sol.z):>8} {str(sol.degenerate):>6} "
              f"{str(flag):>8}")
        phis = ",".join(_fmt(p) for p in sol.phi)
        print(f"{'':>10} phi=({phis}) phi_slack={_fmt(sol.phi_slack)}")
    sets = " ".join(_support_str(instance, s) for s in opt.supports)
    print(f"optimal supports: {sets}")
    print(f"z_star: {_fmt(opt.z_star)}")
    print(f"stability_radius: {'inf' if eps == float('inf') else _fmt(eps)}")
    return 0


def write_summary_csv(path: Path, summaries: list[ReplicationSummary]) -> None:
    lines = [f"# z_star={_fmt(summaries[0].z_star)}", ",".join(SUMMARY_COLUMNS)]
    for s in summaries:
        for i, n in enumerate(s.checkpoints):
            lines.append(",".join([
                _fmt(s.beta), str(int(n)), _fmt(s.mean_avg_outcome[i]),
                _fmt(s.sd[i]), _fmt(s.ci_lo[i]), _fmt(s.ci_hi[i]),
                _fmt(s.mean_avg_cost[i]), _fmt(s.regret[i]),
            ]))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_diagnostics_csv(path: Path, summaries: list[ReplicationSummary]) -> None:
    k = summaries[0].mean_forced_frac.shape[1]
    cols = ["beta", "n", "forced_frac_total", "nonopt_frac", "opt_frac"] + \
        [f"forced_frac_arm_{a + 1}" for a in range(k)]
    lines = [",".join(cols)]
    for s in summaries:
        for i, n in enumerate(s.checkpoints):
            row = [_fmt(s.beta), str(int(n)),
                   _fmt(s.mean_forced_frac[i].sum()),
                   _fmt(s.mean_nonopt_frac[i]), _fmt(s.mean_opt_frac[i])]
            row += [_fmt(v) for v in s.mean_forced_frac[i]]
            lines.append(",".join(row))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    return int(os.environ.get("BUDGETBANDIT_THREADS", "1"))


def _run_one(config: ExperimentConfig, threads: int) -> ReplicationSummary:
    summary = replicate(config, threads=threads)
    report = feasibility_report(summary.checkpoints, summary.mean_avg_cost,
                                config.budget, tol=0.05)
    print(f"beta={format(config.beta, 'g')}: final regret "
          f"{_fmt(summary.regret[-1])}, avg cost {_fmt(summary.mean_avg_cost[-1])}, "
          f"cost tail proxy {_fmt(report['tail_proxy'])}"
          f"{'' if report['feasible'] else '  [over budget]'}")
    return summary


def cmd_simulate(args) -> int:
    config = ExperimentConfig.load(args.config)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    summary = _run_one(config, _threads(args))
    write_summary_csv(out / "summary.csv", [summary])
    write_diagnostics_csv(out / "diagnostics.csv", [summary])
    return 0


def cmd_sweep(args) -> int:
    config = ExperimentConfig.load(args.config)
    betas = _parse_floats(args.betas)
    if not betas:
        raise ConfigError("empty beta list")
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    summaries = []
    for beta in betas:
        cfg = ExperimentConfig.from_dict({**config.to_dict(), "beta": beta})
        summary = _run_one(cfg, _threads(args))
        write_summary_csv(out / f"summary_b{format(beta, 'g')}.csv", [summary])
        write_diagnostics_csv(out / f"diagnostics_b{format(beta, 'g')}.csv",
                              [summary])
        summaries.append(summary)
    write_summary_csv(out / "comparison.csv", summaries)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="budgetbandit",
        description="Budget-constrained sequential sampling experiments")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve the budget LP for given means")
    p.add_argument("--costs", required=True, help="comma-separated costs")
    p.add_argument("--budget", type=float, required=True)
    p.add_argument("--means", required=True, help="comma-separated means")
    p.add_argument("--exact", action="store_true",
                   help="exact rational arithmetic")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("simulate", help="run one replicated experiment")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--threads", type=int, default=None,
                   help="worker processes (default $BUDGETBANDIT_THREADS or 1)")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("sweep", help="repeat an experiment over schedule exponents")
    p.add_argument("--config", required=True)
    p.add_argument("--betas", required=True, help="comma-separated exponents")
    p.add_argument("--out", required=True)
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InstanceError, ConfigError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as e:
        print(f"i/o error: {e}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
