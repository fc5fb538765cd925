"""Command line interface: ``nipgm fit|optimize|forecast|reproduce``.

Exit codes: 0 success, 2 invalid input, 3 numerical failure, 4 I/O error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .data_io import IoError, Report, bundled_dataset, load_csv, write_report
from .errors import GreyError, NumericalError
from .models import ModelKind
from .pso import Inertia, PsoConfig, Template, optimize
from .workflows import CASES, forecast, grey_result, poly_result, reproduce_case, reproduce_ranks

MODEL_CHOICES = ("gm11", "dgm11", "ngm_k", "ngm_kc", "gm_talpha", "nipgm", "pr")
EXIT_OK, EXIT_INPUT, EXIT_NUMERIC, EXIT_IO = 0, 2, 3, 4


def _data_source(args):
    """Return ``(raw, recipe)``; ``recipe`` is empty for CSV files."""
    src = args.data
    if src.startswith("bundled:"):
        ds = bundled_dataset(src.split(":", 1)[1])
        raw, recipe = ds.raw, ds.recipe
    else:
        raw, recipe = load_csv(src), {}
    if args.train is not None:
        raw = raw.with_train(args.train)
    return raw, recipe


def _statistic(args, recipe):
    return args.statistic or recipe.get("statistic", "rms")


def _pso_config(args, statistic) -> PsoConfig:
    kw = dict(
        seed=args.seed,
        statistic=statistic,
        fitness_window=args.fitness_window,
    )
    for attr, key in (("iters", "iter_max"), ("particles", "n"), ("penalty", "penalty"), ("workers", "workers")):
        if getattr(args, attr) is not None:
            kw[key] = getattr(args, attr)
    if args.inertia:
        kw["inertia"] = Inertia.parse(args.inertia)
    return PsoConfig(**kw)


def _resolve_kind(name, args, raw, statistic, log):
    """Build the model kind, running the swarm when hyperparameters are missing."""
    if name == "nipgm":
        if args.lam is not None and args.alpha is not None:
            return ModelKind.nipgm(args.lam, args.alpha, args.action), None
        res = optimize(raw, Template("nipgm", args.action), _pso_config(args, statistic), args.trials)
    elif name == "gm_talpha":
        if args.alpha is not None:
            return ModelKind.gm_talpha(args.alpha, args.action), None
        res = optimize(raw, Template("gm_talpha", args.action), _pso_config(args, statistic), args.trials)
    else:
        return {
            "gm11": ModelKind.gm11(),
            "dgm11": ModelKind.dgm11(),
            "ngm_k": ModelKind.ngm_k(),
            "ngm_kc": ModelKind.ngm_kc(),
        }[name], None
    log(f"{name}: optimised {res.hyper} fitness={res.fitness:.6f}")
    return res.kind, res


def _models(args):
    return args.model or ["nipgm"]


def cmd_fit(args, log=print) -> Report:
    raw, recipe = _data_source(args)
    stat = _statistic(args, recipe)
    report = Report(raw.name, [int(v) for v in raw.labels], raw.values.tolist(), raw.train, raw.m, stat)
    for name in _models(args):
        if name == "pr":
            degree = args.degree or recipe.get("pr_degree", 2)
            report.models.append(poly_result(raw, degree, stat))
            continue
        kind, _ = _resolve_kind(name, args, raw, stat, log)
        report.models.append(grey_result(kind, raw, stat, name=name))
    return report


def cmd_optimize(args, log=print) -> Report:
    raw, recipe = _data_source(args)
    stat = _statistic(args, recipe)
    name = _models(args)[0]
    if name not in ("nipgm", "gm_talpha"):
        raise GreyError("optimize supports --model nipgm or gm_talpha")
    res = optimize(raw, Template(name, args.action), _pso_config(args, stat), args.trials)
    report = Report(raw.name, [int(v) for v in raw.labels], raw.values.tolist(), raw.train, raw.m, stat)
    report.models.append(grey_result(res.kind, raw, stat, name=name))
    report.extra = {
        "optimize": {
            "hyper": res.hyper,
            "fitness": res.fitness,
            "best_trial": res.trial,
            "trial_fitness": [float(v) for v in res.trial_fitness],
            "trace": [float(v) for v in res.trace],
        }
    }
    return report


def cmd_forecast(args, log=print) -> Report:
    raw, recipe = _data_source(args)
    stat = _statistic(args, recipe)
    name = _models(args)[0]
    if args.horizon == 0:
        return cmd_fit(args, log)
    if name == "nipgm" and args.lam is None and args.alpha is None and "nipgm" in recipe:
        args.lam, args.alpha = recipe["nipgm"]["lambda"], recipe["nipgm"]["alpha"]
    kind, _ = _resolve_kind(name, args, raw, stat, log)
    return forecast(kind, raw, args.horizon, stat)


def cmd_reproduce(args, log=print):
    if args.case == "ranks":
        return reproduce_ranks()
    return reproduce_case(args.case)


def _ranks_csv(ranks: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    names = list(next(iter(ranks.values())))
    w.writerow(["group", "row"] + names)
    for group, table in ranks.items():
        for metric in ("rmsepr", "rmsepo", "rmse"):
            w.writerow([group, f"average {metric.upper()}"] + [f"{table[n][metric]:.4f}" for n in names])
            w.writerow([group, f"{metric.upper()} rank"] + [table[n][metric + "_rank"] for n in names])
    return buf.getvalue()


def _optimize_csv(report: Report) -> str:
    opt = report.extra["optimize"]
    lines = ["parameter,value"]
    lines += [f"{k},{v:.4f}" for k, v in opt["hyper"].items()]
    lines.append(f"fitness,{opt['fitness']:.4f}")
    lines.append("")
    lines.append("iteration,gbest_fitness")
    lines += [f"{i},{v:.6f}" for i, v in enumerate(opt["trace"])]
    return "\n".join(lines) + "\n"


def _render(result, args) -> str:
    if isinstance(result, dict):
        text = json.dumps(result, indent=2) if args.format == "json" else _ranks_csv(result)
    elif args.format == "csv" and "optimize" in result.extra:
        text = write_report(result, "csv") + "\n" + _optimize_csv(result)
    else:
        return write_report(result, args.format, args.out)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise IoError(f"cannot write {args.out}: {exc}") from exc
    return text


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--data", default="bundled:wind_europe",
                        help="bundled:<name> or a CSV file with header label,value")
    common.add_argument("--model", action="append", choices=MODEL_CHOICES)
    common.add_argument("--train", type=int, help="number of leading points used for estimation")
    common.add_argument("--horizon", type=int, default=0)
    common.add_argument("--lambda", dest="lam", type=float)
    common.add_argument("--alpha", type=float)
    common.add_argument("--degree", type=int, help="PR(n) polynomial degree")
    common.add_argument("--action", choices=("integral", "power"), default="integral",
                        help="grey-action column of the time-power models")
    common.add_argument("--statistic", choices=("rms", "mean"),
                        help="error summary (default: dataset recipe, else rms)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=1)
    common.add_argument("--iters", type=int)
    common.add_argument("--particles", type=int)
    common.add_argument("--penalty", type=float)
    common.add_argument("--workers", type=int)
    common.add_argument("--inertia", help="fixed:<w> or decay:<min>,<max>")
    common.add_argument("--fitness-window", choices=("prior", "full"), default="full")
    common.add_argument("--out")
    common.add_argument("--format", choices=("csv", "json"), default="csv")

    parser = argparse.ArgumentParser(prog="nipgm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("fit", parents=[common], help="fit models and report errors").set_defaults(func=cmd_fit)
    sub.add_parser("optimize", parents=[common], help="PSO search of lambda/alpha").set_defaults(
        func=cmd_optimize)
    sub.add_parser("forecast", parents=[common], help="extend predictions past the data").set_defaults(
        func=cmd_forecast)
    rep = sub.add_parser("reproduce", parents=[common], help="regenerate a case-study table")
    rep.add_argument("case", choices=CASES + ("ranks",))
    rep.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)

    def log(msg):
        print(msg, file=sys.stderr)

    try:
        result = args.func(args, log)
        text = _render(result, args)
        if not args.out:
            sys.stdout.write(text)
    except IoError as exc:
        log(f"error: {exc}")
        return EXIT_IO
    except NumericalError as exc:
        log(f"numerical failure: {exc}")
        return EXIT_NUMERIC
    except GreyError as exc:
        log(f"invalid input: {exc}")
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
