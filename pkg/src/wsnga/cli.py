"""Command-line front end.

    wsnga deploy   --seed 3 --out out/
    wsnga evolve   --config run.json --seed 42
    wsnga lifetime --protocol leach --rounds 1100
    wsnga compare  --seeds 5
    wsnga oracle   --n 10 --seed 7
    wsnga plot     --csv out/metrics.csv
    wsnga --print-config
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import sys
from pathlib import Path

from .clustering import FitnessKind, nearest_heads
from .config import ConfigError, RunConfig
from .ga import evolve, read_metrics_csv, write_metrics_csv
from .lifetime import ROUND_COLUMNS, lifetime_summary, read_rounds_csv, run_lifetime, write_rounds_csv, write_summary_json
from .network import Deployment, generate_deployment
from .oracle import exhaustive_best
from .svg import cluster_map, line_chart

COMPARE_COLUMNS = (
    "seed",
    "ga_total_energy_J",
    "leach_total_energy_J",
    "energy_ratio",
    "ga_first_death_round",
    "leach_first_death_round",
    "ga_last_death_round",
    "leach_last_death_round",
)


def ga_seed(seed: int) -> list[int]:
    # kept apart from the deployment stream, which uses the bare seed
    return [seed, 1]


def lifetime_seed(seed: int) -> list[int]:
    return [seed, 2]


def _common(p: argparse.ArgumentParser):
    p.add_argument("--config", type=Path, help="run configuration JSON")
    p.add_argument("--seed", type=int, help="master seed (overrides deployment.seed)")
    p.add_argument("--out", type=Path, help="output directory (overrides output_dir)")
    p.add_argument("--fitness", help="eq2, eq3 or weights:wE,wD,wC")
    p.add_argument("--n", type=int, help="node count")
    p.add_argument("--deployment", type=Path, help="load nodes from a deployment JSON")
    p.add_argument(
        "--print-config", action="store_true", default=argparse.SUPPRESS, help="print the effective configuration and exit"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wsnga", description="GA clustering for wireless sensor networks")
    parser.add_argument("--print-config", action="store_true", help="print the default configuration and exit")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("deploy", help="generate a deployment JSON")
    _common(p)

    p = sub.add_parser("evolve", help="run the GA, write metrics CSV and cluster SVG")
    _common(p)
    p.add_argument("--generations", type=int)
    p.add_argument("--population", type=int)
    p.add_argument("--mutation-rate", type=float)
    p.add_argument("--links", action="store_true", help="draw member-to-head lines")

    p = sub.add_parser("lifetime", help="simulate network lifetime")
    _common(p)
    p.add_argument("--protocol", choices=("ga", "leach"))
    p.add_argument("--rounds", type=int)
    p.add_argument("--generations", type=int)

    p = sub.add_parser("compare", help="paired GA vs LEACH lifetimes over several seeds")
    _common(p)
    p.add_argument("--seeds", type=int, default=5, help="number of consecutive seeds")
    p.add_argument("--rounds", type=int)
    p.add_argument("--generations", type=int)

    p = sub.add_parser("oracle", help="exhaustive search for small networks (N <= 20)")
    _common(p)

    p = sub.add_parser("plot", help="render metrics or round CSVs as SVG line charts")
    _common(p)
    p.add_argument("--csv", type=Path, action="append", required=True, help="CSV file; repeat to overlay")
    return parser


def effective_config(args) -> RunConfig:
    cfg = RunConfig.load(args.config) if getattr(args, "config", None) else RunConfig()
    dep, ga, lt = cfg.deployment, cfg.ga, cfg.lifetime
    try:
        if getattr(args, "seed", None) is not None:
            dep = dataclasses.replace(dep, seed=args.seed)
        if getattr(args, "n", None) is not None:
            dep = dataclasses.replace(dep, node_count=args.n)
        if getattr(args, "fitness", None):
            ga = dataclasses.replace(ga, fitness_kind=FitnessKind.parse(args.fitness))
        for opt, key in (("generations", "generations"), ("population", "population_size"), ("mutation_rate", "mutation_rate")):
            if getattr(args, opt, None) is not None:
                ga = dataclasses.replace(ga, **{key: getattr(args, opt)})
        if getattr(args, "rounds", None) is not None:
            lt = dataclasses.replace(lt, total_rounds=args.rounds)
        if getattr(args, "protocol", None):
            lt = dataclasses.replace(lt, protocol=args.protocol)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    out = str(args.out) if getattr(args, "out", None) else cfg.output_dir
    return dataclasses.replace(cfg, deployment=dep, ga=ga, lifetime=dataclasses.replace(lt, ga=ga, leach=cfg.leach), output_dir=out)


def _deployment(args, cfg: RunConfig) -> Deployment:
    if getattr(args, "deployment", None):
        return Deployment.from_json(Path(args.deployment).read_text())
    return generate_deployment(cfg.deployment, cfg.radio.initial_node_energy)


def _outdir(cfg: RunConfig) -> Path:
    out = Path(cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    return out


def cmd_deploy(args, cfg):
    dep = _deployment(args, cfg)
    path = _outdir(cfg) / "deployment.json"
    path.write_text(dep.to_json() + "\n")
    print(f"wrote {path}")


def cmd_evolve(args, cfg):
    dep = _deployment(args, cfg)
    result = evolve(dep, cfg.radio, cfg.ga, ga_seed(dep.config.seed))
    out = _outdir(cfg)
    write_metrics_csv(result.metrics, out / "metrics.csv")
    heads = result.best.bits & dep.alive
    owner = nearest_heads(heads, dep)[0]
    (out / "clusters.svg").write_text(cluster_map(dep, heads, owner, links=args.links))
    b = result.breakdown
    best = {"chromosome": str(result.best), **dataclasses.asdict(b)}
    (out / "best.json").write_text(json.dumps(best, indent=2) + "\n")
    print(f"best F={b.F!r} TCH={b.TCH} RCSD={b.RCSD:.3f} E={b.E:.6g}")
    print(f"wrote {out / 'metrics.csv'}, {out / 'clusters.svg'}, {out / 'best.json'}")


def cmd_lifetime(args, cfg):
    dep = _deployment(args, cfg)
    lt = cfg.lifetime_config()
    run = run_lifetime(dep, cfg.radio, lt, lifetime_seed(dep.config.seed))
    out = _outdir(cfg)
    write_rounds_csv(run.records, out / f"rounds_{lt.protocol}.csv")
    summary = lifetime_summary(run.records, dep.node_count)
    write_summary_json(summary, out / f"summary_{lt.protocol}.json")
    print(json.dumps(summary))


def cmd_compare(args, cfg):
    out = _outdir(cfg)
    rows = []
    for seed in range(cfg.deployment.seed, cfg.deployment.seed + args.seeds):
        dep = generate_deployment(dataclasses.replace(cfg.deployment, seed=seed), cfg.radio.initial_node_energy)
        s = {}
        for proto in ("ga", "leach"):
            run = run_lifetime(dep, cfg.radio, cfg.lifetime_config(proto), lifetime_seed(seed))
            write_rounds_csv(run.records, out / f"rounds_{proto}_seed{seed}.csv")
            s[proto] = lifetime_summary(run.records, dep.node_count)
        ga_e, le_e = s["ga"]["total_energy_J"], s["leach"]["total_energy_J"]
        rows.append(
            [seed, repr(ga_e), repr(le_e), repr(ga_e / le_e if le_e else float("nan")),
             s["ga"]["first_death_round"], s["leach"]["first_death_round"],
             s["ga"]["last_death_round"], s["leach"]["last_death_round"]]
        )
        print(",".join(map(str, rows[-1])))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COMPARE_COLUMNS)
    w.writerows(rows)
    (out / "comparison.csv").write_text(buf.getvalue())
    print(f"wrote {out / 'comparison.csv'}")


def cmd_oracle(args, cfg):
    dep = _deployment(args, cfg)
    best, b = exhaustive_best(dep, cfg.radio, cfg.ga.fitness_kind)
    print(json.dumps({"chromosome": str(best), "fitness": str(cfg.ga.fitness_kind), **dataclasses.asdict(b)}, indent=2))


_METRIC_PLOTS = (
    ("fitness", "best_F", "Best fitness"),
    ("heads", "best_TCH", "Cluster heads"),
    ("distance", "best_RCSD", "RCSD (m)"),
    ("energy", "best_E", "Transfer energy (J)"),
)


def cmd_plot(args, cfg):
    out = _outdir(cfg)
    kinds = {_csv_kind(p) for p in args.csv}
    if len(kinds) != 1:
        raise ConfigError("cannot overlay metrics and round CSVs in one chart")
    kind = kinds.pop()
    written = []
    if kind == "metrics":
        traces = {p.stem: read_metrics_csv(p) for p in args.csv}
        for name, attr, label in _METRIC_PLOTS:
            series = {
                stem: ([m.generation for m in t], [getattr(m, attr) for m in t]) for stem, t in traces.items()
            }
            path = out / f"{name}.svg"
            path.write_text(line_chart(series, f"{label} per generation", "generation", label))
            written.append(path)
    else:
        traces = {p.stem: read_rounds_csv(p) for p in args.csv}
        for name, attr, label in (("alive", "alive_count", "Alive nodes"), ("consumed", "cumulative_energy", "Consumed energy (J)")):
            series = {stem: ([r.round for r in t], [getattr(r, attr) for r in t]) for stem, t in traces.items()}
            path = out / f"{name}.svg"
            path.write_text(line_chart(series, f"{label} per round", "round", label))
            written.append(path)
    print("wrote " + ", ".join(map(str, written)))


def _csv_kind(path: Path) -> str:
    with open(path, newline="") as fh:
        header = next(csv.reader(fh), [])
    if tuple(header[:2]) == ("generation", "best_F"):
        return "metrics"
    if tuple(header) == ROUND_COLUMNS:
        return "rounds"
    raise ConfigError(f"{path}: unrecognised CSV header {header}")


COMMANDS = {
    "deploy": cmd_deploy,
    "evolve": cmd_evolve,
    "lifetime": cmd_lifetime,
    "compare": cmd_compare,
    "oracle": cmd_oracle,
    "plot": cmd_plot,
}

EXIT_CONFIG, EXIT_INVALID, EXIT_IO = 2, 3, 4


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = effective_config(args)
        if args.print_config:
            sys.stdout.write(cfg.to_json())
            return 0
        if args.command is None:
            parser.print_usage(sys.stderr)
            print("wsnga: error: a subcommand is required", file=sys.stderr)
            return EXIT_CONFIG
        COMMANDS[args.command](args, cfg)
    except ConfigError as exc:
        print(f"wsnga: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"wsnga: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ValueError, KeyError) as exc:
        print(f"wsnga: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return 0


if __name__ == "__main__":
    sys.exit(main())
