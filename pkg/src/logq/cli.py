"""Command-line entry point: ``logq {solve,bench,oracle,analytic,dump}``."""

from __future__ import annotations

import argparse
import datetime as _dt
import json
import os
import sys
from pathlib import Path

from . import __version__
from .analytic import SliceRequest, slice_csv
from .bench import Instance, rows_to_csv, run_bench
from .encoding import EncodingSpec, Kind
from .graph import GraphParseError, read_edge_list, gnp_random_graph
from .laplacian import build_laplacian
from .optimize import GaConfig, GradConfig, solve_ga, solve_grad
from .oracle import OracleTooLargeError, brute_force_maxcut
from .pauli import decompose


class CliError(Exception):
    pass


def _threads_default() -> int:
    try:
        return max(1, int(os.environ.get("LOGQ_THREADS", "1")))
    except ValueError:
        return 1


def _add_graph_source(p: argparse.ArgumentParser, required: bool = True):
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--graph", type=Path, help="edge-list file ('n m' header, then 'u v w' lines)")
    g.add_argument("--gnp", nargs=3, metavar=("N", "DENSITY", "SEED"), help="random G(n, p) graph")


def _add_encoding(p: argparse.ArgumentParser):
    p.add_argument("--encoding", choices=[k.value for k in Kind], default=None)
    p.add_argument("--lambda", dest="lam", type=float, default=5.0)
    p.add_argument("--kappa", type=float, default=0.2)
    p.add_argument("--gamma", type=float, default=0.6)


def _load_graph(args):
    if args.graph is not None:
        try:
            return read_edge_list(args.graph)
        except OSError as e:
            raise CliError(f"cannot read {args.graph}: {e.strerror}") from None
        except GraphParseError as e:
            raise CliError(f"{args.graph}: {e}") from None
    try:
        n, density, seed = int(args.gnp[0]), float(args.gnp[1]), int(args.gnp[2])
    except ValueError:
        raise CliError("--gnp expects integer N, real DENSITY, integer SEED") from None
    return gnp_random_graph(n, density, seed)


def _encoding(args, default: Kind) -> EncodingSpec:
    kind = Kind(args.encoding) if args.encoding else default
    return EncodingSpec(kind, args.lam, args.kappa, args.gamma)


def _manifest(command: str, args) -> dict:
    config = {k: (str(v) if isinstance(v, Path) else v) for k, v in sorted(vars(args).items()) if k != "func"}
    return {
        "command": command,
        "config": config,
        "seed": getattr(args, "seed", None),
        "timestamp": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
        "version": __version__,
    }


def cmd_solve(args) -> int:
    g = _load_graph(args)
    L = build_laplacian(g)
    if args.dump_laplacian:
        sys.stdout.write(L.to_csv())
    if args.dump_pauli:
        sys.stdout.write(decompose(L).to_csv())
    if args.method == "ga":
        enc = _encoding(args, Kind.STEP)
        cfg = GaConfig(
            population_size=args.pop,
            generations=args.gens,
            mutation_rate=args.mutation_rate,
            crossover_rate=args.crossover_rate,
            elite_count=args.elite,
            seed=args.seed,
        )
        res = solve_ga(g, enc, cfg)
    else:
        enc = _encoding(args, Kind.DISTORTED)
        cfg = GradConfig(
            multistarts=args.multistarts,
            max_evals=args.max_evals,
            post_lambda=args.post_lambda,
            rhoend=args.rhoend,
            restart_rounds=not args.no_restarts,
            seed=args.seed,
        )
        res = solve_grad(g, enc, cfg)

    c = res.complexity
    print(f"cut_value {res.cut_value:g}")
    print(f"final_cost {res.final_cost:.10g}")
    print(f"convergence_diag {res.convergence_diag:.3e}")
    print(f"objective_calls {res.objective_calls}")
    print(
        f"n_qubits {c['n_qubits']} n_params {c['n_params']} "
        f"cnot_estimate {c['cnot_estimate']} pauli_terms {c['pauli_terms']}"
    )
    if args.out is not None:
        args.out.mkdir(parents=True, exist_ok=True)
        payload = {"manifest": _manifest("solve", args), "result": res.to_dict()}
        (args.out / "result.json").write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        (args.out / "trace.csv").write_text(res.trace_csv())
    return 0


def _parse_instance(text: str) -> Instance:
    try:
        n, density, seed = text.split(":")
        return Instance.gnp(int(n), float(density), int(seed))
    except ValueError:
        raise CliError(f"bad instance {text!r}; expected N:DENSITY:SEED") from None


def cmd_bench(args) -> int:
    instances = [_parse_instance(s) for s in args.instance]
    for path in args.graph or []:
        try:
            instances.append(Instance(Path(path).stem, read_edge_list(path)))
        except (OSError, GraphParseError) as e:
            raise CliError(f"{path}: {e}") from None
    rows = run_bench(instances, seed=args.seed, threads=args.threads)
    text = rows_to_csv(rows, wall_time=not args.no_wall_time)
    if args.out is not None:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(text)
        args.out.with_suffix(".manifest.json").write_text(
            json.dumps(_manifest("bench", args), indent=2, sort_keys=True) + "\n"
        )
    else:
        sys.stdout.write(text)
    return 0


def cmd_oracle(args) -> int:
    g = _load_graph(args)
    try:
        value, x = brute_force_maxcut(g)
    except OracleTooLargeError as e:
        raise CliError(str(e)) from None
    print(f"{value:g}")
    print(" ".join(f"{int(v):+d}" for v in x))
    return 0


def cmd_analytic(args) -> int:
    enc = _encoding(args, Kind.SIGMOID)
    pairs = [(a, b) for a in args.alpha for b in args.beta]
    reqs = [SliceRequest(a, b, enc, points=args.points) for a, b in pairs]
    if args.out_dir is None:
        if len(reqs) != 1:
            raise CliError("several (alpha, beta) pairs need --out-dir")
        sys.stdout.write(slice_csv(reqs[0]))
        return 0
    args.out_dir.mkdir(parents=True, exist_ok=True)
    for req in reqs:
        name = f"slice_{enc.kind.value}_lam{enc.lam:g}_a{req.alpha:g}_b{req.beta:g}.csv"
        (args.out_dir / name).write_text(slice_csv(req))
    (args.out_dir / "manifest.json").write_text(json.dumps(_manifest("analytic", args), indent=2, sort_keys=True) + "\n")
    return 0


def cmd_dump(args) -> int:
    L = build_laplacian(_load_graph(args))
    sys.stdout.write(L.to_csv() if args.what == "laplacian" else decompose(L).to_csv())
    return 0


def _apply_config_file(parser: argparse.ArgumentParser, path: Path):
    """Turn ``key = value`` lines into parser defaults; keys are option names without dashes."""
    actions = {a.dest: a for a in parser._actions}
    for a in parser._actions:
        for opt in a.option_strings:
            actions.setdefault(opt.lstrip("-").replace("-", "_"), a)
    defaults = {}
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise CliError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        action = actions.get(key.replace("-", "_"))
        if action is None:
            raise CliError(f"{path}:{lineno}: unknown option {key!r}")
        if action.const is True and action.nargs == 0:
            defaults[action.dest] = value.lower() in ("1", "true", "yes", "on")
        elif action.type is not None:
            defaults[action.dest] = action.type(value)
        else:
            defaults[action.dest] = value
    parser.set_defaults(**defaults)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="logq", description="Log-qubit phase-encoded MaxCut solver.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="optimize the encoding parameters for one graph")
    _add_graph_source(p)
    _add_encoding(p)
    p.add_argument("--method", choices=["grad", "ga"], default="grad")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pop", type=int, default=20)
    p.add_argument("--gens", type=int, default=20)
    p.add_argument("--mutation-rate", type=float, default=0.1)
    p.add_argument("--crossover-rate", type=float, default=0.9)
    p.add_argument("--elite", type=int, default=1)
    p.add_argument("--multistarts", type=int, default=8)
    p.add_argument("--max-evals", type=int, default=500)
    p.add_argument("--post-lambda", type=float, default=30.0)
    p.add_argument("--rhoend", type=float, default=1e-6)
    p.add_argument("--no-restarts", action="store_true", help="single multistart round even if budget remains")
    p.add_argument("--dump-pauli", action="store_true", help="print 'STRING,coefficient' lines first")
    p.add_argument("--dump-laplacian", action="store_true", help="print the padded Laplacian as CSV first")
    p.add_argument("--out", type=Path, help="directory for result.json and trace.csv")
    p.add_argument("--config", type=Path, help="key = value file supplying defaults for these flags")
    p.add_argument("--threads", type=int, default=_threads_default())
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bench", help="compare the local scheme against the GA")
    p.add_argument("--instance", action="append", default=[], metavar="N:DENSITY:SEED")
    p.add_argument("--graph", action="append", type=Path, metavar="PATH")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", type=Path, help="CSV path (stdout when omitted)")
    p.add_argument("--no-wall-time", action="store_true", help="omit the wall_time column")
    p.add_argument("--threads", type=int, default=_threads_default())
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("oracle", help="exact MaxCut by enumeration (n <= 24)")
    _add_graph_source(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("analytic", help="theta_0 slices of the 4-vertex cost as CSV")
    _add_encoding(p)
    p.add_argument("--alpha", type=float, nargs="+", default=[0.0])
    p.add_argument("--beta", type=float, nargs="+", default=[0.0])
    p.add_argument("--points", type=int, default=2001)
    p.add_argument("--out-dir", type=Path)
    p.set_defaults(func=cmd_analytic)

    p = sub.add_parser("dump", help="print the Laplacian or its Pauli decomposition")
    p.add_argument("what", choices=["laplacian", "pauli"])
    _add_graph_source(p)
    p.set_defaults(func=cmd_dump)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "config", None) is not None:
            solve_parser = parser._subparsers._group_actions[0].choices[args.command]
            _apply_config_file(solve_parser, args.config)
            args = parser.parse_args(argv)
        return args.func(args)
    except (CliError, ValueError) as e:
        print(f"logq: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
