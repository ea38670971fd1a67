"""Command line interface: generate benchmark networks, detect communities,
and sweep parameter grids into CSV.

All randomness is funnelled through explicit --seed / --seeds flags; outputs
are deterministic given the flags. HMRNET_THREADS caps sweep parallelism
(0 or unset = auto).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .netfile import parse_network_file, write_network_file
from .pipeline import RunConfig, run_detect
from . import synthgen

SWEEP_COLUMNS = [
    "grid",
    "m",
    "p_intra",
    "p_inter",
    "k",
    "seed",
    "algorithm",
    "layer",
    "communities",
    "accuracy_percent",
    "nmi",
    "vi",
    "modularity",
    "mean_conductance",
    "mean_tpr",
    "mean_cut_ratio",
    "iterations",
    "converged",
]


def _parse_range(text: str) -> list[float]:
    """A single value, or a MATLAB-style start:step:stop inclusive range."""
    if ":" not in text:
        return [float(text)]
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("range must be start:step:stop")
    start, step, stop = (float(p) for p in parts)
    if step <= 0:
        raise argparse.ArgumentTypeError("range step must be positive")
    vals = []
    v = start
    while v <= stop + 1e-9:
        vals.append(round(v, 10))
        v += step
    return vals


def _parse_preference(text: str):
    if text in ("median", "max"):
        return text
    return float(text)


def _atomic_write(path: str, data: str):
    tmp = path + ".tmp"
    try:
        with open(tmp, "w", encoding="utf-8") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise


def _add_detect_flags(p: argparse.ArgumentParser):
    p.add_argument("--m", type=float, default=1.3, help="biclique penalty M")
    p.add_argument("--damping", type=float, default=0.5)
    p.add_argument("--stable-window", type=int, default=10)
    p.add_argument("--max-iterations", type=int, default=1000)
    p.add_argument(
        "--preference",
        type=_parse_preference,
        default="median",
        help="'median', 'max', or a fixed diagonal value",
    )
    p.add_argument("--min-x", type=int, default=2, help="minimum biclique X side")
    p.add_argument("--min-y", type=int, default=2, help="minimum biclique Y side")
    p.add_argument("--cap", type=int, default=100_000, help="biclique enumeration cap")
    p.add_argument("--seed", type=int, default=0)


def _cmd_generate(args) -> int:
    if args.flavor == "synth1":
        net, tx, ty, planted = synthgen.generate_synthetic_I(args.seed)
    else:
        net, tx, ty, planted = synthgen.generate_synthetic_II(
            args.k, args.p_in, args.p_out, args.seed
        )
    write_network_file(args.output, net, tx, ty, planted)
    return 0


def _cmd_detect(args) -> int:
    net, truth_x, truth_y = parse_network_file(args.network)
    cfg = RunConfig(
        algorithm=args.algo,
        m_penalty=args.m,
        damping=args.damping,
        stable_window=args.stable_window,
        max_iterations=args.max_iterations,
        preference=args.preference,
        min_x=args.min_x,
        min_y=args.min_y,
        cap=args.cap,
        seed=args.seed,
    )
    report = run_detect(net, cfg, truth_x, truth_y, with_timings=args.timings)
    for note in report["notes"]:
        print(f"note: {note}", file=sys.stderr)
    _atomic_write(args.output, json.dumps(report, indent=2, sort_keys=True) + "\n")
    return 0


def _sweep_cell(cell: dict) -> list[dict]:
    """Run AP and MP on one grid cell; returns one row per (algorithm, layer)."""
    if cell["grid"] == "pIO":
        net, tx, ty, _ = synthgen.generate_synthetic_II(
            cell["k"], cell["p_intra"], cell["p_inter"], cell["seed"]
        )
    elif cell["flavor"] == "synth2":
        net, tx, ty, _ = synthgen.generate_synthetic_II(
            cell["k"], cell["p_intra"], cell["p_inter"], cell["seed"]
        )
    else:
        net, tx, ty, _ = synthgen.generate_synthetic_I(cell["seed"])
    rows = []
    for algo in ("ap", "mp"):
        cfg = RunConfig(algorithm=algo, m_penalty=cell["m"], seed=cell["seed"])
        report = run_detect(net, cfg, tx, ty)
        iters = report["diagnostics"].get("iterations_run", "")
        conv = report["diagnostics"].get("converged", "")
        for layer in ("x", "y"):
            met = report["layers"][layer]["metrics"]
            rows.append(
                {
                    "grid": cell["grid"],
                    "m": _fmt(cell["m"]),
                    "p_intra": _fmt(cell.get("p_intra")),
                    "p_inter": _fmt(cell.get("p_inter")),
                    "k": cell.get("k") or "",
                    "seed": cell["seed"],
                    "algorithm": algo,
                    "layer": layer,
                    "communities": met["community_count"],
                    "accuracy_percent": _fmt(met.get("accuracy_percent")),
                    "nmi": _fmt(met.get("nmi")),
                    "vi": _fmt(met.get("vi")),
                    "modularity": _fmt(met["modularity"]),
                    "mean_conductance": _fmt(met["mean_conductance"]),
                    "mean_tpr": _fmt(met["mean_tpr"]),
                    "mean_cut_ratio": _fmt(met["mean_cut_ratio"]),
                    "iterations": iters,
                    "converged": conv,
                }
            )
    return rows


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return f"{v:.10g}"
    return str(v)


def _worker_count() -> int:
    raw = os.environ.get("HMRNET_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n <= 0:
        n = os.cpu_count() or 1
    return n


def _cmd_sweep(args) -> int:
    seeds = list(range(args.seeds))
    m_values = args.m if args.m is not None else [1.3]
    if args.grid == "pIO":
        if args.k is None:
            raise SystemExit("--grid pIO requires --k")
        p_inter_values = _parse_range(f"{args.p_from}:{args.step}:{args.p_to}")
        cells = [
            {
                "grid": "pIO",
                "flavor": "synth2",
                "m": m,
                "p_inter": p,
                "p_intra": round(1.0 - p, 10),
                "k": args.k,
                "seed": seed,
            }
            for p in p_inter_values
            for m in m_values
            for seed in seeds
        ]
    else:
        cells = [
            {
                "grid": "m",
                "flavor": args.netspec,
                "m": m,
                "p_intra": args.p_in if args.netspec == "synth2" else None,
                "p_inter": args.p_out if args.netspec == "synth2" else None,
                "k": args.k if args.netspec == "synth2" else None,
                "seed": seed,
            }
            for m in m_values
            for seed in seeds
        ]
    if not cells:
        raise SystemExit("empty sweep grid")

    workers = _worker_count()
    if workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_sweep_cell, cells))
    else:
        results = [_sweep_cell(c) for c in cells]

    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for rows in results:
        for row in rows:
            writer.writerow(row)
    _atomic_write(args.output, buf.getvalue())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hmrnet",
        description="Exemplar-centred community detection in two-layer networks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a synthetic benchmark network")
    gen.add_argument("flavor", choices=["synth1", "synth2"])
    gen.add_argument("--k", type=int, default=4, help="communities per layer (synth2)")
    gen.add_argument("--p-in", type=float, default=0.85, dest="p_in")
    gen.add_argument("--p-out", type=float, default=0.15, dest="p_out")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("-o", "--output", required=True)
    gen.set_defaults(func=_cmd_generate)

    det = sub.add_parser("detect", help="detect communities in a network file")
    det.add_argument("--algo", choices=["ap", "mp"], default="mp")
    _add_detect_flags(det)
    det.add_argument("--timings", action="store_true", help="include wall-clock timings")
    det.add_argument("network")
    det.add_argument("-o", "--output", required=True)
    det.set_defaults(func=_cmd_detect)

    sw = sub.add_parser("sweep", help="run a parameter grid and write CSV")
    sw.add_argument("netspec", nargs="?", default="synth1", choices=["synth1", "synth2"])
    sw.add_argument("--m", type=_parse_range, default=None, help="M value or start:step:stop")
    sw.add_argument("--seeds", type=int, default=10, help="use seeds 0..N-1")
    sw.add_argument("--grid", choices=["pIO"], default=None)
    sw.add_argument("--from", type=float, default=0.1, dest="p_from")
    sw.add_argument("--to", type=float, default=0.9, dest="p_to")
    sw.add_argument("--step", type=float, default=0.2)
    sw.add_argument("--k", type=int, default=None)
    sw.add_argument("--p-in", type=float, default=0.85, dest="p_in")
    sw.add_argument("--p-out", type=float, default=0.15, dest="p_out")
    sw.add_argument("-o", "--output", required=True)
    sw.set_defaults(func=_cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
