"""Command-line interface: rank, cdr and curves subcommands."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .cdr import compute_cdr
from .entropy import renyi_unpredictability
from .errors import DatasetError, NetrankError
from .events import curve_points, gaussian_params
from .mcdm import load_weights, rank_networks
from .model import PipelineConfig, load_dataset, validate_config
from .report import (build_report, cdr_table_csv, curves_csv, dumps,
                     score_events, write_atomic)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("input", help="dataset file (JSON or CSV)")
    parser.add_argument("--format", choices=["json", "csv"], default=None,
                        help="input format (default: by file extension)")
    parser.add_argument("--gamma", type=float, default=1.0,
                        help="frequency effect on link cost (default 1)")
    parser.add_argument("--beta", type=float, default=1.0,
                        help="cost influence on the random walker (default 1)")
    parser.add_argument("--alpha", type=float, default=3.0,
                        help="entropy order for unpredictability (default 3)")
    parser.add_argument("--epsilon", type=float, default=1e-6,
                        help="exception-handling constant (default 1e-6)")
    parser.add_argument("--cmax", type=float, default=1e6,
                        help="finite stand-in for infinite cost (default 1e6)")


def _config_from(args, weight_mode: str = "entropy") -> PipelineConfig:
    return validate_config(PipelineConfig(
        gamma=args.gamma, beta=args.beta, epsilon=args.epsilon,
        c_max=args.cmax, alpha_renyi=args.alpha, weight_mode=weight_mode,
    ))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netrank",
        description="Rank alternative complex networks by event-frequency performance.",
    )
    parser.add_argument("--version", action="version", version=f"netrank {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_rank = sub.add_parser("rank", help="run the full pipeline and write a rank report")
    _add_common(p_rank)
    p_rank.add_argument("--weights", default="entropy",
                        help="'entropy' or a JSON weight file path (default entropy)")
    p_rank.add_argument("--output", default="report.json", help="report path (default report.json)")
    p_rank.add_argument("--dump-intermediates", action="store_true",
                        help="write per-(network, criterion) density diagnostics as CSV")
    p_rank.add_argument("--figures", metavar="DIR", default=None,
                        help="also render ranking figures (PNG) into DIR")

    p_cdr = sub.add_parser("cdr", help="print node densities for one network and criterion")
    _add_common(p_cdr)
    p_cdr.add_argument("--network", required=True, help="network name")
    p_cdr.add_argument("--criterion", required=True, help="criterion name")
    p_cdr.add_argument("--dump", metavar="PATH", default=None,
                       help="write dissimilarities, kernel scales and densities as CSV")

    p_curves = sub.add_parser("curves", help="emit sampled event-distribution curves as CSV")
    _add_common(p_curves)
    p_curves.add_argument("--output", default="curves.csv", help="CSV path (default curves.csv)")
    p_curves.add_argument("--samples", type=int, default=200,
                          help="points per curve on [0, mu + 4*delta] (default 200)")
    p_curves.add_argument("--figures", metavar="DIR", default=None,
                          help="also render the curves (PNG) into DIR")
    return parser


def cmd_rank(args) -> int:
    datasets, criteria = load_dataset(args.input, args.format)
    if args.weights == "entropy":
        config = _config_from(args, weight_mode="entropy")
        weights = None
        source = "entropy"
    else:
        config = _config_from(args, weight_mode="user")
        weights = load_weights(args.weights, len(criteria))
        source = f"file:{args.weights}"
    meta = {"tool": f"netrank {__version__}", "input": str(args.input)}
    report, diagnostics = build_report(datasets, criteria, config,
                                       weights=weights, weight_source=source, meta=meta)
    out_path = Path(args.output)
    write_atomic(out_path, dumps(report))
    print(f"wrote {out_path}", file=sys.stderr)

    if args.dump_intermediates:
        dump_dir = out_path.parent / f"{out_path.stem}_intermediates"
        dump_dir.mkdir(parents=True, exist_ok=True)
        for (net, crit), diag in diagnostics.items():
            dump_path = dump_dir / f"cdr_{net}_{crit}.csv"
            dump_path.write_text(cdr_table_csv(diag), encoding="utf-8")
        print(f"wrote intermediates to {dump_dir}", file=sys.stderr)

    if args.figures:
        from .figures import render_closeness, render_curves
        curve_rows = []
        for ds in datasets:
            for crit in criteria:
                block = report["events"][ds.name][crit.name]
                x, y = curve_points(block["mu"], block["delta"], 200)
                curve_rows.append((ds.name, crit.name, x, y))
        paths = render_curves(curve_rows, args.figures)
        paths.append(render_closeness(report["networks"], report["closeness"], args.figures))
        print(f"wrote {len(paths)} figures to {args.figures}", file=sys.stderr)

    print("network  closeness")
    ranked = sorted(zip(report["networks"], report["closeness"]), key=lambda p: -p[1])
    for name, value in ranked:
        print(f"{name:<8} {value:.6f}")
    print()
    print("  ".join(f"{i}. {name}" for i, name in enumerate(report["order"], start=1)))
    return 0


def cmd_cdr(args) -> int:
    datasets, criteria = load_dataset(args.input, args.format)
    config = _config_from(args)
    by_name = {ds.name: ds for ds in datasets}
    if args.network not in by_name:
        raise DatasetError(f"unknown network '{args.network}'")
    if args.criterion not in {c.name for c in criteria}:
        raise DatasetError(f"unknown criterion '{args.criterion}'")
    ds = by_name[args.network]
    out, rsp = compute_cdr(ds.matrices[args.criterion], config)
    if args.dump:
        from .report import CdrDiagnostics
        diag = CdrDiagnostics(nodes=list(ds.nodes), delta=rsp.delta,
                              sigma=out.sigma, densities=out.densities)
        Path(args.dump).write_text(cdr_table_csv(diag), encoding="utf-8")
        print(f"wrote {args.dump}", file=sys.stderr)
    order = np.argsort(-out.densities, kind="stable")
    print("node  cdr")
    for i in order:
        print(f"{ds.nodes[i]:<6}{out.densities[i]:.6f}")
    return 0


def cmd_curves(args) -> int:
    datasets, criteria = load_dataset(args.input, args.format)
    config = _config_from(args)
    if args.samples < 1:
        raise DatasetError(f"samples must be a positive integer (got {args.samples})")
    scores, _ = score_events(datasets, criteria, config)
    rows = []
    curve_rows = []
    for ds in datasets:
        for crit in criteria:
            dist = scores[ds.name][crit.name]
            x, y = curve_points(dist.mu, dist.delta, args.samples)
            curve_rows.append((ds.name, crit.name, x, y))
            for xi, yi in zip(x, y):
                rows.append((ds.name, crit.name, xi, yi))
    write_atomic(Path(args.output), curves_csv(rows))
    print(f"wrote {args.output}", file=sys.stderr)
    if args.figures:
        from .figures import render_curves
        paths = render_curves(curve_rows, args.figures)
        print(f"wrote {len(paths)} figures to {args.figures}", file=sys.stderr)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"rank": cmd_rank, "cdr": cmd_cdr, "curves": cmd_curves}[args.command]
    try:
        return handler(args)
    except NetrankError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        name = getattr(exc, "filename", None)
        where = f" ({name})" if name else ""
        print(f"I/O error: {exc}{where}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())
