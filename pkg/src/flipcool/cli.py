"""Command-line interface: simulate, fit, verify, oracle."""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .experiments import (
    MODEL_PREDICTORS,
    MODES,
    fit_scaling,
    read_csv,
    run_experiment,
    summarize,
    write_csv,
    write_summary,
)
from .oracle import expected_convergence_exact
from .words import (
    Configuration,
    dyck_decompose,
    energy,
    parse_configuration,
    tuned_alpha,
    variant_bound,
    variant_phi,
    volume,
)

_EXACT_SOLVE_LIMIT = 14


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _float_list(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated float list: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flipcool",
        description="Cooling dynamics on balanced two-letter words: "
        "simulation, scaling fits, and exact verification.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="run replicated cooling experiments")
    sim.add_argument("--mode", choices=MODES, required=True)
    sim.add_argument("--word", help="start word for --mode word, e.g. 112122")
    sim.add_argument(
        "--n-list",
        type=_int_list,
        default=[],
        help="comma-separated even word lengths, e.g. 16,32,64",
    )
    sim.add_argument("--reps", type=int, default=100)
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--out", required=True, help="CSV file for per-run records")
    sim.add_argument("--summary", help="optional JSON file with per-length stats")
    sim.add_argument("--workers", type=int, default=1)
    sim.add_argument("--fig", help="optional PNG of mean steps against length")

    fit = sub.add_parser("fit", help="fit a growth law to simulation output")
    fit.add_argument("--in", dest="infile", required=True, help="CSV from simulate")
    fit.add_argument("--model", choices=sorted(MODEL_PREDICTORS), required=True)
    fit.add_argument("--fig", help="optional PNG of the data with the fitted curve")

    ver = sub.add_parser("verify", help="run exact small-instance checks")
    ver.add_argument("--max-n", type=int, default=10, help="largest word length")
    ver.add_argument(
        "--alphas", type=_float_list, default=[0.25, 0.5, 0.75], help="variant exponents"
    )
    ver.add_argument("--json", dest="json_out", help="optional JSON report file")

    orc = sub.add_parser("oracle", help="inspect one word exactly")
    orc.add_argument("--word", required=True)
    orc.add_argument("--alphas", type=_float_list, default=[0.5])
    orc.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def _cmd_simulate(args, parser) -> int:
    word = None
    if args.mode == "word":
        if not args.word:
            parser.error("--mode word requires --word")
        try:
            word = parse_configuration(args.word)
        except ValueError as exc:
            parser.error(str(exc))
    elif args.word:
        parser.error("--word only makes sense with --mode word")
    elif not args.n_list:
        parser.error("--n-list is required unless --mode word")
    for n in args.n_list:
        if n < 2 or n % 2:
            parser.error(f"word lengths must be positive and even, got {n}")
    if args.reps < 1:
        parser.error("--reps must be at least 1")
    if args.workers < 1:
        parser.error("--workers must be at least 1")

    started = time.perf_counter()
    records = run_experiment(
        args.mode, args.n_list, args.reps, args.seed, word=word, workers=args.workers
    )
    elapsed = time.perf_counter() - started
    write_csv(args.out, records)
    if args.summary:
        write_summary(args.summary, records)
    if args.fig:
        from .figures import save_scaling_figure

        save_scaling_figure(
            args.fig, summarize(records), title=f"cooling steps, {args.mode} starts"
        )
    print(
        f"{len(records)} runs in {elapsed:.1f}s -> {args.out}",
        file=sys.stderr,
    )
    return 0


def _cmd_fit(args) -> int:
    records = read_csv(args.infile)
    result = fit_scaling(records, args.model)
    print(f"model: {result.model}")
    print(f"c: {result.c:.6g}")
    print(f"relative rms residual: {result.residual:.4%}")
    print(f"log-log slope: {result.loglog_slope:.4f}")
    for n, mean in result.points:
        predicted = result.c * MODEL_PREDICTORS[result.model](n)
        print(f"  n={n}: mean T {mean:.1f}, fit {predicted:.1f}")
    if args.fig:
        from .figures import save_scaling_figure

        save_scaling_figure(
            args.fig, summarize(records), fit=result, title=f"{result.model} fit"
        )
    return 0


def _cmd_verify(args, parser) -> int:
    from .verification import run_verification

    if args.max_n < 2 or args.max_n % 2 or args.max_n > 14:
        parser.error("--max-n must be an even length between 2 and 14")
    for alpha in args.alphas:
        if not 0.0 < alpha < 1.0:
            parser.error(f"alphas must lie strictly inside (0, 1), got {alpha}")
    results = run_verification(args.max_n, args.alphas)
    width = max(len(r.name) for r in results)
    counts = {"pass": 0, "discrepancy": 0, "fail": 0}
    for r in results:
        counts[r.status] += 1
        print(f"{r.name:<{width}}  {r.status.upper():<11}  {r.detail}")
    print(
        f"{counts['pass']} passed, {counts['discrepancy']} discrepancies, "
        f"{counts['fail']} failed"
    )
    if args.json_out:
        with open(args.json_out, "w") as fh:
            json.dump(
                [
                    {"name": r.name, "status": r.status, "detail": r.detail}
                    for r in results
                ],
                fh,
                indent=2,
            )
            fh.write("\n")
    return 1 if counts["fail"] else 0


def _oracle_payload(word: Configuration, alphas: list[float]) -> dict:
    payload = {
        "word": str(word),
        "length": len(word),
        "energy": energy(word),
        "volume": float(volume(word)),
        "factors": [
            {
                "span": [f.start + 1, f.end],
                "height": f.height,
                "sign": f.sign.value,
                "ones": f.ones,
            }
            for f in dyck_decompose(word)
        ],
        "variants": [
            {
                "alpha": alpha,
                "phi": variant_phi(word, alpha),
                "bound": variant_bound(word, alpha),
            }
            for alpha in alphas
        ],
    }
    if len(word) >= 6:
        alpha_star = tuned_alpha(len(word) // 2)
        payload["tuned_alpha"] = {
            "alpha": alpha_star,
            "phi": variant_phi(word, alpha_star),
            "bound": variant_bound(word, alpha_star),
        }
    if len(word) <= _EXACT_SOLVE_LIMIT:
        table = expected_convergence_exact(len(word))
        payload["expected_T"] = table[word]
    else:
        payload["expected_T"] = None
    return payload


def _cmd_oracle(args, parser) -> int:
    try:
        word = parse_configuration(args.word)
    except ValueError as exc:
        parser.error(str(exc))
    for alpha in args.alphas:
        if not 0.0 < alpha < 1.0:
            parser.error(f"alphas must lie strictly inside (0, 1), got {alpha}")
    payload = _oracle_payload(word, args.alphas)
    if args.format == "json":
        print(json.dumps(payload, indent=2))
        return 0
    print(f"word:    {payload['word']}")
    print(f"length:  {payload['length']}")
    print(f"energy:  {payload['energy']}")
    print(f"volume:  {payload['volume']:g}")
    print(f"factors: {len(payload['factors'])}")
    for f in payload["factors"]:
        sign = "+" if f["sign"] > 0 else "-"
        print(
            f"  letters {f['span'][0]}..{f['span'][1]} at height {f['height']} "
            f"({sign}), {f['ones']} ones"
        )
    for row in payload["variants"]:
        print(
            f"alpha={row['alpha']:g}: variant {row['phi']:.6f}, "
            f"convergence ceiling {row['bound']:.6f}"
        )
    if "tuned_alpha" in payload:
        row = payload["tuned_alpha"]
        print(
            f"tuned alpha {row['alpha']:.6f}: variant {row['phi']:.6f}, "
            f"ceiling {row['bound']:.6f}"
        )
    if payload["expected_T"] is None:
        print(
            f"exact E[T]: omitted (needs length <= {_EXACT_SOLVE_LIMIT} to "
            f"enumerate all words)"
        )
    else:
        print(f"exact E[T]: {payload['expected_T']:.6f}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "simulate":
            return _cmd_simulate(args, parser)
        if args.command == "fit":
            return _cmd_fit(args)
        if args.command == "verify":
            return _cmd_verify(args, parser)
        if args.command == "oracle":
            return _cmd_oracle(args, parser)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
