"""Command-line interface: ``xover {cross,demo,bench,evolve}``.

Settings can also come from a flat ``key=value`` file given by ``--config``
or the ``XOVER_CONFIG`` environment variable. Keys are the long flag names
of the chosen subcommand (``alphas=0.2,0.5``); flags on the command line
override file entries.

Exit codes: 0 success, 1 golden-check failure, 2 usage or config error,
3 numeric failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import os
import sys
import tempfile
from pathlib import Path
from typing import Optional, Sequence

from . import binary, golden, permutation, real
from .core import ChromosomeError, CrossoverParams, RandomSource
from .experiment import (
    GA_OPERATORS,
    GENE_OPERATORS,
    CellError,
    ExperimentConfig,
    NumericError,
    evolve,
    run_experiment,
)

CONFIG_ENV = "XOVER_CONFIG"
BENCH_HEADER = ["operator", "alpha", "tf", "sum", "mean", "sd", "count", "seed"]
SERIES_HEADER = [
    "operator", "alpha", "tf", "generation",
    "parent1", "parent2", "offspring1", "offspring2", "value",
]

BIT_OPS = ("single_point", "k_point", "uniform", "uniform_coin", "hux", "shx", "tpx")
REAL_OPS = ("rspx", "sax", "wax", "blx", "bx", "sbx", "lpx")
PERM_OPS = ("pmx", "cx")
CROSS_OPS = BIT_OPS + REAL_OPS + PERM_OPS


class UsageError(Exception):
    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(2, f"{self.prog}: error: {message}\n")


# -- value parsing ------------------------------------------------------------

def _floats(text: str) -> list[float]:
    return [float(t) for t in text.split(",") if t.strip()]


def _ints(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip()]


def _words(text: str) -> list[str]:
    return [t.strip().lower() for t in text.split(",") if t.strip()]


def _range(text: str) -> tuple[float, float]:
    vals = _floats(text)
    if len(vals) != 2:
        raise argparse.ArgumentTypeError("expected lo,hi")
    return vals[0], vals[1]


def _bool(text: str) -> bool:
    t = text.strip().lower()
    if t in ("1", "true", "yes", "on"):
        return True
    if t in ("0", "false", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"expected true/false, got {text!r}")


def fmt_gene(x) -> str:
    return format(x, ".6g") if isinstance(x, float) else str(x)


def fmt_row(genes) -> str:
    return ",".join(fmt_gene(g) for g in genes)


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="xover", description="Crossover operator toolkit.")
    parser.add_argument("--config", help=f"key=value settings file (default: ${CONFIG_ENV})")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("cross", help="apply one crossover to explicit parents")
    c.add_argument("--op", required=True, choices=CROSS_OPS)
    c.add_argument("--p1", required=True, help="comma-separated genes (bits may also be written as 0110...)")
    c.add_argument("--p2", required=True)
    c.add_argument("--p3", help="third parent (tpx)")
    c.add_argument("--alpha", help="alpha, or a comma list of alpha_m (wax)")
    c.add_argument("--beta", help="comma list of beta_m (wax)")
    c.add_argument("--eta", type=float, default=2.0)
    c.add_argument("--mu", type=float)
    c.add_argument("--r", type=float)
    c.add_argument("--cut", type=int)
    c.add_argument("--cuts", type=_ints)
    c.add_argument("--k", type=int, help="1-based gene index")
    c.add_argument("--mask")
    c.add_argument("--bias", type=float, default=0.5)
    c.add_argument("--seg", type=_ints, help="lo,hi (1-based, inclusive)")
    c.add_argument("--mode", choices=("single", "all"), default="single")
    c.add_argument("--unshuffle", type=_bool, default=True)
    c.add_argument("--seed", type=int, default=0)

    sub.add_parser("demo", help="check the built-in worked examples")

    b = sub.add_parser("bench", help="run the operator x alpha x test-function grid")
    b.add_argument("--ops", type=_words, default=["bx", "sbx", "lpx"])
    b.add_argument("--alphas", type=_floats, default=[0.2, 0.5, 0.7])
    b.add_argument("--tfs", type=_words, default=["tf1", "tf3", "tf7"])
    b.add_argument("--generations", type=int, default=100)
    b.add_argument("--eta", type=float, default=2.0)
    b.add_argument("--range", type=_range, default=(0.0, 1.0), help="parent gene interval lo,hi")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--out", default="-", help="CSV path, '-' for stdout")
    b.add_argument("--series", help="per-generation CSV path")
    b.add_argument("--workers", type=int, default=1)

    e = sub.add_parser("evolve", help="run the crossover-only GA")
    e.add_argument("--op", required=True, choices=GA_OPERATORS)
    e.add_argument("--tf", required=True, choices=("tf1", "tf3", "tf7"))
    e.add_argument("--dim", type=int, default=5)
    e.add_argument("--pop", type=int, default=40)
    e.add_argument("--gens", type=int, default=100)
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--alpha", type=float)
    e.add_argument("--eta", type=float, default=2.0)
    e.add_argument("--range", type=_range, default=(0.0, 1.0))
    e.add_argument("--out", default="-")
    return parser


# -- config file ------------------------------------------------------------------

def read_config(path: str) -> list[tuple[str, str]]:
    entries = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep or not key.strip():
            raise UsageError("--config", f"{path}:{lineno}: expected key=value")
        entries.append((key.strip().replace("_", "-"), value.strip()))
    return entries


def _subparser(parser: argparse.ArgumentParser, command: str) -> argparse.ArgumentParser:
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            return action.choices[command]
    raise KeyError(command)


def _split_global(argv: list[str]) -> tuple[Optional[str], Optional[int]]:
    """Config path and index of the subcommand token, without full parsing."""
    path, i = None, 0
    while i < len(argv):
        tok = argv[i]
        if tok == "--config" and i + 1 < len(argv):
            path, i = argv[i + 1], i + 2
        elif tok.startswith("--config="):
            path, i = tok.split("=", 1)[1], i + 1
        elif tok.startswith("-"):
            i += 1
        else:
            return path, i
    return path, None


def expand_config(argv: list[str], parser: argparse.ArgumentParser) -> list[str]:
    """Insert config-file entries as flags right after the subcommand."""
    path, at = _split_global(argv)
    path = path or os.environ.get(CONFIG_ENV)
    if not path or at is None or argv[at] not in COMMANDS:
        return argv
    command = argv[at]
    try:
        entries = read_config(path)
    except OSError as exc:
        raise UsageError("--config", str(exc)) from exc
    known = {s for a in _subparser(parser, command)._actions for s in a.option_strings}
    tokens = []
    for key, value in entries:
        flag = f"--{key}"
        if flag not in known or flag == "--help":
            raise UsageError("--config", f"unknown key {key!r} for '{command}'")
        tokens += [flag, value]
    return argv[: at + 1] + tokens + argv[at + 1 :]


# -- cross -----------------------------------------------------------------------

_FLAG_HINTS = [
    ("gene index", "--k"), ("cut", "--cut"), ("mu must", "--mu"), ("r must", "--r"),
    ("eta", "--eta"), ("bias", "--bias"), ("mask", "--mask"), ("segment", "--seg"),
    ("alpha", "--alpha"), ("coefficient", "--alpha/--beta"),
]


def _flag_for(message: str) -> str:
    for hint, flag in _FLAG_HINTS:
        if hint in message:
            return flag
    return "--p1/--p2"


def _need(value, flag: str, op: str):
    if value is None:
        raise UsageError(flag, f"required by --op {op}")
    return value


def _parse_parent(text: str, flag: str, kind: str) -> tuple:
    try:
        if kind == "real":
            return tuple(_floats(text))
        if kind == "bits" and "," not in text and set(text.strip()) <= {"0", "1"}:
            return tuple(int(c) for c in text.strip())
        return tuple(_ints(text))
    except ValueError as exc:
        raise UsageError(flag, f"cannot parse genes {text!r}") from exc


def _single_alpha(text: Optional[str], op: str) -> float:
    try:
        return float(_need(text, "--alpha", op))
    except ValueError as exc:
        raise UsageError("--alpha", f"not a number: {text!r}") from exc


def cross(args) -> list[tuple[str, tuple]]:
    op = args.op
    kind = "real" if op in REAL_OPS else "bits" if op in BIT_OPS else "int"
    p1 = _parse_parent(args.p1, "--p1", kind)
    p2 = _parse_parent(args.p2, "--p2", kind)
    rows = [("parent1", p1), ("parent2", p2)]
    rng = RandomSource(args.seed)

    if op == "single_point":
        kids = binary.single_point(p1, p2, _need(args.cut, "--cut", op))
    elif op == "k_point":
        kids = binary.k_point(p1, p2, _need(args.cuts, "--cuts", op))
    elif op == "uniform":
        mask = _parse_parent(_need(args.mask, "--mask", op), "--mask", "bits")
        kids = binary.uniform_masked(p1, p2, mask)
    elif op == "uniform_coin":
        kids = binary.uniform_coin(p1, p2, args.bias, rng)
    elif op == "hux":
        kids = binary.half_uniform(p1, p2, rng)
    elif op == "shx":
        kids = binary.shuffle_crossover(p1, p2, _need(args.cut, "--cut", op), rng, args.unshuffle)
    elif op == "tpx":
        p3 = _parse_parent(_need(args.p3, "--p3", op), "--p3", "bits")
        rows.append(("parent3", p3))
        kids = binary.three_parent(p1, p2, p3)
    elif op == "rspx":
        kids = real.rspx(p1, p2, _need(args.cut, "--cut", op))
    elif op == "sax":
        kids = real.sax_crossover(p1, p2, _need(args.k, "--k", op), _single_alpha(args.alpha, op))
    elif op == "wax":
        try:
            alphas = _floats(_need(args.alpha, "--alpha", op))
            betas = _floats(_need(args.beta, "--beta", op))
        except ValueError as exc:
            raise UsageError("--alpha/--beta", str(exc)) from exc
        if len(alphas) != len(betas):
            raise UsageError("--beta", "needs as many values as --alpha")
        kids = real.wax_crossover(p1, p2, list(zip(alphas, betas)), args.k)
    elif op == "blx":
        kids = real.blx_crossover(p1, p2, _single_alpha(args.alpha, op), rng, args.k)
    elif op == "bx":
        kids = real.bx_crossover(p1, p2, _single_alpha(args.alpha, op), rng, args.k, args.r)
    elif op == "sbx":
        kids = real.sbx_crossover(p1, p2, args.eta, rng, args.k, args.mu)
    elif op == "lpx":
        alpha = None if args.alpha is None else _single_alpha(args.alpha, op)
        params = CrossoverParams(alpha=alpha, eta=args.eta, gene_index=args.k, mode=args.mode)
        kids = real.lpx(p1, p2, params, rng)
    elif op == "pmx":
        seg = _need(args.seg, "--seg", op)
        if len(seg) != 2:
            raise UsageError("--seg", "expected lo,hi")
        kids = permutation.pmx(p1, p2, tuple(seg))
    else:
        kids = permutation.cx(p1, p2)

    rows += [(f"offspring{i}", kid) for i, kid in enumerate(kids, start=1)]
    return rows


def cmd_cross(args) -> int:
    try:
        rows = cross(args)
    except ChromosomeError as exc:
        raise UsageError(_flag_for(str(exc)), str(exc)) from exc
    for label, genes in rows:
        print(f"{label}: {fmt_row(genes)}")
    return 0


# -- demo ------------------------------------------------------------------------

def cmd_demo(args) -> int:
    results = golden.run_all()
    width = max(len(case.name) for case, _, _ in results)
    for case, got, ok in results:
        expected = fmt_row(case.expected)
        print(f"{'PASS' if ok else 'FAIL'}  {case.name:<{width}}  expected {expected}  got {fmt_row(got)}")
    failed = sum(not ok for _, _, ok in results)
    print(f"{len(results) - failed}/{len(results)} golden checks passed")
    return 1 if failed else 0


# -- bench -----------------------------------------------------------------------

def bench_csv(report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(BENCH_HEADER)
    for (op, alpha, tf), s in report.cells.items():
        w.writerow([op, repr(alpha), tf, repr(s.sum), repr(s.mean), repr(s.sd), s.count,
                    report.seeds[(op, alpha, tf)]])
    return buf.getvalue()


def series_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SERIES_HEADER)
    for r in records:
        w.writerow([r.operator, repr(r.alpha), r.tf, r.generation, repr(r.parent1), repr(r.parent2),
                    repr(r.offspring1), repr(r.offspring2), repr(r.value)])
    return buf.getvalue()


def _emit(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
        return
    target = Path(out)
    # write-then-rename so a failed run never leaves a partial file
    fd, tmp = tempfile.mkstemp(dir=target.parent or Path("."), prefix=f".{target.name}.")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def cmd_bench(args) -> int:
    if args.workers < 1:
        raise UsageError("--workers", "must be >= 1")
    for op in args.ops:
        if op not in GENE_OPERATORS:
            raise UsageError("--ops", f"unknown operator {op!r}; expected {sorted(GENE_OPERATORS)}")
    try:
        config = ExperimentConfig(
            operator_ids=tuple(args.ops),
            alphas=tuple(args.alphas),
            tf_ids=tuple(args.tfs),
            generations=args.generations,
            gene_low=args.range[0],
            gene_high=args.range[1],
            eta=args.eta,
            base_seed=args.seed,
            series=bool(args.series),
        )
    except (ValueError, KeyError) as exc:
        raise UsageError(_bench_flag(str(exc)), str(exc)) from exc
    try:
        report = run_experiment(config, workers=args.workers)
    except CellError as exc:
        if isinstance(exc.cause, NumericError):
            print(f"xover bench: numeric failure: {exc}", file=sys.stderr)
            for path in (args.out, args.series):
                if path and path != "-":
                    Path(path).unlink(missing_ok=True)
            return 3
        raise
    _emit(bench_csv(report), args.out)
    if args.series:
        _emit(series_csv(report.series), args.series)
    return 0


def _bench_flag(message: str) -> str:
    for hint, flag in [("alpha", "--alphas"), ("test function", "--tfs"), ("operator", "--ops"),
                       ("generations", "--generations"), ("gene", "--range"), ("eta", "--eta")]:
        if hint in message:
            return flag
    return "--ops"


# -- evolve ------------------------------------------------------------------------

def cmd_evolve(args) -> int:
    try:
        trace = evolve(args.op, args.tf, args.dim, args.pop, args.gens, args.seed,
                       alpha=args.alpha, eta=args.eta, gene_low=args.range[0], gene_high=args.range[1])
    except (ValueError, ChromosomeError) as exc:
        msg = str(exc)
        flag = next((f for h, f in [("dim", "--dim"), ("pop", "--pop"), ("generations", "--gens"),
                                    ("alpha", "--alpha"), ("eta", "--eta"), ("gene", "--range")]
                     if h in msg), "--op")
        raise UsageError(flag, msg) from exc
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["generation", "best_fitness"])
    for g, best in enumerate(trace, start=1):
        w.writerow([g, repr(best)])
    _emit(buf.getvalue(), args.out)
    return 0


COMMANDS = {"cross": cmd_cross, "demo": cmd_demo, "bench": cmd_bench, "evolve": cmd_evolve}


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(expand_config(argv, parser))
        return COMMANDS[args.command](args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except UsageError as exc:
        print(f"xover: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
