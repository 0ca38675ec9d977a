"""Command-line front end.

Subcommands:
  counts     level-count table (a_i, b_i, a_i+b_i)
  constants  growth constants in exact radical form plus decimal views
  probs      root-level probability distributions and their error report
  verify     three-way cross-validation over a list of symbols
  export     forest / spanning-tree / mosaic edge-list files

Exit codes: 0 success, 1 verification failure, 2 usage or precondition error.
The default vertex cap is 10**7 and can be overridden with the
MOSAICFOREST_CAP environment variable or --cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import forest as forest_mod
from . import mosaic as mosaic_mod
from .errors import SizeLimitError, StructureError, UnsupportedSymbolError
from .probability import (
    asymptotic_distribution,
    distribution_error_report,
    exact_distribution,
)
from .quadratic import QuadraticNumber
from .recurrence import (
    Geometry,
    SchlafliSymbol,
    Series,
    closed_form_count,
    euclidean_counts,
    layer_counts,
    spectral_constants,
)

ENV_CAP = "MOSAICFOREST_CAP"
DEFAULT_VERIFY_SYMBOLS = "4:5,5:4,4:6,6:4,5:5,4:4"


@dataclass(frozen=True)
class RunConfig:
    """Validated command configuration; built before any work is dispatched."""

    symbol: SchlafliSymbol | None
    levels: int
    precision: int
    fmt: str
    out: str
    cap: int
    mode: str = "asymptotic"
    symbols: tuple[SchlafliSymbol, ...] = ()
    what: str = ""
    inject_corruption: bool = False


def _default_cap() -> int:
    raw = os.environ.get(ENV_CAP, "")
    if not raw:
        return mosaic_mod.DEFAULT_VERTEX_CAP
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(2)


def _parse_symbols(text: str) -> tuple[SchlafliSymbol, ...]:
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            p, q = chunk.split(":")
            out.append(SchlafliSymbol(int(p), int(q)))
        except (ValueError, TypeError) as exc:
            raise argparse.ArgumentTypeError(
                f"bad symbol {chunk!r}: expected p:q with integers >= 3 ({exc})"
            ) from None
    if not out:
        raise argparse.ArgumentTypeError("empty symbol list")
    return tuple(out)


def _frac_json(fr: Fraction) -> dict[str, str]:
    return {"numerator": str(fr.numerator), "denominator": str(fr.denominator)}


class _Output:
    """Collects lines, then writes them to stdout or the --out path atomically."""

    def __init__(self, path: str):
        self.path = path
        self.lines: list[str] = []

    def write(self, text: str) -> None:
        self.lines.append(text)

    def flush(self) -> None:
        body = "\n".join(self.lines) + ("\n" if self.lines else "")
        if self.path == "-":
            sys.stdout.write(body)
        else:
            with open(self.path, "w", encoding="utf-8") as fh:
                fh.write(body)


def _emit_counts(cfg: RunConfig, out: _Output) -> None:
    rows = layer_counts(cfg.symbol, cfg.levels)
    if cfg.fmt == "markdown":
        out.write("| i | a_i | b_i | a_i+b_i |")
        out.write("|---|-----|-----|---------|")
        for r in rows:
            out.write(f"| {r.level} | {r.a} | {r.b} | {r.total} |")
    elif cfg.fmt == "csv":
        out.write("level,a,b,total")
        for r in rows:
            out.write(f"{r.level},{r.a},{r.b},{r.total}")
    else:
        for r in rows:
            out.write(
                json.dumps(
                    {"level": r.level, "a": str(r.a), "b": str(r.b), "total": str(r.total)},
                    sort_keys=True,
                )
            )


def _emit_constants(cfg: RunConfig, out: _Output) -> None:
    constants = spectral_constants(cfg.symbol, cfg.precision)
    named = constants.named()
    decimals = constants.decimals(cfg.precision)
    short = constants.decimals(6)
    if cfg.fmt == "markdown":
        out.write(
            f"constants for {cfg.symbol} (trace {constants.trace}, "
            f"radicand {constants.radicand})"
        )
        out.write("| name | exact | 6 decimals | full precision |")
        out.write("|------|-------|------------|----------------|")
        for name, value in named.items():
            out.write(f"| {name} | {value} | {short[name]} | {decimals[name]} |")
    elif cfg.fmt == "csv":
        out.write("name,exact,decimal")
        for name, value in named.items():
            out.write(f'{name},"{value}",{decimals[name]}')
    else:
        for name, value in named.items():
            out.write(
                json.dumps(
                    {"name": name, "exact": str(value), "decimal": decimals[name]},
                    sort_keys=True,
                )
            )


def _emit_probs(cfg: RunConfig, out: _Output) -> None:
    level = cfg.levels
    dists = []
    if cfg.mode in ("asymptotic", "both"):
        constants = spectral_constants(cfg.symbol, cfg.precision)
        dists.append(asymptotic_distribution(constants, level))
    if cfg.mode in ("exact", "both"):
        dists.append(exact_distribution(cfg.symbol, level))
    digits = 6
    if cfg.fmt == "markdown":
        for d in dists:
            out.write(f"{d.kind.value} root-level distribution for {cfg.symbol}, level {level}")
            out.write("| j | mass | cumulative_below |")
            out.write("|---|------|------------------|")
            masses = d.decimals(digits)
            for j in range(level, -1, -1):
                cum = d.cumulative_below(j)
                if isinstance(cum, Fraction):
                    cum = QuadraticNumber(cum)
                out.write(f"| {j} | {masses[j]} | {cum.decimal(digits)} |")
    elif cfg.fmt == "csv":
        # exact rows also carry the unnormalised per-level vertex count
        total = layer_counts(cfg.symbol, level)[level].total
        out.write("kind,j,mass,numerator,denominator,count")
        for d in dists:
            masses = d.decimals(digits)
            for j in range(level, -1, -1):
                m = d.point_mass(j)
                if isinstance(m, Fraction):
                    out.write(
                        f"{d.kind.value},{j},{masses[j]},"
                        f"{m.numerator},{m.denominator},{m * total}"
                    )
                else:
                    out.write(f"{d.kind.value},{j},{masses[j]},,,")
    else:
        total = layer_counts(cfg.symbol, level)[level].total
        for d in dists:
            masses = d.decimals(digits)
            for j in range(level, -1, -1):
                rec: dict = {"kind": d.kind.value, "j": j, "mass": masses[j]}
                m = d.point_mass(j)
                if isinstance(m, Fraction):
                    rec["exact"] = _frac_json(m)
                    rec["count"] = str(m * total)
                out.write(json.dumps(rec, sort_keys=True))
    if cfg.mode == "both":
        report = distribution_error_report(dists[0], dists[1])
        if cfg.fmt == "markdown":
            out.write("")
            out.write("| j | abs error | order |")
            out.write("|---|-----------|-------|")
            for row in reversed(report.rows):
                order = f"1e{row.order}" if row.order is not None else "0"
                out.write(f"| {row.root_level} | {row.difference.decimal(12)} | {order} |")
        elif cfg.fmt == "csv":
            out.write("error_j,abs_error,order")
            for row in reversed(report.rows):
                out.write(f"{row.root_level},{row.difference.decimal(12)},{row.order}")
        else:
            for row in reversed(report.rows):
                out.write(
                    json.dumps(
                        {
                            "j": row.root_level,
                            "abs_error": row.difference.decimal(12),
                            "order": row.order,
                        },
                        sort_keys=True,
                    )
                )


def _verify_symbol(
    symbol: SchlafliSymbol, levels: int, cap: int, inject_corruption: bool
) -> list[tuple[str, bool, str]]:
    """The three-way cross-check for one symbol.

    (a) mosaic layer sizes vs the recursion, (b) forest empirical counts vs
    the recursion, (c) closed form vs the recursion up to level 200, and
    (d) the forest root-level histogram vs the exact distribution.
    """
    results: list[tuple[str, bool, str]] = []
    m = mosaic_mod.build(symbol, levels, cap=cap)
    f = forest_mod.grow(m, levels)
    if inject_corruption:
        victim = m.layers[levels][0]
        f.root_level[victim] = (f.root_level[victim] + 1) % (levels + 1)

    euclidean = symbol.geometry is Geometry.EUCLIDEAN
    deep = levels if euclidean else 200
    rows = layer_counts(symbol, max(levels, deep))

    ok = all(len(m.layers[i]) == rows[i].total for i in range(levels + 1))
    results.append(("layer-sizes", ok, "mosaic layer sizes vs recursion"))

    ok = all(f.counts(i) == (rows[i].a, rows[i].b) for i in range(levels + 1))
    results.append(("forest-counts", ok, "empirical counts vs recursion"))

    if euclidean:
        ok = all(
            (rows[i].a, rows[i].b) == (euclidean_counts(i).a, euclidean_counts(i).b)
            for i in range(1, levels + 1)
        )
        results.append(("closed-form", ok, "affine closed form vs recursion"))
    else:
        constants = spectral_constants(symbol)
        ok = all(
            closed_form_count(constants, i, series) == val
            for i in range(1, 201)
            for series, val in (
                (Series.A, rows[i].a),
                (Series.B, rows[i].b),
                (Series.ALL, rows[i].total),
            )
        )
        results.append(("closed-form", ok, "eigen closed form vs recursion, levels 1..200"))

    ok = True
    for i in range(1, levels + 1):
        hist = f.root_level_histogram(i)
        dist = exact_distribution(symbol, i, rows)
        total = rows[i].total
        if any(Fraction(hist.get(j, 0), total) != dist.point_mass(j) for j in range(i + 1)):
            ok = False
            break
    results.append(("histogram", ok, "root-level histogram vs exact distribution"))
    return results


def _emit_verify(cfg: RunConfig, out: _Output) -> bool:
    all_ok = True
    for symbol in cfg.symbols:
        try:
            results = _verify_symbol(symbol, cfg.levels, cfg.cap, cfg.inject_corruption)
        except (StructureError, SizeLimitError) as exc:
            out.write(f"FAIL {symbol}: {exc}")
            all_ok = False
            continue
        for name, ok, detail in results:
            all_ok &= ok
            out.write(f"{'ok  ' if ok else 'FAIL'} {symbol} {name}: {detail}")
    out.write("verification " + ("PASSED" if all_ok else "FAILED"))
    return all_ok


def _emit_export(cfg: RunConfig, out: _Output) -> None:
    m = mosaic_mod.build(cfg.symbol, cfg.levels, cap=cfg.cap)
    if cfg.what == "mosaic-edges":
        out.write(m.edge_list_text().rstrip("\n"))
        return
    f = forest_mod.grow(
        m, cfg.levels, allow_triangles=(cfg.symbol.p == 3)
    )
    if cfg.what == "forest":
        out.write(f.to_dot().rstrip("\n"))
        return
    tree, connectors = f.spanning_tree()
    s = cfg.symbol
    out.write(f"# spanning-tree p={s.p} q={s.q} levels={cfg.levels} vertices={m.vertex_count}")
    for u, v in tree:
        out.write(f"{u} {v}")
    for u, v in connectors:
        out.write(f"{u} {v} connector")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mosaicforest",
        description="Layered tree forests on regular {p,q} tilings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, need_pq=True):
        if need_pq:
            sp.add_argument("--p", type=int, required=True, help="gon size, >= 3")
            sp.add_argument("--q", type=int, required=True, help="vertex degree, >= 3")
        sp.add_argument("--levels", type=int, default=6, help="levels/belts to use")
        sp.add_argument("--precision", type=int, default=30, help="decimal digits")
        sp.add_argument(
            "--format",
            dest="fmt",
            choices=("markdown", "csv", "jsonl"),
            default="markdown",
        )
        sp.add_argument("--out", default="-", help="output path, '-' for stdout")
        sp.add_argument("--cap", type=int, default=None, help="vertex cap")

    sp = sub.add_parser("counts", help="level-count table")
    common(sp)

    sp = sub.add_parser("constants", help="growth constants")
    common(sp)

    sp = sub.add_parser("probs", help="root-level distributions")
    common(sp)
    sp.add_argument(
        "--mode", choices=("asymptotic", "exact", "both"), default="asymptotic"
    )

    sp = sub.add_parser("verify", help="three-way cross-validation")
    common(sp, need_pq=False)
    sp.add_argument(
        "--symbols",
        type=_parse_symbols,
        default=_parse_symbols(DEFAULT_VERIFY_SYMBOLS),
        help="comma-separated p:q pairs",
    )
    sp.add_argument(
        "--inject-corruption",
        action="store_true",
        help="deliberately corrupt one grown forest (negative control)",
    )

    sp = sub.add_parser("export", help="graph exports")
    common(sp)
    sp.add_argument(
        "--what", choices=("forest", "spanning", "mosaic-edges"), required=True
    )
    return parser


def _make_config(args: argparse.Namespace) -> RunConfig:
    symbol = None
    if getattr(args, "p", None) is not None:
        symbol = SchlafliSymbol(args.p, args.q)
    if args.levels < 0 or (args.command in ("probs",) and args.levels < 1):
        raise UnsupportedSymbolError(f"levels must be >= 1, got {args.levels}")
    if args.precision < 1:
        raise UnsupportedSymbolError(f"precision must be >= 1, got {args.precision}")
    return RunConfig(
        symbol=symbol,
        levels=args.levels,
        precision=args.precision,
        fmt=args.fmt,
        out=args.out,
        cap=args.cap if args.cap is not None else _default_cap(),
        mode=getattr(args, "mode", "asymptotic"),
        symbols=getattr(args, "symbols", ()),
        what=getattr(args, "what", ""),
        inject_corruption=getattr(args, "inject_corruption", False),
    )


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _make_config(args)
        out = _Output(cfg.out)
        if args.command == "counts":
            _emit_counts(cfg, out)
        elif args.command == "constants":
            _emit_constants(cfg, out)
        elif args.command == "probs":
            _emit_probs(cfg, out)
        elif args.command == "verify":
            ok = _emit_verify(cfg, out)
            out.flush()
            return 0 if ok else 1
        elif args.command == "export":
            _emit_export(cfg, out)
    except (UnsupportedSymbolError, SizeLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out.flush()
    return 0


if __name__ == "__main__":
    sys.exit(main())
