"""Command line front end.

Four subcommands cover the library surface:

* ``bounds``   closed-form / Newton-recurrence enclosures of the radii
* ``radius``   bisection-refined radii with residual certification
* ``verify``   the full machine-checkable claim suite
* ``explore-interlace``  numerical zero tables for the open interlacing
  question

Output formats are text (default), csv and json.  CSV columns are fixed and
floats carry 17 significant digits; JSON output is ``{"schema_version": 1,
"command": ..., "rows": [...]}`` with keys matching the CSV columns.

Exit codes: 0 success, 1 verify ran and some claim failed, 2 usage or domain
error, 3 numerical failure (series truncation or lost root).
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import math
import sys

from .errors import DomainError, OrderError, RootNotFoundError, TruncationError
from .families import DOMAIN_TEXT, Base, Family, check_domain
from .roots import find_radius
from .series import MAX_TERMS_ENV
from .sums import MAX_CLOSED_BRACKET, MAX_NEWTON_BRACKET, SumSource, radius_bracket
from .verify import default_config, explore_interlacing, run_verify

EXIT_OK = 0
EXIT_CLAIMS_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3

BOUNDS_COLUMNS = ("family", "parameter", "k", "lower", "upper", "source")
RADIUS_COLUMNS = ("family", "parameter", "radius", "residual", "iterations", "lo3", "hi3")
VERIFY_COLUMNS = (
    "claim_id",
    "family",
    "parameter",
    "measured",
    "expected_low",
    "expected_high",
    "tolerance",
    "passed",
    "note",
)
INTERLACE_COLUMNS = ("nu", "index", "source", "zero")

_FAMILY_GUIDE = """\
families (normalizations of classical functions, f(0)=0, f'(0)=1):
  bessel-circle   x^(1-nu) Bessel J_nu(x), scaled; order nu > -1
  bessel-sqrt     same with x -> sqrt(x) substituted; order nu > -1
  struve-circle   x^(-nu) Struve H_nu(x), scaled; -1/2 <= nu <= 1/2
  struve-sqrt     substituted variant; -1/2 <= nu <= 1/2
  lommel-circle   x^(1/2-mu) Lommel s_(mu-1/2,1/2)(x), scaled; 0 < |mu| < 1
  lommel-sqrt     substituted variant; 0 < |mu| < 1
'all' selects every family.  Sqrt-family radii are reported in the
substituted variable.

environment:
  %s   series term budget (default 400), read at call time

exit codes: 0 ok, 1 failed verify claims, 2 usage/domain error, 3 numerics
""" % MAX_TERMS_ENV


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """Everything one invocation needs, resolved from argv."""

    command: str
    families: tuple[Family, ...] = ()
    parameters: tuple[float, ...] = ()
    strict_domain: bool = False
    k: int = 3
    source: str = "closed"
    fmt: str = "text"
    out: str | None = None
    only: str = ""
    tol_overrides: tuple[tuple[str, float], ...] = ()
    nus: tuple[float, ...] = ()
    count: int = 8


def _fmt17(x: float) -> str:
    return format(float(x), ".17g")


def _add_selection(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--family",
        required=True,
        metavar="NAME",
        help="one of %s, or 'all'" % ", ".join(f.value for f in Family),
    )
    pick = sub.add_mutually_exclusive_group(required=True)
    pick.add_argument("--param", type=float, help="single parameter value")
    pick.add_argument(
        "--range",
        nargs=3,
        type=float,
        metavar=("START", "STOP", "STEP"),
        help="inclusive parameter sweep; out-of-domain points are skipped with a warning",
    )


def _add_output(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("text", "csv", "json"), default="text")
    sub.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radii",
        description="Radii of starlikeness of normalized Bessel, Struve and "
        "Lommel functions, with certified enclosures.",
        epilog=_FAMILY_GUIDE,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    bounds = sub.add_parser(
        "bounds",
        help="print enclosures of orders 1..k",
        description="Euler-Rayleigh enclosures lower < radius < upper for orders 1..k.",
    )
    _add_selection(bounds)
    bounds.add_argument("--k", type=int, default=3, help="highest enclosure order (default 3)")
    bounds.add_argument(
        "--source",
        choices=("closed", "newton", "both"),
        default="closed",
        help="closed forms (k <= %d), Newton recurrence (k <= %d), or both"
        % (MAX_CLOSED_BRACKET, MAX_NEWTON_BRACKET),
    )
    _add_output(bounds)

    radius = sub.add_parser(
        "radius",
        help="compute radii by bracketed bisection",
        description="Radius of starlikeness, its equation residual, and the "
        "order-3 bracket used to certify it.",
    )
    _add_selection(radius)
    _add_output(radius)

    verify = sub.add_parser(
        "verify",
        help="run the claim suite",
        description="Run every quantitative claim check; exit 1 if any fails.",
    )
    verify.add_argument("--only", default="", metavar="PREFIX", help="keep claims whose id starts with PREFIX")
    verify.add_argument(
        "--tol",
        action="append",
        default=[],
        metavar="PREFIX=VALUE",
        help="override the tolerance for claims whose id starts with PREFIX (repeatable)",
    )
    _add_output(verify)

    explore = sub.add_parser(
        "explore-interlace",
        help="zero tables for the interlacing question",
        description="Tabulate zeros of the two derivative combinations at "
        "Struve orders and report whether they interlace strictly. "
        "Numerical evidence for an open question.",
    )
    explore.add_argument(
        "--nu",
        type=float,
        action="append",
        metavar="NU",
        help="Struve order; repeatable (default: -0.5 0.0 0.5)",
    )
    explore.add_argument("--count", type=int, default=8, help="zeros per combination (max 20)")
    _add_output(explore)
    return parser


def _resolve_config(args: argparse.Namespace) -> RunConfig:
    command = args.command
    families: tuple[Family, ...] = ()
    parameters: tuple[float, ...] = ()
    strict = False
    if command in ("bounds", "radius"):
        if args.family == "all":
            families = tuple(Family)
        else:
            try:
                families = (Family(args.family),)
            except ValueError:
                raise DomainError(
                    "unknown family %r; expected one of: %s, all"
                    % (args.family, ", ".join(f.value for f in Family))
                ) from None
        if args.param is not None:
            parameters = (float(args.param),)
            strict = len(families) == 1
        else:
            lo, hi, step = args.range
            if step <= 0.0:
                raise DomainError(f"range STEP must be positive, got {step!r}")
            if hi < lo:
                raise DomainError(f"range STOP {hi!r} is below START {lo!r}")
            n = int(math.floor((hi - lo) / step + 1e-9)) + 1
            parameters = tuple(lo + i * step for i in range(n))
    tol_overrides: list[tuple[str, float]] = []
    for item in getattr(args, "tol", []):
        prefix, sep, value = item.partition("=")
        if not sep or not prefix:
            raise DomainError(f"--tol expects PREFIX=VALUE, got {item!r}")
        try:
            tol_overrides.append((prefix, float(value)))
        except ValueError:
            raise DomainError(f"--tol value in {item!r} is not a number") from None
    if command == "bounds":
        limit = MAX_CLOSED_BRACKET if args.source == "closed" else MAX_NEWTON_BRACKET
        if not 1 <= args.k <= limit:
            raise DomainError(
                f"--k must be in 1..{limit} for source {args.source!r}, got {args.k}"
            )
    count = getattr(args, "count", 8)
    if command == "explore-interlace" and not 1 <= count <= 20:
        raise DomainError(f"--count must be in 1..20, got {count}")
    return RunConfig(
        command=command,
        families=families,
        parameters=parameters,
        strict_domain=strict,
        k=getattr(args, "k", 3),
        source=getattr(args, "source", "closed"),
        fmt=args.format,
        out=args.out,
        only=getattr(args, "only", ""),
        tol_overrides=tuple(tol_overrides),
        nus=tuple(args.nu) if getattr(args, "nu", None) else (-0.5, 0.0, 0.5),
        count=count,
    )


def _valid_points(cfg: RunConfig):
    """Yield (family, parameter) pairs, skipping or rejecting bad ones.

    A single explicitly requested pair fails hard; sweeps and all-family
    selections skip invalid points with a warning on stderr.
    """
    emitted = False
    for family in cfg.families:
        for p in cfg.parameters:
            try:
                check_domain(family, p)
            except DomainError as exc:
                if cfg.strict_domain:
                    raise
                print(f"warning: skipping {exc}", file=sys.stderr)
                continue
            emitted = True
            yield family, p
    if not emitted:
        raise DomainError("selection contains no valid (family, parameter) points")


def _bounds_rows(cfg: RunConfig) -> list[dict]:
    sources = {
        "closed": (SumSource.CLOSED_FORM,),
        "newton": (SumSource.NEWTON_RECURRENCE,),
        "both": (SumSource.CLOSED_FORM, SumSource.NEWTON_RECURRENCE),
    }[cfg.source]
    rows = []
    for family, p in _valid_points(cfg):
        for source in sources:
            limit = min(cfg.k, MAX_CLOSED_BRACKET) if source is SumSource.CLOSED_FORM else cfg.k
            for k in range(1, limit + 1):
                b = radius_bracket(family, p, k, source)
                rows.append(
                    {
                        "family": family.value,
                        "parameter": p,
                        "k": k,
                        "lower": b.lower,
                        "upper": b.upper,
                        "source": source.value,
                    }
                )
    return rows


def _radius_rows(cfg: RunConfig) -> list[dict]:
    rows = []
    for family, p in _valid_points(cfg):
        rep = find_radius(family, p)
        rows.append(
            {
                "family": family.value,
                "parameter": p,
                "radius": rep.radius,
                "residual": rep.residual,
                "iterations": rep.iterations,
                "lo3": rep.bracket3.lower,
                "hi3": rep.bracket3.upper,
            }
        )
    return rows


def _verify_rows(report) -> list[dict]:
    rows = []
    for o in report.outcomes:
        rows.append(
            {
                "claim_id": o.claim_id,
                "family": o.family,
                "parameter": o.parameter,
                "measured": o.measured,
                "expected_low": o.expected_low,
                "expected_high": o.expected_high,
                "tolerance": o.tolerance,
                "passed": o.passed,
                "note": o.note,
            }
        )
    return rows


def _interlace_rows(reports) -> list[dict]:
    rows = []
    for rep in reports:
        for index, (zero, source) in enumerate(rep.merged, start=1):
            rows.append({"nu": rep.nu, "index": index, "source": source, "zero": zero})
    return rows


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return _fmt17(value) if math.isfinite(value) else ("inf" if value > 0 else "-inf")
    if value is None:
        return ""
    return str(value)


def _render_csv(columns, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row[c]) for c in columns])
    return buf.getvalue()


def _json_safe(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None  # unbounded interval sides render as null
    return value


def _render_json(command: str, rows) -> str:
    payload = {
        "schema_version": 1,
        "command": command,
        "rows": [{k: _json_safe(v) for k, v in row.items()} for row in rows],
    }
    return json.dumps(payload, indent=2) + "\n"


def _render_table_text(rows, columns) -> str:
    lines = []
    for row in rows:
        lines.append("  ".join(f"{c}={_cell(row[c])}" for c in columns))
    return "\n".join(lines) + "\n" if lines else ""


def _render_verify_text(report) -> str:
    lines = []
    for o in report.outcomes:
        head = "PASS" if o.passed else "FAIL"
        par = "" if o.parameter is None else f"  param={_fmt17(o.parameter)}"
        note = f"  note={o.note}" if o.note else ""
        lines.append(
            f"{head} {o.claim_id}  family={o.family or '-'}{par}"
            f"  measured={_cell(o.measured)}"
            f"  expected=({_cell(o.expected_low)}, {_cell(o.expected_high)})"
            f"  tol={_cell(o.tolerance)}{note}"
        )
    n = len(report.outcomes)
    bad = len(report.failed)
    lines.append(f"{n - bad} of {n} claims passed" if bad else f"all {n} claims passed")
    return "\n".join(lines) + "\n"


def _render_interlace_text(reports) -> str:
    lines = []
    for rep in reports:
        verdict = "strict" if rep.strict else "NOT strict"
        lines.append(f"nu={_fmt17(rep.nu)}  first {rep.count} zeros per combination  interlacing: {verdict}")
        for index, (zero, source) in enumerate(rep.merged, start=1):
            lines.append(f"  {index:2d}. {_fmt17(zero):<24} {source}")
        lines.append(f"  note: {rep.note}")
    return "\n".join(lines) + "\n"


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run(cfg: RunConfig) -> int:
    if cfg.command == "bounds":
        rows = _bounds_rows(cfg)
        if cfg.fmt == "csv":
            text = _render_csv(BOUNDS_COLUMNS, rows)
        elif cfg.fmt == "json":
            text = _render_json("bounds", rows)
        else:
            text = _render_table_text(rows, BOUNDS_COLUMNS)
        _emit(cfg, text)
        return EXIT_OK
    if cfg.command == "radius":
        rows = _radius_rows(cfg)
        if cfg.fmt == "csv":
            text = _render_csv(RADIUS_COLUMNS, rows)
        elif cfg.fmt == "json":
            text = _render_json("radius", rows)
        else:
            text = _render_table_text(rows, RADIUS_COLUMNS)
        _emit(cfg, text)
        return EXIT_OK
    if cfg.command == "verify":
        report = run_verify(default_config(only=cfg.only, tolerance_overrides=cfg.tol_overrides))
        if cfg.fmt == "csv":
            text = _render_csv(VERIFY_COLUMNS, _verify_rows(report))
        elif cfg.fmt == "json":
            text = _render_json("verify", _verify_rows(report))
        else:
            text = _render_verify_text(report)
        _emit(cfg, text)
        return EXIT_OK if report.passed else EXIT_CLAIMS_FAILED
    # explore-interlace
    reports = [explore_interlacing(nu, cfg.count) for nu in cfg.nus]
    if cfg.fmt == "csv":
        text = _render_csv(INTERLACE_COLUMNS, _interlace_rows(reports))
    elif cfg.fmt == "json":
        rows = [
            {
                "nu": rep.nu,
                "count": rep.count,
                "struve_zeros": list(rep.struve_zeros),
                "bessel_zeros": list(rep.bessel_zeros),
                "strict": rep.strict,
                "note": rep.note,
            }
            for rep in reports
        ]
        text = _render_json("explore-interlace", rows)
    else:
        text = _render_interlace_text(reports)
    _emit(cfg, text)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles --help and usage errors
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE
    try:
        cfg = _resolve_config(args)
        return _run(cfg)
    except (TruncationError, RootNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (DomainError, OrderError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
