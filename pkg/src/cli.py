"""Command line entry point: `hermdig <command> ...`.

Exit status is 0 on success (and on a passing verification), 1 when a
verification fails and 2 on usage or input errors.
"""

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence

from . import __version__
from .closed_forms import closed_form_spectrum
from .codec import decode, encode, format_text, parse_text
from .config import DEFAULT_TOLERANCE, Settings
from .core import HermDig
from .enumeration import MATRICES
from .errors import HermdigError, InvariantViolation
from .families import family
from .models.census import CospectralClass
from .models.digraph import Digraph
from .models.structures import QuaternaryPartition
from .tools import SwitchTools, VerifyTools

logger = logging.getLogger("hermdig")

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


# ─── Input ────────────────────────────────────────────────────────


def _int_list(text: str) -> List[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip() != ""]
    except ValueError:
        raise UsageError(f"expected comma separated integers, got {text!r}") from None


def _read_input(args) -> Digraph:
    sources = [s for s in (args.hd6, args.file, args.family) if s is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one input: an hd6 string, --file or --family")
    if args.family is not None:
        return family(args.family, *_int_list(args.params or ""))
    if args.file is not None:
        text = Path(args.file).read_text()
        stripped = text.strip()
        # a file holding a single hd6 line is accepted as well
        if stripped and "\n" not in stripped and not stripped.startswith("n="):
            return decode(stripped)
        return parse_text(text)
    return decode(args.hd6)


# ─── Output ───────────────────────────────────────────────────────


def _num(x: float) -> float:
    return 0.0 if abs(x) < 5e-9 else x


def _header(args) -> Dict[str, Any]:
    flags = {k: v for k, v in sorted(vars(args).items()) if k != "func" and v is not None}
    return {"tool": "hermdig", "version": __version__, "flags": flags}


def _header_line(args) -> str:
    """The reproducibility header as a `#` comment, for plain and csv reports."""
    header = _header(args)
    flags = json.dumps(header["flags"], sort_keys=True, default=str)
    return f"# {header['tool']} {header['version']} flags={flags}"


def _csv_text(rows: Iterable[Sequence[Any]], delimiter: str = ",") -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter=delimiter, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _emit(args, payload: Dict[str, Any], plain: List[str], rows: List[Sequence[Any]]):
    if args.format == "json":
        text = json.dumps({"header": _header(args), **payload}, indent=2, default=str) + "\n"
    elif args.format == "csv":
        text = _header_line(args) + "\n" + _csv_text(rows)
    else:
        text = "\n".join([_header_line(args)] + plain) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


# ─── Commands ─────────────────────────────────────────────────────


def cmd_spectrum(hd: HermDig, args) -> int:
    X = _read_input(args)
    report = hd.spectrum_report(X)
    values = [_num(v) for v in report["eigenvalues"]]
    report["eigenvalues"] = values
    report["distinct_eigenvalues"] = [_num(v) for v in report["distinct_eigenvalues"]]
    plain = [
        "[" + ", ".join(f"{v:.8f}" for v in values) + "]",
        f"charpoly: {report['plain']}",
        f"lambda1={_num(report['lambda1']):.8f} lambda_n={_num(report['lambda_n']):.8f} rho={report['rho']:.8f}",
        f"eta+={report['eta_plus']} eta-={report['eta_minus']} symmetric={report['symmetric_about_zero']}",
        f"underlying_edges={report['underlying_edges']}",
    ]
    rows = [("index", "eigenvalue")] + [(k, f"{v:.12g}") for k, v in enumerate(values)]
    _emit(args, report, plain, rows)
    return EXIT_OK


def cmd_charpoly(hd: HermDig, args) -> int:
    X = _read_input(args)
    cp = hd.charpoly(X, args.matrix)
    rows = [("degree", "coefficient")] + [(k, c) for k, c in enumerate(cp.coeffs)]
    _emit(args, {"hd6": encode(X), "matrix": args.matrix, "coeffs": list(cp.coeffs), "plain": str(cp)},
          [str(cp)], rows)
    return EXIT_OK


def cmd_sachs(hd: HermDig, args) -> int:
    X = _read_input(args)
    report = hd.sachs_report(X)
    plain = [
        "coefficients: " + " ".join(str(c) for c in report["coefficients"]),
        f"matches charpoly: {report['matches_charpoly']}",
        "triangles x1..x4: " + " ".join(str(c) for c in report["triangles"]),
        f"trace identities: {report['trace_identities']}",
    ]
    rows = [("j", "c_j")] + list(enumerate(report["coefficients"]))
    _emit(args, {"sachs": report}, plain, rows)
    return EXIT_OK if report["matches_charpoly"] and report["trace_identities"] else EXIT_FAIL


def cmd_family(hd: HermDig, args) -> int:
    params = _int_list(args.params or "")
    X = family(args.name, *params)
    cf = closed_form_spectrum(args.name, *params)
    payload = {
        "family": cf.family,
        "params": list(cf.params),
        "hd6": encode(X),
        "text": format_text(X),
        "closed_form": [_num(v) for v in cf.values],
    }
    plain = [encode(X)]
    if args.text:
        plain.append(format_text(X).rstrip("\n"))
    if args.closed_form:
        plain.append("[" + ", ".join(f"{_num(v):.8f}" for v in cf.values) + "]")
    rows = [("family", "params", "hd6"), (cf.family, " ".join(map(str, params)), encode(X))]
    _emit(args, payload, plain, rows)
    return EXIT_OK


def cmd_switch(hd: HermDig, args) -> int:
    X = _read_input(args)
    partition = QuaternaryPartition.parse(args.partition) if args.partition else None
    edge = None
    if args.edge:
        pair = _int_list(args.edge)
        if len(pair) != 2:
            raise UsageError(f"--edge takes u,v, got {args.edge!r}")
        edge = (pair[0], pair[1])
    vertices = _int_list(args.set) if args.set is not None else None
    report = SwitchTools(hd).apply(X, args.op, vertices=vertices, partition=partition, edge=edge)
    plain = [
        report.output_hd6,
        f"charpoly: {report.charpoly_before} -> {report.charpoly_after}",
        f"cospectral: {report.cospectral}",
    ]
    rows = [("operation", "input", "output", "cospectral"),
            (report.operation, report.input_hd6, report.output_hd6, report.cospectral)]
    _emit(args, {"switch": report.to_dict()}, plain, rows)
    return EXIT_OK if report.cospectral else EXIT_FAIL


def cmd_verify(hd: HermDig, args) -> int:
    tools = VerifyTools(hd)
    suites = VerifyTools.SUITES if args.suite == "all" else (args.suite,)
    reports = [tools.run(s, args.n, trials=args.trials, seed=args.seed) for s in suites]
    plain, rows = [], [("suite", "check", "status", "passed", "failed")]
    for report in reports:
        for tally in report.checks.values():
            status = "PASS" if tally.ok else "FAIL"
            plain.append(f"{status} {report.suite}/{tally.check} passed={tally.passed} failed={tally.failed}")
            rows.append((report.suite, tally.check, status, tally.passed, tally.failed))
            for c in tally.counterexamples:
                plain.append(f"  counterexample {c.hd6}: {json.dumps(c.detail, default=str, sort_keys=True)}")
    ok = all(r.ok for r in reports)
    plain.append(f"{'PASS' if ok else 'FAIL'} ({', '.join(suites)}, n={args.n})")
    _emit(args, {"status": "PASS" if ok else "FAIL", "suites": [r.to_dict() for r in reports]}, plain, rows)
    return EXIT_OK if ok else EXIT_FAIL


def _write_classes_csv(args, classes: Iterable[CospectralClass]):
    """One line per class: charpoly;size;members, the hd6 members comma separated."""
    with open(args.classes_csv, "w", newline="") as f:
        f.write(_header_line(args) + "\n")
        writer = csv.writer(f, delimiter=";", lineterminator="\n")
        writer.writerow(("charpoly", "size", "members"))
        for c in classes:
            writer.writerow((str(c.key), c.size, ",".join(c.members)))


def cmd_enumerate(hd: HermDig, args) -> int:
    result = hd.census(args.n, args.matrix)
    if args.classes_csv:
        _write_classes_csv(args, result.classes)
    fields = result.row.to_dict()
    if args.stats:
        plain = [f"{k}={v}" for k, v in fields.items()]
    else:
        plain = [m for c in result.classes for m in c.members]
    rows = [tuple(fields), tuple(fields.values())]
    payload = {"census": fields}
    if args.format == "json":
        payload["classes"] = [c.to_dict() for c in result.classes]
    _emit(args, payload, plain, rows)
    return EXIT_OK


def cmd_product(hd: HermDig, args) -> int:
    X = _read_input(args)
    if args.other is not None:
        P = hd.product(X, decode(args.other))
    else:
        if args.power < 1:
            raise UsageError(f"--power must be at least 1, got {args.power}")
        P = X
        for _ in range(args.power - 1):
            P = hd.product(P, X)
    report = hd.spectrum_report(P)
    plain = [
        encode(P),
        f"charpoly: {report['plain']}",
        f"lambda1={_num(report['lambda1']):.8f} rho={report['rho']:.8f}",
    ]
    rows = [("hd6", "n", "lambda1", "rho"), (encode(P), P.n, report["lambda1"], report["rho"])]
    _emit(args, {"product": report}, plain, rows)
    return EXIT_OK


# ─── Parser ───────────────────────────────────────────────────────


def _add_input(p: argparse.ArgumentParser):
    p.add_argument("hd6", nargs="?", default=None, help="Digraph in hd6 encoding")
    p.add_argument("--file", default=None, help="Read the digraph from a text-format (or hd6) file")
    p.add_argument("--family", default=None, help="Named family, e.g. K3prime, D, Ctilde")
    p.add_argument("--params", default=None, help="Comma separated family parameters, e.g. 2,3")


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE, help="Eigenvalue tolerance (default: 1e-9)")
    p.add_argument("--format", choices=("json", "csv", "plain"), default="plain", help="Output format")
    p.add_argument("--out", default=None, help="Write the report to this file instead of stdout")
    p.add_argument("--jobs", type=int, default=None, help="Worker processes (default: $HERMDIG_JOBS or 1)")
    p.add_argument("--large", action="store_true", help="Allow the n = 6 census and sweeps")
    p.add_argument("--progress", action="store_true", help="Show progress bars")
    p.add_argument("-v", "--verbose", action="store_true", help="Log at DEBUG level")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hermdig", description="Hermitian adjacency spectra of digraphs.")
    parser.add_argument("--version", action="version", version=f"hermdig {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="Eigenvalues and spectral statistics of H(X)")
    _add_input(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("charpoly", help="Exact characteristic polynomial")
    _add_input(p)
    p.add_argument("--matrix", choices=MATRICES + ("G",), default="H",
                   help="H (Hermitian), A (adjacency) or G (underlying graph)")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("sachs", help="Characteristic polynomial from basic subgraphs, with trace checks")
    _add_input(p)
    p.set_defaults(func=cmd_sachs)

    p = sub.add_parser("family", help="Build a named family member")
    p.add_argument("name", help="Family name")
    p.add_argument("--params", default=None, help="Comma separated parameters")
    p.add_argument("--text", action="store_true", help="Also print the text format")
    p.add_argument("--closed-form", action="store_true", help="Also print the closed-form spectrum")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("switch", help="Apply a spectrum-preserving operation")
    _add_input(p)
    p.add_argument("--op", required=True, choices=SwitchTools.OPERATIONS)
    p.add_argument("--set", default=None, help="Vertex set S, e.g. 0,2")
    p.add_argument("--partition", default=None, help="Vertex labels, e.g. 1,i,-1,-i")
    p.add_argument("--edge", default=None, help="Digon u,v for the bridge operation")
    p.set_defaults(func=cmd_switch)

    p = sub.add_parser("verify", help="Run verification suites")
    p.add_argument("--suite", default="all", choices=VerifyTools.SUITES + ("all",))
    p.add_argument("-n", type=int, required=True, help="Order")
    p.add_argument("--trials", type=int, default=None, help="Randomized instances per suite")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="Census of all digraphs of one order")
    p.add_argument("-n", type=int, required=True, help="Order")
    p.add_argument("--matrix", choices=MATRICES, default="H")
    p.add_argument("--classes-csv", default=None, help="Write every cospectral class to this CSV file")
    p.add_argument("--stats", action="store_true", help="Print the census row instead of the hd6 list")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("product", help="Cartesian product of digraphs")
    _add_input(p)
    p.add_argument("--with", dest="other", default=None, help="Second factor in hd6")
    p.add_argument("--power", type=int, default=2, help="Cartesian power of the input (default: 2)")
    p.set_defaults(func=cmd_product)

    for action in sub.choices.values():
        _add_common(action)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        settings = Settings.from_env(tolerance=args.tol, jobs=args.jobs, large=args.large, progress=args.progress)
        hd = HermDig(settings=settings)
        try:
            return args.func(hd, args)
        finally:
            hd.close()
    except InvariantViolation as e:
        logger.error("invariant violated: %s", e)
        print(f"FAIL: {e}", file=sys.stderr)
        return EXIT_FAIL
    except (HermdigError, UsageError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
