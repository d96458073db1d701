"""Command-line front end: ``stringalg <command> PRESENTATION ...``.

Exit status is 0 on success, 1 when a check or verification fails and 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from importlib import resources
from itertools import combinations_with_replacement
from pathlib import Path

from .decompose import cg_tensor, parse_indecomposable
from .fibre import connected_components, fibre_product
from .ideals import IdealBoundError, principal_ideal
from .oracle import verify_decomposition
from .quiver import PresentationError, parse_presentation, validate_string_algebra
from .repring import Universe, band_action_table, string_to_idempotents
from .shapes import (
    Shape, ShapeError, enumerate_cyclic_shapes, enumerate_linear_shapes, has_trivial_automorphisms,
    shape_from_word,
)


class UsageError(Exception):
    pass


def _read_presentation(name: str):
    path = Path(name)
    if path.exists():
        text = path.read_text(encoding="utf-8")
    else:
        # fall back to the bundled presentations, e.g. "gp3.quiver"
        data = resources.files("stringalg").joinpath("data", path.name)
        if not data.is_file():
            raise UsageError(f"no such presentation file: {name}")
        text = data.read_text(encoding="utf-8")
    try:
        return parse_presentation(text)
    except PresentationError as exc:
        raise UsageError(f"{name}: {exc}") from None


def _valid(pres, out) -> bool:
    report = validate_string_algebra(pres)
    if not report.ok:
        out.write(str(report) + "\n")
    return report.ok


def _indec(pres, text):
    try:
        return parse_indecomposable(pres, text)
    except (ShapeError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot read {text!r}: {exc}") from None


def _shape(pres, text):
    try:
        return shape_from_word(pres, text)
    except (ShapeError, KeyError) as exc:
        raise UsageError(f"cannot read shape {text!r}: {exc}") from None


def cmd_check(args, pres, out) -> int:
    report = validate_string_algebra(pres)
    out.write(str(report) + "\n")
    return 0 if report.ok else 1


def cmd_strings(args, pres, out) -> int:
    for w in enumerate_linear_shapes(pres, args.max_len):
        out.write(f"1\tS\t{w}\n" if args.format == "records" else f"S[{w}]\n")
    return 0


def cmd_bands(args, pres, out) -> int:
    for w in enumerate_cyclic_shapes(pres, args.max_len):
        note = "" if has_trivial_automorphisms(w) else "  (nontrivial automorphisms, no bands)"
        if args.format == "records":
            out.write(f"{len(w)}\tB\t{w}\n")
        else:
            out.write(f"B[{w}, lambda, s]{note}\n")
    return 0


def cmd_tensor(args, pres, out) -> int:
    u, v = _indec(pres, args.a), _indec(pres, args.b)
    out.write(cg_tensor(u, v).format(args.format))
    return 0


def cmd_fibre(args, pres, out) -> int:
    s1, s2 = _shape(pres, args.a), _shape(pres, args.b)
    out.write(str(connected_components(fibre_product(s1, s2))) + "\n")
    return 0


def cmd_ring_table(args, pres, out) -> int:
    universe = Universe(pres, args.max_len)
    out.write(f"idempotent expansions of strings of length <= {args.max_len}\n")
    for w in universe.words:
        out.write(f"S[{w}] = {string_to_idempotents(w, universe)}\n")
    cyc = [w for w in enumerate_cyclic_shapes(pres, args.max_len) if has_trivial_automorphisms(w)]
    out.write("band action: B[G, lambda, s] e[F] = s |G:F| e[F]\n")
    for g, w, n in band_action_table(pres, universe, cyc):
        out.write(f"|{g} : {w}| = {n}\n")
    return 0


def cmd_ideal(args, pres, out) -> int:
    x = _indec(pres, args.x)
    try:
        ideal = principal_ideal(x, args.max_len, args.max_band_size)
    except IdealBoundError as exc:
        raise UsageError(str(exc)) from None
    out.write(ideal.describe())
    return 0


def _verify_one(job):
    text, a, b, probe_len = job
    pres = parse_presentation(text)
    u, v = parse_indecomposable(pres, a), parse_indecomposable(pres, b)
    report = verify_decomposition(u, v, cg_tensor(u, v), probe_len=probe_len)
    return f"{u} (x) {v}: {report}", report.passed


def cmd_verify(args, pres, out) -> int:
    text = pres.to_text()
    if args.all:
        if args.a or args.b:
            raise UsageError("verify --all takes no indecomposables")
        words = [str(w) for w in enumerate_linear_shapes(pres, args.max_len)]
        pairs = list(combinations_with_replacement(words, 2))
    else:
        if not (args.a and args.b):
            raise UsageError("verify needs two indecomposables or --all")
        _indec(pres, args.a), _indec(pres, args.b)
        pairs = [(args.a, args.b)]
    jobs = [(text, a, b, args.probe_len) for a, b in pairs]
    if args.parallel > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(args.parallel) as ex:
            results = list(ex.map(_verify_one, jobs, chunksize=8))
    else:
        results = [_verify_one(j) for j in jobs]
    failed = 0
    for line, ok in results:
        if args.all:
            if not ok:
                out.write(line + "\n")
        else:
            out.write(line + "\n")
        failed += not ok
    if args.all:
        out.write(f"verified {len(results)} pairs, {failed} failed (probe depth {args.probe_len})\n")
    return 1 if failed else 0


def _positive(s: str) -> int:
    try:
        n = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("bounds must be positive")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("presentation", help="presentation file (or a bundled name such as gp3.quiver)")
    common.add_argument("--max-len", type=_positive, default=4, help="word length bound (default 4)")
    common.add_argument("--max-band-size", type=_positive, default=None,
                        help="band size bound for ideals (default: --max-len)")
    common.add_argument("--probe-len", type=_positive, default=2, help="probe depth for verify (default 2)")
    common.add_argument("--format", choices=("human", "records"), default="human")
    common.add_argument("--parallel", type=_positive, default=1, help="worker processes for verify")

    p = argparse.ArgumentParser(prog="stringalg", description="Tensor products of string and band modules.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("check", parents=[common], help="validate the string algebra axioms")
    sub.add_parser("strings", parents=[common], help="list linear shape classes")
    sub.add_parser("bands", parents=[common], help="list cyclic shape classes")
    t = sub.add_parser("tensor", parents=[common], help="decompose A (x) B")
    t.add_argument("a")
    t.add_argument("b")
    sub.add_parser("ring-table", parents=[common], help="idempotent expansions and band action")
    i = sub.add_parser("ideal", parents=[common], help="members of the principal tensor ideal of X")
    i.add_argument("x")
    f = sub.add_parser("fibre", parents=[common], help="components of the fibre product of two shapes")
    f.add_argument("a")
    f.add_argument("b")
    v = sub.add_parser("verify", parents=[common], help="check a decomposition against matrices")
    v.add_argument("a", nargs="?")
    v.add_argument("b", nargs="?")
    v.add_argument("--all", action="store_true", help="every pair of strings up to --max-len")
    return p


COMMANDS = {
    "check": cmd_check, "strings": cmd_strings, "bands": cmd_bands, "tensor": cmd_tensor,
    "ring-table": cmd_ring_table, "ideal": cmd_ideal, "fibre": cmd_fibre, "verify": cmd_verify,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        pres = _read_presentation(args.presentation)
        if args.command != "check" and not _valid(pres, out):
            return 1
        return COMMANDS[args.command](args, pres, out)
    except UsageError as exc:
        sys.stderr.write(f"stringalg: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
