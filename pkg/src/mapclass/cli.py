"""Command line front end.

    mapclass verify --genus 3 [--check lantern] [--format json]
    mapclass present --genus 3 --scheme two-generator --format text
    mapclass order --genus 3 "S" --cap 30
    mapclass apply --genus 3 "S^-1" b
    mapclass orbit --genus 3 "S" a_3 --steps 2

Exit codes: 0 success, 1 a check or verification failed, 2 usage error.
MAPCLASS_OUT names a default directory for files written with --out (and
for presentations when --out is omitted).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import harness
from .engine import ExpressionError, order_mod_boundary
from .homology import abelianize, matrix_order
from .presentations import export, rewrite_two_generator, verify_presentation, wajnryb_presentation
from .surface import CALIBRATIONS, DEFAULT_CALIBRATION, CurveError, build_surface
from .words import WordTooLong

OUT_ENV = "MAPCLASS_OUT"


class UsageError(Exception):
    pass


def _genus(text):
    try:
        g = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"genus must be an integer, got {text!r}")
    if g < 1:
        raise argparse.ArgumentTypeError("genus must be >= 1")
    return g


def _positive(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mapclass", description="Exact computations in surface mapping class groups.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=("text", "json")):
        sp.add_argument("--genus", "-g", type=_genus, required=True)
        sp.add_argument("--calibration", choices=sorted(CALIBRATIONS), default=DEFAULT_CALIBRATION)
        sp.add_argument("--format", choices=formats, default="text")
        sp.add_argument("--out", help="write output to this file instead of stdout")

    sp = sub.add_parser("verify", help="run harness checks")
    common(sp)
    sp.add_argument("--check", help="run a single named check")
    sp.add_argument("--workers", type=_positive, default=1)
    sp.add_argument("--list", action="store_true", help="list check names and exit")

    sp = sub.add_parser("present", help="emit a verified presentation")
    common(sp)
    sp.add_argument("--scheme", choices=("wajnryb", "two-generator"), default="wajnryb")
    sp.add_argument("--unverified", action="store_true", help="emit without running the relator check")

    sp = sub.add_parser("order", help="order modulo the boundary twist")
    common(sp)
    sp.add_argument("expr")
    sp.add_argument("--cap", type=_positive, default=100)

    sp = sub.add_parser("apply", help="apply an element to a named curve")
    common(sp)
    sp.add_argument("expr")
    sp.add_argument("curve")

    sp = sub.add_parser("orbit", help="iterate an element on a named curve")
    common(sp)
    sp.add_argument("expr")
    sp.add_argument("curve")
    sp.add_argument("--steps", type=_positive, default=5)
    return p


def _out_path(path, default_name=None):
    base = os.environ.get(OUT_ENV)
    if path is None:
        if base and default_name:
            return os.path.join(base, default_name)
        return None
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def _emit(data, path):
    if isinstance(data, str):
        data = data.encode()
    if path is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    d = os.path.dirname(path)
    if d:
        os.makedirs(d, exist_ok=True)
    with open(path, "wb") as fh:
        fh.write(data)


def cmd_verify(args) -> int:
    if args.list:
        _emit("\n".join(harness.CHECK_NAMES) + "\n", None)
        return 0
    if args.check:
        if args.check not in harness.CHECK_NAMES:
            raise UsageError(f"unknown check {args.check!r}; try --list")
        results = [harness.run_check(args.check, args.genus, args.calibration)]
    else:
        results = harness.run_all(args.genus, args.calibration, workers=args.workers)
    if args.format == "json":
        text = harness.report_json(results, args.genus, args.calibration) + "\n"
    else:
        lines = [f"genus {args.genus} ({args.calibration})"]
        for r in results:
            lines.append(f"{r.status:8} {r.name:22} {r.ms:6d} ms  {r.witness or ''}".rstrip())
        lines.append(harness.summarize(results))
        text = "\n".join(lines) + "\n"
    _emit(text, _out_path(args.out))
    return 1 if any(r.status == harness.FAIL for r in results) else 0


def cmd_present(args) -> int:
    if args.genus < 3:
        raise UsageError("presentations are defined for genus >= 3")
    p = wajnryb_presentation(args.genus)
    if args.scheme == "two-generator":
        p = rewrite_two_generator(p)
    if not args.unverified:
        rep = verify_presentation(p, build_surface(args.genus, args.calibration))
        if not rep.ok:
            bad = [c for c in rep.checks if c.status != "identity"]
            print(f"refusing to emit: {rep.summary()}; first failure: relator {bad[0].index} {bad[0].witness}",
                  file=sys.stderr)
            return 1
    ext = "json" if args.format == "json" else "txt"
    _emit(export(p, args.format), _out_path(args.out, f"{args.scheme}-g{args.genus}.{ext}"))
    return 0


def _element(args):
    m = build_surface(args.genus, args.calibration)
    return m, m.catalog.evaluate(args.expr)


def cmd_order(args) -> int:
    m, phi = _element(args)
    n = order_mod_boundary(phi, m.delta, args.cap)
    h = matrix_order(abelianize(phi), args.cap)
    if args.format == "json":
        text = json.dumps({"expr": args.expr, "genus": args.genus, "order": n, "homology_order": h, "cap": args.cap})
    else:
        text = str(n) if n is not None else f"exceeds cap {args.cap}"
        text += f"\nhomology order: {h if h is not None else f'exceeds cap {args.cap}'}"
    _emit(text + "\n", _out_path(args.out))
    return 0


def cmd_apply(args) -> int:
    m, phi = _element(args)
    src = m.catalog.curve(args.curve).word
    img = phi(src)
    names = m.catalog.named_matches(img)
    if args.format == "json":
        text = json.dumps({"expr": args.expr, "curve": args.curve, "image": str(img), "matches": names})
    else:
        text = f"{img}\nnamed match: {', '.join(names) if names else 'none'}"
    _emit(text + "\n", _out_path(args.out))
    return 0


def cmd_orbit(args) -> int:
    m, phi = _element(args)
    w = m.catalog.curve(args.curve).word
    rows = []
    for step in range(1, args.steps + 1):
        w = phi(w)
        rows.append({"step": step, "word": str(w), "matches": m.catalog.named_matches(w)})
    if args.format == "json":
        text = json.dumps({"expr": args.expr, "curve": args.curve, "orbit": rows})
    else:
        text = "\n".join(f"{r['step']}: {', '.join(r['matches']) or '-'}  {r['word']}" for r in rows)
    _emit(text + "\n", _out_path(args.out))
    return 0


COMMANDS = {"verify": cmd_verify, "present": cmd_present, "order": cmd_order, "apply": cmd_apply, "orbit": cmd_orbit}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ExpressionError, CurveError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"mapclass {args.command}: error: {msg}", file=sys.stderr)
        return 2
    except WordTooLong as exc:
        print(f"mapclass {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
