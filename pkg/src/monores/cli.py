"""Command line front end: ``monores <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .decomposition import (associated_primes, irreducible_decomposition,
                            maximal_associated_primes, primary_decomposition)
from .errors import (CertificateError, ExponentOverflowError, ImproperIdealError,
                     ParseError, RingMismatchError)
from .families import family_F, iterated_sum, pm_ideal, star_ideal
from .ideal import contains_monomial, power
from .monomial import RingContext
from .parser import infer_ring, parse_ideal, parse_monomial, parse_session
from .resurgence import (evaluate_max_sup, iterated_sum_bound, product_witness,
                         scan, sharp_sum_bound)
from .serialize import SCHEMA, emit_text, format_fraction, to_dict
from .symbolic import detect_blocks, symbolic_power, symbolic_power_blockwise
from .verify import verify_paper

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _global_flags(parser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--json", action="store_true",
                        default=argparse.SUPPRESS if suppress else False,
                        help="emit JSON instead of text")
    parser.add_argument("--threads", type=int, metavar="N",
                        default=argparse.SUPPRESS if suppress else 1,
                        help="worker threads (results do not depend on it)")
    parser.add_argument("--ring", default=default, help='variables, e.g. "x,y,z"')
    parser.add_argument("--ideal", default=default, help='ideal expression, e.g. "(x^3, x*y^2)"')


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="monores", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_flags(p, suppress=False)
    sub = p.add_subparsers(dest="command", required=True)

    def cmd(name, help):
        sp = sub.add_parser(name, help=help)
        _global_flags(sp, suppress=True)
        return sp

    sp = cmd("parse", "evaluate a session script")
    sp.add_argument("text", help='e.g. "ring x,y,z; I = (x^3, x*y^2, y^3*z); I^2"; "-" reads stdin')

    sp = cmd("symbolic", "symbolic power I^(n)")
    sp.add_argument("ideal_pos", nargs="?", metavar="IDEAL")
    sp.add_argument("n", type=int)
    sp.add_argument("--blockwise", action="store_true",
                    help="use the expansion over disjoint variable blocks")

    sp = cmd("power", "ordinary power I^n")
    sp.add_argument("ideal_pos", nargs="?", metavar="IDEAL")
    sp.add_argument("n", type=int)

    sp = cmd("contains", "monomial membership in I, I^n or I^(n)")
    sp.add_argument("ideal_pos", nargs="?", metavar="IDEAL")
    sp.add_argument("monomial")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--power", type=int, metavar="N")
    g.add_argument("--symbolic", type=int, metavar="N")

    sp = cmd("decompose", "primary (or irreducible) decomposition")
    sp.add_argument("ideal_pos", nargs="?", metavar="IDEAL")
    sp.add_argument("--irreducible", action="store_true")

    sp = cmd("assprimes", "associated primes")
    sp.add_argument("ideal_pos", nargs="?", metavar="IDEAL")
    sp.add_argument("--maximal", action="store_true", help="only the maximal ones")

    sp = cmd("scan", "containment grid and certified resurgence lower bound")
    sp.add_argument("ideal_pos", nargs="?", metavar="IDEAL")
    sp.add_argument("--max-m", type=int, required=True)
    sp.add_argument("--max-r", type=int, required=True)
    sp.add_argument("--no-shortcuts", action="store_true")

    sp = cmd("bounds", "closed-form bound for the resurgence of a sum")
    sp.add_argument("--a", required=True, help="rational, e.g. 3/2")
    sp.add_argument("--b", required=True)
    sp.add_argument("--iterated", type=int, metavar="K",
                    help="also list the iterated-sum bounds for a, K steps")
    sp.add_argument("--sup-nmax", type=int, metavar="N",
                    help="also enumerate the supremum over 2 <= m, n <= N")

    sp = cmd("certify-product", "combine local witnesses into one for the block sum")
    sp.add_argument("--part", nargs=5, action="append", required=True,
                    metavar=("RING", "IDEAL", "M", "R", "WITNESS"),
                    help="one block: its ring, ideal, m, r and a witness of I^(m) not in I^r")

    sp = cmd("family", "construct a named ideal family")
    sp.add_argument("kind", choices=["F", "star", "pm", "iterated"])
    sp.add_argument("--d", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--k", type=int)

    cmd("verify-paper", "run the full reproduction suite")
    return p


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


def _load_ideal(args):
    text = getattr(args, "ideal_pos", None) or args.ideal
    if not text:
        raise UsageError("no ideal given (positional IDEAL or --ideal)")
    ring = RingContext.from_string(args.ring) if args.ring else infer_ring(text)
    return parse_ideal(ring, text)


def _emit(args, value, text=None):
    if args.json:
        print(json.dumps(value if isinstance(value, dict) else to_dict(value)))
    else:
        print(text if text is not None else emit_text(value))


def _components_doc(kind, ring, comps):
    return {"schema": SCHEMA, "type": kind, "ring": list(ring.variables),
            "components": [to_dict(c)["generators"] for c in comps]}


def run(args) -> int:
    c = args.command
    if c == "parse":
        text = sys.stdin.read() if args.text == "-" else args.text
        if args.ring:
            text = f"ring {args.ring}\n{text}"
        s = parse_session(text)
        if args.json:
            _emit(args, {"schema": SCHEMA, "type": "session",
                         "ring": list(s.ring.variables) if s.ring else None,
                         "bindings": {k: to_dict(v)["generators"] for k, v in s.bindings.items()},
                         "last": to_dict(s.last)["generators"] if s.last is not None else None})
        else:
            print("\n".join(s.log))
        return EXIT_OK

    if c == "verify-paper":
        rep = verify_paper(threads=args.threads)
        if args.json:
            _emit(args, {"schema": SCHEMA, "type": "verification", "ok": rep.ok,
                         "items": [{"anchor": i.anchor, "claim": i.claim, "passed": i.passed,
                                    "detail": i.detail} for i in rep.items]})
        else:
            print(rep.format())
        return EXIT_OK if rep.ok else EXIT_FAILED

    if c == "bounds":
        a, b = _fraction(args.a), _fraction(args.b)
        rep = sharp_sum_bound(a, b)
        extra = {}
        lines = [emit_text(rep)]
        if args.iterated:
            vals = iterated_sum_bound(a, args.iterated)
            extra["iterated"] = [format_fraction(v) for v in vals]
            lines.append("iterated sums: " + ", ".join(extra["iterated"]))
        if args.sup_nmax:
            enum, closed = evaluate_max_sup(a, b, args.sup_nmax)
            extra["sup"] = {"enumerated": format_fraction(enum), "closed_form": format_fraction(closed)}
            lines.append(f"enumerated sup up to {args.sup_nmax}: {format_fraction(enum)} "
                         f"(closed form {format_fraction(closed)})")
        _emit(args, {**to_dict(rep), **extra}, "\n".join(lines))
        return EXIT_OK

    if c == "certify-product":
        parts = []
        for ring_text, ideal_text, m, r, wit in args.part:
            ring = RingContext.from_string(ring_text)
            parts.append((parse_ideal(ring, ideal_text), int(m), int(r), parse_monomial(ring, wit)))
        try:
            cert = product_witness(parts)
        except CertificateError as e:
            print(f"certificate rejected: {e}", file=sys.stderr)
            return EXIT_FAILED
        _emit(args, cert, f"P = {cert.ideal}\n{emit_text(cert)} (ratio {format_fraction(cert.ratio)})")
        return EXIT_OK

    if c == "family":
        if args.kind == "F":
            I = family_F(_need(args.d, "--d"))
        elif args.kind == "star":
            I = star_ideal(_need(args.m, "--m"), _need(args.d, "--d"))
        elif args.kind == "pm":
            I = pm_ideal(_need(args.m, "--m"))
        else:
            I = iterated_sum(_load_ideal(args), _need(args.k, "--k"))
        _emit(args, I, f"ring {','.join(I.ring.variables)}\n{I}")
        return EXIT_OK

    I = _load_ideal(args)
    if c == "symbolic":
        if args.blockwise:
            blocks = detect_blocks(I)
            if len(blocks) < 2:
                raise UsageError("the ideal has a single block; drop --blockwise")
            _emit(args, symbolic_power_blockwise(blocks, args.n))
        else:
            _emit(args, symbolic_power(I, args.n))
    elif c == "power":
        _emit(args, power(I, args.n))
    elif c == "contains":
        f = parse_monomial(I.ring, args.monomial)
        if args.symbolic is not None:
            target = symbolic_power(I, args.symbolic)
        elif args.power is not None:
            target = power(I, args.power)
        else:
            target = I
        ans = contains_monomial(target, f)
        _emit(args, {"schema": SCHEMA, "type": "membership", "monomial": list(f.exponents),
                     "contained": ans}, "true" if ans else "false")
    elif c == "decompose":
        if args.irreducible:
            comps = irreducible_decomposition(I)
            kind = "irreducible-decomposition"
        else:
            comps = primary_decomposition(I)
            kind = "primary-decomposition"
        _emit(args, _components_doc(kind, I.ring, comps), "\n".join(str(q) for q in comps))
    elif c == "assprimes":
        primes = maximal_associated_primes(I) if args.maximal else associated_primes(I)
        _emit(args, _components_doc("associated-primes", I.ring, primes),
              "\n".join(str(p) for p in primes))
    elif c == "scan":
        rep = scan(I, args.max_m, args.max_r, shortcuts=not args.no_shortcuts,
                   threads=args.threads)
        _emit(args, rep)
    return EXIT_OK


def _need(value, flag):
    if value is None:
        raise UsageError(f"{flag} is required here")
    return value


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except (UsageError, ParseError, RingMismatchError, ImproperIdealError,
            ExponentOverflowError, KeyError, ValueError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"monores: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
