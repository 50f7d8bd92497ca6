"""Command-line front end with deterministic JSON output.

Exit codes: 0 on success, 1 when the requested quantity is outside the
implemented classification (a mathematical scope limit), 2 on usage errors.
All rational quantities are printed in exact p/q notation; only the
kz-verification report contains floats.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import characters, extensions, kz, labels, oracle
from .errors import Gl11Error, NotDeterminedError
from .fusion import fuse
from .labels import FormalSum, k_decompose, parse_label, render_label


def _ext_from_flag(text: str) -> extensions.ExtensionSpec:
    if text == "sl21-neg-half":
        return extensions.SL21_MINUS_HALF
    if text == "sl21-level1":
        return extensions.SL21_LEVEL1
    if text.startswith("custom:"):
        body = text[len("custom:"):]
        try:
            a_text, b_text = body.split(",")
            return extensions.ExtensionSpec.custom(Fraction(a_text), int(b_text))
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad custom extension {text!r}: {exc}") from exc
    raise UsageError(f"unknown extension {text!r}")


class UsageError(Exception):
    pass


def _summands_json(total: FormalSum) -> dict:
    return {
        "summands": [
            {"label": render_label(lbl), "multiplicity": mult}
            for lbl, mult in total.sorted_items()
        ]
    }


def _parse_fin_label(text: str) -> oracle.FinLabel:
    """Finite-module grammar: V(n;e), A(n), P(n)."""
    body = text.strip()
    kind = body[:1].upper()
    if not (kind in "VAP" and body[1:2] == "(" and body.endswith(")")):
        raise UsageError(f"cannot parse finite label {text!r}")
    args = [part.strip() for part in body[2:-1].split(";")]
    try:
        if kind == "V":
            if len(args) != 2:
                raise ValueError("V takes (n;e)")
            return oracle.Verma(Fraction(args[0]), Fraction(args[1]))
        if len(args) != 1:
            raise ValueError(f"{kind} takes a single parameter")
        if kind == "A":
            return oracle.Atypical(Fraction(args[0]))
        return oracle.Projective(Fraction(args[0]))
    except ValueError as exc:
        raise UsageError(f"cannot parse finite label {text!r}: {exc}") from exc


def _cmd_fuse(args) -> dict:
    a = parse_label(args.a)
    b = parse_label(args.b)
    return _summands_json(fuse(a, b))


def _cmd_kdec(args) -> dict:
    label = parse_label(args.label)
    return {"label": render_label(label), **_summands_json(k_decompose(label))}


def _cmd_char(args) -> dict:
    label = parse_label(args.label)
    window = None
    if args.z_window is not None:
        lo_text, hi_text = args.z_window.split(",")
        window = (Fraction(lo_text), Fraction(hi_text))
    if isinstance(label, labels.AtypicalA) and label.ell == 0 and window is None:
        raise UsageError("atypical characters need --z-window lo,hi")
    request = characters.CharacterRequest(label, Fraction(args.cutoff), window)
    series = request.expand()
    terms = [
        {"q": str(q), "z": str(z), "y": str(y), "coeff": c}
        for (q, z, y), c in series.sorted_terms()
    ]
    return {"label": render_label(label), "terms": terms}


def _cmd_induce(args) -> dict:
    label = parse_label(args.label)
    ext = _ext_from_flag(args.ext)
    out = extensions.induce(label, ext, args.m_range)
    return {
        "label": render_label(label),
        "extension": ext.name,
        "summands": [
            {"m": m, "label": render_label(lbl)}
            for m, lbl in zip(range(-args.m_range, args.m_range + 1), out)
        ],
    }


def _cmd_monodromy(args) -> dict:
    label = parse_label(args.label)
    ext = _ext_from_flag(args.ext)
    rows = []
    for m in (-2, -1, 1, 2):
        exponent = extensions.monodromy_exponent(label, ext.generator_of(m))
        rows.append(
            {"m": m, "exponent": str(exponent), "integral": exponent.denominator == 1}
        )
    return {
        "label": render_label(label),
        "extension": ext.name,
        "exponents": rows,
        "local": extensions.is_local(label, ext),
    }


def _cmd_local(args) -> dict:
    label = parse_label(args.label)
    ext = _ext_from_flag(args.ext)
    return {
        "label": render_label(label),
        "extension": ext.name,
        "local": extensions.is_local(label, ext),
    }


def _cmd_oracle(args) -> dict:
    a = _parse_fin_label(args.a)
    b = _parse_fin_label(args.b)
    product = oracle.tensor(oracle.realize(a), oracle.realize(b))
    parts = oracle.decompose(product)
    return {
        "factors": [repr(a), repr(b)],
        "summands": [
            {"label": repr(lbl), "multiplicity": mult}
            for lbl, mult in sorted(parts.items(), key=lambda kv: repr(kv[0]))
        ],
    }


def _cmd_kz(args) -> dict:
    if args.action != "verify":
        raise UsageError("the kz subcommand supports: verify")
    report = kz.verification_report(tol=args.tol)
    return {"checks": report, "all_pass": all(c["status"] == "pass" for c in report)}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gl11kl",
        description="Exact fusion, characters and extension analysis for affine gl(1|1)",
    )
    parser.add_argument("--json", action="store_true", help="JSON output (the default)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fuse", help="fusion product of two labels")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=_cmd_fuse)

    p = sub.add_parser("kdec", help="composition factors of a label")
    p.add_argument("label")
    p.set_defaults(func=_cmd_kdec)

    p = sub.add_parser("char", help="character expansion of a label")
    p.add_argument("label")
    p.add_argument("--cutoff", default="2", help="q-window above the lowest weight")
    p.add_argument("--z-window", default=None, help="lo,hi bounds on z exponents")
    p.set_defaults(func=_cmd_char)

    p = sub.add_parser("induce", help="summands of an induced module")
    p.add_argument("label")
    p.add_argument("--ext", default="sl21-neg-half")
    p.add_argument("--m-range", type=int, default=3)
    p.set_defaults(func=_cmd_induce)

    p = sub.add_parser("monodromy", help="monodromy exponents against the generators")
    p.add_argument("label")
    p.add_argument("--ext", default="sl21-neg-half")
    p.set_defaults(func=_cmd_monodromy)

    p = sub.add_parser("local", help="does the label induce to a local module")
    p.add_argument("label")
    p.add_argument("--ext", default="sl21-neg-half")
    p.set_defaults(func=_cmd_local)

    p = sub.add_parser("oracle", help="tensor-decompose two finite modules")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("kz", help="differential-equation verification suite")
    p.add_argument("action")
    p.add_argument("--tol", type=float, default=1e-12)
    p.set_defaults(func=_cmd_kz)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        payload = args.func(args)
    except NotDeterminedError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 1
    except Gl11Error as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 1
    except (UsageError, ValueError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2
    print(json.dumps(payload))
    if args.command == "kz" and not payload.get("all_pass", True):
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
