"""Command-line front end: ``matsuo analyze``, ``matsuo verify-paper``, ``matsuo kac``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.  Errors
are printed as a JSON object ``{"error": {"type": ..., "message": ...}}``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .algebra import axis, central_charge, construct_algebra, coset_axis, subalgebra_identity
from .fusion import find_z2_gradings, fusion_table, primitivity
from .roots import RootSystemId, build_transposition_set, parabolic_subset
from .scalars import ALPHA, format_scalar, parse_scalar
from .spectral import eigendecompose, closed_form_candidates
from .verify import DEFAULT_ALPHAS, run_verification
from .virasoro import (KacLabel, MinimalModel, central_charge_pq, derive_algebra_fusion_rules,
                       kac_table_markdown, kac_weight)

DEFAULT_MAX_DIM = 300


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_support(text: str) -> list[int]:
    """``"1..5"``, ``"1,3,4"`` or mixtures like ``"1..3,5"`` as a sorted list of points."""
    points: set[int] = set()
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if ".." in part:
                lo, hi = part.split("..")
                points.update(range(int(lo), int(hi) + 1))
            else:
                points.add(int(part))
        except ValueError:
            raise UsageError(f"bad support {text!r}") from None
    if any(p < 1 for p in points):
        raise UsageError("support points are 1-based")
    return sorted(points)


def parse_alpha(text: str):
    if text.strip().lower() in ("symbolic", "a", "alpha"):
        return ALPHA
    try:
        value = parse_scalar(text)
    except ZeroDivisionError:
        raise UsageError(f"alpha {text!r} divides by zero") from None
    except Exception:
        raise UsageError(f"cannot parse alpha {text!r}") from None
    if not isinstance(value, Fraction):
        raise UsageError("alpha must be rational or 'symbolic'")
    return value


def _max_dim() -> int:
    raw = os.environ.get("AXIAL_MAX_DIM", str(DEFAULT_MAX_DIM))
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"AXIAL_MAX_DIM={raw!r} is not an integer") from None


def _indices(tset, points) -> list[int]:
    if max(points) > tset.id.ambient_dimension:
        raise UsageError(f"support {points} exceeds {tset.id.ambient_dimension} coordinates")
    return [tset.index(r) for r in parabolic_subset(tset, points)]


def analyze(args) -> dict:
    rid = RootSystemId(args.family, args.rank)
    tset = build_transposition_set(rid)
    alpha = parse_alpha(args.alpha)
    dim = len(tset) * (2 if args.hat else 1)
    if dim > _max_dim():
        raise UsageError(f"algebra dimension {dim} exceeds AXIAL_MAX_DIM={_max_dim()}")
    A = construct_algebra(tset, alpha, args.hat)

    if args.axis is not None:
        if not 0 <= args.axis < A.n:
            raise UsageError(f"axis index must lie in 0..{A.n - 1}")
        x = axis(A, args.axis, -1 if args.negative else 1)
        chosen = {"kind": "axis", "transposition": A.label(A.basis_index(args.axis, x.sign))}
    elif args.identity is not None:
        pts = parse_support(args.identity)
        x = subalgebra_identity(A, _indices(tset, pts))
        chosen = {"kind": "identity", "support": pts}
    else:
        if "/" not in args.coset:
            raise UsageError("coset must look like S/T, e.g. 1..5/1..4")
        big, small = (parse_support(p) for p in args.coset.split("/", 1))
        x = coset_axis(A, _indices(tset, big), _indices(tset, small))
        chosen = {"kind": "coset", "support": big, "sub_support": small}
    if x.is_zero:
        raise UsageError("the requested idempotent is zero")

    if args.candidates == "paper":
        cands = closed_form_candidates(A, x)
    elif A.field.symbolic:
        raise UsageError("symbolic alpha needs --candidates paper")
    else:
        cands = None
    dec = eigendecompose(A, x, cands)
    out = {
        "algebra": {"family": rid.family, "rank": rid.rank, "alpha": format_scalar(A.alpha),
                    "hat": A.hat, "dimension": A.dimension},
        "idempotent": dict(chosen, vector=x.vector.to_json()),
        "eigenvalues": [format_scalar(v) for v in dec.eigenvalues],
        "dimensions": {format_scalar(v): n for v, n in dec.dims.items()},
        "complete": dec.complete,
        "missing_candidates": [format_scalar(v) for v in dec.missing],
        "eigenspaces": dec.to_json(),
        "central_charge": format_scalar(central_charge(A, x.vector)),
    }
    if dec.minimal_polynomial is not None:
        out["minimal_polynomial"] = [format_scalar(c) for c in dec.minimal_polynomial]
    if dec.complete:
        table = fusion_table(A, dec)
        out["fusion_table"] = table.to_json()
        out["gradings"] = [g.to_json() for g in find_z2_gradings(table)]
        out["primitive"] = primitivity(dec)
        out["_table"] = table
    return out


def render_analysis(out: dict) -> str:
    alg = out["algebra"]
    hat = "hat " if alg["hat"] else ""
    lines = [f"{hat}Matsuo algebra {alg['family']}{alg['rank']}, alpha = {alg['alpha']}, "
             f"dimension {alg['dimension']}",
             f"idempotent: {out['idempotent']['kind']}",
             f"central charge: {out['central_charge']}",
             "eigenvalues (dimension):"]
    for lam, n in out["dimensions"].items():
        lines.append(f"  {lam}: {n}")
    if out["missing_candidates"]:
        lines.append("candidates without eigenvectors: " + ", ".join(out["missing_candidates"]))
    lines.append(f"complete: {out['complete']}")
    if "fusion_table" in out:
        lines.append(f"primitive: {out['primitive']}")
        lines += ["", "fusion table:", out["_table"].to_text()]
        lines.append("")
        lines.append("Z/2-gradings (odd part):")
        for g in out["gradings"]:
            lines.append("  {" + ", ".join(g["minus"]) + "}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    out = analyze(args)
    if args.format == "table":
        print(render_analysis(out))
    else:
        out.pop("_table", None)
        print(json.dumps(out, indent=2))
    return 0


def cmd_verify(args) -> int:
    alphas = [parse_alpha(a) for a in args.alpha] if args.alpha else list(DEFAULT_ALPHAS)
    if any(not isinstance(a, Fraction) for a in alphas):
        raise UsageError("verify-paper needs rational alphas")
    if any(a in (0, 1) for a in alphas):
        raise UsageError("alpha must differ from 0 and 1")
    report = run_verification(args.max_rank, alphas)
    if args.format == "json":
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(report.to_text())
    return 0 if report.ok else 1


def cmd_kac(args) -> int:
    try:
        model = MinimalModel(args.p, args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        doc = {"p": model.p, "q": model.q, "central_charge": format_scalar(central_charge_pq(model)),
               "weights": [[format_scalar(kac_weight(model, KacLabel(r, s))) for s in range(1, model.q)]
                           for r in range(1, model.p)]}
        if args.fusion:
            doc["fusion_table"] = derive_algebra_fusion_rules(model).to_json()
        print(json.dumps(doc, indent=2))
        return 0
    text = kac_table_markdown(model)
    if args.halved:
        text += "\n\n" + kac_table_markdown(model, halved=True).split("\n\n", 1)[1]
    if args.fusion:
        text += "\n\nalgebra fusion rules on {h/2} and 1:\n\n```\n"
        text += derive_algebra_fusion_rules(model).to_text() + "\n```"
    print(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="matsuo", description="Exact computations in Matsuo axial algebras.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="eigenspaces, fusion table and central charge of an idempotent")
    a.add_argument("--family", required=True, choices=["A", "D", "E", "a", "d", "e"])
    a.add_argument("--rank", required=True, type=int)
    a.add_argument("--alpha", default="1/4", help="rational value or 'symbolic'")
    a.add_argument("--hat", action="store_true", help="use the signed double of the algebra")
    which = a.add_mutually_exclusive_group(required=True)
    which.add_argument("--axis", type=int, help="index of a transposition")
    which.add_argument("--identity", help="coordinate support, e.g. 1..4")
    which.add_argument("--coset", help="nested supports S/T, e.g. 1..5/1..4")
    a.add_argument("--negative", action="store_true", help="take the negative copy of --axis (hat only)")
    a.add_argument("--candidates", choices=["paper"], help="use closed-form eigenvalue candidates")
    a.add_argument("--format", choices=["json", "table"], default="json")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify-paper", help="run every closed-form claim and report")
    v.add_argument("--max-rank", type=int, default=6)
    v.add_argument("--alpha", action="append", help="repeatable; default 1/4, 1/7, 1/32")
    v.add_argument("--format", choices=["json", "text"], default="text")
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("kac", help="Kac table of the minimal model c(p, q)")
    k.add_argument("p", type=int)
    k.add_argument("q", type=int)
    k.add_argument("--halved", action="store_true", help="also show h/2")
    k.add_argument("--fusion", action="store_true", help="also show the derived algebra fusion rules")
    k.add_argument("--format", choices=["markdown", "json"], default="markdown")
    k.set_defaults(func=cmd_kac)
    return p


def _error(exc: Exception) -> int:
    kind = "usage" if isinstance(exc, UsageError) else type(exc).__name__
    print(json.dumps({"error": {"type": kind, "message": str(exc)}}))
    return 2


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (UsageError, ValueError, ArithmeticError, TypeError, KeyError) as exc:
        return _error(exc)


if __name__ == "__main__":
    sys.exit(main())
