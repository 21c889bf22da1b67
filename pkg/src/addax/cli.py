"""Command line front end.

Every subcommand reads one pair (``--file`` JSON or ``--catalog`` name) and
prints compact JSON, except ``equation`` and ``act --symbolic`` which print
the formula text.  ``--pretty`` switches JSON to ``key: value`` lines.

Exit codes: 0 success, 1 invalid input or failed computation (a JSON error
report goes to stdout), 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .action import (ProjPoint, act, format_action, rho, symbolic_action,
                     verify_action_invariance)
from .algebra import AlgebraError, PairError, PointedPair, degree, load_json
from .catalog import catalog, catalog_names
from .classify import (BilinearTriple, TripleError, canonicalize_nondegenerate,
                       classify_corank_one)
from .multilinear import DegreeError, build_FW, format_entries, hypersurface_equation
from .poly import parse_poly, x_names
from .scalar import NotRepresentable, parse_scalar, render_scalar

__all__ = ["main", "run", "build_parser"]


class CliError(Exception):
    def __init__(self, kind: str, message: str, report: Optional[dict] = None):
        super().__init__(message)
        self.kind = kind
        self.report = report


def _rows(m) -> list:
    return [[render_scalar(x) for x in r] for r in m]


def _load(args):
    if args.file:
        try:
            return load_json(args.file)
        except FileNotFoundError:
            raise CliError("io", f"file not found: {args.file}")
        except AlgebraError as e:
            raise CliError("validation", str(e), e.report.to_dict())
        except (PairError, ValueError, KeyError, TypeError) as e:
            raise CliError("schema", str(e))
    try:
        return catalog(args.catalog)
    except KeyError as e:
        raise CliError("catalog", str(e.args[0]))
    except AlgebraError as e:
        raise CliError("validation", str(e), e.report.to_dict())
    except ValueError as e:
        raise CliError("catalog", str(e))


def _need_pair(obj) -> PointedPair:
    if not isinstance(obj, PointedPair):
        raise CliError("input", "this command needs a pointed pair (W and complement)")
    return obj


def _parse_list(text: str) -> list:
    return [parse_scalar(x) for x in text.split(",")] if text else []


# -- subcommands ----------------------------------------------------------------
def cmd_validate(args):
    obj = _load(args)
    A = obj.algebra if isinstance(obj, PointedPair) else obj
    out = {
        "valid": True,
        "kind": "pair" if isinstance(obj, PointedPair) else "algebra",
        "dim": A.dim,
        "filtration": [s.dim for s in A.filtration()],
    }
    if isinstance(obj, PointedPair):
        out["degree"] = degree(obj)
    return out


def cmd_degree(args):
    return {"degree": degree(_need_pair(_load(args)))}


def cmd_form(args):
    pair = _need_pair(_load(args))
    F = build_FW(pair)
    return {"degree": F.arity, "dim": F.n_vars, "entries": format_entries(F)}


def cmd_equation(args):
    pair = _need_pair(_load(args))
    text = str(hypersurface_equation(pair))
    return {"equation": text} if args.json else text


def cmd_act(args):
    pair = _need_pair(_load(args))
    if args.symbolic:
        text = format_action(symbolic_action(pair), pair.n)
        return {"action": text} if args.json else text
    if args.a is None:
        raise CliError("input", "give --a coordinates or --symbolic")
    M = rho(pair, _parse_list(args.a))
    out = {"matrix": _rows(M.to_rows())}
    point = _parse_list(args.point) if args.point else list(pair.algebra.one())
    out["point"] = [render_scalar(x) for x in act(M, ProjPoint(point)).coords]
    return out


def cmd_invariance(args):
    pair = _need_pair(_load(args))
    if args.poly:
        f = parse_poly(args.poly, x_names(pair.dim))
    else:
        f = hypersurface_equation(pair)
    res = verify_action_invariance(pair, f, trials=args.trials)
    return {
        "invariant": bool(res),
        "symbolic": res.symbolic,
        "numeric": res.numeric,
        "witness": list(res.witness) if res.witness else None,
    }


def cmd_classify(args):
    pair = _need_pair(_load(args))
    d = degree(pair)
    if d != 2:
        raise CliError("degree", f"classification needs a quadric; pair has degree {d}")
    T = BilinearTriple.from_pair(pair)
    N = pair.dim
    if T.rank == N:
        _, change = canonicalize_nondegenerate(T)
        return {
            "rank": T.rank,
            "case": "NONDEGENERATE",
            "lambda": None,
            "label": f"NONDEGENERATE|n={pair.n}",
            "certificate": {
                "identity": change.is_identity(),
                "form_scale": render_scalar(change.form_scale),
                "change_of_basis": _rows(change.matrix),
            },
        }
    if T.rank == N - 1:
        res = classify_corank_one(T)
        return {
            "rank": T.rank,
            "case": "CORANK_ONE",
            "lambda": _rows(res.lam),
            "label": res.label,
            "certificate": {
                "identity": res.change.is_identity(),
                "form_scale": render_scalar(res.change.form_scale),
                "change_of_basis": _rows(res.change.matrix),
                "normalizable": res.normalizable,
            },
        }
    return {"rank": T.rank, "case": "CORANK_GE_2", "lambda": None, "label": None,
            "certificate": None}


def cmd_catalog_list(args):
    return {"catalog": catalog_names()}


COMMANDS = {
    "validate": (cmd_validate, "check the algebra axioms and pair conditions"),
    "degree": (cmd_degree, "degree of the invariant hypersurface"),
    "form": (cmd_form, "entries of the explicit invariant form"),
    "equation": (cmd_equation, "normalized hypersurface equation"),
    "act": (cmd_act, "action matrix or symbolic action formula"),
    "invariance": (cmd_invariance, "verify invariance of a polynomial"),
    "classify": (cmd_classify, "canonical form of a quadric"),
    "catalog-list": (cmd_catalog_list, "list catalog names"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="addax",
        description="Invariant hypersurfaces and additive actions from local algebras.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        p = sub.add_parser(name, help=help_)
        p.add_argument("--pretty", action="store_true", help="human readable output")
        if name == "catalog-list":
            continue
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--file", help="algebra JSON file")
        src.add_argument("--catalog", help="catalog name, e.g. truncated:3")
        if name in ("equation", "act"):
            p.add_argument("--json", action="store_true", help="wrap the text in JSON")
        if name == "act":
            p.add_argument("--symbolic", action="store_true",
                           help="print the action with symbols a1..an")
            p.add_argument("--a", help="comma separated W-coordinates")
            p.add_argument("--point", help="comma separated point (default [1:0:...:0])")
        if name == "invariance":
            p.add_argument("--poly", help="polynomial in x0..x{N-1} (default: the equation)")
            p.add_argument("--trials", type=int, default=20)
    return parser


def _pretty(obj, indent: str = "") -> str:
    if not isinstance(obj, dict):
        return indent + json.dumps(obj, separators=(", ", ": "))
    lines = []
    for k, v in obj.items():
        if isinstance(v, dict):
            lines.append(f"{indent}{k}:")
            lines.append(_pretty(v, indent + "  "))
        else:
            lines.append(f"{indent}{k}: {json.dumps(v, separators=(', ', ': '))}")
    return "\n".join(lines)


def render(result, pretty: bool) -> str:
    if isinstance(result, str):
        return result
    if pretty:
        return _pretty(result)
    return json.dumps(result, separators=(",", ":"))


def run(argv: Optional[Sequence[str]] = None) -> tuple:
    """Run one command; returns ``(exit code, output text)``."""
    args = build_parser().parse_args(argv)
    func = COMMANDS[args.command][0]
    try:
        result = func(args)
    except CliError as e:
        err = {"error": e.kind, "message": str(e)}
        if e.report is not None:
            err["report"] = e.report
        return 1, render(err, False)
    except (DegreeError, TripleError, NotRepresentable, PairError, ValueError) as e:
        kind = {DegreeError: "degree", TripleError: "triple",
                NotRepresentable: "not_representable"}.get(type(e), "input")
        return 1, render({"error": kind, "message": str(e)}, False)
    return 0, render(result, args.pretty)


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, text = run(argv)
    sys.stdout.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
