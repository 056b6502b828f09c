"""Command-line interface.

Exit codes: 0 all checks passed, 1 a check failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import pipelines
from .knots import e1_knot_surgery_sw
from .lattice import HomologyClass, is_characteristic, pair, square
from .manifold import FourManifoldModel
from .models import e1, v_n, w_n, y_n, z_n
from .monodromy import WordSyntaxError, verify_factorization
from .plumbing import PlumbingChain, boundary_lens_space, cp_chain, intersection_matrix
from . import __version__
from .report import REPORT_VERSION

BUILTIN_MODELS = {
    "e1": lambda n: e1(),
    "yn": y_n,
    "zn": z_n,
    "vn": v_n,
    "wn": w_n,
    "xn": lambda n: pipelines.build_Xn(n)[0],
    "qn": lambda n: pipelines.build_Qn(n)[0],
    "b7": lambda n: pipelines.build_b7_family(n)[0],
    "b8": lambda n: pipelines.build_b8_family(n)[0],
}


class CliError(Exception):
    pass


def resolve_model(spec: str) -> FourManifoldModel:
    """A model file path, or a builtin name like ``e1``, ``yn:3``, ``xn:2``."""
    try:
        with open(spec) as fh:
            return FourManifoldModel.from_dict(json.load(fh))
    except FileNotFoundError:
        pass
    except (OSError, ValueError, KeyError) as exc:
        raise CliError(f"cannot load model file {spec!r}: {exc}") from exc
    name, _, param = spec.partition(":")
    builder = BUILTIN_MODELS.get(name.lower())
    if builder is None:
        raise CliError(f"no model file or builtin named {spec!r}")
    if name.lower() == "e1":
        return builder(0)
    if not param:
        raise CliError(f"builtin {name!r} needs a parameter, e.g. {name}:2")
    try:
        n = int(param)
    except ValueError:
        raise CliError(f"bad model parameter {param!r}") from None
    return builder(n)


_CLASS_TERM = re.compile(r"\s*(?P<sign>[+-])?\s*(?P<coeff>\d+)?\s*\*?\s*(?P<name>[A-Za-z][A-Za-z0-9_]*)?\s*")


def parse_class(model: FourManifoldModel, text: str) -> HomologyClass:
    """Parse expressions like ``T+E0+E1+E2``, ``3*T - eps1``, or ``-K0``."""
    marked = model.marked_classes
    total = model.lattice.zero()
    pos = 0
    first = True
    while pos < len(text):
        m = _CLASS_TERM.match(text, pos)
        if not m or m.end() == pos:
            raise CliError(f"cannot parse class expression at position {pos}: {text[pos:]!r}")
        sign, coeff, name = m.group("sign"), m.group("coeff"), m.group("name")
        if sign is None and not first:
            raise CliError(f"missing +/- between terms in {text!r}")
        if name is None and coeff is None:
            raise CliError(f"empty term in class expression {text!r}")
        factor = -1 if sign == "-" else 1
        value = factor * (int(coeff) if coeff else 1)
        if name is None:
            raise CliError(f"bare integer {coeff!r} in class expression (classes only)")
        base = marked.get(name)
        if base is None:
            try:
                base = model.lattice.basis_class(name)
            except KeyError:
                raise CliError(f"unknown class name {name!r}") from None
        total = total + value * base
        pos = m.end()
        first = False
    if first:
        raise CliError("empty class expression")
    return total


def _emit(payload: dict, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        print(text)


def cmd_verify_paper(args) -> int:
    rep = pipelines.verify_paper(only=args.only)
    if args.json:
        print(rep.to_json())
    else:
        print(rep.to_text())
    return 0 if rep.all_pass else 1


def cmd_family(args) -> int:
    builders = {
        "xn": pipelines.build_Xn,
        "b7": pipelines.build_b7_family,
        "b8": pipelines.build_b8_family,
        "qn": pipelines.build_Qn,
    }
    model, rep = builders[args.family](args.n)
    if args.model_out:
        with open(args.model_out, "w") as fh:
            json.dump(model.to_dict(), fh, sort_keys=True, indent=2)
            fh.write("\n")
    if args.json:
        payload = rep.to_dict()
        payload["model"] = model.to_dict()
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        print(rep.to_text())
    return 0 if rep.all_pass else 1


def cmd_monodromy_check(args) -> int:
    report = verify_factorization(args.word, args.equals)
    payload = {
        "word": str(report.word),
        "matrix": report.lhs.rows(),
        "target": str(report.expected) if report.expected is not None else "identity",
        "target_matrix": report.rhs.rows(),
        "equal": report.equal,
        "factors": [
            {
                "text": d.text,
                "power": d.power,
                "base_trace": d.base_trace,
                "factor_trace": d.factor_trace,
                "parabolic": d.parabolic,
                "width": d.width,
            }
            for d in report.factors
        ],
    }
    lines = [
        f"word    {report.word}  ->  {report.lhs}",
        f"target  {payload['target']}  ->  {report.rhs}",
        f"equal   {report.equal}",
    ]
    for d in report.factors:
        width = "" if d.width is None else f", width {d.width}"
        lines.append(
            f"  factor {d.text:<14} base trace {d.base_trace}"
            f"{' (nodal twist type)' if d.parabolic else ''}{width}"
        )
    _emit(payload, args.json, "\n".join(lines))
    return 0 if report.equal else 1


def cmd_plumbing_cp(args) -> int:
    if args.weights is not None:
        try:
            weights = tuple(int(x) for x in args.weights.split(","))
        except ValueError:
            raise CliError(f"bad weight list {args.weights!r}; expected comma-separated integers")
        if not weights:
            raise CliError("empty weight list")
        chain = PlumbingChain(weights, tuple((i, i + 1) for i in range(len(weights) - 1)))
    else:
        chain = cp_chain(args.p)
    form = intersection_matrix(chain)
    payload: dict = {
        "weights": list(chain.weights),
        "determinant": form.det,
    }
    if args.p is not None:
        payload["p"] = args.p
    lines = [f"weights      {list(chain.weights)}", f"determinant  {form.det}"]
    if args.invert:
        inverse = [[str(x) for x in row] for row in form.inverse()]
        payload["inverse"] = inverse
        lines.append("inverse rows " + "; ".join("[" + ", ".join(r) + "]" for r in inverse))
    if args.boundary:
        lens = boundary_lens_space(chain)
        payload["boundary"] = {
            "order": lens.order,
            "twist": lens.twist,
            "residue_orbit": list(lens.residue_orbit()),
        }
        lines.append(
            f"boundary     lens space of order {lens.order}, twist {lens.twist}, "
            f"residue orbit {list(lens.residue_orbit())}"
        )
    _emit(payload, args.json, "\n".join(lines))
    return 0


def cmd_sw_e1_surgery(args) -> int:
    try:
        twists = [int(x) for x in args.knots.split(",") if x.strip() != ""]
    except ValueError:
        raise CliError(f"bad knot list {args.knots!r}; expected comma-separated integers")
    table = e1_knot_surgery_sw(twists)
    payload = {"knots": twists, "table": {str(j): v for j, v in sorted(table.items())}}
    lines = [f"knots: {', '.join(f'T({n})' for n in twists) or '(none)'}"]
    if table:
        for j, v in sorted(table.items(), reverse=True):
            label = "T" if j == 1 else ("-T" if j == -1 else f"{j}T")
            lines.append(f"  SW({label:>4}) = {v}")
    else:
        lines.append("  empty table")
    _emit(payload, args.json, "\n".join(lines))
    return 0


def cmd_lattice(args) -> int:
    model = resolve_model(args.model)
    exprs = args.cls
    if args.lattice_op == "pair":
        if len(exprs) != 2:
            raise CliError("pair needs exactly two --class arguments")
        x, y = (parse_class(model, e) for e in exprs)
        value = pair(x, y)
        _emit({"op": "pair", "value": value}, args.json, f"pair = {value}")
    elif args.lattice_op == "square":
        if len(exprs) != 1:
            raise CliError("square needs exactly one --class argument")
        value = square(parse_class(model, exprs[0]))
        _emit({"op": "square", "value": value}, args.json, f"square = {value}")
    else:
        if len(exprs) != 1:
            raise CliError("characteristic needs exactly one --class argument")
        value = is_characteristic(parse_class(model, exprs[0]))
        _emit({"op": "characteristic", "value": value}, args.json, f"characteristic = {value}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swsurgery",
        description="Exact surgery calculus for b+ = 1 families: lattices, SW tables, "
        "knot surgery, rational blowdowns, torus monodromy.",
    )
    parser.add_argument(
        "--version", action="version",
        version=f"swsurgery {__version__} (report schema v{REPORT_VERSION})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    vp = sub.add_parser("verify-paper", help="run the full golden verification suite")
    vp.add_argument("--only", choices=["lattice", "fourmanifold", "knots", "monodromy",
                                       "plumbing", "pipelines"])
    vp.add_argument("--json", action="store_true")
    vp.set_defaults(func=cmd_verify_paper)

    fam = sub.add_parser("family", help="build one family member and verify it")
    fam.add_argument("family", choices=["xn", "b7", "b8", "qn"])
    fam.add_argument("--n", type=int, required=True)
    fam.add_argument("--json", action="store_true")
    fam.add_argument("--model-out", help="also write the final model as JSON")
    fam.set_defaults(func=cmd_family)

    mono = sub.add_parser("monodromy", help="twist word calculus")
    mono_sub = mono.add_subparsers(dest="mono_op", required=True)
    check = mono_sub.add_parser("check", help="evaluate a word against the identity or another word")
    check.add_argument("word")
    check.add_argument("--equals")
    check.add_argument("--json", action="store_true")
    check.set_defaults(func=cmd_monodromy_check)

    plumb = sub.add_parser("plumbing", help="blowdown chain calculators")
    plumb_sub = plumb.add_subparsers(dest="plumb_op", required=True)
    cp = plumb_sub.add_parser("cp", help="order-p chain: matrix, determinant, boundary")
    source = cp.add_mutually_exclusive_group(required=True)
    source.add_argument("--p", type=int)
    source.add_argument("--weights", help="explicit linear chain, e.g. --weights=-9,-2,-2,-2,-2,-2")
    cp.add_argument("--invert", action="store_true")
    cp.add_argument("--boundary", action="store_true")
    cp.add_argument("--json", action="store_true")
    cp.set_defaults(func=cmd_plumbing_cp)

    sw = sub.add_parser("sw", help="Seiberg-Witten tables")
    sw_sub = sw.add_subparsers(dest="sw_op", required=True)
    e1s = sw_sub.add_parser("e1-surgery", help="table for iterated fiber surgeries")
    e1s.add_argument("--knots", required=True, help="comma-separated twist parameters, e.g. 1,3")
    e1s.add_argument("--json", action="store_true")
    e1s.set_defaults(func=cmd_sw_e1_surgery)

    lat = sub.add_parser("lattice", help="pairings on a stored or builtin model")
    lat.add_argument("lattice_op", choices=["pair", "square", "characteristic"])
    lat.add_argument("--model", required=True,
                     help="model JSON file or builtin (e1, yn:3, zn:2, xn:2, qn:1, ...)")
    lat.add_argument("--class", dest="cls", action="append", required=True,
                     help="class expression, e.g. 'T+E0+E1+E2' (repeat for pair)")
    lat.add_argument("--json", action="store_true")
    lat.set_defaults(func=cmd_lattice)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (CliError, WordSyntaxError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
