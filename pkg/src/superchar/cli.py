"""superchar command-line interface."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .dshom import build_ds
from .generators import gens_hk, gl_units
from .kackernel import NotInKernel, kac_k, kernel_decompose, sch_kac
from .polyio import PolyParseError, format_poly, parse_poly_for, poly_to_dict
from .rootdata import (
    CLASSICAL,
    EXCEPTIONAL,
    AlgebraError,
    format_root,
    format_weight,
    parse_algebra,
    parse_roots,
    parse_weight,
    super_dims,
)
from .suites import default_roots, exceptional_suite, homomorphism_suite, kernel_suite, transfer_suite
from .superring import is_in_JG, membership
from .weightlat import LatticeError, NotDivisible, ShapeError


class UsageError(Exception):
    """Parse or validation problem; exit code 2."""


class MathFailure(Exception):
    """Well-posed input with a negative mathematical answer; exit code 1."""

    def __init__(self, message: str, result=None):
        super().__init__(message)
        self.result = result


def _read_input(args) -> str:
    if args.input is not None:
        p = Path(args.input)
        if args.input != "-" and len(args.input) < 4096 and p.is_file():
            return p.read_text()
        if args.input == "-":
            return sys.stdin.read()
        return args.input
    if args.file is not None:
        return Path(args.file).read_text()
    return sys.stdin.read()


def _poly_out(f, fmt: str):
    return poly_to_dict(f) if fmt == "json" else format_poly(f)


def _roots(args, a):
    if args.roots:
        return parse_roots(args.roots, a)
    return default_roots(a)


# -- subcommands -------------------------------------------------------------

def cmd_info(args, a):
    info = {
        "algebra": str(a),
        "family": a.family,
        "rank": [a.m, a.n],
        "super_dims": list(super_dims(a)),
        "positive_even_roots": [format_root(r, a) for r in a.pos_even_roots],
        "positive_odd_roots": [format_root(r, a) for r in a.pos_odd_roots],
        "isotropic_positive_roots": [format_root(r, a) for r in a.iso_pos],
        "defect": a.defect,
        "weyl_order": a.weyl_order(),
        "rho": format_weight(a.rho, a),
        "rho_iso": format_weight(a.rho_iso, a),
    }
    if args.format == "json":
        return info
    return "\n".join(f"{k}: {', '.join(map(str, v)) if isinstance(v, list) else v}" for k, v in info.items())


def cmd_kac(args, a):
    lam = parse_weight(args.lam, a)
    return _poly_out(kac_k(a, lam), args.format)


def cmd_schkac(args, a):
    lam = parse_weight(args.lam, a)
    return _poly_out(sch_kac(a, lam), args.format)


def cmd_ds(args, a):
    f = parse_poly_for(_read_input(args), a)
    d = build_ds(a, _roots(args, a))
    img = d.apply(f)
    if args.format == "json":
        return {"target": str(d.target), "image": poly_to_dict(img)}
    return format_poly(img)


def cmd_member(args, a):
    f = parse_poly_for(_read_input(args), a)
    if args.group:
        res = is_in_JG(a, f)
        out = {"member": res.ok, "group": True, "witness": None if res.ok else str(res.witness)}
    else:
        out = membership(a, f).to_dict()
    if not out["member"]:
        raise MathFailure(out["witness"], out)
    return out if args.format == "json" else "member"


def cmd_decompose(args, a):
    f = parse_poly_for(_read_input(args), a)
    try:
        dec = kernel_decompose(a, f, args.mode)
    except NotInKernel as exc:
        raise MathFailure(str(exc), {"reason": exc.reason}) from None
    coeffs = dec.to_dict()
    if args.format == "json":
        return {"mode": args.mode, "coeffs": coeffs}
    if not coeffs:
        return "0"
    return "\n".join(f"{c} * k({lam})" for lam, c in coeffs.items())


def cmd_gens(args, a):
    K = args.order
    out = {f"h{k}": g for k, g in enumerate(gens_hk(a, K), 1)}
    if a.family in ("gl", "sl"):
        out.update({f"h{k}_inv": g for k, g in enumerate(gens_hk(a, K, inverse=True), 1)})
    if a.family == "gl":
        u, ui = gl_units(a)
        out.update({"unit": u, "unit_inv": ui})
    if args.format == "json":
        return {k: poly_to_dict(v) for k, v in out.items()}
    return "\n".join(f"{k} = {format_poly(v)}" for k, v in out.items())


def cmd_verify(args, a):
    roots = parse_roots(args.roots, a) if args.roots else None
    prop = args.property
    if prop == "homomorphism":
        rep = homomorphism_suite(a, roots, args.seed, args.count)
    elif prop == "transfer":
        rep = transfer_suite(a, roots, args.order)
    elif prop == "exceptional":
        if a.family not in EXCEPTIONAL:
            raise UsageError(f"verify exceptional needs G(3), F(4) or D(2,1;a), got {a}")
        rep = exceptional_suite(a, args.seed, args.count)
    else:
        if a.family not in CLASSICAL:
            raise UsageError(f"verify kernel needs gl, sl or osp, got {a}")
        rep = kernel_suite(a, roots, args.seed, args.count)
    summary = rep.to_dict()
    if not rep.ok:
        raise MathFailure(rep.first_counterexample, summary)
    return summary if args.format == "json" else json.dumps(summary, sort_keys=True)


COMMANDS = {
    "info": cmd_info,
    "kac": cmd_kac,
    "schkac": cmd_schkac,
    "ds": cmd_ds,
    "member": cmd_member,
    "decompose": cmd_decompose,
    "gens": cmd_gens,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="superchar", description="ds_x on supercharacter rings")
    p.add_argument("--version", action="version", version=f"superchar {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", "-a", required=True, help='e.g. "gl(2|1)", "osp(3|2)", "D(2,1;2/3)", "F(4)", "G(3)"')
    common.add_argument("--format", choices=("text", "json"), default="text")
    inp = argparse.ArgumentParser(add_help=False)
    inp.add_argument("--input", "-i", help="polynomial text/JSON, a file path, or - for stdin")
    inp.add_argument("--file", "-f", help="read the polynomial from this file")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("info", parents=[common], help="root data summary")
    for name in ("kac", "schkac"):
        sp = sub.add_parser(name, parents=[common], help="k(lambda)" if name == "kac" else "sch K(lambda) (gl, sl)")
        sp.add_argument("--lambda", "-l", dest="lam", required=True, help='weight "a1,...,am|b1,...,bn"')
    sp = sub.add_parser("ds", parents=[common, inp], help="apply ds_x")
    sp.add_argument("--roots", "-r", help='isotropic roots separated by ";" (default: one standard root)')
    sp = sub.add_parser("member", parents=[common, inp], help="membership in J_g (or J_G with --group)")
    sp.add_argument("--group", action="store_true")
    sp = sub.add_parser("decompose", parents=[common, inp], help="expand a kernel element in the k(lambda) basis")
    sp.add_argument("--mode", choices=("algebra", "group"), default="algebra")
    sp = sub.add_parser("gens", parents=[common], help="generators h_k")
    sp.add_argument("--order", "-K", type=int, default=3)
    sp = sub.add_parser("verify", parents=[common], help="seeded property suites")
    sp.add_argument("property", choices=("transfer", "exceptional", "kernel", "homomorphism"))
    sp.add_argument("--roots", "-r")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=20)
    sp.add_argument("--order", "-K", type=int, default=5)
    return p


def _emit(fmt: str, ok: bool, result, witness, stream) -> None:
    if fmt == "json":
        stream.write(json.dumps({"ok": ok, "result": result, "witness": witness}, sort_keys=True) + "\n")
    elif result is not None and ok:
        stream.write(f"{result}\n")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = args.format
    try:
        try:
            a = parse_algebra(args.algebra)
        except AlgebraError as exc:
            raise UsageError(str(exc)) from None
        if args.command == "gens" and args.order < 0:
            raise UsageError("--order must be nonnegative")
        result = COMMANDS[args.command](args, a)
    except (UsageError, PolyParseError, AlgebraError, LatticeError, ShapeError, ValueError) as exc:
        msg = f"error: {exc}"
        if fmt == "json":
            _emit(fmt, False, None, msg, sys.stdout)
        print(msg, file=sys.stderr)
        return 2
    except MathFailure as exc:
        return _fail(fmt, str(exc), exc.result)
    except NotDivisible as exc:
        return _fail(fmt, f"not divisible: {exc}", None)
    _emit(fmt, True, result, None, sys.stdout)
    return 0


def _fail(fmt: str, witness: str, result) -> int:
    if fmt == "json":
        _emit(fmt, False, result, witness, sys.stdout)
    else:
        print(witness)
    return 1


if __name__ == "__main__":
    sys.exit(main())
