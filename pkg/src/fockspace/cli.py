"""Command-line front end.

    fockspace canon a1 --m 3 --core 2,2,1,1 --weight 3 --format csv
    fockspace canon a2 --h 5 --core 12,11,7,6,2,1 --weight 3
    fockspace verify sscbv --h 5 --core 12,11,7,6,2,1 --weight 3
    fockspace rouquier --h 3 --w 4 --alpha 13,7,6,4,3,1 --beta 10,7,6,4,3,3,1

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from . import __version__, compare, emit, fock_a1, fock_a2, rouquier, verify
from .combinatorics import (
    enumerate_bar_weight_space,
    enumerate_weight_space,
    partition_label,
    is_h_bar_core,
    is_m_core,
    is_m_restricted,
    is_restricted,
    parse_partition,
)
from .fock import CanonicalBasisError, CanonicalBasisMatrix, FockVector
from .qpoly import LaurentPoly, eval_q1

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

DEFAULT_MAX_WEIGHT = 6
MAX_SPACE = 20000

class UsageError(Exception):
    pass


class ResourceError(Exception):
    pass


def max_weight() -> int:
    raw = os.environ.get("FOCK_MAX_WEIGHT")
    if raw is None:
        return DEFAULT_MAX_WEIGHT
    try:
        return int(raw)
    except ValueError:
        raise UsageError("FOCK_MAX_WEIGHT must be an integer, got %r" % raw)


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _guard(kind: str, modulus: int, core, w: int) -> None:
    if w < 0:
        raise UsageError("weight must be non-negative")
    limit = max_weight()
    if w > limit:
        raise ResourceError("weight %d exceeds the limit %d (set FOCK_MAX_WEIGHT to raise it)" % (w, limit))
    if kind == "a1":
        rows = enumerate_weight_space(core, w, modulus)
    else:
        rows = enumerate_bar_weight_space(core, w, modulus)
    if len(rows) > MAX_SPACE:
        raise ResourceError("weight space has %d elements, above the limit %d" % (len(rows), MAX_SPACE))


def _check_modulus(kind: str, modulus: Optional[int]) -> int:
    if kind == "a1":
        if modulus is None or modulus < 2:
            raise UsageError("type a1 needs --m at least 2")
    else:
        if modulus is None or modulus < 3 or modulus % 2 == 0:
            raise UsageError("type a2 needs an odd --h at least 3")
    return modulus


def compute_matrix(kind: str, modulus: int, core, w: int) -> CanonicalBasisMatrix:
    """Validate the request and compute the canonical basis matrix."""
    modulus = _check_modulus(kind, modulus)
    core = tuple(core)
    if kind == "a1":
        if not is_m_core(core, modulus):
            raise UsageError("%s is not a %d-core" % (partition_label(core), modulus))
        _guard(kind, modulus, core, w)
        return fock_a1.llt_canonical_basis(core, w, modulus)
    if not is_h_bar_core(core, modulus):
        raise UsageError("%s is not a %d-bar-core" % (partition_label(core), modulus))
    _guard(kind, modulus, core, w)
    return fock_a2.canonical_basis_a2(core, w, modulus)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_canon(args, out) -> int:
    modulus = args.m if args.type == "a1" else args.h
    cb = compute_matrix(args.type, modulus, args.core, args.weight)
    out.write(emit.render(cb, args.format))
    return EXIT_OK


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError("this target needs --%s" % name.replace("_", "-"))


def _context(args) -> compare.NiceContext:
    _need(args, "h", "core", "weight")
    l = args.l if args.l is not None else len(args.core)
    ctx = compare.NiceContext(args.h, l)
    if not compare.is_standard(args.core, ctx):
        raise UsageError("%s is not standard for h=%d, l=%d"
                         % (partition_label(args.core), args.h, l))
    _guard("a2", args.h, args.core, args.weight)
    return ctx


def run_verify(args) -> dict:
    t = args.target
    if t == "pieri":
        return verify.verify_pieri(args.max_size, args.max_r)
    if t == "dualpieri":
        return verify.verify_dualpieri(args.max_size, args.max_r)
    if t == "bstrip":
        return verify.verify_bstrip(args.max_size)
    if t == "kostka":
        return verify.verify_kostka(args.max_size)
    if t == "carbeta":
        return verify.verify_carbeta(args.max_size, args.max_r)
    if t == "carlem":
        return verify.verify_carlem(args.max_size)
    if t == "addrun":
        return verify.verify_addrun(args.trials, args.seed)
    if t == "samecoeff":
        return verify.verify_samecoeff(args.trials, args.seed)
    if t == "sasfk":
        return verify.verify_sasfk(args.trials, args.seed)
    if t == "sscbv":
        ctx = _context(args)
        return compare.verify_sscbv(args.core, args.weight, ctx)
    if t == "firstmain":
        ctx = _context(args)
        return compare.verify_firstmain(args.core, args.weight, ctx)
    if t == "samedec":
        ctx = _context(args)
        return compare.verify_samedec(args.core, args.weight, ctx)
    if t == "rouquier":
        w = args.w if args.w is not None else args.weight
        if w is None:
            raise UsageError("rouquier needs --w")
        if w > max_weight():
            raise ResourceError("weight %d exceeds the limit %d" % (w, max_weight()))
        if args.h is not None:
            _check_modulus("a2", args.h)
            return verify.verify_rouquier_a2(args.h, w)
        if args.m is not None:
            _check_modulus("a1", args.m)
            return verify.verify_rouquier_a1(args.m, w)
        raise UsageError("rouquier needs --h or --m")
    raise UsageError("unknown target %r" % t)


def cmd_verify(args, out) -> int:
    report = run_verify(args)
    out.write(json.dumps(report, indent=1, sort_keys=True, default=list) + "\n")
    return EXIT_OK if report["passed"] else EXIT_FAIL


def _rouquier_core(args):
    if args.h is not None:
        _check_modulus("a2", args.h)
        if args.core is None:
            return rouquier.minimal_rouquier_bar_core(args.w, args.h)
        if not is_h_bar_core(args.core, args.h):
            raise UsageError("%s is not a %d-bar-core" % (partition_label(args.core), args.h))
        return args.core
    if args.m is not None:
        _check_modulus("a1", args.m)
        if args.core is None:
            return rouquier.minimal_rouquier_core(args.w, args.m)
        if not is_m_core(args.core, args.m):
            raise UsageError("%s is not a %d-core" % (partition_label(args.core), args.m))
        return args.core
    raise UsageError("give --h (type a2) or --m (type a1)")


def cmd_rouquier(args, out) -> int:
    if args.w is None or args.w < 1:
        raise UsageError("--w must be a positive integer")
    a2 = args.h is not None
    modulus = args.h if a2 else args.m
    core = _rouquier_core(args)
    ok = (rouquier.is_w_rouquier_bar_core(core, args.w, modulus) if a2
          else rouquier.is_w_rouquier_core(core, args.w, modulus))
    if args.check_core:
        out.write("%d-Rouquier: %s\n" % (args.w, "yes" if ok else "no"))
        return EXIT_OK if ok else EXIT_FAIL
    if not ok:
        raise UsageError("%s is not %d-Rouquier" % (partition_label(core), args.w))
    if args.at_q_1 and not a2:
        raise UsageError("--at-q-1 applies to type a2 only")
    formula = rouquier.mainrouq_formula if a2 else rouquier.ct_formula

    def entry(row, col) -> LaurentPoly:
        return formula(row, col, core, modulus)

    row, col = args.alpha, args.beta
    if row is not None and col is None:
        raise UsageError("--alpha needs --beta")
    if row is not None and col is not None:
        value = entry(row, col)
        if args.at_q_1:
            value_q1, abelian = rouquier.rock_q1(row, col, core, modulus)
            if not abelian:
                print("note: weight %d is not below h=%d" % (args.w, modulus), file=sys.stderr)
            out.write("%d (CONJECTURAL)\n" % value_q1)
        else:
            out.write("%s\n" % value)
        return EXIT_OK
    kind = "a2" if a2 else "a1"
    _guard(kind, modulus, core, args.w)
    if a2:
        rows = enumerate_bar_weight_space(core, args.w, modulus)
        cols = [b for b in rows if is_restricted(b, modulus)]
    else:
        rows = enumerate_weight_space(core, args.w, modulus)
        cols = [b for b in rows if is_m_restricted(b, modulus)]
    if col is not None:
        if col not in cols:
            raise UsageError("%s is not a restricted label of this weight space" % partition_label(col))
        cols = [col]
    columns = {}
    for c in cols:
        terms = {}
        for r in rows:
            x = entry(r, c)
            if args.at_q_1:
                x = LaurentPoly.constant(eval_q1(x))
            if x:
                terms[r] = x
        columns[c] = FockVector(terms)
    cb = CanonicalBasisMatrix(kind, modulus, core, args.w, rows, cols, columns)
    text = emit.render(cb, args.format)
    if args.at_q_1:
        text = "# CONJECTURAL: values at q=1 of the closed formula\n" + text
    out.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

VERIFY_TARGETS = ("pieri", "dualpieri", "bstrip", "kostka", "carbeta", "carlem", "addrun",
                  "samecoeff", "sasfk", "sscbv", "samedec", "firstmain", "rouquier")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fockspace", description="Canonical bases of level-one Fock spaces.")
    p.add_argument("--version", action="version", version="fockspace %s" % __version__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("canon", help="compute a canonical basis matrix")
    c.add_argument("type", choices=("a1", "a2"))
    c.add_argument("--m", type=int, help="modulus for type a1")
    c.add_argument("--h", type=int, help="odd modulus for type a2")
    c.add_argument("--core", type=_partition_arg, required=True)
    c.add_argument("--weight", type=int, required=True)
    c.add_argument("--format", choices=emit.FORMATS, default="pretty")
    c.set_defaults(func=cmd_canon)

    v = sub.add_parser("verify", help="run a verifier and print a json report")
    v.add_argument("target", choices=VERIFY_TARGETS)
    v.add_argument("--max-size", type=int, default=8)
    v.add_argument("--max-r", type=int, default=4)
    v.add_argument("--trials", type=int, default=200)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--h", type=int)
    v.add_argument("--m", type=int)
    v.add_argument("--l", type=int, help="length of standard partitions (default: length of the core)")
    v.add_argument("--core", type=_partition_arg)
    v.add_argument("--weight", type=int)
    v.add_argument("--w", type=int)
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("rouquier", help="closed formulas for Rouquier weight spaces")
    r.add_argument("--h", type=int)
    r.add_argument("--m", type=int)
    r.add_argument("--w", type=int, required=True)
    r.add_argument("--core", type=_partition_arg)
    r.add_argument("--alpha", type=_partition_arg, help="row label")
    r.add_argument("--beta", type=_partition_arg, help="restricted column label")
    r.add_argument("--at-q-1", action="store_true", help="evaluate at q=1 (conjectural decomposition numbers)")
    r.add_argument("--check-core", action="store_true")
    r.add_argument("--format", choices=emit.FORMATS, default="pretty")
    r.set_defaults(func=cmd_rouquier)
    return p


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args, out)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except CanonicalBasisError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_FAIL
