"""Command line front end.

Documents are JSON files (see ``eqmonoid.document``); ``-`` reads stdin and
``builtin:NAME`` names a registered fixture. Exit codes: 0 for success,
member or equal; 1 for a negative verdict; 2 for usage or parse errors.
"""
from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import document as docmod
from .eqsystem import infinite_support_patterns
from .extvec import complement, inf_support, parse_vector, project, subset_sort_key
from .fixtures import all_fixtures
from .oracle import Box, check_monoid_axioms, enumerate_box, equal_on_box
from .realization import describe_plan, evaluate_plan, plan_system
from .supportsystem import SupportSystemError, eq_to_ss, ss_to_eq, support_warnings, validate


class UsageError(Exception):
    pass


def render_set(s) -> str:
    return "{" + ",".join(str(i + 1) for i in sorted(s)) + "}" if s else "∅"


def load(ref: str, stdin=None) -> docmod.MonoidDocument:
    try:
        if ref.startswith("builtin:"):
            return docmod.builtin_document(ref[len("builtin:"):])
        if ref == "-":
            return docmod.loads((stdin or sys.stdin).read())
        with open(ref, encoding="utf-8") as fh:
            return docmod.loads(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {ref}: {exc}") from None
    except ValueError as exc:
        raise UsageError(f"{ref}: {exc}") from None


def box_for(args, k: int) -> Box:
    if args.box < 0:
        raise UsageError("--box must be nonnegative")
    return Box(k, args.box, not args.no_infinity)


def cmd_check(args, out) -> int:
    doc = load(args.document)
    try:
        x = parse_vector(" ".join(args.vector))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if len(x) != doc.k:
        raise UsageError(f"vector has length {len(x)}, document has k={doc.k}")
    if doc.kind == "equations" or (doc.kind == "builtin" and doc.payload.system is not None):
        bad = doc.system().violated(x)
        if bad is None:
            print("member", file=out)
            return 0
        print(f"non-member: constraint {bad} violated", file=out)
        return 1
    if doc.kind == "support_system":
        ss = doc.payload
        I = inf_support(x)
        if I not in ss.monoids:
            print(f"non-member: infinite support {render_set(I)} not in S", file=out)
            return 1
        if project(x, complement(ss.k, I)) not in ss.monoids[I]:
            print(f"non-member: finite part not in A_{render_set(I)}", file=out)
            return 1
        print("member", file=out)
        return 0
    ok = doc.predicate()(x)
    print("member" if ok else "non-member", file=out)
    return 0 if ok else 1


def cmd_supports(args, out) -> int:
    doc = load(args.document)
    if doc.kind == "lattice":
        sets = doc.payload.support_set
    elif doc.kind == "support_system":
        sets = doc.payload.monoids.keys()
    else:
        try:
            sets = infinite_support_patterns(doc.system())
        except docmod.DocumentError as exc:
            raise UsageError(str(exc)) from None
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    for s in sorted(sets, key=subset_sort_key):
        print(render_set(s), file=out)
    return 0


def cmd_convert(args, out, err) -> int:
    doc = load(args.document)
    try:
        if args.direction == "to-supports":
            sysm = doc.system()
            if doc.unit is None:
                raise UsageError("to-supports needs a unit in the document")
            ss = eq_to_ss(sysm, doc.unit)
            for w in support_warnings(ss):
                print(f"warning: {w}", file=err)
            out.write(docmod.dumps(docmod.support_document(ss)))
        else:
            if doc.kind != "support_system":
                raise UsageError("to-equations needs a support_system document")
            sysm = ss_to_eq(doc.payload)
            out.write(docmod.dumps(docmod.equations_document(sysm, doc.unit)))
    except (docmod.DocumentError, SupportSystemError) as exc:
        raise UsageError(str(exc)) from None
    return 0


def cmd_realize(args, out, err) -> int:
    doc = load(args.document)
    try:
        sysm = doc.system()
        if doc.unit is None:
            raise UsageError("realize needs a unit in the document")
        plan = plan_system(sysm, doc.unit)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = describe_plan(plan)
    out.write(docmod.dumps(docmod.plan_document(plan, doc.unit, {"description": text.splitlines()})))
    res = equal_on_box(lambda x: evaluate_plan(plan, x), sysm, box_for(args, sysm.k))
    print(text, file=err)
    print("soundness " + res.line(), file=err)
    return 0 if res.ok else 1


def cmd_verify(args, out) -> int:
    a = load(args.first)
    docs = [a]
    ok = True
    if args.second is not None:
        b = load(args.second)
        if a.k != b.k:
            raise UsageError(f"dimension mismatch: k={a.k} vs k={b.k}")
        docs.append(b)
    box = box_for(args, a.k)
    if len(docs) == 2:
        res = equal_on_box(a.predicate(), docs[1].predicate(), box)
        print(res.line(), file=out)
        ok = res.ok
    for name, d in zip(("first", "second"), docs):
        rep = check_monoid_axioms(enumerate_box(d.predicate(), box, workers=args.workers), box)
        for line in rep.lines():
            print(f"{name} {line}", file=out)
        ok = ok and rep.ok
    if a.kind == "support_system":
        for v in validate(a.payload):
            print(f"first invalid: {v}", file=out)
            ok = False
    return 0 if ok else 1


def cmd_examples(args, out) -> int:
    if args.name:
        try:
            doc = docmod.builtin_document(args.name, args.n)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        out.write(docmod.dumps(doc))
        return 0
    for fx in all_fixtures():
        tags = ("full" if fx.full else "not full") + ", " + fx.definability
        print(f"{fx.name} (k={fx.k}; {tags}): {fx.citation}", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--box", type=int, default=5, metavar="B",
                        help="oracle bound: check vectors with entries in 0..B (default 5)")
    common.add_argument("--no-infinity", action="store_true", help="leave inf out of the oracle box")
    common.add_argument("--workers", type=int, default=1, help="threads for box enumeration")
    p = argparse.ArgumentParser(prog="eqmonoid", description="Monoids of solutions of equations over N0 ∪ {inf}.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="decide membership of a vector")
    s.add_argument("document")
    s.add_argument("vector", nargs="+", help="entries, e.g. 3 inf 0")

    s = sub.add_parser("supports", parents=[common], help="list the realised supports")
    s.add_argument("document")

    s = sub.add_parser("convert", parents=[common], help="convert between equations and supports")
    s.add_argument("direction", choices=["to-supports", "to-equations"])
    s.add_argument("document")

    s = sub.add_parser("realize", parents=[common], help="emit a pullback realization plan")
    s.add_argument("document")

    s = sub.add_parser("verify", parents=[common], help="compare two documents on a box")
    s.add_argument("first")
    s.add_argument("second", nargs="?")

    s = sub.add_parser("examples", parents=[common], help="list or print builtin fixtures")
    s.add_argument("name", nargs="?")
    s.add_argument("-n", type=int, default=None, help="parameter for parameterised fixtures")
    return p


def main(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if args.command == "check":
            return cmd_check(args, out)
        if args.command == "supports":
            return cmd_supports(args, out)
        if args.command == "convert":
            return cmd_convert(args, out, err)
        if args.command == "realize":
            return cmd_realize(args, out, err)
        if args.command == "verify":
            return cmd_verify(args, out)
        return cmd_examples(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return 2


if __name__ == "__main__":
    sys.exit(main())
