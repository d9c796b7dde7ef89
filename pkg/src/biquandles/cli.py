"""Command-line front end.

Exit status: 0 success, 1 a verification or consistency check failed,
2 bad input (unparsable file, wrong kind, bad parameters, refused search).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import textio
from .enumeration import (
    BRUTEFORCE_MAX_ORDER,
    STRUCTURE_MAX_AUT,
    STRUCTURE_MAX_ORDER,
    census_crosscheck,
    enumerate_biquandles_bruteforce,
    enumerate_structures,
)
from .errors import AxiomError, BiquandleError, ConsistencyError, TableError
from .morphisms import (
    biquandle_aut_group,
    biquandle_isomorphism,
    classify_constant_structures,
    quandle_aut_group,
    quandle_isomorphism,
    structures_isomorphic,
)
from .perms import format_perm
from .products import biquandle_components, product_biquandle, quandle_components
from .structures import (
    BiquandleStructure,
    extract_structure,
    realize,
    underlying_quandle,
    verify_structure,
    wada_structure,
)
from .tables import (
    Biquandle,
    Group,
    Quandle,
    alexander_biquandle,
    alexander_quandle,
    conjugation_quandle,
    core_quandle,
    cyclic_group,
    dihedral_biquandle,
    dihedral_quandle,
    klein_four_group,
    symmetric_group,
    trivial_quandle,
    verify_biquandle,
    verify_group,
    verify_quandle,
    wada_biquandle,
)

FAMILIES = {
    "trivial-quandle": ("n",),
    "dihedral-quandle": ("n",),
    "alexander-quandle": ("n", "t"),
    "conjugation-quandle": ("group",),
    "core-quandle": ("group",),
    "dihedral-biquandle": ("n", "s"),
    "alexander-biquandle": ("n", "t", "s"),
    "wada-biquandle": ("group",),
    "wada-structure": ("group",),
    "cyclic-group": ("n",),
    "symmetric-group": ("n",),
}


class _Fail(Exception):
    """Raised by a command to exit with status 1 after printing its report."""


def _load(path, *kinds):
    doc = textio.read(path)
    if kinds and doc.kind not in kinds:
        raise TableError(f"{path}: expected {' or '.join(kinds)}, got {doc.kind}")
    try:
        return textio.build(doc)
    except AxiomError as exc:
        lines = [f"{path}: {doc.kind}: FAIL"]
        if exc.report is not None:
            lines += [f"  {axiom} {' '.join(map(str, w))}" for axiom, w in exc.report.violations]
        raise _Fail("\n".join(lines)) from None


def _group_arg(spec: str) -> Group:
    name, _, arg = spec.partition(":")
    if name == "cyclic":
        return cyclic_group(int(arg))
    if name == "symmetric":
        return symmetric_group(int(arg))
    if name == "klein":
        return klein_four_group()
    return _load(spec, "group")


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


# -- commands ----------------------------------------------------------------

def cmd_verify(args, manifest):
    doc = textio.read(args.file)
    if doc.kind == "quandle":
        report = verify_quandle(doc.blocks[0])
    elif doc.kind == "biquandle":
        report = verify_biquandle(*doc.blocks)
    elif doc.kind == "group":
        report = verify_group(doc.blocks[0])
    else:
        base = verify_quandle(doc.blocks[0])
        report = verify_structure(Quandle(doc.blocks[0]), doc.blocks[1]) if base.passed else base
    print(f"{doc.kind}: {'PASS' if report.passed else 'FAIL'}")
    for axiom, w in report.violations:
        print(f"  {axiom} {' '.join(map(str, w))}")
    if not report.passed:
        print(f"violations {report.total}")
    manifest.update(kind=doc.kind, n=doc.n, passed=report.passed, violations=report.total)
    return 0 if report.passed else 1


def cmd_make(args, manifest):
    params = {}
    for name in FAMILIES[args.family]:
        value = getattr(args, name)
        if value is None:
            raise TableError(f"family {args.family} needs --{name}")
        params[name] = _group_arg(value) if name == "group" else value
    build = {
        "trivial-quandle": lambda p: trivial_quandle(p["n"]),
        "dihedral-quandle": lambda p: dihedral_quandle(p["n"]),
        "alexander-quandle": lambda p: alexander_quandle(p["n"], p["t"]),
        "conjugation-quandle": lambda p: conjugation_quandle(p["group"]),
        "core-quandle": lambda p: core_quandle(p["group"]),
        "dihedral-biquandle": lambda p: dihedral_biquandle(p["n"], p["s"]),
        "alexander-biquandle": lambda p: alexander_biquandle(p["n"], p["t"], p["s"]),
        "wada-biquandle": lambda p: wada_biquandle(p["group"]),
        "wada-structure": lambda p: wada_structure(p["group"]),
        "cyclic-group": lambda p: cyclic_group(p["n"]),
        "symmetric-group": lambda p: symmetric_group(p["n"]),
    }[args.family]
    obj = build(params)
    _emit(args, textio.dumps(obj))
    manifest.update(family=args.family, n=obj.n)
    return 0


def cmd_underlying(args, manifest):
    B = _load(args.file, "biquandle")
    _emit(args, textio.dumps(underlying_quandle(B)))
    manifest.update(n=B.n)
    return 0


def cmd_realize(args, manifest):
    S = _load(args.file, "structure")
    _emit(args, textio.dumps(realize(S)))
    manifest.update(n=S.n, constant=S.is_constant())
    return 0


def cmd_extract(args, manifest):
    B = _load(args.file, "biquandle")
    S = extract_structure(B)
    _emit(args, textio.dumps(S))
    manifest.update(n=B.n, constant=S.is_constant())
    return 0


def cmd_aut(args, manifest):
    obj = _load(args.file, "quandle", "biquandle", "structure")
    if isinstance(obj, Quandle):
        G = quandle_aut_group(obj, oracle=args.oracle)
    else:
        B = realize(obj) if isinstance(obj, BiquandleStructure) else obj
        G = biquandle_aut_group(B, oracle=args.oracle)
    _emit(args, textio.format_group(G))
    manifest.update(degree=G.degree, order=G.order)
    return 0


def cmd_iso(args, manifest):
    a = _load(args.first, "quandle", "biquandle", "structure")
    b = _load(args.second, "quandle", "biquandle", "structure")
    if type(a) is not type(b):
        raise TableError("iso needs two files of the same kind")
    if isinstance(a, Quandle):
        res = quandle_isomorphism(a, b)
    elif isinstance(a, Biquandle):
        res = biquandle_isomorphism(a, b)
    else:
        res = structures_isomorphic(a, b)
    print(f"isomorphic: {'yes' if res.found else 'no'}")
    if res.found:
        print(f"witness: {format_perm(res.witness)}")
    manifest.update(found=res.found, witness=list(res.witness) if res.found else None)
    return 0


def cmd_classify_constant(args, manifest):
    Q = _load(args.file, "quandle")
    reps = classify_constant_structures(Q)
    print(f"classes {len(reps)}")
    for i, (f, size) in enumerate(reps):
        print(f"class {i} size {size}: {format_perm(f)}")
    manifest.update(classes=len(reps), sizes=[s for _, s in reps])
    return 0


def cmd_structures(args, manifest):
    Q = _load(args.file, "quandle")
    census = enumerate_structures(Q, args.max_order, args.max_aut)
    print(f"structures {census.count}")
    print(f"classes {len(census.classes)}")
    for i, cls in enumerate(census.classes):
        kind = "constant" if census.all[cls[0]].is_constant() else "nonconstant"
        print(f"class {i} size {len(cls)} {kind}: members {' '.join(map(str, cls))}")
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        width = len(str(max(census.count - 1, 0)))
        names = [f"structure_{i:0{width}d}.txt" for i in range(census.count)]
        for name, S in zip(names, census.all):
            textio.write(out / name, S)
        lines = ["kind structure-census", f"order {Q.n}", f"count {census.count}",
                 f"classes {len(census.classes)}"]
        for i, cls in enumerate(census.classes):
            lines.append(f"class {i} size {len(cls)} representative {names[cls[0]]}")
        lines += [f"file {name}" for name in names]
        (out / "MANIFEST").write_text("\n".join(lines) + "\n")
    manifest.update(structures=census.count, classes=[len(c) for c in census.classes])
    return 0


def cmd_product(args, manifest):
    Q = _load(args.left, "quandle")
    K = _load(args.right, "quandle")
    P = product_biquandle(Q, K)
    comps = biquandle_components(P.biquandle)
    out = Path(args.output)
    textio.write(out, P.biquandle)
    sidecar = [f"codec (x,a) -> x*{K.n} + a", f"left_order {Q.n}", f"right_order {K.n}",
               f"components {len(comps)}"] + [f"block {' '.join(map(str, b))}" for b in comps.blocks]
    Path(str(out) + ".codec").write_text("\n".join(sidecar) + "\n")
    print(f"product order {P.n}, components {len(comps)}")
    manifest.update(order=P.n, components=[list(b) for b in comps.blocks])
    return 0


def cmd_components(args, manifest):
    obj = _load(args.file, "quandle", "biquandle")
    comps = quandle_components(obj) if isinstance(obj, Quandle) else biquandle_components(obj)
    print(f"components {len(comps)}")
    for b in comps.blocks:
        print(f"block {' '.join(map(str, b))}")
    manifest.update(components=[list(b) for b in comps.blocks])
    return 0


def cmd_census(args, manifest):
    census = enumerate_biquandles_bruteforce(args.order, args.max_order)
    print(f"order {census.order}")
    print(f"count {census.count}")
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        width = len(str(max(census.count - 1, 0)))
        names = [f"biquandle_{i:0{width}d}.txt" for i in range(census.count)]
        for name, B in zip(names, census.all):
            textio.write(out / name, B)
        lines = ["kind biquandle-census", f"order {census.order}", f"count {census.count}"]
        lines += [f"file {name}" for name in names]
        (out / "MANIFEST").write_text("\n".join(lines) + "\n")
    manifest.update(order=census.order, count=census.count)
    return 0


def cmd_crosscheck(args, manifest):
    try:
        report = census_crosscheck(args.order, args.max_order)
    except ConsistencyError as exc:
        print(f"crosscheck: FAIL: {exc}")
        manifest.update(passed=False)
        return 1
    print(report.summary())
    manifest.update(passed=True, census=report.census, roundtrip=report.roundtrip,
                    quandles=report.quandles, structures=report.structures)
    return 0


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="biquandles", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--manifest", action="store_true",
                        help="append a JSON summary block after the report")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    def verb(name, func, help, output=False):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        if output:
            p.add_argument("-o", "--output", help="write the result here instead of stdout")
        return p

    p = verb("verify", cmd_verify, "check the axioms of a table file")
    p.add_argument("file")

    p = verb("make", cmd_make, "write a built-in family", output=True)
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--group", help="cyclic:N, symmetric:N, klein, or a group file")

    p = verb("underlying", cmd_underlying, "underlying quandle of a biquandle", output=True)
    p.add_argument("file")
    p = verb("realize", cmd_realize, "biquandle defined by a structure", output=True)
    p.add_argument("file")
    p = verb("extract", cmd_extract, "structure of a biquandle on its underlying quandle", output=True)
    p.add_argument("file")

    p = verb("aut", cmd_aut, "automorphism group", output=True)
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true", help="test every bijection instead of searching")

    p = verb("iso", cmd_iso, "isomorphism test between two files of the same kind")
    p.add_argument("first")
    p.add_argument("second")

    p = verb("classify-constant", cmd_classify_constant, "classes of constant structures")
    p.add_argument("file")

    p = verb("structures", cmd_structures, "census of structures on a quandle")
    p.add_argument("file")
    p.add_argument("--out", help="directory for structure files and MANIFEST")
    p.add_argument("--max-order", type=int, default=STRUCTURE_MAX_ORDER)
    p.add_argument("--max-aut", type=int, default=STRUCTURE_MAX_AUT)

    p = verb("product", cmd_product, "product biquandle of two quandles")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("-o", "--output", required=True)

    p = verb("components", cmd_components, "connected components")
    p.add_argument("file")

    p = verb("census", cmd_census, "brute-force census of biquandles of one order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--out", help="directory for biquandle files and MANIFEST")
    p.add_argument("--max-order", type=int, default=BRUTEFORCE_MAX_ORDER)

    p = verb("crosscheck", cmd_crosscheck, "compare the raw census with structure censuses")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--max-order", type=int, default=BRUTEFORCE_MAX_ORDER)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    manifest = {"verb": args.verb}
    try:
        status = args.func(args, manifest)
    except _Fail as exc:
        print(exc)
        status = 1
    except ConsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (BiquandleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.manifest:
        manifest["status"] = status
        print("--- manifest")
        print(json.dumps(manifest, sort_keys=True))
    return status


if __name__ == "__main__":
    sys.exit(main())
