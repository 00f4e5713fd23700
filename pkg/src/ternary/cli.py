"""Command-line front end.

Every command prints one JSON report ``{command, input, result, witnesses,
timing_ms}`` on stdout.  Exit status is 0 on success, 1 when the property asked
about is false (the report then carries a witness) and 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import binary as bt
from . import formats
from .constructions import EXAMPLE_LABELS, EXAMPLES, builtin_example, gluskin_hosszu, post_cover, retract
from .core import CayleyCube, is_ternary_group, property_report, verify_dornte
from .decompose import DEFAULT_SEED, decompose
from .enumeration import census_report, enumerate_ternary_groups, is_isomorphic
from .errors import InputError, TernaryError
from .representations import KINDS, conjugacy_classes, pair_classes, regular, verify_representation

EXIT_OK, EXIT_FALSE, EXIT_INPUT = 0, 1, 2


class Outcome:
    """What a command hands back to :func:`main`."""

    def __init__(self, result, witnesses=None, ok: bool = True):
        self.result = result
        self.witnesses = witnesses or {}
        self.ok = ok


def _element(cube: CayleyCube, value: int, flag: str) -> int:
    if not 0 <= value < cube.order:
        raise InputError(f"{flag} {value} is outside [0, {cube.order})")
    return value


def _group_or_fail(cube: CayleyCube):
    g = is_ternary_group(cube)
    if not g:
        return None, Outcome({"is_ternary_group": False, "reason": g.reason},
                             {"is_ternary_group": g.witness}, ok=False)
    return g, None


def _write(path: str, text: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def cmd_verify(args) -> Outcome:
    cube = formats.read_cube(args.file)
    rep = property_report(cube, force_medial=args.force_medial)
    d = rep.to_dict()
    return Outcome(d, d.pop("witnesses"), ok=bool(rep.flags["is_ternary_group"]))


def cmd_skew(args) -> Outcome:
    cube = formats.read_cube(args.file)
    g, fail = _group_or_fail(cube)
    if fail:
        return fail
    dornte = verify_dornte(cube, g.skew)
    return Outcome({"skew": list(g.skew.map), "dornte": bool(dornte)},
                   {} if dornte else {"dornte": dornte.witness}, ok=bool(dornte))


def cmd_retract(args) -> Outcome:
    cube = formats.read_cube(args.file)
    a = _element(cube, args.at, "--at")
    ret = retract(cube, a)
    if args.output:
        _write(args.output, formats.format_binary(ret, (f"retract at {a}",)))
    return Outcome({"at": a, "is_group": bt.is_group(ret), "identity": bt.identity(ret),
                    "table": ret.table.tolist(), "output": args.output})


def cmd_gh(args) -> Outcome:
    cube = formats.read_cube(args.file)
    a = _element(cube, args.at, "--at")
    _, fail = _group_or_fail(cube)
    if fail:
        return fail
    gh = gluskin_hosszu(cube, a)
    return Outcome({"at": a, "retract": gh.retract.table.tolist(), "identity": gh.identity,
                    "phi": list(gh.phi), "b": gh.b_element,
                    "reconstruction": gh.reconstruct() == cube})


def cmd_cover(args) -> Outcome:
    cube = formats.read_cube(args.file)
    c = _element(cube, args.at, "--at")
    _, fail = _group_or_fail(cube)
    if fail:
        return fail
    cov = post_cover(cube, c)
    meta = {"c": c, "base_order": cov.base_order, "neutral": cov.neutral,
            "h_mask": cov.h_mask(), "encoding": "(x, s) -> x + s * n"}
    if args.output:
        _write(args.output, formats.format_binary(cov.table, (f"covering group at c = {c}",)))
        _write(args.output + ".json", json.dumps(meta, indent=2) + "\n")
    return Outcome({**meta, "is_group": True, "h_normal_index_2": True,
                    "quotient": _quotient_by_h(cov), "table": cov.table.table.tolist(),
                    "output": args.output})


def _quotient_by_h(cov) -> list:
    # coset 0 is H itself; the product of cosets is read off any representatives
    coset = [1 - int(m) for m in cov.h_mask()]
    t = cov.table.table
    q = [[None, None], [None, None]]
    for x in range(cov.order):
        for y in range(cov.order):
            c = coset[t[x, y]]
            if q[coset[x]][coset[y]] not in (None, c):
                raise InputError("H is not normal")
            q[coset[x]][coset[y]] = c
    return q


def cmd_rep(args) -> Outcome:
    cube = formats.read_cube(args.file)
    rep = regular(cube, args.kind)
    chk = verify_representation(rep, cube)
    payload = formats.representation_to_json(rep)
    if args.output:
        _write(args.output, json.dumps(payload, indent=1) + "\n")
    return Outcome({"verified": bool(chk), "representation": payload},
                   {} if chk else {"verify": chk.witness}, ok=bool(chk))


def cmd_classes(args) -> Outcome:
    cube = formats.read_cube(args.file)
    if args.relation == "conj":
        _, fail = _group_or_fail(cube)
        if fail:
            return fail
        conj = conjugacy_classes(cube)
        return Outcome({"relation": "conj", "elements": conj.on_elements.to_dict(),
                        "pairs": conj.on_pairs.to_dict(), "is_equivalence": conj.is_equivalence,
                        "is_congruence": conj.is_congruence})
    part = pair_classes(cube, f"{args.relation}_sim")
    return Outcome(part.to_dict())


def cmd_decompose(args) -> Outcome:
    cube = formats.read_cube(args.file)
    rep = regular(cube, args.kind)
    dec = decompose(rep, seed=args.seed)
    return Outcome(formats.decomposition_to_json(dec))


def cmd_example(args) -> Outcome:
    cube = builtin_example(args.name)
    labels = EXAMPLE_LABELS.get(args.name)
    comments = (f"example {args.name}",)
    if labels:
        comments += ("labels " + " ".join(labels),)
    text = formats.format_cube(cube, comments)
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)
        return None
    return Outcome({"name": args.name, "order": cube.order, "output": args.output})


def cmd_enumerate(args) -> Outcome:
    entries = enumerate_ternary_groups(args.order)
    report = census_report(entries)
    os.makedirs(args.outdir, exist_ok=True)
    index = []
    for i, e in enumerate(entries):
        name = f"order{args.order}_{i:03d}.tgc"
        formats.write_cube(os.path.join(args.outdir, name), e.cube)
        index.append({"file": name, **e.to_dict()})
    checks = {k: bool(v) for k, v in report.checks.items()}
    _write(os.path.join(args.outdir, "index.json"),
           json.dumps({"order": args.order, "count": len(entries), "checks": checks,
                       "entries": formats.jsonable(index)}, indent=1) + "\n")
    return Outcome({"order": args.order, "count": len(entries), "checks": checks,
                    "outdir": args.outdir},
                   {k: v.witness for k, v in report.checks.items() if not v},
                   ok=report.consistent)


def cmd_iso(args) -> Outcome:
    c1, c2 = formats.read_cube(args.file1), formats.read_cube(args.file2)
    h = is_isomorphic(c1, c2)
    return Outcome({"bijection": h if h is not None else "none"}, ok=h is not None)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ternary", description="Finite ternary groups and their representations.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file", help="cube in tgc v1 format")
        sp.set_defaults(func=fn)
        return sp

    sp = with_file("verify", cmd_verify, "all pointwise properties")
    sp.add_argument("--force-medial", action="store_true", help="check mediality above order 4")
    with_file("skew", cmd_skew, "skew map and Dornte relations")
    for name, fn, what in (("retract", cmd_retract, "retract at a"),
                           ("gh", cmd_gh, "Gluskin-Hosszu decomposition at a"),
                           ("cover", cmd_cover, "covering group at c")):
        sp = with_file(name, fn, what)
        sp.add_argument("--at", type=int, required=True)
        if name != "gh":
            sp.add_argument("-o", "--output", help="write the tgb table here")
    sp = with_file("rep", cmd_rep, "regular representation matrices")
    sp.add_argument("--kind", choices=KINDS, required=True)
    sp.add_argument("-o", "--output", help="write the representation JSON here")
    sp = with_file("classes", cmd_classes, "pair equivalence classes")
    sp.add_argument("--relation", choices=("left", "middle", "conj"), required=True)
    sp = with_file("decompose", cmd_decompose, "block decomposition of a regular representation")
    sp.add_argument("--kind", choices=KINDS, required=True)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)

    sp = sub.add_parser("example", help="write a built-in example cube")
    sp.add_argument("name", help=", ".join(EXAMPLES))
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_example)
    sp = sub.add_parser("enumerate", help="census of ternary groups of a given order")
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--outdir", required=True)
    sp.set_defaults(func=cmd_enumerate)
    sp = sub.add_parser("iso", help="isomorphism between two cubes")
    sp.add_argument("file1")
    sp.add_argument("file2")
    sp.set_defaults(func=cmd_iso)
    return p


def _input_of(args) -> dict:
    return {k: v for k, v in vars(args).items() if k not in ("func", "command")}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        out = args.func(args)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except TernaryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FALSE
    if out is None:
        return EXIT_OK
    report = {
        "command": args.command,
        "input": _input_of(args),
        "result": formats.jsonable(out.result),
        "witnesses": formats.jsonable(out.witnesses),
        "timing_ms": round((time.perf_counter() - start) * 1000, 3),
    }
    print(json.dumps(report, indent=1))
    return EXIT_OK if out.ok else EXIT_FALSE


if __name__ == "__main__":
    sys.exit(main())
