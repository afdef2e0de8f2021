"""Command-line interface.

    widecat algebra check FILE
    widecat modules list FILE
    widecat ar-quiver export FILE [--format dot|json]
    widecat tau-rigid list FILE
    widecat wide list FILE
    widecat wide-cat export FILE [--format dot|json] [--drop-zero-object]
    widecat sequences {list,count} FILE --length T
    widecat factorizations FILE --morphism '["S2","P1[1]"]' [--source '[...]']
    widecat verify FILE [--suites a,b,...] [--jobs N]

Common flags: --field overrides the field declared in the file, --budget
caps the iso-class enumeration, --cache-dir reuses stored enumerations,
--format selects the output encoding.  Exit codes: 0 success, 1 verification
failure, 2 bad input, 3 budget exceeded.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from .arquiver import ar_quiver_dot, ar_quiver_json, build_ar_quiver
from .category import (WideCategory, category_dot, category_json,
                       enumerate_wide_subcategories, morphism)
from .context import DEFAULT_BUDGET
from .algebra import build_algebra
from .errors import BudgetExceeded, InputError, NotSupportTauRigid
from .fields import field_from_name
from .sequences import (count_signed_sequences, enumerate_signed_sequences,
                        factorizations)
from .taurigid import (CObject, WideSubcategory, full_subcategory,
                       strigid_objects, wide_rank)
from .textio import context_for, parse_algebra_file
from .verify import SUITE_NAMES, run_verify


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("file", help="algebra presentation file")
    p.add_argument("--field", help="override the field (Q, F101, 'Fp 101')")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="iso-class enumeration cap")
    p.add_argument("--cache-dir", help="directory for enumeration snapshots")
    p.add_argument("--format", dest="fmt",
                   help="output format (text, json, dot where applicable)")


def _load(args):
    pres = parse_algebra_file(args.file)
    if args.field:
        pres = dataclasses.replace(pres, field=field_from_name(args.field))
    alg = build_algebra(pres)
    return alg, context_for(alg, cache_dir=args.cache_dir, budget=args.budget)


def _fmt(args, allowed: tuple[str, ...], default: str) -> str:
    fmt = args.fmt or default
    if fmt not in allowed:
        raise InputError(f"--format {fmt!r} not supported here; "
                         f"choose from {', '.join(allowed)}")
    return fmt


def _emit_json(doc) -> None:
    print(json.dumps(doc, indent=2, sort_keys=True))


def _resolve_labels(ctx, names) -> list[int]:
    by_label = {ctx.label(i): i for i in ctx.ind_ids()}
    out = []
    for name in names:
        if name not in by_label:
            raise InputError(f"unknown module label {name!r}; "
                             f"known: {', '.join(sorted(by_label))}")
        out.append(by_label[name])
    return out


def _parse_object(ctx, names) -> CObject:
    mods = [n for n in names if not n.endswith("[1]")]
    shifts = [n[:-3] for n in names if n.endswith("[1]")]
    return CObject.of(_resolve_labels(ctx, mods), _resolve_labels(ctx, shifts))


# -- commands ---------------------------------------------------------------


def _cmd_algebra(args) -> int:
    if args.verb == "check":
        pres = parse_algebra_file(args.file)
        if args.field:
            pres = dataclasses.replace(pres, field=field_from_name(args.field))
        alg = build_algebra(pres)
        doc = {
            "vertices": len(pres.vertices),
            "arrows": len(pres.arrows),
            "relations": len(pres.relations),
            "dimension": alg.dim,
            "field": alg.field.name(),
        }
        if _fmt(args, ("text", "json"), "text") == "json":
            _emit_json(doc)
        else:
            print(f"ok: {doc['vertices']} vertices, {doc['arrows']} arrows, "
                  f"{doc['relations']} relations, dimension {doc['dimension']}, "
                  f"field {doc['field']}")
    return 0


def _cmd_modules(args) -> int:
    fmt = _fmt(args, ("text", "json"), "text")
    _, ctx = _load(args)
    rows = [{"id": i, "label": ctx.label(i),
             "dimension_vector": list(ctx.dims(i)),
             "projective": ctx.is_projective(i),
             "injective": i in ctx.injective_ids}
            for i in ctx.ind_ids()]
    if fmt == "json":
        _emit_json({"modules": rows})
    else:
        for r in rows:
            tags = "".join(t for t, on in (("P", r["projective"]),
                                           ("I", r["injective"])) if on)
            dims = ",".join(str(d) for d in r["dimension_vector"])
            print(f"{r['id']:>3}  {r['label']:<8} ({dims})  {tags}")
    return 0


def _cmd_ar_quiver(args) -> int:
    fmt = _fmt(args, ("dot", "json"), "dot")
    _, ctx = _load(args)
    arq = build_ar_quiver(ctx)
    if fmt == "dot":
        sys.stdout.write(ar_quiver_dot(arq))
    else:
        _emit_json(ar_quiver_json(arq))
    return 0


def _cmd_tau_rigid(args) -> int:
    fmt = _fmt(args, ("text", "json"), "text")
    _, ctx = _load(args)
    objs = strigid_objects(ctx, full_subcategory(ctx))
    if fmt == "json":
        _emit_json({"objects": [
            {"summands": [ctx.label(i) for i in o.mods] +
                         [ctx.label(i) + "[1]" for i in o.shifts],
             "size": o.delta} for o in objs]})
    else:
        for o in objs:
            print(o.describe(ctx))
        print(f"total: {len(objs)}", file=sys.stderr)
    return 0


def _cmd_wide(args) -> int:
    fmt = _fmt(args, ("text", "json"), "text")
    _, ctx = _load(args)
    wides = enumerate_wide_subcategories(ctx)
    if fmt == "json":
        _emit_json({"wide_subcategories": [
            {"members": [ctx.label(i) for i in w.key],
             "rank": wide_rank(ctx, w)} for w in wides]})
    else:
        for w in wides:
            print(f"rank {wide_rank(ctx, w)}: {w.describe(ctx)}")
        print(f"total: {len(wides)}", file=sys.stderr)
    return 0


def _cmd_wide_cat(args) -> int:
    fmt = _fmt(args, ("dot", "json"), "dot")
    _, ctx = _load(args)
    cat = WideCategory(ctx, drop_zero_object=args.drop_zero_object)
    sys.stdout.write(category_dot(cat) if fmt == "dot" else category_json(cat))
    return 0


def _cmd_sequences(args) -> int:
    fmt = _fmt(args, ("text", "json"), "text")
    _, ctx = _load(args)
    if args.length < 0:
        raise InputError("--length must be nonnegative")
    if args.verb == "count":
        n = count_signed_sequences(ctx, None, args.length)
        if fmt == "json":
            _emit_json({"length": args.length, "count": n})
        else:
            print(n)
        return 0
    seqs = enumerate_signed_sequences(ctx, None, args.length)
    if fmt == "json":
        _emit_json({"length": args.length, "sequences": [
            [e.describe(ctx) for e in seq] for seq in seqs]})
    else:
        for seq in seqs:
            print("(" + ", ".join(e.describe(ctx) for e in seq) + ")")
        print(f"total: {len(seqs)}", file=sys.stderr)
    return 0


def _cmd_factorizations(args) -> int:
    fmt = _fmt(args, ("text", "json"), "text")
    _, ctx = _load(args)
    try:
        names = json.loads(args.morphism)
        src_names = json.loads(args.source) if args.source else None
    except json.JSONDecodeError as exc:
        raise InputError(f"morphism/source must be JSON arrays of labels: {exc}")
    if not isinstance(names, list):
        raise InputError("--morphism wants a JSON array of summand labels")
    if src_names is None:
        w = full_subcategory(ctx)
    else:
        w = WideSubcategory(frozenset(_resolve_labels(ctx, src_names)))
    cat = WideCategory(ctx)
    if w.key not in {o.key for o in cat.objects}:
        raise InputError("--source is not a wide subcategory here")
    try:
        m = morphism(ctx, w, _parse_object(ctx, names))
    except NotSupportTauRigid as exc:
        raise InputError(f"--morphism does not name a support tau-rigid "
                         f"object of the source: {exc}") from exc
    chains = factorizations(cat, m)
    if fmt == "json":
        _emit_json({"morphism": m.label.describe(ctx),
                    "source": [ctx.label(i) for i in w.key],
                    "factorizations": [
                        {"ordering": [o.describe(ctx) for o in c.ordering],
                         "chain": [g.label.describe(ctx) for g in c.chain]}
                        for c in chains]})
    else:
        for c in chains:
            arrows = " . ".join(f"g[{g.label.describe(ctx)}]"
                                for g in reversed(c.chain)) or "identity"
            print(arrows)
        print(f"total: {len(chains)}", file=sys.stderr)
    return 0


def _cmd_verify(args) -> int:
    fmt = _fmt(args, ("text", "json"), "text")
    _, ctx = _load(args)
    suites = None
    if args.suites and args.suites != "all":
        suites = [s.strip() for s in args.suites.split(",") if s.strip()]
        bad = [s for s in suites if s not in SUITE_NAMES]
        if bad:
            raise InputError(f"unknown suites {bad}; "
                             f"choose from {', '.join(SUITE_NAMES)}")
    reports = run_verify(ctx, suites=suites, algebra=args.file, jobs=args.jobs)
    if fmt == "json":
        _emit_json({"reports": [r.to_json() for r in reports]})
    else:
        for r in reports:
            print(r.describe())
            for f in r.failures:
                print(f"    FAIL {f.check}: {f.counterexample}")
    return 0 if all(r.ok for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="widecat",
        description="wide subcategories of a representation-finite algebra: "
                    "objects, reduction morphisms, and theorem verification")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("algebra", help="parse and validate a presentation")
    p.add_argument("verb", choices=["check"])
    _common_flags(p)
    p.set_defaults(fn=_cmd_algebra)

    p = sub.add_parser("modules", help="indecomposable modules")
    p.add_argument("verb", choices=["list"])
    _common_flags(p)
    p.set_defaults(fn=_cmd_modules)

    p = sub.add_parser("ar-quiver", help="irreducible maps between modules")
    p.add_argument("verb", choices=["export"])
    _common_flags(p)
    p.set_defaults(fn=_cmd_ar_quiver)

    p = sub.add_parser("tau-rigid", help="basic support tau-rigid objects")
    p.add_argument("verb", choices=["list"])
    _common_flags(p)
    p.set_defaults(fn=_cmd_tau_rigid)

    p = sub.add_parser("wide", help="wide subcategories")
    p.add_argument("verb", choices=["list"])
    _common_flags(p)
    p.set_defaults(fn=_cmd_wide)

    p = sub.add_parser("wide-cat", help="the category of wide subcategories")
    p.add_argument("verb", choices=["export"])
    _common_flags(p)
    p.add_argument("--drop-zero-object", action="store_true",
                   help="omit the zero subcategory from the export")
    p.set_defaults(fn=_cmd_wide_cat)

    p = sub.add_parser("sequences", help="signed exceptional sequences")
    p.add_argument("verb", choices=["list", "count"])
    _common_flags(p)
    p.add_argument("--length", type=int, required=True)
    p.set_defaults(fn=_cmd_sequences)

    p = sub.add_parser("factorizations",
                       help="factorizations of one morphism into irreducibles")
    _common_flags(p)
    p.add_argument("--morphism", required=True,
                   help='JSON array of summand labels, e.g. \'["S2","P1[1]"]\'')
    p.add_argument("--source", help="JSON array: members of the source "
                                    "(defaults to the whole module category)")
    p.set_defaults(fn=_cmd_factorizations)

    p = sub.add_parser("verify", help="run theorem verification suites")
    _common_flags(p)
    p.add_argument("--suites", default="all",
                   help="comma-separated suite names (default: all)")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker threads for pure sweeps")
    p.set_defaults(fn=_cmd_verify)
    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExceeded as exc:
        print(f"error: budget exceeded: {exc}", file=sys.stderr)
        return 3
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
