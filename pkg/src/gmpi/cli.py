"""Batch front end: parse instance documents, run constructions and checks.

Subcommands:
  resolve  minimal resolution and Betti table of a standalone monomial ideal
  gmpi     build the induced ideal and its resolution from an instance file
  family   emit a family ideal or a full instance document
  verify   run the pinned acceptance suite

Exit codes: 0 = pass, 1 = a check failed, 2 = input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .builder import (
    FamilyValidationError,
    GmpiInstance,
    SubstitutionFamily,
    build_double_complex,
    minimal_total_table,
    total_complex,
    validate_family,
)
from .complexes import (
    SizeCapError,
    betti_table,
    is_linear_resolution,
    minimalize_complex,
    projective_dimension,
    regularity,
    taylor_complex,
)
from .monomials import MonomialIdeal, VariableContext, ideal, simple_context
from . import families as fam
from . import verify as ver


class InputError(ValueError):
    pass


# ---------------------------------------------------------------------------
# documents

def parse_blocks(data) -> VariableContext:
    try:
        sizes = tuple(int(b["size"]) for b in data)
        names = tuple(str(b["name"]) for b in data)
    except (KeyError, TypeError) as e:
        raise InputError(f"blocks must be objects with name and size: {e}")
    return VariableContext(sizes, names)


def parse_ideal_document(doc) -> MonomialIdeal:
    ctx = parse_blocks(doc["blocks"])
    gens = [tuple(int(e) for e in g) for g in doc["generators"]]
    return ideal(ctx, gens)


def parse_instance_document(doc) -> GmpiInstance:
    try:
        ctx = parse_blocks(doc["blocks"])
        raw_gens = [tuple(int(e) for e in g) for g in doc["inducing_ideal"]]
    except (KeyError, TypeError) as e:
        raise InputError(f"bad instance document: {e}")
    inducing = ideal(simple_context(ctx.nblocks, ctx.names), raw_gens)
    subs = {}
    for key, val in doc.get("substitutions", {}).items():
        name, _, deg = key.partition(":")
        if name not in ctx.names:
            raise InputError(f"unknown block name in substitution key {key!r}")
        l = ctx.names.index(name)
        d = int(deg)
        block_ctx = VariableContext((ctx.sizes[l],), (ctx.names[l],))
        if isinstance(val, dict):
            subs[(l, d)] = family_ideal(val, ctx.sizes[l], block_ctx)
        else:
            subs[(l, d)] = ideal(block_ctx, [tuple(int(e) for e in g) for g in val])
    try:
        return validate_family(inducing, SubstitutionFamily(ctx, subs),
                               label=doc.get("label", "instance"))
    except FamilyValidationError as e:
        raise InputError(str(e))


def family_ideal(spec: dict, nvars: int, block_ctx: VariableContext) -> MonomialIdeal:
    tag = spec.get("family")
    if tag == "squarefree-veronese":
        return fam.squarefree_veronese(nvars, int(spec["degree"]), block_ctx)
    if tag == "power-of-maximal":
        return fam.power_of_maximal(nvars, int(spec["degree"]), block_ctx)
    if tag == "lex-segment":
        return fam.lex_segment_stable(nvars, int(spec["degree"]), int(spec["count"]), block_ctx)
    raise InputError(f"unknown substitution family {tag!r}")


def instance_to_document(inst: GmpiInstance) -> dict:
    return {
        "blocks": [
            {"name": n, "size": s} for n, s in zip(inst.T.names, inst.T.sizes)],
        "inducing_ideal": [list(g) for g in inst.inducing.gens],
        "substitutions": {
            f"{inst.T.names[l]}:{d}": [list(g) for g in idl.gens]
            for (l, d), idl in sorted(inst.family.ideals.items())},
        "label": inst.label,
    }


def ideal_to_document(I: MonomialIdeal) -> dict:
    return {
        "blocks": [{"name": n, "size": s} for n, s in zip(I.ctx.names, I.ctx.sizes)],
        "generators": [list(g) for g in I.gens],
    }


def _load(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read {path}: {e}")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


# ---------------------------------------------------------------------------
# subcommands

def cmd_resolve(args) -> int:
    doc = _load(args.path)
    I = parse_ideal_document(doc)
    if I.is_zero or I.is_unit:
        raise InputError("resolve needs a nonzero proper ideal")
    res = minimalize_complex(taylor_complex(I, cap=args.max_taylor))
    table = betti_table(res)
    d = I.generated_in_degree()
    payload = {
        "generators": [I.ctx.monomial_str(g) for g in I.gens],
        "betti": table.to_json(),
        "regularity": regularity(table),
        "projective_dimension_quotient": projective_dimension(table),
        "linear": d is not None and is_linear_resolution(table, d),
    }
    if args.json:
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        lines = [
            f"ideal: {I}",
            "betti table (rows j-k, cols k):",
            table.triangle(),
            f"regularity(ideal) = {payload['regularity']}",
            f"projdim(quotient) = {payload['projective_dimension_quotient']}",
            f"linear resolution: {payload['linear']}",
        ]
        _emit("\n".join(lines), args.out)
    return 0


def cmd_gmpi(args) -> int:
    doc = _load(args.path)
    inst = parse_instance_document(doc)
    D = build_double_complex(inst)
    tot = total_complex(D)
    table = minimal_total_table(tot)
    reg_l = regularity(table)
    pd_l = projective_dimension(table)
    payload = {
        "label": inst.label,
        "induced_generators": [inst.T.monomial_str(g) for g in inst.induced.gens],
        "betti": table.to_json(),
        "regularity": reg_l,
        "projective_dimension_quotient": pd_l,
        "hypothesis_linear": D.hypothesis_linear,
    }
    results = []
    if args.check:
        results = ver.run_instance_checks(inst, oracle_cap=args.max_taylor)
        payload["checks"] = [r.to_json() for r in results]
    if args.json:
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        lines = [
            f"instance: {inst.label}",
            f"L = {inst.induced}",
            f"|G(L)| = {len(inst.induced.gens)}",
            "betti table of T/L (rows j-k, cols k):",
            table.triangle(),
            f"reg L = {reg_l}",
            f"projdim(T/L) = {pd_l}",
            f"all substitutions linear: {D.hypothesis_linear}",
        ]
        lines += [r.line() for r in results]
        _emit("\n".join(lines), args.out)
    return 0 if all(r.passed for r in results) else 1


def cmd_family(args) -> int:
    params = dict(kv.split("=", 1) for kv in args.param)
    for flag in ("parts", "t", "vars", "degree", "count", "caps",
                 "sizes", "degs1", "degs2"):
        val = getattr(args, flag.replace("-", "_"), None)
        if val is not None:
            params[flag] = val
    tag = args.tag
    try:
        if tag == "squarefree-veronese":
            out = ideal_to_document(fam.squarefree_veronese(
                int(params["vars"]), int(params["degree"])))
        elif tag == "power-of-maximal":
            out = ideal_to_document(fam.power_of_maximal(
                int(params["vars"]), int(params["degree"])))
        elif tag == "lex-segment":
            out = ideal_to_document(fam.lex_segment_stable(
                int(params["vars"]), int(params["degree"]), int(params["count"])))
        elif tag == "veronese-type":
            caps = tuple(int(c) for c in params["caps"].split(","))
            out = ideal_to_document(fam.veronese_type(len(caps), int(params["t"]), caps))
        elif tag == "path-ideal":
            parts = tuple(int(c) for c in params["parts"].split(","))
            out = ideal_to_document(fam.path_ideal_complete_multipartite(parts, int(params["t"])))
        elif tag == "mixed-product":
            sizes = tuple(int(c) for c in params["sizes"].split(","))
            d1 = tuple(int(c) for c in params["degs1"].split(","))
            d2 = tuple(int(c) for c in params["degs2"].split(","))
            out = instance_to_document(fam.mixed_product_instance(sizes, d1, d2))
        elif tag == "random":
            try:
                out = instance_to_document(fam.random_instance(args.seed))
            except RuntimeError as e:
                raise InputError(str(e))
        else:
            raise InputError(f"unknown family tag {tag!r}; choose from {fam.FAMILY_TAGS}")
    except (KeyError, ValueError) as e:
        if isinstance(e, InputError):
            raise
        raise InputError(f"bad family parameters: {e}")
    _emit(json.dumps(out, indent=2), args.out)
    return 0


def cmd_verify(args) -> int:
    seeds = ver.SUITE_SEEDS if args.seed is None else [args.seed]
    try:
        results = ver.run_suite(seeds=seeds)
    except RuntimeError as e:
        raise InputError(str(e))
    if args.json:
        _emit(json.dumps([r.to_json() for r in results], indent=2), args.out)
    else:
        _emit("\n".join(ver.summary_lines(results)), args.out)
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gmpi", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("resolve", help="resolve a standalone monomial ideal")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-taylor", type=int, default=14)
    p.add_argument("--out")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("gmpi", help="build an induced ideal and its resolution")
    p.add_argument("path")
    p.add_argument("--check", action="store_true", help="run the full check suite")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-taylor", type=int, default=14, help="oracle generator cap")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gmpi)

    p = sub.add_parser("family", help="emit a family ideal or instance document")
    p.add_argument("tag")
    p.add_argument("param", nargs="*", help="key=value parameters")
    for flag in ("parts", "t", "vars", "degree", "count", "caps",
                 "sizes", "degs1", "degs2"):
        p.add_argument(f"--{flag}", default=None, help=f"alias for {flag}=...")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="run the pinned acceptance suite")
    p.add_argument("--seed", type=int, default=None, help="run a single seed instead")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, SizeCapError, FamilyValidationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
