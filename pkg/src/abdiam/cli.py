"""Command-line interface: ``abdiam <subcommand> ...``.

Settings resolve as command-line flag, then ``ABDIAM_<NAME>`` environment
variable, then the built-in default.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time

from . import classify as classify_mod
from . import constructions as C
from .census import CENSUS_BUDGET, set_jobs
from .coding import BinaryCode, covering_radius, binary_rho4_report
from .diameter import ball, diam_brute, diam_formula, diam_of_set
from .extremal import (
    ExtremalQuery,
    s_rho_brute,
    s_rho_via_quotients,
    t_rho_brute,
)
from .groups import DomainError, ResourceError, as_group, group_types_up_to, parse_group
from .subgroups import subgroup_generated_by
from .subsets import format_subset, parse_subset
from .verify import DEFAULT_SEED, SCHEMA, _formula_row, _json_safe, cmd_tabulate, cmd_verify, write_json

DEFAULTS = {"budget": CENSUS_BUDGET, "jobs": 1, "seed": DEFAULT_SEED, "max_order": 16}


def setting(args, name: str) -> int:
    value = getattr(args, name, None)
    if value is not None:
        return value
    env = os.environ.get(f"ABDIAM_{name.upper()}")
    if env is not None:
        return int(env)
    return DEFAULTS[name]


def _emit(args, payload: dict) -> None:
    payload = {"schema": SCHEMA, **_json_safe(payload)}
    if getattr(args, "json", None) and args.json != "-":
        write_json(payload, args.json)
    print(json.dumps(payload, indent=2))


def _group(args):
    return as_group(parse_group(args.group))


def _set(args, g):
    if not args.set:
        raise DomainError("--set is required")
    return parse_subset(g, args.set)


def _witnesses(sets) -> list[list[int]]:
    return [w.indices() for w in sets]


# -- subcommands -----------------------------------------------------------------


def cmd_diam(args) -> int:
    g = _group(args)
    out = {"group": list(g.moduli), "diam_formula": diam_formula(g)}
    if args.set:
        a = _set(args, g)
        out.update(set=a.indices(), diam=diam_of_set(g, a))
    if args.brute:
        r = diam_brute(g, setting(args, "budget"))
        out.update(diam=r.value, witnesses=_witnesses(r.argmax_sets))
    _emit(args, out)
    return 0


def cmd_length(args) -> int:
    g = _group(args)
    a = _set(args, g)
    b = ball(g, a)
    out = {"group": list(g.moduli), "set": a.indices()}
    if args.element:
        e = parse_subset(g, "{" + args.element + "}").indices()
        out["lengths"] = {format_subset(parse_subset(g, f"idx:{i}")): b.length(i) for i in e}
    else:
        out["lengths"] = [b.length(i) for i in range(g.order)]
    _emit(args, out)
    return 0


def _extremal(args, kind: str) -> int:
    g = _group(args)
    rho = args.rho
    budget = setting(args, "budget")
    start = time.perf_counter()
    out = {"group": list(g.moduli), "rho": rho}
    mode = args.mode
    if mode in ("formula", "both"):
        row = _formula_row(g, rho)
        out["formula"] = row[f"{kind}_formula"]
    if mode in ("brute", "both"):
        q = ExtremalQuery(g, rho, budget)
        res = t_rho_brute(q) if kind == "t" else s_rho_brute(q)
        out.update(method="brute", value=res.value, witnesses=_witnesses(res.witnesses))
    if kind == "s" and args.via_quotients:
        res = s_rho_via_quotients(ExtremalQuery(g, rho, budget))
        out["via_quotients"] = {"value": res.value, "witnesses": _witnesses(res.witnesses), **res.notes}
    out["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 2)
    _emit(args, out)
    return 0


def cmd_trho(args) -> int:
    return _extremal(args, "t")


def cmd_srho(args) -> int:
    return _extremal(args, "s")


def cmd_construct(args) -> int:
    fam = args.family
    if fam == "standard":
        cs = [C.standard_generating_set(_group(args), strict=False)]
    elif fam == "diam-extremal":
        cs = C.extremal_diam_family(_group(args), strict=False)
    elif fam == "cyclic-interval":
        cs = [C.cyclic_interval_set(_group(args).order, args.rho, strict=False)]
    elif fam == "odd-halfset":
        cs = [C.odd_halfset(_group(args), strict=False)]
    elif fam == "even-coset":
        cs = [C.even_coset_set(_group(args), args.variant, strict=False)]
    elif fam == "odd-noncyclic":
        cs = [C.odd_noncyclic_set(_group(args), strict=False)]
    elif fam == "homocyclic4":
        cs = [C.homocyclic4_set(args.r, strict=False)]
    elif fam == "thm212":
        g = _group(args)
        if args.subgroup:
            h = subgroup_generated_by(g, parse_subset(g, args.subgroup).indices())
            gen = parse_subset(g, "{" + args.element + "}").indices()[0]
            cs = [C.triple_coset_set(g, h, gen, args.rho, strict=False)]
        else:
            cs = [C.triple_coset_set(g, h, gi, args.rho, strict=False) for h, gi, _ in C.triple_coset_sets(g, args.rho)]
    elif fam == "example25":
        r = C.maximal_sets_periodic_analysis(args.n, setting(args, "budget"))
        _emit(args, {"family": fam, "n": r.n, "group": list(r.group.moduli), "rho": r.rho, "diam": r.diameter,
                     "maximal_sets": r.maximal_count, "all_periodic": r.all_periodic, "t": r.t_value,
                     "generator_triple_is_maximal": r.generator_triple_is_maximal, "generator_triple_period": r.generator_triple_period})
        return 0
    else:
        raise DomainError(f"unknown family {fam}")
    _emit(args, {"family": fam, "sets": [c.as_dict() for c in cs]})
    return 0 if all(c.ok for c in cs) else 1


def cmd_classify(args) -> int:
    g = _group(args)
    a = _set(args, g)
    if args.theorem == "2.2":
        w = classify_mod.attains_diam_structural(g, a)
    elif args.theorem == "2.12":
        w = classify_mod.classify_triple_coset(g, a, args.rho)
    else:
        w = classify_mod.large_set_structure(g, a, args.rho)
    if isinstance(w, classify_mod.Refusal):
        _emit(args, {"theorem": args.theorem, "result": "refusal", "reason": w.reason})
    else:
        _emit(args, {"theorem": args.theorem, "result": "witness", **w.as_dict()})
    return 0


def cmd_code(args) -> int:
    if args.verify_dt:
        rep = binary_rho4_report(args.r, seed=setting(args, "seed"))
        _emit(args, {"r": rep.r, "certified": rep.certified, "t4": rep.t4, "s4": rep.s4,
                     "t4_lower": rep.t4_lower, "s4_lower": rep.s4_lower, "t4_upper": rep.t4_upper,
                     "expected": [rep.expected_t4, rep.expected_s4], "notes": rep.notes,
                     "max_quasi_perfect_length": rep.max_quasi_perfect_length, "witnesses": rep.witnesses})
        ok = not rep.certified or (rep.t4, rep.s4) == (rep.expected_t4, rep.expected_s4)
        return 0 if ok else 1
    if not args.check_matrix:
        raise DomainError("give --check-matrix FILE or --verify-dt")
    code = BinaryCode.read(args.check_matrix)
    out = {"length": code.length, "codimension": code.codimension, "distance_at_least_3": code.distance_at_least_three()}
    if args.covering_radius:
        out["covering_radius"] = covering_radius(code)
    _emit(args, out)
    return 0


def cmd_verify_cli(args) -> int:
    jobs = setting(args, "jobs")
    claims = [c for c in args.claims.split(",") if c] if args.claims else None
    rep = cmd_verify(
        max_order=setting(args, "max_order"),
        claims=claims,
        budget=setting(args, "budget"),
        jobs=jobs,
        seed=setting(args, "seed"),
    )
    print(rep.table())
    if args.json:
        write_json(rep.to_json(), args.json)
    return 1 if rep.failed else 0


def _parse_rhos(text: str) -> list[int]:
    if "-" in text:
        lo, hi = text.split("-")
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in text.split(",")]


def cmd_tabulate_cli(args) -> int:
    if args.groups:
        groups = [as_group(parse_group(s)) for s in args.groups.split(";")]
    else:
        groups = [t.group() for t in group_types_up_to(setting(args, "max_order"))]
    rows = cmd_tabulate(groups, _parse_rhos(args.rho_range), brute=not args.formula_only,
                        budget=setting(args, "budget"))
    fields = ["group", "diam", "rho", "t_formula", "s_formula", "t_brute", "s_brute"]
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=fields)
            w.writeheader()
            w.writerows(rows)
    if args.json:
        write_json({"schema": SCHEMA, "rows": rows}, args.json)
    w = csv.DictWriter(sys.stdout, fieldnames=fields)
    w.writeheader()
    w.writerows(rows)
    return 0


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="abdiam", description="Diameters of finite abelian groups.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, group=True, rho=False, set_=False):
        if group:
            sp.add_argument("--group", required=True, help='invariant factors or moduli, e.g. "2,8"')
        if rho:
            sp.add_argument("--rho", type=int, required=True)
        if set_:
            sp.add_argument("--set", help='subset literal: "{(0,1),(1,0)}", "{1,3}" or "idx:0,3"')
        sp.add_argument("--budget", type=int, help="max symmetric subsets to enumerate")
        sp.add_argument("--jobs", type=int, help="worker threads")
        sp.add_argument("--seed", type=int)
        sp.add_argument("--json", help="also write JSON to this file")

    sp = sub.add_parser("diam", help="diameter of G, or of G with respect to --set")
    common(sp, set_=True)
    sp.add_argument("--brute", action="store_true")
    sp.set_defaults(func=cmd_diam)

    sp = sub.add_parser("length", help="length of elements with respect to --set")
    common(sp, set_=True)
    sp.add_argument("--element", help='element literal, e.g. "(1,2)"; all elements if omitted')
    sp.set_defaults(func=cmd_length)

    for name, func in (("trho", cmd_trho), ("srho", cmd_srho)):
        sp = sub.add_parser(name, help=f"the invariant {name[0]}_rho")
        common(sp, rho=True)
        mode = sp.add_mutually_exclusive_group()
        mode.add_argument("--brute", dest="mode", action="store_const", const="brute")
        mode.add_argument("--formula", dest="mode", action="store_const", const="formula")
        mode.add_argument("--both", dest="mode", action="store_const", const="both")
        sp.set_defaults(mode="both", via_quotients=False, func=func)
        if name == "srho":
            sp.add_argument("--via-quotients", action="store_true")

    sp = sub.add_parser("construct", help="build a certified extremal set")
    sp.add_argument("--family", required=True, choices=[
        "standard", "diam-extremal", "cyclic-interval", "odd-halfset", "even-coset",
        "odd-noncyclic", "homocyclic4", "thm212", "example25"])
    sp.add_argument("--group")
    sp.add_argument("--rho", type=int)
    sp.add_argument("--variant", choices=["ii", "iii", "8.10"])
    sp.add_argument("--r", type=int, default=2)
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--subgroup", help="generators of H as a subset literal")
    sp.add_argument("--element", help="the element g")
    sp.add_argument("--budget", type=int)
    sp.add_argument("--json")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("classify", help="structural classification of a set")
    common(sp, set_=True)
    sp.add_argument("--theorem", required=True, choices=["2.2", "2.12", "2.13"])
    sp.add_argument("--rho", type=int, default=4)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("code", help="binary codes and generating sets of Z_2^r")
    sp.add_argument("--check-matrix", help="text file, one row of 0/1 per line")
    sp.add_argument("--covering-radius", action="store_true")
    sp.add_argument("--verify-dt", action="store_true", help="t_4 and s_4 of Z_2^r")
    sp.add_argument("--r", type=int, default=4)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--json")
    sp.set_defaults(func=cmd_code)

    sp = sub.add_parser("verify", help="certify every closed form against brute force")
    sp.add_argument("--max-order", type=int)
    sp.add_argument("--claims", help="comma-separated claim ids")
    sp.add_argument("--budget", type=int)
    sp.add_argument("--jobs", type=int)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--json")
    sp.set_defaults(func=cmd_verify_cli)

    sp = sub.add_parser("tabulate", help="table of diam, t_rho, s_rho")
    sp.add_argument("--groups", help='semicolon-separated groups, e.g. "12;2,8"')
    sp.add_argument("--max-order", type=int)
    sp.add_argument("--rho-range", default="2-4")
    sp.add_argument("--formula-only", action="store_true")
    sp.add_argument("--budget", type=int)
    sp.add_argument("--csv")
    sp.add_argument("--json")
    sp.set_defaults(func=cmd_tabulate_cli)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    set_jobs(setting(args, "jobs") if hasattr(args, "jobs") else None)
    try:
        return args.func(args)
    except (DomainError, ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
