"""Command-line front end.

Commands: analyze, dual, gray, standard-form, macwilliams, classify,
reproduce, search.  Exit codes: 0 ok, 2 bad input (parse errors cite
line and column), 3 internal verification failure, 4 assertion failure
in reproduce or in the classification survey.

JSON output is canonical: fixed key order, sorted weight lists, no
environment-dependent content, so identical inputs give byte-identical
output.  Search emits one JSON object per hit (JSON lines) regardless
of --json; the summary goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .classify import (
    classify,
    dual_summary,
    verify_fsd_even_weight_criterion,
    verify_one_weight_theorems,
    verify_two_weight_relations,
    weight_profile,
)
from .core import (
    MAX_BRUTE_AMBIENT_BITS,
    AdditiveCode,
    additive_span,
    dual_brute,
    format_row,
    gray_image,
    gray_parameters,
    parse_matrix_file,
    span,
)
from .errors import (
    ClassificationViolation,
    InternalVerificationFailure,
    MatrixParseError,
    NotProjective,
    TrivialCode,
    Z2ZuError,
)
from .presets import PRESETS, preset_code
from .search import (
    TARGETS,
    SearchSpace,
    optimality_check,
    search_with_pruning,
    verify_fsd_classification,
)
from .standard_form import standard_form
from .weights import column_profile, lee_enumerator, macwilliams, power_moments

__all__ = ["main"]


def _say(args, text: str) -> None:
    if not args.quiet:
        print(text)


def _counts_pairs(enum) -> list[list[int]]:
    return [[w, c] for w, c in sorted(enum.counts.items())]


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _load(path: str) -> tuple[AdditiveCode, bool]:
    """Span of a matrix file, plus whether the rows were u-closed."""
    shape, rows = parse_matrix_file(path)
    code = span(shape, rows)
    subgroup = additive_span(shape, rows)
    return code, subgroup.cardinality == code.cardinality


def _enum_obj(enum) -> dict:
    return {"poly": enum.poly_str(), "counts": _counts_pairs(enum)}


# ---------------------------------------------------------------- analyze


def _theorem_checks(code, enum, dual) -> dict:
    """The verifications that apply to this code, name -> outcome."""
    checks: dict[str, object] = {}
    profile = column_profile(code)
    if profile.has_zero_column:
        checks["weight_sum_identity"] = "skipped: zero column present"
    else:
        checks["weight_sum_identity"] = bool(
            2 * sum(w * c for w, c in enum.counts.items())
            == code.cardinality * code.shape.big_n
        )
    b1 = dual.enumerator.count(1)
    b2 = dual.enumerator.count(2)
    moments = power_moments(enum, code.cardinality, b1, b2)
    checks["power_moments"] = bool(moments.all_ok)
    wp = weight_profile(code, enum)
    if wp.is_one_weight:
        if profile.has_zero_column:
            checks["one_weight_relations"] = (
                "skipped: zero column present; " + "; ".join(wp.violations)
            )
        else:
            rep = verify_one_weight_theorems(code, dual)
            checks["one_weight_relations"] = bool(rep.all_ok)
            try:
                checks["fsd_even_weight_criterion"] = bool(
                    verify_fsd_even_weight_criterion(code, dual)
                )
            except Z2ZuError:
                pass
    if wp.is_two_weight:
        try:
            rep2 = verify_two_weight_relations(code, dual)
            checks["two_weight_relations"] = bool(rep2.all_ok)
        except NotProjective:
            checks["two_weight_relations"] = "skipped: not projective"
    return checks


def cmd_analyze(args) -> int:
    code, u_closed = _load(args.file)
    if code.cardinality == 1:
        raise TrivialCode("matrix spans only the zero code")
    sf = standard_form(code)
    enum = lee_enumerator(code)
    dual = dual_summary(code, enum)
    report = classify(code, dual)
    gp = gray_parameters(code)
    checks = _theorem_checks(code, enum, dual)
    warnings = []
    if not u_closed:
        warnings.append(
            "rows are not u-closed; analyzing their closure under "
            "u-multiplication, which is strictly larger than the subgroup "
            "they generate"
        )
    profile = column_profile(code)
    if profile.has_zero_column:
        warnings.append(
            f"zero columns present (binary {list(profile.zero_binary_columns)}, "
            f"ring {list(profile.zero_ring_columns)}); "
            "weight identities are not expected to hold"
        )
    obj = {
        "shape": {"alpha": code.shape.alpha, "beta": code.shape.beta,
                  "n": code.shape.big_n},
        "rows_u_closed": u_closed,
        "cardinality": code.cardinality,
        "type": sf.code_type.compact(),
        "standard_form": [format_row(v) for v in sf.rows],
        "lee": _enum_obj(enum),
        "gray": {"n": gp[0], "k": gp[1], "d": gp[2],
                 "optimality": optimality_check(*gp)},
        "dual": {
            "source": dual.source,
            "cardinality": dual.cardinality,
            "min_lee_weight": dual.min_weight,
            **_enum_obj(dual.enumerator),
        },
        "classification": report.to_json_obj(),
        "checks": checks,
        "warnings": warnings,
    }
    if args.json:
        print(_dump(obj))
        return 0
    print(f"shape: alpha={code.shape.alpha} beta={code.shape.beta} "
          f"(N={code.shape.big_n})")
    print(f"cardinality: {code.cardinality}")
    print(f"type: {sf.code_type.compact()}")
    print("standard form:")
    for v in sf.rows:
        print(f"  {format_row(v)}")
    print(f"lee enumerator: {enum.poly_str()}")
    print(f"gray image: [{gp[0]},{gp[1]},{gp[2]}] "
          f"({obj['gray']['optimality']})")
    print(f"dual ({dual.source}): cardinality {dual.cardinality}, "
          f"min lee weight {dual.min_weight}")
    print(f"dual enumerator: {dual.enumerator.poly_str()}")
    flags = report.to_json_obj()
    on = [k for k, v in flags.items() if v is True]
    print("classification: " + (", ".join(on) if on else "(no flags)"))
    print("checks:")
    for name, val in checks.items():
        shown = {True: "pass", False: "FAIL"}.get(val, val)
        print(f"  {name}: {shown}")
    for w in warnings:
        _say(args, f"warning: {w}")
    return 0


# ------------------------------------------------------------------- dual


def cmd_dual(args) -> int:
    code, _ = _load(args.file)
    enum = lee_enumerator(code)
    transformed = macwilliams(enum, code.cardinality)
    if code.shape.big_n > MAX_BRUTE_AMBIENT_BITS:
        if args.json:
            print(_dump({"source": "macwilliams",
                         "dual": _enum_obj(transformed),
                         "generators": None}))
        else:
            _say(args, f"note: ambient exceeds 2^{MAX_BRUTE_AMBIENT_BITS}; "
                       "enumerator only, no explicit generators")
            print(f"dual enumerator: {transformed.poly_str()}")
        return 0
    dual = dual_brute(code)
    scanned = lee_enumerator(dual)
    if scanned != transformed:
        raise InternalVerificationFailure(
            "scan and transform disagree on the dual distribution"
        )
    sf = standard_form(dual)
    rows = [format_row(v) for v in sf.unpermuted_rows]
    gp = gray_parameters(dual)
    if args.json:
        print(_dump({
            "source": "brute+macwilliams",
            "dual": _enum_obj(scanned),
            "cardinality": dual.cardinality,
            "type": sf.code_type.compact(),
            "generators": rows,
            "gray": list(gp),
        }))
        return 0
    print(f"dual cardinality: {dual.cardinality}")
    print(f"dual type: {sf.code_type.compact()}")
    print("dual generators:")
    for r in rows:
        print(f"  {r}")
    print(f"dual enumerator: {scanned.poly_str()}")
    print(f"dual gray image: [{gp[0]},{gp[1]},{gp[2]}]")
    return 0


# ------------------------------------------------------------------- gray


def cmd_gray(args) -> int:
    code, _ = _load(args.file)
    img = gray_image(code)
    gp = gray_parameters(code)
    enum = lee_enumerator(code)
    if args.json:
        obj = {"n": gp[0], "k": gp[1], "d": gp[2],
               "optimality": optimality_check(*gp),
               "enumerator": _enum_obj(enum)}
        if args.words:
            obj["words"] = [format(w, f"0{img.n}b") for w in img.words]
        print(_dump(obj))
        return 0
    print(f"gray image: [{gp[0]},{gp[1]},{gp[2]}] "
          f"({optimality_check(*gp)})")
    print(f"weight enumerator: {enum.poly_str()}")
    if args.words:
        for w in img.words:
            print(format(w, f"0{img.n}b"))
    return 0


# ---------------------------------------------------------- standard-form


def cmd_standard_form(args) -> int:
    code, _ = _load(args.file)
    sf = standard_form(code)
    if args.json:
        print(_dump({
            "type": sf.code_type.compact(),
            "rows": [format_row(v) for v in sf.rows],
            "binary_column_order": list(sf.bin_perm),
            "ring_column_order": list(sf.ring_perm),
        }))
        return 0
    print(sf.to_matrix_text(), end="")
    _say(args, f"# binary columns (original order): {list(sf.bin_perm)}")
    _say(args, f"# ring columns (original order): {list(sf.ring_perm)}")
    return 0


# ------------------------------------------------------------- macwilliams


def cmd_macwilliams(args) -> int:
    code, _ = _load(args.file)
    enum = lee_enumerator(code)
    transformed = macwilliams(enum, code.cardinality)
    if args.json:
        print(_dump({"primal": _enum_obj(enum),
                     "dual": _enum_obj(transformed)}))
        return 0
    print(f"primal enumerator: {enum.poly_str()}")
    print(f"dual enumerator: {transformed.poly_str()}")
    return 0


# ---------------------------------------------------------------- classify


def cmd_classify(args) -> int:
    code, _ = _load(args.file)
    report = classify(code)
    obj = report.to_json_obj()
    if args.json:
        print(_dump(obj))
        return 0
    for k, v in obj.items():
        print(f"{k}: {v}")
    return 0


# --------------------------------------------------------------- reproduce


def _check(name, got, expected):
    status = "PASS" if got == expected else "FAIL"
    detail = f"{name}: expected {expected!r}, got {got!r}" if status == "FAIL" \
        else f"{name}: {got!r}"
    return {"name": name, "status": status, "detail": detail}


def _reproduce_one(key: str) -> list[dict]:
    p = PRESETS[key]
    code = preset_code(key)
    enum = lee_enumerator(code)
    results = []
    results.append(_check("lee counts",
                          tuple(sorted(enum.counts.items())), p.lee_counts))
    results.append(_check("lee polynomial", enum.poly_str(), p.lee_poly))
    gp = gray_parameters(code)
    results.append(_check("gray parameters", gp, p.gray))
    if p.gray_optimal:
        results.append(_check("gray optimality",
                              optimality_check(*gp), "optimal"))
    wp = weight_profile(code, enum)
    if p.one_weight:
        results.append(_check("one-weight", wp.is_one_weight, True))
        profile = column_profile(code)
        if profile.has_zero_column:
            results.append({
                "name": "one-weight relations", "status": "SKIP",
                "detail": "one-weight relations: zero column present, "
                          "relations do not apply "
                          f"({'; '.join(wp.violations)})",
            })
        else:
            results.append(_check("one-weight relations",
                                  wp.lambda_ is not None, True))
    if p.two_weight:
        results.append(_check("two-weight", wp.is_two_weight, True))

    # the module span backs every dual-side quantity; 5.4's rows are not
    # u-closed, so nothing dual-side is stated or checked for it
    dual = None
    if p.module_span and (p.dual_lee_counts or p.dual_gray
                          or p.projective is not None
                          or p.formally_self_dual is not None):
        dual = dual_summary(code, enum)
    if dual is not None and p.dual_lee_counts is not None:
        results.append(_check(
            "dual lee counts",
            tuple(sorted(dual.enumerator.counts.items())),
            p.dual_lee_counts,
        ))
    if dual is not None and p.dual_gray is not None:
        dgp = gray_parameters(dual.dual_code)
        results.append(_check("dual gray parameters", dgp, p.dual_gray))
        if p.dual_gray_optimal:
            results.append(_check("dual gray optimality",
                                  optimality_check(*dgp), "optimal"))
    if dual is not None and p.projective is not None:
        results.append(_check("projective",
                              dual.min_weight is not None
                              and dual.min_weight >= 3,
                              p.projective))
    if dual is not None and p.formally_self_dual is not None:
        fsd = enum == dual.enumerator
        results.append(_check("formally self-dual", fsd,
                              p.formally_self_dual))
    if dual is not None and p.self_dual is not None:
        sd = dual.dual_code is not None and dual.dual_code == code
        results.append(_check("self-dual", sd, p.self_dual))

    # type comparison: the known discrepancies report, they do not fail
    module = span(code.shape, code.generators) if not p.module_span else code
    computed = standard_form(module).code_type
    if p.stated_type is not None:
        k0, k1, k2 = p.stated_type
        stated_exp = k0 + 2 * k1 + k2
        results.append(_check("stated-type cardinality",
                              1 << stated_exp, code.cardinality))
        if computed.triple == p.stated_type:
            results.append(_check("type", computed.triple, p.stated_type))
        elif p.type_discrepancy_known:
            detail = (f"type: computed {computed.triple} vs stated "
                      f"{p.stated_type} (cardinality agrees)")
            if not p.module_span:
                detail += (
                    f"; rows are not u-closed: the stated data describes "
                    f"the {code.cardinality}-word subgroup, their module "
                    f"closure has {module.cardinality} words"
                )
            results.append({"name": "type", "status": "DISCREPANCY-KNOWN",
                            "detail": detail})
        else:
            results.append(_check("type", computed.triple, p.stated_type))
    results.append(_check("computed-type cardinality",
                          1 << computed.exponent, module.cardinality))
    return results


def cmd_reproduce(args) -> int:
    keys = list(PRESETS) if args.example == ["all"] else args.example
    for k in keys:
        if k not in PRESETS:
            print(f"error: unknown example {k!r}; choose from "
                  f"{', '.join(PRESETS)} or 'all'", file=sys.stderr)
            return 2
    failures = 0
    out = []
    for k in keys:
        results = _reproduce_one(k)
        out.append({"example": k, "assertions": results})
        for r in results:
            if r["status"] == "FAIL":
                failures += 1
        if not args.json:
            print(f"[{k}]")
            for r in results:
                if args.quiet and r["status"] == "PASS":
                    continue
                print(f"  {r['status']:>6}  {r['detail']}")
    total = sum(len(o["assertions"]) for o in out)
    if args.json:
        print(_dump({"examples": out, "assertions": total,
                     "failures": failures}))
    else:
        print(f"{len(keys)} example(s), {total} assertions, "
              f"{failures} failure(s)")
    return 4 if failures else 0


# ------------------------------------------------------------------ search


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        v = int(text)
        return (v, v)
    return (int(lo), int(hi))


def cmd_search(args) -> int:
    alpha = _parse_range(args.alpha)
    beta = _parse_range(args.beta)
    if args.verify_thm_4_5:
        survey = verify_fsd_classification(alpha[1], beta[1], args.rows)
        survivor_rows = [
            {"alpha": c.shape.alpha, "beta": c.shape.beta,
             "generators": [format_row(g) for g in c.generators]}
            for c in survey.survivors
        ]
        if args.json:
            print(_dump({
                "codes_examined": survey.codes_examined,
                "survivors": survivor_rows,
                "matches": survey.matches,
            }))
        else:
            print(f"{len(survey.survivors)} survivors out of "
                  f"{survey.codes_examined} codes examined; one-weight "
                  "formally self-dual classification confirmed")
        return 0
    if args.target is None:
        print("error: --target is required unless --verify-thm-4.5 is given",
              file=sys.stderr)
        return 2
    include = ()
    if args.include:
        shape, rows = parse_matrix_file(args.include)
        if not (alpha[0] <= shape.alpha <= alpha[1]
                and beta[0] <= shape.beta <= beta[1]):
            print("error: --include matrix shape falls outside the "
                  "searched ranges", file=sys.stderr)
            return 2
        include = (rows,)
    mode = args.mode or ("random" if args.budget else "exhaustive")
    space = SearchSpace(
        alpha=alpha, beta=beta, max_rows=args.rows, mode=mode,
        budget=args.budget, seed=args.seed,
        target=args.target.replace("-", "_"),
    )
    hits = search_with_pruning(space, include=include)
    for hit in hits:
        obj = {
            "alpha": hit.code.shape.alpha,
            "beta": hit.code.shape.beta,
            "generators": [format_row(g) for g in hit.code.generators],
            "type": standard_form(hit.code).code_type.compact(),
            "cardinality": hit.code.cardinality,
            "lee": _counts_pairs(lee_enumerator(hit.code)),
            "flags": hit.report.to_json_obj(),
            "gray": list(hit.gray),
            "optimality": hit.optimality,
        }
        print(json.dumps(obj))
    print(f"# {len(hits)} hit(s)", file=sys.stderr)
    return 0


# ------------------------------------------------------------------- main


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--quiet", action="store_true",
                        default=argparse.SUPPRESS,
                        help="suppress notes and passing lines")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="RNG seed for random search")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help="advisory; operations are vectorised already")

    parser = argparse.ArgumentParser(
        prog="z2zu",
        description="Additive codes over Z2 x (Z2+uZ2): weights, duals, "
                    "standard forms, classification.",
        epilog="exit codes: 0 ok, 2 bad input, 3 internal verification "
               "failure, 4 assertion failure",
        parents=[common],
    )
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, blurb in (
        ("analyze", cmd_analyze, "full report for a generator matrix file"),
        ("dual", cmd_dual, "dual generators and enumerator"),
        ("gray", cmd_gray, "binary image parameters and enumerator"),
        ("standard-form", cmd_standard_form, "reduced generator matrix"),
        ("macwilliams", cmd_macwilliams, "dual enumerator by transform only"),
        ("classify", cmd_classify, "classification flags"),
    ):
        sp = sub.add_parser(name, parents=[common], help=blurb)
        sp.add_argument("file", help="matrix file")
        if name == "gray":
            sp.add_argument("--words", action="store_true",
                            help="also print the image codewords")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("reproduce", parents=[common],
                        help="recompute the bundled reference codes")
    sp.add_argument("example", nargs="+",
                    help=f"ids: {', '.join(PRESETS)}, or 'all'")
    sp.set_defaults(func=cmd_reproduce)

    sp = sub.add_parser("search", parents=[common],
                        help="scan small codes for target properties")
    sp.add_argument("--alpha", required=True, help="N or LO..HI")
    sp.add_argument("--beta", required=True, help="N or LO..HI")
    sp.add_argument("--rows", type=int, default=3,
                    help="max generator rows (default 3)")
    sp.add_argument("--mode", choices=("exhaustive", "random"),
                    default=None,
                    help="default: random when --budget is given, "
                         "else exhaustive")
    sp.add_argument("--budget", type=int, default=None,
                    help="candidate draws in random mode")
    sp.add_argument("--target",
                    choices=tuple(t.replace("_", "-") for t in TARGETS),
                    default=None)
    sp.add_argument("--include", default=None, metavar="FILE",
                    help="matrix file whose rows every candidate contains")
    sp.add_argument("--verify-thm-4.5", dest="verify_thm_4_5",
                    action="store_true",
                    help="check the one-weight formally self-dual survey "
                         "against the expected four codes")
    sp.set_defaults(func=cmd_search)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    # Global flags are accepted both before and after the subcommand.  The
    # shared option objects carry SUPPRESS defaults so a subparser never
    # clobbers a value parsed at the top level; fill the gaps here instead.
    for name, default in (("json", False), ("quiet", False),
                          ("seed", 0), ("threads", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except MatrixParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except InternalVerificationFailure as e:
        print(f"internal verification failure: {e}", file=sys.stderr)
        return 3
    except ClassificationViolation as e:
        print(f"classification mismatch: {e}", file=sys.stderr)
        return 4
    except Z2ZuError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
