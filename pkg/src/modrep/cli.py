"""Command line front end.

Every package operation is reachable from one of the subcommands; output is
deterministic. Exit codes: 0 success, 1 a verification failed, 2 invalid
input (including bad flags, argparse's own convention).
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import InputError, VerificationError
from . import characters, crystal, fock, hecke, weights
from .weights import format_int_tuple, parse_int_tuple, require_prime

# Which operations each subcommand exercises (directly or through one call);
# the test suite checks this table covers the whole public surface.
COMMAND_OPERATIONS = {
    "signature": ("alpha_signature", "reduce_signature", "addable_rows",
                  "removable_rows", "is_dominant"),
    "crystal-op": ("crystal_f", "crystal_e", "partition_crystal_f",
                   "partition_crystal_e", "string_lengths"),
    "crystal-graph": ("crystal_graph", "singular_vertices", "graph_to_dot",
                      "graph_to_json_obj"),
    "character": ("weyl_character", "dimension", "casimir_scalar",
                  "verify_weyl_formula", "alternant", "dominance_leq"),
    "pieri": ("verify_pieri", "tensor_filtration_f", "tensor_filtration_e"),
    "fock-apply": ("wedge_apply", "fock_apply", "h_apply", "weight_of",
                   "chevalley_f_line", "chevalley_e_line", "addable_boxes",
                   "removable_boxes", "box_content"),
    "fock-relations": ("check_kac_moody_relations",),
    "groth-check": ("groth_f", "groth_e", "weight_to_beta", "beta_to_weight"),
    "hecke-verify": ("verify_hecke_relations", "build_Xi", "build_Ti",
                     "tensor_casimir", "casimir", "casimir_normal_ordered",
                     "matrix_unit_action", "verify_flip_identity",
                     "verify_casimir_coproduct"),
    "eigendims": ("generalized_eigenspaces", "predicted_F_alpha_dims",
                  "syt_count", "x_on_module_tower"),
    "classify-component": ("empty_component_classification",),
    "branch": ("branching",),
}


def _alpha(args, p):
    if args.alpha is None:
        raise InputError("--alpha is required")
    if not 0 <= args.alpha < p:
        raise InputError(f"alpha must lie in [0, {p}), got {args.alpha}")
    return args.alpha


def _weight(args):
    if not args.weight:
        raise InputError("--weight is required")
    return parse_int_tuple(args.weight)


def _partition(args):
    if args.partition is None:
        raise InputError("--partition is required")
    return weights.normalize_partition(parse_int_tuple(args.partition))


def _emit_json(obj):
    print(json.dumps(obj, sort_keys=True))


def _cmd_signature(args):
    p = require_prime(args.p)
    alpha = _alpha(args, p)
    raw = crystal.alpha_signature(_weight(args), alpha, p)
    red = crystal.reduce_signature(raw)
    if args.format == "json":
        _emit_json({
            "raw": [{"row": r, "sign": s} for r, s in raw],
            "reduced": [{"row": r, "sign": s} for r, s in red],
        })
    else:
        print("raw: " + "".join(s for _, s in raw))
        print("raw rows: " + ",".join(str(r) for r, _ in raw))
        print("reduced: " + "".join(s for _, s in red))
        print("reduced rows: " + ",".join(str(r) for r, _ in red))
    return 0


def _cmd_crystal_op(args):
    p = require_prime(args.p)
    alpha = _alpha(args, p)
    gen = "f" if args.f else "e"
    if args.partition is not None:
        lam = _partition(args)
        op = crystal.partition_crystal_f if gen == "f" else crystal.partition_crystal_e
        eps, phi = crystal.partition_string_lengths(lam, alpha, p)
    else:
        lam = _weight(args)
        op = crystal.crystal_f if gen == "f" else crystal.crystal_e
        eps, phi = crystal.string_lengths(lam, alpha, p)
    result = op(lam, alpha, p)
    if args.format == "json":
        _emit_json({"gen": gen, "alpha": alpha,
                    "result": None if result is None else list(result),
                    "epsilon": eps, "phi": phi})
    else:
        print("null" if result is None else format_int_tuple(result))
    return 0


def _cmd_crystal_graph(args):
    p = require_prime(args.p)
    if args.partition is not None:
        seeds, model = [_partition(args)], crystal.PARTITION_MODEL
    else:
        seeds, model = [_weight(args)], crystal.WEIGHT_MODEL
    g = crystal.crystal_graph(seeds, p, args.max_steps, model=model,
                              max_size=args.max_size)
    singular = sorted(crystal.singular_vertices(g))
    if args.format == "dot":
        sys.stdout.write(crystal.graph_to_dot(g))
    elif args.format == "json":
        obj = crystal.graph_to_json_obj(g)
        obj["singular"] = [list(v) for v in singular]
        _emit_json(obj)
    else:
        for v in sorted(g.vertices):
            print(f"vertex: {format_int_tuple(v)}")
        for s, a, t in sorted(g.edges):
            print(f"edge: {format_int_tuple(s)} --{a}--> {format_int_tuple(t)}")
        for v in singular:
            print(f"singular: {format_int_tuple(v)}")
    return 0


def _cmd_character(args):
    lam = _weight(args)
    n = args.n if args.n is not None else len(lam)
    ch = characters.weyl_character(lam, n)
    dim = characters.dimension(ch)
    cas = characters.casimir_scalar(lam, n)
    verified = None
    if args.verify:
        formula_ok = characters.verify_weyl_formula(lam, n)
        support_ok = all(weights.dominance_leq(w, lam) for w in ch.terms)
        verified = {"weyl_formula": formula_ok, "support_below_highest": support_ok}
    if args.format == "json":
        obj = {"character": ch.to_json_obj(), "dimension": dim, "casimir_scalar": cas}
        if verified is not None:
            obj["verified"] = verified
        _emit_json(obj)
    else:
        for w in sorted(ch.terms):
            print(f"{format_int_tuple(w)}: {ch.terms[w]}")
        print(f"dimension: {dim}")
        print(f"casimir scalar: {cas}")
        if verified is not None:
            print(f"weyl formula: {'ok' if verified['weyl_formula'] else 'FAILED'}")
            print(f"support below highest weight: "
                  f"{'ok' if verified['support_below_highest'] else 'FAILED'}")
    if verified is not None and not all(verified.values()):
        return 1
    return 0


def _cmd_pieri(args):
    lam = _weight(args)
    n = args.n if args.n is not None else len(lam)
    ok = characters.verify_pieri(lam, n)
    f_rows = [format_int_tuple(w) for w in characters.tensor_filtration_f(lam)]
    e_rows = [format_int_tuple(w) for w in characters.tensor_filtration_e(lam)]
    if args.format == "json":
        _emit_json({"holds": ok, "filtration_f": f_rows, "filtration_e": e_rows})
    else:
        print("F filtration: " + "; ".join(f_rows))
        print("E filtration: " + "; ".join(e_rows))
        print("pieri holds" if ok else "pieri FAILED")
    return 0 if ok else 1


def _cmd_fock_apply(args):
    p = require_prime(args.p)
    alpha = _alpha(args, p)
    gen = "f" if args.f else ("e" if args.e else "h")
    if args.model == "wedge":
        label = fock.check_wedge_label(_weight(args))
        model = fock.WEDGE
    else:
        label = _partition(args)
        model = fock.PARTITION
    v = fock.FockVector.basis(model, label)
    if gen == "h":
        result = fock.h_apply(alpha, v, p)
    elif model == fock.WEDGE:
        result = fock.wedge_apply(gen, alpha, label, p)
    else:
        result = fock.fock_apply(gen, alpha, label, p)
    wt = fock.weight_of(label, p, model)
    wt_str = ",".join(f"{r}:{wt[r]}" for r in sorted(wt))
    if args.format == "json":
        _emit_json({"gen": gen, "alpha": alpha,
                    "input_weight": [[r, wt[r]] for r in sorted(wt)],
                    "result": result.to_json_obj()})
    else:
        print(f"input weight: {wt_str}")
        if not result:
            print("0")
        for k in sorted(result.terms):
            print(f"{result.terms[k]} {format_int_tuple(k)}")
    return 0


def _cmd_fock_relations(args):
    p = require_prime(args.p)
    if args.model == "wedge":
        if args.n is None or args.window is None:
            raise InputError("wedge model needs --n and --window")
        report = fock.check_kac_moody_relations(
            fock.WEDGE, p, n=args.n, window=args.window)
    else:
        if args.max_size is None:
            raise InputError("partition model needs --max-size")
        report = fock.check_kac_moody_relations(
            fock.PARTITION, p, max_size=args.max_size)
    if args.format == "json":
        _emit_json(report)
        return 0 if not report else 1
    if not report:
        print("all relations hold")
        return 0
    for item in report:
        print(f"violated: {item['relation']} at residues {item['residues']} "
              f"on {format_int_tuple(item['label'])}")
    return 1


def _cmd_groth_check(args):
    p = require_prime(args.p)
    lam = _weight(args)
    alphas = [_alpha(args, p)] if args.alpha is not None else list(range(p))
    rows = []
    for a in alphas:
        for side, op in (("f", fock.groth_f), ("e", fock.groth_e)):
            vec = op(a, lam, p)  # raises VerificationError on mismatch
            terms = [{"label": list(k),
                      "weight": list(weights.beta_to_weight(k)),
                      "coeff": vec.terms[k]} for k in sorted(vec.terms)]
            rows.append({"side": side, "alpha": a, "terms": terms})
    if args.format == "json":
        _emit_json({"weight": list(lam), "beta": list(weights.weight_to_beta(lam)),
                    "checks": rows})
    else:
        print(f"beta: {format_int_tuple(weights.weight_to_beta(lam))}")
        for row in rows:
            body = "; ".join(f"{t['coeff']} {format_int_tuple(t['label'])}"
                             f" ~ {format_int_tuple(t['weight'])}"
                             for t in row["terms"]) or "0"
            print(f"{row['side']} alpha={row['alpha']}: {body}")
        print("intertwiner verified")
    return 0


def _cmd_hecke_verify(args):
    p = require_prime(args.p)
    report = list(hecke.verify_hecke_relations(args.n, args.N, args.d, p))
    if not hecke.verify_flip_identity(args.n, p):
        report.append("tensor casimir on two slots != slot swap")
    space = hecke.TensorSpace(args.n, args.N + args.d)
    if space.factors >= 2 and not hecke.verify_casimir_coproduct(
            1, range(2, space.factors + 1), space, p):
        report.append("casimir coproduct identity failed")
    if args.format == "json":
        _emit_json(report)
        return 0 if not report else 1
    if not report:
        print("all relations hold")
        return 0
    for line in report:
        print(f"violated: {line}")
    return 1


def _cmd_eigendims(args):
    p = require_prime(args.p)
    m = hecke.x_on_module_tower(args.n, args.d, p)
    dims = hecke.generalized_eigenspaces(m, p)
    pred = hecke.predicted_F_alpha_dims(args.n, args.d, p)
    ok = dims == pred
    if args.format == "json":
        _emit_json({"computed": {str(a): dims[a] for a in sorted(dims)},
                    "predicted": {str(a): pred[a] for a in sorted(pred)},
                    "match": ok})
    else:
        for a in sorted(dims):
            print(f"alpha {a}: dim {dims[a]} predicted {pred[a]}")
        print("eigenspace dimensions match predictions" if ok
              else "eigenspace dimensions DO NOT match predictions")
    return 0 if ok else 1


def _cmd_classify_component(args):
    p = require_prime(args.p)
    computed, predicted, equal = crystal.empty_component_classification(p, args.max_size)
    g = crystal.crystal_graph([()], p, args.max_size + 1,
                              model=crystal.PARTITION_MODEL, max_size=args.max_size)
    singular = sorted(crystal.singular_vertices(g))
    if args.format == "json":
        _emit_json({"computed": [list(v) for v in sorted(computed)],
                    "predicted": [list(v) for v in sorted(predicted)],
                    "match": equal,
                    "singular": [list(v) for v in singular]})
    else:
        print(f"component size: {len(computed)}")
        print(f"classified size: {len(predicted)}")
        print(f"match: {'true' if equal else 'false'}")
        print("singular: " + "; ".join(format_int_tuple(v) for v in singular))
    return 0 if equal and singular == [()] else 1


def _cmd_branch(args):
    p = require_prime(args.p)
    out = crystal.branching(_partition(args), p)
    if args.format == "json":
        _emit_json([{"alpha": a, "partition": list(mu)} for a, mu in out])
    else:
        for a, mu in out:
            print(f"{a}: {format_int_tuple(mu)}")
    return 0


def _add_common(sp, *names):
    if "p" in names:
        sp.add_argument("--p", type=int, required=True, help="prime modulus")
    if "alpha" in names:
        sp.add_argument("--alpha", type=int, help="residue in [0, p)")
    if "weight" in names:
        sp.add_argument("--weight", help="comma-separated integers")
    if "partition" in names:
        sp.add_argument("--partition", help="comma-separated parts; '0' is empty")
    if "n" in names:
        sp.add_argument("--n", type=int, help="weight length / matrix size")
    if "format" in names:
        sp.add_argument("--format", choices=("text", "json"), default="text")
    if "gformat" in names:
        sp.add_argument("--format", choices=("text", "json", "dot"), default="text")
    if "gen" in names:
        group = sp.add_mutually_exclusive_group(required=True)
        group.add_argument("--f", action="store_true", help="lowering operator")
        group.add_argument("--e", action="store_true", help="raising operator")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="modrep",
        description="Exact modular GL_n combinatorics: signatures, crystals, "
                    "Fock models, characters, and Hecke operators over F_p.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("signature", help="raw and reduced residue signature")
    _add_common(sp, "p", "alpha", "weight", "format")
    sp.set_defaults(func=_cmd_signature)

    sp = sub.add_parser("crystal-op", help="apply a crystal operator")
    _add_common(sp, "p", "alpha", "weight", "partition", "format", "gen")
    sp.set_defaults(func=_cmd_crystal_op)

    sp = sub.add_parser("crystal-graph", help="BFS closure under crystal operators")
    _add_common(sp, "p", "weight", "partition", "gformat")
    sp.add_argument("--max-steps", type=int, default=6)
    sp.add_argument("--max-size", type=int, help="cap partition sizes")
    sp.set_defaults(func=_cmd_crystal_graph)

    sp = sub.add_parser("character", help="Weyl module character")
    _add_common(sp, "weight", "n", "format")
    sp.add_argument("--verify", action="store_true",
                    help="check the alternant identity and the support bound")
    sp.set_defaults(func=_cmd_character)

    sp = sub.add_parser("pieri", help="single-box tensor identities")
    _add_common(sp, "weight", "n", "format")
    sp.set_defaults(func=_cmd_pieri)

    sp = sub.add_parser("fock-apply", help="apply e, f or h in a Fock model")
    sp.add_argument("--model", choices=("wedge", "partition"), required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--alpha", type=int)
    sp.add_argument("--weight", help="wedge label (strictly decreasing)")
    sp.add_argument("--partition")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--f", action="store_true")
    group.add_argument("--e", action="store_true")
    group.add_argument("--h", action="store_true")
    sp.set_defaults(func=_cmd_fock_apply)

    sp = sub.add_parser("fock-relations", help="verify the defining relations")
    sp.add_argument("--model", choices=("wedge", "partition"), required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--window", type=int)
    sp.add_argument("--max-size", type=int)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=_cmd_fock_relations)

    sp = sub.add_parser("groth-check",
                        help="filtration sums against the wedge operators")
    _add_common(sp, "p", "alpha", "weight", "format")
    sp.set_defaults(func=_cmd_groth_check)

    sp = sub.add_parser("hecke-verify", help="relation suite on tensor powers")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=_cmd_hecke_verify)

    sp = sub.add_parser("eigendims",
                        help="generalized eigenspace dimensions vs prediction")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=_cmd_eigendims)

    sp = sub.add_parser("classify-component",
                        help="component of the empty diagram vs gap condition")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--max-size", type=int, required=True)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=_cmd_classify_component)

    sp = sub.add_parser("branch", help="socle branches of a partition label")
    _add_common(sp, "p", "partition", "format")
    sp.set_defaults(func=_cmd_branch)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
