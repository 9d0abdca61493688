"""Command-line front end.

Verbs:

    eval   --type A2 "T[s1]*th[1,0]"          normal form of an expression
    apply  --type A1 --inv kim "T[s1]"        apply an involution
    verify --type A2 --suite relations        run a verification suite
    koszul check-diagonal --dimV 2 --dimF 1   one diagonal configuration
    kclass expand|kim --type A2 ...           K-class dictionary operations

Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.  Reports are
deterministic for fixed inputs and --seed, and byte-identical as JSON.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import diagonal, exprs, hecke, involutions, kclasses, samples
from .involutions import InvolutionKind
from .rootdata import make_root_datum

_INV_BY_NAME = {
    "im": InvolutionKind.IM,
    "iota": InvolutionKind.IOTA,
    "kim": InvolutionKind.KAPPA_IM,
}


def _dump(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, sort_keys=True, separators=(",", ":")))
        return
    for check in report.get("checks", []):
        status = "PASS" if check["pass"] else "FAIL"
        line = "[%s] %s" % (status, check["name"])
        if not check["pass"] and "witness" in check:
            line += "  -- " + str(check["witness"])
        print(line)
    print("suite %s: %s" % (report.get("suite"), "PASS" if report["passed"] else "FAIL"))


def _exit_code(report: dict) -> int:
    return 0 if report.get("passed") else 1


def _sample_weights(rng: random.Random, datum, count: int, bound: int = 3):
    weights = [samples.random_weight(rng, datum, bound) for _ in range(count)]
    # make sure the conditional relation checks are not vacuous
    weights.extend([datum.rho, (0,) * datum.rank])
    for i in range(datum.rank):
        weights.append(tuple(int(j == i) for j in range(datum.rank)))
    return weights


def run_suite(name: str, type_string: str = "A2", n_samples: int = 50,
              seed: int = 0, cutoff: int = 6) -> dict:
    """Run one verification suite; the CLI and the tests share this."""
    rng = random.Random(seed)
    if name == "koszul":
        return diagonal.run_koszul_suite(cutoff=cutoff, seed=seed)
    datum = make_root_datum(type_string)
    if name == "relations":
        return hecke.verify_relations(datum, _sample_weights(rng, datum, n_samples))
    if name == "theorem":
        weights = [samples.random_weight(rng, datum, 3) for _ in range(max(4, n_samples // 5))]
        return involutions.check_theorem(datum, weights)
    if name == "kclass":
        weights = [samples.random_weight(rng, datum, 3) for _ in range(max(4, n_samples // 10))]
        return kclasses.replay_generator_images(datum, weights)
    if name == "involution":
        checks = []
        pairs = [(samples.random_hecke(rng, datum), samples.random_hecke(rng, datum))
                 for _ in range(n_samples)]
        for kind in InvolutionKind:
            ok = all(involutions.apply(kind, involutions.apply(kind, a)) == a
                     for a, _ in pairs)
            checks.append({"name": "involutive: %s" % kind.value, "pass": ok})
        ok = all(involutions.apply_im(involutions.apply_iota(a)) ==
                 involutions.apply_iota(involutions.apply_im(a)) for a, _ in pairs)
        checks.append({"name": "im and iota commute", "pass": ok})
        for kind in InvolutionKind:
            rep = involutions.check_homomorphism(kind, pairs)
            checks.append({"name": "homomorphism: %s" % kind.value, "pass": rep["passed"]})
        return {
            "suite": "involution",
            "type": type_string,
            "seed": seed,
            "samples": n_samples,
            "checks": checks,
            "passed": all(c["pass"] for c in checks),
        }
    raise ValueError("unknown suite %r" % name)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heckekoszul",
        description="Bernstein-form Hecke algebra arithmetic and point-level "
                    "Koszul duality checks")
    sub = parser.add_subparsers(dest="verb", required=True)

    p_eval = sub.add_parser("eval", help="evaluate an expression to normal form")
    p_eval.add_argument("--type", default="A1")
    p_eval.add_argument("--json", action="store_true")
    p_eval.add_argument("expression")

    p_apply = sub.add_parser("apply", help="apply an involution to an expression")
    p_apply.add_argument("--type", default="A1")
    p_apply.add_argument("--inv", choices=sorted(_INV_BY_NAME), required=True)
    p_apply.add_argument("--json", action="store_true")
    p_apply.add_argument("expression")

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--type", default="A2")
    p_verify.add_argument("--suite", required=True,
                          choices=["relations", "involution", "theorem", "kclass", "koszul"])
    p_verify.add_argument("--samples", type=int, default=50)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--cutoff", type=int, default=6)
    p_verify.add_argument("--json", action="store_true")

    p_koszul = sub.add_parser("koszul", help="point-level duality checks")
    koszul_sub = p_koszul.add_subparsers(dest="koszul_verb", required=True)
    p_diag = koszul_sub.add_parser("check-diagonal")
    p_diag.add_argument("--dimV", type=int, required=True)
    p_diag.add_argument("--dimF", type=int, required=True)
    p_diag.add_argument("--cutoff", type=int, default=6)
    p_diag.add_argument("--twist", type=int, default=0)
    p_diag.add_argument("--json", action="store_true")

    p_kclass = sub.add_parser("kclass", help="K-class dictionary operations")
    p_kclass.add_argument("op", choices=["expand", "kim"])
    p_kclass.add_argument("--type", default="A1")
    p_kclass.add_argument("--atom", required=True,
                          help="atom text like DiagN(1,0), Y(1), W(1)")
    p_kclass.add_argument("--json", action="store_true")
    return parser


def _parse_atom_text(datum, text: str):
    text = text.strip()
    name, _, rest = text.partition("(")
    if not rest.endswith(")"):
        raise ValueError("malformed atom %r" % text)
    args = rest[:-1]
    if name in ("DiagN", "DiagG"):
        coords = tuple(int(c) for c in args.split(","))
        return kclasses.diag_class(datum, coords,
                                   kclasses.Z_SIDE if name == "DiagN" else kclasses.CZ_SIDE)
    if name == "Y":
        parts = args.split(";")
        twist = parts[1] if len(parts) > 1 else "A"
        return kclasses.y_class(datum, int(parts[0]) - 1, twist)
    if name == "W":
        return kclasses.w_class(datum, int(args) - 1)
    raise ValueError("unknown atom %r" % name)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.verb == "eval":
            datum = make_root_datum(args.type)
            value = exprs.eval_expr(datum, args.expression)
            print(json.dumps(value.to_json(), sort_keys=True) if args.json
                  else exprs.render(value))
            return 0
        if args.verb == "apply":
            datum = make_root_datum(args.type)
            value = exprs.eval_expr(datum, args.expression)
            image = involutions.apply(_INV_BY_NAME[args.inv], value)
            print(json.dumps(image.to_json(), sort_keys=True) if args.json
                  else exprs.render(image))
            return 0
        if args.verb == "verify":
            report = run_suite(args.suite, args.type, args.samples, args.seed, args.cutoff)
            _dump(report, args.json)
            return _exit_code(report)
        if args.verb == "koszul":
            report = diagonal.check_diagonal(args.dimV, args.dimF,
                                             cutoff=args.cutoff, twist=args.twist)
            _dump(report, args.json)
            return _exit_code(report)
        if args.verb == "kclass":
            datum = make_root_datum(args.type)
            cls = _parse_atom_text(datum, args.atom)
            if args.op == "kim":
                cls = kclasses.kappa_im_on_classes(cls)
                print(json.dumps(cls.to_json(), sort_keys=True) if args.json else str(cls))
            else:
                value = kclasses.expand(cls)
                print(json.dumps(value.to_json(), sort_keys=True) if args.json
                      else exprs.render(value))
            return 0
    except (ValueError, IndexError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
