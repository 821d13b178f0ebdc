"""Command-line front end: coefficients, expansions, verdicts, witnesses, sweeps.

Exit codes: 0 success, 1 computational disagreement, 2 usage error.  Output is
plain text by default or JSON with --format json; identical invocations print
identical bytes.  The environment variable HIVE_LR_MAX_WEIGHT (default 40)
caps the total weight a single query may ask for.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass

from .classify import find_multiplicity_witness, gty_mf, lifted_witness, product_witness, skew_witness, stembridge_mf
from .expansions import product_expansion, skew_expansion
from .hives import default_hive_side, enumerate_lr_hives
from .partitions import format_partition, parse_partition, partitions_in_box, subpartitions
from .skew import SkewShape, format_skew_shape, parse_skew_shape
from .tableaux import lr_tableau_count


class UsageError(Exception):
    pass


def _max_weight_cap():
    raw = os.environ.get("HIVE_LR_MAX_WEIGHT", "40")
    try:
        return int(raw)
    except ValueError as exc:
        raise UsageError(f"HIVE_LR_MAX_WEIGHT must be an integer, got {raw!r}") from exc


def _check_weight(weight):
    cap = _max_weight_cap()
    if weight > cap:
        raise UsageError(f"total weight {weight} exceeds HIVE_LR_MAX_WEIGHT = {cap}")


def _parse_params(text):
    params = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"bad parameter {item!r}; expected name=value")
        try:
            params[key.strip()] = int(value)
        except ValueError as exc:
            raise UsageError(f"parameter {key.strip()!r} needs an integer value") from exc
    return params


def _parse_box(text):
    m, sep, n = text.lower().partition("x")
    if not sep:
        raise UsageError(f"bad box {text!r}; expected mXn, e.g. 3x3")
    try:
        return int(m), int(n)
    except ValueError as exc:
        raise UsageError(f"bad box {text!r}; sides must be integers") from exc


def _emit(lines):
    for line in lines:
        print(line)


def _emit_json(obj):
    print(json.dumps(obj, indent=2))


def _expansion_json(query, method, expansion):
    return {
        "query": query,
        "method": method,
        "terms": [{"partition": list(p.parts), "coeff": c} for p, c in expansion.terms()],
        "max_multiplicity": expansion.max_multiplicity(),
    }


def _expansion_lines(expansion):
    lines = [f"{format_partition(p)}: {c}" for p, c in expansion.terms()]
    lines.append(f"max multiplicity: {expansion.max_multiplicity()}")
    return lines


def _cmd_lrcoef(args):
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    nu = parse_partition(args.nu)
    _check_weight(lam.weight)
    query = {"type": "lrcoef", "lambda": list(lam.parts), "mu": list(mu.parts), "nu": list(nu.parts)}
    if args.method == "both":
        from .hives import lr_coefficient_hive

        by_hive = lr_coefficient_hive(lam, mu, nu)
        by_tableau = lr_tableau_count(lam, mu, nu)
        if args.format == "json":
            _emit_json({"query": query, "method": "both", "hive": by_hive, "tableau": by_tableau})
        else:
            _emit([str(by_hive), str(by_tableau)])
        if by_hive != by_tableau:
            print(f"error: hive count {by_hive} != tableau count {by_tableau}", file=sys.stderr)
            return 1
        return 0
    from .expansions import lr_coefficient

    value = lr_coefficient(lam, mu, nu, method=args.method)
    if args.format == "json":
        _emit_json({"query": query, "method": args.method, "coefficient": value})
    else:
        _emit([str(value)])
    return 0


def _cmd_product(args):
    mu = parse_partition(args.mu)
    nu = parse_partition(args.nu)
    _check_weight(mu.weight + nu.weight)
    expansion = product_expansion(mu, nu, method=args.method)
    query = {"type": "product", "mu": list(mu.parts), "nu": list(nu.parts)}
    if args.format == "json":
        _emit_json(_expansion_json(query, args.method, expansion))
    else:
        _emit(_expansion_lines(expansion))
    return 0


def _cmd_skew(args):
    shape = parse_skew_shape(args.shape)
    _check_weight(shape.outer.weight)
    expansion = skew_expansion(shape, method=args.method)
    query = {"type": "skew", "outer": list(shape.outer.parts), "inner": list(shape.inner.parts)}
    if args.format == "json":
        _emit_json(_expansion_json(query, args.method, expansion))
    else:
        _emit(_expansion_lines(expansion))
    return 0


def _cmd_mf(args):
    if args.kind == "product":
        if args.mu is None or args.nu is None:
            raise UsageError("mf product needs --mu and --nu")
        mu = parse_partition(args.mu)
        nu = parse_partition(args.nu)
        _check_weight(mu.weight + nu.weight)
        verdict = stembridge_mf(mu, nu)
        expansion = product_expansion(mu, nu, method=args.method) if args.check else None
    else:
        if args.shape is None:
            raise UsageError("mf skew needs --shape")
        shape = parse_skew_shape(args.shape)
        _check_weight(shape.outer.weight)
        verdict = gty_mf(shape)
        expansion = skew_expansion(shape, method=args.method) if args.check else None

    witness = None
    enumerated_free = None
    if expansion is not None:
        enumerated_free = expansion.max_multiplicity() <= 1
        witness = find_multiplicity_witness(expansion)

    cases = verdict.sorted_cases()
    if args.format == "json":
        payload = {
            "multiplicity_free": verdict.multiplicity_free,
            "cases": cases,
            "witness": (
                {"partition": list(witness[0].parts), "coeff": witness[1]} if witness else None
            ),
        }
        _emit_json(payload)
    else:
        if verdict.multiplicity_free:
            _emit([f"multiplicity-free ({', '.join(cases)})"])
        else:
            _emit(["not multiplicity-free"])
        if witness is not None:
            _emit([f"witness: {format_partition(witness[0])} (coefficient {witness[1]})"])
    if enumerated_free is not None and enumerated_free != verdict.multiplicity_free:
        print(
            f"error: classifier says multiplicity-free={verdict.multiplicity_free} "
            f"but enumeration says {enumerated_free}",
            file=sys.stderr,
        )
        return 1
    return 0


def _cmd_witness(args):
    params = _parse_params(args.params or "")
    case = args.case
    key = case.replace("(", "").replace(")", "").lower()
    try:
        if key.startswith("q"):
            witness = product_witness(case, **params)
        elif key.startswith("t"):
            witness = skew_witness(case, **params)
        elif key.startswith("u"):
            witness = lifted_witness(case, **params)
        else:
            raise UsageError(f"unknown witness case {case!r}")
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _check_weight(witness.lam.weight)
    count = witness.verify()
    ok = witness.holds()
    if args.format == "json":
        _emit_json(
            {
                "case": witness.case_label,
                "lambda": list(witness.lam.parts),
                "mu": list(witness.mu.parts),
                "nu": list(witness.nu.parts),
                "constructed": list(witness.constructed.parts),
                "expected": witness.expected,
                "count": count,
                "holds": ok,
            }
        )
    else:
        _emit(
            [
                f"case: {witness.case_label}",
                f"lambda: {format_partition(witness.lam)}",
                f"mu: {format_partition(witness.mu)}",
                f"nu: {format_partition(witness.nu)}",
                f"constructed: {format_partition(witness.constructed)}",
                f"expected: {witness.expected}",
                f"count: {count}",
            ]
        )
    if not ok:
        print(f"error: count {count} does not satisfy '{witness.expected}'", file=sys.stderr)
        return 1
    return 0


def _cmd_hives(args):
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    nu = parse_partition(args.nu)
    _check_weight(lam.weight)
    n = args.n if args.n is not None else default_hive_side(lam, mu, nu)
    try:
        hives = enumerate_lr_hives(lam, mu, nu, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        payload = {
            "query": {"type": "hives", "lambda": list(lam.parts), "mu": list(mu.parts), "nu": list(nu.parts)},
            "n": n,
            "count": len(hives),
        }
        if args.dump:
            payload["hives"] = [h.diagonals() for h in hives]
        _emit_json(payload)
    else:
        lines = [str(len(hives))]
        if args.dump:
            for idx, h in enumerate(hives, start=1):
                lines.append(f"hive {idx}:")
                lines.extend(" ".join(str(v) for v in row) for row in h.diagonals())
        _emit(lines)
    return 0


@dataclass
class SweepReport:
    family: str
    box: tuple
    method: str
    instances: int
    agreements: int
    disagreements: list

    @property
    def disagree(self):
        return len(self.disagreements)


def verify_sweep(family, box, sample=None, seed=0, method="hive"):
    """Differential sweep: classifier verdict vs enumerated max multiplicity.

    Iterates every instance in the box (products: all ordered partition
    pairs; skews: all basic shapes), or a seeded random sample of them.
    """
    m, n = box
    parts = partitions_in_box(m, n)
    disagreements = []
    if family == "products":
        instances = [(mu, nu) for mu in parts for nu in parts]
        if sample is not None:
            instances = random.Random(seed).sample(instances, min(sample, len(instances)))
        for mu, nu in instances:
            verdict = stembridge_mf(mu, nu)
            enum_max = product_expansion(mu, nu, method=method).max_multiplicity()
            if verdict.multiplicity_free != (enum_max <= 1):
                disagreements.append(
                    {
                        "mu": list(mu.parts),
                        "nu": list(nu.parts),
                        "cases": verdict.sorted_cases(),
                        "max_multiplicity": enum_max,
                    }
                )
    elif family == "skews":
        instances = [
            SkewShape(lam, mu)
            for lam in parts
            for mu in subpartitions(lam)
            if SkewShape(lam, mu).is_basic()
        ]
        if sample is not None:
            instances = random.Random(seed).sample(instances, min(sample, len(instances)))
        for shape in instances:
            verdict = gty_mf(shape)
            enum_max = skew_expansion(shape, method=method).max_multiplicity()
            if verdict.multiplicity_free != (enum_max <= 1):
                disagreements.append(
                    {
                        "shape": format_skew_shape(shape),
                        "cases": verdict.sorted_cases(),
                        "max_multiplicity": enum_max,
                    }
                )
    else:
        raise UsageError(f"unknown family {family!r}")
    return SweepReport(family, box, method, len(instances), len(instances) - len(disagreements), disagreements)


def _cmd_verify(args):
    box = _parse_box(args.box)
    _check_weight(box[0] * box[1])
    report = verify_sweep(args.family, box, sample=args.sample, seed=args.seed, method=args.method)
    if args.format == "json":
        _emit_json(
            {
                "family": report.family,
                "box": list(report.box),
                "method": report.method,
                "instances": report.instances,
                "agree": report.agreements,
                "disagree": report.disagree,
                "disagreements": report.disagreements,
            }
        )
    else:
        lines = [
            f"family: {report.family}",
            f"box: {report.box[0]}x{report.box[1]}",
            f"method: {report.method}",
            f"instances: {report.instances}",
            f"agree: {report.agreements}",
            f"disagree: {report.disagree}",
        ]
        for d in report.disagreements:
            lines.append(f"disagreement: {json.dumps(d)}")
        _emit(lines)
    return 1 if report.disagreements else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lrhive",
        description="Littlewood-Richardson coefficients by hive enumeration, with a tableau oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("lrcoef", help="one coefficient")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--method", choices=("hive", "tableau", "both"), default="hive")
    add_format(p)
    p.set_defaults(func=_cmd_lrcoef)

    p = sub.add_parser("product", help="expansion of a Schur product")
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--method", choices=("hive", "tableau"), default="hive")
    add_format(p)
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("skew", help="expansion of a skew Schur function")
    p.add_argument("--shape", required=True, help="OUTER/INNER, e.g. 4,3,2,1/2,2")
    p.add_argument("--method", choices=("hive", "tableau"), default="hive")
    add_format(p)
    p.set_defaults(func=_cmd_skew)

    p = sub.add_parser("mf", help="multiplicity-free verdict")
    p.add_argument("kind", choices=("product", "skew"))
    p.add_argument("--mu")
    p.add_argument("--nu")
    p.add_argument("--shape")
    p.add_argument("--check", action="store_true", help="also enumerate and compare")
    p.add_argument("--method", choices=("hive", "tableau"), default="hive")
    add_format(p)
    p.set_defaults(func=_cmd_mf)

    p = sub.add_parser("witness", help="construct and verify a multiplicity witness")
    p.add_argument("case", help="Q1..Q3, T1i..T3ii, U1i..U3ii (parens allowed: 'T1(i)')")
    p.add_argument("--params", required=True, help="comma-separated name=value pairs")
    add_format(p)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("hives", help="count or dump LR-hives")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--dump", action="store_true")
    add_format(p)
    p.set_defaults(func=_cmd_hives)

    p = sub.add_parser("verify", help="differential sweep of a classifier")
    p.add_argument("--family", choices=("products", "skews"), required=True)
    p.add_argument("--box", required=True, help="mXn, e.g. 3x3")
    p.add_argument("--sample", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--method", choices=("hive", "tableau"), default="hive")
    add_format(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    console_main()
