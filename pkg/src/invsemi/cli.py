"""Command-line interface.

One subcommand per library operation, a comma-separated generator
argument, and a --json flag for machine-readable output.  Exit codes:
0 success, 1 inadmissible input, 2 usage error, 3 failed internal
consistency certificate (the report is emitted as JSON on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .bresinsky import (
    alpha_table,
    pfaffian_structure,
    two_factorization_witness,
    verify_4gor,
)
from .errors import DomainError, InvsemiError, TheoremViolation
from .factorization import deg_h, factorizations, minimal_generators
from .gluing import GluingSpec, glue, glued_inverse_polynomial
from .invpoly import (
    annihilator_general,
    annihilator_of_semigroup_J,
    check_AS,
    inverse_polynomial,
    verify_intersection_theorem,
)
from .semigroup import NumericalSemigroup
from .structure import (
    ci_same_degree,
    classify_small_multiplicity,
    construct_from_alphas,
    construct_H_ec,
    is_free,
    monomial_criterion,
)


def generator_list(text: str) -> list[int]:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise argparse.ArgumentTypeError("no generators given")
    out = []
    for p in parts:
        try:
            v = int(p)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{p!r} is not an integer")
        if v < 1:
            raise argparse.ArgumentTypeError(f"generator {v} is not positive")
        out.append(v)
    return out


def exponent_list(text: str) -> list[int]:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    out = []
    for p in parts:
        try:
            v = int(p)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{p!r} is not an integer")
        if v < 0:
            raise argparse.ArgumentTypeError(f"exponent {v} is negative")
        out.append(v)
    return out


def _emit(data: dict, as_json: bool, human: str) -> None:
    if as_json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(human)


def _pair_json(H, pair) -> dict:
    a, b = pair
    return {"lhs": list(a), "rhs": list(b), "degree": deg_h(H, a)}


def _binomial_str(pair) -> str:
    def side(v):
        parts = [
            f"x{i + 1}" + (f"^{p}" if p > 1 else "") for i, p in enumerate(v) if p
        ]
        return "*".join(parts) if parts else "1"

    a, b = pair
    return f"{side(a)} - {side(b)}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invsemi",
        description="Exact invariants and inverse polynomials of numerical semigroups",
    )
    parser.add_argument("--version", action="version", version=f"invsemi {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = add("info", help="classical invariants")
    p.add_argument("generators", type=generator_list)

    p = add("apery", help="Apery set with respect to an element")
    p.add_argument("generators", type=generator_list)
    p.add_argument("modulus", type=int)

    p = add("factorize", help="all factorizations of an element")
    p.add_argument("generators", type=generator_list)
    p.add_argument("value", type=int)
    p.add_argument("--bound", type=int, default=None, help="refuse larger inputs")

    p = add("invpoly", help="inverse polynomial of an element")
    p.add_argument("generators", type=generator_list)
    p.add_argument("value", type=int)
    p.add_argument("--bound", type=int, default=None, help="refuse larger inputs")

    p = add("ann", help="annihilator presentation of the inverse polynomial")
    p.add_argument("generators", type=generator_list)
    p.add_argument("value", type=int)
    p.add_argument("--bound", type=int, default=None, help="refuse larger inputs")

    p = add("check-as", help="almost-symmetry bound at Frobenius plus h")
    p.add_argument("generators", type=generator_list)
    p.add_argument("h", type=int)

    p = add("verify-intersection", help="intersection certificate for x^a")
    p.add_argument("generators", type=generator_list)
    p.add_argument("exponent", type=exponent_list)

    p = add("glue", help="glue two semigroups")
    p.add_argument("--h1", type=generator_list, required=True)
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--h2", type=generator_list, required=True)
    p.add_argument("--d2", type=int, required=True)
    p.add_argument(
        "--invpoly",
        type=int,
        nargs=2,
        metavar=("M1", "M2"),
        help="also evaluate the product formula at d1*m1 + d2*m2",
    )

    p = add("free", help="telescopic witness search")
    p.add_argument("generators", type=generator_list)

    p = add("hec", help="the symmetric family with multiplicity e + c")
    p.add_argument("e", type=int)
    p.add_argument("c", type=int)

    p = add("classify", help="small-multiplicity shape of the inverse polynomial")
    p.add_argument("generators", type=generator_list)

    p = add("ci", help="same-degree complete intersection detection/construction")
    p.add_argument("generators", type=generator_list, nargs="?")
    p.add_argument("--alphas", type=generator_list, default=None)

    p = add("bresinsky", help="Pfaffian structure of a symmetric 4-generated semigroup")
    p.add_argument("generators", type=generator_list)
    p.add_argument("--seed", type=int, default=0)

    p = add("verify-4gor", help="full structure certificate")
    p.add_argument("generators", type=generator_list)
    p.add_argument("--seed", type=int, default=0)

    p = add("mu", help="minimal generator count of the defining ideal")
    p.add_argument("generators", type=generator_list)

    return parser


def _cmd_info(args) -> None:
    H = NumericalSemigroup(args.generators)
    d = H.to_dict()
    human = (
        f"H = <{','.join(map(str, H.generators))}>\n"
        f"embedding dimension {H.embedding_dim}, multiplicity {H.multiplicity}\n"
        f"Frobenius {d['frobenius']}, genus {d['genus']}, type {d['type']}\n"
        f"PF = {{{', '.join(map(str, d['pf']))}}}\n"
        f"symmetric: {d['symmetric']}, almost symmetric: {d['almost_symmetric']}"
    )
    _emit(d, args.json, human)


def _cmd_apery(args) -> None:
    H = NumericalSemigroup(args.generators)
    ap = H.apery(args.modulus)
    data = {"modulus": ap.modulus, "elements": list(ap.elements)}
    _emit(data, args.json, f"Ap(H, {ap.modulus}) = {{{', '.join(map(str, ap.elements))}}}")


def _check_bound(args, value: int) -> None:
    if getattr(args, "bound", None) is not None and value > args.bound:
        raise DomainError(f"value {value} exceeds the enumeration bound {args.bound}")


def _cmd_factorize(args) -> None:
    H = NumericalSemigroup(args.generators)
    _check_bound(args, args.value)
    facts = factorizations(H, args.value)
    data = {
        "value": args.value,
        "factorizations": [list(a) for a in facts],
        "count": len(facts),
        "unique": len(facts) == 1,
    }
    lines = [f"{len(facts)} factorization(s) of {args.value}"]
    lines += ["  " + " ".join(map(str, a)) for a in facts]
    _emit(data, args.json, "\n".join(lines))


def _cmd_invpoly(args) -> None:
    H = NumericalSemigroup(args.generators)
    _check_bound(args, args.value)
    J = inverse_polynomial(H, args.value)
    _emit({"value": args.value, "terms": J.to_json()}, args.json, J.render())


def _cmd_ann(args) -> None:
    H = NumericalSemigroup(args.generators)
    _check_bound(args, args.value)
    pres = annihilator_of_semigroup_J(H, args.value)
    data = {
        "value": args.value,
        "colength": pres.colength,
        "monomials": [list(a) for a in pres.monomial_gens],
        "binomials": [_pair_json(H, p) for p in pres.binomial_gens],
        "deg_set": list(pres.deg_set),
    }
    lines = [f"colength {pres.colength}"]
    lines += ["monomial generators:"]
    lines += [
        "  "
        + "*".join(
            f"x{i + 1}" + (f"^{p}" if p > 1 else "") for i, p in enumerate(a) if p
        )
        for a in pres.monomial_gens
    ]
    if pres.binomial_gens:
        lines += ["binomial generators:"]
        lines += ["  " + _binomial_str(p) for p in pres.binomial_gens]
    _emit(data, args.json, "\n".join(lines))


def _cmd_check_as(args) -> None:
    H = NumericalSemigroup(args.generators)
    res = check_AS(H, args.h)
    data = {
        "h": res.h,
        "colength": res.colength,
        "bound": res.bound,
        "equality": res.equality,
    }
    _emit(
        data,
        args.json,
        f"colength {res.colength} <= bound {res.bound}"
        + (" (equality)" if res.equality else ""),
    )


def _cmd_verify_intersection(args) -> None:
    H = NumericalSemigroup(args.generators)
    cert = verify_intersection_theorem(H, tuple(args.exponent))
    data = {
        "exponent": list(cert.exponent),
        "degree": cert.degree,
        "pf": list(cert.pseudo_frobenius),
        "equal": cert.equal,
        "colength": cert.quotient_colength,
        "single_annihilator": cert.single_annihilator,
    }
    _emit(
        data,
        args.json,
        f"certified: colength {cert.quotient_colength} on both sides"
        + (" (single annihilator)" if cert.single_annihilator else ""),
    )


def _cmd_glue(args) -> None:
    spec = GluingSpec(
        NumericalSemigroup(args.h1), NumericalSemigroup(args.h2), args.d1, args.d2
    )
    res = glue(spec)
    data = {
        "generators": list(res.semigroup.generators),
        "frobenius": res.predicted.frobenius,
        "genus": res.predicted.genus,
        "pf": list(res.predicted.pseudo_frobenius),
        "type": res.predicted.type,
        "symmetric": res.predicted.is_symmetric,
    }
    lines = [
        f"H = <{','.join(map(str, res.semigroup.generators))}>",
        f"Frobenius {res.predicted.frobenius}, type {res.predicted.type}, "
        f"symmetric: {res.predicted.is_symmetric}",
    ]
    if args.invpoly:
        m1, m2 = args.invpoly
        J = glued_inverse_polynomial(spec, m1, m2)
        m = args.d1 * m1 + args.d2 * m2
        data["invpoly"] = {"m": m, "terms": J.to_json()}
        lines.append(f"J_{m} = {J.render()}  (block coordinates)")
    _emit(data, args.json, "\n".join(lines))


def _cmd_free(args) -> None:
    H = NumericalSemigroup(args.generators)
    w = is_free(H)
    if w is None:
        _emit({"free": False}, args.json, "not free")
        return
    data = {
        "free": True,
        "ordering": list(w.reordered),
        "gcd_chain": list(w.gcd_chain),
        "telescopic_frobenius": w.telescopic_frobenius,
    }
    _emit(
        data,
        args.json,
        f"free via ordering {list(w.reordered)}, gcd chain {list(w.gcd_chain)}, "
        f"Frobenius {w.telescopic_frobenius}",
    )


def _cmd_hec(args) -> None:
    res = construct_H_ec(args.e, args.c)
    data = {
        "generators": list(res.semigroup.generators),
        "frobenius": res.predicted_frobenius,
        "inverse_polynomial": res.predicted_J.to_json(),
        "branch": res.branch,
    }
    _emit(
        data,
        args.json,
        f"H = <{','.join(map(str, res.semigroup.generators))}>, "
        f"Frobenius {res.predicted_frobenius}\nJ = {res.predicted_J.render()}",
    )


def _cmd_classify(args) -> None:
    H = NumericalSemigroup(args.generators)
    tag = classify_small_multiplicity(H)
    data = {
        "multiplicity_class": tag.multiplicity_class,
        "variant": tag.variant,
        "terms": [list(t) for t in tag.terms],
    }
    _emit(
        data,
        args.json,
        f"variant ({tag.variant}) at multiplicity {tag.multiplicity_class}",
    )


def _cmd_ci(args) -> None:
    if args.alphas:
        H = construct_from_alphas(args.alphas)
        data = {"generators": list(H.generators), "alphas": sorted(args.alphas)}
        _emit(
            data,
            args.json,
            f"H = <{','.join(map(str, H.generators))}> from factors {sorted(args.alphas)}",
        )
        return
    if not args.generators:
        raise DomainError("need generators or --alphas")
    H = NumericalSemigroup(args.generators)
    alphas = ci_same_degree(H)
    if alphas is None:
        _emit({"same_degree_ci": False}, args.json, "not a same-degree complete intersection")
    else:
        _emit(
            {"same_degree_ci": True, "alphas": list(alphas)},
            args.json,
            f"same-degree complete intersection with factors {list(alphas)}",
        )


def _structure_json(H, s) -> dict:
    return {
        "relabeled_generators": list(s.relabeled_generators),
        "alpha": list(s.alpha),
        "alpha_off": dict(s.alpha_off),
        "generators": [_pair_json(H, p) for p in s.generators],
    }


def _cmd_bresinsky(args) -> None:
    H = NumericalSemigroup(args.generators)
    s = pfaffian_structure(H)
    w = two_factorization_witness(H)
    table = alpha_table(H)
    data = _structure_json(H, s)
    data["alpha_canonical"] = list(table.alphas)
    data["witness_index"] = w.index + 1
    data["witness_factorizations"] = [list(a) for a in w.factorizations]
    lines = [
        f"relabeling {list(s.relabeled_generators)}, alpha {list(s.alpha)}",
        "generators:",
    ]
    lines += ["  " + _binomial_str(p) for p in s.generators]
    lines.append(
        f"witness: generator {H.generators[w.index]} with factorizations "
        + ", ".join(str(list(a)) for a in w.factorizations)
    )
    _emit(data, args.json, "\n".join(lines))


def _cmd_verify_4gor(args) -> None:
    from .bresinsky import annihilation_spot_check

    H = NumericalSemigroup(args.generators)
    cert = verify_4gor(H)
    spot = annihilation_spot_check(H, cert.structure, seed=args.seed)
    if not spot:
        raise TheoremViolation(
            "structure binomials fail to annihilate", generators=H.generators
        )
    data = {
        "mu": cert.mu,
        "branch": cert.j_branch,
        "witness_index": cert.witness.index + 1,
        "inverse_polynomial_terms": [list(t) for t in cert.j_terms],
        "structure": _structure_json(H, cert.structure),
        "annihilation_spot_check": spot,
    }
    _emit(
        data,
        args.json,
        f"all clauses pass: mu=5, branch {cert.j_branch}, witness at generator "
        f"{H.generators[cert.witness.index]}",
    )


def _cmd_mu(args) -> None:
    H = NumericalSemigroup(args.generators)
    pres = minimal_generators(H)
    data = {
        "mu": pres.mu,
        "betti_degrees": list(pres.betti_degrees),
        "generators": [_pair_json(H, p) for p in pres.generators],
    }
    lines = [f"mu = {pres.mu}, Betti degrees {list(pres.betti_degrees)}"]
    lines += ["  " + _binomial_str(p) for p in pres.generators]
    _emit(data, args.json, "\n".join(lines))


_HANDLERS = {
    "info": _cmd_info,
    "apery": _cmd_apery,
    "factorize": _cmd_factorize,
    "invpoly": _cmd_invpoly,
    "ann": _cmd_ann,
    "check-as": _cmd_check_as,
    "verify-intersection": _cmd_verify_intersection,
    "glue": _cmd_glue,
    "free": _cmd_free,
    "hec": _cmd_hec,
    "classify": _cmd_classify,
    "ci": _cmd_ci,
    "bresinsky": _cmd_bresinsky,
    "verify-4gor": _cmd_verify_4gor,
    "mu": _cmd_mu,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _HANDLERS[args.command](args)
    except TheoremViolation as exc:
        report = {"error": str(exc), "details": _jsonable(exc.details)}
        print(json.dumps(report, sort_keys=True), file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InvsemiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (int, str, bool)) or obj is None:
        return obj
    return repr(obj)


if __name__ == "__main__":
    sys.exit(main())
