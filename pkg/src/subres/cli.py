"""JSON-in, JSON-out command line surface.

Verbs compute subresultants (``uni-delta``, ``uni-sres``, ``uni-res``,
``multi-delta``, ``multi-res``, ``extraneous``, ``gen-poly``) or run a
verification sweep (``verify``).  Every number crossing the boundary is
an exact rational string, randomness is seeded (the seed is echoed in
every report), and identical input plus seed yields byte-identical
output.  Exit codes: 0 success, 1 verification failure, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import multi, uni, verify
from .combinat import DegreeSystem, validate_selection
from .errors import SubresError
from .exactmath import rational_to_string
from .poly import Monomial, Polynomial, mono, random_polynomial
from .verify import DEFAULT_SEED

UNI_SIGN_CONVENTION = (
    "order-t stack: f rows above g rows, ascending monomial basis; "
    "resultant: classical Sylvester with descending basis"
)
MULTI_SIGN_CONVENTION = (
    "blocks f1..f(n+1) stacked in order, rows graded-lex per block, "
    "columns quotient-basis-first; values signed by these orderings"
)

_EXAMPLE_SELECTION = (Monomial((1, 0)), Monomial((1, 1)), Monomial((2, 0)))


class SchemaError(Exception):
    pass


def _require(data: dict, *keys: str) -> None:
    missing = [k for k in keys if k not in data]
    if missing:
        raise SchemaError(f"missing input fields: {missing}")


def _parse_monomials(items, arity: Optional[int] = None) -> list[Monomial]:
    out = []
    for exps in items:
        m = Monomial(tuple(int(e) for e in exps))
        if arity is not None and m.n_vars != arity:
            raise SchemaError(f"monomial {exps} should have {arity} exponents")
        out.append(m)
    return out


def _parse_poly(data: dict) -> Polynomial:
    _require(data, "n_vars", "degree", "terms")
    return Polynomial.from_json(data)


def _load_input(args) -> dict:
    if args.input:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"input is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise SchemaError("top-level input must be a JSON object")
    return data


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")


def _overrides_from(data: dict, args) -> Optional[dict]:
    raw = dict(data.get("T_override") or {})
    if args.T_override:
        with open(args.T_override, "r", encoding="utf-8") as fh:
            raw.update(json.load(fh))
    if not raw:
        return None
    return {int(j): _parse_monomials(items) for j, items in raw.items()}


def _cmd_uni_delta(data: dict, args) -> dict:
    _require(data, "f", "g", "t", "S")
    f = _parse_poly(data["f"])
    g = _parse_poly(data["g"])
    t = int(data["t"]) if args.t_override is None else args.t_override
    S = _parse_monomials(data["S"], arity=1)
    value = uni.order_subresultant(f, g, t, S)
    return {
        "value": rational_to_string(value),
        "sign_convention": UNI_SIGN_CONVENTION,
        "matrix_size": t + 1 - len(S),
        "seed": args.seed,
    }


def _cmd_uni_sres(data: dict, args) -> dict:
    _require(data, "f", "g", "k")
    f = _parse_poly(data["f"])
    g = _parse_poly(data["g"])
    k = int(data["k"])
    poly = uni.subresultant_polynomial(f, g, k)
    scalars = [rational_to_string(uni.scalar_subresultant(f, g, k, j)) for j in range(k + 1)]
    return {"polynomial": poly.to_json(), "scalars": scalars, "seed": args.seed}


def _cmd_uni_res(data: dict, args) -> dict:
    _require(data, "f", "g")
    f = _parse_poly(data["f"])
    g = _parse_poly(data["g"])
    return {
        "value": rational_to_string(uni.resultant(f, g)),
        "sign_convention": UNI_SIGN_CONVENTION,
        "seed": args.seed,
    }


def _multi_polys(data: dict, degrees: Sequence[int], seed: int) -> list[Polynomial]:
    n = len(degrees) - 1
    if "polys" in data:
        polys = [_parse_poly(p) for p in data["polys"]]
    elif "random" in data:
        spec = data["random"]
        base = int(spec.get("seed", seed))
        bound = int(spec.get("coeff_bound", 9))
        polys = [
            random_polynomial(n, d, seed=base + i, coeff_bound=bound)
            for i, d in enumerate(degrees)
        ]
    else:
        raise SchemaError("provide either 'polys' or 'random'")
    if len(polys) != len(degrees):
        raise SchemaError(f"need {len(degrees)} polynomials")
    return polys


def _example_closed_form(polys: Sequence[Polynomial]) -> Fraction:
    basis = [mono(0, 0), mono(1, 0), mono(0, 1), mono(1, 1), mono(2, 0), mono(0, 2)]
    a, b, c = ([p.coefficient(m) for m in basis] for p in polys)
    return (
        c[0] * (a[2] * b[5] - a[5] * b[2])
        - c[2] * (a[0] * b[5] - a[5] * b[0])
        + c[5] * (a[0] * b[2] - a[2] * b[0])
    )


def _cmd_multi_delta(data: dict, args) -> dict:
    _require(data, "degrees", "t", "S")
    degrees = [int(d) for d in data["degrees"]]
    t = int(data["t"]) if args.t_override is None else args.t_override
    polys = _multi_polys(data, degrees, args.seed)
    S = _parse_monomials(data["S"], arity=len(degrees) - 1)
    overrides = _overrides_from(data, args)
    problem = multi.make_problem(degrees, t, polys, S, overrides)
    basis = multi.extended_basis(problem.sys, problem.sets)
    extraneous = multi.extraneous_factor(problem.sys, problem.polys, basis)
    value = multi.order_subresultant(problem)
    report = {
        "value": rational_to_string(value),
        "extraneous": rational_to_string(extraneous),
        "matrix_size": macaulay_size(problem),
        "sign_convention": MULTI_SIGN_CONVENTION,
        "seed": args.seed,
    }
    if tuple(degrees) == (2, 2, 2) and t == 2 and set(S) == set(_EXAMPLE_SELECTION):
        report["closed_form_check"] = value == _example_closed_form(polys)
    return report


def macaulay_size(problem: multi.MultiProblem) -> int:
    return math.comb(problem.sys.t + problem.sys.n, problem.sys.n) - problem.sets.k


def _cmd_multi_res(data: dict, args) -> dict:
    _require(data, "degrees")
    degrees = [int(d) for d in data["degrees"]]
    n = len(degrees) - 1
    rho = sum(d - 1 for d in degrees[:n])
    t = rho + degrees[n]
    polys = _multi_polys(data, degrees, args.seed)
    problem = multi.make_problem(degrees, t, polys, [])
    value = multi.order_subresultant(problem)
    return {
        "value": rational_to_string(value),
        "t": t,
        "sign_convention": MULTI_SIGN_CONVENTION,
        "seed": args.seed,
    }


def _cmd_extraneous(data: dict, args) -> dict:
    _require(data, "degrees", "t")
    degrees = [int(d) for d in data["degrees"]]
    t = int(data["t"]) if args.t_override is None else args.t_override
    polys = _multi_polys(data, degrees, args.seed)
    sys_ = DegreeSystem(n=len(degrees) - 1, degrees=tuple(degrees), t=t)
    sets = validate_selection(sys_, _default_selection(sys_), _overrides_from(data, args))
    basis = multi.extended_basis(sys_, sets)
    value = multi.extraneous_factor(sys_, polys, basis)
    return {"value": rational_to_string(value), "seed": args.seed}


def _default_selection(sys_: DegreeSystem) -> list[Monomial]:
    from .combinat import hilbert_count
    from .poly import monomials_up_to

    k = hilbert_count(sys_.degrees, sys_.n, sys_.t)
    return monomials_up_to(sys_.n, sys_.t)[:k]


def _cmd_gen_poly(data: dict, args) -> dict:
    _require(data, "t", "S_plus")
    t = int(data["t"]) if args.t_override is None else args.t_override
    if "degrees" in data:
        degrees = [int(d) for d in data["degrees"]]
        polys = _multi_polys(data, degrees, args.seed)
        sys_ = DegreeSystem(n=len(degrees) - 1, degrees=tuple(degrees), t=t)
        S_plus = _parse_monomials(data["S_plus"], arity=sys_.n)
        poly = multi.generalized_subresultant_polynomial(
            sys_, polys, S_plus, _overrides_from(data, args)
        )
    else:
        _require(data, "f", "g")
        f = _parse_poly(data["f"])
        g = _parse_poly(data["g"])
        S_plus = _parse_monomials(data["S_plus"], arity=1)
        poly = uni.generalized_subresultant(f, g, t, S_plus)
    return {"polynomial": poly.to_json(), "seed": args.seed}


def _cmd_verify(args) -> tuple[dict, int]:
    report = verify.run_suite(
        args.suite, seed=args.seed, max_degree=args.max_degree, count=args.count
    )
    return report.to_json(), 0 if report.ok else 1


COMMANDS = {
    "uni-delta": _cmd_uni_delta,
    "uni-sres": _cmd_uni_sres,
    "uni-res": _cmd_uni_res,
    "multi-delta": _cmd_multi_delta,
    "multi-res": _cmd_multi_res,
    "extraneous": _cmd_extraneous,
    "gen-poly": _cmd_gen_poly,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subres",
        description="Exact subresultants from coefficient matrices and from roots.",
    )
    parser.add_argument("verb", choices=sorted(COMMANDS) + ["verify"])
    parser.add_argument("--input", help="JSON input path (default: stdin)")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help=f"seed echoed in reports (default {DEFAULT_SEED})")
    parser.add_argument("--suite", choices=sorted(verify.SUITES),
                        help="verification suite name (verify only)")
    parser.add_argument("--max-degree", type=int, default=None)
    parser.add_argument("--count", type=int, default=None)
    parser.add_argument("--t-override", type=int, default=None, dest="t_override",
                        help="replace the order t from the input")
    parser.add_argument("--T-override", dest="T_override", default=None,
                        help="path to a JSON map degree -> list of exponent arrays")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.verb == "verify":
            if not args.suite:
                raise SchemaError("verify requires --suite")
            payload, code = _cmd_verify(args)
            _emit(payload)
            return code
        data = _load_input(args)
        _emit(COMMANDS[args.verb](data, args))
        return 0
    except (SchemaError, SubresError, ValueError, OSError) as exc:
        _emit({"error": type(exc).__name__, "detail": str(exc), "seed": args.seed})
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
