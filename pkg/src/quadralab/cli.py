"""Command line surface: reproducible reports over exact scalars.

Every report is deterministic for a given invocation: scalars are emitted
as exact literals, collections in fixed orders, and the payload carries
the parameters, backend, and library version but no timestamps.

Exit codes: 0 all checks pass, 1 a mathematical check failed (the report
says which), 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .errors import QuadralabError, ScalarParseError
from .extension import ExtensionElement
from .freealg import generators
from .geometry import minor_factorization_report, point_table, verify_gamma
from .graded import DEFAULT_DEGREE_CAP, GradedQuotient
from .center import (
    central_pair_identity_report,
    chl_identity_report,
    chl_z1,
    chl_z1_central,
    chl_z2,
    chl_z2_central,
    sklyanin_central_pair,
    squares_identity_report,
)
from .poly import MultiPoly, RationalFunction
from .presentations import (
    angle_invariant,
    chl_to_sklyanin_params,
    chl_z_relations,
    classify_chl,
    invariant_table,
    sklyanin_relations,
)
from .scalars import DEFAULT_PRIME, GaussianRational, parse_scalar
from .selftest import run_acceptance
from .symmetry import (
    gamma_maps,
    heisenberg_checks,
    orbits,
    point_action_is_faithful,
    psi_maps,
)


def _literal(value):
    """Render any scalar-ish value as an exact literal."""
    if isinstance(value, (GaussianRational, Fraction, MultiPoly, RationalFunction,
                          ExtensionElement)):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_literal(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _literal(v) for k, v in value.items()}
    return value


def _emit(payload, fmt):
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        _print_table(payload)


def _print_table(payload, indent=0):
    pad = "  " * indent
    if isinstance(payload, dict):
        for k, v in payload.items():
            if isinstance(v, (dict, list)):
                print(f"{pad}{k}:")
                _print_table(v, indent + 1)
            else:
                print(f"{pad}{k}: {v}")
    elif isinstance(payload, list):
        for v in payload:
            if isinstance(v, (dict, list)):
                _print_table(v, indent + 1)
            else:
                print(f"{pad}- {v}")
    else:
        print(f"{pad}{payload}")


def _scalar(text):
    try:
        return parse_scalar(text)
    except ScalarParseError as exc:
        raise SystemExit2(str(exc)) from None


def _tuple_option(text, n, name):
    parts = [p for p in text.split(",") if p.strip()]
    if len(parts) != n:
        raise SystemExit2(f"--{name} needs {n} comma-separated scalars")
    return tuple(_scalar(p.strip()) for p in parts)


class SystemExit2(Exception):
    """Invalid input: converted to exit code 2 in main()."""


def _base_payload(args, **params):
    return {
        "version": __version__,
        "parameters": {k: _literal(v) for k, v in params.items()},
        **({} if not getattr(args, "mod_p", None) else {"prime": args.mod_p}),
    }


def _abc_params(args):
    if args.abc:
        a, b, c = _tuple_option(args.abc, 3, "abc")
        return a, b, c
    raise SystemExit2("--abc a,b,c is required")


def _alpha_params(args):
    missing = [n for n in ("alpha", "beta", "gamma") if getattr(args, n) is None]
    if missing:
        raise SystemExit2(f"missing --{missing[0]}")
    return _scalar(args.alpha), _scalar(args.beta), _scalar(args.gamma)


def _abcd_params(args):
    if not args.abcd:
        raise SystemExit2("--abcd a,b,c,d is required")
    return _tuple_option(args.abcd, 4, "abcd")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_hilbert(args):
    alpha, beta, gamma = _alpha_params(args)
    quotient = GradedQuotient(sklyanin_relations(alpha, beta, gamma),
                              p=args.mod_p or DEFAULT_PRIME)
    backend = "modular" if args.mod_p else ("auto" if args.degree > 4 else "exact")
    profile = quotient.hilbert_function(args.degree, backend=backend, force=args.force)
    payload = _base_payload(args, alpha=alpha, beta=beta, gamma=gamma)
    payload.update(profile.as_dict())
    _emit(payload, args.format)
    return 0


def cmd_points(args):
    a, b, c = _abc_params(args)
    table = point_table(a, b, c)
    payload = _base_payload(args, a=a, b=b, c=c)
    payload["strata"] = {
        label: [[_literal(x) for x in p.coords] for p in pts]
        for label, pts in table.strata.items()
    }
    payload["graph"] = [
        [[_literal(x) for x in p.coords], [_literal(x) for x in q.coords]]
        for p, q in table.graph()
    ]
    payload["distinct"] = table.all_distinct()
    _emit(payload, args.format)
    return 0 if table.all_distinct() else 1


def cmd_verify_gamma(args):
    alpha, beta, gamma = _alpha_params(args)
    a, b, c = _abc_params(args)
    report = verify_gamma(alpha, beta, gamma, a, b, c)
    payload = _base_payload(args, alpha=alpha, beta=beta, gamma=gamma, a=a, b=b, c=c)
    payload["report"] = report.as_dict()
    _emit(payload, args.format)
    return 0 if report.all_pass() else 1


def cmd_minors(args):
    if args.alpha is None:
        report = minor_factorization_report(symbolic=True)
        params = {"alpha": "symbolic", "beta": "symbolic", "gamma": "symbolic"}
    else:
        alpha, beta, gamma = _alpha_params(args)
        report = minor_factorization_report(symbolic=False, alpha=alpha,
                                            beta=beta, gamma=gamma)
        params = {"alpha": alpha, "beta": beta, "gamma": gamma}
    payload = _base_payload(args, **params)
    payload["factorizations"] = {
        f"h{i}{j}": {k: _literal(v) for k, v in entry.items()}
        for (i, j), entry in sorted(report.items())
    }
    _emit(payload, args.format)
    return 0


def cmd_autos(args):
    a, b, c = _abc_params(args)
    report = heisenberg_checks(a, b, c)
    table = point_table(a, b, c)
    psis = psi_maps(a, b, c)
    non_coord = [p for label in ("0", "1", "2", "3") for p in table.strata[label]]
    parts = orbits(non_coord, list(psis))
    payload = _base_payload(args, a=a, b=b, c=c)
    payload["group_relations"] = report.as_dict()
    payload["orbits"] = {
        "non_coordinate": [len(o) for o in parts],
        "coordinate_fixed": [len(o) for o in orbits(table.strata["inf"],
                                                    list(gamma_maps()))],
        "faithful": point_action_is_faithful(non_coord, psis[0], psis[1]),
    }
    _emit(payload, args.format)
    ok = report.all_pass() and payload["orbits"]["faithful"]
    return 0 if ok else 1


def cmd_chl(args):
    a, b, c, d = _abcd_params(args)
    payload = _base_payload(args, a=a, b=b, c=c, d=d)
    if args.chl_action == "classify":
        cls = classify_chl(a, b, c, d)
        payload["locus"] = cls.locus
        payload["excluded"] = cls.excluded
        if cls.special_alpha is not None:
            payload["special_alpha"] = _literal(cls.special_alpha)
        if cls.correspondence:
            corr = cls.correspondence
            payload["alpha"] = _literal(corr.alpha)
            payload["beta"] = _literal(corr.beta)
            payload["gamma"] = _literal(corr.gamma)
            payload["parameter_sum"] = _literal(corr.sigma_pi)
        if cls.vanishing:
            payload["vanishing_factors"] = list(cls.vanishing)
        _emit(payload, args.format)
        return 0
    if args.chl_action == "params":
        corr = chl_to_sklyanin_params(a, b, c, d)
        payload.update({
            "alpha": _literal(corr.alpha),
            "beta": _literal(corr.beta),
            "gamma": _literal(corr.gamma),
            "beta_presented": _literal(corr.beta_presented),
            "mu": _literal(corr.mu),
            "nu": _literal(corr.nu),
            "pqrs": _literal(corr.pqrs),
            "parameter_sum": _literal(corr.sigma_pi),
            "parameter_sum_presented": _literal(corr.sigma_pi_presented),
        })
        _emit(payload, args.format)
        return 0
    if args.chl_action == "center":
        x_form, z_form = chl_z1(a, b, c, d)
        ok1, fail1 = chl_z1_central(a, b, c, d)
        payload["Z1_x_basis"] = x_form.render(("x1", "x2", "x3", "x4"))
        payload["Z1_z_basis"] = z_form.render(("z0", "z1", "z2", "z3"))
        payload["Z1_central"] = ok1
        try:
            _, z2 = chl_z2(a, b, c, d)
            ok2, fail2 = chl_z2_central(a, b, c, d)
            payload["Z2_z_basis"] = z2.render(("z0", "z1", "z2", "z3"))
            payload["Z2_central"] = ok2
        except QuadralabError as exc:
            payload["Z2_central"] = None
            payload["Z2_note"] = str(exc)
            ok2 = True
        sym_ok = True
        if getattr(args, "symbolic", False):
            sym_ok = _symbolic_center_payload(payload)
        _emit(payload, args.format)
        return 0 if ok1 and ok2 and sym_ok else 1
    raise SystemExit2(f"unknown chl action {args.chl_action!r}")


def _symbolic_center_payload(payload) -> bool:
    """Certify Z1 and Z2 over the rational function field in a,b,c,d."""
    from .graded import GradedQuotient
    from .poly import FunctionField, PolyRing

    ring = PolyRing(("a", "b", "c", "d"))
    F = FunctionField(ring)
    a, b, c, d = F.gens()
    quotient = GradedQuotient(chl_z_relations(a, b, c, d, field=F, verify=False))
    z1_ok, _ = chl_z1_central(a, b, c, d, field=F, quotient=quotient)
    z2_ok, _ = chl_z2_central(a, b, c, d, field=F, quotient=quotient)
    payload["symbolic"] = {"Z1_central": z1_ok, "Z2_central": z2_ok}
    return z1_ok and z2_ok


def cmd_center(args):
    if args.abcd:
        return cmd_chl_center_alias(args)
    alpha, beta, gamma = _alpha_params(args)
    quotient = GradedQuotient(sklyanin_relations(alpha, beta, gamma))
    payload = _base_payload(args, alpha=alpha, beta=beta, gamma=gamma)
    x = generators()
    squares = {}
    for g in range(4):
        ok, _ = quotient.is_central(x[g] * x[g])
        squares[f"x{g}^2"] = ok
    payload["squares_central"] = squares
    try:
        om0, om1 = sklyanin_central_pair(alpha, beta, gamma)
        payload["pair_central"] = {
            "omega0": quotient.is_central(om0)[0],
            "omega1": quotient.is_central(om1)[0],
        }
    except QuadralabError as exc:
        payload["pair_central"] = {"note": str(exc)}
    _emit(payload, args.format)
    return 0


def cmd_chl_center_alias(args):
    args.chl_action = "center"
    return cmd_chl(args)


def cmd_identities(args):
    payload = {
        "version": __version__,
        "squares_suite": {f"{k[0]}@{k[1]}": v
                          for k, v in sorted(squares_identity_report().items())},
        "central_pair_suite": central_pair_identity_report(),
        "parameter_sum_suite": chl_identity_report(),
    }
    _emit(payload, args.format)
    ok = (all(payload["squares_suite"].values())
          and all(payload["central_pair_suite"].values())
          and all(payload["parameter_sum_suite"].values()))
    return 0 if ok else 1


def cmd_iso_invariants(args):
    alpha, beta, gamma = _alpha_params(args)
    space = sklyanin_relations(alpha, beta, gamma)
    table = invariant_table(alpha, beta, gamma)
    payload = _base_payload(args, alpha=alpha, beta=beta, gamma=gamma)
    rows = {}
    ok = True
    for perm in sorted(table):
        computed = angle_invariant(space, perm)
        match = computed == table[perm]
        ok = ok and match
        rows["".join(map(str, perm))] = {
            "computed": _literal(computed),
            "expected": _literal(table[perm]),
            "match": match,
        }
    payload["invariants"] = rows
    _emit(payload, args.format)
    return 0 if ok else 1


def cmd_selftest(args):
    results = run_acceptance(args.only or None)
    for r in results:
        print(r.line())
    if args.format == "json":
        print(json.dumps({"version": __version__,
                          "results": [r.as_dict() for r in results]}, indent=2))
    return 0 if all(r.passed for r in results) else 1


# ---------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="quadralab",
        description="exact verification toolkit for the quadratic algebra families "
                    "A(alpha,beta,gamma) and R(a,b,c,d)",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, alpha=False, abc=False, abcd=False, degree=False):
        p.add_argument("--format", choices=("table", "json"), default="table")
        p.add_argument("--force", action="store_true",
                       help=f"override the degree cap (default {DEFAULT_DEGREE_CAP}, "
                            "env QUADRALAB_DEGREE_CAP)")
        if alpha:
            p.add_argument("--alpha")
            p.add_argument("--beta")
            p.add_argument("--gamma")
        if abc:
            p.add_argument("--abc", help="square roots a,b,c as scalar literals")
        if abcd:
            p.add_argument("--abcd", help="parameters a,b,c,d as scalar literals")
        if degree:
            p.add_argument("--degree", type=int, default=4)
            p.add_argument("--mod-p", dest="mod_p", type=int, default=None,
                           help=f"modular backend prime (=1 mod 4), e.g. {DEFAULT_PRIME}")

    p = sub.add_parser("hilbert", help="graded dimensions of A(alpha,beta,gamma)")
    common(p, alpha=True, degree=True)
    p.set_defaults(fn=cmd_hilbert)

    p = sub.add_parser("points", help="the twenty-point table and its bijection")
    common(p, abc=True)
    p.set_defaults(fn=cmd_points)

    p = sub.add_parser("verify-gamma", help="four-assertion zero-locus verification")
    common(p, alpha=True, abc=True)
    p.set_defaults(fn=cmd_verify_gamma)

    p = sub.add_parser("minors", help="minor factorizations (symbolic without --alpha)")
    common(p, alpha=True)
    p.set_defaults(fn=cmd_minors)

    p = sub.add_parser("autos", help="automorphism group relations and orbits")
    common(p, abc=True)
    p.set_defaults(fn=cmd_autos)

    p = sub.add_parser("center", help="central elements of A (or R with --abcd)")
    common(p, alpha=True, abcd=True)
    p.add_argument("--symbolic", action="store_true",
                   help="with --abcd: also certify Z1/Z2 over the function field")
    p.set_defaults(fn=cmd_center)

    p = sub.add_parser("chl", help="the R(a,b,c,d) family")
    p.add_argument("chl_action", choices=("classify", "params", "center"))
    common(p, abcd=True)
    p.add_argument("--symbolic", action="store_true",
                   help="for center: also certify Z1/Z2 over the function field")
    p.set_defaults(fn=cmd_chl)

    p = sub.add_parser("identities", help="the free-algebra identity suite")
    common(p)
    p.set_defaults(fn=cmd_identities)

    p = sub.add_parser("iso-invariants", help="permutation invariants vs the table")
    common(p, alpha=True)
    p.set_defaults(fn=cmd_iso_invariants)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    common(p)
    p.add_argument("--only", nargs="*", help="criterion names, e.g. A1 A2")
    p.set_defaults(fn=cmd_selftest)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ScalarParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QuadralabError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
