#
# Command line interface
#
import argparse
import json
import sys

import hilbtan as ht


def _ideal_from_args(args, required=True):
    if args.input is None:
        if required:
            raise ValueError("This command needs --input")
        return ht.counterexample_ideal(args.order or "grevlex"), None
    data = ht.read_ideal(args.input, order=args.order)
    return data.ideal, data.torus_row


def _verify(args):
    if args.input is None:
        I = ht.counterexample_ideal(args.order or "grevlex")
        return ht.verify_counterexample(I, expected=ht.EXPECTED).to_dict()
    if args.golden is None:
        raise ValueError("verify --input needs --golden with the expected values")
    I, torus_row = _ideal_from_args(args)
    return ht.verify_counterexample(I, torus_row).to_dict()


def _tangent(args):
    I, torus_row = _ideal_from_args(args)
    return ht.build_report(I, torus_row).to_dict()


def _gb(args):
    I, _ = _ideal_from_args(args)
    gb = I.groebner_basis
    return {
        "generators": [str(g) for g in I.generators],
        "groebner_basis": [str(g) for g in gb],
        "order": I.ring.order.kind,
    }


def _parity_scan(args):
    report = ht.parity_scan(args.max_n, args.manager, args.nproc, check=False)
    bad = report[~(report["agree"] & report["parity_ok"])]
    counts = report.groupby("n").size()
    out = {
        "max_n": args.max_n,
        "ideals": len(report),
        "counts": {str(n): int(c) for n, c in counts.items()},
        "failures": [str(g) for g in bad["generators"]],
    }
    if len(bad):
        out["status"] = "failed"
    else:
        out["status"] = "ok"
    return out


def _quiver_check(args):
    I, _ = _ideal_from_args(args, required=False)
    r = ht.rep_from_ideal(I)
    X, Y, Z = r.matrices
    checks = {
        "n": r.n,
        "commuting": all(
            ht.commutator(A, B).is_zero() for A, B in ((X, Y), (Y, Z), (Z, X))
        ),
        "cyclic": ht.is_cyclic(r),
        "superpotential_zero": ht.superpotential(r) == 0,
        "gradient_zero": all(m.is_zero() for m in ht.gradient_superpotential(r)),
    }
    weights = {}
    for name, w in (("T0", ht.TORUS_T0), ("G", ht.TORUS_G), ("H", ht.TORUS_H)):
        reps = ht.random_reps(args.count, 3, seed=args.seed)
        held = [ht.check_torus_weights(rep, w)[0] for rep in reps]
        weights[name] = {"weight": w.weight, "holds": sum(held), "cases": len(held)}
    checks["torus_weights"] = weights
    ok = all(v for k, v in checks.items() if isinstance(v, bool))
    ok = ok and all(v["holds"] == v["cases"] for v in weights.values())
    checks["status"] = "ok" if ok else "failed"
    return checks


def _theory_check(args):
    weights = (-2, -1, 1, 2, 3)
    splitting = 0
    critical = 0
    cases = 0
    for w in weights:
        for wf in ht.random_weighted_functions(args.count, w, seed=args.seed):
            cases += 1
            splitting += ht.check_splitting_identity(wf)
            critical += ht.check_critical_locus_prop(wf).equal
    ring = ht.RingContext(("b",))
    trivial = ht.check_critical_locus_prop(
        ht.WeightedFunction(ht.parse_polynomial("b^2 + 1", ring), 0)
    )
    ok = splitting == cases and critical == cases and not trivial.equal
    return {
        "weights": list(weights),
        "cases": cases,
        "splitting_identity": splitting,
        "critical_locus_equal": critical,
        "trivial_character": trivial.status,
        "status": "ok" if ok else "failed",
    }


COMMANDS = {
    "verify": _verify,
    "tangent": _tangent,
    "gb": _gb,
    "parity-scan": _parity_scan,
    "quiver-check": _quiver_check,
    "theory-check": _theory_check,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="Ideal file or bundled name, e.g. odd24")
    common.add_argument("--order", choices=["grevlex", "lex"], default=None)
    common.add_argument("--json", dest="json_path", help="Also write the report here")
    common.add_argument("--golden", help="Golden report to compare with")
    common.add_argument("--log-level", default="WARNING")

    parser = argparse.ArgumentParser(
        prog="hilbtan",
        description="Exact tangent spaces to Hilbert schemes of points in A^3",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser(
        "verify",
        parents=[common],
        help="Check the colength 24 ideal, or an --input ideal against --golden",
    )
    sub.add_parser("tangent", parents=[common], help="Report on an ideal file")
    sub.add_parser("gb", parents=[common], help="Reduced Groebner basis")
    scan = sub.add_parser("parity-scan", parents=[common], help="Monomial ideals")
    scan.add_argument("--max-n", type=int, default=5)
    scan.add_argument("--manager", choices=["serial", "ray"], default="serial")
    scan.add_argument("--nproc", type=int, default=1)
    quiver = sub.add_parser("quiver-check", parents=[common], help="Superpotential")
    quiver.add_argument("--count", type=int, default=20)
    quiver.add_argument("--seed", type=int, default=0)
    theory = sub.add_parser("theory-check", parents=[common], help="One-form identities")
    theory.add_argument("--count", type=int, default=25)
    theory.add_argument("--seed", type=int, default=0)
    return parser


def run(argv=None):
    """
    Run one subcommand and print its JSON report

    Args:
        argv (list):
            Arguments without the program name, by default ``sys.argv[1:]``.

    Returns:
        int:
            0 on success, 1 when a verification, check or golden comparison
            fails, 2 on an input error.

    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else 2
    ht.log_to_console()
    try:
        ht.set_logging_level(args.log_level.upper())
    except ValueError as err:
        ht.logger.error(str(err))
        return 2

    try:
        out = COMMANDS[args.command](args)
        text = json.dumps(out, sort_keys=True, indent=2, default=str)
        sys.stdout.write(text + "\n")
        if args.json_path:
            with open(args.json_path, "w", encoding="utf-8") as f:
                f.write(text + "\n")
        if out.get("status") == "failed":
            ht.logger.error(f"{args.command} failed")
            return 1
        if args.golden:
            ok, keys = ht.compare_golden(out, args.golden)
            if not ok:
                ht.logger.error("Golden mismatch: " + ", ".join(keys))
                return 1
            ht.logger.success("Report matches the golden")
    except ht.VerificationError as err:
        ht.logger.error(str(err))
        return 1
    except (ValueError, FileNotFoundError) as err:
        ht.logger.error(str(err))
        return 2
    return 0


def main():
    sys.exit(run())
