#
# Verification reports for the tangent space of a point of Hilb^n(A^3)
#
import json
import os
import pathlib
import time as ticker
from dataclasses import dataclass
from dataclasses import field

import hilbtan as ht


BIGRADED_DEGREES = ((1, 2), (2, 1), (3, -3))
NONNEG_DEGREES = ((1, 0), (1, 1), (0, 3))

EXPECTED = {
    "colength": 24,
    "tangent_total": 99,
    "torus_weight0_dim": 1,
    "parity_violation": True,
}


def counterexample_ideal(order="grevlex", degrees=BIGRADED_DEGREES):
    """
    The ideal ((x^2) + (y, z)^2)^2 + (y^3 - x^3 z) of colength 24

    Parameters
    ----------
    order : str
        Monomial order, "grevlex" or "lex".
    degrees : tuple
        Degree vector of x, y and z. The default bigrading has the torus
        weights (2, 1, -3) in its second row.

    Returns
    -------
    Ideal
        The ideal with the ten generators of the expanded square followed
        by y^3 - x^3*z, duplicates removed.
    """
    ring = ht.RingContext(
        ("x", "y", "z"), ht.MultiGrading(degrees), ht.MonomialOrder(order)
    )
    inner = ht.Ideal(ring, ["x^2", "y^2", "y*z", "z^2"])
    return ht.ideal_sum(ht.ideal_product(inner, inner), ht.Ideal(ring, ["y^3 - x^3*z"]))


@dataclass
class VerificationReport:
    """
    Machine readable summary of one verification run

    ``weight_marginal`` maps a torus weight to the dimension of that weight
    space of the tangent space; it is empty for ideals that are not graded.
    ``timings`` are whole milliseconds per stage and are never compared.
    """

    colength: int
    tangent_total: int
    weight_marginal: dict
    torus_weight0_dim: int
    parity_violation: bool
    min_gen_count: int
    timings: dict = field(default_factory=dict)
    torus_row: int = None

    def to_dict(self):
        return {
            "colength": self.colength,
            "tangent_total": self.tangent_total,
            "weight_marginal": {str(k): v for k, v in self.weight_marginal.items()},
            "torus_weight0_dim": self.torus_weight0_dim,
            "parity_violation": self.parity_violation,
            "min_gen_count": self.min_gen_count,
            "torus_row": self.torus_row,
            "timings": dict(self.timings),
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            colength=data["colength"],
            tangent_total=data["tangent_total"],
            weight_marginal={int(k): v for k, v in data["weight_marginal"].items()},
            torus_weight0_dim=data["torus_weight0_dim"],
            parity_violation=data["parity_violation"],
            min_gen_count=data["min_gen_count"],
            timings=data.get("timings", {}),
            torus_row=data.get("torus_row"),
        )

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def _ms(tic):
    return int(round((ticker.time() - tic) * 1000))


def build_report(I, torus_row=None):
    """
    Colength, tangent dimension and torus weights of an ideal

    Homogeneous ideals whose grading has a heft vector go through the
    graded solver and get a weight marginal on ``torus_row``. Any other
    ideal of finite colength goes through the conormal solver.

    Parameters
    ----------
    I : Ideal
        Ideal of finite colength.
    torus_row : int
        Grading row carrying the torus weights, by default the last row.

    Returns
    -------
    VerificationReport

    Raises
    ------
    DegenerateIdealError
        For the zero ideal and the unit ideal.
    InfiniteQuotientError
        When S/I is not finite dimensional.
    """
    timings = {}
    if I.is_zero():
        raise ht.DegenerateIdealError("The zero ideal has no finite quotient")
    tic = ticker.time()
    gb = I.groebner_basis
    timings["groebner"] = _ms(tic)
    if gb.is_unit():
        raise ht.DegenerateIdealError("The unit ideal has an empty quotient")
    ht.logger.notice(f"Groebner basis with {len(gb)} elements")

    tic = ticker.time()
    colength = ht.standard_monomials(gb).colength
    timings["quotient"] = _ms(tic)
    ht.logger.notice(f"Colength {colength}")

    graded = I.is_homogeneous() and ht.heft_check(I.ring.grading) is not None
    tic = ticker.time()
    if graded:
        min_gen_count = len(ht.min_gens(I))
    else:
        min_gen_count = len(ht.irredundant_generators(I))
    timings["min_gens"] = _ms(tic)

    tic = ticker.time()
    if graded:
        summary = ht.hom_dim_graded(I, torus_row)
        marginal = ht.weight_marginal(summary, summary.torus_row)
        torus_row = summary.torus_row
    else:
        summary = ht.hom_dim_conormal(I)
        marginal = {}
        torus_row = None
    timings["tangent"] = _ms(tic)
    ht.logger.notice(f"Tangent space of dimension {summary.total}")

    return VerificationReport(
        colength=colength,
        tangent_total=summary.total,
        weight_marginal=marginal,
        torus_weight0_dim=marginal.get(0, 0),
        parity_violation=(summary.total - colength) % 2 == 1,
        min_gen_count=min_gen_count,
        timings=timings,
        torus_row=torus_row,
    )


def verify_counterexample(I=None, torus_row=None, expected=None):
    """
    Run the verification pipeline and check the expected values

    Parameters
    ----------
    I : Ideal
        The ideal, by default the colength 24 ideal from ``counterexample_ideal``.
    torus_row : int
        Grading row carrying the torus weights.
    expected : dict
        Report keys to their expected values. Defaults to ``EXPECTED`` for
        the built-in ideal and to no check for a given ideal.

    Returns
    -------
    VerificationReport

    Raises
    ------
    VerificationError
        Listing every expected value the report does not match.
    """
    if I is None:
        I = counterexample_ideal()
        if expected is None:
            expected = EXPECTED
    report = build_report(I, torus_row)
    if expected:
        computed = report.to_dict()
        mismatches = [
            (key, value, computed.get(key))
            for key, value in expected.items()
            if computed.get(key) != value
        ]
        if mismatches:
            raise ht.VerificationError(mismatches)
        ht.logger.success(
            "Verified " + ", ".join(f"{k} = {v}" for k, v in expected.items())
        )
    return report


def _load_golden(golden):
    if isinstance(golden, dict):
        return golden
    path = str(golden)
    if not os.path.isfile(path):
        if "." not in os.path.basename(path):
            path += ".json"
        if not os.path.isfile(path):
            path = os.path.join(ht.GOLDEN_DIR, path)
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


def compare_golden(report, golden):
    """
    Compare a report with a stored golden report

    Every key of the golden except ``timings`` must be present in the
    report with exactly the same value, so a golden may pin a subset of the
    report.

    Parameters
    ----------
    report : VerificationReport or dict
        The fresh report.
    golden : str, pathlib.Path or dict
        Path of a JSON report, a bare name in the bundled golden directory
        such as "odd24", or an already loaded report.

    Returns
    -------
    tuple
        (True if all compared keys agree, sorted list of offending keys).

    Raises
    ------
    FileNotFoundError, ValueError
        When the golden cannot be read.
    """
    data = report.to_dict() if isinstance(report, VerificationReport) else report
    gold = _load_golden(golden)
    if "weight_marginal" in gold:
        gold = dict(gold, weight_marginal={str(k): v for k, v in gold["weight_marginal"].items()})
    bad = sorted(
        key for key, value in gold.items() if key != "timings" and data.get(key) != value
    )
    if bad:
        ht.logger.warning("Golden mismatch in " + ", ".join(bad))
    return not bad, bad


def save_report(report, path):
    """Write a report as JSON, creating the parent directory."""
    path = pathlib.Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(report.to_json())
        f.write("\n")
