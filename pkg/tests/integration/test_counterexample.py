#
# Test the colength 24 ideal with an odd dimensional tangent space
#
import hilbtan as ht
import io
import json
import numpy as np
import unittest
from contextlib import redirect_stdout
from hilbtan.cli import run as cli_run


class TestCounterexample(unittest.TestCase):
    @classmethod
    def setUpClass(self):
        self.I = ht.counterexample_ideal()
        self.report = ht.verify_counterexample()

    def test_expected_values(self):
        report = self.report
        self.assertEqual(report.colength, 24)
        self.assertEqual(report.tangent_total, 99)
        self.assertEqual(report.torus_weight0_dim, 1)
        self.assertTrue(report.parity_violation)
        self.assertEqual(report.min_gen_count, 8)
        self.assertEqual(report.torus_row, 1)
        self.assertEqual(sum(report.weight_marginal.values()), 99)

    def test_golden(self):
        self.assertEqual(ht.compare_golden(self.report, "odd24"), (True, []))
        data = ht.read_ideal("odd24")
        report = ht.build_report(data.ideal, data.torus_row)
        self.assertTrue(ht.compare_golden(report, "odd24")[0])

    def test_other_grading_and_order(self):
        report = ht.build_report(ht.counterexample_ideal(degrees=ht.NONNEG_DEGREES))
        self.assertEqual(report.colength, 24)
        self.assertEqual(report.tangent_total, 99)
        self.assertTrue(report.parity_violation)
        data = ht.read_ideal("odd24_nonneg")
        self.assertEqual(ht.hom_dim_graded(data.ideal).total, 99)
        I = ht.counterexample_ideal(order="lex")
        self.assertEqual(ht.colength(I), 24)
        self.assertEqual(ht.hom_dim_graded(I).total, 99)

    def test_conormal_solver_agrees(self):
        self.assertEqual(ht.hom_dim_conormal(self.I).total, 99)

    def test_weight_zero_vector(self):
        summary = ht.hom_dim_graded(self.I, assignments=True)
        zero = [a for a in summary.basis() if a.bidegree[1] == 0]
        self.assertEqual(len(zero), 1)
        (a,) = zero
        self.assertEqual(a.bidegree, (0, 0))
        self.assertTrue(ht.hom_element_check(self.I, a))
        ring = self.I.ring
        binomial = self.I.generators.index(ring.parse("y^3 - x^3*z"))
        for i, image in enumerate(a.images):
            if i != binomial:
                self.assertTrue(image.is_zero())
        image = a.images[binomial]
        target = ht.normal_form(ring.parse("x^3*z"), self.I.groebner_basis)
        self.assertFalse(image.is_zero())
        self.assertFalse(target.is_zero())
        ratio = image.leading_coefficient() / target.leading_coefficient()
        self.assertEqual(image, target.scale(ratio))

    def test_additivity(self):
        J = ht.extend_by_points(self.I, [(1, 0, 0)])
        self.assertEqual(ht.colength(J), 25)
        self.assertEqual(ht.tangent_dimension(J).total, 102)

    def test_added_points_keep_odd_parity(self):
        points = [(1, 0, 0), (0, 1, 0)]
        for k in (1, 2):
            report = ht.build_report(ht.extend_by_points(self.I, points[:k]))
            self.assertEqual(report.colength, 24 + k)
            self.assertEqual(report.tangent_total, 99 + 3 * k)
            self.assertTrue(report.parity_violation)
            self.assertIsNone(report.torus_row)

    def test_groebner_basis_is_unique(self):
        reference = self.I.groebner_basis
        rng = np.random.default_rng(0)
        gens = list(self.I.generators)
        for _ in range(50):
            order = rng.permutation(len(gens))
            shuffled = [gens[i].scale(int(rng.integers(1, 7))) for i in order]
            self.assertEqual(ht.Ideal(self.I.ring, shuffled).groebner_basis, reference)
            self.assertEqual(ht.buchberger(ht.Ideal(self.I.ring, shuffled)), reference)

    def test_quiver(self):
        r = ht.rep_from_ideal(self.I)
        X, Y, Z = r.matrices
        self.assertEqual(r.n, 24)
        for A, B in ((X, Y), (Y, Z), (Z, X)):
            self.assertTrue(ht.commutator(A, B).is_zero())
        self.assertTrue(ht.is_cyclic(r))
        self.assertEqual(ht.superpotential(r), 0)
        for m in ht.gradient_superpotential(r):
            self.assertTrue(m.is_zero())
        self.assertEqual(ht.critical_tangent_dim(r), 99)

    def test_cli_verify(self):
        out = io.StringIO()
        with redirect_stdout(out):
            code = cli_run(["verify", "--golden", "odd24"])
        self.assertEqual(code, 0)
        data = json.loads(out.getvalue())
        self.assertEqual(data["tangent_total"], 99)
        self.assertEqual(data["weight_marginal"]["0"], 1)


if __name__ == "__main__":
    unittest.main()
