#
# Tests rings, monomial orders, gradings and polynomial arithmetic
#
import hilbtan as ht
import numpy as np
import unittest
from unittest import mock
from fractions import Fraction


BIGRADED = ht.MultiGrading(((1, 2), (2, 1), (3, -3)))


class polynomialsTest(unittest.TestCase):
    def setUp(self):
        self.ring = ht.RingContext(("x", "y", "z"), BIGRADED)

    def test_ring_validation(self):
        with self.assertRaises(ValueError):
            ht.RingContext(("x", "x"))
        with self.assertRaises(ValueError):
            ht.RingContext(("1x",))
        with self.assertRaises(ValueError):
            ht.RingContext(("x", "y"), BIGRADED)
        with self.assertRaises(ht.UnknownVariableError):
            self.ring.index("w")

    def test_multidegree(self):
        self.assertEqual(ht.multidegree((1, 0, 0), BIGRADED), (1, 2))
        self.assertEqual(ht.multidegree((0, 0, 0), BIGRADED), (0, 0))
        self.assertEqual(ht.multidegree((0, 3, 0), BIGRADED), (6, 3))
        self.assertEqual(ht.multidegree((3, 0, 1), BIGRADED), (6, 3))

    def test_multidegree_is_additive(self):
        rng = np.random.default_rng(1)
        for _ in range(20):
            a = tuple(int(x) for x in rng.integers(0, 5, size=3))
            b = tuple(int(x) for x in rng.integers(0, 5, size=3))
            ab = tuple(x + y for x, y in zip(a, b))
            da, db = ht.multidegree(a, BIGRADED), ht.multidegree(b, BIGRADED)
            self.assertEqual(ht.multidegree(ab, BIGRADED), tuple(x + y for x, y in zip(da, db)))

    def test_compare(self):
        grevlex = ht.MonomialOrder("grevlex")
        lex = ht.MonomialOrder("lex")
        self.assertEqual(ht.compare((1, 2, 0), (1, 2, 0), grevlex), 0)
        self.assertEqual(ht.compare((1, 0), (0, 100), lex), 1)
        self.assertEqual(ht.compare((2, 1, 0), (1, 2, 0), grevlex), 1)
        self.assertEqual(ht.compare((1, 0, 1), (0, 2, 0), grevlex), -1)
        with self.assertRaises(ValueError):
            ht.compare((1, 0), (1, 0, 0), lex)

    def test_order_is_total_and_multiplicative(self):
        rng = np.random.default_rng(2)
        orders = [
            ht.MonomialOrder("lex"),
            ht.MonomialOrder("grevlex"),
            ht.MonomialOrder("weighted", (1, 2, 3)),
        ]
        for o in orders:
            for _ in range(30):
                a, b, c = (tuple(int(x) for x in rng.integers(0, 4, size=3)) for _ in range(3))
                self.assertEqual(ht.compare(a, b, o), -ht.compare(b, a, o))
                ac = tuple(x + y for x, y in zip(a, c))
                bc = tuple(x + y for x, y in zip(b, c))
                self.assertEqual(ht.compare(ac, bc, o), ht.compare(a, b, o))
                if any(a):
                    self.assertEqual(ht.compare(a, (0, 0, 0), o), 1)

    def test_weighted_order_validation(self):
        with self.assertRaises(ValueError):
            ht.MonomialOrder("weighted", (1, 0, 2))
        with self.assertRaises(ValueError):
            ht.MonomialOrder("revlex")

    def test_is_homogeneous(self):
        f = self.ring.parse("y^3 - x^3*z")
        self.assertEqual(ht.is_homogeneous(f, BIGRADED), (6, 3))
        standard = ht.RingContext(("x", "y"))
        g = standard.parse("x + y")
        self.assertEqual(ht.is_homogeneous(g, standard.grading), (1,))
        self.assertIsNone(ht.is_homogeneous(standard.parse("x + y^2"), standard.grading))
        self.assertIs(ht.is_homogeneous(standard.zero(), standard.grading), ht.ANY_DEGREE)

    def test_heft_check(self):
        self.assertIsNone(ht.heft_check(ht.MultiGrading(((2,), (1,), (-3,)))))
        self.assertEqual(ht.heft_check(BIGRADED), (1, 0))
        self.assertEqual(ht.heft_check(ht.MultiGrading.standard(3)), (1,))
        h = ht.heft_check(ht.MultiGrading(((1, 0), (1, 1), (0, 3))))
        assert all(sum(a * b for a, b in zip(h, d)) > 0 for d in ((1, 0), (1, 1), (0, 3)))

    def test_heft_check_elimination(self):
        # five rows skip the small box search
        g = ht.MultiGrading(((1, -5, 0, 0, 0), (0, 1, -7, 0, 0), (0, 0, 1, 0, 9)))
        h = ht.heft_check(g)
        assert all(sum(a * b for a, b in zip(h, d)) > 0 for d in g.degrees)
        bad = ht.MultiGrading(((1, 0, 0, 0, 0), (-1, 0, 0, 0, 0)))
        self.assertIsNone(ht.heft_check(bad))

    def test_heft_check_rejects_bad_elimination(self):
        g = ht.MultiGrading(((2, 0, 0, 0, 0), (1, 3, 0, 0, 0)))
        point = (Fraction(-1), Fraction(0), Fraction(0), Fraction(0), Fraction(0))
        with mock.patch("hilbtan.polynomials._fourier_motzkin", return_value=point):
            with self.assertRaises(ht.VerificationError):
                ht.heft_check(g)
        ht.heft_check.cache_clear()
        h = ht.heft_check(g)
        assert all(sum(a * b for a, b in zip(h, d)) > 0 for d in g.degrees)

    def test_monomials_of_degree(self):
        self.assertEqual(
            ht.monomials_of_degree((6, 3), BIGRADED), ((0, 3, 0), (3, 0, 1))
        )
        self.assertEqual(ht.monomials_of_degree((0, 0), BIGRADED), ((0, 0, 0),))
        self.assertEqual(ht.monomials_of_degree((-1, 0), BIGRADED), ())
        with self.assertRaises(ht.NoHeftVectorError):
            ht.monomials_of_degree((0,), ht.MultiGrading(((2,), (1,), (-3,))))

    def test_monomials_of_degree_are_exact(self):
        heft = ht.heft_check(BIGRADED)
        for e in ((4, 5), (6, 3), (7, 2), (9, 0)):
            found = ht.monomials_of_degree(e, BIGRADED)
            for m in found:
                self.assertEqual(ht.multidegree(m, BIGRADED), e)
            bound = sum(a * b for a, b in zip(heft, e))
            brute = [
                (a, b, c)
                for a in range(bound + 1)
                for b in range(bound + 1)
                for c in range(bound + 1)
                if ht.multidegree((a, b, c), BIGRADED) == e
            ]
            self.assertEqual(list(found), sorted(brute))

    def test_arithmetic(self):
        x, y, z = self.ring.gens()
        f = (x + y) ** 2 - x**2 - 2 * x * y
        self.assertEqual(f, y**2)
        self.assertEqual(x - x, 0)
        self.assertEqual((x + 1) * (x - 1), x**2 - 1)
        self.assertEqual(str(3 * x * y.scale(Fraction(1, 4))), "3/4*x*y")
        self.assertEqual(str(y**3 - x**3 * z), "-x^3*z + y^3")
        self.assertEqual((2 * x + 4 * y).primitive(), x + 2 * y)
        self.assertEqual((-2 * x + 4 * y).monic(), x - 2 * y)
        with self.assertRaises(ValueError):
            _ = x ** -1

    def test_leading_terms(self):
        f = self.ring.parse("y^3 - x^3*z")
        self.assertEqual(f.leading_monomial(), (3, 0, 1))
        self.assertEqual(f.leading_coefficient(), -1)
        lex = self.ring.with_order(ht.MonomialOrder("lex"))
        g = lex.parse("y^3 - x^3*z")
        self.assertEqual(g.leading_monomial(), (3, 0, 1))
        h = lex.parse("x + y^10")
        self.assertEqual(h.leading_monomial(), (1, 0, 0))
        with self.assertRaises(ValueError):
            self.ring.zero().leading_monomial()

    def test_derivative_and_substitution(self):
        x, y, z = self.ring.gens()
        f = x**2 * y + 3 * z
        self.assertEqual(f.derivative("x"), 2 * x * y)
        self.assertEqual(f.derivative(2), self.ring.constant(3))
        self.assertEqual(f.substitute({"x": y}), y**3 + 3 * z)
        self.assertEqual(f.evaluate({"x": 1, "y": 2, "z": Fraction(1, 3)}), 3)
        self.assertEqual(f.evaluate((2, 1, 0)), 4)
        big = ht.RingContext(("t", "x", "y", "z"))
        self.assertEqual(str(f.to_ring(big)), "x^2*y + 3*z")

    def test_leibniz_rule(self):
        x, y, z = self.ring.gens()
        f = x**2 * y - z + 1
        g = y * z**2 + x
        for v in ("x", "y", "z"):
            self.assertEqual(
                (f * g).derivative(v), f * g.derivative(v) + g * f.derivative(v)
            )

    def test_mixed_rings(self):
        other = ht.RingContext(("x", "y", "z"))
        with self.assertRaises(ValueError):
            _ = self.ring.gen("x") + other.gen("x")


if __name__ == "__main__":
    unittest.main()
