#
# Tests the polynomial expression parser
#
import hilbtan as ht
import numpy as np
import unittest
from fractions import Fraction


class parserTest(unittest.TestCase):
    def setUp(self):
        self.ring = ht.RingContext(("x", "y", "z"))

    def test_parse(self):
        x, y, z = self.ring.gens()
        f = ht.parse_polynomial("y^3 - x^3*z", self.ring)
        self.assertEqual(f, y**3 - x**3 * z)
        self.assertEqual(len(f), 2)
        self.assertTrue(ht.parse_polynomial("0", self.ring).is_zero())
        self.assertEqual(ht.parse_polynomial("(x+y)^2 - x^2 - 2*x*y", self.ring), y**2)

    def test_literals_and_signs(self):
        x, y, _ = self.ring.gens()
        self.assertEqual(
            ht.parse_polynomial("3/4*x - -y", self.ring), x.scale(Fraction(3, 4)) + y
        )
        self.assertEqual(ht.parse_polynomial("-(x - 1)^0", self.ring), -1)
        self.assertEqual(ht.parse_polynomial("  2 * x ^ 2 ", self.ring), 2 * x**2)

    def test_syntax_errors(self):
        with self.assertRaises(ht.ParseError) as cm:
            ht.parse_polynomial("2x + y", self.ring)
        self.assertEqual(cm.exception.position, 1)
        for text in ("", "x +", "(x + y", "x $ y", "x^2^3", "x^(2)", "x^1/2", "1/0"):
            with self.assertRaises(ht.ParseError):
                ht.parse_polynomial(text, self.ring)

    def test_ascii_digits_only(self):
        with self.assertRaises(ht.ParseError) as cm:
            ht.parse_polynomial("\u0663*x", self.ring)
        self.assertEqual(cm.exception.position, 0)
        with self.assertRaises(ht.ParseError):
            ht.parse_polynomial("x^\u0662", self.ring)

    def test_unknown_variable(self):
        with self.assertRaises(ht.UnknownVariableError) as cm:
            ht.parse_polynomial("x + w", self.ring)
        self.assertEqual(cm.exception.position, 4)

    def test_negative_exponent(self):
        with self.assertRaises(ht.NegativeExponentError):
            ht.parse_polynomial("x^-2", self.ring)

    def test_print_round_trip(self):
        rng = np.random.default_rng(3)
        for _ in range(25):
            terms = {}
            for _ in range(int(rng.integers(0, 5))):
                m = tuple(int(e) for e in rng.integers(0, 4, size=3))
                num = int(rng.integers(-9, 10))
                den = int(rng.integers(1, 5))
                terms[m] = Fraction(num, den)
            f = ht.Polynomial(self.ring, terms)
            self.assertEqual(ht.parse_polynomial(str(f), self.ring), f)


if __name__ == "__main__":
    unittest.main()
