#
# Tests one-form identities for semi-invariant functions
#
import hilbtan as ht
import unittest

try:
    import sympy
except ImportError:  # pragma: no cover
    sympy = None


class theoryTest(unittest.TestCase):
    def setUp(self):
        self.b = ht.RingContext(("b",))
        self.tb = ht.RingContext(("t", "b"))

    def test_differential(self):
        self.assertTrue(ht.differential(self.b.constant(5)).is_zero())
        db = ht.differential(self.b.parse("b^2"))
        self.assertEqual(db.coefficient("b"), self.b.parse("2*b"))
        d = ht.differential(self.tb.parse("t*b^2"))
        self.assertEqual(d.coefficient("t"), self.tb.parse("b^2"))
        self.assertEqual(d.coefficient("b"), self.tb.parse("2*t*b"))
        self.assertEqual(str(d), "(b^2)*dt + (2*t*b)*db")

    def test_localized_differential(self):
        loc = ht.localize_invert(self.tb, "t")
        f = loc.ring.parse("u*b")
        d = ht.differential(f, loc)
        self.assertEqual(d.variables, ("t", "b"))
        self.assertEqual(d.coefficient("t"), loc.ring.parse("-u^2*b"))
        self.assertEqual(d.coefficient("b"), loc.ring.parse("u"))

    def test_leibniz_rule(self):
        ring = ht.RingContext(("t", "b1", "b2"))
        f = ring.parse("t*b1^2 - b2 + 3")
        g = ring.parse("b1*b2 - t^2")
        lhs = ht.differential(f * g)
        rhs = ht.differential(g).multiply(f) + ht.differential(f).multiply(g)
        self.assertTrue((lhs - rhs).is_zero())

    def test_one_form_validation(self):
        with self.assertRaises(ValueError):
            ht.SymbolicOneForm(self.b, ("b", "c"), (self.b.one(),))
        with self.assertRaises(ValueError):
            ht.WeightedFunction(self.tb.parse("t*b"), 1)

    def test_splitting_identity(self):
        wf = ht.WeightedFunction(self.b.parse("b^2"), 1)
        self.assertTrue(ht.check_splitting_identity(wf))
        wf = ht.WeightedFunction(self.b.parse("b^2 + 1"), 0)
        self.assertTrue(ht.check_splitting_identity(wf))
        ring = ht.RingContext(("b1", "b2", "b3"))
        wf = ht.WeightedFunction(ring.parse("b1*b2 - b3^3"), 2)
        self.assertTrue(ht.check_splitting_identity(wf))
        for w in (-2, -1):
            self.assertTrue(ht.check_splitting_identity(ht.WeightedFunction(ring.parse("b1*b2 - b3^3"), w)))

    def test_critical_locus(self):
        result = ht.check_critical_locus_prop(ht.WeightedFunction(self.b.parse("b^2"), 1))
        self.assertEqual(result.status, "equal")
        self.assertTrue(result.equal)
        self.assertIsNone(result.secondary)
        self.assertEqual(result.critical, result.preimage)

        ring = ht.RingContext(("b1", "b2"))
        result = ht.check_critical_locus_prop(ht.WeightedFunction(ring.parse("b1^2 + b2^2"), 1))
        self.assertTrue(result.equal)

    def test_trivial_character(self):
        result = ht.check_critical_locus_prop(ht.WeightedFunction(self.b.parse("b^2 + 1"), 0))
        self.assertEqual(result.status, "unequal")
        self.assertTrue(result.preimage.is_unit())
        self.assertEqual(result.secondary, "equal")

    def test_random_family(self):
        for w in (-2, -1, 1, 2, 3):
            for wf in ht.random_weighted_functions(5, w, seed=0):
                self.assertEqual(wf.weight, w)
                self.assertTrue(ht.check_splitting_identity(wf))
                self.assertTrue(ht.check_critical_locus_prop(wf).equal)

    def test_random_family_is_seeded(self):
        a = [str(wf.fbar) for wf in ht.random_weighted_functions(5, 1, seed=3)]
        b = [str(wf.fbar) for wf in ht.random_weighted_functions(5, 1, seed=3)]
        self.assertEqual(a, b)

    def test_smooth_pullback(self):
        xy = ht.RingContext(("x", "y"))
        f = xy.parse("x^2*y - y^3")
        self.assertTrue(ht.check_smooth_pullback(f, {}))
        g = xy.parse("x^2")
        self.assertTrue(ht.check_smooth_pullback(g, {"x": xy.parse("x + y")}))
        self.assertTrue(
            ht.check_smooth_pullback(f, {"x": xy.parse("2*x - y + 1"), "y": xy.parse("x + y")})
        )
        self.assertTrue(ht.check_smooth_pullback(self.b.parse("b^2"), {}, target=self.tb))

    def test_unsupported_pullback(self):
        xy = ht.RingContext(("x", "y"))
        f = xy.parse("x^2")
        with self.assertRaises(ht.UnsupportedSubstitutionError):
            ht.check_smooth_pullback(f, {"x": xy.parse("x^2")})
        with self.assertRaises(ht.UnsupportedSubstitutionError):
            ht.check_smooth_pullback(f, {"x": xy.parse("x + y"), "y": xy.parse("x + y")})
        with self.assertRaises(ht.UnsupportedSubstitutionError):
            ht.check_smooth_pullback(f, {}, target=self.b)

    @unittest.skipIf(sympy is None, "sympy is not installed")
    def test_differential_against_sympy(self):
        ring = ht.RingContext(("t", "b1", "b2"))
        f = ring.parse("3*t^2*b1 - b1*b2^3 + 1/2*t*b2")
        expr = sympy.sympify(str(f).replace("^", "**"))
        d = ht.differential(f)
        for name in ring.variables:
            theirs = sympy.expand(sympy.diff(expr, sympy.Symbol(name)))
            ours = sympy.expand(sympy.sympify(str(d.coefficient(name)).replace("^", "**")))
            self.assertEqual(ours, theirs)


if __name__ == "__main__":
    unittest.main()
