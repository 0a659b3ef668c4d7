#
# Tests enumeration of monomial ideals
#
import hilbtan as ht
import unittest


class partitionsTest(unittest.TestCase):
    def test_counts(self):
        counts = [len(ht.enumerate_staircases(n)) for n in range(1, 6)]
        self.assertEqual(counts, [1, 3, 6, 13, 24])

    def test_colength_one_and_two(self):
        (I,) = ht.enumerate_monomial_ideals(1)
        self.assertEqual([str(g) for g in I.generators], ["z", "y", "x"])
        ideals = ht.enumerate_monomial_ideals(2)
        self.assertEqual(len(ideals), 3)
        for I in ideals:
            self.assertEqual(ht.colength(I), 2)

    def test_staircases_are_order_ideals(self):
        for cells in ht.enumerate_staircases(5):
            cells = set(cells)
            self.assertEqual(len(cells), 5)
            for c in cells:
                for i in range(3):
                    if c[i]:
                        self.assertIn(c[:i] + (c[i] - 1,) + c[i + 1 :], cells)

    def test_staircase_ideal(self):
        ring = ht.RingContext(("x", "y", "z"))
        cells = ((0, 0, 0), (0, 1, 0), (1, 0, 0))
        I = ht.staircase_ideal(ring, cells)
        qb = ht.standard_monomials(I.groebner_basis)
        self.assertEqual(set(qb.standard_monomials), set(cells))
        self.assertEqual(len(ht.addable_cells(cells)), 4)

    def test_deterministic_order(self):
        self.assertEqual(ht.enumerate_staircases(4), ht.enumerate_staircases(4))
        staircases = ht.enumerate_staircases(4)
        self.assertEqual(staircases, sorted(staircases))

    def test_bad_colength(self):
        with self.assertRaises(ValueError):
            ht.enumerate_staircases(0)


if __name__ == "__main__":
    unittest.main()
