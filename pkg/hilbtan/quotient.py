#
# Standard monomials of S/I and graded pieces of homogeneous ideals
#
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

import hilbtan as ht
from hilbtan.polynomials import Polynomial
from hilbtan.polynomials import monomial_mul


class QuotientBasis:
    """
    Standard-monomial basis of S/I

    Args:
        gb (GroebnerBasis):
            Reduced Groebner basis of I.
        monomials (list):
            The standard monomials, in increasing monomial order.

    """

    def __init__(self, gb, monomials):
        self.gb = gb
        self.ring = gb.ring
        self.standard_monomials = tuple(monomials)
        self.index = {m: i for i, m in enumerate(self.standard_monomials)}
        grading = self.ring.grading
        self.bidegrees = tuple(ht.multidegree(m, grading) for m in self.standard_monomials)

    @property
    def colength(self):
        return len(self.standard_monomials)

    def __len__(self):
        return self.colength

    def __repr__(self):
        return f"QuotientBasis(colength={self.colength})"

    def sparse_coordinates(self, f):
        """Coordinates of the class of f as ``{basis index: coefficient}``."""
        return ht.normal_form(f, self.gb).vector(self.index)

    def coordinates(self, f):
        """Coordinates of the class of f as a tuple of Fractions."""
        v = [Fraction(0)] * self.colength
        for i, c in self.sparse_coordinates(f).items():
            v[i] = c
        return tuple(v)

    def element(self, coordinates):
        """Polynomial representative of a coordinate vector."""
        if isinstance(coordinates, dict):
            items = coordinates.items()
        else:
            items = enumerate(coordinates)
        terms = {self.standard_monomials[i]: c for i, c in items if c != 0}
        return Polynomial(self.ring, terms)

    def multiplication_matrix(self, var):
        """
        Matrix of multiplication by a variable on S/I

        Args:
            var (str or int):
                Variable name or index.

        Returns:
            RationalMatrix:
                Column j holds the coordinates of var times the j-th
                standard monomial.

        """
        i = var if isinstance(var, int) else self.ring.index(var)
        unit = self.ring.unit(i)
        columns = [
            self.coordinates(self.ring.monomial(monomial_mul(m, unit)))
            for m in self.standard_monomials
        ]
        return ht.RationalMatrix.from_columns(columns, self.colength)


def standard_monomials(gb, bound=10**6):
    """
    Enumerate the monomials outside the leading-term staircase

    Breadth-first search from 1, pruning multiples of leading monomials.

    Args:
        gb (GroebnerBasis):
            Reduced Groebner basis of I.
        bound (int):
            Give up after this many standard monomials.

    Returns:
        QuotientBasis

    Raises:
        InfiniteQuotientError: if S/I is not finite dimensional.

    """
    ring = gb.ring
    n = ring.nvars
    if gb.is_unit():
        return QuotientBasis(gb, [])
    for i in range(n):
        if not any(
            lm[i] > 0 and sum(lm) == lm[i] for lm in gb.leading_monomials
        ):
            raise ht.InfiniteQuotientError(
                f"No power of {ring.variables[i]} is a leading monomial, "
                + "the quotient is infinite dimensional"
            )
    one = (0,) * n
    seen = {one}
    queue = deque([one])
    found = []
    while queue:
        m = queue.popleft()
        found.append(m)
        if len(found) > bound:
            raise ht.InfiniteQuotientError(
                f"More than {bound} standard monomials, giving up"
            )
        for i in range(n):
            mm = m[:i] + (m[i] + 1,) + m[i + 1 :]
            if mm not in seen and gb.is_standard(mm):
                seen.add(mm)
                queue.append(mm)
    found.sort(key=ring.order.key)
    ht.logger.verbose(f"Quotient has {len(found)} standard monomials")
    return QuotientBasis(gb, found)


def colength(I, bound=10**6):
    """Dimension of S/I as a vector space."""
    return standard_monomials(I.groebner_basis, bound).colength


def bidegree_support(qb, g):
    """
    Multidegrees of the standard monomials, with multiplicity

    Args:
        qb (QuotientBasis):
            The quotient basis.
        g (MultiGrading):
            The grading.

    Returns:
        list:
            Sorted multidegrees, one per standard monomial.

    """
    return sorted(ht.multidegree(m, g) for m in qb.standard_monomials)


@dataclass
class GradedPiece:
    """
    Basis of the degree e part of a homogeneous ideal

    ``vectors`` are kernel vectors of the normal-form map in the monomial
    basis of S_e. Vector k has a 1 in column ``key_columns[k]`` and 0 in the
    other key columns, so the coordinates of any element of I_e are its
    entries at the key columns.

    """

    degree: tuple
    monomials: tuple
    index: dict
    vectors: list
    key_columns: list
    elements: list

    @property
    def dim(self):
        return len(self.vectors)

    def polynomials(self):
        return list(self.elements)

    def coordinates(self, f):
        """Coordinates in this basis of a polynomial of I_e."""
        row = f.vector(self.index)
        return [row.get(j, Fraction(0)) for j in self.key_columns]


class GradedPieces:
    """
    Graded pieces I_e and normal forms of monomials, cached per degree

    Args:
        gb (GroebnerBasis):
            Reduced Groebner basis of a homogeneous ideal.

    Raises:
        NotHomogeneousError: if a basis element is not homogeneous.
        NoHeftVectorError: if the grading has no heft vector.

    """

    def __init__(self, gb):
        self.gb = gb
        self.ring = gb.ring
        self.grading = gb.ring.grading
        for g in gb:
            if ht.is_homogeneous(g, self.grading) is None:
                raise ht.NotHomogeneousError("The ideal is not homogeneous")
        self.heft = ht.heft_check(self.grading)
        if self.heft is None:
            raise ht.NoHeftVectorError("The grading has no heft vector")
        self._normal_forms = {}
        self._pieces = {}

    def monomials(self, e):
        return ht.monomials_of_degree(e, self.grading, self.heft)

    def normal_form_monomial(self, m):
        nf = self._normal_forms.get(m)
        if nf is None:
            nf = ht.normal_form(self.ring.monomial(m), self.gb)
            self._normal_forms[m] = nf
        return nf

    def piece(self, e):
        e = tuple(e)
        if e in self._pieces:
            return self._pieces[e]
        basis = self.monomials(e)
        index = {m: j for j, m in enumerate(basis)}
        rows = {}
        standard = 0
        for j, m in enumerate(basis):
            if self.gb.is_standard(m):
                standard += 1
            for mm, c in self.normal_form_monomial(m).items():
                rows.setdefault(mm, {})[j] = c
        form = ht.echelon(rows.values(), len(basis))
        # dim I_e = dim S_e - dim (S/I)_e
        if form.rank != standard:
            mismatch = (f"rank of normal forms in degree {e}", standard, form.rank)
            raise ht.VerificationError([mismatch])
        vectors = form.kernel()
        free = [j for j in range(len(basis)) if j not in form.pivot_rows]
        elements = [
            Polynomial(self.ring, {basis[j]: c for j, c in enumerate(v) if c})
            for v in vectors
        ]
        piece = GradedPiece(e, basis, index, vectors, free, elements)
        self._pieces[e] = piece
        return piece


def graded_piece_of_ideal(I, e):
    """
    Basis of I intersected with S_e

    Args:
        I (Ideal):
            Homogeneous ideal.
        e (tuple):
            The multidegree.

    Returns:
        list:
            Polynomials forming a basis of I_e, empty when I_e = 0.

    Raises:
        NotHomogeneousError: if I is not homogeneous.
        NoHeftVectorError: if the grading has no heft vector.

    """
    if not I.is_homogeneous():
        raise ht.NotHomogeneousError("The ideal is not homogeneous")
    return GradedPieces(I.groebner_basis).piece(e).polynomials()
