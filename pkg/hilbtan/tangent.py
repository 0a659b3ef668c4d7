#
# Tangent spaces Hom(I, S/I) to the Hilbert scheme of points
#
import time as ticker
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction

from tqdm import tqdm

import hilbtan as ht
from hilbtan.polynomials import monomial_div
from hilbtan.polynomials import monomial_lcm
from hilbtan.polynomials import monomial_mul


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


@dataclass
class HomAssignment:
    """
    An S-linear map I -> S/I given on generators

    Args:
        images (list):
            One polynomial per stored generator of I, in normal form.
        bidegree (tuple):
            Multidegree d of the map when it is homogeneous: the image of a
            generator of degree e lies in degree e + d.

    """

    images: list
    bidegree: tuple = None

    def is_zero(self):
        return all(not f for f in self.images)


@dataclass
class GradedHomSummary:
    """
    Dimensions of Hom(I, S/I) by multidegree

    ``per_bidegree`` only lists nonzero dimensions. Summaries of ungraded
    computations hold a single entry under the empty tuple.

    """

    per_bidegree: dict
    torus_row: int = None
    rows: int = 1
    graded: bool = True
    assignments: dict = field(default_factory=dict)

    @property
    def total(self):
        return sum(self.per_bidegree.values())

    def basis(self):
        """All returned HomAssignments, by increasing bidegree."""
        return [a for d in sorted(self.assignments) for a in self.assignments[d]]


class GradedHomSolver:
    """
    Degree by degree linear solver for Hom(I, S/I)

    For a candidate degree d the unknowns are the maps I_e -> (S/I)_{e+d}
    for the window of degrees e where both sides are nonzero. The
    constraints say that every map commutes with multiplication by each
    variable. Normal forms, graded pieces and multiplication tables are
    cached across degrees.

    Args:
        I (Ideal):
            Homogeneous ideal of finite colength.

    """

    def __init__(self, I):
        if not I.is_homogeneous():
            raise ht.NotHomogeneousError("The ideal is not homogeneous")
        self.ideal = I
        self.ring = I.ring
        self.grading = I.ring.grading
        self.pieces = ht.GradedPieces(I.groebner_basis)
        self.quotient = ht.standard_monomials(I.groebner_basis)
        self.support = set(self.quotient.bidegrees)
        self.standard_by_degree = {}
        for j, e in enumerate(self.quotient.bidegrees):
            self.standard_by_degree.setdefault(e, []).append(j)
        self.generator_degrees = [
            ht.is_homogeneous(g, self.grading) for g in I.generators
        ]
        self._multiplication = {}

    def multiplication(self, i):
        """Sparse coordinates of variable i times each standard monomial."""
        if i not in self._multiplication:
            unit = self.ring.unit(i)
            self._multiplication[i] = [
                self.quotient.sparse_coordinates(
                    self.ring.monomial(monomial_mul(q, unit))
                )
                for q in self.quotient.standard_monomials
            ]
        return self._multiplication[i]

    def candidates(self):
        if self.quotient.colength == 0:
            return []
        degrees = {ht.is_homogeneous(g, self.grading) for g in ht.min_gens(self.ideal)}
        return sorted({_sub(s, e) for s in self.support for e in degrees})

    def window(self, d):
        degrees = {_sub(s, d) for s in self.support}
        return sorted(e for e in degrees if self.pieces.piece(e).dim > 0)

    def system(self, d):
        """
        Linear system of the degree d maps

        Returns:
            tuple:
                (columns, rows) where ``columns`` maps (e, k, j) to an unknown
                index, the coefficient of the j-th standard monomial in the
                image of the k-th basis element of I_e, and ``rows`` are
                sparse constraint rows with zero right hand side.

        """
        window = self.window(d)
        inside = set(window)
        columns = {}
        for e in window:
            targets = self.standard_by_degree[_add(e, d)]
            for k in range(self.pieces.piece(e).dim):
                for j in targets:
                    columns[(e, k, j)] = len(columns)
        rows = []
        for i, ds in enumerate(self.grading.degrees):
            unit = self.ring.unit(i)
            mult = self.multiplication(i)
            for up in window:
                low = _sub(up, ds)
                lower = self.pieces.piece(low)
                if lower.dim == 0:
                    continue
                upper = self.pieces.piece(up)
                targets = self.standard_by_degree[_add(up, d)]
                for k, b in enumerate(lower.elements):
                    coords = upper.coordinates(b.mul_term(unit))
                    by_target = {r: {} for r in targets}
                    for l, c in enumerate(coords):
                        if c:
                            for r in targets:
                                by_target[r][columns[(up, l, r)]] = c
                    if low in inside:
                        for j in self.standard_by_degree[_add(low, d)]:
                            col = columns[(low, k, j)]
                            for r, m in mult[j].items():
                                row = by_target[r]
                                new = row.get(col, 0) - m
                                if new == 0:
                                    row.pop(col, None)
                                else:
                                    row[col] = new
                    rows.extend(row for row in by_target.values() if row)
        return columns, rows

    def generator_rows(self, d, columns, g):
        """
        Rows giving the image of a homogeneous element g of I

        Returns:
            dict or None:
                Maps each standard monomial index of degree deg(g) + d to a
                sparse row, or None when the image is forced to vanish.

        """
        e = ht.is_homogeneous(g, self.grading)
        targets = self.standard_by_degree.get(_add(e, d))
        if not targets or (e, 0, targets[0]) not in columns:
            return None
        coords = self.pieces.piece(e).coordinates(g)
        return {
            j: {columns[(e, k, j)]: c for k, c in enumerate(coords) if c}
            for j in targets
        }

    def assignment(self, d, columns, solution):
        images = []
        for g in self.ideal.generators:
            rows = self.generator_rows(d, columns, g)
            coords = {}
            if rows is not None:
                for j, row in rows.items():
                    value = sum((c * solution[col] for col, c in row.items()), Fraction(0))
                    if value:
                        coords[j] = value
            images.append(self.quotient.element(coords))
        return HomAssignment(images, d)

    def solve(self, d, assignments=False):
        """
        Dimension of Hom(I, S/I) in degree d

        Returns:
            tuple:
                (dimension, list of HomAssignments spanning the degree d
                part, empty unless ``assignments``).

        """
        columns, rows = self.system(d)
        form = ht.echelon(rows, len(columns))
        dim = len(columns) - form.rank
        basis = []
        if assignments and dim:
            basis = [self.assignment(d, columns, v) for v in form.kernel()]
        return dim, basis

    def run(self, torus_row=None, assignments=False, progress=True):
        rows = self.grading.rows
        torus_row = rows - 1 if torus_row is None else torus_row
        if not 0 <= torus_row < rows:
            raise ValueError(f"Torus row {torus_row} out of range for {rows} grading rows")
        per_bidegree = {}
        found = {}
        candidates = self.candidates()
        disable = None if progress else True
        with tqdm(total=len(candidates), desc="Solving degrees", disable=disable) as pbar:
            for d in candidates:
                dim, basis = self.solve(d, assignments)
                if dim:
                    per_bidegree[d] = dim
                    if assignments:
                        found[d] = basis
                pbar.update(1)
        return GradedHomSummary(per_bidegree, torus_row, rows, True, found)

    def check(self, a):
        images = [ht.normal_form(f, self.quotient.gb) for f in a.images]
        d = a.bidegree
        for g, e, image in zip(self.ideal.generators, self.generator_degrees, images):
            for m in image.monomials():
                dd = _sub(ht.multidegree(m, self.grading), e)
                if d is None:
                    d = dd
                elif dd != tuple(d):
                    raise ht.BidegreeMismatchError(
                        f"Image of {g} has degree {dd}, expected {tuple(d)}"
                    )
        if d is None:
            return True
        d = tuple(d)
        columns, rows = self.system(d)
        rhs = [Fraction(0)] * len(rows)
        for g, image in zip(self.ideal.generators, images):
            coords = image.vector(self.quotient.index)
            generator_rows = self.generator_rows(d, columns, g)
            if generator_rows is None:
                if coords:
                    return False
                continue
            for j, row in generator_rows.items():
                rows.append(row)
                rhs.append(coords.get(j, Fraction(0)))
        return ht.is_consistent(rows, rhs, len(columns))


class ConormalSolver:
    """
    Hom(I, S/I) for any ideal of finite colength

    Uses Hom_S(I, S/I) = Hom_{S/I}(I/I^2, S/I). The unknowns are the images
    of the reduced Groebner basis elements g_1..g_k in S/I; every relation
    sum a_i g_i = 0 in I/I^2, found as a kernel vector of the map
    (S/I)^k -> S/I^2, forces sum a_i phi(g_i) = 0.

    Args:
        I (Ideal):
            Ideal of finite colength.

    """

    def __init__(self, I):
        self.ideal = I
        self.ring = I.ring
        self.quotient = ht.standard_monomials(I.groebner_basis)
        self.generators = list(I.groebner_basis.elements)
        gens = self.generators
        square = ht.Ideal(
            self.ring, [f * g for i, f in enumerate(gens) for g in gens[i:]]
        )
        self.square = ht.standard_monomials(square.groebner_basis)
        self._products = {}
        self._conormal = None
        self._relations = None
        self._expansions = {}

    @property
    def ncols(self):
        return len(self.generators) * self.quotient.colength

    def product(self, j, l):
        """Sparse coordinates in S/I of the product of two standard monomials."""
        key = (j, l) if j <= l else (l, j)
        if key not in self._products:
            q = self.quotient.standard_monomials
            self._products[key] = self.quotient.sparse_coordinates(
                self.ring.monomial(monomial_mul(q[key[0]], q[key[1]]))
            )
        return self._products[key]

    def conormal_map(self):
        """Rows of (S/I)^k -> S/I^2, keyed by standard monomial of S/I^2."""
        if self._conormal is None:
            n = self.quotient.colength
            rows = {}
            for i, g in enumerate(self.generators):
                for j, q in enumerate(self.quotient.standard_monomials):
                    image = self.square.sparse_coordinates(g.mul_term(q))
                    for r, c in image.items():
                        rows.setdefault(r, {})[i * n + j] = c
            self._conormal = rows
        return self._conormal

    def relations(self):
        """Basis of the relations among the g_i in I/I^2, over (S/I)^k."""
        if self._relations is None:
            rows = self.conormal_map().values()
            self._relations = ht.echelon(rows, self.ncols).kernel()
        return self._relations

    def _apply(self, a):
        # rows of sum_i a_i phi(g_i) by standard monomial of S/I
        n = self.quotient.colength
        by_target = {}
        for idx, value in enumerate(a):
            if not value:
                continue
            i, j = divmod(idx, n)
            for l in range(n):
                col = i * n + l
                for r, c in self.product(j, l).items():
                    row = by_target.setdefault(r, {})
                    new = row.get(col, 0) + value * c
                    if new == 0:
                        row.pop(col, None)
                    else:
                        row[col] = new
        return by_target

    def system(self):
        rows = []
        for a in self.relations():
            rows.extend(row for row in self._apply(a).values() if row)
        return rows

    def expansion(self, f):
        """Coefficients a in (S/I)^k with f = sum a_i g_i modulo I^2."""
        if f not in self._expansions:
            target = self.square.sparse_coordinates(f)
            by_target = self.conormal_map()
            keys = sorted(set(by_target) | set(target))
            rows = [by_target.get(r, {}) for r in keys]
            rhs = [target.get(r, Fraction(0)) for r in keys]
            a = ht.solve_particular(rows, rhs, self.ncols)
            if a is None:
                raise ValueError(f"{f} does not lie in the ideal")
            self._expansions[f] = a
        return self._expansions[f]

    def run(self, assignments=False):
        rows = self.system()
        form = ht.echelon(rows, self.ncols)
        dim = self.ncols - form.rank
        per_bidegree = {(): dim} if dim else {}
        found = {}
        if assignments and dim:
            found[()] = [self.assignment(v) for v in form.kernel()]
        return GradedHomSummary(per_bidegree, None, self.ring.grading.rows, False, found)

    def assignment(self, solution):
        images = []
        for g in self.ideal.generators:
            coords = {}
            for r, row in self._apply(self.expansion(g)).items():
                value = sum((c * solution[col] for col, c in row.items()), Fraction(0))
                if value:
                    coords[r] = value
            images.append(self.quotient.element(coords))
        return HomAssignment(images)

    def check(self, a):
        rows = self.system()
        rhs = [Fraction(0)] * len(rows)
        for g, image in zip(self.ideal.generators, a.images):
            coords = self.quotient.sparse_coordinates(image)
            by_target = self._apply(self.expansion(g))
            for r in range(self.quotient.colength):
                rows.append(by_target.get(r, {}))
                rhs.append(coords.get(r, Fraction(0)))
        return ht.is_consistent(rows, rhs, self.ncols)


def hom_dim_graded(I, torus_row=None, assignments=False):
    """
    Dimension of Hom(I, S/I) for a homogeneous ideal, by multidegree

    Args:
        I (Ideal):
            Ideal homogeneous for the ring's multigrading, with finite
            colength.
        torus_row (int):
            Index of the grading row that carries torus weights. Defaults
            to the last row.
        assignments (bool):
            Also return a basis of HomAssignments for every degree.

    Returns:
        GradedHomSummary

    Raises:
        NotHomogeneousError, NoHeftVectorError, InfiniteQuotientError

    """
    tic = ticker.time()
    summary = GradedHomSolver(I).run(torus_row, assignments)
    toc = ticker.time()
    ht.logger.info(
        f"Graded tangent space of dimension {summary.total} in "
        + f"{len(summary.per_bidegree)} degrees, {toc - tic:.3f}s"
    )
    return summary


def hom_dim_conormal(I, assignments=False):
    """
    Dimension of Hom(I, S/I) for any ideal of finite colength

    Args:
        I (Ideal):
            The ideal.
        assignments (bool):
            Also return a basis of HomAssignments.

    Returns:
        GradedHomSummary:
            Ungraded summary with a single entry.

    Raises:
        InfiniteQuotientError

    """
    tic = ticker.time()
    summary = ConormalSolver(I).run(assignments)
    toc = ticker.time()
    ht.logger.info(f"Tangent space of dimension {summary.total}, {toc - tic:.3f}s")
    return summary


def tangent_dimension(I, torus_row=None, assignments=False):
    """
    Hom(I, S/I), graded when possible

    The graded solver is used when the generators are homogeneous and the
    grading has a heft vector, the conormal solver otherwise.

    """
    if I.is_homogeneous() and ht.heft_check(I.ring.grading) is not None:
        return hom_dim_graded(I, torus_row, assignments)
    ht.logger.verbose("Ideal is not graded, using the conormal solver")
    return hom_dim_conormal(I, assignments)


def weight_marginal(s, row):
    """
    Sum dimensions over degrees with the same value in one grading row

    Args:
        s (GradedHomSummary):
            A graded summary.
        row (int):
            Grading row index.

    Returns:
        dict:
            Weight to dimension, sorted by weight.

    """
    if not s.graded:
        raise ValueError("An ungraded summary has no weights")
    if not 0 <= row < s.rows:
        raise ValueError(f"Row {row} out of range for {s.rows} grading rows")
    marginal = {}
    for d, dim in s.per_bidegree.items():
        marginal[d[row]] = marginal.get(d[row], 0) + dim
    return dict(sorted(marginal.items()))


def hom_element_check(I, a):
    """
    Whether an assignment of generator images extends to a map I -> S/I

    Args:
        I (Ideal):
            The ideal.
        a (HomAssignment):
            One image per stored generator of I.

    Returns:
        bool

    Raises:
        BidegreeMismatchError: when the images of a graded ideal do not all
            have the same degree shift.

    """
    if len(a.images) != len(I.generators):
        raise ValueError(
            f"Expected {len(I.generators)} images, got {len(a.images)}"
        )
    if a.is_zero():
        return True
    if I.is_homogeneous() and ht.heft_check(I.ring.grading) is not None:
        return GradedHomSolver(I).check(a)
    return ConormalSolver(I).check(a)


def hom_dim_taylor(I):
    """
    Dimension of Hom(I, S/I) for a monomial ideal from Taylor syzygies

    The unknowns are the images of the generators m_i in S/I, subject to
    (L/m_i) phi(m_i) = (L/m_j) phi(m_j) with L = lcm(m_i, m_j).

    Args:
        I (Ideal):
            Ideal generated by monomials, of finite colength.

    Returns:
        int

    Raises:
        InfiniteQuotientError

    """
    if not I.is_monomial():
        raise ValueError("The Taylor oracle needs monomial generators")
    ring = I.ring
    qb = ht.standard_monomials(I.groebner_basis)
    n = qb.colength
    monomials = [g.leading_monomial() for g in I.generators]
    k = len(monomials)
    cache = {}

    def coords(m):
        if m not in cache:
            cache[m] = qb.sparse_coordinates(ring.monomial(m))
        return cache[m]

    rows = []
    for i in range(k):
        for j in range(i + 1, k):
            lcm = monomial_lcm(monomials[i], monomials[j])
            a = monomial_div(lcm, monomials[i])
            b = monomial_div(lcm, monomials[j])
            by_target = {}
            for l, q in enumerate(qb.standard_monomials):
                for r, c in coords(monomial_mul(a, q)).items():
                    by_target.setdefault(r, {})[i * n + l] = c
                for r, c in coords(monomial_mul(b, q)).items():
                    by_target.setdefault(r, {})[j * n + l] = -c
            rows.extend(row for row in by_target.values() if row)
    return k * n - ht.echelon(rows, k * n).rank


def extend_by_points(I, points):
    """
    Add disjoint reduced points to the subscheme of I

    Args:
        I (Ideal):
            Ideal of finite colength.
        points (list):
            Distinct rational points outside the support of I.

    Returns:
        Ideal:
            I times the maximal ideals of the points.

    """
    ring = I.ring
    for p in points:
        maximal = ht.points_ideal(ring, [p])
        if not ht.ideal_sum(I, maximal).is_unit():
            raise ValueError(f"Point {tuple(p)} lies in the support of the ideal")
    return ht.ideal_product(I, ht.points_ideal(ring, points))
