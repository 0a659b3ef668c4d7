#
# Ideals and reduced Groebner bases
#
import heapq
import time as ticker
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import hilbtan as ht
from hilbtan.polynomials import Polynomial
from hilbtan.polynomials import monomial_div
from hilbtan.polynomials import monomial_divides
from hilbtan.polynomials import monomial_lcm
from hilbtan.polynomials import monomial_mul


class _Descending:
    __slots__ = ("key",)

    def __init__(self, key):
        self.key = key

    def __lt__(self, other):
        return self.key > other.key

    def __eq__(self, other):
        return self.key == other.key


def _reduce(f, basis, leading):
    # Full reduction of f by monic polynomials with the given leading monomials
    key = f.ring.order.key
    terms = dict(f._terms)
    heap = [(_Descending(key(m)), m) for m in terms]
    heapq.heapify(heap)
    remainder = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = terms.pop(m, None)
        if c is None:
            continue
        for g, lm in zip(basis, leading):
            q = monomial_div(m, lm)
            if q is not None:
                break
        else:
            remainder[m] = c
            continue
        for gm, gc in g._terms.items():
            if gm == lm:
                continue
            mm = monomial_mul(gm, q)
            new = terms.get(mm, 0) - c * gc
            if new == 0:
                terms.pop(mm, None)
            else:
                if mm not in terms:
                    heapq.heappush(heap, (_Descending(key(mm)), mm))
                terms[mm] = new
    return Polynomial._raw(f.ring, remainder)


class GroebnerBasis:
    """
    Reduced Groebner basis

    Elements are monic, inter-reduced and sorted by increasing leading
    monomial under the ring's order. Use :func:`buchberger` to build one.

    Args:
        ring (RingContext):
            The ambient ring.
        elements (list):
            The reduced basis.

    """

    def __init__(self, ring, elements):
        self.ring = ring
        self.order = ring.order
        self.elements = tuple(elements)
        self.leading_monomials = tuple(g.leading_monomial() for g in self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.ring == other.ring and self.elements == other.elements

    def __hash__(self):
        return hash((self.ring, self.elements))

    def __repr__(self):
        return "GroebnerBasis([" + ", ".join(str(g) for g in self.elements) + "])"

    def is_unit(self):
        return any(sum(m) == 0 for m in self.leading_monomials)

    def is_standard(self, m):
        """Whether the monomial m is divisible by no leading monomial."""
        return not any(monomial_divides(lm, m) for lm in self.leading_monomials)

    def normal_form(self, f):
        return normal_form(f, self)


def normal_form(f, gb):
    """
    Remainder of f on division by a Groebner basis

    Args:
        f (Polynomial):
            The polynomial to reduce.
        gb (GroebnerBasis):
            A Groebner basis in the same ring.

    Returns:
        Polynomial:
            The unique remainder, none of whose monomials is divisible by a
            leading monomial of ``gb``.

    """
    if f.ring != gb.ring:
        raise ValueError("The polynomial and the Groebner basis belong to different rings")
    return _reduce(f, gb.elements, gb.leading_monomials)


def _spoly(f, g, lmf, lmg):
    lcm = monomial_lcm(lmf, lmg)
    return f.mul_term(monomial_div(lcm, lmf)) - g.mul_term(monomial_div(lcm, lmg))


def _update(G, lms, pairs, f, criteria):
    # Add f to the basis, pruning pairs with the Gebauer-Moeller criteria
    lmf = f.leading_monomial()
    new = len(G)
    if not criteria:
        fresh = {(i, new) for i in range(new)}
    else:
        pairs = {
            (i, j)
            for i, j in pairs
            if not monomial_divides(lmf, monomial_lcm(lms[i], lms[j]))
            or monomial_lcm(lms[i], lms[j]) == monomial_lcm(lms[i], lmf)
            or monomial_lcm(lms[i], lms[j]) == monomial_lcm(lms[j], lmf)
        }
        by_lcm = {}
        for i in range(new):
            by_lcm.setdefault(monomial_lcm(lms[i], lmf), []).append(i)
        key = f.ring.order.key
        minimal = []
        for L in sorted(by_lcm, key=key):
            if all(not monomial_divides(M, L) for M in minimal):
                minimal.append(L)
        fresh = set()
        for L in minimal:
            coprime = any(L == monomial_mul(lms[i], lmf) for i in by_lcm[L])
            if not coprime:
                fresh.add((min(by_lcm[L]), new))
    G.append(f)
    lms.append(lmf)
    return pairs | fresh


def _minimalize(G, key):
    kept = []
    for f in sorted(G, key=lambda h: key(h.leading_monomial())):
        lm = f.leading_monomial()
        if all(not monomial_divides(g.leading_monomial(), lm) for g in kept):
            kept.append(f)
    return kept


def _interreduce(G):
    reduced = []
    for i, g in enumerate(G):
        others = G[:i] + G[i + 1 :]
        r = _reduce(g, others, [h.leading_monomial() for h in others])
        reduced.append(r.monic())
    return reduced


def buchberger(I, criteria=True):
    """
    Reduced Groebner basis by Buchberger's algorithm

    Pairs are selected by the normal strategy (smallest lcm of leading
    monomials first, ties by index).

    Args:
        I (Ideal):
            The ideal.
        criteria (bool):
            Apply the coprime and chain criteria of Gebauer and Moeller.
            With False every pair is reduced; the result is the same.

    Returns:
        GroebnerBasis:
            The unique reduced Groebner basis of I under the ring's order.

    """
    tic = ticker.time()
    ring = I.ring
    key = ring.order.key
    G, lms, pairs = [], [], set()
    for f in I.generators:
        pairs = _update(G, lms, pairs, f.monic(), criteria)
    reductions = 0
    while pairs:
        pair = min(pairs, key=lambda p: (key(monomial_lcm(lms[p[0]], lms[p[1]])), p))
        pairs.remove(pair)
        i, j = pair
        s = _spoly(G[i], G[j], lms[i], lms[j])
        r = _reduce(s, G, lms)
        reductions += 1
        if r:
            pairs = _update(G, lms, pairs, r.monic(), criteria)
    elements = _interreduce(_minimalize(G, key))
    elements.sort(key=lambda g: key(g.leading_monomial()))
    toc = ticker.time()
    ht.logger.verbose(
        f"Groebner basis with {len(elements)} elements from {reductions} "
        + f"S-pair reductions in {toc - tic:.3f}s"
    )
    return GroebnerBasis(ring, elements)


class Ideal:
    """
    Ideal of a polynomial ring given by generators

    Zero generators and exact duplicates are dropped. The reduced Groebner
    basis is computed on first use and cached.

    Args:
        ring (RingContext):
            The ambient ring.
        generators (list):
            Polynomials of ``ring``, or strings in the polynomial grammar.

    """

    def __init__(self, ring, generators):
        self.ring = ring
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = ht.parse_polynomial(g, ring)
            elif isinstance(g, (int, Fraction)):
                g = ring.constant(g)
            if g.ring != ring:
                raise ValueError("Generator does not belong to the ring of the ideal")
            if g and g not in gens:
                gens.append(g)
        self.generators = gens

    def __repr__(self):
        return "Ideal(" + ", ".join(str(g) for g in self.generators) + ")"

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    @cached_property
    def groebner_basis(self):
        return buchberger(self)

    def __contains__(self, f):
        return ideal_member(f, self)

    def __mul__(self, other):
        return ideal_product(self, other)

    def __add__(self, other):
        return ideal_sum(self, other)

    def is_zero(self):
        return not self.generators

    def is_unit(self):
        return self.groebner_basis.is_unit()

    def is_monomial(self):
        return all(g.is_monomial() for g in self.generators)

    def is_homogeneous(self):
        grading = self.ring.grading
        return all(ht.is_homogeneous(g, grading) is not None for g in self.generators)

    def equals(self, other):
        return ideal_equal(self, other)


def ideal_member(f, I):
    """Whether f lies in the ideal I."""
    return normal_form(f, I.groebner_basis).is_zero()


def ideal_equal(I, J):
    """
    Whether two ideals of the same ring coincide

    Args:
        I, J (Ideal):
            Ideals of the same ring.

    Returns:
        bool:
            True iff the reduced Groebner bases are identical.

    """
    if I.ring != J.ring:
        raise ValueError("Ideals belong to different rings")
    return I.groebner_basis == J.groebner_basis


def ideal_product(I, J):
    """Ideal generated by all pairwise products of generators."""
    if I.ring != J.ring:
        raise ValueError("Ideals belong to different rings")
    return Ideal(I.ring, [f * g for f in I.generators for g in J.generators])


def ideal_sum(I, J):
    if I.ring != J.ring:
        raise ValueError("Ideals belong to different rings")
    return Ideal(I.ring, I.generators + J.generators)


def min_gens(I):
    """
    Minimal homogeneous generators by graded Nakayama

    Generators are visited by increasing heft degree. A generator of degree
    e is kept when it is not in the span of the kept generators of degree e
    and the kept generators of other degrees multiplied by every monomial of
    the complementary degree.

    Args:
        I (Ideal):
            Ideal with generators homogeneous for the ring's grading.

    Returns:
        list:
            A minimal generating set, a subset of the given generators.

    Raises:
        NotHomogeneousError: if a generator is not homogeneous.
        NoHeftVectorError: if the grading has no heft vector.

    """
    grading = I.ring.grading
    heft = ht.heft_check(grading)
    if heft is None:
        raise ht.NoHeftVectorError("The grading has no heft vector")
    graded = []
    for f in I.generators:
        d = ht.is_homogeneous(f, grading)
        if d is None:
            raise ht.NotHomogeneousError(f"Generator {f} is not homogeneous")
        graded.append((d, f))
    graded.sort(key=lambda df: (sum(h * x for h, x in zip(heft, df[0])), df[0]))
    kept = []
    for d, f in graded:
        basis = ht.monomials_of_degree(d, grading, heft)
        index = {m: i for i, m in enumerate(basis)}
        form = ht.EchelonForm(len(basis))
        for dk, k in kept:
            if dk == d:
                form.add_row(k.vector(index))
                continue
            rest = tuple(a - b for a, b in zip(d, dk))
            for m in ht.monomials_of_degree(rest, grading, heft):
                form.add_row(k.mul_term(m).vector(index))
        if form.add_row(f.vector(index)):
            kept.append((d, f))
    ht.logger.verbose(f"{len(kept)} of {len(graded)} generators are minimal")
    return [f for _, f in kept]


def irredundant_generators(I):
    """
    Drop generators greedily while the ideal is unchanged

    Works for any ideal. The result generates I and no single element can be
    removed, but its size is not an invariant of I outside the graded case.

    """
    gens = list(I.generators)
    target = I.groebner_basis
    i = 0
    while i < len(gens):
        rest = Ideal(I.ring, gens[:i] + gens[i + 1 :])
        if rest.groebner_basis == target:
            gens = gens[:i] + gens[i + 1 :]
        else:
            i += 1
    return gens


@dataclass(frozen=True)
class Localization:
    """
    Ring with one variable inverted

    Args:
        ring (RingContext):
            The extended ring with the new variable placed right after the
            inverted one.
        variable (str):
            The inverted variable t.
        inverse (str):
            The new variable u.
        relation (Polynomial):
            ``t*u - 1``, appended to every ideal by :meth:`ideal`.

    """

    ring: object
    variable: str
    inverse: str
    relation: object

    def lift(self, f):
        """Embed a polynomial of the original ring."""
        return f.to_ring(self.ring)

    def ideal(self, generators):
        gens = [self.lift(g) if g.ring != self.ring else g for g in generators]
        return Ideal(self.ring, gens + [self.relation])

    def inverse_power(self, k):
        """t^k as a polynomial, using u for negative k."""
        name = self.variable if k >= 0 else self.inverse
        return self.ring.gen(name) ** abs(k)


def localize_invert(ring, var):
    """
    Invert a variable by adjoining u with the relation ``var*u - 1``

    Args:
        ring (RingContext):
            The ring.
        var (str):
            The variable to invert.

    Returns:
        Localization

    Raises:
        UnknownVariableError: if var is not a ring variable.

    """
    i = ring.index(var)
    name = "u"
    suffix = 0
    while name in ring.variables:
        suffix += 1
        name = f"u_{suffix}"
    variables = ring.variables[: i + 1] + (name,) + ring.variables[i + 1 :]
    order = ring.order
    if order.kind == "weighted":
        order = ht.MonomialOrder(order.tiebreak)
    extended = ht.RingContext(variables, order=order)
    relation = extended.gen(var) * extended.gen(name) - 1
    return Localization(extended, var, name, relation)


def points_ideal(ring, points):
    """
    Ideal of a set of distinct rational points

    Args:
        ring (RingContext):
            The ring.
        points (list):
            Coordinate tuples, one entry per variable.

    Returns:
        Ideal:
            The product of the maximal ideals of the points, which equals
            their intersection.

    """
    points = [tuple(Fraction(x) for x in p) for p in points]
    if len(set(points)) != len(points):
        raise ValueError("Points must be distinct")
    result = Ideal(ring, [ring.one()])
    for p in points:
        if len(p) != ring.nvars:
            raise ValueError(f"Point {p} needs {ring.nvars} coordinates")
        maximal = Ideal(ring, [g - c for g, c in zip(ring.gens(), p)])
        # keep the generator count small between products
        result = Ideal(ring, ideal_product(result, maximal).groebner_basis.elements)
    return result
