#
# Multivariate polynomials with exact rational coefficients, monomial orders
# and multigradings
#
import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import hilbtan as ht


VARIABLE_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


#
# Monomials are tuples of nonnegative exponents, one per ring variable
#


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a, b):
    """Return a / b, or None if b does not divide a."""
    q = tuple(x - y for x, y in zip(a, b))
    if any(x < 0 for x in q):
        return None
    return q


def monomial_divides(a, b):
    """Whether a divides b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _dot(u, v):
    return sum(x * y for x, y in zip(u, v))


@dataclass(frozen=True)
class MultiGrading:
    """
    Assignment of an integer degree vector to every ring variable

    Args:
        degrees (sequence of sequences of int):
            ``degrees[i]`` is the degree vector of the i-th variable.
        rows (int):
            Length r of every degree vector. Inferred from ``degrees`` when
            omitted; needed only for a ring with no variables.

    """

    degrees: tuple
    rows: int = None

    def __post_init__(self):
        degrees = tuple(tuple(int(x) for x in d) for d in self.degrees)
        rows = self.rows
        if rows is None:
            rows = len(degrees[0]) if degrees else 1
        if any(len(d) != rows for d in degrees):
            raise ValueError("Every degree vector of a grading must have the same length")
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "rows", rows)

    @classmethod
    def standard(cls, nvars):
        return cls(((1,),) * nvars, rows=1)

    def zero(self):
        return (0,) * self.rows


ANY_DEGREE = type("AnyDegree", (), {"__repr__": lambda self: "ANY_DEGREE"})()
"""Degree reported by is_homogeneous for the zero polynomial."""


@dataclass(frozen=True)
class MonomialOrder:
    """
    A monomial order

    Args:
        kind (str):
            "lex", "grevlex" or "weighted".
        weights (tuple):
            All-positive weight vector, only for the "weighted" kind.
        tiebreak (str):
            "lex" or "grevlex", used by "weighted" to break weight ties.

    """

    kind: str = "grevlex"
    weights: tuple = None
    tiebreak: str = "grevlex"

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "weighted"):
            raise ValueError(f"Unknown monomial order {self.kind!r}")
        if self.kind == "weighted":
            if not self.weights or any(w <= 0 for w in self.weights):
                raise ValueError("Weighted orders need an all-positive weight vector")
            if self.tiebreak not in ("lex", "grevlex"):
                raise ValueError("Weighted orders break ties with lex or grevlex")
            object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))

    def key(self, exps):
        """Sort key: a larger key is a larger monomial."""
        if self.kind == "lex":
            return exps
        if self.kind == "grevlex":
            return (sum(exps), tuple(-e for e in reversed(exps)))
        tie = MonomialOrder(self.tiebreak).key(exps)
        return (_dot(self.weights, exps), tie)


@dataclass(frozen=True)
class RingContext:
    """
    Polynomial ring over the rationals with a multigrading and a monomial order

    Args:
        variables (sequence of str):
            Distinct variable names, greatest variable first.
        grading (MultiGrading):
            Defaults to the standard grading.
        order (MonomialOrder):
            Defaults to grevlex.

    """

    variables: tuple
    grading: MultiGrading = None
    order: MonomialOrder = None

    def __post_init__(self):
        variables = tuple(self.variables)
        for name in variables:
            if not isinstance(name, str) or not VARIABLE_NAME.match(name):
                raise ValueError(f"Invalid variable name {name!r}")
        if len(set(variables)) != len(variables):
            raise ValueError("Variable names must be distinct")
        grading = self.grading
        if grading is None:
            grading = MultiGrading.standard(len(variables))
        if len(grading.degrees) != len(variables):
            raise ValueError("The grading must give one degree vector per variable")
        order = self.order if self.order is not None else MonomialOrder()
        if order.kind == "weighted" and len(order.weights) != len(variables):
            raise ValueError("The order weight vector must have one entry per variable")
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "grading", grading)
        object.__setattr__(self, "order", order)

    @property
    def nvars(self):
        return len(self.variables)

    def index(self, name):
        try:
            return self.variables.index(name)
        except ValueError:
            raise ht.UnknownVariableError(f"Unknown variable {name!r}")

    def with_order(self, order):
        return RingContext(self.variables, self.grading, order)

    def unit(self, i):
        return tuple(1 if j == i else 0 for j in range(self.nvars))

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        return Polynomial(self, {(0,) * self.nvars: c})

    def monomial(self, exps, coeff=1):
        return Polynomial(self, {tuple(exps): coeff})

    def gen(self, name):
        return self.monomial(self.unit(self.index(name)))

    def gens(self):
        return [self.monomial(self.unit(i)) for i in range(self.nvars)]

    def parse(self, text):
        return ht.parse_polynomial(text, self)

    def heft(self):
        return heft_check(self.grading)


class Polynomial:
    """
    Polynomial with Fraction coefficients in a RingContext

    Terms are stored as a dictionary from exponent tuples to nonzero
    coefficients; ``terms`` lists them in strictly decreasing monomial order.

    Args:
        ring (RingContext):
            The ambient ring.
        terms (dict):
            Mapping from exponent tuples to coefficients. Zero coefficients
            are dropped.

    """

    __slots__ = ("ring", "_terms")

    def __init__(self, ring, terms=None):
        self.ring = ring
        clean = {}
        if terms:
            n = ring.nvars
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != n or any(e < 0 for e in m):
                    raise ValueError(f"Invalid exponent vector {m} for {n} variables")
                c = c if isinstance(c, Fraction) else Fraction(c)
                if c != 0:
                    clean[m] = c
        self._terms = clean

    @classmethod
    def _raw(cls, ring, terms):
        # terms are trusted: exponent tuples of the right length, nonzero Fractions
        p = cls.__new__(cls)
        p.ring = ring
        p._terms = terms
        return p

    #
    # Inspection
    #

    @property
    def terms(self):
        """(coefficient, monomial) pairs in strictly decreasing order."""
        key = self.ring.order.key
        return [(self._terms[m], m) for m in sorted(self._terms, key=key, reverse=True)]

    def items(self):
        return self._terms.items()

    def monomials(self):
        return list(self._terms)

    def coefficient(self, m):
        return self._terms.get(tuple(m), Fraction(0))

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_monomial(self):
        return len(self._terms) == 1

    def total_degree(self):
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def leading_monomial(self):
        if not self._terms:
            raise ValueError("The zero polynomial has no leading monomial")
        return max(self._terms, key=self.ring.order.key)

    def leading_coefficient(self):
        return self._terms[self.leading_monomial()]

    def vector(self, index):
        """
        Coordinates in a monomial basis

        Args:
            index (dict):
                Maps monomials to column indices. Every monomial of the
                polynomial must be present.

        Returns:
            dict:
                Sparse row ``{column: coefficient}``.

        """
        return {index[m]: c for m, c in self._terms.items()}

    #
    # Arithmetic
    #

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("Polynomials belong to different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in other._terms.items():
            s = terms.get(m, 0) + c
            if s == 0:
                terms.pop(m, None)
            else:
                terms[m] = s
        return Polynomial._raw(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                s = terms.get(m, 0) + c1 * c2
                if s == 0:
                    terms.pop(m, None)
                else:
                    terms[m] = s
        return Polynomial._raw(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("Polynomials can only be raised to nonnegative integer powers")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {m: v * c for m, v in self._terms.items()})

    def mul_term(self, m, c=1):
        """Multiply by the term c * x^m."""
        c = Fraction(c)
        if c == 0:
            return self.ring.zero()
        return Polynomial._raw(
            self.ring,
            {tuple(x + y for x, y in zip(k, m)): v * c for k, v in self._terms.items()},
        )

    def monic(self):
        if not self._terms:
            return self
        return self.scale(1 / self.leading_coefficient())

    def primitive(self):
        """Scale to integer coefficients with gcd 1 and positive leading coefficient."""
        if not self._terms:
            return self
        den = math.lcm(*(c.denominator for c in self._terms.values()))
        nums = [int(c * den) for c in self._terms.values()]
        g = math.gcd(*nums)
        factor = Fraction(den, g)
        if self.leading_coefficient() < 0:
            factor = -factor
        return self.scale(factor)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        return hash((self.ring, frozenset(self._terms.items())))

    #
    # Calculus and substitution
    #

    def derivative(self, var):
        """
        Formal partial derivative

        Args:
            var (str or int):
                Variable name or index.

        Returns:
            Polynomial

        """
        i = var if isinstance(var, int) else self.ring.index(var)
        terms = {}
        for m, c in self._terms.items():
            if m[i] == 0:
                continue
            mm = m[:i] + (m[i] - 1,) + m[i + 1 :]
            terms[mm] = c * m[i]
        return Polynomial._raw(self.ring, terms)

    def substitute(self, mapping, ring=None):
        """
        Compose with a substitution of variables

        Args:
            mapping (dict):
                Variable name to Polynomial in the target ring. Variables not
                in the mapping go to the variable of the same name.
            ring (RingContext):
                Target ring, by default the polynomial's own ring.

        Returns:
            Polynomial

        """
        ring = self.ring if ring is None else ring
        images = []
        for name in self.ring.variables:
            if name in mapping:
                image = mapping[name]
                if image.ring != ring:
                    raise ValueError(f"Image of {name} is not in the target ring")
            else:
                image = ring.gen(name)
            images.append(image)
        result = ring.zero()
        powers = [{} for _ in images]
        for m, c in self._terms.items():
            term = ring.constant(c)
            for i, e in enumerate(m):
                if e == 0:
                    continue
                if e not in powers[i]:
                    powers[i][e] = images[i] ** e
                term = term * powers[i][e]
            result = result + term
        return result

    def to_ring(self, ring):
        """Embed into a ring whose variables include this ring's variables."""
        positions = [ring.index(name) for name in self.ring.variables]
        terms = {}
        for m, c in self._terms.items():
            mm = [0] * ring.nvars
            for e, p in zip(m, positions):
                mm[p] = e
            terms[tuple(mm)] = c
        return Polynomial._raw(ring, terms)

    def evaluate(self, values):
        """
        Evaluate at a point

        Args:
            values (dict or sequence):
                Variable name to value, or one value per variable.

        Returns:
            Fraction

        """
        if isinstance(values, dict):
            point = [Fraction(values[name]) for name in self.ring.variables]
        else:
            point = [Fraction(v) for v in values]
        total = Fraction(0)
        for m, c in self._terms.items():
            term = c
            for x, e in zip(point, m):
                if e:
                    term *= x**e
            total += term
        return total

    #
    # Printing
    #

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for c, m in self.terms:
            factors = []
            for name, e in zip(self.ring.variables, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not factors:
                body = str(a)
            elif a == 1:
                body = "*".join(factors)
            else:
                body = str(a) + "*" + "*".join(factors)
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Polynomial({self})"


def multidegree(m, g):
    """
    Multidegree of a monomial

    Args:
        m (tuple):
            Exponent vector.
        g (MultiGrading):
            The grading.

    Returns:
        tuple:
            Sum over variables of exponent times degree vector.

    """
    deg = [0] * g.rows
    for e, d in zip(m, g.degrees):
        if e:
            for k in range(g.rows):
                deg[k] += e * d[k]
    return tuple(deg)


def compare(a, b, o):
    """
    Compare two monomials

    Args:
        a, b (tuple):
            Exponent vectors of the same length.
        o (MonomialOrder):
            The order.

    Returns:
        int:
            -1, 0 or 1 when a is less than, equal to or greater than b.

    """
    if len(a) != len(b):
        raise ValueError("Monomials of different arity cannot be compared")
    ka, kb = o.key(tuple(a)), o.key(tuple(b))
    return (ka > kb) - (ka < kb)


def is_homogeneous(f, g):
    """
    The multidegree shared by all terms of f

    Args:
        f (Polynomial):
            The polynomial.
        g (MultiGrading):
            The grading.

    Returns:
        tuple or None:
            The common multidegree, ``ANY_DEGREE`` for the zero polynomial,
            or None if f is not homogeneous.

    """
    degrees = {multidegree(m, g) for m in f.monomials()}
    if not degrees:
        return ANY_DEGREE
    if len(degrees) == 1:
        return degrees.pop()
    return None


def _candidate_hefts(rows, bound):
    candidates = [
        h
        for h in itertools.product(range(-bound, bound + 1), repeat=rows)
        if any(h)
    ]
    return sorted(candidates, key=lambda h: (sum(abs(x) for x in h), tuple(-x for x in h)))


def _fourier_motzkin(degrees):
    # Decide feasibility of {h : d.h >= 1 for every degree d} and return a
    # rational point of it, or None.
    r = len(degrees[0])
    system = [([Fraction(x) for x in d], Fraction(1)) for d in degrees]
    stages = []
    for k in reversed(range(r)):
        stages.append((k, system))
        pos = [(a, b) for a, b in system if a[k] > 0]
        neg = [(a, b) for a, b in system if a[k] < 0]
        new = [(a, b) for a, b in system if a[k] == 0]
        for ap, bp in pos:
            for an, bn in neg:
                cp, cn = ap[k], -an[k]
                a = [ap[i] / cp + an[i] / cn for i in range(r)]
                a[k] = Fraction(0)
                new.append((a, bp / cp + bn / cn))
        system = new
    if any(b > 0 for _, b in system):
        return None
    point = [Fraction(0)] * r
    for k, stage in reversed(stages):
        lower, upper = None, None
        for a, b in stage:
            if a[k] == 0:
                continue
            bound = (b - sum(a[i] * point[i] for i in range(k))) / a[k]
            if a[k] > 0:
                lower = bound if lower is None else max(lower, bound)
            else:
                upper = bound if upper is None else min(upper, bound)
        if lower is not None:
            point[k] = lower
        elif upper is not None:
            point[k] = upper
    return point


@lru_cache(maxsize=None)
def heft_check(g):
    """
    Find a heft vector for a grading

    Small integer vectors are tried first; otherwise feasibility of
    ``deg(v).h >= 1`` for all variables v is decided exactly by
    Fourier-Motzkin elimination and the rational solution is scaled to a
    primitive integer vector.

    Args:
        g (MultiGrading):
            The grading.

    Returns:
        tuple or None:
            An integer vector h with ``h.deg(v) > 0`` for every variable v,
            or None if no such vector exists.

    """
    degrees = g.degrees
    if not degrees:
        return (1,) + (0,) * (g.rows - 1)
    if g.rows <= 4:
        for h in _candidate_hefts(g.rows, 2):
            if all(_dot(h, d) > 0 for d in degrees):
                return h
    point = _fourier_motzkin(degrees)
    if point is None:
        return None
    den = math.lcm(*(x.denominator for x in point))
    h = [int(x * den) for x in point]
    common = math.gcd(*h)
    h = tuple(x // common for x in h)
    if not all(_dot(h, d) > 0 for d in degrees):
        raise ht.VerificationError([("heft vector", "positive on all degrees", h)])
    return h


@lru_cache(maxsize=None)
def _monomials_of_degree(degrees, heft, e):
    n = len(degrees)
    hd = [_dot(heft, d) for d in degrees]
    out = []

    def extend(i, remaining, exps):
        budget = _dot(heft, remaining)
        if budget < 0:
            return
        if i == n - 1:
            a, r = divmod(budget, hd[i])
            if r == 0 and all(x == a * d for x, d in zip(remaining, degrees[i])):
                out.append(tuple(exps) + (a,))
            return
        for a in range(budget // hd[i] + 1):
            extend(
                i + 1,
                tuple(x - a * d for x, d in zip(remaining, degrees[i])),
                exps + [a],
            )

    if n == 0:
        return ((),) if not any(e) else ()
    extend(0, tuple(e), [])
    return tuple(sorted(out))


def monomials_of_degree(e, g, heft=None):
    """
    All monomials of a given multidegree

    The exponent of variable v is bounded by ``h.e / h.deg(v)`` for a heft
    vector h, so the enumeration is finite.

    Args:
        e (tuple):
            The multidegree.
        g (MultiGrading):
            The grading.
        heft (tuple):
            A heft vector for g, computed when omitted.

    Returns:
        tuple:
            Exponent vectors in increasing lexicographic order.

    """
    if heft is None:
        heft = heft_check(g)
        if heft is None:
            raise ht.NoHeftVectorError("The grading has no heft vector")
    return _monomials_of_degree(g.degrees, tuple(heft), tuple(e))
