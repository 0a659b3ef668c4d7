#
# One-form identities for semi-invariant functions on C* x B
#
from dataclasses import dataclass

import numpy as np

import hilbtan as ht


@dataclass(frozen=True)
class SymbolicOneForm:
    """
    A polynomial one-form sum f_i dz_i

    Args:
        ring (RingContext):
            Ring of the coefficients.
        variables (tuple):
            Names of the differentials dz_i.
        coefficients (tuple):
            One polynomial of ``ring`` per differential.

    """

    ring: object
    variables: tuple
    coefficients: tuple

    def __post_init__(self):
        if len(self.variables) != len(self.coefficients):
            raise ValueError("A one-form needs one coefficient per differential")

    def __add__(self, other):
        if self.variables != other.variables:
            raise ValueError("One-forms have different differentials")
        return SymbolicOneForm(
            self.ring,
            self.variables,
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients)),
        )

    def __sub__(self, other):
        return self + other.multiply(-1)

    def multiply(self, g):
        """Multiply every coefficient by a polynomial or number."""
        return SymbolicOneForm(
            self.ring, self.variables, tuple(g * c for c in self.coefficients)
        )

    def coefficient(self, name):
        return self.coefficients[self.variables.index(name)]

    def is_zero(self):
        return all(c.is_zero() for c in self.coefficients)

    def ideal(self):
        """The coefficient ideal, whose zero scheme is Z(omega)."""
        return ht.Ideal(self.ring, list(self.coefficients))

    def __str__(self):
        terms = [f"({c})*d{v}" for v, c in zip(self.variables, self.coefficients) if c]
        return " + ".join(terms) if terms else "0"


def differential(f, localization=None):
    """
    Exact differential of a polynomial

    Args:
        f (Polynomial):
            The function.
        localization (Localization):
            When given, f lives in the localized ring Q[t, u, ...] with u the
            inverse of t. The derivation d/dt then acts on u as -u^2 and no
            du term is produced.

    Returns:
        SymbolicOneForm

    """
    ring = f.ring
    if localization is None:
        coefficients = tuple(f.derivative(i) for i in range(ring.nvars))
        return SymbolicOneForm(ring, ring.variables, coefficients)
    t, u = localization.variable, localization.inverse
    u2 = ring.gen(u) ** 2
    variables = tuple(name for name in ring.variables if name != u)
    coefficients = []
    for name in variables:
        c = f.derivative(name)
        if name == t:
            c = c - u2 * f.derivative(u)
        coefficients.append(c)
    return SymbolicOneForm(ring, variables, tuple(coefficients))


@dataclass(frozen=True)
class WeightedFunction:
    """
    The semi-invariant f = t^w fbar on C* x B

    Args:
        fbar (Polynomial):
            Function on B, in a ring without the torus variable.
        weight (int):
            The character t^w.
        torus_variable (str):
            Name of the coordinate t on C*.

    """

    fbar: object
    weight: int
    torus_variable: str = "t"

    def __post_init__(self):
        if self.torus_variable in self.fbar.ring.variables:
            raise ValueError(
                f"fbar must not involve the torus variable {self.torus_variable!r}"
            )

    def localization(self):
        base = self.fbar.ring
        order = base.order if base.order.kind != "weighted" else None
        ring = ht.RingContext((self.torus_variable,) + base.variables, order=order)
        return ht.localize_invert(ring, self.torus_variable)

    def character(self, localization):
        return localization.inverse_power(self.weight)

    def function(self, localization):
        """f = t^w fbar in the localized ring."""
        return self.character(localization) * localization.lift(self.fbar)


def _same_modulo(a, b, relation_gb):
    return all(
        ht.normal_form(x - y, relation_gb).is_zero()
        for x, y in zip(a.coefficients, b.coefficients)
    )


def check_splitting_identity(wf):
    """
    Check df = chi dfbar + fbar dchi for chi = t^w

    Both sides are expanded in Q[t, u, b]/(tu - 1), so negative weights are
    handled exactly.

    Args:
        wf (WeightedFunction):
            The semi-invariant.

    Returns:
        bool:
            True iff the identity holds coefficient by coefficient.

    """
    loc = wf.localization()
    relation = ht.Ideal(loc.ring, [loc.relation]).groebner_basis
    f = wf.function(loc)
    lhs = differential(f, loc)
    chi = wf.character(loc)
    dfbar = differential(loc.lift(wf.fbar), loc)
    dchi_t = loc.inverse_power(wf.weight - 1).scale(wf.weight)
    fbar_dchi = SymbolicOneForm(
        loc.ring,
        lhs.variables,
        tuple(
            dchi_t * loc.lift(wf.fbar) if name == loc.variable else loc.ring.zero()
            for name in lhs.variables
        ),
    )
    rhs = dfbar.multiply(chi) + fbar_dchi
    return _same_modulo(lhs, rhs, relation)


@dataclass
class CriticalLocusResult:
    """
    Outcome of the critical-locus comparison

    Args:
        status (str):
            "equal" or "unequal" for Z(df) against the preimage of
            Z(dfbar) and Z(fbar).
        critical (GroebnerBasis):
            Reduced basis of the ideal of Z(df).
        preimage (GroebnerBasis):
            Reduced basis of the ideal of Z(dfbar) and Z(fbar).
        secondary (str):
            For weight 0 only: "equal" or "unequal" for Z(df) against the
            preimage of Z(dfbar) alone.

    """

    status: str
    critical: object
    preimage: object
    secondary: str = None

    @property
    def equal(self):
        return self.status == "equal"


def check_critical_locus_prop(wf):
    """
    Compare Z(df) with the preimage of Z(dfbar) and Z(fbar) on C* x B

    Ideals are compared in Q[t, u, b]/(tu - 1). For a nontrivial character
    they agree; for weight 0 the comparison usually fails and the result
    also reports Z(df) against the preimage of Z(dfbar).

    Args:
        wf (WeightedFunction):
            The semi-invariant.

    Returns:
        CriticalLocusResult

    """
    loc = wf.localization()
    f = wf.function(loc)
    fbar = loc.lift(wf.fbar)
    critical = loc.ideal(list(differential(f, loc).coefficients))
    dfbar = [fbar.derivative(name) for name in wf.fbar.ring.variables]
    preimage = loc.ideal([fbar] + dfbar)
    status = "equal" if ht.ideal_equal(critical, preimage) else "unequal"
    secondary = None
    if wf.weight == 0:
        secondary = "equal" if ht.ideal_equal(critical, loc.ideal(dfbar)) else "unequal"
    ht.logger.verbose(f"Critical locus for weight {wf.weight}: {status}")
    return CriticalLocusResult(
        status, critical.groebner_basis, preimage.groebner_basis, secondary
    )


def _jacobian_rank(images, target):
    rows = []
    for image in images:
        rows.append([image.coefficient(target.unit(j)) for j in range(target.nvars)])
    return ht.rank(ht.RationalMatrix(rows, cols=target.nvars))


def check_smooth_pullback(f, substitution, target=None):
    """
    Check phi^-1(Z(df)) = Z(d(f o phi)) for a smooth coordinate map phi

    Two shapes of phi are supported: an invertible affine-linear change of
    coordinates in a ring with the same number of variables, and the
    projection from a ring with extra variables, where every variable of f
    maps to the variable of the same name.

    Args:
        f (Polynomial):
            The function.
        substitution (dict):
            Variable name of f's ring to its image polynomial in ``target``.
            Unlisted variables map to the variable of the same name.
        target (RingContext):
            Source ring of phi, by default f's own ring.

    Returns:
        bool

    Raises:
        UnsupportedSubstitutionError: for any other shape of phi.

    """
    source = f.ring
    target = source if target is None else target
    images = []
    for name in source.variables:
        if name in substitution:
            image = substitution[name]
            if image.ring != target:
                raise ValueError(f"Image of {name} is not in the target ring")
        elif name in target.variables:
            image = target.gen(name)
        else:
            raise ht.UnsupportedSubstitutionError(f"No image given for {name}")
        images.append(image)
    projection = all(
        name in target.variables and image == target.gen(name)
        for name, image in zip(source.variables, images)
    )
    linear = (
        target.nvars == source.nvars
        and all(image.total_degree() <= 1 for image in images)
        and _jacobian_rank(images, target) == source.nvars
    )
    if not (projection or linear):
        raise ht.UnsupportedSubstitutionError(
            "Only invertible linear changes and projections are supported"
        )
    mapping = dict(zip(source.variables, images))
    pulled = [c.substitute(mapping, target) for c in differential(f).coefficients]
    composite = f.substitute(mapping, target)
    return ht.ideal_equal(
        ht.Ideal(target, pulled), differential(composite).ideal()
    )


def random_weighted_functions(count, weight, seed=0):
    """
    Sparse pseudo-random fbar with a fixed weight

    Each fbar has one to three terms of degree at most 4 in one to three
    variables b1, b2, b3 and small nonzero integer coefficients.

    Args:
        count (int):
            Number of functions.
        weight (int):
            Weight of every returned function.
        seed (int):
            Seed of ``numpy.random.default_rng``.

    Returns:
        list:
            WeightedFunction instances.

    """
    rng = np.random.default_rng(seed)
    functions = []
    for _ in range(count):
        k = int(rng.integers(1, 4))
        ring = ht.RingContext(tuple(f"b{i + 1}" for i in range(k)))
        terms = {}
        for _ in range(int(rng.integers(1, 4))):
            degree = int(rng.integers(1, 5))
            exps = [0] * k
            for _ in range(degree):
                exps[int(rng.integers(0, k))] += 1
            c = int(rng.choice([-5, -4, -3, -2, -1, 1, 2, 3, 4, 5]))
            terms[tuple(exps)] = c
        functions.append(WeightedFunction(ht.Polynomial(ring, terms), weight))
    return functions
