#
# Monomial ideals of finite colength in three variables (plane partitions)
#
import hilbtan as ht


def addable_cells(cells):
    """
    Monomials that can be added to a staircase keeping it an order ideal

    For a finite staircase these are exactly the minimal monomials outside
    it, i.e. the minimal generators of the monomial ideal.

    Args:
        cells (iterable):
            Exponent tuples forming an order ideal.

    Returns:
        list:
            Sorted exponent tuples.

    """
    cells = set(cells)
    if not cells:
        return []
    n = len(next(iter(cells)))
    candidates = set()
    for c in cells:
        for i in range(n):
            candidates.add(c[:i] + (c[i] + 1,) + c[i + 1 :])
    addable = []
    for c in candidates - cells:
        below = (c[:i] + (c[i] - 1,) + c[i + 1 :] for i in range(n) if c[i] > 0)
        if all(b in cells for b in below):
            addable.append(c)
    return sorted(addable)


def enumerate_staircases(n, nvars=3):
    """
    All order ideals of size n in the exponent lattice

    Args:
        n (int):
            Number of cells, at least 1.
        nvars (int):
            Number of variables.

    Returns:
        list:
            Sorted tuples of exponent tuples, in lexicographic order.

    """
    if n < 1:
        raise ValueError("Colength must be at least 1")
    level = {((0,) * nvars,)}
    for _ in range(n - 1):
        grown = set()
        for cells in level:
            for c in addable_cells(cells):
                grown.add(tuple(sorted(cells + (c,))))
        level = grown
    return sorted(level)


def staircase_ideal(ring, cells):
    """Monomial ideal whose standard monomials are the given cells."""
    return ht.Ideal(ring, [ring.monomial(m) for m in addable_cells(cells)])


def enumerate_monomial_ideals(n, ring=None):
    """
    All monomial ideals of colength n in three variables

    Args:
        n (int):
            The colength, at least 1.
        ring (RingContext):
            Ring in three variables, by default Q[x, y, z] with the standard
            grading.

    Returns:
        list:
            Ideals generated by their minimal monomials, ordered
            lexicographically by sorted staircase.

    """
    if ring is None:
        ring = ht.RingContext(("x", "y", "z"))
    staircases = enumerate_staircases(n, ring.nvars)
    ht.logger.verbose(f"{len(staircases)} monomial ideals of colength {n}")
    return [staircase_ideal(ring, cells) for cells in staircases]
