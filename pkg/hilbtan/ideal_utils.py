#
# Utility functions for reading and writing ideal input files
#
import os
import re
from dataclasses import dataclass

import hilbtan as ht


_DEGREE = re.compile(r"deg\s+(?P<var>\S+)\s*=\s*\((?P<entries>[^)]*)\)\s*\Z")


@dataclass
class IdealInputFile:
    """
    Contents of an ideal input file

    Args:
        ring (RingContext):
            Ring with the declared variables, grading and order.
        generators (list):
            The generators, in file order.
        torus_row (int):
            Grading row carrying torus weights, or None for the default.
        path (str):
            Where the file was read from.

    """

    ring: object
    generators: list
    torus_row: int = None
    path: str = None

    @property
    def ideal(self):
        return ht.Ideal(self.ring, self.generators)


def _resolve(filepath):
    if "." not in os.path.basename(filepath):
        filepath += ".ideal"
    if not os.path.isfile(filepath):
        temp = os.path.join(ht.IDEAL_DIR, filepath)
        if os.path.isfile(temp):
            filepath = temp
        else:
            raise FileNotFoundError(f"No ideal file {filepath!r}")
    return filepath


def read_ideal(filepath, order=None):
    """
    Read an ideal input file

    Lines are ``vars: x y z``, optionally one ``deg <var> = (d1, d2, ...)``
    per variable, optional ``order: grevlex|lex`` and ``torus_row: <int>``,
    and one ``gen: <expression>`` per generator. ``#`` starts a comment.
    Bare names are looked up in the bundled ideal directory and ``.ideal``
    is appended when no extension is given.

    Args:
        filepath (str):
            Path or bundled name, e.g. "odd24".
        order (str):
            Monomial order overriding the file's ``order:`` line.

    Returns:
        IdealInputFile

    Raises:
        FileNotFoundError: when the file does not exist.
        ParseError: on a malformed line, with its line number.

    """
    filepath = _resolve(filepath)
    with open(filepath, "r", encoding="utf-8") as f:
        lines = f.readlines()

    variables = None
    degrees = {}
    gen_lines = []
    file_order = "grevlex"
    torus_row = None
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vars:"):
            if variables is not None:
                raise ht.ParseError(f"Line {lineno}: variables declared twice")
            variables = tuple(line[len("vars:") :].split())
        elif line.startswith("deg"):
            match = _DEGREE.match(line)
            if match is None:
                raise ht.ParseError(f"Line {lineno}: malformed degree line")
            try:
                entries = tuple(int(x) for x in match["entries"].split(","))
            except ValueError:
                raise ht.ParseError(f"Line {lineno}: degrees must be integers")
            degrees[match["var"]] = (entries, lineno)
        elif line.startswith("order:"):
            file_order = line[len("order:") :].strip()
        elif line.startswith("torus_row:"):
            try:
                torus_row = int(line[len("torus_row:") :])
            except ValueError:
                raise ht.ParseError(f"Line {lineno}: torus_row must be an integer")
        elif line.startswith("gen:"):
            gen_lines.append((line[len("gen:") :].strip(), lineno))
        else:
            raise ht.ParseError(f"Line {lineno}: unrecognised line {line!r}")

    if variables is None:
        raise ht.ParseError("Missing 'vars:' line")
    for name, (_, lineno) in degrees.items():
        if name not in variables:
            raise ht.UnknownVariableError(f"Line {lineno}: unknown variable {name!r}")
    if degrees and len(degrees) != len(variables):
        raise ht.ParseError("Give a degree line for every variable or for none")
    grading = None
    if degrees:
        grading = ht.MultiGrading(tuple(degrees[name][0] for name in variables))
    order = ht.MonomialOrder(order if order is not None else file_order)
    ring = ht.RingContext(variables, grading, order)

    generators = []
    for text, lineno in gen_lines:
        try:
            generators.append(ht.parse_polynomial(text, ring))
        except ht.ParseError as err:
            raise type(err)(f"Line {lineno}: {err}") from err
    ht.logger.info(f"Read {len(generators)} generators from {filepath}")
    return IdealInputFile(ring, generators, torus_row, filepath)


def write_ideal(ideal, filename, torus_row=None):
    """
    Write an ideal input file

    Args:
        ideal (Ideal or IdealInputFile):
            The ideal to write.
        filename (str):
            Output path.
        torus_row (int):
            Written as a ``torus_row:`` line when given.

    Returns:
        None

    """
    if isinstance(ideal, IdealInputFile):
        torus_row = ideal.torus_row if torus_row is None else torus_row
        ring, generators = ideal.ring, ideal.generators
    else:
        ring, generators = ideal.ring, ideal.generators
    lines = ["# " + os.path.basename(filename)]
    lines.append("vars: " + " ".join(ring.variables))
    if ring.grading != ht.MultiGrading.standard(ring.nvars):
        for name, d in zip(ring.variables, ring.grading.degrees):
            lines.append(f"deg {name} = (" + ", ".join(str(x) for x in d) + ")")
    if ring.order.kind != "weighted":
        lines.append("order: " + ring.order.kind)
    if torus_row is not None:
        lines.append(f"torus_row: {torus_row}")
    for g in generators:
        lines.append("gen: " + str(g))
    with open(filename, "w", encoding="utf-8") as f:
        for line in lines:
            f.write(line)
            f.write("\n")
