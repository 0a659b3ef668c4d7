#
# Polynomial expression parser
#
import re
from fractions import Fraction

import hilbtan as ht


_TOKEN = re.compile(
    r"\s*(?:(?P<number>[0-9]+(?:/[0-9]+)?)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*^()]))"
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if match is None:
            while text[pos].isspace():
                pos += 1
            raise ht.ParseError(f"Unexpected character {text[pos]!r}", pos)
        kind = match.lastgroup
        start = match.start(kind)
        tokens.append((kind, match.group(kind), start))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, ring):
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def current(self):
        return self.tokens[self.i]

    def advance(self):
        token = self.tokens[self.i]
        self.i += 1
        return token

    def expect_op(self, op):
        kind, value, pos = self.current
        if kind != "op" or value != op:
            found = "end of input" if kind == "end" else repr(value)
            raise ht.ParseError(f"Expected {op!r} but found {found}", pos)
        self.advance()

    def parse(self):
        result = self.sum()
        kind, value, pos = self.current
        if kind != "end":
            raise ht.ParseError(f"Unexpected token {value!r}", pos)
        return result

    def sum(self):
        result = self.product()
        while self.current[0] == "op" and self.current[1] in "+-":
            op = self.advance()[1]
            rhs = self.product()
            result = result + rhs if op == "+" else result - rhs
        return result

    def product(self):
        result = self.unary()
        while self.current[0] == "op" and self.current[1] == "*":
            self.advance()
            result = result * self.unary()
        return result

    def unary(self):
        kind, value, _ = self.current
        if kind == "op" and value in "+-":
            self.advance()
            operand = self.unary()
            return -operand if value == "-" else operand
        return self.power()

    def power(self):
        base = self.atom()
        if self.current[0] == "op" and self.current[1] == "^":
            self.advance()
            kind, value, pos = self.current
            if kind == "op" and value == "-":
                raise ht.NegativeExponentError("Negative exponents are not allowed", pos)
            if kind != "number" or "/" in value:
                raise ht.ParseError("Exponent must be a nonnegative integer", pos)
            self.advance()
            base = base ** int(value)
            if self.current[0] == "op" and self.current[1] == "^":
                raise ht.ParseError(
                    "Chained exponents need parentheses", self.current[2]
                )
        return base

    def atom(self):
        kind, value, pos = self.advance()
        if kind == "number":
            if "/" in value:
                num, den = value.split("/")
                if int(den) == 0:
                    raise ht.ParseError("Zero denominator", pos)
                return self.ring.constant(Fraction(int(num), int(den)))
            return self.ring.constant(int(value))
        if kind == "name":
            if value not in self.ring.variables:
                raise ht.UnknownVariableError(f"Unknown variable {value!r}", pos)
            return self.ring.gen(value)
        if kind == "op" and value == "(":
            inner = self.sum()
            self.expect_op(")")
            return inner
        found = "end of input" if kind == "end" else repr(value)
        raise ht.ParseError(f"Unexpected {found}", pos)


def parse_polynomial(text, ring):
    """
    Parse a polynomial expression

    The grammar accepts ring variables, integer and rational literals (``3/4``),
    ``+``, ``-``, ``*``, ``^`` with a nonnegative integer exponent and
    parentheses. Juxtaposition is not multiplication. The result is fully
    expanded.

    Args:
        text (str):
            The expression, for example "y^3 - x^3*z".
        ring (hilbtan.RingContext):
            Ring supplying the variable names.

    Returns:
        hilbtan.Polynomial:
            The expanded polynomial.

    Raises:
        ParseError: on a syntax error, with the character position.
        UnknownVariableError: for a name that is not a ring variable.
        NegativeExponentError: for ``^-k``.

    """
    return _Parser(text, ring).parse()
