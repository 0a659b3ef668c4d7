#
# Exceptions raised by hilbtan
#


class ParseError(ValueError):
    """
    A polynomial expression or ideal file could not be read

    Args:
        message (str):
            Human readable description.
        position (int):
            Zero based character offset of the offending token, or None when
            the error is not tied to a position.

    """

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UnknownVariableError(ParseError):
    pass


class NegativeExponentError(ParseError):
    pass


class NotHomogeneousError(ValueError):
    pass


class NoHeftVectorError(ValueError):
    pass


class InfiniteQuotientError(ValueError):
    pass


class DegenerateIdealError(ValueError):
    pass


class UnsupportedSubstitutionError(ValueError):
    pass


class BidegreeMismatchError(ValueError):
    pass


class VerificationError(AssertionError):
    """
    A computed quantity disagrees with its expected value

    Args:
        mismatches (list):
            (name, expected, computed) triples, one per offending quantity.

    """

    def __init__(self, mismatches):
        self.mismatches = list(mismatches)
        text = ", ".join(
            f"{name}: expected {expected}, computed {computed}"
            for name, expected, computed in self.mismatches
        )
        super().__init__("Verification failed - " + text)
