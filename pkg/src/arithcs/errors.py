"""Exception hierarchy.

Everything raised for bad input derives from :class:`ValidationError`; the
CLI maps that family to exit code 2.  :class:`NormNotMinusOne` is kept apart
because it is a refusal to compute rather than malformed input (exit 3).
"""


class ArithCSError(Exception):
    pass


class ValidationError(ArithCSError, ValueError):
    pass


class NotPrime(ValidationError):
    pass


class NotOneModFour(ValidationError):
    pass


class DuplicatePrime(ValidationError):
    pass


class NotCoprime(ValidationError):
    pass


class PerfectSquare(ValidationError):
    pass


class NotSquarefree(ValidationError):
    pass


class ArityMismatch(ValidationError):
    pass


class IndexOutOfRange(ValidationError, IndexError):
    pass


class NonSymmetric(ValidationError):
    pass


class InvalidLensParams(ValidationError):
    pass


class SchemaError(ValidationError):
    pass


class NormNotMinusOne(ArithCSError):
    """The fundamental unit has norm +1, so Cl+ and Cl may differ."""

    def __init__(self, d: int):
        super().__init__(
            f"fundamental unit of Q(sqrt({d})) has norm +1; "
            "the Legendre-product formula is not justified (use --force to override)"
        )
        self.d = d
