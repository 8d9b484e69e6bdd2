"""Exception hierarchy for madics.

Every domain error raised by the library derives from MadicError so
callers (and the CLI) can distinguish validation failures from bugs.
Plain ZeroDivisionError is reused for inversion of zero, matching the
built-in semantics.
"""


class MadicError(Exception):
    """Base class for all madics domain errors."""


class NonPrimeModulus(MadicError):
    """A field characteristic or code length that must be prime is not."""


class FieldTooLarge(MadicError):
    """Requested field size q**t exceeds the supported cap."""


class NonUnitLeadingCoefficient(MadicError):
    """Polynomial division by a divisor whose leading coefficient is not a unit."""


class BothZero(MadicError):
    """gcd of two zero polynomials is undefined."""


class NotADivisor(MadicError):
    """Exact polynomial division requested but the remainder is nonzero."""


class ZeroCode(MadicError):
    """The zero code (generator x**p - 1) has no idempotent generator."""


class NotCoprime(MadicError):
    """Two quantities that must be coprime are not."""


class InvalidM(MadicError):
    """Class count m does not divide p - 1 (or is < 2)."""


class NotPrimitiveRoot(MadicError):
    """Supplied base b does not generate the multiplicative group mod p."""


class MultiplierNotCyclic(MadicError):
    """Multiplier a lies in a class whose index is not coprime to m, so it
    does not cyclically permute the residue classes."""


class QNotResidue(MadicError):
    """Field size q is not an m-adic residue mod p, so class polynomials
    do not descend to F_q."""


class IncompatibleS(MadicError):
    """Ring parameter s violates (s - 1) | (q - 1)."""


class BadSlotIndex(MadicError):
    """A slot assignment references a class index outside [0, m)."""


class TooLarge(MadicError):
    """An exhaustive enumeration would exceed the configured cap."""
