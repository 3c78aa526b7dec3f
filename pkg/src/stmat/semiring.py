"""Exact scalar arithmetic in a divisible supertropical semifield.

Scalars are rational numbers in logarithmic notation, each carrying a tag:
TANGIBLE, GHOST, or ZERO (the adjoined bottom element, printed ``-inf``).
Addition is max-with-ghost-ties: if the two arguments have the same
nu-value the sum is the ghost of that value, otherwise the dominant
argument is returned unchanged.  Multiplication adds log-values, and the
ghosts form a multiplicative ideal.  Values are `fractions.Fraction`, so
roots (scaling the log-value by 1/n) and long products stay exact.
"""

import enum
import re
from fractions import Fraction

from .errors import ParseError, PreconditionError


class Tag(enum.Enum):
    TANGIBLE = "tangible"
    GHOST = "ghost"
    ZERO = "zero"


_TOKEN_RE = re.compile(r"^(-inf|[+-]?\d+(?:/\d+)?(?P<ghost>v)?)$")


class Element:
    """An immutable supertropical scalar: a rational log-value plus a tag.

    ZERO is the only element with ``value is None``; the map from ghosts to
    tangibles (``hat``) is a two-sided section of ``nu`` because exactly one
    tangible element sits in each nu-class.
    """

    __slots__ = ("value", "tag")

    def __init__(self, value, tag):
        if tag is Tag.ZERO:
            if value is not None:
                raise ValueError("ZERO must have value None")
        else:
            if value is None:
                raise ValueError("only ZERO may have value None")
            if not isinstance(value, Fraction):
                value = Fraction(value)
        self.value = value
        self.tag = tag

    # -- constructors -------------------------------------------------

    @staticmethod
    def parse(token):
        """Parse ``p/q`` (tangible), ``p/qv`` (ghost) or ``-inf`` (zero)."""
        token = token.strip()
        m = _TOKEN_RE.match(token)
        if not m:
            raise ParseError(f"bad element token: {token!r}")
        if token == "-inf":
            return ZERO
        if m.group("ghost"):
            return Element(Fraction(token[:-1]), Tag.GHOST)
        return Element(Fraction(token), Tag.TANGIBLE)

    # -- predicates ----------------------------------------------------

    @property
    def is_tangible(self):
        return self.tag is Tag.TANGIBLE

    @property
    def is_ghost(self):
        return self.tag is Tag.GHOST

    @property
    def is_zero(self):
        return self.tag is Tag.ZERO

    @property
    def in_ghost_ideal(self):
        """Membership in the ghost ideal with zero adjoined."""
        return self.tag is not Tag.TANGIBLE

    @property
    def nu_value(self):
        """The nu-value as a Fraction, or None for ZERO."""
        return self.value

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if self.tag is Tag.ZERO:
            return other
        if other.tag is Tag.ZERO:
            return self
        if self.value > other.value:
            return self
        if other.value > self.value:
            return other
        return Element(self.value, Tag.GHOST)

    def __mul__(self, other):
        if self.tag is Tag.ZERO or other.tag is Tag.ZERO:
            return ZERO
        tag = Tag.GHOST if (self.tag is Tag.GHOST or other.tag is Tag.GHOST) else Tag.TANGIBLE
        return Element(self.value + other.value, tag)

    def __pow__(self, r):
        """Scale the log-value by a rational r; the tag is preserved.

        Integer r gives powers, r = 1/n gives n-th roots.  ZERO is only
        closed under positive exponents.
        """
        if not isinstance(r, (int, Fraction)):
            raise TypeError(f"exponent must be int or Fraction, got {type(r).__name__}")
        if self.tag is Tag.ZERO:
            if r <= 0:
                raise PreconditionError("ZERO cannot be raised to a non-positive power")
            return ZERO
        return Element(self.value * r, self.tag)

    def nu(self):
        """Ghost map: same value, tag GHOST (ZERO is fixed)."""
        if self.tag is Tag.ZERO:
            return self
        return Element(self.value, Tag.GHOST)

    def hat(self):
        """Tangible section of nu: same value, tag TANGIBLE (ZERO is fixed)."""
        if self.tag is Tag.ZERO:
            return self
        return Element(self.value, Tag.TANGIBLE)

    # -- relations -----------------------------------------------------

    def ghost_surpasses(self, other):
        """True iff self = other, or self = other + (some ghost)."""
        if self == other:
            return True
        if self.tag is Tag.GHOST:
            return other.tag is Tag.ZERO or self.value >= other.value
        return False

    def ghost_dependent(self, other):
        """True iff self + other lands in the ghost ideal (with zero)."""
        return (self + other).tag is not Tag.TANGIBLE

    def nu_eq(self, other):
        return self.value == other.value

    def nu_le(self, other):
        if self.tag is Tag.ZERO:
            return True
        if other.tag is Tag.ZERO:
            return False
        return self.value <= other.value

    def nu_lt(self, other):
        return self.nu_le(other) and not self.nu_eq(other)

    def nu_ge(self, other):
        return other.nu_le(self)

    def nu_gt(self, other):
        return other.nu_lt(self)

    # -- plumbing --------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.tag is other.tag and self.value == other.value

    def __hash__(self):
        return hash((self.value, self.tag))

    def __str__(self):
        if self.tag is Tag.ZERO:
            return "-inf"
        return str(self.value) + ("v" if self.tag is Tag.GHOST else "")

    def __repr__(self):
        return f"Element({self})"


ZERO = Element(None, Tag.ZERO)
ONE = Element(Fraction(0), Tag.TANGIBLE)


def tangible(x):
    return Element(Fraction(x), Tag.TANGIBLE)


def ghost(x):
    return Element(Fraction(x), Tag.GHOST)


def ssum(items):
    """Supertropical sum of an iterable (ZERO if empty)."""
    acc = ZERO
    for x in items:
        acc = acc + x
    return acc


def sprod(items):
    """Supertropical product of an iterable (ONE if empty)."""
    acc = ONE
    for x in items:
        acc = acc * x
    return acc
