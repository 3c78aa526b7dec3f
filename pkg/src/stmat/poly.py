"""Supertropical polynomials in one variable, viewed as functions.

A polynomial is a dense coefficient list indexed by degree.  Its graph data
is the point set (i, nu-value of coeff i); the upper concave hull of that
set determines which monomials matter (essential part) and where the
function goes ghost on tangible inputs (corner roots, read off as the
negated hull slopes).  All hull geometry is computed on exact rationals.
"""

from fractions import Fraction

from .errors import ParseError, PreconditionError
from .semiring import Element, ONE, ZERO, ssum

ESSENTIAL = "essential"
QUASI_ESSENTIAL = "quasi-essential"
INESSENTIAL = "inessential"


class Poly:
    """Dense supertropical polynomial; trailing ZERO coefficients stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        while len(coeffs) > 1 and coeffs[-1].is_zero:
            coeffs.pop()
        if not coeffs:
            coeffs = [ZERO]
        self.coeffs = tuple(coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return len(self.coeffs) == 1 and self.coeffs[0].is_zero

    @property
    def is_monic(self):
        return self.coeffs[-1] == ONE

    def eval(self, a):
        """Max over monomials alpha_i * a^i, with ghost ties."""
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            terms.append(c if i == 0 else c * a ** i)
        return ssum(terms)

    # -- hull machinery -------------------------------------------------

    def _points(self, skip=None):
        return [(i, c.value) for i, c in enumerate(self.coeffs)
                if not c.is_zero and i != skip]

    def monomial_classes(self):
        """Classify each monomial as essential / quasi-essential / inessential.

        A monomial is essential when its point lies strictly above the upper
        concave hull of the remaining points, quasi-essential when it lies on
        that hull, inessential otherwise.  ZERO coefficients are inessential.
        """
        classes = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero:
                classes.append(INESSENTIAL)
                continue
            h = _hull_value(self._points(skip=i), i)
            if h is None or c.value > h:
                classes.append(ESSENTIAL)
            elif c.value == h:
                classes.append(QUASI_ESSENTIAL)
            else:
                classes.append(INESSENTIAL)
        return tuple(classes)

    def essential_part(self):
        """The polynomial keeping only essential monomials (ZERO elsewhere)."""
        classes = self.monomial_classes()
        return Poly([c if k == ESSENTIAL else ZERO
                     for c, k in zip(self.coeffs, classes)])

    def corner_roots(self):
        """Corner roots as (value, multiplicity), values decreasing.

        Roots are the negated slopes of the upper concave hull of the
        coefficient points, each with multiplicity equal to the horizontal
        extent of its hull segment; if the hull stops above degree 0 the
        remaining extent is the root -inf (value None).
        """
        if self.is_zero or self.degree == 0:
            raise PreconditionError("corner roots need a non-constant polynomial")
        pts = self._points()
        hull = _upper_hull(pts)
        roots = []
        for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
            slope = Fraction(y2 - y1, x2 - x1)
            roots.append((-slope, x2 - x1))
        roots.reverse()
        low = hull[0][0]
        if low > 0:
            roots.append((None, low))
        return roots

    def is_primary(self):
        """True iff the polynomial has a unique corner root (monic input)."""
        if not self.is_monic:
            raise PreconditionError("is_primary expects a monic polynomial")
        return len(self.corner_roots()) == 1

    def ghost_surpasses(self, other):
        """Coefficientwise ghost-surpassing, padding with ZERO."""
        width = max(len(self.coeffs), len(other.coeffs))
        for i in range(width):
            a = self.coeffs[i] if i < len(self.coeffs) else ZERO
            b = other.coeffs[i] if i < len(other.coeffs) else ZERO
            if not a.ghost_surpasses(b):
                return False
        return True

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        width = max(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(width):
            a = self.coeffs[i] if i < len(self.coeffs) else ZERO
            b = other.coeffs[i] if i < len(other.coeffs) else ZERO
            out.append(a + b)
        return Poly(out)

    def __mul__(self, other):
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers take a non-negative int")
        acc = Poly([ONE])
        for _ in range(k):
            acc = acc * self
        return acc

    # -- text and JSON forms ----------------------------------------------

    def to_text(self, var="l"):
        if self.is_zero:
            return "-inf"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c.is_zero:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                lam = var if i == 1 else f"{var}^{i}"
                parts.append(lam if c == ONE else f"{c} {lam}")
        return " + ".join(parts)

    @staticmethod
    def from_text(text, var="l"):
        text = text.strip()
        if text == "-inf":
            return Poly([ZERO])
        coeffs = {}
        for raw in text.split("+"):
            term = raw.strip()
            if not term:
                raise ParseError(f"empty term in polynomial: {text!r}")
            if var in term:
                head, _, tail = term.partition(var)
                head = head.strip()
                tail = tail.strip()
                deg = 1
                if tail:
                    if not tail.startswith("^"):
                        raise ParseError(f"bad term {term!r}")
                    deg = int(tail[1:])
                coeff = ONE if not head else Element.parse(head)
            else:
                deg = 0
                coeff = Element.parse(term)
            if deg in coeffs:
                coeffs[deg] = coeffs[deg] + coeff
            else:
                coeffs[deg] = coeff
        out = [ZERO] * (max(coeffs) + 1)
        for d, c in coeffs.items():
            out[d] = c
        return Poly(out)

    def to_tokens(self):
        """Coefficient tokens, index 0 first."""
        return [str(c) for c in self.coeffs]

    @staticmethod
    def from_tokens(tokens):
        return Poly([Element.parse(t) for t in tokens])

    # -- plumbing ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({self.to_text()})"


def _upper_hull(points):
    """Upper concave hull of (x, y) points with distinct increasing x."""
    hull = []
    for p in points:
        while len(hull) >= 2 and _turns_up(hull[-2], hull[-1], p):
            hull.pop()
        hull.append(p)
    return hull


def _turns_up(a, b, c):
    # b on or below segment a-c: drop it from the upper hull.
    return (b[1] - a[1]) * (c[0] - a[0]) <= (c[1] - a[1]) * (b[0] - a[0])


def _hull_value(points, x):
    """Height of the upper hull at abscissa x, or None when outside/empty."""
    if not points:
        return None
    hull = _upper_hull(points)
    if x < hull[0][0] or x > hull[-1][0]:
        return None
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        if x1 <= x <= x2:
            return y1 + Fraction(y2 - y1, x2 - x1) * (x - x1)
    return hull[0][1] if x == hull[0][0] else None
