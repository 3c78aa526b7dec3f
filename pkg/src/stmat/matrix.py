"""Dense supertropical matrices and vectors.

The determinant is the permanent, computed by exhausting permutations so
that ghost ties are found exactly; the characteristic polynomial collects
principal-submatrix permanents.  Everything enumeration-based is protected
by a size cap (default n <= 8).
"""

import itertools

from .errors import ParseError, PreconditionError, SizeCapError
from .poly import Poly
from .semiring import Element, ONE, ZERO, sprod, ssum

DEFAULT_MAX_N = 8


def _check_cap(n, max_n, what):
    cap = DEFAULT_MAX_N if max_n is None else max_n
    if n > cap:
        raise SizeCapError(f"{what} on a {n}x{n} matrix exceeds the size cap {cap}")


class Vector:
    """A column vector of Elements."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = tuple(entries)

    @property
    def n(self):
        return len(self.entries)

    @property
    def is_tangible(self):
        """All entries tangible-or-zero, at least one non-ZERO."""
        return (all(not e.is_ghost for e in self.entries)
                and any(not e.is_zero for e in self.entries))

    @property
    def is_ghost(self):
        """All entries in the ghost ideal (ghost or zero)."""
        return all(e.in_ghost_ideal for e in self.entries)

    @property
    def is_zero(self):
        return all(e.is_zero for e in self.entries)

    def __add__(self, other):
        return Vector(a + b for a, b in zip(self.entries, other.entries))

    def scale(self, c):
        return Vector(c * e for e in self.entries)

    def hat(self):
        return Vector(e.hat() for e in self.entries)

    def ghost_surpasses(self, other):
        return all(a.ghost_surpasses(b) for a, b in zip(self.entries, other.entries))

    def to_tokens(self):
        return [str(e) for e in self.entries]

    @staticmethod
    def parse(tokens):
        return Vector(Element.parse(t) for t in tokens)

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"Vector({' '.join(self.to_tokens())})"


class Matrix:
    """An immutable square matrix of Elements."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ParseError("matrix must be square and non-empty")
        self.rows = rows

    # -- constructors ----------------------------------------------------

    @staticmethod
    def parse(token_rows):
        return Matrix([[Element.parse(t) for t in row] for row in token_rows])

    @staticmethod
    def identity(n):
        return Matrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(n):
        return Matrix([[ZERO] * n for _ in range(n)])

    @staticmethod
    def diagonal(entries):
        entries = list(entries)
        n = len(entries)
        return Matrix([[entries[i] if i == j else ZERO for j in range(n)]
                       for i in range(n)])

    @staticmethod
    def from_json_dict(data):
        if not isinstance(data, dict) or "n" not in data or "entries" not in data:
            raise ParseError("matrix JSON needs keys 'n' and 'entries'")
        n = data["n"]
        entries = data["entries"]
        if not isinstance(n, int) or not isinstance(entries, list) or len(entries) != n:
            raise ParseError("matrix JSON has inconsistent dimensions")
        rows = []
        for row in entries:
            if not isinstance(row, list) or len(row) != n:
                raise ParseError("matrix JSON has inconsistent dimensions")
            out = []
            for tok in row:
                if isinstance(tok, int):
                    tok = str(tok)
                if not isinstance(tok, str):
                    raise ParseError(f"matrix entries must be tokens, got {tok!r}")
                out.append(Element.parse(tok))
            rows.append(out)
        return Matrix(rows)

    def to_json_dict(self):
        return {"n": self.n, "entries": self.to_tokens()}

    def to_tokens(self):
        return [[str(e) for e in row] for row in self.rows]

    # -- basic structure ---------------------------------------------------

    @property
    def n(self):
        return len(self.rows)

    def entry(self, i, j):
        return self.rows[i][j]

    def column(self, j):
        return Vector(row[j] for row in self.rows)

    def submatrix(self, row_idx, col_idx):
        return Matrix([[self.rows[i][j] for j in col_idx] for i in row_idx])

    def principal(self, idx):
        return self.submatrix(idx, idx)

    def minor(self, del_row, del_col):
        keep_r = [i for i in range(self.n) if i != del_row]
        keep_c = [j for j in range(self.n) if j != del_col]
        return self.submatrix(keep_r, keep_c)

    def permuted(self, perm):
        """Conjugate by the permutation: new[i][j] = old[perm[i]][perm[j]]."""
        return Matrix([[self.rows[pi][pj] for pj in perm] for pi in perm])

    def with_entry(self, i, j, e):
        rows = [list(r) for r in self.rows]
        rows[i][j] = e
        return Matrix(rows)

    @property
    def is_ghost_matrix(self):
        return all(e.in_ghost_ideal for row in self.rows for e in row)

    def nu_equiv(self, other):
        """Entrywise nu-equivalence (tags ignored, zeros must match)."""
        return all(a.value == b.value
                   for ra, rb in zip(self.rows, other.rows)
                   for a, b in zip(ra, rb))

    def ghost_surpasses(self, other):
        return all(a.ghost_surpasses(b)
                   for ra, rb in zip(self.rows, other.rows)
                   for a, b in zip(ra, rb))

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if self.n != other.n:
            raise PreconditionError("matrix addition needs equal dimensions")
        return Matrix([[a + b for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.rows, other.rows)])

    def __matmul__(self, other):
        if isinstance(other, Vector):
            if other.n != self.n:
                raise PreconditionError("matrix-vector product needs equal dimensions")
            return Vector(ssum(a * x for a, x in zip(row, other.entries))
                          for row in self.rows)
        if self.n != other.n:
            raise PreconditionError("matrix product needs equal dimensions")
        cols = list(zip(*other.rows))
        return Matrix([[ssum(a * b for a, b in zip(row, col)) for col in cols]
                       for row in self.rows])

    def scale(self, c):
        return Matrix([[c * e for e in row] for row in self.rows])

    def __rmul__(self, c):
        if isinstance(c, Element):
            return self.scale(c)
        return NotImplemented

    def __pow__(self, m):
        if not isinstance(m, int) or m < 0:
            raise PreconditionError("matrix powers take a non-negative int")
        result = Matrix.identity(self.n)
        base = self
        while m:
            if m & 1:
                result = result @ base
            m >>= 1
            if m:
                base = base @ base
        return result

    # -- permanent-based operations ------------------------------------------

    def permanent(self, max_n=None):
        """The supertropical determinant: max over permutation products,
        with nu-equal ties collapsing to a ghost."""
        _check_cap(self.n, max_n, "permanent")
        return _permanent(self.rows)

    def is_nonsingular(self, max_n=None):
        return self.permanent(max_n).is_tangible

    def adjoint(self, max_n=None):
        """(i, j) entry = permanent of the minor deleting row j, column i."""
        _check_cap(self.n, max_n, "adjoint")
        return Matrix([[_permanent(self.minor(j, i).rows) for j in range(self.n)]
                       for i in range(self.n)])

    def trace(self):
        return ssum(self.rows[i][i] for i in range(self.n))

    def char_poly(self, max_n=None):
        """Monic characteristic polynomial; the coefficient of lambda^(n-k)
        sums the permanents of all k x k principal submatrices."""
        _check_cap(self.n, max_n, "char_poly")
        n = self.n
        coeffs = [ZERO] * (n + 1)
        coeffs[n] = ONE
        for k in range(1, n + 1):
            coeffs[n - k] = ssum(_permanent(self.principal(idx).rows)
                                 for idx in itertools.combinations(range(n), k))
        return Poly(coeffs)

    def eval_poly(self, f):
        """f(A) with A^0 = I."""
        acc = Matrix.zeros(self.n)
        power = Matrix.identity(self.n)
        for i, c in enumerate(f.coeffs):
            if i > 0:
                power = power @ self
            if not c.is_zero:
                acc = acc + power.scale(c)
        return acc

    def rank(self, max_n=None):
        """Largest k with a nonsingular k x k submatrix (0 for ghost matrices)."""
        _check_cap(self.n, max_n, "rank")
        for k in range(self.n, 0, -1):
            for row_idx in itertools.combinations(range(self.n), k):
                for col_idx in itertools.combinations(range(self.n), k):
                    if _permanent(self.submatrix(row_idx, col_idx).rows).is_tangible:
                        return k
        return 0

    # -- plumbing ---------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __str__(self):
        return "\n".join(" ".join(str(e) for e in row) for row in self.rows)

    def __repr__(self):
        return f"Matrix({self.to_tokens()})"


def _permanent(rows):
    n = len(rows)
    if n == 0:
        return ONE
    return ssum(sprod(rows[i][sigma[i]] for i in range(n))
                for sigma in itertools.permutations(range(n)))
