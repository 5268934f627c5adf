"""Exact dense linear algebra over prime fields F_p and the rationals.

Scalars are plain Python ints (canonical residues for F_p) or
``fractions.Fraction`` for Q, so every computation downstream of this
module is field-exact.  Elimination uses first-nonzero pivoting so that
all derived bases are deterministic.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ValidationError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n in (2, 3):
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class FieldSpec:
    """A prime field F_p (``p`` set) or the rationals Q (``p`` is None)."""

    __slots__ = ("p",)

    def __init__(self, p=None):
        if p is not None:
            if not _is_prime(p):
                raise ValidationError(f"{p} is not prime")
        self.p = p

    @staticmethod
    def rationals() -> "FieldSpec":
        return FieldSpec(None)

    @staticmethod
    def prime(p: int) -> "FieldSpec":
        return FieldSpec(p)

    @property
    def char(self) -> int:
        return self.p or 0

    def zero(self):
        return 0 if self.p else Fraction(0)

    def one(self):
        return 1 if self.p else Fraction(1)

    def of(self, value):
        """Coerce an int, Fraction or ``num/den`` string into the field."""
        if isinstance(value, str):
            value = value.strip()
            if "/" in value:
                num, den = value.split("/")
                return self.div(self.of(int(num)), self.of(int(den)))
            value = int(value)
        if self.p is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ValidationError(f"denominator not invertible mod {self.p}")
            return (value.numerator * pow(value.denominator, -1, self.p)) % self.p
        return value % self.p

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p else a * b

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def inv(self, a):
        if self.p:
            if a % self.p == 0:
                raise ZeroDivisionError("inverse of zero")
            return pow(a, -1, self.p)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def literal(self, a) -> str:
        """Render a scalar the way input files spell it."""
        if self.p is None and a.denominator != 1:
            return f"{a.numerator}/{a.denominator}"
        return str(int(a) if self.p is None else a)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.p == other.p

    def __hash__(self):
        return hash(("FieldSpec", self.p))

    def __repr__(self):
        return "Q" if self.p is None else f"F{self.p}"


class Matrix:
    """Dense row-major matrix over a FieldSpec.

    Treated as immutable after construction; all operations return new
    matrices.  Zero-row and zero-column shapes are fully supported since
    representations routinely have empty vertex spaces.
    """

    __slots__ = ("rows", "cols", "data", "field")

    def __init__(self, rows, cols, data, field):
        if len(data) != rows:
            raise ValidationError("row count mismatch")
        for r in data:
            if len(r) != cols:
                raise ValidationError("column count mismatch")
        self.rows = rows
        self.cols = cols
        self.data = [list(r) for r in data]
        self.field = field

    @staticmethod
    def zeros(rows, cols, field) -> "Matrix":
        z = field.zero()
        return Matrix(rows, cols, [[z] * cols for _ in range(rows)], field)

    @staticmethod
    def identity(n, field) -> "Matrix":
        m = Matrix.zeros(n, n, field)
        for i in range(n):
            m.data[i][i] = field.one()
        return m

    @staticmethod
    def from_rows(data, field, cols=None) -> "Matrix":
        rows = len(data)
        if cols is None:
            if rows == 0:
                raise ValidationError("cannot infer column count of empty matrix")
            cols = len(data[0])
        coerced = [[field.of(x) for x in r] for r in data]
        return Matrix(rows, cols, coerced, field)

    def copy(self) -> "Matrix":
        return Matrix(self.rows, self.cols, self.data, self.field)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.field == other.field
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} over {self.field})"

    def is_zero(self) -> bool:
        z = self.field.zero()
        return all(x == z for row in self.data for x in row)

    def __add__(self, other) -> "Matrix":
        f = self.field
        return Matrix(
            self.rows,
            self.cols,
            [
                [f.add(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ],
            f,
        )

    def __sub__(self, other) -> "Matrix":
        f = self.field
        return Matrix(
            self.rows,
            self.cols,
            [
                [f.sub(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ],
            f,
        )

    def __neg__(self) -> "Matrix":
        f = self.field
        return Matrix(
            self.rows, self.cols, [[f.neg(a) for a in r] for r in self.data], f
        )

    def scale(self, c) -> "Matrix":
        f = self.field
        return Matrix(
            self.rows, self.cols, [[f.mul(c, a) for a in r] for r in self.data], f
        )

    def __mul__(self, other) -> "Matrix":
        if self.cols != other.rows:
            raise ValidationError(
                f"shape mismatch: {self.rows}x{self.cols} * {other.rows}x{other.cols}"
            )
        f = self.field
        out = Matrix.zeros(self.rows, other.cols, f)
        for i in range(self.rows):
            row = self.data[i]
            acc = out.data[i]
            for k in range(self.cols):
                a = row[k]
                if a == 0:
                    continue
                orow = other.data[k]
                for j in range(other.cols):
                    b = orow[j]
                    if b != 0:
                        acc[j] = f.add(acc[j], f.mul(a, b))
        return out

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols,
            self.rows,
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            self.field,
        )

    def hstack(self, other) -> "Matrix":
        if self.rows != other.rows:
            raise ValidationError("hstack row mismatch")
        return Matrix(
            self.rows,
            self.cols + other.cols,
            [ra + rb for ra, rb in zip(self.data, other.data)],
            self.field,
        )

    def vstack(self, other) -> "Matrix":
        if self.cols != other.cols:
            raise ValidationError("vstack column mismatch")
        return Matrix(
            self.rows + other.rows, self.cols, self.data + other.data, self.field
        )

    def row(self, i) -> list:
        return list(self.data[i])

    def submatrix(self, rows, cols) -> "Matrix":
        return Matrix(
            len(rows),
            len(cols),
            [[self.data[i][j] for j in cols] for i in rows],
            self.field,
        )


def rref(m: Matrix):
    """Reduced row echelon form.

    Returns ``(echelon, pivot_columns, rank)``.  Pivoting always picks the
    first row with a nonzero entry in the current column, so the output is
    a deterministic function of the input.
    """
    f = m.field
    a = [list(r) for r in m.data]
    pivots = []
    r = 0
    for c in range(m.cols):
        pr = None
        for i in range(r, m.rows):
            if a[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = f.inv(a[r][c])
        a[r] = [f.mul(inv, x) for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                coef = a[i][c]
                a[i] = [f.sub(x, f.mul(coef, y)) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return Matrix(m.rows, m.cols, a, f), pivots, len(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[2]


def solve(a: Matrix, b: Matrix):
    """Some exact solution x of a*x = b, or None if the system is inconsistent."""
    if a.rows != b.rows:
        raise ValidationError("solve: row mismatch")
    f = a.field
    aug = a.hstack(b)
    ech, pivots, _ = rref(aug)
    for c in pivots:
        if c >= a.cols:
            return None
    x = Matrix.zeros(a.cols, b.cols, f)
    for r, c in enumerate(pivots):
        for j in range(b.cols):
            x.data[c][j] = ech.data[r][a.cols + j]
    return x


def kernel_basis(m: Matrix) -> Matrix:
    """Columns form a deterministic basis of the right null space of m."""
    f = m.field
    ech, pivots, rk = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    out = Matrix.zeros(m.cols, len(free), f)
    for j, fc in enumerate(free):
        out.data[fc][j] = f.one()
        for r, pc in enumerate(pivots):
            out.data[pc][j] = f.neg(ech.data[r][fc])
    return out


def row_space_basis(m: Matrix) -> Matrix:
    """Nonzero rows of the reduced echelon form."""
    ech, _, rk = rref(m)
    return Matrix(rk, m.cols, ech.data[:rk], m.field)


def is_invertible(m: Matrix) -> bool:
    return m.rows == m.cols and rank(m) == m.rows


def inverse(m: Matrix):
    if m.rows != m.cols:
        return None
    x = solve(m, Matrix.identity(m.rows, m.field))
    if x is None or not (m * x == Matrix.identity(m.rows, m.field)):
        return None
    return x


def in_row_space(v: list, basis: Matrix) -> bool:
    """Whether a row vector lies in the row space of ``basis``."""
    sol = solve(basis.transpose(), Matrix(len(v), 1, [[x] for x in v], basis.field))
    return sol is not None


class LinearSystem:
    """Accumulator for sparse linear equations in named unknowns.

    Downstream modules express morphism conditions (commuting squares,
    lifting equations) as equations here, then ask for a particular
    solution or the full solution space.
    """

    def __init__(self, nunknowns: int, field: FieldSpec):
        self.n = nunknowns
        self.field = field
        self.eqs = []  # list of (coeff dict, rhs)

    def add(self, coeffs: dict, rhs=None):
        if rhs is None:
            rhs = self.field.zero()
        self.eqs.append((coeffs, rhs))

    def _matrices(self):
        f = self.field
        a = Matrix.zeros(len(self.eqs), self.n, f)
        b = Matrix.zeros(len(self.eqs), 1, f)
        for i, (coeffs, rhs) in enumerate(self.eqs):
            for j, c in coeffs.items():
                a.data[i][j] = f.add(a.data[i][j], c)
            b.data[i][0] = rhs
        return a, b

    def solve_any(self):
        """A particular solution as a flat list, or None."""
        a, b = self._matrices()
        x = solve(a, b)
        if x is None:
            return None
        return [x.data[i][0] for i in range(self.n)]

    def kernel(self):
        """Basis of the homogeneous solution space, as flat lists."""
        a, _ = self._matrices()
        k = kernel_basis(a)
        return [[k.data[i][j] for i in range(self.n)] for j in range(k.cols)]
