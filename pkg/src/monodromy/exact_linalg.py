"""Exact dense linear algebra over the rationals.

Scalars are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator).  :class:`Matrix` and :class:`Poly` are immutable
value types; every routine here is a pure function of its inputs.

Matrices act on column vectors: column ``j`` holds the image of basis
vector ``j``.
"""
from fractions import Fraction
from itertools import zip_longest

__all__ = [
    "Fraction", "Matrix", "Poly", "Sifter",
    "to_fraction", "format_fraction", "parse_fraction",
    "rref", "rank_and_kernel", "rank", "solve",
    "char_poly", "min_poly", "unipotent_log", "nilpotent_exp",
    "span_basis", "bracket", "is_nilpotent", "is_unipotent",
]


def to_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted: %r" % (x,))
    return Fraction(x)


def format_fraction(x):
    """Serialize as ``"num/den"``, always with an explicit denominator."""
    x = to_fraction(x)
    return "%d/%d" % (x.numerator, x.denominator)


def parse_fraction(s):
    return Fraction(s)


class Matrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows, cols, entries):
        entries = tuple(to_fraction(x) for x in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ValueError(
                "expected %d x %d = %d entries, got %d"
                % (rows, cols, rows * cols, len(entries)))
        self.rows = rows
        self.cols = cols
        self._data = entries

    @classmethod
    def _raw(cls, rows, cols, entries):
        # entries already a tuple of Fractions
        m = object.__new__(cls)
        m.rows = rows
        m.cols = cols
        m._data = entries
        return m

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        if not rows:
            return cls(0, 0, ())
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def from_columns(cls, columns):
        columns = [tuple(c) for c in columns]
        if not columns:
            raise ValueError("need at least one column")
        if not columns[0]:
            return cls(0, len(columns), ())
        return cls.from_rows(zip(*columns))

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        return cls._raw(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n):
        one, zero = Fraction(1), Fraction(0)
        return cls._raw(n, n, tuple(
            one if i == j else zero for i in range(n) for j in range(n)))

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def is_square(self):
        return self.rows == self.cols

    @property
    def entries(self):
        return self._data

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self._data[i * self.cols + j]

    def row(self, i):
        return self._data[i * self.cols:(i + 1) * self.cols]

    def column(self, j):
        return self._data[j::self.cols] if self.rows else ()

    def tolist(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    @property
    def T(self):
        return Matrix._raw(self.cols, self.rows, tuple(
            self._data[i * self.cols + j]
            for j in range(self.cols) for i in range(self.rows)))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch: %s vs %s" % (self.shape, other.shape))

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other)
        return Matrix._raw(self.rows, self.cols, tuple(
            x + y for x, y in zip(self._data, other._data)))

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other)
        return Matrix._raw(self.rows, self.cols, tuple(
            x - y for x, y in zip(self._data, other._data)))

    def __neg__(self):
        return Matrix._raw(self.rows, self.cols, tuple(-x for x in self._data))

    def __mul__(self, scalar):
        if isinstance(scalar, Matrix):
            raise TypeError("use @ for matrix products")
        s = to_fraction(scalar)
        return Matrix._raw(self.rows, self.cols, tuple(s * x for x in self._data))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        s = to_fraction(scalar)
        return Matrix._raw(self.rows, self.cols, tuple(x / s for x in self._data))

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("cannot multiply %s by %s" % (self.shape, other.shape))
        n, m = self.rows, other.cols
        a_rows = [self.row(i) for i in range(n)]
        b_cols = [other.column(j) for j in range(m)]
        zero = Fraction(0)
        out = []
        for r in a_rows:
            for c in b_cols:
                s = zero
                for x, y in zip(r, c):
                    if x and y:
                        s += x * y
                out.append(s)
        return Matrix._raw(n, m, tuple(out))

    def apply(self, v):
        """Image of the column vector ``v``."""
        v = tuple(to_fraction(x) for x in v)
        if len(v) != self.cols:
            raise ValueError("vector of length %d for %s matrix" % (len(v), self.shape))
        return tuple(sum((x * y for x, y in zip(self.row(i), v) if x and y),
                         Fraction(0)) for i in range(self.rows))

    def __pow__(self, k):
        if not self.is_square:
            raise ValueError("power of a non-square matrix")
        if k < 0:
            return self.inverse() ** (-k)
        result = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def is_zero(self):
        return not any(self._data)

    def trace(self):
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        return sum((self._data[i * self.cols + i] for i in range(self.rows)), Fraction(0))

    def inverse(self):
        if not self.is_square:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = Matrix.from_rows(
            list(self.row(i)) + [Fraction(int(i == j)) for j in range(n)]
            for i in range(n))
        red, pivots = rref(aug)
        if pivots != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix.from_rows(red.row(i)[n:] for i in range(n))

    def flat(self):
        return self._data

    def to_json(self):
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [format_fraction(x) for x in self._data],
        }

    @classmethod
    def from_json(cls, d):
        return cls(d["rows"], d["cols"], [parse_fraction(s) for s in d["entries"]])

    def pretty(self):
        cells = [[_short(x) for x in self.row(i)] for i in range(self.rows)]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join(
            "[" + " ".join(c.rjust(width) for c in r) + "]" for r in cells)

    def __repr__(self):
        return "Matrix(%s)" % [[_short(x) for x in self.row(i)] for i in range(self.rows)]


def _short(x):
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def bracket(x, y):
    """Commutator ``xy - yx``."""
    return x @ y - y @ x


def rref(m):
    """Reduced row echelon form and the list of pivot columns."""
    rows = [list(m.row(i)) for i in range(m.rows)]
    pivots = []
    r = 0
    for c in range(m.cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            f = rows[i][c]
            if i != r and f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return Matrix.from_rows(rows) if rows else Matrix.zeros(0, m.cols), pivots


def rank_and_kernel(m):
    """Rank of ``m`` and a basis of its right null space.

    The kernel vectors are read off the reduced echelon form: one vector per
    free column, with a 1 in that column.
    """
    red, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    kernel = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -red[i, f]
        kernel.append(tuple(v))
    return len(pivots), kernel


def rank(m):
    return len(rref(m)[1])


def solve(a, b):
    """A particular solution ``x`` of ``a x = b``, or None if inconsistent.

    ``b`` may be a vector or a matrix (solved column by column, returning a
    matrix).
    """
    if isinstance(b, Matrix):
        cols = [solve(a, c) for c in b.columns()]
        if any(c is None for c in cols):
            return None
        return Matrix.from_columns(cols) if cols else Matrix.zeros(a.cols, 0)
    b = [to_fraction(x) for x in b]
    if len(b) != a.rows:
        raise ValueError("right-hand side has length %d, expected %d" % (len(b), a.rows))
    aug = Matrix.from_rows(list(a.row(i)) + [b[i]] for i in range(a.rows))
    red, pivots = rref(aug)
    if pivots and pivots[-1] == a.cols:
        return None
    x = [Fraction(0)] * a.cols
    for i, pc in enumerate(pivots):
        x[pc] = red[i, a.cols]
    return tuple(x)


class Poly:
    """Univariate polynomial over Q; coefficients in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [to_fraction(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x_pow(cls, k, coeff=1):
        return cls([0] * k + [coeff])

    @classmethod
    def from_roots_of_unity(cls, p):
        """``x**p - 1``."""
        return cls([-1] + [0] * (p - 1) + [1])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self):
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def monic(self):
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        return Poly(x / lc for x in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        return Poly(x + y for x, y in zip_longest(self.coeffs, other.coeffs, fillvalue=Fraction(0)))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-x for x in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = Poly([1])
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, other):
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.leading
        quo = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - dq - 1, -1, -1):
            q = rem[k + dq] / lc
            quo[k] = q
            if q:
                for i, y in enumerate(other.coeffs):
                    rem[k + i] -= q * y
        return Poly(quo), Poly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other):
        return (other % self).is_zero()

    def __call__(self, x):
        """Evaluate at a scalar or substitute a square matrix (Horner)."""
        if isinstance(x, Matrix):
            if not x.is_square:
                raise ValueError("substitution needs a square matrix")
            n = x.rows
            acc = Matrix.zeros(n)
            eye = Matrix.identity(n)
            for c in reversed(self.coeffs):
                acc = acc @ x + eye * c
            return acc
        x = to_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_json(self):
        return [format_fraction(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, coeffs):
        return cls(parse_fraction(s) for s in coeffs)

    def format(self, var="λ"):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = "" if k == 0 else (var if k == 1 else "%s^%d" % (var, k))
            if mono and a == 1:
                body = mono
            elif mono:
                body = "%s*%s" % (_short(a), mono)
            else:
                body = _short(a)
            terms.append((sign, body))
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            s += " %s %s" % (sign, body)
        return s

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "Poly(%s)" % self.format("x")


def _as_poly(x):
    return x if isinstance(x, Poly) else Poly([x])


def _require_square(m):
    if not m.is_square:
        raise ValueError("expected a square matrix, got %s" % (m.shape,))


def char_poly(m):
    """``det(x I - m)`` by the Faddeev-LeVerrier recurrence (exact over Q)."""
    _require_square(m)
    n = m.rows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    aux = Matrix.zeros(n)
    eye = Matrix.identity(n)
    for k in range(1, n + 1):
        aux = m @ aux + eye * coeffs[n - k + 1]
        coeffs[n - k] = -(m @ aux).trace() / k
    return Poly(coeffs)


def min_poly(m):
    """Monic minimal polynomial: first linear dependence among I, m, m^2, ..."""
    _require_square(m)
    n = m.rows
    sifter = Sifter(n * n)
    powers = []
    power = Matrix.identity(n)
    while sifter.add(power.flat()):
        powers.append(power.flat())
        power = power @ m
    # express m^k in terms of the lower powers
    coeffs = solve(Matrix.from_columns(powers), power.flat())
    return Poly([-c for c in coeffs] + [1])


def is_nilpotent(m):
    _require_square(m)
    return (m ** m.rows).is_zero() if m.rows else True


def is_unipotent(m):
    _require_square(m)
    return is_nilpotent(m - Matrix.identity(m.rows))


def unipotent_log(m):
    """Finite logarithm ``sum_{k>=1} (-1)^(k+1) (m - I)^k / k``."""
    _require_square(m)
    n = m.rows
    nil = m - Matrix.identity(n)
    if n and not (nil ** n).is_zero():
        raise ValueError("not unipotent")
    out = Matrix.zeros(n)
    term = Matrix.identity(n)
    for k in range(1, n):
        term = term @ nil
        if term.is_zero():
            break
        out = out + term * Fraction((-1) ** (k + 1), k)
    return out


def nilpotent_exp(x):
    """Finite exponential series of a nilpotent matrix."""
    _require_square(x)
    n = x.rows
    if not is_nilpotent(x):
        raise ValueError("not nilpotent")
    out = Matrix.identity(n)
    term = Matrix.identity(n)
    for k in range(1, n):
        term = (term @ x) / k
        if term.is_zero():
            break
        out = out + term
    return out


class Sifter:
    """Incremental echelon basis for exact membership and independence tests.

    Rows are stored in insertion order; each stored row is reduced against
    all earlier ones, so sifting a vector through them in order is exact.
    """

    def __init__(self, dim):
        self.dim = dim
        self._rows = []  # (pivot, row normalized so row[pivot] == 1)

    def __len__(self):
        return len(self._rows)

    def reduce(self, v):
        v = [to_fraction(x) for x in v]
        if len(v) != self.dim:
            raise ValueError("vector of length %d, expected %d" % (len(v), self.dim))
        for piv, row in self._rows:
            f = v[piv]
            if f:
                for i in range(piv, self.dim):
                    if row[i]:
                        v[i] -= f * row[i]
        return v

    def contains(self, v):
        return not any(self.reduce(v))

    def add(self, v):
        """Adjoin ``v`` if independent; return whether it was added."""
        r = self.reduce(v)
        piv = next((i for i, x in enumerate(r) if x), None)
        if piv is None:
            return False
        inv = 1 / r[piv]
        self._rows.append((piv, tuple(x * inv for x in r)))
        return True


def _flatten(item):
    if isinstance(item, Matrix):
        return item.shape, item.flat()
    t = tuple(to_fraction(x) for x in item)
    return (len(t),), t


def span_basis(items):
    """Maximal independent subset of ``items`` (vectors or matrices), first seen wins."""
    items = list(items)
    if not items:
        return []
    shape, _ = _flatten(items[0])
    dim = 1
    for s in shape:
        dim *= s
    sifter = Sifter(dim)
    out = []
    for item in items:
        s, flat = _flatten(item)
        if s != shape:
            raise ValueError("shape mismatch: %s vs %s" % (s, shape))
        if sifter.add(flat):
            out.append(item)
    return out
