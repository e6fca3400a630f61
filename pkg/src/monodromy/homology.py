"""First homology of the fibres of ``f = x^p y^p (1 - x - y)``.

A fibre ``f_t`` (``t`` not critical) is a genus-p curve with three punctures;
its first homology has rank ``2p + 2`` with the basis

* ``delta_k``      (k = 0..p-1): ``delta_0`` vanishes at the Morse point over
  ``t1``, ``delta_k = M2^k delta_0``,
* ``delta12^k``    (k = 0..p-1): vanishing at the origin,
* ``delta13``, ``delta23``: vanishing at (1, 0) and (0, 1).

``M1`` is the monodromy around ``t1``, ``M2`` the one around ``t2 = 0``.
"""
from dataclasses import dataclass
from fractions import Fraction

from .exact_linalg import Matrix, Sifter, rank_and_kernel, to_fraction

DELTA = "delta"
DELTA12 = "delta12"
DELTA13 = "delta13"
DELTA23 = "delta23"


@dataclass(frozen=True, order=True)
class CycleLabel:
    kind: str
    index: int = 0

    def __post_init__(self):
        if self.kind not in (DELTA, DELTA12, DELTA13, DELTA23):
            raise ValueError("unknown cycle kind %r" % (self.kind,))

    def __str__(self):
        if self.kind == DELTA:
            return "d%d" % self.index
        if self.kind == DELTA12:
            return "d12^%d" % self.index
        return "d13" if self.kind == DELTA13 else "d23"


def delta(i):
    return CycleLabel(DELTA, i)


def delta12(i):
    return CycleLabel(DELTA12, i)


D13 = CycleLabel(DELTA13)
D23 = CycleLabel(DELTA23)


@dataclass(frozen=True)
class CycleBasis:
    p: int
    order: tuple

    def __post_init__(self):
        _check_p(self.p)
        expected = set(default_labels(self.p))
        if len(self.order) != len(expected) or set(self.order) != expected:
            raise ValueError("basis order must be a permutation of the %d cycles for p=%d"
                             % (len(expected), self.p))

    @property
    def dim(self):
        return len(self.order)

    def index(self, label):
        return self.order.index(label)

    def vector(self, combo):
        """Coordinate vector of ``{label: coefficient}``."""
        v = [Fraction(0)] * self.dim
        for label, c in combo.items():
            v[self.index(label)] += to_fraction(c)
        return tuple(v)

    def unit(self, label):
        return self.vector({label: 1})

    def names(self):
        return [str(l) for l in self.order]


def _check_p(p):
    if not isinstance(p, int) or p < 1:
        raise ValueError("p must be a positive integer, got %r" % (p,))


def default_labels(p):
    return ([delta(i) for i in range(p)] + [delta12(i) for i in range(p)]
            + [D13, D23])


def default_basis(p):
    """``[d0..d_{p-1}, d12^0..d12^{p-1}, d13, d23]``."""
    return CycleBasis(p, tuple(default_labels(p)))


def reference_basis(p=2):
    """The ``(d0, d1, d12^0, d12^1, d13, d23)`` ordering used for the p = 2 tables.

    It coincides with the default ordering; kept as a named entry point so that
    comparisons against the p = 2 tables state the basis they rely on.
    """
    return CycleBasis(p, (delta(0), delta(1), delta12(0), delta12(1), D13, D23)
                      if p == 2 else tuple(default_labels(p)))


def _pairing(a, b):
    """Intersection number ``(a . b)`` of two basis cycles."""
    if a == b:
        return 0
    if a.kind == DELTA and b.kind == DELTA:
        return -1 if a.index < b.index else 1
    if a.kind == DELTA:
        if b.kind == DELTA12:
            return 1 if a.index == b.index else 0
        return 1  # d13, d23
    if b.kind == DELTA:
        return -_pairing(b, a)
    return 0  # the p + 2 cycles vanishing at the singular points are disjoint


def intersection_form(p, basis=None):
    """Gram matrix ``omega[i, j] = (b_i . b_j)`` of the intersection pairing."""
    _check_p(p)
    basis = basis or default_basis(p)
    _check_basis(p, basis)
    labels = basis.order
    return Matrix.from_rows([[_pairing(a, b) for b in labels] for a in labels])


def _check_basis(p, basis):
    if basis.p != p:
        raise ValueError("basis is for p=%d, not p=%d" % (basis.p, p))


def _matrix_from_images(basis, images):
    cols = [basis.vector(images[label]) for label in basis.order]
    return Matrix.from_columns(cols)


def monodromy_m2(p, basis=None):
    """Monodromy around ``t = 0``.

    Cycles the ``d12^k`` and the ``d_k``, fixes ``d13`` and ``d23``, and sends
    ``d_{p-1}`` to ``d0 - d12^0 - d13 - d23``.
    """
    _check_p(p)
    basis = basis or default_basis(p)
    _check_basis(p, basis)
    images = {D13: {D13: 1}, D23: {D23: 1}}
    for k in range(p):
        images[delta12(k)] = {delta12((k + 1) % p): 1}
    for k in range(p - 1):
        images[delta(k)] = {delta(k + 1): 1}
    images[delta(p - 1)] = {delta(0): 1, delta12(0): -1, D13: -1, D23: -1}
    return _matrix_from_images(basis, images)


def monodromy_m1(p, basis=None, omega=None):
    """Picard-Lefschetz transvection ``x -> x - (x . d0) d0`` around ``t1``."""
    _check_p(p)
    basis = basis or default_basis(p)
    _check_basis(p, basis)
    if omega is None:
        omega = intersection_form(p, basis)
    n = basis.dim
    if omega.shape != (n, n):
        raise ValueError("intersection form has shape %s, expected %s"
                         % (omega.shape, (n, n)))
    k = basis.index(delta(0))
    rows = []
    for i in range(n):
        row = [Fraction(int(i == j)) for j in range(n)]
        if i == k:
            # column j gains -(b_j . d0) d0
            row = [row[j] - omega[j, k] for j in range(n)]
        rows.append(row)
    return Matrix.from_rows(rows)


def germ_monodromy(p):
    """Monodromy of ``x^p y`` on relative homology in the basis ``[g0..g_{p-1}, alpha]``.

    ``g_k -> g_{k+1}`` for ``k < p-1``, ``g_{p-1} -> g_0 + alpha``, ``alpha`` fixed.
    """
    _check_p(p)
    n = p + 1
    rows = [[0] * n for _ in range(n)]
    for k in range(p - 1):
        rows[k + 1][k] = 1
    rows[0][p - 1] = 1
    rows[p][p - 1] = 1
    rows[p][p] = 1
    return Matrix.from_rows(rows)


def critical_values(p):
    """``(t1, t2) = (p^(2p) / (2p+1)^(2p+1), 0)``."""
    _check_p(p)
    return Fraction(p ** (2 * p), (2 * p + 1) ** (2 * p + 1)), Fraction(0)


def orbit_span(m, v):
    """Basis of ``span{v, m v, m^2 v, ...}`` (Krylov space), in orbit order."""
    v = tuple(to_fraction(x) for x in v)
    if not m.is_square or m.cols != len(v):
        raise ValueError("cannot act with a %s matrix on a vector of length %d"
                         % (m.shape, len(v)))
    sifter = Sifter(len(v))
    out = []
    while sifter.add(v):
        out.append(v)
        v = m.apply(v)
    return out


@dataclass(frozen=True)
class MonodromyModel:
    p: int
    basis: CycleBasis
    omega: Matrix
    m1: Matrix
    m2: Matrix
    critical_value_t1: Fraction
    critical_value_t2: Fraction

    @property
    def dim(self):
        return self.basis.dim

    def kernel(self):
        return rank_and_kernel(self.omega)[1]

    def to_json(self):
        return {
            "p": self.p,
            "basis": self.basis.names(),
            "omega": self.omega.to_json(),
            "m1": self.m1.to_json(),
            "m2": self.m2.to_json(),
            "critical_values": {
                "t1": "%d/%d" % (self.critical_value_t1.numerator,
                                 self.critical_value_t1.denominator),
                "t2": "%d/%d" % (self.critical_value_t2.numerator,
                                 self.critical_value_t2.denominator),
            },
        }


def build_model(p, basis=None):
    _check_p(p)
    basis = basis or default_basis(p)
    omega = intersection_form(p, basis)
    t1, t2 = critical_values(p)
    return MonodromyModel(
        p=p, basis=basis, omega=omega,
        m1=monodromy_m1(p, basis, omega), m2=monodromy_m2(p, basis),
        critical_value_t1=t1, critical_value_t2=t2)
