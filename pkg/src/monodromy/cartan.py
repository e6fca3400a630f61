"""Cartan subalgebra and root spaces of sp(4) generated by a, b, c (p = 2).

``H1 = [a, b]`` and ``H2 = [X21, X12]`` with

    X21 = -3[a,b] + [a,c] - 4a,     X12 = 3[a,b] + [b,c] + 4b,

span a Cartan subalgebra; the eight root vectors are built from brackets of
``a``, ``b``, ``X12`` and ``X21``.
"""
from dataclasses import dataclass
from fractions import Fraction

from .exact_linalg import Matrix, bracket
from . import known

ROOT_ORDER = ("X12", "X21", "Y12", "Z12", "U1", "V1", "U2", "V2")
OPPOSITES = (("X12", "X21"), ("Y12", "Z12"), ("U1", "V1"), ("U2", "V2"))


class RootDecompositionError(ValueError):
    pass


@dataclass(frozen=True)
class RootDecomposition:
    h1: Matrix
    h2: Matrix
    root_vectors: dict
    root_values: dict

    def elements(self):
        return [self.h1, self.h2] + [self.root_vectors[n] for n in ROOT_ORDER]

    def table(self):
        """Rows ``(name, root, (value on H1, value on H2))``."""
        return [(n, _root_name(known.ROOTS[n]), self.root_values[n]) for n in ROOT_ORDER]

    def format_table(self):
        lines = ["%-4s %-14s %s" % ("name", "root", "(ad_H1, ad_H2)")]
        for name, root, (r1, r2) in self.table():
            lines.append("%-4s %-14s (%s, %s)" % (name, root, r1, r2))
        return "\n".join(lines)

    def to_json(self):
        return {
            "h1": self.h1.to_json(),
            "h2": self.h2.to_json(),
            "roots": [
                {
                    "name": name,
                    "root": root,
                    "values": ["%d/%d" % (v.numerator, v.denominator) for v in vals],
                    "matrix": self.root_vectors[name].to_json(),
                }
                for name, root, vals in self.table()
            ],
        }


def _root_name(coeffs):
    parts = []
    for c, sym in zip(coeffs, ("l1", "l2")):
        if c:
            mag = "" if abs(c) == 1 else str(abs(c))
            parts.append(("-" if c < 0 else "+") + mag + sym)
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s


def ad_eigenvalue(h, x):
    """``r`` with ``[h, x] = r x``; raises if ``x`` is not an ad-eigenvector."""
    if x.is_zero():
        raise RootDecompositionError("zero matrix has no ad-eigenvalue")
    y = bracket(h, x)
    k = next(i for i, v in enumerate(x.flat()) if v)
    r = y.flat()[k] / x.flat()[k]
    if y != x * r:
        raise RootDecompositionError("not an ad-eigenvector")
    return r


def expected_root_values(name):
    c1, c2 = known.ROOTS[name]
    return tuple(Fraction(c1) * l1 + Fraction(c2) * l2
                 for l1, l2 in zip(known.LAMBDA1, known.LAMBDA2))


def build_root_decomposition(a, b, c):
    h1 = bracket(a, b)
    if bracket(h1, a) != a * -2 or bracket(h1, b) != b * 2:
        raise RootDecompositionError("{a, b, [a,b]} is not an sl2-triple")
    x21 = h1 * -3 + bracket(a, c) - a * 4
    x12 = h1 * 3 + bracket(b, c) + b * 4
    h2 = bracket(x21, x12)
    if not bracket(h1, h2).is_zero():
        raise RootDecompositionError("[H1, H2] != 0")
    y12 = bracket(x21, b)
    vectors = {
        "X12": x12,
        "X21": x21,
        "Y12": y12,
        "Z12": bracket(x12, a),
        "U1": b,
        "V1": a,
        "U2": bracket(y12, x21),
        "V2": bracket(x12, bracket(x12, a)),
    }
    values = {}
    for name in ROOT_ORDER:
        got = (ad_eigenvalue(h1, vectors[name]), ad_eigenvalue(h2, vectors[name]))
        want = expected_root_values(name)
        if got != want:
            raise RootDecompositionError(
                "%s: expected ad-eigenvalues %s, computed %s"
                % (name, tuple(map(str, want)), tuple(map(str, got))))
        values[name] = got
    return RootDecomposition(h1=h1, h2=h2, root_vectors=vectors, root_values=values)
