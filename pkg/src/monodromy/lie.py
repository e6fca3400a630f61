"""Lie algebra of the Zariski closure of the reduced monodromy group.

If ``g`` is unipotent then every ``g^z`` lies in the Zariski closure, so
``log g`` lies in its Lie algebra.  Seeds are logarithms of the smallest
unipotent powers of group words; the algebra they generate is
computed by bracket closure.
"""
import enum
import itertools
from dataclasses import dataclass

from .exact_linalg import (
    Matrix, Sifter, bracket, is_unipotent, to_fraction, unipotent_log)

LETTERS = ("M1", "M2", "M1^-1", "M2^-1")
_INVERSE = {"M1": "M1^-1", "M2": "M2^-1", "M1^-1": "M1", "M2^-1": "M2"}


@dataclass(frozen=True)
class GroupWord:
    letters: tuple

    def __post_init__(self):
        for x in self.letters:
            if x not in LETTERS:
                raise ValueError("unknown letter %r" % (x,))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(self.letters) if self.letters else "1"

    def evaluate(self, rep):
        gens = rep.generators()
        mats = {"M1": gens["M1"], "M2": gens["M2"],
                "M1^-1": gens["M1"].inverse(), "M2^-1": gens["M2"].inverse()}
        out = Matrix.identity(rep.dim)
        for x in self.letters:
            out = out @ mats[x]
        return out


def enumerate_words(max_len):
    """Freely reduced words of length 1..max_len, shortest first, in letter order."""
    for n in range(1, max_len + 1):
        for letters in itertools.product(LETTERS, repeat=n):
            if any(_INVERSE[a] == b for a, b in zip(letters, letters[1:])):
                continue
            yield GroupWord(letters)


@dataclass(frozen=True)
class Seed:
    label: str
    matrix: Matrix


def seed_generators(rep, max_word_len=3, max_power=None):
    """Nilpotent logarithms of unipotent powers of group words.

    For each freely reduced word ``g`` of length at most ``max_word_len`` the
    smallest ``k <= max_power`` with ``g^k`` unipotent contributes
    ``log(g^k)``; higher unipotent powers only rescale it.  ``max_power``
    defaults to ``4p``, which covers the ``p``-th powers of ``M2`` and its
    conjugates.  Zero logarithms and exact repeats are dropped; independence
    is left to :func:`bracket_closure`.
    """
    if max_word_len < 1:
        raise ValueError("max_word_len must be >= 1")
    max_power = 4 * rep.p if max_power is None else max_power
    seen = set()
    seeds = []
    for word in enumerate_words(max_word_len):
        g = h = word.evaluate(rep)
        for k in range(1, max_power + 1):
            if is_unipotent(h):
                x = unipotent_log(h)
                if not x.is_zero() and x not in seen:
                    seen.add(x)
                    label = str(word) if k == 1 else "(%s)^%d" % (word, k)
                    seeds.append(Seed("log(%s)" % label, x))
                break
            h = h @ g
    return seeds


@dataclass(frozen=True)
class LieAlgebraBasis:
    elements: tuple
    provenance: tuple

    @property
    def dim(self):
        return len(self.elements)

    @property
    def shape(self):
        return self.elements[0].shape if self.elements else None

    def sifter(self):
        s = Sifter(self.elements[0].rows * self.elements[0].cols if self.elements else 0)
        for x in self.elements:
            s.add(x.flat())
        return s

    def contains(self, x):
        if not self.elements:
            return x.is_zero()
        return self.sifter().contains(x.flat())

    def to_json(self):
        return [{"provenance": p, "matrix": x.to_json()}
                for p, x in zip(self.provenance, self.elements)]


def bracket_closure(seeds, labels=None):
    """Smallest bracket-closed subspace containing ``seeds``.

    ``seeds`` may be matrices or :class:`Seed` objects.  Every pair of basis
    elements is bracketed exactly once (new elements are paired with all
    earlier ones), so the result is closed when the loop ends.  Basis order is
    deterministic: sifted seeds first, then brackets in discovery order.
    """
    mats, provs = [], []
    for k, s in enumerate(seeds):
        if isinstance(s, Seed):
            mats.append(s.matrix)
            provs.append(s.label)
        else:
            mats.append(s)
            provs.append(labels[k] if labels else "seed[%d]" % k)
    if not mats:
        return LieAlgebraBasis((), ())
    shape = mats[0].shape
    if shape[0] != shape[1] or any(m.shape != shape for m in mats):
        raise ValueError("seeds must be square matrices of a common shape")
    sifter = Sifter(shape[0] * shape[1])
    elements, provenance = [], []
    for m, prov in zip(mats, provs):
        if sifter.add(m.flat()):
            elements.append(m)
            provenance.append(prov)
    j = 1
    while j < len(elements):
        for i in range(j):
            z = bracket(elements[i], elements[j])
            if sifter.add(z.flat()):
                elements.append(z)
                provenance.append("[#%d,#%d]" % (i, j))
        j += 1
    return LieAlgebraBasis(tuple(elements), tuple(provenance))


class Verdict(str, enum.Enum):
    EQUALS_SP = "equals_sp"
    PROPER_SUBALGEBRA_OF_SP = "proper_subalgebra_of_sp"
    NOT_IN_SP = "not_in_sp"


def in_sp(x, j):
    """``x^T j + j x == 0``."""
    return (x.T @ j + j @ x).is_zero()


def sp_dimension(n):
    if n % 2:
        raise ValueError("symplectic dimension must be even")
    q = n // 2
    return q * (2 * q + 1)


def identify_symplectic(basis, j):
    n = j.rows
    if not j.is_square or n % 2:
        raise ValueError("form must be square of even size")
    if basis.elements and basis.shape != j.shape:
        raise ValueError("algebra acts on dimension %d, form has dimension %d"
                         % (basis.shape[0], n))
    if not all(in_sp(x, j) for x in basis.elements):
        return Verdict.NOT_IN_SP
    if basis.dim == sp_dimension(n):
        return Verdict.EQUALS_SP
    return Verdict.PROPER_SUBALGEBRA_OF_SP


def cyclic_module(v, basis):
    """Smallest subspace containing ``v`` and stable under every element of ``basis``."""
    v = tuple(to_fraction(x) for x in v)
    sifter = Sifter(len(v))
    out = []
    queue = [v]
    while queue:
        w = queue.pop(0)
        if not sifter.add(w):
            continue
        out.append(w)
        queue.extend(x.apply(w) for x in basis.elements)
    return out


def minimal_pf_degree(rep, basis, v):
    """Minimal order of a Picard-Fuchs equation with algebraic coefficients.

    Equal to ``dim V0 - dim V1_0`` where ``V0`` is the module generated by the
    cycle ``v`` under the identity component.  The form being integrated is
    assumed generic, so no integral vanishes identically on a nonzero
    submodule (``V1_0 = 0``) and the answer is ``dim V0``.
    """
    v = tuple(to_fraction(x) for x in v)
    if len(v) != rep.dim:
        raise ValueError("vector has length %d, reduced space has dimension %d"
                         % (len(v), rep.dim))
    if not any(v):
        raise ValueError("the cycle must be nonzero")
    return len(cyclic_module(v, basis))


def conjugation_stable(basis, g):
    """Whether ``g X g^-1`` lies in the span for every basis element ``X``."""
    ginv = g.inverse()
    s = basis.sifter()
    return all(s.contains((g @ x @ ginv).flat()) for x in basis.elements)


def is_closed(basis):
    s = basis.sifter()
    return all(s.contains(bracket(x, y).flat())
               for x, y in itertools.combinations(basis.elements, 2))
