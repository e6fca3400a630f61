"""Reduced 2p-dimensional symplectic representation.

The kernel of the intersection form (zero-cycles) is pointwise fixed by the
monodromy.  The complement spanned by ``d_i`` and ``d12^i + d13 + d23`` is
invariant, and the intersection form restricted to it is nondegenerate.
"""
from dataclasses import dataclass, field

from .exact_linalg import Matrix, rank, rank_and_kernel, solve
from .homology import D13, D23, delta, delta12


class ReductionError(ValueError):
    pass


@dataclass(frozen=True)
class ReducedRep:
    p: int
    dim: int
    j_form: Matrix
    m1_red: Matrix
    m2_red: Matrix
    lift_basis: tuple
    kernel_basis: tuple
    route: str = "complement"
    lift_names: tuple = field(default=())

    def generators(self):
        return {"M1": self.m1_red, "M2": self.m2_red}

    def to_json(self):
        return {
            "p": self.p,
            "dim": self.dim,
            "route": self.route,
            "j_form": self.j_form.to_json(),
            "m1_red": self.m1_red.to_json(),
            "m2_red": self.m2_red.to_json(),
            "lift_basis": [_vec_json(v) for v in self.lift_basis],
            "lift_names": list(self.lift_names),
            "kernel_basis": [_vec_json(v) for v in self.kernel_basis],
        }


def _vec_json(v):
    return ["%d/%d" % (x.numerator, x.denominator) for x in v]


def zero_cycle_kernel(model):
    """Basis of ``ker(omega)``; checks that both operators fix it pointwise."""
    _, kernel = rank_and_kernel(model.omega)
    for v in kernel:
        for name, m in (("M1", model.m1), ("M2", model.m2)):
            if m.apply(v) != v:
                raise ReductionError("monodromy not trivial on kernel (%s, %s)" % (name, v))
    return kernel


def complement_basis(model):
    """``[d0..d_{p-1}, d12^0+d13+d23, ..., d12^{p-1}+d13+d23]`` as cycle-space vectors."""
    b = model.basis
    vecs = [b.unit(delta(i)) for i in range(model.p)]
    vecs += [b.vector({delta12(i): 1, D13: 1, D23: 1}) for i in range(model.p)]
    names = ["d%d" % i for i in range(model.p)]
    names += ["d12^%d+d13+d23" % i for i in range(model.p)]
    return vecs, names


def restrict(m, lift):
    """Matrix of ``m`` on the span of ``lift`` (columns), or None if not invariant."""
    return solve(lift, m @ lift)


def reduce(model, strict=False):
    """Build the reduced representation.

    Uses the invariant complement when it is invariant and transversal to the
    kernel; otherwise falls back to the quotient by the kernel (raises instead
    when ``strict``).
    """
    kernel = zero_cycle_kernel(model)
    vecs, names = complement_basis(model)
    lift = Matrix.from_columns(vecs)
    transversal = rank(Matrix.from_columns(vecs + list(kernel))) == model.dim
    m1 = restrict(model.m1, lift) if transversal else None
    m2 = restrict(model.m2, lift) if m1 is not None else None
    route = "complement"
    if m1 is None or m2 is None:
        if strict:
            raise ReductionError("complement not invariant for p=%d" % model.p)
        vecs, names, m1, m2 = _quotient(model, kernel)
        lift = Matrix.from_columns(vecs)
        route = "quotient"
    j = lift.T @ model.omega @ lift
    if rank(j) != 2 * model.p:
        raise ReductionError("reduced form is degenerate for p=%d" % model.p)
    return ReducedRep(
        p=model.p, dim=2 * model.p, j_form=j, m1_red=m1, m2_red=m2,
        lift_basis=tuple(vecs), kernel_basis=tuple(kernel), route=route,
        lift_names=tuple(names))


def _quotient(model, kernel):
    # lifts are the standard vectors completing the kernel to a basis
    n = model.dim
    chosen = []
    for i in range(n):
        e = tuple(int(i == k) for k in range(n))
        if rank(Matrix.from_columns(list(kernel) + chosen + [e])) > len(kernel) + len(chosen):
            chosen.append(e)
    full = Matrix.from_columns(chosen + list(kernel))
    inv = full.inverse()
    k = len(chosen)

    def top_left(m):
        c = inv @ m @ full
        return Matrix.from_rows([c.row(i)[:k] for i in range(k)])

    names = [model.basis.names()[e.index(1)] for e in chosen]
    return chosen, names, top_left(model.m1), top_left(model.m2)


def block_form(model, rep, kernel_vectors=None):
    """Conjugate the full operators into the basis ``lift_basis + kernel_vectors``.

    Returns ``(P, [P^-1 M1 P, P^-1 M2 P])``; for an invariant complement the
    results are block diagonal with the reduced operators on top and the
    identity on the kernel block.
    """
    kernel_vectors = list(kernel_vectors if kernel_vectors is not None else rep.kernel_basis)
    change = Matrix.from_columns(list(rep.lift_basis) + kernel_vectors)
    inv = change.inverse()
    return change, [inv @ model.m1 @ change, inv @ model.m2 @ change]


def embed_block_diagonal(top, n):
    """``diag(top, I)`` of total size ``n``."""
    k = top.rows
    rows = []
    for i in range(n):
        if i < k:
            rows.append(list(top.row(i)) + [0] * (n - k))
        else:
            rows.append([0] * n)
            rows[-1][i] = 1
    return Matrix.from_rows(rows)
