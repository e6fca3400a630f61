"""Verification pipeline and its JSON report."""
import json
from dataclasses import asdict, dataclass

from . import __version__, known
from .cartan import RootDecompositionError, build_root_decomposition
from .exact_linalg import (
    Matrix, Poly, Sifter, bracket, char_poly, min_poly, rank_and_kernel, span_basis)
from .homology import D13, D23, build_model, delta, delta12, germ_monodromy, orbit_span
from .lie import (
    Verdict, bracket_closure, conjugation_stable, identify_symplectic,
    minimal_pf_degree, seed_generators, sp_dimension)
from .rep import ReductionError, block_form, embed_block_diagonal, reduce

X_MINUS_ONE = Poly([-1, 1])


def stated_char_poly_m2(p):
    """``(x - 1)^2 (x^p - 1)^2``."""
    return X_MINUS_ONE ** 2 * Poly.from_roots_of_unity(p) ** 2


def stated_min_poly_m2(p):
    """``(x - 1)(x^p - 1)^2``."""
    return X_MINUS_ONE * Poly.from_roots_of_unity(p) ** 2


def germ_char_poly(p):
    """``(x - 1)(x^p - 1)``."""
    return X_MINUS_ONE * Poly.from_roots_of_unity(p)


STANDING_NOTES = (
    "the intersection form has rank 2p (4 for p=2) with a 2-dimensional kernel; a rank of p "
    "for p=2 would be a typo",
    "the p=2 basis lists d12^0 twice; the second entry is taken to be d12^1",
    "the dual-basis value lambda(H2)=5 is taken as lambda2(H2)=5",
    "germ characteristic polynomial reported monic; det(M - x I) carries the extra sign (-1)^(p+1)",
    "minimal Picard-Fuchs degree assumes a generic form: no integral vanishes identically on a "
    "nonzero submodule (V1_0 = 0)",
    "irreducibility of the reduced representation follows from equals_sp (the standard "
    "representation of sp(2p) is irreducible); the cyclic-module dimension is reported as a "
    "cross-check",
)


@dataclass
class Check:
    name: str
    ok: bool
    expected: str
    computed: str


@dataclass
class RunReport:
    p: int
    word_cap: int
    matrices: dict
    polynomials: dict
    seeds: list
    closure_dim: int
    closure_target: int
    verdict: str
    pf_degree: int
    checks: list
    notes: list
    roots: dict = None
    version: str = __version__

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def first_failure(self):
        return next((c for c in self.checks if not c.ok), None)

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        d["checks"] = [Check(**c) for c in d["checks"]]
        return cls(**d)

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def summary(self):
        lines = [
            "p = %d (word cap %d)" % (self.p, self.word_cap),
            "  char poly M2 : %s" % self.polynomials["char_poly_m2"],
            "  min poly M2  : %s" % self.polynomials["min_poly_m2"],
            "  germ poly    : %s" % self.polynomials["germ_char_poly"],
            "  closure dim  : %d / %d" % (self.closure_dim, self.closure_target),
            "  verdict      : %s" % self.verdict,
            "  PF degree    : %d" % self.pf_degree,
        ]
        if self.roots:
            lines.append("  root spaces  :")
            for r in self.roots["roots"]:
                lines.append("    %-4s %-7s (%s)" % (
                    r["name"], r["root"], ", ".join(_short(v) for v in r["values"])))
        passed = sum(c.ok for c in self.checks)
        lines.append("  checks       : %d/%d passed" % (passed, len(self.checks)))
        for c in self.checks:
            if not c.ok:
                lines.append("  FAILED %s: expected %s, computed %s"
                             % (c.name, c.expected, c.computed))
        return "\n".join(lines)


def _short(s):
    return s[:-2] if s.endswith("/1") else s


class _Checker:
    def __init__(self):
        self.checks = []

    def equal(self, name, expected, computed, fmt=str):
        self.checks.append(Check(name, expected == computed, fmt(expected), fmt(computed)))
        return expected == computed

    def true(self, name, cond, detail=""):
        self.checks.append(Check(name, bool(cond), "true", "true" if cond else "false " + detail))
        return bool(cond)


def _mat(m):
    return repr(m)


def run_verify(p=2, word_cap=3):
    """Run homology -> reduction -> Lie algebra (-> roots for p = 2) with checks."""
    if p < 1:
        raise ValueError("p must be >= 1")
    ck = _Checker()
    notes = list(STANDING_NOTES)
    model = build_model(p)
    n = model.dim
    omega = model.omega
    eye = Matrix.identity(n)

    ck.true("omega antisymmetric", (omega + omega.T).is_zero())
    rk, kernel = rank_and_kernel(omega)
    ck.equal("rank omega", 2 * p, rk)
    ck.equal("dim ker omega", 2, len(kernel))
    for name, m in (("M1", model.m1), ("M2", model.m2)):
        ck.true("%s preserves omega" % name, m.T @ omega @ m == omega)
        ck.true("%s fixes ker omega" % name, all(m.apply(v) == v for v in kernel))
    nil = model.m1 - eye
    ck.true("M1 transvection", (nil @ nil).is_zero() and not nil.is_zero())
    ck.equal("det M1", X_MINUS_ONE ** n, char_poly(model.m1))

    cp = char_poly(model.m2)
    mp = min_poly(model.m2)
    ck.equal("char poly M2", stated_char_poly_m2(p), cp)
    stated_mp = stated_min_poly_m2(p)
    ck.true("min poly M2 divides (x-1)(x^p-1)^2", mp.divides(stated_mp), str(mp))
    ck.true("min poly M2 divides char poly", mp.divides(cp), str(mp))
    if mp != stated_mp:
        notes.append("min poly of M2 is %s; (x-1)(x^p-1)^2 annihilates M2 but is not minimal"
                     % mp)
    germ = germ_monodromy(p)
    gp = char_poly(germ)
    ck.equal("germ char poly", germ_char_poly(p), gp)

    orbit = orbit_span(model.m2, model.basis.unit(delta(0)))
    ck.equal("dim orbit of d0 under M2", 2 * p, len(orbit))
    s = Sifter(n)
    for v in orbit:
        s.add(v)
    ck.true("orbit contains d12^i+d13+d23", all(
        s.contains(model.basis.vector({delta12(i): 1, D13: 1, D23: 1})) for i in range(p)))

    try:
        rep = reduce(model)
    except ReductionError as e:
        ck.true("reduction", False, str(e))
        return _finish(p, word_cap, model, None, germ, cp, mp, gp, [], None, None, 0, ck, notes)
    if rep.route != "complement":
        notes.append("complement not invariant for p=%d; quotient construction used" % p)
    ck.equal("dim kernel + dim reduced", n, len(rep.kernel_basis) + rep.dim)
    for name, m in rep.generators().items():
        ck.true("reduced %s symplectic" % name, m.T @ rep.j_form @ m == rep.j_form)

    seeds = seed_generators(rep, word_cap)
    closure = bracket_closure(seeds)
    verdict = identify_symplectic(closure, rep.j_form)
    target = sp_dimension(rep.dim)
    ck.true("closure inside sp(J)", verdict != Verdict.NOT_IN_SP)
    for name, g in rep.generators().items():
        ck.true("closure stable under conjugation by %s" % name, conjugation_stable(closure, g))
    if p <= 2:
        ck.equal("closure dim", target, closure.dim)
        ck.equal("verdict", Verdict.EQUALS_SP.value, verdict.value)
    v0 = tuple(int(i == 0) for i in range(rep.dim))
    pf = minimal_pf_degree(rep, closure, v0)
    if verdict == Verdict.EQUALS_SP:
        ck.equal("PF degree (irreducible)", rep.dim, pf)

    roots = None
    if p == 2:
        roots = _verify_p2(ck, model, rep, seeds, closure, kernel, pf)
    return _finish(p, word_cap, model, rep, germ, cp, mp, gp, seeds, closure, verdict,
                   pf, ck, notes, roots)


def _verify_p2(ck, model, rep, seeds, closure, kernel, pf):
    ck.equal("omega table (p=2)", known.OMEGA_P2, model.omega, _mat)
    ck.equal("M1 (p=2)", known.M1_P2, model.m1, _mat)
    ck.equal("M2 (p=2)", known.M2_P2, model.m2, _mat)
    ks = Sifter(model.dim)
    for v in kernel:
        ks.add(v)
    ck.true("kernel contains V2 generators (p=2)", all(ks.contains(v) for v in known.KERNEL_P2))
    ck.equal("reduced M1 (p=2)", known.M1_RED_P2, rep.m1_red, _mat)
    ck.equal("reduced M2 (p=2)", known.M2_RED_P2, rep.m2_red, _mat)
    ck.equal("reduced M2^2 (p=2)", known.M2_SQUARED_RED_P2, rep.m2_red ** 2, _mat)
    ck.equal("reduced M2 M1 M2^-1 (p=2)", known.M2_M1_M2INV_RED_P2,
             rep.m2_red @ rep.m1_red @ rep.m2_red.inverse(), _mat)
    _, blocks = block_form(model, rep, known.KERNEL_P2)
    ck.true("block form M1 (p=2)", blocks[0] == embed_block_diagonal(rep.m1_red, model.dim))
    ck.true("block form M2 (p=2)", blocks[1] == embed_block_diagonal(rep.m2_red, model.dim))
    mats = [x.matrix for x in seeds]
    for name, m in (("a", known.A_P2), ("b", known.B_P2), ("c", known.C_P2)):
        ck.true("seeds contain %s (p=2)" % name, m in mats)
    a, b, c = known.A_P2, known.B_P2, known.C_P2
    h = bracket(a, b)
    ck.equal("[[a,b],a] = -2a", a * -2, bracket(h, a), _mat)
    ck.equal("[[a,b],b] = 2b", b * 2, bracket(h, b), _mat)
    abc = bracket_closure([a, b, c])
    ck.equal("closure of a,b,c dim", 10, abc.dim)
    sa, sc = abc.sifter(), closure.sifter()
    ck.true("closure of a,b,c equals closure of seeds",
            all(sa.contains(x.flat()) for x in closure.elements)
            and all(sc.contains(x.flat()) for x in abc.elements))
    ck.equal("PF degree (p=2)", known.MINIMAL_PF_DEGREE_P2, pf)
    try:
        dec = build_root_decomposition(a, b, c)
    except RootDecompositionError as e:
        ck.true("root decomposition", False, str(e))
        return None
    ck.true("root decomposition", True)
    els = dec.elements()
    ck.equal("root basis independent", 10, len(span_basis(els)))
    ck.true("root basis spans closure", all(sa.contains(x.flat()) for x in els))
    return dec.to_json()


def _finish(p, word_cap, model, rep, germ, cp, mp, gp, seeds, closure, verdict, pf, ck,
            notes, roots=None):
    matrices = {"model": model.to_json(), "germ": germ.to_json()}
    if rep is not None:
        matrices["reduced"] = rep.to_json()
    if closure is not None:
        matrices["closure"] = closure.to_json()
    polynomials = {
        "char_poly_m2": str(cp),
        "min_poly_m2": str(mp),
        "germ_char_poly": str(gp),
        "char_poly_m2_coeffs": cp.to_json(),
        "min_poly_m2_coeffs": mp.to_json(),
        "germ_char_poly_coeffs": gp.to_json(),
    }
    return RunReport(
        p=p, word_cap=word_cap, matrices=matrices, polynomials=polynomials,
        seeds=[s.label for s in seeds],
        closure_dim=closure.dim if closure is not None else 0,
        closure_target=sp_dimension(2 * p),
        verdict=verdict.value if verdict is not None else "incomplete",
        pf_degree=pf, checks=ck.checks, notes=notes, roots=roots)


def closure_row(p, word_cap=3):
    """One scan row: closure dimension at ``word_cap`` and ``word_cap + 1``."""
    rep = reduce(build_model(p))
    dims = []
    verdict = None
    for cap in (word_cap, word_cap + 1):
        closure = bracket_closure(seed_generators(rep, cap))
        dims.append(closure.dim)
        if verdict is None:
            verdict = identify_symplectic(closure, rep.j_form)
            pf = minimal_pf_degree(rep, closure, tuple(int(i == 0) for i in range(rep.dim)))
    return {
        "p": p,
        "status": "complete",
        "word_cap": word_cap,
        "closure_dim": dims[0],
        "closure_dim_next_cap": dims[1],
        "target": sp_dimension(2 * p),
        "verdict": verdict.value,
        "in_sp": verdict != Verdict.NOT_IN_SP,
        "saturated": dims[0] == dims[1],
        "cyclic_module_dim": pf,
    }
