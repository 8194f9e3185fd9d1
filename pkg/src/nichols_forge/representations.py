"""Matrix modules for the lifted algebras, built on Specht modules of S_n.

Each module is a sum of Specht modules carried through an explicit change of
basis; the group acts by transport.  Only the matrix of one generator
``a_i`` is written down.  All other ``a_j`` follow from the commutation rule
``a_{t.i} = chi_i(t)^-1 H_t a_i H_t^-1``.  Whether the result is well defined
(path independence) and satisfies the quadratic relations is then checked
exactly, as identities between matrices over ``Q(i)[Lambda, Gamma]``.

Base-change matrices list the new basis vectors as columns, in coordinates
of ``v_1..v_{n-1}`` (then ``w_1..w_{n-1}``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import linalg
from .lifting import (
    Presentation,
    QlDatum,
    family_D,
    family_Q_chi,
    family_Q_minus,
    presentation,
)
from .perm import Perm, adjacent
from .scalars import GAMMA, LAMBDA, ZERO, GaussRational, ParamScalar, gauss_sqrt

Matrix = List[List]


class RepresentationError(ValueError):
    pass


# Specht modules

@dataclass
class SpechtModule:
    n: int
    kind: str
    matrices: Dict[int, Matrix]
    _cache: Dict[Perm, Matrix] = field(default_factory=dict, repr=False)

    @property
    def dimension(self) -> int:
        return len(self.matrices[1])

    def matrix(self, t: Perm) -> Matrix:
        """Matrix of ``t`` from its factorization into adjacent transpositions."""
        hit = self._cache.get(t)
        if hit is None:
            hit = linalg.identity(self.dimension)
            for k in t.adjacent_word():
                hit = linalg.matmul(hit, self.matrices[k])
            self._cache[t] = hit
        return hit


def _standard_adjacent(n: int, k: int) -> Matrix:
    d = n - 1
    m = linalg.zeros(d)
    # column j holds the image of v_{j+1}
    if k < n - 1:
        for j in range(d):
            img = j
            if j == k - 1:
                img = k
            elif j == k:
                img = k - 1
            m[img][j] = 1
    else:
        for j in range(d - 1):
            m[j][j] = 1
            m[d - 1][j] = -1
        m[d - 1][d - 1] = -1
    return m


def specht(n: int, kind: str = "standard") -> SpechtModule:
    """``standard`` is (n-1,1), ``sign-twist`` is (2,1^(n-2)), ``sign`` is (1^n)."""
    if kind == "standard":
        if n < 3:
            raise RepresentationError("standard module needs n >= 3")
        mats = {k: _standard_adjacent(n, k) for k in range(1, n)}
    elif kind == "sign-twist":
        if n < 4:
            raise RepresentationError("sign-twisted module needs n >= 4")
        mats = {k: linalg.scale(-1, _standard_adjacent(n, k)) for k in range(1, n)}
    elif kind == "sign":
        if n < 2:
            raise RepresentationError("sign module needs n >= 2")
        mats = {k: [[-1]] for k in range(1, n)}
    else:
        raise RepresentationError(f"unknown kind {kind!r}")
    return SpechtModule(n, kind, mats)


def standard_direct(t: Perm) -> Matrix:
    """Standard module matrix straight from ``t (e_j - e_n) = e_t(j) - e_t(n)``."""
    n = t.n
    d = n - 1
    m = linalg.zeros(d)
    for j in range(d):
        a, b = t(j + 1), t(n)
        if a != n:
            m[a - 1][j] += 1
        if b != n:
            m[b - 1][j] -= 1
    return m


def coxeter_failures(m: SpechtModule) -> List[str]:
    out = []
    ident = linalg.identity(m.dimension)
    mats = m.matrices
    for i in range(1, m.n):
        if not linalg.mat_equal(linalg.matmul(mats[i], mats[i]), ident):
            out.append(f"s{i}^2 != 1")
        if i + 1 < m.n:
            p = linalg.matmul(mats[i], mats[i + 1])
            if not linalg.mat_equal(linalg.matmul(linalg.matmul(p, p), p), ident):
                out.append(f"(s{i} s{i + 1})^3 != 1")
        for j in range(i + 2, m.n):
            p = linalg.matmul(mats[i], mats[j])
            if not linalg.mat_equal(linalg.matmul(p, p), ident):
                out.append(f"(s{i} s{j})^2 != 1")
    return out


# modules over the lifted algebras

@dataclass
class RepModule:
    name: str
    datum: QlDatum
    labels: Tuple[str, ...]
    base: int
    base_matrix: Matrix
    carrier: Callable[[Perm], Matrix] = field(repr=False)
    change: Matrix = field(repr=False)
    _change_inv: Matrix = field(default=None, repr=False)
    _group: Dict[Perm, Matrix] = field(default_factory=dict, repr=False)
    _gens: Dict[int, Matrix] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._change_inv = linalg.inverse(self.change)

    @property
    def dimension(self) -> int:
        return len(self.change)

    @property
    def n(self) -> int:
        return self.datum.realization.n

    def group_matrix(self, t: Perm) -> Matrix:
        hit = self._group.get(t)
        if hit is None:
            hit = linalg.matmul(linalg.matmul(self._change_inv, self.carrier(t)), self.change)
            self._group[t] = hit
        return hit

    def _paths(self) -> Dict[int, Perm]:
        # shortest words in adjacent transpositions moving the base letter
        real = self.datum.realization
        n = self.n
        found = {self.base: Perm.identity(n)}
        frontier = [self.base]
        while frontier:
            nxt = []
            for i in frontier:
                for k in range(1, n):
                    s = adjacent(n, k)
                    j = real.act(s, i)
                    if j not in found:
                        found[j] = s * found[i]
                        nxt.append(j)
            frontier = nxt
        return found

    def conjugated(self, t: Perm) -> Matrix:
        """``chi_base(t)^-1 H_t a_base H_t^-1``, the candidate for ``a_{t.base}``."""
        real = self.datum.realization
        h = self.group_matrix(t)
        hinv = self.group_matrix(t.inverse())
        c = real.chi_value(self.base, t)
        m = linalg.matmul(linalg.matmul(h, self.base_matrix), hinv)
        if c == 1:
            return m
        inv = Fraction(1, c) if isinstance(c, int) else 1 / c
        return linalg.scale(inv, m)

    def generator_matrix(self, i: int) -> Matrix:
        if not self._gens:
            for j, t in self._paths().items():
                self._gens[j] = self.conjugated(t)
        if i not in self._gens:
            raise RepresentationError(f"generator {i} is not reached from the base generator")
        return self._gens[i]

    @property
    def generator_matrices(self) -> Dict[int, Matrix]:
        return {i: self.generator_matrix(i) for i in range(self.datum.q.rack.size)}

    def evaluate(self, lam, gam=0) -> "EvaluatedModule":
        mats = {i: [[ParamScalar.coerce(x).evaluate(lam, gam) for x in row] for row in m]
                for i, m in self.generator_matrices.items()}
        return EvaluatedModule(self, mats)


@dataclass
class EvaluatedModule:
    module: RepModule
    generators: Dict[int, Matrix]

    def group_matrix(self, t: Perm) -> Matrix:
        return self.module.group_matrix(t)


def path_independence_failures(m: RepModule) -> List[Tuple[str, str]]:
    """Every ``t`` moving the base letter to ``i`` must give the same matrix."""
    real = m.datum.realization
    labels = m.datum.q.rack.labels
    out = []
    for t in real.group:
        i = real.act(t, m.base)
        if not linalg.mat_equal(m.conjugated(t), m.generator_matrix(i)):
            out.append((labels[i], str(t)))
    return out


# the three constructions

def _phi_w(n: int) -> Matrix:
    b = Fraction(2, 2 - n)
    d = n - 1
    m = linalg.identity(d)
    m[0][0], m[0][1] = 1, 1
    m[1][0], m[1][1] = -1, 1
    for j in range(2, d):
        m[j][1] = b
    return m


def _phi_u(n: int) -> Matrix:
    d = n - 1
    m = linalg.identity(d)
    m[0][0], m[0][1] = 1, 1
    m[1][0], m[1][1] = 1, -1
    return m


def _two_block_carrier(n: int) -> Callable[[Perm], Matrix]:
    std = specht(n, "standard")

    def carrier(t: Perm) -> Matrix:
        m = std.matrix(t)
        return linalg.block_diag(m, linalg.scale(t.sign(), m))
    return carrier


def alpha_n(n: int, lam=LAMBDA, gam=GAMMA) -> ParamScalar:
    return (ParamScalar.coerce(lam) * (n - 2) - ParamScalar.coerce(gam) * (n - 3)) * Fraction(2, n)


def build_W(n: int, alpha: ParamScalar | None = None) -> RepModule:
    """Module on standard + sign-twisted Specht modules for the ``-1`` family.

    ``alpha`` overrides the coefficient of ``a_(12) zeta_2`` (used as a
    negative control).
    """
    if n not in (4, 5):
        raise RepresentationError("W(n) is built for n = 4, 5")
    d = n - 1
    phi = _phi_w(n)
    change = linalg.block_diag(phi, phi)
    a = linalg.zeros(2 * d, zero=ZERO)
    # columns are images; xi_k is index k-1, zeta_k is index d+k-1
    a[d][0] = ParamScalar.const(2)
    a[1][d + 1] = alpha_n(n) if alpha is None else ParamScalar.coerce(alpha)
    for j in range(2, d):
        a[j][d + j] = GAMMA
    datum = family_Q_minus(n)
    labels = tuple(f"xi{k}" for k in range(1, n)) + tuple(f"zeta{k}" for k in range(1, n))
    return RepModule(f"W({n})", datum, labels, datum.q.rack.index("(12)"), a,
                     _two_block_carrier(n), change)


def build_U(n: int, lam) -> RepModule:
    """Module on the standard Specht module for the ``chi`` family at ``lambda``."""
    if n not in (4, 5):
        raise RepresentationError("U(n) is built for n = 4, 5")
    lam = GaussRational.coerce(lam).simplify()
    s = gauss_sqrt(-GaussRational.coerce(lam))
    if s is None:
        raise RepresentationError(f"-({lam}) has no square root in Q(i)")
    s = s.simplify()
    d = n - 1
    a = linalg.zeros(d, zero=ZERO)
    a[1][0] = ParamScalar.const(2 * s)
    datum = family_Q_chi(n, ParamScalar.const(lam))
    std = specht(n, "standard")
    return RepModule(f"U({n})", datum, tuple(f"xi{k}" for k in range(1, n)),
                     datum.q.rack.index("(12)"), a, std.matrix, _phi_u(n))


def _phi_v() -> Tuple[Matrix, Matrix]:
    """Base change for the four-cycle module, one block per Specht summand.

    ``xi_1 = v_1 - v_3`` and ``xi_2 = v_2`` span the ``-1`` eigenspace of
    ``(13)(24)``; ``xi_3 = v_1 - v_2 + v_3`` spans its fixed line.  On the
    sign-twisted side ``zeta_k = (1 + T) xi_k`` for ``k = 1, 2`` and
    ``zeta_3 = 2 xi_3`` (in ``w`` coordinates), with ``T`` the matrix of
    ``(1234)``.  This is the choice for which the stated action of
    ``a_(1234)`` satisfies every relation.
    """
    first = [[1, 0, 1], [0, 1, -1], [-1, 0, 1]]
    t = specht(4, "standard").matrix(Perm.parse("(1234)", 4))
    t_xi = linalg.matmul(linalg.matmul(linalg.inverse(first), t), first)
    n = [[(1 if i == j else 0) + t_xi[i][j] for j in range(2)] + [0] for i in range(2)]
    n.append([0, 0, 2])
    second = linalg.matmul(first, n)
    return first, second


def build_V() -> RepModule:
    """Module on standard + sign-twisted Specht modules of S_4 for the four-cycle family."""
    first, second = _phi_v()
    change = linalg.block_diag(first, second)
    a = linalg.zeros(6, zero=ZERO)
    for k in range(2):
        a[3 + k][k] = ParamScalar.const(2)
        a[k][3 + k] = GAMMA
    a[2][5] = LAMBDA - GAMMA
    datum = family_D()
    labels = ("xi1", "xi2", "xi3", "zeta1", "zeta2", "zeta3")
    return RepModule("V", datum, labels, datum.q.rack.index("(1234)"), a,
                     _two_block_carrier(4), change)


def build(family_name: str, n: int = 4, lam=None) -> RepModule:
    key = family_name.lower()
    if key in ("qminus", "q_minus", "w"):
        return build_W(n)
    if key in ("qchi", "q_chi", "u"):
        return build_U(n, -1 if lam is None else lam)
    if key in ("d", "v"):
        return build_V()
    raise RepresentationError(f"unknown family {family_name!r}")


# verification

@dataclass
class PresentationReport:
    homomorphism: List[str]
    commutation: List[str]
    quadratic: List[str]
    path_independence: List[str]

    @property
    def ok(self) -> bool:
        return not (self.homomorphism or self.commutation or self.quadratic or self.path_independence)

    def to_json(self) -> dict:
        return {"ok": self.ok, "homomorphism": self.homomorphism, "commutation": self.commutation,
                "quadratic": self.quadratic, "path_independence": self.path_independence}


def verify_presentation(m: RepModule, p: Presentation | None = None, limit: int = 20) -> PresentationReport:
    p = presentation(m.datum) if p is None else p
    if p.datum.q.rack.size != m.datum.q.rack.size or p.datum.realization.n != m.n:
        raise RepresentationError("module and presentation do not match")
    real = p.datum.realization
    labels = p.datum.q.rack.labels
    n = m.n
    dim = m.dimension
    ident = linalg.identity(dim)
    hom: List[str] = []
    if not linalg.mat_equal(m.group_matrix(Perm.identity(n)), ident):
        hom.append("H_e != 1")
    for k in range(1, n):
        s = adjacent(n, k)
        hs = m.group_matrix(s)
        for t in real.group:
            if not linalg.mat_equal(m.group_matrix(s * t), linalg.matmul(hs, m.group_matrix(t))):
                hom.append(f"H_(s{k} t) != H_s{k} H_t for t={t}")
                if len(hom) >= limit:
                    break
    comm: List[str] = []
    gens = m.generator_matrices
    for k in range(1, n):
        s = adjacent(n, k)
        hs = m.group_matrix(s)
        for i in range(p.datum.q.rack.size):
            lhs = linalg.matmul(hs, gens[i])
            rhs = linalg.scale(real.chi_value(i, s), linalg.matmul(gens[real.act(s, i)], hs))
            if not linalg.mat_equal(lhs, rhs):
                comm.append(f"H_{s.compact()} a_{labels[i]} != chi a_{labels[real.act(s, i)]} H_{s.compact()}")
    quad: List[str] = []
    for rel in p.quadratic:
        lhs = linalg.zeros(dim, zero=ZERO)
        for c, (a, b) in rel.terms:
            lhs = linalg.matadd(lhs, linalg.scale(c, linalg.matmul(gens[a], gens[b])))
        rhs = linalg.scale(rel.lam, linalg.matsub(ident, m.group_matrix(rel.g)))
        if not linalg.mat_equal(lhs, linalg.to_param(rhs)):
            quad.append(" + ".join(f"({c}) a{labels[a]} a{labels[b]}" for c, (a, b) in rel.terms)
                        + f" != ({rel.lam})(1 - H{rel.g.compact()})")
    paths = [f"a_{i} via {t}" for i, t in path_independence_failures(m)]
    return PresentationReport(hom[:limit], comm[:limit], quad[:limit], paths[:limit])


def _flatten(mat) -> List:
    return [x for row in mat for x in row]


@dataclass
class LiftingConditions:
    """Hypotheses (i)-(iii) for a module, at one parameter point.

    ``outside_group_span`` is condition (ii) read literally: ``rho(a_i)`` is
    not in the linear span of the group matrices.  Modules that are
    irreducible for the group alone can never pass it, since there the span
    is the whole matrix algebra.  ``outside_skew_line`` is the test that the
    argument actually needs: ``a_i`` is ``(g_i, 1)``-skew-primitive, so it
    lies in the group algebra only if it is a multiple of ``1 - g_i``.
    """

    faithful: bool
    outside_group_span: bool
    outside_skew_line: bool
    independent_fibres: bool
    witness: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.faithful and self.outside_group_span and self.independent_fibres

    @property
    def ok_skew(self) -> bool:
        return self.faithful and self.outside_skew_line and self.independent_fibres

    def to_json(self) -> dict:
        return {"i": self.faithful, "ii": self.outside_group_span,
                "ii_skew_primitive": self.outside_skew_line, "iii": self.independent_fibres,
                "witness": self.witness}


def check_lifting_conditions(m: RepModule, lam=1, gam=0) -> LiftingConditions:
    real = m.datum.realization
    n = m.n
    ident = linalg.identity(m.dimension)
    e = Perm.identity(n)
    faithful = m.dimension > 0 and all(
        t == e or not linalg.mat_equal(m.group_matrix(t), ident) for t in real.group)
    ev = m.evaluate(lam, gam)
    base = _flatten(ev.generators[m.base])
    group_rows = [_flatten(m.group_matrix(t)) for t in real.group]
    outside = not linalg.in_span(base, group_rows)
    skew = _flatten(linalg.matsub(ident, m.group_matrix(real.g_map[m.base])))
    outside_line = any(base) and not linalg.in_span(base, [skew])
    fibres = True
    if not real.is_faithful:
        for i in range(m.datum.q.rack.size):
            same = [j for j in range(m.datum.q.rack.size) if real.g_map[j] == real.g_map[i]]
            if linalg.rank([_flatten(ev.generators[j]) for j in same]) < len(same):
                fibres = False
    label = m.datum.q.rack.labels[m.base]
    return LiftingConditions(faithful, outside, bool(outside_line), fibres, f"a_{label}")


def group_span_dimension(m: RepModule) -> int:
    return linalg.rank([_flatten(m.group_matrix(t)) for t in m.datum.realization.group])


def commutant_dimension(matrices: Sequence[Matrix]) -> int:
    """Dimension of ``{X : X M = M X for all M}``."""
    d = len(matrices[0])
    rows = []
    for mat in matrices:
        # (XM - MX)_{rc} = sum_k X_rk M_kc - M_rk X_kc, unknown X_ab at a*d+b
        for r in range(d):
            for c in range(d):
                row = [0] * (d * d)
                for k in range(d):
                    if mat[k][c]:
                        row[r * d + k] += mat[k][c]
                    if mat[r][k]:
                        row[k * d + c] -= mat[r][k]
                if any(row):
                    rows.append(row)
    return d * d - linalg.rank(rows) if rows else d * d


def algebra_dimension(matrices: Sequence[Matrix]) -> int:
    """Dimension of the unital algebra generated by ``matrices``."""
    d = len(matrices[0])
    echelon: List[Tuple[int, List]] = []

    def add(mat) -> bool:
        v = _flatten(mat)
        for piv, row in echelon:
            c = v[piv]
            if c:
                v = [x - c * y for x, y in zip(v, row)]
        piv = next((k for k, x in enumerate(v) if x), None)
        if piv is None:
            return False
        inv = 1 / v[piv] if hasattr(v[piv], "re") else Fraction(1) / v[piv]
        v = [x * inv for x in v]
        for k, (p2, row) in enumerate(echelon):
            if row[piv]:
                echelon[k] = (p2, [x - row[piv] * y for x, y in zip(row, v)])
        echelon.append((piv, v))
        return True

    frontier = [linalg.identity(d)]
    add(frontier[0])
    while frontier and len(echelon) < d * d:
        nxt = []
        for x in frontier:
            for g in matrices:
                y = linalg.matmul(g, x)
                if add(y):
                    nxt.append(y)
        frontier = nxt
    return len(echelon)


def is_irreducible(m: RepModule, lam=1, gam=0) -> bool:
    """Absolute irreducibility: the matrices generate the full matrix algebra."""
    ev = m.evaluate(lam, gam)
    mats = [m.group_matrix(adjacent(m.n, k)) for k in range(1, m.n)]
    mats += list(ev.generators.values())
    return irreducible_matrices(mats)


def irreducible_matrices(matrices: Sequence[Matrix]) -> bool:
    d = len(matrices[0])
    return algebra_dimension(matrices) == d * d
