"""Quadratic lifting data and the presentations of the algebras they define.

A datum bundles a rack with cocycle, a principal Yetter-Drinfeld realization
over a symmetric group and one scalar ``lambda_C`` per admissible class.
The algebra has generators ``a_i`` (``i`` in the rack) and ``H_t`` (``t`` in
the group) with relations

* ``H_e = 1`` and ``H_t H_s = H_{ts}``,
* ``H_t a_i = chi_i(t) a_{t.i} H_t``,
* ``phi_C(a) = lambda_C (1 - H_{g_C})`` for every admissible class ``C``.

``phi_C`` is the quadratic relation of the class read from its starting pair
``(i_2, i_1)``, and ``g_C = g_{i_2} g_{i_1}``, the group-like attached to the
leading monomial ``a_{i_2} a_{i_1}``.  The product does not depend on which
pair of the class is taken as the start.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .cocycle import Cocycle
from .fixtures import builtin
from .perm import Perm, adjacent, all_perms, conjugate
from .quadratic import QuadClass, admissible_classes, relation_for
from .rack import is_faithful, is_indecomposable
from .scalars import GAMMA, LAMBDA, ParamScalar, exact_div, parse_scalar, to_fraction


class LiftingError(ValueError):
    pass


# realizations

@dataclass
class YDRealization:
    """Action by conjugation, ``g`` the inclusion, ``chi`` a table over ``(i, t)``."""

    q: Cocycle
    group: Tuple[Perm, ...]
    g_map: Tuple[Perm, ...]
    chi: Dict[Tuple[int, Perm], object]
    _action: Dict[Tuple[Perm, int], int] = field(default_factory=dict, repr=False)

    @property
    def n(self) -> int:
        return self.group[0].n

    def act(self, t: Perm, i: int) -> int:
        key = (t, i)
        hit = self._action.get(key)
        if hit is None:
            hit = self.q.rack.index(conjugate(t, self.g_map[i]))
            self._action[key] = hit
        return hit

    def chi_value(self, i: int, t: Perm):
        return self.chi[(i, t)]

    @property
    def is_faithful(self) -> bool:
        return len(set(self.g_map)) == len(self.g_map)

    def k_subgroup(self) -> Tuple[Perm, ...]:
        """Subgroup generated by the image of ``g``."""
        n = self.n
        seen = {Perm.identity(n)}
        frontier = list(seen)
        while frontier:
            nxt = []
            for x in frontier:
                for g in self.g_map:
                    y = g * x
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return tuple(sorted(seen))


@dataclass
class RealizationReport:
    failures: List[str]

    @property
    def ok(self) -> bool:
        return not self.failures


def check_realization(real: YDRealization, limit: int = 20) -> RealizationReport:
    q = real.q
    r = q.rack
    fails: List[str] = []
    for h in real.group:
        for i in range(r.size):
            if real.g_map[real.act(h, i)] != conjugate(h, real.g_map[i]):
                fails.append(f"g_(h.i) != h g_i h^-1 for h={h}, i={r.labels[i]}")
    for i in range(r.size):
        for j in range(r.size):
            if real.act(real.g_map[i], j) != r.table[i][j]:
                fails.append(f"g_i . j != i |> j for i={r.labels[i]}, j={r.labels[j]}")
            if real.chi_value(i, real.g_map[j]) != q.q(j, i):
                fails.append(f"chi_i(g_j) != q_ji for i={r.labels[i]}, j={r.labels[j]}")
    for i in range(r.size):
        for h in real.group:
            for t in real.group:
                lhs = real.chi_value(i, h * t)
                rhs = real.chi_value(i, t) * real.chi_value(real.act(t, i), h)
                if lhs != rhs:
                    fails.append(f"1-cocycle fails at i={r.labels[i]}, h={h}, t={t}")
                    if len(fails) >= limit:
                        return RealizationReport(fails)
    return RealizationReport(fails[:limit])


def sign_chi(q: Cocycle) -> Dict[Tuple[int, Perm], object]:
    n = q.rack.elements[0].n
    return {(i, t): t.sign() for i in range(q.rack.size) for t in all_perms(n)}


def chi_from_generators(q: Cocycle, gen_values: Dict[Tuple[int, int], object]) -> Dict[Tuple[int, Perm], object]:
    """Extend ``chi_i(s_k)`` to all of ``S_n`` through ``chi_i(ht) = chi_i(t) chi_{t.i}(h)``.

    Uses the bubble-sort factorization of each permutation.
    """
    r = q.rack
    n = r.elements[0].n
    index = {p: k for k, p in enumerate(r.elements)}
    out = {}
    for t in all_perms(n):
        word = t.adjacent_word()
        for i in range(r.size):
            # t = s_w1 * ... * s_wr; peel off from the right
            val = 1
            cur = i
            for k in reversed(word):
                val = val * gen_values[(cur, k)]
                cur = index[conjugate(adjacent(n, k), r.elements[cur])]
            out[(i, t)] = val
    return out


def transposition_chi(q: Cocycle) -> Dict[Tuple[int, Perm], object]:
    """``chi_i(t)`` for the realization of ``(O_2^n, chi)`` by inclusion.

    Closed form ``chi_(ab)(t) = sign(t(b) - t(a))`` for ``a < b``; it is
    compared with the extension from adjacent transpositions.
    """
    r = q.rack
    n = r.elements[0].n
    closed = {}
    for i, p in enumerate(r.elements):
        a, b = sorted(p.cycles()[0])
        for t in all_perms(n):
            closed[(i, t)] = 1 if t(a) < t(b) else -1
    gens = {}
    for i in range(r.size):
        for k in range(1, n):
            gens[(i, k)] = q.q(r.index(adjacent(n, k)), i)
    derived = chi_from_generators(q, gens)
    if derived != closed:
        raise LiftingError("closed form of chi disagrees with its generator extension")
    return closed


def inclusion_realization(q: Cocycle) -> YDRealization:
    """Realization over ``S_n`` with ``g`` the inclusion and ``.`` conjugation."""
    if q.rack.elements is None:
        raise LiftingError("rack has no permutation carrier")
    n = q.rack.elements[0].n
    if q.is_constant() and q.q(0, 0) == -1:
        chi = sign_chi(q)
    elif q.name == "chi":
        chi = transposition_chi(q)
    else:
        raise LiftingError("no canonical character for this cocycle")
    return YDRealization(q, all_perms(n), tuple(q.rack.elements), chi)


# classes and their relations

def class_start(cls: QuadClass) -> Tuple[int, int]:
    return cls.start


def g_class(real: YDRealization, cls: QuadClass) -> Perm:
    i2, i1 = cls.start
    return real.g_map[i2] * real.g_map[i1]


def _rotation_factor(cls: QuadClass, start: Tuple[int, int]):
    """``phi_{C, start} = phi_C / eta_h`` where ``start`` is the ``h``-th pair."""
    pairs = cls.pairs()
    if start not in pairs:
        raise LiftingError(f"{start} is not a pair of the class")
    return cls.etas[pairs.index(start)]


def _locate(classes: Sequence[QuadClass], pair: Tuple[int, int]) -> int:
    for k, c in enumerate(classes):
        if pair in c.pairs():
            return k
    raise LiftingError(f"pair {pair} lies in no admissible class")


@dataclass
class QlDatum:
    q: Cocycle
    realization: YDRealization
    classes: Tuple[QuadClass, ...]
    lambdas: Tuple[ParamScalar, ...]
    family: str = ""
    params: Tuple = ()

    def lam(self, cls_index: int) -> ParamScalar:
        return self.lambdas[cls_index]

    def lambda_at(self, start: Tuple[int, int]) -> ParamScalar:
        """``lambda`` for the class read from another starting pair."""
        k = _locate(self.classes, start)
        return self.lambdas[k] / _rotation_factor(self.classes[k], start)


def datum_from_representatives(q: Cocycle, real: YDRealization,
                               reps: Dict[Tuple[int, int], object], family: str = "",
                               params: Tuple = ()) -> QlDatum:
    """Spread ``lambda`` from one starting pair per orbit using conjugation by ``G``.

    ``reps`` maps a starting pair ``(i_2, i_1)`` to its ``lambda``; classes not
    reached get 0.  Conflicting values raise.
    """
    classes = tuple(admissible_classes(q))
    lam: List[Optional[ParamScalar]] = [None] * len(classes)
    for start, value in reps.items():
        value = ParamScalar.coerce(value)
        for t in real.group:
            i2, i1 = start
            mu = real.chi_value(i2, t) * real.chi_value(i1, t)
            s2 = (real.act(t, i2), real.act(t, i1))
            k = _locate(classes, s2)
            # lambda at the moved start is lambda/mu; rescale to the class's own start
            v = (value / mu) * _rotation_factor(classes[k], s2)
            if lam[k] is None:
                lam[k] = v
            elif lam[k] != v:
                raise LiftingError(f"inconsistent lambda for class {k}: {lam[k]} vs {v}")
    filled = tuple(ParamScalar() if v is None else v for v in lam)
    return QlDatum(q, real, classes, filled, family, params)


# validation

@dataclass
class QlReport:
    violations: List[Dict]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"ok": self.ok, "violations": self.violations}


def validate_ql_datum(d: QlDatum, limit: int = 50) -> QlReport:
    q = d.q
    r = q.rack
    real = d.realization
    lab = r.labels
    out: List[Dict] = []
    # g_i != g_j g_k
    prods = {}
    for j in range(r.size):
        for k in range(r.size):
            prods.setdefault(real.g_map[j] * real.g_map[k], (j, k))
    for i in range(r.size):
        hit = prods.get(real.g_map[i])
        if hit is not None:
            out.append({"condition": "g_i != g_j g_k", "i": lab[i], "j": lab[hit[0]], "k": lab[hit[1]]})
    for c, cls in enumerate(d.classes):
        s = [lab[x] for x in cls.start]
        if g_class(real, cls).is_identity() and d.lambdas[c]:
            out.append({"condition": "lambda_C = 0 when g_C = 1", "class": s,
                        "lambda": str(d.lambdas[c])})
        i2, i1 = cls.start
        for k in range(r.size):
            moved = (r.table[k][i2], r.table[k][i1])
            expected = q.q(k, i2) * q.q(k, i1) * d.lambda_at(moved)
            if d.lambdas[c] != expected:
                out.append({"condition": "lambda_C = q_k,i2 q_k,i1 lambda_(k|>C)", "class": s,
                            "k": lab[k], "lambda": str(d.lambdas[c]), "expected": str(expected)})
        if len(out) >= limit:
            return QlReport(out)
    if q.is_constant() and is_faithful(r) and is_indecomposable(r):
        for c, cls in enumerate(d.classes):
            i2, i1 = cls.start
            for t in real.group:
                chi = real.chi_value(0, t)
                moved = (real.act(t, i2), real.act(t, i1))
                expected = chi * chi * d.lambda_at(moved)
                if d.lambdas[c] != expected:
                    out.append({"condition": "lambda_C = chi(t)^2 lambda_(t.C)",
                                "class": [lab[x] for x in cls.start], "t": str(t)})
                    break
    return QlReport(out[:limit])


# the named families

def _tri_start(q: Cocycle) -> Tuple[int, int]:
    r = q.rack
    return (r.index("(12)"), r.index("(23)"))


def family_Q_minus(n: int, lam=LAMBDA, gam=GAMMA) -> QlDatum:
    q = builtin(f"O2_{n}_minus")
    real = inclusion_realization(q)
    r = q.rack
    reps = {(r.index("(12)"), r.index("(34)")): gam, _tri_start(q): lam}
    return datum_from_representatives(q, real, reps, "Qminus", (lam, gam))


def family_Q_chi(n: int, lam=LAMBDA) -> QlDatum:
    q = builtin(f"O2_{n}_chi")
    real = inclusion_realization(q)
    return datum_from_representatives(q, real, {_tri_start(q): lam}, "Qchi", (lam,))


def family_D(lam=LAMBDA, gam=GAMMA) -> QlDatum:
    q = builtin("O4_4_minus")
    real = inclusion_realization(q)
    r = q.rack
    a = r.index("(1234)")
    reps = {(a, a): gam, (a, r.index("(1243)")): lam}
    return datum_from_representatives(q, real, reps, "D", (lam, gam))


def family(name: str, n: int = 4, params: Sequence = ()) -> QlDatum:
    key = name.lower()
    if key in ("qminus", "q_minus"):
        lam, gam = (list(params) + [LAMBDA, GAMMA][len(params):])[:2]
        return family_Q_minus(n, lam, gam)
    if key in ("qchi", "q_chi"):
        return family_Q_chi(n, params[0] if params else LAMBDA)
    if key == "d":
        if n != 4:
            raise LiftingError("family D exists only for n = 4")
        lam, gam = (list(params) + [LAMBDA, GAMMA][len(params):])[:2]
        return family_D(lam, gam)
    raise LiftingError(f"unknown family {name!r}")


def transitivity_by_size(d: QlDatum) -> Dict[int, bool]:
    """Whether ``K`` permutes the admissible classes of each size transitively."""
    r = d.q.rack
    real = d.realization
    k_group = real.k_subgroup()
    out = {}
    by_size: Dict[int, List[int]] = {}
    for c, cls in enumerate(d.classes):
        by_size.setdefault(cls.size, []).append(c)
    for size, idx in by_size.items():
        cls = d.classes[idx[0]]
        i2, i1 = cls.start
        reached = {_locate(d.classes, (real.act(t, i2), real.act(t, i1))) for t in k_group}
        out[size] = reached >= set(idx)
    return out


# presentations

@dataclass(frozen=True)
class QuadraticLiftRelation:
    terms: Tuple[Tuple[object, Tuple[int, int]], ...]
    lam: ParamScalar
    g: Perm
    cls: QuadClass

    def to_json(self, labels) -> dict:
        from .scalars import scalar_to_str
        return {
            "lhs": [[scalar_to_str(c), labels[a], labels[b]] for c, (a, b) in self.terms],
            "lambda": str(self.lam),
            "group_element": self.g.compact(),
        }


@dataclass
class Presentation:
    datum: QlDatum
    commutation: Tuple[Tuple[Perm, int, object, int], ...]
    quadratic: Tuple[QuadraticLiftRelation, ...]

    @property
    def group(self) -> Tuple[Perm, ...]:
        return self.datum.realization.group

    @property
    def generators(self) -> List[str]:
        r = self.datum.q.rack
        return [f"a{lab}" for lab in r.labels] + [f"H{t.compact()}" for t in self.group]

    def to_json(self) -> dict:
        labels = self.datum.q.rack.labels
        return {
            "family": self.datum.family,
            "generators": self.generators,
            "group_relations": "H_e = 1, H_t H_s = H_ts",
            "commutation_count": len(self.commutation),
            "quadratic": [rel.to_json(labels) for rel in self.quadratic],
        }


def presentation(d: QlDatum) -> Presentation:
    rep = validate_ql_datum(d)
    if not rep.ok:
        raise LiftingError(f"invalid datum: {rep.violations[0]}")
    real = d.realization
    size = d.q.rack.size
    comm = tuple((t, i, real.chi_value(i, t), real.act(t, i)) for t in real.group for i in range(size))
    quad = tuple(QuadraticLiftRelation(relation_for(cls).terms, d.lambdas[c], g_class(real, cls), cls)
                 for c, cls in enumerate(d.classes))
    return Presentation(d, comm, quad)


def conjugate_relation(p: Presentation, rel: QuadraticLiftRelation, t: Perm):
    """``H_t (relation) H_t^-1`` rewritten with the commutation rule."""
    real = p.datum.realization
    terms = tuple((c * real.chi_value(a, t) * real.chi_value(b, t), (real.act(t, a), real.act(t, b)))
                  for c, (a, b) in rel.terms)
    return terms, rel.lam, conjugate(t, rel.g)


def relation_is_conjugation_stable(p: Presentation, rel: QuadraticLiftRelation, t: Perm) -> bool:
    """The conjugate is a scalar multiple of a listed relation, on both sides."""
    terms, lam, g = conjugate_relation(p, rel, t)
    lhs = {w: c for c, w in terms}
    for other in p.quadratic:
        od = {w: c for c, w in other.terms}
        if set(od) != set(lhs):
            continue
        w0 = other.terms[0][1]
        ratio = exact_div(lhs[w0], od[w0]) if not hasattr(lhs[w0], "re") else lhs[w0] / od[w0]
        if any(lhs[w] != ratio * od[w] for w in od):
            return False
        if g != other.g and (lam or other.lam):
            return False
        return lam == other.lam * ratio
    return False


# canonical parameters

def canonical_parameter(family_name: str, params):
    """Representative of the isomorphism class of the parameter.

    Two-parameter families: ``(0, 0)`` stays, otherwise scale so that the
    first nonzero coordinate is 1.  One-parameter family: ``0`` or ``1``.
    """
    key = family_name.lower()
    if key in ("qchi", "q_chi"):
        v = params[0] if isinstance(params, (tuple, list)) else params
        return 0 if not v else 1
    if key not in ("qminus", "q_minus", "d"):
        raise LiftingError(f"unknown family {family_name!r}")
    lam, gam = params
    if not lam and not gam:
        return (0, 0)
    if lam:
        return (1, _div(gam, lam))
    return (0, 1)


def _div(a, b):
    if hasattr(a, "re") or hasattr(b, "re"):
        from .scalars import GaussRational
        return (GaussRational.coerce(a) / GaussRational.coerce(b)).simplify()
    return exact_div(a, b)


def parse_params(text: str) -> Tuple:
    return tuple(parse_scalar(x.strip()).simplify() for x in text.split(",") if x.strip())
