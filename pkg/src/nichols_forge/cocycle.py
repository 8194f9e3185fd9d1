"""Rack 2-cocycles, the braidings they induce, and dual cocycles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .rack import Rack, check_rack_axioms, conjugacy_class_rack, inverse_rack
from .perm import Perm, transposition
from .scalars import GaussRational, parse_scalar, scalar_to_str


class CocycleError(ValueError):
    pass


def _simplify(v):
    return GaussRational.coerce(v).simplify()


@dataclass(frozen=True)
class Cocycle:
    """Values ``q[i][j]`` indexed by rack indices; never zero."""

    rack: Rack
    values: Tuple[Tuple[object, ...], ...]
    name: str = ""

    def __post_init__(self):
        n = self.rack.size
        if len(self.values) != n or any(len(r) != n for r in self.values):
            raise CocycleError("cocycle table must be size x size")
        for i, row in enumerate(self.values):
            for j, v in enumerate(row):
                if not v:
                    raise CocycleError(f"zero cocycle value at ({i}, {j})")

    @classmethod
    def from_values(cls, rack: Rack, values: Sequence[Sequence], name: str = "") -> "Cocycle":
        return cls(rack, tuple(tuple(_simplify(parse_scalar(v)) for v in row) for row in values), name)

    def q(self, i: int, j: int):
        return self.values[i][j]

    def is_real(self) -> bool:
        return not any(isinstance(v, GaussRational) for row in self.values for v in row)

    def is_constant(self) -> bool:
        first = self.values[0][0]
        return all(v == first for row in self.values for v in row)

    def to_json(self) -> dict:
        return {"rack": self.rack.to_json(),
                "values": [[scalar_to_str(v) for v in row] for row in self.values]}

    @classmethod
    def from_json(cls, data: dict, rack: Rack | None = None) -> "Cocycle":
        try:
            r = rack if rack is not None else Rack.from_json(data["rack"])
            return cls.from_values(r, data["values"], data.get("name", ""))
        except (KeyError, TypeError, ValueError) as exc:
            raise CocycleError(f"malformed cocycle JSON: {exc}") from exc


@dataclass
class CocycleReport:
    valid: bool
    zero_entries: List[Tuple[int, int]]
    failing_triples: List[Tuple[int, int, int]]

    def to_json(self) -> dict:
        return {"valid": self.valid, "zero_entries": [list(t) for t in self.zero_entries],
                "failing_triples": [list(t) for t in self.failing_triples]}


def check_cocycle(q: Cocycle, limit: int | None = None) -> CocycleReport:
    """Check ``q[i][j|>k] q[j][k] == q[i|>j][i|>k] q[i][k]`` for all triples."""
    r = q.rack
    t = r.table
    v = q.values
    zeros = [(i, j) for i in range(r.size) for j in range(r.size) if not v[i][j]]
    bad = []
    for i in range(r.size):
        for j in range(r.size):
            for k in range(r.size):
                if v[i][t[j][k]] * v[j][k] != v[t[i][j]][t[i][k]] * v[i][k]:
                    bad.append((i, j, k))
                    if limit is not None and len(bad) >= limit:
                        return CocycleReport(False, zeros, bad)
    return CocycleReport(not zeros and not bad, zeros, bad)


def constant_cocycle(rack: Rack, value=-1) -> Cocycle:
    v = _simplify(parse_scalar(value))
    name = "minus" if v == -1 else f"const({scalar_to_str(v)})"
    return Cocycle(rack, tuple(tuple(v for _ in range(rack.size)) for _ in range(rack.size)), name)


def chi_value(sigma: Perm, tau: Perm) -> int:
    """``chi(sigma, (i j))`` for ``i < j``: ``1`` if ``sigma(i) < sigma(j)`` else ``-1``."""
    cyc = tau.cycles()
    if len(cyc) != 1 or len(cyc[0]) != 2:
        raise CocycleError(f"{tau} is not a transposition")
    i, j = sorted(cyc[0])
    return 1 if sigma(i) < sigma(j) else -1


def chi_cocycle(n: int) -> Cocycle:
    if n < 3:
        raise CocycleError("chi cocycle needs n >= 3")
    rack = conjugacy_class_rack(n, transposition(n, 1, 2))
    elems = rack.elements
    vals = tuple(tuple(chi_value(s, t) for t in elems) for s in elems)
    return Cocycle(rack, vals, "chi")


def dual_cocycle(q: Cocycle) -> Cocycle:
    """``qt[k][l] = q[k][k |>^-1 l]`` on the inverse rack."""
    r = q.rack
    inv = inverse_rack(r)
    vals = tuple(tuple(q.values[k][inv.table[k][l]] for l in range(r.size)) for k in range(r.size))
    return Cocycle(inv, vals, (q.name + "~") if q.name else "")


@dataclass(frozen=True)
class BraidingMap:
    """``c(x_i (x) x_j) = q_ij x_{i|>j} (x) x_i`` as a sparse rule table."""

    size: int
    action: Tuple[Tuple[Tuple[object, Tuple[int, int]], ...], ...]

    @property
    def dimension(self) -> int:
        return self.size * self.size

    def apply(self, i: int, j: int) -> Tuple[object, Tuple[int, int]]:
        return self.action[i][j]

    def matrix(self) -> List[List]:
        """Dense matrix on the basis ``(i, j) -> i*size + j`` (columns = inputs)."""
        n = self.size
        m = [[0] * (n * n) for _ in range(n * n)]
        for i in range(n):
            for j in range(n):
                c, (a, b) = self.action[i][j]
                m[a * n + b][i * n + j] = c
        return m


def braiding(q: Cocycle) -> BraidingMap:
    r = q.rack
    act = tuple(tuple((q.values[i][j], (r.table[i][j], i)) for j in range(r.size)) for i in range(r.size))
    return BraidingMap(r.size, act)


def _apply12(c: BraidingMap, coef, t):
    s, (a, b) = c.action[t[0]][t[1]]
    return coef * s, (a, b, t[2])


def _apply23(c: BraidingMap, coef, t):
    s, (a, b) = c.action[t[1]][t[2]]
    return coef * s, (t[0], a, b)


def check_braid_equation(c: BraidingMap) -> bool:
    return not braid_equation_failures(c, limit=1)


def braid_equation_failures(c: BraidingMap, limit: int | None = None) -> List[Tuple[int, int, int]]:
    bad = []
    n = c.size
    for i in range(n):
        for j in range(n):
            for k in range(n):
                t = (i, j, k)
                lhs = _apply12(c, *_apply23(c, *_apply12(c, 1, t)))
                rhs = _apply23(c, *_apply12(c, *_apply23(c, 1, t)))
                if lhs != rhs:
                    bad.append(t)
                    if limit is not None and len(bad) >= limit:
                        return bad
    return bad


def pairing_identity_failures(q: Cocycle) -> List[Tuple[int, int, int, int]]:
    """Check ``<c(x_i x_j), y^k y^l> == <x_i x_j, c*(y^k y^l)>`` on all basis pairs.

    The pairing is ``<x_i (x) x_j, y^k (x) y^l> = delta_il delta_jk`` and
    ``c*`` is the braiding of the dual cocycle.
    """
    c = braiding(q)
    cd = braiding(dual_cocycle(q))
    n = q.rack.size
    bad = []

    def pair(a, b, k, l):
        return 1 if (a == l and b == k) else 0

    for i in range(n):
        for j in range(n):
            s, (a, b) = c.action[i][j]
            for k in range(n):
                for l in range(n):
                    t, (u, v) = cd.action[k][l]
                    if s * pair(a, b, k, l) != t * pair(i, j, u, v):
                        bad.append((i, j, k, l))
    return bad
