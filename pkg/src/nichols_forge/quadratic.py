"""Quadratic relations of rack Nichols algebras.

The pairs of ``X x X`` split into classes under ``(i, j) ~ (i |> j, i)``.
Each class ``C`` is traversed as ``i1 = j, i2 = i, i_{h+2} = i_{h+1} |> i_h``
and contributes the relation ``sum_h eta_h x_{i_{h+1}} x_{i_h}`` whenever
the product of cocycle values along the cycle equals ``(-1)**n(C)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from . import linalg
from .cocycle import Cocycle, braiding
from .rack import Rack


@dataclass(frozen=True)
class QuadClass:
    sequence: Tuple[int, ...]
    admissible: bool = False
    etas: Tuple[object, ...] = ()

    @property
    def size(self) -> int:
        return len(self.sequence)

    def i(self, h: int) -> int:
        """1-based, periodic access ``i_h``."""
        return self.sequence[(h - 1) % len(self.sequence)]

    def pairs(self) -> List[Tuple[int, int]]:
        """The pairs ``(i_{h+1}, i_h)`` for ``h = 1..n(C)``."""
        return [(self.i(h + 1), self.i(h)) for h in range(1, self.size + 1)]

    @property
    def start(self) -> Tuple[int, int]:
        return (self.i(2), self.i(1))

    def cycle_product(self, q: Cocycle):
        prod = 1
        for a, b in self.pairs():
            prod = prod * q.q(a, b)
        return prod


@dataclass(frozen=True)
class QuadRelation:
    """``sum coef * x_a x_b`` over ``terms = ((coef, (a, b)), ...)``."""

    terms: Tuple[Tuple[object, Tuple[int, int]], ...]
    cls: QuadClass

    def as_dict(self) -> Dict[Tuple[int, int], object]:
        return {w: c for c, w in self.terms}

    def vector(self, size: int) -> List:
        v = [0] * (size * size)
        for c, (a, b) in self.terms:
            v[a * size + b] = v[a * size + b] + c
        return v

    def label(self, rack: Rack) -> str:
        from .scalars import scalar_to_str
        parts = []
        for c, (a, b) in self.terms:
            mono = f"x{rack.labels[a]}x{rack.labels[b]}"
            if c == 1:
                parts.append(("+", mono))
            elif c == -1:
                parts.append(("-", mono))
            else:
                parts.append(("+", f"({scalar_to_str(c)}){mono}"))
        text = "".join(f" {s} {m}" for s, m in parts).strip()
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def enumerate_classes(r: Rack) -> List[QuadClass]:
    seen = set()
    out = []
    t = r.table
    for i in range(r.size):
        for j in range(r.size):
            if (i, j) in seen:
                continue
            # walk (a, b) -> (a |> b, a); the h-th pair is (i_{h+1}, i_h)
            pairs = [(i, j)]
            a, b = t[i][j], i
            while (a, b) != (i, j):
                pairs.append((a, b))
                a, b = t[a][b], a
            seen.update(pairs)
            out.append(QuadClass(tuple(p[1] for p in pairs)))
    return out


def _classify(q: Cocycle, cls: QuadClass) -> QuadClass:
    n = cls.size
    admissible = cls.cycle_product(q) == (-1) ** n
    etas = [1]
    running = 1
    for h in range(2, n + 1):
        running = running * q.q(cls.i(h), cls.i(h - 1))
        etas.append(((-1) ** (h + 1)) * running)
    return QuadClass(cls.sequence, admissible, tuple(etas))


def classify_all(q: Cocycle) -> List[QuadClass]:
    return [_classify(q, c) for c in enumerate_classes(q.rack)]


def admissible_classes(q: Cocycle) -> List[QuadClass]:
    return [c for c in classify_all(q) if c.admissible]


def relation_for(cls: QuadClass) -> QuadRelation:
    terms = tuple((cls.etas[h - 1], (cls.i(h + 1), cls.i(h))) for h in range(1, cls.size + 1))
    return QuadRelation(terms, cls)


def quadratic_basis(q: Cocycle) -> List[QuadRelation]:
    return [relation_for(c) for c in admissible_classes(q)]


@dataclass
class KernelResult:
    dimension: int
    basis: List[List]


def kernel_oracle(q: Cocycle) -> KernelResult:
    """Exact kernel of ``c + id`` on ``V (x) V``."""
    c = braiding(q).matrix()
    n = len(c)
    for k in range(n):
        c[k][k] = c[k][k] + 1
    basis = linalg.nullspace(c, n)
    return KernelResult(len(basis), basis)


def block_determinants(q: Cocycle) -> List[Tuple[QuadClass, object, object]]:
    """Per class: ``det(c + id)`` on ``U_C`` directly and by the closed formula."""
    out = []
    c = braiding(q)
    for cls in classify_all(q):
        pairs = cls.pairs()
        pos = {p: k for k, p in enumerate(pairs)}
        m = [[0] * len(pairs) for _ in pairs]
        for col, (a, b) in enumerate(pairs):
            s, img = c.apply(a, b)
            m[pos[img]][col] = m[pos[img]][col] + s
            m[col][col] = m[col][col] + 1
        direct = linalg.det(m)
        formula = cls.cycle_product(q) * (-1) ** (cls.size + 1) + 1
        out.append((cls, direct, formula))
    return out
