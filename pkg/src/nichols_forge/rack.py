"""Finite racks stored as dense operation tables over indices ``0..size-1``."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .perm import Perm, conjugacy_class, conjugate


class RackError(ValueError):
    pass


@dataclass(frozen=True)
class Rack:
    """``table[i][j] = i |> j``; ``labels`` are for display only."""

    size: int
    labels: Tuple[str, ...]
    table: Tuple[Tuple[int, ...], ...]
    elements: Optional[Tuple[Perm, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.size <= 0:
            raise RackError("a rack needs at least one element")
        if len(self.table) != self.size or any(len(r) != self.size for r in self.table):
            raise RackError("table must be size x size")
        for row in self.table:
            for v in row:
                if not 0 <= v < self.size:
                    raise RackError(f"table entry {v} out of range")
        if len(self.labels) != self.size:
            raise RackError("one label per element required")

    @classmethod
    def from_table(cls, table: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> "Rack":
        size = len(table)
        labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(size))
        return cls(size, labels, tuple(tuple(int(v) for v in row) for row in table))

    def op(self, i: int, j: int) -> int:
        return self.table[i][j]

    def phi(self, i: int) -> Tuple[int, ...]:
        """The permutation ``j -> i |> j`` of the index set."""
        return self.table[i]

    def phi_inverse(self, i: int) -> Tuple[int, ...]:
        row = self.table[i]
        inv = [0] * self.size
        for j, k in enumerate(row):
            inv[k] = j
        return tuple(inv)

    def index(self, label_or_perm) -> int:
        if isinstance(label_or_perm, Perm):
            if self.elements is None:
                raise RackError("rack has no permutation carrier")
            return self.elements.index(label_or_perm)
        if isinstance(label_or_perm, int):
            return label_or_perm
        text = str(label_or_perm)
        if text in self.labels:
            return self.labels.index(text)
        if self.elements is not None:
            n = self.elements[0].n
            return self.elements.index(Perm.parse(text, n))
        raise KeyError(text)

    # serialization ---------------------------------------------------------
    def to_json(self) -> dict:
        return {"size": self.size, "labels": list(self.labels), "table": [list(r) for r in self.table]}

    @classmethod
    def from_json(cls, data: dict) -> "Rack":
        try:
            rack = cls.from_table(data["table"], data.get("labels"))
        except (KeyError, TypeError) as exc:
            raise RackError(f"malformed rack JSON: {exc}") from exc
        if data.get("size", rack.size) != rack.size:
            raise RackError("size does not match table")
        return rack

    def dumps(self) -> str:
        return json.dumps(self.to_json())


@dataclass
class AxiomReport:
    valid: bool
    non_bijective: List[int]
    failing_triples: List[Tuple[int, int, int]]

    def to_json(self) -> dict:
        return {"valid": self.valid, "non_bijective": self.non_bijective,
                "failing_triples": [list(t) for t in self.failing_triples]}


def check_rack_axioms(r: Rack, limit: int | None = None) -> AxiomReport:
    """Check bijectivity of every ``phi_i`` and self-distributivity."""
    n = r.size
    non_bij = [i for i in range(n) if len(set(r.table[i])) != n]
    bad = []
    t = r.table
    for i in range(n):
        ti = t[i]
        for j in range(n):
            tij = ti[j]
            tj = t[j]
            for k in range(n):
                if ti[tj[k]] != t[tij][ti[k]]:
                    bad.append((i, j, k))
                    if limit is not None and len(bad) >= limit:
                        return AxiomReport(False, non_bij, bad)
    return AxiomReport(not non_bij and not bad, non_bij, bad)


def conjugacy_class_rack(n: int, representative: Perm) -> Rack:
    cls = conjugacy_class(n, representative)
    elems = cls.elements
    pos = {p: k for k, p in enumerate(elems)}
    table = tuple(tuple(pos[conjugate(x, y)] for y in elems) for x in elems)
    labels = tuple(p.compact() for p in elems)
    return Rack(len(elems), labels, table, elems)


def trivial_rack(size: int) -> Rack:
    return Rack.from_table([list(range(size)) for _ in range(size)])


def inverse_rack(r: Rack) -> Rack:
    table = tuple(r.phi_inverse(i) for i in range(r.size))
    return Rack(r.size, r.labels, table, r.elements)


def is_faithful(r: Rack) -> bool:
    return len(set(r.table)) == r.size


def orbit(r: Rack, start: int = 0) -> set:
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for i in range(r.size):
                for y in (r.table[i][x], r.phi_inverse(i)[x]):
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
        frontier = nxt
    return seen


def is_indecomposable(r: Rack) -> bool:
    return len(orbit(r, 0)) == r.size


def phi_power_is_identity(r: Rack, i: int, k: int) -> bool:
    row = r.table[i]
    for j in range(r.size):
        x = j
        for _ in range(k):
            x = row[x]
        if x != j:
            return False
    return True
