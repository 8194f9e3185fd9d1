"""Permutations of ``{1..n}`` and conjugacy classes of the symmetric group.

Products follow function composition: ``(a * b)(k) = a(b(k))``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple


class DegreeMismatch(ValueError):
    pass


class Perm:
    """A permutation in one-line notation (1-based images)."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Perm":
        img = list(range(1, n + 1))
        seen = set()
        for cyc in cycles:
            cyc = list(cyc)
            if any(c < 1 or c > n for c in cyc):
                raise ValueError(f"cycle {cyc} out of range for degree {n}")
            if seen.intersection(cyc) or len(set(cyc)) != len(cyc):
                raise ValueError(f"cycles are not disjoint: {cyc}")
            seen.update(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b
        return cls(img)

    @classmethod
    def parse(cls, text: str, n: int) -> "Perm":
        """Parse cycle notation such as ``"(1 2)(3 4)"``, ``"(1234)"`` or ``"e"``."""
        s = text.strip()
        if s in ("e", "()", "id", ""):
            return cls.identity(n)
        groups = re.findall(r"\(([^()]*)\)", s)
        if not groups or re.sub(r"\([^()]*\)", "", s).strip():
            raise ValueError(f"malformed cycle notation: {text!r}")
        cycles = []
        for g in groups:
            g = g.strip()
            if re.search(r"[\s,]", g):
                cyc = [int(t) for t in re.split(r"[\s,]+", g) if t]
            else:
                cyc = [int(ch) for ch in g]
            cycles.append(cyc)
        return cls.from_cycles(n, cycles)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def inverse(self) -> "Perm":
        inv = [0] * self.n
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Perm(inv)

    def __pow__(self, k: int) -> "Perm":
        if k < 0:
            return self.inverse() ** (-k)
        out = Perm.identity(self.n)
        for _ in range(k):
            out = out * self
        return out

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, start=1))

    def cycles(self, include_fixed: bool = False) -> List[Tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            k = self(start)
            while k != start:
                cyc.append(k)
                seen.add(k)
                k = self(k)
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> Tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles(include_fixed=True)), reverse=True))

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def order(self) -> int:
        from math import lcm
        return lcm(*[len(c) for c in self.cycles(include_fixed=True)])

    def adjacent_word(self) -> Tuple[int, ...]:
        """Factor into adjacent transpositions ``s_k = (k, k+1)``.

        Returns ``(k1, ..., kr)`` with ``self = s_k1 * ... * s_kr`` (bubble sort).
        """
        return _adjacent_word(self.images)

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __lt__(self, other: "Perm"):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "e"
        return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cyc)

    def compact(self) -> str:
        """Cycle notation without separators, e.g. ``(1234)`` (degree < 10)."""
        cyc = self.cycles()
        if not cyc:
            return "e"
        sep = "" if self.n < 10 else " "
        return "".join("(" + sep.join(str(x) for x in c) + ")" for c in cyc)

    def __repr__(self):
        return f"Perm({str(self)!r}, n={self.n})"


@lru_cache(maxsize=None)
def _adjacent_word(images: Tuple[int, ...]) -> Tuple[int, ...]:
    # bubble sort images to the identity; each swap at positions (k, k+1)
    # right-multiplies by s_k, so self = s_kr ... s_k1 reversed order
    arr = list(images)
    swaps = []
    n = len(arr)
    changed = True
    while changed:
        changed = False
        for k in range(n - 1):
            if arr[k] > arr[k + 1]:
                arr[k], arr[k + 1] = arr[k + 1], arr[k]
                swaps.append(k + 1)
                changed = True
    # images * s_k1 * ... * s_kr = id  =>  self = s_kr * ... * s_k1
    return tuple(reversed(swaps))


def compose(a: Perm, b: Perm) -> Perm:
    if a.n != b.n:
        raise DegreeMismatch(f"degrees {a.n} and {b.n} differ")
    return Perm(a.images[b.images[k] - 1] for k in range(b.n))


def conjugate(g: Perm, x: Perm) -> Perm:
    """``g x g^-1``."""
    if g.n != x.n:
        raise DegreeMismatch(f"degrees {g.n} and {x.n} differ")
    img = [0] * g.n
    for k in range(1, g.n + 1):
        img[g(k) - 1] = g(x(k))
    return Perm(img)


def transposition(n: int, i: int, j: int) -> Perm:
    return Perm.from_cycles(n, [(i, j)])


def adjacent(n: int, k: int) -> Perm:
    return transposition(n, k, k + 1)


@lru_cache(maxsize=None)
def all_perms(n: int) -> Tuple[Perm, ...]:
    """All of S_n in lexicographic order of one-line notation."""
    return tuple(Perm(p) for p in itertools.permutations(range(1, n + 1)))


@dataclass(frozen=True)
class ConjClass:
    n: int
    cycle_type: Tuple[int, ...]
    elements: Tuple[Perm, ...]

    def __len__(self):
        return len(self.elements)

    def index(self, p: Perm) -> int:
        return self.elements.index(p)


def conjugacy_class(n: int, representative: Perm) -> ConjClass:
    if representative.n != n:
        raise DegreeMismatch(f"representative has degree {representative.n}, expected {n}")
    orbit = {representative}
    frontier = [representative]
    gens = [adjacent(n, k) for k in range(1, n)]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = conjugate(g, x)
                if y not in orbit:
                    orbit.add(y)
                    nxt.append(y)
        frontier = nxt
    return ConjClass(n, representative.cycle_type(), tuple(sorted(orbit)))
