"""Degree-truncated Groebner bases in the free algebra and Hilbert functions.

The ideal is generated by homogeneous quadratic elements.  Completion runs
degree by degree: at degree ``d`` every overlap of two leading words with
total length ``d`` yields an S-polynomial, all of them are reduced modulo
the basis of lower degree, and one sparse elimination (pivot = largest word
in deg-lex order) turns them into the new, fully reduced basis elements.
Alongside the basis we keep, for every completed degree, the normal form of
``m x`` for each normal word ``m`` and letter ``x``; these tables make
``normal_form`` a sequence of lookups.
"""

from __future__ import annotations

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple

from . import kernels, linalg
from .cocycle import Cocycle
from .quadratic import quadratic_basis

log = logging.getLogger(__name__)

Word = Tuple[int, ...]


class DegreeBoundError(ValueError):
    pass


class NCPoly:
    """Sparse noncommutative polynomial ``{word: coefficient}``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Word, object] | None = None):
        self.terms = {tuple(w): c for w, c in (terms or {}).items() if c}

    @classmethod
    def word(cls, letters: Sequence[int], coef=1) -> "NCPoly":
        return cls({tuple(letters): coef})

    def __add__(self, other: "NCPoly") -> "NCPoly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return NCPoly(out)

    def __neg__(self):
        return NCPoly({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            out: Dict[Word, object] = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    out[w] = out.get(w, 0) + c1 * c2
            return NCPoly(out)
        return NCPoly({w: c * other for w, c in self.terms.items()})

    def __rmul__(self, scalar):
        return NCPoly({w: scalar * c for w, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, NCPoly) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({len(w) for w in self.terms}) <= 1

    def leading_word(self) -> Word:
        return max(self.terms, key=lambda w: (len(w), w))

    def __repr__(self):
        items = sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]), reverse=True)
        return "NCPoly(" + " + ".join(f"{c}*{list(w)}" for w, c in items) + ")"


def relations_as_polys(q: Cocycle) -> List[NCPoly]:
    return [NCPoly({w: c for c, w in rel.terms}) for rel in quadratic_basis(q)]


@dataclass
class TruncatedGB:
    nletters: int
    degree_bound: int
    rules: Dict[Word, Dict[Word, object]] = field(default_factory=dict)
    normal_words: List[List[Word]] = field(default_factory=list)
    tables: Dict[Word, Dict[Word, object]] = field(default_factory=dict, repr=False)
    _cache: Dict[Word, Dict[Word, object]] = field(default_factory=dict, repr=False)
    impl: object = field(default=None, repr=False, compare=False)

    @property
    def _k(self):
        return self.impl if self.impl is not None else kernels

    @property
    def elements(self) -> List[NCPoly]:
        out = []
        for lead in sorted(self.rules, key=lambda w: (len(w), w)):
            terms = {lead: 1}
            for w, c in self.rules[lead].items():
                terms[w] = -c
            out.append(NCPoly(terms))
        return out

    @property
    def leading_words(self) -> List[Word]:
        return sorted(self.rules, key=lambda w: (len(w), w))

    def __len__(self):
        return len(self.rules)

    def normal_form(self, p: NCPoly | Sequence[int]) -> NCPoly:
        if not isinstance(p, NCPoly):
            p = NCPoly.word(p)
        out: Dict[Word, object] = {}
        for w, c in p.terms.items():
            if len(w) > self.degree_bound:
                raise DegreeBoundError(f"degree {len(w)} exceeds bound {self.degree_bound}")
            for n, c2 in self._k.nf_word(w, self.tables, self._cache).items():
                out[n] = out.get(n, 0) + c * c2
        return NCPoly(out)

    def is_normal(self, w: Sequence[int]) -> bool:
        w = tuple(w)
        return not any(w[i:j] in self.rules for i in range(len(w)) for j in range(i + 2, len(w) + 1))

    def to_json(self) -> dict:
        from .scalars import scalar_to_str
        return {
            "nletters": self.nletters,
            "degree_bound": self.degree_bound,
            "rules": [[list(lead), [[list(w), scalar_to_str(c)] for w, c in sorted(rhs.items())]]
                      for lead, rhs in sorted(self.rules.items(), key=lambda t: (len(t[0]), t[0]))],
        }


@dataclass(frozen=True)
class HilbertFunction:
    dims: Tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.dims)

    @property
    def top_degree(self) -> int:
        nz = [n for n, d in enumerate(self.dims) if d]
        return nz[-1] if nz else -1

    @property
    def terminated(self) -> bool:
        return bool(self.dims) and self.dims[-1] == 0

    def to_json(self) -> dict:
        return {"dims": list(self.dims), "total": self.total, "top_degree": self.top_degree}


def _prefix_index(rules) -> Dict[Word, List[Word]]:
    idx: Dict[Word, List[Word]] = {}
    for lead in rules:
        for k in range(1, len(lead)):
            idx.setdefault(lead[:k], []).append(lead)
    return idx


def _overlaps(rules, d: int) -> List[Tuple[Word, int, Word]]:
    """All ``(lead1, k, lead2)`` with ``lead1[-k:] == lead2[:k]`` and total length ``d``."""
    idx = _prefix_index(rules)
    out = []
    for lead1 in sorted(rules):
        n1 = len(lead1)
        for k in range(1, n1):
            need = d - n1 + k
            if need <= k:
                continue
            for lead2 in idx.get(lead1[-k:], ()):
                if len(lead2) == need:
                    out.append((lead1, k, lead2))
    out.sort(key=lambda t: (t[0] + t[2][t[1]:], t[0], t[1]))
    return out


def complete(generators: Iterable[NCPoly], D: int, nletters: int | None = None,
             threads: int = 1, impl=None) -> TruncatedGB:
    """Truncated two-sided Groebner basis of the ideal spanned by ``generators``.

    ``impl`` overrides the kernel module (see ``kernels.available()``).
    """
    gens = [g for g in generators if g]
    if nletters is None:
        nletters = 1 + max((x for g in gens for w in g.terms for x in w), default=-1)
    for g in gens:
        if any(len(w) != 2 for w in g.terms):
            raise ValueError("generators must be homogeneous of degree 2")
    gb = TruncatedGB(nletters, D, impl=impl)
    letters = [(x,) for x in range(nletters)]
    gb.normal_words = [[()]]
    if D >= 1:
        gb.normal_words.append(list(letters))
    for w in letters:
        gb.tables[w] = {w: 1}
    pool = ThreadPoolExecutor(threads) if threads > 1 else None
    try:
        for d in range(2, D + 1):
            _complete_degree(gb, d, gens if d == 2 else (), pool)
            log.debug("degree %d: %d normal words, %d rules", d, len(gb.normal_words[d]), len(gb.rules))
    finally:
        if pool is not None:
            pool.shutdown()
    return gb


def _complete_degree(gb: TruncatedGB, d: int, gens, pool) -> None:
    rules = gb.rules
    k = gb._k
    cands = sorted(m + (x,) for m in gb.normal_words[d - 1] for x in range(gb.nletters))
    lead_lens = sorted({len(w) for w in rules})
    red = k.reduction_table(cands, rules, lead_lens, gb.tables, gb._cache)
    rows = [dict(g.terms) for g in gens]
    ovl = _overlaps(rules, d)
    if ovl:
        def spoly(t):
            return k.overlap_spoly(t[0], t[1], t[2], rules, red, gb.tables, gb._cache)
        mapped = pool.map(spoly, ovl, chunksize=64) if pool is not None else map(spoly, ovl)
        rows.extend(r for r in mapped if r)
    pivots = k.echelon(rows)
    new_rules = {lead: {w: -c for w, c in row.items() if w != lead} for lead, row in pivots.items()}
    table = k.degree_table(cands, red, new_rules)
    normal = [w for w in cands if w not in new_rules and red[w].get(w) == 1 and len(red[w]) == 1]
    rules.update(new_rules)
    gb.tables.update(table)
    gb.normal_words.append(normal)


def hilbert(gb: TruncatedGB) -> HilbertFunction:
    return HilbertFunction(tuple(len(ws) for ws in gb.normal_words))


def hilbert_of(q: Cocycle, D: int, threads: int = 1, impl=None) -> Tuple[HilbertFunction, TruncatedGB]:
    gb = complete(relations_as_polys(q), D, q.rack.size, threads, impl)
    return hilbert(gb), gb


def dimension_bound(q: Cocycle, group_order: int, D: int = 13,
                    hilbert_function: HilbertFunction | None = None) -> int:
    """``dim B2(X, q) * |G|``; refuses to answer if the Hilbert function has not vanished."""
    h = hilbert_function if hilbert_function is not None else hilbert_of(q, D)[0]
    if not h.terminated:
        raise DegreeBoundError(
            f"Hilbert function does not vanish by degree {len(h.dims) - 1}; "
            "raise the degree bound")
    return h.total * group_order


def graded_dims_oracle(generators: Sequence[NCPoly], nletters: int, max_degree: int) -> List[int]:
    """Graded dimensions by brute-force rank of ``sum_{a+b=n-2} V^a R V^b``.

    Independent of the Groebner machinery; exponential in the degree.
    """
    dims = []
    gens = [dict(g.terms) for g in generators]
    for n in range(max_degree + 1):
        if n < 2:
            dims.append(nletters ** n)
            continue
        rows = []
        for a in range(n - 1):
            b = n - 2 - a
            for u in itertools.product(range(nletters), repeat=a):
                for v in itertools.product(range(nletters), repeat=b):
                    for g in gens:
                        rows.append({u + w + v: c for w, c in g.items()})
        dims.append(nletters ** n - linalg.sparse_rank(rows))
    return dims


def bracket_poly(k: int) -> List[int]:
    """Coefficients of ``1 + t + ... + t^(k-1)``."""
    return [1] * k


def poly_mul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def bracket_product(exponents: Dict[int, int]) -> List[int]:
    """``prod_k [k]^e`` as a coefficient list, e.g. ``{2: 2, 3: 2, 4: 2}``."""
    out = [1]
    for k, e in sorted(exponents.items()):
        for _ in range(e):
            out = poly_mul(out, bracket_poly(k))
    return out
