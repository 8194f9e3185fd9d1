"""Skew-derivations on the tensor algebra of a rack braided vector space.

``delta(j, e)`` pairs the last tensor factor of the braided coproduct with
the dual of ``x_j``.  Wordwise

    delta_j(x_{i1} ... x_{im}) = sum over k with i_k = j of
        (prod_{l>k} q_{j, i_l}) x_{i1} ... x_{i_{k-1}} x_{j|>i_{k+1}} ... x_{j|>i_m}.

The formula is checked against :func:`coproduct_component`, which expands
the braided coproduct from scratch.  Derivations map the quadratic ideal into
itself, so a nonzero value of a chain on a tensor lift certifies that the
class of the element in the Nichols algebra is nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from . import kernels
from .cocycle import Cocycle

Word = Tuple[int, ...]
TensorElement = Dict[Word, object]

DEFAULT_BUDGET = 10 ** 7

# letters used for the transpositions of S_4 and S_5
TRANSPOSITION_LETTERS = {
    "a": "(12)", "b": "(13)", "c": "(14)", "d": "(23)", "e": "(24)", "f": "(34)",
    "g": "(15)", "h": "(25)", "k": "(35)", "m": "(45)",
}

# top-degree witnesses on the chi cocycle; chains are written leftmost-last
WITNESS_WORDS = {
    4: ("abacabacdedf", "cbcabdcbfdfe"),
    5: ("abadabadgabadabadgabagdabadgcechcechfkfm",
        "kmfmehfechehgkcbmdc" "emgekgchegkdegkbadcab"),
}


class ChainLengthError(ValueError):
    pass


class TermBudgetExceeded(RuntimeError):
    pass


def _rows(q: Cocycle, j: int):
    r = q.rack
    return [q.q(j, i) for i in range(r.size)], list(r.table[j])


def delta(q: Cocycle, j: int, e: Mapping[Sequence[int], object]) -> TensorElement:
    """``delta_j`` applied to a tensor element."""
    elem = {tuple(w): c for w, c in e.items() if c}
    if any(len(w) == 0 for w in elem):
        raise ValueError("delta is not defined on degree 0")
    q_row, phi_row = _rows(q, j)
    return kernels.delta(j, elem, q_row, phi_row)


def word_element(letters: Iterable[int], coef=1) -> TensorElement:
    return {tuple(letters): coef}


def parse_letters(text: str, q: Cocycle, alphabet: Mapping[str, str] | None = None) -> List[int]:
    """Translate ``"abac"`` or ``"a b a c"`` into rack indices."""
    alphabet = TRANSPOSITION_LETTERS if alphabet is None else alphabet
    out = []
    for ch in text.replace(" ", "").replace(",", ""):
        if ch not in alphabet:
            raise KeyError(f"unknown letter {ch!r}")
        out.append(q.rack.index(alphabet[ch]))
    return out


def derivation_chain(q: Cocycle, letters: Sequence[int], e: Mapping[Sequence[int], object],
                     budget: int | None = None):
    """Apply ``delta_{l1} ... delta_{lr}`` (rightmost first) and return the scalar."""
    elem = {tuple(w): c for w, c in e.items() if c}
    degrees = {len(w) for w in elem}
    if len(degrees) > 1:
        raise ValueError("element is not homogeneous")
    if elem and degrees != {len(letters)}:
        raise ChainLengthError(f"chain of length {len(letters)} on an element of degree {degrees.pop()}")
    cache = {}
    for j in reversed(letters):
        if not elem:
            return 0
        if j not in cache:
            cache[j] = _rows(q, j)
        elem = kernels.delta(j, elem, *cache[j])
        if budget is not None and len(elem) > budget:
            raise TermBudgetExceeded(f"{len(elem)} terms exceed the budget {budget}")
    return elem.get((), 0)


@dataclass
class CertificateResult:
    chain: Optional[Tuple[int, ...]]
    scalar: object
    explored: int
    exhausted: bool

    @property
    def found(self) -> bool:
        return self.chain is not None


def find_nonzero_certificate(q: Cocycle, e: Mapping[Sequence[int], object],
                             budget: int = DEFAULT_BUDGET) -> CertificateResult:
    """Depth-first search for a chain of derivations with nonzero value.

    ``budget`` caps the number of terms produced over the whole search.  A
    failed search is inconclusive: it never claims the element is zero.
    """
    elem = {tuple(w): c for w, c in e.items() if c}
    if not elem:
        return CertificateResult(None, 0, 0, True)
    if len({len(w) for w in elem}) > 1:
        raise ValueError("element is not homogeneous")
    rows = [_rows(q, j) for j in range(q.rack.size)]
    spent = 0
    applied: List[int] = []

    def dfs(cur):
        nonlocal spent
        if () in cur:
            return cur[()]
        letters = sorted({x for w in cur for x in w})
        for j in letters:
            nxt = kernels.delta(j, cur, *rows[j])
            spent += len(nxt)
            if spent > budget:
                raise TermBudgetExceeded
            if nxt:
                applied.append(j)
                val = dfs(nxt)
                if val:
                    return val
                applied.pop()
        return 0

    try:
        val = dfs(elem)
    except TermBudgetExceeded:
        return CertificateResult(None, 0, spent, True)
    if val:
        # ``applied`` is in order of application; chains are written rightmost-first
        return CertificateResult(tuple(reversed(applied)), val, spent, False)
    return CertificateResult(None, 0, spent, True)


# first-principles braided coproduct

def braid_words(q: Cocycle, u: Word, v: Word) -> Tuple[object, Word, Word]:
    """``c(u (x) v) = coef * v' (x) u`` for the rack braiding extended to words."""
    t = q.rack.table
    coef = 1
    cur = v
    for x in reversed(u):
        for y in cur:
            coef = coef * q.q(x, y)
        cur = tuple(t[x][y] for y in cur)
    return coef, cur, u


def _tensor_mul(q: Cocycle, left: Dict[Tuple[Word, Word], object],
                right: Dict[Tuple[Word, Word], object]) -> Dict[Tuple[Word, Word], object]:
    # (a (x) b)(c (x) d) = a c' (x) b' d  where  c(b (x) c) = c' (x) b'
    out: Dict[Tuple[Word, Word], object] = {}
    for (a, b), c1 in left.items():
        for (c, d), c2 in right.items():
            s, c_new, b_new = braid_words(q, b, c)
            key = (a + c_new, b_new + d)
            out[key] = out.get(key, 0) + c1 * c2 * s
    return {k: v for k, v in out.items() if v}


def coproduct(q: Cocycle, word: Sequence[int]) -> Dict[Tuple[Word, Word], object]:
    """Braided coproduct of a word in ``T(V) (x) T(V)``."""
    out: Dict[Tuple[Word, Word], object] = {((), ()): 1}
    for x in word:
        out = _tensor_mul(q, out, {((x,), ()): 1, ((), (x,)): 1})
    return out


def coproduct_component(q: Cocycle, j: int, e: Mapping[Sequence[int], object]) -> TensorElement:
    """``(id (x) x_j^*) Delta(e)`` from the expanded coproduct."""
    out: TensorElement = {}
    for w, c in e.items():
        for (a, b), c2 in coproduct(q, tuple(w)).items():
            if b == (j,):
                out[a] = out.get(a, 0) + c * c2
    return {k: v for k, v in out.items() if v}
