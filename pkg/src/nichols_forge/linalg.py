"""Small exact linear algebra over Q and Q(i).

Entries may be ``int``, ``Fraction`` or :class:`GaussRational`.  Dense
routines are for matrices up to a few hundred rows; sparse routines take
rows as ``{column: coefficient}`` dicts.
"""

from __future__ import annotations

from typing import Dict, Hashable, Iterable, List, Sequence

from .scalars import GaussRational, ParamScalar, exact_div

Matrix = List[List]


def _div(a, b):
    if isinstance(a, GaussRational) or isinstance(b, GaussRational):
        return GaussRational.coerce(a) / GaussRational.coerce(b)
    return exact_div(a, b)


def rref(matrix: Sequence[Sequence]) -> tuple[Matrix, List[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(row) for row in matrix]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        if p != 1:
            m[r] = [_div(x, p) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(matrix: Sequence[Sequence]) -> int:
    return len(rref(matrix)[1])


def nullspace(matrix: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    """Basis of ``{v : matrix @ v = 0}`` as a list of column vectors."""
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    if not matrix:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(red, pivots):
            if row[f]:
                v[pc] = -row[f]
        basis.append(v)
    return basis


def span_equal(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    """Whether two lists of row vectors span the same space."""
    ra, rb = rank(a) if a else 0, rank(b) if b else 0
    if ra != rb:
        return False
    both = list(a) + list(b)
    return (rank(both) if both else 0) == ra


def in_span(vec: Sequence, rows: Sequence[Sequence]) -> bool:
    if not rows:
        return not any(vec)
    return rank(list(rows) + [list(vec)]) == rank(rows)


def det(matrix: Sequence[Sequence]):
    m = [list(row) for row in matrix]
    n = len(m)
    result = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            result = -result
        p = m[c][c]
        result = result * p
        for i in range(c + 1, n):
            if m[i][c]:
                f = _div(m[i][c], p)
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result


# -- matrices over rings (ParamScalar entries allowed) -----------------------

def identity(n: int, one=1, zero=0) -> Matrix:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def zeros(n: int, m: int | None = None, zero=0) -> Matrix:
    return [[zero] * (n if m is None else m) for _ in range(n)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    bt = list(zip(*b))
    out = []
    for i in range(n):
        row = a[i]
        nz = [(t, row[t]) for t in range(k) if row[t]]
        out_row = []
        for j in range(m):
            col = bt[j]
            s = 0
            for t, x in nz:
                y = col[t]
                if y:
                    s = s + x * y
            out_row.append(s)
        out.append(out_row)
    return out


def matadd(a, b) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matsub(a, b) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(c, a) -> Matrix:
    return [[c * x for x in row] for row in a]


def transpose(a) -> Matrix:
    return [list(col) for col in zip(*a)]


def inverse(matrix: Sequence[Sequence]) -> Matrix:
    n = len(matrix)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(matrix)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def is_zero_matrix(a) -> bool:
    return not any(x for row in a for x in row)


def mat_equal(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb)) and len(a) == len(b)


def block_diag(*blocks) -> Matrix:
    n = sum(len(b) for b in blocks)
    out = zeros(n)
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return out


def to_param(a) -> Matrix:
    return [[ParamScalar.coerce(x) for x in row] for row in a]


# -- sparse elimination ------------------------------------------------------

def sparse_echelon(rows: Iterable[Dict[Hashable, object]], key=None) -> Dict[Hashable, Dict]:
    """Echelonize sparse rows; the pivot of a row is its ``max`` column.

    Returns ``{pivot_column: monic_row}``.  Rows are reduced against the
    existing pivots so that no row contains another row's pivot column
    as its own pivot (not fully back-substituted).
    """
    pivots: Dict[Hashable, Dict] = {}
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            lead = max(r, key=key) if key else max(r)
            p = pivots.get(lead)
            if p is None:
                inv = r[lead]
                if inv != 1:
                    r = {c: _div(v, inv) for c, v in r.items()}
                pivots[lead] = r
                break
            f = r[lead]
            for c, v in p.items():
                nv = r.get(c, 0) - f * v
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
    return pivots


def sparse_rank(rows: Iterable[Dict[Hashable, object]]) -> int:
    return len(sparse_echelon(rows))
