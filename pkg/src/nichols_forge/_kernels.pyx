# cython: language_level=3
"""Compiled hot loops for the truncated Groebner completion.

Typed copy of ``_kernels_py.py``; keep the two in sync.

Conventions shared with :mod:`nichols_forge.ncalg`:

* words are tuples of letter indices; words of equal length compare
  lexicographically, which is the degree-lex order within a degree;
* ``rules`` maps a leading word to its right-hand side ``{word: coef}``
  (the Groebner element is ``lead - rhs``);
* ``tables`` maps ``m + (x,)`` for every normal word ``m`` and letter ``x``
  to the normal form of that word, for all completed degrees.
"""

from fractions import Fraction

IMPLEMENTATION = "cython"


cdef object _div(object a, object b):
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        if r == 0:
            return q
        return Fraction(a, b)
    return a / b


cdef object _norm(object c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


cpdef dict nf_word(tuple w, dict tables, dict cache):
    """Normal form of a word whose degree is already completed."""
    cdef dict out, prev
    cdef tuple x
    hit = cache.get(w)
    if hit is not None:
        return hit
    if len(w) <= 1:
        out = {w: 1}
        cache[w] = out
        return out
    prev = nf_word(w[:-1], tables, cache)
    x = (w[-1],)
    out = {}
    for m, c in prev.items():
        for n, c2 in tables[m + x].items():
            v = out.get(n, 0) + c * c2
            if v:
                out[n] = v
            else:
                out.pop(n, None)
    cache[w] = out
    return out


cdef dict _red(tuple u, dict red, dict tables, dict cache):
    # reduction of a top-degree word modulo the lower-degree rules
    cdef dict out, prev = nf_word(u[:-1], tables, cache)
    cdef tuple x = (u[-1],)
    out = {}
    for m, c in prev.items():
        for n, c2 in red[m + x].items():
            v = out.get(n, 0) + c * c2
            if v:
                out[n] = v
            else:
                out.pop(n, None)
    return out


cdef void _axpy(dict out, object c, dict vec):
    for n, c2 in vec.items():
        v = out.get(n, 0) + c * c2
        if v:
            out[n] = v
        else:
            out.pop(n, None)


cpdef dict reduction_table(list cands, dict rules, list lead_lens, dict tables, dict cache):
    """Reduce every candidate word modulo the current (lower-degree) rules.

    ``cands`` must be sorted ascending; each reduction only refers to
    strictly smaller candidates.
    """
    cdef dict red = {}, out
    cdef tuple w, a
    cdef Py_ssize_t L
    for w in cands:
        found = None
        for L in lead_lens:
            if L >= len(w):
                break
            rhs = rules.get(w[-L:])
            if rhs is not None:
                found = (L, rhs)
                break
        if found is None:
            red[w] = {w: 1}
            continue
        L, rhs = found
        a = w[:-L]
        out = {}
        for t, c in rhs.items():
            _axpy(out, c, _red(a + t, red, tables, cache))
        red[w] = out
    return red


cpdef dict overlap_spoly(tuple lead1, Py_ssize_t k, tuple lead2, dict rules, dict red, dict tables, dict cache):
    """Reduced S-polynomial of the overlap ``lead1[-k:] == lead2[:k]``."""
    out = dict(_red(lead1 + lead2[k:], red, tables, cache))
    u = lead1[:-k]
    for t, c in rules[lead2].items():
        _axpy(out, -c, _red(u + t, red, tables, cache))
    return out


cpdef dict echelon(list rows):
    """Sparse echelon with pivot = largest word; returns ``{pivot: monic row}``."""
    cdef dict pivots = {}, r, p
    for row in rows:
        r = dict(row)
        while r:
            lead = max(r)
            p = pivots.get(lead)
            if p is None:
                inv = r[lead]
                if inv != 1:
                    r = {w: _norm(_div(v, inv)) for w, v in r.items()}
                pivots[lead] = r
                break
            f = r[lead]
            for w, v in p.items():
                nv = r.get(w, 0) - f * v
                if nv:
                    r[w] = nv
                else:
                    r.pop(w, None)
    # back substitution, smallest pivots first
    for lead in sorted(pivots):
        r = pivots[lead]
        for w in [w for w in r if w != lead and w in pivots]:
            f = r.get(w)
            if not f:
                continue
            for w2, v in pivots[w].items():
                nv = r.get(w2, 0) - f * v
                if nv:
                    r[w2] = nv
                else:
                    r.pop(w2, None)
    return pivots


cpdef dict degree_table(list cands, dict red, dict new_rules):
    """Normal forms of all candidates once the new rules are known."""
    table = {}
    for w in cands:
        rhs = new_rules.get(w)
        if rhs is not None:
            table[w] = dict(rhs)
            continue
        vec = red[w]
        hit = False
        for n in vec:
            if n in new_rules:
                hit = True
                break
        if not hit:
            table[w] = vec
            continue
        out = {}
        for n, c in vec.items():
            sub = new_rules.get(n)
            if sub is None:
                v = out.get(n, 0) + c
                if v:
                    out[n] = v
                else:
                    out.pop(n, None)
            else:
                _axpy(out, c, sub)
        table[w] = out
    return table


cpdef dict delta_word(Py_ssize_t j, tuple word, object coef, list q_row, list phi_row, dict out):
    """Accumulate ``coef * delta_j(word)`` into ``out``.

    ``q_row[i] = q_{j,i}`` and ``phi_row[i] = j |> i``.
    """
    cdef Py_ssize_t n = len(word), k
    # suffix products of q_{j, i_l} for l > k
    scale = coef
    tail = []
    for k in range(n - 1, -1, -1):
        if word[k] == j:
            w = word[:k] + tuple(tail[::-1])
            v = out.get(w, 0) + scale
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        scale = scale * q_row[word[k]]
        tail.append(phi_row[word[k]])
    return out


cpdef dict delta(Py_ssize_t j, dict element, list q_row, list phi_row):
    out = {}
    for w, c in element.items():
        delta_word(j, w, c, q_row, phi_row, out)
    return out
