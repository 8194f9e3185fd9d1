"""Acceptance criteria, one recorded line each.

The lines are printed at the end of the pytest run (and by running this file
directly).  Long computations are skipped unless ``NICHOLS_FORGE_LONG=1``.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

import pytest

from nichols_forge import linalg
from nichols_forge.cocycle import braid_equation_failures, braiding, check_cocycle, pairing_identity_failures
from nichols_forge.derivations import (WITNESS_WORDS, coproduct_component, delta, derivation_chain,
                                       parse_letters, word_element)
from nichols_forge.fixtures import BUILTIN_NAMES, builtin
from nichols_forge.lifting import canonical_parameter
from nichols_forge.ncalg import bracket_product, dimension_bound, graded_dims_oracle, hilbert_of, relations_as_polys
from nichols_forge.perm import adjacent
from nichols_forge.quadratic import kernel_oracle, quadratic_basis
from nichols_forge.rack import check_rack_axioms
from nichols_forge.representations import (build_U, build_V, build_W, check_lifting_conditions, coxeter_failures,
                                           path_independence_failures, specht, verify_presentation)

LINES: list = []


def record(tag: str, ok, detail: str) -> None:
    status = {True: "PASS", False: "FAIL"}.get(ok, ok)
    LINES.append(f"criterion {tag}: {status} - {detail}")


def check(tag: str, ok: bool, detail: str) -> None:
    record(tag, bool(ok), detail)
    assert ok, detail


def test_criterion_1_quadratic_basis_spans_the_kernel():
    t0 = time.perf_counter()
    dims = {}
    equal = True
    for name in BUILTIN_NAMES:
        q = builtin(name)
        vecs = [r.vector(q.rack.size) for r in quadratic_basis(q)]
        ker = kernel_oracle(q)
        dims[name] = ker.dimension
        equal &= linalg.rank(vecs) == len(vecs) == ker.dimension and linalg.span_equal(vecs, ker.basis)
    elapsed = time.perf_counter() - t0
    s4 = all(dims[n] == 17 for n in ("O2_4_minus", "O2_4_chi", "O4_4_minus"))
    check("1", equal and s4 and elapsed < 5,
          f"span equal on 6 fixtures: {equal}; S4 dims {[dims[n] for n in ('O2_4_minus', 'O2_4_chi', 'O4_4_minus')]}; "
          f"{elapsed:.2f}s")


def test_criterion_2_three_letter_case():
    t0 = time.perf_counter()
    q = builtin("O2_3_minus")
    h, _ = hilbert_of(q, 5)
    oracle = graded_dims_oracle(relations_as_polys(q), 3, 5)
    elapsed = time.perf_counter() - t0
    check("2", h.dims[:5] == (1, 3, 4, 3, 1) and h.total == 12 and list(h.dims) == oracle and elapsed < 1,
          f"dims {list(h.dims)}, total {h.total}, oracle {oracle}, {elapsed:.2f}s")


def test_criterion_3_transpositions_minus_one():
    t0 = time.perf_counter()
    h, _ = hilbert_of(builtin("O2_4_minus"), 13)
    elapsed = time.perf_counter() - t0
    check("3", h.total == 576 and h.dims[13] == 0 and h.top_degree == 12 and elapsed < 600,
          f"total {h.total}, dims[13] = {h.dims[13]}, top degree {h.top_degree}, {elapsed:.2f}s")


def test_criterion_4_transpositions_chi():
    h, _ = hilbert_of(builtin("O2_4_chi"), 13)
    poly = bracket_product({2: 2, 3: 2, 4: 2})
    check("4", list(h.dims[:13]) == poly and h.dims[13] == 0 and h.dims[2] == 19 and h.top_degree == 12,
          f"dims {list(h.dims)} vs [2]^2[3]^2[4]^2 {poly}")


def test_criterion_5_four_cycles():
    h, _ = hilbert_of(builtin("O4_4_minus"), 13)
    check("5", h.total == 576 and h.terminated, f"total {h.total}, dims {list(h.dims)}")


def test_criterion_6_derivation_certificate():
    t0 = time.perf_counter()
    q = builtin("O2_4_chi")
    word, chain = WITNESS_WORDS[4]
    scalar = derivation_chain(q, parse_letters(chain, q), word_element(parse_letters(word, q)))
    elapsed = time.perf_counter() - t0
    check("6", scalar != 0 and elapsed < 60, f"chain {chain} on {word} gives {scalar}, {elapsed:.3f}s")


def test_criterion_7_presentations():
    cases = {"W(4)": build_W(4), "U(4), lambda=-1": build_U(4, -1), "U(4), lambda=-4": build_U(4, -4),
             "U(4), lambda=1": build_U(4, 1), "V": build_V(), "W(5)": build_W(5), "U(5)": build_U(5, -1)}
    bad = [k for k, m in cases.items() if not verify_presentation(m).ok]
    check("7", not bad, f"verified {len(cases) - len(bad)}/{len(cases)}" + (f"; failing {bad}" if bad else ""))


CONDITION_MODULES = {"W(4)": lambda: build_W(4), "U(4)": lambda: build_U(4, -1), "V": build_V}
POINTS = ((1, 0), (0, 1), (1, 1))


def test_criterion_8_lifting_conditions():
    results = {}
    for name, make in CONDITION_MODULES.items():
        m = make()
        results[name] = all(check_lifting_conditions(m, *pt).ok_skew for pt in POINTS)
    bound = dimension_bound(builtin("O2_4_minus"), 24)
    check("8", all(results.values()) and bound == 13824,
          f"(i), (ii) as non-membership in k(1 - g_i), (iii): {results}; bound {bound}")


@pytest.mark.xfail(strict=True, reason="an irreducible group module spans all matrices, so "
                                       "a_i always lies in the group span; see the decisions ledger")
def test_criterion_8_literal_group_span():
    results = {}
    for name, make in CONDITION_MODULES.items():
        m = make()
        results[name] = all(check_lifting_conditions(m, *pt).outside_group_span for pt in POINTS)
    record("8-literal", all(results.values()),
           f"(ii) read as a_i outside span of group matrices: {results}")
    assert all(results.values())


def test_criterion_9_canonicalization():
    rng = random.Random(20240601)

    def rnd():
        return Fraction(rng.randint(-50, 50), rng.randint(1, 20)) if rng.random() > 0.2 else Fraction(0)

    ok = canonical_parameter("Qminus", (0, 0)) == (0, 0) and canonical_parameter("D", (0, 0)) == (0, 0)
    for _ in range(100):
        fam = rng.choice(("Qminus", "D", "Qchi"))
        eta = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
        if fam == "Qchi":
            p, scaled = rnd(), None
            scaled = eta * eta * p
        else:
            p = (rnd(), rnd())
            scaled = (eta * eta * p[0], eta * eta * p[1])
        c = canonical_parameter(fam, p)
        ok &= canonical_parameter(fam, scaled) == c and canonical_parameter(fam, c) == c
    check("9", ok, "100 random cases: eta^2 invariance, idempotence, (0,0) fixed")


def test_criterion_10_partial_evidence():
    # the full computation is gated; low degrees already match the product formula
    h, _ = hilbert_of(builtin("O2_5_minus"), 6)
    poly = bracket_product({4: 4, 5: 2, 6: 4})
    ok = list(h.dims) == poly[:7] and sum(poly) == 8294400 and len(poly) - 1 == 40
    record("10-partial", ok, f"n=5 dims through degree 6 {list(h.dims)} match [4]^4[5]^2[6]^4 "
                             f"(total {sum(poly)}, top degree {len(poly) - 1})")
    assert ok


@pytest.mark.long_running
def test_criterion_10_full_hilbert_function():
    import resource
    cap = 8 * 1024 ** 3
    resource.setrlimit(resource.RLIMIT_AS, (cap, cap))
    try:
        h, _ = hilbert_of(builtin("O2_5_minus"), 41)
    except MemoryError:
        record("10", False, "n=5 completion exceeded the 8 GiB memory cap")
        raise
    check("10", h.total == 8294400 and h.top_degree == 40, f"total {h.total}, top degree {h.top_degree}")


@pytest.mark.long_running
def test_criterion_10_nabla_chain():
    q = builtin("O2_5_chi")
    word, chain = WITNESS_WORDS[5]
    scalar = derivation_chain(q, parse_letters(chain, q), word_element(parse_letters(word, q)))
    record("10-nabla", True if scalar else "INCONCLUSIVE",
           f"40-letter chain gives {scalar}; the printed word starts with abada, which is already zero")


def test_criterion_11_property_suites():
    parts = {}
    parts["rack axioms"] = all(check_rack_axioms(builtin(n).rack).valid for n in BUILTIN_NAMES)
    parts["cocycle"] = all(check_cocycle(builtin(n)).valid for n in BUILTIN_NAMES)
    desk = ("O2_3_minus", "O2_4_minus", "O2_4_chi", "O4_4_minus")
    parts["braid equation"] = all(not braid_equation_failures(braiding(builtin(n))) for n in desk)
    parts["pairing"] = all(not pairing_identity_failures(builtin(n)) for n in desk)
    rng = random.Random(7)
    ok = True
    for name in desk:
        q = builtin(name)
        for d in range(1, 5):
            for _ in range(40):
                w = tuple(rng.randrange(q.rack.size) for _ in range(d))
                j = rng.randrange(q.rack.size)
                ok &= delta(q, j, {w: 1}) == coproduct_component(q, j, {w: 1})
    parts["delta vs coproduct (deg <= 4)"] = ok
    parts["Coxeter"] = all(not coxeter_failures(specht(n, k))
                           for n in (4, 5) for k in ("standard", "sign-twist", "sign"))
    parts["path independence"] = all(not path_independence_failures(m)
                                     for m in (build_W(4), build_U(4, -1), build_V(), build_W(5)))
    check("11", all(parts.values()), ", ".join(f"{k}: {v}" for k, v in parts.items()))


if __name__ == "__main__":
    import sys
    code = pytest.main([__file__, "-q"])
    print("\n".join(LINES))
    sys.exit(code)
