from __future__ import annotations

import pytest

from nichols_forge import linalg
from nichols_forge.lifting import family_Q_minus
from nichols_forge.perm import adjacent, all_perms
from nichols_forge.representations import (RepModule, RepresentationError, algebra_dimension,
                                           alpha_n, build, build_U, build_V, build_W,
                                           check_lifting_conditions, commutant_dimension, coxeter_failures,
                                           group_span_dimension, irreducible_matrices, is_irreducible,
                                           path_independence_failures, specht, standard_direct,
                                           verify_presentation)
from nichols_forge.scalars import ParamScalar

POINTS = [(1, 0), (0, 1), (1, 1)]


@pytest.mark.parametrize("n", [4, 5])
@pytest.mark.parametrize("kind", ["standard", "sign-twist", "sign"])
def test_specht_modules_satisfy_coxeter_relations(n, kind):
    assert coxeter_failures(specht(n, kind)) == []


@pytest.mark.parametrize("n", [3, 4, 5])
def test_standard_module_matches_direct_construction(n):
    std = specht(n, "standard")
    for t in all_perms(n):
        assert std.matrix(t) == standard_direct(t)


def test_sign_twist_is_tensor_with_sign():
    std, tw = specht(4, "standard"), specht(4, "sign-twist")
    for t in all_perms(4):
        assert tw.matrix(t) == linalg.scale(t.sign(), std.matrix(t))


def test_unknown_kind():
    with pytest.raises(RepresentationError):
        specht(4, "hook")


MODULES = [
    ("W4", lambda: build_W(4)),
    ("U4-1", lambda: build_U(4, -1)),
    ("U4-4", lambda: build_U(4, -4)),
    ("U4+1", lambda: build_U(4, 1)),
    ("V", build_V),
    ("W5", lambda: build_W(5)),
    ("U5", lambda: build_U(5, -1)),
]


@pytest.mark.parametrize("label,make", MODULES, ids=[m[0] for m in MODULES])
def test_presentations_hold(label, make):
    m = make()
    rep = verify_presentation(m)
    assert rep.ok, rep.to_json()
    assert path_independence_failures(m) == []


@pytest.mark.parametrize("family,n", [("Qminus", 4), ("Qchi", 4), ("D", 4)])
def test_lifting_conditions(family, n):
    m = build(family, n)
    for pt in POINTS:
        cond = check_lifting_conditions(m, *pt)
        assert cond.faithful and cond.independent_fibres and cond.outside_skew_line
        assert is_irreducible(m, *pt)


def test_literal_span_test_for_modules_with_two_summands():
    for family in ("Qminus", "D"):
        m = build(family, 4)
        assert group_span_dimension(m) == 18
        assert all(check_lifting_conditions(m, *pt).ok for pt in POINTS)


def test_group_span_of_irreducible_module_is_everything():
    # the reason the literal span test cannot pass for U(n)
    m = build_U(4, -1)
    assert group_span_dimension(m) == m.dimension ** 2
    assert not check_lifting_conditions(m, 1, 0).outside_group_span


def test_perturbed_coefficient_breaks_a_relation():
    m = build_W(4, alpha=alpha_n(4) + 1)
    rep = verify_presentation(m)
    assert rep.quadratic and not rep.ok


def test_reducible_at_zero_parameters():
    assert not is_irreducible(build_W(4), 0, 0)
    assert not is_irreducible(build_V(), 0, 0)


def test_direct_sum_is_reducible():
    gens = [specht(4, "standard").matrices[k] for k in range(1, 4)]
    summed = [linalg.block_diag(g, g) for g in gens]
    assert irreducible_matrices(gens)
    assert not irreducible_matrices(summed)
    assert commutant_dimension(summed) == 4
    assert algebra_dimension(summed) == 9


def test_trivial_group_action_is_not_faithful():
    datum = family_Q_minus(4)
    one = [[1]]
    m = RepModule("trivial", datum, ("v",), datum.q.rack.index("(12)"),
                  [[ParamScalar.const(0)]], lambda t: one, one)
    assert not check_lifting_conditions(m).faithful


def test_group_matrices_form_a_homomorphism():
    m = build_V()
    for k in range(1, 4):
        s = adjacent(4, k)
        for t in all_perms(4):
            assert linalg.mat_equal(m.group_matrix(s * t), linalg.matmul(m.group_matrix(s), m.group_matrix(t)))


def test_u_needs_a_square_root():
    with pytest.raises(RepresentationError):
        build_U(4, 2)


def test_unknown_family():
    with pytest.raises(RepresentationError):
        build("X")
