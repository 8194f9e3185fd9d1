from __future__ import annotations

import pytest

from nichols_forge import linalg
from nichols_forge.cocycle import braiding, constant_cocycle
from nichols_forge.fixtures import BUILTIN_NAMES, builtin
from nichols_forge.quadratic import (admissible_classes, block_determinants, classify_all,
                                     enumerate_classes, kernel_oracle, quadratic_basis)
from nichols_forge.rack import Rack


def span_matches_kernel(q) -> bool:
    size = q.rack.size
    vecs = [r.vector(size) for r in quadratic_basis(q)]
    ker = kernel_oracle(q).basis
    return linalg.rank(vecs) == len(vecs) == len(ker) and linalg.span_equal(vecs, ker)


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_relations_span_the_kernel(name):
    assert span_matches_kernel(builtin(name))


@pytest.mark.parametrize("name,dim", [("O2_3_minus", 5), ("O2_4_minus", 17), ("O2_4_chi", 17),
                                      ("O4_4_minus", 17)])
def test_kernel_dimension(name, dim):
    assert kernel_oracle(builtin(name)).dimension == dim


def test_classes_partition_pairs():
    r = builtin("O2_4_minus").rack
    seen = [p for c in enumerate_classes(r) for p in c.pairs()]
    assert sorted(seen) == sorted((a, b) for a in range(r.size) for b in range(r.size))


def test_relations_vanish_under_c_plus_id():
    q = builtin("O2_4_chi")
    c = braiding(q).matrix()
    n = len(c)
    for rel in quadratic_basis(q):
        v = rel.vector(q.rack.size)
        image = [sum(c[i][j] * v[j] for j in range(n)) + v[i] for i in range(n)]
        assert not any(image)


def test_admissible_class_shapes_for_transpositions():
    q = builtin("O2_4_minus")
    sizes = sorted(c.size for c in admissible_classes(q))
    # squares, commuting pairs (size 2), triangles (size 3)
    assert sizes.count(1) == 6 and sizes.count(2) == 3 and sizes.count(3) == 8


def test_block_determinant_closed_form():
    for name in ("O2_4_chi", "O4_4_minus"):
        for cls, direct, closed in block_determinants(builtin(name)):
            assert direct == closed


def test_trivial_braiding_gives_symmetric_relations():
    # q = 1 on the trivial rack: ker(flip + id) is the antisymmetric part
    r = Rack.from_table([[0, 1], [0, 1]])
    q = constant_cocycle(r, 1)
    assert kernel_oracle(q).dimension == 1
    assert span_matches_kernel(q)
    assert len(classify_all(q)) == 3
