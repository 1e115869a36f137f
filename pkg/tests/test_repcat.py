"""Representations, tensor structure, and equivariant hom spaces."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sepmonad.exactlin import Field, GF, Matrix, mat_mul
from sepmonad.presets import load_preset
from sepmonad.repcat import (
    Morphism,
    Rep,
    RepError,
    compose,
    find_iso,
    hom_space_basis,
    identity_mor,
    random_hom,
    random_rep,
    rep_equal,
    restrict,
    symmetry,
    tensor_mor,
    tensor_obj,
    unit_rep,
    zero_mor,
)
from sepmonad.groups import subgroup_generated

Q = Field(0)


def regular_rep(group, field):
    mats = {}
    n = group.order
    for g in group.elements:
        nums = [0] * (n * n)
        for x in group.elements:
            nums[group.mul(g, x) * n + x] = 1
        mats[g] = Matrix(field, n, n, nums)
    return Rep(group, field, mats, validate=True, tag="reg")


def test_c2_regular_character():
    c2, _ = load_preset("c2")
    reg = regular_rep(c2, Q)
    assert [reg.mat(i).trace() for i in c2.elements] == [2, 0]


def test_tensor_character_multiplies():
    c2, _ = load_preset("c2")
    reg = regular_rep(c2, Q)
    sq = tensor_obj(reg, reg)
    assert [sq.mat(i).trace() for i in c2.elements] == [4, 0]


def test_c2_hom_dimensions():
    c2, _ = load_preset("c2")
    reg = regular_rep(c2, Q)
    one = unit_rep(c2, Q)
    sq = tensor_obj(reg, reg)
    assert len(hom_space_basis(one, reg)) == 1
    assert len(hom_space_basis(reg, one)) == 1
    assert len(hom_space_basis(reg, reg)) == 2
    assert len(hom_space_basis(sq, sq)) == 8


def test_hom_basis_elements_are_equivariant():
    s3, _ = load_preset("s3")
    reg = regular_rep(s3, Q)
    for b in hom_space_basis(reg, reg):
        for g in s3.gens:
            assert mat_mul(b.matrix, reg.mat(g)) == mat_mul(reg.mat(g), b.matrix)


def test_invalid_rep_rejected():
    c2, _ = load_preset("c2")
    bad = {0: Matrix.identity(Q, 1), 1: Matrix.from_rows(Q, [[2]])}
    with pytest.raises(RepError):
        Rep(c2, Q, bad)  # 2 * 2 != 1, not a homomorphism to GL_1


def test_identity_must_act_as_identity():
    c2, _ = load_preset("c2")
    bad = {0: Matrix.from_rows(Q, [[-1]]), 1: Matrix.from_rows(Q, [[1]])}
    with pytest.raises(RepError):
        Rep(c2, Q, bad)


def test_strict_associativity_of_tensor():
    """(x (x) y) (x) z and x (x) (y (x) z) carry literally equal matrices."""
    s3, _ = load_preset("s3")
    x = random_rep(s3, Q, seed=1, budget=2)
    y = random_rep(s3, Q, seed=2, budget=3)
    z = random_rep(s3, Q, seed=3, budget=2)
    left = tensor_obj(tensor_obj(x, y), z)
    right = tensor_obj(x, tensor_obj(y, z))
    for g in s3.elements:
        assert left.mat(g) == right.mat(g)


def test_unit_is_strict():
    s3, _ = load_preset("s3")
    x = random_rep(s3, Q, seed=4, budget=3)
    one = unit_rep(s3, Q)
    for g in s3.elements:
        assert tensor_obj(one, x).mat(g) == x.mat(g)
        assert tensor_obj(x, one).mat(g) == x.mat(g)


def test_symmetry_laws():
    s3, _ = load_preset("s3")
    x = random_rep(s3, Q, seed=5, budget=2)
    y = random_rep(s3, Q, seed=6, budget=3)
    s_xy = symmetry(x, y)
    s_yx = symmetry(y, x)
    assert mat_mul(s_yx.matrix, s_xy.matrix).is_identity()
    f = random_hom(x, x, seed=7)
    g = random_hom(y, y, seed=8)
    lhs = mat_mul(s_xy.matrix, tensor_mor(f, g).matrix)
    rhs = mat_mul(tensor_mor(g, f).matrix, s_xy.matrix)
    assert lhs == rhs  # naturality of the swap


def test_symmetry_is_equivariant():
    s3, _ = load_preset("s3")
    x = random_rep(s3, Q, seed=9, budget=2)
    y = random_rep(s3, Q, seed=10, budget=2)
    s = symmetry(x, y)
    Morphism(s.source, s.target, s.matrix, validate=True)


def test_random_rep_deterministic_and_valid():
    s3, _ = load_preset("s3")
    a = random_rep(s3, Q, seed=42, budget=4)
    b = random_rep(s3, Q, seed=42, budget=4)
    assert rep_equal(a, b)
    assert a.dim == 4
    Rep(s3, Q, a.mats, validate=True)
    c = random_rep(s3, Q, seed=43, budget=4)
    assert not rep_equal(a, c)


def test_random_rep_modular():
    c4, _ = load_preset("c4")
    x = random_rep(c4, GF(2), seed=0, budget=3)
    Rep(c4, GF(2), x.mats, validate=True)
    assert x.dim == 3


def test_restriction_keeps_matrices():
    s3, default = load_preset("s3")
    h = subgroup_generated(s3, default)
    x = random_rep(s3, Q, seed=11, budget=3)
    rx = restrict(x, h)
    for i in h.elements:
        assert rx.mat(i) == x.mat(i)
    with pytest.raises(RepError):
        restrict(rx, h)  # already an H-representation


def test_compose_and_zero():
    s3, _ = load_preset("s3")
    x = random_rep(s3, Q, seed=12, budget=2)
    f = random_hom(x, x, seed=13)
    assert compose(identity_mor(x), f).matrix == f.matrix
    assert compose(f, identity_mor(x)).matrix == f.matrix
    assert compose(f, zero_mor(x, x)).matrix.is_zero()


def test_find_iso_on_conjugate_reps():
    s3, _ = load_preset("s3")
    x = random_rep(s3, Q, seed=14, budget=3)
    y = random_rep(s3, Q, seed=15, budget=3)
    iso = find_iso(x, x, seed=0)
    assert iso is not None
    one = unit_rep(s3, Q)
    assert find_iso(one, tensor_obj(one, one), seed=0) is not None
    got = find_iso(x, y, seed=0)
    if got is not None:
        inv = find_iso(y, x, seed=0)
        assert inv is not None


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 4))
def test_random_hom_is_equivariant(seed, budget):
    s3, _ = load_preset("s3")
    x = random_rep(s3, Q, seed=seed, budget=budget)
    f = random_hom(x, x, seed=seed)
    Morphism(x, x, f.matrix, validate=True)
