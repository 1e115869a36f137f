"""Modules over the coset ring and the comparison equivalence."""

import pytest

from sepmonad.eilenberg import (
    AModMorphism,
    AModule,
    EMError,
    em_comparison,
    em_counit_iso,
    em_inverse,
    em_inverse_split,
    em_mor,
    em_unit_iso,
    extension_of_scalars_iso,
    find_idempotent_summand,
    find_module_iso,
    free_module,
    module_axiom_failures,
    module_hom_space,
    split_idempotent,
)
from sepmonad.exactlin import Field, GF, Matrix, mat_mul
from sepmonad.groups import right_cosets, subgroup_generated
from sepmonad.monadring import standard_ring
from sepmonad.presets import load_preset
from sepmonad.repcat import (
    Morphism,
    identity_mor,
    random_hom,
    random_rep,
    restrict,
    unit_rep,
    zero_mor,
)

Q = Field(0)


def _setup(name, field=Q, gens=None):
    group, default = load_preset(name)
    h = subgroup_generated(group, default if gens is None else gens)
    cs = right_cosets(group, h)
    return cs, standard_ring(cs, field)


def test_comparison_of_trivial_is_ring_as_module():
    cs, ring = _setup("s3")
    one_h = unit_rep(cs.subgroup, Q)
    e1 = em_comparison(one_h, cs, ring)
    assert e1.dim == cs.index
    assert e1.action.matrix == ring.mul.matrix


def test_free_module_on_trivial_recovers_unit_dim():
    cs, ring = _setup("s3")
    free = free_module(ring, unit_rep(cs.group, Q))
    assert free.dim == cs.index
    img = em_inverse(free, cs)
    assert img.dim == 1


def test_module_axioms_of_comparison_and_free():
    cs, ring = _setup("s3")
    n = random_rep(cs.subgroup, Q, seed=1, budget=2)
    assert module_axiom_failures(em_comparison(n, cs, ring)) == []
    y = random_rep(cs.group, Q, seed=2, budget=2)
    assert module_axiom_failures(free_module(ring, y)) == []


def test_invalid_action_rejected():
    cs, ring = _setup("s3")
    y = random_rep(cs.group, Q, seed=3, budget=2)
    free = free_module(ring, y)
    nums = list(free.action.matrix.nums)
    nums[0] += free.action.matrix.den
    bad = Morphism(
        free.action.source,
        free.action.target,
        Matrix(Q, free.action.matrix.rows, free.action.matrix.cols, nums, free.action.matrix.den),
        validate=False,
    )
    with pytest.raises(Exception):
        AModule(ring, free.carrier, bad)


def test_split_idempotent_identity_and_zero():
    cs, _ = _setup("s3")
    x = random_rep(cs.subgroup, Q, seed=4, budget=3)
    img, p, m = split_idempotent(identity_mor(x), x)
    assert img.dim == x.dim
    assert mat_mul(p.matrix, m.matrix).is_identity()
    img0, p0, m0 = split_idempotent(zero_mor(x, x), x)
    assert img0.dim == 0
    assert p0.matrix.rows == 0 and m0.matrix.cols == 0


def test_split_idempotent_rejects_non_idempotent():
    cs, _ = _setup("s3")
    x = random_rep(cs.subgroup, Q, seed=5, budget=2)
    f = Morphism(x, x, Matrix.from_flat(Q, x.dim, x.dim, [2 if i == j else 0 for i in range(x.dim) for j in range(x.dim)]), validate=False)
    with pytest.raises(EMError):
        split_idempotent(f, x)


def test_module_idempotent_splits():
    cs, ring = _setup("s3")
    for seed in range(3):
        n = random_rep(cs.subgroup, Q, seed=seed, budget=2)
        mod = em_comparison(n, cs, ring)
        img, p, m, e = em_inverse_split(mod, cs)
        assert mat_mul(p.matrix, m.matrix).is_identity()
        assert mat_mul(m.matrix, p.matrix) == e.matrix
        assert mat_mul(e.matrix, e.matrix) == e.matrix


def test_em_unit_roundtrip():
    cs, ring = _setup("s3")
    for seed in range(3):
        n = random_rep(cs.subgroup, Q, seed=seed, budget=2)
        w1, w2 = em_unit_iso(n, cs, ring)
        assert mat_mul(w2.matrix, w1.matrix).is_identity()
        assert mat_mul(w1.matrix, w2.matrix).is_identity()


def test_em_counit_roundtrip_on_free_and_comparison():
    cs, ring = _setup("s3")
    y = random_rep(cs.group, Q, seed=6, budget=2)
    phi, psi = em_counit_iso(free_module(ring, y), cs)
    assert mat_mul(phi.matrix, psi.matrix).is_identity()
    n = random_rep(cs.subgroup, Q, seed=7, budget=2)
    phi2, psi2 = em_counit_iso(em_comparison(n, cs, ring), cs)
    assert mat_mul(psi2.matrix, phi2.matrix).is_identity()


def test_extension_of_scalars():
    cs, ring = _setup("s3")
    for seed in range(3):
        y = random_rep(cs.group, Q, seed=seed, budget=2)
        phi, psi = extension_of_scalars_iso(y, cs, ring)
        assert mat_mul(phi.matrix, psi.matrix).is_identity()
        assert mat_mul(psi.matrix, phi.matrix).is_identity()


@pytest.mark.parametrize("name,p", [("c4", 2), ("s3", 3), ("q8", 2)])
def test_modular_em_equivalence(name, p):
    """The equivalence survives characteristic dividing the group order."""
    cs, ring = _setup(name, GF(p))
    n = random_rep(cs.subgroup, GF(p), seed=0, budget=2)
    w1, w2 = em_unit_iso(n, cs, ring)
    assert mat_mul(w2.matrix, w1.matrix).is_identity()
    y = random_rep(cs.group, GF(p), seed=1, budget=2)
    phi, psi = em_counit_iso(free_module(ring, y), cs)
    assert mat_mul(phi.matrix, psi.matrix).is_identity()
    phi2, psi2 = extension_of_scalars_iso(y, cs, ring)
    assert mat_mul(phi2.matrix, psi2.matrix).is_identity()


def test_em_mor_functoriality():
    cs, ring = _setup("s3")
    n1 = random_rep(cs.subgroup, Q, seed=8, budget=2)
    n2 = random_rep(cs.subgroup, Q, seed=9, budget=2)
    f = random_hom(n1, n2, seed=10)
    ef = em_mor(f, cs, ring)
    assert ef.matrix.rows == cs.index * n2.dim
    g = random_hom(n2, n1, seed=11)
    eg = em_mor(g, cs, ring)
    comp = em_mor(
        Morphism(n1, n1, mat_mul(g.matrix, f.matrix), validate=False), cs, ring
    )
    assert mat_mul(eg.matrix, ef.matrix) == comp.matrix


def test_module_hom_space_adjunction_dimension():
    """Hom_A(A (x) y, m) and Hom_G(y, U m) have equal dimension (adjunction)."""
    from sepmonad.repcat import hom_space_basis

    cs, ring = _setup("s3")
    for seed in range(2):
        y = random_rep(cs.group, Q, seed=seed, budget=2)
        n = random_rep(cs.subgroup, Q, seed=seed + 3, budget=2)
        mod = em_comparison(n, cs, ring)
        free = free_module(ring, y)
        left = module_hom_space(free, mod)
        right = hom_space_basis(y, mod.carrier)
        assert len(left) == len(right)


def test_module_hom_space_entries_are_module_maps():
    cs, ring = _setup("s3")
    n = random_rep(cs.subgroup, Q, seed=12, budget=2)
    mod = em_comparison(n, cs, ring)
    for b in module_hom_space(mod, mod):
        AModMorphism(mod, mod, b.matrix, validate=True)


def test_find_module_iso_between_equal_modules():
    cs, ring = _setup("s3")
    n = random_rep(cs.subgroup, Q, seed=13, budget=2)
    mod = em_comparison(n, cs, ring)
    iso = find_module_iso(mod, mod, seed=0)
    assert iso is not None
    from sepmonad.exactlin import mat_inverse

    assert mat_inverse(iso.matrix) is not None
    AModMorphism(mod, mod, iso.matrix, validate=True)


def test_find_idempotent_summand_is_valid_or_none():
    for name in ("s3", "c4", "a4"):
        cs, ring = _setup(name)
        found = find_idempotent_summand(ring, cs, seed=0)
        if found is None:
            continue
        assert module_axiom_failures(found) == []
        assert found.dim > 0
