"""Coinduction, its adjunction structure maps, and the projection map."""

from sepmonad.exactlin import Field, GF, Matrix, mat_kron, mat_mul
from sepmonad.adjunction import (
    coind_mor,
    coind_obj,
    counit_eps,
    ind_counit,
    lax_iota,
    lax_lambda,
    lax_lambda_composite,
    projection_pi,
    projection_pi_composite_matrix,
    projection_pi_inverse,
    rho_product_iso,
    section_xi,
    unit_eta,
)
from sepmonad.groups import right_cosets, subgroup_generated
from sepmonad.presets import load_preset
from sepmonad.repcat import (
    Morphism,
    random_hom,
    random_rep,
    restrict,
    restrict_mor,
    tensor_obj,
    unit_rep,
)

Q = Field(0)


def _s3_setup(field=Q):
    group, default = load_preset("s3")
    h = subgroup_generated(group, default)
    return group, h, right_cosets(group, h)


def test_coind_of_trivial_is_coset_permutation():
    group, h, cs = _s3_setup()
    a = coind_obj(unit_rep(h, Q), cs, validate=True)
    assert a.dim == 3
    rows = lambda m: [[int(m.entry(i, j)) for j in range(3)] for i in range(3)]
    assert rows(a.mat(1)) == [[1, 0, 0], [0, 0, 1], [0, 1, 0]]
    assert rows(a.mat(2)) == [[0, 1, 0], [0, 0, 1], [1, 0, 0]]


def test_coind_dimension_is_index_times_dim():
    group, h, cs = _s3_setup()
    n = random_rep(h, Q, seed=0, budget=2)
    assert coind_obj(n, cs, validate=True).dim == cs.index * n.dim


def test_triangle_identities():
    group, h, cs = _s3_setup()
    for seed in range(4):
        x = random_rep(group, Q, seed=seed, budget=3)
        rx = restrict(x, h)
        ax = coind_obj(rx, cs)
        eta = unit_eta(x, cs, target=ax)
        eps = counit_eps(rx, cs, coind=ax)
        assert mat_mul(eps.matrix, eta.matrix).is_identity()

        n = random_rep(h, Q, seed=seed, budget=2)
        cn = coind_obj(n, cs)
        rcn = restrict(cn, h)
        ccn = coind_obj(rcn, cs)
        ceps = coind_mor(counit_eps(n, cs, coind=cn), cs, source=ccn, target=cn)
        eta_cn = unit_eta(cn, cs, target=ccn)
        assert mat_mul(ceps.matrix, eta_cn.matrix).is_identity()


def test_induction_counit_triangles():
    """Coinduction is also left adjoint: c = hstack of inverse-rep actions."""
    group, h, cs = _s3_setup()
    for seed in range(3):
        x = random_rep(group, Q, seed=seed, budget=2)
        rx = restrict(x, h)
        ax = coind_obj(rx, cs)
        c = ind_counit(x, cs, source=ax)
        xi = section_xi(rx, cs, coind=ax)
        assert mat_mul(c.matrix, xi.matrix).is_identity()

        n = random_rep(h, Q, seed=seed + 7, budget=2)
        cn = coind_obj(n, cs)
        ccn = coind_obj(restrict(cn, h), cs)
        c_cn = ind_counit(cn, cs, source=ccn)
        cxi = coind_mor(section_xi(n, cs, coind=cn), cs, source=cn, target=ccn)
        assert mat_mul(c_cn.matrix, cxi.matrix).is_identity()


def test_counit_section_identity():
    group, h, cs = _s3_setup()
    for seed in range(4):
        n = random_rep(h, Q, seed=seed, budget=3)
        assert mat_mul(counit_eps(n, cs).matrix, section_xi(n, cs).matrix).is_identity()


def test_structure_maps_are_equivariant():
    group, h, cs = _s3_setup()
    x = random_rep(group, Q, seed=3, budget=2)
    rx = restrict(x, h)
    ax = coind_obj(rx, cs)
    eta = unit_eta(x, cs, target=ax)
    Morphism(x, ax, eta.matrix, validate=True)
    n = random_rep(h, Q, seed=4, budget=2)
    cn = coind_obj(n, cs, validate=True)
    Morphism(restrict(cn, h), n, counit_eps(n, cs, coind=cn).matrix, validate=True)
    Morphism(n, restrict(cn, h), section_xi(n, cs, coind=cn).matrix, validate=True)
    Morphism(ax, x, ind_counit(x, cs, source=ax).matrix, validate=True)


def test_unit_naturality():
    group, h, cs = _s3_setup()
    x = random_rep(group, Q, seed=5, budget=2)
    f = random_hom(x, x, seed=6)
    eye = Matrix.identity(Q, cs.index)
    eta = unit_eta(x, cs)
    lhs = mat_mul(mat_kron(eye, restrict_mor(f, h).matrix), eta.matrix)
    rhs = mat_mul(eta.matrix, f.matrix)
    assert lhs == rhs


def test_lambda_closed_form_equals_composite():
    group, h, cs = _s3_setup()
    for fld in (Q, GF(2), GF(3)):
        x = random_rep(h, fld, seed=1, budget=2)
        y = random_rep(h, fld, seed=2, budget=2)
        assert lax_lambda(x, y, cs).matrix == lax_lambda_composite(x, y, cs).matrix


def test_lambda_unit_laws():
    group, h, cs = _s3_setup()
    one_h = unit_rep(h, Q)
    iota = lax_iota(cs, Q)
    x = random_rep(h, Q, seed=3, budget=2)
    cx = coind_obj(x, cs)
    eye_cx = Matrix.identity(Q, cx.dim)
    left = mat_mul(lax_lambda(one_h, x, cs).matrix, mat_kron(iota.matrix, eye_cx))
    assert left.is_identity()
    right = mat_mul(lax_lambda(x, one_h, cs).matrix, mat_kron(eye_cx, iota.matrix))
    assert right.is_identity()


def test_projection_invertible_and_closed_form():
    group, h, cs = _s3_setup()
    for fld in (Q, GF(2)):
        y = random_rep(h, fld, seed=1, budget=2)
        x = random_rep(group, fld, seed=2, budget=3)
        src = tensor_obj(coind_obj(y, cs), x)
        tgt = coind_obj(tensor_obj(y, restrict(x, h)), cs)
        pi = projection_pi(y, x, cs, source=src, target=tgt)
        pinv = projection_pi_inverse(y, x, cs, source=tgt, target=src)
        assert mat_mul(pi.matrix, pinv.matrix).is_identity()
        assert mat_mul(pinv.matrix, pi.matrix).is_identity()
        assert pi.matrix == projection_pi_composite_matrix(y, x, cs)
        Morphism(src, tgt, pi.matrix, validate=True)


def test_projection_strictness():
    group, h, cs = _s3_setup()
    n = random_rep(h, Q, seed=9, budget=2)
    assert rho_product_iso(n, cs).is_identity()
    strict = coind_obj(tensor_obj(unit_rep(h, Q), n), cs)
    plain = coind_obj(n, cs)
    for g in group.elements:
        assert strict.mat(g) == plain.mat(g)


def test_whole_group_subgroup_is_trivial():
    """H = G: coinduction is the identity functor and all maps are 1x1 blocks."""
    group, _ = load_preset("s3")
    h = subgroup_generated(group, group.gens)
    cs = right_cosets(group, h)
    assert cs.index == 1
    x = random_rep(group, Q, seed=0, budget=3)
    rx = restrict(x, h)
    cn = coind_obj(rx, cs, validate=True)
    assert cn.dim == x.dim
    for g in group.elements:
        assert cn.mat(g) == x.mat(g)
    assert unit_eta(x, cs).matrix.is_identity()
    assert counit_eps(rx, cs).matrix.is_identity()


def test_trivial_subgroup_coind_has_full_index():
    group, _ = load_preset("c4")
    h = subgroup_generated(group, ())
    cs = right_cosets(group, h)
    assert cs.index == 4
    n = unit_rep(h, Q)
    a = coind_obj(n, cs, validate=True)
    assert a.dim == 4
    assert a.mat(0).is_identity()
