"""Restriction and coinduction between G-representations and H-representations.

Coinduction realizes the space of H-equivariant functions f: G -> N,
f(hx) = h f(x), with G acting by right translation (g.f)(x) = f(xg).
Such a function is determined by its values on the coset representatives
R of H\\G, so the underlying space is N^[G:H] with coordinates ordered by
(coset index, basis vector of N) and the identity representative first.

With that ordering the structure maps of the adjunction Res -| Coind all
have closed forms:

  unit      eta(m)   = (r |-> r.m),            a stack of action matrices
  counit    eps(f)   = f(identity),            the first coordinate block
  section   xi(m)    = f supported on H,       the first-block inclusion
  lax unit  iota     = eta at the unit object, the all-ones column
  lax mult  lambda   = pointwise tensor per representative
  projection pi(f(x)m) = (r |-> f_r (x) r.m),  block diagonal in r

Every closed form is cross-checkable against its abstract composite
definition; the check functions live in the verification suite and tests.
"""

from math import lcm

from .exactlin import Matrix, hstack, mat_kron, mat_mul, vstack
from .groups import factorize
from .repcat import (
    Morphism,
    Rep,
    RepError,
    compose,
    restrict,
    tensor_mor,
    tensor_obj,
    unit_rep,
)


class CoindRep(Rep):
    """A coinduced representation, remembering its H-side source."""

    def __init__(self, carrier, field, mats, source, cs, validate=False, tag=""):
        super().__init__(carrier, field, mats, validate=validate, tag=tag)
        self.source = source
        self.cs = cs


def coind_obj(n, cs, validate=False):
    """Coinduce an H-representation to G along the coset space.

    The action matrix of g sends block column sigma(i) to block row i
    through n.mat(h_i), where r_i g = h_i r_sigma(i) is the coset
    factorization.  Correct by construction; validation is optional
    because the generator check is exercised separately on small cases.
    """
    if n.carrier is not cs.subgroup:
        raise RepError("representation must live over the coset space's subgroup")
    g = cs.group
    index = cs.index
    dn = n.dim
    d = index * dn
    field = n.field
    mats = {}
    for gg in g.elements:
        nums = [0] * (d * d)
        scale = 1
        blocks = []
        for i, r in enumerate(cs.reps):
            h, _ = factorize(cs, g.mul(r, gg))
            blocks.append((i, cs.coset_of[g.mul(r, gg)], n.mat(h)))
        if field.char == 0:
            for _, _, b in blocks:
                scale = lcm(scale, b.den)
        for i, j, b in blocks:
            f = scale // b.den
            for a in range(dn):
                base = (i * dn + a) * d + j * dn
                row = a * dn
                for c in range(dn):
                    v = b.nums[row + c]
                    if v:
                        nums[base + c] = v * f
        mats[gg] = Matrix(field, d, d, nums, scale)
    tag = f"Coind({n.tag})" if n.tag else "Coind"
    return CoindRep(g, field, mats, n, cs, validate=validate, tag=tag)


def coind_mor(f, cs, source=None, target=None):
    """Apply an H-morphism in every representative coordinate.

    The matrix is kron(I_[G:H], f); the coinduced endpoints are rebuilt
    unless provided by the caller.
    """
    src = source if source is not None else coind_obj(f.source, cs)
    tgt = target if target is not None else coind_obj(f.target, cs)
    eye = Matrix.identity(f.matrix.field, cs.index)
    return Morphism(src, tgt, mat_kron(eye, f.matrix), validate=False)


def unit_eta(m, cs, target=None):
    """The unit m -> Coind(Res m): a vector goes to the function g |-> g.v."""
    tgt = target if target is not None else coind_obj(restrict(m, cs.subgroup), cs)
    mat = vstack([m.mat(r) for r in cs.reps])
    return Morphism(m, tgt, mat, validate=False, tag="eta")


def counit_eps(n, cs, coind=None):
    """The counit Res Coind n -> n: evaluate at the identity.

    Pure block projection because the trivial coset's representative is
    the identity.
    """
    src = restrict(coind if coind is not None else coind_obj(n, cs), cs.subgroup)
    dn = n.dim
    d = cs.index * dn
    nums = [0] * (dn * d)
    for a in range(dn):
        nums[a * d + a] = 1
    mat = Matrix(n.field, dn, d, nums, 1, _normalized=True)
    return Morphism(src, n, mat, validate=False, tag="eps")


def section_xi(n, cs, coind=None):
    """The H-equivariant section n -> Res Coind n of the counit.

    Includes a vector as the function supported on the trivial coset;
    eps composed with xi is the identity on the nose.
    """
    tgt = restrict(coind if coind is not None else coind_obj(n, cs), cs.subgroup)
    dn = n.dim
    d = cs.index * dn
    nums = [0] * (d * dn)
    for a in range(dn):
        nums[a * dn + a] = 1
    mat = Matrix(n.field, d, dn, nums, 1, _normalized=True)
    return Morphism(n, tgt, mat, validate=False, tag="xi")


def lax_iota(cs, field, target=None):
    """The lax unit 1_G -> Coind(1_H): the all-ones column."""
    one_g = unit_rep(cs.group, field)
    tgt = target if target is not None else coind_obj(unit_rep(cs.subgroup, field), cs)
    mat = Matrix(field, cs.index, 1, [1] * cs.index, 1, _normalized=True)
    return Morphism(one_g, tgt, mat, validate=False, tag="iota")


def _lambda_matrix(field, index, dx, dy):
    rows = index * dx * dy
    cols = index * dx * index * dy
    nums = [0] * (rows * cols)
    for r in range(index):
        for a in range(dx):
            row = r * dx * dy + a * dy
            col = (r * dx + a) * index * dy + r * dy
            for b in range(dy):
                nums[(row + b) * cols + (col + b)] = 1
    return Matrix(field, rows, cols, nums, 1, _normalized=True)


def lax_lambda(x, y, cs, source=None, target=None):
    """The lax multiplication Coind(x) (x) Coind(y) -> Coind(x (x) y).

    Pointwise tensor: the (r, r') input block survives only when r = r',
    landing identically in the r block of the target.
    """
    src = source if source is not None else tensor_obj(coind_obj(x, cs), coind_obj(y, cs))
    tgt = target if target is not None else coind_obj(tensor_obj(x, y), cs)
    mat = _lambda_matrix(x.field, cs.index, x.dim, y.dim)
    return Morphism(src, tgt, mat, validate=False, tag="lambda")


def lax_lambda_composite(x, y, cs):
    """The defining composite Coind(eps_x (x) eps_y) after the unit.

    Equal to the closed form of lax_lambda; exercised as a cross-check.
    """
    ux = coind_obj(x, cs)
    uy = coind_obj(y, cs)
    z = tensor_obj(ux, uy)
    eta = unit_eta(z, cs)
    ee = tensor_mor(counit_eps(x, cs, coind=ux), counit_eps(y, cs, coind=uy))
    return compose(coind_mor(ee, cs, source=eta.target), eta)


def projection_pi(y, x, cs, source=None, target=None):
    """The projection Coind(y) (x) x -> Coind(y (x) Res x).

    On functions, (f (x) m) |-> (r |-> f_r (x) r.m).  Block diagonal with
    r-block kron(I_dy, x.mat(r)); the shared flat index (r, i, a) makes
    source and target coordinates line up entry for entry.
    """
    return _pi_blockdiag(y, x, cs, invert=False, source=source, target=target)


def projection_pi_inverse(y, x, cs, source=None, target=None):
    """The exact inverse of projection_pi: r-block kron(I_dy, x.mat(1/r))."""
    return _pi_blockdiag(y, x, cs, invert=True, source=source, target=target)


def _pi_blockdiag(y, x, cs, invert, source=None, target=None):
    g = cs.group
    index = cs.index
    dx, dy = x.dim, y.dim
    field = x.field
    d = index * dy * dx
    blocks = [x.mat(g.inverse(r) if invert else r) for r in cs.reps]
    if field.char == 0:
        from math import lcm

        den = 1
        for b in blocks:
            den = lcm(den, b.den)
    else:
        den = 1
    nums = [0] * (d * d)
    for r, b in enumerate(blocks):
        f = den // b.den
        for i in range(dy):
            off = r * dy * dx + i * dx
            for a in range(dx):
                base = (off + a) * d + off
                row = a * dx
                for c in range(dx):
                    v = b.nums[row + c]
                    if v:
                        nums[base + c] = v * f
    mat = Matrix(field, d, d, nums, den)
    if invert:
        src = source if source is not None else coind_obj(tensor_obj(y, restrict(x, cs.subgroup)), cs)
        tgt = target if target is not None else tensor_obj(coind_obj(y, cs), x)
    else:
        src = source if source is not None else tensor_obj(coind_obj(y, cs), x)
        tgt = target if target is not None else coind_obj(tensor_obj(y, restrict(x, cs.subgroup)), cs)
    return Morphism(src, tgt, mat, validate=False, tag="pi_inv" if invert else "pi")


def projection_pi_composite_matrix(y, x, cs):
    """The matrix of the abstract composite lambda . (id (x) eta).

    Computed at matrix level only, to avoid materializing the doubly
    coinduced tensor representation.
    """
    eta = vstack([x.mat(r) for r in cs.reps])
    lam = _lambda_matrix(x.field, cs.index, y.dim, x.dim)
    eye = Matrix.identity(x.field, cs.index * y.dim)
    return mat_mul(lam, mat_kron(eye, eta))


def rho_product_iso(n, cs):
    """The reindexing of Coind(n)'s space as [G:H] copies of n's space.

    With (coset, basis) coordinate ordering the reindexing is literally
    the identity matrix; returned as a plain Matrix because it forgets
    the group action.
    """
    return Matrix.identity(n.field, cs.index * n.dim)


def ind_counit(x, cs, source=None):
    """The counit Coind(Res x) -> x of the induction-side adjunction.

    Sends f to the sum over representatives of r^{-1}.f(r); with xi as
    unit this exhibits coinduction as a left adjoint of restriction as
    well (induction and coinduction coincide at finite index).
    """
    g = cs.group
    src = source if source is not None else coind_obj(restrict(x, cs.subgroup), cs)
    mat = hstack([x.mat(g.inverse(r)) for r in cs.reps])
    return Morphism(src, x, mat, validate=False, tag="ind_counit")
