"""Ring objects in the representation category and the two monads they induce.

The central object is the function ring on the coset space: the permutation
representation on H\\G with basis idempotents {e_c}, multiplication
mu(e_c (x) e_c') = e_c when c = c' and 0 otherwise, unit 1 |-> sum of all
e_c, and the diagonal separability section sigma(e_c) = e_c (x) e_c.  The
axioms hold over any exact field, including characteristic dividing the
group order.

Two monads act on G-representations: tensoring with the ring, and the
coinduction-of-restriction composite whose multiplication collapses the
inner coinduction through the counit.  The projection morphism identifies
them; the diagram checks live alongside the constructors.
"""

from .exactlin import Matrix, mat_inverse, mat_kron, mat_mul
from .repcat import (
    Morphism,
    Rep,
    identity_mor,
    restrict,
    restrict_mor,
    symmetry,
    tensor_mor,
    tensor_obj,
    unit_rep,
)
from .adjunction import (
    coind_mor,
    coind_obj,
    counit_eps,
    lax_iota,
    lax_lambda,
    projection_pi,
    projection_pi_inverse,
    section_xi,
    unit_eta,
)


class RingAxiomError(ValueError):
    def __init__(self, message, failures=None):
        super().__init__(message)
        self.failures = failures or []


class RingObject:
    """A representation with multiplication, unit, and optional section."""

    def __init__(self, carrier, mul, unit, section=None, validate=True):
        da = carrier.dim
        if mul.matrix.rows != da or mul.matrix.cols != da * da:
            raise ValueError("multiplication must map carrier(x)carrier to carrier")
        if unit.matrix.rows != da or unit.matrix.cols != 1:
            raise ValueError("unit must map the tensor unit to the carrier")
        if section is not None and (
            section.matrix.rows != da * da or section.matrix.cols != da
        ):
            raise ValueError("section must map the carrier to carrier(x)carrier")
        self.carrier = carrier
        self.mul = mul
        self.unit = unit
        self.section = section
        if validate:
            failures = ring_axiom_failures(self)
            if failures:
                names = ", ".join(f[0] for f in failures)
                raise RingAxiomError(f"ring axioms fail: {names}", failures)

    @property
    def dim(self):
        return self.carrier.dim

    @property
    def field(self):
        return self.carrier.field

    def __repr__(self):
        sec = "with section" if self.section is not None else "no section"
        return f"<RingObject dim {self.dim} over {self.field}, {sec}>"


def ring_axiom_failures(ring):
    """Every violated ring identity as (name, lhs, rhs) triples.

    Covers associativity, both unit laws, commutativity, equivariance of
    all structure maps, and the separability equations when a section is
    present.  Empty list means the ring object is valid.
    """
    a = ring.carrier
    da = a.dim
    field = a.field
    eye = Matrix.identity(field, da)
    m = ring.mul.matrix
    u = ring.unit.matrix
    out = []

    def need(name, lhs, rhs):
        if lhs != rhs:
            out.append((name, lhs, rhs))

    need("associativity", mat_mul(m, mat_kron(m, eye)), mat_mul(m, mat_kron(eye, m)))
    need("unit_left", mat_mul(m, mat_kron(u, eye)), eye)
    need("unit_right", mat_mul(m, mat_kron(eye, u)), eye)
    tau = symmetry(a, a).matrix
    need("commutativity", mat_mul(m, tau), m)
    for g in a.carrier.gens:
        act = a.mat(g)
        act2 = mat_kron(act, act)
        need(f"mul_equivariance@{g}", mat_mul(m, act2), mat_mul(act, m))
        need(f"unit_equivariance@{g}", mat_mul(act, u), u)
        if ring.section is not None:
            need(
                f"section_equivariance@{g}",
                mat_mul(ring.section.matrix, act),
                mat_mul(act2, ring.section.matrix),
            )
    if ring.section is not None:
        s = ring.section.matrix
        sm = mat_mul(s, m)
        need("separability_retract", mat_mul(m, s), eye)
        need("separability_left", mat_mul(mat_kron(m, eye), mat_kron(eye, s)), sm)
        need("separability_right", mat_mul(mat_kron(eye, m), mat_kron(s, eye)), sm)
    return out


def coset_permutation_rep(cs, field):
    """The permutation representation on right cosets, basis {e_c}."""
    g = cs.group
    d = cs.index
    mats = {}
    for gg in g.elements:
        nums = [0] * (d * d)
        for i, r in enumerate(cs.reps):
            nums[i * d + cs.coset_of[g.mul(r, gg)]] = 1
        mats[gg] = Matrix(field, d, d, nums, 1, _normalized=True)
    return Rep(g, field, mats, validate=False, tag="k(cosets)")


def standard_ring(cs, field):
    """The function ring on the coset space with its diagonal section.

    mu(e_c (x) e_c') = delta e_c, unit = sum of basis idempotents,
    sigma(e_c) = e_c (x) e_c.  Valid over every exact field.
    """
    a = coset_permutation_rep(cs, field)
    d = cs.index
    mul_nums = [0] * (d * d * d)
    sec_nums = [0] * (d * d * d)
    for c in range(d):
        mul_nums[c * d * d + (c * d + c)] = 1
        sec_nums[(c * d + c) * d + c] = 1
    aa = tensor_obj(a, a)
    mul = Morphism(aa, a, Matrix(field, d, d * d, mul_nums, 1, _normalized=True), validate=False)
    unit = Morphism(
        unit_rep(cs.group, field),
        a,
        Matrix(field, d, 1, [1] * d, 1, _normalized=True),
        validate=False,
    )
    section = Morphism(
        a, aa, Matrix(field, d * d, d, sec_nums, 1, _normalized=True), validate=False
    )
    return RingObject(a, mul, unit, section, validate=True)


def ring_from_adjunction(cs, field):
    """The ring structure on Coind(1): lax multiplication and lax unit.

    Carries no section of its own; separability is transported from the
    standard ring along the canonical isomorphism.
    """
    h = cs.subgroup
    one_h = unit_rep(h, field)
    carrier = coind_obj(one_h, cs)
    lam = lax_lambda(one_h, one_h, cs, source=tensor_obj(carrier, carrier), target=carrier)
    iota = lax_iota(cs, field, target=carrier)
    return RingObject(carrier, lam, iota, section=None, validate=True)


def canonical_ring_iso(cs, field, standard=None, adjunction=None):
    """The ring isomorphism from the standard ring to the adjunction ring.

    Sends e_c to the indicator function of the coset c; in representative
    coordinates that matrix is the identity, but the morphism is still
    validated as an isomorphism of ring objects at runtime.
    """
    std = standard if standard is not None else standard_ring(cs, field)
    adj = adjunction if adjunction is not None else ring_from_adjunction(cs, field)
    iso = Morphism(std.carrier, adj.carrier, Matrix.identity(field, cs.index), validate=True)
    failures = ring_iso_failures(std, adj, iso)
    if failures:
        names = ", ".join(f[0] for f in failures)
        raise RingAxiomError(f"canonical map is not a ring isomorphism: {names}", failures)
    return iso


def ring_iso_failures(r1, r2, iso):
    """Violations of 'iso intertwines multiplications and units'."""
    out = []
    f = iso.matrix
    inv = mat_inverse(f)
    if inv is None:
        out.append(("invertibility", f, f))
        return out
    lhs = mat_mul(f, r1.mul.matrix)
    rhs = mat_mul(r2.mul.matrix, mat_kron(f, f))
    if lhs != rhs:
        out.append(("multiplication_transport", lhs, rhs))
    lu = mat_mul(f, r1.unit.matrix)
    if lu != r2.unit.matrix:
        out.append(("unit_transport", lu, r2.unit.matrix))
    return out


def transport_section(std, adj, iso):
    """Carry the standard section to the adjunction ring along iso.

    Returns a new RingObject with the transported section, fully
    revalidated; this is how the lax-structure ring acquires its
    separability witness.
    """
    inv = mat_inverse(iso.matrix)
    if inv is None:
        raise RingAxiomError("cannot transport along a singular map")
    mat = mat_mul(mat_kron(iso.matrix, iso.matrix), mat_mul(std.section.matrix, inv))
    aa = tensor_obj(adj.carrier, adj.carrier)
    section = Morphism(adj.carrier, aa, mat, validate=False)
    return RingObject(adj.carrier, adj.mul, adj.unit, section, validate=True)


class Monad:
    """An operational monad: functor data plus unit and multiplication."""

    def __init__(self, name, on_obj, on_mor, eta_at, mu_at):
        self.name = name
        self.on_obj = on_obj
        self.on_mor = on_mor
        self.eta_at = eta_at
        self.mu_at = mu_at

    def __repr__(self):
        return f"<Monad {self.name}>"


def monad_from_adjunction(cs):
    """The composite monad Coind . Res with counit-collapsed multiplication."""
    h = cs.subgroup

    def on_obj(x):
        return coind_obj(restrict(x, h), cs)

    def on_mor(f):
        return coind_mor(restrict_mor(f, h), cs)

    def eta_at(x):
        return unit_eta(x, cs)

    def mu_at(x):
        return coind_mor(counit_eps(restrict(x, h), cs), cs)

    return Monad(f"CoindRes[{cs.index}]", on_obj, on_mor, eta_at, mu_at)


def monad_from_ring(ring):
    """The monad A (x) (-) of a valid ring object.

    Refuses construction when any ring axiom fails: Eilenberg-Moore
    statements downstream would be meaningless.
    """
    failures = ring_axiom_failures(ring)
    if failures:
        names = ", ".join(f[0] for f in failures)
        raise RingAxiomError(f"refusing monad on an invalid ring: {names}", failures)
    a = ring.carrier
    ida = identity_mor(a)

    def on_obj(x):
        return tensor_obj(a, x)

    def on_mor(f):
        return tensor_mor(ida, f)

    def eta_at(x):
        eye = Matrix.identity(x.field, x.dim)
        return Morphism(x, on_obj(x), mat_kron(ring.unit.matrix, eye), validate=False)

    def mu_at(x):
        eye = Matrix.identity(x.field, x.dim)
        src = on_obj(on_obj(x))
        return Morphism(src, on_obj(x), mat_kron(ring.mul.matrix, eye), validate=False)

    return Monad(f"{a.tag or 'A'}(x)-", on_obj, on_mor, eta_at, mu_at)


def monad_law_failures(monad, x):
    """Associativity and both unit triangles of a monad at one object."""
    ax = monad.on_obj(x)
    mu_x = monad.mu_at(x)
    eta_x = monad.eta_at(x)
    eye = Matrix.identity(x.field, ax.dim)
    out = []

    def need(name, lhs, rhs):
        if lhs != rhs:
            out.append((name, lhs, rhs))

    need(
        "mu_associativity",
        mat_mul(mu_x.matrix, monad.on_mor(mu_x).matrix),
        mat_mul(mu_x.matrix, monad.mu_at(ax).matrix),
    )
    need("mu_unit_left", mat_mul(mu_x.matrix, monad.on_mor(eta_x).matrix), eye)
    need("mu_unit_right", mat_mul(mu_x.matrix, monad.eta_at(ax).matrix), eye)
    return out


def monad_section_at(cs, x):
    """The separability section Coind(xi at Res x) of the adjunction monad."""
    h = cs.subgroup
    return coind_mor(section_xi(restrict(x, h), cs), cs)


def monad_separability_failures(cs, monad, x):
    """The section property and both bilinearity squares at one object."""
    ax = monad.on_obj(x)
    s_x = monad_section_at(cs, x)
    mu_x = monad.mu_at(x)
    eye = Matrix.identity(x.field, ax.dim)
    smu = mat_mul(s_x.matrix, mu_x.matrix)
    out = []

    def need(name, lhs, rhs):
        if lhs != rhs:
            out.append((name, lhs, rhs))

    need("section_retract", mat_mul(mu_x.matrix, s_x.matrix), eye)
    need("section_left_linear", mat_mul(monad.mu_at(ax).matrix, monad.on_mor(s_x).matrix), smu)
    need(
        "section_right_linear",
        mat_mul(monad.on_mor(mu_x).matrix, monad_section_at(cs, ax).matrix),
        smu,
    )
    return out


class MonadMorphism:
    """A family of component morphisms between two monads' values.

    ``inv_at`` supplies the closed-form candidate inverse of a component;
    the diagram checker verifies both composites against the identity.
    """

    def __init__(self, name, source, target, at, inv_at=None):
        self.name = name
        self.source = source
        self.target = target
        self.at = at
        self.inv_at = inv_at

    def __repr__(self):
        return f"<MonadMorphism {self.name}>"


def pi_as_monad_morphism(cs, field, ring=None, iso=None):
    """The projection morphism as a map of monads A (x) (-) -> Coind Res.

    Component at x: pi at (1_H, x), precomposed with the canonical ring
    isomorphism tensored with the identity, so the source really is the
    standard ring's monad.
    """
    std = ring if ring is not None else standard_ring(cs, field)
    iso = iso if iso is not None else canonical_ring_iso(cs, field, standard=std)
    iso_inv = mat_inverse(iso.matrix)
    src = monad_from_ring(std)
    tgt = monad_from_adjunction(cs)
    h = cs.subgroup
    one_h = unit_rep(h, field)

    def at(x):
        sx = src.on_obj(x)
        tx = tgt.on_obj(x)
        pi = projection_pi(one_h, x, cs, source=sx, target=tx)
        eye = Matrix.identity(field, x.dim)
        mat = mat_mul(pi.matrix, mat_kron(iso.matrix, eye))
        return Morphism(sx, tx, mat, validate=False, tag="theta")

    def inv_at(x):
        sx = src.on_obj(x)
        tx = tgt.on_obj(x)
        pinv = projection_pi_inverse(one_h, x, cs, source=tx, target=sx)
        eye = Matrix.identity(field, x.dim)
        return mat_mul(mat_kron(iso_inv, eye), pinv.matrix)

    return MonadMorphism("pi", src, tgt, at, inv_at)


def monad_morphism_failures(mm, x):
    """Violated monad-morphism diagrams for the projection map at x.

    Verifies the unit triangle, the multiplication square against the
    two-fold component, and exact invertibility of the component.
    """
    theta_x = mm.at(x)
    src, tgt = mm.source, mm.target
    ax = tgt.on_obj(x)
    da = theta_x.source.dim // x.dim
    eye_a = Matrix.identity(x.field, da)
    out = []

    def need(name, lhs, rhs):
        if lhs != rhs:
            out.append((name, lhs, rhs))

    need(
        "unit_triangle",
        mat_mul(theta_x.matrix, src.eta_at(x).matrix),
        tgt.eta_at(x).matrix,
    )
    theta_ax = mm.at(ax)
    theta2 = mat_mul(theta_ax.matrix, mat_kron(eye_a, theta_x.matrix))
    need(
        "multiplication_square",
        mat_mul(theta_x.matrix, src.mu_at(x).matrix),
        mat_mul(tgt.mu_at(x).matrix, theta2),
    )
    inv = mm.inv_at(x) if mm.inv_at is not None else mat_inverse(theta_x.matrix)
    if inv is None:
        out.append(("component_invertible", theta_x.matrix, theta_x.matrix))
    else:
        eye = Matrix.identity(x.field, theta_x.matrix.rows)
        need("component_left_inverse", mat_mul(inv, theta_x.matrix), eye)
        need("component_right_inverse", mat_mul(theta_x.matrix, inv), eye)
    return out
