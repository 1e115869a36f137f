"""Modules over the coset function ring and the Eilenberg-Moore equivalence.

An AModule is a G-representation x with an action A (x) x -> x satisfying
associativity and unitality.  The comparison functor E sends an H-rep n to
the coinduced representation with the coordinatewise truncation action
(keep the block of the acting basis idempotent).  Its quasi-inverse splits
the idempotent given by acting with the identity-coset idempotent, viewed
H-equivariantly.

All round trips ship explicit invertible witnesses built from the
adjunction's structure maps; nothing is certified by a search when a
closed form exists.
"""

import itertools
import random
from fractions import Fraction
from math import lcm

from .exactlin import (
    Matrix,
    mat_add,
    mat_inverse,
    mat_kron,
    mat_mul,
    mat_scale,
    mat_sub,
    nullspace_basis,
    rank_and_column_basis,
    solve_linear,
    vstack,
)
from .repcat import (
    Morphism,
    Rep,
    compose,
    random_rep,
    restrict,
    tensor_obj,
    unit_rep,
)
from .adjunction import (
    coind_mor,
    coind_obj,
    counit_eps,
    projection_pi,
    projection_pi_inverse,
    section_xi,
    unit_eta,
)
from .monadring import RingAxiomError, ring_axiom_failures


class ModuleAxiomError(ValueError):
    def __init__(self, message, failures=None):
        super().__init__(message)
        self.failures = failures or []


class EMError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class AModule:
    """A carrier representation with a validated ring action."""

    def __init__(self, ring, carrier, action, validate=True, tag=""):
        da = ring.dim
        dx = carrier.dim
        if action.matrix.rows != dx or action.matrix.cols != da * dx:
            raise ValueError("action must map ring(x)carrier to carrier")
        self.ring = ring
        self.carrier = carrier
        self.action = action
        self.tag = tag
        if validate:
            failures = module_axiom_failures(self)
            if failures:
                names = ", ".join(f[0] for f in failures)
                raise ModuleAxiomError(f"module axioms fail: {names}", failures)

    @property
    def dim(self):
        return self.carrier.dim

    def __repr__(self):
        return f"<AModule dim {self.dim}{': ' + self.tag if self.tag else ''}>"


def module_axiom_failures(mod):
    """Violated module identities as (name, lhs, rhs) triples."""
    a = mod.ring.carrier
    x = mod.carrier
    rho = mod.action.matrix
    da, dx = a.dim, x.dim
    field = x.field
    eye_a = Matrix.identity(field, da)
    eye_x = Matrix.identity(field, dx)
    out = []

    def need(name, lhs, rhs):
        if lhs != rhs:
            out.append((name, lhs, rhs))

    need(
        "action_associativity",
        mat_mul(rho, mat_kron(mod.ring.mul.matrix, eye_x)),
        mat_mul(rho, mat_kron(eye_a, rho)),
    )
    need("action_unitality", mat_mul(rho, mat_kron(mod.ring.unit.matrix, eye_x)), eye_x)
    for g in x.carrier.gens:
        need(
            f"action_equivariance@{g}",
            mat_mul(rho, mat_kron(a.mat(g), x.mat(g))),
            mat_mul(x.mat(g), rho),
        )
    return out


class AModMorphism:
    """A G-equivariant map between module carriers commuting with actions."""

    def __init__(self, source, target, matrix, validate=True):
        if source.ring is not target.ring:
            raise EMError("modules live over different rings")
        self.source = source
        self.target = target
        self.matrix = matrix
        self.mor = Morphism(source.carrier, target.carrier, matrix, validate=validate)
        if validate:
            eye_a = Matrix.identity(matrix.field, source.ring.dim)
            lhs = mat_mul(matrix, source.action.matrix)
            rhs = mat_mul(target.action.matrix, mat_kron(eye_a, matrix))
            if lhs != rhs:
                raise EMError("map does not commute with the actions", (lhs, rhs))

    def __repr__(self):
        return f"<AModMorphism {self.source.dim}->{self.target.dim}>"


def free_module(ring, y, tag=""):
    """The free module A (x) y with multiplication-induced action."""
    failures = ring_axiom_failures(ring)
    if failures:
        names = ", ".join(f[0] for f in failures)
        raise RingAxiomError(f"refusing free module over an invalid ring: {names}", failures)
    carrier = tensor_obj(ring.carrier, y)
    eye = Matrix.identity(y.field, y.dim)
    action = Morphism(
        tensor_obj(ring.carrier, carrier),
        carrier,
        mat_kron(ring.mul.matrix, eye),
        validate=False,
    )
    return AModule(ring, carrier, action, validate=True, tag=tag or f"free({y.tag})")


def em_comparison(n, cs, ring, tag=""):
    """The comparison module E(n): coinduction with the truncation action.

    Acting with the basis idempotent of a coset keeps that coset's
    coordinate block and kills the others (pointwise multiplication of
    functions).
    """
    carrier = coind_obj(n, cs)
    index = cs.index
    dn = n.dim
    d = index * dn
    nums = [0] * (d * index * d)
    cols = index * d
    for c in range(index):
        for b in range(dn):
            nums[(c * dn + b) * cols + (c * d + c * dn + b)] = 1
    action = Morphism(
        tensor_obj(ring.carrier, carrier),
        carrier,
        Matrix(n.field, d, cols, nums, 1, _normalized=True),
        validate=False,
    )
    return AModule(ring, carrier, action, validate=True, tag=tag or f"E({n.tag})")


def em_mor(f, cs, ring, source=None, target=None):
    """Functoriality of the comparison: E(f) applies f per representative."""
    src = source if source is not None else em_comparison(f.source, cs, ring)
    tgt = target if target is not None else em_comparison(f.target, cs, ring)
    eye = Matrix.identity(f.matrix.field, cs.index)
    return AModMorphism(src, tgt, mat_kron(eye, f.matrix), validate=True)


def split_idempotent(e, x):
    """Split an equivariant idempotent through its image representation.

    Returns (image, p, m) with m . p = e and p . m = id.  The image's
    action is well defined because e commutes with the group action;
    everything is revalidated on construction.
    """
    if e.source is not x or e.target is not x:
        raise EMError("idempotent must be an endomorphism of the given representation")
    e2 = mat_mul(e.matrix, e.matrix)
    if e2 != e.matrix:
        raise EMError("endomorphism is not idempotent", (e2, e.matrix))
    for g in x.carrier.gens:
        lhs = mat_mul(e.matrix, x.mat(g))
        rhs = mat_mul(x.mat(g), e.matrix)
        if lhs != rhs:
            raise EMError(f"idempotent is not equivariant at generator {g}", (lhs, rhs))
    r, basis, _ = rank_and_column_basis(e.matrix)
    if r == 0:
        img = Rep(x.carrier, x.field, {g: Matrix.zeros(x.field, 0, 0) for g in x.carrier.elements}, validate=False, tag="0")
        p = Morphism(x, img, Matrix.zeros(x.field, 0, x.dim), validate=False)
        m = Morphism(img, x, Matrix.zeros(x.field, x.dim, 0), validate=False)
        return img, p, m
    pmat = solve_linear(basis, e.matrix)
    if pmat is None:
        raise ArithmeticError("image basis failed to absorb the idempotent")
    mats = {g: mat_mul(pmat, mat_mul(x.mat(g), basis)) for g in x.carrier.elements}
    img = Rep(x.carrier, x.field, mats, validate=True, tag=f"img({e.tag})" if e.tag else "img")
    p = Morphism(x, img, pmat, validate=True, tag="retract")
    m = Morphism(img, x, basis, validate=True, tag="include")
    return img, p, m


def em_inverse_split(mod, cs):
    """The idempotent of a module and its splitting data.

    e acts by the identity-coset idempotent, read H-equivariantly through
    the projection transport; returns (image H-rep, p, m, e) with
    m . p = e, p . m = id.
    """
    failures = module_axiom_failures(mod)
    if failures:
        names = ", ".join(f[0] for f in failures)
        raise ModuleAxiomError(f"module axioms fail: {names}", failures)
    h = cs.subgroup
    x = mod.carrier
    field = x.field
    rx = restrict(x, h)
    one_h = unit_rep(h, field)
    cx = coind_obj(rx, cs)
    pinv = projection_pi_inverse(one_h, x, cs, source=cx, target=mod.action.source)
    xi = section_xi(rx, cs, coind=cx)
    e_mat = mat_mul(mod.action.matrix, mat_mul(pinv.matrix, xi.matrix))
    e = Morphism(rx, rx, e_mat, validate=True, tag="e")
    e2 = mat_mul(e_mat, e_mat)
    if e2 != e_mat:
        raise EMError("module idempotent law e.e = e fails", (e2, e_mat))
    img, p, m = split_idempotent(e, rx)
    return img, p, m, e


def em_inverse(mod, cs):
    """The underlying H-representation of a module: the image of e."""
    return em_inverse_split(mod, cs)[0]


def em_unit_iso(n, cs, ring):
    """Mutually inverse H-morphisms between n and the round trip through E.

    w1 = p . xi and w2 = eps . m; both composites are checked to be
    identities exactly.
    """
    mod = em_comparison(n, cs, ring)
    img, p, m, _ = em_inverse_split(mod, cs)
    xi_n = section_xi(n, cs, coind=mod.carrier)
    eps_n = counit_eps(n, cs, coind=mod.carrier)
    w1 = compose(p, xi_n)
    w2 = compose(eps_n, m)
    if not mat_mul(w2.matrix, w1.matrix).is_identity():
        raise EMError("unit round trip fails on n", (w1.matrix, w2.matrix))
    if not mat_mul(w1.matrix, w2.matrix).is_identity():
        raise EMError("unit round trip fails on the image", (w1.matrix, w2.matrix))
    return w1, w2


def em_counit_iso(mod, cs):
    """Mutually inverse A-linear maps between E(em_inverse(mod)) and mod.

    phi = action . pi-inverse . Coind(m) and psi = Coind(p) . eta; both
    composites are verified to be identities and both maps to be
    A-linear.
    """
    img, p, m, _ = em_inverse_split(mod, cs)
    h = cs.subgroup
    x = mod.carrier
    field = x.field
    one_h = unit_rep(h, field)
    en = em_comparison(img, cs, mod.ring)
    rx = restrict(x, h)
    cx = coind_obj(rx, cs)
    pinv = projection_pi_inverse(one_h, x, cs, source=cx, target=mod.action.source)
    cm = coind_mor(m, cs, source=en.carrier, target=cx)
    phi_mat = mat_mul(mod.action.matrix, mat_mul(pinv.matrix, cm.matrix))
    eta = unit_eta(x, cs, target=cx)
    cp = coind_mor(p, cs, source=cx, target=en.carrier)
    psi_mat = mat_mul(cp.matrix, eta.matrix)
    if not mat_mul(phi_mat, psi_mat).is_identity():
        raise EMError("counit round trip fails on the module", (phi_mat, psi_mat))
    if not mat_mul(psi_mat, phi_mat).is_identity():
        raise EMError("counit round trip fails on the comparison", (phi_mat, psi_mat))
    phi = AModMorphism(en, mod, phi_mat, validate=True)
    psi = AModMorphism(mod, en, psi_mat, validate=True)
    return phi, psi


def extension_of_scalars_iso(y, cs, ring):
    """The projection as an A-linear isomorphism A (x) y -> E(Res y)."""
    h = cs.subgroup
    field = y.field
    one_h = unit_rep(h, field)
    free = free_module(ring, y)
    en = em_comparison(restrict(y, h), cs, ring)
    pi = projection_pi(one_h, y, cs, source=free.carrier, target=en.carrier)
    pinv = projection_pi_inverse(one_h, y, cs, source=en.carrier, target=free.carrier)
    if not mat_mul(pi.matrix, pinv.matrix).is_identity():
        raise EMError("projection inverse fails", (pi.matrix, pinv.matrix))
    if not mat_mul(pinv.matrix, pi.matrix).is_identity():
        raise EMError("projection inverse fails", (pi.matrix, pinv.matrix))
    phi = AModMorphism(free, en, pi.matrix, validate=True)
    psi = AModMorphism(en, free, pinv.matrix, validate=True)
    return phi, psi


def module_hom_space(m1, m2):
    """A deterministic basis of the A-linear equivariant maps m1 -> m2.

    Intersects the equivariance constraints with the linearized
    action-compatibility constraints and reads the nullspace.
    """
    if m1.ring is not m2.ring:
        raise EMError("modules live over different rings")
    x1, x2 = m1.carrier, m2.carrier
    d1, d2 = x1.dim, x2.dim
    da = m1.ring.dim
    field = x1.field
    blocks = []
    eye1 = Matrix.identity(field, d1)
    eye2 = Matrix.identity(field, d2)
    for g in x1.carrier.gens:
        blocks.append(
            mat_sub(mat_kron(eye2, x1.mat(g).transpose()), mat_kron(x2.mat(g), eye1))
        )
    rho1, rho2 = m1.action.matrix, m2.action.matrix
    rows = d2 * da * d1
    cols = d2 * d1
    if field.char == 0:
        den = lcm(rho1.den, rho2.den)
        f1, f2 = den // rho1.den, den // rho2.den
    else:
        den, f1, f2 = 1, 1, 1
    nums = [0] * (rows * cols)
    w1 = da * d1
    for p in range(d2):
        for q in range(d1):
            col = p * d1 + q
            base = p * w1
            r1row = q * w1
            for c in range(w1):
                v = rho1.nums[r1row + c]
                if v:
                    nums[(base + c) * cols + col] = f1 * v
            for i in range(d2):
                r2row = i * (da * d2)
                for gamma in range(da):
                    v = rho2.nums[r2row + gamma * d2 + p]
                    if v:
                        row = i * w1 + gamma * d1 + q
                        nums[row * cols + col] -= f2 * v
    blocks.append(Matrix(field, rows, cols, nums, den))
    sol = nullspace_basis(vstack(blocks))
    basis = []
    for k in range(sol.cols):
        vals = [sol.nums[v * sol.cols + k] for v in range(d2 * d1)]
        basis.append(AModMorphism(m1, m2, Matrix(field, d2, d1, vals, sol.den), validate=True))
    return basis


def find_module_iso(m1, m2, seed=0, attempts=32):
    """An invertible A-linear map m1 -> m2, or None if the search fails.

    Same strategy as the plain representation search: random combinations
    of the hom basis, exhaustive over small prime fields.
    """
    if m1.dim != m2.dim:
        return None
    basis = module_hom_space(m1, m2)
    if not basis:
        return None
    field = m1.carrier.field
    p = field.char

    def build(coeffs):
        total = Matrix.zeros(field, m2.dim, m1.dim)
        for c, b in zip(coeffs, basis):
            if c:
                total = mat_add(total, mat_scale(b.matrix, c))
        return total

    rng = random.Random(f"sepmonad|modiso|{seed}")
    for trial in range(attempts):
        if trial == 0:
            coeffs = [1] * len(basis)
        elif p == 0:
            coeffs = [rng.randint(-4, 4) for _ in basis]
        else:
            coeffs = [rng.randrange(p) for _ in basis]
        mat = build(coeffs)
        if mat_inverse(mat) is not None:
            return AModMorphism(m1, m2, mat, validate=False)
    if p and p ** len(basis) <= 4096:
        for coeffs in itertools.product(range(p), repeat=len(basis)):
            if not any(coeffs):
                continue
            mat = build(list(coeffs))
            if mat_inverse(mat) is not None:
                return AModMorphism(m1, m2, mat, validate=False)
    return None


def _minimal_polynomial(b):
    """Monic minimal polynomial coefficients [c_0, ..., c_{t-1}, 1] of b.

    Found as the first power of b that is a combination of the lower
    powers, flattened to one linear solve per degree.
    """
    d = b.rows
    field = b.field
    powers = [Matrix.identity(field, d)]
    while True:
        nxt = mat_mul(powers[-1], b)
        den = 1
        if field.char == 0:
            for p in powers:
                den = lcm(den, p.den)
        k = len(powers)
        nums = [0] * (d * d * k)
        for j, p in enumerate(powers):
            f = den // p.den
            for i in range(d * d):
                v = p.nums[i]
                if v:
                    nums[i * k + j] = f * v
        cols = Matrix(field, d * d, k, nums, den)
        rhs = Matrix(field, d * d, 1, list(nxt.nums), nxt.den)
        x = solve_linear(cols, rhs)
        if x is not None:
            coeffs = [-x.entry(i, 0) for i in range(k)]
            if field.char:
                coeffs = [v % field.char for v in coeffs]
            return coeffs + [Fraction(1) if field.char == 0 else 1]
        powers.append(nxt)
        if len(powers) > d + 1:
            raise ArithmeticError("minimal polynomial search exceeded the dimension")


def _poly_eval_scalar(coeffs, c, field):
    acc = Fraction(0) if field.char == 0 else 0
    for a in reversed(coeffs):
        acc = acc * c + a
        if field.char:
            acc %= field.char
    return acc


def _poly_derivative(coeffs, field):
    out = []
    for i in range(1, len(coeffs)):
        v = coeffs[i] * i
        out.append(v % field.char if field.char else v)
    return out


def _poly_divide_linear(coeffs, c, field):
    """Divide a monic polynomial by (x - c); the division is exact."""
    t = len(coeffs) - 1
    q = [None] * t
    carry = coeffs[t]
    for i in range(t - 1, -1, -1):
        q[i] = carry
        carry = coeffs[i] + c * carry
        if field.char:
            q[i] %= field.char
            carry %= field.char
    return q


def _poly_eval_matrix(coeffs, b):
    field = b.field
    d = b.rows
    acc = Matrix.zeros(field, d, d)
    for a in reversed(coeffs):
        acc = mat_mul(acc, b)
        if a:
            term = mat_scale(Matrix.identity(field, d), a)
            acc = mat_add(acc, term)
    return acc


def find_idempotent_summand(ring, cs, seed=0, tries=6):
    """A module summand of a free module split off a nontrivial idempotent.

    Searches the A-linear endomorphism algebra of seeded free modules: a
    basis element that is already idempotent, else an eigen-idempotent
    q(B)/q(c) at a simple root c of a random endomorphism's minimal
    polynomial.  Returns None when the budget is exhausted; absence is a
    search verdict, not a nonexistence proof.
    """
    field = ring.field
    g = cs.group
    for t in range(tries):
        y = random_rep(g, field, seed * 131 + t, 2 + (t % 2))
        free = free_module(ring, y)
        basis = module_hom_space(free, free)
        if len(basis) < 2:
            continue
        e_mat = _idempotent_from_basis(basis, free.dim, field, seed * 17 + t)
        if e_mat is None:
            continue
        e = Morphism(free.carrier, free.carrier, e_mat, validate=False, tag="summand")
        img, p, m = split_idempotent(e, free.carrier)
        eye_a = Matrix.identity(field, ring.dim)
        action = Morphism(
            tensor_obj(ring.carrier, img),
            img,
            mat_mul(p.matrix, mat_mul(free.action.matrix, mat_kron(eye_a, m.matrix))),
            validate=False,
        )
        return AModule(ring, img, action, validate=True, tag="summand")
    return None


def _idempotent_from_basis(basis, dim, field, seed):
    for b in basis:
        mat = b.matrix
        if mat.is_zero() or mat.is_identity():
            continue
        if mat_mul(mat, mat) == mat:
            return mat
    rng = random.Random(f"sepmonad|summand|{seed}")
    p = field.char
    if p == 0:
        candidates = [Fraction(v) for v in (0, 1, -1, 2, -2, 3, -3)]
        candidates += [Fraction(1, 2), Fraction(-1, 2), Fraction(3, 2)]
    else:
        candidates = list(range(p))
    for _ in range(8):
        if p == 0:
            coeffs = [rng.randint(-2, 2) for _ in basis]
        else:
            coeffs = [rng.randrange(p) for _ in basis]
        if not any(coeffs):
            continue
        bmat = Matrix.zeros(field, dim, dim)
        for c, b in zip(coeffs, basis):
            if c:
                bmat = mat_add(bmat, mat_scale(b.matrix, c))
        try:
            minpoly = _minimal_polynomial(bmat)
        except ArithmeticError:
            continue
        deriv = _poly_derivative(minpoly, field)
        for c in candidates:
            if _poly_eval_scalar(minpoly, c, field) != 0:
                continue
            if _poly_eval_scalar(deriv, c, field) == 0:
                continue
            q = _poly_divide_linear(minpoly, c, field)
            qc = _poly_eval_scalar(q, c, field)
            e_mat = _poly_eval_matrix(q, bmat)
            if field.char == 0:
                e_mat = mat_scale(e_mat, Fraction(1) / qc)
            else:
                e_mat = mat_scale(e_mat, pow(int(qc), p - 2, p))
            if e_mat.is_zero() or e_mat.is_identity():
                continue
            if mat_mul(e_mat, e_mat) != e_mat:
                continue
            return e_mat
    return None
