"""Finite-dimensional representations of a finite group over an exact field.

A Rep assigns one invertible matrix to every element of its carrier group
(a FiniteGroup or a Subgroup), with mat(identity) = I and
mat(a*b) = mat(a)*mat(b).  Construction validates the homomorphism law on
a generating set by breadth-first search, which implies it for all pairs.

The tensor product uses the fixed Kronecker convention of ``exactlin``,
which makes the monoidal structure strict: associators and unitors are
identity matrices, and (x (x) y) (x) z equals x (x) (y (x) z) entrywise.
"""

import random

from .exactlin import (
    Matrix,
    mat_add,
    mat_inverse,
    mat_kron,
    mat_mul,
    mat_scale,
    mat_sub,
    nullspace_basis,
    vstack,
)


class RepError(ValueError):
    pass


def _bfs_pairs(carrier):
    """Yield (x, g, x*g) covering the carrier from its generators."""
    gens = carrier.gens
    seen = {0}
    queue = [0]
    while queue:
        x = queue.pop()
        for g in gens:
            y = carrier.mul(x, g)
            yield x, g, y
            if y not in seen:
                seen.add(y)
                queue.append(y)
    if len(seen) != carrier.order:
        raise RepError("generator set does not generate the carrier")


class Rep:
    """A representation: dimension plus one matrix per carrier element."""

    def __init__(self, carrier, field, mats, validate=True, tag=""):
        self.carrier = carrier
        self.field = field
        self.mats = dict(mats)
        self.tag = tag
        if set(self.mats) != set(carrier.elements):
            raise RepError("need exactly one matrix per carrier element")
        self.dim = self.mats[0].rows
        if validate:
            self._validate()

    def _validate(self):
        for i, m in self.mats.items():
            if m.rows != self.dim or m.cols != self.dim or m.field != self.field:
                raise RepError(f"matrix at element {i} has wrong shape or field")
        if not self.mats[0].is_identity():
            raise RepError("identity element must act as the identity matrix")
        for x, g, y in _bfs_pairs(self.carrier):
            if self.mats[y] != mat_mul(self.mats[x], self.mats[g]):
                raise RepError(f"homomorphism law fails at pair ({x}, {g})")

    def mat(self, i):
        return self.mats[i]

    def __repr__(self):
        kind = "G" if not hasattr(self.carrier, "parent") else "H"
        return f"<Rep dim {self.dim} over {self.field} ({kind}-side{': ' + self.tag if self.tag else ''})>"


def rep_equal(a, b):
    return (
        a.carrier is b.carrier
        and a.field == b.field
        and a.dim == b.dim
        and all(a.mats[i] == b.mats[i] for i in a.carrier.elements)
    )


class Morphism:
    """An equivariant matrix between the spaces of two representations."""

    def __init__(self, source, target, matrix, validate=True, tag=""):
        if source.carrier is not target.carrier:
            raise RepError("source and target live over different carriers")
        if source.field != target.field or matrix.field != source.field:
            raise RepError("field mismatch in morphism")
        if matrix.rows != target.dim or matrix.cols != source.dim:
            raise RepError(
                f"matrix is {matrix.rows}x{matrix.cols}, expected {target.dim}x{source.dim}"
            )
        self.source = source
        self.target = target
        self.matrix = matrix
        self.tag = tag
        if validate:
            for g in source.carrier.gens:
                if mat_mul(matrix, source.mat(g)) != mat_mul(target.mat(g), matrix):
                    raise RepError(f"equivariance fails at generator {g}")

    def __repr__(self):
        return f"<Morphism {self.source.dim}->{self.target.dim}{': ' + self.tag if self.tag else ''}>"


def identity_mor(x):
    return Morphism(x, x, Matrix.identity(x.field, x.dim), validate=False, tag="id")


def zero_mor(x, y):
    return Morphism(x, y, Matrix.zeros(x.field, y.dim, x.dim), validate=False, tag="0")


def compose(f, g):
    """The composite f after g."""
    if g.target.carrier is not f.source.carrier or g.target.dim != f.source.dim:
        raise RepError("composition mismatch")
    return Morphism(g.source, f.target, mat_mul(f.matrix, g.matrix), validate=False)


def unit_rep(carrier, field):
    """The one-dimensional trivial representation."""
    one = Matrix.identity(field, 1)
    return Rep(carrier, field, {i: one for i in carrier.elements}, validate=False, tag="1")


def tensor_obj(x, y):
    """Tensor product with diagonal action (Kronecker on each element)."""
    if x.carrier is not y.carrier:
        raise RepError("tensor factors live over different carriers")
    if x.field != y.field:
        raise RepError("tensor factors over different fields")
    mats = {i: mat_kron(x.mat(i), y.mat(i)) for i in x.carrier.elements}
    tag = f"({x.tag})(x)({y.tag})" if x.tag or y.tag else ""
    return Rep(x.carrier, x.field, mats, validate=False, tag=tag)


def tensor_mor(f, g):
    """Kronecker product of morphisms, between the tensor objects."""
    return Morphism(
        tensor_obj(f.source, g.source),
        tensor_obj(f.target, g.target),
        mat_kron(f.matrix, g.matrix),
        validate=False,
    )


def symmetry(x, y):
    """The swap isomorphism x (x) y -> y (x) x permuting Kronecker factors."""
    dx, dy = x.dim, y.dim
    field = x.field
    nums = [0] * (dx * dy * dx * dy)
    cols = dx * dy
    for i in range(dx):
        for j in range(dy):
            nums[(j * dx + i) * cols + (i * dy + j)] = 1
    mat = Matrix(field, dx * dy, dx * dy, nums, 1, _normalized=True)
    return Morphism(tensor_obj(x, y), tensor_obj(y, x), mat, validate=False, tag="swap")


def restrict(x, h):
    """View a representation of G as a representation of the subgroup h."""
    if hasattr(x.carrier, "parent"):
        raise RepError("restriction starts from a full-group representation")
    mats = {i: x.mats[i] for i in h.elements}
    return Rep(h, x.field, mats, validate=False, tag=f"Res({x.tag})" if x.tag else "Res")


def restrict_mor(f, h):
    return Morphism(restrict(f.source, h), restrict(f.target, h), f.matrix, validate=False)


def hom_space_basis(x, y):
    """A deterministic basis of the space of equivariant maps x -> y.

    Solved as the nullspace of the stacked constraints
    T * x.mat(g) - y.mat(g) * T = 0 over the carrier's generators.
    """
    if x.carrier is not y.carrier or x.field != y.field:
        raise RepError("hom space needs a common carrier and field")
    dx, dy = x.dim, y.dim
    field = x.field
    gens = x.carrier.gens
    if not gens:
        cols = Matrix.identity(field, dy * dx)
    else:
        eye_x = Matrix.identity(field, dx)
        eye_y = Matrix.identity(field, dy)
        blocks = [
            mat_sub(mat_kron(eye_y, x.mat(g).transpose()), mat_kron(y.mat(g), eye_x))
            for g in gens
        ]
        cols = nullspace_basis(vstack(blocks))
    basis = []
    for k in range(cols.cols):
        nums = [cols.nums[v * cols.cols + k] for v in range(dy * dx)]
        mat = Matrix(field, dy, dx, nums, cols.den)
        basis.append(Morphism(x, y, mat, validate=True))
    return basis


def random_hom(x, y, seed):
    """A seeded element of the hom space (zero when the space is zero)."""
    basis = hom_space_basis(x, y)
    if not basis:
        return zero_mor(x, y)
    rng = random.Random(f"sepmonad|hom|{seed}")
    p = x.field.char
    while True:
        if p == 0:
            coeffs = [rng.randint(-3, 3) for _ in basis]
        else:
            coeffs = [rng.randrange(p) for _ in basis]
        if any(coeffs):
            break
    total = Matrix.zeros(x.field, y.dim, x.dim)
    for c, b in zip(coeffs, basis):
        if c:
            total = mat_add(total, mat_scale(b.matrix, c))
    return Morphism(x, y, total, validate=False)


def find_iso(x, y, seed=0, attempts=32):
    """An invertible equivariant map x -> y, or None if none was found.

    Random linear combinations of the hom basis, deterministic per seed;
    over a small prime field the search falls back to exhausting all
    coefficient tuples, so absence is definitive there.
    """
    if x.dim != y.dim:
        return None
    basis = hom_space_basis(x, y)
    if not basis:
        return None
    field = x.field
    p = field.char

    def build(coeffs):
        total = Matrix.zeros(field, y.dim, x.dim)
        for c, b in zip(coeffs, basis):
            if c:
                total = mat_add(total, mat_scale(b.matrix, c))
        return total

    rng = random.Random(f"sepmonad|iso|{seed}")
    for trial in range(attempts):
        if trial == 0:
            coeffs = [1] * len(basis)
        elif p == 0:
            coeffs = [rng.randint(-4, 4) for _ in basis]
        else:
            coeffs = [rng.randrange(p) for _ in basis]
        mat = build(coeffs)
        if mat_inverse(mat) is not None:
            return Morphism(x, y, mat, validate=False)
    if p and p ** len(basis) <= 4096:
        import itertools

        for coeffs in itertools.product(range(p), repeat=len(basis)):
            if not any(coeffs):
                continue
            mat = build(list(coeffs))
            if mat_inverse(mat) is not None:
                return Morphism(x, y, mat, validate=False)
    return None


def _closure_in(carrier, seed_elems):
    have = set(seed_elems) | {0}
    queue = list(have)
    while queue:
        x = queue.pop()
        for y in tuple(have):
            for z in (carrier.mul(x, y), carrier.mul(y, x)):
                if z not in have:
                    have.add(z)
                    queue.append(z)
    return sorted(have)


def _perm_action_on_cosets(carrier, k_elems, field):
    """Matrices of the left action g . e_C = e_{C g^{-1}} on cosets of K."""
    elems = carrier.elements
    coset_of = {}
    reps = []
    for x in elems:
        if x in coset_of:
            continue
        members = sorted(carrier.mul(h, x) for h in k_elems)
        idx = len(reps)
        reps.append(members[0])
        for y in members:
            coset_of[y] = idx
    d = len(reps)
    mats = {}
    for g in elems:
        ginv = carrier.inverse(g)
        nums = [0] * (d * d)
        for c in range(d):
            nums[coset_of[carrier.mul(reps[c], ginv)] * d + c] = 1
        mats[g] = Matrix(field, d, d, nums, 1, _normalized=True)
    return d, mats


def random_rep(carrier, field, seed, budget):
    """A seeded representation of dimension exactly ``budget``.

    Direct sum of permutation representations on coset spaces of randomly
    generated subgroups, conjugated by a random unimodular integer matrix.
    Deterministic for a fixed (seed, budget, carrier, field).
    """
    if budget < 1:
        raise RepError("size budget must be at least 1")
    rng = random.Random(f"sepmonad|rep|{seed}|{budget}")
    elems = list(carrier.elements)
    blocks = []
    total = 0
    while total < budget:
        remaining = budget - total
        chosen = None
        for _ in range(4):
            k = rng.randint(0, min(2, len(elems) - 1))
            k_elems = _closure_in(carrier, rng.sample(elems, k) if k else [])
            if carrier.order // len(k_elems) <= remaining:
                chosen = k_elems
                break
        if chosen is None:
            chosen = elems
        d, mats = _perm_action_on_cosets(carrier, chosen, field)
        blocks.append((d, mats))
        total += d
    mats = {}
    for g in carrier.elements:
        nums = [0] * (total * total)
        off = 0
        for d, bm in blocks:
            src = bm[g].nums
            for i in range(d):
                base = (off + i) * total + off
                sbase = i * d
                for j in range(d):
                    if src[sbase + j]:
                        nums[base + j] = src[sbase + j]
            off += d
        mats[g] = Matrix(field, total, total, nums, 1, _normalized=True)
    # Conjugate by a product of integer shears (determinant 1, so the
    # conjugator stays invertible over every field).
    u = [[1 if i == j else 0 for j in range(total)] for i in range(total)]
    for _ in range(2 * total):
        i = rng.randrange(total)
        j = rng.randrange(total)
        if i == j:
            continue
        c = rng.choice((-2, -1, 1, 2))
        u[i] = [a + c * b for a, b in zip(u[i], u[j])]
    umat = Matrix.from_rows(field, u)
    uinv = mat_inverse(umat)
    conj = {g: mat_mul(umat, mat_mul(m, uinv)) for g, m in mats.items()}
    dims = "+".join(str(d) for d, _ in blocks)
    return Rep(carrier, field, conj, validate=True, tag=f"rand[{dims}|seed={seed}]")
