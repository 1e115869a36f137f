"""The full verification suite for one (group, subgroup, field) case.

Builds seeded families of representations, morphisms, modules, and monads
and machine-checks every structural identity as exact matrix equality, in
dependency order: group axioms first, the module equivalence last.  Every
failing check carries a serialized witness.  Reports are deterministic for
a fixed configuration and tool version; only the timing fields vary.
"""

import hashlib
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property

from ._version import __version__
from .backend import backend_name
from .exactlin import Matrix, mat_kron, mat_mul, parse_field
from .groups import (
    GroupError,
    factorize,
    group_from_cayley_table,
    load_group_json,
    right_cosets,
    subgroup_generated,
)
from .repcat import (
    Morphism,
    Rep,
    RepError,
    compose,
    random_hom,
    random_rep,
    restrict,
    restrict_mor,
    symmetry,
    tensor_obj,
    unit_rep,
)
from .adjunction import (
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
from .monadring import (
    RingAxiomError,
    RingObject,
    canonical_ring_iso,
    monad_from_adjunction,
    monad_from_ring,
    monad_law_failures,
    monad_morphism_failures,
    monad_separability_failures,
    pi_as_monad_morphism,
    ring_axiom_failures,
    ring_from_adjunction,
    ring_iso_failures,
    standard_ring,
    transport_section,
)
from .eilenberg import (
    EMError,
    ModuleAxiomError,
    em_comparison,
    em_counit_iso,
    em_inverse_split,
    em_mor,
    em_unit_iso,
    extension_of_scalars_iso,
    find_idempotent_summand,
    free_module,
)
from .presets import load_preset, preset_names

REPORT_VERSION = 1
WORKERS_ENV = "SEPMONAD_WORKERS"

CORRUPTIONS = ("ring_mul", "xi_block", "rep_action")

# Ids in dependency order; later checks assume the structures the earlier
# ones certify.
CHECK_IDS = (
    "group_axioms",
    "rep_hom_sanity",
    "triangle_identities",
    "counit_section",
    "lambda_laws",
    "projection_formula",
    "monad_morphism",
    "ring_axioms",
    "monad_laws",
    "module_idempotent",
    "em_unit_roundtrip",
    "em_counit_roundtrip",
    "extension_of_scalars",
)

_DOMAIN_ERRORS = (GroupError, RepError, RingAxiomError, ModuleAxiomError, EMError)

# Matrices above this entry count are reported by digest, not by value.
_WITNESS_ENTRY_CAP = 4096


class ConfigError(ValueError):
    """The requested configuration cannot be built."""


class InternalError(RuntimeError):
    """A check crashed in a way that is a bug, not a failed identity."""


@dataclass
class SuiteConfig:
    group: str = "s3"
    subgroup: tuple = None
    field: str = "q"
    seed: int = 0
    family_size: int = 10
    checks: tuple = ()
    corruption: str = None


@dataclass
class CheckResult:
    id: str
    status: str
    witness: dict
    ms: float


class SuiteReport:
    def __init__(self, env, checks):
        self.env = env
        self.checks = checks

    @property
    def passed(self):
        return all(c.status == "pass" for c in self.checks)

    def to_dict(self):
        return {
            "version": REPORT_VERSION,
            "env": self.env,
            "checks": [
                {"id": c.id, "status": c.status, "witness": c.witness, "ms": c.ms}
                for c in self.checks
            ],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self):
        e = self.env
        lines = [
            f"verify group={e['group']} |G|={e['group_order']} |H|={e['subgroup_order']} "
            f"index={e['index']} field={e['field']} seed={e['seed']} "
            f"family={e['family_size']} backend={e['backend']}"
        ]
        for c in self.checks:
            lines.append(f"  [{'PASS' if c.status == 'pass' else 'FAIL'}] {c.id:<24} {c.ms:9.1f} ms")
            if c.witness is not None:
                lines.append(f"         witness: {c.witness.get('kind')}: {c.witness.get('context')}")
        done = sum(1 for c in self.checks if c.status == "pass")
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'} ({done}/{len(self.checks)} checks)")
        return "\n".join(lines)


def _mat_payload(m):
    if m is None:
        return None
    if not isinstance(m, Matrix):
        return {"value": repr(m)}
    if m.rows * m.cols <= _WITNESS_ENTRY_CAP:
        return {"rows": m.rows, "cols": m.cols, "den": m.den, "nums": list(m.nums)}
    digest = hashlib.sha256(repr((m.rows, m.cols, m.den, m.nums)).encode()).hexdigest()
    return {"rows": m.rows, "cols": m.cols, "den": m.den, "sha256": digest}


def _witness(kind, context, lhs=None, rhs=None, **extra):
    w = {"kind": kind, "context": context}
    if lhs is not None or rhs is not None:
        w["lhs"] = _mat_payload(lhs)
        w["rhs"] = _mat_payload(rhs)
    for k, v in extra.items():
        w[k] = v
    return w


def _witness_from_error(kind, context, exc):
    if isinstance(exc, GroupError):
        return _witness(kind, f"{context}: {exc}", violations=exc.violations[:8])
    failures = getattr(exc, "failures", None)
    if failures:
        name, lhs, rhs = failures[0]
        return _witness(kind, f"{context}: {exc} [{name}]", lhs, rhs)
    pair = getattr(exc, "witness", None)
    if isinstance(pair, tuple) and len(pair) == 2:
        return _witness(kind, f"{context}: {exc}", pair[0], pair[1])
    return _witness(kind, f"{context}: {exc}")


def _from_failures(kind, context, failures):
    out = []
    for name, lhs, rhs in failures:
        out.append(_witness(kind, f"{context}: {name}", lhs, rhs))
    return out


class Ctx:
    """Shared case state: the group data, field, and seeded families.

    Families are cached lazily so that a restricted check selection only
    pays for what it uses.  All randomness is derived from the seed, so
    two runs of the same configuration build identical objects.
    """

    def __init__(self, cfg):
        if cfg.family_size < 1:
            raise ConfigError("family size must be at least 1")
        if cfg.corruption is not None and cfg.corruption not in CORRUPTIONS:
            raise ConfigError(f"unknown corruption {cfg.corruption!r}; pick from {CORRUPTIONS}")
        for cid in cfg.checks:
            if cid not in CHECK_IDS:
                raise ConfigError(f"unknown check id {cid!r}; pick from {', '.join(CHECK_IDS)}")
        try:
            self.field = parse_field(cfg.field)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        try:
            if cfg.group in preset_names():
                group, default_sub = load_preset(cfg.group)
            elif os.path.exists(cfg.group):
                group, default_sub = load_group_json(cfg.group), None
            else:
                raise ConfigError(
                    f"group {cfg.group!r} is neither a preset ({', '.join(preset_names())}) "
                    "nor an existing file"
                )
            sub_gens = cfg.subgroup if cfg.subgroup is not None else default_sub
            if sub_gens is None:
                sub_gens = group.gens
            self.group = group
            self.h = subgroup_generated(group, tuple(sub_gens))
            self.cs = right_cosets(group, self.h)
        except GroupError as exc:
            raise ConfigError(f"cannot build the requested case: {exc}") from exc
        self.cfg = cfg
        self.seed = cfg.seed
        self.corruption = cfg.corruption

    def enabled(self, cid):
        return not self.cfg.checks or cid in self.cfg.checks

    def env(self):
        return {
            "group": self.cfg.group,
            "group_order": self.group.order,
            "subgroup": list(self.h.gens),
            "subgroup_order": self.h.order,
            "index": self.cs.index,
            "field": self.cfg.field,
            "seed": self.seed,
            "family_size": self.cfg.family_size,
            "tool_version": __version__,
            "backend": backend_name(),
        }

    # ---- seeded families ----

    @cached_property
    def hreps(self):
        cyc = (1, 2, 3, 4, 6, 8, 12)
        out = [
            random_rep(self.h, self.field, f"{self.seed}|h{i}", cyc[i % len(cyc)])
            for i in range(self.cfg.family_size)
        ]
        if self.corruption == "rep_action":
            out[0] = _corrupt_rep(out[0])
        return out

    @cached_property
    def hmors(self):
        reps = self.hreps
        n = len(reps)
        return [
            random_hom(reps[i], reps[(i + 1) % n], f"{self.seed}|hm{i}") for i in range(n)
        ]

    @cached_property
    def greps(self):
        cyc = (1, 2, 3, 4, 6, 8)
        count = max(3, self.cfg.family_size // 2)
        return [
            random_rep(self.group, self.field, f"{self.seed}|g{i}", cyc[i % len(cyc)])
            for i in range(count)
        ]

    @cached_property
    def gmors(self):
        reps = self.greps
        n = len(reps)
        return [
            random_hom(reps[i], reps[(i + 1) % n], f"{self.seed}|gm{i}") for i in range(n)
        ]

    @cached_property
    def lam_reps(self):
        cyc = (1, 2, 3, 4)
        count = max(3, min(6, self.cfg.family_size))
        return [
            random_rep(self.h, self.field, f"{self.seed}|l{i}", cyc[i % len(cyc)])
            for i in range(count)
        ]

    @cached_property
    def lam_homs(self):
        reps = self.lam_reps
        n = len(reps)
        return [
            random_hom(reps[i], reps[(i + 1) % n], f"{self.seed}|lm{i}") for i in range(n)
        ]

    @cached_property
    def pi_pairs(self):
        cyc = ((1, 2), (2, 1), (2, 3), (3, 2), (2, 2), (4, 3), (3, 4), (6, 2), (4, 4))
        budgets = [cyc[i % len(cyc)] for i in range(self.cfg.family_size - 1)]
        budgets.append((12, 12))
        out = []
        for i, (by, bx) in enumerate(budgets):
            y = random_rep(self.h, self.field, f"{self.seed}|py{i}", by)
            x = random_rep(self.group, self.field, f"{self.seed}|px{i}", bx)
            out.append((y, x))
        return out

    @cached_property
    def mm_objs(self):
        cap = max(1, min(12, 432 // self.cs.index ** 2))
        cyc = tuple(b for b in (1, 2, 3, 4, 6, 8, 12) if b <= cap) or (1,)
        return [
            random_rep(self.group, self.field, f"{self.seed}|mm{i}", cyc[i % len(cyc)])
            for i in range(self.cfg.family_size)
        ]

    @cached_property
    def monad_objs(self):
        cap = max(1, min(8, 432 // self.cs.index ** 3))
        cyc = tuple(b for b in (1, 2, 3, 4, 6, 8) if b <= cap) or (1,)
        count = max(3, self.cfg.family_size // 2)
        return [
            random_rep(self.group, self.field, f"{self.seed}|mo{i}", cyc[i % len(cyc)])
            for i in range(count)
        ]

    @cached_property
    def ext_reps(self):
        cyc = (1, 2, 3, 4)
        count = max(3, self.cfg.family_size // 2)
        return [
            random_rep(self.group, self.field, f"{self.seed}|e{i}", cyc[i % len(cyc)])
            for i in range(count)
        ]

    @cached_property
    def ext_homs(self):
        reps = self.ext_reps
        n = len(reps)
        return [
            random_hom(reps[i], reps[(i + 1) % n], f"{self.seed}|em{i}") for i in range(n)
        ]

    @cached_property
    def ring(self):
        ring = standard_ring(self.cs, self.field)
        if self.corruption == "ring_mul":
            ring = _corrupt_ring(ring)
        return ring

    @cached_property
    def ring_adj(self):
        return ring_from_adjunction(self.cs, self.field)

    @cached_property
    def iso(self):
        return canonical_ring_iso(self.cs, self.field, standard=self.ring, adjunction=self.ring_adj)

    @cached_property
    def modules(self):
        half = (self.cfg.family_size + 1) // 2
        cyc = (1, 2, 3, 4)
        out = []
        for i in range(half):
            y = random_rep(self.group, self.field, f"{self.seed}|mf{i}", cyc[i % len(cyc)])
            out.append(free_module(self.ring, y, tag=f"free[{y.tag}]"))
        for i in range(half):
            n = random_rep(self.h, self.field, f"{self.seed}|mc{i}", cyc[i % len(cyc)])
            out.append(em_comparison(n, self.cs, self.ring, tag=f"E[{n.tag}]"))
        summand = find_idempotent_summand(self.ring, self.cs, seed=self.seed)
        if summand is not None:
            out.append(summand)
        return out


def _corrupt_rep(rep):
    """Flip one entry of one action matrix; rebuilt without validation."""
    mats = {g: rep.mat(g) for g in rep.carrier.elements}
    m = mats[0]
    nums = list(m.nums)
    nums[0] += m.den
    mats[0] = Matrix(m.field, m.rows, m.cols, nums, m.den)
    return Rep(rep.carrier, rep.field, mats, validate=False, tag=f"{rep.tag}|corrupted")


def _corrupt_ring(ring):
    """Zero the structure constant mu(e_0 (x) e_0); rebuilt unvalidated."""
    m = ring.mul.matrix
    nums = list(m.nums)
    nums[0] = 0
    mul = Morphism(
        ring.mul.source,
        ring.mul.target,
        Matrix(m.field, m.rows, m.cols, nums, m.den),
        validate=False,
    )
    return RingObject(ring.carrier, mul, ring.unit, ring.section, validate=False)


def _need(out, kind, context, lhs, rhs):
    if lhs != rhs:
        out.append(_witness(kind, context, lhs, rhs))


def _need_identity(out, kind, context, mat):
    if not mat.is_identity():
        out.append(_witness(kind, context, mat, Matrix.identity(mat.field, mat.rows)))


# ---- the thirteen checks ----


def _check_group_axioms(ctx):
    out = []
    g, h, cs = ctx.group, ctx.h, ctx.cs
    try:
        group_from_cayley_table(g.table, g.labels)
    except GroupError as exc:
        out.append(_witness_from_error("group_axioms", "multiplication table", exc))
    for a in h.elements:
        if h.inverse(a) not in h:
            out.append(_witness("group_axioms", f"subgroup not closed under inverse at {a}"))
        for b in h.elements:
            if h.mul(a, b) not in h:
                out.append(_witness("group_axioms", f"subgroup not closed at ({a},{b})"))
    covered = sorted(x for coset in cs.cosets for x in coset)
    if covered != list(g.elements):
        out.append(_witness("group_axioms", "cosets do not partition the group"))
    if cs.index * h.order != g.order:
        out.append(_witness("group_axioms", "index * |H| != |G|"))
    if cs.reps[0] != 0:
        out.append(_witness("group_axioms", "trivial coset representative is not the identity"))
    for i, r in enumerate(cs.reps):
        if cs.coset_of[r] != i:
            out.append(_witness("group_axioms", f"representative {r} not in its own coset"))
    for x in g.elements:
        hh, r = factorize(cs, x)
        if hh not in h or r != cs.reps[cs.coset_of[x]] or g.mul(hh, r) != x:
            out.append(_witness("group_axioms", f"factorization x = h*r fails at {x}"))
    return out


def _check_rep_hom_sanity(ctx):
    out = []
    for rep in ctx.hreps + ctx.greps:
        try:
            Rep(rep.carrier, rep.field, {g: rep.mat(g) for g in rep.carrier.elements},
                validate=True, tag=rep.tag)
        except RepError as exc:
            out.append(_witness_from_error("rep_hom_sanity", f"rep {rep.tag}", exc))
    for i, f in enumerate(ctx.hmors + ctx.gmors):
        try:
            Morphism(f.source, f.target, f.matrix, validate=True)
        except RepError as exc:
            out.append(_witness_from_error("rep_hom_sanity", f"morphism {i}", exc))
    return out


def _check_triangle_identities(ctx):
    out = []
    cs, h = ctx.cs, ctx.h
    etas = []
    for x in ctx.greps:
        rx = restrict(x, h)
        ax = coind_obj(rx, cs)
        eta = unit_eta(x, cs, target=ax)
        eps = counit_eps(rx, cs, coind=ax)
        _need_identity(out, "triangle_counit_unit", f"eps . Res(eta) at {x.tag}",
                       mat_mul(eps.matrix, eta.matrix))
        c = ind_counit(x, cs, source=ax)
        xi = section_xi(rx, cs, coind=ax)
        _need_identity(out, "triangle_ind", f"Res(c) . xi at {x.tag}",
                       mat_mul(c.matrix, xi.matrix))
        etas.append(eta)
    for n in ctx.hreps:
        cn = coind_obj(n, cs)
        rcn = restrict(cn, h)
        ccn = coind_obj(rcn, cs)
        eps_n = counit_eps(n, cs, coind=cn)
        ceps = coind_mor(eps_n, cs, source=ccn, target=cn)
        eta_cn = unit_eta(cn, cs, target=ccn)
        _need_identity(out, "triangle_unit_counit", f"Coind(eps) . eta at {n.tag}",
                       mat_mul(ceps.matrix, eta_cn.matrix))
        c_cn = ind_counit(cn, cs, source=ccn)
        cxi = coind_mor(section_xi(n, cs, coind=cn), cs, source=cn, target=ccn)
        _need_identity(out, "triangle_ind", f"c . Coind(xi) at {n.tag}",
                       mat_mul(c_cn.matrix, cxi.matrix))
    eye = Matrix.identity(ctx.field, cs.index)
    for i, f in enumerate(ctx.gmors):
        rf = restrict_mor(f, h)
        lhs = mat_mul(mat_kron(eye, rf.matrix), etas[i].matrix)
        rhs = mat_mul(etas[(i + 1) % len(etas)].matrix, f.matrix)
        _need(out, "unit_naturality", f"gmor {i}", lhs, rhs)
    for i, f in enumerate(ctx.hmors):
        m, n = f.source, f.target
        lhs = mat_mul(counit_eps(n, cs).matrix, mat_kron(eye, f.matrix))
        rhs = mat_mul(f.matrix, counit_eps(m, cs).matrix)
        _need(out, "counit_naturality", f"hmor {i}", lhs, rhs)
    return out


def _check_counit_section(ctx):
    out = []
    cs = ctx.cs
    eye = Matrix.identity(ctx.field, cs.index)
    xis = []
    for i, n in enumerate(ctx.hreps):
        xi = section_xi(n, cs)
        if ctx.corruption == "xi_block" and i == 0:
            nums = list(xi.matrix.nums)
            nums[0] = 0
            xi = Morphism(
                xi.source, xi.target,
                Matrix(ctx.field, xi.matrix.rows, xi.matrix.cols, nums, xi.matrix.den),
                validate=False,
            )
        eps = counit_eps(n, cs)
        _need_identity(out, "counit_section", f"eps . xi at {n.tag}",
                       mat_mul(eps.matrix, xi.matrix))
        xis.append(xi)
    for i, f in enumerate(ctx.hmors):
        lhs = mat_mul(mat_kron(eye, f.matrix), xis[i].matrix)
        rhs = mat_mul(xis[(i + 1) % len(xis)].matrix, f.matrix)
        _need(out, "section_naturality", f"hmor {i}", lhs, rhs)
    return out


def _check_lambda_laws(ctx):
    out = []
    cs = ctx.cs
    field = ctx.field
    reps = ctx.lam_reps
    n = len(reps)
    one_h = unit_rep(ctx.h, field)
    iota = lax_iota(cs, field)
    for i, x in enumerate(reps):
        y = reps[(i + 1) % n]
        lam = lax_lambda(x, y, cs)
        comp = lax_lambda_composite(x, y, cs)
        _need(out, "lambda_closed_form", f"pair ({x.tag},{y.tag})", lam.matrix, comp.matrix)
        cx = coind_obj(x, cs)
        eye_cx = Matrix.identity(field, cx.dim)
        left_unit = mat_mul(lax_lambda(one_h, x, cs).matrix, mat_kron(iota.matrix, eye_cx))
        _need_identity(out, "lambda_left_unit", f"at {x.tag}", left_unit)
        right_unit = mat_mul(lax_lambda(x, one_h, cs).matrix, mat_kron(eye_cx, iota.matrix))
        _need_identity(out, "lambda_right_unit", f"at {x.tag}", right_unit)
        # symmetry square: Coind(swap) . lambda = lambda' . swap
        lam_yx = lax_lambda(y, x, cs)
        cy = coind_obj(y, cs)
        tau_top = symmetry(cx, cy)
        tau_low = symmetry(x, y)
        lhs = mat_mul(mat_kron(Matrix.identity(field, cs.index), tau_low.matrix), lam.matrix)
        rhs = mat_mul(lam_yx.matrix, tau_top.matrix)
        _need(out, "lambda_symmetry", f"pair ({x.tag},{y.tag})", lhs, rhs)
    x, y, z = reps[0], reps[1 % n], reps[2 % n]
    lam_xy = lax_lambda(x, y, cs)
    lam_yz = lax_lambda(y, z, cs)
    cxd = cs.index * x.dim
    czd = cs.index * z.dim
    lhs = mat_mul(
        lax_lambda(tensor_obj(x, y), z, cs).matrix,
        mat_kron(lam_xy.matrix, Matrix.identity(field, czd)),
    )
    rhs = mat_mul(
        lax_lambda(x, tensor_obj(y, z), cs).matrix,
        mat_kron(Matrix.identity(field, cxd), lam_yz.matrix),
    )
    _need(out, "lambda_associativity", f"triple ({x.tag},{y.tag},{z.tag})", lhs, rhs)
    eye = Matrix.identity(field, cs.index)
    for i, f in enumerate(ctx.lam_homs):
        g = ctx.lam_homs[(i + 1) % n]
        # f: reps[i] -> reps[i+1], g: reps[i+1] -> reps[i+2]
        lam_src = lax_lambda(f.source, g.source, cs)
        lam_tgt = lax_lambda(f.target, g.target, cs)
        lhs = mat_mul(lam_tgt.matrix, mat_kron(mat_kron(eye, f.matrix), mat_kron(eye, g.matrix)))
        rhs = mat_mul(mat_kron(eye, mat_kron(f.matrix, g.matrix)), lam_src.matrix)
        _need(out, "lambda_naturality", f"homs ({i},{(i + 1) % n})", lhs, rhs)
    return out


def _check_projection_formula(ctx):
    out = []
    cs, h = ctx.cs, ctx.h
    field = ctx.field
    index = cs.index
    for k, (y, x) in enumerate(ctx.pi_pairs):
        cy = coind_obj(y, cs)
        src = tensor_obj(cy, x)
        tgt = coind_obj(tensor_obj(y, restrict(x, h)), cs)
        pi = projection_pi(y, x, cs, source=src, target=tgt)
        pinv = projection_pi_inverse(y, x, cs, source=tgt, target=src)
        _need_identity(out, "projection_invertible", f"pi . pi_inv at pair {k}",
                       mat_mul(pi.matrix, pinv.matrix))
        _need_identity(out, "projection_invertible", f"pi_inv . pi at pair {k}",
                       mat_mul(pinv.matrix, pi.matrix))
        if index ** 3 * (y.dim * x.dim) ** 2 <= 1_500_000:
            _need(out, "projection_closed_form", f"pair {k}",
                  pi.matrix, projection_pi_composite_matrix(y, x, cs))
        if y.dim * x.dim <= 6:
            try:
                Morphism(src, tgt, pi.matrix, validate=True)
            except RepError as exc:
                out.append(_witness_from_error("projection_equivariance", f"pair {k}", exc))
    for n in ctx.lam_reps[:2]:
        rho = rho_product_iso(n, cs)
        if not rho.is_identity():
            out.append(_witness("projection_strictness", f"rho at {n.tag}", rho,
                                Matrix.identity(field, rho.rows)))
        strict = coind_obj(tensor_obj(unit_rep(h, field), n), cs)
        plain = coind_obj(n, cs)
        for g in ctx.group.gens:
            _need(out, "projection_strictness", f"Coind(1 (x) n) = Coind(n) at {n.tag}, g={g}",
                  strict.mat(g), plain.mat(g))
    return out


def _check_monad_morphism(ctx):
    mm = pi_as_monad_morphism(ctx.cs, ctx.field, ring=ctx.ring, iso=ctx.iso)
    out = []
    for x in ctx.mm_objs:
        out.extend(_from_failures("monad_morphism", f"at {x.tag}",
                                  monad_morphism_failures(mm, x)))
    return out


def _check_ring_axioms(ctx):
    out = []
    cs, field = ctx.cs, ctx.field
    std = ctx.ring
    out.extend(_from_failures("ring_axioms", "standard ring", ring_axiom_failures(std)))
    if std.dim != cs.index:
        out.append(_witness("ring_axioms", f"ring dimension {std.dim} != index {cs.index}"))
    try:
        adj = ctx.ring_adj
    except RingAxiomError as exc:
        out.append(_witness_from_error("ring_axioms", "adjunction ring", exc))
        return out
    out.extend(_from_failures("ring_axioms", "adjunction ring", ring_axiom_failures(adj)))
    try:
        iso = ctx.iso
    except RingAxiomError as exc:
        out.append(_witness_from_error("ring_axioms", "canonical ring isomorphism", exc))
        return out
    out.extend(_from_failures("ring_axioms", "canonical map", ring_iso_failures(std, adj, iso)))
    try:
        transported = transport_section(std, adj, iso)
    except (RingAxiomError, ModuleAxiomError) as exc:
        out.append(_witness_from_error("ring_axioms", "transported section", exc))
        return out
    out.extend(_from_failures("ring_axioms", "transported ring", ring_axiom_failures(transported)))
    return out


def _check_monad_laws(ctx):
    out = []
    cs = ctx.cs
    mon_adj = monad_from_adjunction(cs)
    try:
        mon_ring = monad_from_ring(ctx.ring)
    except RingAxiomError as exc:
        out.append(_witness_from_error("monad_laws", "tensor monad", exc))
        mon_ring = None
    for x in ctx.monad_objs:
        out.extend(_from_failures("monad_laws", f"coinduction monad at {x.tag}",
                                  monad_law_failures(mon_adj, x)))
        if mon_ring is not None:
            out.extend(_from_failures("monad_laws", f"tensor monad at {x.tag}",
                                      monad_law_failures(mon_ring, x)))
        out.extend(_from_failures("monad_separability", f"at {x.tag}",
                                  monad_separability_failures(cs, mon_adj, x)))
    return out


def _check_module_idempotent(ctx):
    out = []
    for mod in ctx.modules:
        try:
            img, p, m, e = em_inverse_split(mod, ctx.cs)
        except _DOMAIN_ERRORS as exc:
            out.append(_witness_from_error("module_idempotent", f"module {mod.tag}", exc))
            continue
        _need_identity(out, "module_idempotent", f"p . m at {mod.tag}",
                       mat_mul(p.matrix, m.matrix))
        _need(out, "module_idempotent", f"m . p = e at {mod.tag}",
              mat_mul(m.matrix, p.matrix), e.matrix)
    return out


def _check_em_unit_roundtrip(ctx):
    out = []
    cs = ctx.cs
    eye = Matrix.identity(ctx.field, cs.index)
    data = []
    for i, n in enumerate(ctx.hreps):
        try:
            if i < 3:
                em_unit_iso(n, cs, ctx.ring)
            mod = em_comparison(n, cs, ctx.ring)
            img, p, m, _ = em_inverse_split(mod, cs)
            w1 = compose(p, section_xi(n, cs, coind=mod.carrier))
            w2 = compose(counit_eps(n, cs, coind=mod.carrier), m)
        except _DOMAIN_ERRORS as exc:
            out.append(_witness_from_error("em_unit_roundtrip", f"rep {n.tag}", exc))
            data.append(None)
            continue
        _need_identity(out, "em_unit_roundtrip", f"w2 . w1 at {n.tag}",
                       mat_mul(w2.matrix, w1.matrix))
        _need_identity(out, "em_unit_roundtrip", f"w1 . w2 at {n.tag}",
                       mat_mul(w1.matrix, w2.matrix))
        data.append((mod, p, m, w1))
    for i, f in enumerate(ctx.hmors):
        j = (i + 1) % len(ctx.hreps)
        if data[i] is None or data[j] is None:
            continue
        mod_i, _, m_i, w1_i = data[i]
        mod_j, p_j, _, w1_j = data[j]
        try:
            em_mor(f, cs, ctx.ring, source=mod_i, target=mod_j)
        except _DOMAIN_ERRORS as exc:
            out.append(_witness_from_error("em_unit_roundtrip", f"E on hmor {i}", exc))
            continue
        through = mat_mul(p_j.matrix, mat_mul(mat_kron(eye, f.matrix), m_i.matrix))
        _need(out, "em_unit_naturality", f"hmor {i}",
              mat_mul(w1_j.matrix, f.matrix), mat_mul(through, w1_i.matrix))
    return out


def _check_em_counit_roundtrip(ctx):
    out = []
    for mod in ctx.modules:
        try:
            phi, psi = em_counit_iso(mod, ctx.cs)
        except _DOMAIN_ERRORS as exc:
            out.append(_witness_from_error("em_counit_roundtrip", f"module {mod.tag}", exc))
            continue
        _need_identity(out, "em_counit_roundtrip", f"phi . psi at {mod.tag}",
                       mat_mul(phi.matrix, psi.matrix))
        _need_identity(out, "em_counit_roundtrip", f"psi . phi at {mod.tag}",
                       mat_mul(psi.matrix, phi.matrix))
    return out


def _check_extension_of_scalars(ctx):
    out = []
    cs, h = ctx.cs, ctx.h
    eye_a = Matrix.identity(ctx.field, ctx.ring.dim)
    eye = Matrix.identity(ctx.field, cs.index)
    phis = []
    for y in ctx.ext_reps:
        try:
            phi, psi = extension_of_scalars_iso(y, cs, ctx.ring)
        except _DOMAIN_ERRORS as exc:
            out.append(_witness_from_error("extension_of_scalars", f"rep {y.tag}", exc))
            phis.append(None)
            continue
        _need_identity(out, "extension_of_scalars", f"phi . psi at {y.tag}",
                       mat_mul(phi.matrix, psi.matrix))
        _need_identity(out, "extension_of_scalars", f"psi . phi at {y.tag}",
                       mat_mul(psi.matrix, phi.matrix))
        phis.append(phi)
    for i, f in enumerate(ctx.ext_homs):
        j = (i + 1) % len(ctx.ext_reps)
        if phis[i] is None or phis[j] is None:
            continue
        rf = restrict_mor(f, h)
        lhs = mat_mul(mat_kron(eye, rf.matrix), phis[i].matrix)
        rhs = mat_mul(phis[j].matrix, mat_kron(eye_a, f.matrix))
        _need(out, "extension_naturality", f"gmor {i}", lhs, rhs)
    return out


_CHECKS = (
    ("group_axioms", _check_group_axioms),
    ("rep_hom_sanity", _check_rep_hom_sanity),
    ("triangle_identities", _check_triangle_identities),
    ("counit_section", _check_counit_section),
    ("lambda_laws", _check_lambda_laws),
    ("projection_formula", _check_projection_formula),
    ("monad_morphism", _check_monad_morphism),
    ("ring_axioms", _check_ring_axioms),
    ("monad_laws", _check_monad_laws),
    ("module_idempotent", _check_module_idempotent),
    ("em_unit_roundtrip", _check_em_unit_roundtrip),
    ("em_counit_roundtrip", _check_em_counit_roundtrip),
    ("extension_of_scalars", _check_extension_of_scalars),
)


def run_suite(cfg):
    """Run the selected checks and return a SuiteReport."""
    ctx = Ctx(cfg)
    results = []
    for cid, fn in _CHECKS:
        if not ctx.enabled(cid):
            continue
        t0 = time.perf_counter()
        try:
            witnesses = fn(ctx)
        except _DOMAIN_ERRORS as exc:
            witnesses = [_witness_from_error(cid, "while preparing the check", exc)]
        except (ConfigError, InternalError):
            raise
        except Exception as exc:
            raise InternalError(f"check {cid} crashed: {exc!r}") from exc
        ms = round((time.perf_counter() - t0) * 1000.0, 3)
        status = "pass" if not witnesses else "fail"
        results.append(CheckResult(cid, status, witnesses[0] if witnesses else None, ms))
    return SuiteReport(ctx.env(), results)


def mutation_smoke(cfg, corruption):
    """Re-run the suite with one deliberate corruption injected."""
    if corruption not in CORRUPTIONS:
        raise ConfigError(f"unknown corruption {corruption!r}; pick from {CORRUPTIONS}")
    mutated = SuiteConfig(
        group=cfg.group,
        subgroup=cfg.subgroup,
        field=cfg.field,
        seed=cfg.seed,
        family_size=cfg.family_size,
        checks=cfg.checks,
        corruption=corruption,
    )
    return run_suite(mutated)


DEFAULT_FIELDS = ("q", "fp:2", "fp:3", "fp:5")
DEFAULT_PAIRS = tuple((name, None) for name in
                      ("c2", "c3", "c4", "c6", "v4", "s3", "d4", "q8", "a4", "s4"))


def _matrix_case(case):
    group, subgroup, field, seed, family_size = case
    cfg = SuiteConfig(group=group, subgroup=subgroup, field=field,
                      seed=seed, family_size=family_size)
    t0 = time.perf_counter()
    report = run_suite(cfg)
    return {
        "group": group,
        "subgroup": list(subgroup) if subgroup is not None else None,
        "field": field,
        "passed": report.passed,
        "failed": [c.id for c in report.checks if c.status != "pass"],
        "seconds": round(time.perf_counter() - t0, 3),
    }


def run_matrix(pairs=DEFAULT_PAIRS, fields=DEFAULT_FIELDS, seed=0, family_size=10,
               workers=None):
    """Run the suite over a grid of cases, optionally in parallel.

    Worker count comes from the argument, then the SEPMONAD_WORKERS
    environment variable, then a small default.  Returns one summary dict
    per case, in grid order.
    """
    cases = [
        (group, subgroup, field, seed, family_size)
        for group, subgroup in pairs
        for field in fields
    ]
    if workers is None:
        raw = os.environ.get(WORKERS_ENV, "")
        workers = int(raw) if raw.strip() else min(4, os.cpu_count() or 1)
    if workers <= 1:
        return [_matrix_case(c) for c in cases]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_matrix_case, cases))
