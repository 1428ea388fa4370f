"""Brute-force enumerators, definitional predicates, and the fixture corpus.

Everything here evaluates definitions literally over enumerated lattices:
subspaces in reduced echelon form, filtered to two-sided ideals, right
ideals, or submodules.  The fast criteria elsewhere in the package are
required (by the acceptance suite) to agree with these on every F_2
corpus instance within budget.  Budgets are explicit and overrunning one
raises ``BudgetExceeded``; nothing is silently truncated.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

from .algebras import (BoundQuiver, FiniteDimAlgebra, bound_quiver_algebra,
                       companion_algebra, cyclic_group_algebra, ideal_closure,
                       is_nilpotent_space, is_two_sided_ideal_space,
                       matrix_algebra, product_algebra,
                       upper_triangular_algebra)
from .errors import BudgetExceeded, ValidationError
from .ideals import TwoSidedIdeal, annihilator
from .linalg import F2, F3, Matrix, Subspace, apply_vec
from .modules import RightModule, embeds_in


@dataclass
class Budget:
    """Explicit enumeration limits; exceeding one fails loudly."""

    max_ambient_dim: int = 8
    max_field_size: int = 5
    max_count: int = 300000

    @classmethod
    def from_env(cls):
        b = cls()
        raw = os.environ.get("SPECTRA_BUDGET")
        if raw:
            b.max_count = int(raw)
        return b


DEFAULT_BUDGET = Budget.from_env()


def gaussian_binomial(n: int, k: int, q: int) -> int:
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def count_subspaces(n: int, q: int) -> int:
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def enumerate_subspaces(field, dim: int, budget: Budget = None):
    """Every subspace of k^dim in canonical form; complete and duplicate-free."""
    budget = budget or DEFAULT_BUDGET
    if not field.is_finite():
        raise ValidationError("subspace enumeration needs a finite field")
    if dim > budget.max_ambient_dim:
        raise BudgetExceeded("subspace enumeration dim", dim,
                             budget.max_ambient_dim)
    if field.p > budget.max_field_size:
        raise BudgetExceeded("subspace enumeration field", field.p,
                             budget.max_field_size)
    total = count_subspaces(dim, field.p)
    if total > budget.max_count:
        raise BudgetExceeded("subspace enumeration count", total,
                             budget.max_count)
    out = []
    for r in range(dim + 1):
        for pivots in itertools.combinations(range(dim), r):
            free_positions = []
            for i, p in enumerate(pivots):
                for j in range(p + 1, dim):
                    if j not in pivots:
                        free_positions.append((i, j))
            for values in itertools.product(field.elements(),
                                            repeat=len(free_positions)):
                rows = []
                for i, p in enumerate(pivots):
                    row = [field.zero] * dim
                    row[p] = field.one
                    rows.append(row)
                for (i, j), v in zip(free_positions, values):
                    rows[i][j] = field.scalar(v)
                mat = Matrix(field, rows, dim)
                out.append(Subspace(field, dim, mat, tuple(pivots)))
    if len(out) != total:
        raise ValidationError("subspace enumeration does not match the count")
    return out


def enumerate_vectors(field, dim: int):
    return [tuple(field.scalar(c) for c in combo)
            for combo in itertools.product(field.elements(), repeat=dim)]


def module_vectors(m: RightModule):
    return enumerate_vectors(m.algebra.field, m.dim)


def enumerate_two_sided_ideals(a: FiniteDimAlgebra, budget: Budget = None):
    return [s for s in enumerate_subspaces(a.field, a.dim, budget)
            if is_two_sided_ideal_space(a, s)]


def enumerate_right_ideals(a: FiniteDimAlgebra, budget: Budget = None):
    out = []
    for s in enumerate_subspaces(a.field, a.dim, budget):
        if all(s.contains_vector(apply_vec(v, mat))
               for v in s.basis_rows() for mat in a.right_mult_matrices()):
            out.append(s)
    return out


def enumerate_submodules(m: RightModule, budget: Budget = None):
    return [s for s in enumerate_subspaces(m.algebra.field, m.dim, budget)
            if m.is_submodule_space(s)]


# -- definitional predicates ------------------------------------------------------

def brute_is_prime(i: TwoSidedIdeal, lattice=None, budget: Budget = None) -> bool:
    """For all ideals A, B: AB in I implies A in I or B in I."""
    a = i.algebra
    if i.is_whole():
        raise ValidationError("primeness is about proper ideals")
    lattice = lattice if lattice is not None \
        else enumerate_two_sided_ideals(a, budget)
    for s in lattice:
        for t in lattice:
            prod = ideal_closure(a, [a.mul(u, v)
                                     for u in s.basis_rows()
                                     for v in t.basis_rows()])
            if i.space.contains(prod):
                if not (i.space.contains(s) or i.space.contains(t)):
                    return False
    return True


def brute_largest_nilpotent_ideal(a: FiniteDimAlgebra,
                                  budget: Budget = None) -> Subspace:
    best = Subspace.zero(a.field, a.dim)
    for s in enumerate_two_sided_ideals(a, budget):
        if s.dim > best.dim and is_nilpotent_space(a, s):
            best = s
    return best


def brute_prime_radical_of_zero(a: FiniteDimAlgebra,
                                budget: Budget = None) -> Subspace:
    lattice = enumerate_two_sided_ideals(a, budget)
    acc = Subspace.full(a.field, a.dim)
    found = False
    for s in lattice:
        if s.dim == a.dim:
            continue
        if brute_is_prime(TwoSidedIdeal(a, s, validate=False), lattice):
            acc = acc.intersect(s)
            found = True
    if not found:
        raise ValidationError("no prime ideals found by enumeration")
    return acc


def brute_is_essential(space: Subspace, m: RightModule,
                       submodules=None, budget: Budget = None) -> bool:
    """space meets every nonzero submodule of m nontrivially."""
    submodules = submodules if submodules is not None \
        else enumerate_submodules(m, budget)
    for s in submodules:
        if s.dim > 0 and space.intersect(s).dim == 0:
            return False
    return True


def brute_singular_subspace(m: RightModule, budget: Budget = None) -> Subspace:
    """{v : the right annihilator of v is an essential right ideal}."""
    a = m.algebra
    f = a.field
    right_ideals = enumerate_right_ideals(a, budget)
    vecs = []
    for v in module_vectors(m):
        rows = [m.act(v, a.basis_coords(i)) for i in range(a.dim)]
        ann = Subspace.from_vectors(f, a.dim,
                                    Matrix(f, rows, m.dim).left_kernel().rows)
        essential = all(ann.intersect(r).dim > 0
                        for r in right_ideals if r.dim > 0)
        if essential:
            vecs.append(v)
    return Subspace.from_vectors(f, m.dim, vecs)


def brute_is_monoform(m: RightModule, budget: Budget = None) -> bool:
    """No nonzero submodule of m is isomorphic to a submodule of any m/L."""
    if m.dim == 0:
        raise ValidationError("monoform is about nonzero modules")
    subs = enumerate_submodules(m, budget)
    sub_modules = []
    for s in subs:
        if s.dim > 0:
            sub_modules.append(m.submodule(s)[0])
    for l_space in subs:
        if l_space.dim == 0:
            continue
        quot, _ = m.quotient(l_space)
        if quot.dim == 0:
            continue
        q_subs = [quot.submodule(t)[0] for t in enumerate_submodules(quot, budget)
                  if t.dim > 0]
        for x in sub_modules:
            for y in q_subs:
                if x.dim == y.dim and _brute_isomorphic(x, y):
                    return False
    return True


def _brute_isomorphic(x: RightModule, y: RightModule) -> bool:
    from .modules import are_isomorphic
    return are_isomorphic(x, y)


def brute_is_compressible(m: RightModule, budget: Budget = None) -> bool:
    """Every nonzero submodule contains a copy of m."""
    if m.dim == 0:
        raise ValidationError("compressible is about nonzero modules")
    for s in enumerate_submodules(m, budget):
        if s.dim == 0:
            continue
        sub = m.submodule(s)[0]
        if not embeds_in(m, sub):
            return False
    return True


def brute_is_prime_object(m: RightModule, budget: Budget = None) -> bool:
    """All nonzero submodules share the annihilator of m."""
    if m.dim == 0:
        raise ValidationError("prime is about nonzero modules")
    ann = annihilator(m).space
    for s in enumerate_submodules(m, budget):
        if s.dim == 0:
            continue
        if annihilator(m.submodule(s)[0]).space != ann:
            return False
    return True


def brute_mass(m: RightModule, backend, budget: Budget = None):
    """Annihilators of prime submodules, as molecules of the backend."""
    subs = enumerate_submodules(m, budget)
    out = set()
    for s in subs:
        if s.dim == 0:
            continue
        sub = m.submodule(s)[0]
        if brute_is_prime_object(sub, budget):
            ann = annihilator(sub).space
            for w in backend.primes():
                if w.ideal.space == ann:
                    out.add(("prime", w.block_index))
    return {mol for mol in backend.molecules() if mol.key in out}


def brute_monoform_exists(m: RightModule, budget: Budget = None) -> bool:
    for s in enumerate_submodules(m, budget):
        if s.dim == 0:
            continue
        if brute_is_monoform(m.submodule(s)[0], budget):
            return True
    return False


# -- corpus -----------------------------------------------------------------------

def _quiver_truncations():
    """Bound quiver shapes on <= 2 vertices, <= 2 arrows, radical cube zero."""
    shapes = []

    def monomials(arrows, length):
        """All composable arrow paths of exactly this length."""
        out = []
        for combo in itertools.product(range(len(arrows)), repeat=length):
            ok = True
            for u, v in zip(combo, combo[1:]):
                if arrows[u][2] != arrows[v][1]:
                    ok = False
                    break
            if ok:
                out.append(combo)
        return out

    def truncated(vertices, arrows, power):
        rels = tuple(((1, p),) for p in monomials(arrows, power))
        return BoundQuiver(vertices, tuple(arrows), rels,
                           nilpotency_bound=power + 1)

    one_loop = [("x", 0, 0)]
    two_loops = [("x", 0, 0), ("y", 0, 0)]
    a12 = [("a", 0, 1)]
    kron = [("a", 0, 1), ("b", 0, 1)]
    cycle = [("a", 0, 1), ("b", 1, 0)]
    loop_then_arrow = [("x", 0, 0), ("a", 0, 1)]
    arrow_then_loop = [("a", 0, 1), ("y", 1, 1)]

    shapes.append(("loop.J2", truncated(1, one_loop, 2)))
    shapes.append(("loop.J3", truncated(1, one_loop, 3)))
    shapes.append(("two_loops.J2", truncated(1, two_loops, 2)))
    shapes.append(("a12", BoundQuiver(2, tuple(a12), (), 4)))
    shapes.append(("kronecker", BoundQuiver(2, tuple(kron), (), 4)))
    shapes.append(("cycle.J2", truncated(2, cycle, 2)))
    shapes.append(("cycle.J3", truncated(2, cycle, 3)))
    shapes.append(("loop_arrow.J2", truncated(2, loop_then_arrow, 2)))
    shapes.append(("arrow_loop.J2", truncated(2, arrow_then_loop, 2)))
    return shapes


def corpus(seed: int = 0):
    """Deterministic list of (name, algebra) fixtures; seed reserved.

    Contains every named fixture the worked examples use plus systematic
    families: truncated path algebras on small quivers, triangular and
    full matrix algebras, truncated polynomial rings, separable quotients,
    products of fields, and small cyclic group algebras over F_2 and F_3.
    """
    out = []

    def add(name, alg):
        alg.name = name
        out.append((name, alg))

    for field, tag in ((F2, "f2"), (F3, "f3")):
        add(f"field_{tag}", companion_algebra(field, [field.one, field.one],
                                              name=f"field_{tag}"))
        add(f"t2_{tag}", upper_triangular_algebra(2, field))
        add(f"m2_{tag}", matrix_algebra(2, field))
        add(f"c2_{tag}", cyclic_group_algebra(field, 2))
        add(f"c3_{tag}", cyclic_group_algebra(field, 3))
        add(f"trunc2_{tag}", companion_algebra(field, _xpow(field, 2)))
        add(f"trunc3_{tag}", companion_algebra(field, _xpow(field, 3)))
        for qname, q in _quiver_truncations():
            add(f"quiver.{qname}_{tag}", bound_quiver_algebra(field, q))

    add("t3_f2", upper_triangular_algebra(3, F2))
    add("trunc4_f2", companion_algebra(F2, _xpow(F2, 4)))
    add("f2xf2", product_algebra(companion_algebra(F2, [1, 1]),
                                 companion_algebra(F2, [1, 1])))
    add("f2xf2xf2", product_algebra(
        product_algebra(companion_algebra(F2, [1, 1]),
                        companion_algebra(F2, [1, 1])),
        companion_algebra(F2, [1, 1])))
    add("f3xf3", product_algebra(companion_algebra(F3, [1, 1]),
                                 companion_algebra(F3, [1, 1])))
    # Separable and inseparable polynomial quotients.
    add("f2_x2px", companion_algebra(F2, [0, 1, 1]))        # x^2+x
    add("f4", companion_algebra(F2, [1, 1, 1]))             # x^2+x+1
    add("f9", companion_algebra(F3, [1, 0, 1]))             # x^2+1
    add("f2_x2px_times_x", companion_algebra(F2, [0, 0, 1, 1]))  # x^3+x^2
    add("t2f2_x_f2", product_algebra(upper_triangular_algebra(2, F2),
                                     companion_algebra(F2, [1, 1])))
    add("m2f2_x_f2", product_algebra(matrix_algebra(2, F2),
                                     companion_algebra(F2, [1, 1])))
    return out


def _xpow(field, n):
    coeffs = [field.zero] * n + [field.one]
    return coeffs


def standard_modules(a: FiniteDimAlgebra, include_envelopes=True):
    """Deterministic small module zoo for one algebra."""
    from .modules import injective_envelope, simple_modules
    out = []
    reg = RightModule.regular(a, name="reg")
    out.append(("reg", reg))
    soc = reg.socle_space()
    if 0 < soc.dim:
        out.append(("soc_reg", reg.submodule(soc, name="soc_reg")[0]))
        if soc.dim < reg.dim:
            out.append(("reg/soc", reg.quotient(soc, name="reg/soc")[0]))
    rad = reg.radical_space()
    if 0 < rad.dim:
        out.append(("rad_reg", reg.submodule(rad, name="rad_reg")[0]))
        out.append(("top_reg", reg.quotient(rad, name="top_reg")[0]))
    simples = simple_modules(a)
    mods = []
    for s in simples:
        if s.module is not None:
            out.append((s.label, s.module))
            mods.append(s.module)
    if mods:
        out.append((f"{mods[0].name}^2", mods[0].direct_sum(mods[0])))
    if len(mods) > 1:
        out.append((f"{mods[0].name}+{mods[1].name}",
                    mods[0].direct_sum(mods[1])))
    if include_envelopes:
        for s in simples:
            if s.module is not None:
                e_mod, _ = injective_envelope(s.module)
                out.append((f"E({s.label})", e_mod))
    return out
