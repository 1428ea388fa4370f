"""Right modules over a finite-dimensional algebra.

A module is a list of action matrices, one per algebra basis element,
acting on row vectors.  Submodules are generated by ``spin`` closure and
carried canonically (rref bases), so equal submodules are identical.

The structural layers: socle and radical series, Jordan-Hoelder factors
counted through block idempotents, simple modules realized as certified
minimal right ideals of the semisimple quotient's blocks, injective
envelopes as duals of projective covers over the opposite algebra.

Object-level predicates (monoform, compressible, prime) use the
finite-length criteria recorded in ``docs/derivations.md``; the raw
definitional quantifiers live in ``oracle`` and the two are compared on
enumerated lattices in the test suite.  Questions needing submodule
enumeration over Q raise ``CapabilityError`` rather than guessing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .algebras import (FiniteDimAlgebra, jacobson_radical, quotient_algebra,
                       wedderburn_blocks)
from .errors import BudgetExceeded, CapabilityError, ValidationError
from .ideals import annihilator, is_prime
from .linalg import (Matrix, Subspace, apply_vec, spin, unit_vec, vec_add,
                     vec_is_zero, vec_scale, zero_vec)


class RightModule:
    __slots__ = ("algebra", "dim", "action", "name", "_socle", "_radical")

    def __init__(self, algebra: FiniteDimAlgebra, action, name="M", validate=True):
        self.algebra = algebra
        self.action = tuple(action)
        if len(self.action) != algebra.dim:
            raise ValidationError("one action matrix per algebra basis element")
        self.dim = self.action[0].nrows if self.action else 0
        for m in self.action:
            if m.nrows != self.dim or m.ncols != self.dim:
                raise ValidationError("action matrices must be square of equal size")
        self.name = name
        self._socle = None
        self._radical = None
        if validate:
            self._validate()

    def _validate(self):
        a = self.algebra
        f = a.field
        d = a.dim
        for i in range(d):
            for j in range(d):
                lhs = self.action[i] * self.action[j]
                rhs = Matrix.zero(f, self.dim, self.dim)
                for k, c in enumerate(a.sc[i][j]):
                    if c != f.zero:
                        rhs = rhs + self.action[k].scale(c)
                if lhs != rhs:
                    raise ValidationError(
                        f"action breaks structure constants at ({i},{j})")
        if self.act_matrix(a.unit) != Matrix.identity(f, self.dim):
            raise ValidationError("unit must act as the identity")

    # -- basic structure -----------------------------------------------------

    @classmethod
    def regular(cls, algebra, name=None):
        return cls(algebra, algebra.right_mult_matrices(),
                   name=name or algebra.name, validate=False)

    @classmethod
    def zero(cls, algebra):
        z = Matrix.zero(algebra.field, 0, 0)
        return cls(algebra, [z] * algebra.dim, name="0", validate=False)

    def act_matrix(self, a_coords) -> Matrix:
        f = self.algebra.field
        acc = Matrix.zero(f, self.dim, self.dim)
        for c, m in zip(a_coords, self.action):
            if c != f.zero:
                acc = acc + m.scale(c)
        return acc

    def act(self, v, a_coords):
        return apply_vec(v, self.act_matrix(a_coords))

    def canonical_key(self):
        return (id(self.algebra), self.dim, self.action)

    def __repr__(self):
        return f"RightModule({self.name}, dim {self.dim} over {self.algebra.name})"

    def direct_sum(self, other: "RightModule", name=None):
        if other.algebra is not self.algebra:
            raise ValidationError("direct sum needs a common algebra")
        f = self.algebra.field
        n = self.dim + other.dim
        mats = []
        for m1, m2 in zip(self.action, other.action):
            rows = []
            for r in m1.rows:
                rows.append(tuple(r) + zero_vec(f, other.dim))
            for r in m2.rows:
                rows.append(zero_vec(f, self.dim) + tuple(r))
            mats.append(Matrix(f, rows, n))
        return RightModule(self.algebra, mats,
                           name=name or f"{self.name}+{other.name}",
                           validate=False)

    # -- submodules and quotients ---------------------------------------------

    def spin_submodule(self, seeds) -> Subspace:
        return spin(self.algebra.field, self.dim, seeds, self.action)

    def is_submodule_space(self, s: Subspace) -> bool:
        return all(s.contains_vector(apply_vec(v, m))
                   for v in s.basis_rows() for m in self.action)

    def submodule(self, space_or_seeds, name="L"):
        """(module on the subspace, inclusion map); seeds are spun closed."""
        if isinstance(space_or_seeds, Subspace):
            space = space_or_seeds
            if not self.is_submodule_space(space):
                raise ValidationError("subspace is not action-invariant")
        else:
            space = self.spin_submodule(list(space_or_seeds))
        f = self.algebra.field
        mats = []
        for m in self.action:
            rows = []
            for v in space.basis_rows():
                coords = space.coords_of(apply_vec(v, m))
                rows.append(coords)
            mats.append(Matrix(f, rows, space.dim))
        sub = RightModule(self.algebra, mats, name=name, validate=False)
        incl = ModuleMap(sub, self, space.mat)
        return sub, incl

    def quotient(self, space: Subspace, name="Q"):
        """(module on the complement coordinates, projection map)."""
        if not self.is_submodule_space(space):
            raise ValidationError("cannot quotient by a non-submodule")
        f = self.algebra.field
        proj = space.complement_projection_matrix()
        comp = space.complement_coords()
        mats = []
        for m in self.action:
            rows = []
            for j in comp:
                img = apply_vec(unit_vec(f, self.dim, j), m)
                rows.append(apply_vec(img, proj))
            mats.append(Matrix(f, rows, len(comp)))
        quot = RightModule(self.algebra, mats, name=name, validate=False)
        return quot, ModuleMap(self, quot, proj)

    # -- socle / radical -------------------------------------------------------

    def socle_space(self) -> Subspace:
        """{v : v J = 0}, the largest semisimple submodule."""
        if self._socle is None:
            f = self.algebra.field
            rad = jacobson_radical(self.algebra)
            if rad.dim == 0 or self.dim == 0:
                self._socle = Subspace.full(f, self.dim)
            else:
                cols = []
                for j in rad.basis_rows():
                    m = self.act_matrix(j)
                    cols.extend(zip(*m.rows))
                big = Matrix(f, cols, self.dim).transpose()
                self._socle = Subspace.from_vectors(f, self.dim,
                                                    big.left_kernel().rows)
        return self._socle

    def radical_space(self) -> Subspace:
        """M J, the radical submodule."""
        if self._radical is None:
            rad = jacobson_radical(self.algebra)
            vecs = [self.act(v, j) for j in rad.basis_rows()
                    for v in Subspace.full(self.algebra.field, self.dim).basis_rows()]
            self._radical = Subspace.from_vectors(self.algebra.field, self.dim, vecs)
        return self._radical

    def is_semisimple(self):
        return self.socle_space().dim == self.dim

    def socle_series(self):
        """0 = S_0 < soc M < ... < M as subspaces."""
        f = self.algebra.field
        chain = [Subspace.zero(f, self.dim)]
        while chain[-1].dim < self.dim:
            quot, proj = self.quotient(chain[-1])
            soc_q = quot.socle_space()
            vecs = list(chain[-1].basis_rows())
            for w in soc_q.basis_rows():
                vecs.append(_any_preimage(proj.matrix, w))
            nxt = Subspace.from_vectors(f, self.dim, vecs)
            if nxt.dim == chain[-1].dim:
                raise ValidationError("socle series stalled")
            chain.append(nxt)
        return chain

    def radical_series(self):
        """M > MJ > MJ^2 > ... > 0 as subspaces."""
        f = self.algebra.field
        rad = jacobson_radical(self.algebra)
        chain = [Subspace.full(f, self.dim)]
        while chain[-1].dim > 0:
            prev = chain[-1]
            vecs = [self.act(v, j) for v in prev.basis_rows()
                    for j in rad.basis_rows()]
            nxt = Subspace.from_vectors(f, self.dim, vecs)
            if nxt.dim == prev.dim:
                raise ValidationError("radical series stalled")
            chain.append(nxt)
        return chain


def _any_preimage(proj_matrix: Matrix, w):
    x = proj_matrix.solve_left(w)
    if x is None:
        raise ValidationError("vector has no preimage under a surjection")
    return x


class ModuleMap:
    """Module homomorphism recorded by a matrix on row vectors."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: RightModule, target: RightModule, matrix: Matrix):
        self.source = source
        self.target = target
        self.matrix = matrix

    def __call__(self, v):
        return apply_vec(v, self.matrix)

    def is_module_map(self):
        for ms, mt in zip(self.source.action, self.target.action):
            if ms * self.matrix != self.matrix * mt:
                return False
        return True

    def is_injective(self):
        return self.matrix.rank() == self.source.dim

    def is_surjective(self):
        return self.matrix.rank() == self.target.dim

    def image_space(self) -> Subspace:
        return Subspace.from_vectors(self.target.algebra.field,
                                     self.target.dim, self.matrix.rows)

    def compose(self, then: "ModuleMap") -> "ModuleMap":
        return ModuleMap(self.source, then.target, self.matrix * then.matrix)


# -- simple modules ------------------------------------------------------------

@dataclass
class SimpleClass:
    """Isomorphism class of a simple right module.

    ``module`` is None exactly when the class sits over a rational block
    whose division part could not be resolved at desk scale; consumers
    needing the representative must call ``require_module``.
    """
    label: str
    block_index: int
    module: RightModule | None
    end_dim: int | None
    dim: int | None

    def require_module(self) -> RightModule:
        if self.module is None:
            raise CapabilityError(
                f"simple class {self.label}: division part unresolved over Q")
        return self.module


def minimal_right_ideal_module(block: FiniteDimAlgebra) -> RightModule | None:
    """A certified-simple right ideal of a simple block, or None.

    Finite fields: shrink by exhaustive generation; the fixed point, where
    every nonzero vector generates, is simple by definition.  Over Q:
    commutative blocks are fields (the regular module is simple); otherwise
    kernels of polynomials in central-ish left multiplications are right
    submodules, and a candidate with one-dimensional endomorphism ring is
    certified simple.
    """
    reg = RightModule.regular(block)
    if block.dim == 1 or block.is_commutative():
        return reg
    f = block.field
    if f.is_finite():
        space = Subspace.full(f, block.dim)
        shrunk = True
        while shrunk:
            shrunk = False
            for v in space.vectors():
                if vec_is_zero(f, v):
                    continue
                gen = reg.spin_submodule([v])
                if gen.dim < space.dim:
                    space = gen
                    shrunk = True
                    break
        sub, _ = reg.submodule(space, name=f"{block.name}.S")
        return sub
    candidates = _rational_right_submodule_candidates(block, reg)
    best = None
    for s in candidates:
        if 0 < s.dim < block.dim and (best is None or s.dim < best.dim):
            best = s
    if best is None:
        return None
    sub, _ = reg.submodule(best, name=f"{block.name}.S")
    if len(hom_basis(sub, sub)) == 1:
        return sub
    return None


def _rational_right_submodule_candidates(block, reg):
    """Right submodules of the regular module from kernels of f(L_z)."""
    from .commutative import factor_polynomial
    from .algebras import _minimal_polynomial, _eval_poly_matrix
    f = block.field
    out = []
    elements = [block.basis_coords(i) for i in range(block.dim)]
    for i in range(block.dim):
        for j in range(i + 1, block.dim):
            elements.append(vec_add(f, block.basis_coords(i),
                                    block.basis_coords(j)))
    for z in elements:
        lz = block.left_mult_matrix(z)
        minpoly = _minimal_polynomial(f, lz)
        try:
            factors = factor_polynomial(f, minpoly)
        except CapabilityError:
            continue
        for fac, _m in factors:
            op = _eval_poly_matrix(f, fac, lz)
            kern = Subspace.from_vectors(f, block.dim, op.left_kernel().rows)
            if 0 < kern.dim < block.dim:
                out.append(kern)
    for s, t in itertools.combinations(out[:12], 2):
        meet = s.intersect(t)
        if meet.dim > 0:
            out.append(meet)
    return out


def simple_modules(a: FiniteDimAlgebra) -> list[SimpleClass]:
    """Complete irredundant list; one class per Wedderburn block of a/J."""
    if a._simples_cache is not None:
        return a._simples_cache
    rad = jacobson_radical(a)
    if rad.dim == 0:
        quot, proj = a, None
        blocks = wedderburn_blocks(a)
    else:
        quot, proj, _sec = quotient_algebra(a, rad)
        blocks = wedderburn_blocks(quot)
    out = []
    for t, blk in enumerate(blocks):
        simple_over_block = minimal_right_ideal_module(blk.algebra)
        label = f"S{t + 1}"
        if simple_over_block is None:
            out.append(SimpleClass(label, t, None, blk.division_degree, None))
            continue
        mats = []
        for i in range(a.dim):
            z = a.basis_coords(i) if proj is None else proj(a.basis_coords(i))
            zt = quot.mul(blk.idempotent, z)
            coords = blk.space.coords_of(zt)
            mats.append(simple_over_block.act_matrix(coords))
        mod = RightModule(a, mats, name=label, validate=False)
        end = len(hom_basis(mod, mod))
        out.append(SimpleClass(label, t, mod, end, mod.dim))
    a._simples_cache = out
    return out


def block_idempotent_lifts(a: FiniteDimAlgebra):
    """Coset representatives in a of the central block idempotents of a/J.

    Not idempotents of a in general; they act correctly on any module
    killed by J, which is all the isotypic bookkeeping needs.
    """
    rad = jacobson_radical(a)
    if rad.dim == 0:
        return [blk.idempotent for blk in wedderburn_blocks(a)]
    quot, _proj, section = quotient_algebra(a, rad)
    return [section(blk.idempotent) for blk in wedderburn_blocks(quot)]


def semisimple_isotypic_dims(m: RightModule) -> list[int]:
    """dim of each block-isotypic component of a module killed by J."""
    a = m.algebra
    lifts = block_idempotent_lifts(a)
    out = []
    for e in lifts:
        img = Subspace.from_vectors(a.field, m.dim,
                                    m.act_matrix(e).rows)
        out.append(img.dim)
    return out


def composition_factors(m: RightModule, strategy="radical"):
    """Multiset {simple label: multiplicity} from a composition series.

    Two peeling strategies exist so Jordan-Hoelder independence is a
    checkable property rather than an assumption.
    """
    a = m.algebra
    simples = simple_modules(a)
    for s in simples:
        if s.dim is None:
            raise CapabilityError(
                f"composition factors need all simples realized; {s.label} is not")
    if strategy == "radical":
        chain = m.radical_series()
        pairs = [(chain[k], chain[k + 1]) for k in range(len(chain) - 1)]
    elif strategy == "socle":
        chain = m.socle_series()
        pairs = [(chain[k + 1], chain[k]) for k in range(len(chain) - 1)]
    else:
        raise ValueError("strategy must be 'radical' or 'socle'")
    counts = {s.label: 0 for s in simples}
    for big, small in pairs:
        layer = _layer_module(m, big, small)
        dims = semisimple_isotypic_dims(layer)
        for s, d in zip(simples, dims):
            if d % s.dim != 0:
                raise ValidationError("isotypic dimension not a multiple")
            counts[s.label] += d // s.dim
    return {k: v for k, v in counts.items() if v}


def _layer_module(m: RightModule, big: Subspace, small: Subspace) -> RightModule:
    sub, _ = m.submodule(big, name="layer+")
    inner_vecs = [big.coords_of(v) for v in small.basis_rows()]
    inner = Subspace.from_vectors(m.algebra.field, big.dim, inner_vecs)
    quot, _ = sub.quotient(inner, name="layer")
    return quot


def module_length(m: RightModule) -> int:
    return sum(composition_factors(m).values())


def is_simple_module(m: RightModule) -> bool:
    if m.dim == 0:
        return False
    return module_length(m) == 1


def classify_simple(m: RightModule) -> SimpleClass:
    """Which simple class a simple module belongs to (block detection)."""
    a = m.algebra
    if not is_simple_module(m):
        raise ValidationError("classify_simple needs a simple module")
    dims = semisimple_isotypic_dims(m)
    hits = [t for t, d in enumerate(dims) if d > 0]
    if len(hits) != 1:
        raise ValidationError("a simple module must be isotypic for one block")
    return simple_modules(a)[hits[0]]


# -- homomorphisms ---------------------------------------------------------------

def hom_basis(m: RightModule, n: RightModule) -> list[Matrix]:
    """Basis of Hom(m, n): solutions X of M_i X = X N_i for all i."""
    if m.algebra is not n.algebra:
        raise ValidationError("hom needs a common algebra")
    f = m.algebra.field
    dm, dn = m.dim, n.dim
    if dm == 0 or dn == 0:
        return []
    nunk = dm * dn
    d = m.algebra.dim
    rows = []
    for r in range(dm):
        for c in range(dn):
            cond = []
            for i in range(d):
                mi, ni = m.action[i], n.action[i]
                for u in range(dm):
                    for v in range(dn):
                        x = f.zero
                        if v == c:
                            x = f.add(x, mi.rows[u][r])
                        if u == r:
                            x = f.sub(x, ni.rows[c][v])
                        cond.append(x)
            rows.append(tuple(cond))
    big = Matrix(f, rows, d * dm * dn)
    kern = big.left_kernel()
    out = []
    for lam in kern.rows:
        mat = [[lam[r * dn + c] for c in range(dn)] for r in range(dm)]
        out.append(Matrix(f, mat, dn))
    return out


def hom_dim(m, n) -> int:
    return len(hom_basis(m, n))


def are_isomorphic(m: RightModule, n: RightModule, combo_budget: int = 200000) -> bool:
    """True iff an invertible intertwiner exists.

    Finite fields enumerate coefficient combinations of the hom basis up to
    the budget.  Over Q, a grid with dim+1 points per coefficient decides
    (the determinant has degree at most dim in each coefficient), when the
    grid fits the budget; otherwise CapabilityError.
    """
    if m.dim != n.dim:
        return False
    if m.dim == 0:
        return True
    homs = hom_basis(m, n)
    if not homs:
        return False
    for h in homs:
        if h.is_invertible():
            return True
    f = m.algebra.field
    k = len(homs)
    if f.is_finite():
        total = f.p ** k
        if total > combo_budget:
            raise BudgetExceeded("isomorphism search", total, combo_budget)
        for coeffs in itertools.product(f.elements(), repeat=k):
            acc = Matrix.zero(f, m.dim, n.dim)
            for c, h in zip(coeffs, homs):
                if c != f.zero:
                    acc = acc + h.scale(c)
            if acc.is_invertible():
                return True
        return False
    grid = [Fraction(t) for t in range(m.dim + 1)]
    if len(grid) ** k > combo_budget:
        raise CapabilityError("isomorphism grid search too large over Q")
    for coeffs in itertools.product(grid, repeat=k):
        acc = Matrix.zero(f, m.dim, n.dim)
        for c, h in zip(coeffs, homs):
            if c != 0:
                acc = acc + h.scale(c)
        if acc.is_invertible():
            return True
    return False


def embeds_in(m: RightModule, n: RightModule, combo_budget: int = 200000) -> bool:
    """True iff an injective module map m -> n exists."""
    if m.dim == 0:
        return True
    if m.dim > n.dim:
        return False
    homs = hom_basis(m, n)
    if not homs:
        return False
    for h in homs:
        if h.rank() == m.dim:
            return True
    f = m.algebra.field
    k = len(homs)
    if f.is_finite():
        total = f.p ** k
        if total > combo_budget:
            raise BudgetExceeded("embedding search", total, combo_budget)
        for coeffs in itertools.product(f.elements(), repeat=k):
            acc = Matrix.zero(f, m.dim, n.dim)
            for c, h in zip(coeffs, homs):
                if c != f.zero:
                    acc = acc + h.scale(c)
            if acc.rank() == m.dim:
                return True
        return False
    raise CapabilityError("embedding search over Q is not enumerable")


# -- duality, projective covers, injective envelopes ------------------------------

def dual_module(m: RightModule, opposite_algebra: FiniteDimAlgebra,
                name=None) -> RightModule:
    """k-dual as a right module over the opposite algebra (transposed action)."""
    mats = [mat.transpose() for mat in m.action]
    return RightModule(opposite_algebra, mats, name=name or f"D({m.name})",
                       validate=False)


@dataclass
class PrimitiveIdempotentData:
    block_index: int
    idempotent: tuple          # honest idempotent of the algebra
    projective: RightModule    # e*A as a right module
    projective_space: Subspace


def primitive_idempotents(a: FiniteDimAlgebra) -> list[PrimitiveIdempotentData]:
    """One primitive idempotent per block, lifted from a/J."""
    if a._prim_idem_cache is not None:
        return a._prim_idem_cache
    rad = jacobson_radical(a)
    if rad.dim == 0:
        quot, proj, section = a, None, None
        blocks = wedderburn_blocks(a)
    else:
        quot, proj, section = quotient_algebra(a, rad)
        blocks = wedderburn_blocks(quot)
    reg = RightModule.regular(a)
    out = []
    for t, blk in enumerate(blocks):
        ebar = _idempotent_in_minimal_right_ideal(blk)
        if ebar is None:
            raise CapabilityError(
                f"block {t}: no primitive idempotent at desk scale (non-split over Q)")
        # block coords -> quotient coords -> a lifted coset representative
        e_quot = apply_vec(ebar, blk.space.mat)
        e = e_quot if section is None else section(e_quot)
        e = _newton_idempotent_lift(a, e)
        space = reg.spin_submodule([e])
        pmod, _ = reg.submodule(space, name=f"P{t + 1}")
        out.append(PrimitiveIdempotentData(t, e, pmod, space))
    a._prim_idem_cache = out
    return out


def _idempotent_in_minimal_right_ideal(blk):
    """Idempotent generating a minimal right ideal of a simple block.

    For a minimal right ideal W with wW = W, the solution e in W of
    w e = w is idempotent: w(e^2 - e) = 0 and the left-annihilator of w
    inside W is a proper right subideal, hence zero.
    """
    block = blk.algebra
    try:
        space = _minimal_right_ideal_space(block)
    except CapabilityError:
        return None
    f = block.field
    basis = space.basis_rows()
    for w in basis:
        w_im = [block.mul(w, u) for u in basis]
        if Subspace.from_vectors(f, block.dim, w_im).dim == space.dim:
            mat = Matrix(f, w_im, block.dim)
            coeffs = mat.solve_left(w)
            if coeffs is None:
                continue
            e = zero_vec(f, block.dim)
            for c, u in zip(coeffs, basis):
                e = vec_add(f, e, vec_scale(f, c, u))
            if block.mul(e, e) == e and not vec_is_zero(f, e):
                return e
    raise ValidationError("no idempotent found in a minimal right ideal")


def _minimal_right_ideal_space(block) -> Subspace:
    f = block.field
    reg = RightModule.regular(block)
    if block.dim == 1 or block.is_commutative():
        return Subspace.full(f, block.dim)
    if f.is_finite():
        space = Subspace.full(f, block.dim)
        shrunk = True
        while shrunk:
            shrunk = False
            for v in space.vectors():
                if vec_is_zero(f, v):
                    continue
                gen = reg.spin_submodule([v])
                if gen.dim < space.dim:
                    space = gen
                    shrunk = True
                    break
        return space
    best = None
    for s in _rational_right_submodule_candidates(block, reg):
        if 0 < s.dim < block.dim and (best is None or s.dim < best.dim):
            best = s
    if best is None:
        raise CapabilityError("minimal right ideal unresolved over Q")
    return best


def _newton_idempotent_lift(a: FiniteDimAlgebra, e):
    """e with e^2 = e mod J, iterated 3e^2 - 2e^3 to an honest idempotent."""
    f = a.field
    three = f.scalar(3)
    two = f.scalar(2)
    for _ in range(a.dim + 2):
        if a.mul(e, e) == e:
            return e
        e2 = a.mul(e, e)
        e3 = a.mul(e2, e)
        e = vec_add(f, vec_scale(f, three, e2),
                    vec_scale(f, f.neg(two), e3))
    raise ValidationError("idempotent lifting did not converge")


def projective_cover(n: RightModule):
    """(P, cover map P -> n) with P minimal projective, kernel in rad P."""
    a = n.algebra
    f = a.field
    if n.dim == 0:
        z = RightModule.zero(a)
        return z, ModuleMap(z, n, Matrix(f, [], n.dim))
    prims = primitive_idempotents(a)
    top, top_proj = n.quotient(n.radical_space(), name="top")
    summands = []     # (prim data, generator g in n)
    for prim in prims:
        e = prim.idempotent
        weight = Subspace.from_vectors(f, top.dim, top.act_matrix(e).rows)
        covered = Subspace.zero(f, top.dim)
        for w in weight.basis_rows():
            if covered.contains_vector(w):
                continue
            g0 = _any_preimage(top_proj.matrix, w)
            g = n.act(g0, e)
            summands.append((prim, g))
            covered = covered.sum(top.spin_submodule([apply_vec(g, top_proj.matrix)]))
        # generators found greedily cover the whole isotypic part
    big = None
    maps = []
    for prim, g in summands:
        pmod = prim.projective
        rows = [n.act(g, p_elt) for p_elt in prim.projective_space.basis_rows()]
        maps.append(Matrix(f, rows, n.dim))
        big = pmod if big is None else big.direct_sum(pmod)
    if big is None:
        raise ValidationError("nonzero module with empty top")
    cover_rows = [row for mat in maps for row in mat.rows]
    cover = ModuleMap(big, n, Matrix(f, cover_rows, n.dim))
    if not cover.is_surjective():
        raise ValidationError("projective cover map is not surjective")
    if big.quotient(big.radical_space())[0].dim != top.dim:
        raise ValidationError("projective cover is not minimal")
    return big, cover


def injective_envelope(m: RightModule):
    """(E, essential embedding m -> E) via duality with the opposite algebra.

    E(M) is the dual of the projective cover of the dual of M; the double
    dual is literally M in coordinates, so the embedding is the transpose
    of the cover matrix.
    """
    a = m.algebra
    aop = a.opposite()
    dm = dual_module(m, aop)
    p, cover = projective_cover(dm)
    e_mod = dual_module(p, a, name=f"E({m.name})")
    embed = ModuleMap(m, e_mod, cover.matrix.transpose())
    if not embed.is_injective():
        raise ValidationError("injective envelope embedding is not injective")
    if not embed.is_module_map():
        raise ValidationError("injective envelope embedding is not a module map")
    if not _is_essential_image(m, embed, e_mod):
        raise ValidationError("injective envelope embedding is not essential")
    return e_mod, embed


def _is_essential_image(m, embed, e_mod):
    img = embed.image_space()
    return img.contains(e_mod.socle_space())


def is_injective_module(m: RightModule) -> bool:
    e_mod, _ = injective_envelope(m)
    return e_mod.dim == m.dim


# -- object-level predicates -----------------------------------------------------

def is_uniform(m: RightModule) -> bool:
    """Nonzero with simple socle: every nonzero submodule is essential."""
    if m.dim == 0:
        return False
    soc = m.socle_space()
    sub, _ = m.submodule(soc, name="soc")
    return is_simple_module(sub)


def submodule_lattice(m: RightModule, budget=None):
    from .oracle import enumerate_submodules
    return enumerate_submodules(m, budget=budget)


def is_monoform(m: RightModule, budget=None) -> bool:
    """No common submodule class with any proper quotient.

    Finite length reduction (docs/derivations.md): for uniform m with
    socle S, monoform iff Hom(S, m/L) = 0 for every nonzero submodule L.
    Needs the submodule lattice, so Q backends with non-uniform lattices
    raise CapabilityError unless the answer is forced without enumeration.
    """
    if m.dim == 0:
        raise ValidationError("monoform is about nonzero modules")
    if not is_uniform(m):
        return False
    if is_simple_module(m):
        return True
    soc_sub, _ = m.submodule(m.socle_space(), name="S")
    if not m.algebra.field.is_finite():
        raise CapabilityError(
            "monoform over Q needs submodule enumeration; undecidable at desk scale")
    for space in submodule_lattice(m, budget=budget):
        if space.dim == 0:
            continue
        quot, _ = m.quotient(space)
        if quot.dim == 0:
            continue
        if hom_dim(soc_sub, quot) > 0:
            return False
    return True


def is_compressible(m: RightModule, budget=None) -> bool:
    """Every nonzero submodule contains a copy of m; finite length: simple."""
    if m.dim == 0:
        raise ValidationError("compressible is about nonzero modules")
    return is_simple_module(m)


def is_prime_object(m: RightModule) -> bool:
    """All nonzero submodules share the annihilator; iff Ann(m) is prime."""
    if m.dim == 0:
        raise ValidationError("prime is about nonzero modules")
    ann = annihilator(m)
    if ann.is_whole():
        raise ValidationError("nonzero module with full annihilator")
    return is_prime(ann)


def monoform_submodule(m: RightModule, budget=None) -> RightModule:
    """Some monoform submodule; a simple submodule always qualifies."""
    if m.dim == 0:
        raise ValidationError("the zero module has no monoform submodule")
    out, _ = m.submodule(_simple_submodule_space(m), name="H")
    return out


def _simple_submodule_space(m: RightModule) -> Subspace:
    """A simple submodule as the image of a nonzero map from a simple."""
    f = m.algebra.field
    for s in simple_modules(m.algebra):
        smod = s.require_module()
        for h in hom_basis(smod, m):
            if any(not vec_is_zero(f, r) for r in h.rows):
                return Subspace.from_vectors(f, m.dim, h.rows)
    raise ValidationError("nonzero module without simple submodule")


def prime_submodule(m: RightModule) -> RightModule:
    """Some prime submodule; simple submodules qualify."""
    if m.dim == 0:
        raise ValidationError("the zero module has no prime submodule")
    out, _ = m.submodule(_simple_submodule_space(m), name="H")
    return out
