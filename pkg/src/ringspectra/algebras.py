"""Finite-dimensional associative unital algebras by structure constants.

An algebra is given by a field, a basis b_0..b_{d-1}, and constants
c[i][j][k] with b_i * b_j = sum_k c[i][j][k] b_k.  Construction validates
associativity on all basis triples and solves for (or checks) the unit, so
an invalid table cannot circulate.  Elements are coordinate row vectors.

Constructors cover the concrete sources used throughout: matrix algebras,
upper triangular algebras, group algebras, k[x]/(f) by companion
multiplication, direct products, and bound quiver algebras (path algebras
modulo length-homogeneous relations, truncated once finite-dimensionality
is witnessed).

The two structure computations that everything else leans on live here as
well: the Jacobson radical (trace bilinear form in characteristic zero,
the lifted-trace chain over F_p) and the Wedderburn block decomposition of
a semisimple algebra via central idempotents.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import CapabilityError, ValidationError
from .linalg import (Matrix, Subspace, apply_vec, field_name, spin,
                     unit_vec, vec_add, vec_is_zero, vec_scale, zero_vec)


class FiniteDimAlgebra:
    __slots__ = ("field", "dim", "sc", "unit", "labels", "name",
                 "_right_mats", "_left_mats", "_rad_cache", "_blocks_cache",
                 "_simples_cache", "_prim_idem_cache")

    def __init__(self, field, sc, unit=None, labels=None, name="A",
                 validate=True):
        dim = len(sc)
        if dim == 0:
            raise ValidationError("unital algebra needs dimension >= 1")
        sc = tuple(tuple(tuple(field.scalar(x) for x in row)
                         for row in plane) for plane in sc)
        if any(len(plane) != dim or any(len(row) != dim for row in plane)
               for plane in sc):
            raise ValidationError("structure constants must be dim^3")
        self.field = field
        self.dim = dim
        self.sc = sc
        self.labels = tuple(labels) if labels else tuple(f"b{i}" for i in range(dim))
        self.name = name
        self._right_mats = None
        self._left_mats = None
        self._rad_cache = None
        self._blocks_cache = None
        self._simples_cache = None
        self._prim_idem_cache = None
        if unit is None:
            unit = self._solve_unit()
        self.unit = tuple(field.scalar(x) for x in unit)
        if validate:
            self._validate()

    # -- construction-time checks -------------------------------------------

    def _solve_unit(self):
        # u with u*b_j = b_j for all j and b_j*u = b_j: one linear system.
        f = self.field
        d = self.dim
        cols = []
        rhs = []
        for j in range(d):
            for k in range(d):
                cols.append(tuple(self.sc[i][j][k] for i in range(d)))
                rhs.append(f.one if j == k else f.zero)
        for i in range(d):
            for k in range(d):
                cols.append(tuple(self.sc[i][j][k] for j in range(d)))
                rhs.append(f.one if i == k else f.zero)
        m = Matrix(f, cols, d).transpose()
        u = m.solve_left(tuple(rhs))
        if u is None:
            raise ValidationError("no unit solves the unit law")
        return u

    def _validate(self):
        f = self.field
        d = self.dim
        for i, j, k in itertools.product(range(d), repeat=3):
            lhs = self.mul(self.basis_coords(i), self.basis_coords(j))
            lhs = self.mul(lhs, self.basis_coords(k))
            rhs = self.mul(self.basis_coords(j), self.basis_coords(k))
            rhs = self.mul(self.basis_coords(i), rhs)
            if lhs != rhs:
                raise ValidationError(
                    f"associativity fails at basis triple ({i},{j},{k})")
        for i in range(d):
            b = self.basis_coords(i)
            if self.mul(self.unit, b) != b or self.mul(b, self.unit) != b:
                raise ValidationError(f"unit law fails at basis element {i}")

    # -- element arithmetic --------------------------------------------------

    def basis_coords(self, i):
        return unit_vec(self.field, self.dim, i)

    def zero_coords(self):
        return zero_vec(self.field, self.dim)

    def mul(self, x, y):
        f = self.field
        out = [f.zero] * self.dim
        for i, xi in enumerate(x):
            if xi == f.zero:
                continue
            for j, yj in enumerate(y):
                if yj == f.zero:
                    continue
                c = f.mul(xi, yj)
                row = self.sc[i][j]
                for k, ck in enumerate(row):
                    if ck != f.zero:
                        out[k] = f.add(out[k], f.mul(c, ck))
        return tuple(out)

    def power(self, x, n: int):
        acc = self.unit
        for _ in range(n):
            acc = self.mul(acc, x)
        return acc

    def right_mult_matrix(self, a) -> Matrix:
        """Matrix of x -> x*a on row vectors."""
        return Matrix(self.field,
                      [self.mul(self.basis_coords(i), a) for i in range(self.dim)],
                      self.dim)

    def left_mult_matrix(self, a) -> Matrix:
        """Matrix of x -> a*x on row vectors."""
        return Matrix(self.field,
                      [self.mul(a, self.basis_coords(i)) for i in range(self.dim)],
                      self.dim)

    def right_mult_matrices(self):
        """Right multiplication by every basis element (the regular action)."""
        if self._right_mats is None:
            self._right_mats = tuple(self.right_mult_matrix(self.basis_coords(j))
                                     for j in range(self.dim))
        return self._right_mats

    def left_mult_matrices(self):
        if self._left_mats is None:
            self._left_mats = tuple(self.left_mult_matrix(self.basis_coords(j))
                                    for j in range(self.dim))
        return self._left_mats

    def is_invertible_element(self, a):
        return self.left_mult_matrix(a).is_invertible() \
            and self.right_mult_matrix(a).is_invertible()

    def is_regular_element(self, a):
        """No left or right zero divisor: both multiplication maps injective."""
        la = self.left_mult_matrix(a)
        ra = self.right_mult_matrix(a)
        return la.rank() == self.dim and ra.rank() == self.dim

    def inverse_element(self, a):
        x = self.left_mult_matrix(a).transpose().solve_left(self.unit)
        if x is None or self.mul(x, a) != self.unit or self.mul(a, x) != self.unit:
            raise ValueError("element is not invertible")
        return x

    def is_commutative(self):
        d = self.dim
        return all(self.sc[i][j] == self.sc[j][i]
                   for i in range(d) for j in range(i + 1, d))

    def element_str(self, x):
        f = self.field
        terms = [(f"{c}*" if c != f.one else "") + self.labels[i]
                 for i, c in enumerate(x) if c != f.zero]
        return " + ".join(terms) if terms else "0"

    def structurally_equal(self, other: "FiniteDimAlgebra"):
        return (self.field == other.field and self.dim == other.dim
                and self.sc == other.sc and self.unit == other.unit)

    def __repr__(self):
        return f"FiniteDimAlgebra({self.name}, dim {self.dim} over {field_name(self.field)})"

    # -- derived algebras -----------------------------------------------------

    def opposite(self) -> "FiniteDimAlgebra":
        d = self.dim
        sc = tuple(tuple(self.sc[j][i] for j in range(d)) for i in range(d))
        return FiniteDimAlgebra(self.field, sc, unit=self.unit,
                                labels=self.labels, name=self.name + "^op",
                                validate=False)

    def center(self) -> Subspace:
        f = self.field
        d = self.dim
        rows = []
        rm = self.right_mult_matrices()
        lm = self.left_mult_matrices()
        for j in range(d):
            diff = rm[j] - lm[j]
            rows.append(diff)
        # x central iff x*(R_j - L_j) = 0 for all j: stack the conditions.
        stacked_cols = []
        for m in rows:
            stacked_cols.extend(zip(*m.rows))
        big = Matrix(f, stacked_cols, d).transpose()
        return Subspace.from_vectors(f, d, big.left_kernel().rows)


# -- constructors ------------------------------------------------------------

def algebra_from_structure_constants(field, sc, unit=None, labels=None, name="A"):
    return FiniteDimAlgebra(field, sc, unit=unit, labels=labels, name=name)


def opposite_of(a: FiniteDimAlgebra) -> FiniteDimAlgebra:
    return a.opposite()


def matrix_algebra(n: int, field, name=None) -> FiniteDimAlgebra:
    """Full matrix algebra with basis the matrix units e_{rc}."""
    d = n * n
    idx = {(r, c): r * n + c for r in range(n) for c in range(n)}
    zero = zero_vec(field, d)
    sc = [[list(zero) for _ in range(d)] for _ in range(d)]
    for (r1, c1), i in idx.items():
        for (r2, c2), j in idx.items():
            if c1 == r2:
                sc[i][j][idx[(r1, c2)]] = field.one
    labels = [f"e{r + 1}{c + 1}" for r in range(n) for c in range(n)]
    unit = [field.one if r == c else field.zero
            for r in range(n) for c in range(n)]
    return FiniteDimAlgebra(field, sc, unit=unit, labels=labels,
                            name=name or f"M{n}({field_name(field)})")


def upper_triangular_algebra(n: int, field, name=None) -> FiniteDimAlgebra:
    pairs = [(r, c) for r in range(n) for c in range(r, n)]
    idx = {p: i for i, p in enumerate(pairs)}
    d = len(pairs)
    zero = zero_vec(field, d)
    sc = [[list(zero) for _ in range(d)] for _ in range(d)]
    for (r1, c1), i in idx.items():
        for (r2, c2), j in idx.items():
            if c1 == r2:
                sc[i][j][idx[(r1, c2)]] = field.one
    labels = [f"e{r + 1}{c + 1}" for r, c in pairs]
    unit = [field.one if r == c else field.zero for r, c in pairs]
    return FiniteDimAlgebra(field, sc, unit=unit, labels=labels,
                            name=name or f"T{n}({field_name(field)})")


def group_algebra(field, table: Sequence[Sequence[int]], labels=None, name="kG"):
    """Group algebra from a multiplication table table[i][j] = index of g_i g_j."""
    d = len(table)
    zero = zero_vec(field, d)
    sc = [[list(zero) for _ in range(d)] for _ in range(d)]
    for i in range(d):
        for j in range(d):
            sc[i][j][table[i][j]] = field.one
    return FiniteDimAlgebra(field, sc, labels=labels, name=name)


def cyclic_group_algebra(field, n: int, name=None):
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = [f"g{i}" if i else "e" for i in range(n)]
    return group_algebra(field, table, labels=labels,
                         name=name or f"{field_name(field)}[C{n}]")


def companion_algebra(field, poly: Sequence, name=None) -> FiniteDimAlgebra:
    """k[x]/(f) with basis 1, x, ..., x^{deg f - 1}; poly low-to-high, monic."""
    coeffs = [field.scalar(c) for c in poly]
    while coeffs and coeffs[-1] == field.zero:
        coeffs.pop()
    if len(coeffs) < 2:
        raise ValidationError("companion polynomial must have degree >= 1")
    lead = coeffs[-1]
    if lead != field.one:
        inv = field.inv(lead)
        coeffs = [field.mul(inv, c) for c in coeffs]
    d = len(coeffs) - 1
    # x^d = -(c_0 + c_1 x + ... + c_{d-1} x^{d-1})
    top = [field.neg(c) for c in coeffs[:d]]
    powers = [unit_vec(field, d, i) for i in range(d)]
    cur = list(powers[d - 1])
    for _ in range(d):   # x^d .. x^{2d-1}
        new = [field.zero] * d
        carry = cur[d - 1]
        for k in range(d - 1, 0, -1):
            new[k] = cur[k - 1]
        new[0] = field.zero
        if carry != field.zero:
            new = [field.add(a, field.mul(carry, t)) for a, t in zip(new, top)]
        powers.append(tuple(new))
        cur = new
    sc = [[list(powers[i + j]) for j in range(d)] for i in range(d)]
    labels = ["1"] + [f"x^{i}" if i > 1 else "x" for i in range(1, d)]
    return FiniteDimAlgebra(field, sc, unit=unit_vec(field, d, 0), labels=labels,
                            name=name or f"{field_name(field)}[x]/(f)")


def product_algebra(a: FiniteDimAlgebra, b: FiniteDimAlgebra, name=None):
    if a.field != b.field:
        raise ValidationError("product factors must share the field")
    f = a.field
    d = a.dim + b.dim
    zero = zero_vec(f, d)
    sc = [[list(zero) for _ in range(d)] for _ in range(d)]
    for i in range(a.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                sc[i][j][k] = a.sc[i][j][k]
    for i in range(b.dim):
        for j in range(b.dim):
            for k in range(b.dim):
                sc[a.dim + i][a.dim + j][a.dim + k] = b.sc[i][j][k]
    unit = tuple(a.unit) + tuple(b.unit)
    labels = [f"l.{s}" for s in a.labels] + [f"r.{s}" for s in b.labels]
    return FiniteDimAlgebra(f, sc, unit=unit, labels=labels,
                            name=name or f"{a.name}x{b.name}")


# -- bound quivers -----------------------------------------------------------

@dataclass(frozen=True)
class BoundQuiver:
    """Quiver with length-homogeneous relations and a truncation bound.

    relations: each is a list of (coefficient, path) with path a tuple of
    arrow indices; all paths in one relation must share source, target and
    length (length >= 2).  nilpotency_bound is the horizon within which the
    arrow ideal must become zero in the quotient.
    """
    vertices: int
    arrows: tuple            # (label, source, target), 0-based vertices
    relations: tuple = ()
    nilpotency_bound: int = 16


def _quiver_paths_up_to(q: BoundQuiver, max_len: int):
    """All paths of length <= max_len as (source, target, arrows-tuple)."""
    paths = [(v, v, ()) for v in range(q.vertices)]
    frontier = list(paths)
    for _ in range(max_len):
        nxt = []
        for (s, t, arr) in frontier:
            for ai, (_lbl, a_s, a_t) in enumerate(q.arrows):
                if a_s == t:
                    nxt.append((s, a_t, arr + (ai,)))
        paths.extend(nxt)
        frontier = nxt
        if not frontier:
            break
    return paths


def bound_quiver_algebra(field, q: BoundQuiver, name=None) -> FiniteDimAlgebra:
    """Path algebra of q modulo its relations.

    Relations must be length-homogeneous; this makes the truncated
    dimension count stabilize exactly when the arrow ideal dies in the
    quotient, so finite-dimensionality is decidable within the bound.
    """
    for rel in q.relations:
        if not rel:
            raise ValidationError("empty relation")
        lens = {len(p) for _c, p in rel}
        if len(lens) != 1 or min(lens) < 2:
            raise ValidationError(
                "relations must be length-homogeneous of length >= 2")
        ends = set()
        for _c, p in rel:
            for ai in p:
                if ai >= len(q.arrows):
                    raise ValidationError("relation uses unknown arrow")
            ends.add((_path_source(q, p), _path_target(q, p)))
        if len(ends) != 1:
            raise ValidationError("relation mixes source/target pairs")

    prev = None
    for horizon in range(1, q.nilpotency_bound + 2):
        basis, _ = _truncated_quotient_basis(field, q, horizon)
        if prev is not None and len(basis) == len(prev):
            return _algebra_from_path_basis(field, q, horizon, name)
        prev = basis
    raise ValidationError(
        f"arrow ideal not nilpotent within bound {q.nilpotency_bound}: "
        "quotient not witnessed finite-dimensional")


def _path_source(q, p):
    return q.arrows[p[0]][1]

def _path_target(q, p):
    return q.arrows[p[-1]][2]


def _truncated_quotient_basis(field, q: BoundQuiver, horizon: int):
    """Basis paths of kQ/(relations + paths of length >= horizon).

    Paths are keyed by (source, arrow tuple): the arrows determine the
    endpoints except for the vertex paths, which only the source tells
    apart.
    """
    paths = [p for p in _quiver_paths_up_to(q, horizon - 1)]
    index = {(p[0], p[2]): i for i, p in enumerate(paths)}
    n = len(paths)
    ideal_rows = []
    for rel in q.relations:
        rel_len = len(rel[0][1])
        rel_src = _path_source(q, rel[0][1])
        rel_tgt = _path_target(q, rel[0][1])
        for (ls, lt, lp) in paths:
            if lt != rel_src:
                continue
            for (rs, rt, rp) in paths:
                if rs != rel_tgt:
                    continue
                total = len(lp) + rel_len + len(rp)
                if total >= horizon:
                    continue
                row = [field.zero] * n
                for coeff, mid in rel:
                    key = (ls, lp + mid + rp)
                    row[index[key]] = field.add(row[index[key]],
                                                field.scalar(coeff))
                ideal_rows.append(row)
    ideal = Subspace.from_vectors(field, n, ideal_rows)
    basis_paths = [paths[j] for j in ideal.complement_coords()]
    return basis_paths, (paths, index, ideal)


def _algebra_from_path_basis(field, q, horizon, name):
    basis_paths, (paths, index, ideal) = _truncated_quotient_basis(field, q, horizon)
    n = len(paths)
    d = len(basis_paths)
    comp = ideal.complement_coords()
    comp_pos = {j: t for t, j in enumerate(comp)}

    def project(vec):
        red = ideal.reduce(vec)
        return tuple(red[j] for j in comp)

    sc = []
    for (s1, t1, p1) in basis_paths:
        plane = []
        for (s2, t2, p2) in basis_paths:
            if t1 != s2:
                plane.append(zero_vec(field, d))
                continue
            full = p1 + p2
            if len(full) >= horizon:
                # Arrow ideal power inside the relation ideal at this horizon.
                plane.append(zero_vec(field, d))
                continue
            vec = [field.zero] * n
            vec[index[(s1, full)]] = field.one
            plane.append(project(tuple(vec)))
        sc.append(plane)

    unit = [field.zero] * d
    for t, (s, tt, p) in enumerate(basis_paths):
        if len(p) == 0:
            unit[t] = field.one

    def path_label(p):
        s, t, arr = p
        if not arr:
            return f"e{s + 1}"
        return ".".join(q.arrows[a][0] for a in arr)

    labels = [path_label(p) for p in basis_paths]
    return FiniteDimAlgebra(field, sc, unit=tuple(unit), labels=labels,
                            name=name or "kQ/I")


# -- quotients ---------------------------------------------------------------

class AlgebraMap:
    """Linear map between algebras recorded by a matrix on row vectors."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source, target, matrix: Matrix):
        self.source = source
        self.target = target
        self.matrix = matrix

    def __call__(self, x):
        return apply_vec(x, self.matrix)

    def is_algebra_hom(self):
        a, b = self.source, self.target
        for i in range(a.dim):
            for j in range(a.dim):
                lhs = self(a.mul(a.basis_coords(i), a.basis_coords(j)))
                rhs = b.mul(self(a.basis_coords(i)), self(a.basis_coords(j)))
                if lhs != rhs:
                    return False
        return self(a.unit) == b.unit


def quotient_algebra(a: FiniteDimAlgebra, ideal_space: Subspace,
                     name=None) -> tuple[FiniteDimAlgebra, AlgebraMap, AlgebraMap]:
    """Quotient by a two-sided ideal: (quotient, projection, linear section).

    The quotient basis is the canonical coordinate complement of the
    ideal's pivot columns, so equal ideals give identical quotients.  The
    section picks the complement-coordinate coset representative; it is a
    linear splitting of the projection, not a ring map.
    """
    f = a.field
    if ideal_space.ambient != a.dim:
        raise ValidationError("ideal lives in the wrong algebra")
    if ideal_space.dim == a.dim:
        raise ValidationError("cannot quotient by the whole algebra")
    comp = ideal_space.complement_coords()
    d = len(comp)

    def project(vec):
        red = ideal_space.reduce(vec)
        return tuple(red[j] for j in comp)

    def lift(coords):
        out = [f.zero] * a.dim
        for t, j in enumerate(comp):
            out[j] = coords[t]
        return tuple(out)

    sc = [[project(a.mul(lift(unit_vec(f, d, i)), lift(unit_vec(f, d, j))))
           for j in range(d)] for i in range(d)]
    labels = [a.labels[j] + "~" for j in comp]
    quot = FiniteDimAlgebra(f, sc, unit=project(a.unit), labels=labels,
                            name=name or a.name + "/I")
    proj = AlgebraMap(a, quot, Matrix(f, [project(a.basis_coords(i))
                                          for i in range(a.dim)], d))
    section = AlgebraMap(quot, a, Matrix(f, [lift(unit_vec(f, d, t))
                                             for t in range(d)], a.dim))
    return quot, proj, section


def ideal_closure(a: FiniteDimAlgebra, seeds) -> Subspace:
    """Smallest two-sided ideal subspace containing the seed elements."""
    ops = list(a.right_mult_matrices()) + list(a.left_mult_matrices())
    return spin(a.field, a.dim, seeds, ops)


def is_two_sided_ideal_space(a: FiniteDimAlgebra, s: Subspace) -> bool:
    for v in s.basis_rows():
        for m in a.right_mult_matrices():
            if not s.contains_vector(apply_vec(v, m)):
                return False
        for m in a.left_mult_matrices():
            if not s.contains_vector(apply_vec(v, m)):
                return False
    return True


def subspace_product(a: FiniteDimAlgebra, s: Subspace, t: Subspace) -> Subspace:
    """Span of pairwise products s*t (not closed to an ideal)."""
    vecs = [a.mul(u, v) for u in s.basis_rows() for v in t.basis_rows()]
    return Subspace.from_vectors(a.field, a.dim, vecs)


def is_nilpotent_space(a: FiniteDimAlgebra, s: Subspace) -> bool:
    cur = s
    for _ in range(a.dim + 1):
        if cur.dim == 0:
            return True
        cur = subspace_product(a, cur, s)
    return False


# -- Jacobson radical --------------------------------------------------------

def jacobson_radical(a: FiniteDimAlgebra) -> Subspace:
    """Radical as a subspace: nilpotent two-sided ideal with semisimple quotient.

    Characteristic zero uses the radical of the trace bilinear form of the
    regular representation.  Over F_p that form can be degenerate, so the
    base kernel is shrunk by the lifted trace functions
    z -> tr(M_z^{p^i}) / p^i mod p on integer lifts M_z of left
    multiplication; each step is linear algebra on the previous ideal.
    The result is post-validated: two-sided, nilpotent, and the quotient's
    own chain must vanish.
    """
    if a._rad_cache is not None:
        return a._rad_cache
    rad = _radical_space(a)
    if not is_two_sided_ideal_space(a, rad):
        raise ValidationError("radical computation produced a non-ideal")
    if not is_nilpotent_space(a, rad):
        raise ValidationError("radical computation produced a non-nilpotent space")
    if rad.dim < a.dim:
        quot = quotient_algebra(a, rad)[0]
        if _radical_space(quot).dim != 0:
            raise ValidationError("radical quotient is not semisimple")
    else:
        raise ValidationError("radical cannot be the whole unital algebra")
    a._rad_cache = rad
    return rad


def _radical_space(a: FiniteDimAlgebra) -> Subspace:
    f = a.field
    d = a.dim
    lm = a.left_mult_matrices()
    gram = Matrix(f, [[(lm[i] * lm[j]).trace() for j in range(d)]
                      for i in range(d)], d)
    base = Subspace.from_vectors(f, d, gram.left_kernel().rows)
    if f.char == 0:
        return base
    return _shrink_charp(a, base)


def _shrink_charp(a, current: Subspace) -> Subspace:
    """F_p refinement of the trace-form kernel down to the radical.

    For x in the current ideal I and any y, z = x*y stays in I and
    tr(M_z^{p^i}) is divisible by p^i; the divisibility is asserted, so a
    violated hypothesis fails loudly instead of corrupting the kernel.
    """
    f = a.field
    p = f.char
    d = a.dim

    def int_mat_mul(u, v):
        n = len(u)
        return [[sum(u[i][t] * v[t][j] for t in range(n)) for j in range(n)]
                for i in range(n)]

    def lifted_trace(x, i):
        m = [[int(e) % p for e in row] for row in a.left_mult_matrix(x).rows]
        acc = None
        e = p ** i
        base = m
        while e:
            if e & 1:
                acc = base if acc is None else int_mat_mul(acc, base)
            e >>= 1
            if e:
                base = int_mat_mul(base, base)
        tr = sum(acc[t][t] for t in range(len(acc)))
        q, r = divmod(tr, p ** i)
        if r:
            raise ValidationError("lifted trace not divisible as expected")
        return q % p

    level = 0
    while p ** level < d:
        level += 1

    for i in range(1, level + 1):
        if current.dim == 0:
            break
        basis = current.basis_rows()
        cond = Matrix(f, [[lifted_trace(a.mul(u, a.basis_coords(j)), i)
                           for j in range(d)] for u in basis], d)
        kern = cond.left_kernel()
        vecs = [apply_vec(z, current.mat) for z in kern.rows]
        current = Subspace.from_vectors(f, d, vecs)
    return current


def is_semisimple(a: FiniteDimAlgebra) -> bool:
    return jacobson_radical(a).dim == 0


# -- Wedderburn decomposition ------------------------------------------------

@dataclass
class WedderburnBlock:
    algebra: FiniteDimAlgebra      # the block with its own unit
    idempotent: tuple              # central idempotent in the parent
    space: Subspace                # the block as a subspace of the parent
    split: bool | None             # True: matrix algebra over the base field
    division_degree: int | None    # dim over base field of End of the simple


def wedderburn_blocks(a: FiniteDimAlgebra) -> list[WedderburnBlock]:
    """Central primitive idempotent decomposition of a semisimple algebra."""
    if a._blocks_cache is not None:
        return a._blocks_cache
    if not is_semisimple(a):
        raise ValidationError("wedderburn decomposition needs a semisimple algebra")
    f = a.field
    d = a.dim
    center = a.center()

    if f.is_finite():
        splitters = _frobenius_fixed_center_basis(a, center)
    else:
        splitters = list(center.basis_rows())

    components = [Subspace.full(f, d)]
    for z in splitters:
        lz = a.left_mult_matrix(z)
        new_components = []
        for comp in components:
            if comp.dim <= 1:
                new_components.append(comp)
                continue
            pieces = _split_by_operator(a, comp, z, lz)
            new_components.extend(pieces)
        components = new_components

    if f.is_finite():
        # The Frobenius-fixed center separates all blocks; anything else
        # indicates a broken semisimplicity assumption upstream.
        if len(components) != len(splitters):
            raise ValidationError("finite-field block splitting incomplete")
    else:
        components = _refine_rational_components(a, components)
    components.sort(key=lambda c: (c.dim, c.mat.rows))

    # The unit decomposes along the components into the block idempotents.
    blocks = []
    stacked = Matrix(f, [r for c in components for r in c.basis_rows()], d)
    coeffs = stacked.solve_left(a.unit)
    if coeffs is None:
        raise ValidationError("unit does not decompose along components")
    offset = 0
    for comp in components:
        e = zero_vec(f, d)
        for t in range(comp.dim):
            e = vec_add(f, e, vec_scale(f, coeffs[offset + t],
                                        comp.basis_rows()[t]))
        offset += comp.dim
        blocks.append((comp, e))

    out = []
    for bi, (comp, e) in enumerate(blocks):
        if a.mul(e, e) != e:
            raise ValidationError("component projection of 1 is not idempotent")
        if not center.contains_vector(e):
            raise ValidationError("block idempotent is not central")
        block_alg, incl = _subalgebra_on(a, comp, e, name=f"{a.name}.B{bi + 1}")
        split, divdeg = _block_division_data(block_alg)
        out.append(WedderburnBlock(block_alg, e, comp, split, divdeg))

    total = sum(b.algebra.dim for b in out)
    if total != a.dim:
        raise ValidationError("block dimensions do not sum to the algebra dimension")
    for i in range(len(out)):
        for j in range(i + 1, len(out)):
            if not vec_is_zero(f, a.mul(out[i].idempotent, out[j].idempotent)):
                raise ValidationError("block idempotents are not orthogonal")
    a._blocks_cache = out
    return out


def _refine_rational_components(a, components):
    """Split or certify rational components whose center might not be a field."""
    center = a.center()
    out = []
    queue = list(components)
    while queue:
        comp = queue.pop()
        if comp.dim == 0:
            continue
        zc = comp.intersect(center)
        if zc.dim <= 1:
            out.append(comp)
            continue
        pieces = _try_split_rational_component(a, comp, zc)
        if pieces is None:
            out.append(comp)
        else:
            queue.extend(pieces)
    return out


def _try_split_rational_component(a, comp, zc):
    """Pieces of a splittable component, or None once its center is a field.

    A generic element of an etale Q-algebra is primitive, so small
    deterministic combinations of the central basis either exhibit a
    reducible minimal polynomial (split) or reach full degree (field).
    """
    from .commutative import factor_polynomial
    f = a.field
    basis = list(zc.basis_rows())
    candidates = list(basis)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            candidates.append(vec_add(f, basis[i], basis[j]))
    for w in range(2, 9):
        v = zero_vec(f, a.dim)
        mult = f.one
        for b in basis:
            v = vec_add(f, v, vec_scale(f, mult, b))
            mult = f.mul(mult, f.scalar(w))
        candidates.append(v)
    for z in candidates:
        restricted = _restrict_operator(f, comp, a.left_mult_matrix(z))
        minpoly = _minimal_polynomial(f, restricted)
        deg = len(minpoly) - 1
        try:
            factors = factor_polynomial(f, minpoly)
        except CapabilityError:
            continue
        if any(m > 1 for _fac, m in factors):
            raise ValidationError("central element acts non-semisimply in a block")
        if len(factors) > 1:
            pieces = []
            for fac, _m in factors:
                op = _eval_poly_matrix(f, fac, restricted)
                kern = op.left_kernel()
                vecs = [apply_vec(c, comp.mat) for c in kern.rows]
                pieces.append(Subspace.from_vectors(f, a.dim, vecs))
            if sum(p.dim for p in pieces) != comp.dim:
                raise ValidationError("rational refinement lost dimensions")
            return pieces
        if deg == zc.dim:
            return None
    raise CapabilityError(
        "cannot split or certify a rational block center at desk scale")


def _frobenius_fixed_center_basis(a, center):
    f = a.field
    q = f.p
    rows = []
    for z in center.basis_rows():
        zq = a.power(z, q)
        rows.append(vec_add(f, zq, vec_scale(f, f.neg(f.one), z)))
    # Fixed points of Frobenius within the center: z^q = z.
    m = Matrix(f, rows, a.dim)
    kern = m.left_kernel()
    return [apply_vec(c, center.mat) for c in kern.rows]


def _split_by_operator(a, comp, z, lz):
    """Decompose an ideal subspace by the action of a central element z."""
    f = a.field
    restricted = _restrict_operator(f, comp, lz)
    minpoly = _minimal_polynomial(f, restricted)
    try:
        factors = _factor_for_splitting(f, minpoly)
    except CapabilityError:
        # Undecidable factorization: defer to the rational refinement pass.
        return [comp]
    if len(factors) == 1:
        return [comp]
    pieces = []
    for fac in factors:
        op = _eval_poly_matrix(f, fac, restricted)
        kern = op.left_kernel()
        vecs = [apply_vec(c, comp.mat) for c in kern.rows]
        pieces.append(Subspace.from_vectors(f, a.dim, vecs))
    if sum(p.dim for p in pieces) != comp.dim:
        raise ValidationError("central splitting lost dimensions")
    return pieces


def _restrict_operator(f, space: Subspace, op: Matrix) -> Matrix:
    rows = []
    for v in space.basis_rows():
        w = apply_vec(v, op)
        coords = space.coords_of(w)
        if coords is None:
            raise ValidationError("operator does not preserve the subspace")
        rows.append(coords)
    return Matrix(f, rows, space.dim)


def _minimal_polynomial(f, m: Matrix):
    """Monic minimal polynomial of a square matrix, low-to-high coefficients."""
    n = m.nrows
    if n == 0:
        return (f.one,)
    powers = [Matrix.identity(f, n)]
    for _ in range(n):
        powers.append(powers[-1] * m)
    flat = [tuple(x for row in p.rows for x in row) for p in powers]
    for deg in range(1, n + 1):
        mat = Matrix(f, flat[:deg], n * n)
        sol = mat.solve_left(flat[deg])
        if sol is not None:
            return tuple(f.neg(c) for c in sol) + (f.one,)
    raise ValidationError("minimal polynomial not found within dimension")


def _eval_poly_matrix(f, poly, m: Matrix) -> Matrix:
    n = m.nrows
    acc = Matrix.zero(f, n, n)
    power = Matrix.identity(f, n)
    for c in poly:
        if c != f.zero:
            acc = acc + power.scale(c)
        power = power * m
    return acc


def _factor_for_splitting(f, poly):
    """Factor a squarefree polynomial for block splitting.

    Finite fields: roots only (the fixed-center splitters have min polys
    dividing x^q - x, which splits into distinct linear factors).  Over Q,
    desk-scale factorization; irreducibility failures raise CapabilityError.
    """
    from .commutative import factor_polynomial
    return [fac for fac, _mult in factor_polynomial(f, poly)]


def _subalgebra_on(a, comp: Subspace, unit_elem, name):
    f = a.field
    d = comp.dim
    basis = comp.basis_rows()
    sc = []
    for u in basis:
        plane = []
        for v in basis:
            w = a.mul(u, v)
            coords = comp.coords_of(w)
            if coords is None:
                raise ValidationError("component is not multiplicatively closed")
            plane.append(coords)
        sc.append(plane)
    unit_coords = comp.coords_of(unit_elem)
    labels = [f"c{i}" for i in range(d)]
    alg = FiniteDimAlgebra(f, sc, unit=unit_coords, labels=labels, name=name)
    incl = Matrix(f, basis, a.dim)
    return alg, incl


def _block_division_data(block: FiniteDimAlgebra):
    """(split?, division degree) for a simple block; None when undecided."""
    if block.is_commutative():
        return (block.dim == 1, block.dim)
    from .modules import minimal_right_ideal_module, hom_basis
    try:
        simple = minimal_right_ideal_module(block)
    except CapabilityError:
        return (None, None)
    if simple is None:
        return (None, None)
    e = len(hom_basis(simple, simple))
    if e == 1:
        return (True, 1)
    if block.field.is_finite():
        return (False, e)
    return (None, e)
