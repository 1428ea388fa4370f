"""Two-sided ideals: arithmetic, primeness, radicals, minimal primes.

A prime here is detected through its quotient: for a finite-dimensional
algebra a proper two-sided ideal P is prime iff Lambda/P is a simple
algebra (prime artinian rings are simple).  The quantifier-over-ideal-pairs
definition survives as the brute-force oracle in ``oracle``; the two are
compared on the full enumerated lattice in tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebras import (FiniteDimAlgebra, ideal_closure, is_nilpotent_space,
                       is_two_sided_ideal_space, jacobson_radical,
                       quotient_algebra, subspace_product, wedderburn_blocks)
from .errors import ValidationError
from .linalg import Matrix, Subspace


class TwoSidedIdeal:
    __slots__ = ("algebra", "space")

    def __init__(self, algebra: FiniteDimAlgebra, space: Subspace, validate=True):
        if space.ambient != algebra.dim:
            raise ValidationError("ideal subspace has wrong ambient dimension")
        if validate and not is_two_sided_ideal_space(algebra, space):
            raise ValidationError("subspace is not a two-sided ideal")
        self.algebra = algebra
        self.space = space

    @classmethod
    def from_generators(cls, algebra, gens):
        return cls(algebra, ideal_closure(algebra, list(gens)), validate=False)

    @classmethod
    def zero(cls, algebra):
        return cls(algebra, Subspace.zero(algebra.field, algebra.dim),
                   validate=False)

    @classmethod
    def whole(cls, algebra):
        return cls(algebra, Subspace.full(algebra.field, algebra.dim),
                   validate=False)

    @property
    def dim(self):
        return self.space.dim

    def is_zero(self):
        return self.space.dim == 0

    def is_whole(self):
        return self.space.dim == self.algebra.dim

    def is_proper(self):
        return not self.is_whole()

    def contains(self, other: "TwoSidedIdeal"):
        self._check_parent(other)
        return self.space.contains(other.space)

    def contains_element(self, x):
        return self.space.contains_vector(x)

    def __eq__(self, other):
        return (isinstance(other, TwoSidedIdeal)
                and self.algebra is other.algebra and self.space == other.space)

    def __hash__(self):
        return hash((id(self.algebra), self.space))

    def __repr__(self):
        return f"TwoSidedIdeal(dim {self.dim} of {self.algebra.name})"

    def _check_parent(self, other):
        if other.algebra is not self.algebra:
            if not other.algebra.structurally_equal(self.algebra):
                raise ValidationError("ideals belong to different algebras")

    def sum(self, other: "TwoSidedIdeal"):
        self._check_parent(other)
        return TwoSidedIdeal(self.algebra, self.space.sum(other.space),
                             validate=False)

    def intersect(self, other: "TwoSidedIdeal"):
        self._check_parent(other)
        return TwoSidedIdeal(self.algebra, self.space.intersect(other.space),
                             validate=False)

    def is_nilpotent(self):
        return is_nilpotent_space(self.algebra, self.space)

    def quotient(self, name=None):
        return quotient_algebra(self.algebra, self.space, name=name)


def ideal_product(i: TwoSidedIdeal, j: TwoSidedIdeal) -> TwoSidedIdeal:
    """span{x*y : x in i, y in j}; two-sided automatically."""
    i._check_parent(j)
    prod = subspace_product(i.algebra, i.space, j.space)
    return TwoSidedIdeal(i.algebra, prod)


def ideal_power(i: TwoSidedIdeal, n: int) -> TwoSidedIdeal:
    if n < 1:
        raise ValueError("ideal power needs n >= 1")
    acc = i
    for _ in range(n - 1):
        acc = ideal_product(acc, i)
    return acc


def is_prime(i: TwoSidedIdeal) -> bool:
    """Prime iff the quotient is a simple algebra."""
    if i.is_whole():
        raise ValidationError("primeness is about proper ideals")
    quot = quotient_algebra(i.algebra, i.space)[0]
    if jacobson_radical(quot).dim != 0:
        return False
    return len(wedderburn_blocks(quot)) == 1


@dataclass
class PrimeWitness:
    ideal: TwoSidedIdeal
    block_index: int

    @property
    def label(self):
        return f"P{self.block_index + 1}"


def minimal_primes(a: FiniteDimAlgebra) -> list[PrimeWitness]:
    """All primes of a finite-dimensional algebra (they are maximal).

    Each is the preimage of the ideal killing one Wedderburn block of the
    semisimple quotient; pairwise incomparable by construction.
    """
    rad = jacobson_radical(a)
    if rad.dim == 0:
        quot, proj, section = a, None, None
        blocks = wedderburn_blocks(a)
    else:
        quot, proj, section = quotient_algebra(a, rad)
        blocks = wedderburn_blocks(quot)
    out = []
    for t in range(len(blocks)):
        others = [r for s, b in enumerate(blocks) if s != t
                  for r in b.space.basis_rows()]
        kill_t = Subspace.from_vectors(quot.field, quot.dim, others)
        if proj is None:
            space = kill_t
        else:
            space = _preimage(proj.matrix, kill_t, rad)
        out.append(PrimeWitness(TwoSidedIdeal(a, space), t))
    return out


def _preimage(proj_matrix: Matrix, target: Subspace, kernel: Subspace) -> Subspace:
    f = proj_matrix.field
    comp_proj = target.complement_projection_matrix()
    cond = proj_matrix * comp_proj
    pre = cond.left_kernel()
    vecs = list(pre.rows) + list(kernel.basis_rows())
    return Subspace.from_vectors(f, proj_matrix.nrows, vecs)


def primes_over(a: FiniteDimAlgebra, i: TwoSidedIdeal) -> list[PrimeWitness]:
    """Primes of a containing i, as pullbacks of the primes of a/i."""
    if i.is_whole():
        raise ValidationError("no primes contain the whole algebra")
    if i.is_zero():
        return minimal_primes(a)
    quot, proj, _ = quotient_algebra(a, i.space)
    out = []
    for w in minimal_primes(quot):
        space = _preimage(proj.matrix, w.ideal.space, i.space)
        out.append(PrimeWitness(TwoSidedIdeal(a, space), w.block_index))
    return out


def prime_radical(i: TwoSidedIdeal) -> TwoSidedIdeal:
    """Intersection of all primes containing i."""
    a = i.algebra
    ws = primes_over(a, i)
    if not ws:
        raise ValidationError("an artinian algebra has at least one prime")
    acc = ws[0].ideal
    for w in ws[1:]:
        acc = acc.intersect(w.ideal)
    return TwoSidedIdeal(a, acc.space)


def prime_radical_of_zero(a: FiniteDimAlgebra) -> TwoSidedIdeal:
    return prime_radical(TwoSidedIdeal.zero(a))


def is_semiprime(a: FiniteDimAlgebra) -> bool:
    return prime_radical_of_zero(a).is_zero()


def annihilator(module) -> TwoSidedIdeal:
    """{a : M*a = 0}; the zero module is annihilated by everything."""
    a = module.algebra
    f = a.field
    if module.dim == 0:
        return TwoSidedIdeal.whole(a)
    rows = []
    for i in range(a.dim):
        m = module.action[i]
        rows.append(tuple(x for r in m.rows for x in r))
    big = Matrix(f, rows, module.dim * module.dim)
    space = Subspace.from_vectors(f, a.dim, big.left_kernel().rows)
    return TwoSidedIdeal(a, space)


def nilpotency_index(i: TwoSidedIdeal, inside: TwoSidedIdeal) -> int:
    """Smallest n with i^n contained in `inside`; bounded by dim + 1."""
    a = i.algebra
    cur = i
    for n in range(1, a.dim + 2):
        if inside.space.contains(cur.space):
            return n
        cur = ideal_product(cur, i)
    raise ValidationError("no containment within the dimension bound")
