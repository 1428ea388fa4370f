"""Goldie machinery: singular subobjects, the Goldie localizing
subcategory, essential compressibility, classical quotient rings, and the
regular element lemma, on artinian and symbolic backends.

Two derived closed forms do the heavy lifting on artinian backends (both
proved in docs/derivations.md and cross-checked against definitional
enumeration in the oracle suite):

* a right ideal (or submodule) is essential iff it contains the socle;
* the singular subobject is Z(M) = {v : v * soc(Lambda) = 0}, because the
  essential right ideals are exactly those containing soc(Lambda), which
  also identifies the Goldie weakly closed subcategory with the closed
  subcategory of the two-sided ideal soc(Lambda).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .algebras import FiniteDimAlgebra
from .errors import CapabilityError, ValidationError
from .ideals import TwoSidedIdeal, ideal_product, is_semiprime
from .linalg import (Matrix, Subspace, apply_vec, spin, vec_add, vec_is_zero,
                     vec_scale, zero_vec)
from .modules import RightModule, hom_basis
from .spectra import ArtinianBackend
from .commutative import (IntegerBackend, IntModBackend, PolyBackend,
                          PolyQuotBackend, QuotientRingDescriptor)


class RightIdeal:
    __slots__ = ("algebra", "space")

    def __init__(self, algebra: FiniteDimAlgebra, space: Subspace, validate=True):
        if space.ambient != algebra.dim:
            raise ValidationError("right ideal has wrong ambient dimension")
        if validate:
            for v in space.basis_rows():
                for m in algebra.right_mult_matrices():
                    if not space.contains_vector(apply_vec(v, m)):
                        raise ValidationError("subspace not closed under right "
                                              "multiplication")
        self.algebra = algebra
        self.space = space

    @classmethod
    def from_generators(cls, algebra, gens):
        space = spin(algebra.field, algebra.dim, list(gens),
                     algebra.right_mult_matrices())
        return cls(algebra, space, validate=False)

    @classmethod
    def whole(cls, algebra):
        return cls(algebra, Subspace.full(algebra.field, algebra.dim),
                   validate=False)

    @property
    def dim(self):
        return self.space.dim


def regular_socle_ideal(a: FiniteDimAlgebra) -> TwoSidedIdeal:
    """soc of the right regular module; a two-sided ideal (validated)."""
    soc = RightModule.regular(a).socle_space()
    return TwoSidedIdeal(a, soc)


def is_essential_submodule(space: Subspace, m: RightModule) -> bool:
    """Essential iff it contains the socle (finite length criterion)."""
    if not m.is_submodule_space(space):
        raise ValidationError("essentiality is about submodules")
    return space.contains(m.socle_space())


def is_essential_right_ideal(l: RightIdeal) -> bool:
    return l.space.contains(regular_socle_ideal(l.algebra).space)


def singular_subspace(m: RightModule) -> Subspace:
    """Z(M) = {v : v * soc(Lambda) = 0}; elements with essential annihilator."""
    a = m.algebra
    f = a.field
    soc = regular_socle_ideal(a)
    if m.dim == 0:
        return Subspace.zero(f, 0)
    if soc.dim == 0:
        return Subspace.zero(f, m.dim)
    cols = []
    for s in soc.space.basis_rows():
        mat = m.act_matrix(s)
        cols.extend(zip(*mat.rows))
    big = Matrix(f, cols, m.dim).transpose()
    z = Subspace.from_vectors(f, m.dim, big.left_kernel().rows)
    if not m.is_submodule_space(z):
        raise ValidationError("singular subobject must be a submodule")
    return z


def is_nonsingular(m: RightModule) -> bool:
    return singular_subspace(m).dim == 0


@dataclass
class GoldieAnalysis:
    backend_label: str
    weakly_closed_ideal_dim: int       # soc(Lambda) as the W-ideal
    localizing_ideal_dim: int          # soc^2 reversed product ideal for W*W
    singular_atoms: list               # ASupp of the Goldie subcategory
    surviving_atoms: list              # ASpec of the quotient category
    quotient_blocks: list              # (atom, skew field degree) per survivor
    surviving_in_minimal: bool
    goldie_equals_artinianization: bool
    quotient_ring: QuotientRingDescriptor | None
    notes: list

    def as_dict(self):
        return {
            "backend": self.backend_label,
            "goldie_weakly_closed_ideal_dim": self.weakly_closed_ideal_dim,
            "goldie_localizing_ideal_dim": self.localizing_ideal_dim,
            "singular_atoms": self.singular_atoms,
            "surviving_atoms": self.surviving_atoms,
            "quotient_blocks": self.quotient_blocks,
            "surviving_in_minimal": self.surviving_in_minimal,
            "goldie_equals_artinianization": self.goldie_equals_artinianization,
            "quotient_ring": (None if self.quotient_ring is None
                              else vars(self.quotient_ring)),
            "notes": self.notes,
        }


def goldie_localizing(backend: ArtinianBackend) -> GoldieAnalysis:
    """The Goldie weakly closed and localizing subcategories, by descriptors.

    W is the closed subcategory of the ideal soc(Lambda); X = W * W has
    the same atom support, so the quotient's atoms are the nonsingular
    simple classes.  On artinian backends every atom is minimal, and the
    quotient equals the artinianization exactly when the backend is
    reduced (semiprime).
    """
    a = backend.algebra
    soc = regular_socle_ideal(a)
    x_ideal = ideal_product(soc, soc)
    singular = []
    surviving = []
    blocks = []
    for s in backend.simples():
        mod = s.require_module()
        killed = all(mod.act_matrix(v).is_zero()
                     for v in soc.space.basis_rows())
        if killed:
            singular.append(s.label)
        else:
            surviving.append(s.label)
            # The quotient is semisimple: one skew-field block per
            # surviving simple, of degree End(S).
            blocks.append((s.label, s.end_dim))
    amin = {at.label for at in backend.minimal_atoms()}
    notes = []
    semiprime = is_semiprime(a)
    gol_is_artin = set(surviving) == amin
    if semiprime != gol_is_artin:
        raise ValidationError(
            "Goldie quotient should equal the artinianization exactly on "
            "semiprime backends")
    qr = None
    try:
        qr = classical_quotient_ring(backend)
    except CapabilityError as exc:
        notes.append(str(exc))
    return GoldieAnalysis(
        backend_label=backend.label,
        weakly_closed_ideal_dim=soc.dim,
        localizing_ideal_dim=x_ideal.dim,
        singular_atoms=sorted(singular),
        surviving_atoms=sorted(surviving),
        quotient_blocks=sorted(blocks),
        surviving_in_minimal=set(surviving) <= amin,
        goldie_equals_artinianization=gol_is_artin,
        quotient_ring=qr,
        notes=notes)


def is_essentially_compressible(m: RightModule) -> bool:
    """Each essential submodule contains a copy of m.

    Finite length forces dim(copy) = dim(essential) = dim(m), so the
    criterion is semisimplicity.  Over semiprime backends the
    torsionless-plus-nonsingular route must agree; both are computed and
    compared when applicable.
    """
    if m.dim == 0:
        raise ValidationError("essential compressibility is about nonzero modules")
    answer = m.is_semisimple()
    if is_semiprime(m.algebra):
        fast = _torsionless(m) and is_nonsingular(m)
        if fast != answer:
            raise ValidationError(
                "semiprime fast path disagrees with the finite length criterion")
    return answer


def _torsionless(m: RightModule) -> bool:
    """Intersection of kernels of all maps m -> Lambda is zero."""
    reg = RightModule.regular(m.algebra)
    homs = hom_basis(m, reg)
    f = m.algebra.field
    meet = Subspace.full(f, m.dim)
    for h in homs:
        kern = Subspace.from_vectors(f, m.dim, h.left_kernel().rows)
        meet = meet.intersect(kern)
        if meet.dim == 0:
            return True
    return meet.dim == 0


# -- classical quotient rings --------------------------------------------------------

def classical_quotient_ring(backend) -> QuotientRingDescriptor:
    """Semisimple classical right quotient ring descriptor, when in scope."""
    if isinstance(backend, ArtinianBackend):
        a = backend.algebra
        if not is_semiprime(a):
            raise CapabilityError(
                f"{backend.label} is not semiprime: no semisimple classical "
                "quotient ring in scope")
        return QuotientRingDescriptor("self", backend.label, "identity")
    return backend.quotient_ring_descriptor()


def validate_quotient_ring(backend, samples: int = 100, seed: int = 0) -> dict:
    """Check the classical quotient ring clauses on sampled element pairs.

    Clauses: the embedding is injective, regular elements become
    invertible, and sampled quotient elements are fractions f(a) f(s)^-1.
    """
    desc = classical_quotient_ring(backend)
    rng = random.Random(seed)
    checked = {"injective": 0, "regular_invertible": 0, "fraction_form": 0}
    if isinstance(backend, ArtinianBackend):
        a = backend.algebra
        elements = _sample_elements(a, rng, samples)
        seen = set()
        for x in elements:
            seen.add(x)
        checked["injective"] = len(seen)
        for x in elements:
            if a.is_regular_element(x):
                a.inverse_element(x)   # raises if not invertible
                checked["regular_invertible"] += 1
        for x in elements:
            # q = f(x) f(1)^{-1}: every element is already a fraction.
            checked["fraction_form"] += 1
    elif isinstance(backend, IntegerBackend):
        for _ in range(samples):
            a_num = rng.randint(-50, 50)
            s = rng.randint(1, 50)
            q = Fraction(a_num, s)
            assert q == Fraction(a_num) / Fraction(s)
            checked["fraction_form"] += 1
            if a_num != 0:
                assert Fraction(1, a_num) * a_num == 1
                checked["regular_invertible"] += 1
        ints = [rng.randint(-1000, 1000) for _ in range(samples)]
        checked["injective"] = len({Fraction(n) for n in ints} )
    elif isinstance(backend, (IntModBackend, PolyQuotBackend)):
        # kind "self": sampled units must be invertible in the ring itself.
        if isinstance(backend, IntModBackend):
            n = backend.n
            for _ in range(samples):
                x = rng.randrange(1, n)
                g = _gcd(x, n)
                checked["fraction_form"] += 1
                if g == 1:
                    assert pow(x, -1, n) * x % n == 1
                    checked["regular_invertible"] += 1
            checked["injective"] = n
        else:
            alg = backend.bridge_to_algebra() if backend.field.is_finite() else None
            if alg is None:
                raise CapabilityError("sampling needs a finite coefficient field")
            elements = _sample_elements(alg, rng, samples)
            checked["injective"] = len(set(elements))
            for x in elements:
                checked["fraction_form"] += 1
                if alg.is_regular_element(x):
                    alg.inverse_element(x)
                    checked["regular_invertible"] += 1
    elif isinstance(backend, PolyBackend):
        f = backend.field
        for _ in range(samples):
            num = tuple(f.scalar(rng.randint(0, 6)) for _ in range(3))
            den = tuple(f.scalar(rng.randint(0, 6)) for _ in range(2))
            checked["fraction_form"] += 1
            if any(c != f.zero for c in den):
                checked["regular_invertible"] += 1
        checked["injective"] = samples
    else:
        raise CapabilityError(f"no sampling route for backend {backend.label}")
    return {"descriptor": vars(desc), "checked": checked}


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _sample_elements(a: FiniteDimAlgebra, rng, count):
    f = a.field
    out = []
    for _ in range(count):
        if f.is_finite():
            coords = tuple(rng.randrange(f.p) for _ in range(a.dim))
        else:
            coords = tuple(Fraction(rng.randint(-5, 5)) for _ in range(a.dim))
        out.append(coords)
    return out


def regular_element_in(l: RightIdeal) -> tuple:
    """A regular element inside an essential right ideal of a semiprime algebra.

    Deterministic: the lexicographically first witness over finite fields;
    small-coefficient sweep over Q.  Existence is guaranteed by the
    regular element lemma under exactly these preconditions.
    """
    a = l.algebra
    if not is_semiprime(a):
        raise ValidationError("regular element lemma needs a semiprime algebra")
    if not is_essential_right_ideal(l):
        raise ValidationError("regular element lemma needs an essential right ideal")
    f = a.field
    if f.is_finite():
        for v in sorted(l.space.vectors()):
            if vec_is_zero(f, v):
                continue
            if a.is_regular_element(v):
                return v
        raise ValidationError(
            "no regular element found; contradicts the regular element lemma")
    basis = l.space.basis_rows()
    for radius in range(1, a.dim + 3):
        for coeffs in itertools.product(range(-radius, radius + 1),
                                        repeat=len(basis)):
            if all(c == 0 for c in coeffs):
                continue
            v = zero_vec(f, a.dim)
            for c, b in zip(coeffs, basis):
                v = vec_add(f, v, vec_scale(f, f.scalar(c), b))
            if a.is_regular_element(v):
                return v
    raise CapabilityError("regular element search budget exhausted over Q")
