"""Symbolic noetherian commutative backends: Z, Z/n, k[x], k[x]/(f), GrMod k[x].

All implement the same duck-typed spectrum surface as ``ArtinianBackend``:
atoms/molecules (windowed when the spectrum is infinite), order predicates,
phi/psi, minimality, and the two flag routes.  Prime data comes from exact
factorization: trial division over Z, irreducibility tables up to degree
four over F_p (which certify factorizations up to degree nine), and the
rational-root-plus-discriminant fragment over Q.  Anything beyond raises
``CapabilityError`` instead of guessing.

The graded polynomial backend reproduces the boundary behavior of graded
module categories over k[x]: every atom is minimal, the degree-shift
simples are the only molecules, the free module has no prime subobject,
phi has no value on the generic atom, and artinianization is refused
because no artinian generator exists.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebras import FiniteDimAlgebra, companion_algebra
from .errors import CapabilityError, ValidationError
from .linalg import GF, field_name
from .spectra import Atom, Molecule, PhiUndefinedError


# -- polynomial arithmetic (coefficients low-to-high) ---------------------------

def poly_trim(field, p):
    p = [field.scalar(c) for c in p]
    while p and p[-1] == field.zero:
        p.pop()
    return tuple(p)


def poly_deg(p):
    return len(p) - 1


def poly_add(field, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else field.zero
        y = b[i] if i < len(b) else field.zero
        out.append(field.add(x, y))
    return poly_trim(field, out)


def poly_scale(field, c, a):
    return poly_trim(field, [field.mul(c, x) for x in a])


def poly_mul(field, a, b):
    if not a or not b:
        return ()
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == field.zero:
            continue
        for j, y in enumerate(b):
            if y != field.zero:
                out[i + j] = field.add(out[i + j], field.mul(x, y))
    return poly_trim(field, out)


def poly_divmod(field, a, b):
    a = list(poly_trim(field, a))
    b = poly_trim(field, b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [field.zero] * max(0, len(a) - len(b) + 1)
    inv_lead = field.inv(b[-1])
    while len(a) >= len(b) and any(c != field.zero for c in a):
        if a[-1] == field.zero:
            a.pop()
            continue
        shift = len(a) - len(b)
        coeff = field.mul(a[-1], inv_lead)
        q[shift] = coeff
        for i, c in enumerate(b):
            a[shift + i] = field.sub(a[shift + i], field.mul(coeff, c))
        while a and a[-1] == field.zero:
            a.pop()
    return poly_trim(field, q), poly_trim(field, a)


def poly_mod(field, a, b):
    return poly_divmod(field, a, b)[1]


def poly_monic(field, a):
    a = poly_trim(field, a)
    if not a:
        return a
    inv = field.inv(a[-1])
    return poly_scale(field, inv, a)


def poly_gcd(field, a, b):
    a, b = poly_trim(field, a), poly_trim(field, b)
    while b:
        a, b = b, poly_mod(field, a, b)
    return poly_monic(field, a)


def poly_derivative(field, a):
    return poly_trim(field, [field.mul(field.scalar(i), c)
                             for i, c in enumerate(a)][1:])


def poly_eval(field, a, x):
    acc = field.zero
    for c in reversed(a):
        acc = field.add(field.mul(acc, x), c)
    return acc


def poly_pow_mod(field, base, e, mod):
    acc = (field.one,)
    base = poly_mod(field, base, mod)
    while e:
        if e & 1:
            acc = poly_mod(field, poly_mul(field, acc, base), mod)
        e >>= 1
        if e:
            base = poly_mod(field, poly_mul(field, base, base), mod)
    return acc


def poly_label(field, p):
    """Human-readable canonical string, highest degree first."""
    p = poly_trim(field, p)
    if not p:
        return "0"
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == field.zero:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            xs = "x" if i == 1 else f"x^{i}"
            terms.append(xs if c == field.one else f"{c}*{xs}")
    return "+".join(terms).replace("+-", "-")


# -- irreducibility and factorization -------------------------------------------

@lru_cache(maxsize=None)
def irreducible_polys(p: int, max_deg: int):
    """Monic irreducibles over F_p up to max_deg, by (degree, coeff) order."""
    f = GF(p)
    irr = []
    for deg in range(1, max_deg + 1):
        for tail in itertools.product(range(p), repeat=deg):
            poly = tuple(f.scalar(c) for c in tail) + (f.one,)
            if not any(poly_mod(f, poly, q) == () for q in irr
                       if poly_deg(q) <= deg // 2):
                irr.append(poly)
    return tuple(irr)


_GF_TABLE_DEG = 4


def is_irreducible(field, poly) -> bool:
    poly = poly_monic(field, poly_trim(field, poly))
    d = poly_deg(poly)
    if d <= 0:
        return False
    if d == 1:
        return True
    if field.is_finite():
        if d > 2 * _GF_TABLE_DEG + 1:
            raise CapabilityError(
                f"irreducibility over F_{field.p} supported up to degree "
                f"{2 * _GF_TABLE_DEG + 1}")
        return not any(poly_mod(field, poly, q) == ()
                       for q in irreducible_polys(field.p, min(_GF_TABLE_DEG, d // 2)))
    facs = factor_polynomial(field, poly)
    return len(facs) == 1 and facs[0][1] == 1


def _rational_root_candidates(poly):
    """Rational root candidates of an integer-normalized polynomial."""
    denom_lcm = 1
    for c in poly:
        denom_lcm = denom_lcm * c.denominator // _gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in poly]
    while ints and ints[0] == 0:
        ints = ints[1:]
    if not ints:
        return []
    a0, an = abs(ints[0]), abs(ints[-1])
    ps = _divisors(a0)
    qs = _divisors(an)
    cands = {Fraction(0)}
    for p in ps:
        for q in qs:
            cands.add(Fraction(p, q))
            cands.add(Fraction(-p, q))
    return sorted(cands)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _divisors(n):
    n = abs(n)
    if n == 0:
        return [1]
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))


def factor_polynomial(field, poly):
    """Complete factorization into monic irreducibles: [(factor, mult)].

    F_p: trial division against the degree-four table certifies any input
    of degree at most nine.  Q: rational roots are peeled; what remains is
    finished for degree <= 2 by the discriminant and certified irreducible
    for degree 3; an unresolved quartic raises CapabilityError.
    """
    poly = poly_monic(field, poly_trim(field, poly))
    d = poly_deg(poly)
    if d < 0:
        raise ValidationError("cannot factor the zero polynomial")
    if d == 0:
        return []
    out = {}

    def push(fac, mult=1):
        fac = poly_monic(field, fac)
        out[fac] = out.get(fac, 0) + mult

    if field.is_finite():
        if d > 2 * _GF_TABLE_DEG + 1:
            raise CapabilityError(
                f"factorization over F_{field.p} supported up to degree "
                f"{2 * _GF_TABLE_DEG + 1}")
        rest = poly
        for q in irreducible_polys(field.p, _GF_TABLE_DEG):
            while poly_deg(rest) >= poly_deg(q):
                quo, rem = poly_divmod(field, rest, q)
                if rem == ():
                    push(q)
                    rest = quo
                else:
                    break
            if poly_deg(rest) <= 0:
                break
        if poly_deg(rest) > 0:
            # No factor of degree <= 4 exists, and deg rest <= 9: any proper
            # factorization would contain one of degree <= 4.  Irreducible.
            push(rest)
        return sorted(out.items())

    rest = poly
    changed = True
    while changed and poly_deg(rest) > 0:
        changed = False
        for r in _rational_root_candidates(rest):
            if poly_eval(field, rest, r) == field.zero:
                lin = (field.neg(r), field.one)
                rest = poly_divmod(field, rest, lin)[0]
                push(lin)
                changed = True
                break
    dr = poly_deg(rest)
    if dr == 0:
        return sorted(out.items())
    if dr == 1:
        push(rest)
        return sorted(out.items())
    if dr == 2:
        b, a = rest[1], rest[2]
        c = rest[0]
        disc = b * b - 4 * a * c
        root = _rational_sqrt(disc)
        if root is None:
            push(rest)
            return sorted(out.items())
        r1 = (-b + root) / 2
        r2 = (-b - root) / 2
        push((field.neg(r1), field.one))
        push((field.neg(r2), field.one))
        return sorted(out.items())
    if dr == 3:
        # A cubic without rational roots is irreducible over Q.
        push(rest)
        return sorted(out.items())
    raise CapabilityError(
        "factorization over Q beyond rational roots and quadratics "
        f"is out of desk scope (degree {dr} remainder)")


def _rational_sqrt(x: Fraction):
    if x < 0:
        return None
    num = _int_sqrt(x.numerator)
    den = _int_sqrt(x.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def _int_sqrt(n: int):
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def factor_integer(n: int):
    """[(prime, multiplicity)] by trial division; desk-scale inputs."""
    n = abs(n)
    if n == 0:
        raise ValidationError("cannot factor zero")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            m = 0
            while n % d == 0:
                n //= d
                m += 1
            out.append((d, m))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def primes_up_to(bound: int):
    sieve = [True] * (bound + 1)
    out = []
    for p in range(2, bound + 1):
        if sieve[p]:
            out.append(p)
            for m in range(p * p, bound + 1, p):
                sieve[m] = False
    return out


def squarefree_part_integer(n: int) -> int:
    return _prod(p for p, _m in factor_integer(n))


def _prod(it):
    out = 1
    for x in it:
        out *= x
    return out


# -- backend descriptors -----------------------------------------------------------

@dataclass
class QuotientRingDescriptor:
    kind: str          # self | fraction-field | product-of-fields
    description: str
    embedding: str


@dataclass
class ArtinianizationDescriptor:
    kind: str          # identity | module-category
    description: str
    atoms: list


def _require_window(window):
    if window is None:
        raise CapabilityError("window required for an infinite spectrum")
    return window


class IntegerBackend:
    kind = "int"
    has_noetherian_generator = True
    complete = False

    def __init__(self):
        self.label = "Z"

    def _primes(self, window):
        return primes_up_to(_require_window(window))

    def atoms(self, window=None):
        out = [Atom(self.label, ("zero",), "(0)")]
        out.extend(Atom(self.label, ("p", p), f"({p})")
                   for p in self._primes(window))
        return out

    def molecules(self, window=None):
        out = [Molecule(self.label, ("zero",), "(0)")]
        out.extend(Molecule(self.label, ("p", p), f"({p})")
                   for p in self._primes(window))
        return out

    def atom_leq(self, a, b):
        return a == b or a.key == ("zero",)

    def molecule_leq(self, r, s):
        return r == s or r.key == ("zero",)

    def minimal_atoms(self, window=None):
        return [Atom(self.label, ("zero",), "(0)")]

    def minimal_molecules(self, window=None):
        return [Molecule(self.label, ("zero",), "(0)")]

    def phi(self, a):
        return Molecule(self.label, a.key, a.label)

    def psi(self, r):
        return Atom(self.label, r.key, r.label)

    def is_semiprime(self):
        return True

    def atomic_flags(self):
        return {"reduced": True, "irreducible": True, "integral": True}

    def molecular_flags(self):
        return {"reduced": True, "irreducible": True, "integral": True}

    def reduced_ring_label(self):
        return "Z"

    def artinianization(self):
        return ArtinianizationDescriptor(
            "module-category", "Mod Q (localization at the generic point)",
            ["(0)"])

    def quotient_ring_descriptor(self):
        return QuotientRingDescriptor(
            "fraction-field", "Q", "n -> n/1")


class IntModBackend:
    kind = "int_mod"
    has_noetherian_generator = True
    complete = True

    def __init__(self, n: int):
        if n < 2:
            raise ValidationError("modulus must be at least 2")
        self.n = n
        self.label = f"Z/{n}"
        self.factors = factor_integer(n)

    def atoms(self, window=None):
        return [Atom(self.label, ("p", p), f"({p})") for p, _ in self.factors]

    def molecules(self, window=None):
        return [Molecule(self.label, ("p", p), f"({p})") for p, _ in self.factors]

    def atom_leq(self, a, b):
        return a == b

    def molecule_leq(self, r, s):
        return r == s

    def minimal_atoms(self, window=None):
        return self.atoms()

    def minimal_molecules(self, window=None):
        return self.molecules()

    def phi(self, a):
        return Molecule(self.label, a.key, a.label)

    def psi(self, r):
        return Atom(self.label, r.key, r.label)

    def is_semiprime(self):
        return all(m == 1 for _p, m in self.factors)

    def atomic_flags(self):
        return {"reduced": self.is_semiprime(),
                "irreducible": len(self.factors) == 1,
                "integral": self.is_semiprime() and len(self.factors) == 1}

    molecular_flags = atomic_flags

    def radical_generator(self) -> int:
        return squarefree_part_integer(self.n)

    def reduced_ring_label(self):
        return f"Z/{self.radical_generator()}"

    def artinianization(self):
        return ArtinianizationDescriptor(
            "identity", self.label, [a.label for a in self.atoms()])

    def quotient_ring_descriptor(self):
        if not self.is_semiprime():
            raise CapabilityError(
                f"{self.label} is not semiprime: no semisimple classical "
                "quotient ring in scope")
        return QuotientRingDescriptor("self", self.label, "identity")


class PolyBackend:
    kind = "poly"
    has_noetherian_generator = True
    complete = False

    def __init__(self, field):
        self.field = field
        self.label = f"{field_name(field)}[x]"

    def _irreducibles(self, window):
        bound = _require_window(window)
        if self.field.is_finite():
            return [q for q in irreducible_polys(self.field.p,
                                                 min(bound, _GF_TABLE_DEG))]
        f = self.field
        out = []
        for c in range(0, bound + 1):
            for sign in (1, -1) if c else (1,):
                out.append((f.scalar(-sign * c), f.one))
        return out

    def atoms(self, window=None):
        out = [Atom(self.label, ("zero",), "(0)")]
        out.extend(Atom(self.label, ("poly", q), f"({poly_label(self.field, q)})")
                   for q in self._irreducibles(window))
        return out

    def molecules(self, window=None):
        out = [Molecule(self.label, ("zero",), "(0)")]
        out.extend(Molecule(self.label, ("poly", q),
                            f"({poly_label(self.field, q)})")
                   for q in self._irreducibles(window))
        return out

    def atom_leq(self, a, b):
        return a == b or a.key == ("zero",)

    def molecule_leq(self, r, s):
        return r == s or r.key == ("zero",)

    def minimal_atoms(self, window=None):
        return [Atom(self.label, ("zero",), "(0)")]

    def minimal_molecules(self, window=None):
        return [Molecule(self.label, ("zero",), "(0)")]

    def phi(self, a):
        return Molecule(self.label, a.key, a.label)

    def psi(self, r):
        return Atom(self.label, r.key, r.label)

    def is_semiprime(self):
        return True

    def atomic_flags(self):
        return {"reduced": True, "irreducible": True, "integral": True}

    molecular_flags = atomic_flags

    def reduced_ring_label(self):
        return self.label

    def artinianization(self):
        name = field_name(self.field)
        return ArtinianizationDescriptor(
            "module-category", f"Mod {name}(x) (localization at the generic point)",
            ["(0)"])

    def quotient_ring_descriptor(self):
        return QuotientRingDescriptor(
            "fraction-field", f"{field_name(self.field)}(x)", "f -> f/1")


class PolyQuotBackend:
    kind = "poly_quot"
    has_noetherian_generator = True
    complete = True

    def __init__(self, field, modulus):
        self.field = field
        self.modulus = poly_monic(field, poly_trim(field, modulus))
        if poly_deg(self.modulus) < 1:
            raise ValidationError("modulus must have degree >= 1")
        self.label = f"{field_name(field)}[x]/({poly_label(field, self.modulus)})"
        self.factors = factor_polynomial(field, self.modulus)

    def atoms(self, window=None):
        return [Atom(self.label, ("poly", q), f"({poly_label(self.field, q)})")
                for q, _m in self.factors]

    def molecules(self, window=None):
        return [Molecule(self.label, ("poly", q),
                         f"({poly_label(self.field, q)})")
                for q, _m in self.factors]

    def atom_leq(self, a, b):
        return a == b

    def molecule_leq(self, r, s):
        return r == s

    def minimal_atoms(self, window=None):
        return self.atoms()

    def minimal_molecules(self, window=None):
        return self.molecules()

    def phi(self, a):
        return Molecule(self.label, a.key, a.label)

    def psi(self, r):
        return Atom(self.label, r.key, r.label)

    def is_semiprime(self):
        return all(m == 1 for _q, m in self.factors)

    def atomic_flags(self):
        return {"reduced": self.is_semiprime(),
                "irreducible": len(self.factors) == 1,
                "integral": self.is_semiprime() and len(self.factors) == 1}

    molecular_flags = atomic_flags

    def radical_generator(self):
        out = (self.field.one,)
        for q, _m in self.factors:
            out = poly_mul(self.field, out, q)
        return out

    def reduced_ring_label(self):
        rad = self.radical_generator()
        return f"{field_name(self.field)}[x]/({poly_label(self.field, rad)})"

    def artinianization(self):
        return ArtinianizationDescriptor(
            "identity", self.label, [a.label for a in self.atoms()])

    def quotient_ring_descriptor(self):
        if not self.is_semiprime():
            raise CapabilityError(
                f"{self.label} is not semiprime: no semisimple classical "
                "quotient ring in scope")
        return QuotientRingDescriptor("self", self.label, "identity")

    def bridge_to_algebra(self) -> FiniteDimAlgebra:
        """Structure-constant realization on the basis 1, x, ..., x^{d-1}."""
        return companion_algebra(self.field, self.modulus,
                                 name=self.label)


# -- the graded counterexample backend -----------------------------------------------

@dataclass(frozen=True)
class GradedModuleDescriptor:
    """Finitely generated graded module over k[x], up to isomorphism.

    free_shifts: shifts m of free summands k[x](m).
    torsion: pairs (length, socle_shift) of uniserial torsion summands.
    """
    free_shifts: tuple = ()
    torsion: tuple = ()

    @staticmethod
    def free(*shifts):
        return GradedModuleDescriptor(tuple(sorted(shifts)), ())

    @staticmethod
    def simple(shift):
        return GradedModuleDescriptor((), ((1, shift),))

    def is_zero(self):
        return not self.free_shifts and not self.torsion


class GradedPolyBackend:
    """Z-graded modules over k[x] with deg x = 1.

    Every atom is minimal (the order is discrete), the molecules are the
    shift simples only, and there is no artinian generator, so the
    artinianization and the generic phi value do not exist.
    """

    kind = "graded_poly"
    has_noetherian_generator = False
    complete = False

    def __init__(self, field):
        self.field = field
        self.label = f"GrMod {field_name(field)}[x]"

    @staticmethod
    def _window_range(window):
        w = _require_window(window)
        if isinstance(w, tuple):
            lo, hi = w
        else:
            lo, hi = -abs(w), abs(w)
        return range(lo, hi + 1)

    def atoms(self, window=None):
        out = [Atom(self.label, ("generic",), "k[x]")]
        out.extend(Atom(self.label, ("shift", n), f"S({n})")
                   for n in self._window_range(window))
        return out

    def molecules(self, window=None):
        return [Molecule(self.label, ("shift", n), f"S({n})")
                for n in self._window_range(window)]

    def atom_leq(self, a, b):
        return a == b

    def molecule_leq(self, r, s):
        return r == s

    def minimal_atoms(self, window=None):
        return self.atoms(window)

    def minimal_molecules(self, window=None):
        return self.molecules(window)

    def phi(self, a):
        if a.key == ("generic",):
            raise PhiUndefinedError(
                "no prime monoform object represents the generic atom: "
                "every nonzero graded submodule of k[x] is a shifted copy "
                "whose closed closure keeps shrinking")
        return Molecule(self.label, a.key, a.label)

    def psi(self, r):
        return Atom(self.label, r.key, r.label)

    def is_semiprime(self):
        return True

    def artinianization(self):
        raise CapabilityError(
            "no artinian generator: artinianization undefined for this backend")

    def reduced_ring_label(self):
        raise CapabilityError(
            "no smallest weakly closed subcategory with full atom support exists here")

    def quotient_ring_descriptor(self):
        raise CapabilityError(
            "classical quotient ring out of scope for the graded backend")

    # -- descriptor-level module operations --------------------------------------

    def mass(self, m: GradedModuleDescriptor, window=None):
        """Associated molecules: socle shifts of torsion parts; free parts none."""
        return {Molecule(self.label, ("shift", s), f"S({s})")
                for _l, s in m.torsion}

    def ass_atoms(self, m: GradedModuleDescriptor, window=None):
        out = set()
        if m.free_shifts:
            out.add(Atom(self.label, ("generic",), "k[x]"))
        out.update(Atom(self.label, ("shift", s), f"S({s})")
                   for _l, s in m.torsion)
        return out

    def asupp(self, m: GradedModuleDescriptor, window):
        """Atom support within the window; free parts are upward-infinite."""
        out = set()
        rng = self._window_range(window)
        if m.free_shifts:
            out.add(Atom(self.label, ("generic",), "k[x]"))
            top = max(m.free_shifts)
            out.update(Atom(self.label, ("shift", n), f"S({n})")
                       for n in rng if n <= top)
        for length, s in m.torsion:
            out.update(Atom(self.label, ("shift", s + j), f"S({s + j})")
                       for j in range(length) if (s + j) in rng)
        return out

    def is_prime_object(self, m: GradedModuleDescriptor) -> bool:
        """Shift-isotypic semisimple descriptors only; free parts never.

        A nonzero graded submodule of a free part is a smaller shifted
        copy generating a strictly smaller closed subcategory, so free
        modules are not prime.
        """
        if m.is_zero():
            raise ValidationError("prime is about nonzero objects")
        if m.free_shifts:
            return False
        shifts = {s for _l, s in m.torsion}
        lengths = {l for l, _s in m.torsion}
        return lengths == {1} and len(shifts) == 1
