"""Symbolic backends: factorization, spectra, bridging, the graded case."""

import random

import pytest

from ringspectra.commutative import (GradedModuleDescriptor,
                                     GradedPolyBackend, IntegerBackend,
                                     IntModBackend, PolyBackend,
                                     PolyQuotBackend, factor_integer,
                                     factor_polynomial, irreducible_polys,
                                     is_irreducible, poly_mul, primes_up_to)
from ringspectra.errors import CapabilityError, ValidationError
from ringspectra.ideals import (TwoSidedIdeal, is_semiprime, minimal_primes,
                                prime_radical_of_zero)
from ringspectra.linalg import F2, F3, QQ
from ringspectra.spectra import PhiUndefinedError, verify_correspondence


def test_factor_integer_examples():
    assert factor_integer(12) == [(2, 2), (3, 1)]
    assert factor_integer(30) == [(2, 1), (3, 1), (5, 1)]
    with pytest.raises(ValidationError):
        factor_integer(0)


def test_factor_poly_f2():
    # x^2 + x = x(x+1)
    facs = factor_polynomial(F2, [0, 1, 1])
    assert facs == [((0, 1), 1), ((1, 1), 1)]
    # x^2 + x + 1 irreducible over F2
    assert factor_polynomial(F2, [1, 1, 1]) == [((1, 1, 1), 1)]
    assert is_irreducible(F2, [1, 1, 1])


def test_factor_poly_f3():
    # x^2 + 1 has no root in F3: irreducible.
    assert is_irreducible(F3, [1, 0, 1])
    # x^2 - 1 = (x+1)(x+2)
    facs = factor_polynomial(F3, [2, 0, 1])
    assert len(facs) == 2 and all(m == 1 for _f, m in facs)


def test_factor_reassembles(small_f2_corpus):
    rng = random.Random(9)
    for field in (F2, F3):
        for _ in range(20):
            coeffs = [rng.randrange(field.p) for _ in range(4)] + [1]
            facs = factor_polynomial(field, coeffs)
            prod = (field.one,)
            for fac, mult in facs:
                for _ in range(mult):
                    prod = poly_mul(field, prod, fac)
            from ringspectra.commutative import poly_monic, poly_trim
            assert prod == poly_monic(field, poly_trim(field, coeffs))


def test_factor_poly_q():
    q = QQ
    facs = factor_polynomial(q, [-1, 0, 1])        # x^2 - 1
    assert len(facs) == 2
    assert factor_polynomial(q, [1, 0, 1]) == [((q.one, q.zero, q.one), 1)]
    # Cubic without rational roots is certified irreducible.
    assert is_irreducible(q, [2, 0, 0, 1])          # x^3 + 2
    # Rootless quartic is out of desk scope.
    with pytest.raises(CapabilityError):
        factor_polynomial(q, [1, 0, 0, 0, 1])       # x^4 + 1


def test_irreducible_table_counts():
    # Monic irreducibles over F2: deg 1: 2, deg 2: 1, deg 3: 2, deg 4: 3.
    table = irreducible_polys(2, 4)
    by_deg = {}
    for p in table:
        by_deg[len(p) - 1] = by_deg.get(len(p) - 1, 0) + 1
    assert by_deg == {1: 2, 2: 1, 3: 2, 4: 3}


def test_int_backend_order_and_maps():
    z = IntegerBackend()
    atoms = z.atoms(window=5)
    labels = [a.label for a in atoms]
    assert labels == ["(0)", "(2)", "(3)", "(5)"]
    zero, two, three = atoms[0], atoms[1], atoms[2]
    assert z.atom_leq(zero, two) and z.atom_leq(zero, three)
    assert not z.atom_leq(two, three) and not z.atom_leq(three, two)
    assert z.phi(two).label == "(2)"
    assert z.psi(z.molecules(5)[0]).label == "(0)"
    assert [a.label for a in z.minimal_atoms()] == ["(0)"]
    assert z.atomic_flags()["integral"] is True


def test_int_backend_requires_window():
    with pytest.raises(CapabilityError):
        IntegerBackend().atoms()


def test_int_mod_backend():
    z12 = IntModBackend(12)
    assert [m.label for m in z12.molecules()] == ["(2)", "(3)"]
    assert not z12.is_semiprime()
    assert z12.reduced_ring_label() == "Z/6"
    assert z12.artinianization().kind == "identity"
    z30 = IntModBackend(30)
    assert z30.is_semiprime()
    assert z30.quotient_ring_descriptor().kind == "self"


def test_poly_quot_backend():
    b = PolyQuotBackend(F2, [0, 0, 1, 1])          # x^2 (x+1)
    assert sorted(m.label for m in b.molecules()) == ["(x)", "(x+1)"]
    assert not b.is_semiprime()
    assert b.reduced_ring_label() == "F2[x]/(x^2+x)"
    b2 = PolyQuotBackend(F3, [1, 0, 1])            # irreducible: field F9
    assert len(b2.molecules()) == 1
    assert b2.is_semiprime() and b2.atomic_flags()["integral"]


def test_poly_backend_windowed():
    b = PolyBackend(F2)
    atoms = b.atoms(window=2)
    assert atoms[0].label == "(0)"
    assert "(x)" in {a.label for a in atoms}
    assert "(x^2+x+1)" in {a.label for a in atoms}
    assert b.artinianization().description.startswith("Mod F2(x)")
    bq = PolyBackend(QQ)
    assert {a.label for a in bq.atoms(window=1)} >= {"(0)", "(x)", "(x+1)"}


def test_verify_commutative_backends():
    for backend, window in [(IntegerBackend(), 29), (IntModBackend(12), None),
                            (PolyQuotBackend(F2, [0, 0, 1, 1]), None),
                            (PolyBackend(F3), 2)]:
        rep = verify_correspondence(backend, window)
        bad = [r.name for r in rep.assertions if not (r.passed or r.skipped)]
        assert not bad, (backend.label, bad)


def test_bridge_cross_representation_examples():
    for field, coeffs, nprimes in [(F2, [0, 0, 1], 1), (F2, [0, 1, 1], 2),
                                   (F3, [1, 0, 1], 1)]:
        b = PolyQuotBackend(field, coeffs)
        alg = b.bridge_to_algebra()
        ws = minimal_primes(alg)
        assert len(ws) == len(b.molecules())
        assert is_semiprime(alg) == b.is_semiprime()


def test_bridge_cross_representation_random():
    """Symbolic and structure-constant spectra agree at the label level."""
    rng = random.Random(31)
    cases = 0
    while cases < 20:
        field = (F2, F3)[rng.randrange(2)]
        deg = rng.randrange(1, 5)
        coeffs = [field.scalar(rng.randrange(field.p)) for _ in range(deg)]
        coeffs.append(field.one)
        if len([c for c in coeffs if c != field.zero]) == 1:
            continue                               # x^k handled, but keep mix
        b = PolyQuotBackend(field, coeffs)
        alg = b.bridge_to_algebra()
        ws = minimal_primes(alg)
        assert len(ws) == len(b.molecules())
        # Label-level agreement: the ideal generated by g(x) in the
        # companion algebra is exactly one enumerated prime, for each g.
        spaces = {w.ideal.space for w in ws}
        for q, _m in b.factors:
            gen = _poly_element(alg, b.modulus, q)
            gen_ideal = TwoSidedIdeal.from_generators(alg, [gen])
            assert gen_ideal.space in spaces
        # Radical agreement: squarefree part vs prime radical of zero.
        rad_sym = b.radical_generator()
        rad_alg = prime_radical_of_zero(alg)
        gen_ideal = TwoSidedIdeal.from_generators(
            alg, [_poly_element(alg, b.modulus, rad_sym)])
        assert gen_ideal.space == rad_alg.space
        assert is_semiprime(alg) == b.is_semiprime()
        cases += 1


def _poly_element(alg, modulus, coeffs):
    """Coordinates of g(xbar) in the companion algebra of the modulus."""
    f = alg.field
    if alg.dim > 1:
        x = alg.basis_coords(1)
    else:
        # Degree-one modulus: xbar is the scalar root -c0.
        x = tuple(f.mul(f.neg(modulus[0]), u) for u in alg.unit)
    val = [f.zero] * alg.dim
    power = alg.unit
    for c in coeffs:
        if c != f.zero:
            val = [f.add(v, f.mul(c, p)) for v, p in zip(val, power)]
        power = alg.mul(power, x)
    return tuple(val)


def test_ass_agreement_with_classical_for_z_mod_n():
    """Associated primes of Z/n are the primes dividing n."""
    for n in range(2, 31):
        b = IntModBackend(n)
        expected = {p for p, _m in factor_integer(n)}
        got = {key[1] for key in (m.key for m in b.molecules())}
        assert got == expected, n


def test_graded_backend_behaviors():
    g = GradedPolyBackend(F2)
    atoms = g.atoms(window=(-1, 1))
    assert [a.label for a in atoms] == ["k[x]", "S(-1)", "S(0)", "S(1)"]
    # Every atom is minimal: the order is discrete.
    for x in atoms:
        for y in atoms:
            assert g.atom_leq(x, y) == (x == y)
    assert len(g.molecules(window=(-2, 2))) == 5
    assert [m.label for m in g.molecules(window=(-1, 1))] == \
        ["S(-1)", "S(0)", "S(1)"]


def test_graded_counterexample_fidelity():
    g = GradedPolyBackend(F2)
    kx = GradedModuleDescriptor.free(0)
    assert g.mass(kx) == set()                     # no prime subobject
    with pytest.raises(PhiUndefinedError):
        g.phi(g.atoms(window=1)[0])                # generic atom
    with pytest.raises(CapabilityError):
        g.artinianization()                        # no artinian generator
    assert g.is_prime_object(GradedModuleDescriptor.simple(3))
    assert not g.is_prime_object(GradedModuleDescriptor.free(-2))
    mixed = GradedModuleDescriptor((0,), ((1, 2),))
    assert g.mass(mixed) == {m for m in g.molecules(window=3)
                             if m.key == ("shift", 2)}
    assert not g.is_prime_object(mixed)


def test_graded_asupp_windowed():
    g = GradedPolyBackend(F2)
    kx = GradedModuleDescriptor.free(0)
    supp = {a.label for a in g.asupp(kx, window=(-2, 2))}
    assert supp == {"k[x]", "S(-2)", "S(-1)", "S(0)"}
    tors = GradedModuleDescriptor((), ((2, 0),))   # factors S(0), S(1)
    supp2 = {a.label for a in g.asupp(tors, window=(-2, 2))}
    assert supp2 == {"S(0)", "S(1)"}


def test_graded_psi_total_and_verification():
    g = GradedPolyBackend(F2)
    for m in g.molecules(window=2):
        assert g.psi(m).key == m.key
    rep = verify_correspondence(g, window=2)
    assert rep.passed()
    assert any("phi partial" in note for note in rep.notes)


def test_primes_up_to():
    assert primes_up_to(29) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert len(primes_up_to(29)) == 10
