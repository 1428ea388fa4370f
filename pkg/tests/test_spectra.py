"""Atom/molecule spectra, phi and psi, and the correspondence sweep."""

import random

from ringspectra.ideals import annihilator
from ringspectra.modules import (RightModule, injective_envelope,
                                 composition_factors, simple_modules)
from ringspectra.oracle import brute_mass, enumerate_submodules, standard_modules
from ringspectra.spectra import (ArtinianBackend, Molecule,
                                 verify_correspondence)


def _backend(name, corpus_by_name):
    return ArtinianBackend(corpus_by_name[name])


def test_atom_spectrum_t2(corpus_by_name):
    b = _backend("t2_f2", corpus_by_name)
    atoms = b.atoms()
    assert len(atoms) == 2
    for x in atoms:
        for y in atoms:
            assert b.atom_leq(x, y) == (x == y)    # artinian antichain


def test_molecule_spectrum_examples(corpus_by_name):
    assert len(_backend("t2_f2", corpus_by_name).molecules()) == 2
    assert len(_backend("trunc2_f2", corpus_by_name).molecules()) == 1
    assert len(_backend("m2_f3", corpus_by_name).molecules()) == 1


def test_ass_and_asupp_t2(corpus_by_name):
    b = _backend("t2_f2", corpus_by_name)
    reg = RightModule.regular(b.algebra)
    ass = {a.label for a in b.ass_atoms(reg)}
    asupp = {a.label for a in b.asupp(reg)}
    assert len(ass) == 1                           # socle is isotypic
    assert asupp == {s.label for s in b.simples()}
    assert ass <= asupp
    s = b.simples()[0]
    assert {a.label for a in b.ass_atoms(s.module)} == {s.label}
    assert {a.label for a in b.asupp(s.module)} == {s.label}
    zero = RightModule.zero(b.algebra)
    assert b.ass_atoms(zero) == set() and b.asupp(zero) == set()


def test_mass_and_msupp_examples(corpus_by_name):
    b = _backend("trunc2_f2", corpus_by_name)
    reg = RightModule.regular(b.algebra)
    mass = b.mass(reg)
    msupp = b.msupp(reg)
    assert len(mass) == 1 and mass == msupp        # {(x)}
    m2 = _backend("m2_f3", corpus_by_name)
    s = m2.simples()[0].module
    assert {r.label for r in m2.msupp(s)} == {"P1"}
    assert m2.primes()[0].ideal.is_zero()          # unique prime is 0


def test_mass_agrees_with_definitional_oracle(small_f2_corpus):
    for name, a in small_f2_corpus:
        b = ArtinianBackend(a)
        for mname, m in standard_modules(a):
            if m.dim > 4:
                continue
            assert b.mass(m) == brute_mass(m, b), (name, mname)


def test_msupp_is_upward_closed_and_v_of_ann(algebra_corpus):
    for name, a in algebra_corpus:
        if not a.field.is_finite():
            continue
        b = ArtinianBackend(a)
        for mname, m in standard_modules(a, include_envelopes=False):
            if m.dim == 0:
                continue
            msupp = b.msupp(m)
            ann = annihilator(m)
            expected = {r for r in b.molecules()
                        if b._prime_by_key(r.key).ideal.space.contains(ann.space)}
            assert msupp == expected, (name, mname)
            for r in msupp:
                for s in b.molecules():
                    if b.molecule_leq(r, s):
                        assert s in msupp, (name, mname)


def test_phi_psi_artinian(corpus_by_name):
    b = _backend("t2_f2", corpus_by_name)
    for s in b.simples():
        atom = b.atom_of_simple_label(s.label)
        mol = b.phi(atom)
        # phi(S) is the annihilator's class.
        w = b._prime_by_key(mol.key)
        assert w.ideal.space == annihilator(s.module).space
        assert b.psi(mol) == atom


def test_phi_psi_identity_everywhere(algebra_corpus):
    for name, a in algebra_corpus:
        b = ArtinianBackend(a)
        for r in b.molecules():
            assert b.phi(b.psi(r)) == r, name


def test_verify_correspondence_t2(corpus_by_name):
    rep = verify_correspondence(_backend("t2_f2", corpus_by_name))
    assert rep.passed()
    assert len(rep.minimal_atoms) == 2 and len(rep.minimal_molecules) == 2
    names = {r.name for r in rep.assertions}
    assert {"phi_psi_identity", "adjunction", "amin_mmin_bijection",
            "mass_of_envelope_is_phi"} <= names


def test_mass_of_envelope_is_singleton_phi(corpus_by_name):
    for name in ["t2_f2", "quiver.cycle.J2_f2", "trunc3_f2", "m2_f2",
                 "t3_f2", "c3_f3"]:
        b = _backend(name, corpus_by_name)
        for s in b.simples():
            e_mod, _ = injective_envelope(s.module)
            mass = b.mass(e_mod)
            assert len(mass) == 1, name
            assert next(iter(mass)) == b.phi(b.atom_of_simple_label(s.label))


def test_envelope_of_prime_quotient_is_isotypic(corpus_by_name):
    for name in ["t2_f2", "t3_f2", "quiver.cycle.J2_f2", "f2xf2"]:
        b = _backend(name, corpus_by_name)
        reg = RightModule.regular(b.algebra)
        for w in b.primes():
            quot, _ = reg.quotient(w.ideal.space)
            e_big, _ = injective_envelope(quot)
            psi_simple = b._simple_by_key(
                b.psi(Molecule(b.label, ("prime", w.block_index),
                               w.label)).key)
            e_small, _ = injective_envelope(psi_simple.module)
            soc = e_big.submodule(e_big.socle_space())[0]
            factors = composition_factors(soc)
            assert set(factors) == {psi_simple.label}, name
            copies = factors[psi_simple.label]
            assert e_big.dim == copies * e_small.dim, name


def test_short_exact_ass_asupp_behavior(corpus_by_name):
    rng = random.Random(17)
    for name in ["t2_f2", "trunc3_f2", "quiver.cycle.J2_f2", "t3_f2"]:
        b = _backend(name, corpus_by_name)
        m = RightModule.regular(b.algebra)
        subs = [s for s in enumerate_submodules(m) if 0 < s.dim < m.dim]
        rng.shuffle(subs)
        for l_space in subs[:6]:
            sub, _ = m.submodule(l_space)
            quot, _ = m.quotient(l_space)
            ass_l, ass_m = b.ass_atoms(sub), b.ass_atoms(m)
            ass_q = b.ass_atoms(quot)
            assert ass_l <= ass_m <= ass_l | ass_q, name
            assert b.asupp(m) == b.asupp(sub) | b.asupp(quot), name
            # Same containments on the molecule side.
            mass_l, mass_m = b.mass(sub), b.mass(m)
            mass_q = b.mass(quot)
            assert mass_l <= mass_m <= mass_l | mass_q, name


def test_envelope_idempotent_across_corpus(algebra_corpus):
    for name, a in algebra_corpus:
        if a.dim > 4:
            continue
        for s in simple_modules(a):
            e, _ = injective_envelope(s.module)
            again, _ = injective_envelope(e)
            assert again.dim == e.dim, name


def test_spectrum_report_serializes(corpus_by_name):
    import json
    rep = verify_correspondence(_backend("t2_f2", corpus_by_name))
    text = json.dumps(rep.as_dict(), sort_keys=True)
    assert '"schema_version": 1' in text
    assert json.loads(text)["phi"] == {"S1": "P1", "S2": "P2"}


def test_phi_maps_ass_to_mass(corpus_by_name):
    for name in ["t2_f2", "trunc3_f2", "quiver.cycle.J2_f2", "m2_f2"]:
        b = _backend(name, corpus_by_name)
        for mname, m in standard_modules(b.algebra):
            if m.dim == 0:
                continue
            phi_ass = {b.phi(a) for a in b.ass_atoms(m)}
            assert phi_ass == b.mass(m), (name, mname)
            phi_asupp = {b.phi(a) for a in b.asupp(m)}
            assert phi_asupp <= b.msupp(m), (name, mname)


def test_full_corpus_verification(algebra_corpus):
    for name, a in algebra_corpus:
        rep = verify_correspondence(ArtinianBackend(a))
        bad = [r.name for r in rep.assertions if not (r.passed or r.skipped)]
        assert not bad, (name, bad)


class _CorruptedPhi:
    """Delegates to a real backend but sends every atom to one molecule."""

    def __init__(self, inner):
        self._inner = inner
        self.label = inner.label
        self.kind = inner.kind
        self.has_noetherian_generator = True
        self.complete = True

    def __getattr__(self, name):
        return getattr(self._inner, name)

    def phi(self, a):
        return self._inner.molecules()[0]


class _CorruptedOrder(_CorruptedPhi):
    def phi(self, a):
        return self._inner.phi(a)

    def molecule_leq(self, r, s):
        return True                                 # everything comparable


def test_verifier_catches_corrupted_phi(corpus_by_name):
    """The sweep is not vacuous: a broken phi fails phi_psi_identity."""
    b = _backend("t2_f2", corpus_by_name)
    rep = verify_correspondence(_CorruptedPhi(b))
    failed = {r.name for r in rep.assertions if not (r.passed or r.skipped)}
    assert "phi_psi_identity" in failed


def test_verifier_catches_corrupted_order(corpus_by_name):
    b = _backend("t2_f2", corpus_by_name)
    rep = verify_correspondence(_CorruptedOrder(b))
    failed = {r.name for r in rep.assertions if not (r.passed or r.skipped)}
    assert "adjunction" in failed or "psi_order_preserving" in failed


def test_order_query_helpers(corpus_by_name):
    from ringspectra.commutative import IntegerBackend
    from ringspectra.spectra import atom_closure, atoms_above
    b = _backend("t2_f2", corpus_by_name)
    a0 = b.atoms()[0]
    assert atom_closure(b, a0) == [a0]              # artinian antichain
    assert atoms_above(b, a0) == [a0]
    z = IntegerBackend()
    generic = z.atoms(window=5)[0]
    assert len(atoms_above(z, generic, window=5)) == 4    # everything
    assert atom_closure(z, generic, window=5) == [generic]
