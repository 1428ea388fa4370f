"""Atom and molecule spectra, the maps between them, and verification.

Backends expose one duck-typed surface: enumerate (or window) atoms and
molecules, order predicates, phi and psi, minimality, and property flags
computed along two independent routes.  ``ArtinianBackend`` realizes it
for module categories of finite-dimensional algebras, where atoms are
simple classes (an antichain) and molecules are the prime two-sided
ideals.  Symbolic commutative backends live in ``commutative``.

``verify_correspondence`` sweeps every assertion the correspondence makes
on a backend's (windowed) spectra and returns a ``SpectrumReport`` with
one pass/fail record per claim; hypothesis failures (no noetherian
generator) are recorded as skips with a reason, never silently dropped.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebras import FiniteDimAlgebra, jacobson_radical
from .errors import CapabilityError, ValidationError
from .ideals import (TwoSidedIdeal, annihilator, is_semiprime, minimal_primes)
from .linalg import Matrix, Subspace, field_name
from .modules import (RightModule, SimpleClass, composition_factors,
                      injective_envelope, simple_modules)


@dataclass(frozen=True)
class Atom:
    backend: str
    key: tuple
    label: str = field(compare=False)


@dataclass(frozen=True)
class Molecule:
    backend: str
    key: tuple
    label: str = field(compare=False)


class PhiUndefinedError(CapabilityError):
    """No prime monoform object represents this atom."""


class ArtinianBackend:
    """Mod(Lambda) for a finite-dimensional algebra Lambda.

    Atoms are the simple classes with the discrete order; molecules are the
    prime two-sided ideals (all maximal here, so also an antichain).
    """

    kind = "algebra"
    has_noetherian_generator = True
    complete = True

    def __init__(self, algebra: FiniteDimAlgebra, label=None):
        self.algebra = algebra
        self.label = label or f"{algebra.name}/{field_name(algebra.field)}"
        self._simples = None
        self._primes = None

    # -- raw data ------------------------------------------------------------

    def simples(self) -> list[SimpleClass]:
        if self._simples is None:
            self._simples = simple_modules(self.algebra)
        return self._simples

    def primes(self):
        if self._primes is None:
            self._primes = minimal_primes(self.algebra)
        return self._primes

    # -- spectra ---------------------------------------------------------------

    def atoms(self, window=None) -> list[Atom]:
        return [Atom(self.label, ("simple", s.block_index), s.label)
                for s in self.simples()]

    def molecules(self, window=None) -> list[Molecule]:
        return [Molecule(self.label, ("prime", w.block_index), w.label)
                for w in self.primes()]

    def atom_leq(self, a: Atom, b: Atom) -> bool:
        return a == b

    def molecule_leq(self, r: Molecule, s: Molecule) -> bool:
        wr = self._prime_by_key(r.key)
        ws = self._prime_by_key(s.key)
        return ws.ideal.contains(wr.ideal)

    def minimal_atoms(self, window=None):
        return self.atoms()

    def minimal_molecules(self, window=None):
        mols = self.molecules()
        return [r for r in mols
                if not any(s != r and self.molecule_leq(s, r) for s in mols)]

    def _prime_by_key(self, key):
        for w in self.primes():
            if ("prime", w.block_index) == key:
                return w
        raise ValidationError(f"unknown molecule key {key}")

    def _simple_by_key(self, key):
        for s in self.simples():
            if ("simple", s.block_index) == key:
                return s
        raise ValidationError(f"unknown atom key {key}")

    # -- phi and psi -------------------------------------------------------------

    def phi(self, a: Atom) -> Molecule:
        """phi(simple class) is the molecule of its annihilator.

        A simple module is itself prime monoform, so the molecule of the
        atom is the class of cl(S), keyed by Ann(S).
        """
        s = self._simple_by_key(a.key)
        if s.module is not None:
            ann = annihilator(s.module)
            for w in self.primes():
                if w.ideal.space == ann.space:
                    return Molecule(self.label, ("prime", w.block_index), w.label)
            raise ValidationError("annihilator of a simple is not a listed prime")
        # Unrealized rational simple: its block still names the prime.
        return Molecule(self.label, ("prime", s.block_index),
                        f"P{s.block_index + 1}")

    def psi(self, r: Molecule) -> Atom:
        """psi(P) is the unique simple killed by P (smallest atom of cl(P))."""
        w = self._prime_by_key(r.key)
        hits = []
        for s in self.simples():
            if s.module is None:
                if s.block_index == w.block_index:
                    hits.append(s)
                continue
            if all(s.module.act_matrix(p).is_zero()
                   for p in w.ideal.space.basis_rows()):
                hits.append(s)
        if len(hits) != 1:
            raise ValidationError(
                f"psi: expected exactly one simple killed by {r.label}, got {len(hits)}")
        s = hits[0]
        return Atom(self.label, ("simple", s.block_index), s.label)

    # -- module-level spectral data ----------------------------------------------

    def atom_of_simple_label(self, label):
        for s in self.simples():
            if s.label == label:
                return Atom(self.label, ("simple", s.block_index), s.label)
        raise ValidationError(f"unknown simple label {label}")

    def ass_atoms(self, m: RightModule) -> set[Atom]:
        """Simple classes in the socle: the associated atoms."""
        soc, _ = m.submodule(m.socle_space(), name="soc")
        return {self.atom_of_simple_label(lbl)
                for lbl in composition_factors(soc)}

    def asupp(self, m: RightModule) -> set[Atom]:
        """Simple classes among the composition factors: the atom support."""
        return {self.atom_of_simple_label(lbl)
                for lbl in composition_factors(m)}

    def mass(self, m: RightModule) -> set[Molecule]:
        """{P prime : Ann(ann_m(P)) = P}; see docs/derivations.md."""
        out = set()
        for w in self.primes():
            tors = self._prime_torsion(m, w)
            if tors.dim == 0:
                continue
            sub, _ = m.submodule(tors, name="torP")
            if annihilator(sub).space == w.ideal.space:
                out.add(Molecule(self.label, ("prime", w.block_index), w.label))
        return out

    def msupp(self, m: RightModule) -> set[Molecule]:
        """{P : P contains Ann m} = V(Ann m)."""
        if m.dim == 0:
            return set()
        ann = annihilator(m)
        return {Molecule(self.label, ("prime", w.block_index), w.label)
                for w in self.primes() if w.ideal.space.contains(ann.space)}

    def _prime_torsion(self, m: RightModule, w) -> Subspace:
        """{v in m : v P = 0}, a submodule since P is two-sided."""
        f = self.algebra.field
        if m.dim == 0:
            return Subspace.zero(f, 0)
        cols = []
        for p in w.ideal.space.basis_rows():
            mat = m.act_matrix(p)
            cols.extend(zip(*mat.rows))
        if not cols:
            return Subspace.full(f, m.dim)
        big = Matrix(f, cols, m.dim).transpose()
        return Subspace.from_vectors(f, m.dim, big.left_kernel().rows)

    # -- property flags --------------------------------------------------------------

    def atomic_flags(self):
        """reduced/irreducible/integral through the atom route (J and AMin)."""
        reduced = jacobson_radical(self.algebra).dim == 0
        irreducible = len(self.minimal_atoms()) == 1
        return {"reduced": reduced, "irreducible": irreducible,
                "integral": reduced and irreducible}

    def molecular_flags(self):
        """Same flags through the molecule route (prime radical and MMin)."""
        reduced = is_semiprime(self.algebra)
        irreducible = len(self.minimal_molecules()) == 1
        return {"reduced": reduced, "irreducible": irreducible,
                "integral": reduced and irreducible}


def atom_closure(backend, alpha: Atom, window=None) -> list:
    """The closure of {alpha} in the specialization order: all beta <= alpha."""
    return [b for b in backend.atoms(window) if backend.atom_leq(b, alpha)]


def atoms_above(backend, alpha: Atom, window=None) -> list:
    """V(alpha): all beta >= alpha."""
    return [b for b in backend.atoms(window) if backend.atom_leq(alpha, b)]


# -- verification ------------------------------------------------------------------

@dataclass
class AssertionRecord:
    name: str
    passed: bool
    detail: str = ""
    skipped: bool = False

    def as_dict(self):
        return {"name": self.name, "passed": self.passed,
                "skipped": self.skipped, "detail": self.detail}


@dataclass
class SpectrumReport:
    backend: str
    complete: bool
    atoms: list
    molecules: list
    atom_order: list
    molecule_order: list
    phi_table: dict
    psi_table: dict
    minimal_atoms: list
    minimal_molecules: list
    assertions: list
    atomic_flags: dict | None
    molecular_flags: dict | None
    notes: list

    def passed(self):
        return all(r.passed or r.skipped for r in self.assertions)

    def as_dict(self):
        return {
            "schema_version": 1,
            "backend": self.backend,
            "complete": self.complete,
            "atoms": [a.label for a in self.atoms],
            "molecules": [m.label for m in self.molecules],
            "atom_order": self.atom_order,
            "molecule_order": self.molecule_order,
            "phi": self.phi_table,
            "psi": self.psi_table,
            "minimal_atoms": [a.label for a in self.minimal_atoms],
            "minimal_molecules": [m.label for m in self.minimal_molecules],
            "assertions": [r.as_dict() for r in self.assertions],
            "atomic_flags": self.atomic_flags,
            "molecular_flags": self.molecular_flags,
            "notes": self.notes,
        }


def verify_correspondence(backend, window=None) -> SpectrumReport:
    """Run every correspondence assertion applicable to the backend."""
    atoms = backend.atoms(window)
    mols = backend.molecules(window)
    notes = []
    records = []
    complete = getattr(backend, "complete", True)
    if not complete:
        notes.append("infinite spectrum verified on a finite window only")

    phi_table = {}
    phi_undefined = []
    for a in atoms:
        try:
            phi_table[a.label] = backend.phi(a).label
        except PhiUndefinedError as exc:
            phi_undefined.append(a)
            notes.append(f"phi partial: {a.label}: {exc}")
    psi_table = {r.label: backend.psi(r).label for r in mols}

    label_to_atom = {a.label: a for a in atoms}
    label_to_mol = {r.label: r for r in mols}

    def rec(name, passed, detail="", skipped=False):
        records.append(AssertionRecord(name, passed, detail, skipped))

    # phi psi = id on the molecule spectrum.
    bad = [r.label for r in mols
           if phi_table.get(psi_table[r.label]) != r.label]
    rec("phi_psi_identity", not bad,
        f"violations: {bad}" if bad else f"checked {len(mols)} molecules")

    # Order preservation.
    bad = []
    for a in atoms:
        for b in atoms:
            if a.label in phi_table and b.label in phi_table \
                    and backend.atom_leq(a, b):
                fa = label_to_mol[phi_table[a.label]]
                fb = label_to_mol[phi_table[b.label]]
                if not backend.molecule_leq(fa, fb):
                    bad.append((a.label, b.label))
    rec("phi_order_preserving", not bad, f"violations: {bad}" if bad else "")

    bad = []
    for r in mols:
        for s in mols:
            if backend.molecule_leq(r, s):
                pr = label_to_atom[psi_table[r.label]]
                ps = label_to_atom[psi_table[s.label]]
                if not backend.atom_leq(pr, ps):
                    bad.append((r.label, s.label))
    rec("psi_order_preserving", not bad, f"violations: {bad}" if bad else "")

    # Adjunction: psi(rho) <= alpha iff rho <= phi(alpha), phi-defined pairs.
    bad = []
    pairs = 0
    for a in atoms:
        if a.label not in phi_table:
            continue
        fa = label_to_mol[phi_table[a.label]]
        for r in mols:
            pairs += 1
            lhs = backend.atom_leq(label_to_atom[psi_table[r.label]], a)
            rhs = backend.molecule_leq(r, fa)
            if lhs != rhs:
                bad.append((a.label, r.label))
    rec("adjunction", not bad,
        f"violations: {bad}" if bad else f"checked {pairs} pairs")

    # Bijection between minimal atoms and minimal molecules.
    amin = backend.minimal_atoms(window)
    mmin = backend.minimal_molecules(window)
    if getattr(backend, "has_noetherian_generator", True):
        image = []
        ok = True
        for a in amin:
            if a.label not in phi_table:
                ok = False
                continue
            image.append(phi_table[a.label])
        mmin_labels = sorted(r.label for r in mmin)
        bij = ok and sorted(image) == mmin_labels and len(set(image)) == len(image)
        inv = all(psi_table[phi_table[a.label]] == a.label
                  for a in amin if a.label in phi_table)
        rec("amin_mmin_bijection", bij and inv,
            f"AMin -> {sorted(image)}, MMin = {mmin_labels}")
    else:
        rec("amin_mmin_bijection", True,
            "skipped: backend has no noetherian generator", skipped=True)

    rec("minimal_sets_finite",
        len(amin) < float("inf") and len(mmin) < float("inf"),
        f"|AMin| = {len(amin)}, |MMin| = {len(mmin)}")

    # Property flags along both routes.
    aflags = mflags = None
    if getattr(backend, "has_noetherian_generator", True):
        aflags = backend.atomic_flags()
        mflags = backend.molecular_flags()
        rec("atomic_flags_equal_molecular_flags", aflags == mflags,
            f"atomic {aflags} vs molecular {mflags}")
    else:
        rec("atomic_flags_equal_molecular_flags", True,
            "skipped: flags undefined without a noetherian generator",
            skipped=True)

    # Injective-envelope facts on artinian backends with realized simples.
    if isinstance(backend, ArtinianBackend):
        records.extend(_artinian_envelope_assertions(backend, phi_table))

    atom_order = sorted((a.label, b.label) for a in atoms for b in atoms
                        if a != b and backend.atom_leq(a, b))
    mol_order = sorted((r.label, s.label) for r in mols for s in mols
                       if r != s and backend.molecule_leq(r, s))

    return SpectrumReport(
        backend=backend.label, complete=complete, atoms=atoms, molecules=mols,
        atom_order=atom_order, molecule_order=mol_order,
        phi_table=phi_table, psi_table=psi_table,
        minimal_atoms=amin, minimal_molecules=mmin,
        assertions=records, atomic_flags=aflags, molecular_flags=mflags,
        notes=notes)


def _artinian_envelope_assertions(backend: ArtinianBackend, phi_table):
    """mass(E(S)) = {phi(S)} and E(Lambda/P) isotypic over E(psi(P))."""
    records = []
    try:
        simples = backend.simples()
        for s in simples:
            s.require_module()
    except CapabilityError as exc:
        return [AssertionRecord("envelope_facts", True,
                                f"skipped: {exc}", skipped=True)]
    bad = []
    for s in simples:
        e_mod, _ = injective_envelope(s.module)
        m = backend.mass(e_mod)
        if len(m) != 1 or next(iter(m)).label != phi_table[s.label]:
            bad.append(s.label)
    records.append(AssertionRecord(
        "mass_of_envelope_is_phi", not bad,
        f"violations: {bad}" if bad else f"checked {len(simples)} simples"))

    bad = []
    for w in backend.primes():
        quot_reg = _module_on_quotient_ring(backend.algebra, w.ideal)
        e_big, _ = injective_envelope(quot_reg)
        psi_atom = backend.psi(Molecule(backend.label, ("prime", w.block_index),
                                        w.label))
        s = backend._simple_by_key(psi_atom.key)
        e_small, _ = injective_envelope(s.module)
        soc_big, _ = e_big.submodule(e_big.socle_space(), name="socE")
        factors = composition_factors(soc_big)
        isotypic = set(factors) == {s.label}
        copies = factors.get(s.label, 0)
        dims_ok = e_big.dim == copies * e_small.dim and copies >= 1
        if not (isotypic and dims_ok):
            bad.append(w.label)
    records.append(AssertionRecord(
        "envelope_of_prime_quotient_isotypic", not bad,
        f"violations: {bad}" if bad else f"checked {len(backend.primes())} primes"))
    return records


def _module_on_quotient_ring(a: FiniteDimAlgebra, ideal: TwoSidedIdeal) -> RightModule:
    """Lambda/P as a right Lambda-module (regular module of the quotient)."""
    reg = RightModule.regular(a)
    return reg.quotient(ideal.space, name=f"{a.name}/P")[0]
