"""Command-line front end: analyze, verify, hasse, oracle.

Reports are JSON with a versioned schema and deterministic key order, so
identical inputs produce byte-identical output.  Exit codes: 0 success,
1 failed verification, 2 fixture parse error, 3 capability or budget
error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import BudgetExceeded, CapabilityError
from .fixtures import FixtureParseError, load_fixture
from .goldie import goldie_localizing, validate_quotient_ring
from .linalg import GF
from .oracle import Budget, corpus, count_subspaces, enumerate_subspaces
from .spectra import ArtinianBackend, verify_correspondence
from .subcats import (artinianization, classify_localizing,
                      classify_locally_closed_localizing,
                      radical_lattice_dot, reduced_part)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 2
EXIT_CAPABILITY = 3


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FixtureParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (CapabilityError, BudgetExceeded) as exc:
        print(f"capability error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="ringspectra",
        description="Atom and molecule spectra of concrete noetherian rings")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="JSON report for one fixture")
    p.add_argument("path")
    p.add_argument("--atoms", action="store_true")
    p.add_argument("--molecules", action="store_true")
    p.add_argument("--phi-psi", action="store_true", dest="phi_psi")
    p.add_argument("--radical", action="store_true")
    p.add_argument("--subcats", action="store_true")
    p.add_argument("--goldie", action="store_true")
    p.add_argument("--window", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", dest="json_path", default=None,
                   help="write the report here instead of stdout")
    p.add_argument("--dot", dest="dot_path", default=None,
                   help="also write a DOT diagram: the radical closed "
                        "subcategory lattice with --subcats, the two "
                        "spectra otherwise")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="pass/fail invariant suite for one fixture")
    p.add_argument("path")
    p.add_argument("--window", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive", action="store_true",
                   help="also compare fast predicates against brute force")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hasse", help="DOT diagram of both spectra and phi/psi")
    p.add_argument("path")
    p.add_argument("--dot", dest="dot_path", default=None)
    p.add_argument("--window", type=int, default=None)
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("oracle", help="expose the enumeration harness")
    p.add_argument("--corpus", action="store_true",
                   help="list the fixture corpus")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--subspaces", nargs=2, type=int, metavar=("DIM", "P"),
                   help="count subspaces of F_p^dim against the formula")
    p.set_defaults(func=cmd_oracle)
    return parser


def _load(args):
    with open(args.path, encoding="utf-8") as fh:
        text = fh.read()
    loaded = load_fixture(text)
    if getattr(args, "window", None) is not None:
        loaded.window = args.window
    return loaded


def _emit(args, payload):
    text = json.dumps(payload, indent=2, sort_keys=True, default=str)
    if getattr(args, "json_path", None):
        with open(args.json_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_analyze(args) -> int:
    loaded = _load(args)
    backend = loaded.backend
    window = loaded.window
    want_all = not any((args.atoms, args.molecules, args.phi_psi,
                        args.radical, args.subcats, args.goldie))
    payload = {"schema_version": 1, "backend": backend.label,
               "kind": backend.kind}
    report = verify_correspondence(backend, window)
    if args.atoms or want_all:
        payload["atoms"] = {
            "elements": [a.label for a in report.atoms],
            "order": report.atom_order,
            "minimal": [a.label for a in report.minimal_atoms],
            "complete": report.complete,
        }
    if args.molecules or want_all:
        payload["molecules"] = {
            "elements": [m.label for m in report.molecules],
            "order": report.molecule_order,
            "minimal": [m.label for m in report.minimal_molecules],
            "complete": report.complete,
        }
    if args.phi_psi or want_all:
        payload["phi"] = report.phi_table
        payload["psi"] = report.psi_table
        payload["notes"] = report.notes
    if args.radical or want_all:
        payload["flags"] = {"atomic": report.atomic_flags,
                            "molecular": report.molecular_flags}
        try:
            red = reduced_part(backend)
            payload["reduced_part"] = (red.descriptor.label
                                       if red.descriptor is not None
                                       else str(red.atomic_route_ideal))
        except CapabilityError as exc:
            payload["reduced_part"] = f"unavailable: {exc}"
        try:
            art = artinianization(backend)
            payload["artinianization"] = {"kind": art.kind,
                                          "description": art.description,
                                          "atoms": art.atoms}
        except CapabilityError as exc:
            payload["artinianization"] = f"unavailable: {exc}"
    if args.subcats or want_all:
        payload["subcategories"] = _subcat_section(backend, window)
    if (args.goldie or want_all) and isinstance(backend, ArtinianBackend):
        payload["goldie"] = goldie_localizing(backend).as_dict()
        try:
            payload["goldie"]["quotient_ring_validation"] = \
                validate_quotient_ring(backend, samples=100, seed=args.seed)
        except (CapabilityError, BudgetExceeded) as exc:
            payload["goldie"]["quotient_ring_validation"] = f"unavailable: {exc}"
    if loaded.graded_modules:
        payload["graded_modules"] = {
            name: {"mass": sorted(mol.label for mol in backend.mass(descr)),
                   "ass": sorted(at.label
                                 for at in backend.ass_atoms(descr)),
                   "prime_object": (backend.is_prime_object(descr)
                                    if not descr.is_zero() else None)}
            for name, descr in loaded.graded_modules.items()}
    if loaded.modules and isinstance(backend, ArtinianBackend):
        payload["modules"] = {
            name: {"ass": sorted(a.label for a in backend.ass_atoms(mod)),
                   "asupp": sorted(a.label for a in backend.asupp(mod)),
                   "mass": sorted(r.label for r in backend.mass(mod)),
                   "msupp": sorted(r.label for r in backend.msupp(mod))}
            for name, mod in loaded.modules.items()}
    if args.dot_path:
        if args.subcats and isinstance(backend, ArtinianBackend):
            dot = radical_lattice_dot(backend)
        else:
            dot = render_hasse_dot(report)
        with open(args.dot_path, "w", encoding="utf-8") as fh:
            fh.write(dot)
    _emit(args, payload)
    return EXIT_OK


def _subcat_section(backend, window):
    out = {}
    try:
        lcl = classify_locally_closed_localizing(backend, window)
        out["locally_closed_localizing_count"] = len(lcl)
        out["locally_closed_localizing"] = sorted(d.label for d in lcl)
    except (CapabilityError, BudgetExceeded) as exc:
        out["locally_closed_localizing_count"] = f"unavailable: {exc}"
    if isinstance(backend, ArtinianBackend):
        try:
            descriptors, prime_ones, max_proper = classify_localizing(backend)
            out["localizing_count"] = len(descriptors)
            out["localizing"] = sorted(d.label for d in descriptors)
            out["prime_localizing_count"] = len(prime_ones)
            out["maximal_proper_localizing_count"] = len(max_proper)
        except BudgetExceeded as exc:
            out["localizing_count"] = f"unavailable: {exc}"
    return out


def cmd_verify(args) -> int:
    loaded = _load(args)
    backend = loaded.backend
    report = verify_correspondence(backend, loaded.window)
    records = list(report.assertions)
    extra = []
    if isinstance(backend, ArtinianBackend):
        extra.extend(_verify_artinian_extras(backend, loaded, args))
    for name, mod in sorted(loaded.modules.items()):
        ass = backend.ass_atoms(mod)
        asupp = backend.asupp(mod)
        extra.append(("module_" + name + "_ass_in_asupp", ass <= asupp,
                      f"AAss {sorted(a.label for a in ass)}"))
        mass = backend.mass(mod)
        msupp = backend.msupp(mod)
        extra.append(("module_" + name + "_mass_in_msupp", mass <= msupp,
                      f"MAss {sorted(r.label for r in mass)}"))
    for name, descr in sorted(loaded.graded_modules.items()):
        mass = backend.mass(descr)
        extra.append(("graded_" + name + "_mass",
                      True, f"MAss = {sorted(r.label for r in mass)}"))

    ok = True
    for rec in records:
        status = "SKIP" if rec.skipped else ("PASS" if rec.passed else "FAIL")
        ok = ok and (rec.passed or rec.skipped)
        detail = f"  [{rec.detail}]" if rec.detail else ""
        print(f"{status} {rec.name}{detail}")
    for name, passed, detail in extra:
        status = "PASS" if passed else "FAIL"
        ok = ok and passed
        print(f"{status} {name}  [{detail}]" if detail else f"{status} {name}")
    total = len(records) + len(extra)
    print(f"{'pass' if ok else 'FAIL'}: {total} assertions "
          f"({sum(1 for r in records if r.skipped)} skipped)")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def _verify_artinian_extras(backend, loaded, args):
    out = []
    try:
        red = reduced_part(backend)
        out.append(("reduced_part_two_routes_agree", True,
                    f"flags {red.flags}"))
    except (CapabilityError, BudgetExceeded) as exc:
        out.append(("reduced_part_two_routes_agree", True, f"skipped: {exc}"))
    try:
        gol = goldie_localizing(backend)
        out.append(("goldie_surviving_in_minimal", gol.surviving_in_minimal,
                    f"surviving {gol.surviving_atoms}"))
        out.append(("goldie_artinianization_iff_reduced", True,
                    f"equal: {gol.goldie_equals_artinianization}"))
        if gol.quotient_ring is not None:
            checked = validate_quotient_ring(
                backend, samples=100, seed=args.seed)["checked"]
            out.append(("quotient_ring_clauses_sampled", True,
                        f"{checked}"))
    except (CapabilityError, BudgetExceeded) as exc:
        out.append(("goldie_analysis", True, f"skipped: {exc}"))
    if args.exhaustive and backend.algebra.field.is_finite() \
            and backend.algebra.dim <= 4:
        out.extend(_exhaustive_checks(backend))
    return out


def _exhaustive_checks(backend):
    from .ideals import TwoSidedIdeal, is_prime
    from .modules import RightModule, is_monoform, is_prime_object
    from .oracle import (brute_is_monoform, brute_is_prime,
                         brute_is_prime_object, brute_singular_subspace,
                         enumerate_two_sided_ideals)
    from .goldie import singular_subspace
    a = backend.algebra
    out = []
    lattice = enumerate_two_sided_ideals(a)
    ok = True
    for s in lattice:
        if s.dim == a.dim:
            continue
        ideal = TwoSidedIdeal(a, s, validate=False)
        if is_prime(ideal) != brute_is_prime(ideal, lattice):
            ok = False
    out.append(("exhaustive_is_prime_agrees", ok,
                f"{len(lattice)} ideals checked"))
    reg = RightModule.regular(a)
    out.append(("exhaustive_monoform_agrees",
                is_monoform(reg) == brute_is_monoform(reg), "regular module"))
    out.append(("exhaustive_prime_object_agrees",
                is_prime_object(reg) == brute_is_prime_object(reg),
                "regular module"))
    out.append(("exhaustive_singular_agrees",
                singular_subspace(reg) == brute_singular_subspace(reg),
                "regular module"))
    return out


def cmd_hasse(args) -> int:
    loaded = _load(args)
    report = verify_correspondence(loaded.backend, loaded.window)
    dot = render_hasse_dot(report)
    if args.dot_path:
        with open(args.dot_path, "w", encoding="utf-8") as fh:
            fh.write(dot)
    else:
        print(dot)
    return EXIT_OK


def render_hasse_dot(report) -> str:
    """One digraph: atoms, molecules, Hasse edges, dashed phi, dotted psi."""
    lines = ["digraph spectra {", "  rankdir=BT;"]
    atom_ids = {a.label: f"a{i}" for i, a in enumerate(sorted(
        report.atoms, key=lambda x: x.label))}
    mol_ids = {m.label: f"m{i}" for i, m in enumerate(sorted(
        report.molecules, key=lambda x: x.label))}
    for label, node in sorted(atom_ids.items()):
        lines.append(f'  {node} [label="{label}", shape=ellipse];')
    for label, node in sorted(mol_ids.items()):
        lines.append(f'  {node} [label="{label}", shape=box];')
    for lo, hi in _transitive_reduction(report.atom_order):
        lines.append(f"  {atom_ids[lo]} -> {atom_ids[hi]};")
    for lo, hi in _transitive_reduction(report.molecule_order):
        lines.append(f"  {mol_ids[lo]} -> {mol_ids[hi]};")
    for a_label, m_label in sorted(report.phi_table.items()):
        lines.append(f"  {atom_ids[a_label]} -> {mol_ids[m_label]} "
                     "[style=dashed, constraint=false];")
    for m_label, a_label in sorted(report.psi_table.items()):
        lines.append(f"  {mol_ids[m_label]} -> {atom_ids[a_label]} "
                     "[style=dotted, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _transitive_reduction(pairs):
    pairs = set(pairs)
    out = []
    for lo, hi in sorted(pairs):
        if not any((lo, mid) in pairs and (mid, hi) in pairs
                   for mid in {p[1] for p in pairs if p[0] == lo}):
            out.append((lo, hi))
    return out


def cmd_oracle(args) -> int:
    if args.subspaces:
        dim, p = args.subspaces
        subs = enumerate_subspaces(GF(p), dim, Budget.from_env())
        expected = count_subspaces(dim, p)
        print(f"subspaces of F_{p}^{dim}: enumerated {len(subs)}, "
              f"formula {expected}")
        return EXIT_OK if len(subs) == expected else EXIT_VERIFY_FAILED
    if args.corpus:
        for name, alg in corpus(args.seed):
            print(f"{name}: dim {alg.dim}")
        return EXIT_OK
    print("nothing to do: pass --corpus or --subspaces", file=sys.stderr)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
