"""Fixture file format: line-oriented key = value inside [section] headers.

One [backend] section picks the ring; optional [module NAME] sections add
right modules by action matrices; [graded_module NAME] sections describe
graded modules for the graded backend; an optional [window] section sets
the default window for infinite spectra.  Polynomials are coefficient
lists low-to-high; matrices are rows of entries separated by ';'.  The
grammar is documented with EBNF in docs/fixture_format.md.

Parsing is strict and reports line numbers; parse of serialize of parse
is the identity on the structured content.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .algebras import (BoundQuiver, FiniteDimAlgebra,
                       algebra_from_structure_constants, bound_quiver_algebra,
                       companion_algebra, group_algebra, matrix_algebra,
                       upper_triangular_algebra)
from .commutative import (GradedModuleDescriptor, GradedPolyBackend,
                          IntegerBackend, IntModBackend, PolyBackend,
                          PolyQuotBackend)
from .errors import RingSpectraError, ValidationError
from .linalg import Matrix, field_by_name
from .modules import RightModule
from .spectra import ArtinianBackend


class FixtureParseError(RingSpectraError):
    def __init__(self, message, line=None):
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{message}{where}")
        self.line = line


@dataclass
class Section:
    name: str
    entries: list          # list of (key, value) strings, order preserved
    line: int = 0

    def get(self, key, default=None):
        for k, v in self.entries:
            if k == key:
                return v
        return default

    def get_all(self, key):
        return [v for k, v in self.entries if k == key]

    def require(self, key):
        v = self.get(key)
        if v is None:
            raise FixtureParseError(f"[{self.name}] needs '{key} = ...'",
                                    self.line)
        return v


@dataclass
class FixtureFile:
    sections: list = dc_field(default_factory=list)

    def section(self, name):
        for s in self.sections:
            if s.name == name:
                return s
        return None

    def sections_named(self, prefix):
        return [s for s in self.sections if s.name.split(" ")[0] == prefix]


def parse_fixture(text: str) -> FixtureFile:
    fixture = FixtureFile()
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise FixtureParseError("unterminated section header", lineno)
            name = line[1:-1].strip()
            if not name:
                raise FixtureParseError("empty section name", lineno)
            current = Section(name, [], lineno)
            fixture.sections.append(current)
            continue
        if "=" not in line:
            raise FixtureParseError(f"expected 'key = value', got {line!r}",
                                    lineno)
        if current is None:
            raise FixtureParseError("key outside of any [section]", lineno)
        key, _, value = line.partition("=")
        current.entries.append((key.strip(), value.strip()))
    if fixture.section("backend") is None:
        raise FixtureParseError("fixture needs a [backend] section")
    return fixture


def serialize_fixture(fixture: FixtureFile) -> str:
    lines = []
    for s in fixture.sections:
        lines.append(f"[{s.name}]")
        for k, v in s.entries:
            lines.append(f"{k} = {v}")
        lines.append("")
    return "\n".join(lines)


# -- building backends from fixtures ---------------------------------------------

def _scalar(field, token, lineno=None):
    try:
        if "/" in token:
            return field.scalar(Fraction(token))
        return field.scalar(int(token))
    except (ValueError, ZeroDivisionError) as exc:
        raise FixtureParseError(f"bad scalar {token!r}: {exc}", lineno)


def _int_list(value):
    return [int(t) for t in value.replace(",", " ").split()]


def _scalar_list(field, value):
    return [_scalar(field, t) for t in value.replace(",", " ").split()]


def _matrix(field, value, lineno=None):
    rows = [r.strip() for r in value.split(";")]
    return Matrix(field, [_scalar_list(field, r) for r in rows if r],
                  ncols=None)


@dataclass
class LoadedFixture:
    backend: object
    modules: dict           # name -> RightModule (artinian backends)
    graded_modules: dict    # name -> GradedModuleDescriptor
    window: object          # int, (lo, hi) or None
    fixture: FixtureFile


def load_fixture(text: str) -> LoadedFixture:
    fixture = parse_fixture(text)
    b = fixture.section("backend")
    kind = b.require("kind")
    window = _parse_window(fixture.section("window"))

    if kind == "algebra":
        algebra = _build_algebra(b)
        backend = ArtinianBackend(algebra, label=b.get("name", algebra.name))
        modules = {}
        for s in fixture.sections_named("module"):
            name = s.name.partition(" ")[2] or f"M{len(modules) + 1}"
            modules[name] = _build_module(algebra, s, name)
        return LoadedFixture(backend, modules, {}, window, fixture)

    if kind == "int":
        return LoadedFixture(IntegerBackend(), {}, {}, window, fixture)
    if kind == "int_mod":
        n = int(b.require("modulus"))
        return LoadedFixture(IntModBackend(n), {}, {}, window, fixture)
    if kind == "poly":
        fld = field_by_name(b.require("field"))
        return LoadedFixture(PolyBackend(fld), {}, {}, window, fixture)
    if kind == "poly_quot":
        fld = field_by_name(b.require("field"))
        coeffs = _scalar_list(fld, b.require("modulus"))
        return LoadedFixture(PolyQuotBackend(fld, coeffs), {}, {}, window,
                             fixture)
    if kind == "graded_poly":
        fld = field_by_name(b.require("field"))
        backend = GradedPolyBackend(fld)
        graded = {}
        for s in fixture.sections_named("graded_module"):
            name = s.name.partition(" ")[2] or f"M{len(graded) + 1}"
            graded[name] = _build_graded_module(s)
        return LoadedFixture(backend, {}, graded, window, fixture)

    raise FixtureParseError(f"unknown backend kind {kind!r}", b.line)


def _parse_window(section):
    if section is None:
        return None
    bound = section.get("bound")
    if bound is not None:
        return int(bound)
    lo, hi = section.get("lo"), section.get("hi")
    if lo is not None and hi is not None:
        return (int(lo), int(hi))
    raise FixtureParseError("[window] needs 'bound' or 'lo'/'hi'", section.line)


def _build_algebra(b: Section) -> FiniteDimAlgebra:
    fld = field_by_name(b.require("field"))
    source = b.require("source")
    name = b.get("name", "A")
    if source == "matrix":
        return matrix_algebra(int(b.require("n")), fld, name=name)
    if source == "triangular":
        return upper_triangular_algebra(int(b.require("n")), fld, name=name)
    if source == "companion":
        return companion_algebra(fld, _scalar_list(fld, b.require("poly")),
                                 name=name)
    if source == "group":
        table = [_int_list(row) for row in b.require("table").split(";")]
        return group_algebra(fld, table, name=name)
    if source == "quiver":
        return bound_quiver_algebra(fld, _build_quiver(b), name=name)
    if source == "structure_constants":
        dim = int(b.require("dim"))
        zero = fld.zero
        sc = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
        for line in b.get_all("c"):
            parts = line.replace(",", " ").split()
            if len(parts) != 4:
                raise FixtureParseError(
                    f"'c = i j k value' expected, got {line!r}", b.line)
            i, j, k = (int(p) for p in parts[:3])
            sc[i][j][k] = _scalar(fld, parts[3], b.line)
        unit = b.get("unit")
        labels = b.get("labels")
        return algebra_from_structure_constants(
            fld, sc,
            unit=_scalar_list(fld, unit) if unit else None,
            labels=labels.split() if labels else None, name=name)
    raise FixtureParseError(f"unknown algebra source {source!r}", b.line)


def _build_quiver(b: Section) -> BoundQuiver:
    vertices = int(b.require("vertices"))
    arrows = []
    for spec in b.get_all("arrow"):
        parts = spec.split()
        if len(parts) != 3:
            raise FixtureParseError(
                f"'arrow = label source target' expected, got {spec!r}", b.line)
        label, s, t = parts[0], int(parts[1]), int(parts[2])
        arrows.append((label, s - 1, t - 1))
    arrow_index = {a[0]: i for i, a in enumerate(arrows)}
    relations = []
    for spec in b.get_all("relation"):
        relations.append(_parse_relation(spec, arrow_index, b.line))
    bound = int(b.get("nilpotency_bound", "16"))
    return BoundQuiver(vertices, tuple(arrows), tuple(relations), bound)


def _parse_relation(spec, arrow_index, lineno):
    """Terms like 'a.b - b.a' or '2*a.a'; paths are dot-joined arrow labels."""
    terms = []
    chunks = []
    current = ""
    sign = 1
    for ch in spec:
        if ch in "+-":
            if current.strip():
                chunks.append((sign, current.strip()))
            current = ""
            sign = 1 if ch == "+" else -1
        else:
            current += ch
    if current.strip():
        chunks.append((sign, current.strip()))
    for sgn, chunk in chunks:
        coeff = sgn
        if "*" in chunk:
            c, _, chunk = chunk.partition("*")
            coeff = sgn * int(c.strip())
        path = []
        for lbl in chunk.split("."):
            lbl = lbl.strip()
            if lbl not in arrow_index:
                raise FixtureParseError(f"unknown arrow {lbl!r} in relation",
                                        lineno)
            path.append(arrow_index[lbl])
        terms.append((coeff, tuple(path)))
    if not terms:
        raise FixtureParseError("empty relation", lineno)
    return tuple(terms)


def _build_module(algebra, s: Section, name) -> RightModule:
    dim = int(s.require("dim"))
    fld = algebra.field
    mats = [None] * algebra.dim
    for key, value in s.entries:
        if key == "dim":
            continue
        if key.startswith("action"):
            idx_token = key[len("action"):].strip()
            try:
                idx = int(idx_token)
            except ValueError:
                raise FixtureParseError(
                    f"'action <index> = rows' expected, got {key!r}", s.line)
            if not 0 <= idx < algebra.dim:
                raise FixtureParseError(f"action index {idx} out of range",
                                        s.line)
            mat = _matrix(fld, value, s.line)
            if mat.nrows != dim or mat.ncols != dim:
                raise FixtureParseError(
                    f"action {idx} must be {dim}x{dim}", s.line)
            mats[idx] = mat
        else:
            raise FixtureParseError(f"unknown module key {key!r}", s.line)
    if any(m is None for m in mats):
        missing = [i for i, m in enumerate(mats) if m is None]
        raise FixtureParseError(
            f"module {name!r} missing action matrices {missing}", s.line)
    try:
        return RightModule(algebra, mats, name=name)
    except ValidationError as exc:
        raise FixtureParseError(f"module {name!r}: {exc}", s.line)


def _build_graded_module(s: Section) -> GradedModuleDescriptor:
    free = s.get("free")
    torsion = s.get("torsion")
    free_shifts = tuple(sorted(_int_list(free))) if free else ()
    tors = []
    if torsion:
        for tok in torsion.replace(",", " ").split():
            if ":" not in tok:
                raise FixtureParseError(
                    f"torsion entries are 'length:socle_shift', got {tok!r}",
                    s.line)
            length, _, shift = tok.partition(":")
            if int(length) < 1:
                raise FixtureParseError("torsion length must be >= 1", s.line)
            tors.append((int(length), int(shift)))
    return GradedModuleDescriptor(free_shifts, tuple(sorted(tors)))
