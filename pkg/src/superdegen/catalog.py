"""The encoded classification of 4-dimensional superalgebras.

Entries are stored as data (exact scalar literals for the structure
constants) in data/catalog.json, generated once by tools/make_catalog.py
from the concrete models and listed bases of the classification; see
data/schema.md for the bit-exact file layout.  The loader re-validates
every entry: defining equations, declared component, label uniqueness,
and use of the family parameter.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from importlib import resources

from .cyclo import Cyclo8
from .invariants import fingerprint, stabilizer_dim
from .linalg import FIELD_C8, FIELD_LRAT, Matrix
from .literals import parse_scalar
from .scalars import LambdaRat, scalar_substitute
from .structure import StructureConstants, grading_split, transport_algebra, validate


class CatalogError(ValueError):
    pass


class CatalogParseError(CatalogError):
    pass


class ValidationError(CatalogError):
    pass


class UnknownLabel(CatalogError):
    pass


class ForbiddenParameter(CatalogError):
    pass


FORBIDDEN_LAMBDA = (Cyclo8(-1), Cyclo8(0), Cyclo8(1))

# closed-orbit representative of each connected component (dim A_0 -> label)
CLOSED_ORBIT_LABEL = {4: "(9|0)", 3: "(9|1)", 2: "(9|2)", 1: "(9|3)"}


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    family: str
    n: int
    component: int
    parametric: bool
    sc: StructureConstants
    basis_doc: tuple
    algebra_doc: str
    expected_stab_dim: int
    expected_orbit_dim: int
    u_base_change: Matrix | None


def _parse_in(field, literal, where):
    try:
        v = parse_scalar(literal)
    except Exception as exc:
        raise CatalogParseError(f"{where}: {exc}") from exc
    try:
        return field.lift(v)
    except TypeError as exc:
        raise ValidationError(f"{where}: literal {literal!r} does not lie in {field.name}") from exc


def _mentions_lambda(x) -> bool:
    return isinstance(x, LambdaRat) and not x.is_constant()


def entry_from_record(rec: dict) -> CatalogEntry:
    for key in ("label", "n", "component", "parametric", "alpha", "gamma"):
        if key not in rec:
            raise CatalogParseError(f"catalog entry missing field {key!r}")
    label = rec["label"]
    n = rec["n"]
    parametric = bool(rec["parametric"])
    field = FIELD_LRAT if parametric else FIELD_C8
    if len(rec["alpha"]) != n ** 3:
        raise CatalogParseError(f"{label}: alpha must hold {n ** 3} literals")
    if len(rec["gamma"]) != n ** 2:
        raise CatalogParseError(f"{label}: gamma must hold {n ** 2} literals")
    # file order is k-major: alpha[k*n*n + i*n + j] = coefficient of e_k in e_i e_j
    raw = [_parse_in(field, lit, f"{label}.alpha[{idx}]") for idx, lit in enumerate(rec["alpha"])]
    alpha = [[[raw[k * n * n + i * n + j] for k in range(n)] for j in range(n)] for i in range(n)]
    graw = [_parse_in(field, lit, f"{label}.gamma[{idx}]") for idx, lit in enumerate(rec["gamma"])]
    gamma = [[graw[r * n + c] for c in range(n)] for r in range(n)]
    sc = StructureConstants(n, alpha, gamma, field)
    try:
        validate(sc)
    except Exception as exc:
        raise ValidationError(f"{label}: {exc}") from exc
    split = grading_split(sc)
    if split.dim0 != rec["component"]:
        raise ValidationError(
            f"{label}: declared component {rec['component']} but the involution splits {split.dim0}+{n - split.dim0}"
        )
    uses_lambda = any(_mentions_lambda(x) for x in raw + graw)
    if parametric and not uses_lambda:
        raise ValidationError(f"{label}: declared parametric but no literal involves the family parameter")
    if not parametric and uses_lambda:
        raise ValidationError(f"{label}: non-parametric entry involves the family parameter")
    change = None
    if rec.get("u_base_change"):
        lits = rec["u_base_change"]
        if len(lits) != n * n:
            raise CatalogParseError(f"{label}: u_base_change must hold {n * n} literals")
        ents = [_parse_in(field, lit, f"{label}.u_base_change") for lit in lits]
        change = Matrix(n, n, ents, field)
    fam = label.split("|")[0].lstrip("(")
    return CatalogEntry(
        label=label,
        family=fam,
        n=n,
        component=rec["component"],
        parametric=parametric,
        sc=sc,
        basis_doc=tuple(rec.get("basis_doc", ())),
        algebra_doc=rec.get("algebra_doc", ""),
        expected_stab_dim=rec.get("expected_stab_dim"),
        expected_orbit_dim=rec.get("expected_orbit_dim"),
        u_base_change=change,
    )


class Catalog:
    def __init__(self, entries):
        self.entries = {}
        for e in entries:
            if e.label in self.entries:
                raise ValidationError(f"duplicate label {e.label}")
            self.entries[e.label] = e

    def __len__(self):
        return len(self.entries)

    def __contains__(self, label):
        return label in self.entries

    def labels(self):
        return list(self.entries)

    def entry(self, label: str) -> CatalogEntry:
        if label not in self.entries:
            raise UnknownLabel(f"no catalog entry {label!r}")
        return self.entries[label]

    def by_component(self, component: int):
        return [e for e in self.entries.values() if e.component == component]

    def get(self, label: str, lambda_value=None) -> StructureConstants:
        """Structure constants of an entry, with the family parameter substituted
        when one is supplied.  Substitution at -1, 0, 1 is refused: those values
        fall outside the family."""
        e = self.entry(label)
        if not e.parametric:
            if lambda_value is not None:
                raise ForbiddenParameter(f"{label} is not parametric")
            return e.sc
        if lambda_value is None:
            return e.sc
        if isinstance(lambda_value, str):
            lambda_value = parse_scalar(lambda_value)
        if isinstance(lambda_value, int):
            lambda_value = Cyclo8(lambda_value)
        if not isinstance(lambda_value, Cyclo8):
            raise ForbiddenParameter(f"family parameter must be a field constant, got {lambda_value!r}")
        if any(lambda_value == bad for bad in FORBIDDEN_LAMBDA):
            raise ForbiddenParameter(f"family parameter {lambda_value} is excluded for {label}")
        return self._substituted(e, lambda_value)

    @staticmethod
    def _substituted(e: CatalogEntry, value: Cyclo8) -> StructureConstants:
        n = e.n
        alpha = [[[scalar_substitute(x, value) for x in row] for row in plane] for plane in e.sc.alpha]
        gamma = [[scalar_substitute(x, value) for x in row] for row in e.sc.gamma]
        return validate(StructureConstants(n, alpha, gamma, FIELD_C8))

    def coincidence_check(self):
        """The boundary members of the families land on catalog orbits:
        at 0 entrywise on the (16|.) entries, at 1 isomorphically (equal
        fingerprints) on the (7|.) entries."""
        results = []
        pairs_zero = [("(18;l|0)", "(16|0)"), ("(18;l|1)", "(16|1)"), ("(18;l|2)", "(16|3)")]
        pairs_one = [("(18;l|0)", "(7|0)"), ("(18;l|1)", "(7|2)"), ("(18;l|2)", "(7|3)")]
        for fam, tgt in pairs_zero:
            sub = self._substituted(self.entry(fam), Cyclo8(0))
            ok = sub == self.entry(tgt).sc
            results.append({"family": fam, "at": "0", "target": tgt, "kind": "entrywise", "ok": ok})
        for fam, tgt in pairs_one:
            sub = self._substituted(self.entry(fam), Cyclo8(1))
            ok = fingerprint(sub) == fingerprint(self.entry(tgt).sc)
            results.append({"family": fam, "at": "1", "target": tgt, "kind": "fingerprint", "ok": ok})
        return results

    def check_alpha_blocks(self):
        """Each entry's alpha block equals its family reference's alpha block
        transported by the recorded constant basis change."""
        bad = []
        for e in self.entries.values():
            if e.u_base_change is None:
                continue
            ref = self.entries.get(f"({e.family}|0)")
            if ref is None:
                continue
            moved = transport_algebra(e.u_base_change, ref.sc.alpha, e.sc.field)
            if moved != e.sc.alpha:
                bad.append(e.label)
        return bad


def verify_dims(catalog: Catalog):
    """Computed stabilizer/orbit dimensions versus the declared table values."""
    mismatches = []
    for e in catalog.entries.values():
        stab = stabilizer_dim(e.sc)
        orbit = e.n * e.n - e.n - stab
        if stab != e.expected_stab_dim or orbit != e.expected_orbit_dim:
            mismatches.append((e.label, stab, e.expected_stab_dim, orbit, e.expected_orbit_dim))
    return mismatches


def _records_from_source(data) -> list:
    if isinstance(data, dict):
        data = data.get("entries")
    if not isinstance(data, list):
        raise CatalogParseError("catalog file must be a list of entries or an object with an 'entries' list")
    return data


def load_catalog(source=None) -> Catalog:
    """Load and validate a catalog: a path, or None for the embedded default
    (the SUPERDEGEN_CATALOG environment variable overrides the default)."""
    if source is None:
        source = os.environ.get("SUPERDEGEN_CATALOG") or None
    if source is None:
        text = resources.files("superdegen.data").joinpath("catalog.json").read_text("utf-8")
    else:
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogParseError(f"catalog is not valid JSON: {exc}") from exc
    return Catalog([entry_from_record(rec) for rec in _records_from_source(data)])
