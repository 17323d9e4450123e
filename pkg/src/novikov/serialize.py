"""JSON definition files for algebras, coproducts, r-matrices, maps, forms
and bundles.

All numeric values are rational literals (strings like "-1/2"), never JSON
numbers, and omitted entries are zero.  Serialization is deterministic:
entries are emitted in basis-index order, so identical objects give
byte-identical files.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import (
    ALGEBRA_KINDS,
    FORM_FLAVORS,
    STRUCTURE_ROLES,
    Algebra,
)
from .bialgebra import COPRODUCT_FLAVORS, Coproduct
from .kernel import (
    Matrix,
    Poly,
    Tensor2,
    Tensor3,
    format_rational,
    parse_rational,
    scalar_is_zero,
)

DEFINITION_KINDS = ("algebra", "coproduct", "rmatrix", "map", "form", "bundle")


class DefinitionError(ValueError):
    """A definition file is malformed."""


@dataclass(frozen=True)
class Definition:
    """Parsed definition file: payload plus enough metadata to rebuild it."""

    kind: str
    name: str
    dim: int
    basis: tuple
    payload: object          # Tensor3 | Tensor2 | Matrix | tuple[Definition, ...]
    cls: str | None = None
    weight: Fraction | None = None
    q: Fraction | None = None

    def algebra(self) -> Algebra:
        if self.kind != "algebra":
            raise DefinitionError(f"{self.name}: expected an algebra definition")
        kind = self.cls if self.cls in ALGEBRA_KINDS else "unchecked"
        return Algebra(self.payload, basis=self.basis, kind=kind)

    def coproduct(self) -> Coproduct:
        if self.kind != "coproduct":
            raise DefinitionError(f"{self.name}: expected a coproduct definition")
        flavor = self.cls if self.cls in COPRODUCT_FLAVORS else "unchecked"
        return Coproduct(self.payload, flavor=flavor)

    def tensor2(self) -> Tensor2:
        if self.kind != "rmatrix":
            raise DefinitionError(f"{self.name}: expected an r-matrix definition")
        return self.payload

    def matrix(self) -> Matrix:
        if self.kind not in ("map", "form"):
            raise DefinitionError(f"{self.name}: expected a map or form definition")
        return self.payload

    def parts(self) -> tuple:
        if self.kind != "bundle":
            raise DefinitionError(f"{self.name}: expected a bundle definition")
        return self.payload


# ---------------------------------------------------------------------------
# serialization (object -> dict)
# ---------------------------------------------------------------------------


def _label(basis, i):
    return basis[i]


def algebra_to_dict(a: Algebra, name: str) -> dict:
    entries = []
    for i in range(a.dim):
        for j in range(a.dim):
            result = [
                [a.basis[k], format_rational(v)]
                for k, v in enumerate(a.product_basis(i, j))
                if not scalar_is_zero(v)
            ]
            if result:
                entries.append({"left": a.basis[i], "right": a.basis[j], "result": result})
    out = {"kind": "algebra", "name": name, "dim": a.dim, "basis": list(a.basis), "entries": entries}
    if a.kind != "unchecked":
        out["class"] = a.kind
    return out


def coproduct_to_dict(cop: Coproduct, basis: Sequence[str], name: str) -> dict:
    entries = []
    for i in range(cop.dim):
        result = []
        m = cop.delta_mat(i)
        for j in range(cop.dim):
            for k in range(cop.dim):
                if not scalar_is_zero(m[j, k]):
                    result.append([basis[j], basis[k], format_rational(m[j, k])])
        if result:
            entries.append({"of": basis[i], "result": result})
    out = {"kind": "coproduct", "name": name, "dim": cop.dim, "basis": list(basis), "entries": entries}
    if cop.flavor != "unchecked":
        out["class"] = cop.flavor
    return out


def rmatrix_to_dict(t: Tensor2, basis: Sequence[str], name: str) -> dict:
    entries = []
    for i in range(t.dim):
        for j in range(t.dim):
            v = t.entry(i, j)
            if not scalar_is_zero(v):
                entries.append({"left": basis[i], "right": basis[j], "value": format_rational(v)})
    return {"kind": "rmatrix", "name": name, "dim": t.dim, "basis": list(basis), "entries": entries}


def map_to_dict(
    m: Matrix, basis: Sequence[str], name: str, role: str | None = None, weight=None
) -> dict:
    entries = []
    for j in range(m.cols):
        result = [
            [basis[i], format_rational(m[i, j])]
            for i in range(m.rows)
            if not scalar_is_zero(m[i, j])
        ]
        if result:
            entries.append({"of": basis[j], "result": result})
    out = {"kind": "map", "name": name, "dim": m.cols, "basis": list(basis), "entries": entries}
    if role is not None:
        if role not in STRUCTURE_ROLES:
            raise DefinitionError(f"unknown map role {role!r}")
        out["class"] = role
    if weight is not None:
        out["weight"] = format_rational(weight)
    return out


def form_to_dict(m: Matrix, basis: Sequence[str], name: str, flavor: str | None = None) -> dict:
    entries = []
    for i in range(m.rows):
        for j in range(m.cols):
            if not scalar_is_zero(m[i, j]):
                entries.append({"left": basis[i], "right": basis[j], "value": format_rational(m[i, j])})
    out = {"kind": "form", "name": name, "dim": m.rows, "basis": list(basis), "entries": entries}
    if flavor is not None:
        if flavor not in FORM_FLAVORS:
            raise DefinitionError(f"unknown form flavor {flavor!r}")
        out["class"] = flavor
    return out


def bundle_to_dict(parts: Sequence[dict], name: str, cls: str | None = None, q=None) -> dict:
    if not parts:
        raise DefinitionError("a bundle needs at least one part")
    out = {
        "kind": "bundle",
        "name": name,
        "dim": parts[0]["dim"],
        "basis": list(parts[0]["basis"]),
        "parts": list(parts),
    }
    if cls is not None:
        out["class"] = cls
    if q is not None:
        out["q"] = format_rational(q)
    return out


# ---------------------------------------------------------------------------
# parsing (dict -> Definition)
# ---------------------------------------------------------------------------


def _require(condition: bool, message: str):
    if not condition:
        raise DefinitionError(message)


def _index_of(basis: Sequence[str], label, where: str) -> int:
    _require(isinstance(label, str), f"{where}: labels must be strings")
    try:
        return basis.index(label)
    except ValueError:
        raise DefinitionError(f"{where}: unknown basis label {label!r}") from None


def _rational(text, where: str) -> Fraction:
    _require(isinstance(text, str), f"{where}: rationals must be strings")
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise DefinitionError(f"{where}: {exc}") from None


def parse_definition(doc: dict) -> Definition:
    _require(isinstance(doc, dict), "definition must be a JSON object")
    kind = doc.get("kind")
    _require(kind in DEFINITION_KINDS, f"unknown definition kind {kind!r}")
    name = doc.get("name", "")
    _require(isinstance(name, str), "name must be a string")
    dim = doc.get("dim")
    _require(isinstance(dim, int) and dim > 0, "dim must be a positive integer")
    basis = doc.get("basis")
    _require(
        isinstance(basis, list) and len(basis) == dim and all(isinstance(b, str) for b in basis),
        "basis must list one label per dimension",
    )
    _require(len(set(basis)) == dim, "duplicate basis labels")
    basis = tuple(basis)
    cls = doc.get("class")
    weight = _rational(doc["weight"], f"{name}: weight") if "weight" in doc else None
    qval = _rational(doc["q"], f"{name}: q") if "q" in doc else None

    if kind == "bundle":
        raw_parts = doc.get("parts")
        _require(isinstance(raw_parts, list) and raw_parts, "bundle needs a parts list")
        parts = tuple(parse_definition(p) for p in raw_parts)
        return Definition(kind, name, dim, basis, parts, cls=cls, weight=weight, q=qval)

    entries = doc.get("entries")
    _require(isinstance(entries, list), "entries must be a list")
    where = f"{kind} {name!r}"

    if kind == "algebra":
        cube: dict[tuple, Fraction] = {}
        for e in entries:
            i = _index_of(basis, e.get("left"), where)
            j = _index_of(basis, e.get("right"), where)
            result = e.get("result")
            _require(isinstance(result, list), f"{where}: result must be a list")
            for item in result:
                _require(
                    isinstance(item, list) and len(item) == 2,
                    f"{where}: result items are [label, rational] pairs",
                )
                k = _index_of(basis, item[0], where)
                cube[(i, j, k)] = cube.get((i, j, k), Fraction(0)) + _rational(item[1], where)
        return Definition(kind, name, dim, basis, Tensor3.from_entries(dim, cube), cls=cls, weight=weight, q=qval)

    if kind == "coproduct":
        cube = {}
        for e in entries:
            i = _index_of(basis, e.get("of"), where)
            result = e.get("result")
            _require(isinstance(result, list), f"{where}: result must be a list")
            for item in result:
                _require(
                    isinstance(item, list) and len(item) == 3,
                    f"{where}: result items are [label, label, rational] triples",
                )
                j = _index_of(basis, item[0], where)
                k = _index_of(basis, item[1], where)
                cube[(i, j, k)] = cube.get((i, j, k), Fraction(0)) + _rational(item[2], where)
        return Definition(kind, name, dim, basis, Tensor3.from_entries(dim, cube), cls=cls, weight=weight, q=qval)

    if kind in ("rmatrix", "form"):
        grid: dict[tuple, Fraction] = {}
        for e in entries:
            i = _index_of(basis, e.get("left"), where)
            j = _index_of(basis, e.get("right"), where)
            grid[(i, j)] = grid.get((i, j), Fraction(0)) + _rational(e.get("value"), where)
        mat = Matrix.from_entries(dim, dim, grid)
        payload = Tensor2(mat) if kind == "rmatrix" else mat
        return Definition(kind, name, dim, basis, payload, cls=cls, weight=weight, q=qval)

    # map
    grid = {}
    for e in entries:
        j = _index_of(basis, e.get("of"), where)
        result = e.get("result")
        _require(isinstance(result, list), f"{where}: result must be a list")
        for item in result:
            _require(
                isinstance(item, list) and len(item) == 2,
                f"{where}: result items are [label, rational] pairs",
            )
            i = _index_of(basis, item[0], where)
            grid[(i, j)] = grid.get((i, j), Fraction(0)) + _rational(item[1], where)
    return Definition(kind, name, dim, basis, Matrix.from_entries(dim, dim, grid), cls=cls, weight=weight, q=qval)


def load_definition(path: str) -> Definition:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DefinitionError(f"{path}: invalid JSON ({exc})") from None
    return parse_definition(doc)


def dump_definition(doc: dict, path: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(doc, indent=2))
        fh.write("\n")


# ---------------------------------------------------------------------------
# polynomial literals (parametric r-matrix files)
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(
    r"^(\d+(?:/\d+)?)?"
    r"(?:\*?([a-zA-Z_][a-zA-Z_0-9]*(?:\^\d+)?(?:\*[a-zA-Z_][a-zA-Z_0-9]*(?:\^\d+)?)*))?$"
)


def parse_poly_literal(text: str, variables: Sequence[str]) -> Poly:
    """Parse sums of rational-coefficient monomials like ``-1/2*k*l^2 + 3``."""
    variables = tuple(variables)
    compact = text.replace(" ", "")
    if not compact:
        raise DefinitionError("empty polynomial literal")
    # split into signed terms
    terms = []
    start = 0
    for idx in range(1, len(compact)):
        if compact[idx] in "+-" and compact[idx - 1] not in "*^+-/":
            terms.append(compact[start:idx])
            start = idx
    terms.append(compact[start:])

    total = Poly.zero(variables)
    for term in terms:
        sign = Fraction(1)
        if term and term[0] in "+-":
            sign = Fraction(-1 if term[0] == "-" else 1)
            term = term[1:]
        m = _TERM_RE.match(term)
        if m is None or (m.group(1) is None and m.group(2) is None):
            raise DefinitionError(f"bad polynomial term {term!r}")
        coeff = parse_rational(m.group(1)) if m.group(1) else Fraction(1)
        mono = Poly.constant(sign * coeff, variables)
        if m.group(2):
            for factor in m.group(2).split("*"):
                if "^" in factor:
                    nm, po = factor.split("^")
                    mono = mono * Poly.variable(nm, variables) ** int(po)
                else:
                    mono = mono * Poly.variable(factor, variables)
        total = total + mono
    return total
