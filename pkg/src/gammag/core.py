"""Finite gamma-indexed AG-groupoids as explicit multiplication tables.

A structure is a carrier {0, ..., order-1} together with one binary
operation per gamma label. Everything downstream (ideal classification,
theorem verification, model search) works on these tables, so this module
keeps them immutable and cheap to interrogate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path


class InputError(ValueError):
    """Malformed structure, file, or argument."""


class CapacityError(RuntimeError):
    """A requested computation exceeds its configured budget or cap."""


LAW_NAMES = (
    "left_invertive",
    "medial",
    "ag_star_star",
    "paramedial",
    "commutative",
    "associative",
    "band",
    "has_left_identity",
)


def _as_table(rows, order):
    table = tuple(tuple(row) for row in rows)
    if len(table) != order or any(len(row) != order for row in table):
        raise InputError(f"table must be {order}x{order}")
    for row in table:
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < order:
                raise InputError(f"table entry {v!r} outside 0..{order - 1}")
    return table


@dataclass(frozen=True)
class GammaMagma:
    """Immutable family of multiplication tables over a common carrier.

    tables[gi][x][y] is the product of x and y under the gamma label
    with index gi. Optional labels give display names for elements;
    they never affect equality or hashing.
    """

    order: int
    gamma: tuple[str, ...]
    tables: tuple[tuple[tuple[int, ...], ...], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if not isinstance(self.order, int) or self.order < 1:
            raise InputError("order must be a positive integer")
        gamma = tuple(self.gamma)
        if not gamma:
            raise InputError("gamma label set must be non-empty")
        if any(not isinstance(g, str) or not g for g in gamma):
            raise InputError("gamma labels must be non-empty strings")
        if len(set(gamma)) != len(gamma):
            raise InputError("gamma labels must be distinct")
        tables = tuple(_as_table(t, self.order) for t in self.tables)
        if len(tables) != len(gamma):
            raise InputError("need exactly one table per gamma label")
        labels = self.labels
        if labels is not None:
            labels = tuple(str(v) for v in labels)
            if len(labels) != self.order or len(set(labels)) != self.order:
                raise InputError("labels must name each element exactly once")
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "tables", tables)
        object.__setattr__(self, "labels", labels)

    @cached_property
    def _gamma_index(self) -> dict[str, int]:
        return {g: i for i, g in enumerate(self.gamma)}

    def gamma_index(self, label: str) -> int:
        try:
            return self._gamma_index[label]
        except KeyError:
            raise InputError(f"unknown gamma label {label!r}") from None

    def apply(self, x: int, label: str, y: int) -> int:
        """Product of x and y under the named operation."""
        if not 0 <= x < self.order or not 0 <= y < self.order:
            raise InputError(f"element out of range for order {self.order}")
        return self.tables[self.gamma_index(label)][x][y]

    def element_name(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def element_index(self, name) -> int:
        """Resolve an element given as index, numeric string, or label."""
        if isinstance(name, int) and not isinstance(name, bool):
            idx = name
        elif self.labels is not None and name in self.labels:
            idx = self.labels.index(name)
        else:
            try:
                idx = int(name)
            except (TypeError, ValueError):
                raise InputError(f"unknown element {name!r}") from None
        if not 0 <= idx < self.order:
            raise InputError(f"element {name!r} out of range for order {self.order}")
        return idx

    @cached_property
    def factorizations(self) -> tuple[tuple[tuple[int, int, int], ...], ...]:
        """For each a, all triples (b, gi, c) with tables[gi][b][c] == a."""
        fact = [[] for _ in range(self.order)]
        for gi, table in enumerate(self.tables):
            for b, row in enumerate(table):
                for c, a in enumerate(row):
                    fact[a].append((b, gi, c))
        return tuple(tuple(entries) for entries in fact)

    @property
    def every_element_factorizable(self) -> bool:
        return all(self.factorizations)

    def to_dict(self) -> dict:
        d = {
            "order": self.order,
            "gamma": list(self.gamma),
            "tables": {g: [list(row) for row in self.tables[i]] for i, g in enumerate(self.gamma)},
        }
        if self.labels is not None:
            d["labels"] = list(self.labels)
        return d


@dataclass(frozen=True)
class LawWitness:
    """One substitution that makes the two sides of a law differ."""

    law: str
    elements: tuple[int, ...]
    labels: tuple[str, ...]
    lhs: int
    rhs: int

    def render(self, m: GammaMagma) -> str:
        names = [m.element_name(e) for e in self.elements]
        return f"{self.law}{tuple(names) + self.labels}: {m.element_name(self.lhs)} != {m.element_name(self.rhs)}"

    def to_dict(self, m: GammaMagma | None = None) -> dict:
        d = {
            "law": self.law,
            "elements": list(self.elements),
            "gamma": list(self.labels),
            "lhs": self.lhs,
            "rhs": self.rhs,
        }
        if m is not None and m.labels is not None:
            d["display"] = self.render(m)
        return d


@dataclass(frozen=True)
class LawReport:
    """Per-law booleans plus the first lexicographic witness for each failure.

    Witness tuples order element components before gamma components, and
    the scan enumerates elements in carrier order and labels in declared
    order, so the recorded witness is the lexicographically smallest one.
    has_left_identity is existential: when it holds, left_identity is the
    least such element; when it fails there is no witness to attach.
    """

    left_invertive: bool
    medial: bool
    ag_star_star: bool
    paramedial: bool
    commutative: bool
    associative: bool
    band: bool
    has_left_identity: bool
    witnesses: dict[str, LawWitness]
    left_identity: int | None

    def holds(self, law: str) -> bool:
        if law not in LAW_NAMES:
            raise InputError(f"unknown law {law!r}")
        return getattr(self, law)

    def to_dict(self, m: GammaMagma | None = None) -> dict:
        return {
            "laws": {law: getattr(self, law) for law in LAW_NAMES},
            "witnesses": {law: w.to_dict(m) for law, w in sorted(self.witnesses.items())},
            "left_identity": self.left_identity,
        }


def _scan_left_invertive(m: GammaMagma) -> LawWitness | None:
    t = m.tables
    rng = range(m.order)
    for x in rng:
        for y in rng:
            for z in rng:
                for ai, ta in enumerate(t):
                    xy = ta[x][y]
                    zy = ta[z][y]
                    for bi, tb in enumerate(t):
                        lhs = tb[xy][z]
                        rhs = tb[zy][x]
                        if lhs != rhs:
                            return LawWitness("left_invertive", (x, y, z), (m.gamma[ai], m.gamma[bi]), lhs, rhs)
    return None


def _scan_medial(m: GammaMagma) -> LawWitness | None:
    t = m.tables
    rng = range(m.order)
    for w in rng:
        for x in rng:
            for y in rng:
                for z in rng:
                    for ai, ta in enumerate(t):
                        for bi, tb in enumerate(t):
                            for ci, tc in enumerate(t):
                                lhs = tb[ta[w][x]][tc[y][z]]
                                rhs = tb[ta[w][y]][tc[x][z]]
                                if lhs != rhs:
                                    return LawWitness(
                                        "medial",
                                        (w, x, y, z),
                                        (m.gamma[ai], m.gamma[bi], m.gamma[ci]),
                                        lhs,
                                        rhs,
                                    )
    return None


def _scan_ag_star_star(m: GammaMagma) -> LawWitness | None:
    t = m.tables
    rng = range(m.order)
    for x in rng:
        for y in rng:
            for z in rng:
                for ai, ta in enumerate(t):
                    for bi, tb in enumerate(t):
                        lhs = ta[x][tb[y][z]]
                        rhs = ta[y][tb[x][z]]
                        if lhs != rhs:
                            return LawWitness("ag_star_star", (x, y, z), (m.gamma[ai], m.gamma[bi]), lhs, rhs)
    return None


def _scan_paramedial(m: GammaMagma) -> LawWitness | None:
    t = m.tables
    rng = range(m.order)
    for w in rng:
        for x in rng:
            for y in rng:
                for z in rng:
                    for ai, ta in enumerate(t):
                        for bi, tb in enumerate(t):
                            for ci, tc in enumerate(t):
                                lhs = tb[ta[w][x]][tc[y][z]]
                                rhs = tb[ta[z][y]][tc[x][w]]
                                if lhs != rhs:
                                    return LawWitness(
                                        "paramedial",
                                        (w, x, y, z),
                                        (m.gamma[ai], m.gamma[bi], m.gamma[ci]),
                                        lhs,
                                        rhs,
                                    )
    return None


def _scan_commutative(m: GammaMagma) -> LawWitness | None:
    rng = range(m.order)
    for x in rng:
        for y in rng:
            for gi, table in enumerate(m.tables):
                if table[x][y] != table[y][x]:
                    return LawWitness("commutative", (x, y), (m.gamma[gi],), table[x][y], table[y][x])
    return None


def _scan_associative(m: GammaMagma) -> LawWitness | None:
    t = m.tables
    rng = range(m.order)
    for x in rng:
        for y in rng:
            for z in rng:
                for ai, ta in enumerate(t):
                    for bi, tb in enumerate(t):
                        lhs = tb[ta[x][y]][z]
                        rhs = ta[x][tb[y][z]]
                        if lhs != rhs:
                            return LawWitness("associative", (x, y, z), (m.gamma[ai], m.gamma[bi]), lhs, rhs)
    return None


def _scan_band(m: GammaMagma) -> LawWitness | None:
    for a in range(m.order):
        for gi, table in enumerate(m.tables):
            if table[a][a] != a:
                return LawWitness("band", (a,), (m.gamma[gi],), table[a][a], a)
    return None


def _find_left_identity(m: GammaMagma) -> int | None:
    for e in range(m.order):
        if all(table[e][x] == x for table in m.tables for x in range(m.order)):
            return e
    return None


_EQUATIONAL_SCANS = {
    "left_invertive": _scan_left_invertive,
    "medial": _scan_medial,
    "ag_star_star": _scan_ag_star_star,
    "paramedial": _scan_paramedial,
    "commutative": _scan_commutative,
    "associative": _scan_associative,
    "band": _scan_band,
}


def check_laws(m: GammaMagma) -> LawReport:
    """Exhaustively decide every law, with first-failure witnesses."""
    witnesses = {}
    flags = {}
    for law, scan in _EQUATIONAL_SCANS.items():
        w = scan(m)
        flags[law] = w is None
        if w is not None:
            witnesses[law] = w
    e = _find_left_identity(m)
    report = LawReport(
        left_invertive=flags["left_invertive"],
        medial=flags["medial"],
        ag_star_star=flags["ag_star_star"],
        paramedial=flags["paramedial"],
        commutative=flags["commutative"],
        associative=flags["associative"],
        band=flags["band"],
        has_left_identity=e is not None,
        witnesses=witnesses,
        left_identity=e,
    )
    # The invertive law forces mediality, and together with the starred
    # law it forces paramediality; a violation here means a scan is wrong.
    assert report.medial or not report.left_invertive
    assert report.paramedial or not (report.left_invertive and report.ag_star_star)
    return report


def check_single_law(m: GammaMagma, law: str) -> LawWitness | None:
    """Scan one equational law; None means it holds."""
    if law not in _EQUATIONAL_SCANS:
        raise InputError(f"unknown equational law {law!r}")
    return _EQUATIONAL_SCANS[law](m)


TERM_PATTERNS = ("xy", "(xx)y", "x(yy)")


def from_base_with_terms(base, patterns, gamma=None, labels=None) -> GammaMagma:
    """Build a gamma-indexed structure from one base table and term patterns.

    Each pattern from {"xy", "(xx)y", "x(yy)"} contributes a derived
    operation evaluated in the base table. Gamma labels default to
    g0, g1, ... in pattern order.
    """
    order = len(base)
    base = _as_table(base, order)
    patterns = tuple(patterns)
    if not patterns:
        raise InputError("need at least one term pattern")
    for p in patterns:
        if p not in TERM_PATTERNS:
            raise InputError(f"unknown term pattern {p!r}; expected one of {TERM_PATTERNS}")
    if gamma is None:
        gamma = tuple(f"g{i}" for i in range(len(patterns)))
    gamma = tuple(gamma)
    if len(gamma) != len(patterns):
        raise InputError("need exactly one gamma label per pattern")
    tables = []
    for p in patterns:
        if p == "xy":
            tables.append(base)
        elif p == "(xx)y":
            tables.append(tuple(tuple(base[base[x][x]][y] for y in range(order)) for x in range(order)))
        else:
            tables.append(tuple(tuple(base[x][base[y][y]] for y in range(order)) for x in range(order)))
    return GammaMagma(order=order, gamma=gamma, tables=tuple(tables), labels=labels)


def integer_op_eval(a: int, beta: int, b: int, z: int) -> int:
    """Integer-carrier operation b - beta - a - beta - z.

    The offset z is a parameter of the family; composing two applications
    cancels it, which is what the law regression tests exploit.
    """
    for v in (a, beta, b, z):
        if not isinstance(v, int) or isinstance(v, bool):
            raise InputError("integer operation needs integer arguments")
    return b - beta - a - beta - z


def structure_from_dict(d: dict) -> GammaMagma:
    """Parse the structure JSON object layout, validating shape and closure."""
    if not isinstance(d, dict):
        raise InputError("structure must be a JSON object")
    unknown = set(d) - {"order", "gamma", "tables", "labels"}
    if unknown:
        raise InputError(f"unknown structure keys {sorted(unknown)}")
    try:
        order = d["order"]
        gamma = d["gamma"]
        tables = d["tables"]
    except KeyError as exc:
        raise InputError(f"structure missing key {exc.args[0]!r}") from None
    if not isinstance(gamma, list):
        raise InputError("gamma must be a list of label strings")
    if not isinstance(tables, dict):
        raise InputError("tables must map each gamma label to a square table")
    if set(tables) != set(gamma):
        raise InputError("tables keys must equal the gamma label list")
    return GammaMagma(
        order=order,
        gamma=tuple(gamma),
        tables=tuple(tables[g] for g in gamma),
        labels=tuple(d["labels"]) if "labels" in d else None,
    )


def load_structure(path) -> GammaMagma:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read structure file {path}: {exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"structure file {path} is not valid JSON: {exc}") from None
    return structure_from_dict(data)


def canonical_json(obj) -> str:
    """Stable serialization so identical results are byte-identical."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True)


def dump_structure(m: GammaMagma, path) -> None:
    Path(path).write_text(canonical_json(m.to_dict()) + "\n")
