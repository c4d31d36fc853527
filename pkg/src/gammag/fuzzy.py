"""Fuzzy subsets with exact rational membership and sup-min composition.

Membership values are fractions.Fraction throughout; nothing in this
module touches floats, so comparisons and equalities are exact. The
composition of f and g under a structure takes, at each element, the
best min(f(b), g(c)) over all factorizations of that element, and 0
where no factorization exists.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .core import GammaMagma, InputError
from .crisp import IDEAL_KINDS, CrispSubset

ZERO = Fraction(0)
ONE = Fraction(1)

FUZZY_KINDS = IDEAL_KINDS + ("idempotent",)


def _as_value(v) -> Fraction:
    try:
        value = Fraction(v)
    except (TypeError, ValueError, ZeroDivisionError):
        raise InputError(f"membership value {v!r} is not rational") from None
    if not ZERO <= value <= ONE:
        raise InputError(f"membership value {value} outside [0, 1]")
    return value


@dataclass(frozen=True)
class FuzzySubset:
    """Vector of membership values, one exact rational per element."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(_as_value(v) for v in self.values)
        if not values:
            raise InputError("fuzzy subset needs at least one element")
        object.__setattr__(self, "values", values)

    @classmethod
    def constant(cls, order: int, value) -> "FuzzySubset":
        return cls((_as_value(value),) * order)

    @classmethod
    def ones(cls, order: int) -> "FuzzySubset":
        return cls.constant(order, ONE)

    @classmethod
    def zeros(cls, order: int) -> "FuzzySubset":
        return cls.constant(order, ZERO)

    @property
    def order(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> Fraction:
        if not 0 <= i < self.order:
            raise InputError(f"element {i!r} out of range for order {self.order}")
        return self.values[i]

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.values) if v > ZERO)

    def to_dict(self) -> dict:
        den = math.lcm(*(v.denominator for v in self.values))
        return {"den": den, "num": [int(v * den) for v in self.values]}


def _check_pair(f: FuzzySubset, g: FuzzySubset) -> None:
    if f.order != g.order:
        raise InputError(f"fuzzy subset order mismatch: {f.order} vs {g.order}")


def meet(f: FuzzySubset, g: FuzzySubset) -> FuzzySubset:
    _check_pair(f, g)
    return FuzzySubset(tuple(min(a, b) for a, b in zip(f.values, g.values)))


def join(f: FuzzySubset, g: FuzzySubset) -> FuzzySubset:
    _check_pair(f, g)
    return FuzzySubset(tuple(max(a, b) for a, b in zip(f.values, g.values)))


def leq(f: FuzzySubset, g: FuzzySubset) -> bool:
    _check_pair(f, g)
    return all(a <= b for a, b in zip(f.values, g.values))


def _check_carrier(m: GammaMagma, f: FuzzySubset) -> None:
    if f.order != m.order:
        raise InputError(f"fuzzy subset order {f.order} does not match structure order {m.order}")


def gamma_product(m: GammaMagma, f: FuzzySubset, g: FuzzySubset) -> FuzzySubset:
    """Sup-min composition of f and g over every factorization."""
    _check_carrier(m, f)
    _check_carrier(m, g)
    fv = f.values
    gv = g.values
    out = []
    for entries in m.factorizations:
        best = ZERO
        for b, _, c in entries:
            v = fv[b]
            if gv[c] < v:
                v = gv[c]
            if v > best:
                best = v
        out.append(best)
    return FuzzySubset(tuple(out))


def characteristic(a: CrispSubset) -> FuzzySubset:
    return FuzzySubset(tuple(ONE if i in a else ZERO for i in range(a.size)))


def level_cut(f: FuzzySubset, t) -> CrispSubset:
    """Elements with membership at least t; t must be positive."""
    threshold = Fraction(t)
    if threshold <= ZERO:
        raise InputError("level cut threshold must be positive")
    return CrispSubset.from_elements(f.order, (i for i, v in enumerate(f.values) if v >= threshold))


class KindWitness(NamedTuple):
    """First pointwise failure of a kind constraint.

    relation "geq" means lhs >= rhs was expected and lhs < rhs holds;
    relation "eq" means lhs == rhs was expected and they differ.
    """

    elements: tuple[int, ...]
    labels: tuple[str, ...]
    relation: str
    lhs: Fraction
    rhs: Fraction


def _subgroupoid_witness(m: GammaMagma, f: FuzzySubset) -> KindWitness | None:
    fv = f.values
    for x in range(m.order):
        a = fv[x]
        for y in range(m.order):
            bound = min(a, fv[y])
            for gi, table in enumerate(m.tables):
                xy = table[x][y]
                if fv[xy] < bound:
                    return KindWitness((x, y), (m.gamma[gi],), "geq", fv[xy], bound)
    return None


def _left_witness(m: GammaMagma, f: FuzzySubset) -> KindWitness | None:
    fv = f.values
    for x in range(m.order):
        for y in range(m.order):
            bound = fv[y]
            for gi, table in enumerate(m.tables):
                xy = table[x][y]
                if fv[xy] < bound:
                    return KindWitness((x, y), (m.gamma[gi],), "geq", fv[xy], bound)
    return None


def _right_witness(m: GammaMagma, f: FuzzySubset) -> KindWitness | None:
    fv = f.values
    for x in range(m.order):
        bound = fv[x]
        for y in range(m.order):
            for gi, table in enumerate(m.tables):
                xy = table[x][y]
                if fv[xy] < bound:
                    return KindWitness((x, y), (m.gamma[gi],), "geq", fv[xy], bound)
    return None


def _two_sided_witness(m: GammaMagma, f: FuzzySubset) -> KindWitness | None:
    return _left_witness(m, f) or _right_witness(m, f)


def _generalized_bi_witness(m: GammaMagma, f: FuzzySubset) -> KindWitness | None:
    fv = f.values
    rng = range(m.order)
    for x in rng:
        a = fv[x]
        for y in rng:
            for z in rng:
                bound = min(a, fv[z])
                for ai, ta in enumerate(m.tables):
                    xy = ta[x][y]
                    for bi, tb in enumerate(m.tables):
                        v = fv[tb[xy][z]]
                        if v < bound:
                            return KindWitness((x, y, z), (m.gamma[ai], m.gamma[bi]), "geq", v, bound)
    return None


def _bi_witness(m: GammaMagma, f: FuzzySubset) -> KindWitness | None:
    return _subgroupoid_witness(m, f) or _generalized_bi_witness(m, f)


def _interior_witness(m: GammaMagma, f: FuzzySubset) -> KindWitness | None:
    fv = f.values
    rng = range(m.order)
    for x in rng:
        for y in rng:
            bound = fv[y]
            for z in rng:
                for ai, ta in enumerate(m.tables):
                    xy = ta[x][y]
                    for bi, tb in enumerate(m.tables):
                        v = fv[tb[xy][z]]
                        if v < bound:
                            return KindWitness((x, y, z), (m.gamma[ai], m.gamma[bi]), "geq", v, bound)
    return None


def _quasi_witness(m: GammaMagma, f: FuzzySubset) -> KindWitness | None:
    ones = FuzzySubset.ones(m.order)
    both = meet(gamma_product(m, f, ones), gamma_product(m, ones, f))
    for a in range(m.order):
        if f.values[a] < both.values[a]:
            return KindWitness((a,), (), "geq", f.values[a], both.values[a])
    return None


def _idempotent_witness(m: GammaMagma, f: FuzzySubset) -> KindWitness | None:
    square = gamma_product(m, f, f)
    for a in range(m.order):
        if square.values[a] != f.values[a]:
            return KindWitness((a,), (), "eq", square.values[a], f.values[a])
    return None


_KIND_WITNESSES = {
    "subgroupoid": _subgroupoid_witness,
    "left": _left_witness,
    "right": _right_witness,
    "two_sided": _two_sided_witness,
    "generalized_bi": _generalized_bi_witness,
    "bi": _bi_witness,
    "interior": _interior_witness,
    "quasi": _quasi_witness,
    "idempotent": _idempotent_witness,
}


def kind_violation(m: GammaMagma, f: FuzzySubset, kind: str) -> KindWitness | None:
    """First pointwise failure of the kind constraint, or None if it holds."""
    _check_carrier(m, f)
    try:
        scan = _KIND_WITNESSES[kind]
    except KeyError:
        raise InputError(f"unknown fuzzy kind {kind!r}; expected one of {FUZZY_KINDS}") from None
    return scan(m, f)


def is_fuzzy_subgroupoid(m: GammaMagma, f: FuzzySubset) -> bool:
    return _subgroupoid_witness(m, f) is None


def is_fuzzy_left(m: GammaMagma, f: FuzzySubset) -> bool:
    return _left_witness(m, f) is None


def is_fuzzy_right(m: GammaMagma, f: FuzzySubset) -> bool:
    return _right_witness(m, f) is None


def is_fuzzy_generalized_bi(m: GammaMagma, f: FuzzySubset) -> bool:
    return _generalized_bi_witness(m, f) is None


def is_fuzzy_interior(m: GammaMagma, f: FuzzySubset) -> bool:
    return _interior_witness(m, f) is None


def is_fuzzy_quasi(m: GammaMagma, f: FuzzySubset) -> bool:
    return _quasi_witness(m, f) is None


def is_fuzzy_idempotent(m: GammaMagma, f: FuzzySubset) -> bool:
    return _idempotent_witness(m, f) is None


def classify_fuzzy(m: GammaMagma, f: FuzzySubset) -> set[str]:
    """Every fuzzy kind f satisfies, including composition idempotence."""
    _check_carrier(m, f)
    kinds = set()
    if is_fuzzy_subgroupoid(m, f):
        kinds.add("subgroupoid")
    left = is_fuzzy_left(m, f)
    right = is_fuzzy_right(m, f)
    if left:
        kinds.add("left")
    if right:
        kinds.add("right")
    if left and right:
        kinds.add("two_sided")
    gen_bi = is_fuzzy_generalized_bi(m, f)
    if gen_bi:
        kinds.add("generalized_bi")
    if gen_bi and "subgroupoid" in kinds:
        kinds.add("bi")
    if is_fuzzy_interior(m, f):
        kinds.add("interior")
    if is_fuzzy_quasi(m, f):
        kinds.add("quasi")
    if is_fuzzy_idempotent(m, f):
        kinds.add("idempotent")
    # Two-sided forces both one-sided compositions below f, hence their
    # pointwise min too; a miss here means a product path is wrong.
    assert "two_sided" not in kinds or "quasi" in kinds
    return kinds


def has_fuzzy_kind(m: GammaMagma, f: FuzzySubset, kind: str) -> bool:
    return kind_violation(m, f, kind) is None


@dataclass(frozen=True)
class Lattice:
    """Evenly spaced value grid 0, 1/den, ..., 1 for decidable quantification."""

    den: int

    def __post_init__(self):
        if not isinstance(self.den, int) or isinstance(self.den, bool) or self.den < 1:
            raise InputError("lattice denominator must be a positive integer")

    def values(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(i, self.den) for i in range(self.den + 1))

    def count(self, order: int) -> int:
        return (self.den + 1) ** order

    def subsets(self, order: int):
        """All lattice-valued subsets, first element varying slowest."""
        if order < 1:
            raise InputError("order must be a positive integer")
        for values in itertools.product(self.values(), repeat=order):
            yield FuzzySubset(values)

    def contains(self, f: FuzzySubset) -> bool:
        return all((v * self.den).denominator == 1 for v in f.values)


def fuzzy_from_dict(d: dict, order: int | None = None) -> FuzzySubset:
    """Parse the {"den": d, "num": [...]} layout with strict bounds checks."""
    if not isinstance(d, dict):
        raise InputError("fuzzy subset must be a JSON object")
    unknown = set(d) - {"den", "num"}
    if unknown:
        raise InputError(f"unknown fuzzy subset keys {sorted(unknown)}")
    try:
        den = d["den"]
        num = d["num"]
    except KeyError as exc:
        raise InputError(f"fuzzy subset missing key {exc.args[0]!r}") from None
    if not isinstance(den, int) or isinstance(den, bool) or den < 1:
        raise InputError("den must be a positive integer")
    if not isinstance(num, list) or not num:
        raise InputError("num must be a non-empty list of integers")
    for n in num:
        if not isinstance(n, int) or isinstance(n, bool):
            raise InputError(f"numerator {n!r} is not an integer")
        if n < 0 or n > den:
            raise InputError(f"numerator {n} outside 0..{den}")
    if order is not None and len(num) != order:
        raise InputError(f"fuzzy subset has {len(num)} entries; structure order is {order}")
    return FuzzySubset(tuple(Fraction(n, den) for n in num))
