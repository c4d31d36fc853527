"""Crisp subsets of a finite carrier and their ideal classifications.

Subsets are bitmasks over {0, ..., order-1}; bit i set means element i is
a member. Products, inclusions, and the whole classification logic are
pure table scans, so everything here is exact and deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CapacityError, GammaMagma, InputError

IDEAL_KINDS = (
    "subgroupoid",
    "left",
    "right",
    "two_sided",
    "bi",
    "generalized_bi",
    "interior",
    "quasi",
)

ENUMERATION_ORDER_CAP = 20


@dataclass(frozen=True)
class CrispSubset:
    """Subset of a carrier of known size, stored as a bitmask."""

    size: int
    bits: int

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 1:
            raise InputError("subset carrier size must be a positive integer")
        if not isinstance(self.bits, int) or self.bits < 0 or self.bits >= 1 << self.size:
            raise InputError(f"bitmask {self.bits!r} out of range for size {self.size}")

    @classmethod
    def from_elements(cls, size: int, elements) -> "CrispSubset":
        bits = 0
        for e in elements:
            if not isinstance(e, int) or isinstance(e, bool) or not 0 <= e < size:
                raise InputError(f"element {e!r} out of range for size {size}")
            bits |= 1 << e
        return cls(size, bits)

    @classmethod
    def full(cls, size: int) -> "CrispSubset":
        return cls(size, (1 << size) - 1)

    @classmethod
    def empty(cls, size: int) -> "CrispSubset":
        return cls(size, 0)

    def elements(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.size) if self.bits >> i & 1)

    def __contains__(self, e: int) -> bool:
        return 0 <= e < self.size and bool(self.bits >> e & 1)

    def __iter__(self):
        return iter(self.elements())

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def _check_mate(self, other: "CrispSubset") -> None:
        if not isinstance(other, CrispSubset):
            raise InputError("expected a CrispSubset")
        if other.size != self.size:
            raise InputError(f"carrier size mismatch: {self.size} vs {other.size}")

    def union(self, other: "CrispSubset") -> "CrispSubset":
        self._check_mate(other)
        return CrispSubset(self.size, self.bits | other.bits)

    def intersection(self, other: "CrispSubset") -> "CrispSubset":
        self._check_mate(other)
        return CrispSubset(self.size, self.bits & other.bits)

    def issubset(self, other: "CrispSubset") -> bool:
        self._check_mate(other)
        return self.bits & ~other.bits == 0

    def to_json(self) -> list[int]:
        return list(self.elements())


def subset_from_json(order: int, data) -> CrispSubset:
    if not isinstance(data, list):
        raise InputError("subset must be a JSON array of element indices")
    return CrispSubset.from_elements(order, data)


def _check_carrier(m: GammaMagma, a: CrispSubset) -> None:
    if a.size != m.order:
        raise InputError(f"subset size {a.size} does not match structure order {m.order}")


def set_product(m: GammaMagma, a: CrispSubset, b: CrispSubset) -> CrispSubset:
    """All products x g y with x in a, y in b, over every gamma label."""
    _check_carrier(m, a)
    _check_carrier(m, b)
    bits = 0
    xs = a.elements()
    ys = b.elements()
    for table in m.tables:
        for x in xs:
            row = table[x]
            for y in ys:
                bits |= 1 << row[y]
    return CrispSubset(m.order, bits)


def classify_subset(m: GammaMagma, a: CrispSubset) -> set[str]:
    """Every ideal kind the non-empty subset satisfies."""
    _check_carrier(m, a)
    if not a:
        raise InputError("classification needs a non-empty subset")
    s = CrispSubset.full(m.order)
    aga = set_product(m, a, a)
    sga = set_product(m, s, a)
    ags = set_product(m, a, s)
    kinds = set()
    if aga.issubset(a):
        kinds.add("subgroupoid")
    if sga.issubset(a):
        kinds.add("left")
    if ags.issubset(a):
        kinds.add("right")
    if "left" in kinds and "right" in kinds:
        kinds.add("two_sided")
    if set_product(m, ags, a).issubset(a):
        kinds.add("generalized_bi")
    if "generalized_bi" in kinds and "subgroupoid" in kinds:
        kinds.add("bi")
    if set_product(m, sga, s).issubset(a):
        kinds.add("interior")
    if sga.intersection(ags).issubset(a):
        kinds.add("quasi")
    # Both one-sided products land inside a two-sided ideal, so its
    # intersection does too; a miss here means a product scan is wrong.
    assert "two_sided" not in kinds or "quasi" in kinds
    return kinds


@dataclass(frozen=True)
class IntraWitness:
    """Decomposition a = (x b (a xi a)) g y for a single element a."""

    element: int
    x: int
    y: int
    beta: str
    xi: str
    gamma: str

    def to_dict(self, m: GammaMagma | None = None) -> dict:
        d = {
            "element": self.element,
            "x": self.x,
            "y": self.y,
            "beta": self.beta,
            "xi": self.xi,
            "gamma": self.gamma,
        }
        if m is not None and m.labels is not None:
            d["display"] = "{a} = ({x} {b} ({a} {xi} {a})) {g} {y}".format(
                a=m.element_name(self.element),
                x=m.element_name(self.x),
                y=m.element_name(self.y),
                b=self.beta,
                xi=self.xi,
                g=self.gamma,
            )
        return d


def intra_witness_valid(m: GammaMagma, w: IntraWitness) -> bool:
    inner = m.apply(w.element, w.xi, w.element)
    left = m.apply(w.x, w.beta, inner)
    return m.apply(left, w.gamma, w.y) == w.element


def intra_regular_witness(m: GammaMagma, a: int) -> IntraWitness | None:
    """Lexicographically least (x, y, beta, xi, gamma) decomposing a, if any."""
    if not isinstance(a, int) or isinstance(a, bool) or not 0 <= a < m.order:
        raise InputError(f"element {a!r} out of range for order {m.order}")
    t = m.tables
    k = len(t)
    rng = range(m.order)
    inner = [[t[xi][a][a] for xi in range(k)]]
    for x in rng:
        for y in rng:
            for bi in range(k):
                tb = t[bi]
                for xi in range(k):
                    mid = tb[x][inner[0][xi]]
                    for gi in range(k):
                        if t[gi][mid][y] == a:
                            return IntraWitness(a, x, y, m.gamma[bi], m.gamma[xi], m.gamma[gi])
    return None


def is_intra_regular(m: GammaMagma) -> bool:
    return all(intra_regular_witness(m, a) is not None for a in range(m.order))


def _kind_predicate(m: GammaMagma, kind: str):
    if kind not in IDEAL_KINDS:
        raise InputError(f"unknown ideal kind {kind!r}; expected one of {IDEAL_KINDS}")
    s = CrispSubset.full(m.order)

    def test(a: CrispSubset) -> bool:
        if kind == "subgroupoid":
            return set_product(m, a, a).issubset(a)
        if kind == "left":
            return set_product(m, s, a).issubset(a)
        if kind == "right":
            return set_product(m, a, s).issubset(a)
        if kind == "two_sided":
            return set_product(m, s, a).issubset(a) and set_product(m, a, s).issubset(a)
        if kind == "generalized_bi":
            return set_product(m, set_product(m, a, s), a).issubset(a)
        if kind == "bi":
            return set_product(m, a, a).issubset(a) and set_product(m, set_product(m, a, s), a).issubset(a)
        if kind == "interior":
            return set_product(m, set_product(m, s, a), s).issubset(a)
        return set_product(m, s, a).intersection(set_product(m, a, s)).issubset(a)

    return test


def enumerate_ideals(m: GammaMagma, kind: str) -> list[CrispSubset]:
    """All non-empty subsets of the given kind, in ascending bit-pattern order."""
    if m.order > ENUMERATION_ORDER_CAP:
        raise CapacityError(
            f"subset enumeration is capped at order {ENUMERATION_ORDER_CAP}; got {m.order}"
        )
    test = _kind_predicate(m, kind)
    found = []
    for bits in range(1, 1 << m.order):
        a = CrispSubset(m.order, bits)
        if test(a):
            found.append(a)
    return found
