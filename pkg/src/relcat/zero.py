"""Adjoining an absorbing zero and the total ell/rr picture.

`adjoin_zero` grows the carrier by one element, placed at the highest index
so that base-element indices stay stable, and maps every previously
undefined pair to it.  The result is total, and on weakly functional input
it stays associative; genuinely multi-valued structures can lose
associativity in the process (see the verification suite), which is why the
embedding facts below are stated for partial monoids and object-free
categories.

After adjunction plain units generally disappear (a unit of the base cannot
absorb the new zero rows) but survive as weak units; `unit_collapse_demo`
packages that narrative as checkable facts.  `to_categorical_semigroup` and
`from_categorical_semigroup` relate the zero-totalised picture to
LrStructures, where nothing collapses because the source and target maps
keep the units apart.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import axioms
from .errors import (
    CategoricalSemigroupAxiomViolation,
    InvalidStructure,
    InvariantViolation,
    LrAxiomViolation,
    NotRelationalMonoid,
    NotWeakCoherentPartialMonoid,
)
from .convert import lr_axiom_witness
from .structures import CategoricalSemigroup, LrStructure, TernaryStructure


@dataclass(frozen=True)
class ZeroedStructure:
    """A ternary structure with a designated absorbing zero at the top index.

    Construction checks the zero laws: (0, 0, x) and (0, x, 0) for every x,
    and a total definedness relation.
    """

    structure: TernaryStructure
    zero: int

    def __post_init__(self):
        s, zero = self.structure, self.zero
        if s.size < 1 or zero != s.size - 1:
            raise InvalidStructure("the zero element must sit at the top index")
        for x in range(s.size):
            if (zero, zero, x) not in s.triples or (zero, x, zero) not in s.triples:
                raise InvalidStructure(f"zero laws fail at element {x}")
        if len(s.defined_pairs()) != s.size * s.size:
            raise InvalidStructure("definedness must be total once a zero is adjoined")

    @property
    def size(self) -> int:
        return self.structure.size

    def weak_units(self) -> tuple[frozenset[int], frozenset[int]]:
        return axioms.weak_unit_sets(self.structure, zero=self.zero)


def adjoin_zero_masks(n: int, masks: list[int]) -> list[int]:
    """Mask-level zero adjunction: undefined pairs map to the new element n."""
    n0 = n + 1
    zbit = 1 << n
    out = [0] * (n0 * n0)
    for y in range(n):
        for z in range(n):
            mask = masks[y * n + z]
            out[y * n0 + z] = mask if mask else zbit
    for x in range(n0):
        out[n * n0 + x] = zbit
        out[x * n0 + n] = zbit
    return out


def adjoin_zero(s: TernaryStructure) -> ZeroedStructure:
    extended = TernaryStructure.from_masks(s.size + 1, adjoin_zero_masks(s.size, s.result_masks()))
    return ZeroedStructure(extended, s.size)


def is_weak_rel_monoid_with_zero(z: ZeroedStructure) -> bool:
    """Associative, and every x composes with a weak unit on each side."""
    if not axioms.is_rel_associative(z.structure):
        return False
    return _weak_unit_coverage_witness(z) is None


def _weak_unit_coverage_witness(z: ZeroedStructure) -> tuple | None:
    n = z.size
    masks = z.structure.result_masks()
    weak_left, weak_right = z.weak_units()
    for x in range(n):
        if not any(masks[e * n + x] >> x & 1 for e in weak_left):
            return ("left", x)
        if not any(masks[x * n + e] >> x & 1 for e in weak_right):
            return ("right", x)
    return None


def _genuine_masks(z: ZeroedStructure) -> list[int]:
    """Result masks with the zero column and row removed and 0-results erased.

    A result of zero records "this composition fails", so the genuine content
    of a zeroed structure is what survives this restriction.
    """
    n0 = z.size
    n = n0 - 1
    masks = z.structure.result_masks()
    keep = (1 << n) - 1
    return [masks[y * n0 + t] & keep for y in range(n) for t in range(n)]


def coherence_with_zero_witness(z: ZeroedStructure) -> tuple | None:
    """Coherence read through the zero: collapsing to zero marks a pair as
    undefined.  Plain coherence is vacuous on a zeroed structure because the
    definedness relation is total, so this is the reading under which the
    check carries information."""
    return axioms.coherence_witness_masks(z.size - 1, _genuine_masks(z))


def weak_object_free_category_witness(z: ZeroedStructure) -> tuple[str, tuple] | None:
    """Weak-monoid coverage plus weak functionality and zero-aware coherence."""
    masks = z.structure.result_masks()
    witness = axioms.assoc_witness_masks(z.size, masks)
    if witness is not None:
        return ("associativity", witness)
    witness = _weak_unit_coverage_witness(z)
    if witness is not None:
        return ("weak-unit-coverage", witness)
    witness = axioms.weak_functionality_witness_masks(z.size, masks)
    if witness is not None:
        return ("weak-functionality", witness)
    witness = coherence_with_zero_witness(z)
    if witness is not None:
        return ("coherence", witness)
    return None


def extract_subalgebra(z: ZeroedStructure) -> TernaryStructure:
    """Drop the zero and every triple that mentions it.

    Requires a weak coherent partial monoid with zero; the result is then an
    object-free category whose units are the weak units of the input (checked,
    a failure would be a library bug rather than bad data).
    """
    failed = weak_object_free_category_witness(z)
    if failed is not None:
        raise NotWeakCoherentPartialMonoid(*failed)
    zero = z.zero
    extracted = TernaryStructure(
        z.size - 1,
        ((r, l, t) for r, l, t in z.structure.triples if zero not in (r, l, t)),
    )
    c = axioms.classify(extracted)
    if not c.object_free_category:
        raise InvariantViolation(
            f"extracted structure is not an object-free category: {dict(c.witnesses)!r}"
        )
    return extracted


# ---------------------------------------------------------------------------
# categorical semigroups


def to_categorical_semigroup(lr: LrStructure) -> CategoricalSemigroup:
    """Totalise by sending every non-matching pair to a fresh zero."""
    failed = lr_axiom_witness(lr)
    if failed is not None:
        raise LrAxiomViolation(*failed)
    n = lr.size
    zero = n
    rows = []
    for x in range(n):
        row = []
        for y in range(n):
            value = lr.compose(x, y)
            row.append(zero if value is None else value)
        row.append(zero)
        rows.append(tuple(row))
    rows.append(tuple([zero] * (n + 1)))
    semigroup = CategoricalSemigroup(
        n + 1, zero, lr.ell + (zero,), lr.rr + (zero,), tuple(rows)
    )
    # CategoricalSemigroup construction re-checks every law; reaching this
    # point means the totalisation is sound.
    return semigroup


def from_categorical_semigroup(cs: CategoricalSemigroup) -> LrStructure:
    """Drop the zero; composition survives exactly on matching pairs."""
    failed = cs.axiom_witness()
    if failed is not None:
        raise CategoricalSemigroupAxiomViolation(*failed)
    keep = [x for x in range(cs.size) if x != cs.zero]
    index = {x: i for i, x in enumerate(keep)}
    ell = tuple(index[cs.ell[x]] for x in keep)
    rr = tuple(index[cs.rr[x]] for x in keep)
    table = {}
    for x in keep:
        for y in keep:
            if cs.rr[x] == cs.ell[y]:
                table[(index[x], index[y])] = index[cs.rows[x][y]]
    lr = LrStructure.from_dict(len(keep), ell, rr, table)
    failed_lr = lr_axiom_witness(lr)
    if failed_lr is not None:
        raise InvariantViolation(
            f"zero removal broke the source/target laws: {failed_lr!r}"
        )
    return lr


# ---------------------------------------------------------------------------
# the collapse narrative


@dataclass(frozen=True)
class UnitCollapseReport:
    """What zero adjunction does to the units of a relational monoid."""

    units_before: frozenset[int]
    units_after: frozenset[int]
    weak_units_after: frozenset[int]
    defined_total_after: bool
    units_survive_weakly: bool

    @property
    def collapsed(self) -> bool:
        return not self.units_after


def unit_collapse_demo(s: TernaryStructure) -> UnitCollapseReport:
    """Adjoin a zero to a relational monoid and report the unit bookkeeping.

    With two or more units the plain unit set empties out while every former
    unit survives as a weak unit; with a single unit of a total monoid
    nothing forces the collapse and the unit can survive outright.
    """
    c = axioms.classify(s)
    if not c.relational_monoid:
        raise NotRelationalMonoid("relational-monoid", dict(c.witnesses))
    before = axioms.unit_set(s)
    zeroed = adjoin_zero(s)
    left_after, right_after = axioms.units(zeroed.structure)
    weak_left, weak_right = zeroed.weak_units()
    weak = weak_left | weak_right
    return UnitCollapseReport(
        units_before=before,
        units_after=left_after | right_after,
        weak_units_after=weak,
        defined_total_after=len(zeroed.structure.defined_pairs()) == zeroed.size ** 2,
        units_survive_weakly=before <= weak,
    )
