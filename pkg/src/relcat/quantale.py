"""Powerset lifting: the complex product over subsets of the carrier.

For subsets A, B of the carrier, A * B collects every result of composing a
member of A with a member of B.  Subsets are n-bit masks; the lift keeps one
row of products per element ({y} * B for all B), so arbitrary products are
unions of rows and nothing quadratic in 4**n is ever materialised.

Desk-scale facts verified here: the singleton embedding is an isomorphism
onto the atoms (results of {y} * {z} are exactly the result sets of the base
relation), the complex product is associative exactly when the base relation
is relationally associative, and for partial monoids the singletons plus the
empty set form a subsemigroup isomorphic to the zero totalisation, with the
former units surviving as weak units.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import axioms
from .convert import from_partial_algebra
from .errors import CarrierTooLarge, NotPartialMonoid
from .structures import PartialAlgebra, TernaryStructure
from .zero import adjoin_zero

LIFT_SIZE_LIMIT = 12


@dataclass(frozen=True)
class PowersetAlgebra:
    """The complex-product algebra on all subsets of a carrier."""

    base: TernaryStructure
    rows: tuple[tuple[int, ...], ...]
    unit_mask: int

    @property
    def subset_count(self) -> int:
        return 1 << self.base.size

    def product(self, a_mask: int, b_mask: int) -> int:
        out = 0
        rows = self.rows
        while a_mask:
            low = a_mask & -a_mask
            out |= rows[low.bit_length() - 1][b_mask]
            a_mask ^= low
        return out


def lift(s: TernaryStructure) -> PowersetAlgebra:
    """Build the powerset algebra; the unit law for E is verified whenever
    the base is a relational monoid."""
    n = s.size
    if n > LIFT_SIZE_LIMIT:
        raise CarrierTooLarge(f"carrier size {n} exceeds the lift guard {LIFT_SIZE_LIMIT}")
    masks = s.result_masks()
    rows = []
    for y in range(n):
        row = [0] * (1 << n)
        for b in range(1, 1 << n):
            low = b & -b
            row[b] = row[b ^ low] | masks[y * n + (low.bit_length() - 1)]
        rows.append(tuple(row))
    left, right = axioms.unit_sets_masks(n, masks)
    unit_mask = 0
    for e in left | right:
        unit_mask |= 1 << e
    algebra = PowersetAlgebra(s, tuple(rows), unit_mask)
    if axioms.classify_masks(n, masks).relational_monoid:
        for a in range(1 << n):
            if algebra.product(unit_mask, a) != a or algebra.product(a, unit_mask) != a:
                from .errors import InvariantViolation

                raise InvariantViolation(f"unit set fails the monoid laws at subset {a:b}")
    return algebra


def check_eta_iso(s: TernaryStructure) -> bool:
    """The singleton embedding reflects and preserves the relation.

    Checks x in results(y, z) iff {x} is contained in {y} * {z}, and that the
    ternary relation read off the atoms of the lift equals the base.
    """
    algebra = lift(s)
    n = s.size
    masks = s.result_masks()
    for y in range(n):
        for z in range(n):
            if algebra.product(1 << y, 1 << z) != masks[y * n + z]:
                return False
    recovered = TernaryStructure.from_masks(
        n, [algebra.product(1 << y, 1 << z) for y in range(n) for z in range(n)]
    )
    return recovered == s


def complex_product_associative(algebra: PowersetAlgebra) -> bool:
    count = algebra.subset_count
    product = algebra.product
    for a in range(count):
        for b in range(count):
            ab = product(a, b)
            for c in range(count):
                if product(ab, c) != product(a, product(b, c)):
                    return False
    return True


def associativity_transfers(s: TernaryStructure) -> tuple[bool, bool]:
    """(base relationally associative, complex product associative).

    The two always agree; returning both keeps the comparison visible."""
    base = axioms.is_rel_associative(s)
    lifted = complex_product_associative(lift(s))
    return base, lifted


def distributes_over_union(algebra: PowersetAlgebra) -> bool:
    """Binary-union distributivity in both arguments; with monotonicity this
    pins down the quantale laws at finite scale."""
    count = algebra.subset_count
    product = algebra.product
    for a in range(count):
        for b in range(count):
            pab = product(a, b)
            for c in range(count):
                if product(a | c, b) != pab | product(c, b):
                    return False
                if product(a, b | c) != pab | product(a, c):
                    return False
    return True


@dataclass(frozen=True)
class ZeroSubsemigroupReport:
    """Outcome of the singleton-plus-empty-set comparison for a partial monoid."""

    singleton_products_match: bool
    closed_under_product: bool
    eta_zero_isomorphism: bool
    units_weak_in_image: bool

    @property
    def all_pass(self) -> bool:
        return (
            self.singleton_products_match
            and self.closed_under_product
            and self.eta_zero_isomorphism
            and self.units_weak_in_image
        )


def check_zero_subsemigroup(p: PartialAlgebra) -> ZeroSubsemigroupReport:
    """Compare the zero totalisation of a partial monoid with the singletons
    inside its powerset lift, the empty set playing the zero."""
    s = from_partial_algebra(p)
    c = axioms.classify(s)
    if not c.partial_monoid:
        raise NotPartialMonoid("partial-monoid", dict(c.witnesses))
    algebra = lift(s)
    n = s.size

    singleton_products = all(
        algebra.product(1 << x, 1 << y) == 1 << p.compose(x, y)
        for x, y in p.defined
    )

    members = [1 << x for x in range(n)] + [0]
    closed = all(
        algebra.product(a, b) in members for a in members for b in members
    )

    zeroed = adjoin_zero(s)
    zero = zeroed.zero
    ztable = zeroed.structure.result_masks()

    def eta0(x: int) -> int:
        return 0 if x == zero else 1 << x

    iso = len({eta0(x) for x in range(zeroed.size)}) == zeroed.size
    for x in range(zeroed.size):
        for y in range(zeroed.size):
            composite = ztable[x * zeroed.size + y].bit_length() - 1
            if algebra.product(eta0(x), eta0(y)) != eta0(composite):
                iso = False

    units_weak = True
    for e in axioms.bits_of(algebra.unit_mask):
        image = 1 << e
        if not any(algebra.product(image, a) == a for a in members if a):
            units_weak = False
        for a in members:
            if algebra.product(image, a) not in (a, 0):
                units_weak = False

    return ZeroSubsemigroupReport(
        singleton_products_match=singleton_products,
        closed_under_product=closed,
        eta_zero_isomorphism=iso,
        units_weak_in_image=units_weak,
    )
