"""Conversions between the four presentations, with eagerly checked inputs.

The conversion graph, every edge a verified bijection on the structures that
satisfy its precondition:

    TernaryStructure  <->  PartialAlgebra        (weakly functional)
    TernaryStructure  <->  LrStructure           (coherent partial monoid)
    LrStructure       <->  SmallCategory
    LrStructure       <->  CategoricalSemigroup  (in `zero`)

All preconditions are checked, never assumed, so each converter doubles as a
diagnostic for hand-entered structures.  `verify_source_target_laws` and
`verify_partial_monoid_laws` re-check the derived laws that make the
conversions work; on valid inputs they must report all-pass, so they guard
the implementation as much as the data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import axioms
from .errors import (
    CategoryAxiomViolation,
    LrAxiomViolation,
    NotObjectFreeCategory,
    NotRelationalMonoid,
    NotWeaklyFunctional,
)
from .structures import LrStructure, PartialAlgebra, SmallCategory, TernaryStructure

# ---------------------------------------------------------------------------
# partial algebra


def to_partial_algebra(s: TernaryStructure) -> PartialAlgebra:
    witness = axioms.weak_functionality_witness(s)
    if witness is not None:
        raise NotWeaklyFunctional(witness[:2])
    table = {(l, t): r for r, l, t in s.triples}
    return PartialAlgebra.from_dict(s.size, table, axioms.unit_set(s))


def from_partial_algebra(p: PartialAlgebra) -> TernaryStructure:
    return TernaryStructure(p.size, ((v, a, b) for a, b, v in p.table))


# ---------------------------------------------------------------------------
# source and target maps


def derive_ell_r(s: TernaryStructure) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """For each x, the unique unit e with x in m(e, x), and dually.

    Existence and uniqueness hold in every relational monoid; anything else
    raises NotRelationalMonoid with the offending element.
    """
    assoc = axioms.rel_associativity_witness(s)
    if assoc is not None:
        raise NotRelationalMonoid("associativity", assoc)
    n = s.size
    masks = s.result_masks()
    left_units, right_units = axioms.unit_sets_masks(n, masks)
    all_units = left_units | right_units
    ell, rr = [], []
    for x in range(n):
        lefts = [e for e in all_units if masks[e * n + x] >> x & 1]
        rights = [e for e in all_units if masks[x * n + e] >> x & 1]
        if len(lefts) != 1 or not left_units & set(lefts):
            raise NotRelationalMonoid("unique-left-unit", (x, tuple(sorted(lefts))))
        if len(rights) != 1 or not right_units & set(rights):
            raise NotRelationalMonoid("unique-right-unit", (x, tuple(sorted(rights))))
        ell.append(lefts[0])
        rr.append(rights[0])
    return tuple(ell), tuple(rr)


@dataclass(frozen=True)
class LawReport:
    """Outcome of a family of law checks, one witness per failed law."""

    results: dict[str, tuple | None]

    @property
    def all_pass(self) -> bool:
        return all(w is None for w in self.results.values())

    def failed(self) -> dict[str, tuple]:
        return {k: w for k, w in self.results.items() if w is not None}


def verify_source_target_laws(s: TernaryStructure) -> LawReport:
    """The six derived laws tying composition to the ell/rr maps.

    All six hold in every relational monoid, so any failure on an input that
    passed the monoid check is an implementation bug; on hand-entered data
    the report localises what is broken.

      1  rr(ell x) == ell x and ell(rr x) == rr x
      2  x in m(ell x, x) and x in m(x, rr x)
      3  v in m(x, y) and w in m(x, ell y) imply ell v == ell w, and
         v in m(x, y) and w in m(rr x, y) imply rr v == rr w
      4  v in m(x, y) implies ell v == ell x and rr v == rr y
      5  D(x, y) implies m(rr x, ell y) == m(ell y, rr x)
      6  u in m(x, y) implies m(rr x, y) == m(y, rr u)
    """
    ell, rr = derive_ell_r(s)
    n = s.size
    masks = s.result_masks()
    results: dict[str, tuple | None] = {f"item-{i}": None for i in range(1, 7)}

    def record(key: str, witness: tuple) -> None:
        if results[key] is None:
            results[key] = witness

    for x in range(n):
        if rr[ell[x]] != ell[x] or ell[rr[x]] != rr[x]:
            record("item-1", (x,))
        if not masks[ell[x] * n + x] >> x & 1 or not masks[x * n + rr[x]] >> x & 1:
            record("item-2", (x,))
    for x in range(n):
        for y in range(n):
            composites = masks[x * n + y]
            for v in axioms.bits_of(composites):
                if ell[v] != ell[x] or rr[v] != rr[y]:
                    record("item-4", (v, x, y))
                for w in axioms.bits_of(masks[x * n + ell[y]]):
                    if ell[v] != ell[w]:
                        record("item-3", (v, w, x, y))
                for w in axioms.bits_of(masks[rr[x] * n + y]):
                    if rr[v] != rr[w]:
                        record("item-3", (v, w, x, y))
                if masks[rr[x] * n + y] != masks[y * n + rr[v]]:
                    record("item-6", (v, x, y))
            if composites and masks[rr[x] * n + ell[y]] != masks[ell[y] * n + rr[x]]:
                record("item-5", (x, y))
    return LawReport(results)


def coherence_equivalence(s: TernaryStructure) -> tuple[bool, bool, bool]:
    """The three faces of coherence, computed independently.

    Returns (plain coherence, unit-mediated definedness, rr x == ell y forces
    definedness).  In a relational monoid the three agree.
    """
    ell, rr = derive_ell_r(s)
    n = s.size
    masks = s.result_masks()
    plain = axioms.coherence_witness_masks(n, masks) is None
    unit_med = True
    all_units = frozenset.union(*axioms.unit_sets_masks(n, masks))
    for x in range(n):
        for y in range(n):
            for e in all_units:
                if masks[x * n + e] and masks[e * n + y] and not masks[x * n + y]:
                    unit_med = False
    matching = all(
        masks[x * n + y] != 0
        for x in range(n)
        for y in range(n)
        if rr[x] == ell[y]
    )
    return plain, unit_med, matching


def definedness_forces_matching(s: TernaryStructure) -> bool:
    """D(x, y) implies rr x == ell y; holds in every relational monoid."""
    ell, rr = derive_ell_r(s)
    return all(rr[x] == ell[y] for x, y in s.defined_pairs())


def verify_partial_monoid_laws(p: PartialAlgebra) -> LawReport:
    """The five laws that axiomatise coherent partial monoids algebraically.

    Diagnostic: runs on any PartialAlgebra.

      definedness-balance   D(x,y) and D(x*y, z)  iff  D(x, y*z) and D(y,z)
      associativity         both sides equal when the first line fires
      left-unit-existence   every x has e in E with D(e, x)
      right-unit-existence  every x has e in E with D(x, e)
      coherence             D(x,y) and D(y,z) imply D(x*y, z)
    """
    n = p.size
    d = p.compose
    results: dict[str, tuple | None] = {
        "definedness-balance": None,
        "associativity": None,
        "left-unit-existence": None,
        "right-unit-existence": None,
        "coherence": None,
    }

    def record(key: str, witness: tuple) -> None:
        if results[key] is None:
            results[key] = witness

    for x in range(n):
        for y in range(n):
            xy = d(x, y)
            for z in range(n):
                yz = d(y, z)
                lhs = xy is not None and d(xy, z) is not None
                rhs = yz is not None and d(x, yz) is not None
                if lhs != rhs:
                    record("definedness-balance", (x, y, z))
                elif lhs and d(xy, z) != d(x, yz):
                    record("associativity", (x, y, z))
                if xy is not None and yz is not None and d(xy, z) is None:
                    record("coherence", (x, y, z))
    for x in range(n):
        if not any(d(e, x) is not None for e in p.units):
            record("left-unit-existence", (x,))
        if not any(d(x, e) is not None for e in p.units):
            record("right-unit-existence", (x,))
    return LawReport(results)


# ---------------------------------------------------------------------------
# lr structures


def object_free_category_witness(s: TernaryStructure) -> tuple[str, tuple] | None:
    """First failed axiom of the coherent-partial-monoid check."""
    c = axioms.classify(s)
    order = ("associativity", "weak-functionality", "unit-coverage", "coherence")
    for name in order:
        if name in c.witnesses:
            return (name, c.witnesses[name])
    return None


def to_lr(s: TernaryStructure) -> LrStructure:
    failed = object_free_category_witness(s)
    if failed is not None:
        raise NotObjectFreeCategory(*failed)
    ell, rr = derive_ell_r(s)
    table = {(l, t): r for r, l, t in s.triples}
    return LrStructure.from_dict(s.size, ell, rr, table)


def lr_axiom_witness(lr: LrStructure) -> tuple[str, tuple] | None:
    """First violated law of the reduced axiom list, or None.

    The laws: ell/rr are mutual fixpoint maps, unit laws, composites inherit
    ell from the left and rr from the right, and composition is associative
    wherever both bracketings are defined.  Definedness matching rr x == ell y
    is structural for LrStructure values, so it is not re-checked here.
    """
    n, ell, rr = lr.size, lr.ell, lr.rr
    compose = lr.compose
    for x in range(n):
        if rr[ell[x]] != ell[x]:
            return ("target-of-source", (x,))
        if ell[rr[x]] != rr[x]:
            return ("source-of-target", (x,))
        if compose(ell[x], x) != x:
            return ("left-unit-law", (x, compose(ell[x], x)))
        if compose(x, rr[x]) != x:
            return ("right-unit-law", (x, compose(x, rr[x])))
    for x in range(n):
        for y in range(n):
            if rr[x] != ell[y]:
                continue
            xy = compose(x, y)
            if ell[xy] != ell[x]:
                return ("source-of-composite", (x, y, xy))
            if rr[xy] != rr[y]:
                return ("target-of-composite", (x, y, xy))
            for z in range(n):
                if rr[y] == ell[z] and compose(xy, z) != compose(x, compose(y, z)):
                    return ("associativity", (x, y, z))
    return None


def from_lr(lr: LrStructure) -> TernaryStructure:
    failed = lr_axiom_witness(lr)
    if failed is not None:
        raise LrAxiomViolation(*failed)
    return TernaryStructure(lr.size, ((v, a, b) for a, b, v in lr.table))


def lr_fixed_points(lr: LrStructure) -> frozenset[int]:
    """Fixed points of ell; these coincide with those of rr and serve as E."""
    return frozenset(x for x in range(lr.size) if lr.ell[x] == x)


# ---------------------------------------------------------------------------
# small categories


def to_category(lr: LrStructure) -> SmallCategory:
    failed = lr_axiom_witness(lr)
    if failed is not None:
        raise LrAxiomViolation(*failed)
    return SmallCategory(lr.size, lr_fixed_points(lr), lr.ell, lr.rr, lr.table)


def category_axiom_witness(c: SmallCategory) -> tuple[int, tuple] | None:
    """First violated standard category axiom as (axiom number, witness).

      1  dom(id A) == A == cod(id A)
      2  dom(f;g) == dom f and cod(f;g) == cod g when cod f == dom g
      3  (f;g);h == f;(g;h) when both inner pairs compose
      4  id(dom f);f == f and f;id(cod f) == f
    """
    for a in sorted(c.objects):
        if c.dom[a] != a or c.cod[a] != a:
            return (1, (a, c.dom[a], c.cod[a]))
    for f in range(c.size):
        for g in range(c.size):
            if c.cod[f] != c.dom[g]:
                continue
            fg = c.compose(f, g)
            if c.dom[fg] != c.dom[f] or c.cod[fg] != c.cod[g]:
                return (2, (f, g, fg))
            for h in range(c.size):
                if c.cod[g] == c.dom[h] and c.compose(fg, h) != c.compose(f, c.compose(g, h)):
                    return (3, (f, g, h))
    for f in range(c.size):
        if c.compose(c.dom[f], f) != f or c.compose(f, c.cod[f]) != f:
            return (4, (f,))
    return None


def from_category(c: SmallCategory) -> LrStructure:
    failed = category_axiom_witness(c)
    if failed is not None:
        raise CategoryAxiomViolation(f"axiom-{failed[0]}", failed[1])
    return LrStructure(c.size, c.dom, c.cod, c.table)


# ---------------------------------------------------------------------------
# morphisms of the algebraic presentations


def pa_morphism_witness(
    src: PartialAlgebra, dst: PartialAlgebra, f: Sequence[int]
) -> tuple | None:
    """Definedness or composition preservation failure (x, y), or None."""
    for x, y in src.defined:
        image = dst.compose(f[x], f[y])
        if image is None or image != f[src.compose(x, y)]:
            return (x, y)
    return None


def pa_bounded_morphism_witness(
    src: PartialAlgebra, dst: PartialAlgebra, f: Sequence[int]
) -> tuple | None:
    plain = pa_morphism_witness(src, dst, f)
    if plain is not None:
        return ("morphism", plain)
    for x in range(src.size):
        decompositions = {
            (f[y], f[z]) for y, z in src.defined if src.compose(y, z) == x
        }
        for u, v in dst.defined:
            if dst.compose(u, v) == f[x] and (u, v) not in decompositions:
                return (x, u, v)
    return None


def lr_map_preservation_witness(
    src: LrStructure, dst: LrStructure, f: Sequence[int]
) -> tuple | None:
    """Element where f fails to commute with ell or rr, or None."""
    for x in range(src.size):
        if f[src.ell[x]] != dst.ell[f[x]]:
            return ("ell", x)
        if f[src.rr[x]] != dst.rr[f[x]]:
            return ("rr", x)
    return None


def preserves_units(
    src: TernaryStructure, dst: TernaryStructure, f: Sequence[int]
) -> bool:
    return all(f[e] in axioms.unit_set(dst) for e in axioms.unit_set(src))
