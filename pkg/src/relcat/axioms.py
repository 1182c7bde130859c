"""Decidable composition laws on finite ternary structures.

Every check comes in two layers.  The mask layer works on the raw encoding
(carrier size n plus a list of n*n result bitmasks, pair index y*n + z) and
is what the enumerator and the verification sweeps call in bulk.  The public
layer takes a TernaryStructure, delegates to the mask layer and is the API
meant for humans.  Checks that can fail return a concrete witness (or None),
and `is_*` wrappers reduce that to a boolean.

The laws, with m(y, z) the result set of the pair (y, z):

  weakly functional   |m(y, z)| <= 1 everywhere; functional: exactly 1
  associative         x * (y * z) == (x * y) * z for the complex extension
                      of m to sets; witness (u, x, y, z) has u on exactly
                      one side
  coherent            v in m(x, y) and m(y, z) nonempty imply m(v, z)
                      nonempty; witness (v, y, z)
  left unit e         some m(e, x) contains x, and m(e, x) never contains
                      anything but x; right units dually

A structure is classified as a relational monoid when it is associative and
every x admits a left unit e with x in m(e, x) and a right unit e' with x in
m(x, e').  The definition quantifies units over the whole unit set E; this
implementation requires the left witness to be a left unit and the right
witness to be a right unit, the reading under which every element has exactly
one composing unit per side (checked exhaustively in the test suite).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import InvalidStructure
from .structures import TernaryStructure

# ---------------------------------------------------------------------------
# mask-level kernels


def bits_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def weak_functionality_witness_masks(n: int, masks: Sequence[int]) -> tuple | None:
    for p, mask in enumerate(masks):
        if mask & (mask - 1):
            results = bits_of(mask)
            y, z = divmod(p, n)
            return (y, z, results[0], results[1])
    return None


def functionality_witness_masks(n: int, masks: Sequence[int]) -> tuple | None:
    for p, mask in enumerate(masks):
        if mask == 0 or mask & (mask - 1):
            y, z = divmod(p, n)
            return (y, z, tuple(bits_of(mask)))
    return None


def assoc_witness_masks(n: int, masks: Sequence[int]) -> tuple | None:
    """Witness (u, x, y, z) against relational associativity, or None."""
    for x in range(n):
        row = x * n
        for y in range(n):
            a = masks[row + y]
            for z in range(n):
                lhs = 0
                for v in bits_of(masks[y * n + z]):
                    lhs |= masks[row + v]
                rhs = 0
                for w in bits_of(a):
                    rhs |= masks[w * n + z]
                if lhs != rhs:
                    u = bits_of(lhs ^ rhs)[0]
                    return (u, x, y, z)
    return None


def coherence_witness_masks(n: int, masks: Sequence[int]) -> tuple | None:
    """Witness (v, y, z) with v a composite of (x, y), D(y, z) and not D(v, z)."""
    for x in range(n):
        for y in range(n):
            composites = masks[x * n + y]
            if not composites:
                continue
            for z in range(n):
                if not masks[y * n + z]:
                    continue
                for v in bits_of(composites):
                    if not masks[v * n + z]:
                        return (v, y, z)
    return None


def unit_sets_masks(n: int, masks: Sequence[int]) -> tuple[frozenset[int], frozenset[int]]:
    left, right = set(), set()
    for e in range(n):
        row = e * n
        if all(masks[row + x] | (1 << x) == 1 << x for x in range(n)) and any(
            masks[row + x] for x in range(n)
        ):
            left.add(e)
        if all(masks[x * n + e] | (1 << x) == 1 << x for x in range(n)) and any(
            masks[x * n + e] for x in range(n)
        ):
            right.add(e)
    return frozenset(left), frozenset(right)


def unit_coverage_witness_masks(n: int, masks: Sequence[int]) -> tuple | None:
    """Element missing a composing left or right unit, as ('left'|'right', x)."""
    left, right = unit_sets_masks(n, masks)
    for x in range(n):
        if not any(masks[e * n + x] >> x & 1 for e in left):
            return ("left", x)
        if not any(masks[x * n + e] >> x & 1 for e in right):
            return ("right", x)
    return None


# ---------------------------------------------------------------------------
# public checks on TernaryStructure


def weak_functionality_witness(s: TernaryStructure) -> tuple | None:
    return weak_functionality_witness_masks(s.size, s.result_masks())


def is_weakly_functional(s: TernaryStructure) -> bool:
    return weak_functionality_witness(s) is None


def functionality_witness(s: TernaryStructure) -> tuple | None:
    return functionality_witness_masks(s.size, s.result_masks())


def is_functional(s: TernaryStructure) -> bool:
    return functionality_witness(s) is None


def rel_associativity_witness(s: TernaryStructure) -> tuple | None:
    return assoc_witness_masks(s.size, s.result_masks())


def is_rel_associative(s: TernaryStructure) -> bool:
    return rel_associativity_witness(s) is None


def coherence_witness(s: TernaryStructure) -> tuple | None:
    return coherence_witness_masks(s.size, s.result_masks())


def is_coherent(s: TernaryStructure) -> bool:
    return coherence_witness(s) is None


def units(s: TernaryStructure) -> tuple[frozenset[int], frozenset[int]]:
    """(left units, right units); the unit set E is their union."""
    return unit_sets_masks(s.size, s.result_masks())


def unit_set(s: TernaryStructure) -> frozenset[int]:
    left, right = units(s)
    return left | right


def derive_defined(s: TernaryStructure) -> frozenset[tuple[int, int]]:
    """Definedness relation recomputed from the triples."""
    return s.defined_pairs()


# ---------------------------------------------------------------------------
# weak units


def weak_unit_sets(
    s: TernaryStructure, zero: int | None = None
) -> tuple[frozenset[int], frozenset[int]]:
    """Weak left and right units.

    Without a designated zero, e is a weak left unit when some m(e, x)
    contains x and, for every x, either x in m(e, x) or the pair (e, x) is
    undefined.  With a designated zero (a structure where failed compositions
    land on `zero` instead of being undefined), the escape clause becomes
    "the composition collapses to zero", i.e. zero in m(e, x); candidates
    then range over the non-zero carrier only, since the adjoined element is
    bookkeeping for undefinedness rather than a candidate unit.
    """
    n = s.size
    masks = s.result_masks()
    candidates = range(n) if zero is None else [e for e in range(n) if e != zero]

    def escapes(mask: int) -> bool:
        if zero is None:
            return mask == 0
        return mask >> zero & 1 == 1

    left, right = set(), set()
    for e in candidates:
        row = e * n
        if any(masks[row + x] >> x & 1 for x in range(n)) and all(
            masks[row + x] >> x & 1 or escapes(masks[row + x]) for x in range(n)
        ):
            left.add(e)
        if any(masks[x * n + e] >> x & 1 for x in range(n)) and all(
            masks[x * n + e] >> x & 1 or escapes(masks[x * n + e]) for x in range(n)
        ):
            right.add(e)
    return frozenset(left), frozenset(right)


# ---------------------------------------------------------------------------
# classification


_AXIOM_CHECKS = (
    ("associativity", assoc_witness_masks),
    ("weak-functionality", weak_functionality_witness_masks),
    ("functionality", functionality_witness_masks),
    ("coherence", coherence_witness_masks),
    ("unit-coverage", unit_coverage_witness_masks),
)


@dataclass(frozen=True)
class Classification:
    """Axiom flags plus witnesses for each failed axiom.

    Class memberships are derived properties of the flags; `total` means the
    composition is an everywhere-defined operation.
    """

    associative: bool
    weakly_functional: bool
    functional: bool
    coherent: bool
    unital: bool
    witnesses: Mapping[str, tuple] = field(default_factory=dict)

    @property
    def relational_semigroup(self) -> bool:
        return self.associative

    @property
    def partial_semigroup(self) -> bool:
        return self.associative and self.weakly_functional

    @property
    def relational_monoid(self) -> bool:
        return self.associative and self.unital

    @property
    def coherent_relational_monoid(self) -> bool:
        return self.relational_monoid and self.coherent

    @property
    def partial_monoid(self) -> bool:
        return self.relational_monoid and self.weakly_functional

    @property
    def object_free_category(self) -> bool:
        return self.partial_monoid and self.coherent

    @property
    def total(self) -> bool:
        return self.functional

    def as_dict(self) -> dict[str, bool]:
        return {
            "relational-semigroup": self.relational_semigroup,
            "relational-monoid": self.relational_monoid,
            "coherent-relational-monoid": self.coherent_relational_monoid,
            "partial-semigroup": self.partial_semigroup,
            "partial-monoid": self.partial_monoid,
            "object-free-category": self.object_free_category,
            "total": self.total,
            "coherent": self.coherent,
            "weakly-functional": self.weakly_functional,
        }


def classify_masks(n: int, masks: Sequence[int]) -> Classification:
    found = {}
    for name, check in _AXIOM_CHECKS:
        witness = check(n, masks)
        if witness is not None:
            found[name] = witness
    return Classification(
        associative="associativity" not in found,
        weakly_functional="weak-functionality" not in found,
        functional="functionality" not in found,
        coherent="coherence" not in found,
        unital="unit-coverage" not in found,
        witnesses=found,
    )


def classify(s: TernaryStructure) -> Classification:
    return classify_masks(s.size, s.result_masks())


# ---------------------------------------------------------------------------
# morphisms


def _validate_map(src: TernaryStructure, dst: TernaryStructure, f: Sequence[int]) -> list[int]:
    f = list(f)
    if len(f) != src.size:
        raise InvalidStructure(f"map has {len(f)} entries for a carrier of size {src.size}")
    for v in f:
        if not 0 <= v < dst.size:
            raise InvalidStructure(f"map value {v} outside target carrier of size {dst.size}")
    return f


def morphism_witness(
    src: TernaryStructure, dst: TernaryStructure, f: Sequence[int]
) -> tuple | None:
    """Source triple whose image is missing in the target, or None."""
    f = _validate_map(src, dst, f)
    for r, l, t in src.triples:
        if (f[r], f[l], f[t]) not in dst.triples:
            return (r, l, t)
    return None


def check_morphism(src: TernaryStructure, dst: TernaryStructure, f: Sequence[int]) -> bool:
    return morphism_witness(src, dst, f) is None


def bounded_morphism_witness(
    src: TernaryStructure, dst: TernaryStructure, f: Sequence[int]
) -> tuple | None:
    """Boundedness failure (x, v, w): (f x, v, w) holds in the target but no
    source triple (x, y, z) has f y == v and f z == w.  A plain morphism
    failure is reported first as ('morphism', triple)."""
    f = _validate_map(src, dst, f)
    plain = morphism_witness(src, dst, f)
    if plain is not None:
        return ("morphism", plain)
    by_result: dict[int, list[tuple[int, int]]] = {}
    for r, l, t in dst.triples:
        by_result.setdefault(r, []).append((l, t))
    for x in range(src.size):
        preimages = {(f[y], f[z]) for r, y, z in src.triples if r == x}
        for v, w in by_result.get(f[x], ()):
            if (v, w) not in preimages:
                return (x, v, w)
    return None


def check_bounded_morphism(
    src: TernaryStructure, dst: TernaryStructure, f: Sequence[int]
) -> bool:
    return bounded_morphism_witness(src, dst, f) is None


def compose_maps(f: Sequence[int], g: Sequence[int]) -> tuple[int, ...]:
    """First f, then g."""
    return tuple(g[v] for v in f)
