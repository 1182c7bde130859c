"""Finite carriers for multi-valued, partial and total composition.

The universal raw object is TernaryStructure: a carrier {0..size-1} together
with a set of triples (result, left, right).  A triple (x, y, z) says "x is a
result of composing y then z".  The component order is fixed project-wide:
result first, then the two operands.  Everything else in this package is a
view of that data:

  PartialAlgebra        weakly functional structures as a partial operation
                        table with an explicit definedness set and unit set
  LrStructure           partial composition steered by total source (ell) and
                        target (rr) maps, defined exactly when rr x == ell y
  SmallCategory         objects, morphisms, dom/cod/id and a composition
                        table in diagrammatic order (f then g needs
                        cod f == dom g)
  CategoricalSemigroup  the total picture: a semigroup with an absorbing
                        zero and total ell/rr maps

Object identifiers in SmallCategory are the indices of the corresponding
identity morphisms, so converting between categories and LrStructures is a
strict inverse pair rather than inverse-up-to-renaming.

Construction validates structure (index bounds, exact definedness domains);
whether a structure satisfies composition laws is decided by the checkers in
`axioms`, `convert` and `zero`.  CategoricalSemigroup is the one exception:
its defining laws are equational over a total table, so they are enforced on
every construction, including deserialisation.

All types are frozen and hashable; derived data such as the definedness
relation is recomputed from the triples on demand and never stored, so it
cannot drift.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import CategoricalSemigroupAxiomViolation, InvalidStructure

Triple = tuple[int, int, int]
Pair = tuple[int, int]


def _check_index(value: int, size: int, what: str) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value < size:
        raise InvalidStructure(f"{what} {value!r} outside carrier of size {size}")


@dataclass(frozen=True)
class TernaryStructure:
    """A carrier {0..size-1} with a set of (result, left, right) triples."""

    size: int
    triples: frozenset[Triple]

    def __init__(self, size: int, triples: Iterable[Triple]):
        if not isinstance(size, int) or size < 0:
            raise InvalidStructure(f"carrier size must be a natural number, got {size!r}")
        normalized = frozenset((int(r), int(l), int(t)) for r, l, t in triples)
        for r, l, t in normalized:
            _check_index(r, size, "triple result")
            _check_index(l, size, "triple left operand")
            _check_index(t, size, "triple right operand")
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "triples", normalized)

    @classmethod
    def from_masks(cls, size: int, masks: Iterable[int]) -> "TernaryStructure":
        """Build from n*n result masks indexed pair (y, z) -> y*size + z."""
        masks = list(masks)
        if len(masks) != size * size:
            raise InvalidStructure(f"expected {size * size} result masks, got {len(masks)}")
        triples = []
        for p, mask in enumerate(masks):
            y, z = divmod(p, size)
            while mask:
                low = mask & -mask
                triples.append((low.bit_length() - 1, y, z))
                mask ^= low
        return cls(size, triples)

    @classmethod
    def from_bits(cls, size: int, bits: int) -> "TernaryStructure":
        """Build from the dense bit encoding, bit index result*n*n + left*n + right."""
        triples = []
        while bits:
            low = bits & -bits
            index = low.bit_length() - 1
            r, rest = divmod(index, size * size)
            l, t = divmod(rest, size)
            triples.append((r, l, t))
            bits ^= low
        return cls(size, triples)

    def to_bits(self) -> int:
        n = self.size
        bits = 0
        for r, l, t in self.triples:
            bits |= 1 << (r * n * n + l * n + t)
        return bits

    def result_masks(self) -> list[int]:
        """Result set of every operand pair as a bitmask, pair index y*size + z."""
        n = self.size
        masks = [0] * (n * n)
        for r, l, t in self.triples:
            masks[l * n + t] |= 1 << r
        return masks

    def results(self, left: int, right: int) -> frozenset[int]:
        return frozenset(r for r, l, t in self.triples if l == left and t == right)

    def defined_pairs(self) -> frozenset[Pair]:
        """The definedness relation D: pairs with at least one result."""
        return frozenset((l, t) for _, l, t in self.triples)

    def is_defined(self, left: int, right: int) -> bool:
        return any(l == left and t == right for _, l, t in self.triples)

    def relabel(self, perm: Iterable[int]) -> "TernaryStructure":
        """Apply a carrier permutation, element i becoming perm[i]."""
        p = list(perm)
        if sorted(p) != list(range(self.size)):
            raise InvalidStructure(f"not a permutation of 0..{self.size - 1}: {p!r}")
        return TernaryStructure(self.size, ((p[r], p[l], p[t]) for r, l, t in self.triples))

    def sorted_triples(self) -> list[Triple]:
        return sorted(self.triples)


@dataclass(frozen=True)
class PartialAlgebra:
    """A partial composition table with definedness set and unit set.

    `table` holds (left, right, value) rows sorted lexicographically and is
    defined exactly on `defined`.
    """

    size: int
    defined: frozenset[Pair]
    table: tuple[tuple[int, int, int], ...]
    units: frozenset[int]

    def __init__(self, size, defined, table, units):
        if not isinstance(size, int) or size < 0:
            raise InvalidStructure(f"carrier size must be a natural number, got {size!r}")
        defined = frozenset((int(a), int(b)) for a, b in defined)
        rows = tuple(sorted((int(a), int(b), int(v)) for a, b, v in table))
        units = frozenset(int(u) for u in units)
        for a, b in defined:
            _check_index(a, size, "defined pair left")
            _check_index(b, size, "defined pair right")
        seen = set()
        for a, b, v in rows:
            _check_index(v, size, "table value")
            if (a, b) in seen:
                raise InvalidStructure(f"duplicate table entry for pair ({a}, {b})")
            seen.add((a, b))
        if seen != set(defined):
            raise InvalidStructure("table domain differs from the definedness set")
        for u in units:
            _check_index(u, size, "unit")
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "defined", defined)
        object.__setattr__(self, "table", rows)
        object.__setattr__(self, "units", units)
        object.__setattr__(self, "_map", {(a, b): v for a, b, v in rows})

    @classmethod
    def from_dict(cls, size, mapping, units) -> "PartialAlgebra":
        rows = tuple((a, b, v) for (a, b), v in mapping.items())
        return cls(size, set(mapping), rows, units)

    def compose(self, left: int, right: int) -> int | None:
        return self._map.get((left, right))

    def table_dict(self) -> dict[Pair, int]:
        return dict(self._map)


@dataclass(frozen=True)
class LrStructure:
    """Partial composition with total source/target maps.

    The table is defined exactly on {(x, y) | rr[x] == ell[y]}; definedness is
    a consequence of the maps and is never stored separately.
    """

    size: int
    ell: tuple[int, ...]
    rr: tuple[int, ...]
    table: tuple[tuple[int, int, int], ...]

    def __init__(self, size, ell, rr, table):
        if not isinstance(size, int) or size < 0:
            raise InvalidStructure(f"carrier size must be a natural number, got {size!r}")
        ell = tuple(int(v) for v in ell)
        rr = tuple(int(v) for v in rr)
        rows = tuple(sorted((int(a), int(b), int(v)) for a, b, v in table))
        if len(ell) != size or len(rr) != size:
            raise InvalidStructure("ell and rr must be total maps on the carrier")
        for v in ell:
            _check_index(v, size, "ell value")
        for v in rr:
            _check_index(v, size, "rr value")
        expected = {(x, y) for x in range(size) for y in range(size) if rr[x] == ell[y]}
        seen = set()
        for a, b, v in rows:
            _check_index(v, size, "table value")
            if (a, b) in seen:
                raise InvalidStructure(f"duplicate table entry for pair ({a}, {b})")
            seen.add((a, b))
        if seen != expected:
            missing = expected - seen
            extra = seen - expected
            raise InvalidStructure(
                "table domain must be exactly the pairs with rr x == ell y"
                f" (missing {sorted(missing)}, extra {sorted(extra)})"
            )
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "ell", ell)
        object.__setattr__(self, "rr", rr)
        object.__setattr__(self, "table", rows)
        object.__setattr__(self, "_map", {(a, b): v for a, b, v in rows})

    @classmethod
    def from_dict(cls, size, ell, rr, mapping) -> "LrStructure":
        rows = tuple((a, b, v) for (a, b), v in mapping.items())
        return cls(size, ell, rr, rows)

    def compose(self, left: int, right: int) -> int | None:
        return self._map.get((left, right))

    def is_defined(self, left: int, right: int) -> bool:
        return self.rr[left] == self.ell[right]

    def table_dict(self) -> dict[Pair, int]:
        return dict(self._map)


@dataclass(frozen=True)
class SmallCategory:
    """Objects, morphisms, dom/cod and a composition table.

    Morphisms are {0..size-1}.  An object is identified with its identity
    morphism, so `objects` is a subset of the morphisms and the id map is the
    inclusion.  Composition is diagrammatic: (f, g) is composable exactly when
    cod f == dom g, and the table rows are (f, g, f-then-g).
    """

    size: int
    objects: frozenset[int]
    dom: tuple[int, ...]
    cod: tuple[int, ...]
    table: tuple[tuple[int, int, int], ...]

    def __init__(self, size, objects, dom, cod, table):
        if not isinstance(size, int) or size < 0:
            raise InvalidStructure(f"morphism count must be a natural number, got {size!r}")
        objects = frozenset(int(a) for a in objects)
        dom = tuple(int(v) for v in dom)
        cod = tuple(int(v) for v in cod)
        rows = tuple(sorted((int(a), int(b), int(v)) for a, b, v in table))
        for a in objects:
            _check_index(a, size, "object")
        if len(dom) != size or len(cod) != size:
            raise InvalidStructure("dom and cod must be total maps on the morphisms")
        for v in dom:
            if v not in objects:
                raise InvalidStructure(f"dom value {v} is not an object")
        for v in cod:
            if v not in objects:
                raise InvalidStructure(f"cod value {v} is not an object")
        expected = {(f, g) for f in range(size) for g in range(size) if cod[f] == dom[g]}
        seen = set()
        for a, b, v in rows:
            _check_index(v, size, "composite")
            if (a, b) in seen:
                raise InvalidStructure(f"duplicate table entry for pair ({a}, {b})")
            seen.add((a, b))
        if seen != expected:
            raise InvalidStructure("composition table domain must be exactly cod f == dom g")
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "objects", objects)
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)
        object.__setattr__(self, "table", rows)
        object.__setattr__(self, "_map", {(a, b): v for a, b, v in rows})

    def identity(self, obj: int) -> int:
        """Objects are their own identity morphisms."""
        if obj not in self.objects:
            raise InvalidStructure(f"{obj} is not an object")
        return obj

    def compose(self, f: int, g: int) -> int | None:
        return self._map.get((f, g))

    def table_dict(self) -> dict[Pair, int]:
        return dict(self._map)


@dataclass(frozen=True)
class CategoricalSemigroup:
    """A total semigroup with absorbing zero and total ell/rr maps.

    The defining laws are enforced on construction:

      total associativity,
      rr 0 == 0,
      x * y != 0  iff  x != 0 and y != 0 and rr x == ell y,
      rr(ell x) == ell x and ell(rr x) == rr x,
      (ell x) * x == x and x * (rr x) == x.
    """

    size: int
    zero: int
    ell: tuple[int, ...]
    rr: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    def __init__(self, size, zero, ell, rr, rows):
        if not isinstance(size, int) or size < 1:
            raise InvalidStructure("a categorical semigroup needs at least the zero element")
        zero = int(zero)
        ell = tuple(int(v) for v in ell)
        rr = tuple(int(v) for v in rr)
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        _check_index(zero, size, "zero")
        if len(ell) != size or len(rr) != size:
            raise InvalidStructure("ell and rr must be total maps")
        for v in ell + rr:
            _check_index(v, size, "ell/rr value")
        if len(rows) != size or any(len(row) != size for row in rows):
            raise InvalidStructure("composition table must be a total size x size grid")
        for row in rows:
            for v in row:
                _check_index(v, size, "table value")
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "zero", zero)
        object.__setattr__(self, "ell", ell)
        object.__setattr__(self, "rr", rr)
        object.__setattr__(self, "rows", rows)
        law = self.axiom_witness()
        if law is not None:
            raise CategoricalSemigroupAxiomViolation(law[0], law[1])

    def compose(self, x: int, y: int) -> int:
        return self.rows[x][y]

    def axiom_witness(self) -> tuple[str, tuple] | None:
        """First violated defining law with a witness, or None."""
        n, zero, ell, rr, rows = self.size, self.zero, self.ell, self.rr, self.rows
        if rr[zero] != zero:
            return ("zero-target", (zero, rr[zero]))
        for x in range(n):
            for y in range(n):
                nonzero = rows[x][y] != zero
                should = x != zero and y != zero and rr[x] == ell[y]
                if nonzero != should:
                    return ("nonzero-product", (x, y, rows[x][y]))
        for x in range(n):
            if rr[ell[x]] != ell[x]:
                return ("target-of-source", (x,))
            if ell[rr[x]] != rr[x]:
                return ("source-of-target", (x,))
            if rows[ell[x]][x] != x:
                return ("left-unit-law", (x, rows[ell[x]][x]))
            if rows[x][rr[x]] != x:
                return ("right-unit-law", (x, rows[x][rr[x]]))
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if rows[rows[x][y]][z] != rows[x][rows[y][z]]:
                        return ("associativity", (x, y, z))
        return None


def all_maps(src_size: int, dst_size: int) -> Iterator[tuple[int, ...]]:
    """Every total function {0..src_size-1} -> {0..dst_size-1}."""
    if src_size == 0:
        yield ()
        return
    from itertools import product

    yield from product(range(dst_size), repeat=src_size)
