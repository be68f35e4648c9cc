"""Exhaustive and randomized generation of Latin operations, the
paratopism action on cell sets, min-lex canonical forms, and the orbit
census at desk scale.
"""
from __future__ import annotations

import math
import os
import random
from collections import deque
from dataclasses import dataclass

from .core import (
    CeilingError,
    CellSet,
    LatinOp,
    ValidationError,
    _trusted_latin,
    check_order,
)

DEFAULT_CELL_CEILING = 10 ** 7
DEFAULT_GROUP_CEILING = 100_000


def cell_ceiling() -> int:
    value = os.environ.get("LATINOP_CELL_CEILING")
    return int(value) if value else DEFAULT_CELL_CEILING


def _check_cells(n: int, d: int, ceiling: int | None) -> int:
    check_order(n)
    if d < 1:
        raise ValidationError(f"arity must be >= 1, got {d}")
    if ceiling is None:
        ceiling = cell_ceiling()
    total = n ** d
    if total > ceiling:
        raise CeilingError(
            f"n^d = {total} table cells exceeds the ceiling of {ceiling}"
        )
    return total


def _line_geometry(n: int, d: int):
    """Per-cell line indices: for each cell and slot, the index of the
    line (the other d-1 coordinates) it lies on."""
    total = n ** d
    line_of = []
    for m in range(total):
        coords = []
        rem = m
        for _ in range(d):
            coords.append(rem % n)
            rem //= n
        coords.reverse()
        lines = []
        for s in range(d):
            idx = 0
            for j, c in enumerate(coords):
                if j != s:
                    idx = idx * n + c
            lines.append(idx)
        line_of.append(tuple(lines))
    return line_of


def _search_tables(n, d, value_order=None):
    """Yield all Latin tables in lexicographic order.

    value_order(cell_index) may supply a per-cell candidate order for
    randomized search; default is ascending (lexicographic emission).
    """
    total = n ** d
    line_of = _line_geometry(n, d)
    masks = [[0] * (n ** (d - 1)) for _ in range(d)]
    table = [0] * total
    full = (1 << n) - 1
    ascending = list(range(n))

    def rec(m):
        if m == total:
            yield tuple(table)
            return
        lines = line_of[m]
        used = 0
        for s in range(d):
            used |= masks[s][lines[s]]
        avail = full & ~used
        order = ascending if value_order is None else value_order(m)
        for v in order:
            bit = 1 << v
            if avail & bit:
                table[m] = v
                for s in range(d):
                    masks[s][lines[s]] |= bit
                yield from rec(m + 1)
                for s in range(d):
                    masks[s][lines[s]] &= ~bit
        return

    yield from rec(0)


def enumerate_all(n: int, d: int, ceiling: int | None = None):
    """Yield every Latin d-ary operation of order n exactly once, in
    lexicographic table order."""
    _check_cells(n, d, ceiling)
    for table in _search_tables(n, d):
        yield _trusted_latin(n, d, table)


def count_all(n: int, d: int, ceiling: int | None = None) -> int:
    """Number of Latin d-ary operations of order n."""
    total = _check_cells(n, d, ceiling)
    line_of = _line_geometry(n, d)
    masks = [[0] * (n ** (d - 1)) for _ in range(d)]
    full = (1 << n) - 1

    def rec(m):
        if m == total:
            return 1
        lines = line_of[m]
        used = 0
        for s in range(d):
            used |= masks[s][lines[s]]
        avail = full & ~used
        count = 0
        while avail:
            bit = avail & -avail
            avail ^= bit
            for s in range(d):
                masks[s][lines[s]] |= bit
            count += rec(m + 1)
            for s in range(d):
                masks[s][lines[s]] &= ~bit
        return count

    return rec(0)


def random_latin(n: int, d: int, seed: int = 0, ceiling: int | None = None) -> LatinOp:
    """First completion of a randomized backtracking fill.

    Deterministic given the seed; not uniform over all Latin operations.
    """
    _check_cells(n, d, ceiling)
    rng = random.Random(seed)

    def value_order(_m):
        order = list(range(n))
        rng.shuffle(order)
        return order

    for table in _search_tables(n, d, value_order):
        return LatinOp(n, d, table)
    raise AssertionError("search space is never empty for n >= 1")


@dataclass(frozen=True)
class Paratopism:
    """An element of Sym(X)^(d+1) x| Sym_{d+1} acting on cells.

    slot_perm is 1-based one-line notation on slots; symbol_perms[s] is
    the value bijection applied in source slot s+1.  A cell maps by
    sending its slot-s entry x to position slot_perm(s) with value
    symbol_perms[s-1][x].
    """

    slot_perm: tuple
    symbol_perms: tuple

    def __post_init__(self):
        object.__setattr__(self, "slot_perm", tuple(self.slot_perm))
        object.__setattr__(
            self, "symbol_perms", tuple(tuple(p) for p in self.symbol_perms)
        )
        k = len(self.slot_perm)
        if sorted(self.slot_perm) != list(range(1, k + 1)):
            raise ValidationError(f"{self.slot_perm} is not a permutation of 1..{k}")
        if len(self.symbol_perms) != k:
            raise ValidationError(
                f"expected {k} symbol permutations, got {len(self.symbol_perms)}"
            )
        for p in self.symbol_perms:
            if sorted(p) != list(range(len(p))):
                raise ValidationError(f"{p} is not a permutation of 0..{len(p) - 1}")

    @property
    def d(self) -> int:
        return len(self.slot_perm) - 1

    @classmethod
    def identity(cls, n: int, d: int) -> "Paratopism":
        return cls(tuple(range(1, d + 2)), tuple(tuple(range(n)) for _ in range(d + 1)))

    @classmethod
    def random(cls, n: int, d: int, rng: random.Random) -> "Paratopism":
        slots = list(range(1, d + 2))
        rng.shuffle(slots)
        perms = []
        for _ in range(d + 1):
            p = list(range(n))
            rng.shuffle(p)
            perms.append(tuple(p))
        return cls(tuple(slots), tuple(perms))

    def apply_cell(self, cell: tuple) -> tuple:
        out = [0] * len(cell)
        for s, x in enumerate(cell):
            out[self.slot_perm[s] - 1] = self.symbol_perms[s][x]
        return tuple(out)

    def compose(self, other: "Paratopism") -> "Paratopism":
        """self after other, as actions on cells."""
        if self.d != other.d:
            raise ValidationError("dimension mismatch in paratopism composition")
        k = self.d + 2
        slots = tuple(self.slot_perm[other.slot_perm[s] - 1] for s in range(k - 1))
        perms = tuple(
            tuple(
                self.symbol_perms[other.slot_perm[s] - 1][other.symbol_perms[s][x]]
                for x in range(len(other.symbol_perms[s]))
            )
            for s in range(k - 1)
        )
        return Paratopism(slots, perms)


def apply_paratopism(p: Paratopism, L: CellSet) -> CellSet:
    """Image of a cell set under a paratopism (always a valid cell set)."""
    if p.d != L.d:
        raise ValidationError(f"dimension mismatch: {p.d} != {L.d}")
    if any(len(sp) != L.n for sp in p.symbol_perms):
        raise ValidationError("symbol permutation order does not match carrier")
    return CellSet(L.n, L.d, frozenset(p.apply_cell(c) for c in L.cells))


def paratopism_group_order(n: int, d: int) -> int:
    return math.factorial(n) ** (d + 1) * math.factorial(d + 1)


def _generators(n: int, d: int):
    """Adjacent slot and symbol transpositions; generate the full group."""
    gens = []
    idn = tuple(range(n))
    idslots = tuple(range(1, d + 2))
    for s in range(d):
        slots = list(idslots)
        slots[s], slots[s + 1] = slots[s + 1], slots[s]
        gens.append(Paratopism(tuple(slots), tuple(idn for _ in range(d + 1))))
    for s in range(d + 1):
        for v in range(n - 1):
            sym = list(idn)
            sym[v], sym[v + 1] = sym[v + 1], sym[v]
            perms = [idn] * (d + 1)
            perms[s] = tuple(sym)
            gens.append(Paratopism(idslots, tuple(perms)))
    return gens


def _orbit(L: CellSet):
    """All cell sets in the paratopism orbit of L, as frozensets."""
    gens = _generators(L.n, L.d)
    start = L.cells
    seen = {start}
    queue = deque([start])
    while queue:
        cells = queue.popleft()
        for g in gens:
            image = frozenset(g.apply_cell(c) for c in cells)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return seen


def _check_group_ceiling(n: int, d: int, ceiling: int | None) -> None:
    if ceiling is None:
        ceiling = DEFAULT_GROUP_CEILING
    order = paratopism_group_order(n, d)
    if order > ceiling:
        raise CeilingError(
            f"paratopism group order {order} exceeds the ceiling of {ceiling}"
        )


def canonical_form(L: CellSet, ceiling: int | None = None) -> CellSet:
    """Lexicographically least cell set in the paratopism orbit of L.

    Two hypercubes are paratopic iff their canonical forms coincide.
    """
    _check_group_ceiling(L.n, L.d, ceiling)
    best = min(_orbit(L), key=lambda cells: tuple(sorted(cells)))
    return CellSet(L.n, L.d, best)


def orbit_census(n: int, d: int, ceiling: int | None = None,
                 cell_ceiling_: int | None = None) -> dict:
    """Partition all Latin operations of order n, arity d into
    paratopism classes: canonical form -> orbit size."""
    _check_group_ceiling(n, d, ceiling)
    census = {}
    seen = set()
    total = 0
    from .core import graph_of

    for op in enumerate_all(n, d, cell_ceiling_):
        total += 1
        cells = graph_of(op).cells
        if cells in seen:
            continue
        orbit = _orbit(CellSet(n, d, cells))
        seen |= orbit
        best = min(orbit, key=lambda c: tuple(sorted(c)))
        census[CellSet(n, d, best)] = len(orbit)
    if sum(census.values()) != total:
        raise AssertionError("orbit sizes do not sum to the total count")
    return census
