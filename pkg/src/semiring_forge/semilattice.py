"""Finite join-semilattices and lattices given by explicit join tables.

The carrier is always 0..n-1 and the join table is the primitive datum.
The partial order is derived from it: x <= y iff join(x, y) == y.  A
lattice is a semilattice with a least element; meets are computed from
joins and never stored.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

from . import canon
from .errors import InvalidStructure


def _check_join_table(rows):
    n = len(rows)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise InvalidStructure(f"row {i} has length {len(row)}, expected {n}")
        for v in row:
            if not (0 <= v < n):
                raise InvalidStructure(f"entry {v} in row {i} outside carrier 0..{n - 1}")
    for x in range(n):
        if rows[x][x] != x:
            raise InvalidStructure(f"join({x},{x}) = {rows[x][x]}, not idempotent")
        for y in range(n):
            if rows[x][y] != rows[y][x]:
                raise InvalidStructure(f"join not commutative at ({x},{y})")
    for x in range(n):
        for y in range(n):
            xy = rows[x][y]
            for z in range(n):
                if rows[xy][z] != rows[x][rows[y][z]]:
                    raise InvalidStructure(f"join not associative at ({x},{y},{z})")


@dataclass(frozen=True)
class FiniteSemilattice:
    join: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.join)

    def leq(self, x: int, y: int) -> bool:
        if not (0 <= x < self.size and 0 <= y < self.size):
            raise IndexError(f"({x},{y}) outside carrier 0..{self.size - 1}")
        return self.join[x][y] == y

    @cached_property
    def top(self) -> int:
        t = 0
        for x in range(1, self.size):
            t = self.join[t][x]
        return t

    @cached_property
    def least(self) -> int | None:
        for x in range(self.size):
            if all(self.join[x][y] == y for y in range(self.size)):
                return x
        return None

    def downset(self, x: int) -> tuple[int, ...]:
        return tuple(y for y in range(self.size) if self.leq(y, x))

    def upset(self, x: int) -> tuple[int, ...]:
        return tuple(y for y in range(self.size) if self.leq(x, y))

    @cached_property
    def minimal_elements(self) -> tuple[int, ...]:
        return tuple(
            x for x in range(self.size)
            if not any(y != x and self.leq(y, x) for y in range(self.size))
        )

    def lower_neighbors(self, x: int) -> tuple[int, ...]:
        below = [y for y in self.downset(x) if y != x]
        return tuple(
            y for y in below
            if not any(z != y and z != x and self.leq(y, z) and self.leq(z, x) for z in below)
        )

    @cached_property
    def coatoms(self) -> tuple[int, ...]:
        return self.lower_neighbors(self.top)

    def is_join_irreducible(self, x: int) -> bool:
        """x cannot be written as a join of two other elements."""
        for a in range(self.size):
            if a == x:
                continue
            for b in range(self.size):
                if b != x and self.join[a][b] == x:
                    return False
        return True

    @cached_property
    def unique_lower_neighbor_of_top(self) -> int | None:
        return self.coatoms[0] if len(self.coatoms) == 1 else None


def semilattice(rows) -> FiniteSemilattice:
    """Validate a join table and wrap it."""
    tab = tuple(tuple(r) for r in rows)
    if not tab:
        raise InvalidStructure("empty carrier")
    _check_join_table(tab)
    return FiniteSemilattice(tab)


@dataclass(frozen=True)
class FiniteLattice:
    base: FiniteSemilattice

    @property
    def size(self) -> int:
        return self.base.size

    @property
    def join(self):
        return self.base.join

    @property
    def bottom(self) -> int:
        return self.base.least  # type: ignore[return-value]

    @property
    def top(self) -> int:
        return self.base.top

    def leq(self, x: int, y: int) -> bool:
        return self.base.leq(x, y)

    def meet(self, x: int, y: int) -> int:
        common = [z for z in range(self.size) if self.leq(z, x) and self.leq(z, y)]
        m = common[0]
        for z in common[1:]:
            m = self.join[m][z]
        return m

    @cached_property
    def meet_table(self) -> tuple[tuple[int, ...], ...]:
        n = self.size
        return tuple(tuple(self.meet(x, y) for y in range(n)) for x in range(n))


def lattice(rows) -> FiniteLattice:
    sl = semilattice(rows)
    return as_lattice(sl)


def as_lattice(sl: FiniteSemilattice) -> FiniteLattice:
    if sl.least is None:
        raise InvalidStructure("no least element, not a lattice")
    return FiniteLattice(sl)


# ---------------------------------------------------------------------------
# small stock shapes used all over the tests and the CLI


def chain(n: int) -> FiniteSemilattice:
    return FiniteSemilattice(tuple(tuple(max(i, j) for j in range(n)) for i in range(n)))


def flat_top(n_atoms: int) -> FiniteSemilattice:
    """n_atoms pairwise incomparable elements under a common top."""
    n = n_atoms + 1
    top = n_atoms
    rows = [[top] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = i
        rows[i][top] = top
        rows[top][i] = top
    return FiniteSemilattice(tuple(tuple(r) for r in rows))


def vee() -> FiniteSemilattice:
    return flat_top(2)


def diamond() -> FiniteSemilattice:
    # bottom 0, atoms 1 and 2, top 3
    rows = [[0, 1, 2, 3], [1, 1, 3, 3], [2, 3, 2, 3], [3, 3, 3, 3]]
    return semilattice(rows)


# ---------------------------------------------------------------------------
# order-theoretic operations


def has_star_property(sl: FiniteSemilattice) -> tuple[bool, int | None]:
    """Is there u with u v x below the top for every x below the top?

    Vacuously true on one element.  Returns the first witness in carrier
    order, or (False, None).
    """
    top = sl.top
    if sl.size == 1:
        return True, 0
    for u in range(sl.size):
        if all(sl.join[u][x] != top for x in range(sl.size) if x != top):
            return True, u
    return False, None


def dual(lat: FiniteLattice) -> FiniteLattice:
    """Order-reversed lattice on the same carrier: joins become meets."""
    return FiniteLattice(FiniteSemilattice(lat.meet_table))


def remove_bottom(lat: FiniteLattice) -> tuple[FiniteSemilattice, tuple[int, ...]]:
    """Drop the least element; also return old index -> new index (or -1)."""
    if lat.size < 2:
        raise InvalidStructure("cannot remove the bottom of a one-element lattice")
    b = lat.bottom
    keep = [x for x in range(lat.size) if x != b]
    idx = [-1] * lat.size
    for new, old in enumerate(keep):
        idx[old] = new
    rows = tuple(tuple(idx[lat.join[x][y]] for y in keep) for x in keep)
    return FiniteSemilattice(rows), tuple(idx)


@dataclass(frozen=True)
class BoxProduct:
    """Product of two semilattices with every pair containing a top collapsed.

    `classes[x][y]` is the glued carrier index of the pair (x, y); the
    collapsed class sits at the last index.  `reps` picks one (x, y) pair
    per glued element, with (top, top) representing the collapsed class.
    """

    sl: FiniteSemilattice
    classes: tuple[tuple[int, ...], ...]
    reps: tuple[tuple[int, int], ...]


def box_product(left: FiniteSemilattice, right: FiniteSemilattice) -> BoxProduct:
    lt, rt = left.top, right.top
    pairs = [
        (x, y)
        for x in range(left.size) if x != lt
        for y in range(right.size) if y != rt
    ]
    n = len(pairs) + 1
    glued = n - 1
    index = {p: i for i, p in enumerate(pairs)}
    classes = tuple(
        tuple(
            glued if (x == lt or y == rt) else index[(x, y)]
            for y in range(right.size)
        )
        for x in range(left.size)
    )
    rows = [[0] * n for _ in range(n)]
    for i, (x, y) in enumerate(pairs):
        for j, (u, v) in enumerate(pairs):
            rows[i][j] = classes[left.join[x][u]][right.join[y][v]]
        rows[i][glued] = glued
        rows[glued][i] = glued
    rows[glued][glued] = glued
    sl = semilattice(rows)
    return BoxProduct(sl, classes, tuple(pairs) + ((lt, rt),))


# ---------------------------------------------------------------------------
# isomorphism and enumeration


def canonical_form(sl: FiniteSemilattice) -> tuple[tuple[int, ...], ...]:
    tables, _ = canon.canonical_relabel([sl.join])
    return tables[0]


def automorphisms(sl: FiniteSemilattice) -> list[tuple[int, ...]]:
    return canon.automorphisms([sl.join])


def semilattice_isomorphism(a: FiniteSemilattice, b: FiniteSemilattice):
    """Carrier bijection commuting with join, or None."""
    return canon.find_isomorphism([a.join], [b.join])


def _valid_attachment_sets(sl: FiniteSemilattice):
    """Up-sets C such that a new minimal element below exactly C keeps joins.

    For every x outside C the set of elements of C above x must have a
    least member, which becomes the join of x with the new element.
    """
    n = sl.size
    elements = list(range(n))
    for bits in range(1, 1 << n):
        c = [x for x in elements if bits >> x & 1]
        cset = set(c)
        if any(sl.leq(x, y) and y not in cset for x in c for y in elements):
            continue
        ok = True
        joins = [0] * n
        for x in elements:
            above = [y for y in c if sl.leq(x, y)]
            if not above:
                ok = False
                break
            m = None
            for cand in above:
                if all(sl.leq(cand, y) for y in above):
                    m = cand
                    break
            if m is None:
                ok = False
                break
            joins[x] = m
        if ok:
            yield frozenset(cset), tuple(joins)


def _extend_by_minimal(join, attachment_joins):
    n = len(join) + 1
    z = n - 1
    rows = [list(r) + [0] for r in join] + [[0] * n]
    for x in range(n - 1):
        rows[x][z] = attachment_joins[x]
        rows[z][x] = attachment_joins[x]
    rows[z][z] = z
    return tuple(tuple(r) for r in rows)


def _delete_element(table, m):
    keep = [x for x in range(len(table)) if x != m]
    idx = {old: new for new, old in enumerate(keep)}
    return tuple(tuple(idx[table[x][y]] for y in keep) for x in keep)


def _chosen_minimal_orbit(table):
    """The orbit of minimal elements any accepted extension must land in."""
    sl = FiniteSemilattice(table)
    mins = sl.minimal_elements
    keyed = {}
    for m in mins:
        cand, _ = canon.canonical_relabel([_delete_element(table, m)])
        keyed[m] = cand[0]
    kmin = min(keyed.values())
    winners = [m for m in mins if keyed[m] == kmin]
    star = winners[0]
    orbit = {perm[star] for perm in canon.automorphisms([table])}
    return orbit


@lru_cache(maxsize=None)
def _canonical_semilattices(n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    if n < 1:
        return ()
    if n == 1:
        return (((0,),),)
    out = []
    for parent in _canonical_semilattices(n - 1):
        psl = FiniteSemilattice(parent)
        auts = canon.automorphisms([parent])
        seen_orbits = set()
        for cset, joins in _valid_attachment_sets(psl):
            orbit_key = min(tuple(sorted(perm[x] for x in cset)) for perm in auts)
            if orbit_key in seen_orbits:
                continue
            seen_orbits.add(orbit_key)
            child = _extend_by_minimal(parent, joins)
            (ccan,), perm = canon.canonical_relabel([child])
            if perm[n - 1] in _chosen_minimal_orbit(ccan):
                out.append(ccan)
    assert len(out) == len(set(out)), "orderly generation produced a duplicate"
    return tuple(sorted(out))


def enumerate_semilattices(n: int):
    """One representative per isomorphism class, in a fixed order."""
    for table in _canonical_semilattices(n):
        yield FiniteSemilattice(table)
