"""Finite semirings as a pair of operation tables over 0..n-1.

Addition is required to be a commutative semigroup and multiplication a
semigroup distributing over it; neither needs a neutral element.  The
congruence machinery treats a congruence as a partition stored by least
block member, so the identity partition is (0, 1, ..., n-1) and the
full one is all zeros.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property

from . import canon
from .errors import CapExceeded, HypothesesNotMet, InvalidStructure
from .morphism import compose, sup
from .semilattice import FiniteSemilattice


@dataclass(frozen=True)
class FiniteSemiring:
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.add)

    @cached_property
    def additive_semilattice(self) -> FiniteSemilattice:
        if not structure(self).additively_idempotent:
            raise InvalidStructure("addition is not idempotent")
        return FiniteSemilattice(self.add)


def verify_axioms(add, mul) -> list[tuple[str, tuple]]:
    """All axiom violations as (law, witness) pairs; empty means semiring."""
    n = len(add)
    bad = []
    for t, name in ((add, "add"), (mul, "mul")):
        if len(t) != n or any(len(r) != n for r in t):
            return [(f"{name} table shape", (n,))]
        for row in t:
            for v in row:
                if not 0 <= v < n:
                    return [(f"{name} entry out of range", (v,))]
    for x in range(n):
        for y in range(n):
            if add[x][y] != add[y][x]:
                bad.append(("add commutative", (x, y)))
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if add[add[x][y]][z] != add[x][add[y][z]]:
                    bad.append(("add associative", (x, y, z)))
                if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                    bad.append(("mul associative", (x, y, z)))
                if mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]]:
                    bad.append(("left distributive", (x, y, z)))
                if mul[add[x][y]][z] != add[mul[x][z]][mul[y][z]]:
                    bad.append(("right distributive", (x, y, z)))
    return bad


def semiring(add, mul) -> FiniteSemiring:
    add = tuple(tuple(r) for r in add)
    mul = tuple(tuple(r) for r in mul)
    if not add:
        raise InvalidStructure("empty carrier")
    bad = verify_axioms(add, mul)
    if bad:
        law, witness = bad[0]
        raise InvalidStructure(f"{law} fails at {witness}")
    return FiniteSemiring(add, mul)


@dataclass(frozen=True)
class StructureReport:
    additively_idempotent: bool
    greatest: int | None
    greatest_left_absorbing: bool | None
    greatest_right_absorbing: bool | None
    additive_neutral: int | None
    multiplicative_neutral: int | None
    zero: int | None
    base_case: str


def structure(r: FiniteSemiring) -> StructureReport:
    """Structural flags plus the coarse case of the greatest element.

    base_case distinguishes neither / right-not-left / left-not-right /
    absorbing; splitting `absorbing` by the star property of the minimal
    faithful semimodule lives next to the semimodule search.
    """
    n = r.size
    add, mul = r.add, r.mul
    idem = all(add[x][x] == x for x in range(n))
    greatest = None
    left_abs = right_abs = None
    if idem:
        g = 0
        for x in range(1, n):
            g = add[g][x]
        if all(add[x][g] == g for x in range(n)):
            greatest = g
            left_abs = all(mul[g][s] == g for s in range(n))
            right_abs = all(mul[s][g] == g for s in range(n))
    neutral = None
    for e in range(n):
        if all(add[e][x] == x for x in range(n)):
            neutral = e
            break
    one = None
    for e in range(n):
        if all(mul[e][x] == x and mul[x][e] == x for x in range(n)):
            one = e
            break
    zero = None
    if neutral is not None and all(
        mul[neutral][x] == neutral and mul[x][neutral] == neutral for x in range(n)
    ):
        zero = neutral
    if not idem or n <= 2:
        base = "not-applicable"
    elif left_abs and right_abs:
        base = "absorbing"
    elif right_abs:
        base = "right-not-left"
    elif left_abs:
        base = "left-not-right"
    else:
        base = "neither"
    return StructureReport(
        additively_idempotent=idem,
        greatest=greatest,
        greatest_left_absorbing=left_abs,
        greatest_right_absorbing=right_abs,
        additive_neutral=neutral,
        multiplicative_neutral=one,
        zero=zero,
        base_case=base,
    )


# ---------------------------------------------------------------------------
# congruences


def _normalize(parent) -> tuple[int, ...]:
    n = len(parent)

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    reps = [find(x) for x in range(n)]
    least = {}
    for x in range(n):
        r = reps[x]
        if r not in least or x < least[r]:
            least[r] = min(least.get(r, x), x)
    return tuple(least[reps[x]] for x in range(n))


def _close_pairs(tables, n, seed_pairs) -> tuple[int, ...]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue = list(seed_pairs)
    while queue:
        x, y = queue.pop()
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        parent[rx] = ry
        for t in range(n):
            for tab in tables:
                queue.append((tab[x][t], tab[y][t]))
                queue.append((tab[t][x], tab[t][y]))
    return _normalize(parent)


def principal_congruence(r: FiniteSemiring, a: int, b: int) -> tuple[int, ...]:
    """Smallest congruence identifying a and b."""
    return _close_pairs([r.add, r.mul], r.size, [(a, b)])


def congruence_join(r: FiniteSemiring, p, q) -> tuple[int, ...]:
    n = r.size
    seeds = [(x, p[x]) for x in range(n)] + [(x, q[x]) for x in range(n)]
    return _close_pairs([r.add, r.mul], n, seeds)


def all_congruences(r: FiniteSemiring) -> list[tuple[int, ...]]:
    """Every congruence: principal ones closed under pairwise joins."""
    n = r.size
    ident = tuple(range(n))
    found = {ident}
    frontier = set()
    for a in range(n):
        for b in range(a + 1, n):
            c = principal_congruence(r, a, b)
            if c not in found:
                found.add(c)
                frontier.add(c)
    while frontier:
        new = set()
        for p in list(found):
            for q in frontier:
                j = congruence_join(r, p, q)
                if j not in found and j not in new:
                    new.add(j)
        found.update(new)
        frontier = new
    return sorted(found)


def is_simple(r: FiniteSemiring) -> bool:
    """Only the identity and full congruences, checked via principal ones."""
    n = r.size
    if n == 1:
        return True
    full = (0,) * n
    for a in range(n):
        for b in range(a + 1, n):
            if principal_congruence(r, a, b) != full:
                return False
    return True


def quotient(r: FiniteSemiring, part) -> FiniteSemiring:
    n = r.size
    reps = sorted(set(part))
    index = {rep: i for i, rep in enumerate(reps)}
    k = len(reps)
    add = [[None] * k for _ in range(k)]
    mul = [[None] * k for _ in range(k)]
    for tab, out in ((r.add, add), (r.mul, mul)):
        for x in range(n):
            for y in range(n):
                i, j = index[part[x]], index[part[y]]
                v = index[part[tab[x][y]]]
                if out[i][j] is None:
                    out[i][j] = v
                elif out[i][j] != v:
                    raise InvalidStructure("partition is not a congruence")
    return semiring(add, mul)


def semiring_isomorphism(a: FiniteSemiring, b: FiniteSemiring):
    return canon.find_isomorphism([a.add, a.mul], [b.add, b.mul])


def canonical_tables(r: FiniteSemiring):
    (add, mul), _ = canon.canonical_relabel([r.add, r.mul])
    return add, mul


def opposite(r: FiniteSemiring) -> FiniteSemiring:
    n = r.size
    mul = tuple(tuple(r.mul[y][x] for y in range(n)) for x in range(n))
    return FiniteSemiring(r.add, mul)


# ---------------------------------------------------------------------------
# stock constructions


def rees_sandwich(m: int, n: int, pattern) -> FiniteSemiring:
    """Pairs (i, j) with i in 1..m, j in 1..n plus an absorbing element;
    the product of (i, j) and (k, l) is (i, l) when pattern[j][k] is set
    and the absorbing element otherwise.  Every sum, x + x included, is
    the absorbing element, so these are simple without being additively
    idempotent.

    The pattern must be n x m over {0, 1} with no zero row or column and
    no repeated rows or columns.
    """
    if m < 1 or n < 1:
        raise InvalidStructure("need at least one row and column index")
    pat = tuple(tuple(row) for row in pattern)
    if len(pat) != n or any(len(row) != m for row in pat):
        raise InvalidStructure(f"pattern must be {n} x {m}")
    if any(v not in (0, 1) for row in pat for v in row):
        raise InvalidStructure("pattern entries must be 0 or 1")
    if any(not any(row) for row in pat):
        raise InvalidStructure("pattern has a zero row")
    if any(not any(pat[j][k] for j in range(n)) for k in range(m)):
        raise InvalidStructure("pattern has a zero column")
    if len(set(pat)) != n:
        raise InvalidStructure("pattern has two identical rows")
    cols = {tuple(pat[j][k] for j in range(n)) for k in range(m)}
    if len(cols) != m:
        raise InvalidStructure("pattern has two identical columns")
    size = m * n + 1
    inf = size - 1

    def enc(i, j):
        return (i - 1) * n + (j - 1)

    add = tuple((inf,) * size for _ in range(size))
    mul = [[inf] * size for _ in range(size)]
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            for k in range(1, m + 1):
                for l in range(1, n + 1):
                    if pat[j - 1][k - 1]:
                        mul[enc(i, j)][enc(k, l)] = enc(i, l)
    return semiring(add, tuple(tuple(r) for r in mul))


def is_group_table(t) -> bool:
    n = len(t)
    if any(len(r) != n for r in t):
        return False
    if any(not 0 <= v < n for r in t for v in r):
        return False
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if t[t[x][y]][z] != t[x][t[y][z]]:
                    return False
    e = None
    for c in range(n):
        if all(t[c][x] == x and t[x][c] == x for x in range(n)):
            e = c
            break
    if e is None:
        return False
    for x in range(n):
        if not any(t[x][y] == e for y in range(n)):
            return False
    return True


def group_flat_semiring(table) -> FiniteSemiring:
    """Adjoin an absorbing top to a finite group: distinct elements add
    to the top, products inside the group stay group products."""
    t = tuple(tuple(r) for r in table)
    if not is_group_table(t):
        raise InvalidStructure("not a group table")
    g = len(t)
    size = g + 1
    inf = g
    add = [[inf] * size for _ in range(size)]
    mul = [[inf] * size for _ in range(size)]
    for x in range(g):
        add[x][x] = x
        for y in range(g):
            mul[x][y] = t[x][y]
    add[inf][inf] = inf
    return semiring(add, mul)


# ---------------------------------------------------------------------------
# morphism semirings


def default_size_cap() -> int:
    raw = os.environ.get("SEMIRING_FORGE_SIZE_CAP")
    if raw is None:
        return 10_000
    try:
        return int(raw)
    except ValueError as exc:
        raise InvalidStructure(f"bad SEMIRING_FORGE_SIZE_CAP value {raw!r}") from exc


def closure_semiring(sl: FiniteSemilattice, generators, cap: int | None = None):
    """Close a set of join-morphisms under pointwise sup and composition.

    Returns (semiring, morphisms) with morphisms sorted by image tuple
    and table indices referring to that order.
    """
    if cap is None:
        cap = default_size_cap()
    gens = [tuple(g) for g in generators]
    if not gens:
        raise InvalidStructure("need at least one generator")
    for g in gens:
        if len(g) != sl.size:
            raise InvalidStructure("generator has wrong length")
    members = set(gens)
    frontier = list(members)
    while frontier:
        if len(members) > cap:
            raise CapExceeded(f"closure exceeded {cap} elements")
        new = []
        for f in frontier:
            for g in list(members):
                for h in (sup(sl, f, g), compose(f, g), compose(g, f)):
                    if h not in members:
                        members.add(h)
                        new.append(h)
        frontier = new
    morphs = sorted(members)
    index = {f: i for i, f in enumerate(morphs)}
    k = len(morphs)
    add = tuple(tuple(index[sup(sl, morphs[i], morphs[j])] for j in range(k)) for i in range(k))
    mul = tuple(tuple(index[compose(morphs[i], morphs[j])] for j in range(k)) for i in range(k))
    return semiring(add, mul), tuple(morphs)
