"""Exhaustive searches: all multiplications over a fixed additive
semilattice, all semimodule actions on a fixed semilattice, all small
groups.

The multiplication search works row-wise.  Over an idempotent addition
every left translation is a join-morphism, so rows come from a
precomputed pool and two laws tie them together: the row of a join is
the pointwise sup of the rows, and the row of a product is the
composite of the rows.  Elements are assigned in order of decreasing
downset size, which lets both laws fire as soon as possible.
"""

from __future__ import annotations

from functools import lru_cache

from . import canon
from .morphism import compose, enumerate_morphisms, sup
from .semilattice import FiniteSemilattice, enumerate_semilattices
from .semiring import FiniteSemiring, is_simple, verify_axioms


@lru_cache(maxsize=64)
def _pool(join_table):
    """Join-morphism pool with sup/compose index tables, cached."""
    sl = FiniteSemilattice(join_table)
    morphs = enumerate_morphisms(sl, "jm")
    index = {f: i for i, f in enumerate(morphs)}
    k = len(morphs)
    sup_tab = [[0] * k for _ in range(k)]
    cmp_tab = [[0] * k for _ in range(k)]
    for i, f in enumerate(morphs):
        for j, g in enumerate(morphs):
            sup_tab[i][j] = index[sup(sl, f, g)]
            cmp_tab[i][j] = index[compose(f, g)]
    return morphs, sup_tab, cmp_tab


def _propagate(seed, assigned, forced, constraints):
    """Extend forced with seed plus everything constraints implies.

    constraints(x, ix, y, iy) yields (element, pool index) demands for a
    newly fixed pair.  Returns the extended dict, or None on conflict.
    """
    todo = [seed]
    local = dict(forced)
    while todo:
        x, ix = todo.pop()
        known = assigned.get(x, local.get(x))
        if known is not None:
            if known != ix:
                return None
            continue
        local[x] = ix
        for y, iy in [*assigned.items(), *local.items()]:
            todo.extend(constraints(x, ix, y, iy))
    return local


def multiplications(sl: FiniteSemilattice):
    """Every multiplication table completing the join table to a
    semiring, in a fixed order.  No isomorphism rejection here."""
    n = sl.size
    if n == 1:
        yield ((0,),)
        return
    morphs, sup_tab, cmp_tab = _pool(sl.join)
    join = sl.join
    order = sorted(range(n), key=lambda x: -len(sl.downset(x)))
    assigned = {}
    found = []

    def constraints(x, ix, y, iy):
        yield join[x][y], sup_tab[ix][iy]
        yield morphs[ix][y], cmp_tab[ix][iy]
        yield morphs[iy][x], cmp_tab[iy][ix]

    def rec(pos, forced):
        if pos == n:
            mul = tuple(morphs[assigned[x]] for x in range(n))
            if not verify_axioms(join, mul):
                found.append(mul)
            return
        e = order[pos]
        candidates = [forced[e]] if e in forced else range(len(morphs))
        for i in candidates:
            local = _propagate((e, i), assigned, forced, constraints)
            if local is None:
                continue
            assigned[e] = local.pop(e)
            rec(pos + 1, local)
            del assigned[e]

    rec(0, {})
    yield from found


def simple_idempotent_semirings(sl: FiniteSemilattice):
    """Simple semirings with this additive semilattice, one per
    isomorphism class, in a fixed order.

    Two semirings sharing an additive table are isomorphic exactly when
    an additive automorphism carries one multiplication to the other,
    so a table is kept when it is least in its orbit.
    """
    auts = canon.automorphisms([sl.join])
    for mul in multiplications(sl):
        if len(auts) > 1 and any(canon.relabel(mul, p) < mul for p in auts):
            continue
        r = FiniteSemiring(sl.join, mul)
        if is_simple(r):
            yield r


def enumerate_semirings(max_size: int, sizes=None):
    """All simple additively idempotent semirings up to max_size, one
    per isomorphism class.  Yields (semiring, additive_semilattice)."""
    wanted = sizes if sizes is not None else range(1, max_size + 1)
    for n in wanted:
        for sl in enumerate_semilattices(n):
            yield from ((r, sl) for r in simple_idempotent_semirings(sl))


def _worker(join_table):
    sl = FiniteSemilattice(join_table)
    return [r.mul for r in simple_idempotent_semirings(sl)]


def enumerate_semirings_parallel(max_size: int, jobs: int = 1):
    """Same stream as enumerate_semirings, optionally fanned out over
    worker processes, one task per additive semilattice.  Output order
    does not depend on the number of jobs."""
    tasks = [sl.join for n in range(1, max_size + 1)
             for sl in enumerate_semilattices(n)]
    if jobs <= 1:
        results = map(_worker, tasks)
    else:
        import concurrent.futures

        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_worker, tasks))
    for join_table, muls in zip(tasks, results):
        sl = FiniteSemilattice(join_table)
        for mul in muls:
            yield FiniteSemiring(join_table, mul), sl


def action_homs(r: FiniteSemiring, msl: FiniteSemilattice):
    """All semiring homomorphisms from r into the join-morphism semiring
    of msl; each is a tuple assigning a join-morphism to every element
    of r.  These are exactly the idempotent r-semimodule structures on
    msl."""
    n = r.size
    morphs, sup_tab, cmp_tab = _pool(msl.join)
    add, mul = r.add, r.mul
    order = sorted(range(n), key=lambda x: -sum(add[y][x] == x for y in range(n)))
    assigned = {}
    results = []

    def constraints(x, ix, y, iy):
        yield add[x][y], sup_tab[ix][iy]
        yield mul[x][y], cmp_tab[ix][iy]
        yield mul[y][x], cmp_tab[iy][ix]

    def rec(pos, forced):
        if pos == n:
            results.append(tuple(morphs[assigned[x]] for x in range(n)))
            return
        e = order[pos]
        candidates = [forced[e]] if e in forced else range(len(morphs))
        for i in candidates:
            local = _propagate((e, i), assigned, forced, constraints)
            if local is None:
                continue
            assigned[e] = local.pop(e)
            rec(pos + 1, local)
            del assigned[e]

    rec(0, {})
    return results


@lru_cache(maxsize=None)
def all_groups(n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All group tables on 0..n-1 with identity 0, up to isomorphism."""
    if n < 1:
        return ()
    if n == 1:
        return (((0,),),)
    if n > 6:
        raise ValueError("group enumeration capped at order 6")
    found: list[tuple[tuple[int, ...], ...]] = []

    def is_assoc(t):
        rng = range(n)
        return all(t[t[x][y]][z] == t[x][t[y][z]]
                   for x in rng for y in rng for z in rng)

    rows = [tuple(range(n))]

    def rec(i):
        if i == n:
            t = tuple(rows)
            if is_assoc(t) and not any(canon.find_isomorphism([t], [g]) for g in found):
                found.append(t)
            return
        used_cols = [{rows[j][c] for j in range(i)} for c in range(n)]

        def fill(c, row):
            if c == n:
                rows.append(tuple(row))
                rec(i + 1)
                rows.pop()
                return
            choices = (i,) if c == 0 else range(n)
            for v in choices:
                if v in row or v in used_cols[c]:
                    continue
                row.append(v)
                fill(c + 1, row)
                row.pop()

        fill(0, [])

    rec(1)
    return tuple(found)
