"""Brute-force cross-checks for the clever code paths.

Everything in this module trades speed for obviousness: enumerate the
whole space, filter by definition, dedupe by trying every permutation.
The main algorithms are tested against these on small carriers.
"""

from __future__ import annotations

import itertools


def _relabeled(table, perm):
    n = len(table)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[perm[i]][perm[j]] = perm[table[i][j]]
    return tuple(tuple(r) for r in out)


def _min_over_perms(tables):
    n = len(tables[0])
    return min(
        tuple(_relabeled(t, p) for t in tables)
        for p in itertools.permutations(range(n))
    )


def all_partitions(n: int):
    """Every partition of 0..n-1, as a min-member block labeling."""
    def rec(k, labels):
        if k == n:
            yield tuple(labels)
            return
        used = set(labels)
        for b in sorted(used) + [k]:
            if b in used or b == k:
                labels.append(b)
                yield from rec(k + 1, labels)
                labels.pop()
    # labels[i] is the smallest element of i's block
    def norm(labels):
        first = {}
        for i, b in enumerate(labels):
            first.setdefault(b, i)
        return tuple(first[b] for b in labels)
    seen = set()
    for raw in rec(0, []):
        p = norm(raw)
        if p not in seen:
            seen.add(p)
            yield p


def semilattice_count_posets(n: int) -> int:
    """Count join-semilattices on n elements up to isomorphism.

    Enumerates partial orders as subsets of strict pairs (i, j) with
    i < j, which covers every isomorphism class since each finite poset
    can be relabeled along a linear extension.  Keeps the orders where
    every pair has a least upper bound, dedupes the join tables by
    permutation.
    """
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    found = set()
    for bits in range(1 << len(pairs)):
        rel = [[i == j for j in range(n)] for i in range(n)]
        for k, (i, j) in enumerate(pairs):
            if bits >> k & 1:
                rel[i][j] = True
        ok = True
        for i in range(n):
            for j in range(n):
                if not rel[i][j]:
                    continue
                for k in range(n):
                    if rel[j][k] and not rel[i][k]:
                        ok = False
        if not ok:
            continue
        table = []
        for x in range(n):
            row = []
            for y in range(n):
                ubs = [z for z in range(n) if rel[x][z] and rel[y][z]]
                lub = None
                for u in ubs:
                    if all(rel[u][v] for v in ubs):
                        lub = u
                        break
                if lub is None:
                    row = None
                    break
                row.append(lub)
            if row is None:
                table = None
                break
            table.append(tuple(row))
        if table is None:
            continue
        found.add(_min_over_perms([tuple(table)]))
    return len(found)


def semilattice_count_tables(n: int) -> int:
    """Same count, from the join-table side: every idempotent commutative
    table, filtered by associativity, deduped by permutation."""
    cells = [(i, j) for i in range(n) for j in range(i + 1, n)]
    found = set()
    for values in itertools.product(range(n), repeat=len(cells)):
        t = [[i for _ in range(n)] for i in range(n)]
        for i in range(n):
            t[i][i] = i
        for (i, j), v in zip(cells, values):
            t[i][j] = v
            t[j][i] = v
        ok = True
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if t[t[x][y]][z] != t[x][t[y][z]]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            found.add(_min_over_perms([tuple(tuple(r) for r in t)]))
    return len(found)


def partition_respects_tables(part, tables) -> bool:
    """Is the partition compatible with every binary operation given?"""
    n = len(part)
    for x in range(n):
        for y in range(n):
            if part[x] != part[y]:
                continue
            for t in range(n):
                for tab in tables:
                    if part[tab[x][t]] != part[tab[y][t]]:
                        return False
                    if part[tab[t][x]] != part[tab[t][y]]:
                        return False
    return True


def simple_by_partitions(add, mul) -> bool:
    """Simplicity by scanning every partition of the carrier."""
    n = len(add)
    if n == 1:
        return True
    ident = tuple(range(n))
    full = tuple(0 for _ in range(n))
    for part in all_partitions(n):
        if part in (ident, full):
            continue
        if partition_respects_tables(part, [add, mul]):
            return False
    return True


def _is_assoc(t) -> bool:
    n = len(t)
    for x in range(n):
        for y in range(n):
            xy = t[x][y]
            for z in range(n):
                if t[xy][z] != t[x][t[y][z]]:
                    return False
    return True


def _distributes(add, mul) -> bool:
    n = len(add)
    for a in range(n):
        for b in range(n):
            s = add[b][a]
            for c in range(n):
                if mul[c][s] != add[mul[c][b]][mul[c][a]]:
                    return False
                if mul[s][c] != add[mul[b][c]][mul[a][c]]:
                    return False
    return True


def count_simple_idempotent_semirings(n: int) -> int:
    """Naive count of simple additively idempotent semirings on n
    elements up to isomorphism: all idempotent commutative additions,
    all multiplications, filtered by the definitions."""
    cells = [(i, j) for i in range(n) for j in range(i + 1, n)]
    adds = []
    for values in itertools.product(range(n), repeat=len(cells)):
        t = [[i for _ in range(n)] for i in range(n)]
        for i in range(n):
            t[i][i] = i
        for (i, j), v in zip(cells, values):
            t[i][j] = v
            t[j][i] = v
        t = tuple(tuple(r) for r in t)
        if _is_assoc(t):
            adds.append(t)
    found = set()
    for add in adds:
        for flat in itertools.product(range(n), repeat=n * n):
            mul = tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))
            if not _is_assoc(mul):
                continue
            if not _distributes(add, mul):
                continue
            if not simple_by_partitions(add, mul):
                continue
            found.add(_min_over_perms([add, mul]))
    return len(found)
