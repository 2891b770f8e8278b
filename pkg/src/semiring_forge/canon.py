"""Relabeling, canonical forms, automorphisms and isomorphism search.

Everything here works on families of n x n operation tables over the
carrier 0..n-1.  A permutation is a tuple p of length n mapping old
index to new index.  All searches restrict candidate permutations to
color classes produced by iterated signature refinement, which keeps
the factorial blowup confined to genuinely symmetric carriers.
"""

from __future__ import annotations

import itertools

MAX_CANDIDATES = 2_000_000


def relabel(table, perm):
    """Apply a carrier permutation to one operation table."""
    n = len(table)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        pi = perm[i]
        row = table[i]
        for j in range(n):
            out[pi][perm[j]] = perm[row[j]]
    return tuple(tuple(r) for r in out)


def color_refine(tables):
    """Stable per-element colors, identical for isomorphic table families."""
    n = len(tables[0])
    colors = [0] * n
    while True:
        sigs = []
        for x in range(n):
            per_table = tuple(
                tuple(sorted((colors[y], colors[t[x][y]], colors[t[y][x]]) for y in range(n)))
                for t in tables
            )
            sigs.append((colors[x], per_table))
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            return tuple(colors)
        colors = new


def _classes(colors):
    by_color = {}
    for x, c in enumerate(colors):
        by_color.setdefault(c, []).append(x)
    return [by_color[c] for c in sorted(by_color)]


def _candidate_perms(classes):
    """All permutations laying out each color class on consecutive indices."""
    n = sum(len(c) for c in classes)
    total = 1
    for c in classes:
        for k in range(2, len(c) + 1):
            total *= k
        if total > MAX_CANDIDATES:
            raise RuntimeError("carrier too symmetric for exhaustive relabeling")
    offsets = list(itertools.accumulate([0] + [len(c) for c in classes]))
    for arrangement in itertools.product(*(itertools.permutations(c) for c in classes)):
        perm = [0] * n
        for ci, ordered in enumerate(arrangement):
            base = offsets[ci]
            for pos, old in enumerate(ordered):
                perm[old] = base + pos
        yield tuple(perm)


def canonical_relabel(tables):
    """Lexicographically least relabeling of the family.

    Returns (canonical_tables, perm) with perm mapping old to new indices.
    The result is identical for isomorphic inputs.
    """
    tables = tuple(tuple(tuple(r) for r in t) for t in tables)
    colors = color_refine(tables)
    best = None
    best_perm = None
    for perm in _candidate_perms(_classes(colors)):
        cand = tuple(relabel(t, perm) for t in tables)
        if best is None or cand < best:
            best = cand
            best_perm = perm
    return best, best_perm


def automorphisms(tables):
    """All carrier permutations fixing every table in the family."""
    tables = tuple(tuple(tuple(r) for r in t) for t in tables)
    colors = color_refine(tables)
    by_color = {}
    for x, c in enumerate(colors):
        by_color.setdefault(c, []).append(x)
    n = len(tables[0])
    out = []
    sources = [by_color[c] for c in sorted(by_color)]
    for images in itertools.product(*(itertools.permutations(c) for c in sources)):
        perm = [0] * n
        for src, img in zip(sources, images):
            for a, b in zip(src, img):
                perm[a] = b
        perm = tuple(perm)
        if all(relabel(t, perm) == t for t in tables):
            out.append(perm)
    return out


def find_isomorphism(tables_a, tables_b):
    """A permutation carrying family a onto family b, or None."""
    if len(tables_a) != len(tables_b):
        return None
    n = len(tables_a[0])
    if any(len(t) != n for t in tables_b):
        return None
    tables_a = tuple(tuple(tuple(r) for r in t) for t in tables_a)
    tables_b = tuple(tuple(tuple(r) for r in t) for t in tables_b)
    ca = color_refine(tables_a)
    cb = color_refine(tables_b)
    if sorted(ca) != sorted(cb):
        return None
    groups_a = {}
    groups_b = {}
    for x in range(n):
        groups_a.setdefault(ca[x], []).append(x)
        groups_b.setdefault(cb[x], []).append(x)
    if any(len(groups_a[c]) != len(groups_b.get(c, [])) for c in groups_a):
        return None
    sources = [groups_a[c] for c in sorted(groups_a)]
    targets = [groups_b[c] for c in sorted(groups_b)]
    for images in itertools.product(*(itertools.permutations(t) for t in targets)):
        perm = [0] * n
        for src, img in zip(sources, images):
            for a, b in zip(src, img):
                perm[a] = b
        perm = tuple(perm)
        if all(relabel(t, perm) == u for t, u in zip(tables_a, tables_b)):
            return perm
    return None
