"""Semimodules over a fixed finite semiring, given by an action table.

A semimodule is a commutative semigroup together with an action
satisfying r(sx) = (rs)x, (r+s)x = rx+sx and r(x+y) = rx+ry.  Most of
the structural notions (faithful, quasitrivial, irreducible) reduce to
table scans; the searches that do real work are smallest_faithful and
density_witness.  Non-idempotent modules can be represented, but the
irreducibility analysis and everything built on it require idempotent
addition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .errors import CapExceeded, HypothesesNotMet, InvalidStructure, RefutationError
from .morphism import compose, sup
from .semilattice import (
    FiniteSemilattice,
    enumerate_semilattices,
    has_star_property,
    semilattice,
)
from .semiring import FiniteSemiring, _normalize, is_simple, structure


@dataclass(frozen=True)
class RSemimodule:
    ring: FiniteSemiring
    madd: tuple[tuple[int, ...], ...]
    action: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.madd)

    @cached_property
    def module_semilattice(self) -> FiniteSemilattice:
        if not is_idempotent(self):
            raise InvalidStructure("module addition is not idempotent")
        return semilattice(self.madd)


def semimodule(ring: FiniteSemiring, madd, action) -> RSemimodule:
    madd = tuple(tuple(r) for r in madd)
    action = tuple(tuple(r) for r in action)
    n = len(madd)
    if n == 0:
        raise InvalidStructure("empty module carrier")
    if any(len(row) != n for row in madd):
        raise InvalidStructure("module addition table is not square")
    if any(v < 0 or v >= n for row in madd for v in row):
        raise InvalidStructure("module addition entry out of range")
    if len(action) != ring.size or any(len(row) != n for row in action):
        raise InvalidStructure(f"action table must be {ring.size} x {n}")
    if any(v < 0 or v >= n for row in action for v in row):
        raise InvalidStructure("action entry out of range")
    for x in range(n):
        for y in range(n):
            if madd[x][y] != madd[y][x]:
                raise InvalidStructure(f"module addition not commutative at {(x, y)}")
            for z in range(n):
                if madd[madd[x][y]][z] != madd[x][madd[y][z]]:
                    raise InvalidStructure(f"module addition not associative at {(x, y, z)}")
    radd, rmul = ring.add, ring.mul
    for r in range(ring.size):
        for s in range(ring.size):
            for x in range(n):
                if action[r][action[s][x]] != action[rmul[r][s]][x]:
                    raise InvalidStructure(f"r(sx) != (rs)x at {(r, s, x)}")
                if action[radd[r][s]][x] != madd[action[r][x]][action[s][x]]:
                    raise InvalidStructure(f"(r+s)x != rx+sx at {(r, s, x)}")
        for x in range(n):
            for y in range(n):
                if action[r][madd[x][y]] != madd[action[r][x]][action[r][y]]:
                    raise InvalidStructure(f"r(x+y) != rx+ry at {(r, x, y)}")
    return RSemimodule(ring, madd, action)


def regular_module(r: FiniteSemiring) -> RSemimodule:
    """The additive structure of the ring acted on by multiplication."""
    return RSemimodule(r, r.add, r.mul)


# ---------------------------------------------------------------------------
# pointwise predicates


def is_idempotent(m: RSemimodule) -> bool:
    return all(m.madd[x][x] == x for x in range(m.size))


def is_faithful(m: RSemimodule) -> bool:
    return len(set(m.action)) == m.ring.size


def is_quasitrivial(m: RSemimodule) -> bool:
    return len(set(m.action)) <= 1


def is_id_quasitrivial(m: RSemimodule) -> bool:
    ident = tuple(range(m.size))
    return all(row == ident for row in m.action)


def predicates(m: RSemimodule) -> dict:
    return {
        "faithful": is_faithful(m),
        "quasitrivial": is_quasitrivial(m),
        "id_quasitrivial": is_id_quasitrivial(m),
        "idempotent": is_idempotent(m),
    }


def embedding_T(m: RSemimodule):
    """The translation map of the action: each ring element goes to its
    row, a join-morphism of the module order.  Returns the map together
    with the image semiring on the distinct rows (under pointwise sup
    and composition) and those rows in lex order, which the image
    tables index.  Injective exactly when the module is faithful."""
    sl = m.module_semilattice
    rows = sorted(set(m.action))
    index = {f: i for i, f in enumerate(rows)}
    add = tuple(tuple(index[sup(sl, f, g)] for g in rows) for f in rows)
    mul = tuple(tuple(index[compose(f, g)] for g in rows) for f in rows)
    return m.action, FiniteSemiring(add, mul), tuple(rows)


# ---------------------------------------------------------------------------
# subsemimodules and congruences


def orbit(m: RSemimodule, a: int) -> tuple[int, ...]:
    """The set of all ra, always a subsemimodule."""
    return tuple(sorted({m.action[r][a] for r in range(m.ring.size)}))


def subsemimodules(m: RSemimodule) -> list[tuple[int, ...]]:
    """All nonempty subsets closed under addition and the action."""
    out = []
    for bits in range(1, 1 << m.size):
        subset = [x for x in range(m.size) if bits >> x & 1]
        inside = set(subset)
        if any(m.madd[x][y] not in inside for x in subset for y in subset):
            continue
        if any(m.action[r][x] not in inside for r in range(m.ring.size) for x in subset):
            continue
        out.append(tuple(subset))
    return out


def _close_module_pairs(m: RSemimodule, seed_pairs) -> tuple[int, ...]:
    n = m.size
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
        for z in range(n):
            queue.append((m.madd[x][z], m.madd[y][z]))
        for r in range(m.ring.size):
            queue.append((m.action[r][x], m.action[r][y]))
    return _normalize(parent)


def principal_module_congruence(m: RSemimodule, a: int, b: int) -> tuple[int, ...]:
    return _close_module_pairs(m, [(a, b)])


def quotient_congruences(m: RSemimodule) -> list[tuple[int, ...]]:
    """Every semimodule congruence, as partitions labeled by least block
    member: principal ones closed under pairwise joins."""
    n = m.size
    ident = tuple(range(n))
    found = {ident}
    frontier = set()
    for a in range(n):
        for b in range(a + 1, n):
            c = principal_module_congruence(m, a, b)
            if c not in found:
                found.add(c)
                frontier.add(c)
    while frontier:
        new = set()
        for p in list(found):
            for q in frontier:
                seeds = [(x, p[x]) for x in range(n)] + [(x, q[x]) for x in range(n)]
                j = _close_module_pairs(m, seeds)
                if j not in found and j not in new:
                    new.add(j)
        found.update(new)
        frontier = new
    return sorted(found)


def quotient_module(m: RSemimodule, part) -> RSemimodule:
    part = tuple(part)
    n = m.size
    reps = sorted(set(part))
    index = {rep: i for i, rep in enumerate(reps)}
    k = len(reps)
    madd = [[None] * k for _ in range(k)]
    action = [[None] * k for _ in range(m.ring.size)]
    for x in range(n):
        for y in range(n):
            i, j = index[part[x]], index[part[y]]
            v = index[part[m.madd[x][y]]]
            if madd[i][j] is None:
                madd[i][j] = v
            elif madd[i][j] != v:
                raise InvalidStructure("partition is not a module congruence")
    for r in range(m.ring.size):
        for x in range(n):
            i = index[part[x]]
            v = index[part[m.action[r][x]]]
            if action[r][i] is None:
                action[r][i] = v
            elif action[r][i] != v:
                raise InvalidStructure("partition is not a module congruence")
    return RSemimodule(m.ring, tuple(map(tuple, madd)), tuple(map(tuple, action)))


# ---------------------------------------------------------------------------
# irreducibility


def irreducibility(m: RSemimodule) -> dict:
    """Sub-irreducible: every proper subsemimodule is fixed pointwise.
    Quotient-irreducible: only the two trivial congruences.  Both
    require a non-quasitrivial module; irreducible is the conjunction."""
    quasi = is_quasitrivial(m)
    sub = False
    quot = False
    if not quasi:
        sub = all(
            all(m.action[r][x] == x for r in range(m.ring.size) for x in s)
            for s in subsemimodules(m)
            if len(s) < m.size
        )
        ident = tuple(range(m.size))
        full = (0,) * m.size
        quot = set(quotient_congruences(m)) == {ident, full}
    return {
        "sub_irreducible": sub,
        "quotient_irreducible": quot,
        "irreducible": sub and quot,
    }


def semimodule_star(m: RSemimodule):
    """Star property of the module order: some u joins nothing non-top
    up to the top.  Returns (flag, first witness or None)."""
    return has_star_property(m.module_semilattice)


# ---------------------------------------------------------------------------
# smallest faithful module


def _inverse(perm):
    inv = [0] * len(perm)
    for i, v in enumerate(perm):
        inv[v] = i
    return inv


def _canonical_module(madd, action):
    """Relabel the module carrier so that (action, madd) is lex-least;
    ring coordinates stay fixed."""
    n = len(madd)
    if n > 9:
        raise CapExceeded("module relabeling search capped at 9 elements")
    best = None
    for perm in itertools.permutations(range(n)):
        inv = _inverse(perm)
        act = tuple(tuple(perm[row[x]] for x in inv) for row in action)
        add = tuple(tuple(perm[madd[x][y]] for y in inv) for x in inv)
        key = (act, add)
        if best is None or key < best:
            best = key
    return best


def smallest_faithful(r: FiniteSemiring) -> RSemimodule:
    """A faithful module of minimum cardinality over a simple additively
    idempotent ring with more than two elements.

    Only quotients of the additive structure are searched: a minimal
    faithful module is generated by a single element, hence a
    homomorphic image of that module.  Among the minimum-size faithful
    quotients the one with lex-least canonical action table wins, so
    the result is deterministic.  It is verified faithful, idempotent
    and irreducible before being returned; a failed check refutes a
    guarantee and aborts loudly.
    """
    if r.size <= 2:
        raise HypothesesNotMet("need more than two ring elements")
    if not structure(r).additively_idempotent:
        raise HypothesesNotMet("ring addition is not idempotent")
    if not is_simple(r):
        raise HypothesesNotMet("ring is not simple")
    reg = regular_module(r)
    best = None
    for part in quotient_congruences(reg):
        q = quotient_module(reg, part)
        if not is_faithful(q):
            continue
        key = (q.size, *_canonical_module(q.madd, q.action))
        if best is None or key < best:
            best = key
    if best is None:
        raise RefutationError(
            "no faithful quotient of the additive structure",
            {"add": r.add, "mul": r.mul})
    _, action, madd = best
    result = RSemimodule(r, madd, action)
    flags = irreducibility(result)
    if not (is_faithful(result) and is_idempotent(result) and flags["irreducible"]):
        raise RefutationError(
            "smallest faithful module misses a guaranteed property",
            {"add": r.add, "mul": r.mul, "madd": madd, "action": action,
             "flags": flags})
    return result


# ---------------------------------------------------------------------------
# density


def density_witness(m: RSemimodule, a: int, target: int) -> int:
    """The ring element acting as x -> target below a and as the top of
    the module elsewhere.

    The module must be idempotent and irreducible over a simple
    additively idempotent ring with more than two elements, and the
    target must fall under one of the two guarantees: the least module
    element while the greatest ring element is not left absorbing, or a
    minimal element joining nothing non-top up to the top while every
    ring element fixes the top.  Under those hypotheses the witness is
    guaranteed and unique, so absence is a refutation, not a miss.
    """
    st = structure(m.ring)
    if m.ring.size <= 2:
        raise HypothesesNotMet("need more than two ring elements")
    if not st.additively_idempotent:
        raise HypothesesNotMet("ring addition is not idempotent")
    if not is_simple(m.ring):
        raise HypothesesNotMet("ring is not simple")
    if not is_idempotent(m):
        raise HypothesesNotMet("module addition is not idempotent")
    sl = m.module_semilattice
    if not (0 <= a < sl.size and 0 <= target < sl.size):
        raise IndexError(f"({a},{target}) outside carrier 0..{sl.size - 1}")
    top = sl.top
    if a == top:
        raise HypothesesNotMet("a must lie below the greatest module element")
    if not irreducibility(m)["irreducible"]:
        raise HypothesesNotMet("module is not irreducible")
    zero_route = target == sl.least and not st.greatest_left_absorbing
    star_route = (
        target in sl.minimal_elements
        and all(sl.join[target][x] != top for x in range(sl.size) if x != top)
        and all(row[top] == top for row in m.action)
    )
    if not (zero_route or star_route):
        raise HypothesesNotMet("target is covered by neither density guarantee")
    wanted = tuple(target if sl.leq(x, a) else top for x in range(sl.size))
    for r, row in enumerate(m.action):
        if row == wanted:
            return r
    raise RefutationError(
        "guaranteed density witness is missing",
        {"madd": m.madd, "action": m.action, "a": a, "target": target,
         "wanted": wanted})


# ---------------------------------------------------------------------------
# structure suite and conjecture scan


def structure_suite(m: RSemimodule) -> dict:
    """Structural guarantees for an idempotent sub-irreducible module
    over a simple additively idempotent ring with more than two
    elements, each reported as a boolean.  All must hold; a False value
    contradicts a guarantee."""
    ring = m.ring
    st = structure(ring)
    if ring.size <= 2:
        raise HypothesesNotMet("need more than two ring elements")
    if not st.additively_idempotent:
        raise HypothesesNotMet("ring addition is not idempotent")
    if not is_simple(ring):
        raise HypothesesNotMet("ring is not simple")
    if not is_idempotent(m):
        raise HypothesesNotMet("module addition is not idempotent")
    if not irreducibility(m)["sub_irreducible"]:
        raise HypothesesNotMet("module is not sub-irreducible")
    sl = m.module_semilattice
    top, least = sl.top, sl.least
    n = m.size
    full = tuple(range(n))

    # some element reaches everything; the rest are a fixed top or a
    # fixed neutral
    orbits = [orbit(m, x) for x in range(n)]
    trichotomy = any(o == full for o in orbits)
    for x, o in enumerate(orbits):
        if o == full:
            continue
        if x == top and o == (top,):
            continue
        if least is not None and x == least and o == (least,):
            continue
        trichotomy = False

    fixed_top = all(row[top] == top for row in m.action)
    right_absorbing_matches = st.greatest_right_absorbing == fixed_top

    neutral_transfers = st.additive_neutral is None or least is not None

    zero_when_neither = (
        bool(st.greatest_left_absorbing or st.greatest_right_absorbing)
        or st.zero is not None
    )

    allowed = {top} if least is None else {top, least}
    confined = all(
        set(s) <= allowed for s in subsemimodules(m) if len(s) < n
    )

    rsl = ring.additive_semilattice
    act = m.action
    monotone = all(
        sl.leq(act[t][x], act[t][y])
        for t in range(ring.size)
        for x in range(n)
        for y in range(n)
        if sl.leq(x, y)
    ) and all(
        sl.leq(act[t][x], act[u][x])
        for t in range(ring.size)
        for u in range(ring.size)
        if rsl.leq(t, u)
        for x in range(n)
    )

    return {
        "orbit_trichotomy": trichotomy,
        "right_absorbing_matches_fixed_top": right_absorbing_matches,
        "neutral_transfers": neutral_transfers,
        "zero_when_neither_absorbs": zero_when_neither,
        "proper_submodules_confined": confined,
        "monotone": monotone,
    }


def conjecture_counterexamples(r: FiniteSemiring, max_module_size: int = 4):
    """Idempotent modules over r on which sub- and quotient-
    irreducibility disagree.  Empty on everything tested so far; a
    nonempty result refutes an open conjecture and deserves attention,
    not suppression."""
    from .search import action_homs

    out = []
    for k in range(1, max_module_size + 1):
        for msl in enumerate_semilattices(k):
            for h in action_homs(r, msl):
                m = RSemimodule(r, msl.join, h)
                flags = irreducibility(m)
                if flags["sub_irreducible"] != flags["quotient_irreducible"]:
                    out.append(m)
    return out
