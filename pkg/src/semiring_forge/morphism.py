"""Join-preserving self-maps of a finite semilattice.

A morphism is stored as a plain tuple `img` of length n with img[x] the
image of x; operations that need the order take the semilattice as the
first argument.  Composition reads right to left: compose(f, g) sends x
to f(g(x)), and in every morphism semiring here the product f * g means
exactly compose(f, g).
"""

from __future__ import annotations

from .errors import HypothesesNotMet, InvalidStructure
from .semilattice import BoxProduct, FiniteLattice, FiniteSemilattice


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def is_join_morphism(sl: FiniteSemilattice, img) -> bool:
    n = sl.size
    if len(img) != n or any(not 0 <= v < n for v in img):
        return False
    join = sl.join
    for x in range(n):
        for y in range(x, n):
            if img[join[x][y]] != join[img[x]][img[y]]:
                return False
    return True


def constant_map(sl: FiniteSemilattice, a: int) -> tuple[int, ...]:
    if not 0 <= a < sl.size:
        raise IndexError(a)
    return (a,) * sl.size


def threshold_map(sl: FiniteSemilattice, a: int, b: int) -> tuple[int, ...]:
    """b on the downset of a, the top everywhere else.  Needs a below top."""
    if a == sl.top:
        raise HypothesesNotMet("threshold base must lie strictly below the top")
    top = sl.top
    return tuple(b if sl.leq(x, a) else top for x in range(sl.size))


def zero_threshold_map(lat: FiniteLattice, a: int, b: int) -> tuple[int, ...]:
    """The bottom on the downset of a, b everywhere else."""
    bot = lat.bottom
    return tuple(bot if lat.leq(x, a) else b for x in range(lat.size))


def sup(sl: FiniteSemilattice, f, g) -> tuple[int, ...]:
    join = sl.join
    return tuple(join[a][b] for a, b in zip(f, g))


def compose(f, g) -> tuple[int, ...]:
    """f after g."""
    return tuple(f[x] for x in g)


def leq_pointwise(sl: FiniteSemilattice, f, g) -> bool:
    return all(sl.leq(a, b) for a, b in zip(f, g))


def is_residuated(lat: FiniteLattice, img) -> bool:
    return is_join_morphism(lat.base, img) and img[lat.bottom] == lat.bottom


def residual(lat: FiniteLattice, f) -> tuple[int, ...]:
    """y maps to the largest x with f(x) <= y.

    Defined exactly for residuated maps; the result is a join-morphism
    of the order-reversed lattice.
    """
    if not is_residuated(lat, f):
        raise HypothesesNotMet("residual needs a join-morphism fixing the bottom")
    out = []
    for y in range(lat.size):
        xs = [x for x in range(lat.size) if lat.leq(f[x], y)]
        m = xs[0]
        for x in xs[1:]:
            m = lat.join[m][x]
        out.append(m)
    return tuple(out)


def psi_restrict(lat: FiniteLattice, f, index_map) -> tuple[int, ...]:
    """Restrict a map that only sends the bottom to the bottom onto the
    bottomless carrier, using the index map from remove_bottom."""
    if not is_residuated(lat, f):
        raise HypothesesNotMet("restriction defined for residuated maps")
    b = lat.bottom
    if any(f[x] == b for x in range(lat.size) if x != b):
        raise HypothesesNotMet("map sends a nonbottom element to the bottom")
    return tuple(index_map[f[x]] for x in range(lat.size) if x != b)


def box_map(box: BoxProduct, left: FiniteSemilattice, right: FiniteSemilattice,
            f, g) -> tuple[int, ...]:
    """The glued-product map acting as f on the left and g on the right
    coordinate.  f and g must preserve the respective tops."""
    if f[left.top] != left.top or g[right.top] != right.top:
        raise HypothesesNotMet("glued-product maps must preserve the tops")
    out = []
    for x, y in box.reps:
        out.append(box.classes[f[x]][g[y]])
    return tuple(out)


def unbox_map(box: BoxProduct, left: FiniteSemilattice, right: FiniteSemilattice,
              img):
    """Invert box_map if possible: all (f, g) pairs with box_map == img
    would be overkill, one canonical witness is enough.  Returns (f, g)
    or None.  Search is exhaustive over top-preserving join-morphisms of
    both factors, so keep the factors small."""
    lefts = enumerate_morphisms(left, "jm1")
    rights = enumerate_morphisms(right, "jm1")
    for f in lefts:
        for g in rights:
            if box_map(box, left, right, f, g) == img:
                return f, g
    return None


_CLASSES = ("jm", "jm1", "res", "res1", "res0")


def in_morphism_class(sl: FiniteSemilattice, img, cls: str) -> bool:
    if cls not in _CLASSES:
        raise ValueError(f"unknown morphism class {cls!r}")
    if not is_join_morphism(sl, img):
        return False
    if cls in ("res", "res1", "res0"):
        b = sl.least
        if b is None:
            raise InvalidStructure("residuated classes need a lattice")
        if img[b] != b:
            return False
        if cls == "res0" and any(img[x] == b for x in range(sl.size) if x != b):
            return False
    if cls in ("jm1", "res1") and img[sl.top] != sl.top:
        return False
    return True


def enumerate_morphisms(sl: FiniteSemilattice, cls: str = "jm") -> list[tuple[int, ...]]:
    """All members of a morphism class, sorted by image tuple.

    Images are chosen on the join-irreducible elements and extended by
    joins; candidates failing the morphism law are rejected.
    """
    if cls not in _CLASSES:
        raise ValueError(f"unknown morphism class {cls!r}")
    if cls in ("res", "res1", "res0") and sl.least is None:
        raise InvalidStructure("residuated classes need a lattice")
    n = sl.size
    irr = [x for x in range(n) if sl.is_join_irreducible(x)]
    order = sorted(irr, key=lambda x: len(sl.downset(x)))
    below = {x: [p for p in irr if sl.leq(p, x)] for x in range(n)}
    out = []

    def extend(chosen):
        img = []
        for x in range(n):
            ps = below[x]
            v = chosen[ps[0]]
            for p in ps[1:]:
                v = sl.join[v][chosen[p]]
            img.append(v)
        return tuple(img)

    def rec(i, chosen):
        if i == len(order):
            img = extend(chosen)
            if in_morphism_class(sl, img, cls):
                out.append(img)
            return
        p = order[i]
        for v in range(n):
            ok = True
            for q in order[:i]:
                if sl.leq(q, p) and not sl.leq(chosen[q], v):
                    ok = False
                    break
                if sl.leq(p, q) and not sl.leq(v, chosen[q]):
                    ok = False
                    break
            if ok:
                chosen[p] = v
                rec(i + 1, chosen)
        chosen.pop(p, None)

    rec(0, {})
    return sorted(set(out))
