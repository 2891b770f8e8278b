"""Reference example tables and their byte-exact rendering.

Each section lists every morphism semiring of one form over its
defining chain, built by closing condition-satisfying sets between the
forced generators and the full morphism class.  The renderer prints a
map table (carrier values per morphism) and the addition and
composition tables with elements named a, b, c, ... in sorted carrier
order; the golden files hold the expected bytes.
"""

from __future__ import annotations

from collections import Counter
from importlib.resources import files

from .characterize import check_conditions
from .morphism import constant_map, enumerate_morphisms, threshold_map
from .semiring import closure_semiring

_LETTERS = "abcdefghijklmnopqrstuvwxyz"

SECTIONS = (
    "right-not-left-3chain",
    "right-not-left-4chain",
    "left-not-right-2chain",
    "absorbing-3chain",
)


def _closed_sets_between(sl, base, pool):
    """All sup-and-composition-closed sets containing the closure of
    base inside pool, sorted by size then lexicographically."""
    _, start = closure_semiring(sl, base)
    seen = {frozenset(start)}
    frontier = [frozenset(start)]
    while frontier:
        grown = []
        for cur in frontier:
            for f in pool - cur:
                nxt = frozenset(closure_semiring(sl, set(cur) | {f})[1])
                if nxt not in seen:
                    seen.add(nxt)
                    grown.append(nxt)
        frontier = grown
    return sorted((tuple(sorted(s)) for s in seen), key=lambda s: (len(s), s))


def _condition_semirings(sl, base, pool, which):
    out = []
    for ms in _closed_sets_between(sl, base, set(pool)):
        if check_conditions(sl, ms, which=which).all_hold():
            out.append(closure_semiring(sl, ms))
    return out


def right_not_left_semirings(sl):
    base = [threshold_map(sl, a, sl.least) for a in range(sl.size) if a != sl.top]
    return _condition_semirings(sl, base, enumerate_morphisms(sl, "res1"), (6, 7, 8))


def left_not_right_semirings(sl):
    base = [constant_map(sl, a) for a in range(sl.size)]
    return _condition_semirings(sl, base, enumerate_morphisms(sl, "jm"), (3, 4, 5))


def absorbing_semirings(sl):
    base = [
        threshold_map(sl, a, b)
        for a in range(sl.size)
        if a != sl.top
        for b in range(sl.size)
    ]
    return _condition_semirings(sl, base, enumerate_morphisms(sl, "jm1"), (1, 2))


def map_table(ms, carrier_size) -> str:
    lines = ["x | " + " ".join(str(x) for x in range(carrier_size))]
    for name, f in zip(_LETTERS, ms):
        lines.append(f"{name} | " + " ".join(str(v) for v in f))
    return "\n".join(lines)


def op_table(symbol, table) -> str:
    names = _LETTERS[: len(table)]
    lines = [f"{symbol} | " + " ".join(names)]
    for name, row in zip(names, table):
        lines.append(f"{name} | " + " ".join(_LETTERS[i] for i in row))
    return "\n".join(lines)


def _labels(sizes):
    total = Counter(sizes)
    used = Counter()
    out = []
    for s in sizes:
        if total[s] == 1:
            out.append(f"R{s}")
        else:
            out.append(f"R{s}{_LETTERS[used[s]]}")
            used[s] += 1
    return out


def section_text(section: str) -> str:
    from .semilattice import chain

    if section == "right-not-left-3chain":
        (ring, ms), = right_not_left_semirings(chain(3))
        blocks = [map_table(ms, 3), op_table("v", ring.add), op_table("o", ring.mul)]
    elif section == "right-not-left-4chain":
        entries = right_not_left_semirings(chain(4))
        labels = _labels([r.size for r, _ in entries])
        blocks = [
            f"{label}\n" + map_table(ms, 4)
            for label, (_, ms) in zip(labels, entries)
        ]
        ring, _ = entries[0]
        blocks.append(f"{labels[0]}\n" + op_table("v", ring.add))
        blocks.append(op_table("o", ring.mul))
    elif section == "left-not-right-2chain":
        (ring, ms), = left_not_right_semirings(chain(2))
        blocks = [map_table(ms, 2), op_table("v", ring.add), op_table("o", ring.mul)]
    elif section == "absorbing-3chain":
        blocks = []
        for ring, ms in absorbing_semirings(chain(3)):
            blocks += [map_table(ms, 3), op_table("v", ring.add), op_table("o", ring.mul)]
    else:
        raise ValueError(f"unknown section {section!r}")
    return "\n\n".join(blocks) + "\n"


def golden_text(section: str) -> str:
    fname = section.replace("-", "_") + ".txt"
    return (files(__package__) / "golden" / fname).read_text(encoding="ascii")


def first_difference(got: str, want: str):
    """First differing cell between two renderings, as (line, column,
    got_cell, want_cell) with 1-based positions, or None when equal.
    A whitespace-only difference reports position (0, 0)."""
    if got == want:
        return None
    glines = got.splitlines()
    wlines = want.splitlines()
    for i in range(max(len(glines), len(wlines))):
        g = glines[i].split() if i < len(glines) else []
        w = wlines[i].split() if i < len(wlines) else []
        for j in range(max(len(g), len(w))):
            gc = g[j] if j < len(g) else ""
            wc = w[j] if j < len(w) else ""
            if gc != wc:
                return (i + 1, j + 1, gc, wc)
    return (0, 0, "", "")


def compare_all():
    """Regenerate every section and compare against the golden bytes;
    returns a list of (section, first_difference) for the mismatches."""
    out = []
    for section in SECTIONS:
        diff = first_difference(section_text(section), golden_text(section))
        if diff is not None:
            out.append((section, diff))
    return out
