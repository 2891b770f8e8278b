"""Command-line front end.

check        verify a .sr file, classify it, and round-trip the theorem
enumerate    isomorph-free catalogue of simple additively idempotent semirings
examples     regenerate the reference tables and byte-compare them
construct    build a named construction, verify it, and write a .sr file
embed        smallest faithful module and morphism realization as JSON
conjectures  run both experimental suites and persist the findings
congruences  list the congruence lattice of a .sr file

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import os
import sys
from collections import Counter

from .characterize import (
    BoxConstructionSpec,
    check_conditions,
    construct_box,
    recognize_box,
    theorem_roundtrip,
)
from .errors import (
    CapExceeded,
    HypothesesNotMet,
    InvalidStructure,
    ParseError,
    RefutationError,
)
from .fileio import read_semiring_tables, report_json, write_semiring_tables
from .morphism import enumerate_morphisms, zero_threshold_map
from .reference_tables import SECTIONS, compare_all
from .semilattice import as_lattice, chain, diamond, flat_top, vee
from .semimodule import (
    conjecture_counterexamples,
    semimodule_star,
    smallest_faithful,
)
from .semiring import (
    all_congruences,
    closure_semiring,
    group_flat_semiring,
    is_simple,
    rees_sandwich,
    semiring,
    structure,
    verify_axioms,
)
from .search import enumerate_semirings, enumerate_semirings_parallel

CASE_TAGS = (
    "neither",
    "right-not-left",
    "left-not-right",
    "absorbing-star",
    "absorbing-nostar",
    "not-applicable",
)


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _case_tag(r) -> str:
    st = structure(r)
    if st.base_case == "absorbing":
        star, _ = semimodule_star(smallest_faithful(r))
        return "absorbing-star" if star else "absorbing-nostar"
    return st.base_case


def _parse_shape(spec: str):
    if spec == "diamond":
        return diamond()
    if spec == "vee":
        return vee()
    kind, sep, num = spec.partition(":")
    if sep:
        try:
            n = int(num)
        except ValueError:
            raise InvalidStructure(f"bad size in shape {spec!r}")
        if n < 1:
            raise InvalidStructure(f"shape size must be positive: {spec!r}")
        if kind == "chain":
            return chain(n)
        if kind == "flat":
            return flat_top(n)
    raise InvalidStructure(
        f"unknown shape {spec!r}; use chain:N, flat:N, diamond, or vee"
    )


def _parse_rows(spec: str, what: str):
    rows = []
    for part in spec.split(";"):
        try:
            rows.append(tuple(int(tok) for tok in part.replace(",", " ").split()))
        except ValueError:
            raise InvalidStructure(f"bad {what} {spec!r}")
    if not rows or not all(rows):
        raise InvalidStructure(f"bad {what} {spec!r}")
    return tuple(rows)


_KLEIN = ((0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0))


def _parse_group(spec: str, n: int):
    if spec == "trivial":
        return (tuple(range(n)),)
    if spec == "cyclic":
        return tuple(tuple((i + r) % n for i in range(n)) for r in range(n))
    if spec == "klein":
        if n != 4:
            raise InvalidStructure("klein acts freely on 4 atoms")
        return _KLEIN
    return _parse_rows(spec, "permutation list")


def _parse_group_table(spec: str):
    if spec == "klein":
        return _KLEIN
    kind, sep, num = spec.partition(":")
    if kind == "cyclic" and sep:
        try:
            n = int(num)
        except ValueError:
            raise InvalidStructure(f"bad group size in {spec!r}")
        if n < 1:
            raise InvalidStructure("group order must be positive")
        return tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return _parse_rows(spec, "group table")


def _flat(table) -> str:
    return ";".join(",".join(str(v) for v in row) for row in table)


def _print_bool(name, value) -> None:
    print(f"{name}: {'true' if value else 'false'}")


# ---------------------------------------------------------------------------
# subcommands


def _cmd_check(args) -> int:
    add, mul = read_semiring_tables(args.file)
    print(f"size: {len(add)}")
    violations = verify_axioms(add, mul)
    if violations:
        print("axioms: fail")
        for name, witness in violations[:5]:
            print(f"  {name} at {witness}")
        print("verdict: fail")
        return 1
    print("axioms: ok")
    r = semiring(add, mul)
    st = structure(r)
    simple = is_simple(r)
    _print_bool("additively idempotent", st.additively_idempotent)
    _print_bool("simple", simple)
    if simple and st.additively_idempotent and r.size > 2:
        out = theorem_roundtrip(r)
        print(f"case: {out['case']}")
        rep = out["conditions"]
        if rep is not None:
            print(
                "conditions: "
                + " ".join(
                    f"{k}={'true' if v else 'false'}"
                    for k, v in sorted(rep.holds.items())
                )
            )
        print(f"roundtrip: {'pass' if out['verdict'] else 'fail'}")
        if not out["verdict"]:
            print("verdict: fail")
            return 1
    else:
        print(f"case: {st.base_case}")
    print("verdict: pass")
    return 0


def _cmd_enumerate(args) -> int:
    if args.max_size < 1:
        raise InvalidStructure("--max-size must be at least 1")
    if args.jobs > 1:
        pairs = enumerate_semirings_parallel(args.max_size, args.jobs)
    else:
        pairs = enumerate_semirings(args.max_size)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
    counter: Counter = Counter()
    total = 0
    for r, _ in pairs:
        tag = _case_tag(r)
        if args.case and tag != args.case:
            continue
        total += 1
        print(f"size={r.size} case={tag} add={_flat(r.add)} mul={_flat(r.mul)}")
        if args.out:
            name = f"s{r.size}_{counter[r.size]:03d}.sr"
            counter[r.size] += 1
            write_semiring_tables(os.path.join(args.out, name), r.add, r.mul)
    print(f"total={total}")
    return 0


def _cmd_examples(args) -> int:
    failed = dict(compare_all())
    for section in SECTIONS:
        diff = failed.get(section)
        if diff is None:
            print(f"{section}: ok")
        else:
            line, col, got, want = diff
            print(
                f"{section}: mismatch at line {line} cell {col}: "
                f"got {got!r} want {want!r}"
            )
    return 1 if failed else 0


def _construct_zero(args):
    sl = _parse_shape(args.on)
    lat = as_lattice(sl)
    gens = [
        zero_threshold_map(lat, a, b)
        for a in range(sl.size)
        for b in range(sl.size)
    ]
    ring, ms = closure_semiring(sl, gens)
    st = structure(ring)
    ok = st.additively_idempotent and st.zero is not None and is_simple(ring)
    print(f"zero element: {st.zero}")
    return ring, ms, ok


def _construct_morphisms(args, cls, which):
    sl = _parse_shape(args.on)
    ring, ms = closure_semiring(sl, enumerate_morphisms(sl, cls))
    rep = check_conditions(sl, ms, which=which)
    print(
        "conditions: "
        + " ".join(
            f"{k}={'true' if v else 'false'}" for k, v in sorted(rep.holds.items())
        )
    )
    return ring, ms, rep.all_hold() and is_simple(ring)


def _construct_box(args):
    spec = BoxConstructionSpec(
        left=_parse_shape(args.left),
        n=args.atoms,
        group=_parse_group(args.group, args.atoms),
    )
    out = construct_box(spec)
    _print_bool("module verified without bounded-join witness", out["without_star_verified"])
    return out["ring"], out["morphisms"], True


def _construct_flatgroup(args):
    ring = group_flat_semiring(_parse_group_table(args.group))
    return ring, None, is_simple(ring)


def _parse_pattern(spec: str):
    rows = []
    for part in spec.split(";"):
        part = part.replace(",", "").replace(" ", "")
        if not part or any(c not in "01" for c in part):
            raise InvalidStructure(f"bad pattern {spec!r}; want rows of 0/1 digits")
        rows.append(tuple(int(c) for c in part))
    return tuple(rows)


def _construct_sandwich(args):
    pattern = _parse_pattern(args.pattern)
    ring = rees_sandwich(len(pattern[0]), len(pattern), pattern)
    return ring, None, is_simple(ring)


def _cmd_construct(args) -> int:
    build = {
        "zero": _construct_zero,
        "res1": lambda a: _construct_morphisms(a, "res1", (6, 7, 8)),
        "jm": lambda a: _construct_morphisms(a, "jm", (3, 4, 5)),
        "jm1": lambda a: _construct_morphisms(a, "jm1", (1, 2)),
        "box": _construct_box,
        "flatgroup": _construct_flatgroup,
        "sandwich": _construct_sandwich,
    }[args.kind]
    ring, ms, ok = build(args)
    st = structure(ring)
    print(f"size: {ring.size}")
    _print_bool("additively idempotent", st.additively_idempotent)
    _print_bool("simple", is_simple(ring))
    if st.additively_idempotent and ring.size > 2:
        print(f"case: {_case_tag(ring)}")
    if ms is not None:
        print("morphisms:")
        for f in ms:
            print("  " + " ".join(str(v) for v in f))
    path = args.out or f"{args.kind}.sr"
    write_semiring_tables(path, ring.add, ring.mul)
    print(f"wrote {path}")
    _print_bool("verified", ok)
    return 0 if ok else 1


def _cmd_embed(args) -> int:
    add, mul = read_semiring_tables(args.file)
    violations = verify_axioms(add, mul)
    if violations:
        print(f"hypotheses not met: not a semiring: {violations[0]}", file=sys.stderr)
        return 1
    r = semiring(add, mul)
    out = theorem_roundtrip(r)
    rep = out["conditions"]
    payload = {
        "case": out["case"],
        "conditions": None
        if rep is None
        else {
            "holds": {str(k): v for k, v in sorted(rep.holds.items())},
            "witnesses": {str(k): _jsonable(v) for k, v in sorted(rep.witnesses.items())},
        },
        "semilattice": _jsonable(out["semilattice"].join),
        "realization": _jsonable(out["realization"]),
        "verdict": out["verdict"],
        "witnesses": _jsonable(out["witnesses"]),
    }
    sys.stdout.write(report_json(payload))
    return 0 if out["verdict"] else 1


def _cmd_conjectures(args) -> int:
    if args.max_size < 3:
        raise InvalidStructure("--max-size must be at least 3")
    module_findings = []
    recognition_findings = []
    checked = 0
    for r, _ in enumerate_semirings(args.max_size):
        checked += 1
        for m in conjecture_counterexamples(r, max_module_size=args.module_cap):
            module_findings.append(
                {
                    "ring_add": _jsonable(r.add),
                    "ring_mul": _jsonable(r.mul),
                    "module_add": _jsonable(m.madd),
                    "action": _jsonable(m.action),
                }
            )
        if r.size > 2 and _case_tag(r) == "absorbing-nostar":
            module_size = smallest_faithful(r).size
            if recognize_box(r, module_size) is None:
                recognition_findings.append(
                    {
                        "ring_add": _jsonable(r.add),
                        "ring_mul": _jsonable(r.mul),
                        "module_size": module_size,
                    }
                )
    findings = {
        "max_size": args.max_size,
        "module_size_cap": args.module_cap,
        "semirings_checked": checked,
        "module_irreducibility_counterexamples": module_findings,
        "construction_recognition_counterexamples": recognition_findings,
    }
    with open(args.findings, "w", encoding="ascii", newline="\n") as fh:
        fh.write(report_json(findings))
    print(f"semirings checked: {checked}")
    print(f"module irreducibility counterexamples: {len(module_findings)}")
    print(f"construction recognition counterexamples: {len(recognition_findings)}")
    print(f"findings: {args.findings}")
    return 0


def _cmd_congruences(args) -> int:
    add, mul = read_semiring_tables(args.file)
    violations = verify_axioms(add, mul)
    if violations:
        print(f"not a semiring: {violations[0]}", file=sys.stderr)
        return 1
    r = semiring(add, mul)
    congs = sorted(all_congruences(r), key=lambda p: (-len(set(p)), p))
    print(f"size: {r.size}")
    print(f"congruences: {len(congs)}")
    for part in congs:
        blocks: dict[int, list[int]] = {}
        for x, c in enumerate(part):
            blocks.setdefault(c, []).append(x)
        print(
            "  "
            + " ".join(
                "[" + " ".join(str(x) for x in blocks[c]) + "]"
                for c in sorted(blocks)
            )
        )
    _print_bool("simple", len(congs) <= 2)
    return 0


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semiring-forge",
        description="finite simple additively idempotent semirings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify and classify a .sr file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("enumerate", help="catalogue up to a size bound")
    p.add_argument("--max-size", type=int, default=5)
    p.add_argument("--case", choices=CASE_TAGS)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("examples", help="regenerate and compare reference tables")
    p.set_defaults(func=_cmd_examples)

    p = sub.add_parser("construct", help="build and verify a construction")
    kinds = sub_construct = p.add_subparsers(dest="kind", required=True)
    for kind in ("zero", "res1", "jm", "jm1"):
        q = kinds.add_parser(kind)
        q.add_argument("--on", required=True, help="chain:N, flat:N, diamond, or vee")
        q.add_argument("--out")
        q.set_defaults(func=_cmd_construct)
    q = sub_construct.add_parser("box")
    q.add_argument("--left", required=True)
    q.add_argument("--atoms", type=int, required=True)
    q.add_argument("--group", default="trivial", help="trivial, cyclic, klein, or perm rows")
    q.add_argument("--out")
    q.set_defaults(func=_cmd_construct)
    q = sub_construct.add_parser("flatgroup")
    q.add_argument("--group", required=True, help="cyclic:N, klein, or a group table")
    q.add_argument("--out")
    q.set_defaults(func=_cmd_construct)
    q = sub_construct.add_parser("sandwich")
    q.add_argument("--pattern", required=True, help="0/1 rows separated by ';'")
    q.add_argument("--out")
    q.set_defaults(func=_cmd_construct)

    p = sub.add_parser("embed", help="smallest faithful module as JSON")
    p.add_argument("file")
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("conjectures", help="run both experimental suites")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--module-cap", type=int, default=4)
    p.add_argument("--findings", default="conjecture_findings.json")
    p.set_defaults(func=_cmd_conjectures)

    p = sub.add_parser("congruences", help="list the congruence lattice")
    p.add_argument("file")
    p.set_defaults(func=_cmd_congruences)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except InvalidStructure as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2
    except HypothesesNotMet as exc:
        print(f"hypotheses not met: {exc}", file=sys.stderr)
        return 1
    except (RefutationError, CapExceeded) as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
