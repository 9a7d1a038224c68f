"""Command-line entry point: ``artinkit <command> ...``.

Exit codes: 0 when the command succeeds or the queried property holds, 1 when
it does not (nontrivial word, non-member, nothing found), 2 on malformed input,
3 when ``compile --witness-word`` fails to verify, 4 when a search hits the
``ARTINKIT_MAX_STATES`` cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

from . import kernels
from .automata import Nfa, NormalizedNfa, benois_member, member_witness_path, normalize
from .braid import (
    BraidWord,
    droms_commutation_table,
    garside_normal_form,
    is_pure,
    permutation_of,
)
from .classifier import Problem, Status, classify
from .graph import P4
from .raag import commutes, p4_conjugate_vertex, p4_star_embedding, raag_canonical_form
from .reduction import (
    Found,
    SearchLimitExceeded,
    WitnessError,
    bounded_member,
    build_delta,
    compile_to_b4,
    extract_witness,
    instantiate_in_p4,
    make_intersection_instance,
)
from .serialize import (
    FormatError,
    dumps,
    graph_from_json,
    instance_from_json,
    instance_to_json,
    nfa_from_json,
    read_json,
    verdict_to_json,
)

SHORT = {
    Problem.SUBMONOID: "submonoid",
    Problem.RATIONAL: "rational subset",
    Problem.FIXED_TARGET: "fixed-target",
    Problem.INTERSECTION: "semigroup intersection",
    Problem.IDENTITY: "identity",
    Problem.GROUP: "group",
    Problem.SUBGROUP: "subgroup",
}


class InputError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_classify(args) -> int:
    g = graph_from_json(read_json(args.graph))
    v = classify(g)
    if args.json:
        _emit(dumps(verdict_to_json(g, v)), args.output)
        return 0
    if v.decidable:
        lines = ["all decidable"]
    else:
        parts = []
        for status in (Status.UNDECIDABLE, Status.OPEN):
            probs = v.by_status(status)
            if probs:
                parts.append(f"{status.value}: " + ", ".join(SHORT[p] for p in probs))
        parts.append("witness: " + v.witness.describe())
        lines = ["; ".join(parts)]
        lines.append(f"  realised on {' '.join(v.witness.names(g))}")
    lines += [f"  {note}" for note in v.justification]
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _group_option(text: str, rank: int) -> str:
    if text in ("trivial", "p4"):
        return text
    if text.startswith("free:"):
        try:
            k = int(text[5:])
        except ValueError:
            raise InputError(f"bad group {text!r}") from None
        if k != rank:
            raise InputError(f"--group {text} but the automaton has {rank} generators")
        return "free"
    raise InputError(f"unknown group {text!r}; use trivial, free:k or p4")


def cmd_compile(args) -> int:
    raw = nfa_from_json(read_json(args.nfa))
    group = _group_option(args.group, len(raw.alphabet))
    if len(raw.finals) == 1 and raw.finals[0] != raw.initial:
        a = NormalizedNfa(raw.alphabet, raw.states, raw.transitions, raw.initial, raw.finals)
    else:
        a = normalize(raw)
    inst = build_delta(a, group)
    if args.witness_word is not None:
        word = a.alphabet.parse(args.witness_word)
        path = a.find_path(word)
        if path is None:
            print(f"witness word {a.alphabet.format(word)} is not accepted", file=sys.stderr)
            return 3
        try:
            inst = replace(inst, witness=extract_witness(a, path, group))
        except WitnessError as exc:
            print(f"witness verification failed: {exc}", file=sys.stderr)
            return 3
    if args.target in ("p4", "b4"):
        try:
            inst = instantiate_in_p4(inst)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    if args.target == "b4":
        inst = compile_to_b4(inst)
    if args.intersection:
        inst = make_intersection_instance(inst)
    _emit(dumps(instance_to_json(inst)), args.output)
    return 0


def _parse_braid(text: str, n: int) -> BraidWord:
    text = text.strip()
    if text.startswith("["):
        letters = json.loads(text)
    else:
        letters = [int(t) for t in text.replace(",", " ").split()]
    return BraidWord(n, tuple(letters))


def cmd_wp(args) -> int:
    if args.kind == "braid":
        try:
            n = int(args.source)
        except ValueError:
            raise InputError("wp braid expects the strand count") from None
        b = _parse_braid(args.word, n)
        nf = garside_normal_form(b)
        trivial = nf.is_identity
        pure = is_pure(b)
        print(f"{'trivial' if trivial else 'nontrivial'}; {'pure' if pure else 'not pure'}")
        print(f"  normal form: Δ^{nf.infimum} · {len(nf.factors)} simple factor(s)")
        print(f"  permutation: {permutation_of(b)}")
        return 0 if trivial else 1
    g = graph_from_json(read_json(args.source))
    if not g.is_right_angled:
        raise InputError("wp raag needs a graph with all labels 2")
    w = g.vertices.parse(args.word)
    nf = raag_canonical_form(g, w)
    print("trivial" if not nf else "nontrivial")
    print(f"  canonical form: {g.vertices.format(nf)}")
    return 0 if not nf else 1


def cmd_benois(args) -> int:
    a = nfa_from_json(read_json(args.nfa))
    w = a.alphabet.parse(args.word)
    member = benois_member(a, w)
    print("true" if member else "false")
    if member and args.witness:
        path = member_witness_path(a, w)
        print("  path: " + "; ".join(a.describe(t) for t in path))
    return 0 if member else 1


def cmd_search(args) -> int:
    inst = instance_from_json(read_json(args.instance))
    try:
        result = bounded_member(inst, args.depth)
    except SearchLimitExceeded as exc:
        print(f"search aborted: {exc}", file=sys.stderr)
        return 4
    if isinstance(result, Found):
        extra = f" (target^{result.power})" if result.power != 1 else ""
        print(f"found at depth {result.depth}: {list(result.witness)}{extra}")
        return 0
    print(f"not found within depth {result.depth}")
    return 1


def verify_embeddings() -> tuple[bool, list[str]]:
    lines = []
    table = droms_commutation_table()
    adjacent = {("a", "b"), ("b", "c"), ("c", "d")}
    good = sum(table[pair] == (pair in adjacent) for pair in table)
    lines.append(f"{good}/{len(table)} commutator checks match P₄ adjacency")
    ok = good == len(table)

    bad = []
    for m in range(-4, 10):
        for n in range(m + 1, 10):
            want = n - m == 1
            if commutes(P4, p4_conjugate_vertex(m), p4_conjugate_vertex(n)) != want:
                bad.append((m, n))
    if bad:
        lines.append(f"catalog path checks fail on {len(bad)} pair(s): {bad[:5]}")
    else:
        lines.append("catalog path checks pass")
    ok = ok and not bad

    emb = p4_star_embedding()
    gs = [emb[f"g{i}"] for i in range(1, 5)]
    free = [emb[k] for k in "xyz"]
    pattern_ok = all(
        commutes(P4, gs[i], gs[j]) == (j == i + 1) for i in range(4) for j in range(i + 1, 4)
    )
    pattern_ok &= not any(commutes(P4, u, v) for i, u in enumerate(free) for v in free[i + 1:])
    pattern_ok &= not any(commutes(P4, u, v) for u in gs for v in free)
    lines.append(
        "star embedding commutation pattern " + ("matches" if pattern_ok else "DOES NOT match")
    )
    return ok and pattern_ok, lines


def cmd_verify(args) -> int:
    ok, lines = verify_embeddings()
    print("; ".join(lines))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="artinkit",
        description="Membership problems in Artin, braid and right-angled Artin groups.",
    )
    p.add_argument("--version", action="version", version=f"artinkit 0.1.0 ({kernels.BACKEND} kernels)")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="decidability verdict for an Artin defining graph")
    c.add_argument("graph")
    c.add_argument("--json", action="store_true", help="print the verdict as JSON")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("compile", help="compile an automaton into a membership instance")
    c.add_argument("nfa")
    c.add_argument("--group", default="trivial", help="trivial | free:k | p4")
    c.add_argument("--target", choices=["product", "p4", "b4"], default="product")
    c.add_argument("--witness-word", help="an accepted word, trivial in G, to attach as a witness")
    c.add_argument("--intersection", action="store_true", help="emit the semigroup-intersection form")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_compile)

    c = sub.add_parser("wp", help="word problem in a RAAG or a braid group")
    c.add_argument("kind", choices=["raag", "braid"])
    c.add_argument("source", help="graph file (raag) or strand count (braid)")
    c.add_argument("word", help='"a b a^-1" for RAAGs, "[1,-2,3]" for braids')
    c.set_defaults(func=cmd_wp)

    c = sub.add_parser("benois", help="rational subset membership in a free group")
    c.add_argument("nfa")
    c.add_argument("word", help='a word such as "x y^-1", or "eps"')
    c.add_argument("--witness", action="store_true", help="print an accepting path")
    c.set_defaults(func=cmd_benois)

    c = sub.add_parser("search", help="bounded membership search for a compiled instance")
    c.add_argument("instance")
    c.add_argument("--depth", type=int, default=8)
    c.set_defaults(func=cmd_search)

    c = sub.add_parser("verify-embeddings", help="check the B4 and A(P4) embedding suites")
    c.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, InputError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
