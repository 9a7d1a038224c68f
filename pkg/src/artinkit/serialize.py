"""JSON documents for graphs, automata, reduction instances, braids and verdicts.

Every loader validates against a schema that rejects unknown fields. Dumps
use sorted keys and two-space indentation, so loading a dumped document and
dumping it again reproduces the same bytes.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import jsonschema

from .automata import EPS, Nfa, NormalizedNfa
from .braid import BraidWord
from .classifier import ForbiddenWitness, Verdict
from .graph import LabeledGraph
from .reduction import Ambient, Kind, ReductionInstance
from .words import Alphabet, Word

_NAME = {"type": "string", "minLength": 1}
_NAMES = {"type": "array", "items": _NAME}
_LETTER_WORD = {"type": "array", "items": _NAME}
_BRAID_WORD = {"type": "array", "items": {"type": "integer", "not": {"const": 0}}}

GRAPH_SCHEMA = {
    "type": "object",
    "properties": {
        "vertices": _NAMES,
        "edges": {
            "type": "array",
            "items": {
                "type": "array",
                "prefixItems": [_NAME, _NAME, {"type": "integer", "minimum": 2}],
                "minItems": 3,
                "maxItems": 3,
            },
        },
    },
    "required": ["vertices", "edges"],
    "additionalProperties": False,
}

NFA_SCHEMA = {
    "type": "object",
    "properties": {
        "alphabet": _NAMES,
        "states": {**_NAMES, "minItems": 1},
        "initial": _NAME,
        "finals": _NAMES,
        "transitions": {
            "type": "array",
            "items": {
                "type": "array",
                "items": _NAME,
                "minItems": 3,
                "maxItems": 3,
            },
        },
    },
    "required": ["alphabet", "states", "initial", "finals", "transitions"],
    "additionalProperties": False,
}

AMBIENT_SCHEMA = {
    "oneOf": [
        {
            "type": "object",
            "properties": {
                "tag": {"const": "product"},
                "group": {"enum": ["trivial", "free", "p4"]},
                "alphabet": _NAMES,
            },
            "required": ["tag", "group", "alphabet"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {"tag": {"const": "p4"}, "alphabet": _NAMES},
            "required": ["tag", "alphabet"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {"tag": {"const": "b4"}, "strands": {"const": 4}},
            "required": ["tag", "strands"],
            "additionalProperties": False,
        },
    ]
}

INSTANCE_SCHEMA = {
    "type": "object",
    "properties": {
        "ambient": AMBIENT_SCHEMA,
        "generators": {"type": "array", "items": {"anyOf": [_LETTER_WORD, _BRAID_WORD]}},
        "target": {"anyOf": [_LETTER_WORD, _BRAID_WORD]},
        "kind": {"enum": [k.value for k in Kind]},
        "witness": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "power": {"type": "integer", "minimum": 1},
    },
    "required": ["ambient", "generators", "target", "kind"],
    "additionalProperties": False,
}

BRAID_SCHEMA = {
    "type": "object",
    "properties": {"strands": {"type": "integer", "minimum": 2}, "word": _BRAID_WORD},
    "required": ["strands", "word"],
    "additionalProperties": False,
}


class FormatError(ValueError):
    """A document does not match its schema or violates a type invariant."""


def _validate(doc: Any, schema: dict, what: str) -> None:
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise FormatError(f"invalid {what} at {where}: {exc.message}") from None


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def read_json(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: not valid JSON ({exc.msg})") from None


# graphs

def graph_to_json(g: LabeledGraph) -> dict:
    return {"vertices": list(g.vertices.symbols), "edges": [list(e) for e in g.edge_list()]}


def graph_from_json(doc: Any) -> LabeledGraph:
    _validate(doc, GRAPH_SCHEMA, "graph")
    try:
        return LabeledGraph.from_edges(doc["vertices"], [tuple(e) for e in doc["edges"]])
    except ValueError as exc:
        raise FormatError(f"invalid graph: {exc}") from None


# automata

def _letter(alpha: Alphabet, token: str) -> int:
    return EPS if token == "eps" else alpha.letter(token)


def nfa_to_json(a: Nfa) -> dict:
    def label(x: int) -> str:
        return "eps" if x == EPS else a.alphabet.name(x)

    return {
        "alphabet": list(a.alphabet.symbols),
        "states": list(a.states),
        "initial": a.initial,
        "finals": list(a.finals),
        "transitions": [[p, label(x), q] for p, x, q in a.transitions],
    }


def nfa_from_json(doc: Any, normalized: bool = False) -> Nfa:
    """Load an automaton; with ``normalized`` the result is a :class:`NormalizedNfa`
    and the document must already satisfy its invariants."""
    _validate(doc, NFA_SCHEMA, "automaton")
    try:
        alpha = Alphabet(tuple(doc["alphabet"]))
        trans = tuple((p, _letter(alpha, x), q) for p, x, q in doc["transitions"])
        cls = NormalizedNfa if normalized else Nfa
        return cls(alpha, tuple(doc["states"]), trans, doc["initial"], tuple(doc["finals"]))
    except ValueError as exc:
        raise FormatError(f"invalid automaton: {exc}") from None


# reduction instances

def ambient_to_json(amb: Ambient) -> dict:
    if amb.tag == "product":
        return {"tag": "product", "group": amb.group, "alphabet": list(amb.alphabet.symbols)}
    if amb.tag == "p4":
        return {"tag": "p4", "alphabet": list(amb.alphabet.symbols)}
    return {"tag": "b4", "strands": amb.strands}


def _word_to_json(amb: Ambient, w: Word) -> list:
    return list(w) if amb.tag == "b4" else amb.alphabet.tokens(w)


def _word_from_json(amb: Ambient, w: list) -> Word:
    if amb.tag == "b4":
        if not all(isinstance(x, int) for x in w):
            raise FormatError("braid words are lists of signed integers")
        return tuple(w)
    if not all(isinstance(x, str) for x in w):
        raise FormatError("words are lists of letters such as \"a\" or \"a^-1\"")
    return amb.alphabet.parse(w)


def instance_to_json(inst: ReductionInstance) -> dict:
    amb = inst.ambient
    doc = {
        "ambient": ambient_to_json(amb),
        "generators": [_word_to_json(amb, g) for g in inst.generators],
        "target": _word_to_json(amb, inst.target),
        "kind": inst.kind.value,
    }
    if inst.witness is not None:
        doc["witness"] = list(inst.witness)
        if inst.kind is Kind.INTERSECTION:
            doc["power"] = inst.power
    return doc


def instance_from_json(doc: Any) -> ReductionInstance:
    _validate(doc, INSTANCE_SCHEMA, "instance")
    try:
        a = doc["ambient"]
        alpha = Alphabet(tuple(a["alphabet"])) if "alphabet" in a else None
        amb = Ambient(a["tag"], alpha, a.get("group"), a.get("strands", 4))
        return ReductionInstance(
            amb,
            tuple(_word_from_json(amb, g) for g in doc["generators"]),
            _word_from_json(amb, doc["target"]),
            Kind(doc["kind"]),
            tuple(doc["witness"]) if "witness" in doc else None,
            doc.get("power", 1),
        )
    except ValueError as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"invalid instance: {exc}") from exc


# braids

def braid_to_json(b: BraidWord) -> dict:
    return {"strands": b.n, "word": list(b.letters)}


def braid_from_json(doc: Any) -> BraidWord:
    _validate(doc, BRAID_SCHEMA, "braid")
    try:
        return BraidWord(doc["strands"], tuple(doc["word"]))
    except ValueError as exc:
        raise FormatError(f"invalid braid: {exc}") from None


# verdicts

def _witness_to_json(g: LabeledGraph, w: ForbiddenWitness) -> dict:
    return {"pattern": w.pattern.value, "vertices": list(w.names(g)), "labels": list(w.labels)}


def verdict_to_json(g: LabeledGraph, v: Verdict) -> dict:
    return {
        "statuses": {p.value: s.value for p, s in v.statuses.items()},
        "witness": None if v.witness is None else _witness_to_json(g, v.witness),
        "witnesses": [_witness_to_json(g, w) for w in v.witnesses],
        "justification": list(v.justification),
    }
