"""JSON documents for descriptors, fold diagrams and elimination scripts.

Layout (schema_version 1.0)::

    {
      "schema_version": "1.0",
      "document": "blf" | "fold_diagram" | "elimination",
      "payload": {...},          # see the *_to_json functions below
      "reports": {...},          # validation reports, informational
      "provenance": {"tool": "spunblf", "version": ..., "input": {...}}
    }

A fiber is ``{"components": [{"id": str, "genus": int}, ...]}`` or ``null``
when unspecified. Keys are emitted sorted, so documents are byte-stable.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from . import __version__
from .blf import BLFDescriptor, Binding, RoundHandle
from .cerf import Elimination, FoldCircle, FoldDiagram, Move
from .fiber import FiberOp, FiberState
from .surface import TorusKnotParams

SCHEMA_VERSION = "1.0"
DOCUMENT_KINDS = ("blf", "fold_diagram", "elimination")


class SchemaError(ValueError):
    pass


@dataclass(frozen=True)
class DescriptorDocument:
    document: str
    payload: Any
    reports: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)
    schema_version: str = SCHEMA_VERSION


def make_document(payload, reports=None, inputs=None) -> DescriptorDocument:
    if isinstance(payload, BLFDescriptor):
        kind = "blf"
    elif isinstance(payload, FoldDiagram):
        kind = "fold_diagram"
    elif isinstance(payload, Elimination):
        kind = "elimination"
    else:
        raise TypeError(f"cannot wrap {type(payload).__name__}")
    provenance = {"tool": "spunblf", "version": __version__, "input": inputs or {}}
    # normalise to JSON-native values so that parse(emit(doc)) == doc
    return DescriptorDocument(kind, payload, _plain(reports or {}), _plain(provenance))


def _plain(obj):
    return json.loads(json.dumps(obj, sort_keys=True))


# --- to JSON ------------------------------------------------------------------


def fiber_to_json(s: FiberState | None):
    if s is None:
        return None
    return {"components": [{"id": c, "genus": g} for c, g in s.components]}


def op_to_json(op: FiberOp) -> dict:
    return {"kind": op.kind, "operands": list(op.operands), "genus": op.genus, "handle": op.handle}


def round_to_json(r: RoundHandle) -> dict:
    return {
        "index": r.index,
        "winding": r.winding,
        "label": r.label,
        "source": r.source,
        "framing": r.framing,
        "attachment": None if r.attachment is None else [op_to_json(op) for op in r.attachment],
    }


def blf_to_json(d: BLFDescriptor) -> dict:
    return {
        "params": {"p": d.params.p, "q": d.params.q, "k": d.params.k},
        "rounds": [round_to_json(r) for r in d.rounds],
        "regions": [fiber_to_json(s) for s in d.regions],
        "binding": {"fiber": d.binding.fiber, "description": d.binding.description},
    }


def move_to_json(m: Move) -> dict:
    return {"kind": m.kind, "target": list(m.target), "inverse": m.inverse, "component": m.component}


def diagram_to_json(d: FoldDiagram) -> dict:
    return {
        "circles": [
            {"kind": c.kind, "winding": c.winding, "cusps": c.cusps, "swallowtails": c.swallowtails,
             "passes": c.passes, "label": c.label}
            for c in d.circles
        ],
        "regions": [fiber_to_json(s) for s in d.regions],
        "history": [move_to_json(m) for m in d.history],
    }


def elimination_to_json(e: Elimination) -> dict:
    return {
        "initial": diagram_to_json(e.initial),
        "script": [move_to_json(m) for m in e.script],
        "states": [diagram_to_json(s) for s in e.states],
    }


_ENCODERS = {"blf": blf_to_json, "fold_diagram": diagram_to_json, "elimination": elimination_to_json}


def emit(doc: DescriptorDocument) -> str:
    body = {
        "schema_version": doc.schema_version,
        "document": doc.document,
        "payload": _ENCODERS[doc.document](doc.payload),
        "reports": doc.reports,
        "provenance": doc.provenance,
    }
    return json.dumps(body, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# --- from JSON ----------------------------------------------------------------


def fiber_from_json(obj) -> FiberState | None:
    if obj is None:
        return None
    return FiberState(tuple((c["id"], int(c["genus"])) for c in obj["components"]))


def op_from_json(obj) -> FiberOp:
    return FiberOp(obj["kind"], tuple(obj["operands"]), int(obj.get("genus", 0)), obj.get("handle"))


def round_from_json(obj) -> RoundHandle:
    att = obj.get("attachment")
    return RoundHandle(
        int(obj["index"]),
        int(obj["winding"]),
        obj["label"],
        obj.get("source", ""),
        None if att is None else tuple(op_from_json(o) for o in att),
        obj.get("framing"),
    )


def blf_from_json(obj) -> BLFDescriptor:
    p = obj["params"]
    return BLFDescriptor(
        TorusKnotParams(int(p["p"]), int(p["q"]), int(p.get("k", 0))),
        tuple(round_from_json(r) for r in obj["rounds"]),
        tuple(fiber_from_json(s) for s in obj["regions"]),
        Binding(**obj["binding"]),
    )


def move_from_json(obj) -> Move:
    return Move(obj["kind"], tuple(obj["target"]), bool(obj.get("inverse", False)), obj.get("component"))


def diagram_from_json(obj) -> FoldDiagram:
    return FoldDiagram(
        tuple(FoldCircle(**c) for c in obj["circles"]),
        tuple(fiber_from_json(s) for s in obj["regions"]),
        tuple(move_from_json(m) for m in obj.get("history", [])),
    )


def elimination_from_json(obj) -> Elimination:
    return Elimination(
        diagram_from_json(obj["initial"]),
        tuple(move_from_json(m) for m in obj["script"]),
        tuple(diagram_from_json(s) for s in obj["states"]),
    )


_DECODERS = {"blf": blf_from_json, "fold_diagram": diagram_from_json, "elimination": elimination_from_json}


def parse(text: str) -> DescriptorDocument:
    try:
        body = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not JSON: {exc}") from exc
    if not isinstance(body, dict):
        raise SchemaError("document must be a JSON object")
    version = body.get("schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema_version {version!r}, expected {SCHEMA_VERSION!r}")
    kind = body.get("document")
    if kind not in DOCUMENT_KINDS:
        raise SchemaError(f"unknown document kind {kind!r}")
    try:
        payload = _DECODERS[kind](body["payload"])
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"malformed {kind} payload: {exc}") from exc
    return DescriptorDocument(kind, payload, body.get("reports", {}), body.get("provenance", {}), version)
