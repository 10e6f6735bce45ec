"""Bit-exact planar-code and schema-versioned JSON interchange.

Planar code is the compact binary format used by planar-graph generators: an
ASCII header, then per graph the vertex count followed by each vertex's
neighbors in rotation order (1-indexed, 0-terminated). Only the single-byte
encoding (n < 256) is supported, which covers everything this package builds.

JSON documents carry a `schema` field; charges are serialized as "num/den"
strings so exactness survives the round trip.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Union

from .discharging import DischargeReport, Transfer
from .embedding import EmbeddedGraph
from .errors import BadHeader, IndexOutOfRange, SchemaMismatch, TruncatedRecord
from .reductions import ReductionResult, ReductionStep
from .squares import Coloring

PLANAR_CODE_HEADER = b">>planar_code<<"

GRAPH_SCHEMA = "embedded-graph/1"
COLORING_SCHEMA = "coloring/1"
REPORT_SCHEMA = "discharge-report/1"
TRACE_SCHEMA = "reduction-trace/1"


# ---------------------------------------------------------------------------
# Planar code
# ---------------------------------------------------------------------------

def write_planar_code(graphs) -> bytes:
    """Encode graphs; vertex ids are compacted to 1..n in sorted order."""
    out = bytearray(PLANAR_CODE_HEADER)
    for g in graphs:
        n = g.vertex_count
        if n < 1 or n > 255:
            raise ValueError(f"planar code here supports 1..255 vertices, got {n}")
        index = {v: i + 1 for i, v in enumerate(sorted(g.vertices()))}
        out.append(n)
        for v in sorted(g.vertices()):
            out.extend(index[u] for u in g.neighbors(v))
            out.append(0)
    return bytes(out)


def read_planar_code(data: bytes) -> list[EmbeddedGraph]:
    if not data.startswith(PLANAR_CODE_HEADER):
        raise BadHeader("planar code header missing")
    pos = len(PLANAR_CODE_HEADER)
    graphs = []
    while pos < len(data):
        n = data[pos]
        pos += 1
        if n == 0:
            raise TruncatedRecord("zero vertex count")
        rotations = []
        for _ in range(n):
            ns = []
            while True:
                if pos >= len(data):
                    raise TruncatedRecord("record ended mid-vertex")
                b = data[pos]
                pos += 1
                if b == 0:
                    break
                if b > n:
                    raise IndexOutOfRange(b, n)
                ns.append(b - 1)
            rotations.append(tuple(ns))
        graphs.append(EmbeddedGraph({i: rotations[i] for i in range(n)}))
    return graphs


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

def _charge_str(q: Fraction) -> str:
    return str(q)


def _charge_from(s: str, pointer: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise SchemaMismatch(pointer, f"not a rational: {s!r}")


def graph_to_doc(g: EmbeddedGraph) -> dict:
    doc = {
        "schema": GRAPH_SCHEMA,
        "rotation": {str(v): list(g.neighbors(v)) for v in g.vertices()},
    }
    labels = g.labels()
    if labels:
        doc["labels"] = {str(v): s for v, s in labels.items()}
    return doc


def graph_from_doc(doc: dict) -> EmbeddedGraph:
    _expect_schema(doc, GRAPH_SCHEMA)
    rotation = doc.get("rotation")
    if not isinstance(rotation, dict):
        raise SchemaMismatch("/rotation", "expected an object")
    try:
        rot = {int(v): tuple(int(u) for u in ns) for v, ns in rotation.items()}
    except (TypeError, ValueError):
        raise SchemaMismatch("/rotation", "vertex ids and neighbors must be integers")
    labels = None
    if "labels" in doc:
        if not isinstance(doc["labels"], dict):
            raise SchemaMismatch("/labels", "expected an object")
        labels = {int(v): str(s) for v, s in doc["labels"].items()}
    return EmbeddedGraph(rot, labels)


def coloring_to_doc(phi: Coloring) -> dict:
    return {
        "schema": COLORING_SCHEMA,
        "palette_size": phi.palette_size,
        "assignment": {str(v): c for v, c in sorted(phi.assignment.items())},
    }


def coloring_from_doc(doc: dict) -> Coloring:
    _expect_schema(doc, COLORING_SCHEMA)
    if not isinstance(doc.get("palette_size"), int):
        raise SchemaMismatch("/palette_size", "expected an integer")
    assignment = doc.get("assignment")
    if not isinstance(assignment, dict):
        raise SchemaMismatch("/assignment", "expected an object")
    try:
        parsed = {int(v): int(c) for v, c in assignment.items()}
    except (TypeError, ValueError):
        raise SchemaMismatch("/assignment", "keys and colors must be integers")
    return Coloring(parsed, doc["palette_size"])


def report_to_doc(report: DischargeReport) -> dict:
    def charge_map(d):
        return {f"{el[0]}{el[1]}": _charge_str(q)
                for el, q in sorted(d.items(), key=lambda kv: kv[0])}

    return {
        "schema": REPORT_SCHEMA,
        "initial": charge_map(report.initial),
        "final": charge_map(report.final),
        "ledger": [[t.rule, f"{t.source[0]}{t.source[1]}",
                    f"{t.target[0]}{t.target[1]}", _charge_str(t.amount)]
                   for t in report.ledger],
        "negative_elements": [[f"{el[0]}{el[1]}", _charge_str(q)]
                              for el, q in report.negative_elements],
        "conservation_ok": report.conservation_ok,
        "total_initial": _charge_str(report.total_initial),
        "total_final": _charge_str(report.total_final),
        "component_totals": [_charge_str(q) for q in report.component_totals],
        "match_count": report.match_count,
        "proof_shadow_ok": report.proof_shadow_ok,
        "face_walks": {str(fid): list(walk)
                       for fid, walk in sorted(report.face_walks.items())},
    }


def _element_from(name: str, pointer: str) -> tuple[str, int]:
    if not name or name[0] not in "vf":
        raise SchemaMismatch(pointer, f"bad element name {name!r}")
    try:
        return (name[0], int(name[1:]))
    except ValueError:
        raise SchemaMismatch(pointer, f"bad element name {name!r}")


def report_from_doc(doc: dict) -> DischargeReport:
    _expect_schema(doc, REPORT_SCHEMA)

    def charge_map(key):
        raw = doc.get(key)
        if not isinstance(raw, dict):
            raise SchemaMismatch(f"/{key}", "expected an object")
        return {_element_from(name, f"/{key}/{name}"): _charge_from(s, f"/{key}/{name}")
                for name, s in raw.items()}

    ledger = tuple(
        Transfer(rule, _element_from(src, "/ledger"), _element_from(dst, "/ledger"),
                 _charge_from(amt, "/ledger"))
        for rule, src, dst, amt in doc.get("ledger", ())
    )
    return DischargeReport(
        initial=charge_map("initial"),
        final=charge_map("final"),
        ledger=ledger,
        negative_elements=tuple(
            (_element_from(name, "/negative_elements"), _charge_from(s, "/negative_elements"))
            for name, s in doc.get("negative_elements", ())),
        conservation_ok=bool(doc.get("conservation_ok")),
        total_initial=_charge_from(doc.get("total_initial", "0"), "/total_initial"),
        total_final=_charge_from(doc.get("total_final", "0"), "/total_final"),
        component_totals=tuple(_charge_from(s, "/component_totals")
                               for s in doc.get("component_totals", ())),
        match_count=int(doc.get("match_count", 0)),
        proof_shadow_ok=doc.get("proof_shadow_ok"),
        face_walks={int(k): tuple(v) for k, v in doc.get("face_walks", {}).items()},
    )


def trace_to_doc(result: ReductionResult) -> dict:
    doc = {
        "schema": TRACE_SCHEMA,
        "palette_size": result.coloring.palette_size,
        "fallback": result.fallback,
        "max_forbidden": result.max_forbidden,
        "steps": [s.to_doc() for s in result.steps],
        "coloring": coloring_to_doc(result.coloring),
    }
    if result.fallback_witness is not None:
        doc["fallback_witness"] = graph_to_doc(result.fallback_witness)
    return doc


def trace_from_doc(doc: dict) -> ReductionResult:
    _expect_schema(doc, TRACE_SCHEMA)
    steps = []
    for raw in doc.get("steps", ()):
        steps.append(ReductionStep(
            config_id=raw["config"],
            variant=raw.get("variant", ""),
            center=int(raw["center"]),
            bindings=tuple(sorted((k, int(v)) for k, v in raw.get("bindings", {}).items())),
            deleted=int(raw["deleted"]),
            added_edges=tuple(tuple(e) for e in raw.get("added_edges", ())),
            color=raw.get("color"),
            forbidden_size=raw.get("forbidden_size"),
        ))
    witness = None
    if "fallback_witness" in doc:
        witness = graph_from_doc(doc["fallback_witness"])
    return ReductionResult(
        coloring=coloring_from_doc(doc["coloring"]),
        steps=tuple(steps),
        fallback=bool(doc.get("fallback")),
        fallback_witness=witness,
        max_forbidden=int(doc.get("max_forbidden", 0)),
    )


_READERS = {
    GRAPH_SCHEMA: graph_from_doc,
    COLORING_SCHEMA: coloring_from_doc,
    REPORT_SCHEMA: report_from_doc,
    TRACE_SCHEMA: trace_from_doc,
}

_WRITERS = [
    (EmbeddedGraph, graph_to_doc),
    (Coloring, coloring_to_doc),
    (DischargeReport, report_to_doc),
    (ReductionResult, trace_to_doc),
]


def write_json(obj, indent=None) -> str:
    """Serialize a graph, coloring, discharge report, or reduction trace."""
    for kind, writer in _WRITERS:
        if isinstance(obj, kind):
            return json.dumps(writer(obj), indent=indent, sort_keys=True)
    raise TypeError(f"no JSON schema for {type(obj).__name__}")


def read_json(text: Union[str, bytes, dict]):
    """Parse any schema-versioned document into its object."""
    doc = json.loads(text) if isinstance(text, (str, bytes)) else text
    if not isinstance(doc, dict):
        raise SchemaMismatch("", "expected a JSON object")
    schema = doc.get("schema")
    reader = _READERS.get(schema)
    if reader is None:
        raise SchemaMismatch("/schema", f"unknown schema {schema!r}")
    return reader(doc)


def _expect_schema(doc: dict, schema: str) -> None:
    if doc.get("schema") != schema:
        raise SchemaMismatch("/schema", f"expected {schema!r}, got {doc.get('schema')!r}")
