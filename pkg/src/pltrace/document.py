"""JSON-shaped exact document format.

Every document is ``{"kind": ..., "payload": ...}``.  Rationals are always
strings in lowest terms ``"n/d"`` (``"0/1"``, ``"1/2"``); plain integers
``"3"`` are accepted on input, floats never are.

===========  ==============================================================
kind         payload
===========  ==============================================================
reparam      ``{"breakpoints": [["x", "y"], ...]}``
path         ``{"dim": n, "breakpoints": [["t", ["x1", ..., "xn"]], ...]}``
stopdata     ``{"stops": [[["lo", "hi"], "value"], ...]}``
class        ``{"values": ["c1", ...]}``
witness      ``{"r": <path>, "phi": <reparam>, "psi": <reparam>, "eta": <reparam>}``
trace        ``{"dim": n, "vertices": [["x1", ..., "xn"], ...]}``
===========  ==============================================================
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

from .errors import DocumentSyntaxError, PLTraceError, ValidationError, WrongKind
from .lattice import TraceClass
from .plmap import Reparam, pointwise_max
from .stopmap import StopData
from .trace import HomotopyWitness, Path, TraceNF, reduced_indices

KINDS = ("reparam", "path", "stopdata", "class", "witness", "trace")

Payload = Union[Reparam, Path, StopData, TraceClass, HomotopyWitness, TraceNF]

_RATIONAL = re.compile(r"-?\d+(/\d+)?")


@dataclass(frozen=True)
class Document:
    kind: str
    payload: Payload

    @classmethod
    def of(cls, value: Payload) -> "Document":
        for kind, typ in _TYPES.items():
            if isinstance(value, typ):
                return cls(kind, value)
        raise TypeError(f"no document kind for {type(value).__name__}")


_TYPES = {
    "reparam": Reparam,
    "path": Path,
    "stopdata": StopData,
    "class": TraceClass,
    "witness": HomotopyWitness,
    "trace": TraceNF,
}


def format_rat(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_rat(text: Any) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL.fullmatch(text):
        raise DocumentSyntaxError(f"expected a rational string like \"1/3\", got {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise DocumentSyntaxError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den or 1))


# -- encoding --------------------------------------------------------------

def _reparam_payload(f: Reparam) -> dict:
    return {"breakpoints": [[format_rat(x), format_rat(y)] for x, y in f.points]}


def _path_payload(p: Path) -> dict:
    return {"dim": p.dim,
            "breakpoints": [[format_rat(t), [format_rat(c) for c in x]] for t, x in p.breakpoints]}


def encode_payload(value: Payload) -> dict:
    if isinstance(value, Reparam):
        return _reparam_payload(value)
    if isinstance(value, Path):
        return _path_payload(value)
    if isinstance(value, StopData):
        return {"stops": [[[format_rat(j.lo), format_rat(j.hi)], format_rat(c)] for j, c in value]}
    if isinstance(value, TraceClass):
        return {"values": [format_rat(c) for c in value.values]}
    if isinstance(value, HomotopyWitness):
        return {"r": _path_payload(value.r), "phi": _reparam_payload(value.phi),
                "psi": _reparam_payload(value.psi), "eta": _reparam_payload(value.eta)}
    if isinstance(value, TraceNF):
        return {"dim": value.dim,
                "vertices": [[format_rat(c) for c in x] for x in value.vertices]}
    raise TypeError(f"cannot encode {type(value).__name__}")


def encode(doc: Document) -> dict:
    return {"kind": doc.kind, "payload": encode_payload(doc.payload)}


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


def serialize(doc: Document) -> str:
    return dumps(encode(doc))


# -- decoding --------------------------------------------------------------

def _field(obj: Any, key: str, typ=None):
    if not isinstance(obj, dict) or key not in obj:
        raise DocumentSyntaxError(f"missing field {key!r}")
    value = obj[key]
    if typ is not None and (not isinstance(value, typ) or isinstance(value, bool)):
        raise DocumentSyntaxError(f"field {key!r} must be a {typ.__name__}")
    return value


def _pair(item: Any) -> list:
    if not isinstance(item, list) or len(item) != 2:
        raise DocumentSyntaxError(f"expected a two-element list, got {item!r}")
    return item


def _vector(item: Any, dim: int) -> tuple:
    if not isinstance(item, list) or len(item) != dim:
        raise DocumentSyntaxError(f"expected a list of {dim} rationals, got {item!r}")
    return tuple(parse_rat(c) for c in item)


def _decode_reparam(payload: Any) -> Reparam:
    points = [tuple(parse_rat(c) for c in _pair(item)) for item in _field(payload, "breakpoints", list)]
    return Reparam(points)


def _decode_path(payload: Any) -> Path:
    dim = _field(payload, "dim", int)
    if dim < 1:
        raise DocumentSyntaxError("dim must be positive")
    rows = []
    for item in _field(payload, "breakpoints", list):
        t, x = _pair(item)
        rows.append((parse_rat(t), _vector(x, dim)))
    return Path(rows)


def _decode_trace(payload: Any) -> TraceNF:
    dim = _field(payload, "dim", int)
    if dim < 1:
        raise DocumentSyntaxError("dim must be positive")
    vertices = tuple(_vector(x, dim) for x in _field(payload, "vertices", list))
    if not vertices or len(reduced_indices(vertices)) != len(vertices):
        raise ValidationError("trace vertices must be non-empty and fully reduced")
    return TraceNF(vertices)


def _decode_witness(payload: Any) -> HomotopyWitness:
    w = HomotopyWitness(_decode_path(_field(payload, "r")),
                        _decode_reparam(_field(payload, "phi")),
                        _decode_reparam(_field(payload, "psi")),
                        _decode_reparam(_field(payload, "eta")))
    if w.eta != pointwise_max(w.phi, w.psi):
        raise ValidationError("witness eta must be the pointwise max of phi and psi")
    return w


def decode_payload(kind: str, payload: Any) -> Payload:
    try:
        if kind == "reparam":
            return _decode_reparam(payload)
        if kind == "path":
            return _decode_path(payload)
        if kind == "stopdata":
            stops = []
            for item in _field(payload, "stops", list):
                interval, value = _pair(item)
                stops.append((tuple(parse_rat(c) for c in _pair(interval)), parse_rat(value)))
            return StopData(stops)
        if kind == "class":
            return TraceClass(tuple(parse_rat(c) for c in _field(payload, "values", list)))
        if kind == "witness":
            return _decode_witness(payload)
        if kind == "trace":
            return _decode_trace(payload)
    except (DocumentSyntaxError, ValidationError):
        raise
    except PLTraceError as err:
        raise ValidationError(f"{err.name}: {err}") from err
    raise DocumentSyntaxError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")


def decode(obj: Any) -> Document:
    kind = _field(obj, "kind", str)
    return Document(kind, decode_payload(kind, _field(obj, "payload")))


def parse(text: str) -> Document:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as err:
        raise DocumentSyntaxError(f"invalid JSON: {err}") from err
    return decode(obj)


def expect(doc: Document, *kinds: str) -> Payload:
    if doc.kind not in kinds:
        raise WrongKind(f"expected a {' or '.join(kinds)} document, got {doc.kind}")
    return doc.payload
