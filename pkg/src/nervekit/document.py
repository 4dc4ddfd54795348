"""JSON documents for complexes, colourings and covers.

Canonical form: keys in the order ``name, facets, colours, metadata``;
facets reduced to the inclusion-maximal ones, vertices ascending, facets
sorted; colour keys as decimal strings in numeric order. ``emit`` always
writes canonical form, so ``parse(emit(d)) == d`` for a canonical ``d``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .complex import SimplicialComplex
from .errors import DocumentError
from .nerve import Cover
from .sperner import ColouredComplex


def _fail(code: str, msg: str):
    raise DocumentError(code, msg)


def _load(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        _fail("MALFORMED", f"not valid JSON: {exc}")


def _vertex(x) -> int:
    if isinstance(x, bool) or not isinstance(x, int) or x < 0:
        _fail("BAD_VERTEX", f"vertex {x!r} is not a nonnegative integer")
    return x


def _facets(raw, what: str = "facets") -> SimplicialComplex:
    if not isinstance(raw, list):
        _fail("MALFORMED", f"{what} must be a list of vertex lists")
    gens = []
    for f in raw:
        if not isinstance(f, list):
            _fail("MALFORMED", f"{what} entry {f!r} is not a list")
        if not f:
            _fail("EMPTY_FACET", f"{what} contains an empty facet")
        vs = [_vertex(v) for v in f]
        if len(set(vs)) != len(vs):
            _fail("BAD_VERTEX", f"facet {f} repeats a vertex")
        gens.append(tuple(sorted(vs)))
    return SimplicialComplex.from_facets(gens)


@dataclass(frozen=True)
class ComplexDocument:
    name: str
    complex: SimplicialComplex
    colours: dict[int, tuple[int, ...]] | None = None
    metadata: dict[str, str] = field(default_factory=dict)

    def coloured(self) -> ColouredComplex:
        if self.colours is None:
            _fail("COLOUR_PARTITION", f"document {self.name!r} has no colours")
        m = max(self.colours)
        classes = [self.colours.get(i, ()) for i in range(m + 1)]
        return ColouredComplex.from_classes(self.complex, classes)

    def to_dict(self) -> dict:
        out: dict = {"name": self.name,
                     "facets": [list(f) for f in sorted(self.complex.facets)]}
        if self.colours is not None:
            out["colours"] = {str(i): list(self.colours[i]) for i in sorted(self.colours)}
        if self.metadata:
            out["metadata"] = {k: self.metadata[k] for k in sorted(self.metadata)}
        return out

    @classmethod
    def of(cls, name: str, X, metadata: dict | None = None) -> "ComplexDocument":
        """Wrap a complex or coloured complex."""
        if isinstance(X, ColouredComplex):
            cols = {i: tuple(c) for i, c in enumerate(X.classes)}
            return cls(name, X.complex, cols, dict(metadata or {}))
        return cls(name, X, None, dict(metadata or {}))


def _colours(raw, X: SimplicialComplex) -> dict[int, tuple[int, ...]]:
    if not isinstance(raw, dict):
        _fail("MALFORMED", "colours must map colour index to a vertex list")
    out = {}
    seen: dict[int, int] = {}
    for key, vs in raw.items():
        try:
            c = int(key)
        except (TypeError, ValueError):
            c = -1
        if c < 0 or str(c) != str(key):
            _fail("MALFORMED", f"colour key {key!r} is not a nonnegative integer")
        if not isinstance(vs, list):
            _fail("MALFORMED", f"colour {c} must list vertices")
        for v in vs:
            v = _vertex(v)
            if v in seen:
                _fail("COLOUR_OVERLAP", f"vertex {v} has colours {seen[v]} and {c}")
            if (v,) not in X:
                _fail("COLOUR_UNKNOWN_VERTEX", f"colour {c} lists vertex {v} not in the complex")
            seen[v] = c
        out[c] = tuple(sorted(vs))
    missing = [v for v in X.vertices if v not in seen]
    if missing:
        _fail("COLOUR_PARTITION", f"vertices without a colour: {missing}")
    return out


def parse_complex(text: str) -> ComplexDocument:
    data = _load(text)
    if not isinstance(data, dict):
        _fail("MALFORMED", "document must be a JSON object")
    extra = set(data) - {"name", "facets", "colours", "metadata"}
    if extra:
        _fail("MALFORMED", f"unknown keys {sorted(extra)}")
    if "facets" not in data:
        _fail("MALFORMED", "missing 'facets'")
    name = data.get("name", "")
    if not isinstance(name, str):
        _fail("MALFORMED", "name must be a string")
    X = _facets(data["facets"])
    cols = _colours(data["colours"], X) if data.get("colours") is not None else None
    meta = data.get("metadata", {}) or {}
    if not isinstance(meta, dict) or not all(isinstance(k, str) and isinstance(v, str) for k, v in meta.items()):
        _fail("MALFORMED", "metadata must map strings to strings")
    return ComplexDocument(name, X, cols, dict(meta))


def emit_complex(doc: ComplexDocument) -> str:
    return json.dumps(doc.to_dict(), ensure_ascii=False) + "\n"


def parse_cover(text: str, host: SimplicialComplex) -> Cover:
    """``{"members": [[facet, ...], ...]}``; each member a subcomplex of ``host``."""
    data = _load(text)
    if not isinstance(data, dict) or not isinstance(data.get("members"), list):
        _fail("MALFORMED", "cover document needs a 'members' list")
    members = [_facets(m, f"member {i}") for i, m in enumerate(data["members"])]
    if not members:
        _fail("MALFORMED", "cover has no members")
    for i, m in enumerate(members):
        if not m <= host:
            _fail("COVER_NOT_SUBCOMPLEX", f"member {i} is not a subcomplex of the host")
    return Cover(host, tuple(members))


def emit_cover(cover: Cover) -> str:
    body = {"members": [[list(f) for f in sorted(m.facets)] for m in cover.members]}
    return json.dumps(body) + "\n"


def read_text(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        _fail("IO", f"cannot read {path}: {exc.strerror}")
