"""Text interchange for complexes and analysis reports.

A complex document is JSON with keys ``format_version`` ("1"), ``n``, ``d``,
``facets`` (1-based vertex lists) and an optional ``metadata`` object. The
serializer writes one facet per line with facets in lexicographic order, so
a given complex always produces the same bytes.
"""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Iterable, Mapping
from typing import Any

from .bounds import BoundReport, check_bounds
from .complex import Complex, degree_profile, new_complex
from .errors import ComplexError, ParseError
from .metric import metric_report

FORMAT_VERSION = "1"

__all__ = [
    "FORMAT_VERSION",
    "parse_complex",
    "load_document",
    "serialize_complex",
    "analysis_document",
    "flatten",
    "to_csv",
    "rows_to_csv",
]


def _dumps(value: Any) -> str:
    return json.dumps(value, sort_keys=True, separators=(", ", ": "))


def serialize_complex(X: Complex, metadata: Mapping[str, Any] | None = None) -> str:
    lines = [
        "{",
        f'  "format_version": "{FORMAT_VERSION}",',
        f'  "n": {X.n},',
        f'  "d": {X.d},',
    ]
    if metadata:
        lines.append(f'  "metadata": {_dumps(dict(metadata))},')
    facets = [",".join(map(str, f)) for f in X.facets]
    if facets:
        lines.append('  "facets": [')
        lines.extend(f"    [{f}]," for f in facets[:-1])
        lines.append(f"    [{facets[-1]}]")
        lines.append("  ]")
    else:
        lines.append('  "facets": []')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _int_field(doc: Mapping[str, Any], key: str) -> int:
    if key not in doc:
        raise ParseError(f"missing field {key!r}")
    value = doc[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"field {key!r} must be an integer, got {value!r}")
    return value


def load_document(text: str) -> tuple[Complex, dict[str, Any]]:
    """Parse a complex document, returning the complex and its metadata."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {version!r}")
    n, d = _int_field(doc, "n"), _int_field(doc, "d")
    facets = doc.get("facets")
    if not isinstance(facets, list):
        raise ParseError("field 'facets' must be a list")
    for i, f in enumerate(facets):
        if not isinstance(f, list) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in f
        ):
            raise ParseError(f"facet #{i} must be a list of integers, got {f!r}")
    metadata = doc.get("metadata") or {}
    if not isinstance(metadata, dict):
        raise ParseError("field 'metadata' must be an object")
    try:
        X = new_complex(n, d, facets)
    except ComplexError as exc:
        raise type(exc)(f"in document: {exc}") from exc
    return X, metadata


def parse_complex(text: str) -> Complex:
    return load_document(text)[0]


def analysis_document(
    X: Complex, source: int | Iterable[int] = 0, workers: int | None = None
) -> dict[str, Any]:
    """Degree, connectivity, metric and bound summary of ``X`` as plain data."""
    profile = degree_profile(X)
    metric = metric_report(X, source, workers)
    bounds: BoundReport = check_bounds(X, metric, profile)
    return {
        "n": X.n,
        "d": X.d,
        "N": X.N,
        "num_facets": X.num_facets,
        "degree": profile.to_dict(),
        "connectivity": {
            "components": len(metric.component_sizes),
            "sizes": metric.component_sizes,
        },
        "diameter": metric.diameter,
        "diameter_undefined_reason": metric.undefined_reason,
        "component_diameters": metric.component_diameters,
        "eccentricity": metric.eccentricity_summary(),
        "source": {"rank": metric.source, "simplex": list(X.simplex_at(metric.source))},
        "layer_profile": metric.layer_profile,
        "bounds": bounds.to_dict(),
    }


def _cell(value: Any) -> Any:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return ";".join(str(_cell(v)) for v in value)
    return value


def flatten(doc: Mapping[str, Any], prefix: str = "") -> dict[str, Any]:
    """Dotted-key view of a nested document; lists of records become ``a:b`` items."""
    out: dict[str, Any] = {}
    for key, value in doc.items():
        name = f"{prefix}{key}"
        if isinstance(value, Mapping):
            out.update(flatten(value, name + "."))
        elif isinstance(value, list) and value and isinstance(value[0], Mapping):
            out[name] = [":".join(str(v) for v in item.values()) for item in value]
        else:
            out[name] = value
    return out


def rows_to_csv(rows: list[Mapping[str, Any]]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _cell(v) for k, v in row.items()})
    return buf.getvalue()


def to_csv(doc: Mapping[str, Any]) -> str:
    """One-record CSV rendering of a nested document."""
    return rows_to_csv([flatten(doc)])
