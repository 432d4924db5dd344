"""JSON (de)serialisation of series, graphs and vector fields.

Schema for a series document:

    {"chart": {"variables": [...], "weights": [...], "pairing": [...]},
     "order": 8,                      # null = exact polynomial
     "terms": [{"exp": [3,0,0,2,0], "coeff": "1"}, ...]}

Coefficients use the canonical scalar text form (rationals "p/q",
imaginary unit "i", parameters by name, e.g. "-6/25*theta^2").  Round
trips are exact; unknown parameter names and exponent arity mismatches
are rejected.
"""

from __future__ import annotations

import json

from .errors import InputError
from .scalars import parse_scalar
from .series import (Chart, Series, affine_chart, affine_space_chart,
                     cr_chart, holo_chart)
from .hypersurfaces import HypersurfaceGraph
from .affine import AffineGraph
from .symmetries import HoloVectorField

_STANDARD_CHARTS = {
    "cr5": cr_chart,
    "holo3": holo_chart,
    "xy": affine_chart,
    "xyu": affine_space_chart,
}


def chart_to_json(chart: Chart) -> dict:
    return {
        "variables": list(chart.names),
        "weights": list(chart.weights),
        "pairing": list(chart.pairing) if chart.pairing is not None else None,
    }


def chart_from_json(doc: dict) -> Chart:
    try:
        return Chart(doc["variables"], doc["weights"], doc.get("pairing"))
    except KeyError as exc:
        raise InputError(f"chart document missing {exc}")


def series_to_json(s: Series) -> dict:
    return {
        "chart": chart_to_json(s.chart),
        "order": s.order,
        "terms": [{"exp": list(e), "coeff": c.text()}
                  for e, c in s.sorted_terms()],
    }


def series_from_json(doc: dict, allow_new_params: bool = False) -> Series:
    chart = chart_from_json(doc["chart"])
    order = doc.get("order")
    pairs = []
    for row in doc.get("terms", []):
        exp = row["exp"]
        if len(exp) != chart.nvars:
            raise InputError(
                f"exponent {exp} does not match chart arity {chart.nvars}")
        coeff = parse_scalar(row["coeff"], register_names=allow_new_params)
        pairs.append((tuple(exp), coeff))
    return Series.from_terms(chart, order, pairs)


def graph_to_json(g) -> dict:
    kind = "hypersurface_graph" if isinstance(g, HypersurfaceGraph) \
        else "affine_graph"
    return {"kind": kind, "label": g.label, "series": series_to_json(g.F)}


def graph_from_json(doc: dict, allow_new_params: bool = False):
    series = series_from_json(doc["series"] if "series" in doc else doc,
                              allow_new_params)
    label = doc.get("label", "input")
    names = series.chart.names
    if names == cr_chart().names:
        return HypersurfaceGraph(series, label=label)
    if names == affine_chart().names:
        return AffineGraph(series, label=label)
    raise InputError(f"no graph kind for chart {names}")


def field_to_json(f: HoloVectorField) -> dict:
    return {"kind": "holo_vector_field",
            "components": {n: series_to_json(getattr(f, n)) for n in "ABC"}}


def components_from_json(doc: dict, allow_new_params: bool = False):
    comps = doc.get("components", doc)
    return [series_from_json(comps[k], allow_new_params)
            for k in sorted(comps)]


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def load_path(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputError(f"no such file: {path}")
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}")
