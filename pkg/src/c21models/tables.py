"""Loading and auditing of the stored model tables.

The JSON resources under tables/ hold the printed source tables verbatim,
term lists with their block (weighted degree) tags, plus a corrections
list for entries whose printed exponents contradict weighted homogeneity
or the reality symmetry.  Loading in the default "curated" variant applies
the corrections; "verbatim" keeps the printed exponents so that audits can
report the discrepancies.  Every load rechecks the file digest against
CHECKSUMS.json.
"""

from __future__ import annotations

import hashlib
import json
import os
from functools import lru_cache

from .errors import InputError, NoTableDataError
from .scalars import parse_scalar, register_param
from .series import Chart, Series, affine_chart, cr_chart, holo_chart

_TABLE_DIR = os.path.join(os.path.dirname(__file__), "tables")

# model parameters used inside the stored tables
MODEL_PARAMS = ("theta", "F50500", "a", "b", "c", "d", "e",
                "A004_re", "A004_im", "B103_re", "B103_im")


def _register_model_params():
    for name in MODEL_PARAMS:
        register_param(name)


def table_dir() -> str:
    return os.environ.get("C21_TABLES_DIR", _TABLE_DIR)


def file_digest(fname: str) -> str:
    with open(os.path.join(table_dir(), fname), "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


@lru_cache(maxsize=None)
def _load_json(fname: str) -> dict:
    path = os.path.join(table_dir(), fname)
    with open(path) as fh:
        payload = json.load(fh)
    checks = os.path.join(table_dir(), "CHECKSUMS.json")
    if os.path.exists(checks):
        with open(checks) as fh:
            digests = json.load(fh)
        want = digests.get(fname)
        if want is not None and want != file_digest(fname):
            raise InputError(f"table file {fname} does not match its checksum")
    return payload


def load_raw(model: str) -> dict:
    if model not in ("thm31", "thm33", "affine"):
        raise InputError(f"unknown table {model!r}")
    _register_model_params()
    return _load_json(model + ".json")


def _apply_corrections(terms: list, corrections: list, curated: bool):
    """Return term rows with corrections applied (curated) or not."""
    if not curated or not corrections:
        return list(terms), []
    rows = list(terms)
    applied = []
    for corr in corrections:
        key = (corr["block"], tuple(corr["exp"]), corr["coeff"])
        for i, row in enumerate(rows):
            if (row["block"], tuple(row["exp"]), row["coeff"]) == key:
                rows[i] = {"block": row["block"],
                           "exp": list(corr["exp_fixed"]),
                           "coeff": row["coeff"]}
                applied.append(corr)
                break
        else:
            raise InputError(
                f"correction target not found in table: {key}")
    return rows, applied


def graph_terms(model: str, order: int, curated: bool = True):
    """((exp, coeff-scalar) pairs, corrections applied) through `order`."""
    raw = load_raw(model)["graph"]
    if order > raw["max_order"]:
        raise NoTableDataError(
            f"{model} graph data stops at order {raw['max_order']}, "
            f"requested {order}")
    rows, applied = _apply_corrections(raw["terms"], raw.get("corrections", []),
                                       curated)
    pairs = []
    for row in rows:
        if row["block"] <= order:
            pairs.append((tuple(row["exp"]), parse_scalar(row["coeff"])))
    return pairs, applied


def graph_series(model: str, order: int, curated: bool = True) -> Series:
    pairs, _ = graph_terms(model, order, curated)
    return Series.from_terms(cr_chart(), order, pairs)


UNDETERMINED_PARAMS = ("A004_re", "A004_im", "B103_re", "B103_im")


def field_components(model: str, determined_only: bool = False,
                     curated: bool = True):
    """{"A"|"B"|"C": (Series over (z,zeta,w), known_through)} with the five
    family constants a..e (and theta, A004, B103) left formal.

    With determined_only=True every block containing one of the
    undetermined linear forms (A004, B103) is dropped and the component's
    exact order lowered below it: those coefficients are unknown linear
    functions of a..e, so numeric bracket tables must not see them.
    curated=False keeps the printed coefficients even where the stored
    fields_corrections list repairs them.
    """
    raw = load_raw(model)
    fields = raw["fields"]
    fixes = {}
    if curated:
        for corr in raw.get("fields_corrections", []):
            fixes[(corr["component"], tuple(corr["exp"]), corr["coeff"])] = \
                corr["coeff_fixed"]
    chart = holo_chart()
    undet = {register_param(n) for n in UNDETERMINED_PARAMS}
    out = {}
    for comp in "ABC":
        data = fields[comp]
        known = data["known_through"]
        rows = []
        for row in data["terms"]:
            text = fixes.get((comp, tuple(row["exp"]), row["coeff"]),
                             row["coeff"])
            rows.append((row["block"], tuple(row["exp"]), parse_scalar(text)))
        if determined_only:
            for block, _, coeff in rows:
                if coeff.params_used() & undet:
                    known = min(known, block - 1)
            rows = [r for r in rows if r[0] <= known]
        pairs = [(exp, coeff) for _, exp, coeff in rows]
        out[comp] = (Series.from_terms(chart, known, pairs), known)
    return out


def field_corrections(model: str) -> list:
    return load_raw(model).get("fields_corrections", [])


def affine_graph_terms(which: str, order: int):
    raw = load_raw("affine")
    if which not in ("branch3", "theta"):
        raise InputError(f"no stored affine table {which!r}")
    data = raw[which]
    if order > data["max_order"]:
        raise NoTableDataError(
            f"affine {which} table stops at order {data['max_order']}, "
            f"requested {order}")
    return [(tuple(row["exp"]), parse_scalar(row["coeff"]))
            for row in data["terms"]
            if sum(row["exp"]) <= order]


def affine_fields_raw(which: str):
    raw = load_raw("affine")["fields"]
    if which not in raw:
        raise InputError(f"no stored affine fields {which!r}")
    return raw[which]


# ---------------------------------------------------------------------------
# audits


def audit_graph_table(model: str) -> dict:
    """Verbatim-table diagnostics: homogeneity and duplicate monomials.

    Returns {"homogeneity": [rows with wdeg != block],
             "duplicates": [exponents printed more than once],
             "corrections": stored corrections list}.
    """
    raw = load_raw(model)["graph"]
    chart = cr_chart()
    bad_weight = []
    seen: dict = {}
    dups = []
    for row in raw["terms"]:
        exp = tuple(row["exp"])
        if chart.wdeg(exp) != row["block"]:
            bad_weight.append(row)
        if exp in seen:
            dups.append({"exp": list(exp),
                         "coeffs": [seen[exp], row["coeff"]]})
        else:
            seen[exp] = row["coeff"]
    return {"homogeneity": bad_weight, "duplicates": dups,
            "corrections": raw.get("corrections", [])}
