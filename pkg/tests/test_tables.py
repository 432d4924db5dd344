"""Integrity of the stored model tables.

The stored tables are claims under test: weighted homogeneity per block,
reality symmetry of the curated variants, checksum integrity, and the
correction lists' exact reach are all verified here.
"""

import json
import os

import pytest

from c21models import tables
from c21models.hypersurfaces import reality_check, thm31_model, thm33_model
from c21models.series import cr_chart


def test_checksums_match():
    path = os.path.join(tables.table_dir(), "CHECKSUMS.json")
    with open(path) as fh:
        digests = json.load(fh)
    for fname, want in digests.items():
        assert tables.file_digest(fname) == want


def test_thm31_table_clean_as_printed():
    audit = tables.audit_graph_table("thm31")
    assert audit["homogeneity"] == []
    assert audit["duplicates"] == []
    assert audit["corrections"] == []


def test_thm33_verbatim_defects_match_corrections():
    audit = tables.audit_graph_table("thm33")
    # the two weight-violating rows and the duplicated monomials are all
    # covered by the stored corrections
    corr_keys = {(c["block"], tuple(c["exp"])) for c in audit["corrections"]}
    for row in audit["homogeneity"]:
        assert (row["block"], tuple(row["exp"])) in corr_keys
    assert len(audit["corrections"]) == 13
    assert len(audit["duplicates"]) == 5


def test_curated_tables_are_reality_symmetric():
    assert reality_check(thm31_model(8)) == []
    assert reality_check(thm33_model(10)) == []


def test_verbatim_thm33_reality_violations_reported():
    g = thm33_model(10, curated=False)
    violations = reality_check(g)
    assert len(violations) == 22


def test_blocks_weighted_homogeneous():
    chart_w = (1, 1, 2)
    for model in ("thm31", "thm33"):
        raw = tables.load_raw(model)["fields"]
        for comp in "ABC":
            for row in raw[comp]["terms"]:
                wdeg = sum(e * w for e, w in zip(row["exp"], chart_w))
                assert wdeg == row["block"], (model, comp, row)


def test_graph_blocks_tag_weights():
    chart = cr_chart()
    raw = tables.load_raw("thm31")["graph"]
    for row in raw["terms"]:
        assert chart.wdeg(tuple(row["exp"])) == row["block"]


def test_field_corrections_recorded():
    corr = tables.field_corrections("thm33")
    assert len(corr) == 1
    assert corr[0]["component"] == "B"
    assert tuple(corr[0]["exp"]) == (5, 2, 0)


def test_order_beyond_table_rejected():
    from c21models.errors import NoTableDataError
    with pytest.raises(NoTableDataError):
        thm31_model(9)
    with pytest.raises(NoTableDataError):
        thm33_model(11)
    with pytest.raises(NoTableDataError):
        tables.affine_graph_terms("branch3", 9)
