import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyobstruct import __version__
from polyobstruct.errors import InputError
from polyobstruct.reports import (
    SCHEMA_VERSION,
    Query,
    Report,
    classify,
    flatten,
    parse_target,
    run_query,
    sweep,
)
from polyobstruct.spec_language import parse_spec


def test_two_pentagons_all_modes_agree():
    r = run_query(Query("product:(polygon:5,polygon:5)", "skeleton:0", 2))
    assert r.available and r.obstructed and r.threshold_e == 3
    assert set(r.bounds) == {"closed_form", "ilp", "brute_force"}
    assert r.agreement == {"closed_form=ilp": True, "closed_form=brute_force": True,
                           "ilp=brute_force": True, "theorem": True}
    assert r.certificate["chromatic_number"] == 2
    assert r.certificate["face_type"] == [0, 0]


def test_wedge_surface_report():
    r = run_query(Query("wedge:4,3", "surface", 4))
    assert r.obstructed and r.threshold_e == 5
    assert (r.d, r.m, r.k) == (10, 12, 2)
    assert r.agreement["surface_embedding"] and r.consistent


def test_simplex_skeleton_matches_van_kampen_flores():
    r = run_query(Query("simplex:5", "skeleton:1", 3))
    assert r.obstructed and r.agreement["van_kampen_flores"]


def test_realizable_wedge_surface_has_no_obstruction():
    r = run_query(Query("wedge:4,2", "surface", 4))
    assert not r.available and not r.obstructed and r.threshold_e is None
    assert "n = 2" in r.certificate["note"]


def test_two_triangles_at_the_threshold():
    r = run_query(Query("product:(simplex:3,simplex:3)", "skeleton:0", 3))
    assert not r.obstructed and r.threshold_e == 3 and r.consistent


def test_mixed_product_has_no_knapsack_path():
    r = run_query(Query("product:(polygon:4,simplex:3)", "skeleton:1", 2))
    assert "ilp" in r.errors and set(r.bounds) == {"closed_form", "brute_force"}
    assert r.agreement == {"closed_form=brute_force": True}


def test_single_mode():
    r = run_query(Query("product:(polygon:5,polygon:5)", "skeleton:1", 2, mode="ilp"))
    assert set(r.bounds) == {"ilp"} and r.certificate["ilp_mu"] is not None


def test_budget_failure_keeps_the_closed_form_result():
    r = run_query(Query("simplex:7", "skeleton:0", 1), budget=3)
    assert r.errors["brute_force"].startswith("resource limit")
    assert r.obstructed and r.threshold_e == 2
    assert "closed_form" in r.bounds and "brute_force" not in r.bounds


def test_nested_products_are_flattened():
    P = parse_spec("product:(polygon:5,product:(polygon:5))")
    assert flatten(P) == parse_spec("product:(polygon:5,polygon:5)")
    r = run_query(Query("product:(polygon:5,product:(polygon:5))", "skeleton:0", 2))
    assert r.polytope == "product:(polygon:5,polygon:5)"


def test_classification():
    assert classify(parse_spec("wedge:4,3")) == "wedge"
    assert classify(parse_spec("polygon:5")) == "polygons"
    assert classify(parse_spec("product:(simplex:3,simplex:3)")) == "simplices"
    assert classify(parse_spec("product:(simplex:3,simplex:4)")) == "mixed"
    assert classify(parse_spec("product:(wedge:4,3,simplex:3)")) == "other"


@pytest.mark.parametrize("target", ["skeleton", "skeleton:x", "edges", "surface:2"])
def test_bad_targets(target):
    with pytest.raises(InputError):
        parse_target(target)


@pytest.mark.parametrize("spec,target", [
    ("polygon:5", "surface"),
    ("product:(simplex:3,simplex:3)", "neighborly"),
    ("wedge:4,3", "neighborly"),
    ("polygon:5", "skeleton:2"),
])
def test_target_must_fit_the_polytope(spec, target):
    with pytest.raises(InputError):
        run_query(Query(spec, target, 2))


def test_unknown_mode():
    with pytest.raises(InputError):
        run_query(Query("polygon:5", "skeleton:0", 1, mode="fast"))


def test_serialized_form():
    r = run_query(Query("product:(polygon:4,polygon:5,polygon:6)", "neighborly", 4))
    data = json.loads(r.to_json())
    assert data["schema_version"] == SCHEMA_VERSION
    assert data["engine_version"] == __version__
    assert list(data) == sorted(data)
    assert "timestamp" not in r.to_json()


def test_table_rendering():
    text = run_query(Query("product:(polygon:5,polygon:5)", "skeleton:0", 2)).to_table()
    assert "OBSTRUCTED" in text and "brute_force" in text
    text = run_query(Query("wedge:4,2", "surface", 4)).to_table()
    assert "no obstruction available" in text


def test_sweep_rows():
    rows = sweep("wedge:4,3", "surface", range(3, 7), None)
    assert [row["obstructed"] for row in rows] == [True, True, False, False]
    rows = sweep("product:(simplex:3,simplex:3)", "skeleton", range(2, 5), range(0, 2))
    assert [(row["k"], row["e"]) for row in rows] == [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]
    assert all(row["consistent"] for row in rows)


QUERIES = st.one_of(
    st.builds(Query, st.sampled_from(["product:(polygon:4,polygon:5)", "polygon:7",
                                      "product:(simplex:3,simplex:3)"]),
              st.sampled_from(["skeleton:0", "skeleton:1"]), st.integers(0, 8)),
    st.builds(Query, st.sampled_from(["wedge:4,3", "wedge:5,2"]),
              st.sampled_from(["surface", "special:2", "skeleton:0"]), st.integers(0, 8),
              st.sampled_from(["closed_form", "ilp"])),
)


@given(QUERIES)
@settings(max_examples=40, deadline=None)
def test_reports_are_deterministic_and_round_trip(q):
    a, b = run_query(q), run_query(q)
    assert a.to_json() == b.to_json()
    back = Report.from_json(a.to_json())
    assert back == a and back.to_json() == a.to_json()
    assert a.consistent
