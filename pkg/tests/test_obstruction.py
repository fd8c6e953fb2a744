from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyobstruct.errors import ConsistencyError, InputError
from polyobstruct.kneser import sarkaria_index
from polyobstruct.obstruction import (
    BoundResult,
    KnapsackInstance,
    ObstructionCertificate,
    brute_force_lower,
    edim_lower_polygon_products,
    edim_lower_simplex_products,
    edim_upper_polygon_products,
    edim_upper_simplex_products,
    knapsack_bound,
    linear_index_lower,
    neighborly_polygons_condition,
    obstruct_neighborly_polygons,
    obstruct_polygon_products,
    obstruct_simplex_products,
    obstruct_wedge_skeleton,
    obstruct_wedge_special_faces,
    obstruct_wedge_surface,
    obstruction_verdict,
    polygon_knapsack,
    polygon_mu_star,
    simplex_knapsack,
    simplex_products_threshold,
    van_kampen_flores,
    wedge_special_threshold,
)
from polyobstruct.polytopes import PolygonType, ProductType, SimplexType, cotype_complex


def knapsack_brute_force(inst):
    """Best value and lexicographically least optimal multiplicities, by full enumeration."""
    best = None
    for mu in product(*(range(c + 1) for c in inst.caps)):
        if sum(mu) != inst.r or sum(w * x for w, x in zip(inst.weights, mu)) != inst.k:
            continue
        value = sum(s * x for s, x in zip(inst.coefficients, mu))
        if best is None or value > best[0]:
            best = (value, mu)
    return best


# -- knapsack ---------------------------------------------------------------------------

def test_simplex_knapsack_example():
    inst = simplex_knapsack(3, 2, 0)
    assert inst.coefficients == (1, 1, 2)
    res = knapsack_bound(inst)
    assert (res.value, res.mu) == (2, (2, 0, 0))
    assert res.value + 2 - 1 == 3


def test_polygon_knapsack_example():
    res = knapsack_bound(polygon_knapsack(0, 2, 0))
    assert -res.value == polygon_mu_star(0, 2, 0) == 2


def test_single_factor_top_dimension_is_forced():
    assert knapsack_bound(simplex_knapsack(4, 1, 3)).mu == (0, 0, 0, 1)
    assert knapsack_bound(polygon_knapsack(0, 1, 2)).mu == (0, 0, 0, 1)


def test_infeasible_program():
    inst = KnapsackInstance((1, 1), (0, 1), (1, 1), k=5, r=2)
    assert not knapsack_bound(inst).feasible
    with pytest.raises(InputError):
        KnapsackInstance((1,), (0, 1), (1,), k=0, r=1)
    with pytest.raises(InputError):
        KnapsackInstance((1,), (-1,), (1,), k=0, r=1)


@given(st.lists(st.tuples(st.integers(-3, 5), st.integers(0, 3), st.integers(0, 3)),
                min_size=1, max_size=4),
       st.integers(0, 8), st.integers(1, 5))
@settings(max_examples=200)
def test_knapsack_matches_enumeration(classes, k, r):
    s, w, caps = zip(*classes)
    inst = KnapsackInstance(tuple(s), tuple(w), tuple(caps), k, r)
    expected = knapsack_brute_force(inst)
    res = knapsack_bound(inst)
    if expected is None:
        assert not res.feasible
    else:
        assert res.feasible and (res.value, res.mu) == expected


@pytest.mark.parametrize("n", range(2, 7))
def test_simplex_knapsack_matches_closed_form(n):
    for r in range(1, 5):
        for k in range(0, r * (n - 1)):
            res = knapsack_bound(simplex_knapsack(n, r, k))
            assert res.value + r - 1 == edim_lower_simplex_products(n, r, k)


def test_polygon_knapsack_matches_closed_form():
    for r_e, r_o in product(range(5), repeat=2):
        if r_e + r_o == 0:
            continue
        for k in range(0, 2 * (r_e + r_o) + 1):
            res = knapsack_bound(polygon_knapsack(r_e, r_o, k))
            assert -res.value == polygon_mu_star(r_e, r_o, k)
            for m in (4 * r_e + 3 * r_o, 6 * r_e + 7 * r_o):
                assert edim_lower_polygon_products(m, r_e, r_o, k) == m - 1 + res.value


# -- closed forms ---------------------------------------------------------------------------

def test_polygon_bound_examples():
    assert edim_lower_polygon_products(10, 0, 2, 0) == 7
    assert edim_lower_polygon_products(8, 2, 0, 0) == 3
    assert edim_upper_polygon_products(8, 2, 0, 0) == 3
    assert edim_upper_polygon_products(10, 0, 2, 1) == 7
    assert edim_upper_polygon_products(10, 0, 2, 2) == 8


def test_polygon_bound_validation():
    with pytest.raises(InputError):
        edim_lower_polygon_products(9, 2, 0, 0)  # 9 facets cannot make two even polygons
    with pytest.raises(InputError):
        edim_lower_polygon_products(6, 0, 2, 5)
    with pytest.raises(InputError):
        edim_upper_polygon_products(6, 0, 2, 4)


def test_simplex_bound_examples():
    assert edim_lower_simplex_products(3, 2, 0) == 3
    assert edim_lower_simplex_products(4, 2, 2) == 5
    assert edim_lower_simplex_products(3, 2, 3) == 4
    assert edim_upper_simplex_products(3, 2, 0) == 3
    assert edim_upper_simplex_products(3, 2, 3) == 5
    assert edim_upper_simplex_products(2, 3, 0) == 5
    with pytest.raises(InputError):
        edim_lower_simplex_products(3, 2, 4)


def test_lower_never_exceeds_upper():
    for n, r in product(range(2, 8), range(1, 6)):
        for k in range(0, r * (n - 1)):
            assert edim_lower_simplex_products(n, r, k) <= edim_upper_simplex_products(n, r, k)
    for r_e, r_o in product(range(5), repeat=2):
        if r_e + r_o:
            m = 4 * r_e + 3 * r_o
            for k in range(0, 2 * (r_e + r_o)):
                assert (edim_lower_polygon_products(m, r_e, r_o, k)
                        <= edim_upper_polygon_products(m, r_e, r_o, k))


def test_bound_result_rejects_inverted_bounds():
    with pytest.raises(ConsistencyError):
        BoundResult(5, 4)
    with pytest.raises(InputError):
        BoundResult(1, source="guess")


# -- three paths ---------------------------------------------------------------------------

POLYGON_PRODUCTS = [
    (5,), (4, 5), (3, 3), (4, 6), (3, 4, 5), (6, 6, 6),
]


@pytest.mark.parametrize("sizes", POLYGON_PRODUCTS, ids=str)
def test_polygon_paths_agree(sizes):
    P = ProductType(tuple(PolygonType(m) for m in sizes))
    r_e = sum(m % 2 == 0 for m in sizes)
    r_o = len(sizes) - r_e
    for k in range(0, P.dim + 1):
        closed = edim_lower_polygon_products(P.num_facets, r_e, r_o, k)
        ilp = P.num_facets - 1 + knapsack_bound(polygon_knapsack(r_e, r_o, k)).value
        assert closed == ilp == linear_index_lower(P, k)[0] == brute_force_lower(P, k).sind


@pytest.mark.parametrize("n,r", [(2, 3), (3, 2), (4, 2), (5, 1), (3, 3)])
def test_simplex_paths_agree(n, r):
    P = ProductType((SimplexType(n),) * r)
    for k in range(0, r * (n - 1)):
        closed = edim_lower_simplex_products(n, r, k)
        ilp = knapsack_bound(simplex_knapsack(n, r, k)).value + r - 1
        assert closed == ilp == brute_force_lower(P, k).sind


def test_brute_force_reports_a_witness_type():
    bf = brute_force_lower(ProductType((PolygonType(5), PolygonType(5))), 0)
    assert bf.sind == 7 and bf.face_type.parts == (0, 0)
    assert bf.num_nonfaces == 10 and bf.chromatic_number == 2


# -- verdicts ---------------------------------------------------------------------------

def test_desargues_verdict():
    P = ProductType((SimplexType(2), SimplexType(3)))
    sind = sarkaria_index(cotype_complex(P, (1, 0)))
    cert = obstruction_verdict(3, 5, 1, 2, BoundResult(sind, sind=sind, source="brute_force"))
    assert sind == 3 and cert.threshold_e == 3 and cert.obstructed


def test_two_triangles():
    bound = BoundResult(3)
    assert obstruction_verdict(4, 6, 0, 2, bound).obstructed
    assert not obstruction_verdict(4, 6, 0, 3, bound).obstructed
    assert obstruct_simplex_products(3, 2, 0, 2).obstructed
    assert obstruct_simplex_products(3, 2, 0, 2).threshold_e == 3


def test_boundary_case_is_not_obstructed():
    d, m, e = 4, 9, 3
    cert = obstruction_verdict(d, m, 0, e, BoundResult(m - d - 2 + e))
    assert cert.threshold_e == e and not cert.obstructed


def test_verdict_validation():
    with pytest.raises(InputError):
        obstruction_verdict(4, 3, 0, 1, BoundResult(1))
    with pytest.raises(InputError):
        obstruction_verdict(4, 6, 4, 1, BoundResult(1))
    with pytest.raises(InputError):
        obstruction_verdict(4, 6, 0, 1, None)


def test_polygon_product_examples():
    cert = obstruct_polygon_products(0, 2, 0, 2)
    assert cert.obstructed and cert.threshold_e == 3
    for r in range(1, 8):
        assert obstruct_polygon_products(0, r, 0, r).obstructed
    # two squares: lower bound 3, so the threshold is 3 + 4 - 8 + 2
    cert = obstruct_polygon_products(2, 0, 0, 3)
    assert not cert.obstructed and cert.threshold_e == 1


def test_neighborly_examples():
    assert obstruct_neighborly_polygons(0, 4, 4).obstructed
    assert not obstruct_neighborly_polygons(1, 2, 4).obstructed
    assert obstruct_neighborly_polygons(1, 3, 4).obstructed
    assert not obstruct_neighborly_polygons(1, 1, 1).available


def test_neighborly_criterion_matches_bound_for_even_e():
    for r_e, r_o in product(range(6), repeat=2):
        for e in range(2, 4 * (r_e + r_o) + 1, 2):
            if r_e + r_o == 0:
                continue
            cert = obstruct_neighborly_polygons(r_e, r_o, e)
            if cert.available:
                assert cert.obstructed == neighborly_polygons_condition(r_e, r_o, e)


def test_neighborly_odd_e_uses_the_bound():
    # the two-branch criterion would claim (0, 2) at e = 3; the bound does not
    assert neighborly_polygons_condition(0, 2, 3)
    assert not obstruct_neighborly_polygons(0, 2, 3).obstructed


def test_van_kampen_flores_examples():
    assert van_kampen_flores(0, 1)
    assert van_kampen_flores(1, 3)
    assert not van_kampen_flores(1, 4)
    with pytest.raises(InputError):
        van_kampen_flores(-1, 0)


@pytest.mark.parametrize("k", range(0, 4))
def test_single_simplex_reproduces_van_kampen_flores(k):
    n = 2 * k + 3
    for e in range(0, 2 * k + 5):
        assert obstruct_simplex_products(n, 1, k, e).obstructed == van_kampen_flores(k, e)


def test_simplex_product_thresholds():
    assert obstruct_simplex_products(2 * 2 + 3, 1, 2, 5).obstructed
    cert = obstruct_simplex_products(2, 3, 0, 4)
    assert not cert.obstructed and cert.threshold_e == simplex_products_threshold(2, 3, 0) == 1


def test_wedge_special_examples():
    cert = obstruct_wedge_special_faces(4, 3, 2, 4)
    assert cert.threshold_e == 7 and cert.obstructed
    assert wedge_special_threshold(4, 2, 2) == obstruct_wedge_special_faces(4, 2, 2, 0).threshold_e == 3
    assert obstruct_wedge_special_faces(5, 4, 6, 0).threshold_e == 12
    assert not obstruct_wedge_special_faces(3, 3, 2, 1).available
    with pytest.raises(InputError):
        obstruct_wedge_special_faces(4, 3, 1, 1)


def test_wedge_skeleton_examples():
    cert = obstruct_wedge_skeleton(5, 3, 0, 3)
    assert cert.obstructed and cert.threshold_e == 4
    cert = obstruct_wedge_skeleton(4, 3, 1, 4)
    assert cert.obstructed and cert.threshold_e == 5
    cert = obstruct_wedge_skeleton(4, 3, 2, 7)
    assert not cert.obstructed and cert.threshold_e == 7
    assert obstruct_wedge_skeleton(4, 2, 0, 0).threshold_e == 1
    with pytest.raises(InputError):
        obstruct_wedge_skeleton(4, 3, 10, 1)


def test_wedge_surface_examples():
    cert = obstruct_wedge_surface(4, 3, 4)
    assert cert.obstructed and cert.threshold_e == 5
    assert obstruct_wedge_surface(6, 4, 6).obstructed
    for r in range(4, 7):
        for n in (3, 4):
            assert all(obstruct_wedge_surface(r, n, e).obstructed for e in range(r + 1))
            assert not obstruct_wedge_surface(r, n, r + 1).obstructed
    unavailable = obstruct_wedge_surface(4, 2, 4)
    assert not unavailable.available and not unavailable.obstructed
    assert not obstruct_wedge_surface(3, 3, 2).available
    with pytest.raises(InputError):
        obstruct_wedge_surface(2, 3, 1)


# -- properties ----------------------------------------------------------------------------

def verdict_families():
    for n, r in product(range(2, 6), range(1, 4)):
        yield range(0, r * (n - 1)), (lambda k, e, n=n, r=r: obstruct_simplex_products(n, r, k, e))
    for r_e, r_o in product(range(4), repeat=2):
        if r_e + r_o:
            yield range(0, 2 * (r_e + r_o)), (
                lambda k, e, a=r_e, b=r_o: obstruct_polygon_products(a, b, k, e))
    for r, n in product(range(4, 7), range(2, 5)):
        yield range(0, r * (n - 1) + 2), (lambda k, e, r=r, n=n: obstruct_wedge_skeleton(r, n, k, e))


FAMILIES = list(verdict_families())


@given(st.sampled_from(FAMILIES), st.data())
@settings(max_examples=200)
def test_verdicts_are_monotone(family, data):
    ks, verdict = family
    k = data.draw(st.sampled_from(ks))
    e = data.draw(st.integers(1, 30))
    if verdict(k, e).obstructed:
        assert verdict(k, e - 1).obstructed
        if k + 1 in ks:
            assert verdict(k + 1, e).obstructed


@given(st.sampled_from(FAMILIES), st.data())
@settings(max_examples=200)
def test_certificates_recheck(family, data):
    ks, verdict = family
    cert = verdict(data.draw(st.sampled_from(ks)), data.draw(st.integers(0, 30)))
    assert cert.recheck() == cert.obstructed
    assert cert.to_dict()["obstructed"] == cert.obstructed


def test_tampered_certificate_is_caught():
    cert = obstruct_simplex_products(3, 2, 0, 2)
    bad = ObstructionCertificate(**{**cert.__dict__, "threshold_e": cert.threshold_e + 1})
    with pytest.raises(ConsistencyError):
        bad.recheck()
