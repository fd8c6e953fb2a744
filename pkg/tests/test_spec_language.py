import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyobstruct.errors import InputError, SpecParseError
from polyobstruct.polytopes import PolygonType, ProductType, SimplexType, WedgeProductType
from polyobstruct.spec_language import parse_spec, render


def test_two_pentagons():
    P = parse_spec("product:(polygon:5,polygon:5)")
    assert P == ProductType((PolygonType(5), PolygonType(5)))
    assert (P.dim, P.num_facets) == (4, 10)


def test_wedge():
    W = parse_spec("wedge:4,3")
    assert W == WedgeProductType(4, 3)
    assert (W.dim, W.num_facets) == (10, 12)


def test_whitespace_is_ignored():
    assert parse_spec("  product:( simplex:3 , polygon:4 ) ") == ProductType(
        (SimplexType(3), PolygonType(4)))


def test_nested_products_keep_their_shape():
    P = parse_spec("product:(simplex:3,product:(polygon:4,simplex:2))")
    assert isinstance(P.factors[1], ProductType)
    assert render(P) == "product:(simplex:3,product:(polygon:4,simplex:2))"


@pytest.mark.parametrize("text", ["polygon:2", "simplex:1", "wedge:2,3", "wedge:4,1"])
def test_out_of_range_parameters(text):
    with pytest.raises(InputError):
        parse_spec(text)


@pytest.mark.parametrize("text,position", [
    ("polygon:", 8),
    ("cube:3", 0),
    ("product:()", 9),
    ("polygon:5 x", 10),
    ("product:(polygon:5", 18),
    ("wedge:4;3", 7),
    ("", 0),
])
def test_syntax_errors_carry_a_position(text, position):
    with pytest.raises(SpecParseError) as info:
        parse_spec(text)
    assert info.value.position == position
    assert info.value.text == text


leaves = st.one_of(
    st.builds(PolygonType, st.integers(3, 40)),
    st.builds(SimplexType, st.integers(2, 40)),
    st.builds(WedgeProductType, st.integers(3, 9), st.integers(2, 9)),
)
specs = st.recursive(
    leaves,
    lambda children: st.lists(children, min_size=1, max_size=3).map(
        lambda fs: ProductType(tuple(fs))),
    max_leaves=8,
)


@given(specs)
def test_round_trip(P):
    assert parse_spec(render(P)) == P
    assert render(parse_spec(render(P))) == render(P)
