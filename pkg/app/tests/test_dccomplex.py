from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.modules.complex import Chain, Cochain, standard_space
from app.modules.dccomplex import (
    DCComplex,
    DiffCharacter,
    OmegaModel,
    character_check,
    characters_equal,
    dc_cocycles_h2,
    dc_diff,
    holonomy,
    parse_dc_triple,
    to_character,
    write_dc_triple,
)
from app.modules.exceptions import DimensionMismatchError, NotACocycleError, ParseError, PreconditionError


@pytest.mark.parametrize("name", ["point", "circle_3", "torus_min", "sphere_octahedron"])
@pytest.mark.parametrize("s", [1, 2])
def test_degree_zero_vanishes(name: str, s: int) -> None:
    assert str(DCComplex(standard_space(name), s).cohomology(0)) == "0"


@pytest.mark.parametrize(
    ("name", "s", "degree", "expected"),
    [
        ("point", 1, 1, "(Q/Z)^1"),
        ("circle_3", 2, 1, "(Q/Z)^1"),
        ("circle_3", 2, 2, "(Q/Z)^1"),
        ("circle_3", 1, 1, "Z^1 + Q^2 + (Q/Z)^1"),
        ("sphere_octahedron", 2, 2, "Z^1 + Q^7"),
        ("sphere_octahedron", 2, 3, "0"),
        ("sphere_octahedron", 1, 2, "Z^1"),
        ("rp2_min", 1, 2, "Z/2"),
    ],
)
def test_dc_cohomology(name: str, s: int, degree: int, expected: str) -> None:
    assert str(DCComplex(standard_space(name), s).cohomology(degree)) == expected


def test_projection_is_an_isomorphism_above_s() -> None:
    dc = DCComplex(standard_space("sphere_octahedron"), 1)
    assert dc.projection().induces_isomorphism(2)


@settings(max_examples=30, deadline=None)
@given(
    st.lists(st.integers(-3, 3), min_size=12, max_size=12),
    st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=6, max_size=6),
)
def test_differential_squares_to_zero(c: list[int], h: list[Fraction]) -> None:
    sphere = standard_space("sphere_octahedron")
    dc = DCComplex(sphere, 2)
    x = dc.triple(1, c=Cochain(sphere, 1, "Z", tuple(c)), h=Cochain(sphere, 0, "Q", tuple(h)))
    assert dc_diff(dc_diff(x)).is_zero()


def test_missing_slot_is_rejected() -> None:
    dc = DCComplex(standard_space("circle_3"), 2)
    with pytest.raises(DimensionMismatchError):
        dc.triple(1, omega={"e01": 1})


def test_triples_form_a_group() -> None:
    dc = DCComplex(standard_space("circle_3"), 1)
    x = dc.triple(1, c={"e01": 1}, h={"v0": Fraction(1, 2)}, omega={"e12": 2})
    y = dc.triple(1, c={"e12": -1}, omega={"e12": 1})
    assert (x + y) - y == x
    assert (x - x).is_zero()
    assert dc.from_vector(1, x.to_vector()) == x


def test_flat_character_from_triple() -> None:
    circle = standard_space("circle_3")
    x = DCComplex(circle, 2).triple(2, h={"e01": Fraction(1, 4)})
    loop = Chain.from_mapping(circle, 1, {"e01": 1, "e12": 1, "e20": 1})
    character = to_character(x)
    assert holonomy(character, loop) == Fraction(1, 4)
    a = Cochain.from_mapping(circle, 1, "QZ", {"e01": Fraction(1, 4)})
    assert characters_equal(character, DiffCharacter.flat(a))


def test_character_with_curvature() -> None:
    sphere = standard_space("sphere_octahedron")
    x = DCComplex(sphere, 2).triple(2, c={"Nab": 1}, omega={"Nab": 1})
    character = to_character(x)
    assert character_check(character)
    assert character.curvature_on(Chain.simplex(sphere, "Nab")) == 1
    broken = DiffCharacter(
        sphere,
        2,
        Cochain.from_mapping(sphere, 2, "Q", {"Nab": Fraction(1, 2)}),
        character.basis,
        character.values,
    )
    assert not character_check(broken)


def test_non_closed_triple_has_no_character() -> None:
    sphere = standard_space("sphere_octahedron")
    x = DCComplex(sphere, 2).triple(2, c={"Nab": 1})
    with pytest.raises(NotACocycleError):
        to_character(x)


def test_category_of_characters() -> None:
    sphere = standard_space("sphere_octahedron")
    category = dc_cocycles_h2(sphere)
    dc = category.dc
    x = dc.triple(2, c={"Nab": 1}, omega={"Nab": 1})
    # x + d(δ_ab, 0): та же кривизна
    y = dc.triple(2, c={"Nab": 2, "abS": 1}, h={"ab": -1}, omega={"Nab": 1})
    assert category.is_cocycle(y)
    f = category.hom_triples(x, y)
    assert f is not None
    b = category.representative(f)
    assert dc.diff(b) == y - x
    assert category.hom_triples(x, dc.zero(2)) is None


def test_omega_model_checks() -> None:
    circle = standard_space("circle_3")
    model = OmegaModel.from_cochains(circle, {0: [(1, 1, 1)], 1: [(1, 0, 0)]})
    assert model.rank(0) == 1
    assert model.inclusion_is_quasi_isomorphism
    with pytest.raises(PreconditionError):
        OmegaModel.from_cochains(circle, {0: [(1, 0, 0)], 1: [(1, 0, 0)]})
    with pytest.raises(PreconditionError):
        OmegaModel.from_cochains(circle, {1: [(1, 0, 0), (2, 0, 0)]})


def test_triple_text_round_trip() -> None:
    sphere = standard_space("sphere_octahedron")
    text = "space sphere_octahedron\ndc 2 s 2\nc:\nNab = 1\nh:\nab = 1/2\nomega:\nNab = 1\nabS = 1/2\nNbc = -1/2\n"
    x = parse_dc_triple(text, sphere)
    assert x.h["ab"] == Fraction(1, 2)
    assert x.omega["abS"] == Fraction(1, 2)
    again = parse_dc_triple(write_dc_triple(x), sphere)
    assert again.to_vector() == x.to_vector()


@pytest.mark.parametrize(
    ("text", "line_no"),
    [
        ("dc 2 s 2\nNab = 1\n", 2),
        ("dc 2\n", 1),
        ("dc 2 s 2\nc:\nNab = 1\nc:\n", 4),
        ("dc 1 s 2\nomega:\nab = 1\n", 2),
        ("dc 2 s 2\nh:\ndegree 2 ring Q\n", 3),
    ],
)
def test_triple_parse_errors(text: str, line_no: int) -> None:
    with pytest.raises(ParseError) as info:
        parse_dc_triple(text, standard_space("sphere_octahedron"), "x.dc")
    assert info.value.line_no == line_no
