from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.modules.complex import (
    Chain,
    Cochain,
    DeltaComplex,
    boundary,
    coboundary,
    cycle_basis,
    evaluate,
    fundamental_cycle,
    is_cocycle,
    parse_chain,
    parse_cochain,
    parse_complex,
    standard_space,
    write_cochain,
    write_complex,
)
from app.modules.exactalg import cohomology_of, cohomology_qz, cohomology_rational
from app.modules.exceptions import (
    CoefficientRingError,
    DegreeMismatchError,
    InvalidComplexError,
    NotACycleError,
    ParseError,
    UnknownSpaceError,
)


# (пространство, степень) -> H^n над Z, Q и Q/Z
CLASSICAL_COHOMOLOGY = {
    ("point", 0): ("Z^1", "Q^1", "(Q/Z)^1"),
    ("two_points", 0): ("Z^2", "Q^2", "(Q/Z)^2"),
    ("circle_3", 0): ("Z^1", "Q^1", "(Q/Z)^1"),
    ("circle_3", 1): ("Z^1", "Q^1", "(Q/Z)^1"),
    ("torus_min", 1): ("Z^2", "Q^2", "(Q/Z)^2"),
    ("torus_min", 2): ("Z^1", "Q^1", "(Q/Z)^1"),
    ("rp2_min", 1): ("0", "0", "Z/2"),
    ("rp2_min", 2): ("Z/2", "0", "0"),
    ("sphere_octahedron", 1): ("0", "0", "0"),
    ("sphere_octahedron", 2): ("Z^1", "Q^1", "(Q/Z)^1"),
    ("tetrahedron", 3): ("0", "0", "0"),
}


@pytest.mark.parametrize(("name", "degree"), sorted(CLASSICAL_COHOMOLOGY))
def test_classical_cohomology(name: str, degree: int) -> None:
    complex_ = standard_space(name).cochain_complex
    expected_z, expected_q, expected_qz = CLASSICAL_COHOMOLOGY[(name, degree)]
    assert str(cohomology_of(complex_, degree)) == expected_z
    assert str(cohomology_rational(complex_, degree)) == expected_q
    assert str(cohomology_qz(complex_, degree)) == expected_qz


def test_euler_characteristic() -> None:
    assert standard_space("torus_min").euler_characteristic() == 0
    assert standard_space("sphere_octahedron").euler_characteristic() == 2
    assert standard_space("rp2_min").euler_characteristic() == 1
    assert standard_space("two_circles").components() == 2


def test_unknown_space() -> None:
    with pytest.raises(UnknownSpaceError):
        standard_space("klein_bottle")


def test_simplicial_identities_are_checked() -> None:
    with pytest.raises(InvalidComplexError):
        DeltaComplex([("v", []), ("w", []), ("a", ["w", "v"]), ("b", ["v", "v"]), ("T", ["a", "b", "b"])])


def test_duplicate_simplex_is_rejected() -> None:
    with pytest.raises(InvalidComplexError):
        DeltaComplex([("v", []), ("v", [])])


def test_vertices_of_ordered_simplex() -> None:
    tetrahedron = standard_space("tetrahedron")
    assert tetrahedron.vertices("0123") == ("0", "1", "2", "3")
    assert tetrahedron.faces("0123") == ("123", "023", "013", "012")


@pytest.mark.parametrize("name", ["circle_3", "torus_min", "rp2_min", "sphere_octahedron", "tetrahedron"])
def test_coboundary_squares_to_zero(name: str) -> None:
    space = standard_space(name)
    for degree in range(space.dimension - 1):
        for simplex_id in space.simplices(degree):
            x = Cochain.indicator(space, simplex_id)
            assert coboundary(coboundary(x)).is_zero()


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=6, max_size=6))
def test_pairing_is_adjoint(values: list[int]) -> None:
    space = standard_space("sphere_octahedron")
    x = Cochain(space, 0, "Z", tuple(values))
    for simplex_id in space.simplices(1):
        edge = Chain.simplex(space, simplex_id)
        assert evaluate(coboundary(x), edge) == evaluate(x, boundary(edge))


def test_fundamental_cycles() -> None:
    torus = standard_space("torus_min")
    assert fundamental_cycle(torus).support() == {"T1": 1, "T2": -1}
    sphere = standard_space("sphere_octahedron")
    assert fundamental_cycle(sphere).coefficients == (1, 1, 1, -1, -1, -1, -1, 1)
    assert fundamental_cycle(standard_space("rp2_min")) is None


def test_cycle_basis_of_projective_plane() -> None:
    basis = cycle_basis(standard_space("rp2_min"), 1)
    assert sorted(basis.divisors) == [1, 2]
    for z, d in basis.torsion:
        assert d == 2
    for witness, z, d in zip(basis.witnesses, basis.generators, basis.divisors):
        if witness is not None:
            assert boundary(witness) == z.scaled(d)


def test_cycle_coordinates_reject_non_cycle() -> None:
    circle = standard_space("circle_3")
    basis = cycle_basis(circle, 1)
    loop = Chain.from_mapping(circle, 1, {"e01": 1, "e12": 1, "e20": 1})
    assert [abs(c) for c in basis.coordinates(loop)] == [1]
    with pytest.raises(NotACycleError):
        basis.coordinates(Chain.simplex(circle, "e01"))


def test_qz_cochains_reduce_mod_one() -> None:
    circle = standard_space("circle_3")
    x = Cochain.from_mapping(circle, 1, "QZ", {"e01": Fraction(5, 4), "e12": Fraction(-1, 4)})
    assert x["e01"] == Fraction(1, 4)
    assert x["e12"] == Fraction(3, 4)
    loop = Chain.from_mapping(circle, 1, {"e01": 1, "e12": 1, "e20": 1})
    assert evaluate(x, loop) == 0
    assert x.lift().ring == "Q"


def test_integer_cochain_rejects_fractions() -> None:
    with pytest.raises(CoefficientRingError):
        Cochain.from_mapping(standard_space("circle_3"), 1, "Z", {"e01": Fraction(1, 2)})


def test_pairing_checks_degrees() -> None:
    circle = standard_space("circle_3")
    with pytest.raises(DegreeMismatchError):
        evaluate(Cochain.zero(circle, 0), Chain.simplex(circle, "e01"))


def test_constant_zero_cochain_is_a_cocycle() -> None:
    circle = standard_space("circle_3")
    assert is_cocycle(Cochain.constant(circle, 0, 3))
    assert not is_cocycle(Cochain.indicator(circle, "v0"))


def test_parse_complex_round_trip() -> None:
    torus = standard_space("torus_min")
    parsed = parse_complex(write_complex(torus), "torus.dcx")
    assert parsed.name == "torus"
    assert parsed.all_simplices == torus.all_simplices
    assert str(cohomology_of(parsed.cochain_complex, 1)) == "Z^2"


def test_parse_complex_reports_line_numbers() -> None:
    text = "simplex v\n# комментарий\nsimplex a : v v\nsimplex T : a a b\n"
    with pytest.raises(ParseError) as info:
        parse_complex(text, "bad.dcx")
    assert info.value.source == "bad.dcx"
    assert info.value.line_no == 4


def test_parse_complex_reports_broken_identity_at_its_line() -> None:
    text = "simplex v\nsimplex w\nsimplex a : w v\nsimplex b : v v\nsimplex T : a b b\n"
    with pytest.raises(ParseError) as info:
        parse_complex(text, "bad.dcx")
    assert info.value.line_no == 5


def test_parse_cochain() -> None:
    circle = standard_space("circle_3")
    x = parse_cochain("space circle_3\ndegree 1 ring Q\ne01 = 1/3\n", circle)
    assert x.ring == "Q"
    assert x.support() == {"e01": Fraction(1, 3)}
    assert parse_cochain(write_cochain(x), circle) == x


@pytest.mark.parametrize(
    ("text", "line_no"),
    [
        ("degree 1 ring Z\ne01 = 1/2\n", 2),
        ("degree 1 ring R\n", 1),
        ("degree 1 ring Z\nv0 = 1\n", 2),
        ("e01 = 1\n", 1),
        ("degree 1 ring Q\n\ne01 = 1/0\n", 3),
    ],
)
def test_parse_cochain_errors(text: str, line_no: int) -> None:
    with pytest.raises(ParseError) as info:
        parse_cochain(text, standard_space("circle_3"), "x.coc")
    assert info.value.line_no == line_no


def test_parse_chain() -> None:
    sphere = standard_space("sphere_octahedron")
    z = parse_chain("chain 1\nab = 1\nNb = -1\nNa = 1\n", sphere)
    assert z.support() == {"Na": 1, "Nb": -1, "ab": 1}
    assert boundary(z).is_zero()
    with pytest.raises(ParseError):
        parse_chain("chain 1\nab = 1/2\n", sphere)
