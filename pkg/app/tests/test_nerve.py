from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.modules.complex import Cochain, standard_space
from app.modules.exceptions import (
    CoefficientRingError,
    CompositionNotZeroError,
    DepthExceededError,
    InsufficientDepthError,
    InvalidActionError,
    ParseError,
)
from app.modules.nerve import (
    DoubleComplex,
    EquivariantCategory,
    TotalComplex,
    avg_contract,
    build_nerve,
    compare_h01,
    cyclic_action,
    delta,
    level_id,
    parse_group_action,
    total_cohomology,
    trivial_action,
)


ROTATION = {"v0": "v1", "v1": "v2", "v2": "v0", "e01": "e12", "e12": "e20", "e20": "e01"}


def point_with_group(order: int, depth: int):
    return build_nerve(trivial_action(standard_space("point"), order), depth)


@pytest.mark.parametrize(
    ("order", "degree", "expected"),
    [
        (2, 0, ("Z^1", "Q^1", "(Q/Z)^1")),
        (2, 1, ("0", "0", "Z/2")),
        (2, 2, ("Z/2", "0", "0")),
        (3, 2, ("Z/3", "0", "0")),
        (2, 3, ("0", "0", "Z/2")),
    ],
)
def test_cohomology_of_classifying_space(order: int, degree: int, expected: tuple[str, str, str]) -> None:
    total = TotalComplex(DoubleComplex.cochains(point_with_group(order, degree + 1), "Z"))
    groups = tuple(str(total_cohomology(total, degree, ring)) for ring in ("Z", "Q", "QZ"))
    assert groups == expected


@pytest.mark.parametrize(("degree", "expected"), [(0, "Z^1"), (1, "Z^1"), (2, "0")])
def test_free_action_sees_the_quotient(degree: int, expected: str) -> None:
    action = cyclic_action(standard_space("circle_3"), ROTATION, 3)
    total = TotalComplex(DoubleComplex.cochains(build_nerve(action, degree + 1), "Z"))
    assert str(total_cohomology(total, degree)) == expected


def test_total_cohomology_needs_depth() -> None:
    total = TotalComplex(DoubleComplex.cochains(point_with_group(2, 1), "Z"))
    with pytest.raises(InsufficientDepthError):
        total_cohomology(total, 1)


def test_dc_columns_shift_qz_cohomology() -> None:
    total = TotalComplex(DoubleComplex.dc(point_with_group(2, 3), 2))
    assert str(total_cohomology(total, 2)) == "Z/2"
    with pytest.raises(CoefficientRingError):
        total_cohomology(total, 2, "QZ")


def test_nerve_faces() -> None:
    nerve = build_nerve(cyclic_action(standard_space("circle_3"), ROTATION, 3), 2)
    assert nerve.level(1).count(0) == 9
    assert nerve.face(1, 0)(level_id((1,), "v0")) == "v1"
    assert nerve.face(1, 1)(level_id((1,), "v0")) == "v0"
    assert nerve.face(2, 1)(level_id((1, 2), "e01")) == level_id((0,), "e01")
    with pytest.raises(DepthExceededError):
        nerve.level(3)


def test_horizontal_differential_squares_to_zero() -> None:
    nerve = build_nerve(cyclic_action(standard_space("circle_3"), ROTATION, 3), 2)
    x = Cochain.from_mapping(nerve.level(0), 1, "Z", {"e01": 1, "e20": -2})
    assert delta(nerve, delta(nerve, x)).is_zero()
    with pytest.raises(DepthExceededError):
        delta(nerve, Cochain.zero(nerve.level(2), 0))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=2, max_size=2))
def test_averaging_contracts_columns(values: list[Fraction]) -> None:
    nerve = point_with_group(2, 2)
    f = nerve.from_copies(1, 0, "Q", {(0,): {"p": values[0]}, (1,): {"p": values[1]}})
    restored = avg_contract(nerve, delta(nerve, f)) + delta(nerve, avg_contract(nerve, f))
    assert restored == f


def test_averaging_requires_rational_values() -> None:
    nerve = point_with_group(2, 2)
    with pytest.raises(CoefficientRingError):
        avg_contract(nerve, Cochain.zero(nerve.level(1), 0, "Z"))


def test_equivariant_objects_are_homomorphisms() -> None:
    category = EquivariantCategory(point_with_group(2, 2), "QZ", 1)
    assert category.is_object(category.make((), (0, Fraction(1, 2))))
    assert not category.is_object(category.make((), (0, Fraction(1, 3))))
    sign = category.make((), (0, Fraction(1, 2)))
    assert category.find_morphism(sign, sign) is not None
    assert category.find_morphism(sign, category.make((), (0, 0))) is None


@pytest.mark.parametrize("ring", ["Z", "Q", "QZ"])
@pytest.mark.parametrize("degree", [0, 1])
def test_equivariant_category_matches_total(ring: str, degree: int) -> None:
    report = compare_h01(point_with_group(2, 2), ring, degree, samples=10, seed=7)
    assert report.agree, report.mismatches
    if ring == "QZ":
        assert report.exhaustive
        assert report.objects_found == 2


def test_equivariant_category_on_rotated_circle() -> None:
    nerve = build_nerve(cyclic_action(standard_space("circle_3"), ROTATION, 3), 2)
    report = compare_h01(nerve, "Z", 1, samples=8, seed=1)
    assert report.agree, report.mismatches


def test_negated_delta_gives_isomorphic_total() -> None:
    double = DoubleComplex.cochains(point_with_group(2, 3), "Z", delta_sign=-1)
    assert str(total_cohomology(TotalComplex(double), 2)) == "Z/2"


def test_double_complex_checks_commutation() -> None:
    nerve = build_nerve(cyclic_action(standard_space("circle_3"), ROTATION, 3), 1)
    good = DoubleComplex.cochains(nerve, "Z")
    only_vertices = {(0, 0): good.horizontal(0, 0)}
    with pytest.raises(CompositionNotZeroError):
        DoubleComplex(nerve, "Z", good.columns, only_vertices)


def test_parse_group_action() -> None:
    point = standard_space("point")
    action = parse_group_action("group 2\nmul 1 1 = 0\nact 1 p = p\n", point)
    assert action.order == 2
    assert action.inverse(1) == 1
    cyclic = parse_group_action("group 3\n", point)
    assert cyclic.mul(2, 2) == 1


@pytest.mark.parametrize(
    ("text", "line_no"),
    [
        ("mul 1 1 = 0\n", 1),
        ("group 2\nact 2 p = p\n", 2),
        ("group 2\nact 1 q = p\n", 2),
        ("group 2\nrotate 1\n", 2),
    ],
)
def test_parse_group_action_errors(text: str, line_no: int) -> None:
    with pytest.raises(ParseError) as info:
        parse_group_action(text, standard_space("point"), "g.grp")
    assert info.value.line_no == line_no


def test_invalid_actions() -> None:
    circle = standard_space("circle_3")
    with pytest.raises(InvalidActionError):
        parse_group_action("group 3\nmul 1 1 = 2\n", standard_space("point"))
    with pytest.raises(InvalidActionError):
        cyclic_action(circle, {"v0": "v1", "v1": "v0"}, 2)
    with pytest.raises(InvalidActionError):
        cyclic_action(circle, ROTATION, 2)


@pytest.mark.parametrize("ring", ["Z", "Q", "QZ"])
@pytest.mark.parametrize("degree", [0, 1])
def test_equivariant_category_of_swapped_points(ring: str, degree: int) -> None:
    action = cyclic_action(standard_space("two_points"), {"p0": "p1", "p1": "p0"}, 2)
    report = compare_h01(build_nerve(action, 2), ring, degree, samples=10, seed=3)
    assert report.agree, report.mismatches
