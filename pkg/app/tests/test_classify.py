from fractions import Fraction
from pathlib import Path
from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.modules.classify import (
    EquivariantGaugeField,
    GaugeField,
    GaugeTransformation,
    chern_morphism,
    chern_number,
    closed_basic_integral_forms,
    dch,
    equivariant_dch,
    equivariant_weil_lift,
    equivariant_weil_primitive,
    gauge_act,
    gauge_morphism,
    holonomy,
    kostant_eta,
    kostant_kernel_preimage,
    kostant_kernel_witness,
    kostant_sequence_check,
    nearest_int,
    parse_equivariant_gauge,
    parse_gauge_field,
    preq,
    weil_injectivity_witness,
    weil_lift,
    weil_project,
)
from app.modules.complex import Chain, Cochain, cycle_basis, parse_chain, standard_space
from app.modules.dccomplex import DCComplex, to_character
from app.modules.dccomplex import holonomy as character_holonomy
from app.modules.exceptions import (
    InsufficientDepthError,
    MonopoleError,
    NoPrimitiveError,
    NotACocycleError,
    NotCohomologousError,
    ParseError,
    PreconditionError,
)
from app.modules.nerve import DoubleComplex, TotalComplex, build_nerve, cyclic_action, trivial_action


FIXTURES = Path(__file__).parent / "fixtures"
ROTATION = {"v0": "v1", "v1": "v2", "v2": "v0", "e01": "e12", "e12": "e20", "e20": "e01"}


def unit_flux() -> GaugeField:
    """Поле с потоком 1/8 через каждую грань октаэдра."""
    return parse_gauge_field((FIXTURES / "flux1.gau").read_text(), standard_space("sphere_octahedron"))


def point_with_group(order: int, depth: int):
    return build_nerve(trivial_action(standard_space("point"), order), depth)


@pytest.mark.parametrize(
    ("value", "expected"),
    [(Fraction(1, 2), 1), (Fraction(-1, 2), 0), (Fraction(7, 8), 1), (Fraction(-3, 4), -1), (Fraction(0), 0)],
)
def test_nearest_int(value: Fraction, expected: int) -> None:
    assert nearest_int(value) == expected


def test_unit_flux_has_chern_number_one() -> None:
    field = unit_flux()
    x = dch(field)
    assert x.complex.is_cocycle(x)
    assert chern_number(field) == 1
    assert chern_number(x) == 1
    assert all(abs(v) == Fraction(1, 8) for v in x.omega.values)


def test_zero_field_has_no_flux() -> None:
    sphere = standard_space("sphere_octahedron")
    assert chern_number(GaugeField.zero(sphere)) == 0


def test_chern_number_needs_a_closed_surface() -> None:
    with pytest.raises(PreconditionError):
        chern_number(GaugeField.zero(standard_space("circle_3")))


def test_holonomy_along_a_loop() -> None:
    field = unit_flux()
    loop = parse_chain((FIXTURES / "nab_loop.chain").read_text(), field.space)
    assert holonomy(field, loop) == Fraction(1, 8)
    assert field.holonomy(loop) == Fraction(1, 8)


def test_monopole_is_detected() -> None:
    tetrahedron = standard_space("tetrahedron")
    field = GaugeField.from_mapping(
        tetrahedron, {"01": Fraction(1, 4), "12": Fraction(3, 4), "13": Fraction(1, 4)}
    )
    with pytest.raises(MonopoleError) as info:
        dch(field)
    assert info.value.simplex == "0123"
    assert info.value.charge == 1


def test_prequantization_inverts_dch() -> None:
    field = unit_flux()
    assert preq(dch(field)) == field
    circle = standard_space("circle_3")
    flat = GaugeField.from_mapping(circle, {"e01": Fraction(1, 3)})
    assert preq(dch(flat)) == flat


def test_prequantization_rejects_open_triples() -> None:
    sphere = standard_space("sphere_octahedron")
    with pytest.raises(NotACocycleError):
        preq(DCComplex(sphere, 2).triple(2, c={"Nab": 1}))


def test_integer_lift_changes_only_the_representative() -> None:
    field = unit_flux()
    shifted = field.lift() + Cochain.from_mapping(field.space, 1, "Q", {"ab": 1})
    x = dch(field, lift=shifted)
    assert x.h["ab"] == Fraction(9, 8)
    assert chern_number(x) == 1
    with pytest.raises(PreconditionError):
        dch(field, lift=field.lift() + Cochain.from_mapping(field.space, 1, "Q", {"ab": Fraction(1, 2)}))


def test_gauge_transformation_keeps_the_class() -> None:
    field = unit_flux()
    g = GaugeTransformation.from_mapping(field.space, {"a": Fraction(1, 3), "S": Fraction(1, 2)})
    transformed = gauge_act(g, field)
    assert chern_number(transformed) == chern_number(field)
    morphism = gauge_morphism(field, g)
    assert morphism.source.cocycle == dch(field).to_vector()
    assert morphism.target.cocycle == dch(transformed).to_vector()


def test_chern_morphism_of_gauge_transformations() -> None:
    sphere = standard_space("sphere_octahedron")
    constant = GaugeTransformation.from_mapping(sphere, {v: Fraction(1, 4) for v in "NabcdS"})
    automorphism = chern_morphism(constant)
    assert automorphism.target.cocycle == automorphism.source.cocycle
    jump = chern_morphism(GaugeTransformation.from_mapping(sphere, {"a": Fraction(1, 2)}))
    assert any(v != 0 for v in jump.target.cocycle)


def test_weil_lift_and_projection() -> None:
    sphere = standard_space("sphere_octahedron")
    c = Cochain.from_mapping(sphere, 2, "Z", {"Nab": 1})
    x = weil_lift(c)
    assert x.complex.is_cocycle(x)
    assert weil_project(x) == c
    spread = Cochain.from_mapping(sphere, 2, "Q", {"Nab": Fraction(1, 2), "Nbc": Fraction(1, 2)})
    y = weil_lift(c, spread)
    assert y.omega == spread
    assert weil_project(y) == c


def test_weil_lift_rejects_wrong_curvature() -> None:
    sphere = standard_space("sphere_octahedron")
    c = Cochain.from_mapping(sphere, 2, "Z", {"Nab": 1})
    with pytest.raises(NotCohomologousError):
        weil_lift(c, Cochain.from_mapping(sphere, 2, "Q", {"Nab": 2}))
    tetrahedron = standard_space("tetrahedron")
    with pytest.raises(NotACocycleError):
        weil_lift(Cochain.from_mapping(tetrahedron, 2, "Z", {"012": 1}))


def test_exact_projection_has_a_primitive() -> None:
    sphere = standard_space("sphere_octahedron")
    exact = Cochain.from_mapping(sphere, 2, "Z", {"Nab": 1, "abS": 1})
    x = weil_lift(exact)
    y = weil_injectivity_witness(x)
    assert y.degree == 1
    assert x.complex.diff(y) == x
    with pytest.raises(NoPrimitiveError):
        weil_injectivity_witness(weil_lift(Cochain.from_mapping(sphere, 2, "Z", {"Nab": 1})))


def test_equivariant_weil_lift() -> None:
    nerve = point_with_group(2, 3)
    integral = TotalComplex(DoubleComplex.cochains(nerve, "Z"))
    # перенос при сложении в ℤ/2
    carry = integral.to_vector(2, {2: (0, 0, 0, 1)})
    lifted, x = equivariant_weil_lift(integral, carry)
    assert not any(lifted.d_tot(2, x))
    with pytest.raises(NoPrimitiveError):
        equivariant_weil_primitive(lifted, x)
    lifted, doubled = equivariant_weil_lift(integral, integral.to_vector(2, {2: (0, 0, 0, 2)}))
    y = equivariant_weil_primitive(lifted, doubled)
    assert lifted.d_tot(1, y) == doubled


def test_invariant_field_gives_total_cocycle() -> None:
    circle = standard_space("circle_3")
    nerve = build_nerve(cyclic_action(circle, ROTATION, 3), 3)
    field = GaugeField.from_mapping(circle, {e: Fraction(1, 3) for e in ("e01", "e12", "e20")})
    equivariant = EquivariantGaugeField.invariant(nerve, field)
    total, x = equivariant.to_total_cocycle()
    assert not any(total.d_tot(2, x))
    assert equivariant_dch(equivariant)[1] == x


def test_equivariant_field_checks_descent() -> None:
    circle = standard_space("circle_3")
    nerve = build_nerve(cyclic_action(circle, ROTATION, 3), 2)
    with pytest.raises(NotACocycleError):
        EquivariantGaugeField.invariant(nerve, GaugeField.from_mapping(circle, {"e01": Fraction(1, 3)}))
    shallow = EquivariantGaugeField.invariant(nerve, GaugeField.zero(circle))
    with pytest.raises(InsufficientDepthError):
        equivariant_dch(shallow)


def test_parse_equivariant_gauge() -> None:
    circle = standard_space("circle_3")
    nerve = build_nerve(cyclic_action(circle, ROTATION, 3), 2)
    text = "space circle_3\ngauge\ne01 = 1/3\ne12 = 1/3\ne20 = 1/3\ndescent\n"
    field = parse_equivariant_gauge(text, nerve)
    assert field.t.is_zero()
    with pytest.raises(ParseError) as info:
        parse_equivariant_gauge(text + "0|v0 = 1/2\n", nerve, "circle.gau")
    assert info.value.line_no == 6


@pytest.mark.parametrize(
    ("text", "line_no"),
    [
        ("ab = 1/8\n", 1),
        ("gauge\nab = 1\n", 2),
        ("gauge\nNab = 1/2\n", 2),
        ("gauge\nab = 1/8\ndescent\nv = 0\n", 4),
    ],
)
def test_gauge_parse_errors(text: str, line_no: int) -> None:
    with pytest.raises(ParseError) as info:
        parse_gauge_field(text, standard_space("sphere_octahedron"), "x.gau")
    assert info.value.line_no == line_no


def test_kostant_sequence_on_classifying_space() -> None:
    report = kostant_sequence_check(point_with_group(2, 3), samples=5, seed=3)
    assert str(report.kernel) == "Z/2"
    assert str(report.curvature) == "0"
    assert str(report.h2) == "Z/2"
    assert report.forms_checked == 0
    assert report.samples_checked == 5


def test_kostant_sequence_on_torus() -> None:
    nerve = build_nerve(trivial_action(standard_space("torus_min")), 3)
    report = kostant_sequence_check(nerve, samples=3)
    assert str(report.kernel) == "(Q/Z)^2"
    assert str(report.curvature) == "Z^1 + Q^1"
    assert str(report.h2) == "Z^1 + Q^1 + (Q/Z)^2"
    assert closed_basic_integral_forms(nerve).group == report.curvature


def test_kostant_sequence_needs_depth() -> None:
    with pytest.raises(InsufficientDepthError):
        kostant_sequence_check(point_with_group(2, 2))


def test_flat_kernel_round_trip() -> None:
    nerve = point_with_group(2, 3)
    total = TotalComplex(DoubleComplex.dc(nerve, 2))
    integral = TotalComplex(DoubleComplex.cochains(nerve, "Z"))
    sign = integral.to_vector(1, {1: (0, Fraction(1, 2))})
    x = kostant_kernel_preimage(total, sign)
    assert kostant_eta(total, x) == ()
    assert kostant_kernel_witness(total, x) == sign


def test_curvature_blocks_the_kernel_witness() -> None:
    sphere = standard_space("sphere_octahedron")
    nerve = build_nerve(trivial_action(sphere), 3)
    total, x = EquivariantGaugeField.invariant(nerve, GaugeField.from_mapping(sphere, {"ab": Fraction(1, 8)})).to_total_cocycle()
    assert kostant_eta(total, x)[0] == Fraction(1, 8)
    with pytest.raises(PreconditionError):
        kostant_kernel_witness(total, x)


def test_character_of_a_gauge_field() -> None:
    field = unit_flux()
    loop = Chain.from_mapping(field.space, 1, {"ab": 1, "Nb": -1, "Na": 1})
    assert character_holonomy(to_character(dch(field)), loop) == Fraction(1, 8)


@pytest.mark.parametrize("k", range(-2, 3))
def test_weil_round_trip_on_sphere(k: int) -> None:
    c = Cochain.from_mapping(standard_space("sphere_octahedron"), 2, "Z", {"Nab": k})
    x = weil_lift(c)
    assert weil_project(x) == c
    assert chern_number(x) == k


def test_weil_lift_sees_torsion() -> None:
    rp2 = standard_space("rp2_min")
    lower = weil_lift(Cochain.from_mapping(rp2, 2, "Z", {"L": 1}))
    upper = weil_lift(Cochain.from_mapping(rp2, 2, "Z", {"U": 1}))
    category = lower.complex.category(2)
    source = category.object(lower.to_vector())
    assert category.hom_exists(source, category.object(upper.to_vector())) is not None
    assert category.hom_exists(source, category.zero_object()) is None


@pytest.mark.parametrize(("order", "expected"), [(2, "Z/2"), (3, "Z/3")])
def test_kostant_samples_are_cocycles(order: int, expected: str) -> None:
    report = kostant_sequence_check(point_with_group(order, 3), samples=5, seed=11)
    assert str(report.kernel) == expected
    assert str(report.h2) == expected
    assert report.samples_checked == 5


HALVES = st.sampled_from([Fraction(0), Fraction(1, 2)])


def random_field(data: st.DataObject, space) -> GaugeField:
    values = data.draw(st.lists(HALVES, min_size=space.count(1), max_size=space.count(1)))
    return GaugeField(Cochain(space, 1, "QZ", tuple(values)))


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_prequantization_recovers_the_class(data: st.DataObject) -> None:
    torus = standard_space("torus_min")
    dc = DCComplex(torus, 2)
    n_edges, n_vertices = torus.count(1), torus.count(0)
    c = data.draw(st.lists(st.integers(-2, 2), min_size=n_edges, max_size=n_edges))
    h = data.draw(st.lists(st.fractions(min_value=-2, max_value=2, max_denominator=4), min_size=n_vertices, max_size=n_vertices))
    y = dc.triple(1, c=Cochain(torus, 1, "Z", tuple(c)), h=Cochain(torus, 0, "Q", tuple(h)))
    x = dch(random_field(data, torus), dc=dc) + dc.diff(y)
    category = dc.category(2)
    assert category.hom_triples(dch(preq(x), dc=dc), x) is not None


@pytest.mark.parametrize("name", ["circle_3", "torus_min"])
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_curvature_and_holonomy_classify_fields(name: str, data: st.DataObject) -> None:
    space = standard_space(name)
    first, second = random_field(data, space), random_field(data, space)
    x, y = dch(first), dch(second)
    loops = cycle_basis(space, 1).generators
    same = x.omega == y.omega and all(holonomy(first, z) == holonomy(second, z) for z in loops)
    assert (x.complex.category(2).hom_triples(x, y) is not None) == same


@settings(max_examples=20, deadline=None)
@given(data=st.data())
def test_dch_does_not_depend_on_the_lift(data: st.DataObject) -> None:
    torus = standard_space("torus_min")
    field = random_field(data, torus)
    shift = data.draw(st.lists(st.integers(-3, 3), min_size=torus.count(1), max_size=torus.count(1)))
    shifted = field.lift() + Cochain(torus, 1, "Q", tuple(Fraction(k) for k in shift))
    dc = DCComplex(torus, 2)
    assert dc.category(2).hom_triples(dch(field, dc=dc), dch(field, shifted, dc)) is not None


def test_chern_morphism_does_not_depend_on_the_lift() -> None:
    circle = standard_space("circle_3")
    g = GaugeTransformation.from_mapping(circle, {"v0": Fraction(1, 2)})
    half = chern_morphism(g)
    three_halves = chern_morphism(g, Cochain.from_mapping(circle, 0, "Q", {"v0": Fraction(3, 2)}))
    assert half.representative != three_halves.representative
    assert DCComplex(circle, 1).category(2).morphisms_equal(half, three_halves)


SWAP = {f"{side}.{s}": f"{other}.{s}" for side, other in (("L", "R"), ("R", "L")) for s in ROTATION}

EQUIVARIANT_NERVES = {
    "z2_point": lambda: point_with_group(2, 3),
    "z3_point": lambda: point_with_group(3, 3),
    "z2_two_circles": lambda: build_nerve(cyclic_action(standard_space("two_circles"), SWAP, 2), 3),
}


@pytest.mark.parametrize("name", sorted(EQUIVARIANT_NERVES))
def test_every_total_cocycle_lifts(name: str) -> None:
    integral = TotalComplex(DoubleComplex.cochains(EQUIVARIANT_NERVES[name](), "Z"))
    finite = integral.finite_complex
    generators = [v for v, _ in finite.cocycle_generators(2).integral]
    rng = Random(5)
    cocycles = list(generators)
    for _ in range(5):
        coefficients = [rng.randint(-2, 2) for _ in generators]
        cocycles.append(tuple(
            sum((k * v[i] for k, v in zip(coefficients, generators)), Fraction(0)) for i in range(finite.dim(2))
        ))
    for cocycle in cocycles:
        lifted, x = equivariant_weil_lift(integral, cocycle)
        assert not any(lifted.d_tot(2, x))


@pytest.mark.parametrize("name", sorted(EQUIVARIANT_NERVES))
def test_exact_total_cocycle_lifts_to_exact(name: str) -> None:
    integral = TotalComplex(DoubleComplex.cochains(EQUIVARIANT_NERVES[name](), "Z"))
    finite = integral.finite_complex
    rng = Random(9)
    b = tuple(rng.randint(-3, 3) for _ in range(finite.dim(1)))
    lifted, x = equivariant_weil_lift(integral, finite.apply_d(1, b))
    y = equivariant_weil_primitive(lifted, x)
    assert lifted.d_tot(1, y) == x


@pytest.mark.parametrize("k", range(-2, 3))
def test_weil_round_trip_on_torus(k: int) -> None:
    torus = standard_space("torus_min")
    c = Cochain.from_mapping(torus, 2, "Z", {"T1": k})
    x = weil_lift(c)
    assert weil_project(x) == c
    # фундаментальный цикл T1 − T2
    opposite = weil_lift(Cochain.from_mapping(torus, 2, "Z", {"T2": -k}))
    assert x.complex.category(2).hom_triples(x, opposite) is not None


def test_sphere_weil_classes_are_distinct() -> None:
    sphere = standard_space("sphere_octahedron")
    lifts = [weil_lift(Cochain.from_mapping(sphere, 2, "Z", {"Nab": k})) for k in range(-2, 3)]
    category = lifts[0].complex.category(2)
    for i, x in enumerate(lifts):
        for j, y in enumerate(lifts):
            assert (category.hom_triples(x, y) is not None) == (i == j)
