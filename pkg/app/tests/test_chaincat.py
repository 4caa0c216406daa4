from fractions import Fraction
from random import Random

import pytest

from app.modules.chaincat import (
    ChainCategory,
    ChainHomotopy,
    ChainMap,
    FiniteComplex,
    induced_functor,
    induced_nat_trans,
    is_equivalence,
)
from app.modules.complex import standard_space
from app.modules.exactalg import RatMatrix, solve_integer
from app.modules.exceptions import (
    CoefficientRingError,
    CompositionMismatchError,
    CompositionNotZeroError,
    NotACocycleError,
    NotAChainMapError,
    NotAHomotopyError,
)


def doubling() -> FiniteComplex:
    """`ℤ --2--> ℤ`: `H^0 = 0`, `H^1 = ℤ/2`."""
    return FiniteComplex(rings=(("Z",), ("Z",)), differentials=(RatMatrix.from_rows([[2]]),))


def circle_of_values() -> FiniteComplex:
    """`ℤ --1--> ℚ`: `H^1 = ℚ/ℤ`."""
    return FiniteComplex(rings=(("Z",), ("Q",)), differentials=(RatMatrix.from_rows([[1]]),))


def acyclic() -> FiniteComplex:
    return FiniteComplex(rings=(("Z",), ("Z",)), differentials=(RatMatrix.from_rows([[1]]),))


def test_mixed_cohomology() -> None:
    assert str(doubling().cohomology(1)) == "Z/2"
    assert str(circle_of_values().cohomology(0)) == "0"
    assert str(circle_of_values().cohomology(1)) == "(Q/Z)^1"
    assert str(acyclic().cohomology(1)) == "0"
    assert str(doubling().direct_sum(circle_of_values()).cohomology(1)) == "Z/2 + (Q/Z)^1"


def test_rational_coordinates_cannot_feed_integral_ones() -> None:
    with pytest.raises(CoefficientRingError):
        FiniteComplex(rings=(("Q",), ("Z",)), differentials=(RatMatrix.from_rows([[1]]),))


def test_differential_must_square_to_zero() -> None:
    with pytest.raises(CompositionNotZeroError):
        FiniteComplex(
            rings=(("Z",), ("Z",), ("Z",)),
            differentials=(RatMatrix.from_rows([[1]]), RatMatrix.from_rows([[1]])),
        )


def test_category_of_rational_values_mod_integers() -> None:
    category = ChainCategory(circle_of_values(), 1)
    half = category.object([Fraction(1, 2)])
    three_halves = category.object([Fraction(3, 2)])
    third = category.object([Fraction(1, 3)])
    f = category.hom_exists(half, three_halves)
    assert f is not None
    assert f.representative == (1,)
    assert category.hom_exists(half, third) is None
    assert str(category.automorphisms(half)) == "0"
    assert str(category.isomorphism_classes()) == "(Q/Z)^1"


def test_morphisms_compose_by_addition() -> None:
    category = ChainCategory(doubling(), 1)
    z0, z2, z6 = (category.object([v]) for v in (0, 2, 6))
    f = category.morphism(z0, z2, [1])
    g = category.morphism(z2, z6, [2])
    h = category.compose(f, g)
    assert h.representative == (3,)
    assert category.morphisms_equal(h, category.morphism(z0, z6, [3]))
    assert category.compose(f, category.inverse(f)).representative == (0,)
    with pytest.raises(CompositionMismatchError):
        category.compose(g, f)
    with pytest.raises(NotACocycleError):
        category.morphism(z0, z6, [1])


def test_chain_map_must_commute_with_differentials() -> None:
    with pytest.raises(NotAChainMapError):
        ChainMap(acyclic(), acyclic(), [RatMatrix.from_rows([[1]]), RatMatrix.from_rows([[2]])])


def test_equivalence_check() -> None:
    complex_ = circle_of_values()
    assert is_equivalence(ChainMap.identity(complex_), 1).equivalent
    free = FiniteComplex(rings=(("Z",),), differentials=())
    doubling_map = ChainMap(free, free, [RatMatrix.from_rows([[2]])])
    report = is_equivalence(doubling_map, 0)
    assert not report.equivalent
    assert doubling_map.induced_injective(0)
    assert not doubling_map.induced_surjective(0)


def test_homotopy_gives_natural_transformation() -> None:
    complex_ = acyclic()
    zero = ChainMap.zero(complex_, complex_)
    identity = ChainMap.identity(complex_)
    homotopy = ChainHomotopy(zero, identity, [RatMatrix.zeros(0, 1), RatMatrix.from_rows([[1]])])
    transformation = induced_nat_trans(homotopy, 1)
    category = ChainCategory(complex_, 1)
    z5, z7 = category.object([5]), category.object([7])
    component = transformation.component(z5)
    assert component.source.cocycle == (0,)
    assert component.target.cocycle == (5,)
    assert transformation.is_natural(category.morphism(z5, z7, [2]))
    assert induced_functor(identity, 1).on_object(z5) == z5


def test_broken_homotopy_is_rejected() -> None:
    complex_ = acyclic()
    with pytest.raises(NotAHomotopyError):
        ChainHomotopy(
            ChainMap.zero(complex_, complex_),
            ChainMap.identity(complex_),
            [RatMatrix.zeros(0, 1), RatMatrix.from_rows([[2]])],
        )


def space_category(name: str, degree: int) -> ChainCategory:
    return ChainCategory(FiniteComplex.from_int_complex(standard_space(name).cochain_complex), degree)


def test_circle_edge_cochains() -> None:
    category = space_category("circle_3", 1)
    z = category.object([1, 0, 0])
    assert category.hom_exists(z, category.object([0, 1, 0])) is not None
    assert category.hom_exists(z, category.object([2, 0, 0])) is None
    assert str(category.isomorphism_classes()) == "Z^1"
    assert str(category.automorphisms(z)) == "Z^1"


@pytest.mark.parametrize(
    ("name", "degree"),
    [("circle_3", 1), ("torus_min", 1), ("torus_min", 2), ("rp2_min", 1), ("rp2_min", 2), ("sphere_octahedron", 2)],
)
def test_isomorphism_matches_cohomology_class(name: str, degree: int) -> None:
    space = standard_space(name)
    category = space_category(name, degree)
    complex_ = category.complex
    generators = [v for v, _ in complex_.cocycle_generators(degree).integral]
    coboundary = space.coboundary_matrix(degree - 1)
    rng = Random(degree * 31 + len(name))

    def sample() -> tuple[Fraction, ...]:
        z = [Fraction(0)] * complex_.dim(degree)
        for g in generators:
            k = rng.randint(-1, 1)
            z = [x + k * y for x, y in zip(z, g)]
        b = [rng.randint(-2, 2) for _ in range(complex_.dim(degree - 1))]
        return tuple(x + y for x, y in zip(z, coboundary.apply(b)))

    cocycles = [category.object(sample()) for _ in range(50)]
    for z, w in zip(cocycles, cocycles[1:] + cocycles[:1]):
        difference = [y - x for x, y in zip(z.cocycle, w.cocycle)]
        same_class = solve_integer(coboundary, difference) is not None
        assert (category.hom_exists(z, w) is not None) == same_class
        assert category.automorphisms(z) == complex_.cohomology(degree - 1)
