from fractions import Fraction
from pathlib import Path

import pytest

from app.modules.chaincat import induced_nat_trans
from app.modules.complex import standard_space
from app.modules.descent import (
    Cover,
    PartitionOfUnity,
    cech_complex,
    descent_equivalence_h1,
    parse_cover,
    rho_partition,
    rho_section,
)
from app.modules.exceptions import (
    CertificateError,
    CoefficientRingError,
    InvalidCoverError,
    NotAHomotopyError,
    ParseError,
    WeightSupportError,
)


FIXTURES = Path(__file__).parent / "fixtures"


def circle_cover(name: str) -> tuple[Cover, PartitionOfUnity | None]:
    return parse_cover((FIXTURES / name).read_text(), standard_space("circle_3"), name)


def test_cover_closes_elements_under_faces() -> None:
    cover, partition = circle_cover("circle_arcs.cov")
    assert partition is None
    assert cover.names == ("A", "B")
    assert cover.elements[1] == frozenset({"e20", "v2", "v0"})
    assert cover.containing("v0") == (0, 1)
    assert cover.section("v0") == 1
    assert cover.section("v2") == 0


def test_cech_levels_keep_nonempty_intersections() -> None:
    cover, _ = circle_cover("circle_arcs.cov")
    levels = cech_complex(cover).levels
    assert (0, 1) in levels.tuples[1]
    assert levels.level(1).count(0) == 2 + 2 + 2 + 3
    assert levels.level(1).count(1) == 2 + 1


@pytest.mark.parametrize("p", [0, 1])
def test_rho_identities_for_section(p: int) -> None:
    cover, _ = circle_cover("circle_arcs.cov")
    assert rho_section(cech_complex(cover)).check_identities(p) == 4


@pytest.mark.parametrize("p", [0, 1])
def test_rho_identities_for_partition(p: int) -> None:
    cover, partition = circle_cover("circle_half.cov")
    assert partition is not None
    assert partition.simplex_weights("v0") == {0: Fraction(1, 2), 1: Fraction(1, 2)}
    assert partition.simplex_weights("e01") == {0: Fraction(1)}
    assert rho_partition(cech_complex(cover), partition).check_identities(p) == 4


def test_partition_belongs_to_its_cover() -> None:
    cover, partition = circle_cover("circle_half.cov")
    other, _ = circle_cover("circle_arcs.cov")
    with pytest.raises(WeightSupportError):
        rho_partition(cech_complex(other), partition)


def test_negated_delta_breaks_the_homotopy() -> None:
    cover, _ = circle_cover("circle_arcs.cov")
    with pytest.raises(CertificateError):
        rho_section(cech_complex(cover, delta_sign=-1)).check_identities(0)
    with pytest.raises(CertificateError):
        descent_equivalence_h1(cover, delta_sign=-1)


@pytest.mark.parametrize("name", ["circle_arcs.cov", "circle_half.cov"])
def test_descent_on_circle(name: str) -> None:
    cover, partition = circle_cover(name)
    report = descent_equivalence_h1(cover, samples=6, seed=2, partition=partition)
    assert str(report.h1_base) == "Z^1"
    assert report.h1_total == report.h1_base
    assert str(report.automorphisms) == "Z^1"
    assert report.variant == ("section" if partition is None else "partition")
    assert report.identities_checked == 8
    assert report.objects_checked > 0


def test_descent_on_torus_over_rationals() -> None:
    torus = standard_space("torus_min")
    cover, _ = parse_cover((FIXTURES / "torus_triangles.cov").read_text(), torus)
    report = descent_equivalence_h1(cover, ring="Q", samples=4)
    assert str(report.h1_total) == "Q^2"
    assert str(report.automorphisms) == "Q^1"


def test_single_element_cover() -> None:
    circle = standard_space("circle_3")
    cover = Cover.from_elements(circle, {"M": circle.all_simplices})
    report = descent_equivalence_h1(cover, samples=3)
    assert str(report.h1_total) == "Z^1"


def test_descent_rejects_divisible_coefficients() -> None:
    cover, _ = circle_cover("circle_arcs.cov")
    with pytest.raises(CoefficientRingError):
        descent_equivalence_h1(cover, ring="QZ")  # type: ignore[arg-type]


def test_invalid_covers() -> None:
    circle = standard_space("circle_3")
    with pytest.raises(InvalidCoverError):
        Cover(circle, [])
    with pytest.raises(InvalidCoverError):
        Cover(circle, [("A", ["e01", "e12", "e20"]), ("A", ["e01"])])
    with pytest.raises(InvalidCoverError):
        Cover(circle, [("A", ["e01", "e12", "e20", "e99"])])
    with pytest.raises(InvalidCoverError) as info:
        Cover.from_elements(circle, {"A": ["e01"], "B": ["e20"]})
    assert info.value.simplex == "e12"
    with pytest.raises(InvalidCoverError):
        Cover(circle, [("A", ["e01", "e12"]), ("B", ["e20"])], tau={"e01": "B"})


def test_partition_checks_weights() -> None:
    cover, _ = circle_cover("circle_arcs.cov")
    with pytest.raises(WeightSupportError):
        PartitionOfUnity(cover, {("v0", 0): Fraction(1, 2)})
    with pytest.raises(WeightSupportError):
        PartitionOfUnity(cover, {("v1", 1): 1})
    uniform = PartitionOfUnity.uniform(cover)
    assert uniform.weight("v2", 1) == Fraction(1, 2)
    assert PartitionOfUnity.from_section(cover).weight("v0", 1) == 1


@pytest.mark.parametrize(
    ("text", "line_no"),
    [
        ("element A e01\n", 1),
        ("element A : e01 e12\nelement B : e20\ntau v0 = C\n", 3),
        ("space circle_3\nelement A : e01\nelement B : e20\n", 2),
        ("element A : e01 e12\nelement B : e20\nweight v1 B = 1\n", 3),
        ("element A : e01 e12\nmystery\n", 2),
    ],
)
def test_cover_parse_errors(text: str, line_no: int) -> None:
    with pytest.raises(ParseError) as info:
        parse_cover(text, standard_space("circle_3"), "x.cov")
    assert info.value.line_no == line_no


@pytest.mark.parametrize("name", ["circle_arcs.cov", "circle_half.cov"])
def test_rho_contracts_each_row(name: str) -> None:
    cover, partition = circle_cover(name)
    double = cech_complex(cover)
    rho = rho_section(double) if partition is None else rho_partition(double, partition)
    homotopy = rho.row_homotopy(0)
    row = homotopy.f.source
    assert row.rings[0] == (("Z",) if partition is None else ("Q",)) * 3
    transformation = induced_nat_trans(homotopy, 1)
    y = (Fraction(2), Fraction(-1), Fraction(5))
    z = transformation.category.object(double.upsilon(0).apply(y))
    morphism = transformation.component(z)
    assert morphism.representative == y
    assert not any(morphism.source.cocycle)


def test_row_homotopy_fails_with_negated_delta() -> None:
    cover, _ = circle_cover("circle_arcs.cov")
    rho = rho_section(cech_complex(cover, delta_sign=-1))
    with pytest.raises(NotAHomotopyError):
        rho.row_homotopy(0)


def test_descent_report_counts_contracted_rows() -> None:
    cover, _ = circle_cover("circle_arcs.cov")
    report = descent_equivalence_h1(cover, samples=2)
    assert report.rows_contracted > 0
