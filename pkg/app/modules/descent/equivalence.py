"""
## Проверка спуска в степени 1: `H¹(C•(M)) → H¹(C(U)•_tot)`.

Функтор сужения переводит коцикл `y` в пару `(υ*y, 0)`, морфизм `b` в
`υ*b`. Полнота и строгость проверяются через `b = ρB` для морфизма `B`
тотальной категории, существенная сюръективность через `c = ρt` и
глобальный коцикл `y = ρ(z − dc)`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

from ..chaincat import ChainCategory, FiniteComplex, induced_nat_trans
from ..exactalg import AbGroupPresentation, Vector, as_vector
from ..exceptions import CertificateError, CoefficientRingError
from ..logging import get_json_app_logger
from ..nerve import TotalComplex
from .cech import CechDoubleComplex
from .cover import Cover, PartitionOfUnity
from .rho import RhoOperator, rho_partition, rho_section


logger = get_json_app_logger(__name__)


@dataclass(frozen=True)
class DescentReport:
    """
    ## Сертификат эквивалентности спуска в степени 1.

    Attributes:
        ring (str): `Z` или `Q`.
        variant (str): `section` или `partition`.
        h1_base (AbGroupPresentation): `H¹(M)`.
        h1_total (AbGroupPresentation): `H¹` тотального комплекса покрытия.
        automorphisms (AbGroupPresentation): `H⁰`, группа автоморфизмов объектов.
        identities_checked (int): Число проверенных матричных тождеств `ρ`.
        pairs_checked (int): Число пар объектов в проверке полноты.
        objects_checked (int): Число тотальных коциклов в проверке сюръективности.
        rows_contracted (int): Число коциклов строк, стянутых гомотопией `ρ`.
    """
    ring: str
    variant: str
    h1_base: AbGroupPresentation
    h1_total: AbGroupPresentation
    automorphisms: AbGroupPresentation
    identities_checked: int
    pairs_checked: int
    objects_checked: int
    rows_contracted: int


def _fail(check: str, details: str) -> None:
    err = CertificateError(check, details)
    logger.error(
        "Сертификат спуска не прошёл",
        exc_info=err,
        extra={"operation": "descent_equivalence_h1", "details": {"check": check}},
    )
    raise err


def _samples(complex_: FiniteComplex, degree: int, rng: random.Random, count: int) -> list[Vector]:
    """Образующие коциклов и их случайные комбинации."""
    kernel = complex_.cocycle_generators(degree)
    integral = [v for v, _ in kernel.integral]
    rational = [v for v, _ in kernel.rational]
    result = integral + rational
    for _ in range(count):
        values = [Fraction(0)] * complex_.dim(degree)
        for vector in integral:
            k = rng.randint(-2, 2)
            values = [x + k * y for x, y in zip(values, vector)]
        for vector in rational:
            k = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
            values = [x + k * y for x, y in zip(values, vector)]
        result.append(tuple(values))
    return result


def _sub(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


class _Restriction:
    """Функтор сужения `y ↦ (υ*y, 0)` в координатах тотального комплекса."""

    def __init__(self, double: CechDoubleComplex, total: TotalComplex) -> None:
        self.double = double
        self.total = total

    def object(self, y: Sequence[object]) -> Vector:
        return self.total.to_vector(1, {0: self.double.upsilon(1).apply(y)})

    def morphism(self, b: Sequence[object]) -> Vector:
        return self.total.to_vector(0, {0: self.double.upsilon(0).apply(b)})


def _check_fully_faithful(
    base: FiniteComplex,
    total: TotalComplex,
    restriction: _Restriction,
    rho: RhoOperator,
    objects: list[Vector],
    rng: random.Random,
    samples: int,
) -> int:
    """Сравнивает множества морфизмов `z → z'` и `(υ*z, 0) → (υ*z', 0)`."""
    base_category = ChainCategory(base, 1)
    total_category = ChainCategory(total.finite_complex, 1)
    upsilon = restriction.double.upsilon(0)
    pairs = [(z, z) for z in objects]
    for _ in range(samples):
        z = rng.choice(objects)
        b = tuple(Fraction(rng.randint(-3, 3)) for _ in range(base.dim(0)))
        pairs.append((z, tuple(x + y for x, y in zip(z, base.apply_d(0, b)))))
        pairs.append((z, rng.choice(objects)))
    for z, z_prime in pairs:
        source, target = base_category.object(z), base_category.object(z_prime)
        restricted = total_category.hom_exists(
            total_category.object(restriction.object(z)),
            total_category.object(restriction.object(z_prime)),
        )
        found = base_category.hom_exists(source, target)
        if (found is None) != (restricted is None):
            _fail("hom_existence", f"морфизм {z} → {z_prime}: на M {found is not None}, на U {restricted is not None}")
        if restricted is None:
            continue
        big_b = total.components(0, restricted.representative)[0]
        b = rho.apply(0, 0, big_b)
        if upsilon.apply(b) != big_b:
            _fail("full", "υ*(ρB) ≠ B для морфизма тотальной категории")
        if base.apply_d(0, b) != _sub(z_prime, z):
            _fail("full", "d(ρB) ≠ z' − z")
        assert found is not None
        if total.finite_complex.apply_d(0, restriction.morphism(found.representative)) != _sub(
            restriction.object(z_prime), restriction.object(z)
        ):
            _fail("functor", "υ*b не является морфизмом сужений")
        if rho.apply(0, 0, upsilon.apply(found.representative)) != found.representative:
            _fail("faithful", "ρ(υ*b) ≠ b")
    return len(pairs)


def _check_essentially_surjective(
    base: FiniteComplex,
    total: TotalComplex,
    restriction: _Restriction,
    rho: RhoOperator,
    objects: list[Vector],
) -> None:
    """Для каждого `(z, t)` строит `c` с `δc = t` и глобальный `y` с `(z − dc, 0) = υ*y`."""
    double = restriction.double
    column = double.column(0)
    for x in objects:
        parts = total.components(1, x)
        z, t = parts[0], parts.get(1, ())
        c = rho.primitive(1, 0, t) if t else column.zero(0)
        w = _sub(z, column.apply_d(0, c))
        if any(double.horizontal(0, 1).apply(w)):
            _fail("essential_surjectivity", "δ(z − dc) ≠ 0")
        y = rho.apply(0, 1, w)
        if double.upsilon(1).apply(y) != w:
            _fail("essential_surjectivity", "υ*(ρw) ≠ w")
        if any(base.apply_d(1, y)):
            _fail("essential_surjectivity", "dy ≠ 0")
        witness = total.to_vector(0, {0: c})
        if total.finite_complex.apply_d(0, witness) != _sub(x, restriction.object(y)):
            _fail("essential_surjectivity", "d_tot c ≠ (z, t) − (υ*y, 0)")


def _check_rows_contract(rho: RhoOperator, rng: random.Random, samples: int) -> int:
    """
    ## Строки аугментированы и стягиваемы: `ρ` даёт `H¹(0) ⇒ H¹(id)`.

    Компонента естественного преобразования в коцикле `z` строки — это
    морфизм `0 → z`, так что каждый коцикл строки тривиален.
    """
    checked = 0
    for p in range(rho.double.max_p + 1):
        homotopy = rho.row_homotopy(p)
        row = homotopy.f.source
        if row.top < 1:
            continue
        transformation = induced_nat_trans(homotopy, 1)
        category = transformation.category
        for z in _samples(row, 1, rng, min(samples, 3)):
            morphism = transformation.component(category.object(z))
            if any(morphism.source.cocycle) or morphism.target.cocycle != as_vector(z):
                _fail("row_contraction", f"строка {p}: ρ не стягивает коцикл")
            checked += 1
    return checked


def descent_equivalence_h1(
    cover: Cover,
    ring: Literal["Z", "Q"] = "Z",
    samples: int = 20,
    seed: int = 0,
    delta_sign: int = 1,
    partition: PartitionOfUnity | None = None,
) -> DescentReport:
    """
    ## Сертифицирует эквивалентность `H¹(C•(M)) ≃ H¹(C(U)•_tot)`.

    Сначала проверяются тождества `ρ` во всех строках, затем полнота и
    строгость на парах объектов и существенная сюръективность на
    образующих тотальных коциклов и их случайных комбинациях.

    Args:
        cover (Cover): Покрытие.
        ring (str): `Z` или `Q`.
        samples (int): Число случайных комбинаций.
        seed (int): Зерно генератора.
        delta_sign (int): Знак перед `δ`; `−1` должен приводить к отказу.
        partition (PartitionOfUnity | None): Веса для `ρ`; по умолчанию сечение `τ`.

    Returns:
        DescentReport: Сертификат.

    Raises:
        CoefficientRingError: Кольцо не `Z` и не `Q`.
        CertificateError: Нарушено тождество или шаг построения.
    """
    if ring not in ("Z", "Q"):
        raise CoefficientRingError(ring, "спуск проверяется над ℤ или ℚ")
    double = CechDoubleComplex(cover, max_q=3, ring=ring, delta_sign=delta_sign, max_p=min(2, cover.base.dimension))
    rho = rho_section(double) if partition is None else rho_partition(double, partition)
    identities = sum(rho.check_identities(p) for p in range(double.max_p + 1))

    total = TotalComplex(double)
    base = double.base_column
    restriction = _Restriction(double, total)
    rng = random.Random(seed)
    rows = _check_rows_contract(rho, rng, samples)

    pairs = _check_fully_faithful(base, total, restriction, rho, _samples(base, 1, rng, samples), rng, samples)
    objects = _samples(total.finite_complex, 1, rng, samples)
    _check_essentially_surjective(base, total, restriction, rho, objects)

    h1_base = base.cohomology(1)
    h1_total = total.finite_complex.cohomology(1)
    if h1_base != h1_total:
        _fail("h1", f"H¹(M) = {h1_base}, H¹_tot = {h1_total}")
    automorphisms = base.cohomology(0)
    if automorphisms != total.finite_complex.cohomology(0):
        _fail("h0", "группы автоморфизмов различаются")

    report = DescentReport(
        ring=ring,
        variant="section" if partition is None else "partition",
        h1_base=h1_base,
        h1_total=h1_total,
        automorphisms=automorphisms,
        identities_checked=identities,
        pairs_checked=pairs,
        objects_checked=len(objects),
        rows_contracted=rows,
    )
    logger.info(
        "Спуск в степени 1 сертифицирован",
        extra={
            "operation": "descent_equivalence_h1",
            "details": {"space": cover.base.name, "ring": ring, "h1": str(h1_base), "objects": len(objects)},
        },
    )
    return report


# Экспортируемый интерфейс модуля
__all__ = [
    "DescentReport",
    "descent_equivalence_h1",
]
