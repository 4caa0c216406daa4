"""
## Категория эквивариантных объектов степеней 0 и 1.

Объект степени 1 — пара `(z, t)`, `z ∈ F^1(Γ_0)`, `t ∈ F^0(Γ_1)`, для
которой

- `dz = 0`;
- `∂_0^* z − ∂_1^* z = dt`;
- `∂_0^* t − ∂_1^* t + ∂_2^* t = 0`.

Морфизм `(z, t) → (z′, t′)` — это `b ∈ F^0(Γ_0)` с `db = z − z′` и
`∂_0^* b − ∂_1^* b = t − t′`. В степени 0 объект — `z ∈ F^0(Γ_0)` с
`dz = 0` и `∂_0^* z = ∂_1^* z`, морфизмы только тождественные.

Категория строится по граням нерва независимо от тотального комплекса;
`compare_h01` проверяет, что `(z, t) ↦ (z, t)`, `b ↦ −b` — биекция с
категорией `H^n` тотального комплекса.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from ..exactalg import IntMatrix, RatMatrix, Vector, as_vector, solve_integer, solve_mixed, solve_rational
from ..exceptions import CoefficientRingError, DegreeOverflowError, DimensionMismatchError, InsufficientDepthError
from ..internal import RINGS, Ring
from ..logging import get_json_app_logger
from .double import DoubleComplex, TotalComplex
from .simplicial import SimplicialLevels


logger = get_json_app_logger(__name__)


# Наибольшее число точек решётки {0, 1/2}^N, перебираемых целиком
EXHAUSTIVE_LIMIT = 4096


def _congruent(a: Sequence[Fraction], b: Sequence[Fraction], ring: Ring) -> bool:
    if ring == "QZ":
        return all((x - y).denominator == 1 for x, y in zip(a, b))
    return tuple(a) == tuple(b)


def _sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


@dataclass(frozen=True)
class EquivariantObject:
    z: Vector
    t: Vector = ()


class EquivariantCategory:
    """
    ## Категория эквивариантных объектов степени `n ∈ {0, 1}`.

    Attributes:
        levels (SimplicialLevels): Нерв с уровнями `Γ_0, Γ_1, Γ_2`.
        ring (Ring): Коэффициенты `Z`, `Q` или `QZ`.
        degree (int): Степень `n`.
    """

    def __init__(self, levels: SimplicialLevels, ring: Ring, degree: int) -> None:
        if ring not in RINGS:
            raise CoefficientRingError(str(ring), "неизвестное кольцо")
        if degree not in (0, 1):
            raise DegreeOverflowError(degree, 1)
        if levels.depth < degree + 1:
            raise InsufficientDepthError(degree, levels.depth)
        self.levels = levels
        self.ring = ring
        self.degree = degree

    def _d(self, q: int, p: int) -> IntMatrix:
        return self.levels.level(q).coboundary_matrix(p)

    def _delta(self, q: int, p: int) -> IntMatrix:
        return self.levels.delta_matrix(q, p)

    def _coerce(self, vector: Sequence[object], size: int, name: str) -> Vector:
        values = as_vector(vector)
        if len(values) != size:
            raise DimensionMismatchError(f"{name}: длина {len(values)} вместо {size}")
        if self.ring == "Z" and any(v.denominator != 1 for v in values):
            raise CoefficientRingError("Z", f"{name} имеет нецелые значения")
        if self.ring == "QZ":
            values = tuple(v % 1 for v in values)
        return values

    def make(self, z: Sequence[object], t: Sequence[object] = ()) -> EquivariantObject:
        n = self.degree
        z_values = self._coerce(z, self.levels.level(0).count(n), "z")
        t_values = self._coerce(t, self.levels.level(1).count(n - 1) if n else 0, "t")
        return EquivariantObject(z_values, t_values)

    def split_total(self, vector: Sequence[object]) -> EquivariantObject:
        """Разделяет вектор тотальной степени `n` на `(z, t)`."""
        values = as_vector(vector)
        size = self.levels.level(0).count(self.degree)
        return self.make(values[:size], values[size:])

    def residuals(self, x: EquivariantObject) -> tuple[Vector, ...]:
        """Левые части трёх уравнений объекта."""
        n = self.degree
        dz = self._d(0, n).apply(x.z)
        if n == 0:
            return dz, self._delta(0, 0).apply(x.z)
        descent = _sub(self._delta(0, 1).apply(x.z), self._d(1, 0).apply(x.t))
        cocycle = self._delta(1, 0).apply(x.t)
        return dz, descent, cocycle

    def is_object(self, x: EquivariantObject) -> bool:
        return all(_congruent(r, (0,) * len(r), self.ring) for r in self.residuals(x))

    def _morphism_system(self) -> IntMatrix:
        d = self._d(0, 0)
        delta = self._delta(0, 0)
        return IntMatrix.from_rows(d.to_rows() + delta.to_rows(), d.cols)

    def is_morphism(self, source: EquivariantObject, target: EquivariantObject, b: Sequence[object]) -> bool:
        if self.degree == 0:
            return len(b) == 0 and _congruent(source.z, target.z, self.ring)
        b_values = self._coerce(b, self.levels.level(0).count(0), "b")
        expected = _sub(source.z, target.z) + _sub(source.t, target.t)
        return _congruent(self._morphism_system().apply(b_values), expected, self.ring)

    def find_morphism(self, source: EquivariantObject, target: EquivariantObject) -> Vector | None:
        """
        ## Ищет морфизм `source → target`.

        Returns:
            Vector | None: `b` или `None`, если морфизма нет.
        """
        if self.degree == 0:
            return () if _congruent(source.z, target.z, self.ring) else None
        system = self._morphism_system()
        expected = _sub(source.z, target.z) + _sub(source.t, target.t)
        if self.ring == "Z":
            solution = solve_integer(system, expected)
            return None if solution is None else as_vector(solution)
        if self.ring == "Q":
            return solve_rational(system, expected)
        found = solve_mixed(RatMatrix.identity(system.rows), system.to_rational(), expected)
        return None if found is None else tuple(v % 1 for v in found[1])


@dataclass(frozen=True)
class H01Report:
    """
    ## Результат сравнения эквивариантной и тотальной категорий.

    Attributes:
        degree (int): Степень `n`.
        ring (Ring): Коэффициенты.
        exhaustive (bool): Перебрана ли вся решётка `{0, 1/2}^N`.
        objects_checked (int): Число проверенных кандидатов в объекты.
        objects_found (int): Сколько из них оказались объектами.
        morphisms_checked (int): Число проверенных кандидатов в морфизмы.
        mismatches (tuple[str, ...]): Описания расхождений.
    """
    degree: int
    ring: Ring
    exhaustive: bool
    objects_checked: int
    objects_found: int
    morphisms_checked: int
    mismatches: tuple[str, ...] = field(default=())

    @property
    def agree(self) -> bool:
        return not self.mismatches


class _TotalSide:
    """Решающие процедуры категории `H^n` тотального комплекса."""

    def __init__(self, total: TotalComplex, ring: Ring, degree: int) -> None:
        self.complex = total.finite_complex
        self.ring = ring
        self.degree = degree

    def is_object(self, x: Vector) -> bool:
        image = self.complex.apply_d(self.degree, x)
        return _congruent(image, (0,) * len(image), self.ring)

    def is_morphism(self, x: Vector, y: Vector, b: Vector) -> bool:
        return _congruent(self.complex.apply_d(self.degree - 1, b), _sub(y, x), self.ring)

    def find_morphism(self, x: Vector, y: Vector) -> Vector | None:
        difference = _sub(y, x)
        if self.ring != "QZ":
            return self.complex.solve_primitive(self.degree, difference)
        d = self.complex.d(self.degree - 1)
        found = solve_mixed(-RatMatrix.identity(d.rows), d, difference)
        return None if found is None else tuple(v % 1 for v in found[1])


def _grid(size: int, rng: random.Random, samples: int) -> tuple[list[Vector], bool]:
    half = (Fraction(0), Fraction(1, 2))
    if 2 ** size <= EXHAUSTIVE_LIMIT:
        return [tuple(v) for v in product(half, repeat=size)], True
    return [tuple(rng.choice(half) for _ in range(size)) for _ in range(samples)], False


def _random_vector(size: int, ring: Ring, rng: random.Random) -> Vector:
    if ring == "Z":
        return tuple(Fraction(rng.randint(-2, 2)) for _ in range(size))
    return tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(size))


def _sampled_objects(total: TotalComplex, ring: Ring, degree: int, rng: random.Random, samples: int) -> list[Vector]:
    finite = total.finite_complex
    kernel = finite.cocycle_generators(degree)
    generators = [v for v, _ in kernel.integral] + [v for v, _ in kernel.rational]
    candidates = []
    for _ in range(samples):
        if generators and rng.random() < 0.7:
            vector = [Fraction(0)] * finite.dim(degree)
            for g in generators:
                c = rng.randint(-2, 2) if ring == "Z" else Fraction(rng.randint(-3, 3), rng.randint(1, 2))
                vector = [a + c * b for a, b in zip(vector, g)]
            candidates.append(tuple(vector))
        else:
            candidates.append(_random_vector(finite.dim(degree), ring, rng))
    return candidates


def compare_h01(
    levels: SimplicialLevels,
    ring: Ring,
    degree: int,
    samples: int = 20,
    seed: int = 0,
) -> H01Report:
    """
    ## Проверяет изоморфизм эквивариантной категории и категории `H^n_tot`.

    Для ℚ/ℤ перебираются все векторы решётки `{0, 1/2}^N` (если их не
    больше `EXHAUSTIVE_LIMIT`), для ℤ и ℚ — случайная выборка из
    комбинаций коциклов и произвольных векторов. Для каждой пары
    найденных объектов сравниваются решения о существовании морфизма,
    найденные морфизмы переносятся через `b ↦ −b`, а множества морфизмов
    сравниваются поэлементно на кандидатах.

    Args:
        levels (SimplicialLevels): Нерв глубины не меньше `n + 1`.
        ring (Ring): `Z`, `Q` или `QZ`.
        degree (int): `0` или `1`.
        samples (int): Размер выборки.
        seed (int): Зерно генератора.

    Returns:
        H01Report: Отчёт со списком расхождений.
    """
    category = EquivariantCategory(levels, ring, degree)
    total = TotalComplex(DoubleComplex.cochains(levels, "Q" if ring == "Q" else "Z"))
    if total.top < degree + 1:
        raise InsufficientDepthError(degree, total.top)
    side = _TotalSide(total, ring, degree)
    rng = random.Random(seed)
    mismatches: list[str] = []

    if ring == "QZ":
        candidates, exhaustive = _grid(total.dim(degree), rng, samples)
    else:
        candidates, exhaustive = _sampled_objects(total, ring, degree, rng, samples), False

    objects: list[Vector] = []
    for x in candidates:
        equivariant = category.is_object(category.split_total(x))
        if equivariant != side.is_object(x):
            mismatches.append(f"объект {[str(v) for v in x]}: эквивариантно {equivariant}")
        if equivariant:
            objects.append(x)

    if ring == "QZ":
        morphism_candidates, _ = _grid(total.dim(degree - 1), rng, samples)
    else:
        morphism_candidates = [_random_vector(total.dim(degree - 1), ring, rng) for _ in range(samples)]

    morphisms_checked = 0
    pairs = [(x, y) for x in objects for y in objects]
    if len(pairs) > samples and not exhaustive:
        pairs = rng.sample(pairs, samples)
    for x, y in pairs:
        source, target = category.split_total(x), category.split_total(y)
        b_total = side.find_morphism(x, y)
        b_equivariant = category.find_morphism(source, target)
        if (b_total is None) != (b_equivariant is None):
            mismatches.append(f"существование морфизма {x} → {y} различается")
            continue
        if b_total is not None and not category.is_morphism(source, target, tuple(-v for v in b_total)):
            mismatches.append(f"морфизм тотальной категории {b_total} не переносится")
        if b_equivariant is not None and not side.is_morphism(x, y, tuple(-v for v in b_equivariant)):
            mismatches.append(f"эквивариантный морфизм {b_equivariant} не переносится")
        for b in morphism_candidates:
            morphisms_checked += 1
            if side.is_morphism(x, y, b) != category.is_morphism(source, target, tuple(-v for v in b)):
                mismatches.append(f"кандидат {[str(v) for v in b]} различает морфизмы {x} → {y}")

    report = H01Report(
        degree=degree,
        ring=ring,
        exhaustive=exhaustive,
        objects_checked=len(candidates),
        objects_found=len(objects),
        morphisms_checked=morphisms_checked,
        mismatches=tuple(mismatches),
    )
    log = logger.info if report.agree else logger.error
    log(
        "Сравнение категорий завершено",
        extra={
            "operation": "compare_h01",
            "details": {
                "degree": degree,
                "ring": ring,
                "objects": report.objects_found,
                "morphisms": morphisms_checked,
                "mismatches": len(mismatches),
            },
        },
    )
    return report


# Экспортируемый интерфейс модуля
__all__ = [
    "EquivariantObject",
    "EquivariantCategory",
    "H01Report",
    "compare_h01",
]
