"""
## Конечные коцепные комплексы со смешанными ℤ/ℚ-координатами.

Группа `A^k` — это `ℤ^a ⊕ ℚ^b`: каждая координата степени `k` помечена
кольцом `Z` или `Q`. Такие комплексы покрывают и обычные коцепи над ℤ
или ℚ, и комплекс троек `(c, h, ω)`, где `c` целочисленна.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..exactalg import (
    AbGroupPresentation,
    IntCochainComplex,
    MixedKernel,
    RatMatrix,
    Vector,
    as_vector,
    mixed_kernel,
    mixed_quotient,
    solve_mixed,
)
from ..exceptions import CoefficientRingError, CompositionNotZeroError, DimensionMismatchError, NotACocycleError
from ..internal import CoordRing
from ..logging import get_json_app_logger


logger = get_json_app_logger(__name__)


@dataclass(frozen=True, eq=False)
class FiniteComplex:
    """
    ## Конечный комплекс `A^0 → A^1 → … → A^N`.

    Attributes:
        rings (tuple[tuple[CoordRing, ...], ...]): Кольцо каждой координаты
            в каждой степени.
        differentials (tuple[RatMatrix, ...]): `d^k: A^k → A^{k+1}` для `k < N`.
        labels (tuple[tuple[str, ...], ...]): Подписи координат для
            диагностики; по умолчанию номера.
    """
    rings: tuple[tuple[CoordRing, ...], ...]
    differentials: tuple[RatMatrix, ...]
    labels: tuple[tuple[str, ...], ...] = field(default=())

    def __post_init__(self) -> None:
        rings = tuple(tuple(r) for r in self.rings)
        object.__setattr__(self, "rings", rings)
        object.__setattr__(self, "differentials", tuple(d.to_rational() for d in self.differentials))
        if not self.labels:
            object.__setattr__(self, "labels", tuple(tuple(str(i) for i in range(len(r))) for r in rings))
        if len(self.differentials) != max(len(rings) - 1, 0):
            raise DimensionMismatchError("число дифференциалов не равно числу степеней минус один")
        for k, d in enumerate(self.differentials):
            if d.shape != (len(rings[k + 1]), len(rings[k])):
                raise DimensionMismatchError(f"d^{k} имеет размер {d.shape}")
            self._check_integrality(k, d)
        for k in range(len(self.differentials) - 1):
            if not (self.differentials[k + 1] @ self.differentials[k]).is_zero():
                raise CompositionNotZeroError(k)

    def _check_integrality(self, k: int, d: RatMatrix) -> None:
        source, target = self.rings[k], self.rings[k + 1]
        for i, row_ring in enumerate(target):
            if row_ring != "Z":
                continue
            for j, column_ring in enumerate(source):
                entry = d[i, j]
                if column_ring == "Q" and entry != 0:
                    raise CoefficientRingError("Z", f"d^{k} переводит ℚ-координату {j} в ℤ-координату {i}")
                if entry.denominator != 1:
                    raise CoefficientRingError("Z", f"d^{k} имеет нецелый элемент {entry} в ℤ-блоке")

    @classmethod
    def from_int_complex(cls, complex_: IntCochainComplex, ring: CoordRing = "Z") -> "FiniteComplex":
        """Обычный комплекс свободных модулей над ℤ или ℚ."""
        return cls(
            rings=tuple((ring,) * n for n in complex_.dims),
            differentials=tuple(d.to_rational() for d in complex_.differentials),
        )

    @property
    def top(self) -> int:
        return len(self.rings) - 1

    def dim(self, k: int) -> int:
        return len(self.rings[k]) if 0 <= k <= self.top else 0

    def d(self, k: int) -> RatMatrix:
        """Дифференциал `d^k`; за пределами комплекса — нулевая матрица нужного размера."""
        if 0 <= k < len(self.differentials):
            return self.differentials[k]
        return RatMatrix.zeros(self.dim(k + 1), self.dim(k))

    def integral_indices(self, k: int) -> tuple[int, ...]:
        return tuple(i for i, r in enumerate(self.rings[k]) if r == "Z") if 0 <= k <= self.top else ()

    def rational_indices(self, k: int) -> tuple[int, ...]:
        return tuple(i for i, r in enumerate(self.rings[k]) if r == "Q") if 0 <= k <= self.top else ()

    def label(self, k: int, i: int) -> str:
        return self.labels[k][i]

    def zero(self, k: int) -> Vector:
        return (Fraction(0),) * self.dim(k)

    def apply_d(self, k: int, vector: Sequence[object]) -> Vector:
        return self.d(k).apply(vector)

    def is_element(self, k: int, vector: Sequence[object]) -> bool:
        values = as_vector(vector)
        return len(values) == self.dim(k) and all(values[i].denominator == 1 for i in self.integral_indices(k))

    def check_element(self, k: int, vector: Sequence[object]) -> Vector:
        values = as_vector(vector)
        if len(values) != self.dim(k):
            raise DimensionMismatchError(f"вектор длины {len(values)} в степени {k} размерности {self.dim(k)}")
        for i in self.integral_indices(k):
            if values[i].denominator != 1:
                raise CoefficientRingError("Z", f"координата {self.label(k, i)} равна {values[i]}")
        return values

    def check_cocycle(self, k: int, vector: Sequence[object]) -> Vector:
        """
        ## Проверяет, что вектор — коцикл степени `k`.

        Raises:
            NotACocycleError: С указанием первой ненулевой координаты `dz`.
        """
        values = self.check_element(k, vector)
        image = self.apply_d(k, values)
        for i, value in enumerate(image):
            if value != 0:
                raise NotACocycleError(self.label(k + 1, i))
        return values

    def split(self, k: int, matrix: RatMatrix) -> tuple[RatMatrix, RatMatrix]:
        """Разделяет столбцы матрицы, заданной на `A^k`, на ℤ- и ℚ-блоки."""
        return matrix.select_columns(self.integral_indices(k)), matrix.select_columns(self.rational_indices(k))

    def assemble(self, k: int, x_int: Sequence[object], x_rat: Sequence[object]) -> Vector:
        """Собирает вектор `A^k` из целых и рациональных координат."""
        values = [Fraction(0)] * self.dim(k)
        for i, value in zip(self.integral_indices(k), as_vector(x_int)):
            values[i] = value
        for i, value in zip(self.rational_indices(k), as_vector(x_rat)):
            values[i] = value
        return tuple(values)

    def solve_primitive(self, k: int, target: Sequence[object]) -> Vector | None:
        """
        ## Ищет `y ∈ A^{k−1}` с `dy = target`.

        Returns:
            Vector | None: Первообразная или `None`, если её нет.
        """
        values = as_vector(target)
        if k <= 0 or k > self.top + 1:
            return self.zero(k - 1) if all(v == 0 for v in values) else None
        a, b = self.split(k - 1, self.d(k - 1))
        solution = solve_mixed(a, b, values)
        if solution is None:
            return None
        return self.assemble(k - 1, *solution)

    def is_coboundary(self, k: int, vector: Sequence[object]) -> bool:
        return self.solve_primitive(k, vector) is not None

    def cocycle_generators(self, k: int) -> MixedKernel:
        """
        ## Образующие группы коциклов `Z^k` (целые и рациональные).

        Образующие возвращаются как пары, где первая компонента — полный
        вектор `A^k`, а вторая пуста.
        """
        a, b = self.split(k, self.d(k))
        kernel = mixed_kernel(a, b)
        return MixedKernel(
            integral=tuple((self.assemble(k, x_int, x_rat), ()) for x_int, x_rat in kernel.integral),
            rational=tuple((self.assemble(k, x_int, x_rat), ()) for x_int, x_rat in kernel.rational),
        )

    def boundary_generators(self, k: int) -> tuple[tuple[Vector, ...], tuple[Vector, ...]]:
        """Целые и рациональные образующие группы кограниц `B^k = d(A^{k−1})`."""
        if k <= 0:
            return (), ()
        d = self.d(k - 1)
        integral = tuple(tuple(d.column(j)) for j in self.integral_indices(k - 1))
        rational = tuple(tuple(d.column(j)) for j in self.rational_indices(k - 1))
        return integral, rational

    def cohomology(self, k: int) -> AbGroupPresentation:
        """
        ## Представление `H^k = Z^k / B^k`.

        Returns:
            AbGroupPresentation: Группа вида `ℤ^a ⊕ кручение ⊕ ℚ^b ⊕ (ℚ/ℤ)^c`.
        """
        if k < 0 or k > self.top:
            return AbGroupPresentation.trivial()
        cycles = self.cocycle_generators(k)
        relations_int, relations_rat = self.boundary_generators(k)
        result = mixed_quotient(
            [v for v, _ in cycles.integral],
            [v for v, _ in cycles.rational],
            relations_int,
            relations_rat,
            self.dim(k),
        )
        logger.debug(
            "Когомологии смешанного комплекса",
            extra={"operation": "finite_cohomology", "details": {"degree": k, "group": str(result)}},
        )
        return result

    def direct_sum(self, other: "FiniteComplex") -> "FiniteComplex":
        """
        ## Прямая сумма комплексов, степени выравниваются по нулю.
        """
        top = max(self.top, other.top)
        rings = tuple(
            (self.rings[k] if k <= self.top else ()) + (other.rings[k] if k <= other.top else ())
            for k in range(top + 1)
        )
        labels = tuple(
            tuple(f"L.{x}" for x in (self.labels[k] if k <= self.top else ()))
            + tuple(f"R.{x}" for x in (other.labels[k] if k <= other.top else ()))
            for k in range(top + 1)
        )
        differentials = []
        for k in range(top):
            left, right = self.d(k), other.d(k)
            rows = [list(left.row(i)) + [0] * right.cols for i in range(left.rows)]
            rows += [[0] * left.cols + list(right.row(i)) for i in range(right.rows)]
            differentials.append(RatMatrix.from_rows(rows, left.cols + right.cols))
        return FiniteComplex(rings, tuple(differentials), labels)


# Экспортируемый интерфейс модуля
__all__ = [
    "FiniteComplex",
]
