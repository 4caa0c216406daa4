"""
## Двойной и тотальный комплексы `F^p(Γ_q)`.

Столбец `q` — конечный комплекс `F•(Γ_q)`: коцепи над ℤ или ℚ либо
комплекс `DC•_s`. Горизонтальный дифференциал
`δ = Σ_i (−1)^i ∂_i^*`, тотальный `d_tot = δ + (−1)^q d` на `F^p(Γ_q)`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Literal, Mapping, Sequence

from ..chaincat import FiniteComplex
from ..complex import Cochain
from ..dccomplex import DCComplex, DCTriple
from ..exactalg import AbGroupPresentation, IntCochainComplex, RatMatrix, Vector, as_vector, cohomology_qz, cohomology_rational
from ..exceptions import (
    CoefficientRingError,
    CompositionNotZeroError,
    DegreeOverflowError,
    DimensionMismatchError,
    InsufficientDepthError,
)
from ..internal import Ring
from ..logging import get_json_app_logger
from .simplicial import SimplicialLevels


logger = get_json_app_logger(__name__)


ColumnKind = Literal["Z", "Q", "DC"]


class DoubleComplex:
    """
    ## Двойной комплекс над усечённым симплициальным объектом.

    Attributes:
        levels (SimplicialLevels): Уровни `Γ_0 … Γ_N`.
        kind (ColumnKind): Тип столбцов: `Z`, `Q` или `DC`.
        columns (tuple[FiniteComplex, ...]): Столбцы `F•(Γ_q)`.
        dc_columns (tuple[DCComplex, ...]): Комплексы `DC•_s(Γ_q)` для `kind == "DC"`.
        delta_sign (int): Знак перед `δ`; `−1` используется как
            отрицательный контроль.
    """

    def __init__(
        self,
        levels: SimplicialLevels,
        kind: ColumnKind,
        columns: Sequence[FiniteComplex],
        horizontals: Mapping[tuple[int, int], RatMatrix],
        dc_columns: Sequence[DCComplex] = (),
        delta_sign: int = 1,
    ) -> None:
        self.levels = levels
        self.kind = kind
        self.columns = tuple(columns)
        self.dc_columns = tuple(dc_columns)
        self.delta_sign = delta_sign
        self._horizontals = dict(horizontals)
        self._check()

    @classmethod
    def cochains(cls, levels: SimplicialLevels, ring: Literal["Z", "Q"] = "Z", delta_sign: int = 1) -> "DoubleComplex":
        """Коцепи `C^p(Γ_q)` над ℤ или ℚ."""
        if ring not in ("Z", "Q"):
            raise CoefficientRingError(ring, "столбцы двойного комплекса задаются над ℤ или ℚ")
        columns = [FiniteComplex.from_int_complex(level.cochain_complex, ring) for level in levels.levels]
        horizontals = {
            (q, p): levels.delta_matrix(q, p, delta_sign).to_rational()
            for q in range(levels.depth)
            for p in range(columns[q].top + 1)
        }
        return cls(levels, ring, columns, horizontals, delta_sign=delta_sign)

    @classmethod
    def dc(cls, levels: SimplicialLevels, s: int = 2, delta_sign: int = 1) -> "DoubleComplex":
        """Комплексы `DC•_s(Γ_q)` с переносом троек вдоль граней."""
        dc_columns = [DCComplex(level, s) for level in levels.levels]
        horizontals = {}
        for q in range(levels.depth):
            for p in range(dc_columns[q].top + 1):
                horizontals[(q, p)] = dc_columns[q].block_map(
                    dc_columns[q + 1],
                    p,
                    lambda m, q=q: levels.delta_matrix(q, m, delta_sign).to_rational(),
                )
        return cls(
            levels,
            "DC",
            [dc.finite_complex for dc in dc_columns],
            horizontals,
            dc_columns=dc_columns,
            delta_sign=delta_sign,
        )

    @property
    def depth(self) -> int:
        return self.levels.depth

    def column(self, q: int) -> FiniteComplex:
        return self.columns[q]

    def horizontal(self, q: int, p: int) -> RatMatrix:
        """`δ: F^p(Γ_q) → F^p(Γ_{q+1})`; вне комплекса — нулевая матрица."""
        if (q, p) in self._horizontals:
            return self._horizontals[(q, p)]
        target = self.columns[q + 1].dim(p) if q + 1 <= self.depth else 0
        return RatMatrix.zeros(target, self.columns[q].dim(p))

    def _check(self) -> None:
        """Проверяет `δ∘δ = 0` и `dδ = δd` до знакового сдвига."""
        for (q, p), delta in self._horizontals.items():
            if (q + 1, p) in self._horizontals and not (self._horizontals[(q + 1, p)] @ delta).is_zero():
                raise CompositionNotZeroError(q)
            left = self.columns[q + 1].d(p) @ delta
            right = self.horizontal(q, p + 1) @ self.columns[q].d(p)
            if left != right:
                logger.error(
                    "Горизонтальный и вертикальный дифференциалы не коммутируют",
                    extra={"operation": "double_complex", "details": {"q": q, "p": p}},
                )
                raise CompositionNotZeroError(p)


class TotalComplex:
    """
    ## Тотальный комплекс `⊕_{p+q=n} F^p(Γ_q)` степеней `0 … N`.

    Внутри степени блоки идут по возрастанию `q`. Дифференциал степени
    `N` не строится: для него нужен уровень `N + 1`.

    Attributes:
        double (DoubleComplex): Исходный двойной комплекс.
    """

    def __init__(self, double: DoubleComplex) -> None:
        self.double = double
        self.top = double.depth

    def blocks(self, n: int) -> tuple[tuple[int, int, int, int], ...]:
        """Блоки степени `n`: `(q, p, начало, длина)`."""
        result = []
        start = 0
        for q in range(min(n, self.double.depth) + 1):
            p = n - q
            column = self.double.column(q)
            if 0 <= p <= column.top:
                result.append((q, p, start, column.dim(p)))
                start += column.dim(p)
        return tuple(result)

    def dim(self, n: int) -> int:
        return sum(size for _, _, _, size in self.blocks(n))

    def _differential(self, n: int) -> RatMatrix:
        target = {q: start for q, _, start, _ in self.blocks(n + 1)}
        rows = [[Fraction(0)] * self.dim(n) for _ in range(self.dim(n + 1))]

        def place(row_start: int, column_start: int, matrix: RatMatrix, sign: int) -> None:
            for i in range(matrix.rows):
                for j in range(matrix.cols):
                    if matrix[i, j]:
                        rows[row_start + i][column_start + j] += sign * matrix[i, j]

        for q, p, start, _ in self.blocks(n):
            if q in target and p + 1 <= self.double.column(q).top:
                place(target[q], start, self.double.column(q).d(p), (-1) ** q)
            if q + 1 in target:
                place(target[q + 1], start, self.double.horizontal(q, p), 1)
        return RatMatrix.from_rows(rows, self.dim(n))

    @cached_property
    def finite_complex(self) -> FiniteComplex:
        """Тотальный комплекс в координатах; `d_tot∘d_tot = 0` проверяется при построении."""
        rings = []
        labels = []
        for n in range(self.top + 1):
            degree_rings: list = []
            degree_labels: list[str] = []
            for q, p, _, _ in self.blocks(n):
                column = self.double.column(q)
                degree_rings.extend(column.rings[p])
                degree_labels.extend(f"{q}|{column.label(p, i)}" for i in range(column.dim(p)))
            rings.append(tuple(degree_rings))
            labels.append(tuple(degree_labels))
        result = FiniteComplex(
            rings=tuple(rings),
            differentials=tuple(self._differential(n) for n in range(self.top)),
            labels=tuple(labels),
        )
        logger.debug(
            "Тотальный комплекс построен",
            extra={
                "operation": "total_complex",
                "details": {"kind": self.double.kind, "dims": [self.dim(n) for n in range(self.top + 1)]},
            },
        )
        return result

    @cached_property
    def int_complex(self) -> IntCochainComplex:
        """Тот же комплекс как комплекс свободных ℤ-модулей."""
        if self.double.kind != "Z":
            raise CoefficientRingError(self.double.kind, "нужен двойной комплекс ℤ-коцепей")
        finite = self.finite_complex
        return IntCochainComplex(
            dims=tuple(finite.dim(n) for n in range(finite.top + 1)),
            differentials=tuple(d.to_integer() for d in finite.differentials),
        )

    def d_tot(self, n: int, vector: Sequence[object]) -> Vector:
        if not 0 <= n < self.top:
            raise DegreeOverflowError(n + 1, self.top)
        return self.finite_complex.apply_d(n, vector)

    def to_vector(self, n: int, components: Mapping[int, Sequence[object]]) -> Vector:
        """
        ## Собирает вектор степени `n` из компонент по столбцам.

        Args:
            n (int): Тотальная степень.
            components (Mapping[int, Sequence]): Вектор `F^{n−q}(Γ_q)` по `q`;
                пропущенные столбцы нулевые; столбцы вне степени `n`
                допускаются только с нулевой компонентой.
        """
        values: list[Fraction] = []
        blocks = self.blocks(n)
        known = {q for q, _, _, _ in blocks}
        unknown = {q for q, part in components.items() if q not in known and any(v != 0 for v in part)}
        if unknown:
            raise DimensionMismatchError(f"столбцы {sorted(unknown)} не входят в степень {n}")
        for q, _, _, size in blocks:
            part = as_vector(components.get(q, (0,) * size))
            if len(part) != size:
                raise DimensionMismatchError(f"компонента столбца {q} длины {len(part)} вместо {size}")
            values.extend(part)
        return tuple(values)

    def components(self, n: int, vector: Sequence[object]) -> dict[int, Vector]:
        values = as_vector(vector)
        if len(values) != self.dim(n):
            raise DimensionMismatchError(f"вектор длины {len(values)} в степени {n}")
        return {q: values[start:start + size] for q, _, start, size in self.blocks(n)}

    def from_cochains(self, cochains: Sequence[Cochain]) -> Vector:
        """Вектор по коцепям `x_q ∈ C^{n−q}(Γ_q)` для столбцов ℤ/ℚ."""
        if self.double.kind == "DC":
            raise CoefficientRingError("DC", "столбцы DC собираются из троек")
        if not cochains:
            raise DimensionMismatchError("пустой набор компонент")
        n = cochains[0].degree + self.double.levels.level_of(cochains[0])
        components = {}
        for x in cochains:
            q = self.double.levels.level_of(x)
            if x.degree + q != n:
                raise DimensionMismatchError(f"компонента уровня {q} степени {x.degree} не лежит в степени {n}")
            components[q] = x.values
        return self.to_vector(n, components)

    def to_cochains(self, n: int, vector: Sequence[object]) -> dict[int, Cochain]:
        ring = "Q" if self.double.kind == "DC" else self.double.kind
        return {
            q: Cochain(self.double.levels.level(q), n - q, ring, part)  # type: ignore[arg-type]
            for q, part in self.components(n, vector).items()
        }

    def from_triples(self, triples: Sequence[DCTriple]) -> Vector:
        """Вектор по тройкам `x_q ∈ DC^{n−q}(Γ_q)`."""
        if self.double.kind != "DC":
            raise CoefficientRingError(self.double.kind, "тройки допустимы только в столбцах DC")
        columns = self.double.dc_columns
        components = {}
        degrees = set()
        for x in triples:
            q = next((i for i, dc in enumerate(columns) if dc is x.complex), None)
            if q is None:
                raise DimensionMismatchError("тройка не принадлежит ни одному столбцу")
            components[q] = columns[q].to_vector(x)
            degrees.add(x.degree + q)
        if len(degrees) != 1:
            raise DimensionMismatchError(f"тройки лежат в разных тотальных степенях {sorted(degrees)}")
        return self.to_vector(degrees.pop(), components)

    def to_triples(self, n: int, vector: Sequence[object]) -> dict[int, DCTriple]:
        columns = self.double.dc_columns
        if not columns:
            raise CoefficientRingError(self.double.kind, "столбцы не являются комплексами DC")
        return {q: columns[q].from_vector(n - q, part) for q, part in self.components(n, vector).items()}


def total_complex(double: DoubleComplex) -> TotalComplex:
    return TotalComplex(double)


def total_cohomology(total: TotalComplex, n: int, ring: Ring | None = None) -> AbGroupPresentation:
    """
    ## Тотальные когомологии `H^n_tot`.

    Для ℚ/ℤ используется формула универсальных коэффициентов на
    тотальном комплексе ℤ-коцепей; для ℚ над ℤ-столбцами — ранги.

    Args:
        total (TotalComplex): Тотальный комплекс.
        n (int): Степень.
        ring (Ring | None): Кольцо коэффициентов; `None` — кольца координат
            столбцов (для `DC` — смешанные когомологии).

    Raises:
        InsufficientDepthError: Глубина нерва меньше `n + 1`.
        CoefficientRingError: Кольцо несовместимо со столбцами.
    """
    if n < 0:
        return AbGroupPresentation.trivial()
    if total.top < n + 1:
        raise InsufficientDepthError(n, total.top)
    kind = total.double.kind
    if ring is None or ring == kind:
        result = total.finite_complex.cohomology(n)
    elif ring == "Q" and kind == "Z":
        result = cohomology_rational(total.int_complex, n)
    elif ring == "QZ" and kind == "Z":
        result = cohomology_qz(total.int_complex, n)
    else:
        raise CoefficientRingError(ring, f"недоступно для столбцов {kind}")
    logger.info(
        "Тотальные когомологии вычислены",
        extra={"operation": "total_cohomology", "details": {"degree": n, "ring": ring or kind, "group": str(result)}},
    )
    return result


# Экспортируемый интерфейс модуля
__all__ = [
    "DoubleComplex",
    "TotalComplex",
    "total_complex",
    "total_cohomology",
]
