"""
## Комплекс `DC•_s` троек `(c, h, ω)`.

`DC^n_s = C^n_ℤ ⊕ C^{n−1}_ℚ ⊕ Ω^n`, причём ω-слот существует только при
`n ≥ s`. Дифференциал `d(c, h, ω) = (dc, ω − c − dh, dω)`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Mapping, Sequence

from ..chaincat import CatMorphism, CatObject, ChainCategory, ChainMap, FiniteComplex
from ..complex import Cochain, DeltaComplex
from ..exactalg import AbGroupPresentation, RatMatrix, Vector, as_vector
from ..exceptions import DegreeOverflowError, DimensionMismatchError
from ..internal import CoordRing
from ..logging import get_json_app_logger
from .omega import OmegaModel


logger = get_json_app_logger(__name__)

CochainLike = Cochain | Mapping[str, object] | None


@dataclass(frozen=True, eq=False)
class DCTriple:
    """
    ## Элемент `(c, h, ω)` степени `degree` комплекса `DC•_s`.

    Отсутствующий слот хранится как `None`: `c` при `n > dim`, `h` при
    `n = 0`, `ω` при `n < s` или `n > dim`.
    """
    complex: "DCComplex"
    degree: int
    c: Cochain | None
    h: Cochain | None
    omega: Cochain | None

    def to_vector(self) -> Vector:
        return self.complex.to_vector(self)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.to_vector())

    def __add__(self, other: "DCTriple") -> "DCTriple":
        if other.complex is not self.complex or other.degree != self.degree:
            raise DimensionMismatchError("тройки из разных комплексов или степеней")
        return self.complex.from_vector(self.degree, tuple(a + b for a, b in zip(self.to_vector(), other.to_vector())))

    def __neg__(self) -> "DCTriple":
        return self.complex.from_vector(self.degree, tuple(-a for a in self.to_vector()))

    def __sub__(self, other: "DCTriple") -> "DCTriple":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DCTriple):
            return NotImplemented
        return other.complex is self.complex and other.degree == self.degree and other.to_vector() == self.to_vector()

    def __hash__(self) -> int:
        return hash((id(self.complex), self.degree, self.to_vector()))

    def __repr__(self) -> str:
        parts = [
            f"{name}={slot.support()}"
            for name, slot in (("c", self.c), ("h", self.h), ("omega", self.omega))
            if slot is not None
        ]
        return f"DCTriple(degree={self.degree}, {', '.join(parts)})"


class DCComplex:
    """
    ## Комплекс Хопкинса — Зингера `DC•_s(X)`.

    Степени `0 … dim X + 1`. Проверка `d∘d = 0` выполняется при построении
    конечного комплекса.

    Attributes:
        space (DeltaComplex): Базовый комплекс `X`.
        s (int): Параметр усечения ω.
        omega (OmegaModel): Ω-подкомплекс.
    """

    def __init__(self, space: DeltaComplex, s: int = 2, omega: OmegaModel | None = None) -> None:
        if s < 0:
            raise DegreeOverflowError(s, 0)
        if omega is not None and omega.space is not space:
            raise DimensionMismatchError("Ω-модель задана на другом комплексе")
        self.space = space
        self.s = s
        self.omega = omega or OmegaModel.full(space)
        self.top = space.dimension + 1

    def has_c(self, n: int) -> bool:
        return 0 <= n <= self.space.dimension

    def has_h(self, n: int) -> bool:
        return 1 <= n <= self.space.dimension + 1

    def has_omega(self, n: int) -> bool:
        return self.s <= n <= self.space.dimension

    def layout(self, n: int) -> tuple[tuple[str, int, int], ...]:
        """Блоки степени `n`: `(имя, начало, длина)` в порядке `c, h, omega`."""
        blocks = []
        start = 0
        for name, present, size in (
            ("c", self.has_c(n), self.space.count(n)),
            ("h", self.has_h(n), self.space.count(n - 1)),
            ("omega", self.has_omega(n), self.omega.rank(n)),
        ):
            if present:
                blocks.append((name, start, size))
                start += size
        return tuple(blocks)

    def dim(self, n: int) -> int:
        return sum(size for _, _, size in self.layout(n))

    def _labels(self, n: int) -> tuple[str, ...]:
        labels: list[str] = []
        for name, _, size in self.layout(n):
            if name == "c":
                labels.extend(f"c:{s}" for s in self.space.simplices(n))
            elif name == "h":
                labels.extend(f"h:{s}" for s in self.space.simplices(n - 1))
            elif self.omega.is_full:
                labels.extend(f"omega:{s}" for s in self.space.simplices(n))
            else:
                labels.extend(f"omega:#{i}" for i in range(size))
        return tuple(labels)

    def _differential(self, n: int) -> RatMatrix:
        source = {name: (start, size) for name, start, size in self.layout(n)}
        target = {name: (start, size) for name, start, size in self.layout(n + 1)}
        rows = [[Fraction(0)] * self.dim(n) for _ in range(self.dim(n + 1))]

        def place(row_block: str, column_block: str, matrix: RatMatrix) -> None:
            if row_block not in target or column_block not in source:
                return
            row_start, _ = target[row_block]
            column_start, _ = source[column_block]
            for i in range(matrix.rows):
                for j in range(matrix.cols):
                    if matrix[i, j]:
                        rows[row_start + i][column_start + j] += matrix[i, j]

        space = self.space
        if n < space.dimension:
            place("c", "c", space.coboundary_matrix(n).to_rational())
        place("h", "c", -RatMatrix.identity(space.count(n)))
        if n >= 1:
            place("h", "h", -space.coboundary_matrix(n - 1).to_rational())
        if self.has_omega(n):
            place("h", "omega", self.omega.embedding(n))
            if self.has_omega(n + 1):
                place("omega", "omega", self.omega.differential(n))
        return RatMatrix.from_rows(rows, self.dim(n))

    @cached_property
    def finite_complex(self) -> FiniteComplex:
        """Комплекс `DC•_s` в координатах; проверяет `d∘d = 0` и целочисленность."""
        rings: list[tuple[CoordRing, ...]] = []
        for n in range(self.top + 1):
            degree_rings: list[CoordRing] = []
            for name, _, size in self.layout(n):
                degree_rings.extend(["Z" if name == "c" else "Q"] * size)
            rings.append(tuple(degree_rings))
        result = FiniteComplex(
            rings=tuple(rings),
            differentials=tuple(self._differential(n) for n in range(self.top)),
            labels=tuple(self._labels(n) for n in range(self.top + 1)),
        )
        logger.debug(
            "Комплекс DC построен",
            extra={
                "operation": "dc_complex",
                "details": {"space": self.space.name, "s": self.s, "dims": [self.dim(n) for n in range(self.top + 1)]},
            },
        )
        return result

    def _slot(self, degree: int, ring: str, value: CochainLike, present: bool, name: str) -> Cochain | None:
        if not present:
            if value is not None and not (isinstance(value, Cochain) and value.is_zero()) and value != {}:
                raise DimensionMismatchError(f"слот {name} отсутствует в степени тройки")
            return None
        if value is None:
            return Cochain.zero(self.space, degree, ring)  # type: ignore[arg-type]
        if isinstance(value, Cochain):
            if value.space is not self.space or value.degree != degree:
                raise DimensionMismatchError(f"слот {name}: ожидалась коцепь степени {degree}")
            return value.with_ring(ring)  # type: ignore[arg-type]
        return Cochain.from_mapping(self.space, degree, ring, value)  # type: ignore[arg-type]

    def triple(self, n: int, c: CochainLike = None, h: CochainLike = None, omega: CochainLike = None) -> DCTriple:
        """
        ## Строит тройку степени `n`.

        Args:
            n (int): Степень.
            c: Целочисленная коцепь степени `n` или словарь значений.
            h: Рациональная коцепь степени `n − 1`.
            omega: Рациональная коцепь степени `n` из Ω-модели.

        Raises:
            DimensionMismatchError: Задан отсутствующий слот (например, ω
                при `n < s`) или ω вне Ω-модели.
        """
        if not 0 <= n <= self.top:
            raise DegreeOverflowError(n, self.top)
        triple = DCTriple(
            self,
            n,
            self._slot(n, "Z", c, self.has_c(n), "c"),
            self._slot(n - 1, "Q", h, self.has_h(n), "h"),
            self._slot(n, "Q", omega, self.has_omega(n), "omega"),
        )
        if triple.omega is not None and self.omega.coordinates(n, triple.omega.values) is None:
            raise DimensionMismatchError("ω не лежит в Ω-модели")
        return triple

    def zero(self, n: int) -> DCTriple:
        return self.triple(n)

    def to_vector(self, x: DCTriple) -> Vector:
        values: list[Fraction] = []
        for name, _, _ in self.layout(x.degree):
            slot: Cochain = getattr(x, name)
            if name == "omega":
                values.extend(self.omega.coordinates(x.degree, slot.values))  # type: ignore[arg-type]
            else:
                values.extend(slot.values)
        return tuple(values)

    def from_vector(self, n: int, vector: Sequence[object]) -> DCTriple:
        values = as_vector(vector)
        if len(values) != self.dim(n):
            raise DimensionMismatchError(f"вектор длины {len(values)} для DC^{n} размерности {self.dim(n)}")
        slots: dict[str, Cochain] = {}
        for name, start, size in self.layout(n):
            chunk = values[start:start + size]
            if name == "c":
                slots[name] = Cochain(self.space, n, "Z", chunk)
            elif name == "h":
                slots[name] = Cochain(self.space, n - 1, "Q", chunk)
            else:
                slots[name] = Cochain(self.space, n, "Q", self.omega.embedding(n).apply(chunk))
        return DCTriple(self, n, slots.get("c"), slots.get("h"), slots.get("omega"))

    def diff(self, x: DCTriple) -> DCTriple:
        """
        ## Дифференциал `d(c, h, ω) = (dc, ω − c − dh, dω)`.

        Raises:
            DegreeOverflowError: `n + 1` выходит за пределы комплекса.
        """
        if x.complex is not self:
            raise DimensionMismatchError("тройка из другого комплекса")
        if x.degree + 1 > self.top:
            raise DegreeOverflowError(x.degree + 1, self.top)
        return self.from_vector(x.degree + 1, self.finite_complex.apply_d(x.degree, self.to_vector(x)))

    def is_cocycle(self, x: DCTriple) -> bool:
        if x.degree >= self.top:
            return True
        return self.diff(x).is_zero()

    def cohomology(self, n: int) -> AbGroupPresentation:
        return self.finite_complex.cohomology(n)

    def integral_cochains(self) -> FiniteComplex:
        return FiniteComplex.from_int_complex(self.space.cochain_complex, "Z")

    def projection(self) -> ChainMap:
        """
        ## Цепное отображение `p: DC•_s → C•_ℤ`, `(c, h, ω) ↦ c`.
        """
        target = self.integral_cochains()
        components = []
        for n in range(self.top + 1):
            rows = [[Fraction(0)] * self.dim(n) for _ in range(target.dim(n))]
            for name, start, size in self.layout(n):
                if name == "c":
                    for i in range(size):
                        rows[i][start + i] = Fraction(1)
            components.append(RatMatrix.from_rows(rows, self.dim(n)))
        return ChainMap(self.finite_complex, target, components)

    def block_map(self, other: "DCComplex", n: int, pullback: Callable[[int], RatMatrix]) -> RatMatrix:
        """
        ## Матрица отображения `DC^n(self) → DC^n(other)`, индуцированного
        отображением коцепей `pullback(m): C^m(self) → C^m(other)`.

        Обе Ω-модели должны быть полными.
        """
        if not (self.omega.is_full and other.omega.is_full):
            raise DimensionMismatchError("перенос троек определён только для полных Ω-моделей")
        source = {name: (start, size) for name, start, size in self.layout(n)}
        rows = [[Fraction(0)] * self.dim(n) for _ in range(other.dim(n))]
        for name, row_start, _ in other.layout(n):
            if name not in source:
                continue
            column_start, _ = source[name]
            matrix = pullback(n - 1 if name == "h" else n)
            for i in range(matrix.rows):
                for j in range(matrix.cols):
                    if matrix[i, j]:
                        rows[row_start + i][column_start + j] = matrix[i, j]
        return RatMatrix.from_rows(rows, self.dim(n))

    def category(self, n: int) -> "DCCategory":
        return DCCategory(self, n)


class DCCategory(ChainCategory):
    """
    ## Категория `H^n(DC•_s(X))` на уровне троек.
    """

    def __init__(self, dc: DCComplex, degree: int) -> None:
        super().__init__(dc.finite_complex, degree)
        self.dc = dc

    def object_of(self, x: DCTriple) -> CatObject:
        """Проверяет, что тройка — коцикл, и возвращает объект."""
        return self.object(self.dc.to_vector(x))

    def is_cocycle(self, x: DCTriple) -> bool:
        return self.dc.is_cocycle(x)

    def hom_triples(self, x: DCTriple, y: DCTriple) -> CatMorphism | None:
        return self.hom_exists(self.object_of(x), self.object_of(y))

    def representative(self, m: CatMorphism) -> DCTriple:
        return self.dc.from_vector(self.degree - 1, m.representative)


def dc_cocycles_h2(space: DeltaComplex, s: int = 2, omega: OmegaModel | None = None) -> DCCategory:
    """
    ## Разрешающие процедуры категории `H²(DC•_s(X))`.

    При `s = 2` это категория дифференциальных характеров.
    """
    return DCComplex(space, s, omega).category(2)


def dc_diff(x: DCTriple) -> DCTriple:
    return x.complex.diff(x)


# Экспортируемый интерфейс модуля
__all__ = [
    "DCTriple",
    "DCComplex",
    "DCCategory",
    "dc_cocycles_h2",
    "dc_diff",
]
