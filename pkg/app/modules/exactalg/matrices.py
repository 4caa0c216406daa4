"""
## Плотные точные матрицы над ℤ и ℚ.

`IntMatrix` и `RatMatrix` неизменяемы, хранят элементы построчно и
умеют переходить в `sympy.polys.matrices.DomainMatrix` над `ZZ`/`QQ` для
исключения Гаусса и обращения.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar, Iterable, Sequence, TypeVar

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from ..exceptions import DimensionMismatchError


Scalar = int | Fraction
Vector = tuple[Fraction, ...]

M = TypeVar("M", bound="_DenseMatrix")


def as_fraction(value: object) -> Fraction:
    """Приводит число (в том числе элемент `QQ`/`ZZ` из sympy) к `Fraction`."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    numerator = getattr(value, "numerator", None)
    denominator = getattr(value, "denominator", None)
    if numerator is not None and denominator is not None:
        return Fraction(int(numerator), int(denominator))
    return Fraction(str(value))


def as_vector(values: Iterable[object]) -> Vector:
    return tuple(as_fraction(v) for v in values)


def is_integral(value: Fraction) -> bool:
    return value.denominator == 1


@dataclass(frozen=True)
class _DenseMatrix:
    """
    ## Общая часть плотных матриц.

    Attributes:
        rows (int): Число строк.
        cols (int): Число столбцов.
        entries (tuple): Элементы в построчном порядке.
    """
    rows: int
    cols: int
    entries: tuple

    ring: ClassVar[str] = "Q"

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatchError(f"отрицательный размер {self.rows}×{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatchError(
                f"{len(self.entries)} элементов для матрицы {self.rows}×{self.cols}"
            )
        object.__setattr__(self, "entries", tuple(self._coerce(x) for x in self.entries))

    @staticmethod
    def _coerce(value: object) -> Scalar:
        raise NotImplementedError

    @classmethod
    def from_rows(cls: type[M], rows: Sequence[Sequence[object]], cols: int | None = None) -> M:
        """
        ## Строит матрицу из списка строк.

        Args:
            rows (Sequence[Sequence]): Строки матрицы.
            cols (int | None): Число столбцов; обязательно для матрицы без строк.

        Returns:
            Матрица того же класса.
        """
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        for row in rows:
            if len(row) != width:
                raise DimensionMismatchError(f"строка длины {len(row)} вместо {width}")
        return cls(len(rows), width, tuple(x for row in rows for x in row))

    @classmethod
    def from_columns(cls: type[M], columns: Sequence[Sequence[object]], rows: int) -> M:
        return cls.from_rows([[col[i] for col in columns] for i in range(rows)], len(columns))

    @classmethod
    def zeros(cls: type[M], rows: int, cols: int) -> M:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls: type[M], n: int) -> M:
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: tuple[int, int]) -> Scalar:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self: M) -> M:
        return type(self).from_rows(
            [list(self.column(j)) for j in range(self.cols)], self.rows
        )

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def apply(self, vector: Sequence[object]) -> Vector:
        """
        ## Умножает матрицу на вектор-столбец.

        Args:
            vector (Sequence): Вектор длины `cols`.

        Returns:
            tuple[Fraction, ...]: Результат длины `rows`.
        """
        if len(vector) != self.cols:
            raise DimensionMismatchError(
                f"вектор длины {len(vector)} для матрицы {self.rows}×{self.cols}"
            )
        values = as_vector(vector)
        nonzero = [(j, v) for j, v in enumerate(values) if v != 0]
        result = []
        for i in range(self.rows):
            base = i * self.cols
            result.append(sum((self.entries[base + j] * v for j, v in nonzero), Fraction(0)))
        return tuple(result)

    def __matmul__(self, other: "_DenseMatrix") -> "_DenseMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"произведение {self.rows}×{self.cols} на {other.rows}×{other.cols}"
            )
        result_type = IntMatrix if isinstance(self, IntMatrix) and isinstance(other, IntMatrix) else RatMatrix
        other_columns = [other.column(j) for j in range(other.cols)]
        entries = []
        for i in range(self.rows):
            row = self.row(i)
            nonzero = [(k, x) for k, x in enumerate(row) if x != 0]
            for column in other_columns:
                entries.append(sum((x * column[k] for k, x in nonzero), 0))
        return result_type(self.rows, other.cols, tuple(entries))

    def __add__(self: M, other: "_DenseMatrix") -> M:
        if self.shape != other.shape:
            raise DimensionMismatchError(f"сумма {self.shape} и {other.shape}")
        return type(self)(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __neg__(self: M) -> M:
        return type(self)(self.rows, self.cols, tuple(-x for x in self.entries))

    def __sub__(self: M, other: "_DenseMatrix") -> M:
        return self + (-other)

    def scaled(self, factor: Scalar) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, tuple(Fraction(factor) * x for x in self.entries))

    def select_columns(self: M, indices: Sequence[int]) -> M:
        return type(self).from_rows(
            [[self[i, j] for j in indices] for i in range(self.rows)], len(indices)
        )

    def select_rows(self: M, indices: Sequence[int]) -> M:
        return type(self).from_rows([list(self.row(i)) for i in indices], self.cols)

    def hstack(self, other: "_DenseMatrix") -> "RatMatrix":
        if self.rows != other.rows:
            raise DimensionMismatchError(f"hstack {self.shape} и {other.shape}")
        return RatMatrix.from_rows(
            [list(self.row(i)) + list(other.row(i)) for i in range(self.rows)],
            self.cols + other.cols,
        )

    def vstack(self, other: "_DenseMatrix") -> "RatMatrix":
        if self.cols != other.cols:
            raise DimensionMismatchError(f"vstack {self.shape} и {other.shape}")
        return RatMatrix.from_rows(self.to_rows() + other.to_rows(), self.cols)

    def to_rational(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, self.entries)

    def to_domain_matrix(self) -> DomainMatrix:
        """Переводит матрицу в `DomainMatrix` над `QQ`."""
        rows = [
            [QQ(int(x.numerator), int(x.denominator)) for x in (as_fraction(v) for v in self.row(i))]
            for i in range(self.rows)
        ]
        return DomainMatrix(rows, (self.rows, self.cols), QQ)


@dataclass(frozen=True)
class IntMatrix(_DenseMatrix):
    """
    ## Матрица с целыми элементами произвольной точности.
    """

    ring: ClassVar[str] = "Z"

    @staticmethod
    def _coerce(value: object) -> int:
        fraction = as_fraction(value)
        if fraction.denominator != 1:
            raise DimensionMismatchError(f"нецелый элемент {fraction} в IntMatrix")
        return int(fraction.numerator)

    def determinant(self) -> int:
        """Определитель квадратной матрицы (через `DomainMatrix` над `ZZ`)."""
        if self.rows != self.cols:
            raise DimensionMismatchError(f"определитель матрицы {self.rows}×{self.cols}")
        if self.rows == 0:
            return 1
        domain = DomainMatrix([[ZZ(x) for x in self.row(i)] for i in range(self.rows)], self.shape, ZZ)
        return int(domain.det())


@dataclass(frozen=True)
class RatMatrix(_DenseMatrix):
    """
    ## Матрица с рациональными элементами в несократимом виде.
    """

    ring: ClassVar[str] = "Q"

    @staticmethod
    def _coerce(value: object) -> Fraction:
        return as_fraction(value)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.entries)

    def to_integer(self) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, self.entries)


def from_domain_matrix(matrix: DomainMatrix) -> RatMatrix:
    rows, cols = matrix.shape
    return RatMatrix.from_rows(
        [[as_fraction(QQ.convert(x, matrix.domain)) for x in row] for row in matrix.to_list()],
        cols,
    ) if rows else RatMatrix.zeros(0, cols)


# Экспортируемый интерфейс модуля
__all__ = [
    "Scalar",
    "Vector",
    "IntMatrix",
    "RatMatrix",
    "as_fraction",
    "as_vector",
    "is_integral",
    "from_domain_matrix",
]
