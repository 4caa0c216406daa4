"""
## Модели Ω-подкомплекса в ℚ-коцепях.

По умолчанию Ω• — полный комплекс ℚ-коцепей, и вложение `Ω• ⊂ C•_ℚ`
тождественно. Произвольная модель задаётся базисами подпространств
`Ω^n ⊆ C^n_ℚ`, замкнутых относительно кограницы.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence

from ..chaincat import ChainMap, FiniteComplex
from ..complex import DeltaComplex
from ..exactalg import RatMatrix, Vector, as_vector, rational_rank, solve_rational
from ..exceptions import DimensionMismatchError, PreconditionError


@dataclass(frozen=True, eq=False)
class OmegaModel:
    """
    ## Ω-подкомплекс комплекса ℚ-коцепей.

    Attributes:
        space (DeltaComplex): Базовый комплекс.
        bases (Mapping[int, tuple[Vector, ...]] | None): Базис `Ω^n` для
            каждой степени; `None` означает полную модель.
    """
    space: DeltaComplex
    bases: Mapping[int, tuple[Vector, ...]] | None = None

    def __post_init__(self) -> None:
        if self.bases is None:
            return
        normalized = {n: tuple(as_vector(v) for v in self.bases.get(n, ())) for n in range(self.space.dimension + 1)}
        object.__setattr__(self, "bases", normalized)
        for n, basis in normalized.items():
            for vector in basis:
                if len(vector) != self.space.count(n):
                    raise DimensionMismatchError(f"базисный вектор Ω^{n} длины {len(vector)}")
            if basis and rational_rank(RatMatrix.from_rows([list(v) for v in basis], self.space.count(n))) != len(basis):
                raise PreconditionError(f"базис Ω^{n} линейно зависим")
        for n in range(self.space.dimension):
            image = self.space.coboundary_matrix(n).to_rational()
            for vector in normalized[n]:
                if self.coordinates(n + 1, image.apply(vector)) is None:
                    raise PreconditionError(f"d(Ω^{n}) не лежит в Ω^{n + 1}")

    @classmethod
    def full(cls, space: DeltaComplex) -> "OmegaModel":
        return cls(space)

    @classmethod
    def from_cochains(cls, space: DeltaComplex, bases: Mapping[int, Sequence[Sequence[object]]]) -> "OmegaModel":
        return cls(space, {n: tuple(as_vector(v) for v in vectors) for n, vectors in bases.items()})

    @property
    def is_full(self) -> bool:
        return self.bases is None

    def rank(self, n: int) -> int:
        if not 0 <= n <= self.space.dimension:
            return 0
        return self.space.count(n) if self.bases is None else len(self.bases[n])

    def embedding(self, n: int) -> RatMatrix:
        """Матрица `E_n`, столбцы которой — базис `Ω^n` в координатах симплексов."""
        if self.bases is None:
            return RatMatrix.identity(self.space.count(n))
        return RatMatrix.from_columns(self.bases.get(n, ()), self.space.count(n))

    def coordinates(self, n: int, cochain_values: Sequence[object]) -> Vector | None:
        """Координаты ℚ-коцепи в базисе `Ω^n` или `None`, если коцепь вне `Ω^n`."""
        values = as_vector(cochain_values)
        if self.bases is None:
            return values
        return solve_rational(self.embedding(n), values)

    def differential(self, n: int) -> RatMatrix:
        """Матрица `D_n` кограницы в координатах модели: `E_{n+1} D_n = d E_n`."""
        if self.bases is None:
            return self.space.coboundary_matrix(n).to_rational()
        image = self.space.coboundary_matrix(n).to_rational() @ self.embedding(n)
        columns = [self.coordinates(n + 1, image.column(j)) for j in range(image.cols)]
        return RatMatrix.from_columns(columns, self.rank(n + 1))  # type: ignore[arg-type]

    @cached_property
    def finite_complex(self) -> FiniteComplex:
        top = self.space.dimension
        return FiniteComplex(
            rings=tuple(("Q",) * self.rank(n) for n in range(top + 1)),
            differentials=tuple(self.differential(n) for n in range(top)),
        )

    @cached_property
    def inclusion_is_quasi_isomorphism(self) -> bool:
        """
        ## Индуцирует ли вложение `Ω• ⊂ C•_ℚ` изоморфизм когомологий.
        """
        if self.bases is None:
            return True
        rational_cochains = FiniteComplex.from_int_complex(self.space.cochain_complex, "Q")
        inclusion = ChainMap(
            self.finite_complex,
            rational_cochains,
            [self.embedding(n) for n in range(self.space.dimension + 1)],
        )
        return all(inclusion.induces_isomorphism(n) for n in range(self.space.dimension + 1))


# Экспортируемый интерфейс модуля
__all__ = [
    "OmegaModel",
]
