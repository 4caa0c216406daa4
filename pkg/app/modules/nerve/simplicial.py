"""
## Усечённые симплициальные объекты в Δ-комплексах.

Уровень `q` — Δ-комплекс `Γ_q`, грани `∂_0 … ∂_q: Γ_q → Γ_{q−1}` —
симплициальные отображения. Общая модель для нервов группоидов
действия и для нервов покрытий.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Mapping, Sequence

from ..complex import Cochain, DeltaComplex
from ..exactalg import IntMatrix
from ..exceptions import DepthExceededError, DimensionMismatchError, InvalidComplexError
from ..logging import get_json_app_logger


logger = get_json_app_logger(__name__)


@dataclass(frozen=True, eq=False)
class SimplicialMap:
    """
    ## Симплициальное отображение Δ-комплексов.

    Сохраняет размерность и коммутирует с гранями:
    `f(∂_i σ) = ∂_i f(σ)`.

    Attributes:
        source (DeltaComplex): Источник.
        target (DeltaComplex): Цель.
        mapping (Mapping[str, str]): Образ каждого симплекса источника.
    """
    source: DeltaComplex
    target: DeltaComplex
    mapping: Mapping[str, str]

    def __post_init__(self) -> None:
        for simplex_id in self.source.all_simplices:
            image = self.mapping.get(simplex_id)
            if image is None or image not in self.target:
                raise InvalidComplexError(f"образ {image} не найден", simplex_id)
            if self.target.dim_of(image) != self.source.dim_of(simplex_id):
                raise InvalidComplexError(f"образ {image} другой размерности", simplex_id)
            faces = self.source.faces(simplex_id)
            if tuple(self.mapping[f] for f in faces) != self.target.faces(image):
                raise InvalidComplexError(f"отображение не коммутирует с гранями {image}", simplex_id)

    def __call__(self, simplex_id: str) -> str:
        return self.mapping[simplex_id]

    def pullback_matrix(self, degree: int) -> IntMatrix:
        """Матрица `f^*: C^p(target) → C^p(source)`."""
        return _pullback_matrix(self, degree)

    def pullback(self, x: Cochain) -> Cochain:
        """`(f^* x)(σ) = x(f(σ))`."""
        if x.space is not self.target:
            raise DimensionMismatchError("коцепь задана не на цели отображения")
        return Cochain(
            self.source,
            x.degree,
            x.ring,
            tuple(x[self.mapping[s]] for s in self.source.simplices(x.degree)),
        )


@cache
def _pullback_matrix(f: SimplicialMap, degree: int) -> IntMatrix:
    rows = []
    for simplex_id in f.source.simplices(degree):
        row = [0] * f.target.count(degree)
        row[f.target.index_of(f.mapping[simplex_id])] = 1
        rows.append(row)
    return IntMatrix.from_rows(rows, f.target.count(degree))


class SimplicialLevels:
    """
    ## Усечённый полусимплициальный объект `Γ_0 ← Γ_1 ⇇ … Γ_N`.

    Attributes:
        levels (tuple[DeltaComplex, ...]): Уровни `Γ_0 … Γ_N`.
        faces (tuple[tuple[SimplicialMap, ...], ...]): `faces[q][i]` — это
            `∂_i: Γ_q → Γ_{q−1}` (для `q = 0` пусто).
    """

    def __init__(self, levels: Sequence[DeltaComplex], faces: Sequence[Sequence[SimplicialMap]]) -> None:
        self.levels = tuple(levels)
        self.faces = tuple(tuple(f) for f in faces)
        if len(self.faces) != len(self.levels):
            raise DimensionMismatchError("число наборов граней не совпадает с числом уровней")
        for q, maps in enumerate(self.faces):
            if len(maps) != (q + 1 if q else 0):
                raise DimensionMismatchError(f"на уровне {q} ожидалось {q + 1} граней")
            for face in maps:
                if face.source is not self.levels[q] or face.target is not self.levels[q - 1]:
                    raise DimensionMismatchError(f"грань уровня {q} задана не между Γ_{q} и Γ_{q - 1}")
        self.check_simplicial_identities()

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def level(self, q: int) -> DeltaComplex:
        if not 0 <= q <= self.depth:
            raise DepthExceededError(q, self.depth)
        return self.levels[q]

    def face(self, q: int, i: int) -> SimplicialMap:
        if not 1 <= q <= self.depth:
            raise DepthExceededError(q, self.depth)
        return self.faces[q][i]

    def level_of(self, x: Cochain) -> int:
        for q, level in enumerate(self.levels):
            if level is x.space:
                return q
        raise DimensionMismatchError("коцепь не задана ни на одном уровне")

    def check_simplicial_identities(self) -> None:
        """
        ## Проверяет `∂_i ∂_j = ∂_{j−1} ∂_i` при `i < j` на всех симплексах.

        Raises:
            InvalidComplexError: С указанием симплекса, где тождество нарушено.
        """
        for q in range(2, self.depth + 1):
            for simplex_id in self.levels[q].all_simplices:
                for j in range(q + 1):
                    for i in range(j):
                        left = self.faces[q - 1][i](self.faces[q][j](simplex_id))
                        right = self.faces[q - 1][j - 1](self.faces[q][i](simplex_id))
                        if left != right:
                            raise InvalidComplexError(f"∂_{i}∂_{j} ≠ ∂_{j - 1}∂_{i} на уровне {q}", simplex_id)

    def delta_matrix(self, q: int, degree: int, sign: int = 1) -> IntMatrix:
        """
        ## Матрица `δ = Σ_i (−1)^i ∂_i^*: C^p(Γ_q) → C^p(Γ_{q+1})`.
        """
        if q + 1 > self.depth:
            raise DepthExceededError(q + 1, self.depth)
        target, source = self.levels[q + 1], self.levels[q]
        rows = [[0] * source.count(degree) for _ in range(target.count(degree))]
        for i, face in enumerate(self.faces[q + 1]):
            pullback = face.pullback_matrix(degree)
            for r in range(pullback.rows):
                for c in range(pullback.cols):
                    if pullback[r, c]:
                        rows[r][c] += sign * (-1) ** i * pullback[r, c]
        return IntMatrix.from_rows(rows, source.count(degree))

    def delta(self, x: Cochain) -> Cochain:
        """
        ## Горизонтальный дифференциал `δx = Σ_i (−1)^i ∂_i^* x`.

        Raises:
            DepthExceededError: `x` задана на последнем уровне.
        """
        q = self.level_of(x)
        if q + 1 > self.depth:
            raise DepthExceededError(q + 1, self.depth)
        values = [Fraction(0)] * self.levels[q + 1].count(x.degree)
        for i, face in enumerate(self.faces[q + 1]):
            pulled = face.pullback(x)
            values = [v + (-1) ** i * p for v, p in zip(values, pulled.values)]
        return Cochain(self.levels[q + 1], x.degree, x.ring, tuple(values))


def delta(levels: SimplicialLevels, x: Cochain) -> Cochain:
    return levels.delta(x)


# Экспортируемый интерфейс модуля
__all__ = [
    "SimplicialMap",
    "SimplicialLevels",
    "delta",
]
