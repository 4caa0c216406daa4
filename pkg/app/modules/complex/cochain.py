"""
## Коцепи и цепи на Δ-комплексе.

Коцепь хранит значение на каждом симплексе своей степени в порядке
объявления симплексов. Значения над ℚ/ℤ хранятся рациональными числами
из `[0, 1)`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from ..exactalg import Vector, as_fraction
from ..exceptions import CoefficientRingError, DegreeOverflowError, DimensionMismatchError
from ..internal import RINGS, Ring
from .delta import DeltaComplex


def reduce_mod_one(value: Fraction) -> Fraction:
    """Представитель класса по модулю ℤ из полуинтервала `[0, 1)`."""
    return value % 1


def _coerce_values(ring: Ring, values: Iterable[object]) -> Vector:
    result = tuple(as_fraction(v) for v in values)
    if ring == "Z":
        for value in result:
            if value.denominator != 1:
                raise CoefficientRingError(ring, f"нецелое значение {value}")
    elif ring == "QZ":
        result = tuple(reduce_mod_one(v) for v in result)
    return result


@dataclass(frozen=True, eq=False)
class Cochain:
    """
    ## Коцепь степени `degree` с коэффициентами в `ring`.

    Attributes:
        space (DeltaComplex): Комплекс, на котором задана коцепь.
        degree (int): Степень коцепи.
        ring (Ring): Кольцо коэффициентов: `Z`, `Q` или `QZ`.
        values (tuple[Fraction, ...]): Значения на симплексах степени `degree`.
    """
    space: DeltaComplex
    degree: int
    ring: Ring
    values: Vector

    def __post_init__(self) -> None:
        if self.ring not in RINGS:
            raise CoefficientRingError(str(self.ring), "неизвестное кольцо")
        if not 0 <= self.degree <= max(self.space.dimension, 0):
            raise DegreeOverflowError(self.degree, self.space.dimension)
        if len(self.values) != self.space.count(self.degree):
            raise DimensionMismatchError(
                f"{len(self.values)} значений для {self.space.count(self.degree)} симплексов степени {self.degree}"
            )
        object.__setattr__(self, "values", _coerce_values(self.ring, self.values))

    @classmethod
    def zero(cls, space: DeltaComplex, degree: int, ring: Ring = "Z") -> "Cochain":
        return cls(space, degree, ring, (Fraction(0),) * space.count(degree))

    @classmethod
    def from_mapping(
        cls,
        space: DeltaComplex,
        degree: int,
        ring: Ring,
        mapping: Mapping[str, object],
    ) -> "Cochain":
        """
        ## Строит коцепь по словарю `симплекс → значение`.

        Неуказанные симплексы получают 0.

        Raises:
            DimensionMismatchError: Симплекс не принадлежит комплексу или
                имеет другую размерность.
        """
        values = [Fraction(0)] * space.count(degree)
        for simplex_id, value in mapping.items():
            if simplex_id not in space or space.dim_of(simplex_id) != degree:
                raise DimensionMismatchError(f"симплекс {simplex_id} не имеет размерности {degree}")
            values[space.index_of(simplex_id)] = as_fraction(value)
        return cls(space, degree, ring, tuple(values))

    @classmethod
    def indicator(cls, space: DeltaComplex, simplex_id: str, ring: Ring = "Z") -> "Cochain":
        return cls.from_mapping(space, space.dim_of(simplex_id), ring, {simplex_id: 1})

    @classmethod
    def constant(cls, space: DeltaComplex, degree: int, value: object, ring: Ring = "Z") -> "Cochain":
        return cls(space, degree, ring, (as_fraction(value),) * space.count(degree))

    def __getitem__(self, simplex_id: str) -> Fraction:
        return self.values[self.space.index_of(simplex_id)]

    def items(self) -> Iterator[tuple[str, Fraction]]:
        return zip(self.space.simplices(self.degree), self.values)

    def support(self) -> dict[str, Fraction]:
        """Ненулевые значения в порядке объявления симплексов."""
        return {simplex_id: value for simplex_id, value in self.items() if value != 0}

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    def _check_compatible(self, other: "Cochain") -> None:
        if other.space is not self.space or other.degree != self.degree:
            raise DimensionMismatchError("коцепи заданы на разных комплексах или в разных степенях")

    def _result_ring(self, other: "Cochain") -> Ring:
        rings = {self.ring, other.ring}
        if "QZ" in rings:
            return "QZ"
        return "Q" if "Q" in rings else "Z"

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check_compatible(other)
        return Cochain(self.space, self.degree, self._result_ring(other),
                       tuple(a + b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "Cochain":
        return Cochain(self.space, self.degree, self.ring, tuple(-v for v in self.values))

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return (
            self.space is other.space
            and self.degree == other.degree
            and self.ring == other.ring
            and self.values == other.values
        )

    def __hash__(self) -> int:
        return hash((id(self.space), self.degree, self.ring, self.values))

    def scaled(self, factor: object) -> "Cochain":
        k = as_fraction(factor)
        ring: Ring = self.ring if k.denominator == 1 else ("QZ" if self.ring == "QZ" else "Q")
        return Cochain(self.space, self.degree, ring, tuple(k * v for v in self.values))

    def with_ring(self, ring: Ring) -> "Cochain":
        """Переносит значения в другое кольцо (для `QZ` — редукция по модулю 1)."""
        return Cochain(self.space, self.degree, ring, self.values)

    def lift(self) -> "Cochain":
        """Рациональный подъём: значения ℚ/ℤ-коцепи из `[0, 1)` как элементы ℚ."""
        return Cochain(self.space, self.degree, "Q", self.values)

    def reduce(self) -> "Cochain":
        return self.with_ring("QZ")

    def __repr__(self) -> str:
        return f"Cochain(degree={self.degree}, ring={self.ring}, values={self.support()})"


@dataclass(frozen=True, eq=False)
class Chain:
    """
    ## Формальная целочисленная комбинация симплексов одной размерности.

    Attributes:
        space (DeltaComplex): Комплекс.
        degree (int): Размерность симплексов.
        coefficients (tuple[int, ...]): Коэффициенты в порядке объявления.
    """
    space: DeltaComplex
    degree: int
    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coefficients) != self.space.count(self.degree):
            raise DimensionMismatchError(
                f"{len(self.coefficients)} коэффициентов для {self.space.count(self.degree)} симплексов"
            )
        coefficients = []
        for value in self.coefficients:
            fraction = as_fraction(value)
            if fraction.denominator != 1:
                raise CoefficientRingError("Z", f"нецелый коэффициент цепи {fraction}")
            coefficients.append(int(fraction))
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @classmethod
    def zero(cls, space: DeltaComplex, degree: int) -> "Chain":
        return cls(space, degree, (0,) * space.count(degree))

    @classmethod
    def from_mapping(cls, space: DeltaComplex, degree: int, mapping: Mapping[str, int]) -> "Chain":
        coefficients = [0] * space.count(degree)
        for simplex_id, value in mapping.items():
            if simplex_id not in space or space.dim_of(simplex_id) != degree:
                raise DimensionMismatchError(f"симплекс {simplex_id} не имеет размерности {degree}")
            coefficients[space.index_of(simplex_id)] += int(value)
        return cls(space, degree, tuple(coefficients))

    @classmethod
    def simplex(cls, space: DeltaComplex, simplex_id: str) -> "Chain":
        return cls.from_mapping(space, space.dim_of(simplex_id), {simplex_id: 1})

    @classmethod
    def from_vector(cls, space: DeltaComplex, degree: int, vector: Sequence[object]) -> "Chain":
        return cls(space, degree, tuple(vector))  # type: ignore[arg-type]

    def __getitem__(self, simplex_id: str) -> int:
        return self.coefficients[self.space.index_of(simplex_id)]

    def items(self) -> Iterator[tuple[str, int]]:
        return zip(self.space.simplices(self.degree), self.coefficients)

    def support(self) -> dict[str, int]:
        return {simplex_id: value for simplex_id, value in self.items() if value}

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def __add__(self, other: "Chain") -> "Chain":
        if other.space is not self.space or other.degree != self.degree:
            raise DimensionMismatchError("цепи заданы на разных комплексах или в разных размерностях")
        return Chain(self.space, self.degree, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> "Chain":
        return Chain(self.space, self.degree, tuple(-a for a in self.coefficients))

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def scaled(self, factor: int) -> "Chain":
        return Chain(self.space, self.degree, tuple(factor * a for a in self.coefficients))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        return self.space is other.space and self.degree == other.degree and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash((id(self.space), self.degree, self.coefficients))

    def __repr__(self) -> str:
        return f"Chain(degree={self.degree}, {self.support()})"


# Экспортируемый интерфейс модуля
__all__ = [
    "Cochain",
    "Chain",
    "reduce_mod_one",
]
