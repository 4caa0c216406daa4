"""
## Решёточные U(1)-калибровочные поля.

Поле — ℚ/ℤ-значение на каждом ребре, калибровочное преобразование —
ℚ/ℤ-значение в каждой вершине, `a ↦ a + dg`. Эквивариантное поле на нерве
добавляет данные спуска `t` на `Γ_1`: `δa = dt` и `δt = 0` по модулю ℤ.

Текстовый формат:

```
space circle_3
gauge
e01 = 1/3
e12 = 1/3
descent
1|v0 = 1/2
```

Блок `descent` допустим только для эквивариантных полей.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from ..complex import (
    Chain,
    Cochain,
    DeltaComplex,
    coboundary,
    evaluate,
    is_cycle,
    iter_content_lines,
    parse_assignment,
    reduce_mod_one,
)
from ..exactalg import Vector
from ..exceptions import AppError, DegreeOverflowError, DimensionMismatchError, NotACocycleError, NotACycleError, ParseError
from ..logging import get_json_app_logger
from ..nerve import NerveLevels, TotalComplex


logger = get_json_app_logger(__name__)


@dataclass(frozen=True, eq=False)
class GaugeField:
    """
    ## Калибровочное поле `a ∈ C^1(X; ℚ/ℤ)`.

    Attributes:
        a (Cochain): ℚ/ℤ-коцепь степени 1, значения в `[0, 1)`.
    """
    a: Cochain

    def __post_init__(self) -> None:
        if self.a.space.dimension < 1:
            raise DegreeOverflowError(1, self.a.space.dimension)
        if self.a.degree != 1:
            raise DimensionMismatchError(f"поле задаётся коцепью степени 1, а не {self.a.degree}")
        object.__setattr__(self, "a", self.a.reduce())

    @classmethod
    def from_mapping(cls, space: DeltaComplex, values: dict[str, object]) -> "GaugeField":
        return cls(Cochain.from_mapping(space, 1, "QZ", values))

    @classmethod
    def zero(cls, space: DeltaComplex) -> "GaugeField":
        return cls(Cochain.zero(space, 1, "QZ"))

    @property
    def space(self) -> DeltaComplex:
        return self.a.space

    def lift(self) -> Cochain:
        """Представитель в `[0, 1)` как ℚ-коцепь."""
        return self.a.lift()

    def holonomy(self, z: Chain) -> Fraction:
        return holonomy(self, z)

    def __add__(self, other: "GaugeField") -> "GaugeField":
        return GaugeField(self.a + other.a)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GaugeField) and self.a == other.a

    def __hash__(self) -> int:
        return hash(self.a)


@dataclass(frozen=True, eq=False)
class GaugeTransformation:
    """
    ## Калибровочное преобразование `g ∈ C^0(X; ℚ/ℤ)`.
    """
    g: Cochain

    def __post_init__(self) -> None:
        if self.g.degree != 0:
            raise DimensionMismatchError(f"преобразование задаётся коцепью степени 0, а не {self.g.degree}")
        object.__setattr__(self, "g", self.g.reduce())

    @classmethod
    def from_mapping(cls, space: DeltaComplex, values: dict[str, object]) -> "GaugeTransformation":
        return cls(Cochain.from_mapping(space, 0, "QZ", values))

    @property
    def space(self) -> DeltaComplex:
        return self.g.space

    def lift(self) -> Cochain:
        return self.g.lift()


def gauge_act(g: GaugeTransformation, a: GaugeField) -> GaugeField:
    """`a′ = a + dg` по модулю ℤ."""
    if g.space is not a.space:
        raise DimensionMismatchError("преобразование и поле заданы на разных комплексах")
    return GaugeField(a.a + coboundary(g.g))


def holonomy(a: GaugeField, z: Chain) -> Fraction:
    """
    ## Голономия поля вдоль 1-цикла, в `[0, 1)`.

    Raises:
        NotACycleError: `z` не цикл.
    """
    if z.degree != 1:
        raise DimensionMismatchError(f"голономия берётся по 1-циклам, а не по {z.degree}-цепям")
    if not is_cycle(z):
        raise NotACycleError(next(iter(z.support()), "?"))
    return reduce_mod_one(evaluate(a.lift(), z))


class EquivariantGaugeField:
    """
    ## Поле на `Γ_0` с данными спуска на `Γ_1`.

    Attributes:
        nerve (NerveLevels): Нерв глубины не меньше 2.
        field (GaugeField): Поле `a` на `Γ_0 = X`.
        t (Cochain): ℚ/ℤ-коцепь степени 0 на `Γ_1`.
    """

    def __init__(self, nerve: NerveLevels, field: GaugeField, t: Cochain) -> None:
        if field.space is not nerve.level(0):
            raise DimensionMismatchError("поле задано не на Γ_0")
        if t.space is not nerve.level(1) or t.degree != 0:
            raise DimensionMismatchError("данные спуска — 0-коцепь на Γ_1")
        self.nerve = nerve
        self.field = field
        self.t = t.reduce()
        descent = nerve.delta(field.a) - coboundary(self.t)
        if not descent.is_zero():
            simplex = next(iter(descent.support()))
            raise NotACocycleError(f"δa − dt на {simplex}")
        cocycle = nerve.delta(self.t)
        if not cocycle.is_zero():
            simplex = next(iter(cocycle.support()))
            raise NotACocycleError(f"δt на {simplex}")

    @classmethod
    def invariant(cls, nerve: NerveLevels, field: GaugeField) -> "EquivariantGaugeField":
        """Поле с тривиальными данными спуска; требует `δa = 0`."""
        return cls(nerve, field, Cochain.zero(nerve.level(1), 0, "QZ"))

    def to_total_cocycle(self) -> "tuple[TotalComplex, Vector]":
        """
        ## Эквивариантный `dch`: тотальный коцикл степени 2 комплекса `DC•_2(Γ_•)`.

        `x_0 = dch(a)`, `x_1 = (c_2, h_2)` с `h_2 = −t̃`,
        `c_2 = dt̃ − δh_1`, `x_2 = (c_3)` с `c_3 = δh_2`.

        Returns:
            tuple[TotalComplex, Vector]: Тотальный комплекс и коцикл.
        """
        from .chern import equivariant_dch

        return equivariant_dch(self)


def parse_gauge_field(text: str, space: DeltaComplex, source: str | Path = "<gauge>") -> GaugeField:
    """
    ## Разбирает поле в формате `gauge`.

    Raises:
        ParseError: С номером строки; блок `descent` здесь недопустим.
    """
    values, descent, _ = _parse_blocks(text, source)
    if descent:
        raise ParseError(source, descent[0][0], "блок descent допустим только для эквивариантного поля")
    return _build_field(space, values, source)


def parse_equivariant_gauge(text: str, nerve: NerveLevels, source: str | Path = "<gauge>") -> EquivariantGaugeField:
    """Разбирает поле с блоком `descent` на нерве."""
    values, descent, descent_line = _parse_blocks(text, source)
    field = _build_field(nerve.level(0), values, source)
    mapping = {}
    for line_no, simplex_id, value in descent:
        if simplex_id not in nerve.level(1) or nerve.level(1).dim_of(simplex_id) != 0:
            raise ParseError(source, line_no, f"{simplex_id} не вершина Γ_1")
        mapping[simplex_id] = value
    try:
        return EquivariantGaugeField(nerve, field, Cochain.from_mapping(nerve.level(1), 0, "QZ", mapping))
    except AppError as err:
        raise ParseError(source, descent_line, str(err)) from err


def _parse_blocks(
    text: str, source: str | Path
) -> tuple[list[tuple[int, str, Fraction]], list[tuple[int, str, Fraction]], int]:
    values: list[tuple[int, str, Fraction]] = []
    descent: list[tuple[int, str, Fraction]] = []
    current: list[tuple[int, str, Fraction]] | None = None
    descent_line = 1
    for line_no, content in iter_content_lines(text):
        words = content.split()
        if words[0] == "space":
            continue
        if content == "gauge":
            current = values
            continue
        if content == "descent":
            current = descent
            descent_line = line_no
            continue
        if current is None:
            raise ParseError(source, line_no, "строка до заголовка 'gauge'")
        simplex_id, value = parse_assignment(content, source, line_no)
        current.append((line_no, simplex_id, value))
    return values, descent, descent_line


def _build_field(space: DeltaComplex, values: list[tuple[int, str, Fraction]], source: str | Path) -> GaugeField:
    mapping = {}
    for line_no, simplex_id, value in values:
        if simplex_id not in space or space.dim_of(simplex_id) != 1:
            raise ParseError(source, line_no, f"{simplex_id} не ребро комплекса")
        if not 0 <= value < 1:
            raise ParseError(source, line_no, f"значение {value} вне [0, 1)")
        mapping[simplex_id] = value
    return GaugeField.from_mapping(space, mapping)


# Экспортируемый интерфейс модуля
__all__ = [
    "GaugeField",
    "GaugeTransformation",
    "EquivariantGaugeField",
    "gauge_act",
    "holonomy",
    "parse_gauge_field",
    "parse_equivariant_gauge",
]
