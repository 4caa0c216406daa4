"""
## Покрытия Δ-комплекса подкомплексами и разбиения единицы.

Текстовый формат:

```
space circle_3
element A : e01 e12
element B : e20
tau v0 = A
weight v0 A = 1/2
weight v0 B = 1/2
```

Элементы замыкаются по граням. Сечение `τ` по умолчанию выбирает первый
по порядку объявления элемент, содержащий симплекс.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from ..complex import DeltaComplex, iter_content_lines, parse_rational
from ..exceptions import AppError, InvalidComplexError, InvalidCoverError, ParseError, WeightSupportError
from ..logging import get_json_app_logger


logger = get_json_app_logger(__name__)


class Cover:
    """
    ## Покрытие `U = ⊔ U_α → M` подкомплексами.

    Attributes:
        base (DeltaComplex): Покрываемый комплекс `M`.
        names (tuple[str, ...]): Имена элементов в порядке объявления.
        elements (tuple[frozenset[str], ...]): Замкнутые по граням наборы симплексов.
        tau (dict[str, int]): Сечение `τ`: номер элемента для каждого симплекса.
    """

    def __init__(
        self,
        base: DeltaComplex,
        elements: Sequence[tuple[str, Iterable[str]]],
        tau: Mapping[str, str] | None = None,
    ) -> None:
        if not elements:
            raise InvalidCoverError("покрытие без элементов")
        self.base = base
        self.names = tuple(name for name, _ in elements)
        if len(set(self.names)) != len(self.names):
            raise InvalidCoverError("имена элементов повторяются")
        for name in self.names:
            if not name or "," in name or "|" in name:
                raise InvalidCoverError(f"недопустимое имя элемента '{name}'")
        try:
            self.elements = tuple(base.closure(ids) for _, ids in elements)
        except InvalidComplexError as err:
            raise InvalidCoverError("элемент содержит неизвестный симплекс", err.simplex) from err
        for simplex_id in base.all_simplices:
            if not self.containing(simplex_id):
                raise InvalidCoverError("симплекс не покрыт", simplex_id)
        self.tau: dict[str, int] = {}
        chosen = dict(tau or {})
        for simplex_id, name in chosen.items():
            if simplex_id not in base:
                raise InvalidCoverError("τ задано на неизвестном симплексе", simplex_id)
            if name not in self.names:
                raise InvalidCoverError(f"τ указывает на неизвестный элемент {name}", simplex_id)
            if simplex_id not in self.elements[self.names.index(name)]:
                raise InvalidCoverError(f"элемент {name} не содержит симплекс", simplex_id)
        for simplex_id in base.all_simplices:
            name = chosen.get(simplex_id)
            self.tau[simplex_id] = self.names.index(name) if name else self.containing(simplex_id)[0]
        logger.debug(
            "Покрытие построено",
            extra={"operation": "cover", "details": {"space": base.name, "elements": list(self.names)}},
        )

    @classmethod
    def from_elements(cls, base: DeltaComplex, elements: Mapping[str, Iterable[str]]) -> "Cover":
        """Покрытие со стандартным сечением `τ`."""
        return cls(base, list(elements.items()))

    @property
    def size(self) -> int:
        return len(self.elements)

    def containing(self, simplex_id: str) -> tuple[int, ...]:
        """Номера элементов, содержащих симплекс."""
        return tuple(i for i, element in enumerate(self.elements) if simplex_id in element)

    def section(self, simplex_id: str) -> int:
        return self.tau[simplex_id]


class PartitionOfUnity:
    """
    ## Разбиение единицы на вершинах, подчинённое покрытию.

    Веса вершины неотрицательны, сосредоточены на элементах, содержащих
    вершину, и в сумме дают 1. Вес симплекса берётся по первой вершине
    среди элементов, содержащих симплекс, с перенормировкой; при нулевой
    сумме используется индикатор `τ(σ)`.
    """

    def __init__(self, cover: Cover, weights: Mapping[tuple[str, int], object]) -> None:
        self.cover = cover
        self.weights: dict[tuple[str, int], Fraction] = {}
        for (vertex, alpha), raw in weights.items():
            value = Fraction(raw)  # type: ignore[arg-type]
            if value == 0:
                continue
            if value < 0:
                raise WeightSupportError(vertex, f"отрицательный вес {value}")
            if vertex not in cover.elements[alpha]:
                raise WeightSupportError(vertex, f"вес на элементе {cover.names[alpha]}, не содержащем вершину")
            self.weights[(vertex, alpha)] = value
        for vertex in cover.base.simplices(0):
            total = sum((self.weights.get((vertex, a), Fraction(0)) for a in range(cover.size)), Fraction(0))
            if total != 1:
                raise WeightSupportError(vertex, f"сумма весов {total} вместо 1")

    @classmethod
    def from_section(cls, cover: Cover) -> "PartitionOfUnity":
        """Индикатор `τ(v)` в каждой вершине."""
        return cls(cover, {(v, cover.section(v)): 1 for v in cover.base.simplices(0)})

    @classmethod
    def uniform(cls, cover: Cover) -> "PartitionOfUnity":
        weights = {}
        for v in cover.base.simplices(0):
            containing = cover.containing(v)
            for alpha in containing:
                weights[(v, alpha)] = Fraction(1, len(containing))
        return cls(cover, weights)

    def weight(self, vertex: str, alpha: int) -> Fraction:
        return self.weights.get((vertex, alpha), Fraction(0))

    def simplex_weights(self, simplex_id: str) -> dict[int, Fraction]:
        """Веса `η_α(σ)` по элементам, содержащим `σ`."""
        first = self.cover.base.vertices(simplex_id)[0]
        containing = self.cover.containing(simplex_id)
        total = sum((self.weight(first, a) for a in containing), Fraction(0))
        if total == 0:
            return {self.cover.section(simplex_id): Fraction(1)}
        return {a: self.weight(first, a) / total for a in containing if self.weight(first, a)}


def parse_cover(
    text: str, base: DeltaComplex, source: str | Path = "<cover>"
) -> tuple[Cover, PartitionOfUnity | None]:
    """
    ## Разбирает покрытие и, если заданы строки `weight`, разбиение единицы.

    Raises:
        ParseError: С номером строки.
    """
    elements: list[tuple[str, list[str]]] = []
    tau: dict[str, str] = {}
    tau_lines: dict[str, int] = {}
    weights: list[tuple[int, str, str, Fraction]] = []
    first_line = 1
    for line_no, content in iter_content_lines(text):
        words = content.split()
        keyword = words[0]
        if keyword == "space":
            continue
        if keyword == "element":
            if len(words) < 3 or words[2] != ":":
                raise ParseError(source, line_no, "ожидалось 'element <имя> : <симплексы>'")
            if not elements:
                first_line = line_no
            elements.append((words[1], words[3:]))
        elif keyword == "tau":
            if len(words) != 4 or words[2] != "=":
                raise ParseError(source, line_no, "ожидалось 'tau <симплекс> = <элемент>'")
            tau[words[1]] = words[3]
            tau_lines[words[1]] = line_no
        elif keyword == "weight":
            if len(words) != 5 or words[3] != "=":
                raise ParseError(source, line_no, "ожидалось 'weight <вершина> <элемент> = <число>'")
            weights.append((line_no, words[1], words[2], parse_rational(words[4], source, line_no)))
        else:
            raise ParseError(source, line_no, f"неизвестная директива '{keyword}'")
    try:
        cover = Cover(base, elements, tau)
    except InvalidCoverError as err:
        line_no = tau_lines.get(err.simplex, first_line) if err.simplex else first_line
        raise ParseError(source, line_no, str(err)) from err
    if not weights:
        return cover, None
    mapping: dict[tuple[str, int], Fraction] = {}
    for line_no, vertex, name, value in weights:
        if name not in cover.names:
            raise ParseError(source, line_no, f"неизвестный элемент {name}")
        if vertex not in base or base.dim_of(vertex) != 0:
            raise ParseError(source, line_no, f"{vertex} не вершина комплекса")
        mapping[(vertex, cover.names.index(name))] = value
    try:
        return cover, PartitionOfUnity(cover, mapping)
    except AppError as err:
        raise ParseError(source, weights[0][0], str(err)) from err


# Экспортируемый интерфейс модуля
__all__ = [
    "Cover",
    "PartitionOfUnity",
    "parse_cover",
]
