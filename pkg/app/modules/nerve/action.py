"""
## Действия конечных групп на Δ-комплексах.

Группа задаётся таблицей умножения на элементах `0 … n−1`, где `0` —
единица. Каждый элемент действует симплициальным автоморфизмом.

Текстовый формат:

```
space circle_3
group 2
mul 1 1 = 0
act 1 v0 = v0
act 1 v1 = v2
```

Строки `mul` задают произведение `g·h`. Без строк `mul` группа — `ℤ/n`;
иначе произведения с единицей достраиваются, остальные обязательны.
Строки `act g σ = τ` перечисляют нетождественные образы; симплексы без
строки неподвижны.
"""

from __future__ import annotations

from itertools import product
from pathlib import Path
from typing import Mapping, Sequence

from ..complex import DeltaComplex, iter_content_lines
from ..exceptions import InvalidActionError, ParseError
from ..logging import get_json_app_logger


logger = get_json_app_logger(__name__)


def cyclic_group(order: int) -> tuple[tuple[int, ...], ...]:
    """Таблица умножения `ℤ/order`."""
    if order < 1:
        raise InvalidActionError(f"порядок группы {order} должен быть положителен")
    return tuple(tuple((g + h) % order for h in range(order)) for g in range(order))


class FinGroupAction:
    """
    ## Действие конечной группы `G` на Δ-комплексе `X`.

    Attributes:
        space (DeltaComplex): Комплекс `X`.
        table (tuple[tuple[int, ...], ...]): `table[g][h] = g·h`.
        permutations (tuple[dict[str, str], ...]): Действие каждого элемента.
    """

    def __init__(
        self,
        space: DeltaComplex,
        table: Sequence[Sequence[int]],
        permutations: Sequence[Mapping[str, str]],
    ) -> None:
        self.space = space
        self.table = tuple(tuple(row) for row in table)
        self.permutations = tuple(
            {s: dict(p).get(s, s) for s in space.all_simplices} for p in permutations
        )
        self._check_group()
        self._check_action()
        self._inverses = tuple(
            next(h for h in range(self.order) if self.table[g][h] == 0) for g in range(self.order)
        )
        logger.debug(
            "Действие группы построено",
            extra={"operation": "group_action", "details": {"space": space.name, "order": self.order}},
        )

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def inverse(self, g: int) -> int:
        return self._inverses[g]

    def act(self, g: int, simplex_id: str) -> str:
        return self.permutations[g][simplex_id]

    def _check_group(self) -> None:
        n = self.order
        if n < 1:
            raise InvalidActionError("пустая группа")
        for g, row in enumerate(self.table):
            if len(row) != n or any(not 0 <= x < n for x in row):
                raise InvalidActionError(f"строка {g} таблицы умножения некорректна")
            if row[0] != g or self.table[0][g] != g:
                raise InvalidActionError(f"0 не является единицей для элемента {g}")
            if sorted(row) != list(range(n)):
                raise InvalidActionError(f"строка {g} таблицы не перестановка")
        for g, h, k in product(range(n), repeat=3):
            if self.table[self.table[g][h]][k] != self.table[g][self.table[h][k]]:
                raise InvalidActionError(f"нарушена ассоциативность на ({g}, {h}, {k})")

    def _check_action(self) -> None:
        space = self.space
        if len(self.permutations) != self.order:
            raise InvalidActionError(f"задано {len(self.permutations)} перестановок для группы порядка {self.order}")
        for g, perm in enumerate(self.permutations):
            if sorted(perm.values()) != sorted(space.all_simplices):
                raise InvalidActionError(f"элемент {g} действует не биекцией")
            for simplex_id, image in perm.items():
                if image not in space or space.dim_of(image) != space.dim_of(simplex_id):
                    raise InvalidActionError(f"элемент {g} переводит {simplex_id} в {image} другой размерности")
                if tuple(perm[f] for f in space.faces(simplex_id)) != space.faces(image):
                    raise InvalidActionError(f"элемент {g} не коммутирует с гранями {simplex_id}")
        if any(image != s for s, image in self.permutations[0].items()):
            raise InvalidActionError("единица действует нетождественно")
        for g, h in product(range(self.order), repeat=2):
            gh = self.table[g][h]
            for simplex_id in space.all_simplices:
                if self.act(g, self.act(h, simplex_id)) != self.act(gh, simplex_id):
                    raise InvalidActionError(f"g·(h·σ) ≠ (gh)·σ для g={g}, h={h}, σ={simplex_id}")


def trivial_action(space: DeltaComplex, order: int = 1) -> FinGroupAction:
    """Тривиальное действие `ℤ/order`."""
    return FinGroupAction(space, cyclic_group(order), [{} for _ in range(order)])


def cyclic_action(space: DeltaComplex, generator: Mapping[str, str], order: int) -> FinGroupAction:
    """
    ## Действие `ℤ/order`, порождённое автоморфизмом `generator`.

    Элемент `k` действует `k`-й степенью образующей.

    Raises:
        InvalidActionError: Порядок образующей не делит `order`.
    """
    base = {s: generator.get(s, s) for s in space.all_simplices}
    powers: list[dict[str, str]] = [{s: s for s in space.all_simplices}]
    for _ in range(1, order):
        previous = powers[-1]
        powers.append({s: base[previous[s]] for s in space.all_simplices})
    if any(base[powers[-1][s]] != s for s in space.all_simplices):
        raise InvalidActionError(f"образующая не имеет порядка, делящего {order}")
    return FinGroupAction(space, cyclic_group(order), powers)


def parse_group_action(text: str, space: DeltaComplex, source: str | Path = "<group>") -> FinGroupAction:
    """
    ## Разбирает файл действия группы.

    Raises:
        ParseError: Синтаксическая ошибка с номером строки.
        InvalidActionError: Таблица или действие нарушают аксиомы.
    """
    order: int | None = None
    products: dict[tuple[int, int], int] = {}
    images: dict[int, dict[str, str]] = {}
    for line_no, content in iter_content_lines(text):
        words = content.split()
        if words[0] == "space":
            continue
        if words[0] == "group":
            if len(words) != 2 or not words[1].isdigit() or int(words[1]) < 1:
                raise ParseError(source, line_no, "ожидалось 'group <порядок>'")
            order = int(words[1])
            continue
        if order is None:
            raise ParseError(source, line_no, "строка до заголовка 'group'")
        if words[0] == "mul":
            if len(words) != 5 or words[3] != "=" or not all(w.isdigit() for w in (words[1], words[2], words[4])):
                raise ParseError(source, line_no, "ожидалось 'mul <g> <h> = <k>'")
            g, h, k = int(words[1]), int(words[2]), int(words[4])
            if max(g, h, k) >= order:
                raise ParseError(source, line_no, f"элемент вне группы порядка {order}")
            products[(g, h)] = k
        elif words[0] == "act":
            if len(words) != 5 or words[3] != "=" or not words[1].isdigit():
                raise ParseError(source, line_no, "ожидалось 'act <g> <σ> = <τ>'")
            g = int(words[1])
            if g >= order:
                raise ParseError(source, line_no, f"элемент {g} вне группы порядка {order}")
            if words[2] not in space or words[4] not in space:
                raise ParseError(source, line_no, f"неизвестный симплекс в '{content}'")
            images.setdefault(g, {})[words[2]] = words[4]
        else:
            raise ParseError(source, line_no, f"неизвестная директива '{words[0]}'")
    if order is None:
        raise ParseError(source, 1, "нет заголовка 'group'")
    table = [list(row) for row in cyclic_group(order)]
    if products:
        table = [[g if h == 0 else h if g == 0 else -1 for h in range(order)] for g in range(order)]
        for (g, h), k in products.items():
            table[g][h] = k
        if any(x < 0 for row in table for x in row):
            raise InvalidActionError("таблица умножения задана не полностью")
    return FinGroupAction(space, table, [images.get(g, {}) for g in range(order)])


# Экспортируемый интерфейс модуля
__all__ = [
    "FinGroupAction",
    "cyclic_group",
    "trivial_action",
    "cyclic_action",
    "parse_group_action",
]
