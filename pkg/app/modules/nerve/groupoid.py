"""
## Нерв группоида действия `G ⋉ X`.

Уровень `q` — это `G^q × X`: непересекающиеся копии `X`, помеченные
наборами `(g_1, …, g_q)`. Симплекс копии записывается как
`g_1,…,g_q|σ`, уровень `0` совпадает с самим `X`.

Грани цепочки `x → g_1 x → g_2 g_1 x → …`:

- `∂_0(g_1 … g_q; σ) = (g_2 … g_q; g_1 σ)`;
- `∂_i` при `0 < i < q` склеивает `g_{i+1} g_i`;
- `∂_q` отбрасывает `g_q`.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from ..complex import Cochain, DeltaComplex
from ..exceptions import CoefficientRingError, DepthExceededError, DimensionMismatchError
from ..logging import get_json_app_logger
from .action import FinGroupAction
from .simplicial import SimplicialLevels, SimplicialMap


logger = get_json_app_logger(__name__)


def level_id(elements: tuple[int, ...], simplex_id: str) -> str:
    """Идентификатор симплекса `σ` в копии `(g_1, …, g_q)`."""
    if not elements:
        return simplex_id
    return ",".join(str(g) for g in elements) + "|" + simplex_id


class NerveLevels(SimplicialLevels):
    """
    ## Усечённый нерв группоида действия.

    Attributes:
        action (FinGroupAction): Действие, породившее нерв.
        tuples (tuple[tuple[tuple[int, ...], ...], ...]): Наборы элементов
            группы каждого уровня в порядке копий.
    """

    def __init__(self, action: FinGroupAction, depth: int) -> None:
        if depth < 0:
            raise DepthExceededError(depth, 0)
        self.action = action
        space = action.space
        self.tuples = tuple(tuple(product(action.elements, repeat=q)) for q in range(depth + 1))
        levels: list[DeltaComplex] = [space]
        for q in range(1, depth + 1):
            levels.append(
                DeltaComplex(
                    [
                        (level_id(t, s), [level_id(t, f) for f in space.faces(s)])
                        for t in self.tuples[q]
                        for s in space.all_simplices
                    ],
                    name=f"{space.name}[{q}]",
                )
            )
        faces: list[list[SimplicialMap]] = [[]]
        for q in range(1, depth + 1):
            faces.append(
                [
                    SimplicialMap(
                        levels[q],
                        levels[q - 1],
                        {
                            level_id(t, s): level_id(*self._face_of(t, s, i))
                            for t in self.tuples[q]
                            for s in space.all_simplices
                        },
                    )
                    for i in range(q + 1)
                ]
            )
        super().__init__(levels, faces)
        logger.debug(
            "Нерв построен",
            extra={
                "operation": "build_nerve",
                "details": {"space": space.name, "order": action.order, "depth": depth},
            },
        )

    def _face_of(self, elements: tuple[int, ...], simplex_id: str, i: int) -> tuple[tuple[int, ...], str]:
        q = len(elements)
        if i == 0:
            return elements[1:], self.action.act(elements[0], simplex_id)
        if i == q:
            return elements[:-1], simplex_id
        merged = self.action.mul(elements[i], elements[i - 1])
        return elements[:i - 1] + (merged,) + elements[i + 1:], simplex_id

    @property
    def group_order(self) -> int:
        return self.action.order

    def from_copies(self, q: int, degree: int, ring: str, values: dict[tuple[int, ...], dict[str, object]]) -> Cochain:
        """Собирает коцепь уровня `q` по значениям на копиях; пропуски — нули."""
        level = self.level(q)
        mapping = {
            level_id(t, s): v
            for t, per_copy in values.items()
            for s, v in per_copy.items()
        }
        return Cochain.from_mapping(level, degree, ring, mapping)  # type: ignore[arg-type]


def build_nerve(action: FinGroupAction, depth: int) -> NerveLevels:
    """
    ## Строит нерв `Γ_0 … Γ_depth` группоида действия.

    Args:
        action (FinGroupAction): Действие конечной группы.
        depth (int): Последний уровень `N ≥ 0`.

    Returns:
        NerveLevels: Уровни и грани; симплициальные тождества проверены.
    """
    return NerveLevels(action, depth)


def avg_contract(nerve: NerveLevels, f: Cochain) -> Cochain:
    """
    ## Стягивающая гомотопия усреднения по последней координате.

    `(hf)(g_1 … g_{q−1}; σ) = (−1)^q / |G| · Σ_g f(g_1 … g_{q−1}, g; σ)`,
    так что `δh + hδ = id` на столбцах `q ≥ 1`.

    Args:
        nerve (NerveLevels): Нерв.
        f (Cochain): ℚ-коцепь на уровне `q ≥ 1`.

    Raises:
        CoefficientRingError: Коэффициенты не ℚ.
        DimensionMismatchError: `f` задана на уровне `0`.
    """
    if f.ring != "Q":
        raise CoefficientRingError(f.ring, "усреднение требует деления на порядок группы")
    q = nerve.level_of(f)
    if q == 0:
        raise DimensionMismatchError("усреднение определено на уровнях q ≥ 1")
    order = nerve.group_order
    space = nerve.action.space
    sign = Fraction((-1) ** q, order)
    values = []
    for t in nerve.tuples[q - 1]:
        for s in space.simplices(f.degree):
            total = sum((f[level_id(t + (g,), s)] for g in range(order)), Fraction(0))
            values.append(sign * total)
    return Cochain(nerve.level(q - 1), f.degree, "Q", tuple(values))


# Экспортируемый интерфейс модуля
__all__ = [
    "NerveLevels",
    "build_nerve",
    "avg_contract",
    "level_id",
]
