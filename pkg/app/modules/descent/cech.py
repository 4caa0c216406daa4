"""
## Чеховский нерв покрытия и двойной комплекс `C^p(U^{[q]})`.

Уровень `q` — несвязное объединение пересечений `U_{α_0} ∩ … ∩ U_{α_q}`
по всем наборам индексов; симплекс записывается как `α_0,…,α_q|σ`.
Грань `∂_i` выбрасывает индекс `α_i`. Аугментация `υ*: C^p(M) → C^p(U)`
забывает метку.
"""

from __future__ import annotations

from functools import cache
from itertools import product
from typing import Literal

from ..chaincat import FiniteComplex
from ..complex import DeltaComplex
from ..exactalg import RatMatrix
from ..exceptions import CoefficientRingError, CompositionNotZeroError, DegreeOverflowError, DepthExceededError
from ..logging import get_json_app_logger
from ..nerve import DoubleComplex, SimplicialLevels, SimplicialMap
from .cover import Cover


logger = get_json_app_logger(__name__)


class CechLevels(SimplicialLevels):
    """
    ## Усечённый чеховский нерв `U ⇇ U ×_M U …`.

    Attributes:
        cover (Cover): Покрытие.
        tuples (tuple[tuple[tuple[int, ...], ...], ...]): Наборы индексов
            каждого уровня, у которых пересечение непусто.
    """

    def __init__(self, cover: Cover, depth: int) -> None:
        if depth < 0:
            raise DepthExceededError(depth, 0)
        self.cover = cover
        base = cover.base
        levels: list[DeltaComplex] = []
        tuples: list[tuple[tuple[int, ...], ...]] = []
        for q in range(depth + 1):
            members = []
            simplices = []
            for t in product(range(cover.size), repeat=q + 1):
                inside = [s for s in base.all_simplices if all(s in cover.elements[a] for a in t)]
                if not inside:
                    continue
                members.append(t)
                simplices.extend((self.tag(t, s), [self.tag(t, f) for f in base.faces(s)]) for s in inside)
            tuples.append(tuple(members))
            levels.append(DeltaComplex(simplices, name=f"{base.name}[U{q}]"))
        self.tuples = tuple(tuples)
        faces: list[list[SimplicialMap]] = [[]]
        for q in range(1, depth + 1):
            faces.append(
                [
                    SimplicialMap(
                        levels[q],
                        levels[q - 1],
                        {
                            self.tag(t, s): self.tag(t[:i] + t[i + 1:], s)
                            for t in self.tuples[q]
                            for s in base.all_simplices
                            if self.tag(t, s) in levels[q]
                        },
                    )
                    for i in range(q + 1)
                ]
            )
        super().__init__(levels, faces)

    def tag(self, indices: tuple[int, ...], simplex_id: str) -> str:
        return ",".join(self.cover.names[a] for a in indices) + "|" + simplex_id


class CechDoubleComplex(DoubleComplex):
    """
    ## Двойной комплекс покрытия с аугментацией `υ*`.

    Attributes:
        cover (Cover): Покрытие.
        max_p (int): Последняя степень коцепей в столбцах.
    """

    def __init__(
        self,
        cover: Cover,
        max_q: int = 3,
        ring: Literal["Z", "Q"] = "Z",
        delta_sign: int = 1,
        max_p: int | None = None,
    ) -> None:
        if ring not in ("Z", "Q"):
            raise CoefficientRingError(ring, "чеховский комплекс строится над ℤ или ℚ")
        dimension = cover.base.dimension
        self.cover = cover
        self.max_p = dimension if max_p is None else max_p
        if not 0 <= self.max_p <= dimension:
            raise DegreeOverflowError(self.max_p, dimension)
        levels = CechLevels(cover, max_q)
        columns = [self._truncated(level, ring) for level in levels.levels]
        horizontals = {
            (q, p): levels.delta_matrix(q, p, delta_sign).to_rational()
            for q in range(levels.depth)
            for p in range(self.max_p + 1)
        }
        super().__init__(levels, ring, columns, horizontals, delta_sign=delta_sign)
        self._row = cache(self._build_row)
        for p in range(self.max_p + 1):
            if levels.depth and not (self.horizontal(0, p) @ self.upsilon(p)).is_zero():
                raise CompositionNotZeroError(p)
        logger.debug(
            "Чеховский комплекс построен",
            extra={
                "operation": "cech_complex",
                "details": {"space": cover.base.name, "elements": cover.size, "max_q": max_q, "sign": delta_sign},
            },
        )

    def _truncated(self, level: DeltaComplex, ring: str) -> FiniteComplex:
        return FiniteComplex(
            rings=tuple((ring,) * level.count(p) for p in range(self.max_p + 1)),  # type: ignore[misc]
            differentials=tuple(level.coboundary_matrix(p).to_rational() for p in range(self.max_p)),
        )

    @property
    def base_column(self) -> FiniteComplex:
        """Столбец аугментации `C•(M)`."""
        return self._truncated(self.cover.base, self.kind)

    def upsilon(self, p: int) -> RatMatrix:
        """`υ*: C^p(M) → C^p(U)`."""
        base = self.cover.base
        level = self.levels.level(0)
        rows = []
        for tagged in level.simplices(p):
            row = [0] * base.count(p)
            row[base.index_of(tagged.split("|", 1)[1])] = 1
            rows.append(row)
        return RatMatrix.from_rows(rows, base.count(p))

    def row_complex(self, p: int, ring: Literal["Z", "Q"] | None = None) -> FiniteComplex:
        """
        ## Аугментированная строка `C^p(M) → C^p(U) → C^p(U^{[1]}) → …`.

        Степень `0` строки — `C^p(M)`, степень `q + 1` — уровень `q`.
        `ring` позволяет взять строку над ℚ при нецелых весах `ρ`.
        """
        if not 0 <= p <= self.max_p:
            raise DegreeOverflowError(p, self.max_p)
        return self._row(p, ring or self.kind)

    def _build_row(self, p: int, ring: str) -> FiniteComplex:
        dims = [self.cover.base.count(p)] + [self.column(q).dim(p) for q in range(self.depth + 1)]
        differentials = [self.upsilon(p)] + [self.horizontal(q, p) for q in range(self.depth)]
        return FiniteComplex(
            rings=tuple((ring,) * n for n in dims),  # type: ignore[misc]
            differentials=tuple(differentials),
        )


def cech_complex(
    cover: Cover,
    max_p: int | None = None,
    max_q: int = 3,
    ring: Literal["Z", "Q"] = "Z",
    delta_sign: int = 1,
) -> CechDoubleComplex:
    """
    ## Строит двойной комплекс покрытия.

    Args:
        cover (Cover): Покрытие.
        max_p (int | None): Последняя степень коцепей; по умолчанию размерность `M`.
        max_q (int): Последний уровень нерва.
        ring (str): `Z` или `Q`.
        delta_sign (int): Знак перед `δ`; `−1` используется как отрицательный контроль.
    """
    return CechDoubleComplex(cover, max_q, ring, delta_sign, max_p)


# Экспортируемый интерфейс модуля
__all__ = [
    "CechLevels",
    "CechDoubleComplex",
    "cech_complex",
]
