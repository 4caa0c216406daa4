"""
## Стандартные Δ-комплексы для примеров и тестов.
"""

from __future__ import annotations

from typing import Callable

from ..exceptions import UnknownSpaceError
from .delta import DeltaComplex


def point() -> DeltaComplex:
    return DeltaComplex([("p", [])], name="point")


def two_points() -> DeltaComplex:
    return DeltaComplex([("p0", []), ("p1", [])], name="two_points")


def interval() -> DeltaComplex:
    return DeltaComplex([("v0", []), ("v1", []), ("e", ["v1", "v0"])], name="interval")


def circle_3() -> DeltaComplex:
    """
    ## Окружность из трёх вершин и трёх рёбер.

    Ребро `eij` идёт из `vi` в `vj`: `∂_0 eij = vj`, `∂_1 eij = vi`.
    """
    return DeltaComplex(
        [
            ("v0", []),
            ("v1", []),
            ("v2", []),
            ("e01", ["v1", "v0"]),
            ("e12", ["v2", "v1"]),
            ("e20", ["v0", "v2"]),
        ],
        name="circle_3",
    )


def two_circles() -> DeltaComplex:
    circle = circle_3()
    union = circle.disjoint_union(circle, prefixes=("L.", "R."))
    union.name = "two_circles"
    return union


def torus_min() -> DeltaComplex:
    """
    ## Минимальный тор: одна вершина, три ребра, два треугольника.

    Фундаментальный цикл равен `T1 − T2`.
    """
    return DeltaComplex(
        [
            ("v", []),
            ("a", ["v", "v"]),
            ("b", ["v", "v"]),
            ("c", ["v", "v"]),
            ("T1", ["b", "c", "a"]),
            ("T2", ["a", "c", "b"]),
        ],
        name="torus_min",
    )


def rp2_min() -> DeltaComplex:
    """
    ## Проективная плоскость: две вершины, три ребра, два треугольника.
    """
    return DeltaComplex(
        [
            ("v", []),
            ("w", []),
            ("a", ["w", "v"]),
            ("b", ["w", "v"]),
            ("c", ["v", "v"]),
            ("L", ["a", "b", "c"]),
            ("U", ["b", "a", "c"]),
        ],
        name="rp2_min",
    )


def sphere_octahedron() -> DeltaComplex:
    """
    ## Октаэдр с порядком вершин `N < a < b < c < d < S`.

    Фундаментальный цикл имеет коэффициенты
    `(1, 1, 1, −1, −1, −1, −1, 1)` на треугольниках в порядке объявления.
    """
    return DeltaComplex.from_ordered_simplices(
        [
            ("N", "a", "b"),
            ("N", "b", "c"),
            ("N", "c", "d"),
            ("N", "a", "d"),
            ("a", "b", "S"),
            ("b", "c", "S"),
            ("c", "d", "S"),
            ("a", "d", "S"),
        ],
        name="sphere_octahedron",
    )


def tetrahedron() -> DeltaComplex:
    """Полный 3-симплекс с вершинами `0 < 1 < 2 < 3`."""
    return DeltaComplex.from_ordered_simplices([("0", "1", "2", "3")], name="tetrahedron")


STANDARD_SPACES: dict[str, Callable[[], DeltaComplex]] = {
    "point": point,
    "two_points": two_points,
    "interval": interval,
    "circle_3": circle_3,
    "two_circles": two_circles,
    "torus_min": torus_min,
    "rp2_min": rp2_min,
    "sphere_octahedron": sphere_octahedron,
    "tetrahedron": tetrahedron,
}


def standard_space(name: str) -> DeltaComplex:
    """
    ## Возвращает стандартный комплекс по имени.

    Raises:
        UnknownSpaceError: Имя не входит в `STANDARD_SPACES`.
    """
    factory = STANDARD_SPACES.get(name)
    if factory is None:
        raise UnknownSpaceError(name)
    return factory()


# Экспортируемый интерфейс модуля
__all__ = [
    "STANDARD_SPACES",
    "standard_space",
]
