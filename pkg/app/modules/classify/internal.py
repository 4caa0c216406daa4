"""
## Вспомогательные операции над векторами слотов `DC`.
"""

from typing import Mapping, Sequence

from ..complex import DeltaComplex
from ..dccomplex import DCComplex
from ..exactalg import Vector, as_vector
from ..exceptions import DimensionMismatchError


def unpack_slots(dc: DCComplex, n: int, vector: Sequence[object]) -> dict[str, Vector]:
    """Разбивает вектор `DC^n` на слоты `c`, `h`, `omega`; отсутствующих слотов нет в словаре."""
    values = as_vector(vector)
    return {name: values[start:start + size] for name, start, size in dc.layout(n)}


def pack_slots(dc: DCComplex, n: int, slots: Mapping[str, Sequence[object]]) -> Vector:
    values: list = []
    for name, _, size in dc.layout(n):
        part = as_vector(slots.get(name, (0,) * size))
        if len(part) != size:
            raise DimensionMismatchError(f"слот {name} длины {len(part)} вместо {size}")
        values.extend(part)
    return tuple(values)


def add_vectors(*vectors: Sequence[object]) -> Vector:
    parts = [as_vector(v) for v in vectors]
    if len({len(v) for v in parts}) > 1:
        raise DimensionMismatchError("векторы разной длины")
    return tuple(sum(column) for column in zip(*parts))


def sub_vectors(x: Sequence[object], y: Sequence[object]) -> Vector:
    return add_vectors(x, tuple(-v for v in as_vector(y)))


def level_d(space: DeltaComplex, p: int, vector: Sequence[object]) -> Vector:
    """Кограница `d: C^p → C^{p+1}` в координатах."""
    return space.coboundary_matrix(p).apply(vector)


# Экспортируемый интерфейс модуля
__all__ = [
    "unpack_slots",
    "pack_slots",
    "add_vectors",
    "sub_vectors",
    "level_d",
]
