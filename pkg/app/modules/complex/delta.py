"""
## Конечные Δ-комплексы с упорядоченными гранями.

Симплекс размерности `n ≥ 1` задаётся упорядоченным списком `n + 1`
граней; `i`-я грань — это `∂_i σ`. Граница `∂σ = Σ (−1)^i ∂_i σ`.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Mapping, Sequence

from ..exactalg import IntCochainComplex, IntMatrix
from ..exceptions import InvalidComplexError
from ..logging import get_json_app_logger


logger = get_json_app_logger(__name__)


class DeltaComplex:
    """
    ## Конечный Δ-комплекс (полусимплициальное множество).

    Симплексы каждой размерности хранятся в порядке объявления, и этот
    порядок задаёт базис коцепей. Объект неизменяем после построения.

    Attributes:
        name (str): Имя комплекса для отчётов.
    """

    def __init__(self, simplices: Iterable[tuple[str, Sequence[str]]], name: str = "") -> None:
        """
        ## Строит комплекс и проверяет его инварианты.

        Args:
            simplices (Iterable[tuple[str, Sequence[str]]]): Пары
                `(id, грани)`; пустой список граней означает вершину.
            name (str): Имя комплекса.

        Raises:
            InvalidComplexError: Повтор идентификатора, неизвестная грань,
                грань неверной размерности или нарушение симплициальных тождеств.
        """
        self.name = name
        declared: list[tuple[str, tuple[str, ...]]] = []
        seen: set[str] = set()
        for simplex_id, faces in simplices:
            if not simplex_id or any(ch.isspace() for ch in simplex_id):
                raise InvalidComplexError("недопустимый идентификатор", simplex_id)
            if simplex_id in seen:
                raise InvalidComplexError("повторное объявление", simplex_id)
            seen.add(simplex_id)
            declared.append((simplex_id, tuple(faces)))

        self._faces: dict[str, tuple[str, ...]] = {}
        self._dims: dict[str, int] = {}
        for simplex_id, faces in declared:
            self._faces[simplex_id] = faces
            self._dims[simplex_id] = max(len(faces) - 1, 0)
            if len(faces) == 1:
                raise InvalidComplexError("у 0-симплекса не бывает граней", simplex_id)

        top = max(self._dims.values(), default=-1)
        levels: list[list[str]] = [[] for _ in range(top + 1)]
        for simplex_id, _ in declared:
            levels[self._dims[simplex_id]].append(simplex_id)
        self._levels: tuple[tuple[str, ...], ...] = tuple(tuple(level) for level in levels)
        self._index: dict[str, int] = {
            simplex_id: position
            for level in self._levels
            for position, simplex_id in enumerate(level)
        }
        self._validate()
        logger.debug(
            "Δ-комплекс построен",
            extra={"operation": "delta_complex", "details": {"name": name, "counts": [len(level) for level in self._levels]}},
        )

    def _validate(self) -> None:
        for simplex_id, faces in self._faces.items():
            n = self._dims[simplex_id]
            for face in faces:
                if face not in self._faces:
                    raise InvalidComplexError(f"неизвестная грань {face}", simplex_id)
                if self._dims[face] != n - 1:
                    raise InvalidComplexError(f"грань {face} имеет размерность {self._dims[face]}", simplex_id)
            if n >= 2:
                for j in range(n + 1):
                    for i in range(j):
                        left = self.face(self.face(simplex_id, j), i)
                        right = self.face(self.face(simplex_id, i), j - 1)
                        if left != right:
                            raise InvalidComplexError(
                                f"∂_{i}∂_{j} = {left}, но ∂_{j - 1}∂_{i} = {right}", simplex_id
                            )

    @classmethod
    def from_ordered_simplices(
        cls,
        simplices: Iterable[Sequence[str]],
        name: str = "",
        separator: str = "",
    ) -> "DeltaComplex":
        """
        ## Строит Δ-комплекс из упорядоченного симплициального комплекса.

        Каждый симплекс задаётся списком вершин в возрастающем порядке;
        все грани добавляются автоматически, `∂_i` удаляет `i`-ю вершину.
        Идентификатор симплекса — склейка имён вершин через `separator`.

        Args:
            simplices (Iterable[Sequence[str]]): Максимальные симплексы.
            name (str): Имя комплекса.
            separator (str): Разделитель имён вершин в идентификаторах.
        """
        closure: set[tuple[str, ...]] = set()
        order: list[tuple[str, ...]] = []

        def visit(vertices: tuple[str, ...]) -> None:
            if vertices in closure:
                return
            for i in reversed(range(len(vertices) if len(vertices) > 1 else 0)):
                visit(vertices[:i] + vertices[i + 1:])
            closure.add(vertices)
            order.append(vertices)

        for simplex in simplices:
            visit(tuple(simplex))

        order.sort(key=len)
        ids = {vertices: separator.join(vertices) for vertices in order}
        return cls(
            [
                (ids[vertices], [ids[vertices[:i] + vertices[i + 1:]] for i in range(len(vertices))] if len(vertices) > 1 else [])
                for vertices in order
            ],
            name=name,
        )

    @property
    def dimension(self) -> int:
        return len(self._levels) - 1

    def simplices(self, n: int) -> tuple[str, ...]:
        return self._levels[n] if 0 <= n < len(self._levels) else ()

    def count(self, n: int) -> int:
        return len(self.simplices(n))

    @property
    def all_simplices(self) -> tuple[str, ...]:
        return tuple(s for level in self._levels for s in level)

    def __contains__(self, simplex_id: object) -> bool:
        return simplex_id in self._faces

    def dim_of(self, simplex_id: str) -> int:
        return self._dims[simplex_id]

    def index_of(self, simplex_id: str) -> int:
        return self._index[simplex_id]

    def faces(self, simplex_id: str) -> tuple[str, ...]:
        return self._faces[simplex_id]

    def face(self, simplex_id: str, i: int) -> str:
        return self._faces[simplex_id][i]

    def vertices(self, simplex_id: str) -> tuple[str, ...]:
        """
        ## Упорядоченные вершины симплекса.

        Вершина `i` получается как `∂_1^{n−i} ∂_0^i σ`.
        """
        n = self._dims[simplex_id]
        result = []
        for i in range(n + 1):
            current = simplex_id
            for _ in range(i):
                current = self.face(current, 0)
            for _ in range(n - i):
                current = self.face(current, 1)
            result.append(current)
        return tuple(result)

    def euler_characteristic(self) -> int:
        return sum((-1) ** n * self.count(n) for n in range(self.dimension + 1))

    def boundary_matrix(self, n: int) -> IntMatrix:
        """
        ## Матрица `∂_n: C_n → C_{n−1}` (строки — (n−1)-симплексы).
        """
        rows, cols = self.count(n - 1), self.count(n)
        entries = [[0] * cols for _ in range(rows)]
        if n >= 1:
            for j, simplex_id in enumerate(self.simplices(n)):
                for i, face in enumerate(self._faces[simplex_id]):
                    entries[self._index[face]][j] += (-1) ** i
        return IntMatrix.from_rows(entries, cols)

    def coboundary_matrix(self, n: int) -> IntMatrix:
        """Матрица `d^n: C^n → C^{n+1}`, транспонированная к `∂_{n+1}`."""
        return self.boundary_matrix(n + 1).transpose()

    @cached_property
    def cochain_complex(self) -> IntCochainComplex:
        dims = tuple(self.count(n) for n in range(self.dimension + 1))
        return IntCochainComplex(
            dims=dims,
            differentials=tuple(self.coboundary_matrix(n) for n in range(self.dimension)),
        )

    def closure(self, simplex_ids: Iterable[str]) -> frozenset[str]:
        """Замыкание множества симплексов относительно взятия граней."""
        result: set[str] = set()
        stack = list(simplex_ids)
        while stack:
            current = stack.pop()
            if current not in self._faces:
                raise InvalidComplexError("неизвестный симплекс", current)
            if current in result:
                continue
            result.add(current)
            stack.extend(self._faces[current])
        return frozenset(result)

    def subcomplex(self, simplex_ids: Iterable[str], name: str = "") -> "DeltaComplex":
        keep = self.closure(simplex_ids)
        return DeltaComplex(
            [(s, self._faces[s]) for s in self.all_simplices if s in keep],
            name=name or self.name,
        )

    def relabel(self, mapping: Mapping[str, str], name: str = "") -> "DeltaComplex":
        return DeltaComplex(
            [(mapping[s], [mapping[f] for f in self._faces[s]]) for s in self.all_simplices],
            name=name or self.name,
        )

    def disjoint_union(self, other: "DeltaComplex", prefixes: tuple[str, str] = ("L.", "R.")) -> "DeltaComplex":
        """
        ## Несвязное объединение с префиксами идентификаторов.
        """
        left, right = prefixes
        simplices = [(left + s, [left + f for f in self._faces[s]]) for s in self.all_simplices]
        simplices += [(right + s, [right + f for f in other._faces[s]]) for s in other.all_simplices]
        return DeltaComplex(simplices, name=f"{self.name}+{other.name}")

    def components(self) -> int:
        """Число компонент связности (по рёбрам)."""
        parent = {v: v for v in self.simplices(0)}

        def find(v: str) -> str:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for edge in self.simplices(1):
            a, b = (find(v) for v in self._faces[edge])
            parent[a] = b
        return len({find(v) for v in parent})

    def __repr__(self) -> str:
        counts = ", ".join(str(self.count(n)) for n in range(self.dimension + 1))
        return f"DeltaComplex({self.name!r}, counts=[{counts}])"


# Экспортируемый интерфейс модуля
__all__ = [
    "DeltaComplex",
]
