"""
## Цепные отображения, гомотопии и индуцированные функторы.

Цепное отображение `φ: A• → B•` индуцирует функтор
`H^n(φ): H^n(A•) → H^n(B•)`, гомотопия `k` между `f` и `g`
(`g − f = dk + kd`) — естественное преобразование с компонентами
`[k(z)]: f(z) → g(z)`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..exactalg import AbGroupPresentation, RatMatrix, Vector, as_vector, in_rational_span, mixed_kernel, solve_mixed
from ..exceptions import CoefficientRingError, DimensionMismatchError, NotAChainMapError, NotAHomotopyError
from ..logging import get_json_app_logger
from .category import CatMorphism, CatObject, ChainCategory
from .finite import FiniteComplex


logger = get_json_app_logger(__name__)


def _check_integral_block(
    source: FiniteComplex,
    source_degree: int,
    target: FiniteComplex,
    target_degree: int,
    matrix: RatMatrix,
    error: Exception,
) -> None:
    source_rings = source.rings[source_degree] if 0 <= source_degree <= source.top else ()
    for i in target.integral_indices(target_degree):
        for j, ring in enumerate(source_rings):
            entry = matrix[i, j]
            if (ring == "Q" and entry != 0) or entry.denominator != 1:
                raise error


class ChainMap:
    """
    ## Цепное отображение `A• → B•`.

    Attributes:
        source (FiniteComplex): Источник.
        target (FiniteComplex): Цель.
        components (tuple[RatMatrix, ...]): `φ^k: A^k → B^k`.
    """

    def __init__(self, source: FiniteComplex, target: FiniteComplex, components: Sequence[RatMatrix]) -> None:
        """
        ## Проверяет размеры, целочисленность и `dφ = φd`.

        Raises:
            NotAChainMapError: Отображение не коммутирует с дифференциалами
                или выводит ℚ-координаты в ℤ-координаты.
        """
        self.source = source
        self.target = target
        top = max(source.top, target.top)
        given = [c.to_rational() for c in components]
        resolved: list[RatMatrix] = []
        for k in range(top + 1):
            shape = (target.dim(k), source.dim(k))
            matrix = given[k] if k < len(given) else RatMatrix.zeros(*shape)
            if matrix.shape != shape:
                raise DimensionMismatchError(f"φ^{k} имеет размер {matrix.shape} вместо {shape}")
            _check_integral_block(source, k, target, k, matrix, NotAChainMapError(k))
            resolved.append(matrix)
        self.components: tuple[RatMatrix, ...] = tuple(resolved)
        for k in range(top):
            if target.d(k) @ self.component(k) != self.component(k + 1) @ source.d(k):
                raise NotAChainMapError(k)

    @classmethod
    def identity(cls, complex_: FiniteComplex) -> "ChainMap":
        return cls(complex_, complex_, [RatMatrix.identity(complex_.dim(k)) for k in range(complex_.top + 1)])

    @classmethod
    def zero(cls, source: FiniteComplex, target: FiniteComplex) -> "ChainMap":
        return cls(source, target, [])

    def component(self, k: int) -> RatMatrix:
        if 0 <= k < len(self.components):
            return self.components[k]
        return RatMatrix.zeros(self.target.dim(k), self.source.dim(k))

    def apply(self, k: int, vector: Sequence[object]) -> Vector:
        return self.component(k).apply(as_vector(vector))

    def compose(self, other: "ChainMap") -> "ChainMap":
        """Композиция `self ∘ other` (сначала `other`)."""
        if other.target is not self.source:
            raise DimensionMismatchError("цель первого отображения не совпадает с источником второго")
        top = max(other.source.top, self.target.top)
        return ChainMap(other.source, self.target, [self.component(k) @ other.component(k) for k in range(top + 1)])

    def _images(self, k: int, vectors: Sequence[Vector]) -> RatMatrix:
        return RatMatrix.from_columns([self.apply(k, v) for v in vectors], self.target.dim(k))

    def induced_injective(self, k: int) -> bool:
        """
        ## Инъективность `H^k(φ)`.

        Подгруппа `P = {z ∈ Z^k(A) : φ(z) ∈ B^k(B)}` описывается смешанной
        системой `φ(G u) − d y = 0`. Отображение инъективно, если целые
        образующие `P` — кограницы в `A`, а рациональные лежат в ℚ-оболочке
        рациональных кограниц (делимой части `B^k(A)`).
        """
        if k < 0:
            return True
        cycles = self.source.cocycle_generators(k)
        g_int = [v for v, _ in cycles.integral]
        g_rat = [v for v, _ in cycles.rational]
        d_int, d_rat = self.target.split(k - 1, self.target.d(k - 1))
        a = self._images(k, g_int).hstack(-d_int)
        b = self._images(k, g_rat).hstack(-d_rat)
        kernel = mixed_kernel(a, b)

        def cocycle(x_int: Vector, x_rat: Vector) -> Vector:
            total = [sum((c * g[i] for c, g in zip(x_int, g_int)), 0) for i in range(self.source.dim(k))]
            for c, g in zip(x_rat, g_rat):
                total = [t + c * g[i] for i, t in enumerate(total)]
            return as_vector(total)

        for x_int, x_rat in kernel.integral:
            if not self.source.is_coboundary(k, cocycle(x_int, x_rat)):
                return False
        _, rational_boundaries = self.source.boundary_generators(k)
        for x_int, x_rat in kernel.rational:
            if not in_rational_span(rational_boundaries, cocycle(x_int, x_rat)):
                return False
        return True

    def induced_surjective(self, k: int) -> bool:
        """
        ## Сюръективность `H^k(φ)`.

        Каждый целый образующий `Z^k(B)` должен лежать в `φ(Z^k(A)) + B^k(B)`,
        а каждый рациональный — в ℚ-оболочке рациональных образов.
        """
        if k < 0:
            return True
        source_cycles = self.source.cocycle_generators(k)
        target_cycles = self.target.cocycle_generators(k)
        g_int = [v for v, _ in source_cycles.integral]
        g_rat = [v for v, _ in source_cycles.rational]
        d_int, d_rat = self.target.split(k - 1, self.target.d(k - 1))
        a = self._images(k, g_int).hstack(d_int)
        b = self._images(k, g_rat).hstack(d_rat)
        for w, _ in target_cycles.integral:
            if solve_mixed(a, b, w) is None:
                return False
        rational_images = [tuple(b.column(j)) for j in range(b.cols)]
        for w, _ in target_cycles.rational:
            if not in_rational_span(rational_images, w):
                return False
        return True

    def induces_isomorphism(self, k: int) -> bool:
        return self.induced_injective(k) and self.induced_surjective(k)


class ChainHomotopy:
    """
    ## Гомотопия `k` между цепными отображениями `f, g: A• → B•`.

    Attributes:
        f (ChainMap): Первое отображение.
        g (ChainMap): Второе отображение.
        components (tuple[RatMatrix, ...]): `k^n: A^n → B^{n−1}`.
        valid_through (int): Старшая степень, в которой проверено
            `dk + kd = g − f`.
    """

    def __init__(
        self,
        f: ChainMap,
        g: ChainMap,
        components: Sequence[RatMatrix],
        valid_through: int | None = None,
    ) -> None:
        """
        Raises:
            NotAHomotopyError: Тождество `dk + kd = g − f` нарушено.
        """
        if f.source is not g.source or f.target is not g.target:
            raise DimensionMismatchError("гомотопия между отображениями разных комплексов")
        self.f, self.g = f, g
        source, target = f.source, f.target
        top = max(source.top, target.top)
        given = [c.to_rational() for c in components]
        resolved: list[RatMatrix] = []
        for n in range(top + 2):
            shape = (target.dim(n - 1), source.dim(n))
            matrix = given[n] if n < len(given) else RatMatrix.zeros(*shape)
            if matrix.shape != shape:
                raise DimensionMismatchError(f"k^{n} имеет размер {matrix.shape} вместо {shape}")
            _check_integral_block(source, n, target, n - 1, matrix, NotAHomotopyError(n))
            resolved.append(matrix)
        self.components: tuple[RatMatrix, ...] = tuple(resolved)
        self.valid_through = top if valid_through is None else valid_through
        for n in range(self.valid_through + 1):
            lhs = target.d(n - 1) @ self.component(n) + self.component(n + 1) @ source.d(n)
            if lhs != g.component(n) - f.component(n):
                raise NotAHomotopyError(n)

    def component(self, n: int) -> RatMatrix:
        if 0 <= n < len(self.components):
            return self.components[n]
        return RatMatrix.zeros(self.f.target.dim(n - 1), self.f.source.dim(n))

    def apply(self, n: int, vector: Sequence[object]) -> Vector:
        return self.component(n).apply(as_vector(vector))


class InducedFunctor:
    """
    ## Функтор `H^n(φ)` на объектах и морфизмах.
    """

    def __init__(self, chain_map: ChainMap, degree: int) -> None:
        self.chain_map = chain_map
        self.degree = degree
        self.source_category = ChainCategory(chain_map.source, degree)
        self.target_category = ChainCategory(chain_map.target, degree)

    def on_object(self, z: CatObject) -> CatObject:
        return CatObject(self.degree, self.chain_map.apply(self.degree, z.cocycle))

    def on_morphism(self, m: CatMorphism) -> CatMorphism:
        return CatMorphism(
            self.on_object(m.source),
            self.on_object(m.target),
            self.chain_map.apply(self.degree - 1, m.representative),
        )


class NaturalTransformation:
    """
    ## Естественное преобразование `H^n(k): H^n(f) ⇒ H^n(g)`.
    """

    def __init__(self, homotopy: ChainHomotopy, degree: int) -> None:
        if degree > homotopy.valid_through:
            raise NotAHomotopyError(degree)
        self.homotopy = homotopy
        self.degree = degree
        self.source_functor = InducedFunctor(homotopy.f, degree)
        self.target_functor = InducedFunctor(homotopy.g, degree)
        self.category = self.target_functor.target_category

    def component(self, z: CatObject) -> CatMorphism:
        """
        ## Компонента `[k(z)]: f(z) → g(z)`.

        Для коцикла `z` выполнено `d k(z) = g(z) − f(z) − k(dz) = g(z) − f(z)`.
        """
        return self.category.morphism(
            self.source_functor.on_object(z),
            self.target_functor.on_object(z),
            self.homotopy.apply(self.degree, z.cocycle),
        )

    def is_natural(self, m: CatMorphism) -> bool:
        """Проверяет коммутативность квадрата естественности для морфизма `m`."""
        upper = self.category.compose(self.source_functor.on_morphism(m), self.component(m.target))
        lower = self.category.compose(self.component(m.source), self.target_functor.on_morphism(m))
        return self.category.morphisms_equal(upper, lower)


def induced_functor(chain_map: ChainMap, degree: int) -> InducedFunctor:
    return InducedFunctor(chain_map, degree)


def induced_nat_trans(homotopy: ChainHomotopy, degree: int) -> NaturalTransformation:
    return NaturalTransformation(homotopy, degree)


@dataclass(frozen=True)
class EquivalenceReport:
    """
    ## Итог проверки эквивалентности `H^n(φ)`.

    Attributes:
        equivalent (bool): `H^n(φ)` и `H^{n−1}(φ)` биективны.
        degree (int): Степень `n`.
        source_groups (tuple[AbGroupPresentation, AbGroupPresentation]):
            `H^n(A)` и `H^{n−1}(A)`.
        target_groups (tuple[AbGroupPresentation, AbGroupPresentation]):
            `H^n(B)` и `H^{n−1}(B)`.
        bijective (tuple[bool, bool]): Биективность в степенях `n` и `n − 1`.
    """
    equivalent: bool
    degree: int
    source_groups: tuple[AbGroupPresentation, AbGroupPresentation]
    target_groups: tuple[AbGroupPresentation, AbGroupPresentation]
    bijective: tuple[bool, bool]


def is_equivalence(chain_map: ChainMap, degree: int) -> EquivalenceReport:
    """
    ## Проверяет, что `H^n(φ)` — эквивалентность категорий.

    Множества морфизмов — торсоры над `H^{n−1}`, поэтому функтор полон и
    строг ровно тогда, когда `H^{n−1}(φ)` биективно, а `H^n(φ)`
    инъективно; существенная сюръективность равносильна сюръективности
    `H^n(φ)`.
    """
    on_n = chain_map.induces_isomorphism(degree)
    on_prev = chain_map.induces_isomorphism(degree - 1)
    report = EquivalenceReport(
        equivalent=on_n and on_prev,
        degree=degree,
        source_groups=(chain_map.source.cohomology(degree), chain_map.source.cohomology(degree - 1)),
        target_groups=(chain_map.target.cohomology(degree), chain_map.target.cohomology(degree - 1)),
        bijective=(on_n, on_prev),
    )
    logger.info(
        "Проверка эквивалентности категорий",
        extra={
            "operation": "is_equivalence",
            "details": {"degree": degree, "equivalent": report.equivalent, "bijective": list(report.bijective)},
        },
    )
    return report


# Экспортируемый интерфейс модуля
__all__ = [
    "ChainMap",
    "ChainHomotopy",
    "InducedFunctor",
    "NaturalTransformation",
    "EquivalenceReport",
    "induced_functor",
    "induced_nat_trans",
    "is_equivalence",
]
