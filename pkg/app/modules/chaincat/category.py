"""
## Категория `H^n(A•)` комплекса как набор разрешающих процедур.

Объекты — `n`-коциклы, морфизмы `z → z'` — `(n−1)`-коцепи `b` с
`db = z' − z` по модулю кограниц `(n−2)`-коцепей. Композиция — сложение.
Категория никогда не материализуется: все вопросы о ней решаются
точными линейными системами.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..exactalg import AbGroupPresentation, Vector
from ..exceptions import CompositionMismatchError, DegreeOverflowError, NotACocycleError
from ..logging import get_json_app_logger
from .finite import FiniteComplex


logger = get_json_app_logger(__name__)


@dataclass(frozen=True)
class CatObject:
    """
    ## Объект категории: коцикл степени `degree`.
    """
    degree: int
    cocycle: Vector


@dataclass(frozen=True)
class CatMorphism:
    """
    ## Морфизм с выбранным представителем.

    Attributes:
        source (CatObject): Источник.
        target (CatObject): Цель.
        representative (Vector): Коцепь `b` степени `n − 1` с `db = target − source`.
    """
    source: CatObject
    target: CatObject
    representative: Vector


class ChainCategory:
    """
    ## Категория `H^n(A•)` комплекса `A•`.

    Attributes:
        complex (FiniteComplex): Комплекс.
        degree (int): Степень `n`.
    """

    def __init__(self, complex_: FiniteComplex, degree: int) -> None:
        if degree < 0 or degree > complex_.top + 1:
            raise DegreeOverflowError(degree, complex_.top + 1)
        self.complex = complex_
        self.degree = degree

    def object(self, cocycle: Sequence[object]) -> CatObject:
        """
        ## Проверяет коцикл и оборачивает его в объект.

        Raises:
            NotACocycleError: `dz ≠ 0`.
        """
        values = self.complex.check_cocycle(self.degree, cocycle)
        return CatObject(self.degree, values)

    def _check_object(self, z: CatObject) -> None:
        if z.degree != self.degree:
            raise NotACocycleError(f"объект степени {z.degree} в категории степени {self.degree}")

    def morphism(self, source: CatObject, target: CatObject, representative: Sequence[object]) -> CatMorphism:
        """
        ## Строит морфизм, проверяя `db = target − source`.
        """
        self._check_object(source)
        self._check_object(target)
        b = self.complex.check_element(self.degree - 1, representative)
        image = self.complex.apply_d(self.degree - 1, b)
        difference = tuple(t - s for t, s in zip(target.cocycle, source.cocycle))
        if image != difference:
            index = next(i for i, (x, y) in enumerate(zip(image, difference)) if x != y)
            raise NotACocycleError(f"db ≠ z' − z в координате {self.complex.label(self.degree, index)}")
        return CatMorphism(source, target, b)

    def identity(self, z: CatObject) -> CatMorphism:
        return CatMorphism(z, z, self.complex.zero(self.degree - 1))

    def hom_exists(self, source: CatObject, target: CatObject) -> CatMorphism | None:
        """
        ## Ищет морфизм `source → target`.

        Returns:
            CatMorphism | None: Морфизм, если коциклы когомологичны, иначе `None`.
        """
        self._check_object(source)
        self._check_object(target)
        difference = tuple(t - s for t, s in zip(target.cocycle, source.cocycle))
        b = self.complex.solve_primitive(self.degree, difference)
        logger.debug(
            "Поиск морфизма",
            extra={"operation": "hom_exists", "details": {"degree": self.degree, "found": b is not None}},
        )
        if b is None:
            return None
        return CatMorphism(source, target, b)

    def is_isomorphic(self, source: CatObject, target: CatObject) -> bool:
        return self.hom_exists(source, target) is not None

    def compose(self, f: CatMorphism, g: CatMorphism) -> CatMorphism:
        """
        ## Композиция `g ∘ f` (сначала `f`).

        Raises:
            CompositionMismatchError: `target(f) ≠ source(g)`.
        """
        if f.target != g.source:
            raise CompositionMismatchError()
        return CatMorphism(
            f.source,
            g.target,
            tuple(x + y for x, y in zip(f.representative, g.representative)),
        )

    def inverse(self, f: CatMorphism) -> CatMorphism:
        return CatMorphism(f.target, f.source, tuple(-x for x in f.representative))

    def morphisms_equal(self, f: CatMorphism, g: CatMorphism) -> bool:
        """
        ## Равенство морфизмов: одинаковые концы и `b_g − b_f ∈ d A^{n−2}`.
        """
        if f.source != g.source or f.target != g.target:
            return False
        difference = tuple(y - x for x, y in zip(f.representative, g.representative))
        return self.complex.is_coboundary(self.degree - 1, difference)

    def automorphisms(self, z: CatObject | None = None) -> AbGroupPresentation:
        """Группа автоморфизмов любого объекта равна `H^{n−1}(A•)`."""
        if z is not None:
            self._check_object(z)
        return self.complex.cohomology(self.degree - 1)

    def isomorphism_classes(self) -> AbGroupPresentation:
        """Множество классов изоморфизма объектов равно `H^n(A•)`."""
        return self.complex.cohomology(self.degree)

    def zero_object(self) -> CatObject:
        return CatObject(self.degree, self.complex.zero(self.degree))


# Экспортируемый интерфейс модуля
__all__ = [
    "CatObject",
    "CatMorphism",
    "ChainCategory",
]
