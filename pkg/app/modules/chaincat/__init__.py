"""
## Категории `H^n(A•)` комплексов.

Конечные смешанные комплексы, категории коциклов как разрешающие
процедуры, индуцированные функторы и естественные преобразования.
"""

from .finite import FiniteComplex
from .category import CatMorphism, CatObject, ChainCategory
from .maps import (
	ChainHomotopy,
	ChainMap,
	EquivalenceReport,
	InducedFunctor,
	NaturalTransformation,
	induced_functor,
	induced_nat_trans,
	is_equivalence,
)


# Экспортируемый интерфейс модуля
__all__ = [
	"FiniteComplex",
	"CatObject",
	"CatMorphism",
	"ChainCategory",
	"ChainMap",
	"ChainHomotopy",
	"InducedFunctor",
	"NaturalTransformation",
	"EquivalenceReport",
	"induced_functor",
	"induced_nat_trans",
	"is_equivalence",
]
