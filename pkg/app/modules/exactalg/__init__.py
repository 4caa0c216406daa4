"""
## Точная линейная алгебра над ℤ и ℚ.

Нормальная форма Смита, рациональные, целочисленные и смешанные
линейные системы, представления абелевых групп и когомологий.
"""

from .matrices import IntMatrix, RatMatrix, Vector, as_fraction, as_vector
from .snf import SNFDecomposition, smith_normal_form, unimodular_inverse
from .solve import (
	MixedKernel,
	in_rational_span,
	integer_kernel,
	mixed_kernel,
	rational_nullspace,
	rational_rank,
	rational_rref,
	solve_integer,
	solve_mixed,
	solve_rational,
)
from .groups import (
	AbGroupPresentation,
	IntCochainComplex,
	cohomology_int,
	cohomology_of,
	cohomology_qz,
	cohomology_rational,
	mixed_quotient,
	normalize_torsion,
)


# Экспортируемый интерфейс модуля
__all__ = [
	"IntMatrix",
	"RatMatrix",
	"Vector",
	"as_fraction",
	"as_vector",
	"SNFDecomposition",
	"smith_normal_form",
	"unimodular_inverse",
	"MixedKernel",
	"in_rational_span",
	"integer_kernel",
	"mixed_kernel",
	"rational_nullspace",
	"rational_rank",
	"rational_rref",
	"solve_integer",
	"solve_mixed",
	"solve_rational",
	"AbGroupPresentation",
	"IntCochainComplex",
	"cohomology_int",
	"cohomology_of",
	"cohomology_qz",
	"cohomology_rational",
	"mixed_quotient",
	"normalize_torsion",
]
