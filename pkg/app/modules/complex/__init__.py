"""
## Конечные Δ-комплексы и их коцепи.

Δ-комплексы с упорядоченными гранями, коцепи над ℤ, ℚ и ℚ/ℤ, цепи,
кограница и спаривание, согласованные базисы циклов, стандартные
пространства и текстовые форматы.
"""

from .delta import DeltaComplex
from .cochain import Chain, Cochain, reduce_mod_one
from .operations import boundary, coboundary, evaluate, is_cocycle, is_cycle
from .cycles import CycleBasis, cycle_basis, fundamental_cycle
from .spaces import STANDARD_SPACES, standard_space
from .textio import (
	format_rational,
	iter_content_lines,
	parse_assignment,
	parse_chain,
	parse_cochain,
	parse_complex,
	parse_rational,
	space_directive,
	write_chain,
	write_cochain,
	write_complex,
)


# Экспортируемый интерфейс модуля
__all__ = [
	"DeltaComplex",
	"Cochain",
	"Chain",
	"reduce_mod_one",
	"coboundary",
	"boundary",
	"evaluate",
	"is_cocycle",
	"is_cycle",
	"CycleBasis",
	"cycle_basis",
	"fundamental_cycle",
	"STANDARD_SPACES",
	"standard_space",
	"iter_content_lines",
	"parse_rational",
	"parse_assignment",
	"space_directive",
	"parse_complex",
	"parse_cochain",
	"parse_chain",
	"format_rational",
	"write_complex",
	"write_cochain",
	"write_chain",
]
