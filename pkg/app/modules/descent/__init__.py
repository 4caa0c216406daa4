"""
## Спуск по покрытиям подкомплексами.

Чеховские нервы покрытий, стягивающие гомотопии `ρ` строк и проверка
эквивалентности категорий `H¹` до и после сужения на покрытие.
"""

from .cover import Cover, PartitionOfUnity, parse_cover
from .cech import CechDoubleComplex, CechLevels, cech_complex
from .rho import RhoOperator, rho_partition, rho_section
from .equivalence import DescentReport, descent_equivalence_h1


# Экспортируемый интерфейс модуля
__all__ = [
	"Cover",
	"PartitionOfUnity",
	"parse_cover",
	"CechLevels",
	"CechDoubleComplex",
	"cech_complex",
	"RhoOperator",
	"rho_section",
	"rho_partition",
	"DescentReport",
	"descent_equivalence_h1",
]
