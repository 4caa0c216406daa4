"""
## Комплекс `DC•_s` и дифференциальные характеры.
"""

from .omega import OmegaModel
from .dc import DCCategory, DCComplex, DCTriple, dc_cocycles_h2, dc_diff
from .character import DiffCharacter, character_check, characters_equal, holonomy, to_character
from .textio import parse_dc_triple, write_dc_triple


# Экспортируемый интерфейс модуля
__all__ = [
	"OmegaModel",
	"DCTriple",
	"DCComplex",
	"DCCategory",
	"dc_cocycles_h2",
	"dc_diff",
	"DiffCharacter",
	"to_character",
	"character_check",
	"characters_equal",
	"holonomy",
	"parse_dc_triple",
	"write_dc_triple",
]
