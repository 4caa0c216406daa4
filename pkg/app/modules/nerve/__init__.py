"""
## Нервы конечных группоидов и эквивариантные когомологии.
"""

from .simplicial import SimplicialLevels, SimplicialMap, delta
from .action import FinGroupAction, cyclic_action, cyclic_group, parse_group_action, trivial_action
from .groupoid import NerveLevels, avg_contract, build_nerve, level_id
from .double import DoubleComplex, TotalComplex, total_cohomology, total_complex
from .equivariant import EquivariantCategory, EquivariantObject, H01Report, compare_h01


# Экспортируемый интерфейс модуля
__all__ = [
	"SimplicialLevels",
	"SimplicialMap",
	"delta",
	"FinGroupAction",
	"cyclic_group",
	"trivial_action",
	"cyclic_action",
	"parse_group_action",
	"NerveLevels",
	"build_nerve",
	"avg_contract",
	"level_id",
	"DoubleComplex",
	"TotalComplex",
	"total_complex",
	"total_cohomology",
	"EquivariantCategory",
	"EquivariantObject",
	"H01Report",
	"compare_h01",
]
