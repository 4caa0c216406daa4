"""
## Классификация: отображение Черна, теорема Вейля, предквантование
и последовательность Костанта.
"""

from .gauge import (
	EquivariantGaugeField,
	GaugeField,
	GaugeTransformation,
	gauge_act,
	holonomy,
	parse_equivariant_gauge,
	parse_gauge_field,
)
from .chern import chern_morphism, chern_number, dch, equivariant_dch, gauge_morphism, nearest_int, preq
from .weil import equivariant_weil_lift, equivariant_weil_primitive, weil_injectivity_witness, weil_lift, weil_project
from .kostant import (
	BasicForms,
	KostantReport,
	closed_basic_integral_forms,
	kostant_eta,
	kostant_kernel_preimage,
	kostant_kernel_witness,
	kostant_sequence_check,
)


# Экспортируемый интерфейс модуля
__all__ = [
	"GaugeField",
	"GaugeTransformation",
	"EquivariantGaugeField",
	"gauge_act",
	"holonomy",
	"parse_gauge_field",
	"parse_equivariant_gauge",
	"nearest_int",
	"dch",
	"preq",
	"chern_morphism",
	"gauge_morphism",
	"chern_number",
	"equivariant_dch",
	"weil_project",
	"weil_lift",
	"weil_injectivity_witness",
	"equivariant_weil_lift",
	"equivariant_weil_primitive",
	"BasicForms",
	"KostantReport",
	"kostant_eta",
	"kostant_kernel_witness",
	"kostant_kernel_preimage",
	"closed_basic_integral_forms",
	"kostant_sequence_check",
]
