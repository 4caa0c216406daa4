"""
## Командная строка `diffchar`.
"""

from .report import Report, sha256_of
from .inputs import InputLoader
from .commands import COMMANDS
from .app import build_parser, main, run


# Экспортируемый интерфейс модуля
__all__ = [
	"Report",
	"sha256_of",
	"InputLoader",
	"COMMANDS",
	"build_parser",
	"run",
	"main",
]
