"""
## Пакет логгирования приложения.

Содержит реализации текстового логгера (`AppLogger`) и гибридного
`JSON`-логгера (`JsonAppLogger`) с дневной ротацией файлов, реестр
логгеров и чтение NDJSON-логов.
"""

from .config import configure_logging
from .text import AppLogger, get_app_logger
from .json import (
	DailyJsonRotatingFileHandler,
	JsonAppLogger,
	JsonLogEntry,
	JsonLogRecord,
	JsonLogReader,
	get_json_app_logger,
)
from .internal import LogLevels


# Экспортируемый интерфейс модуля
__all__ = [
	"AppLogger",
	"get_app_logger",
	"configure_logging",
	"DailyJsonRotatingFileHandler",
	"JsonLogEntry",
	"JsonAppLogger",
	"get_json_app_logger",
	"JsonLogRecord",
	"JsonLogReader",
	"LogLevels",
]
