"""
## Реестр логгеров и общие настройки логирования.

Фабрики `get_app_logger` и `get_json_app_logger` кешируют логгеры по
имени, а `configure_logging` перенастраивает уже созданные логгеры
(уровень, каталог логов, вывод в консоль).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from logging import Logger
from pathlib import Path
from typing import Callable

from .internal import LEVELS_MAP, LogLevels


# Функция, навешивающая обработчики на логгер: (logger, level, log_dir, to_console)
AttachHandlers = Callable[[Logger, int, Path, bool], None]


@dataclass
class LoggingDefaults:
    """
    ## Значения по умолчанию для новых логгеров.

    Attributes:
        level (LogLevels): Уровень логирования.
        log_dir (Path): Корневой каталог логов.
        to_console (bool): Выводить ли логи в консоль.
    """
    level: LogLevels = "INFO"
    log_dir: Path = field(default_factory=lambda: Path("logs"))
    to_console: bool = False


defaults = LoggingDefaults()

_registry: dict[tuple[str, str], tuple[Logger, AttachHandlers]] = {}


def lookup(kind: str, name: str) -> Logger | None:
    """Возвращает ранее созданный логгер вида `kind` или `None`."""
    entry = _registry.get((kind, name))
    return entry[0] if entry else None


def register(kind: str, logger: Logger, attach: AttachHandlers) -> None:
    """Запоминает логгер и функцию, которая настраивает его обработчики."""
    _registry[(kind, logger.name)] = (logger, attach)


def resolve_level(level: LogLevels | None) -> int:
    """Переводит строковый уровень в числовой с учётом значения по умолчанию."""
    return LEVELS_MAP.get(level or defaults.level, LEVELS_MAP["INFO"])


def configure_logging(
    level: LogLevels | None = None,
    log_dir: str | Path | None = None,
    to_console: bool | None = None,
) -> None:
    """
    ## Перенастраивает все зарегистрированные логгеры.

    Закрывает старые обработчики и создаёт новые с обновлёнными
    параметрами. Переданные значения становятся умолчаниями для логгеров,
    которые будут созданы позже.

    Args:
        level (LogLevels | None): Новый уровень логирования.
        log_dir (str | Path | None): Новый корневой каталог логов.
        to_console (bool | None): Выводить ли логи в консоль.
    """
    if level is not None:
        defaults.level = level
    if log_dir is not None:
        defaults.log_dir = Path(log_dir)
    if to_console is not None:
        defaults.to_console = to_console

    current_level = resolve_level(None)
    for logger, attach in _registry.values():
        for handler in list(logger.handlers):
            logger.removeHandler(handler)
            handler.close()
        logger.setLevel(current_level)
        attach(logger, current_level, defaults.log_dir / logger.name, defaults.to_console)


# Экспортируемый интерфейс модуля
__all__ = [
    "LoggingDefaults",
    "defaults",
    "lookup",
    "register",
    "resolve_level",
    "configure_logging",
]
