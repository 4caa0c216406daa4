"""
## Общие типы и настройки выполнения.

Литеральные типы колец коэффициентов и неизменяемый набор настроек,
которые разделяют все модули пакета.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from os import environ
from pathlib import Path
from typing import Literal, get_args

from .logging.internal import LogLevels


# Кольцо коэффициентов коцепи: целые, рациональные (модель R) и Q/Z (модель R/Z)
Ring = Literal["Z", "Q", "QZ"]

# Кольцо координаты конечного комплекса: ℤ-решётка или ℚ-пространство
CoordRing = Literal["Z", "Q"]

RINGS: tuple[str, ...] = get_args(Ring)


@dataclass(frozen=True)
class Settings:
    """
    ## Настройки выполнения вычислений и CLI.

    Attributes:
        log_dir (Path): Корневой каталог логов.
        log_level (LogLevels): Уровень логирования.
        to_console (bool): Дублировать ли логи в консоль.
        sample_size (int): Размер случайной выборки для сертификатов.
        seed (int): Зерно генератора случайных выборок.
    """
    log_dir: Path = Path("logs")
    log_level: LogLevels = "INFO"
    to_console: bool = False
    sample_size: int = 20
    seed: int = 0

    @classmethod
    def from_env(cls) -> "Settings":
        """
        ## Читает настройки из переменных окружения.

        Учитываются `DIFFCHAR_LOG_DIR`, `DIFFCHAR_LOG_LEVEL` и
        `DIFFCHAR_SEED`; отсутствующие переменные дают значения по умолчанию.
        """
        settings = cls()
        if "DIFFCHAR_LOG_DIR" in environ:
            settings = replace(settings, log_dir=Path(environ["DIFFCHAR_LOG_DIR"]))
        level = environ.get("DIFFCHAR_LOG_LEVEL")
        if level in get_args(LogLevels):
            settings = replace(settings, log_level=level)  # type: ignore[arg-type]
        seed = environ.get("DIFFCHAR_SEED")
        if seed is not None and seed.lstrip("-").isdigit():
            settings = replace(settings, seed=int(seed))
        return settings

    def override(self, **changes: object) -> "Settings":
        """Возвращает копию с заменёнными полями, пропуская `None`."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


# Экспортируемый интерфейс модуля
__all__ = [
    "Ring",
    "CoordRing",
    "RINGS",
    "Settings",
]
