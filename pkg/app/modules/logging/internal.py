from typing import Literal

from logging import DEBUG, ERROR, FATAL, INFO, WARN

# Определение допустимых уровней логирования
LogLevels = Literal["DEBUG", "FATAL", "ERROR", "WARN", "INFO"]

# Соответствие строковых уровней числовым уровням `logging`
LEVELS_MAP: dict[str, int] = {
    "DEBUG": DEBUG,
    "FATAL": FATAL,
    "ERROR": ERROR,
    "WARN": WARN,
    "INFO": INFO,
}


# Экпортируемый интерфейс модуля
__all__ = [
    "LogLevels",
    "LEVELS_MAP",
]
