from __future__ import annotations

from dataclasses import dataclass
from json import loads as json_loads
from pathlib import Path
from typing import Any, Iterator


def _optional(raw: dict[str, Any], key: str) -> str | None:
    value = raw.get(key)
    return None if value is None else str(value)


@dataclass(frozen=True)
class JsonLogRecord:
    """\
    ## Запись NDJSON-лога вычислений.

    Поля повторяют `JsonLogEntry`: общие поля события (`time`, `logger`,
    `level`, `file`, `thread`, `message`), операция и её параметры
    (`operation`, `details`), а при ошибке ещё `exc_type`, `exc_message`
    и `exc_traceback`.
    """
    time: str
    logger: str
    level: str
    file: str
    thread: str
    message: str
    operation: str | None = None
    details: dict | None = None
    exc_type: str | None = None
    exc_message: str | None = None
    exc_traceback: str | None = None

    @property
    def failed(self) -> bool:
        """Запись описывает исключение."""
        return self.exc_type is not None

    @classmethod
    def from_dict(cls, raw: dict) -> "JsonLogRecord":
        """\
        ## Создаёт `JsonLogRecord` из разобранной строки лога.

        Args:
            raw (dict): Словарь, полученный из строки `JSON`.

        Returns:
            JsonLogRecord: Запись; отсутствующие поля пустые или `None`.
        """
        details = raw.get("details")
        return cls(
            **{key: str(raw.get(key, "")) for key in ("time", "logger", "level", "file", "thread", "message")},
            operation=_optional(raw, "operation"),
            details=dict(details) if isinstance(details, dict) else None,
            exc_type=_optional(raw, "exc_type"),
            exc_message=_optional(raw, "exc_message"),
            exc_traceback=_optional(raw, "exc_traceback"),
        )


class JsonLogReader:
    """
    ## Чтение NDJSON-логов, которые пишет `JsonAppLogger`.

    Файлы лежат в `<log_dir>/<logger_name>/<DD_MM_YY>_logs.ndjson`, по
    одному `JSON`-объекту на строку; пустые строки пропускаются.

    Attributes:
        path (Path): Путь к файлу лога.
    """
    def __init__(self, file_path: str | Path) -> None:
        self.path = Path(file_path)

    @classmethod
    def latest(cls, log_dir: str | Path, logger_name: str) -> "JsonLogReader | None":
        """
        ## Возвращает reader для последнего NDJSON-файла логгера.

        Args:
            log_dir (str | Path): Корневой каталог логов.
            logger_name (str): Имя логгера (подкаталог).

        Returns:
            JsonLogReader | None: Reader или `None`, если файлов нет.
        """
        files = sorted((Path(log_dir) / logger_name).glob("*_logs.ndjson"))
        return cls(files[-1]) if files else None

    def __iter__(self) -> Iterator[JsonLogRecord]:
        with self.path.open("r", encoding="utf-8") as f:
            for line in f:
                if line.strip():
                    yield JsonLogRecord.from_dict(json_loads(line))

    def to_records(self) -> list[JsonLogRecord]:
        return list(self)

    def for_operation(self, operation: str) -> list[JsonLogRecord]:
        """
        ## Записи одной операции в порядке появления.

        Args:
            operation (str): Имя операции, например `"dch"`.

        Returns:
            list[JsonLogRecord]: Записи с `operation == operation`.
        """
        return [record for record in self if record.operation == operation]

    def failures(self) -> list[JsonLogRecord]:
        """Записи, к которым приложено исключение."""
        return [record for record in self if record.failed]


# Экспортируемый интерфейс модуля
__all__ = [
    "JsonLogRecord",
    "JsonLogReader",
]
