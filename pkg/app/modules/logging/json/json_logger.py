from __future__ import annotations

from dataclasses import asdict, dataclass
from json import dumps as json_dumps
from logging import (
    INFO,
    Formatter,
    LogRecord,
    Logger,
    StreamHandler,
)
from logging import FileHandler
from pathlib import Path
from datetime import datetime
from traceback import format_exception
from typing import Any

from ..config import defaults, lookup, register, resolve_level
from ..internal import LogLevels


class DailyJsonRotatingFileHandler(FileHandler):
    """
    ## Обработчик логов с ежедневной ротацией и `JSON`-форматом.

    Имя файла генерируется динамически на основе текущей даты в формате
    `DD_MM_YY_logs.ndjson` внутри каталога, соответствующего имени логгера.

    Формат записи — одна `JSON`-строка на строку файла (NDJSON):

    ```json
    {"time": "...", "logger": "...", "level": "...", "operation": "...", ...}
    ```
    """
    def __init__(self,
        log_dir: Path,
        encoding: str = "utf-8",
        mode: str = "a"
    ) -> None:
        """
        ## Создаёт обработчик с дневной ротацией и `JSON`-записью.

        Файл открывается лениво, при первой записи.

        Args:
            log_dir (Path): Директория для сохранения логов.
            encoding (str): Кодировка файла. По умолчанию `"utf-8"`.
            mode (str): Режим открытия файла. По умолчанию `"a"` (добавление).
        """
        self.log_dir = log_dir
        self._current_file: Path | None = None

        super().__init__(self._get_current_log_file(), mode, encoding, delay=True)

    def _get_current_log_file(self) -> Path:
        current_date = datetime.now().strftime("%d_%m_%y")
        return self.log_dir / f"{current_date}_logs.ndjson"

    def emit(self, record: LogRecord) -> None:  # type: ignore[override]
        """
        ## Записывает лог-запись в `JSON`-формате с ежедневной ротацией.
        """
        try:
            current_log_file = self._get_current_log_file()

            if current_log_file != self._current_file:
                if self.stream:
                    self.stream.close()
                    self.stream = None

                self.log_dir.mkdir(parents=True, exist_ok=True)
                self._current_file = current_log_file
                self.baseFilename = str(current_log_file)
                self.stream = self._open()

            json_line = self._serialize_record(record)
            stream = self.stream or self._open()
            stream.write(json_line + "\n")
            stream.flush()
        except Exception:
            self.handleError(record)

    @staticmethod
    def _serialize_record(record: LogRecord) -> str:
        """
        ## Преобразует `LogRecord` в `JSON`-строку.

        Помимо стандартных полей (`time`, `logger`, `level`, `file`,
        `thread`, `message`) и данных об исключении записываются
        структурированные поля `operation` и `details`, переданные через
        `extra={"operation": ..., "details": {...}}`.
        """
        payload = JsonLogEntry.from_record(record)
        return json_dumps(asdict(payload), ensure_ascii=False, default=str)


def _plain(value: Any) -> Any:
    """Приводит значения `details` к `JSON`: дроби и группы становятся строками."""
    if isinstance(value, dict):
        return {str(key): _plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, frozenset, set)):
        return [_plain(item) for item in value]
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    return str(value)


def _exception_fields(record: LogRecord) -> tuple[str | None, str | None, str | None]:
    if not record.exc_info:
        return None, None, None
    etype, evalue, etb = record.exc_info
    return (
        etype.__name__ if etype is not None else None,
        str(evalue) if evalue is not None else None,
        "".join(format_exception(etype, evalue, etb)),
    )


@dataclass
class JsonLogEntry:
    """
    ## Структура записи лога в `JSON`-формате.

    Attributes:
        time (str): Время события.
        logger (str): Имя логгера.
        level (str): Уровень логирования.
        file (str): Имя файла, вызвавшего лог.
        thread (str): Имя потока.
        message (str): Текст сообщения.
        operation (str | None): Имя вычислительной операции.
        details (dict | None): Структурированные параметры операции
            (размеры, ранги, инварианты).
        exc_type (str | None): Имя класса исключения.
        exc_message (str | None): Сообщение исключения.
        exc_traceback (str | None): Стек-трейс исключения.
    """
    time: str
    logger: str
    level: str
    file: str
    thread: str
    message: str
    operation: str | None
    details: dict | None
    exc_type: str | None
    exc_message: str | None
    exc_traceback: str | None

    @classmethod
    def from_record(cls, record: LogRecord) -> "JsonLogEntry":
        """
        ## Строит `JsonLogEntry` из экземпляра `LogRecord`.

        Args:
            record (LogRecord): Запись стандартного логгера.

        Returns:
            JsonLogEntry: Готовая структура для сериализации в `JSON`.
        """
        operation = getattr(record, "operation", None)
        details = getattr(record, "details", None)
        exc_type, exc_message, exc_traceback = _exception_fields(record)

        return cls(
            time=Formatter().formatTime(record, datefmt="%Y-%m-%d %H:%M:%S"),
            logger=record.name,
            level=record.levelname,
            file=record.filename,
            thread=record.threadName or "",
            message=record.getMessage(),
            operation=str(operation) if operation is not None else None,
            details=_plain(details) if isinstance(details, dict) else None,
            exc_type=exc_type,
            exc_message=exc_message,
            exc_traceback=exc_traceback,
        )


class JsonAppLogger(Logger):
    """
    ## Логгер приложения с `JSON`-выводом и дневной ротацией.

    Наследует стандартный `logging.Logger` и используется совместно с
    `get_json_app_logger` для единообразной настройки структурированного
    логирования.
    """
    def __init__(self, name: str, level: int = INFO) -> None:
        super().__init__(name, level)


def _attach_json_handlers(logger: Logger, level: int, log_dir: Path, to_console: bool) -> None:
    file_handler = DailyJsonRotatingFileHandler(log_dir, encoding="utf-8")
    file_handler.setLevel(level)
    logger.addHandler(file_handler)

    if to_console:
        log_format = (
            "[%(asctime)s] [%(filename)s] [%(threadName)s] "
            "[%(levelname)s] - %(message)s"
        )
        formatter = Formatter(log_format, datefmt="%Y-%m-%d %H:%M:%S")
        stream_handler = StreamHandler()
        stream_handler.setLevel(level)
        stream_handler.setFormatter(formatter)
        logger.addHandler(stream_handler)


def get_json_app_logger(
    logger_name: str,
    level: LogLevels | None = None,
    to_console: bool | None = None,
    log_dir: str | Path | None = None,
) -> JsonAppLogger:
    """
    ## Возвращает `JSON`-логгер с дневной ротацией файлов.

    Логи пишутся в каталог `<log_dir>/<logger_name>/`. Формат имени файла:
    `DD_MM_YY_logs.ndjson`. Каждая строка файла — отдельный `JSON`-объект
    (`JsonLogEntry`). Логгеры кешируются по имени.

    Args:
        logger_name (str): Имя логгера и подкаталога для логов.
        level (LogLevels | None): Уровень логирования ("DEBUG", "FATAL",
            "ERROR", "WARN", "INFO"); по умолчанию из `configure_logging`.
        to_console (bool | None): Если `True`, добавляет вывод логов в консоль
            в текстовом виде.
        log_dir (str | Path | None): Корневой каталог логов.

    Returns:
        JsonAppLogger: Настроенный `JSON`-логгер приложения.
    """
    cached = lookup("json", logger_name)
    if isinstance(cached, JsonAppLogger):
        return cached

    current_level = resolve_level(level)
    root_dir = Path(log_dir) if log_dir is not None else defaults.log_dir
    console = defaults.to_console if to_console is None else to_console

    logger = JsonAppLogger(logger_name)
    logger.setLevel(current_level)
    _attach_json_handlers(logger, current_level, root_dir / logger_name, console)
    register("json", logger, _attach_json_handlers)
    return logger


# Экспортируемый интерфейс модуля
__all__ = [
    "DailyJsonRotatingFileHandler",
    "JsonLogEntry",
    "JsonAppLogger",
    "get_json_app_logger",
]
