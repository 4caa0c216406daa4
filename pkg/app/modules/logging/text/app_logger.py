from logging import FileHandler, Formatter, Logger, LogRecord, INFO, StreamHandler
from pathlib import Path
from datetime import datetime

from ..config import defaults, lookup, register, resolve_level
from ..internal import LogLevels


TEXT_FORMAT = "[%(asctime)s] [%(filename)s] [%(threadName)s] [%(levelname)s] - %(message)s"


class DailyRotatingFileHandler(FileHandler):
    """
    ## Обработчик логов с ежедневной ротацией файлов.

    Имя файла генерируется динамически на основе текущей даты. Каталог и
    файл создаются только при первой записи, поэтому импорт модулей с
    логгерами не оставляет пустых каталогов.
    """

    def __init__(self, log_dir: Path, encoding: str = "utf-8", mode: str = "a"):
        """
        ## Создаёт обработчик с динамической ротацией по дням.

        Args:
            log_dir (Path): Директория для сохранения логов.
            encoding (str): Кодировка файла. По умолчанию "utf-8".
            mode (str): Режим открытия файла. По умолчанию "a" (добавление).
        """
        self.log_dir = log_dir
        self._current_file: Path | None = None
        super().__init__(self._get_current_log_file(), mode, encoding, delay=True)

    def _get_current_log_file(self) -> Path:
        """
        ## Возвращает путь к файлу логов на текущую дату.

        Returns:
            Path: Полный путь к файлу логов.
        """
        current_date = datetime.now().strftime("%d_%m_%y")
        return self.log_dir / f"{current_date}_logs.log"

    def emit(self, record: LogRecord) -> None:
        """
        ## Записывает лог-запись, при необходимости меняя файл по дате.
        """
        try:
            current_log_file = self._get_current_log_file()

            # Если дата изменилась - переключаемся на новый файл
            if current_log_file != self._current_file:
                if self.stream:
                    self.stream.close()
                    self.stream = None
                self.log_dir.mkdir(parents=True, exist_ok=True)
                self._current_file = current_log_file
                self.baseFilename = str(current_log_file)
                self.stream = self._open()

            super().emit(record)

            # Немедленно сбрасываем буфер
            if self.stream:
                self.flush()
        except Exception:
            self.handleError(record)


class AppLogger(Logger):
    """
    ## Логгер приложения с преднастроенной конфигурацией.

    Наследует стандартный `logging.Logger` и используется совместно с
    `get_app_logger` для единообразной настройки логирования.
    """

    def __init__(self, name: str, level: int = INFO):
        super().__init__(name, level)


def _attach_text_handlers(logger: Logger, level: int, log_dir: Path, to_console: bool) -> None:
    formatter = Formatter(TEXT_FORMAT, datefmt="%Y-%m-%d %H:%M:%S")

    file_handler = DailyRotatingFileHandler(log_dir, encoding="utf-8")
    file_handler.setLevel(level)
    file_handler.setFormatter(formatter)
    logger.addHandler(file_handler)

    if to_console:
        stream_handler = StreamHandler()
        stream_handler.setLevel(level)
        stream_handler.setFormatter(formatter)
        logger.addHandler(stream_handler)


def get_app_logger(
    logger_name: str,
    level: LogLevels | None = None,
    to_console: bool | None = None,
    log_dir: str | Path | None = None,
) -> AppLogger:
    """
    ## Возвращает текстовый логгер приложения c файловой ротацией.

    Логи пишутся в каталог `<log_dir>/<logger_name>/`. Формат имени файла:
    `DD_MM_YY_logs.log`. Повторный вызов с тем же именем возвращает уже
    созданный логгер без дублирования обработчиков.

    Args:
        logger_name (str): Имя логгера и подкаталога для логов.
        level (LogLevels | None): Уровень логирования, по умолчанию из
            `configure_logging`.
        to_console (bool | None): Если True, добавляет вывод логов в консоль.
        log_dir (str | Path | None): Корневой каталог логов.

    Returns:
        AppLogger: Настроенный логгер приложения.
    """
    cached = lookup("text", logger_name)
    if isinstance(cached, AppLogger):
        return cached

    current_level = resolve_level(level)
    root_dir = Path(log_dir) if log_dir is not None else defaults.log_dir
    console = defaults.to_console if to_console is None else to_console

    logger = AppLogger(logger_name)
    logger.setLevel(current_level)
    _attach_text_handlers(logger, current_level, root_dir / logger_name, console)
    register("text", logger, _attach_text_handlers)
    return logger


# Экспортируемый интерфейс модуля
__all__ = [
    "AppLogger",
    "DailyRotatingFileHandler",
    "get_app_logger",
]
