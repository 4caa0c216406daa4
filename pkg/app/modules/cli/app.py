"""
## Точка входа командной строки `diffchar`.

Отчёт печатается в stdout, диагностика в stderr. Коды выхода: `0`
успех, `1` математическая ошибка или несработавший сертификат, `2`
ошибка входных данных.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from ..exceptions import AppError, InputError
from ..internal import RINGS, Settings
from ..logging import LogLevels, configure_logging, get_app_logger
from ..logging.internal import LEVELS_MAP
from .commands import COMMANDS
from .inputs import InputLoader
from .report import Report


session_logger = get_app_logger("cli")


def build_parser() -> argparse.ArgumentParser:
    """Парсер с глобальными флагами и подкомандами."""
    parser = argparse.ArgumentParser(
        prog="diffchar",
        allow_abbrev=False,
        description="Дифференциальные характеры, решёточные U(1)-поля и эквивариантные когомологии.",
    )
    parser.add_argument("--log-level", choices=sorted(LEVELS_MAP), default=None, help="Уровень логирования")
    parser.add_argument("--log-dir", default=None, help="Каталог логов")
    parser.add_argument("--seed", type=int, default=None, help="Зерно случайных выборок")
    parser.add_argument("--samples", type=int, default=None, help="Размер случайных выборок")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, allow_abbrev=False)
        p.add_argument("--complex", default=None, help="Файл комплекса или имя стандартного пространства")
        return p

    p = command("cohomology", "H^n(X) над Z, Q или Q/Z")
    p.add_argument("--ring", choices=RINGS, default="Z")
    p.add_argument("--degree", type=int, required=True)

    p = command("dc-cohomology", "H^n(DC_s(X))")
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--degree", type=int, required=True)

    p = command("chern", "Коцикл DC и число Черна поля")
    p.add_argument("--gauge", required=True)

    p = command("preq", "Поле по коциклу DC_2")
    p.add_argument("--dc", required=True)

    p = command("holonomy", "Голономия поля по циклу")
    p.add_argument("--gauge", required=True)
    p.add_argument("--cycle", required=True)

    p = command("weil", "H^2(X; Z) и H^2(DC_1), подъём коцикла")
    p.add_argument("--cocycle", default=None)

    p = command("equivariant", "Тотальные когомологии группоида действия")
    p.add_argument("--group", default=None)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--s", type=int, default=None)

    p = command("kostant", "Проверка последовательности Костанта")
    p.add_argument("--group", default=None)

    p = command("descent-check", "Проверка спуска H^1 по покрытию")
    p.add_argument("--cover", required=True)
    p.add_argument("--ring", choices=("Z", "Q"), default="Z")
    return parser


def run(argv: Sequence[str], stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    """
    ## Выполняет одну команду.

    Args:
        argv (Sequence[str]): Аргументы без имени программы.
        stdout (TextIO | None): Поток отчёта; по умолчанию `sys.stdout`.
        stderr (TextIO | None): Поток диагностики; по умолчанию `sys.stderr`.

    Returns:
        int: Код выхода.
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)

    level: LogLevels | None = args.log_level
    settings = Settings.from_env().override(
        log_dir=args.log_dir,
        log_level=level,
        seed=args.seed,
        sample_size=args.samples,
    )
    configure_logging(level=settings.log_level, log_dir=settings.log_dir)

    report = Report(command=" ".join(["diffchar", *argv]))
    loader = InputLoader(report, override=args.complex)
    session_logger.info(f"Команда: {report.command}")
    try:
        COMMANDS[args.command](args, loader, settings, report)
    except InputError as err:
        session_logger.error(f"Ошибка входных данных: {err}")
        print(f"error: {err}", file=stderr)
        return err.exit_code
    except AppError as err:
        session_logger.error(f"Вычисление прервано: {type(err).__name__}: {err}")
        print(f"error: {err}", file=stderr)
        report.add("error", type(err).__name__)
        report.status = "FAILED"
        stdout.write(report.render())
        return err.exit_code
    stdout.write(report.render())
    session_logger.info(f"Команда завершена со статусом {report.status}")
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


# Экспортируемый интерфейс модуля
__all__ = [
    "build_parser",
    "run",
    "main",
]
