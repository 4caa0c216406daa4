"""\
## Иерархия исключений приложения.

Ошибки делятся на три ветви:

- `InputError` — некорректные входные данные (код выхода CLI 2);
- `MathematicalError` — математическое препятствие, например монополь
  или некогомологичные данные (код выхода CLI 1);
- `InternalError` — не выполнился сертификат, который гарантирует
  теорема, то есть ошибка реализации (код выхода CLI 1).
"""

from __future__ import annotations

from pathlib import Path


class AppError(Exception):
    """\
    ## Базовое исключение приложения.

    От него наследуются все специфичные для приложения ошибки.
    """

    exit_code: int = 1


class InputError(AppError):
    """\
    ## Некорректные входные данные.
    """

    exit_code = 2


class MathematicalError(AppError):
    """\
    ## Математическое препятствие для вычисления.
    """

    exit_code = 1


class InternalError(AppError):
    """\
    ## Нарушен сертификат, гарантированный теоремой.
    """

    exit_code = 1


class ParseError(InputError):
    """\
    ## Ошибка разбора текстового файла.
    """

    def __init__(self, source: str | Path, line_no: int, message: str) -> None:
        msg = f"{source}:{line_no}: {message}"
        super().__init__(msg)
        self.source = str(source)
        self.line_no = line_no
        self.message = message


class InputFileError(InputError):
    def __init__(self, path: str | Path, reason: str) -> None:
        super().__init__(f"{path}: не удаётся прочитать файл: {reason}")
        self.path = str(path)


class UnknownSpaceError(InputError):
    def __init__(self, name: str) -> None:
        super().__init__(f"Неизвестное стандартное пространство: {name}")
        self.name = name


class InvalidComplexError(InputError):
    """\
    ## Нарушены инварианты Δ-комплекса (грани, симплициальные тождества).
    """

    def __init__(self, message: str, simplex: str | None = None) -> None:
        where = f" (симплекс {simplex})" if simplex is not None else ""
        super().__init__(f"Некорректный Δ-комплекс{where}: {message}")
        self.simplex = simplex


class InvalidActionError(InputError):
    def __init__(self, message: str) -> None:
        super().__init__(f"Некорректное действие группы: {message}")


class InvalidCoverError(InputError):
    def __init__(self, message: str, simplex: str | None = None) -> None:
        where = f" (симплекс {simplex})" if simplex is not None else ""
        super().__init__(f"Некорректное покрытие{where}: {message}")
        self.simplex = simplex


class WeightSupportError(InputError):
    """\
    ## Вес разбиения единицы вне носителя или не нормирован.
    """

    def __init__(self, vertex: str, message: str) -> None:
        super().__init__(f"Разбиение единицы в вершине {vertex}: {message}")
        self.vertex = vertex


class DimensionMismatchError(InputError):
    def __init__(self, message: str) -> None:
        super().__init__(f"Несогласованные размерности: {message}")


class DegreeOverflowError(InputError):
    """\
    ## Степень выходит за пределы комплекса.
    """

    def __init__(self, degree: int, limit: int) -> None:
        super().__init__(f"Степень {degree} превышает допустимую {limit}")
        self.degree = degree
        self.limit = limit


class DegreeMismatchError(InputError):
    def __init__(self, expected: int, actual: int) -> None:
        super().__init__(f"Ожидалась степень {expected}, получена {actual}")
        self.expected = expected
        self.actual = actual


class DepthExceededError(InputError):
    def __init__(self, level: int, depth: int) -> None:
        super().__init__(f"Уровень {level} превышает глубину нерва {depth}")
        self.level = level
        self.depth = depth


class InsufficientDepthError(InputError):
    def __init__(self, degree: int, depth: int) -> None:
        super().__init__(
            f"Для степени {degree} нужна глубина не меньше {degree + 1}, задана {depth}"
        )
        self.degree = degree
        self.depth = depth


class CoefficientRingError(InputError):
    """\
    ## Операция не определена над данным кольцом коэффициентов.
    """

    def __init__(self, ring: str, message: str) -> None:
        super().__init__(f"Кольцо {ring}: {message}")
        self.ring = ring


class CompositionMismatchError(InputError):
    def __init__(self) -> None:
        super().__init__("Цель первого морфизма не совпадает с источником второго")


class NotACycleError(InputError):
    def __init__(self, simplex: str) -> None:
        super().__init__(f"Цепь не является циклом: граница ненулевая на {simplex}")
        self.simplex = simplex


class CompositionNotZeroError(MathematicalError):
    """\
    ## Композиция соседних дифференциалов ненулевая.
    """

    def __init__(self, degree: int) -> None:
        super().__init__(f"d∘d ≠ 0 в степени {degree}")
        self.degree = degree


class NotACocycleError(MathematicalError):
    def __init__(self, where: str) -> None:
        super().__init__(f"Коцепь не замкнута: дифференциал ненулевой на {where}")
        self.where = where


class NotAChainMapError(MathematicalError):
    def __init__(self, degree: int) -> None:
        super().__init__(f"Отображение не коммутирует с дифференциалом в степени {degree}")
        self.degree = degree


class NotAHomotopyError(MathematicalError):
    def __init__(self, degree: int) -> None:
        super().__init__(f"Не выполнено dk + kd = g − f в степени {degree}")
        self.degree = degree


class MonopoleError(MathematicalError):
    """\
    ## Целочисленное округление кривизны не замкнуто (решёточный монополь).
    """

    def __init__(self, simplex: str, charge: object) -> None:
        super().__init__(f"Обнаружен монополь заряда {charge} на симплексе {simplex}")
        self.simplex = simplex
        self.charge = charge


class NotCohomologousError(MathematicalError):
    def __init__(self, message: str) -> None:
        super().__init__(f"Данные не когомологичны: {message}")


class PreconditionError(MathematicalError):
    def __init__(self, message: str) -> None:
        super().__init__(f"Не выполнено предусловие: {message}")


class NoPrimitiveError(InternalError):
    def __init__(self, message: str) -> None:
        super().__init__(f"Не найдена первообразная: {message}")


class CertificateError(InternalError):
    """\
    ## Проверка сертификата не прошла.
    """

    def __init__(self, check: str, details: str = "") -> None:
        suffix = f": {details}" if details else ""
        super().__init__(f"Сертификат '{check}' не выполнен{suffix}")
        self.check = check
        self.details = details


# Экспортируемый интерфейс модуля
__all__ = [
    "AppError",
    "InputError",
    "MathematicalError",
    "InternalError",
    "ParseError",
    "InputFileError",
    "UnknownSpaceError",
    "InvalidComplexError",
    "InvalidActionError",
    "InvalidCoverError",
    "WeightSupportError",
    "DimensionMismatchError",
    "DegreeOverflowError",
    "DegreeMismatchError",
    "DepthExceededError",
    "InsufficientDepthError",
    "CoefficientRingError",
    "CompositionMismatchError",
    "NotACycleError",
    "CompositionNotZeroError",
    "NotACocycleError",
    "NotAChainMapError",
    "NotAHomotopyError",
    "MonopoleError",
    "NotCohomologousError",
    "PreconditionError",
    "NoPrimitiveError",
    "CertificateError",
]
