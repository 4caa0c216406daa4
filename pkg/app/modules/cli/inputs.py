"""
## Загрузка входных файлов CLI.

Базовый комплекс файла берётся из `--complex` или из директивы
`space <имя|путь>`; путь в директиве отсчитывается от каталога файла.
Один и тот же комплекс загружается один раз, чтобы все входы
ссылались на общий объект.
"""

from __future__ import annotations

from pathlib import Path

from ..complex import STANDARD_SPACES, DeltaComplex, parse_complex, space_directive, standard_space
from ..exceptions import InputFileError, ParseError
from ..logging import get_json_app_logger
from .report import Report


logger = get_json_app_logger(__name__)


class InputLoader:
    """
    ## Читает входы и записывает их дайджесты в отчёт.

    Attributes:
        report (Report): Отчёт, куда попадают дайджесты.
        override (str | None): Значение `--complex`.
    """

    def __init__(self, report: Report, override: str | None = None) -> None:
        self.report = report
        self.override = override
        self._spaces: dict[str, DeltaComplex] = {}

    def read(self, role: str, path: str | Path) -> str:
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as err:
            raise InputFileError(path, getattr(err, "strerror", None) or str(err)) from err
        self.report.add_input(role, path)
        logger.debug("Вход прочитан", extra={"operation": "read_input", "details": {"role": role, "path": str(path)}})
        return text

    def space(self, ref: str, relative_to: Path | None = None) -> DeltaComplex:
        """Стандартный комплекс по имени или комплекс из файла."""
        if ref in STANDARD_SPACES:
            key = f"standard:{ref}"
            if key not in self._spaces:
                self._spaces[key] = standard_space(ref)
            return self._spaces[key]
        path = (relative_to.parent / ref) if relative_to is not None else Path(ref)
        key = str(path.resolve())
        if key not in self._spaces:
            self._spaces[key] = parse_complex(self.read("complex", path), path)
        return self._spaces[key]

    def base_space(self, text: str, path: Path) -> DeltaComplex:
        """
        ## Базовый комплекс для входа `path`.

        Raises:
            ParseError: Нет ни `--complex`, ни директивы `space`.
        """
        if self.override is not None:
            return self.space(self.override)
        ref = space_directive(text)
        if ref is None:
            raise ParseError(path, 1, "нет директивы 'space' и не задан --complex")
        return self.space(ref, path)


# Экспортируемый интерфейс модуля
__all__ = [
    "InputLoader",
]
