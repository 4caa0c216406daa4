"""
## Текстовый отчёт команды.

Отчёт — последовательность строк `ключ = значение` в порядке
добавления: эхо команды, дайджесты входных файлов, результаты и статус.
Одинаковый запуск даёт побайтно одинаковый отчёт.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from pathlib import Path
from typing import Literal


Status = Literal["OK", "CERTIFIED", "FAILED"]


def sha256_of(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


@dataclass
class Report:
    """
    ## Отчёт одной команды CLI.

    Attributes:
        command (str): Эхо командной строки.
        inputs (list[tuple[str, str, str]]): Роль, имя файла и SHA-256 входа.
        entries (list[tuple[str, str]]): Пары `ключ = значение`.
        status (Status): Итоговый статус.
    """
    command: str
    inputs: list[tuple[str, str, str]] = field(default_factory=list)
    entries: list[tuple[str, str]] = field(default_factory=list)
    status: Status = "OK"

    def add_input(self, role: str, path: Path) -> None:
        """Добавляет вход, если такой роли ещё нет."""
        if any(r == role for r, _, _ in self.inputs):
            return
        self.inputs.append((role, path.name, sha256_of(path)))

    def add(self, key: str, value: object) -> None:
        self.entries.append((key, str(value)))

    def add_cochain(self, prefix: str, values: dict[str, object]) -> None:
        """Ненулевые значения коцепи-сертификата как `prefix[σ] = v`."""
        for simplex_id, value in values.items():
            if value:
                self.add(f"{prefix}[{simplex_id}]", value)

    def render(self) -> str:
        lines = [f"command = {self.command}"]
        lines.extend(f"input {role} = {name} sha256:{digest}" for role, name, digest in self.inputs)
        lines.extend(f"{key} = {value}" for key, value in self.entries)
        lines.append(f"status = {self.status}")
        return "\n".join(lines) + "\n"


# Экспортируемый интерфейс модуля
__all__ = [
    "Status",
    "Report",
    "sha256_of",
]
