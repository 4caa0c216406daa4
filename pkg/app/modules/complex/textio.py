"""
## Текстовые форматы Δ-комплексов, коцепей и цепей.

Все форматы построчные, в кодировке UTF-8; всё после `#` — комментарий,
пустые строки пропускаются. Ошибки разбора указывают источник и номер
строки.

- Комплекс: `simplex <id>` или `simplex <id> : <грань> <грань> ...`.
- Коцепь: заголовок `degree <n> ring <Z|Q|QZ>`, затем `<id> = <число>`.
- Цепь: заголовок `chain <n>`, затем `<id> = <целое>`.

Любой файл, кроме файла комплекса, может начинаться с директивы
`space <имя|путь>`, называющей базовый комплекс.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path
from typing import Iterator

from ..exceptions import AppError, ParseError
from ..internal import RINGS, Ring
from .cochain import Chain, Cochain
from .delta import DeltaComplex


_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")
_ASSIGNMENT = re.compile(r"^(\S+)\s*=\s*(\S+)$")


def iter_content_lines(text: str) -> Iterator[tuple[int, str]]:
    """
    ## Итерирует значимые строки текста.

    Yields:
        tuple[int, str]: Номер строки (с единицы) и строка без комментария.
    """
    for line_no, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            yield line_no, content


def parse_rational(token: str, source: str | Path, line_no: int) -> Fraction:
    """Разбирает `p/q` или целое число."""
    if not _RATIONAL.match(token):
        raise ParseError(source, line_no, f"ожидалось рациональное число, получено '{token}'")
    numerator, _, denominator = token.partition("/")
    if denominator and int(denominator) == 0:
        raise ParseError(source, line_no, "нулевой знаменатель")
    return Fraction(int(numerator), int(denominator or 1))


def parse_assignment(content: str, source: str | Path, line_no: int) -> tuple[str, Fraction]:
    """Разбирает строку вида `<id> = <число>`."""
    match = _ASSIGNMENT.match(content)
    if match is None:
        raise ParseError(source, line_no, f"ожидалось '<id> = <число>', получено '{content}'")
    return match.group(1), parse_rational(match.group(2), source, line_no)


def space_directive(text: str) -> str | None:
    """Значение директивы `space`, если она есть в файле."""
    for _, content in iter_content_lines(text):
        parts = content.split()
        if parts[0] == "space" and len(parts) == 2:
            return parts[1]
    return None


def parse_complex(text: str, source: str | Path = "<complex>", name: str = "") -> DeltaComplex:
    """
    ## Разбирает Δ-комплекс.

    Args:
        text (str): Содержимое файла.
        source (str | Path): Имя источника для диагностики.
        name (str): Имя комплекса; по умолчанию — имя файла без расширения.

    Raises:
        ParseError: Синтаксическая ошибка или неизвестная грань.
    """
    simplices: list[tuple[str, list[str]]] = []
    declared: dict[str, int] = {}
    for line_no, content in iter_content_lines(text):
        head, _, tail = content.partition(":")
        words = head.split()
        if len(words) != 2 or words[0] != "simplex":
            raise ParseError(source, line_no, f"ожидалось 'simplex <id> [: <грани>]', получено '{content}'")
        simplex_id = words[1]
        faces = tail.split()
        if ":" in content and not faces:
            raise ParseError(source, line_no, f"у симплекса {simplex_id} пустой список граней")
        if simplex_id in declared:
            raise ParseError(source, line_no, f"симплекс {simplex_id} уже объявлен в строке {declared[simplex_id]}")
        for face in faces:
            if face not in declared:
                raise ParseError(source, line_no, f"грань {face} симплекса {simplex_id} не объявлена выше")
        declared[simplex_id] = line_no
        simplices.append((simplex_id, faces))
    if not simplices:
        raise ParseError(source, 1, "комплекс не содержит симплексов")
    try:
        return DeltaComplex(simplices, name=name or Path(str(source)).stem)
    except AppError as err:
        simplex = getattr(err, "simplex", None)
        raise ParseError(source, declared.get(simplex, 1), str(err)) from err


def parse_cochain(text: str, space: DeltaComplex, source: str | Path = "<cochain>") -> Cochain:
    """
    ## Разбирает коцепь на комплексе `space`.

    Неуказанные симплексы получают значение 0.
    """
    degree: int | None = None
    ring: Ring = "Z"
    values: dict[str, Fraction] = {}
    for line_no, content in iter_content_lines(text):
        words = content.split()
        if words[0] == "space":
            continue
        if degree is None:
            if len(words) != 4 or words[0] != "degree" or words[2] != "ring" or not words[1].isdigit():
                raise ParseError(source, line_no, "ожидался заголовок 'degree <n> ring <Z|Q|QZ>'")
            if words[3] not in RINGS:
                raise ParseError(source, line_no, f"неизвестное кольцо {words[3]}")
            degree, ring = int(words[1]), words[3]  # type: ignore[assignment]
            if degree > space.dimension:
                raise ParseError(source, line_no, f"степень {degree} больше размерности комплекса {space.dimension}")
            continue
        simplex_id, value = parse_assignment(content, source, line_no)
        if simplex_id not in space or space.dim_of(simplex_id) != degree:
            raise ParseError(source, line_no, f"{simplex_id} не является симплексом размерности {degree}")
        if ring == "Z" and value.denominator != 1:
            raise ParseError(source, line_no, f"нецелое значение {value} в кольце Z")
        values[simplex_id] = value
    if degree is None:
        raise ParseError(source, 1, "нет заголовка 'degree <n> ring <...>'")
    return Cochain.from_mapping(space, degree, ring, values)


def parse_chain(text: str, space: DeltaComplex, source: str | Path = "<chain>") -> Chain:
    degree: int | None = None
    mapping: dict[str, int] = {}
    for line_no, content in iter_content_lines(text):
        words = content.split()
        if words[0] == "space":
            continue
        if degree is None:
            if len(words) != 2 or words[0] != "chain" or not words[1].isdigit():
                raise ParseError(source, line_no, "ожидался заголовок 'chain <n>'")
            degree = int(words[1])
            continue
        simplex_id, value = parse_assignment(content, source, line_no)
        if simplex_id not in space or space.dim_of(simplex_id) != degree:
            raise ParseError(source, line_no, f"{simplex_id} не является симплексом размерности {degree}")
        if value.denominator != 1:
            raise ParseError(source, line_no, f"нецелый коэффициент {value}")
        mapping[simplex_id] = mapping.get(simplex_id, 0) + int(value)
    if degree is None:
        raise ParseError(source, 1, "нет заголовка 'chain <n>'")
    return Chain.from_mapping(space, degree, mapping)


def format_rational(value: Fraction) -> str:
    return str(value)


def write_complex(space: DeltaComplex) -> str:
    lines = []
    for simplex_id in space.all_simplices:
        faces = space.faces(simplex_id)
        lines.append(f"simplex {simplex_id}" + (f" : {' '.join(faces)}" if faces else ""))
    return "\n".join(lines) + "\n"


def write_cochain(x: Cochain, with_zeros: bool = False) -> str:
    lines = [f"degree {x.degree} ring {x.ring}"]
    for simplex_id, value in x.items():
        if value or with_zeros:
            lines.append(f"{simplex_id} = {format_rational(value)}")
    return "\n".join(lines) + "\n"


def write_chain(z: Chain) -> str:
    lines = [f"chain {z.degree}"]
    lines.extend(f"{simplex_id} = {value}" for simplex_id, value in z.support().items())
    return "\n".join(lines) + "\n"


# Экспортируемый интерфейс модуля
__all__ = [
    "iter_content_lines",
    "parse_rational",
    "parse_assignment",
    "space_directive",
    "parse_complex",
    "parse_cochain",
    "parse_chain",
    "format_rational",
    "write_complex",
    "write_cochain",
    "write_chain",
]
