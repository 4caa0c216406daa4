"""
## Текстовый формат троек `(c, h, ω)`.

```
space sphere_octahedron
dc 2 s 2
c:
Nab = 1
h:
ab = 1/2
omega:
Nab = 1/8
```

Заголовок `dc <n> s <k>` задаёт степень тройки и параметр комплекса,
блоки `c:`, `h:`, `omega:` содержат строки коцепей `<id> = <число>`.
Внутри блока допускается заголовок коцепи `degree <m> ring <R>`, он
сверяется со степенью слота.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from ..complex import DeltaComplex, iter_content_lines, parse_assignment, write_cochain
from ..exceptions import AppError, ParseError
from .dc import DCComplex, DCTriple


_BLOCKS = {"c:": "c", "h:": "h", "omega:": "omega"}


def parse_dc_triple(text: str, space: DeltaComplex, source: str | Path = "<dc>", s: int | None = None) -> DCTriple:
    """
    ## Разбирает тройку.

    Args:
        text (str): Содержимое файла.
        space (DeltaComplex): Базовый комплекс.
        source (str | Path): Имя источника для диагностики.
        s (int | None): Параметр комплекса, если в файле нет заголовка.

    Raises:
        ParseError: С номером строки.
    """
    degree: int | None = None
    blocks: dict[str, dict[str, Fraction]] = {}
    block_lines: dict[str, int] = {}
    current: str | None = None
    for line_no, content in iter_content_lines(text):
        words = content.split()
        if words[0] == "space":
            continue
        if words[0] == "dc":
            if len(words) != 4 or words[2] != "s" or not words[1].isdigit() or not words[3].isdigit():
                raise ParseError(source, line_no, "ожидался заголовок 'dc <n> s <k>'")
            degree, s = int(words[1]), int(words[3])
            continue
        if content in _BLOCKS:
            current = _BLOCKS[content]
            if current in blocks:
                raise ParseError(source, line_no, f"блок {content} повторяется")
            blocks[current] = {}
            block_lines[current] = line_no
            continue
        if current is None:
            raise ParseError(source, line_no, "строка вне блоков c:, h:, omega:")
        if words[0] == "degree":
            if degree is None or len(words) != 4 or not words[1].isdigit():
                raise ParseError(source, line_no, "заголовок коцепи до заголовка 'dc'")
            expected = degree - 1 if current == "h" else degree
            if int(words[1]) != expected:
                raise ParseError(source, line_no, f"слот {current} имеет степень {expected}")
            continue
        simplex_id, value = parse_assignment(content, source, line_no)
        blocks[current][simplex_id] = value
    if degree is None:
        if s is None:
            raise ParseError(source, 1, "нет заголовка 'dc <n> s <k>'")
        degree = 2
    dc = DCComplex(space, s if s is not None else 2)
    try:
        return dc.triple(degree, blocks.get("c"), blocks.get("h"), blocks.get("omega"))
    except AppError as err:
        line_no = min(block_lines.values(), default=1)
        raise ParseError(source, line_no, str(err)) from err


def write_dc_triple(x: DCTriple) -> str:
    lines = [f"dc {x.degree} s {x.complex.s}"]
    for tag, slot in (("c:", x.c), ("h:", x.h), ("omega:", x.omega)):
        if slot is None:
            continue
        lines.append(tag)
        lines.extend(write_cochain(slot).splitlines())
    return "\n".join(lines) + "\n"


# Экспортируемый интерфейс модуля
__all__ = [
    "parse_dc_triple",
    "write_dc_triple",
]
