"""
## Нормальная форма Смита целочисленной матрицы.

Итеративный вариант алгоритма Евклида по строкам и столбцам с
детерминированным выбором ведущего элемента: наименьший по модулю
ненулевой элемент, при равенстве берётся наименьшая пара (строка, столбец).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..logging import get_json_app_logger
from .matrices import IntMatrix, as_fraction


logger = get_json_app_logger(__name__)


@dataclass(frozen=True)
class SNFDecomposition:
    """
    ## Разложение `U · M · V = S`.

    Attributes:
        U (IntMatrix): Унимодулярная матрица строчных преобразований.
        S (IntMatrix): Диагональная матрица с неотрицательной диагональю,
            каждый элемент делит следующий.
        V (IntMatrix): Унимодулярная матрица столбцовых преобразований.
    """
    U: IntMatrix
    S: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(int(self.S[i, i]) for i in range(min(self.S.rows, self.S.cols)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        """Ненулевые диагональные элементы."""
        return tuple(d for d in self.diagonal if d != 0)

    @property
    def torsion(self) -> tuple[int, ...]:
        """Диагональные элементы, большие единицы."""
        return tuple(d for d in self.diagonal if d > 1)


def _pivot(a: list[list[int]], t: int) -> tuple[int, int] | None:
    best: tuple[int, int, int] | None = None
    for i in range(t, len(a)):
        for j in range(t, len(a[0])):
            value = abs(a[i][j])
            if value and (best is None or value < best[0]):
                best = (value, i, j)
    return None if best is None else (best[1], best[2])


def smith_normal_form(matrix: IntMatrix) -> SNFDecomposition:
    """
    ## Вычисляет нормальную форму Смита.

    Строчные операции накапливаются в `U`, столбцовые — в `V`, так что
    `U · M · V = S`. Функция тотальна: нулевая и пустая матрицы допустимы.

    Args:
        matrix (IntMatrix): Исходная матрица `M`.

    Returns:
        SNFDecomposition: Матрицы `U`, `S`, `V`.
    """
    m, n = matrix.rows, matrix.cols
    a = [[int(x) for x in matrix.row(i)] for i in range(m)]
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i: int, k: int) -> None:
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j: int, k: int) -> None:
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    def add_row(target: int, source: int, factor: int) -> None:
        # row_target += factor * row_source
        a[target] = [x + factor * y for x, y in zip(a[target], a[source])]
        u[target] = [x + factor * y for x, y in zip(u[target], u[source])]

    def add_col(target: int, source: int, factor: int) -> None:
        for row in a:
            row[target] += factor * row[source]
        for row in v:
            row[target] += factor * row[source]

    steps = 0
    for t in range(min(m, n)):
        found = True
        while True:
            position = _pivot(a, t)
            if position is None:
                found = False
                break
            swap_rows(t, position[0])
            swap_cols(t, position[1])
            pivot = a[t][t]
            steps += 1

            clean = True
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // pivot))
                    clean = clean and a[i][t] == 0
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // pivot))
                    clean = clean and a[t][j] == 0
            if not clean:
                continue

            offender = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % pivot),
                None,
            )
            if offender is None:
                break
            add_row(t, offender, 1)
        if not found:
            break
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    result = SNFDecomposition(
        U=IntMatrix.from_rows(u, m),
        S=IntMatrix.from_rows(a, n),
        V=IntMatrix.from_rows(v, n),
    )
    logger.debug(
        "Нормальная форма Смита вычислена",
        extra={
            "operation": "smith_normal_form",
            "details": {"shape": [m, n], "rank": result.rank, "pivots": steps},
        },
    )
    return result


def unimodular_inverse(matrix: IntMatrix) -> IntMatrix:
    """
    ## Обращает унимодулярную целочисленную матрицу.

    Args:
        matrix (IntMatrix): Квадратная матрица с определителем ±1.

    Returns:
        IntMatrix: Обратная матрица (целочисленная).
    """
    if matrix.rows == 0:
        return matrix
    inverse = matrix.to_domain_matrix().inv()
    return IntMatrix.from_rows(
        [[as_fraction(x) for x in row] for row in inverse.to_list()], matrix.cols
    )


# Экспортируемый интерфейс модуля
__all__ = [
    "SNFDecomposition",
    "smith_normal_form",
    "unimodular_inverse",
]
