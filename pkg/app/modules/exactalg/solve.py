"""
## Точные линейные системы над ℚ, ℤ и смешанные ℤ/ℚ-системы.

Рациональная часть опирается на `DomainMatrix.rref` над `QQ`,
целочисленная — на нормальную форму Смита.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from ..exceptions import DimensionMismatchError
from ..logging import get_json_app_logger
from .matrices import IntMatrix, RatMatrix, Vector, as_fraction, as_vector, from_domain_matrix
from .snf import smith_normal_form


logger = get_json_app_logger(__name__)


def rational_rref(matrix: RatMatrix) -> tuple[RatMatrix, tuple[int, ...]]:
    """
    ## Приведённая ступенчатая форма над ℚ.

    Returns:
        tuple[RatMatrix, tuple[int, ...]]: Форма и индексы ведущих столбцов.
    """
    if matrix.rows == 0 or matrix.cols == 0 or matrix.is_zero():
        return matrix.to_rational(), ()
    reduced, pivots = matrix.to_domain_matrix().rref()
    return from_domain_matrix(reduced), tuple(int(p) for p in pivots)


def rational_rank(matrix: RatMatrix | IntMatrix) -> int:
    return len(rational_rref(matrix.to_rational())[1])


def rational_nullspace(matrix: RatMatrix | IntMatrix) -> list[Vector]:
    """
    ## Базис ядра матрицы над ℚ.

    Базис строится по свободным столбцам приведённой формы: свободная
    переменная равна единице, остальные свободные — нулю.
    """
    reduced, pivots = rational_rref(matrix.to_rational())
    free = [j for j in range(matrix.cols) if j not in pivots]
    basis: list[Vector] = []
    for f in free:
        vector = [Fraction(0)] * matrix.cols
        vector[f] = Fraction(1)
        for row, p in enumerate(pivots):
            vector[p] = -reduced[row, f]
        basis.append(tuple(vector))
    return basis


def solve_rational(matrix: RatMatrix | IntMatrix, target: Sequence[object]) -> Vector | None:
    """
    ## Решает `A x = v` над ℚ.

    Args:
        matrix (RatMatrix | IntMatrix): Матрица `A`.
        target (Sequence): Правая часть `v`.

    Returns:
        Vector | None: Какое-либо решение или `None`, если система несовместна.
    """
    v = as_vector(target)
    if len(v) != matrix.rows:
        raise DimensionMismatchError(f"правая часть длины {len(v)} для {matrix.rows} уравнений")
    if matrix.cols == 0:
        return () if all(x == 0 for x in v) else None
    augmented = matrix.to_rational().hstack(RatMatrix.from_rows([[x] for x in v], 1))
    reduced, pivots = rational_rref(augmented)
    if matrix.cols in pivots:
        return None
    solution = [Fraction(0)] * matrix.cols
    for row, p in enumerate(pivots):
        solution[p] = reduced[row, matrix.cols]
    return tuple(solution)


def solve_integer(matrix: IntMatrix, target: Sequence[object]) -> tuple[int, ...] | None:
    """
    ## Решает диофантову систему `A x = v` через нормальную форму Смита.

    Из `U A V = S` следует, что `x = V y`, где `S y = U v`; решение
    существует, если каждый `(U v)_i` делится на `S_ii`, а компоненты за
    пределами ранга равны нулю.
    """
    v = as_vector(target)
    if len(v) != matrix.rows:
        raise DimensionMismatchError(f"правая часть длины {len(v)} для {matrix.rows} уравнений")
    decomposition = smith_normal_form(matrix)
    uv = decomposition.U.apply(v)
    diagonal = decomposition.diagonal
    y: list[int] = []
    for i in range(matrix.cols):
        d = diagonal[i] if i < len(diagonal) else 0
        if d == 0:
            y.append(0)
            continue
        quotient = uv[i] / d
        if quotient.denominator != 1:
            return None
        y.append(int(quotient))
    for i in range(matrix.rows):
        d = diagonal[i] if i < len(diagonal) else 0
        if d == 0 and uv[i] != 0:
            return None
    x = decomposition.V.apply(y)
    return tuple(int(value) for value in x)


def integer_kernel(matrix: IntMatrix) -> list[tuple[int, ...]]:
    """
    ## Базис решётки `ker A ∩ ℤ^n`.

    Последние `n − rank` столбцов `V` из разложения Смита образуют
    ℤ-базис ядра.
    """
    decomposition = smith_normal_form(matrix)
    rank = decomposition.rank
    return [tuple(int(x) for x in decomposition.V.column(j)) for j in range(rank, matrix.cols)]


def integralize_rows(matrix: RatMatrix, target: Sequence[Fraction]) -> tuple[IntMatrix, tuple[int, ...]]:
    """Умножает каждое уравнение на общий знаменатель строки."""
    rows: list[list[int]] = []
    values: list[int] = []
    for i in range(matrix.rows):
        row = matrix.row(i)
        scale = lcm(*(x.denominator for x in row), target[i].denominator) if row else target[i].denominator
        rows.append([int(x * scale) for x in row])
        values.append(int(target[i] * scale))
    return IntMatrix.from_rows(rows, matrix.cols), tuple(values)


@dataclass(frozen=True)
class MixedKernel:
    """
    ## Ядро смешанной системы `A x_Z + B x_Q = 0`.

    Ядро равно ℤ-оболочке `integral` плюс ℚ-оболочке `rational`; каждый
    образующий — пара (целая часть, рациональная часть).
    """
    integral: tuple[tuple[Vector, Vector], ...]
    rational: tuple[tuple[Vector, Vector], ...]


def _left_null_projection(b: RatMatrix) -> RatMatrix:
    if b.cols == 0:
        return RatMatrix.identity(b.rows)
    basis = rational_nullspace(b.transpose())
    return RatMatrix.from_rows([list(vec) for vec in basis], b.rows)


def _check_mixed_shapes(a: RatMatrix | IntMatrix, b: RatMatrix | IntMatrix) -> None:
    if a.rows != b.rows:
        raise DimensionMismatchError(f"A имеет {a.rows} строк, B имеет {b.rows}")


def solve_mixed(
    a: IntMatrix | RatMatrix,
    b: RatMatrix | IntMatrix,
    target: Sequence[object],
) -> tuple[tuple[int, ...], Vector] | None:
    """
    ## Решает `A x_Z + B x_Q = v` с целыми `x_Z` и рациональными `x_Q`.

    1. Строки `P` образуют базис левого ядра `B`, так что `P B = 0`.
    2. Целая часть ищется как решение `P A x_Z = P v` над ℤ (уравнения
       предварительно домножаются на знаменатели).
    3. Рациональная часть решает `B x_Q = v − A x_Z`; эта система
       совместна, так как `v − A x_Z` лежит в образе `B`.

    Решение точное: `None` означает, что решений нет.

    Args:
        a (IntMatrix | RatMatrix): Коэффициенты при целых неизвестных.
        b (RatMatrix | IntMatrix): Коэффициенты при рациональных неизвестных.
        target (Sequence): Правая часть `v`.

    Returns:
        tuple | None: Пара `(x_Z, x_Q)` или `None`.
    """
    _check_mixed_shapes(a, b)
    v = as_vector(target)
    if len(v) != a.rows:
        raise DimensionMismatchError(f"правая часть длины {len(v)} для {a.rows} уравнений")

    a_rat, b_rat = a.to_rational(), b.to_rational()
    projection = _left_null_projection(b_rat)
    projected = projection @ a_rat if a.cols else RatMatrix.zeros(projection.rows, 0)
    projected_target = projection.apply(v)

    if a.cols == 0:
        if any(x != 0 for x in projected_target):
            return None
        x_int: tuple[int, ...] = ()
    else:
        int_matrix, int_target = integralize_rows(projected.to_rational(), projected_target)
        solution = solve_integer(int_matrix, int_target)
        if solution is None:
            logger.debug(
                "Смешанная система несовместна над ℤ",
                extra={"operation": "solve_mixed", "details": {"shape": [a.rows, a.cols, b.cols]}},
            )
            return None
        x_int = solution

    residual = tuple(x - y for x, y in zip(v, a_rat.apply(x_int))) if a.cols else v
    x_rat = solve_rational(b_rat, residual)
    if x_rat is None:
        return None
    return x_int, x_rat


def mixed_kernel(a: IntMatrix | RatMatrix, b: RatMatrix | IntMatrix) -> MixedKernel:
    """
    ## Образующие ядра `A x_Z + B x_Q = 0`.

    Рациональные образующие — `(0, n)` для базиса `n` ядра `B`. Целые
    образующие — целочисленный базис `y` ядра `P A` вместе с каким-либо
    `x_Q`, для которого `B x_Q = −A y`.
    """
    _check_mixed_shapes(a, b)
    a_rat, b_rat = a.to_rational(), b.to_rational()
    zero_int: Vector = tuple(Fraction(0) for _ in range(a.cols))

    rational = tuple((zero_int, vec) for vec in rational_nullspace(b_rat)) if b.cols else ()

    integral: list[tuple[Vector, Vector]] = []
    if a.cols:
        projection = _left_null_projection(b_rat)
        projected = projection @ a_rat
        int_matrix, _ = integralize_rows(projected.to_rational(), (Fraction(0),) * projected.rows)
        for y in integer_kernel(int_matrix):
            rhs = tuple(-x for x in a_rat.apply(y))
            x_rat = solve_rational(b_rat, rhs)
            if x_rat is None:
                raise DimensionMismatchError("ядро P·A не согласовано с образом B")
            integral.append((as_vector(y), x_rat))
    return MixedKernel(integral=tuple(integral), rational=rational)


def in_rational_span(vectors: Sequence[Sequence[object]], target: Sequence[object]) -> bool:
    """Проверяет, лежит ли `target` в ℚ-оболочке `vectors`."""
    size = len(target)
    if not vectors:
        return all(as_fraction(x) == 0 for x in target)
    matrix = RatMatrix.from_columns([as_vector(v) for v in vectors], size)
    return solve_rational(matrix, target) is not None


# Экспортируемый интерфейс модуля
__all__ = [
    "MixedKernel",
    "rational_rref",
    "rational_rank",
    "rational_nullspace",
    "solve_rational",
    "solve_integer",
    "integer_kernel",
    "integralize_rows",
    "solve_mixed",
    "mixed_kernel",
    "in_rational_span",
]
