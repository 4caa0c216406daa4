"""
## Базисы циклов, согласованные с границами.

Базис решётки циклов `Z_k` выбирается так, что подрешётка границ
`B_k` порождена кратными `d_i z_i` первых базисных векторов. Это та же
нормальная форма Смита, что даёт `H_k = ℤ^{free} ⊕ ⊕ ℤ/d_i`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from ..exactalg import IntMatrix, RatMatrix, integer_kernel, smith_normal_form, solve_rational, unimodular_inverse
from ..exceptions import NotACycleError
from ..logging import get_json_app_logger
from .cochain import Chain
from .delta import DeltaComplex
from .operations import boundary


logger = get_json_app_logger(__name__)


@dataclass(frozen=True, eq=False)
class CycleBasis:
    """
    ## Согласованный базис `k`-циклов.

    Attributes:
        space (DeltaComplex): Комплекс.
        degree (int): Размерность циклов `k`.
        generators (tuple[Chain, ...]): ℤ-базис решётки `Z_k`.
        divisors (tuple[int, ...]): Для каждого образующего `z_i` число
            `d_i`, для которого `d_i z_i` — граница; 0 у свободных классов.
        witnesses (tuple[Chain | None, ...]): `(k+1)`-цепи `w_i` с
            `∂w_i = d_i z_i` (или `None` при `d_i = 0`).
    """
    space: DeltaComplex
    degree: int
    generators: tuple[Chain, ...]
    divisors: tuple[int, ...]
    witnesses: tuple[Chain | None, ...]

    @property
    def free(self) -> tuple[Chain, ...]:
        """Образующие свободной части гомологий."""
        return tuple(z for z, d in zip(self.generators, self.divisors) if d == 0)

    @property
    def torsion(self) -> tuple[tuple[Chain, int], ...]:
        return tuple((z, d) for z, d in zip(self.generators, self.divisors) if d > 1)

    @property
    def boundaries(self) -> tuple[Chain, ...]:
        return tuple(z for z, d in zip(self.generators, self.divisors) if d == 1)

    def coordinates(self, z: Chain) -> tuple[int, ...]:
        """
        ## Координаты цикла в базисе `generators`.

        Raises:
            NotACycleError: `z` не является циклом.
        """
        if z.degree != self.degree:
            raise NotACycleError(f"размерность {z.degree}")
        if z.degree > 0:
            residual = boundary(z)
            if not residual.is_zero():
                raise NotACycleError(next(iter(residual.support())))
        if not self.generators:
            return ()
        matrix = RatMatrix.from_columns([g.coefficients for g in self.generators], self.space.count(self.degree))
        solution = solve_rational(matrix, z.coefficients)
        if solution is None:
            raise NotACycleError(next(iter(z.support()), "?"))
        return tuple(int(c) for c in solution)


def cycle_basis(space: DeltaComplex, degree: int) -> CycleBasis:
    """
    ## Строит согласованный базис `degree`-циклов.

    1. `Z` — ℤ-базис ядра `∂_k` (столбцы из формы Смита).
    2. Граничная матрица `Q` записывает столбцы `∂_{k+1}` в базисе `Z`.
    3. Из `U Q V = S` новый базис равен `Z U^{−1}`, а
       `∂(V e_i) = S_ii · z'_i`.

    Args:
        space (DeltaComplex): Комплекс.
        degree (int): Размерность циклов.

    Returns:
        CycleBasis: Базис с делителями и свидетелями.
    """
    return _cycle_basis(space, degree)


@cache
def _cycle_basis(space: DeltaComplex, degree: int) -> CycleBasis:
    n = space.count(degree)
    if degree == 0:
        kernel = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    else:
        kernel = integer_kernel(space.boundary_matrix(degree))
    if not kernel:
        return CycleBasis(space, degree, (), (), ())

    z_matrix = IntMatrix.from_columns(kernel, n)
    next_boundary = space.boundary_matrix(degree + 1)
    columns = []
    for j in range(next_boundary.cols):
        coordinates = solve_rational(z_matrix, next_boundary.column(j))
        columns.append(tuple(int(c) for c in coordinates))  # type: ignore[union-attr]
    q = IntMatrix.from_columns(columns, len(kernel)) if columns else IntMatrix.zeros(len(kernel), 0)

    decomposition = smith_normal_form(q)
    adapted = z_matrix @ unimodular_inverse(decomposition.U)
    diagonal = decomposition.diagonal
    generators, divisors, witnesses = [], [], []
    for i in range(len(kernel)):
        generators.append(Chain.from_vector(space, degree, adapted.column(i)))
        d = diagonal[i] if i < len(diagonal) else 0
        divisors.append(d)
        witnesses.append(Chain.from_vector(space, degree + 1, decomposition.V.column(i)) if d else None)

    logger.debug(
        "Базис циклов построен",
        extra={"operation": "cycle_basis", "details": {"degree": degree, "rank": len(kernel), "divisors": divisors}},
    )
    return CycleBasis(space, degree, tuple(generators), tuple(divisors), tuple(witnesses))


def fundamental_cycle(space: DeltaComplex) -> Chain | None:
    """
    ## Целочисленный фундаментальный цикл.

    Возвращает образующий решётки циклов старшей размерности, если она
    имеет ранг один, иначе `None`. Знак выбран так, что первый ненулевой
    коэффициент положителен.
    """
    top = space.dimension
    if top < 0:
        return None
    if top == 0:
        return Chain.from_vector(space, 0, (1,)) if space.count(0) == 1 else None
    kernel = integer_kernel(space.boundary_matrix(top))
    if len(kernel) != 1:
        return None
    vector = kernel[0]
    sign = -1 if next(v for v in vector if v) < 0 else 1
    return Chain.from_vector(space, top, tuple(sign * v for v in vector))


# Экспортируемый интерфейс модуля
__all__ = [
    "CycleBasis",
    "cycle_basis",
    "fundamental_cycle",
]
