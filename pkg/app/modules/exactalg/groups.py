"""
## Представления конечно порождённых абелевых групп и когомологии.

Группа описывается как `ℤ^a ⊕ ℤ/t_1 ⊕ … ⊕ ℚ^b ⊕ (ℚ/ℤ)^c`. Такие группы
возникают как когомологии целочисленных комплексов, комплексов со
смешанными ℤ/ℚ-координатами и как когомологии с коэффициентами в ℚ/ℤ.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

from ..exceptions import CompositionNotZeroError, DimensionMismatchError
from ..logging import get_json_app_logger
from .matrices import IntMatrix, RatMatrix, Vector, as_vector
from .snf import smith_normal_form
from .solve import integer_kernel, rational_nullspace, rational_rank, solve_rational


logger = get_json_app_logger(__name__)


def normalize_torsion(orders: Sequence[int]) -> tuple[int, ...]:
    """
    ## Приводит набор порядков циклических групп к цепочке делимости.

    `ℤ/2 ⊕ ℤ/3` становится `ℤ/6`; единицы отбрасываются.
    """
    values = [abs(int(x)) for x in orders if abs(int(x)) != 1]
    if any(v == 0 for v in values):
        raise DimensionMismatchError("нулевой порядок в списке кручения")
    if not values:
        return ()
    diagonal = IntMatrix.from_rows(
        [[values[i] if i == j else 0 for j in range(len(values))] for i in range(len(values))]
    )
    return smith_normal_form(diagonal).torsion


@dataclass(frozen=True)
class AbGroupPresentation:
    """
    ## Представление абелевой группы.

    Attributes:
        free_rank (int): Число слагаемых ℤ.
        torsion (tuple[int, ...]): Порядки циклических слагаемых, каждый
            не меньше 2 и делит следующий.
        divisible_rank (int): Число слагаемых ℚ/ℤ.
        rational_rank (int): Число слагаемых ℚ.
    """
    free_rank: int = 0
    torsion: tuple[int, ...] = field(default_factory=tuple)
    divisible_rank: int = 0
    rational_rank: int = 0

    def __post_init__(self) -> None:
        if min(self.free_rank, self.divisible_rank, self.rational_rank) < 0:
            raise DimensionMismatchError("отрицательный ранг в представлении группы")
        torsion = tuple(int(t) for t in self.torsion)
        if any(t < 2 for t in torsion) or any(b % a for a, b in zip(torsion, torsion[1:])):
            raise DimensionMismatchError(f"нарушена цепочка делимости кручения {torsion}")
        object.__setattr__(self, "torsion", torsion)

    @classmethod
    def trivial(cls) -> "AbGroupPresentation":
        return cls()

    @classmethod
    def of(
        cls,
        free_rank: int = 0,
        torsion: Sequence[int] = (),
        divisible_rank: int = 0,
        rational_rank: int = 0,
    ) -> "AbGroupPresentation":
        """Строит представление, нормализуя произвольный список кручения."""
        return cls(free_rank, normalize_torsion(torsion), divisible_rank, rational_rank)

    @property
    def is_trivial(self) -> bool:
        return not (self.free_rank or self.torsion or self.divisible_rank or self.rational_rank)

    @property
    def is_finite(self) -> bool:
        return not (self.free_rank or self.divisible_rank or self.rational_rank)

    @property
    def order(self) -> int | None:
        """Порядок группы, если она конечна."""
        if not self.is_finite:
            return None
        result = 1
        for t in self.torsion:
            result *= t
        return result

    def direct_sum(self, other: "AbGroupPresentation") -> "AbGroupPresentation":
        return AbGroupPresentation.of(
            self.free_rank + other.free_rank,
            self.torsion + other.torsion,
            self.divisible_rank + other.divisible_rank,
            self.rational_rank + other.rational_rank,
        )

    def __str__(self) -> str:
        parts: list[str] = []
        if self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        if self.rational_rank:
            parts.append(f"Q^{self.rational_rank}")
        if self.divisible_rank:
            parts.append(f"(Q/Z)^{self.divisible_rank}")
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class IntCochainComplex:
    """
    ## Конечный коцепной комплекс свободных ℤ-модулей.

    Attributes:
        dims (tuple[int, ...]): Ранги `C^0, …, C^N`.
        differentials (tuple[IntMatrix, ...]): `d^k: C^k → C^{k+1}` для
            `k < N`; матрица `d^k` имеет размер `dims[k+1] × dims[k]`.
    """
    dims: tuple[int, ...]
    differentials: tuple[IntMatrix, ...]

    def __post_init__(self) -> None:
        if len(self.differentials) != max(len(self.dims) - 1, 0):
            raise DimensionMismatchError("число дифференциалов не равно числу степеней минус один")
        for k, d in enumerate(self.differentials):
            if d.shape != (self.dims[k + 1], self.dims[k]):
                raise DimensionMismatchError(f"d^{k} имеет размер {d.shape}")

    def dim(self, k: int) -> int:
        return self.dims[k] if 0 <= k < len(self.dims) else 0

    def d(self, k: int) -> IntMatrix:
        """Дифференциал `d^k`, включая нулевые матрицы за границами комплекса."""
        if 0 <= k < len(self.differentials):
            return self.differentials[k]
        return IntMatrix.zeros(self.dim(k + 1), self.dim(k))


def cohomology_int(d_prev: IntMatrix, d_next: IntMatrix) -> AbGroupPresentation:
    """
    ## Группа `ker(d_next) / im(d_prev)` над ℤ.

    Свободный ранг равен `dim C^n − rank d_next − rank d_prev`, кручение
    совпадает с кручением коядра `d_prev`, так как ядро `d_next` —
    насыщенная подрешётка.

    Args:
        d_prev (IntMatrix): `d^{n−1}: C^{n−1} → C^n`.
        d_next (IntMatrix): `d^n: C^n → C^{n+1}`.

    Returns:
        AbGroupPresentation: Представление `H^n`.
    """
    if d_prev.rows != d_next.cols:
        raise DimensionMismatchError(f"d_prev {d_prev.shape} и d_next {d_next.shape}")
    if d_prev.cols and d_next.rows and not (d_next @ d_prev).is_zero():
        raise CompositionNotZeroError(0)
    prev = smith_normal_form(d_prev)
    following = smith_normal_form(d_next)
    return AbGroupPresentation(
        free_rank=d_prev.rows - prev.rank - following.rank,
        torsion=prev.torsion,
    )


def cohomology_of(complex_: IntCochainComplex, n: int) -> AbGroupPresentation:
    if n < 0:
        return AbGroupPresentation.trivial()
    d_prev, d_next = complex_.d(n - 1), complex_.d(n)
    if d_prev.cols and d_next.rows and not (d_next @ d_prev).is_zero():
        raise CompositionNotZeroError(n)
    return cohomology_int(d_prev, d_next)


def cohomology_qz(complex_: IntCochainComplex, n: int) -> AbGroupPresentation:
    """
    ## Когомологии с коэффициентами ℚ/ℤ по формуле универсальных коэффициентов.

    `H^n(C ⊗ ℚ/ℤ) ≅ (ℚ/ℤ)^{rank H^n} ⊕ tors H^{n+1}`. Кручение
    `H^{n+1}` равно кручению коядра `d^n`, поэтому дифференциал `d^{n+1}`
    не нужен.
    """
    if n < 0:
        return AbGroupPresentation.trivial()
    h_n = cohomology_of(complex_, n)
    torsion_next = smith_normal_form(complex_.d(n)).torsion
    result = AbGroupPresentation(divisible_rank=h_n.free_rank, torsion=torsion_next)
    logger.debug(
        "Когомологии с коэффициентами Q/Z",
        extra={"operation": "cohomology_qz", "details": {"degree": n, "group": str(result)}},
    )
    return result


def cohomology_rational(complex_: IntCochainComplex, n: int) -> AbGroupPresentation:
    if n < 0:
        return AbGroupPresentation.trivial()
    rank = complex_.dim(n) - rational_rank(complex_.d(n)) - rational_rank(complex_.d(n - 1))
    return AbGroupPresentation(rational_rank=rank)


def _scaled_integer_rows(vectors: Sequence[Vector], width: int) -> tuple[IntMatrix, int]:
    denominator = lcm(1, *(x.denominator for vector in vectors for x in vector))
    rows = [[int(x * denominator) for x in vector] for vector in vectors]
    return IntMatrix.from_rows(rows, width), denominator


def mixed_quotient(
    cycles_integral: Sequence[Sequence[object]],
    cycles_rational: Sequence[Sequence[object]],
    relations_integral: Sequence[Sequence[object]],
    relations_rational: Sequence[Sequence[object]],
    ambient: int,
) -> AbGroupPresentation:
    """
    ## Представление фактора `K / R` подгрупп `ℚ^N`.

    `K = ℤ⟨cycles_integral⟩ + ℚ⟨cycles_rational⟩`,
    `R = ℤ⟨relations_integral⟩ + ℚ⟨relations_rational⟩`, причём `R ⊆ K`.

    1. Проекция `Π` убивает ℚ-оболочку рациональных соотношений.
    2. Для `K` строится независимый базис: `m` целых образующих,
       независимых по модулю ℚ-части, и базис ℚ-части размерности `l`.
    3. Соотношения раскладываются в этом базисе: целые координаты `Y`,
       рациональные `Z`. Тогда свободный ранг равен `m − rank Y`, кручение
       даёт форма Смита `Y`, а ранг `r0` ℚ-оболочки `{u·Z : u·Y = 0, u ∈ ℤ}`
       даёт `(ℚ/ℤ)^{r0} ⊕ ℚ^{l − r0}`.

    Returns:
        AbGroupPresentation: Представление фактор-группы.
    """
    k_int = [as_vector(v) for v in cycles_integral]
    k_rat = [as_vector(v) for v in cycles_rational]
    r_int = [as_vector(v) for v in relations_integral]
    r_rat = [as_vector(v) for v in relations_rational]
    for vector in (*k_int, *k_rat, *r_int, *r_rat):
        if len(vector) != ambient:
            raise DimensionMismatchError(f"вектор длины {len(vector)} в пространстве {ambient}")

    # 1. Проекция вдоль ℚ-части соотношений
    if r_rat:
        functionals = rational_nullspace(RatMatrix.from_rows([list(v) for v in r_rat], ambient))
        projection = RatMatrix.from_rows([list(f) for f in functionals], ambient)
        k_int = [projection.apply(v) for v in k_int]
        k_rat = [projection.apply(v) for v in k_rat]
        r_int = [projection.apply(v) for v in r_int]
        width = projection.rows
    else:
        width = ambient

    # 2. Базис ℚ-части K и целые образующие, независимые по модулю неё
    rational_basis: list[Vector] = []
    for vector in k_rat:
        candidate = rational_basis + [vector]
        if rational_rank(RatMatrix.from_rows([list(v) for v in candidate], width)) == len(candidate):
            rational_basis.append(vector)

    if rational_basis:
        killers = rational_nullspace(RatMatrix.from_rows([list(v) for v in rational_basis], width))
        quotient_map = RatMatrix.from_rows([list(f) for f in killers], width)
    else:
        quotient_map = RatMatrix.identity(width)

    integral_basis: list[Vector] = []
    if k_int:
        images = [quotient_map.apply(v) for v in k_int]
        scaled, _ = _scaled_integer_rows(images, quotient_map.rows)
        decomposition = smith_normal_form(scaled)
        for i in range(decomposition.rank):
            combination = decomposition.U.row(i)
            integral_basis.append(
                tuple(sum((c * v[j] for c, v in zip(combination, k_int)), Fraction(0)) for j in range(width))
            )

    m, l = len(integral_basis), len(rational_basis)

    # 3. Координаты соотношений в базисе K
    if not r_int:
        result = AbGroupPresentation(free_rank=m, rational_rank=l)
    else:
        basis_matrix = RatMatrix.from_columns(integral_basis + rational_basis, width)
        y_rows: list[list[int]] = []
        z_rows: list[Vector] = []
        for relation in r_int:
            coordinates = solve_rational(basis_matrix, relation)
            if coordinates is None or any(c.denominator != 1 for c in coordinates[:m]):
                raise DimensionMismatchError("соотношение не лежит в подгруппе циклов")
            y_rows.append([int(c) for c in coordinates[:m]])
            z_rows.append(coordinates[m:])
        y = IntMatrix.from_rows(y_rows, m)
        y_snf = smith_normal_form(y)
        r0 = 0
        if l:
            combos = integer_kernel(y.transpose())
            images = [
                tuple(sum((u * z[j] for u, z in zip(combo, z_rows)), Fraction(0)) for j in range(l))
                for combo in combos
            ]
            r0 = rational_rank(RatMatrix.from_rows([list(v) for v in images], l)) if images else 0
        result = AbGroupPresentation(
            free_rank=m - y_snf.rank,
            torsion=y_snf.torsion,
            divisible_rank=r0,
            rational_rank=l - r0,
        )
    logger.debug(
        "Фактор смешанных подгрупп",
        extra={
            "operation": "mixed_quotient",
            "details": {"ambient": ambient, "integral": m, "rational": l, "group": str(result)},
        },
    )
    return result


# Экспортируемый интерфейс модуля
__all__ = [
    "AbGroupPresentation",
    "IntCochainComplex",
    "normalize_torsion",
    "cohomology_int",
    "cohomology_of",
    "cohomology_qz",
    "cohomology_rational",
    "mixed_quotient",
]
