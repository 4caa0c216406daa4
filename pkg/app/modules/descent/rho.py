"""
## Стягивающие гомотопии `ρ` строк чеховского комплекса.

В двойственной форме `(ρf)(α_1 … α_q|σ) = Σ_α η_α(σ) f(α, α_1 … α_q|σ)`,
а на уровне `0` — `(ρf)(σ) = Σ_α η_α(σ) f(α|σ)`. Для сечения `τ`
вес сосредоточен на `τ(σ)`. Тождества:

- `ρ∘υ* = id` на `C^p(M)`;
- `υ*∘ρ + ρ∘δ = id` на `C^p(U)`;
- `δ∘ρ + ρ∘δ = id` на `C^p(U^{[q]})` при `q ≥ 1`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from typing import Callable, Sequence

from ..chaincat import ChainHomotopy, ChainMap
from ..exactalg import RatMatrix, Vector, as_vector
from ..exceptions import CertificateError, DegreeOverflowError, DepthExceededError, WeightSupportError
from ..logging import get_json_app_logger
from .cech import CechDoubleComplex, CechLevels
from .cover import PartitionOfUnity


logger = get_json_app_logger(__name__)

Weights = Callable[[str], dict[int, Fraction]]


class RhoOperator:
    """
    ## Оператор `ρ: C^p(U^{[q]}) → C^p(U^{[q−1]})` с весами `η_α(σ)`.

    Уровень `−1` обозначает `M`.

    Attributes:
        double (CechDoubleComplex): Двойной комплекс покрытия.
        weights (Weights): Веса по симплексам базы.
    """

    def __init__(self, double: CechDoubleComplex, weights: Weights) -> None:
        self.double = double
        self.weights = weights
        self.matrix = cache(self._matrix)

    @property
    def levels(self) -> CechLevels:
        return self.double.levels  # type: ignore[return-value]

    def _matrix(self, q: int, p: int) -> RatMatrix:
        """Матрица `ρ` из уровня `q` в уровень `q − 1`."""
        if not 0 <= q <= self.levels.depth:
            raise DepthExceededError(q, self.levels.depth)
        if not 0 <= p <= self.double.max_p:
            raise DegreeOverflowError(p, self.double.max_p)
        levels = self.levels
        source = levels.level(q)
        if q == 0:
            targets = [((), s) for s in self.double.cover.base.simplices(p)]
        else:
            targets = [self._untag(tagged) for tagged in levels.level(q - 1).simplices(p)]
        rows = []
        for indices, simplex_id in targets:
            row = [Fraction(0)] * source.count(p)
            for alpha, weight in self.weights(simplex_id).items():
                tagged = levels.tag((alpha,) + indices, simplex_id)
                if tagged not in source:
                    raise CertificateError("rho_support", f"{tagged} вне уровня {q}")
                row[source.index_of(tagged)] += weight
            rows.append(row)
        return RatMatrix.from_rows(rows, source.count(p))

    def _untag(self, tagged: str) -> tuple[tuple[int, ...], str]:
        names, simplex_id = tagged.split("|", 1)
        cover = self.double.cover
        return tuple(cover.names.index(n) for n in names.split(",")), simplex_id

    def apply(self, q: int, p: int, vector: Sequence[object]) -> Vector:
        return self.matrix(q, p).apply(vector)

    def primitive(self, q: int, p: int, cocycle: Sequence[object]) -> Vector:
        """
        ## Первообразная `ρx` строчного коцикла `x` уровня `q ≥ 1`.

        Raises:
            CertificateError: `δ(ρx) ≠ x`.
        """
        result = self.apply(q, p, cocycle)
        image = self.double.horizontal(q - 1, p).apply(result)
        if image != as_vector(cocycle):
            raise CertificateError("row_acyclic", f"δρx ≠ x на уровне {q}, степень {p}")
        return result

    def check_identities(self, p: int) -> int:
        """
        ## Проверяет три тождества `ρ` в строке `p`.

        Returns:
            int: Число проверенных матричных тождеств.

        Raises:
            CertificateError: С названием нарушенного тождества.
        """
        double = self.double
        depth = self.levels.depth
        checked = 0
        base_count = double.cover.base.count(p)
        if self.matrix(0, p) @ double.upsilon(p) != RatMatrix.identity(base_count):
            self._fail("rho_upsilon", p, 0)
        checked += 1
        if depth >= 1:
            left = double.upsilon(p) @ self.matrix(0, p) + self.matrix(1, p) @ double.horizontal(0, p)
            if left != RatMatrix.identity(double.column(0).dim(p)):
                self._fail("rho_augmented", p, 0)
            checked += 1
        for q in range(1, depth):
            left = double.horizontal(q - 1, p) @ self.matrix(q, p) + self.matrix(q + 1, p) @ double.horizontal(q, p)
            if left != RatMatrix.identity(double.column(q).dim(p)):
                self._fail("rho_homotopy", p, q)
            checked += 1
        return checked

    def row_homotopy(self, p: int) -> ChainHomotopy:
        """
        ## `ρ` как стягивающая гомотопия аугментированной строки `p`.

        Компоненты `k^{q+1} = ρ: C^p(U^{[q]}) → C^p(U^{[q−1]})` дают
        `dk + kd = id − 0` во всех степенях строки, кроме последней.
        Строка берётся над ℚ, если веса `ρ` нецелые.

        Raises:
            NotAHomotopyError: Тождество гомотопии нарушено.
        """
        depth = self.levels.depth
        components = [RatMatrix.zeros(0, self.double.cover.base.count(p))]
        components += [self.matrix(q, p) for q in range(depth + 1)]
        integral = all(entry.denominator == 1 for m in components for entry in m.entries)
        row = self.double.row_complex(p, None if integral else "Q")
        return ChainHomotopy(ChainMap.zero(row, row), ChainMap.identity(row), components, valid_through=depth)

    def _fail(self, check: str, p: int, q: int) -> None:
        err = CertificateError(check, f"строка {p}, уровень {q}")
        logger.error(
            "Тождество гомотопии нарушено",
            exc_info=err,
            extra={"operation": "rho_identities", "details": {"check": check, "p": p, "q": q}},
        )
        raise err


def rho_section(double: CechDoubleComplex) -> RhoOperator:
    """`ρ`, сосредоточенный на `τ(σ)`."""
    cover = double.cover
    return RhoOperator(double, lambda simplex_id: {cover.section(simplex_id): Fraction(1)})


def rho_partition(double: CechDoubleComplex, partition: PartitionOfUnity) -> RhoOperator:
    """
    ## `ρ` с весами разбиения единицы.

    Raises:
        WeightSupportError: Разбиение задано для другого покрытия.
    """
    if partition.cover is not double.cover:
        raise WeightSupportError("*", "разбиение задано для другого покрытия")
    return RhoOperator(double, partition.simplex_weights)


# Экспортируемый интерфейс модуля
__all__ = [
    "RhoOperator",
    "rho_section",
    "rho_partition",
]
