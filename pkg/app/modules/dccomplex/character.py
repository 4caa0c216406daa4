"""
## Дифференциальные характеры.

Характер степени `k` — пара из кривизны `ω` (ℚ-коцепь степени `k`) и
голономии `χ` на `(k−1)`-циклах со значениями в ℚ/ℤ, для которой
`χ(∂S) ≡ ω(S) (mod ℤ)` на каждой `k`-цепи `S`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..complex import Chain, Cochain, CycleBasis, DeltaComplex, boundary, cycle_basis, evaluate, is_cocycle, reduce_mod_one
from ..exceptions import DegreeMismatchError, NotACocycleError
from ..logging import get_json_app_logger
from .dc import DCTriple


logger = get_json_app_logger(__name__)


@dataclass(frozen=True, eq=False)
class DiffCharacter:
    """
    ## Дифференциальный характер `(ω, χ)`.

    Attributes:
        space (DeltaComplex): Комплекс.
        degree (int): Степень `k` кривизны.
        curvature (Cochain | None): Кривизна; `None`, если `k`-симплексов нет.
        basis (CycleBasis): Базис `(k−1)`-циклов, на котором задана голономия.
        values (tuple[Fraction, ...]): Голономия на образующих базиса, в `[0, 1)`.
    """
    space: DeltaComplex
    degree: int
    curvature: Cochain | None
    basis: CycleBasis
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(reduce_mod_one(Fraction(v)) for v in self.values))

    @classmethod
    def flat(cls, a: Cochain) -> "DiffCharacter":
        """
        ## Плоский характер ℚ/ℤ-коцикла `a` степени `k − 1`.
        """
        if not is_cocycle(a):
            raise NotACocycleError("ℚ/ℤ-коцепь")
        k = a.degree + 1
        basis = cycle_basis(a.space, a.degree)
        curvature = Cochain.zero(a.space, k, "Q") if k <= a.space.dimension else None
        return cls(a.space, k, curvature, basis, tuple(evaluate(a, z) for z in basis.generators))

    def holonomy(self, z: Chain) -> Fraction:
        """
        ## Голономия на произвольном `(k−1)`-цикле.

        Raises:
            NotACycleError: `z` не цикл.
        """
        coordinates = self.basis.coordinates(z)
        return reduce_mod_one(sum((c * v for c, v in zip(coordinates, self.values)), Fraction(0)))

    def curvature_on(self, s: Chain) -> Fraction:
        if self.curvature is None:
            return Fraction(0)
        return evaluate(self.curvature, s)


def to_character(x: DCTriple) -> DiffCharacter:
    """
    ## Характер коцикла `x` степени `k` комплекса `DC•_k`.

    Кривизна — ω-компонента, голономия `χ(z) = h(z) mod ℤ`.

    Raises:
        NotACocycleError: `x` не замкнута.
    """
    dc = x.complex
    if not dc.is_cocycle(x):
        raise NotACocycleError(f"тройка степени {x.degree}")
    k = x.degree
    space = dc.space
    basis = cycle_basis(space, k - 1)
    h = x.h if x.h is not None else Cochain.zero(space, k - 1, "Q")
    values = tuple(reduce_mod_one(evaluate(h, z)) for z in basis.generators)
    curvature = x.omega if x.omega is not None else (Cochain.zero(space, k, "Q") if k <= space.dimension else None)
    character = DiffCharacter(space, k, curvature, basis, values)
    logger.debug(
        "Характер построен",
        extra={"operation": "to_character", "details": {"degree": k, "holonomy": [str(v) for v in character.values]}},
    )
    return character


def character_check(ch: DiffCharacter) -> bool:
    """
    ## Проверяет `χ(∂S) ≡ ω(S) (mod ℤ)` на каждом `k`-симплексе `S`.
    """
    space = ch.space
    for simplex_id in space.simplices(ch.degree) if ch.degree <= space.dimension else ():
        s = Chain.simplex(space, simplex_id)
        lhs = ch.holonomy(boundary(s))
        rhs = reduce_mod_one(ch.curvature_on(s))
        if lhs != rhs:
            logger.debug(
                "Нарушено условие характера",
                extra={"operation": "character_check", "details": {"simplex": simplex_id, "chi": str(lhs), "omega": str(rhs)}},
            )
            return False
    return True


def holonomy(ch: DiffCharacter, z: Chain) -> Fraction:
    return ch.holonomy(z)


def characters_equal(a: DiffCharacter, b: DiffCharacter) -> bool:
    """
    ## Равенство характеров: одинаковая кривизна и голономия на базисе.
    """
    if a.space is not b.space or a.degree != b.degree:
        raise DegreeMismatchError(a.degree, b.degree)
    if (a.curvature is None) != (b.curvature is None):
        return False
    if a.curvature is not None and a.curvature.values != b.curvature.values:  # type: ignore[union-attr]
        return False
    if a.basis is b.basis:
        return a.values == b.values
    return all(a.holonomy(z) == b.holonomy(z) for z in b.basis.generators)


# Экспортируемый интерфейс модуля
__all__ = [
    "DiffCharacter",
    "to_character",
    "character_check",
    "holonomy",
    "characters_equal",
]
