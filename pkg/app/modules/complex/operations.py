"""
## Кограница, граница и спаривание коцепей с цепями.
"""

from __future__ import annotations

from fractions import Fraction

from ..exceptions import DegreeMismatchError, DegreeOverflowError
from .cochain import Chain, Cochain, reduce_mod_one


def coboundary(x: Cochain) -> Cochain:
    """
    ## Кограница `(dx)(σ) = Σ_i (−1)^i x(∂_i σ)`.

    Args:
        x (Cochain): Коцепь степени `n < dim`.

    Returns:
        Cochain: Коцепь степени `n + 1` в том же кольце.

    Raises:
        DegreeOverflowError: Степень `x` не меньше размерности комплекса.
    """
    space = x.space
    if x.degree >= space.dimension:
        raise DegreeOverflowError(x.degree + 1, space.dimension)
    values = []
    for simplex_id in space.simplices(x.degree + 1):
        values.append(sum(
            ((-1) ** i * x[face] for i, face in enumerate(space.faces(simplex_id))),
            Fraction(0),
        ))
    return Cochain(space, x.degree + 1, x.ring, tuple(values))


def boundary(z: Chain) -> Chain:
    """Граница `∂σ = Σ_i (−1)^i ∂_i σ`, продолженная по линейности."""
    space = z.space
    if z.degree == 0:
        raise DegreeOverflowError(-1, 0)
    mapping: dict[str, int] = {}
    for simplex_id, coefficient in z.items():
        if not coefficient:
            continue
        for i, face in enumerate(space.faces(simplex_id)):
            mapping[face] = mapping.get(face, 0) + (-1) ** i * coefficient
    return Chain.from_mapping(space, z.degree - 1, mapping)


def evaluate(x: Cochain, z: Chain) -> Fraction:
    """
    ## Значение коцепи на цепи.

    Для ℚ/ℤ-коцепи результат приводится к `[0, 1)`.

    Raises:
        DegreeMismatchError: Степени коцепи и цепи различны.
    """
    if x.degree != z.degree:
        raise DegreeMismatchError(x.degree, z.degree)
    total = sum((value * coefficient for value, coefficient in zip(x.values, z.coefficients)), Fraction(0))
    return reduce_mod_one(total) if x.ring == "QZ" else total


def is_cocycle(x: Cochain) -> bool:
    if x.degree >= x.space.dimension:
        return True
    return coboundary(x).is_zero()


def is_cycle(z: Chain) -> bool:
    if z.degree == 0:
        return True
    return boundary(z).is_zero()


# Экспортируемый интерфейс модуля
__all__ = [
    "coboundary",
    "boundary",
    "evaluate",
    "is_cocycle",
    "is_cycle",
]
