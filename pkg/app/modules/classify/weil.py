"""
## Теорема Вейля: классы `H²(DC•_1)` и целые 2-коциклы.

Проекция `p(c, h, ω) = c` и явный подъём `c ↦ (c, h, ω)` с `dh = ω − c`.
Эквивариантный вариант работает на тотальных комплексах нерва; последний
шаг подъёма использует усреднение по группе.
"""

from __future__ import annotations

from typing import Sequence

from ..complex import Cochain, coboundary, is_cocycle
from ..dccomplex import DCComplex, DCTriple
from ..exactalg import Vector, as_vector, solve_integer, solve_rational
from ..exceptions import (
    CertificateError,
    CoefficientRingError,
    DegreeOverflowError,
    DimensionMismatchError,
    InsufficientDepthError,
    NoPrimitiveError,
    NotACocycleError,
    NotCohomologousError,
    PreconditionError,
)
from ..logging import get_json_app_logger
from ..nerve import DoubleComplex, NerveLevels, TotalComplex, avg_contract
from .internal import add_vectors, level_d, pack_slots, sub_vectors, unpack_slots


logger = get_json_app_logger(__name__)


def weil_project(x: DCTriple) -> Cochain:
    """
    ## Проекция `(c, h, ω) ↦ c` коцикла степени 2 комплекса `DC•_1`.

    Raises:
        NotACocycleError: `x` не замкнута.
        DegreeOverflowError: У комплекса нет 2-симплексов.
    """
    dc = x.complex
    if dc.s != 1 or x.degree != 2:
        raise DimensionMismatchError(f"ожидалась тройка степени 2 в DC_1, получена степень {x.degree} в DC_{dc.s}")
    if not dc.is_cocycle(x):
        raise NotACocycleError("тройка DC_1 степени 2")
    if x.c is None:
        raise DegreeOverflowError(2, dc.space.dimension)
    return x.c


def weil_lift(c: Cochain, omega: Cochain | None = None) -> DCTriple:
    """
    ## Подъём целого 2-коцикла до коцикла `DC•_1`.

    Args:
        c (Cochain): Целый 2-коцикл.
        omega (Cochain | None): Замкнутая ℚ-коцепь, когомологичная `c`
            над ℚ; по умолчанию `ω = c`.

    Returns:
        DCTriple: `(c, h, ω)` с `dh = ω − c`; при `ω = c` берётся `h = 0`.

    Raises:
        NotACocycleError: `dc ≠ 0` или `dω ≠ 0`.
        NotCohomologousError: Уравнение `dh = ω − c` не имеет решения.
    """
    if c.degree != 2 or c.ring != "Z":
        raise CoefficientRingError(c.ring, "подъём Вейля принимает целый 2-коцикл")
    space = c.space
    if not is_cocycle(c):
        raise NotACocycleError(next(iter(coboundary(c).support())))
    dc = DCComplex(space, 1)
    if omega is None:
        return dc.triple(2, c=c, omega=c.with_ring("Q"))
    if omega.space is not space or omega.degree != 2:
        raise DimensionMismatchError("ω задана на другом комплексе или в другой степени")
    omega = omega.with_ring("Q")
    if not is_cocycle(omega):
        raise NotACocycleError(next(iter(coboundary(omega).support())))
    difference = omega - c.with_ring("Q")
    h = solve_rational(space.coboundary_matrix(1), difference.values)
    if h is None:
        err = NotCohomologousError("ω и c задают разные классы над ℚ")
        logger.error(
            "Подъём Вейля невозможен",
            exc_info=err,
            extra={"operation": "weil_lift", "details": {"space": space.name}},
        )
        raise err
    return dc.triple(2, c=c, h=Cochain(space, 1, "Q", h), omega=omega)


def weil_injectivity_witness(x: DCTriple, b: Cochain | None = None, f: Cochain | None = None) -> DCTriple:
    """
    ## Первообразная `y = (b, f, b + h + df)` коцикла с точной проекцией.

    Если `p(x) = db`, то `d(b, f, α) = x` при `α = b + h + df`.

    Args:
        x (DCTriple): Коцикл степени 2 комплекса `DC•_1`.
        b (Cochain | None): Целая 1-коцепь с `db = c`; по умолчанию ищется.
        f (Cochain | None): Произвольная ℚ-коцепь степени 0; по умолчанию 0.

    Raises:
        PreconditionError: `db ≠ c`.
        NoPrimitiveError: `c` не является кограницей целой коцепи.
        CertificateError: `dy ≠ x`.
    """
    c = weil_project(x)
    space = c.space
    dc = x.complex
    if b is None:
        solution = solve_integer(space.coboundary_matrix(1), c.values)
        if solution is None:
            err = NoPrimitiveError("проекция коцикла не является целой кограницей")
            logger.error(
                "Нет целой первообразной",
                exc_info=err,
                extra={"operation": "weil_injectivity_witness", "details": {"space": space.name}},
            )
            raise err
        b = Cochain(space, 1, "Z", solution)
    elif coboundary(b) != c:
        raise PreconditionError("db не совпадает с c-компонентой")
    f = Cochain.zero(space, 0, "Q") if f is None else f.with_ring("Q")
    alpha = b.with_ring("Q") + x.h + coboundary(f)  # type: ignore[operator]
    y = dc.triple(1, c=b, h=f, omega=alpha)
    if dc.diff(y) != x:
        raise CertificateError("weil_injectivity_witness", "dy ≠ x")
    return y


def _require_nerve(total: TotalComplex, kind: str) -> NerveLevels:
    levels = total.double.levels
    if total.double.kind != kind:
        raise CoefficientRingError(total.double.kind, f"ожидались столбцы {kind}")
    if not isinstance(levels, NerveLevels):
        raise PreconditionError("усреднение определено на нерве группоида действия")
    if levels.depth < 3:
        raise InsufficientDepthError(2, levels.depth)
    return levels


def _check_closed(total: TotalComplex, n: int, vector: Sequence[object], check: str) -> None:
    residual = total.d_tot(n, vector)
    if any(v != 0 for v in residual):
        raise CertificateError(check, "d_tot ≠ 0")


def equivariant_weil_lift(
    total: TotalComplex,
    cocycle: Sequence[object],
    omega: Cochain | None = None,
) -> tuple[TotalComplex, Vector]:
    """
    ## Подъём тотального ℤ-коцикла `(c_1, c_2, c_3)` до коцикла `DC•_1(Γ_•)`.

    Шаги:

    1. `X_1 = (c_1, h_1, ω_1)` с `dh_1 = ω_1 − c_1` (по умолчанию `ω_1 = c_1`).
    2. `X′_2 = (c_2, h′_2, ω′_2)` с `c_2 + δh_1 = ω′_2 − dh′_2`; берётся `h′_2 = 0`.
    3. `f` — усреднение `c_3 − δh′_2` с `Γ_2` на `Γ_1`, так что `δf = c_3 − δh′_2`;
       `X_2 = (c_2, h′_2 + f, ω′_2 + df)`, `X_3 = (c_3)`.

    Args:
        total (TotalComplex): Тотальный комплекс ℤ-коцепей нерва глубины ≥ 3.
        cocycle (Sequence): Тотальный коцикл степени 2.
        omega (Cochain | None): ω-компонента на `Γ_0`.

    Returns:
        tuple[TotalComplex, Vector]: Тотальный комплекс `DC•_1(Γ_•)` и коцикл.

    Raises:
        NotACocycleError: `d_tot(c) ≠ 0`.
        NotCohomologousError: `ω_1` не когомологична `c_1` над ℚ.
    """
    nerve = _require_nerve(total, "Z")
    values = total.finite_complex.check_element(2, cocycle)
    if any(v != 0 for v in total.d_tot(2, values)):
        raise NotACocycleError("тотальный ℤ-коцикл степени 2")
    parts = total.components(2, values)
    c1, c2, c3 = parts.get(0, ()), parts.get(1, ()), parts.get(2, ())

    lifted = TotalComplex(DoubleComplex.dc(nerve, 1))
    columns = lifted.double.dc_columns
    base, first = nerve.level(0), nerve.level(1)

    h1: Vector = (0,) * base.count(1)  # type: ignore[assignment]
    omega1: Vector = c1
    if omega is not None:
        if base.dimension < 2:
            raise DegreeOverflowError(2, base.dimension)
        start = weil_lift(Cochain(base, 2, "Z", c1), omega)
        h1, omega1 = start.h.values, start.omega.values  # type: ignore[union-attr]
    # c₂ + δh₁ = ω′₂ − dh′₂ при h′₂ = 0
    h2_prime: Vector = (0,) * first.count(0)  # type: ignore[assignment]
    omega2_prime = add_vectors(c2, nerve.delta_matrix(0, 1).apply(h1), level_d(first, 0, h2_prime))
    # c₃ − δh′₂ = δf
    residual = sub_vectors(c3, nerve.delta_matrix(1, 0).apply(h2_prime))
    f = avg_contract(nerve, Cochain(nerve.level(2), 0, "Q", residual)).values
    h2 = add_vectors(h2_prime, f)
    omega2 = add_vectors(omega2_prime, level_d(first, 0, f))

    x1 = pack_slots(columns[0], 2, {"c": c1, "h": h1, "omega": omega1})
    x2 = pack_slots(columns[1], 1, {"c": c2, "h": h2, "omega": omega2})
    x3 = pack_slots(columns[2], 0, {"c": c3})
    vector = lifted.to_vector(2, {0: x1, 1: x2, 2: x3})
    _check_closed(lifted, 2, vector, "equivariant_weil_lift")
    logger.debug(
        "Эквивариантный подъём Вейля построен",
        extra={"operation": "equivariant_weil_lift", "details": {"space": base.name, "order": nerve.group_order}},
    )
    return lifted, vector


def equivariant_weil_primitive(
    lifted: TotalComplex,
    cocycle: Sequence[object],
    primitive: Sequence[object] | None = None,
) -> Vector:
    """
    ## Первообразная тотального коцикла `DC•_1` с точной ℤ-проекцией.

    По целой первообразной `(b_1, b_2)` проекции строится
    `Y_1 = (b_1, f_1, b_1 + h_1 + df_1)`, `Y_2 = (b_2)`, где `f_1` —
    усреднение `h_2 − b_2`.

    Args:
        lifted (TotalComplex): Тотальный комплекс `DC•_1(Γ_•)`.
        cocycle (Sequence): Коцикл степени 2.
        primitive (Sequence | None): Тотальный ℤ-вектор степени 1 с
            `d_tot b = p(x)`; по умолчанию ищется.

    Returns:
        Vector: `Y` степени 1 с `d_tot Y = x`.

    Raises:
        NoPrimitiveError: Проекция не является кограницей.
        CertificateError: `d_tot Y ≠ x`.
    """
    if lifted.double.kind != "DC" or lifted.double.dc_columns[0].s != 1:
        raise CoefficientRingError(lifted.double.kind, "ожидался тотальный комплекс DC_1")
    nerve = lifted.double.levels
    if not isinstance(nerve, NerveLevels):
        raise PreconditionError("усреднение определено на нерве группоида действия")
    if nerve.depth < 3:
        raise InsufficientDepthError(2, nerve.depth)
    columns = lifted.double.dc_columns
    values = as_vector(cocycle)
    if any(v != 0 for v in lifted.d_tot(2, values)):
        raise NotACocycleError("тотальный коцикл DC_1 степени 2")
    parts = lifted.components(2, values)
    x1 = unpack_slots(columns[0], 2, parts.get(0, ()))
    x2 = unpack_slots(columns[1], 1, parts.get(1, ()))
    x3 = unpack_slots(columns[2], 0, parts.get(2, ()))

    integral = TotalComplex(DoubleComplex.cochains(nerve, "Z"))
    projection = integral.to_vector(
        2, {q: slots["c"] for q, slots in ((0, x1), (1, x2), (2, x3)) if "c" in slots}
    )
    if primitive is None:
        primitive = integral.finite_complex.solve_primitive(2, projection)
        if primitive is None:
            err = NoPrimitiveError("ℤ-проекция тотального коцикла не точна")
            logger.error(
                "Нет целой первообразной проекции",
                exc_info=err,
                extra={"operation": "equivariant_weil_primitive", "details": {"order": nerve.group_order}},
            )
            raise err
    elif integral.d_tot(1, primitive) != projection:
        raise PreconditionError("d_tot b не совпадает с ℤ-проекцией")
    b = integral.components(1, primitive)
    b1, b2 = b.get(0, ()), b.get(1, ())

    base = nerve.level(0)
    f1 = avg_contract(nerve, Cochain(nerve.level(1), 0, "Q", sub_vectors(x2["h"], b2))).values
    h1 = x1.get("h", ())
    alpha1 = add_vectors(b1, h1, level_d(base, 0, f1)) if b1 else ()
    y1 = pack_slots(columns[0], 1, {"c": b1, "h": f1, "omega": alpha1})
    y2 = pack_slots(columns[1], 0, {"c": b2})
    result = lifted.to_vector(1, {0: y1, 1: y2})
    if lifted.d_tot(1, result) != values:
        raise CertificateError("equivariant_weil_primitive", "d_tot Y ≠ x")
    return result


# Экспортируемый интерфейс модуля
__all__ = [
    "weil_project",
    "weil_lift",
    "weil_injectivity_witness",
    "equivariant_weil_lift",
    "equivariant_weil_primitive",
]
