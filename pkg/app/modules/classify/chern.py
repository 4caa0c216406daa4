"""
## Отображение Черна и предквантование решёточных полей.

`dch` переводит калибровочное поле в коцикл `DC•_2`: подъём `h` поля,
округление `K = nearest_int(dh)`, кривизна `ω = dh − K` и класс
Черна `c = −K`. `preq` — обратное направление, `a = h mod ℤ`.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor

from ..chaincat import CatMorphism
from ..complex import Cochain, coboundary, evaluate, fundamental_cycle
from ..dccomplex import DCComplex, DCTriple
from ..exactalg import Vector
from ..exceptions import (
    CertificateError,
    DegreeOverflowError,
    DimensionMismatchError,
    InsufficientDepthError,
    MonopoleError,
    NotACocycleError,
    PreconditionError,
)
from ..logging import get_json_app_logger
from ..nerve import DoubleComplex, TotalComplex
from .gauge import EquivariantGaugeField, GaugeField, GaugeTransformation, gauge_act


logger = get_json_app_logger(__name__)


def nearest_int(x: Fraction) -> int:
    """Ближайшее целое; полуцелые значения округляются вверх."""
    return floor(x + Fraction(1, 2))


def _checked_lift(reduced: Cochain, lift: Cochain | None) -> Cochain:
    if lift is None:
        return reduced.lift()
    if lift.space is not reduced.space or lift.degree != reduced.degree:
        raise DimensionMismatchError("подъём задан на другом комплексе или в другой степени")
    if lift.reduce() != reduced:
        raise PreconditionError("подъём не совпадает с полем по модулю ℤ")
    return lift.with_ring("Q")


def dch(a: GaugeField, lift: Cochain | None = None, dc: DCComplex | None = None) -> DCTriple:
    """
    ## Коцикл `(c, h, ω)` степени 2 комплекса `DC•_2`.

    Args:
        a (GaugeField): Поле.
        lift (Cochain | None): ℚ-подъём поля; по умолчанию значения в `[0, 1)`.
        dc (DCComplex | None): Комплекс `DC•_2(X)`, в котором строится тройка.

    Returns:
        DCTriple: `h = lift`, `ω = dh − K`, `c = −K`.

    Raises:
        MonopoleError: `dK ≠ 0`; указывается первый 3-симплекс с ненулевым зарядом.
    """
    space = a.space
    dc = dc or DCComplex(space, 2)
    if dc.space is not space or dc.s != 2:
        raise DimensionMismatchError("тройка строится в DC•_2 того же комплекса")
    h = _checked_lift(a.a, lift)
    if space.dimension < 2:
        return dc.triple(2, h=h)
    dh = coboundary(h)
    rounding = Cochain(space, 2, "Z", tuple(nearest_int(v) for v in dh.values))
    if space.dimension >= 3:
        charge = coboundary(rounding)
        for simplex_id, value in charge.items():
            if value != 0:
                err = MonopoleError(simplex_id, value)
                logger.error(
                    "Решёточный монополь",
                    exc_info=err,
                    extra={"operation": "dch", "details": {"simplex": simplex_id, "charge": str(value)}},
                )
                raise err
    omega = dh - rounding.with_ring("Q")
    result = dc.triple(2, c=-rounding, h=h, omega=omega)
    logger.debug(
        "Поле переведено в коцикл DC",
        extra={"operation": "dch", "details": {"space": space.name, "flux": {k: str(v) for k, v in result.c.support().items()}}},
    )
    return result


def preq(x: DCTriple) -> GaugeField:
    """
    ## Предквантование: поле `a = h mod ℤ` коцикла `DC•_2` степени 2.

    Для кривизны вне `[−1/2, 1/2)` пишется предупреждение: тогда
    `dch(preq(x))` имеет кривизну `ω − nearest_int(ω)`.

    Raises:
        NotACocycleError: `x` не замкнута.
    """
    dc = x.complex
    if dc.s != 2 or x.degree != 2:
        raise DimensionMismatchError(f"ожидалась тройка степени 2 в DC_2, получена степень {x.degree} в DC_{dc.s}")
    if not dc.is_cocycle(x):
        raise NotACocycleError("тройка DC_2 степени 2")
    if x.omega is not None:
        unreduced = [s for s, v in x.omega.items() if not Fraction(-1, 2) <= v < Fraction(1, 2)]
        if unreduced:
            logger.warning(
                "Кривизна не приведена к [-1/2, 1/2)",
                extra={"operation": "preq", "details": {"simplices": unreduced}},
            )
    return GaugeField(x.h.reduce())  # type: ignore[union-attr]


def chern_morphism(g: GaugeTransformation, lift: Cochain | None = None) -> CatMorphism:
    """
    ## Образ калибровочного преобразования в `H²(DC•_1)`.

    Морфизм `0 → d(m, −f̃, −α)`, где `f̃` — подъём `g`, `m = nearest_int(df̃)`,
    `α = df̃ − m`. Это автоморфизм нуля ровно тогда, когда `dm = 0`.

    Returns:
        CatMorphism: Морфизм категории степени 2 комплекса `DC•_1(X)`.
    """
    space = g.space
    dc = DCComplex(space, 1)
    if space.dimension < 1:
        raise DegreeOverflowError(1, space.dimension)
    f = _checked_lift(g.g, lift)
    df = coboundary(f)
    m = Cochain(space, 1, "Z", tuple(nearest_int(v) for v in df.values))
    alpha = df - m.with_ring("Q")
    y = dc.triple(1, c=m, h=-f, omega=-alpha)
    category = dc.category(2)
    target = category.object(dc.to_vector(dc.diff(y)))
    return category.morphism(category.zero_object(), target, dc.to_vector(y))


def gauge_morphism(
    a: GaugeField,
    g: GaugeTransformation,
    lift_a: Cochain | None = None,
    lift_g: Cochain | None = None,
) -> CatMorphism:
    """
    ## Морфизм `dch(a) → dch(a + dg)` в `H²(DC•_2)`.

    Представитель `(n, −f̃)`, где `n = h + df̃ − h′` — целая 1-коцепь.
    """
    space = a.space
    dc = DCComplex(space, 2)
    transformed = gauge_act(g, a)
    source = dch(a, lift_a, dc)
    target = dch(transformed, None, dc)
    f = _checked_lift(g.g, lift_g)
    n = (source.h + coboundary(f) - target.h).with_ring("Z")  # type: ignore[operator]
    y = dc.triple(1, c=n, h=-f)
    category = dc.category(2)
    return category.morphism(
        category.object(dc.to_vector(source)),
        category.object(dc.to_vector(target)),
        dc.to_vector(y),
    )


def chern_number(x: DCTriple | GaugeField) -> int:
    """
    ## Число Черна: спаривание `c` с фундаментальным 2-циклом.

    Raises:
        PreconditionError: Комплекс не двумерен или фундаментальный цикл
            не определён.
    """
    triple = dch(x) if isinstance(x, GaugeField) else x
    space = triple.complex.space
    cycle = fundamental_cycle(space) if space.dimension == 2 else None
    if cycle is None or triple.degree != 2 or triple.c is None:
        raise PreconditionError("число Черна определено для степени 2 на замкнутой двумерной поверхности")
    value = evaluate(triple.c, cycle)
    logger.info(
        "Число Черна вычислено",
        extra={"operation": "chern_number", "details": {"space": space.name, "value": str(value)}},
    )
    return int(value)


def equivariant_dch(field: EquivariantGaugeField) -> tuple[TotalComplex, Vector]:
    """
    ## Тотальный коцикл степени 2 комплекса `DC•_2(Γ_•)` эквивариантного поля.

    Raises:
        InsufficientDepthError: Глубина нерва меньше 3.
        CertificateError: `d_tot ≠ 0` (ошибка реализации).
    """
    nerve = field.nerve
    if nerve.depth < 3:
        raise InsufficientDepthError(2, nerve.depth)
    total = TotalComplex(DoubleComplex.dc(nerve, 2))
    columns = total.double.dc_columns
    x0 = dch(field.field, dc=columns[0])
    descent_lift = field.t.lift()
    h2 = -descent_lift
    c2 = coboundary(descent_lift) - nerve.delta(x0.h)  # type: ignore[arg-type]
    c3 = nerve.delta(h2)
    x1 = columns[1].triple(1, c=c2.with_ring("Z"), h=h2)
    x2 = columns[2].triple(0, c=c3.with_ring("Z"))
    vector = total.from_triples([x0, x1, x2])
    if any(v != 0 for v in total.d_tot(2, vector)):
        raise CertificateError("equivariant_dch", "d_tot ≠ 0")
    return total, vector


# Экспортируемый интерфейс модуля
__all__ = [
    "nearest_int",
    "dch",
    "preq",
    "chern_morphism",
    "gauge_morphism",
    "chern_number",
    "equivariant_dch",
]
