"""
## Точная последовательность Костанта.

`0 → H¹_tot(ℚ/ℤ) → H²_tot(DC•_2(Γ_•)) → Ω²_{ℤ,cl,bas} → 0`: отображение
`η` берёт кривизну `ω_1`, ядро состоит из плоских классов
`(h_1 mod ℤ, −h_2 mod ℤ)`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Sequence

from ..complex import cycle_basis, reduce_mod_one
from ..exactalg import (
    AbGroupPresentation,
    RatMatrix,
    Vector,
    as_vector,
    mixed_kernel,
    mixed_quotient,
    rational_nullspace,
    solve_mixed,
)
from ..exceptions import CertificateError, CoefficientRingError, InsufficientDepthError, NotACocycleError, PreconditionError
from ..logging import get_json_app_logger
from ..nerve import DoubleComplex, NerveLevels, TotalComplex, total_cohomology
from .internal import add_vectors, pack_slots, sub_vectors, unpack_slots


logger = get_json_app_logger(__name__)


@dataclass(frozen=True)
class BasicForms:
    """
    ## Решётка замкнутых базисных 2-коцепей с целыми периодами.

    Attributes:
        integral (tuple[Vector, ...]): ℤ-образующие.
        rational (tuple[Vector, ...]): ℚ-образующие.
        group (AbGroupPresentation): Группа `ℤ^a ⊕ ℚ^b`.
    """
    integral: tuple[Vector, ...]
    rational: tuple[Vector, ...]
    group: AbGroupPresentation

    @property
    def generators(self) -> tuple[Vector, ...]:
        return self.integral + self.rational


@dataclass(frozen=True)
class KostantReport:
    """
    ## Итог проверки последовательности Костанта.
    """
    kernel: AbGroupPresentation
    curvature: AbGroupPresentation
    h2: AbGroupPresentation
    forms_checked: int
    samples_checked: int


def _require_dc2(total: TotalComplex) -> NerveLevels:
    if total.double.kind != "DC" or total.double.dc_columns[0].s != 2:
        raise CoefficientRingError(total.double.kind, "ожидался тотальный комплекс DC_2")
    nerve = total.double.levels
    if not isinstance(nerve, NerveLevels):
        raise PreconditionError("последовательность строится на нерве группоида действия")
    if nerve.depth < 3:
        raise InsufficientDepthError(2, nerve.depth)
    return nerve


def _cocycle_parts(total: TotalComplex, x: Sequence[object]) -> list[dict[str, Vector]]:
    values = total.finite_complex.check_element(2, x)
    if any(v != 0 for v in total.d_tot(2, values)):
        raise NotACocycleError("тотальный коцикл DC_2 степени 2")
    parts = total.components(2, values)
    columns = total.double.dc_columns
    return [unpack_slots(columns[q], 2 - q, parts.get(q, ())) for q in range(3)]


def kostant_eta(total: TotalComplex, x: Sequence[object]) -> Vector:
    """
    ## Кривизна `η(x) = ω_1` как вектор `C^2(Γ_0)`.

    На комплексах без 2-симплексов результат пуст.
    """
    _require_dc2(total)
    first, _, _ = _cocycle_parts(total, x)
    return first.get("omega", ())


def kostant_kernel_witness(total: TotalComplex, x: Sequence[object]) -> Vector:
    """
    ## Плоский класс `(h_1 mod ℤ, −h_2 mod ℤ)` коцикла с `ω_1 = 0`.

    Returns:
        Vector: Тотальный ℚ/ℤ-коцикл степени 1 со значениями в `[0, 1)`.

    Raises:
        PreconditionError: `ω_1 ≠ 0`.
    """
    nerve = _require_dc2(total)
    first, second, _ = _cocycle_parts(total, x)
    if any(v != 0 for v in first.get("omega", ())):
        raise PreconditionError("кривизна ω_1 не равна нулю")
    integral = TotalComplex(DoubleComplex.cochains(nerve, "Z"))
    h1 = first.get("h", ())
    h2 = tuple(-v for v in second["h"])
    return tuple(reduce_mod_one(v) for v in integral.to_vector(1, {0: h1, 1: h2}))


def kostant_kernel_preimage(total: TotalComplex, a: Sequence[object]) -> Vector:
    """
    ## Плоский коцикл `DC•_2` с заданным ℚ/ℤ-классом.

    `h_1 = ã_1`, `h_2 = −ã_2`, `c_1 = −dh_1`, `c_2 = −(δh_1 + dh_2)`,
    `c_3 = δh_2`, `ω_1 = 0`.

    Args:
        total (TotalComplex): Тотальный комплекс `DC•_2(Γ_•)`.
        a (Sequence): Тотальный ℚ/ℤ-коцикл степени 1 (любой ℚ-подъём).

    Raises:
        NotACocycleError: `d_tot a` не целый.
    """
    nerve = _require_dc2(total)
    columns = total.double.dc_columns
    integral = TotalComplex(DoubleComplex.cochains(nerve, "Z"))
    parts = integral.components(1, as_vector(a))
    a1, a2 = parts.get(0, ()), parts.get(1, ())
    h1 = tuple(reduce_mod_one(v) for v in a1)
    h2 = tuple(-reduce_mod_one(v) for v in a2)
    base, first = nerve.level(0), nerve.level(1)
    c1 = tuple(-v for v in base.coboundary_matrix(1).apply(h1))
    c2 = tuple(-v for v in add_vectors(nerve.delta_matrix(0, 1).apply(h1), first.coboundary_matrix(0).apply(h2)))
    c3 = nerve.delta_matrix(1, 0).apply(h2)
    if any(v.denominator != 1 for v in (*c1, *c2, *c3)):
        raise NotACocycleError("d_tot a не целый")
    x1 = pack_slots(columns[0], 2, {"c": c1, "h": h1})
    x2 = pack_slots(columns[1], 1, {"c": c2, "h": h2})
    x3 = pack_slots(columns[2], 0, {"c": c3})
    vector = total.to_vector(2, {0: x1, 1: x2, 2: x3})
    if any(v != 0 for v in total.d_tot(2, vector)):
        raise CertificateError("kostant_kernel_preimage", "d_tot ≠ 0")
    return vector


def closed_basic_integral_forms(nerve: NerveLevels) -> BasicForms:
    """
    ## Замкнутые базисные 2-коцепи на `Γ_0` с целыми периодами.

    1. `B` — ℚ-базис ядра `[d; δ]` на `C^2(Γ_0)`.
    2. `M` — периоды столбцов `B` на ℤ-базисе 2-циклов.
    3. Ядро `−k + M u = 0` с целыми `k` даёт образующие `B u`.
    """
    base = nerve.level(0)
    size = base.count(2)
    if size == 0:
        return BasicForms((), (), AbGroupPresentation.trivial())
    conditions = base.coboundary_matrix(2).to_rational().vstack(nerve.delta_matrix(0, 2).to_rational())
    basis = rational_nullspace(conditions)
    if not basis:
        return BasicForms((), (), AbGroupPresentation.trivial())
    b = RatMatrix.from_columns(basis, size)
    cycles = cycle_basis(base, 2).generators if base.dimension >= 2 else ()
    periods = RatMatrix.from_rows([list(z.coefficients) for z in cycles], size) @ b if cycles else RatMatrix.zeros(0, b.cols)
    kernel = mixed_kernel(-RatMatrix.identity(periods.rows), periods)
    integral = tuple(b.apply(u) for _, u in kernel.integral)
    rational = tuple(b.apply(u) for _, u in kernel.rational)
    group = mixed_quotient(integral, rational, (), (), size)
    return BasicForms(integral, rational, group)


def _eta_system(total: TotalComplex) -> tuple[RatMatrix, int]:
    """Матрица `[d_tot; S]`, где `S` выбирает ω-координаты на `Γ_0`."""
    finite = total.finite_complex
    omega_indices = [i for i in range(finite.dim(2)) if finite.label(2, i).startswith("0|omega:")]
    selector = [[Fraction(int(j == i)) for j in range(finite.dim(2))] for i in omega_indices]
    d = total.finite_complex.d(2)
    rows = [list(d.row(i)) for i in range(d.rows)] + selector
    return RatMatrix.from_rows(rows, finite.dim(2)), d.rows


def kostant_sequence_check(nerve: NerveLevels, samples: int = 20, seed: int = 0) -> KostantReport:
    """
    ## Проверяет точность последовательности Костанта на нерве.

    1. Каждый образующий `Ω²_{ℤ,cl,bas}` имеет прообраз под `η`.
    2. Ядро `η` по модулю кограниц совпадает с `H¹_tot(ℚ/ℤ)`.
    3. `H²_tot(DC_2) ≅ ker η ⊕ Ω²_{ℤ,cl,bas}` на уровне инвариантов.
    4. На случайных элементах ядра `preimage ∘ witness` возвращает класс.

    Raises:
        InsufficientDepthError: Глубина нерва меньше 3.
        CertificateError: Одна из проверок не прошла.
    """
    if nerve.depth < 3:
        raise InsufficientDepthError(2, nerve.depth)
    total = TotalComplex(DoubleComplex.dc(nerve, 2))
    integral = TotalComplex(DoubleComplex.cochains(nerve, "Z"))
    finite = total.finite_complex
    forms = closed_basic_integral_forms(nerve)
    system, cocycle_rows = _eta_system(total)
    a_int, a_rat = finite.split(2, system)

    for form in forms.generators:
        target = (Fraction(0),) * cocycle_rows + form
        solution = solve_mixed(a_int, a_rat, target)
        if solution is None:
            _fail("eta_surjective", "нет прообраза кривизны", nerve)
        x = finite.assemble(2, *solution)
        if kostant_eta(total, x) != form:
            _fail("eta_surjective", "η(x) не совпадает с формой", nerve)

    generators = mixed_kernel(a_int, a_rat)
    kernel_int = [finite.assemble(2, *pair) for pair in generators.integral]
    kernel_rat = [finite.assemble(2, *pair) for pair in generators.rational]
    boundaries_int, boundaries_rat = finite.boundary_generators(2)
    kernel = mixed_quotient(kernel_int, kernel_rat, boundaries_int, boundaries_rat, finite.dim(2))
    flat = total_cohomology(integral, 1, "QZ")
    if kernel != flat:
        _fail("kernel", f"ker η = {kernel}, H¹(ℚ/ℤ) = {flat}", nerve)
    h2 = finite.cohomology(2)
    if h2 != kernel.direct_sum(forms.group):
        _fail("extension", f"H² = {h2}, ker ⊕ Ω = {kernel.direct_sum(forms.group)}", nerve)

    rng = Random(seed)
    checked = 0
    for _ in range(samples if kernel_int or kernel_rat else 0):
        x = (Fraction(0),) * finite.dim(2)
        # один коэффициент на образующий, иначе сумма выходит из ядра
        for vector in kernel_int:
            k = rng.randint(-2, 2)
            x = add_vectors(x, tuple(k * v for v in vector))
        for vector in kernel_rat:
            q = Fraction(rng.randint(-6, 6), rng.randint(1, 6))
            x = add_vectors(x, tuple(q * v for v in vector))
        a = kostant_kernel_witness(total, x)
        restored = kostant_kernel_preimage(total, a)
        if kostant_kernel_witness(total, restored) != a:
            _fail("kernel_roundtrip", "класс не восстановлен", nerve)
        if finite.solve_primitive(2, sub_vectors(restored, x)) is None:
            _fail("kernel_roundtrip", "прообраз не когомологичен исходному коциклу", nerve)
        checked += 1

    report = KostantReport(
        kernel=kernel,
        curvature=forms.group,
        h2=h2,
        forms_checked=len(forms.generators),
        samples_checked=checked,
    )
    logger.info(
        "Последовательность Костанта проверена",
        extra={
            "operation": "kostant_sequence_check",
            "details": {"kernel": str(kernel), "curvature": str(forms.group), "h2": str(h2), "samples": checked},
        },
    )
    return report


def _fail(check: str, details: str, nerve: NerveLevels) -> None:
    err = CertificateError(check, details)
    logger.error(
        "Сертификат Костанта не выполнен",
        exc_info=err,
        extra={"operation": "kostant_sequence_check", "details": {"check": check, "space": nerve.level(0).name}},
    )
    raise err


# Экспортируемый интерфейс модуля
__all__ = [
    "BasicForms",
    "KostantReport",
    "kostant_eta",
    "kostant_kernel_witness",
    "kostant_kernel_preimage",
    "closed_basic_integral_forms",
    "kostant_sequence_check",
]
