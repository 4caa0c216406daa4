from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import ZZ, Matrix
from sympy.matrices.normalforms import invariant_factors

from app.modules.exactalg import (
    AbGroupPresentation,
    IntCochainComplex,
    IntMatrix,
    RatMatrix,
    cohomology_of,
    cohomology_qz,
    cohomology_rational,
    integer_kernel,
    mixed_kernel,
    mixed_quotient,
    normalize_torsion,
    rational_nullspace,
    rational_rank,
    smith_normal_form,
    solve_integer,
    solve_mixed,
    solve_rational,
)
from app.modules.exceptions import DimensionMismatchError


def int_matrices(max_rows: int = 4, max_cols: int = 4):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r
            ).map(IntMatrix.from_rows)
        )
    )


def test_smith_normal_form_known_example() -> None:
    m = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    snf = smith_normal_form(m)
    assert snf.diagonal == (2, 6, 12)
    assert snf.U @ m @ snf.V == snf.S


@settings(max_examples=60, deadline=None)
@given(int_matrices())
def test_smith_normal_form_is_a_certified_decomposition(m: IntMatrix) -> None:
    snf = smith_normal_form(m)
    assert snf.U @ m @ snf.V == snf.S
    assert abs(snf.U.determinant()) == 1
    assert abs(snf.V.determinant()) == 1
    factors = snf.invariant_factors
    assert all(b % a == 0 for a, b in zip(factors, factors[1:]))
    for i in range(snf.S.rows):
        for j in range(snf.S.cols):
            if i != j:
                assert snf.S[i, j] == 0


@settings(max_examples=60, deadline=None)
@given(int_matrices())
def test_integer_kernel_spans_solutions(m: IntMatrix) -> None:
    kernel = integer_kernel(m)
    assert len(kernel) == m.cols - rational_rank(m)
    for vector in kernel:
        assert all(x == 0 for x in m.apply(vector))


def test_normalize_torsion() -> None:
    assert normalize_torsion([2, 3]) == (6,)
    assert normalize_torsion([2, 2]) == (2, 2)
    assert normalize_torsion([1, 4, 2]) == (2, 4)
    assert normalize_torsion([]) == ()


def test_presentation_string_and_sum() -> None:
    group = AbGroupPresentation.of(2, [2], divisible_rank=1, rational_rank=1)
    assert str(group) == "Z^2 + Z/2 + Q^1 + (Q/Z)^1"
    assert str(AbGroupPresentation.trivial()) == "0"
    assert AbGroupPresentation.of(torsion=[2]).direct_sum(AbGroupPresentation.of(torsion=[3])) == AbGroupPresentation(torsion=(6,))
    assert AbGroupPresentation.of(torsion=[2, 3]).order == 6
    assert AbGroupPresentation(free_rank=1).order is None


def test_presentation_rejects_broken_torsion_chain() -> None:
    with pytest.raises(DimensionMismatchError):
        AbGroupPresentation(torsion=(4, 2))


def test_solve_integer_and_rational() -> None:
    m = IntMatrix.from_rows([[2]])
    assert solve_integer(m, [3]) is None
    assert solve_integer(m, [4]) == (2,)
    assert solve_rational(m, [3]) == (Fraction(3, 2),)
    inconsistent = RatMatrix.from_rows([[1, 1], [2, 2]])
    assert solve_rational(inconsistent, [1, 3]) is None


def test_rational_nullspace() -> None:
    m = RatMatrix.from_rows([[1, 2, 3], [2, 4, 6]])
    basis = rational_nullspace(m)
    assert len(basis) == 2
    for vector in basis:
        assert m.apply(vector) == (0, 0)


def test_solve_mixed() -> None:
    a = IntMatrix.from_rows([[2], [0]])
    b = RatMatrix.from_rows([[0], [1]])
    assert solve_mixed(a, b, [1, Fraction(1, 3)]) is None
    x_int, x_rat = solve_mixed(a, b, [4, Fraction(1, 3)])
    assert x_int == (2,)
    assert x_rat == (Fraction(1, 3),)


def test_mixed_kernel() -> None:
    kernel = mixed_kernel(IntMatrix.from_rows([[1]]), RatMatrix.from_rows([[1]]))
    assert kernel.rational == ()
    assert len(kernel.integral) == 1
    (x_int, x_rat), = kernel.integral
    assert x_int[0] + x_rat[0] == 0
    assert abs(x_int[0]) == 1


def test_mixed_quotient_cases() -> None:
    e1 = (1, 0)
    e2 = (0, 1)
    assert mixed_quotient([e1], [], [(2, 0)], [], 2) == AbGroupPresentation(torsion=(2,))
    assert mixed_quotient([], [e1], [e1], [], 2) == AbGroupPresentation(divisible_rank=1)
    assert mixed_quotient([], [e1], [], [], 2) == AbGroupPresentation(rational_rank=1)
    assert mixed_quotient([e1, e2], [], [], [e1], 2) == AbGroupPresentation(free_rank=1)


def test_mixed_quotient_checks_lengths() -> None:
    with pytest.raises(DimensionMismatchError):
        mixed_quotient([(1, 0, 0)], [], [], [], 2)


def test_cohomology_of_small_complex() -> None:
    complex_ = IntCochainComplex(dims=(1, 1), differentials=(IntMatrix.from_rows([[2]]),))
    assert cohomology_of(complex_, 0) == AbGroupPresentation.trivial()
    assert str(cohomology_of(complex_, 1)) == "Z/2"
    assert str(cohomology_qz(complex_, 0)) == "Z/2"
    assert str(cohomology_qz(complex_, 1)) == "0"
    assert str(cohomology_rational(complex_, 1)) == "0"


def square_matrices(max_size: int = 4):
    return st.integers(1, max_size).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n
        ).map(IntMatrix.from_rows)
    )


@settings(max_examples=40, deadline=None)
@given(square_matrices())
def test_invariant_factors_agree_with_sympy(m: IntMatrix) -> None:
    rows = [[int(x) for x in m.row(i)] for i in range(m.rows)]
    expected = sorted(abs(int(f)) for f in invariant_factors(Matrix(rows), domain=ZZ) if f != 0)
    assert list(smith_normal_form(m).invariant_factors) == expected


def three_term_complexes():
    """`C^0 → C^1 → C^2` с `d^1 = M · K`, где строки `K` аннулируют образ `d^0`."""
    def build(dims: tuple[int, int, int], entries: list[int], mixing: list[int]) -> IntCochainComplex:
        n0, n1, n2 = dims
        d0 = IntMatrix.from_rows([entries[i * n0:(i + 1) * n0] for i in range(n1)], n0)
        annihilator = integer_kernel(d0.transpose())
        if annihilator:
            k = IntMatrix.from_rows(annihilator, n1)
            m = IntMatrix.from_rows([mixing[i * len(annihilator):(i + 1) * len(annihilator)] for i in range(n2)], len(annihilator))
            d1 = m @ k
        else:
            d1 = IntMatrix.zeros(n2, n1)
        return IntCochainComplex(dims=dims, differentials=(d0, d1))

    return st.tuples(st.integers(1, 3), st.integers(1, 3), st.integers(1, 3)).flatmap(
        lambda dims: st.builds(
            build,
            st.just(dims),
            st.lists(st.integers(-4, 4), min_size=dims[0] * dims[1], max_size=dims[0] * dims[1]),
            st.lists(st.integers(-3, 3), min_size=dims[1] * dims[2], max_size=dims[1] * dims[2]),
        )
    )


def _count_mod_p(matrix: IntMatrix, p: int, kernel: bool) -> int:
    vectors = product(range(p), repeat=matrix.cols)
    if kernel:
        return sum(1 for v in vectors if all(int(x) % p == 0 for x in matrix.apply(v)))
    return len({tuple(int(x) % p for x in matrix.apply(v)) for v in vectors})


@pytest.mark.parametrize("p", [2, 3, 5])
@settings(max_examples=20, deadline=None)
@given(complex_=three_term_complexes())
def test_integral_cohomology_matches_reductions(p: int, complex_: IntCochainComplex) -> None:
    for n in range(3):
        h_n, h_next = cohomology_of(complex_, n), cohomology_of(complex_, n + 1)
        # универсальные коэффициенты для ℤ/p
        expected = (
            h_n.free_rank
            + sum(1 for t in h_n.torsion if t % p == 0)
            + sum(1 for t in h_next.torsion if t % p == 0)
        )
        cycles = _count_mod_p(complex_.d(n), p, kernel=True)
        boundaries = _count_mod_p(complex_.d(n - 1), p, kernel=False)
        assert cycles == boundaries * p ** expected


@settings(max_examples=30, deadline=None)
@given(
    st.lists(st.integers(-5, 5), min_size=18, max_size=18),
    st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=5), min_size=18, max_size=18),
    st.lists(st.integers(-4, 4), min_size=3, max_size=3),
    st.lists(st.fractions(min_value=-2, max_value=2, max_denominator=3), min_size=3, max_size=3),
)
def test_solve_mixed_finds_planted_solutions(
    a_entries: list[int], b_entries: list[Fraction], x_int: list[int], x_rat: list[Fraction]
) -> None:
    a = IntMatrix.from_rows([a_entries[3 * i:3 * i + 3] for i in range(6)], 3)
    b = RatMatrix.from_rows([b_entries[3 * i:3 * i + 3] for i in range(6)], 3)
    target = tuple(u + v for u, v in zip(a.apply(x_int), b.apply(x_rat)))
    solution = solve_mixed(a, b, target)
    assert solution is not None
    found_int, found_rat = solution
    assert tuple(u + v for u, v in zip(a.apply(found_int), b.apply(found_rat))) == target
