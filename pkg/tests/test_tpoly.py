from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ice_colors.exact import SingularInputError
from ice_colors.tpoly import (CoalescedSpec, PsiPoint, g_eval, pn_via_T,
                              t_eval_coalesced, t_eval_distinct)

fractions = st.fractions(min_value=-8, max_value=8, max_denominator=6)


@settings(max_examples=50)
@given(fractions, fractions, fractions)
def test_g_symmetric(x, y, psi):
    assert g_eval(x, y, psi) == g_eval(y, x, psi)


@settings(max_examples=30)
@given(fractions, fractions)
def test_g_at_psi_zero(x, y):
    assert g_eval(x, y, Fraction(0)) == 2 * x * y * (x + y - 1)


def test_g_vanishing_point():
    assert g_eval(1, 1, 1) == 0


def test_t_n1_is_one():
    assert t_eval_distinct([Fraction(3), Fraction(5, 2)], Fraction(2)) == 1
    assert t_eval_distinct([Fraction(-1), Fraction(7)], Fraction(-3)) == 1


def _distinct_args(seed: int, count: int) -> list[Fraction]:
    return [Fraction(seed + 2 * i, 3) for i in range(count)]


def test_t_symmetric_within_groups_and_across():
    psi = Fraction(2)
    for n in (2, 3):
        xs = _distinct_args(5, n) + _distinct_args(31, n)
        base = t_eval_distinct(xs, psi)
        swapped_first = list(xs)
        swapped_first[0], swapped_first[1] = swapped_first[1], swapped_first[0]
        assert t_eval_distinct(swapped_first, psi) == base
        swapped_second = list(xs)
        swapped_second[n], swapped_second[n + 1] = swapped_second[n + 1], swapped_second[n]
        assert t_eval_distinct(swapped_second, psi) == base
        groups_swapped = xs[n:] + xs[:n]
        assert t_eval_distinct(groups_swapped, psi) == base
        across = list(xs)
        across[0], across[n] = across[n], across[0]
        assert t_eval_distinct(across, psi) == base


def test_t_singular_inputs_raise():
    psi = Fraction(2)
    with pytest.raises(SingularInputError):
        t_eval_distinct([Fraction(1), Fraction(1), Fraction(2), Fraction(3)], psi)
    with pytest.raises(SingularInputError):
        # G(1, 1) = 0 at psi = 1
        t_eval_distinct([Fraction(1), Fraction(2), Fraction(1), Fraction(3)],
                        Fraction(1))


def test_coalesced_agrees_with_distinct():
    psi = Fraction(2)
    spec = CoalescedSpec((Fraction(3), Fraction(7)), (Fraction(5), Fraction(11)))
    xs = [Fraction(3), Fraction(7), Fraction(5), Fraction(11)]
    assert t_eval_coalesced(spec, psi) == t_eval_distinct(xs, psi)


def test_coalesced_n1_is_one():
    point = PsiPoint(Fraction(2))
    spec = CoalescedSpec((point.xi0,), (point.psi,))
    assert t_eval_coalesced(spec, point.psi) == 1


def test_coalesced_direction_independence():
    psi = Fraction(2)
    xi0 = 2 * psi + 1
    one = CoalescedSpec((xi0, xi0), (xi0, psi),
                        (Fraction(1), Fraction(2), Fraction(3), Fraction(4)))
    other = CoalescedSpec((xi0, xi0), (xi0, psi),
                          (Fraction(7), Fraction(-3), Fraction(11, 2), Fraction(1)))
    assert t_eval_coalesced(one, psi) == t_eval_coalesced(other, psi)


def test_coalesced_sample_set_independence():
    psi = Fraction(3, 2)
    xi0 = 2 * psi + 1
    spec = CoalescedSpec((xi0, xi0), (xi0, psi))
    richer = CoalescedSpec((xi0, xi0), (xi0, psi), samples=spec.samples + 3)
    assert t_eval_coalesced(spec, psi) == t_eval_coalesced(richer, psi)


def test_coalesced_retries_past_singular_grids():
    # first group targets 0 and 1 with directions 1 and 0 collide at every
    # integer t = 1, which sits on all the small scaled grids
    psi = Fraction(2)
    spec = CoalescedSpec((Fraction(0), Fraction(1)), (Fraction(4), Fraction(9)),
                         (Fraction(1), Fraction(0), Fraction(2), Fraction(3)),
                         samples=5)
    value = t_eval_coalesced(spec, psi)
    assert value == t_eval_distinct(
        [Fraction(0), Fraction(1), Fraction(4), Fraction(9)], psi)


def test_psi_point_admissibility():
    with pytest.raises(ValueError):
        PsiPoint(Fraction(0))
    with pytest.raises(ValueError):
        PsiPoint(Fraction(-1, 2))
    with pytest.raises(ValueError):
        PsiPoint.from_z(Fraction(1))
    point = PsiPoint.from_z(Fraction(2))
    assert point.psi == Fraction(-3, 4)
    assert point.z == Fraction(2)


def test_spec_validation():
    with pytest.raises(ValueError):
        CoalescedSpec((Fraction(1),), (Fraction(1), Fraction(2)))
    with pytest.raises(ValueError):
        CoalescedSpec((Fraction(1),), (Fraction(2),),
                      (Fraction(1), Fraction(1)))


def test_pn_via_T_small():
    assert pn_via_T(1).coeffs == (Fraction(1),)
    p1 = pn_via_T(2)
    assert p1.coeffs == (Fraction(1), Fraction(1), Fraction(2))


def test_pn_via_T_degree_and_constant_term():
    for n in (1, 2, 3):
        poly = pn_via_T(n)
        assert poly.degree == n * (n - 1)
        assert poly.coeffs[0] == 1
