import pytest

from topograph import (
    NotIndefinite,
    QuadForm,
    SquareDiscriminant,
    find_river,
    sign_change_edges,
)
from topograph.verify import _traced_river_pairs

Q17 = QuadForm(17, -12, 2)
PELL = QuadForm(1, 0, -2)


class TestFindRiver:
    def test_period_separates_signs(self):
        river = find_river(Q17)
        assert river.period
        assert len(river.states) == len(river.period)
        for edge in river.states:
            assert edge.left_value * edge.right_value < 0
        # the positive territory stays on one fixed side for the whole period
        left_signs = {e.left_value > 0 for e in river.states}
        right_signs = {e.right_value > 0 for e in river.states}
        assert len(left_signs) == 1 and len(right_signs) == 1

    def test_period_closes(self):
        # stepping one full period returns to the starting edge state
        river = find_river(Q17)
        u, v = river.basis
        x, y = Q17(*u), Q17(*v)
        for ch in river.period:
            m = (u[0] + v[0], u[1] + v[1])
            w = Q17(*m)
            if ch == "L":
                v, y = m, w
            else:
                u, x = m, w
        first = river.states[0]
        assert (x, y) == (first.left_value, first.right_value)
        assert Q17(u[0] + v[0], u[1] + v[1]) == first.ahead_value

    def test_pell_form_matches_brute_force_scan(self):
        river = find_river(PELL)
        scanned = {frozenset((a.as_tuple(), b.as_tuple()))
                   for a, b in sign_change_edges(PELL, 12)}
        traced = _traced_river_pairs(PELL, river, 500)
        assert scanned
        assert scanned <= traced

    def test_scan_finds_only_river_edges_for_q17(self):
        river = find_river(Q17)
        scanned = {frozenset((a.as_tuple(), b.as_tuple()))
                   for a, b in sign_change_edges(Q17, 12)}
        traced = _traced_river_pairs(Q17, river, 500)
        assert scanned
        assert scanned <= traced

    def test_equivalent_forms_share_period_values(self):
        # 17x^2-12xy+2y^2 and x^2-2y^2 are equivalent (both D=8): the
        # multiset of flanking values along one period agrees.
        values17 = sorted((e.left_value, e.right_value) for e in find_river(Q17).states)
        valuesp = sorted((e.left_value, e.right_value) for e in find_river(PELL).states)
        assert sorted(v for p in values17 for v in p) == sorted(
            v for p in valuesp for v in p)

    def test_mirror_form(self):
        # both roots of Q(t,1) negative: the search mirrors y -> -y internally
        river = find_river(QuadForm(17, 12, 2))
        assert river.period
        for edge in river.states:
            assert edge.left_value * edge.right_value < 0

    def test_negative_leading_coefficient(self):
        river = find_river(QuadForm(-1, 0, 2))
        for edge in river.states:
            assert edge.left_value * edge.right_value < 0


class TestRiverSweep:
    def test_all_small_indefinite_forms(self):
        # every indefinite nonsquare form with small coefficients gets a
        # well-formed, sign-separating, closing period
        from math import isqrt
        checked = 0
        for a in range(-8, 9):
            for h in range(-8, 9):
                for b in range(-8, 9):
                    d = h * h - 4 * a * b
                    if d <= 0 or isqrt(d) ** 2 == d:
                        continue
                    q = QuadForm(a, h, b)
                    river = find_river(q)
                    assert len(river.period) == len(river.states) > 0
                    assert all(e.left_value * e.right_value < 0 for e in river.states)
                    u, v = river.basis
                    x, y = q(*u), q(*v)
                    for ch in river.period:
                        m = (u[0] + v[0], u[1] + v[1])
                        w = q(*m)
                        if ch == "L":
                            v, y = m, w
                        else:
                            u, x = m, w
                    first = river.states[0]
                    assert (x, y) == (first.left_value, first.right_value)
                    checked += 1
        assert checked > 2000


class TestRiverErrors:
    def test_definite_form_rejected(self):
        with pytest.raises(NotIndefinite):
            find_river(QuadForm(1, 0, 1))

    def test_negative_definite_rejected(self):
        with pytest.raises(NotIndefinite):
            find_river(QuadForm(-1, 1, -1))

    def test_square_discriminant_rejected(self):
        with pytest.raises(SquareDiscriminant):
            find_river(QuadForm(1, 3, 2))  # D = 1
        with pytest.raises(SquareDiscriminant):
            find_river(QuadForm(1, 0, -4))  # D = 16

    def test_isotropic_form_rejected(self):
        # x*y represents zero; its discriminant is the square 1
        with pytest.raises(SquareDiscriminant):
            find_river(QuadForm(0, 1, 0))
