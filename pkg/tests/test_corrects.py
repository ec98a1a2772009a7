from itertools import product

import pytest

from chroma.combinat import enumerate_uios, uio_from_next
from chroma.corrects import (
    WeightForm,
    absorb_dominating_single,
    chi_psi_check,
    classify_multipath,
    covering_corrects_count,
    delta_switch,
    enumerate_corrects,
    is_correct,
    is_correct_via_connectivity,
    leftmost_lowest_intersection,
    m_l1_via_corrects,
    power_via_corrects,
    split_chain_top,
    verify_cancellations,
)
from chroma.errors import BadParameter, NotIntersecting, TooLarge, WrongShape
from chroma.ghom import GAnalogueContext, monomial_g, power_g
from chroma.lgvgrid import (
    Multipath,
    build_grid,
    enumerate_multipaths,
    grid_path_from_vertices,
)
from chroma.chromatic import e_coefficients
from chroma.polyring import Polynomial, monomial_from_elements

TWO_CHAIN = uio_from_next([2, 3])
ANTI2 = uio_from_next([3, 3])
U3 = uio_from_next([3, 4, 4])
U5 = uio_from_next([3, 4, 5, 6, 6])


def mono(u, *elements):
    return Polynomial.monomial(monomial_from_elements(elements), 1, u.n)


# ---------------------------------------------------------------------------
# correctness predicate


def test_length_one_always_correct():
    for n in range(1, 5):
        for u in enumerate_uios(n):
            for w in range(1, n + 1):
                assert is_correct(u, (w,))


def test_pairs_correct_iff_incomparable():
    for n in range(1, 5):
        for u in enumerate_uios(n):
            for a in range(1, n + 1):
                for b in range(1, n + 1):
                    assert is_correct(u, (a, b)) == u.incomparable(a, b) or (
                        a == b and is_correct(u, (a, b))
                    )
                    if a == b:
                        assert is_correct(u, (a, b))


def test_u3_hand_examples():
    assert is_correct(U3, (1, 2, 3))
    assert not is_correct(U3, (1, 3, 2))
    assert is_correct(U3, (3, 2, 1))


def test_connectivity_form_agrees():
    for n in range(1, 5):
        for u in enumerate_uios(n):
            for k in range(1, 6):
                for seq in product(range(1, n + 1), repeat=k):
                    assert is_correct(u, seq) == is_correct_via_connectivity(u, seq)


def test_enumeration_matches_filter():
    for n in range(1, 5):
        for u in enumerate_uios(n):
            for k in range(1, 5):
                got = enumerate_corrects(u, k)
                want = [
                    seq
                    for seq in product(range(1, n + 1), repeat=k)
                    if is_correct(u, seq)
                ]
                assert got == want


def test_enumeration_examples():
    assert len(enumerate_corrects(ANTI2, 2)) == 4
    assert enumerate_corrects(TWO_CHAIN, 2) == [(1, 1), (2, 2)]


def test_sequence_budget():
    with pytest.raises(TooLarge):
        enumerate_corrects(U3, 3, budget=10)


# ---------------------------------------------------------------------------
# the power-sum expansion


def test_power_via_corrects_hand_cases():
    assert power_via_corrects(TWO_CHAIN, 2) == mono(TWO_CHAIN, 1, 1) + mono(
        TWO_CHAIN, 2, 2
    )
    anti = power_via_corrects(ANTI2, 2)
    e1 = Polynomial.variable(1, 2) + Polynomial.variable(2, 2)
    assert anti == e1 * e1


def test_power_via_corrects_matches_determinant():
    for n in range(1, 6):
        for u in enumerate_uios(n):
            ctx = GAnalogueContext(u.inc_graph())
            for k in range(1, 6):
                assert power_via_corrects(u, k) == power_g(ctx, k), (str(u), k)


# ---------------------------------------------------------------------------
# covering corrects


def test_covering_examples():
    assert covering_corrects_count(uio_from_next([4, 4, 4])) == 6
    assert covering_corrects_count(TWO_CHAIN) == 0
    assert covering_corrects_count(U3) == 3


def test_covering_matches_top_e_coefficient():
    for n in range(1, 6):
        for u in enumerate_uios(n):
            cn = e_coefficients(u.inc_graph()).get((n,), 0)
            assert covering_corrects_count(u) == cn
            assert cn >= 0


# ---------------------------------------------------------------------------
# the hook-shape expansion


def test_m_l1_hand_cases():
    assert m_l1_via_corrects(ANTI2, 2).is_zero()
    assert m_l1_via_corrects(TWO_CHAIN, 2) == mono(TWO_CHAIN, 1, 1, 2) + mono(
        TWO_CHAIN, 1, 2, 2
    )


def test_m_l1_rejects_length_one():
    with pytest.raises(BadParameter):
        m_l1_via_corrects(U3, 1)


def test_m_l1_triple_identity_small():
    for n in range(1, 5):
        for u in enumerate_uios(n):
            ctx = GAnalogueContext(u.inc_graph())
            for l in (2, 3, 4):
                got = m_l1_via_corrects(u, l)
                assert got == power_g(ctx, l) * power_g(ctx, 1) - power_g(ctx, l + 1)
                assert got == monomial_g(ctx, (l, 1))
                assert got.is_monomial_positive() or got.is_zero()


# ---------------------------------------------------------------------------
# figure-pinned multipaths (5-element half-integer order, 7 paths)


def fig4_multipath():
    paths = [
        grid_path_from_vertices([(7, r) for r in range(1, 7)]),
        grid_path_from_vertices([(6, r) for r in range(1, 7)]),
        grid_path_from_vertices([(5, 1), (6, 3), (7, 5), (8, 6)]),
        grid_path_from_vertices([(4, r) for r in range(1, 7)]),
        grid_path_from_vertices([(3, 1), (3, 2), (4, 4), (5, 6)]),
        grid_path_from_vertices([(2, 1), (2, 2), (2, 3), (2, 4), (3, 6)]),
        grid_path_from_vertices([(1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (2, 6)]),
    ]
    return Multipath(paths, (2, 3, 1, 5, 4, 6, 7))


def fig5_multipath():
    paths = [
        grid_path_from_vertices([(7, r) for r in range(1, 7)]),
        grid_path_from_vertices([(6, r) for r in range(1, 7)]),
        grid_path_from_vertices([(5, 1), (6, 3), (7, 5), (8, 6)]),
        grid_path_from_vertices([(4, 1), (4, 2), (4, 3), (4, 4), (5, 6)]),
        grid_path_from_vertices([(3, 1), (3, 2), (4, 4), (4, 5), (4, 6)]),
        grid_path_from_vertices([(2, 1), (2, 2), (2, 3), (2, 4), (3, 6)]),
        grid_path_from_vertices([(1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (2, 6)]),
    ]
    return Multipath(paths, (2, 3, 1, 4, 5, 6, 7))


def fig6_multipath():
    paths = [
        grid_path_from_vertices([(7, r) for r in range(1, 7)]),
        grid_path_from_vertices([(6, r) for r in range(1, 7)]),
        grid_path_from_vertices([(5, 1), (6, 3), (7, 5), (8, 6)]),
        grid_path_from_vertices([(4, 1), (4, 2), (5, 4), (5, 5), (5, 6)]),
        grid_path_from_vertices([(3, 1), (3, 2), (4, 4), (4, 5), (4, 6)]),
        grid_path_from_vertices([(2, 1), (2, 2), (2, 3), (2, 4), (3, 6)]),
        grid_path_from_vertices([(1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (2, 6)]),
    ]
    return Multipath(paths, (2, 3, 1, 4, 5, 6, 7))


def fig7_grid_and_multipath():
    grid = build_grid(U5, 7, (1,) * 7)
    paths = [
        grid_path_from_vertices([(7, r) for r in range(1, 7)]),
        grid_path_from_vertices([(6, 1), (7, 3), (8, 5), (8, 6)]),
        grid_path_from_vertices([(5, 1), (5, 2), (6, 4), (6, 5), (6, 6)]),
        grid_path_from_vertices([(4, 1), (4, 2), (5, 4), (5, 5), (5, 6)]),
        grid_path_from_vertices(
            [(3, 1), (3, 2), (3, 3), (3, 4), (3, 5), (4, 6)]
        ),
        grid_path_from_vertices([(2, 1), (2, 2), (2, 3), (2, 4), (3, 6)]),
        grid_path_from_vertices([(1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (2, 6)]),
    ]
    return grid, Multipath(paths, (2, 1, 3, 4, 5, 6, 7))


def test_fig4_multipath_is_valid_and_in_enumeration_frame():
    grid = build_grid(U5, 7, (1,) * 7)
    mp = fig4_multipath()
    for path, base in zip(mp.paths, grid.bases):
        assert path.source == base
    for path, dest_index in zip(mp.paths, mp.sigma):
        assert path.target == grid.dests[dest_index - 1]
    assert mp.weight_vector() == (
        (),
        (),
        (((1, 1), (3, 1), (5, 1))),
        (),
        (((2, 1), (4, 1))),
        (((4, 1),)),
        (((5, 1),)),
    )


def test_fig4_leftmost_lowest_point():
    mp = fig4_multipath()
    assert sorted(mp.intersection_vertices()) == [(4, 4), (6, 3), (7, 5)]
    assert leftmost_lowest_intersection(mp) == (4, 4)


def test_fig4_switch_gives_fig5():
    mp = fig4_multipath()
    switched = delta_switch(mp)
    assert switched == fig5_multipath()
    assert delta_switch(switched) == mp
    assert switched.sign == -mp.sign
    assert switched.multiplier() == mp.multiplier() == 3


def test_fig4_classifies_as_crossing_away_from_rightmost():
    grid = build_grid(U5, 7, (1,) * 7)
    assert classify_multipath(fig4_multipath(), U5, grid).tag == "I"


def test_fig6_classifies_as_residue_pattern():
    grid = build_grid(U5, 7, (1,) * 7)
    cls = classify_multipath(fig6_multipath(), U5, grid)
    assert cls.tag == "J"
    assert cls.chain_length == 3
    assert cls.z == (6, 3)


def test_fig6_fig7_forms_exchange_under_chain_moves():
    fig6_form = WeightForm(chain=(1, 3, 5), singles=(2, 2, 4, 5))
    fig7_form = WeightForm(chain=(1, 3), singles=(2, 2, 5, 4, 5))
    assert split_chain_top(fig6_form, U5) == fig7_form
    assert absorb_dominating_single(fig7_form, U5) == fig6_form
    assert fig6_form.sign == -fig7_form.sign


def test_fig7_multipath_classifies_as_residue_with_chain_two():
    grid, mp = fig7_grid_and_multipath()
    cls = classify_multipath(mp, U5, grid)
    assert cls.tag == "J"
    assert cls.chain_length == 2
    assert mp.weight_vector()[1] == ((1, 1), (3, 1))


def test_wrong_shape_rejected():
    grid = build_grid(U3, 2, (2, 1))
    mp = enumerate_multipaths(grid)[0]
    with pytest.raises(WrongShape):
        classify_multipath(mp, U3, grid)


def test_not_intersecting_rejected():
    grid = build_grid(ANTI2, 2, (1, 1))
    mp = enumerate_multipaths(grid)[0]
    assert mp.is_nonintersecting()
    with pytest.raises(NotIntersecting):
        leftmost_lowest_intersection(mp)


def test_triple_point_rejected():
    from chroma.errors import TriplePoint

    # three fabricated paths whose only shared vertex is common to all of
    # them; geometry like this cannot arise from single-column destinations,
    # so it must be refused rather than switched
    shared = [
        grid_path_from_vertices([(1, 4), (2, 5)]),
        grid_path_from_vertices([(2, 2), (2, 3), (2, 5)]),
        grid_path_from_vertices([(2, 5), (2, 6)]),
    ]
    mp = Multipath(shared, (1, 2, 3))
    with pytest.raises(TriplePoint):
        leftmost_lowest_intersection(mp)


def test_leftmost_lowest_matches_brute_scan():
    for u in enumerate_uios(4):
        grid = build_grid(u, 3, (1, 1, 1))
        for mp in enumerate_multipaths(grid):
            if mp.is_nonintersecting():
                continue
            z = leftmost_lowest_intersection(mp)
            shared = mp.intersection_vertices()
            assert z in shared
            assert all((z[0], -z[1]) <= (c, -r) for c, r in shared)


# ---------------------------------------------------------------------------
# cancellation reports


def test_cancellations_k1():
    rep = verify_cancellations(U3, 1)
    assert rep.ok
    assert rep.counts["I"] == rep.counts["J"] == rep.counts["L"] == 0
    assert rep.total == power_g(GAnalogueContext(U3.inc_graph()), 1)


def test_cancellations_u5_small_k():
    for k in (1, 2, 3):
        rep = verify_cancellations(U5, k)
        assert rep.ok, (k, rep.to_json())


def test_cancellations_exhaustive_small():
    for n in range(1, 4):
        for u in enumerate_uios(n):
            for k in range(1, 4):
                rep = verify_cancellations(u, k)
                assert rep.ok, (str(u), k)


def test_cancellation_report_schema():
    rep = verify_cancellations(TWO_CHAIN, 2)
    data = rep.to_json()
    for key in ("uio", "k", "sumI", "sumJL", "total", "pk", "ok"):
        assert key in data
    assert data["sumI"] == "0" and data["sumJL"] == "0"
    assert data["ok"] is True


def test_weight_vector_injectivity():
    for n in range(1, 5):
        for u in enumerate_uios(n):
            for k in range(1, 5):
                grid = build_grid(u, k, (1,) * k)
                mps = enumerate_multipaths(grid)
                vectors = {mp.weight_vector() for mp in mps}
                assert len(vectors) == len(mps), (str(u), k)


def test_chain_bijection_exhaustive_small():
    for n in range(1, 4):
        for u in enumerate_uios(n):
            for k in range(1, 4):
                rep = chi_psi_check(u, k)
                assert rep.ok, (str(u), k)
                assert rep.dominator_count == rep.dominator_free_count


def test_switch_on_rightmost_crossings_changes_multiplier_by_one():
    # crossings involving the path to the rightmost destination: switching
    # there moves the rightmost destination to an adjacent base, so the
    # multiplier changes by exactly one and the image stays outside I and P
    for n in range(1, 5):
        for u in enumerate_uios(n):
            for k in range(1, 5):
                grid = build_grid(u, k, (1,) * k)
                for mp in enumerate_multipaths(grid):
                    cls = classify_multipath(mp, u, grid)
                    if cls.tag not in ("J", "other"):
                        continue
                    image = delta_switch(mp)
                    assert abs(image.multiplier() - mp.multiplier()) == 1
                    assert image.sign == -mp.sign
                    tag = classify_multipath(image, u, grid).tag
                    assert tag in ("J", "L", "other"), (str(u), k, tag)
