from chroma.chromatic import e_coefficients, positivity_report
from chroma.combinat import (
    Graph,
    clan_graph,
    enumerate_uios,
    partitions_of,
    uio_from_next,
)
from chroma.ghom import (
    GAnalogueContext,
    apply_ghom,
    coefficient_of_alpha,
    elementary_g,
    gnechrom_check,
    kernel_slice_symmetric,
    monomial_g,
    power_g,
    schur_g,
    truncated_T,
)
from chroma.polyring import Polynomial
from chroma.symfunc import SymFunc

TWO_CHAIN = uio_from_next([2, 3])
ANTI2 = uio_from_next([3, 3])
U3 = uio_from_next([3, 4, 4])


def ctx_of(u):
    return GAnalogueContext(u.inc_graph())


def vp(u, *elements):
    from chroma.polyring import monomial_from_elements

    return Polynomial.monomial(monomial_from_elements(elements), 1, u.n)


def test_elementary_conventions():
    ctx = ctx_of(TWO_CHAIN)
    assert elementary_g(ctx, 0) == Polynomial.one(2)
    assert elementary_g(ctx, -1).is_zero()
    assert elementary_g(ctx, 3).is_zero()


def test_elementary_examples():
    # a 2-chain has an edgeless incomparability graph: both vertices stable
    ctx = ctx_of(TWO_CHAIN)
    assert elementary_g(ctx, 2) == vp(TWO_CHAIN, 1, 2)
    # in U3 only 1 < 3 is comparable, so {1,3} is the unique stable pair
    ctx3 = ctx_of(U3)
    assert elementary_g(ctx3, 2) == vp(U3, 1, 3)
    # complete graph: no stable pair at all
    assert GAnalogueContext(Graph.complete(3)).elementary(2).is_zero()


def test_elementary_monomials_are_squarefree_stable_sets():
    for n in range(1, 6):
        for u in enumerate_uios(n):
            ctx = ctx_of(u)
            g = u.inc_graph()
            for i in range(0, n + 1):
                for mono, c in elementary_g(ctx, i).terms.items():
                    assert c == 1
                    assert all(e == 1 for _, e in mono)
                    assert len(mono) == i
                    support = [v for v, _ in mono]
                    # stable in inc(u) means pairwise comparable in u
                    for a in support:
                        for b in support:
                            if a != b:
                                assert not g.adjacent(a, b)
                                assert u.comparable(a, b)


def test_apply_ghom_elementary_one():
    ctx = ctx_of(U3)
    total = Polynomial.variable(1, 3) + Polynomial.variable(2, 3)
    total = total + Polynomial.variable(3, 3)
    assert apply_ghom(SymFunc.e((1,)), ctx) == total


def test_full_chain_gives_full_product():
    # inc(chain) is edgeless, so the top stable set is everything
    chain4 = uio_from_next([2, 3, 4, 5])
    ctx = ctx_of(chain4)
    assert apply_ghom(SymFunc.s((1, 1, 1, 1)), ctx) == vp(chain4, 1, 2, 3, 4)
    # on a complete incomparability graph the same image collapses to zero
    anti4 = uio_from_next([5, 5, 5, 5])
    assert apply_ghom(SymFunc.s((1, 1, 1, 1)), ctx_of(anti4)).is_zero()


def test_power_examples():
    assert power_g(ctx_of(TWO_CHAIN), 2) == vp(TWO_CHAIN, 1, 1) + vp(TWO_CHAIN, 2, 2)
    anti = ctx_of(ANTI2)
    e1 = elementary_g(anti, 1)
    assert power_g(anti, 2) == e1 * e1
    assert power_g(anti, 1) == e1


def test_monomial_examples():
    assert monomial_g(ctx_of(ANTI2), (2, 1)).is_zero()
    m21 = monomial_g(ctx_of(TWO_CHAIN), (2, 1))
    assert m21 == vp(TWO_CHAIN, 1, 1, 2) + vp(TWO_CHAIN, 1, 2, 2)


def test_three_routes_agree():
    for n in range(1, 6):
        for u in enumerate_uios(n):
            ctx = ctx_of(u)
            for d in range(1, 6):
                assert power_g(ctx, d) == apply_ghom(SymFunc.p((d,)), ctx)
                for lam in partitions_of(d):
                    assert schur_g(ctx, lam) == apply_ghom(SymFunc.s(lam), ctx)
                    assert monomial_g(ctx, lam) == apply_ghom(SymFunc.m(lam), ctx)


def test_truncated_kernel_slice():
    ctx = ctx_of(TWO_CHAIN)
    t1 = truncated_T(ctx, 1)
    assert t1 == {(1,): elementary_g(ctx, 1)}
    t2 = truncated_T(ctx, 2)
    assert t2[(2,)] == vp(TWO_CHAIN, 1, 2)
    assert t2[(1, 1)] == elementary_g(ctx, 1) * elementary_g(ctx, 1)


def test_kernel_slice_two_expansions_agree():
    for n in range(1, 5):
        for u in enumerate_uios(n):
            ctx = ctx_of(u)
            for d in range(1, min(n, 4) + 1):
                left, right = kernel_slice_symmetric(ctx, d)
                assert left == right, (str(u), d)


def test_clan_identity_trivial_cases():
    k1 = GAnalogueContext(Graph(1))
    assert gnechrom_check(k1, (1,))
    # alpha of all ones reproduces the graph itself
    for n in range(1, 5):
        for u in enumerate_uios(n):
            assert gnechrom_check(ctx_of(u), (1,) * n)


def test_clan_identity_blowup_example():
    # blowing (2,1) into a complete pair gives a triangle: X = 6 e_3
    ctx = ctx_of(ANTI2)
    assert gnechrom_check(ctx, (2, 1))
    g = clan_graph(ANTI2.inc_graph(), (2, 1))
    assert g == Graph.complete(3)
    assert e_coefficients(g) == {(3,): 6}


def test_monomial_coefficients_match_clan_e_coefficients():
    # [v^alpha] m^G_lam, scaled by the product of alpha!, equals the
    # e-coefficient c_lam of the blown-up graph (the scaling is forced by the
    # kernel identity; without it the equality already fails at a single
    # vertex with alpha = 2); in particular the signs agree either way
    from math import factorial

    for n in range(1, 5):
        for u in enumerate_uios(n):
            ctx = ctx_of(u)
            alphas = [()]
            for _ in range(n):
                alphas = [a + (v,) for a in alphas for v in (0, 1, 2)]
            for alpha in alphas:
                weight = sum(alpha)
                if not 1 <= weight <= 6:
                    continue
                scale = 1
                for a in alpha:
                    scale *= factorial(a)
                coeffs = e_coefficients(clan_graph(u.inc_graph(), alpha))
                for lam in partitions_of(weight):
                    got = coefficient_of_alpha(monomial_g(ctx, lam), alpha)
                    assert got * scale == coeffs.get(lam, 0), (str(u), alpha, lam)


def test_forward_positivity_instances():
    # with every m^G (resp. s^G) slice monomial-positive, each sampled
    # blow-up must be e-positive (resp. s-positive)
    for n in range(1, 4):
        for u in enumerate_uios(n):
            ctx = ctx_of(u)
            alphas = [()]
            for _ in range(n):
                alphas = [a + (v,) for a in alphas for v in (1, 2)]
            for alpha in alphas:
                weight = sum(alpha)
                if weight > 6:
                    continue
                m_pos = all(
                    monomial_g(ctx, lam).is_monomial_positive()
                    for d in range(1, weight + 1)
                    for lam in partitions_of(d)
                )
                s_pos = all(
                    schur_g(ctx, lam).is_monomial_positive()
                    for d in range(1, weight + 1)
                    for lam in partitions_of(d)
                )
                rep = positivity_report(clan_graph(u.inc_graph(), alpha))
                if m_pos:
                    assert rep.e_positive
                if s_pos:
                    assert rep.s_positive


def test_images_are_integer_polynomials():
    for n in range(1, 5):
        for u in enumerate_uios(n):
            ctx = ctx_of(u)
            for d in range(1, 5):
                for lam in partitions_of(d):
                    for f in (SymFunc.m(lam), SymFunc.p(lam), SymFunc.s(lam)):
                        assert apply_ghom(f, ctx).is_integral()
