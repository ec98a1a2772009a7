import json
import os
from fractions import Fraction

import pytest

from chroma.combinat import partitions_of
from chroma.polyring import Polynomial
from chroma.symfunc import (
    BASES,
    SymFunc,
    TransitionMatrixCache,
    cauchy_check,
    convert,
    expand_concrete,
    jacobi_trudi_e,
    newton_p,
    transition_matrix,
)

X = "x"


def xvar(i, n):
    return Polynomial.variable(i, n, X)


# ---------------------------------------------------------------------------
# concrete expansions


def test_expand_elementary():
    assert expand_concrete("e", (1,), 2) == xvar(1, 2) + xvar(2, 2)
    e2 = expand_concrete("e", (2,), 3)
    assert len(e2.terms) == 3
    assert e2.coeff(((1, 1), (2, 1))) == 1


def test_expand_power():
    p2 = expand_concrete("p", (2,), 2)
    assert p2 == xvar(1, 2) ** 2 + xvar(2, 2) ** 2


def test_expand_monomial():
    m21 = expand_concrete("m", (2, 1), 3)
    # 6 ordered choices of (squared slot, linear slot)
    assert len(m21.terms) == 6
    assert m21.coeff(((1, 2), (2, 1))) == 1
    assert m21.coeff(((1, 1), (2, 2))) == 1
    # too few variables truncates to zero
    assert expand_concrete("m", (1, 1, 1), 2).is_zero()


def test_expand_schur_21_frozen():
    # hand expansion of the 2x2 elementary determinant in three variables
    got = expand_concrete("s", (2, 1), 3)
    expected = Polynomial.zero(3, X)
    for mono, c in [
        ((((1, 2), (2, 1))), 1),
        ((((1, 2), (3, 1))), 1),
        ((((1, 1), (2, 2))), 1),
        ((((1, 1), (3, 2))), 1),
        ((((2, 2), (3, 1))), 1),
        ((((2, 1), (3, 2))), 1),
        ((((1, 1), (2, 1), (3, 1))), 2),
    ]:
        expected = expected + Polynomial.monomial(mono, c, 3, X)
    assert got == expected


# ---------------------------------------------------------------------------
# determinant expressions


def test_jacobi_trudi_examples():
    assert jacobi_trudi_e((1,)) == SymFunc.e((1,))
    assert jacobi_trudi_e((2, 1)) == SymFunc.e((2, 1)) - SymFunc.e((3,))
    assert jacobi_trudi_e(()) == SymFunc("e", {(): 1})


def test_jacobi_trudi_matches_transition_matrices():
    for d in range(1, 7):
        for lam in partitions_of(d):
            via_matrix = convert(SymFunc.s(lam), "e")
            assert jacobi_trudi_e(lam) == via_matrix


def test_newton_examples():
    assert newton_p(1) == SymFunc.e((1,))
    assert newton_p(2) == SymFunc.e((1, 1)) - 2 * SymFunc.e((2,))
    assert newton_p(3) == (
        SymFunc.e((1, 1, 1)) - 3 * SymFunc.e((2, 1)) + 3 * SymFunc.e((3,))
    )


def test_newton_matches_transition_matrices():
    for k in range(1, 7):
        assert newton_p(k) == convert(SymFunc.p((k,)), "e")


# ---------------------------------------------------------------------------
# transition matrices


def test_identity_transitions():
    for basis in BASES:
        m = transition_matrix(basis, basis, 3)
        for lam in partitions_of(3):
            assert m[lam] == {lam: 1}


def test_p_to_e_degree_two():
    m = transition_matrix("p", "e", 2)
    assert m[(2,)] == {(1, 1): 1, (2,): -2}
    assert m[(1, 1)] == {(1, 1): 1}


def test_m_to_e_degree_three_integer_entries():
    m = transition_matrix("m", "e", 3)
    for lam in partitions_of(3):
        for c in m[lam].values():
            assert c.denominator == 1
    assert m[(2, 1)] == {(2, 1): 1, (3,): -3}
    assert m[(3,)] == {(1, 1, 1): 1, (2, 1): -3, (3,): 3}


def test_m_to_e_matrix_is_symmetric():
    # the pairing behind the kernel identity relies on this
    for d in range(1, 6):
        m = transition_matrix("m", "e", d)
        for lam in partitions_of(d):
            for mu in partitions_of(d):
                assert m[lam].get(mu, 0) == m[mu].get(lam, 0)


def test_integrality_of_e_expansions():
    for d in range(1, 7):
        for frm in ("m", "p", "s"):
            m = transition_matrix(frm, "e", d)
            for row in m.values():
                assert all(c.denominator == 1 for c in row.values())


def test_transitions_compose_to_identity():
    for d in range(1, 6):
        lams = partitions_of(d)
        for b1 in BASES:
            for b2 in BASES:
                fwd = transition_matrix(b1, b2, d)
                bwd = transition_matrix(b2, b1, d)
                for lam in lams:
                    acc = {}
                    for mu, c in fwd[lam].items():
                        for nu, c2 in bwd[mu].items():
                            acc[nu] = acc.get(nu, 0) + c * c2
                    acc = {k: v for k, v in acc.items() if v}
                    assert acc == {lam: 1}, (b1, b2, d, lam)


def test_convert_examples():
    assert convert(SymFunc.e((4,)), "s") == SymFunc.s((1, 1, 1, 1))
    assert convert(SymFunc.p((1,)), "m") == SymFunc.m((1,))
    assert convert(SymFunc.m((2, 1)), "p") == SymFunc.p((2, 1)) - SymFunc.p((3,))


def test_convert_round_trip():
    f = SymFunc("m", {(2, 1): 3, (1, 1, 1): Fraction(-1, 2), (1,): 5})
    for to in BASES:
        assert convert(convert(f, to), "m") == f


def test_convert_preserves_concrete_expansion():
    for d in range(1, 7):
        for lam in partitions_of(d):
            for frm in BASES:
                f = SymFunc.unit(frm, lam)
                reference = f.expand(d)
                for to in BASES:
                    assert convert(f, to).expand(d) == reference, (frm, to, lam)


# ---------------------------------------------------------------------------
# the product identity


def test_cauchy_small():
    assert cauchy_check(1, 1)
    assert cauchy_check(2, 2)
    assert cauchy_check(2, 3)
    assert cauchy_check(3, 3)


def count_01_matrices(row_sums, col_sums):
    """Brute force: 0-1 matrices with the given row and column sums."""
    cols = len(col_sums)

    def rec(row, remaining):
        if row == len(row_sums):
            return 1 if all(r == 0 for r in remaining) else 0
        total = 0
        from itertools import combinations

        for support in combinations(range(cols), row_sums[row]):
            if any(remaining[j] == 0 for j in support):
                continue
            nxt = list(remaining)
            for j in support:
                nxt[j] -= 1
            total += rec(row + 1, tuple(nxt))
        return total

    return rec(0, tuple(col_sums))


def test_e_to_m_matrix_counts_01_matrices():
    # independent combinatorial oracle for the basis engine: the m-coefficient
    # of e_mu on lam counts 0-1 matrices with row sums mu and column sums lam
    for d in range(1, 6):
        matrix = transition_matrix("e", "m", d)
        for mu in partitions_of(d):
            for lam in partitions_of(d):
                assert matrix[mu].get(lam, 0) == count_01_matrices(mu, lam), (
                    mu,
                    lam,
                )


def test_newton_matches_classical_recurrence():
    # p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... + (-1)^(k-1) k e_k, derived
    # without any determinant
    recurrence = {}
    for k in range(1, 8):
        total = SymFunc.zero("e")
        for i in range(1, k):
            term = SymFunc.e((i,)) * recurrence[k - i]
            total = total + (term if i % 2 == 1 else -term)
        ek = SymFunc("e", {(k,): k})
        total = total + (ek if k % 2 == 1 else -ek)
        recurrence[k] = total
        assert newton_p(k) == total, k


def test_schur_to_m_is_kostka_nonnegative():
    # unitriangular with nonnegative integer entries and K[lam][lam] = 1
    for d in range(1, 7):
        matrix = transition_matrix("s", "m", d)
        for lam in partitions_of(d):
            row = matrix[lam]
            assert row.get(lam, 0) == 1
            for mu, c in row.items():
                assert c.denominator == 1 and c >= 0, (lam, mu, c)


# ---------------------------------------------------------------------------
# cache behaviour


def test_disk_cache_round_trip(tmp_path):
    cache = TransitionMatrixCache(str(tmp_path))
    m1 = cache.get("p", "e", 3)
    path = cache.key_path("p", "e", 3)
    assert os.path.exists(path)
    fresh = TransitionMatrixCache(str(tmp_path))
    assert fresh.get("p", "e", 3) == m1


def test_disk_cache_detects_corruption(tmp_path):
    cache = TransitionMatrixCache(str(tmp_path))
    expected = cache.get("m", "e", 3)
    path = cache.key_path("m", "e", 3)
    with open(path) as fh:
        payload = json.load(fh)
    payload["matrix"]["3"]["3"] = "999"  # tamper without fixing the checksum
    with open(path, "w") as fh:
        json.dump(payload, fh)
    fresh = TransitionMatrixCache(str(tmp_path))
    assert fresh.get("m", "e", 3) == expected  # recomputed, not trusted


def test_cache_rebuild_list_clear(tmp_path):
    cache = TransitionMatrixCache(str(tmp_path))
    built = cache.rebuild(2)
    assert len(built) == 2 * 12
    keys = cache.stored_keys()
    assert ("m", "e", 2) in keys
    cache.clear()
    assert TransitionMatrixCache(str(tmp_path)).stored_keys() == []


def test_cache_concurrent_readers(tmp_path):
    import threading

    cache = TransitionMatrixCache(str(tmp_path))
    results = []

    def worker():
        results.append(cache.get("m", "e", 4))

    threads = [threading.Thread(target=worker) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(results) == 8
    assert all(r == results[0] for r in results)


def test_symfunc_json_round_trip():
    f = SymFunc("e", {(2, 1): 3, (3,): Fraction(1, 2)})
    data = f.to_json()
    assert data["basis"] == "e"
    assert data["coeffs"]["2,1"] == "3"
    assert data["coeffs"]["3"] == "1/2"
    assert SymFunc.from_json(data) == f


def test_symfunc_multiplication_rules():
    e = SymFunc.e((2,)) * SymFunc.e((1,))
    assert e == SymFunc.e((2, 1))
    with pytest.raises(ValueError):
        SymFunc.m((1,)) * SymFunc.m((1,))
