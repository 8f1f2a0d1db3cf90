import random

import pytest

from conftest import (
    CCZ_COEFFS,
    DOUBLE_CCZ_COEFFS,
    eval_phase,
    in_punctured_rm,
    random_entries,
)
from rmtopt import (
    BinaryVector,
    CoeffVector,
    GF2Matrix,
    MonomialCoeffs,
    PhaseRep,
    Segment,
    effective_degree,
    extract,
    is_null_phase,
    lift,
    monomial_decompose,
    parse,
)


def segment_of(circuit) -> Segment:
    return Segment(circuit.n, circuit.wires, circuit.gates, circuit.k)


def test_extract_ccz(ccz_circuit):
    rep = extract(segment_of(ccz_circuit))
    assert rep.coeffs.entries == CCZ_COEFFS
    assert rep.perm == GF2Matrix.identity(3)


def test_extract_double_ccz(double_ccz_circuit):
    rep = extract(segment_of(double_ccz_circuit))
    assert rep.coeffs.entries == DOUBLE_CCZ_COEFFS
    assert rep.perm == GF2Matrix.identity(4)


def test_extract_tracks_permutation():
    c = parse(".v a b\nBEGIN\ncnot a b\nT b\nEND\n")
    rep = extract(segment_of(c))
    # wire b now carries a xor b, so the phase lands on label 3
    assert rep.perm.rows == (0b01, 0b11)
    assert rep.coeffs.entries == (0, 0, 1)


def test_extract_merges_phases_mod_modulus():
    c = parse(".v a\nBEGIN\nT a\nT a\nZ a\nZ a\nEND\n")
    rep = extract(segment_of(c))
    assert rep.coeffs.entries == (2,)


def test_from_entries_round_trip():
    rng = random.Random(31)
    for n, k in ((1, 1), (2, 2), (3, 2), (4, 3)):
        entries = random_entries(rng, n, k)
        a = CoeffVector.from_entries(n, k, entries)
        assert a.entries == entries
        assert all(a.entry(y) == entries[y - 1] for y in range(1, 1 << n))


def test_from_entries_validates_length_and_reduces():
    with pytest.raises(ValueError):
        CoeffVector.from_entries(2, 2, (1, 2))  # wrong length
    assert CoeffVector.from_entries(2, 2, (8, 9, -1)).entries == (0, 1, 7)


def test_arithmetic_matches_list_reference():
    rng = random.Random(32)
    for _ in range(40):
        n, k = rng.choice(((2, 1), (3, 2), (4, 2), (3, 3)))
        modulus = 1 << (k + 1)
        xs = random_entries(rng, n, k)
        ys = random_entries(rng, n, k)
        a = CoeffVector.from_entries(n, k, xs)
        b = CoeffVector.from_entries(n, k, ys)
        assert (a + b).entries == tuple((x + y) % modulus for x, y in zip(xs, ys))
        assert (a - b).entries == tuple((x - y) % modulus for x, y in zip(xs, ys))
        assert (-a).entries == tuple(-x % modulus for x in xs)
        assert (a - a).entries == CoeffVector.zero(n, k).entries


def test_res2_planes():
    a = CoeffVector.from_entries(4, 2, DOUBLE_CCZ_COEFFS)
    assert a.res2() == BinaryVector.from_bits([x & 1 for x in DOUBLE_CCZ_COEFFS])
    assert a.shifted_res2(0) == a.res2()
    assert a.shifted_res2(1).to_bits() == (1, 1, 1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0)
    assert a.shifted_res2(2).to_bits() == (0, 1, 1, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0)
    assert a.weight_res2() == 8
    with pytest.raises(ValueError):
        a.shifted_res2(3)


def test_evaluate_matches_reference():
    rng = random.Random(33)
    for _ in range(30):
        n, k = rng.choice(((2, 2), (3, 2), (4, 1), (3, 3)))
        entries = random_entries(rng, n, k)
        a = CoeffVector.from_entries(n, k, entries)
        for x in range(1 << n):
            assert a.evaluate(x) == eval_phase(entries, x, n, k)


def test_monomial_decompose_small_goldens():
    a = CoeffVector.from_entries(2, 2, (1, 1, 7))
    assert monomial_decompose(a).terms == {0: 3, 1: 6, 2: 6}
    b = CoeffVector.from_entries(2, 2, (4, 4, 4))
    assert monomial_decompose(b).terms == {0: 4}
    # the basis has no triple monomial, so the doubly controlled Z spreads
    # over every lower term
    ccz = CoeffVector.from_entries(3, 2, CCZ_COEFFS)
    assert monomial_decompose(ccz).terms == {0: 7, 1: 2, 2: 2, 3: 4, 4: 2, 5: 4, 6: 4}


def test_decompose_inverts_from_monomials():
    rng = random.Random(34)
    for _ in range(40):
        n, k = rng.choice(((2, 2), (3, 2), (4, 2), (3, 1), (4, 3)))
        modulus = 1 << (k + 1)
        terms = {}
        for y in range(1 << n):
            if y.bit_count() <= n - 1 and rng.random() < 0.4:
                c = rng.randrange(1, modulus)
                terms[y] = c
        a = CoeffVector.from_monomials(n, k, terms)
        assert monomial_decompose(a).terms == terms


def test_decompose_reconstructs_vector():
    rng = random.Random(35)
    for _ in range(30):
        n, k = rng.choice(((2, 2), (3, 2), (4, 2)))
        a = CoeffVector.from_entries(n, k, random_entries(rng, n, k))
        mc = monomial_decompose(a)
        assert CoeffVector.from_monomials(n, k, mc.terms) == a


def test_monomial_coeffs_validation():
    MonomialCoeffs(3, 2, {0: 1, 3: 7})
    with pytest.raises(ValueError):
        MonomialCoeffs(3, 2, {7: 1})  # full monomial not in the basis
    with pytest.raises(ValueError):
        MonomialCoeffs(3, 2, {1: 0})
    with pytest.raises(ValueError):
        MonomialCoeffs(3, 2, {1: 8})


def test_effective_degree():
    assert effective_degree(MonomialCoeffs(4, 2, {})) is None
    assert effective_degree(MonomialCoeffs(4, 2, {0: 3})) == 0
    # even coefficients buy one degree per factor of two
    assert effective_degree(MonomialCoeffs(4, 2, {0b111: 4})) == 1
    assert effective_degree(MonomialCoeffs(4, 2, {0b111: 2})) == 2
    assert effective_degree(MonomialCoeffs(4, 2, {0b11: 1, 0b111: 4})) == 2


def test_is_null_phase_goldens():
    assert is_null_phase(CoeffVector.from_entries(4, 2, (1,) * 15))
    assert is_null_phase(CoeffVector.from_entries(2, 2, (4, 4, 4)))
    assert not is_null_phase(CoeffVector.from_entries(2, 2, (1, 1, 7)))
    assert not is_null_phase(CoeffVector.from_entries(3, 2, CCZ_COEFFS))
    assert is_null_phase(CoeffVector.zero(3, 2))


def test_null_phase_agrees_with_exhaustive_eval():
    # two independent routes: degree bound on the decomposition vs
    # evaluating the polynomial at every input
    rng = random.Random(36)
    for _ in range(60):
        n, k = rng.choice(((2, 1), (3, 1), (3, 2), (4, 2), (4, 3)))
        if rng.random() < 0.5:
            a = CoeffVector.from_entries(n, k, random_entries(rng, n, k))
        else:
            a = _random_null(rng, n, k)
        null_by_degree = is_null_phase(a)
        null_by_eval = all(a.evaluate(x) == 0 for x in range(1 << n))
        assert null_by_degree == null_by_eval


def _random_null(rng, n, k):
    modulus = 1 << (k + 1)
    terms = {}
    for y in range(1 << n):
        room = y.bit_count() - (n - k - 2)
        if y.bit_count() <= n - 1 and rng.random() < 0.5:
            c = rng.randrange(1, modulus)
            if room > 0:
                c = (c << room) % modulus
            if c:
                terms[y] = c
    return CoeffVector.from_monomials(n, k, terms)


def test_lift_round_trip():
    from rmtopt import monomial_mask

    rng = random.Random(37)
    for n, k in ((4, 2), (5, 2), (5, 1), (5, 3)):
        r = n - k - 2
        for _ in range(20):
            support = {
                y for y in range(1 << n) if y.bit_count() <= r and rng.random() < 0.5
            }
            bits = 0
            for y in support:
                bits ^= monomial_mask(y, n, punctured=True)
            cw = BinaryVector((1 << n) - 1, bits)
            c = lift(cw, n, k)
            assert c.res2() == cw
            assert is_null_phase(c)
            assert in_punctured_rm(list(cw.to_bits()), r, n)


def test_lift_rejects_non_codewords():
    # weight-1 word: both extensions have degree n - 1 or n, above r = 1
    with pytest.raises(ValueError):
        lift(BinaryVector(15, 0b1), 4, 1)
    with pytest.raises(ValueError):
        lift(BinaryVector(7, 0b1111111), 3, 2)


def test_lift_zero_and_all_ones():
    z = lift(BinaryVector(15, 0), 4, 2)
    assert z == CoeffVector.zero(4, 2)
    ones = lift(BinaryVector(15, (1 << 15) - 1), 4, 2)
    assert ones.res2().weight() == 15
    assert is_null_phase(ones)


def test_phase_rep_validation():
    a = CoeffVector.zero(2, 2)
    PhaseRep(a, GF2Matrix.identity(2))
    with pytest.raises(ValueError):
        PhaseRep(a, GF2Matrix.identity(3))


def test_extract_respects_modulus():
    c = parse(".v a\n.k 1\nBEGIN\nRk 3 a\nRk 3 a\nEND\n")
    rep = extract(segment_of(c))
    assert rep.coeffs.k == 1
    assert rep.coeffs.entries == (2,)
