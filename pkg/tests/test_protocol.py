import math
import random
from fractions import Fraction

import numpy as np
import pytest

from wkron.exact import SqrtRational
from wkron.kronstate import khat, normalized
from wkron.partitions import ptuple, reduced_entropy, w_admissible
from wkron.protocol import (
    GHZState,
    SizeCapError,
    marginal_entropy,
    multilocal_schur,
    oracle_khat,
    residual_schmidt,
    sample_outcomes,
    sample_run,
    sector_distribution,
    tensor_power,
    verify_report,
)
from wkron.wstates import WClassState, w_normal_form


def sq(x):
    return SqrtRational.sqrt(Fraction(x))


def test_tensor_power_w_single_copy():
    w = w_normal_form(3)
    d = tensor_power(w, 1, mode="exact")
    assert d.amplitudes == {0b100: sq("1/3"), 0b010: sq("1/3"), 0b001: sq("1/3")}


def test_tensor_power_w_two_copies():
    w = w_normal_form(3)
    d = tensor_power(w, 2, mode="exact")
    assert len(d.amplitudes) == 9
    assert all(v == sq("1/9") for v in d.amplitudes.values())
    assert d.norm_sq() == 1


def test_tensor_power_ghz():
    g = GHZState(Fraction(1, 3), 3)
    d = tensor_power(g, 2, mode="exact")
    # patterns: (00,00,00),(01,01,01),(10,10,10),(11,11,11) in party-major bits
    vals = sorted(v.square() for v in d.amplitudes.values())
    assert len(d.amplitudes) == 4
    assert vals == sorted([Fraction(4, 9), Fraction(2, 9), Fraction(2, 9), Fraction(1, 9)])
    assert d.norm_sq() == 1


def test_tensor_power_size_cap():
    with pytest.raises(SizeCapError):
        tensor_power(w_normal_form(3), 7, mode="exact")  # 21 qubits > 18
    with pytest.raises(SizeCapError):
        tensor_power(w_normal_form(3), 9, mode="float")  # 27 > 24


def test_bit_layout_party_major():
    w = w_normal_form(2)
    d = tensor_power(w, 2, mode="exact")
    # |psi> = (|10>+|01>)/sqrt2 per copy; party-major: party0 bits then party1
    # copy pattern (10),(01) -> party0 = "10", party1 = "01" -> index 0b1001
    assert 0b1001 in d.amplitudes
    assert d.stuple_of(0b1001) == ((1, 0), (0, 1))
    assert d.index_of(((1, 0), (0, 1))) == 0b1001


def test_multilocal_schur_w_sectors():
    w = w_normal_form(3)
    sectors = multilocal_schur(tensor_power(w, 2, mode="exact"))
    expect = {
        ptuple((2, 0), (2, 0), (2, 0)),
        ptuple((2, 0), (1, 1), (1, 1)),
        ptuple((1, 1), (2, 0), (1, 1)),
        ptuple((1, 1), (1, 1), (2, 0)),
    }
    assert set(sectors) == expect
    assert sum(b.norm_sq() for b in sectors.values()) == 1


def test_multilocal_schur_product_state():
    raw = [SqrtRational.one(), SqrtRational.zero()] * 4
    raw = [SqrtRational.one()] + [SqrtRational.zero()] * 7  # |000>
    d = tensor_power(raw, 3, mode="exact")
    sectors = multilocal_schur(d)
    assert set(sectors) == {ptuple((3, 0), (3, 0), (3, 0))}
    assert sectors[ptuple((3, 0), (3, 0), (3, 0))].norm_sq() == 1


def test_block_norms_sum_to_one_exact():
    for state in (w_normal_form(3), GHZState(Fraction(2, 5), 3)):
        for n in (2, 3, 4):
            sectors = multilocal_schur(tensor_power(state, n, mode="exact"))
            assert sum(b.norm_sq() for b in sectors.values()) == 1


def test_float_path_matches_exact_sector_matrices():
    w = w_normal_form(3)
    for n in (2, 3):
        se = multilocal_schur(tensor_power(w, n, mode="exact"))
        sf = multilocal_schur(tensor_power(w, n, mode="float"))
        assert set(se) == set(sf)
        for lams in se:
            assert se[lams].weights == sf[lams].weights
            assert se[lams].qlabels == sf[lams].qlabels
            diff = np.abs(se[lams].float_matrix() - sf[lams].float_matrix()).max()
            assert diff < 1e-12, lams


def test_residual_schmidt_w_rank1():
    w = w_normal_form(3)
    for n in (2, 3, 4):
        sectors = multilocal_schur(tensor_power(w, n, mode="exact"))
        for lams, block in sectors.items():
            sv = residual_schmidt(block)
            assert abs(sv[0] - 1) < 1e-12
            assert all(v < 1e-12 for v in sv[1:])


def test_residual_schmidt_ghz_rank2():
    g = GHZState(Fraction(1, 3), 3)
    sectors = multilocal_schur(tensor_power(g, 6, mode="float"))
    block = sectors[ptuple((4, 2), (4, 2), (4, 2))]
    sv = residual_schmidt(block)
    assert sv[0] < 1
    assert sv[1] > 0.1


def test_residual_schmidt_ghz_sector_rank1():
    g = GHZState(Fraction(1, 3), 3)
    sectors = multilocal_schur(tensor_power(g, 2, mode="exact"))
    sv = residual_schmidt(sectors[ptuple((2, 0), (2, 0), (2, 0))])
    assert abs(sv[0] - 1) < 1e-12


def test_oracle_khat_examples():
    kv = oracle_khat(ptuple((2, 0), (2, 0), (2, 0)), 2)
    assert kv.coeffs == {((0, 0),) * 3: sq("1/2")}
    kv = oracle_khat(ptuple((2, 1), (2, 1), (2, 1)), 3)
    mags = sorted(v.square() for v in kv.coeffs.values())
    assert mags == [Fraction(2, 3)] * 4
    assert oracle_khat(ptuple((1, 1), (1, 1), (1, 1)), 2).is_zero


def test_master_oracle_equivalence_small():
    rep = verify_report(cases=((3, 4), (4, 3)))
    assert rep["ok"], rep


def test_master_oracle_equivalence_two_parties():
    # the two-party case: every sector pairs equal partitions and the
    # Kronecker vector is the maximally entangled one
    rep = verify_report(cases=((2, 6),))
    assert rep["ok"], rep
    from wkron.kronstate import khat_all

    for lams in khat_all(2, 4):
        assert lams[0] == lams[1]


def test_theorem1_universality_random_states():
    rng = random.Random(90210)

    def rand_state():
        while True:
            ks = [rng.randint(0, 6) for _ in range(4)]
            if sum(1 for k in ks[1:] if k) >= 2:
                s = sum(ks)
                return WClassState(tuple(Fraction(k, s) for k in ks))

    w_ref = w_normal_form(3)
    for _ in range(5):
        state = rand_state()
        for n in (2, 3, 4):
            sectors = multilocal_schur(tensor_power(state, n, mode="exact"))
            for lams, block in sectors.items():
                m = block.float_matrix()
                sv = np.linalg.svd(m, compute_uv=False)
                if len(sv) > 1:
                    assert sv[1] <= 1e-10 * max(1, sv[0])
                # extracted q-side factor is the W Kronecker vector
                _, _, vt = np.linalg.svd(m)
                qvec = vt[0]
                kv = normalized(khat(3, n, lams))
                ref = np.zeros(len(block.qlabels))
                for i, qt in enumerate(block.qlabels):
                    if qt in kv.coeffs:
                        ref[i] = float(kv.coeffs[qt])
                cos = abs(float(qvec @ ref))
                assert cos >= 1 - 1e-10, (state, lams, cos)


def test_sample_run_deterministic():
    w = w_normal_form(3)
    a = sample_outcomes(w, 2, seed=7, count=50)
    b = sample_outcomes(w, 2, seed=7, count=50)
    assert a == b
    r1 = sample_run(w, 2, seed=123)
    r2 = sample_run(w, 2, seed=123)
    assert r1["outcome"] == r2["outcome"]
    assert r1["kind"] == "w-kronecker"
    assert r1["kron"] is not None


def test_sample_frequencies_match_probability():
    w = w_normal_form(3)
    count = 100_000
    outs = sample_outcomes(w, 2, seed=31337, count=count)
    target = ptuple((2, 0), (2, 0), (2, 0))
    freq = sum(1 for o in outs if o == target) / count
    p = 2 / 3
    sigma = math.sqrt(p * (1 - p) / count)
    assert abs(freq - p) <= 3 * sigma


def test_sample_product_state_like_distribution():
    # distributions carry exactly the nonzero sectors
    w = w_normal_form(3)
    dist = sector_distribution(w, 2)
    assert sum(p for _, p in dist) == 1
    assert all(w_admissible(lams) for lams, _ in dist)


def test_sample_product_state_always_top_sector():
    product = [SqrtRational.one()] + [SqrtRational.zero()] * 7
    outs = sample_outcomes(product, 3, seed=1, count=10)
    assert all(o == ptuple((3, 0), (3, 0), (3, 0)) for o in outs)
    r = sample_run(product, 2, seed=0)
    assert r["outcome"] == ptuple((2, 0), (2, 0), (2, 0))
    assert r["kind"] == "residual-ensemble"
    assert abs(r["schmidt"][0] - 1) < 1e-12


def test_marginal_entropy_product_is_zero():
    product = [SqrtRational.one()] + [SqrtRational.zero()] * 7
    for party in range(3):
        assert marginal_entropy(product, party) == 0.0


def test_ghz_sample_run():
    g = GHZState(Fraction(1, 3), 3)
    r = sample_run(g, 4, seed=5)
    assert r["kind"] == "ghz-residual"
    assert "gram_spectrum" in r


def test_marginal_entropy_examples():
    w = w_normal_form(3)
    for party in range(3):
        assert abs(marginal_entropy(w, party) - 0.9182958340544896) < 1e-12
    g = GHZState(Fraction(1, 3), 3)
    assert abs(marginal_entropy(g, 0) - 0.9182958340544896) < 1e-12
    product = WClassState((Fraction(0), Fraction(1, 2), Fraction(1, 2)))
    # two-qubit Bell state: marginal entropy 1 bit
    assert abs(marginal_entropy(product, 0) - 1.0) < 1e-12


def test_per_copy_yield_n12():
    w = w_normal_form(3)
    outs = sample_outcomes(w, 12, seed=424242, count=2000)
    for party in range(3):
        mean = sum(reduced_entropy(o[party]) for o in outs) / len(outs)
        assert abs(mean - marginal_entropy(w, party)) < 0.15


def test_oracle_khat_validates_input():
    with pytest.raises(ValueError):
        oracle_khat(ptuple((2, 0), (2, 0), (2, 0)), 3)
