"""Engine: certificates, exhaustive search, certified minima, exact maxima."""

from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import oracle_image_size, oracle_min
from linforms.engine import (
    Certificate,
    NfConfig,
    binary_nf3_certificate,
    compute_mf,
    compute_nf,
    enumerate_minimizers,
    exact_nf2,
    lower_certificate,
    search_min,
)
from linforms.errors import (
    BudgetExceeded,
    CapacityExceeded,
    DiameterTooSmall,
    InconsistentKnown,
    InputError,
    MissingBaseValue,
    NotBinary,
    NotCertifiedExact,
    ValueOverflow,
)
from linforms.forms import LinearForm, enumerate_normalized
from linforms.sets import image


class TestExactNf2:
    @pytest.mark.parametrize(
        "coeffs,want",
        [((1,), 2), ((1, 1), 3), ((1, 2), 4), ((1, 3), 4), ((2, 3), 4), ((1, 1, 1), 4), ((1, 2, 4), 8)],
    )
    def test_examples(self, coeffs, want):
        assert exact_nf2(LinearForm(coeffs)) == want

    def test_matches_two_set_oracle(self):
        for m in (1, 2, 3):
            for f in enumerate_normalized(m, 5):
                assert exact_nf2(f) == oracle_image_size(f.coeffs, (0, 1))


class TestLowerCertificate:
    BASE = {1: 1, 2: 4}

    def test_k1_trivial(self):
        c = lower_certificate(LinearForm((1, 3)), 1, self.BASE)
        assert (c.kind, c.bound) == ("trivial-k1", 1)

    def test_k2_subset_sums(self):
        c = lower_certificate(LinearForm((1, 3)), 2, self.BASE)
        assert (c.kind, c.bound) == ("nf2-subset-sums", 4)

    def test_block_example(self):
        c = lower_certificate(LinearForm((1, 2)), 5, self.BASE)
        assert (c.kind, c.ell, c.lam, c.bound) == ("lemma-block", 2, 4, 13)
        assert c.chain == ((1, 1), (2, 4))

    def test_longer_blocks_help(self):
        # With the exact 3-set value 8 available, k=5 jumps from 13 to 15.
        c = lower_certificate(LinearForm((1, 3)), 5, {1: 1, 2: 4, 3: 8})
        assert (c.ell, c.bound) == (3, 15)

    def test_remainder_uses_best_known_rung(self):
        # k=6, ell=3: q=2 r=1, so the 2-set value finishes the bound.
        c = lower_certificate(LinearForm((1, 3)), 6, {1: 1, 2: 4, 3: 8})
        assert c.bound == 2 * 7 + 4

    def test_missing_base(self):
        with pytest.raises(MissingBaseValue):
            lower_certificate(LinearForm((1, 2)), 3, {1: 1})

    def test_inconsistent(self):
        with pytest.raises(InconsistentKnown):
            lower_certificate(LinearForm((1, 2)), 3, {1: 2, 2: 4})
        with pytest.raises(InconsistentKnown):
            lower_certificate(LinearForm((1, 2)), 3, {1: 1, 2: 4, 3: 4})

    def test_bad_k(self):
        with pytest.raises(InputError):
            lower_certificate(LinearForm((1, 2)), 0, self.BASE)

    @given(
        st.integers(min_value=3, max_value=40),
        st.integers(min_value=3, max_value=9),
        st.integers(min_value=5, max_value=12),
    )
    def test_dominates_unrefined(self, k, nf2, nf3):
        """Refined block bound >= ceil(((lam-1)k)/(ell-1)) - lam + 2 per rung."""
        known = {1: 1, 2: nf2, 3: max(nf3, nf2 + 1)}
        c = lower_certificate(LinearForm((1, 2)), k, known)
        for ell, lam in ((2, known[2]), (3, known[3])):
            unrefined = -(-((lam - 1) * k) // (ell - 1)) - lam + 2
            assert c.bound >= unrefined

    def test_json_uses_lambda_key(self):
        c = lower_certificate(LinearForm((1, 2)), 5, self.BASE)
        assert c.to_json() == {
            "kind": "lemma-block",
            "ell": 2,
            "lambda": 4,
            "chain": [[1, 1], [2, 4]],
        }


class TestBinaryNf3Certificate:
    @pytest.mark.parametrize("coeffs", [(1, 3), (2, 3), (1, 4), (3, 4), (2, 5), (1, 5)])
    def test_general_binaries(self, coeffs):
        c = binary_nf3_certificate(LinearForm(coeffs))
        assert c is not None
        assert (c.kind, c.bound) == ("binary-nf3-case-analysis", 8)
        assert c.chain == ((1, 1), (2, exact_nf2(LinearForm(coeffs))), (3, 8))

    @pytest.mark.parametrize("coeffs", [(1, 1), (1, 2)])
    def test_first_cases_excluded(self, coeffs):
        assert binary_nf3_certificate(LinearForm(coeffs)) is None

    def test_not_binary(self):
        with pytest.raises(NotBinary):
            binary_nf3_certificate(LinearForm((1, 2, 3)))

    def test_witness_attains_eight(self):
        for coeffs in [(1, 3), (2, 3), (1, 4), (3, 4), (2, 5), (1, 5)]:
            u1, u2 = coeffs
            assert oracle_image_size(coeffs, (0, u1, u2)) == 8


class TestSearchMin:
    def test_frozen_binary(self):
        out = search_min(LinearForm((1, 3)), 3, 9)
        assert out.best == 8
        assert [w.elems for w in out.witnesses] == [(0, 1, 3), (0, 1, 4)]
        assert out.nodes == 45
        assert not out.witness_overflow

    def test_frozen_binary_k4(self):
        out = search_min(LinearForm((1, 3)), 4, 12)
        assert out.best == 12
        assert [w.elems for w in out.witnesses] == [(0, 1, 3, 4)]
        assert out.nodes == 286

    def test_frozen_progression_case(self):
        out = search_min(LinearForm((1, 2)), 4, 6)
        assert out.best == 10
        assert [w.elems for w in out.witnesses] == [(0, 1, 2, 3)]

    def test_k1(self):
        out = search_min(LinearForm((1, 2)), 1, 0)
        assert out.best == 1 and out.witnesses[0].elems == (0,)

    def test_diameter_too_small(self):
        with pytest.raises(DiameterTooSmall):
            search_min(LinearForm((1, 2)), 4, 2)

    def test_bits_cap(self):
        with pytest.raises(CapacityExceeded):
            search_min(LinearForm((1, 999_999)), 2, 11)

    def test_prune_at_below_best_gives_none(self):
        out = search_min(LinearForm((1, 3)), 3, 9, prune_at=7)
        assert out.best is None and out.witnesses == ()

    def test_prune_at_best_keeps_all_witnesses(self):
        plain = search_min(LinearForm((1, 3)), 3, 9)
        seeded = search_min(LinearForm((1, 3)), 3, 9, prune_at=8)
        assert seeded.best == plain.best
        assert seeded.witnesses == plain.witnesses

    def test_witness_cap_overflow_flag(self):
        out = search_min(LinearForm((1, 3)), 3, 9, witness_cap=1)
        assert out.best == 8
        assert [w.elems for w in out.witnesses] == [(0, 1, 3)]
        assert out.witness_overflow

    def test_budget_exceeded(self):
        with pytest.raises(BudgetExceeded):
            search_min(LinearForm((1, 3)), 4, 12, node_budget=5)

    def test_thread_counts_identical(self):
        runs = [
            search_min(LinearForm((1, 2, 3)), 4, 12, threads=n) for n in (1, 2, 8)
        ]
        assert runs[0] == runs[1] == runs[2]

    def test_matches_oracle_sweep(self):
        for f in enumerate_normalized(2, 4):
            for k in (2, 3):
                for diameter in range(k - 1, 9):
                    got = search_min(f, k, diameter)
                    want_best, want_wits = oracle_min(f.coeffs, k, diameter)
                    assert got.best == want_best, (f, k, diameter)
                    assert tuple(w.elems for w in got.witnesses) == want_wits

    @given(
        st.tuples(st.integers(1, 5), st.integers(1, 5)).map(
            lambda t: tuple(sorted(t))
        ).filter(lambda t: math.gcd(*t) == 1),
        st.integers(min_value=2, max_value=3),
        st.integers(min_value=3, max_value=9),
    )
    def test_matches_oracle_random(self, coeffs, k, diameter):
        f = LinearForm(coeffs)
        got = search_min(f, k, diameter)
        want_best, want_wits = oracle_min(coeffs, k, diameter)
        assert got.best == want_best
        assert tuple(w.elems for w in got.witnesses) == want_wits


class TestComputeNf:
    def test_exact_binary_k3(self):
        res = compute_nf(LinearForm((1, 3)), 3)
        assert res.exact and res.best == 8 and res.lower == 8
        assert res.certificate.kind == "binary-nf3-case-analysis"
        assert [w.elems for w in res.witnesses] == [(0, 1, 3), (0, 1, 4)]

    def test_open_bracket_reported(self):
        res = compute_nf(LinearForm((1, 3)), 4)
        assert not res.exact
        assert (res.lower, res.best) == (11, 12)
        assert res.certificate.kind == "lemma-block"

    def test_exact_complete_form(self):
        res = compute_nf(LinearForm((1, 2, 3)), 4)
        assert res.exact and res.best == 19
        assert [w.elems for w in res.witnesses] == [(0, 1, 2, 3)]

    def test_ladder_depth_changes_lower_only(self):
        shallow = compute_nf(LinearForm((1, 3)), 4, NfConfig(ladder_max_ell=2))
        deep = compute_nf(LinearForm((1, 3)), 4)
        assert shallow.best == deep.best == 12
        assert shallow.lower == 10 and deep.lower == 11

    def test_custom_diameter(self):
        res = compute_nf(LinearForm((1, 3)), 3, NfConfig(diameter=4))
        assert res.diameter_searched == 4
        assert res.best == 8 and res.exact

    def test_bad_inputs(self):
        with pytest.raises(InputError):
            compute_nf(LinearForm((1, 2)), 0)
        with pytest.raises(DiameterTooSmall):
            compute_nf(LinearForm((1, 2)), 3, NfConfig(diameter=1))

    def test_budget_propagates(self):
        with pytest.raises(BudgetExceeded):
            compute_nf(LinearForm((1, 3)), 5, NfConfig(node_budget=3))

    def test_json_shape(self):
        res = compute_nf(LinearForm((1, 3)), 3)
        out = res.to_json()
        assert list(out) == [
            "coeffs",
            "k",
            "diameter",
            "lower",
            "certificate",
            "best",
            "exact",
            "witnesses",
            "nodes",
        ]
        assert out["coeffs"] == [1, 3]
        assert out["witnesses"] == [[0, 1, 3], [0, 1, 4]]
        assert out["certificate"]["lambda"] == 8

    def test_determinism_across_threads(self):
        outs = [
            compute_nf(LinearForm((1, 2, 4)), 4, NfConfig(threads=n)).to_json()
            for n in (1, 2, 8)
        ]
        assert outs[0] == outs[1] == outs[2]


class TestComputeMf:
    def test_distinct_subset_sums_power(self):
        res = compute_mf(LinearForm((1, 2, 4)), 3)
        assert res.value == 27
        assert res.witness == (1, 13, 169) and res.base == 13

    def test_all_ones_binomial(self):
        res = compute_mf(LinearForm((1, 1, 1)), 4)
        assert res.value == 20 == math.comb(4 + 3 - 1, 3)
        assert res.witness == (1, 4, 16, 64)

    def test_single_variable(self):
        res = compute_mf(LinearForm((1,)), 7)
        assert res.value == 7 and res.base == 2

    def test_witness_reimaged(self):
        for coeffs, k in [((1, 2), 5), ((2, 3, 4), 3), ((1, 1, 2), 4)]:
            res = compute_mf(LinearForm(coeffs), k)
            assert image(LinearForm(coeffs), res.witness).size == res.value

    def test_bad_k(self):
        with pytest.raises(InputError):
            compute_mf(LinearForm((1, 2)), 0)

    def test_value_overflow(self):
        with pytest.raises(ValueOverflow):
            compute_mf(LinearForm((1, 9)), 16)


class TestEnumerateMinimizers:
    def test_progression_only_for_complete(self):
        assert [w.elems for w in enumerate_minimizers(LinearForm((1, 2)), 5)] == [
            (0, 1, 2, 3, 4)
        ]

    def test_open_bracket_refused(self):
        with pytest.raises(NotCertifiedExact, match=r"\[11, 12\]"):
            enumerate_minimizers(LinearForm((1, 3)), 4)

    def test_wider_diameter_keeps_exactness(self):
        wits = enumerate_minimizers(LinearForm((1, 3)), 3, diameter=20)
        assert {w.elems for w in wits} == {(0, 1, 3), (0, 1, 4)}
