import random

import pytest

from corpus import admitted_corpus
from hilbreg.errors import BudgetExceeded, InfiniteDelta, NotNonnegative, PreconditionError
from hilbreg.ingest import load_fixtures
from hilbreg.invariants import (
    admit,
    compute_invariants,
    deg_series,
    delta,
    delta_d,
    hdepth,
    hprojdim,
    hreg,
    hreg_width_k,
    loop_bound,
    reduce_to_linear,
)
from hilbreg.oracle import brute_delta, brute_hdepth, brute_hreg, default_budget
from hilbreg.polyseries import HilbertSeries, IntPolynomial, parse_poly, shift_substitute


def H(text, d):
    return HilbertSeries(parse_poly(text), d)


def P(*c):
    return IntPolynomial(c)


DEEP = H("2-5t+t^2+4t^3", 7)


class TestDelta:
    def test_examples(self):
        assert delta_d(P(2, -9, 13, -4), 7) == 7
        assert delta_d(P(1, -2, 3, -1), 3) == 2
        assert delta_d(P(1, -2, 3, -1), 2) == 2
        assert delta_d(P(1, -1, 0, 1), 3) == 1
        assert delta_d(P(1, 1, 0, 0, 0, 0), 5) == 0
        assert delta_d(P(), 4) == 0
        assert delta_d(P(-1, 1), 0) == 0

    def test_infinite(self):
        with pytest.raises(InfiniteDelta):
            delta_d(P(-1, 1), 1)
        # a negative leading coefficient beyond the window does not matter
        assert delta_d(P(0, 0, -1), 2) == 0

    def test_agrees_with_brute(self):
        rng = random.Random(2)
        for _ in range(400):
            q = P(*(rng.randint(-6, 6) for _ in range(rng.randint(1, 8))))
            d = rng.randint(0, 8)
            try:
                expect = brute_delta(q, d)
            except InfiniteDelta:
                with pytest.raises(InfiniteDelta):
                    delta_d(q, d)
                continue
            assert delta_d(q, d) == expect

    def test_monotone_in_d(self):
        for h in admitted_corpus(150, seed=4):
            qt = shift_substitute(h.numerator)
            vals = [delta_d(qt, d) for d in range(h.dim + 1)]
            assert vals == sorted(vals)

    def test_semi_decision(self):
        assert delta(P(1, -2, 3, -1), 10) == 2
        assert delta(P(1, 1), 0) == 0
        with pytest.raises(BudgetExceeded):
            delta(P(1, -5), 3)


class TestProjdimDepth:
    @pytest.mark.parametrize("h, proj, depth", [
        (DEEP, 6, 1),
        (H("1-2t+3t^2-t^3", 3), 2, 1),
        (H("10t^2-10t^3+5t^4-t^5", 5), 1, 4),
        (H("1+t", 1), 0, 1),
    ])
    def test_examples(self, h, proj, depth):
        assert hprojdim(h) == proj
        assert hdepth(h) == depth

    def test_agrees_with_brute(self):
        for h in admitted_corpus(300, seed=8):
            assert hdepth(h) == brute_hdepth(h)

    def test_polynomial_case(self):
        assert hdepth(H("1+3t", 0)) == 0
        assert hprojdim(H("1+3t", 0)) == 0


class TestHreg:
    @pytest.mark.parametrize("h, reg, width", [
        (DEEP, 7, None),
        (H("1-2t+3t^2-t^3", 3), 1, None),
        (H("10t^2-10t^3+5t^4-t^5", 5), 2, None),
        (H("1-t+2t^2-2t^3+t^4", 2), 2, 3),
        (H("1-t+t^3", 2), 2, 2),
        (H("1-t+2t^2-t^3", 2), 2, 2),
    ])
    def test_examples(self, h, reg, width):
        assert hreg(h) == reg
        assert hreg_width_k(h) == width

    def test_edge_case_degree_equals_dim(self):
        # 1+2t+2t^2+... cannot be a/(1-t)+b with a, b >= 0
        for text in ("1+t", "2+t"):
            h = H(text, 1)
            assert hreg(h) == 1 == brute_hreg(h, 10)

    def test_polynomial(self):
        assert hreg(H("1+3t+t^4", 0)) == 4

    def test_agrees_with_brute(self):
        for h in admitted_corpus(500, seed=12):
            assert hreg(h) == brute_hreg(h, default_budget(h)), h

    def test_bounds(self):
        for h in admitted_corpus(300, seed=13):
            q, d = h.numerator, h.dim
            r = hreg(h)
            assert max(0, q.degree - d) <= r
            if d:
                assert r <= max(q.degree, delta_d(shift_substitute(q), d))
            w = hreg_width_k(h)
            if w is not None:
                assert w - 1 <= r <= w


class TestAdmit:
    def test_rejects_negative(self):
        with pytest.raises(NotNonnegative):
            admit(H("1-2t", 1))
        with pytest.raises(NotNonnegative):
            hreg(H("1-2t", 1))

    def test_rejects_zero(self):
        with pytest.raises(PreconditionError):
            compute_invariants(H("0", 3))

    def test_reports_canonical(self):
        r = compute_invariants(HilbertSeries(P(1, 1) * P(1, -1), 2))
        assert (r.dim, r.numerator) == (1, P(1, 1))


class TestDegSeries:
    def test_examples(self):
        assert deg_series(DEEP) == -4
        assert deg_series(H("1-t+t^3", 2)) == 1
        assert deg_series(HilbertSeries(P(1, -1), 1)) == 0


class TestLoopBound:
    def test_reduction_chain(self):
        assert reduce_to_linear(P(2, -9, 13, -4)) == (2, -9)
        assert reduce_to_linear(P(2, -9, 9)) == (2, -9)
        assert reduce_to_linear(P(3)) == (3, 0)

    def test_examples(self):
        assert loop_bound(P(2, -9, 13, -4), 7) == 22
        assert loop_bound(P(1, 2, 3), 5) == 1
        assert loop_bound(P(1, -2), 2) == 2
        assert loop_bound(P(1, -2), 1) == 1

    def test_needs_positive_constant(self):
        with pytest.raises(PreconditionError):
            loop_bound(P(0, 1), 3)

    def test_bounds_delta(self):
        rng = random.Random(14)
        checked = 0
        for _ in range(3000):
            qt = P(rng.randint(1, 6), *(rng.randint(-8, 8) for _ in range(rng.randint(0, 6))))
            d = rng.randint(0, 8)
            assert delta_d(qt, d) <= loop_bound(qt, d), (qt, d)
            checked += 1
        assert checked == 3000


class TestReport:
    def test_fixtures(self):
        for rec in load_fixtures():
            rep = compute_invariants(H(rec["numerator"], rec["dim"]))
            assert rep.to_json() == rec["expected"], rec["name"]

    def test_json_key_order(self):
        keys = list(compute_invariants(DEEP).to_json())
        assert keys == ["dim", "numerator", "hdepth", "hprojdim", "hreg",
                        "delta_d_tilde", "deg_series", "width_k"]

    def test_consistency(self):
        for h in admitted_corpus(200, seed=15):
            r = compute_invariants(h)
            assert r.hdepth + r.hprojdim == r.dim
            assert r.deg_series == r.deg_numerator - r.dim
            assert 0 <= r.hdepth <= r.dim
