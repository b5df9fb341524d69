import itertools
import json
import random

import pytest

from hilbreg.errors import ParseError, PreconditionError, TooManyGenerators
from hilbreg.ingest import (
    MAX_GENERATORS,
    MonomialIdeal,
    hilbert_numerator,
    inclusion_exclusion_numerator,
    load_fixtures,
    parse_ideal,
    read_batch,
)
from hilbreg.oracle import prefix_series
from hilbreg.polyseries import HilbertSeries, IntPolynomial


def count_standard(ideal, top):
    """Number of monomials of each degree <= top outside the ideal."""
    counts = [0] * (top + 1)
    for e in itertools.product(range(top + 1), repeat=ideal.nvars):
        s = sum(e)
        if s <= top and not ideal.contains(e):
            counts[s] += 1
    return counts


class TestParseIdeal:
    def test_example(self):
        i = parse_ideal("x1^2, x1*x2, x2^2", 2)
        assert i.gens == {(2, 0), (1, 1), (0, 2)}

    def test_repeated_variable_and_spaces(self):
        assert parse_ideal(" x1 * x1 ^ 2 ", 1).gens == {(3,)}

    def test_minimalized(self):
        assert parse_ideal("x1, x1*x2, x2^3", 2).gens == {(1, 0), (0, 3)}

    def test_empty_is_zero_ideal(self):
        assert parse_ideal("", 3).gens == frozenset()

    @pytest.mark.parametrize("text", ["x3", "y1", "x1^", "x1,,x2", "x1**x2"])
    def test_rejects(self, text):
        with pytest.raises(ParseError):
            parse_ideal(text, 2)

    def test_bad_vector(self):
        with pytest.raises(PreconditionError):
            MonomialIdeal(2, frozenset({(1,)}))

    def test_too_many_generators(self):
        gens = frozenset((i, MAX_GENERATORS - i) for i in range(MAX_GENERATORS + 1))
        with pytest.raises(TooManyGenerators):
            MonomialIdeal(2, gens)


class TestNumerator:
    def test_raw(self):
        i = parse_ideal("x1^2, x1*x2, x2^2", 2)
        assert inclusion_exclusion_numerator(i) == IntPolynomial((1, 0, -3, 2))
        assert hilbert_numerator(i) == HilbertSeries(IntPolynomial((1, 2)), 0)

    def test_single_generator(self):
        assert hilbert_numerator(parse_ideal("x1*x2", 2)) == HilbertSeries(IntPolynomial((1, 1)), 1)

    def test_zero_ideal(self):
        assert hilbert_numerator(parse_ideal("", 3)) == HilbertSeries(IntPolynomial((1,)), 3)

    def test_counts_standard_monomials(self):
        rng = random.Random(71)
        for _ in range(40):
            n = rng.randint(1, 3)
            gens = {tuple(rng.randint(0, 3) for _ in range(n)) for _ in range(rng.randint(1, 5))}
            gens.discard((0,) * n)
            if not gens:
                continue
            ideal = MonomialIdeal(n, frozenset(gens))
            h = hilbert_numerator(ideal)
            assert prefix_series(h.numerator.coeffs, h.dim, 11) == count_standard(ideal, 10)


class TestBatch:
    def test_fixtures_load(self):
        names = [r["name"] for r in load_fixtures()]
        assert "large_delta" in names and len(names) == 6

    def test_read_batch(self, tmp_path):
        path = tmp_path / "in.jsonl"
        path.write_text("\n".join([
            json.dumps({"numerator": "2-5t+t^2+4t^3", "dim": 7}),
            "",
            "{not json",
            json.dumps({"numerator": [1, -2], "dim": 1}),
            json.dumps({"numerator": "1+t", "dim": -1}),
            json.dumps({"dim": 2}),
            json.dumps({"numerator": [1, 1], "dim": 1}),
        ]) + "\n")
        lines = read_batch(path)
        assert [b.lineno for b in lines] == [1, 3, 4, 5, 6, 7]
        assert [b.ok for b in lines] == [True, False, False, False, False, True]
        assert lines[2].error_type == "NotNonnegative"
        assert lines[1].error_type == "ParseError"
        assert lines[-1].series == HilbertSeries(IntPolynomial((1, 1)), 1)

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.jsonl"
        path.write_text("")
        assert read_batch(path) == []
