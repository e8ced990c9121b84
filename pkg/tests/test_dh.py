import random

import pytest

from bcp import dh
from bcp.errors import BadConfig, BadExponent, BadPublicValue, NotPrime

P23 = dh.DhParams(23, 5)


class TestParams:
    def test_composite_modulus_rejected(self):
        with pytest.raises(NotPrime):
            dh.DhParams(21, 5)

    def test_generator_range(self):
        with pytest.raises(BadConfig):
            dh.DhParams(23, 1)
        with pytest.raises(BadConfig):
            dh.DhParams(23, 23)


class TestPublic:
    def test_exponent_one(self):
        assert dh.dh_public(P23, 1) == 5

    def test_textbook_values(self):
        assert dh.dh_public(P23, 6) == 8
        assert dh.dh_public(P23, 15) == 19

    def test_exponent_out_of_range(self):
        with pytest.raises(BadExponent):
            dh.dh_public(P23, 0)
        with pytest.raises(BadExponent):
            dh.dh_public(P23, 22)


class TestShared:
    def test_textbook_agreement(self):
        assert dh.dh_shared(P23, 6, 19) == 2
        assert dh.dh_shared(P23, 15, 8) == 2

    def test_exponent_one_passthrough(self):
        assert dh.dh_shared(P23, 1, 9) == 9

    def test_bad_public_value(self):
        with pytest.raises(BadPublicValue):
            dh.dh_shared(P23, 6, 0)
        with pytest.raises(BadPublicValue):
            dh.dh_shared(P23, 6, 23)

    def test_agreement_random(self):
        rng = random.Random(2)
        primes = [p for p in range(5, 500) if dh.is_prime(p)]
        for _ in range(200):
            p = rng.choice(primes)
            params = dh.DhParams(p, rng.randint(2, p - 1))
            a = rng.randint(1, p - 2)
            b = rng.randint(1, p - 2)
            sa = dh.dh_shared(params, a, dh.dh_public(params, b))
            sb = dh.dh_shared(params, b, dh.dh_public(params, a))
            assert sa == sb
            assert 1 <= dh.dh_public(params, a) <= p - 1
            assert 0 <= sa <= p - 1


class TestSeededExponent:
    def test_in_range_and_deterministic(self):
        for seed in range(100):
            e = dh.exponent_from_seed(P23, seed)
            assert 1 <= e <= 21
            assert e == dh.exponent_from_seed(P23, seed)


class TestFiles:
    def test_params_round_trip(self, tmp_path):
        path = tmp_path / "p.dhparams"
        dh.save_params(P23, path)
        assert path.read_text() == "P=23\nG=5\n"
        assert dh.load_params(path) == P23

    def test_keypair_round_trip(self, tmp_path):
        path = tmp_path / "a.dh"
        pair = dh.dh_keypair(P23, 6)
        dh.save_keypair(pair, path)
        assert dh.load_keypair(P23, path) == pair

    def test_keypair_mismatch_rejected(self, tmp_path):
        path = tmp_path / "a.dh"
        path.write_text("exponent=6\npublic=9\n")
        with pytest.raises(BadConfig):
            dh.load_keypair(P23, path)
