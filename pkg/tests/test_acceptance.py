"""Acceptance suite: one test per release criterion, each printing a
pass/fail line with its elapsed time (visible under pytest -s or in the
-v test listing).  Criteria run at their stated tolerances; nothing is
deferred to later calibration.
"""

import dataclasses
import random
import time
from fractions import Fraction

import pytest

from bcp import auth, channel, codec, dh, pipeline, rsa2, wire
from bcp.cli import main
from conftest import random_digits, random_model

KEYS = rsa2.keygen(11, 17, 23)
PARAMS = dh.DhParams(23, 5)
RECEIVER = auth.UserRecord(1345, 4679)


@pytest.fixture(autouse=True)
def report(request):
    start = time.perf_counter()
    failed_before = request.session.testsfailed
    yield
    elapsed = time.perf_counter() - start
    verdict = "FAIL" if request.session.testsfailed > failed_before else "PASS"
    print(f"ACCEPTANCE {request.node.name}: {verdict} ({elapsed:.2f}s)")


def demo_session(model=None):
    return pipeline.SessionConfig(
        probability_model=model or codec.ProbabilityModel.uniform(),
        rsa_public=KEYS.public,
        dh_params=PARAMS,
        receiver_record=RECEIVER,
        rsa_private=KEYS.private,
    )


def test_01_mac_paper_value():
    assert auth.mac(1345, 4679, 187) == 144


def test_02_rsa_paper_keypair_exhaustive():
    start = time.perf_counter()
    pair = rsa2.keygen(11, 17, 23)
    assert pair.public.n == 187 and pair.private.d == 7
    for m in range(187):
        assert rsa2.decrypt_block(rsa2.encrypt_block(m, pair.public), pair.private) == m
    assert time.perf_counter() - start < 1


def test_03_trace_flags_paper_divergences(capsys):
    assert main(["trace"]) == 0
    out = capsys.readouterr().out
    # the three unverifiable worked-example values, each with its reason
    assert "7664" in out and "not reproducible" in out
    assert "probability model undisclosed" in out
    assert "324" in out and "impossible residue" in out and "n = 187" in out
    assert "130" in out and "DH parameters undisclosed" in out
    # derived stage values are printed instead
    assert "derived code fraction: 4512" in out
    assert "derived cipher residues:" in out
    assert "derived public value:" in out


def test_04_uniform_fixed_point_1000():
    start = time.perf_counter()
    uniform = codec.ProbabilityModel.uniform()
    rng = random.Random(40)
    for _ in range(1000):
        s = random_digits(rng, 64)
        assert codec.arith_encode(s, uniform) == s
        assert codec.arith_decode(s, len(s), uniform) == s
    assert time.perf_counter() - start < 5


def test_05_codec_round_trip_1000_random_models():
    start = time.perf_counter()
    rng = random.Random(50)
    for _ in range(1000):
        model = random_model(rng)
        s = random_digits(rng, 64)
        assert codec.arith_decode(codec.arith_encode(s, model), len(s), model) == s
    assert time.perf_counter() - start < 10


def test_06_dh_agreement():
    start = time.perf_counter()
    assert dh.dh_shared(PARAMS, 6, dh.dh_public(PARAMS, 15)) == 2
    assert dh.dh_shared(PARAMS, 15, dh.dh_public(PARAMS, 6)) == 2
    rng = random.Random(60)
    primes = [p for p in range(5, 1000) if rsa2.is_prime(p)]
    for _ in range(500):
        p = rng.choice(primes)
        params = dh.DhParams(p, rng.randint(2, p - 1))
        a, b = rng.randint(1, p - 2), rng.randint(1, p - 2)
        assert dh.dh_shared(params, a, dh.dh_public(params, b)) == dh.dh_shared(
            params, b, dh.dh_public(params, a)
        )
    assert time.perf_counter() - start < 5


def test_07_end_to_end_identity_1000():
    start = time.perf_counter()
    rng = random.Random(70)
    keysets = [KEYS, rsa2.keygen(13, 19, 5), rsa2.keygen(101, 103, 7), rsa2.keygen(3, 5, 3)]
    clean = channel.ChannelConfig(56_000, Fraction(0), Fraction(0), 1)
    for i in range(1000):
        cfg = dataclasses.replace(
            demo_session(random_model(rng)), rsa_public=(k := rng.choice(keysets)).public,
            rsa_private=k.private,
        )
        payload = bytes(rng.randrange(256) for _ in range(rng.randint(1, 256)))
        a, b = rng.randint(1, PARAMS.p - 2), rng.randint(1, PARAMS.p - 2)
        frame, _ = pipeline.send(payload, cfg, a)
        delivery = channel.transmit(wire.assemble_frame(frame), clean, i)
        assert not delivery.dropped
        result = pipeline.receive(wire.parse_frame(delivery.payload), cfg, b)
        assert isinstance(result, pipeline.Accepted)
        assert result.payload == payload
        assert result.shared_secret == dh.dh_shared(PARAMS, a, dh.dh_public(PARAMS, b))
    assert time.perf_counter() - start < 30


def test_08_discard_behavior():
    start = time.perf_counter()
    cfg = demo_session()
    frame, _ = pipeline.send(b"discard behavior payload", cfg, 6)
    # every digit-level mutation of the mac field is rejected by the gate
    mac_digits = str(frame.mac)
    for pos in range(len(mac_digits)):
        for repl in "0123456789":
            if repl == mac_digits[pos]:
                continue
            mutated_mac = int(mac_digits[:pos] + repl + mac_digits[pos + 1 :])
            raw = wire.assemble_frame(dataclasses.replace(frame, mac=mutated_mac))
            result = pipeline.receive(wire.parse_frame(raw), cfg, 15)
            assert result == pipeline.Discarded(pipeline.MAC_MISMATCH)
    # seeded single-character payload mutations never crash the receiver
    rng = random.Random(80)
    alphabet = [chr(c) for c in range(33, 127)]
    for _ in range(1000):
        pos = rng.randrange(len(frame.armored_payload))
        repl = rng.choice(alphabet)
        payload = frame.armored_payload[:pos] + repl + frame.armored_payload[pos + 1 :]
        raw = wire.assemble_frame(dataclasses.replace(frame, armored_payload=payload))
        result = pipeline.receive(wire.parse_frame(raw), cfg, 15)
        if isinstance(result, pipeline.Discarded):
            assert result.reason in (pipeline.MAC_MISMATCH, pipeline.MALFORMED_PAYLOAD)
        else:
            assert isinstance(result, pipeline.Accepted)
    assert time.perf_counter() - start < 30


def test_09_channel_determinism_and_statistics():
    start = time.perf_counter()
    frame = bytes((i * 37 + 11) % 256 for i in range(1000))
    cfg = channel.ChannelConfig(56_000, Fraction(1, 1000), Fraction(0), 90)
    # bit-reproducible under a fixed seed
    for pos in (0, 1, 4096):
        assert channel.transmit(frame, cfg, pos) == channel.transmit(frame, cfg, pos)
    # mean flip count over 10,000 transmissions within 15% of expectation
    expected = channel.expected_flip_count(frame, cfg)
    assert expected == 8
    ref = int.from_bytes(frame, "big")
    total = 0
    for pos in range(10_000):
        out = channel.transmit(frame, cfg, pos).payload
        total += (int.from_bytes(out, "big") ^ ref).bit_count()
    mean = Fraction(total, 10_000)
    assert abs(mean - expected) <= expected * Fraction(15, 100), mean
    # a 700-byte frame at 56 bit/s takes exactly 100 virtual seconds
    slow = channel.ChannelConfig(56, Fraction(0), Fraction(0), 1)
    assert channel.transmit(b"z" * 700, slow, 0).elapsed_virtual_seconds == 100
    assert time.perf_counter() - start < 30


def test_10_frame_format_stability():
    start = time.perf_counter()
    import pathlib

    golden = pathlib.Path(__file__).parent / "data" / "golden.frame"
    frame = wire.parse_frame(golden.read_bytes())
    assert frame == wire.Frame(
        mac=144,
        dh_public=8,
        symbol_count=4,
        fraction_length=4,
        pad_count=0,
        armored_payload='"="t',
    )
    # and the golden frame decodes in the worked-example session
    result = pipeline.receive_digits(frame, demo_session(), 15)
    assert result == ("4512", 2)
    rng = random.Random(100)
    for _ in range(1000):
        f = wire.Frame(
            mac=rng.randint(0, 10**6),
            dh_public=rng.randint(1, 10**6),
            symbol_count=rng.randint(1, 10**4),
            fraction_length=rng.randint(1, 10**4),
            pad_count=rng.randint(0, 9),
            armored_payload="".join(
                chr(rng.randint(33, 126)) for _ in range(rng.randint(1, 40))
            ),
        )
        assert wire.parse_frame(wire.assemble_frame(f)) == f
    assert time.perf_counter() - start < 5
