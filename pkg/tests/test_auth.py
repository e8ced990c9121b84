import pytest

from bcp import auth
from bcp.errors import AlreadyRegistered, BadConfig, InvalidCredential


class TestMac:
    def test_paper_value(self):
        assert auth.mac(1345, 4679, 187) == 144

    def test_unit_values(self):
        assert auth.mac(1, 1, 187) == 1

    def test_modulus_multiple(self):
        assert auth.mac(187, 4679, 187) == 0

    def test_rejects_non_positive(self):
        with pytest.raises(InvalidCredential):
            auth.mac(0, 4679, 187)

    def test_message_independent(self):
        # same pair, same code, whatever the payload: the scheme's
        # integrity gap, asserted on purpose
        codes = {auth.mac(1345, 4679, 187) for _ in range(10)}
        assert codes == {144}


class TestVerify:
    def test_accept(self):
        assert auth.verify(144, 1345, 4679, 187)

    def test_discard_off_by_one(self):
        assert not auth.verify(143, 1345, 4679, 187)

    def test_zero_case(self):
        assert auth.verify(0, 187, 4679, 187)

    def test_self_consistent(self):
        for uid, pw, n in [(1, 1, 11), (1345, 4679, 187), (7, 9, 10)]:
            assert auth.verify(auth.mac(uid, pw, n), uid, pw, n)


class TestCredentialMapping:
    def test_decimal_passthrough(self):
        assert auth.credential_to_int("1345") == 1345

    def test_text_is_base256(self):
        assert auth.credential_to_int("A") == 65
        assert auth.credential_to_int("AB") == 65 * 256 + 66


class TestRegistry:
    def test_register_paper_user(self, tmp_path):
        reg = auth.Registry(tmp_path / "users")
        rec = reg.register(1345, 4679)
        assert rec == auth.UserRecord(1345, 4679)
        assert reg.get(1345) == rec

    def test_duplicate_rejected(self, tmp_path):
        reg = auth.Registry(tmp_path / "users")
        reg.register(1345, 4679)
        with pytest.raises(AlreadyRegistered):
            reg.register(1345, 1)

    def test_non_positive_rejected(self, tmp_path):
        reg = auth.Registry(tmp_path / "users")
        with pytest.raises(InvalidCredential):
            reg.register(0, 5)
        with pytest.raises(InvalidCredential):
            reg.register(5, 0)

    def test_persistence_round_trip(self, tmp_path):
        path = tmp_path / "users"
        reg = auth.Registry(path)
        reg.register(1345, 4679)
        reg.register(7, 99)
        reopened = auth.Registry(path)
        assert len(reopened) == 2
        assert reopened.get(1345) == auth.UserRecord(1345, 4679)
        assert reopened.get(7) == auth.UserRecord(7, 99)

    def test_file_format(self, tmp_path):
        path = tmp_path / "users"
        reg = auth.Registry(path)
        reg.register(1345, 4679)
        assert path.read_text() == "1345:4679\n"

    def test_unknown_user(self, tmp_path):
        reg = auth.Registry(tmp_path / "users")
        with pytest.raises(BadConfig):
            reg.get(42)

    def test_corrupt_file_rejected(self, tmp_path):
        path = tmp_path / "users"
        path.write_text("not a record\n")
        with pytest.raises(BadConfig):
            auth.Registry(path)
