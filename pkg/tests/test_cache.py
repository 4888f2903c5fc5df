import pytest

from combinatorics.eulerian import EulerianTable, en_recur
from core.cache import HEADER, cache_load, cache_save, dumps, loads
from core.errors import CacheFormatError


@pytest.fixture
def filled():
    table = EulerianTable()
    en_recur(12, table)
    return table


def test_save_then_load(filled, tmp_path):
    path = tmp_path / "cache.txt"
    cache_save(path, filled)
    loaded = cache_load(path)
    assert loaded.ns() == list(range(13))
    for n in range(13):
        assert loaded[n] == filled[n]
        assert loaded.provenance(n) == "cache-file"
    assert dumps(loaded) == path.read_text()


def test_canonical_layout(filled):
    text = dumps(filled)
    lines = text.splitlines()
    assert lines[0] == HEADER
    assert "E 3 1 1 1" in lines
    assert "E 3 1 0 3" in lines
    assert text.endswith("\n")


def test_header_only_gives_empty_table():
    assert len(loads(HEADER + "\n")) == 0


def test_wrong_header():
    with pytest.raises(CacheFormatError, match="header"):
        loads("# qeulerian-cache v0\nE 0 0 0 1\n")


def test_tampered_coefficient_names_n(filled):
    text = dumps(filled).replace("E 5 4 0 1\n", "E 5 4 0 2\n")
    with pytest.raises(CacheFormatError, match="E_5") as info:
        loads(text)
    assert info.value.n == 5


def test_out_of_order_records():
    with pytest.raises(CacheFormatError, match="out of order"):
        loads(f"{HEADER}\nE 2 1 0 1\nE 2 0 0 1\n")


def test_malformed_record():
    with pytest.raises(CacheFormatError, match="line 2"):
        loads(f"{HEADER}\nE 2 1 x 1\n")


def test_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        cache_load(tmp_path / "absent.txt")


def test_cache_path_from_environment(monkeypatch, tmp_path, filled):
    path = tmp_path / "env-cache.txt"
    monkeypatch.setenv("QEULER_CACHE", str(path))
    cache_save(table=filled)
    assert path.exists()
    assert cache_load().ns() == filled.ns()
