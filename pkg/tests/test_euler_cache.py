import pickle

import pytest

from topzeta.euler import (
    CachedEulerStore,
    EulerRecord,
    MemoryEulerCache,
    SqlEulerCache,
    open_euler_cache,
    verify_cache,
)

KEY = "a" * 64


@pytest.fixture
def sql_cache(tmp_path) -> SqlEulerCache:
    return SqlEulerCache(tmp_path / "euler.sqlite")


def test_sql_cache_put_and_get(sql_cache):
    assert sql_cache.get(KEY) is None
    sql_cache.put(EulerRecord(key=KEY, nvars=2, value=-1))
    assert sql_cache.get(KEY) == EulerRecord(key=KEY, nvars=2, value=-1)

    sql_cache.put(EulerRecord(key=KEY, nvars=2, failure="gave up"))
    assert sql_cache.get(KEY).failure == "gave up"
    assert sql_cache.get(KEY).value is None
    assert len(list(sql_cache.records())) == 1


def test_sql_cache_pickles_by_path(sql_cache):
    sql_cache.put(EulerRecord(key=KEY, nvars=1, value=3))
    clone = pickle.loads(pickle.dumps(sql_cache))
    assert clone.path == sql_cache.path
    assert clone.get(KEY).value == 3


def test_verify_cache_finds_corruption(sql_cache):
    sql_cache.put(EulerRecord(key=KEY, nvars=1, value=0))
    assert verify_cache(sql_cache) == (1, None)

    sql_cache.put(EulerRecord(key="bad", nvars=1, value=0))
    checked, corrupted = verify_cache(sql_cache)
    assert checked == 2
    record, problem = corrupted
    assert record.key == "bad"
    assert "key" in problem


@pytest.mark.parametrize(
    "record,ok",
    [
        (EulerRecord(key=KEY, nvars=1, value=0), True),
        (EulerRecord(key=KEY, nvars=1, failure="x"), True),
        (EulerRecord(key=KEY, nvars=1), False),
        (EulerRecord(key=KEY, nvars=1, value=0, failure="x"), False),
        (EulerRecord(key=KEY, nvars=-1, value=0), False),
        (EulerRecord(key=KEY.upper(), nvars=1, value=0), False),
    ],
)
def test_record_problems(record, ok):
    assert (record.problem() is None) is ok


def test_cached_store_memoizes(sql_cache):
    store = CachedEulerStore(sql_cache)
    store.put(EulerRecord(key=KEY, nvars=1, value=5))
    assert sql_cache.get(KEY).value == 5
    assert store.get(KEY).value == 5
    assert store.get("b" * 64) is None
    with pytest.raises(TypeError):
        CachedEulerStore(store)


def test_open_euler_cache(tmp_path):
    assert isinstance(open_euler_cache(None), MemoryEulerCache)
    store = open_euler_cache(tmp_path / "cache.sqlite")
    assert isinstance(store, CachedEulerStore)
    assert isinstance(store.delegate, SqlEulerCache)
