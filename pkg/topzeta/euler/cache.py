import logging
import re
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Dict, Iterator, Optional, Tuple, Union

import sqlalchemy
from attrs import define
from sqlalchemy import Column, Integer, MetaData, String, Table, Text
from sqlalchemy.dialects.sqlite import insert as sqlite_insert
from sqlalchemy.engine import Engine

__all__ = [
    "EulerRecord",
    "EulerCacheInterface",
    "MemoryEulerCache",
    "SqlEulerCache",
    "CachedEulerStore",
    "open_euler_cache",
    "verify_cache",
]

logger = logging.getLogger(__name__)

_KEY_PATTERN = re.compile(r"^[0-9a-f]{64}$")


@define(frozen=True, kw_only=True)
class EulerRecord:
    """One ``(canonical-system-hash, n, value | FAIL)`` entry."""

    key: str
    nvars: int
    value: Optional[int] = None
    failure: Optional[str] = None

    def problem(self) -> Optional[str]:
        """What is wrong with this record, or ``None`` if it is well-formed."""
        if not isinstance(self.key, str) or not _KEY_PATTERN.match(self.key):
            return f"malformed key {self.key!r}"
        if not isinstance(self.nvars, int) or self.nvars < 0:
            return f"malformed torus dimension {self.nvars!r}"
        if (self.value is None) == (self.failure is None):
            return "exactly one of value and failure must be set"
        if self.value is not None and not isinstance(self.value, int):
            return f"non-integral value {self.value!r}"
        return None


class EulerCacheInterface(ABC):
    """A map from canonical torus systems to Euler characteristics (or failures)."""

    @abstractmethod
    def get(self, key: str) -> Optional[EulerRecord]:
        ...

    @abstractmethod
    def put(self, record: EulerRecord) -> None:
        """Insert or replace; the last writer wins."""
        ...

    @abstractmethod
    def records(self) -> Iterator[EulerRecord]:
        ...


class MemoryEulerCache(EulerCacheInterface):
    def __init__(self):
        self._records: Dict[str, EulerRecord] = {}

    def get(self, key: str) -> Optional[EulerRecord]:
        return self._records.get(key)

    def put(self, record: EulerRecord) -> None:
        self._records[record.key] = record

    def records(self) -> Iterator[EulerRecord]:
        yield from self._records.values()


class SqlEulerCache(EulerCacheInterface):
    """Records in the ``euler_cache`` table of a SQLite file.

    The engine is created lazily and dropped on pickling, so each worker process opens its own.
    """

    def __init__(self, path: Union[str, Path]):
        self._path = str(path)
        self._engine: Optional[Engine] = None
        self._metadata = MetaData()
        self._table = Table(
            "euler_cache",
            self._metadata,
            Column("key", String(64), primary_key=True),
            Column("nvars", Integer, nullable=False),
            Column("value", Integer, nullable=True),
            Column("failure", Text, nullable=True),
        )

    @property
    def path(self) -> str:
        return self._path

    @property
    def engine(self) -> Engine:
        if self._engine is None:
            self._engine = sqlalchemy.create_engine(
                f"sqlite:///{self._path}", connect_args={"timeout": 60}
            )
            self._metadata.create_all(self._engine)
        return self._engine

    def __getstate__(self):
        return {"path": self._path}

    def __setstate__(self, state):
        self.__init__(state["path"])

    def _record(self, row) -> EulerRecord:
        return EulerRecord(
            key=row.key, nvars=row.nvars, value=row.value, failure=row.failure
        )

    def get(self, key: str) -> Optional[EulerRecord]:
        query = sqlalchemy.select(self._table).where(self._table.c.key == key)
        with self.engine.connect() as connection:
            row = connection.execute(query).first()
        return None if row is None else self._record(row)

    def put(self, record: EulerRecord) -> None:
        values = dict(
            key=record.key, nvars=record.nvars, value=record.value, failure=record.failure
        )
        statement = (
            sqlite_insert(self._table)
            .values(**values)
            .on_conflict_do_update(
                index_elements=[self._table.c.key],
                set_={k: v for k, v in values.items() if k != "key"},
            )
        )
        with self.engine.begin() as connection:
            connection.execute(statement)

    def records(self) -> Iterator[EulerRecord]:
        query = sqlalchemy.select(self._table).order_by(self._table.c.key)
        with self.engine.connect() as connection:
            for row in connection.execute(query):
                yield self._record(row)


class CachedEulerStore(EulerCacheInterface):
    """:py:class:`SqlEulerCache`, but answering repeated lookups from process memory."""

    def __init__(self, delegate: EulerCacheInterface):
        if isinstance(delegate, CachedEulerStore):
            raise TypeError("The Euler cache is already cached.")

        self._delegate = delegate
        self._memory: Dict[str, EulerRecord] = {}

    @property
    def delegate(self) -> EulerCacheInterface:
        return self._delegate

    def get(self, key: str) -> Optional[EulerRecord]:
        if key not in self._memory:
            record = self._delegate.get(key)
            if record is None:
                return None
            self._memory[key] = record
        return self._memory[key]

    def put(self, record: EulerRecord) -> None:
        self._memory[record.key] = record
        self._delegate.put(record)

    def records(self) -> Iterator[EulerRecord]:
        return self._delegate.records()


def open_euler_cache(path: Optional[Union[str, Path]]) -> EulerCacheInterface:
    """A memoized SQLite cache at ``path``, or a process-local one if ``path`` is ``None``."""
    if path is None:
        return MemoryEulerCache()
    logger.info("Using the Euler cache at %s", path)
    return CachedEulerStore(SqlEulerCache(path))


def verify_cache(
    cache: EulerCacheInterface,
) -> Tuple[int, Optional[Tuple[EulerRecord, str]]]:
    """Number of records checked and the first corrupted record with its problem, if any."""
    checked = 0
    for record in cache.records():
        checked += 1
        problem = record.problem()
        if problem is not None:
            return checked, (record, problem)
    return checked, None
