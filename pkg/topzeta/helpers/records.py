"""Serialize attrs value objects into plain dictionaries that can be dumped into JSON, and back.

Every serializable class is registered under a short stable name with :py:func:`named_record`;
the name is stored under ``type_key`` next to the field values. Fractions become strings and
tuples become lists, the attrs converters of the registered classes restore both.
Doesn't support recursive references.
"""

import json
from enum import Enum
from fractions import Fraction
from typing import (
    IO,
    Any,
    Callable,
    Dict,
    Mapping,
    Optional,
    Protocol,
    Type,
    TypeVar,
    overload,
)

import attrs

__all__ = [
    "named_record",
    "RecordSerializer",
    "RecordDeserializer",
    "serialize",
    "deserialize",
    "dump_line",
    "load_lines",
]

_T = TypeVar("_T")

_CLASSES: Dict[str, Type] = {}
_NAMES: Dict[Type, str] = {}


def named_record(name: str) -> Callable[[Type[_T]], Type[_T]]:
    """Class decorator registering an attrs class for (de)serialization under ``name``."""

    def register(cls: Type[_T]) -> Type[_T]:
        if name in _CLASSES and _CLASSES[name] is not cls:
            raise ValueError(f"Record name {name!r} is already taken by {_CLASSES[name]}.")
        _CLASSES[name] = cls
        _NAMES[cls] = name
        return cls

    return register


class Serializer(Protocol):
    def __call__(self, obj) -> Any: ...


class RecordSerializer(Serializer):
    def __init__(self, type_key: str = "type"):
        self.type_key = type_key

    def __call__(self, obj) -> Any:
        cls = type(obj)
        if attrs.has(cls):
            if cls not in _NAMES:
                raise TypeError(f"{cls.__qualname__} is not registered as a named record.")
            out = {f.name: self(getattr(obj, f.name)) for f in attrs.fields(cls) if f.init}
            out[self.type_key] = _NAMES[cls]
            return out
        if isinstance(obj, Fraction):
            return str(obj) if obj.denominator != 1 else int(obj)
        if isinstance(obj, Enum):
            return obj.value
        if isinstance(obj, Mapping):
            return {str(k): self(v) for k, v in obj.items()}
        if isinstance(obj, (list, tuple, set, frozenset)):
            return [self(v) for v in obj]
        # is a primitive
        return obj


class RecordDeserializer:
    def __init__(self, type_key: str = "type"):
        self.type_key = type_key

    @overload
    def __call__(self, obj: Any, type: Type[_T]) -> _T: ...

    @overload
    def __call__(self, obj: Any) -> Any: ...

    def __call__(self, obj: Any, type: Optional[Type] = None):
        if type is None and isinstance(obj, Mapping) and self.type_key in obj:
            name = obj[self.type_key]
            if name not in _CLASSES:
                raise TypeError(f"Unknown record type {name!r}.")
            type = _CLASSES[name]

        if type is not None:
            state = {k: self(v) for k, v in obj.items() if k != self.type_key}
            return type(**state)

        if isinstance(obj, Mapping):
            return {k: self(v) for k, v in obj.items()}
        if isinstance(obj, list):
            return [self(v) for v in obj]
        return obj


serialize = RecordSerializer()
deserialize = RecordDeserializer()


def dump_line(obj: Any, fp: IO[str]) -> None:
    """Append ``obj`` as one line of JSON."""
    fp.write(json.dumps(serialize(obj), sort_keys=True) + "\n")
    fp.flush()


def load_lines(fp: IO[str]) -> list:
    return [deserialize(json.loads(line)) for line in fp if line.strip()]
