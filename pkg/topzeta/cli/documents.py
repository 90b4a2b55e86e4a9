"""JSON input and output documents of the command line interface.

An input document describes a ring or module on ``ℤᵈ`` with integers only::

    {
      "name": "heisenberg",
      "rank": 3,
      "mode": "subalgebra",
      "antisymmetric": true,
      "products": [[1, 2, [0, 0, 1]]]
    }

``products`` lists ``[i, j, c]`` for ``eᵢ·eⱼ = Σ cₖ·eₖ`` (one-based); submodule inputs give
``"generators"``, a list of ``d×d`` integer matrices acting on row vectors, instead.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from attrs import define, field

from topzeta.algebra import AlgebraInput, Mode, named_algebra
from topzeta.engine import RunOutcome
from topzeta.errors import InputDocumentError
from topzeta.topeval import RationalFunction1V

__all__ = ["InputDocument", "OutputDocument", "load_input"]

_INPUT_KEYS = {"name", "rank", "mode", "products", "generators", "antisymmetric"}


def _require_int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputDocumentError(f"{what} must be an integer, not {value!r}.")
    return value


def _int_list(value: Any, what: str) -> List[int]:
    if not isinstance(value, list):
        raise InputDocumentError(f"{what} must be a list, not {value!r}.")
    return [_require_int(x, what) for x in value]


@define(frozen=True, kw_only=True)
class InputDocument:
    rank: int
    mode: str = "subalgebra"
    products: Tuple = ()
    generators: Tuple = ()
    antisymmetric: bool = False
    name: str = ""

    @classmethod
    def from_json(cls, data: Any) -> "InputDocument":
        if not isinstance(data, dict):
            raise InputDocumentError("An input document must be a JSON object.")
        unknown = set(data) - _INPUT_KEYS
        if unknown:
            raise InputDocumentError(
                f"Unknown keys {sorted(unknown)} in the input document."
            )
        if "rank" not in data:
            raise InputDocumentError("The input document has no rank.")

        products = []
        for entry in data.get("products", []):
            if not isinstance(entry, list) or len(entry) != 3:
                raise InputDocumentError(
                    f"Product {entry!r} is not of the form [i, j, [c...]]."
                )
            i, j, coeffs = entry
            products.append(
                (
                    _require_int(i, "i"),
                    _require_int(j, "j"),
                    _int_list(coeffs, "coefficients"),
                )
            )
        generators = []
        for M in data.get("generators", []):
            if not isinstance(M, list):
                raise InputDocumentError(f"Generator {M!r} is not a matrix.")
            generators.append([_int_list(row, "matrix rows") for row in M])

        mode = data.get("mode", "subalgebra")
        if mode not in {m.value for m in Mode}:
            raise InputDocumentError(f"Unknown mode {mode!r}.")
        antisymmetric = data.get("antisymmetric", False)
        if not isinstance(antisymmetric, bool):
            raise InputDocumentError("antisymmetric must be true or false.")
        return cls(
            rank=_require_int(data["rank"], "rank"),
            mode=mode,
            products=tuple(products),
            generators=tuple(generators),
            antisymmetric=antisymmetric,
            name=str(data.get("name", "")),
        )

    def to_algebra(self) -> AlgebraInput:
        return AlgebraInput(
            rank=self.rank,
            mode=self.mode,
            products=self.products,
            generators=self.generators,
            antisymmetric=self.antisymmetric,
            name=self.name,
        )


def load_input(source: Union[str, Path], mode: Optional[Mode] = None) -> AlgebraInput:
    """Read an input document, or look up a built-in algebra if ``source`` is no file."""
    path = Path(source)
    if not path.exists():
        try:
            return named_algebra(str(source), mode or Mode.SUBALGEBRA)
        except KeyError:
            raise InputDocumentError(f"{source} is neither a file nor a built-in algebra.")
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except UnicodeDecodeError as e:
        raise InputDocumentError(f"{path} is not UTF-8 text: {e}")
    except json.JSONDecodeError as e:
        raise InputDocumentError(f"{path} is not valid JSON: {e}")
    algebra = InputDocument.from_json(data).to_algebra()
    if mode is not None and mode is not algebra.mode:
        algebra = InputDocument.from_json({**data, "mode": mode.value}).to_algebra()
    return algebra


def _factors(value) -> Tuple[Tuple[int, int, int], ...]:
    return tuple(tuple(int(x) for x in f) for f in value)


@define(frozen=True, kw_only=True)
class OutputDocument:
    status: str
    """``"ok"`` or ``"fail"``."""
    name: str = ""
    mode: str = ""
    rank: int = 0
    numerator: Tuple[int, ...] = field(converter=tuple, default=())
    """Coefficients in ascending powers of ``s``."""
    constant: int = 1
    denominator: Tuple[Tuple[int, int, int], ...] = field(converter=_factors, default=())
    """``[A, B, m]`` meaning ``(A·s − B)^m``."""
    stats: Dict[str, Any] = field(factory=dict)
    failure: Optional[Dict[str, Any]] = None

    @classmethod
    def from_outcome(
        cls, algebra: AlgebraInput, outcome: RunOutcome, timings: bool = True
    ) -> "OutputDocument":
        stats: Dict[str, Any] = {
            "regular": outcome.stats.n_regular,
            "terms": outcome.stats.n_terms,
            "degree": outcome.stats.degree,
        }
        if outcome.stats.magic is not None:
            stats["magic"] = str(outcome.stats.magic)
        if timings:
            stats["seconds"] = {k: round(v, 3) for k, v in outcome.stats.timings.items()}
        common = dict(
            name=algebra.name, mode=algebra.mode.value, rank=algebra.rank, stats=stats
        )

        if not outcome.ok:
            failure = {
                "phase": outcome.failure.phase,
                "reason": outcome.failure.reason,
                "datum": outcome.failure.datum,
            }
            return cls(status="fail", failure=failure, **common)
        f = outcome.function
        return cls(
            status="ok",
            numerator=f.numerator,
            constant=f.constant,
            denominator=f.factors,
            **common,
        )

    @property
    def function(self) -> Optional[RationalFunction1V]:
        if self.status != "ok":
            return None
        return RationalFunction1V(
            numerator=self.numerator, constant=self.constant, factors=self.denominator
        )

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "status": self.status,
            "name": self.name,
            "mode": self.mode,
            "rank": self.rank,
            "stats": self.stats,
        }
        if self.status == "ok":
            out["numerator"] = list(self.numerator)
            out["constant"] = self.constant
            out["denominator"] = [list(f) for f in self.denominator]
            out["function"] = str(self.function)
        else:
            out["failure"] = self.failure
        return out

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "OutputDocument":
        return cls(
            status=data["status"],
            name=data.get("name", ""),
            mode=data.get("mode", ""),
            rank=data.get("rank", 0),
            numerator=data.get("numerator", ()),
            constant=data.get("constant", 1),
            denominator=data.get("denominator", ()),
            stats=data.get("stats", {}),
            failure=data.get("failure"),
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"
