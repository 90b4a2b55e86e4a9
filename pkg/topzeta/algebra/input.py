from enum import Enum
from typing import Dict, Tuple

from attrs import define, field

from topzeta.errors import InputDocumentError
from topzeta.helpers.records import named_record

__all__ = ["Mode", "Product", "AlgebraInput"]


class Mode(Enum):
    SUBALGEBRA = "subalgebra"
    IDEAL = "ideal"
    SUBMODULE = "submodule"

    def counts(self) -> str:
        if self.name == "SUBALGEBRA":
            return "subalgebras"
        elif self.name == "IDEAL":
            return "ideals"
        else:
            return "submodules"

    @property
    def needs_products(self) -> bool:
        return self is not Mode.SUBMODULE


Product = Tuple[int, int, Tuple[int, ...]]
"""``(i, j, c)`` meaning ``eᵢ·eⱼ = Σₖ cₖ·eₖ`` with one-based ``i`` and ``j``."""


def _to_products(values) -> Tuple[Product, ...]:
    return tuple((int(i), int(j), tuple(int(c) for c in coeffs)) for i, j, coeffs in values)


def _to_matrices(values) -> Tuple[Tuple[Tuple[int, ...], ...], ...]:
    return tuple(tuple(tuple(int(x) for x in row) for row in M) for M in values)


@named_record("algebra_input")
@define(frozen=True, kw_only=True)
class AlgebraInput:
    """A ring or module structure on ``ℤᵈ`` with basis ``e₁, …, e_d``."""

    rank: int
    mode: Mode = field(converter=Mode, default=Mode.SUBALGEBRA)
    products: Tuple[Product, ...] = field(converter=_to_products, default=())
    """Nonzero products of basis elements; unlisted products vanish."""
    generators: Tuple[Tuple[Tuple[int, ...], ...], ...] = field(
        converter=_to_matrices, default=()
    )
    """Integer ``d×d`` matrices acting on row vectors (submodule mode)."""
    antisymmetric: bool = False
    """Lie rings: each listed ``[eᵢ, eⱼ]`` also defines ``[eⱼ, eᵢ] = −[eᵢ, eⱼ]``."""
    name: str = ""

    def __attrs_post_init__(self):
        d = self.rank
        if d < 1:
            raise InputDocumentError(f"The rank must be positive, not {d}.")
        for i, j, coeffs in self.products:
            if not (1 <= i <= d and 1 <= j <= d):
                raise InputDocumentError(f"Product e{i}*e{j} has an index outside 1..{d}.")
            if len(coeffs) != d:
                raise InputDocumentError(
                    f"Product e{i}*e{j} has {len(coeffs)} coefficients instead of {d}."
                )
        for M in self.generators:
            if len(M) != d or any(len(row) != d for row in M):
                raise InputDocumentError(f"Generator {M} is not a {d}x{d} matrix.")
        if self.mode is Mode.SUBMODULE and not self.generators:
            raise InputDocumentError("Submodule mode needs at least one generator matrix.")

    @property
    def nvars(self) -> int:
        """Number of entries of a generic upper triangular ``d×d`` matrix."""
        return self.rank * (self.rank + 1) // 2

    def structure_constants(self) -> Dict[Tuple[int, int], Tuple[int, ...]]:
        """Zero-based ``(i, j) -> coefficients of eᵢ·eⱼ``, skipping vanishing products."""
        out: Dict[Tuple[int, int], Tuple[int, ...]] = {}

        def put(i: int, j: int, coeffs: Tuple[int, ...]) -> None:
            if (i, j) in out and out[(i, j)] != coeffs:
                raise InputDocumentError(f"Product e{i + 1}*e{j + 1} is given twice.")
            out[(i, j)] = coeffs

        for i, j, coeffs in self.products:
            put(i - 1, j - 1, coeffs)
            if self.antisymmetric:
                put(j - 1, i - 1, tuple(-c for c in coeffs))
        return {k: v for k, v in sorted(out.items()) if any(v)}

    def multiplication_matrices(self) -> Tuple[Tuple[Tuple[int, ...], ...], ...]:
        """Matrices of ``x ↦ x·eₖ`` and ``x ↦ eₖ·x`` on row vectors, without repetitions."""
        d = self.rank
        table = self.structure_constants()
        zero = (0,) * d
        out = []
        for k in range(d):
            right = tuple(table.get((a, k), zero) for a in range(d))
            left = tuple(table.get((k, a), zero) for a in range(d))
            for M in (right, left):
                if any(any(row) for row in M) and M not in out:
                    out.append(M)
        return tuple(out)

    def with_abelian_summand(self) -> "AlgebraInput":
        """The direct sum with ``ℤ`` carrying the zero product."""
        d = self.rank
        return AlgebraInput(
            rank=d + 1,
            mode=self.mode,
            products=[(i, j, coeffs + (0,)) for i, j, coeffs in self.products],
            generators=[
                [row + (0,) for row in M] + [(0,) * (d + 1)] for M in self.generators
            ],
            antisymmetric=self.antisymmetric,
            name=f"{self.name}+z" if self.name else "",
        )
