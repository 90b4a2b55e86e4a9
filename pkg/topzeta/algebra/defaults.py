"""Built-in algebras, looked up by name (e.g. ``abelian3``, ``fil4``, ``zx5``, ``heisenberg+z``)."""

import re
from fractions import Fraction
from typing import Callable, Dict, Optional

from attrs import define

from topzeta.algebra.input import AlgebraInput, Mode
from topzeta.topeval.terms import RationalFunction1V

__all__ = [
    "NamedAlgebra",
    "NAMED_ALGEBRAS",
    "named_algebra",
    "abelian",
    "heisenberg",
    "fil4",
    "truncated_polynomials",
]


@define(frozen=True, kw_only=True)
class NamedAlgebra:
    build: Callable[[], AlgebraInput]
    expected: Optional[RationalFunction1V] = None
    """The known topological subalgebra zeta function."""
    magic: Optional[Fraction] = None
    regular_count: Optional[int] = None
    """Number of regular toric data left by the reduction stage."""
    slow: bool = False


def _unit(d: int, k: int):
    return tuple(int(i == k) for i in range(1, d + 1))


def abelian(d: int, mode: Mode = Mode.SUBALGEBRA) -> AlgebraInput:
    return AlgebraInput(rank=d, mode=mode, name=f"abelian{d}")


def truncated_polynomials(n: int, mode: Mode = Mode.SUBALGEBRA) -> AlgebraInput:
    """``ℤ[X]/Xⁿ`` with basis ``1, X, …, X^(n−1)``."""
    products = []
    for i in range(n):
        for j in range(n - i):
            products.append((i + 1, j + 1, _unit(n, i + j + 1)))
    return AlgebraInput(rank=n, mode=mode, products=products, name=f"zx{n}")


def heisenberg(mode: Mode = Mode.SUBALGEBRA) -> AlgebraInput:
    return AlgebraInput(
        rank=3,
        mode=mode,
        products=[(1, 2, _unit(3, 3))],
        antisymmetric=True,
        name="heisenberg",
    )


def fil4(mode: Mode = Mode.SUBALGEBRA) -> AlgebraInput:
    """The filiform Lie ring of rank 5 with the extra bracket ``[e₂, e₃] = e₅``."""
    products = [
        (1, 2, _unit(5, 3)),
        (1, 3, _unit(5, 4)),
        (1, 4, _unit(5, 5)),
        (2, 3, _unit(5, 5)),
    ]
    return AlgebraInput(
        rank=5, mode=mode, products=products, antisymmetric=True, name="fil4"
    )


def _abelian_expected(d: int) -> RationalFunction1V:
    """``1/(s(s−1)⋯(s−d+1))``."""
    return RationalFunction1V(numerator=[1], factors=[(1, k, 1) for k in range(d)])


# fmt:off
NAMED_ALGEBRAS: Dict[str, NamedAlgebra] = {
    **{
        f"abelian{d}": NamedAlgebra(
            build=lambda d=d: abelian(d), expected=_abelian_expected(d), magic=Fraction(1)
        )
        for d in range(1, 9)
    },
    "heisenberg": NamedAlgebra(
        build=heisenberg,
        expected=RationalFunction1V(
            numerator=[3], constant=2, factors=[(1, 0, 1), (1, 1, 1), (2, 3, 1)]
        ),
        magic=Fraction(3, 4),
    ),
    "zx4": NamedAlgebra(
        build=lambda: truncated_polynomials(4),
        expected=RationalFunction1V(
            numerator=[-842400, 5044460, -12036071, 14322332, -8509620, 2021760],
            constant=168480,
            factors=[(1, 0, 1), (1, 1, 6), (4, 3, 1), (6, 5, 1)],
        ),
        slow=True,
    ),
    "fil4": NamedAlgebra(
        build=fil4,
        expected=RationalFunction1V(
            numerator=[
                -28569052512, 161557332768, -404678115300, 589429290044, -550262853249,
                341501393670, -140917681751, 37286908278, -5741480808, 392031360,
            ],
            constant=3,
            factors=[
                (1, 0, 1), (1, 1, 1), (2, 3, 1), (3, 4, 1), (4, 7, 2), (5, 8, 1),
                (5, 9, 1), (6, 11, 3), (7, 12, 1), (7, 13, 1), (15, 26, 1),
            ],
        ),
        magic=Fraction(463, 1350),
        regular_count=543,
        slow=True,
    ),
}
# fmt:on

_PATTERNS = {
    re.compile(r"abelian(\d+)"): abelian,
    re.compile(r"zx(\d+)"): truncated_polynomials,
}


def named_algebra(name: str, mode: Mode = Mode.SUBALGEBRA) -> AlgebraInput:
    """Look up ``name``; a ``+z`` suffix adds an abelian summand of rank one."""
    if name.endswith("+z"):
        return named_algebra(name[:-2], mode).with_abelian_summand()
    for pattern, build in _PATTERNS.items():
        match = pattern.fullmatch(name)
        if match:
            return build(int(match.group(1)), mode)
    if name == "heisenberg":
        return heisenberg(mode)
    if name == "fil4":
        return fil4(mode)
    raise KeyError(f"Unknown algebra {name!r}; known: {', '.join(NAMED_ALGEBRAS)}.")
