import logging
from functools import cached_property
from typing import List, Optional, Tuple

import attrs
from attrs import define, field

from topzeta.errors import DimensionMismatchError, NotBalancedError
from topzeta.helpers.records import named_record
from topzeta.laurent import LaurentPolynomial, try_initial_form_on_cone
from topzeta.polyhedra import HalfOpenCone, Polytope, normal_fan_pieces

__all__ = ["ToricDatum", "is_balanced", "balance", "weight"]

logger = logging.getLogger(__name__)


@named_record("toric_datum")
@define(frozen=True, slots=False, kw_only=True)
class ToricDatum:
    """A half-open cone ``C0 ⊆ Orthⁿ`` together with a family of Laurent polynomials.

    The datum is *trivial* if its cone is empty. ``depth`` counts how many weight-increasing
    reductions produced it.
    """

    cone: HalfOpenCone
    polys: Tuple[LaurentPolynomial, ...] = field(converter=tuple, default=())
    depth: int = 0

    def __attrs_post_init__(self):
        for f in self.polys:
            if f.nvars != self.cone.dim:
                raise DimensionMismatchError(
                    f"Polynomial {f} in {f.nvars} variables does not fit a cone "
                    f"in dimension {self.cone.dim}."
                )

    @property
    def nvars(self) -> int:
        return self.cone.dim

    @property
    def is_trivial(self) -> bool:
        return self.cone.is_empty

    def evolve(self, **changes) -> "ToricDatum":
        return attrs.evolve(self, **changes)

    @cached_property
    def _initial_forms(self) -> Optional[Tuple[LaurentPolynomial, ...]]:
        out = []
        for f in self.polys:
            if f.is_zero:
                out.append(f)
                continue
            init = try_initial_form_on_cone(f, self.cone)
            if init is None:
                return None
            out.append(init)
        return tuple(out)

    @property
    def is_balanced(self) -> bool:
        """Each polynomial has one initial form on the whole cone.

        This is the same as ``C0`` lying in one normal cone of ``Newton(Π fᵢ)``, since faces of
        a Minkowski sum are sums of faces.
        """
        return self.is_trivial or self._initial_forms is not None

    def initial_forms(self) -> Tuple[LaurentPolynomial, ...]:
        if self.is_trivial:
            raise NotBalancedError("A trivial toric datum has no initial forms.")
        if self._initial_forms is None:
            raise NotBalancedError(f"{self} is not balanced.")
        return self._initial_forms

    def weight(self) -> int:
        """Total number of terms of the initial forms."""
        return sum(len(g.terms) for g in self.initial_forms())

    def balance(self) -> List["ToricDatum"]:
        """Split the cone along the normal fans of the polynomials.

        Refining by one normal fan after the other gives the pieces of the normal fan of the
        product, because the fan of a Minkowski sum is the common refinement of the fans.
        """
        if self.is_trivial:
            return []
        if self.is_balanced:
            return [self]

        cones = [self.cone]
        for f in self.polys:
            if f.is_zero or f.is_term:
                continue
            P = f.newton_polytope()
            P = Polytope(dim=P.dim, points=P.vertices)
            refined = []
            for cone in cones:
                if try_initial_form_on_cone(f, cone) is not None:
                    refined.append(cone)
                else:
                    refined.extend(piece for _, piece in normal_fan_pieces(P, cone))
            cones = refined

        logger.debug("balanced into %d pieces", len(cones))
        return [self.evolve(cone=cone) for cone in cones]

    def __str__(self) -> str:
        polys = ", ".join(str(f) for f in self.polys)
        return f"ToricDatum({self.cone}; [{polys}]; depth={self.depth})"


def is_balanced(T: ToricDatum) -> bool:
    return T.is_balanced


def balance(T: ToricDatum) -> List[ToricDatum]:
    return T.balance()


def weight(T: ToricDatum) -> int:
    return T.weight()
