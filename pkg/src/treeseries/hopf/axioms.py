"""Defect tensors for the bialgebra, comodule and morphism axioms.

Every function returns a tensor that vanishes exactly when the identity holds
on the given generator, so callers can report the residual on failure.
"""

from __future__ import annotations

from .algebra import Tensor
from .coproducts import Coproduct
from .structure import AlgebraMorphism, antipode_identities, counit_leg


def _gen(kind, g) -> Tensor:
    if kind.is_unit(g):
        return Tensor.one((kind,))
    return Tensor.generator(kind, g)


def coassociativity_defect(delta: Coproduct, cop: Coproduct, g) -> Tensor:
    """``(delta (x) Id) delta(g) - (Id (x) cop) delta(g)``.

    With ``delta = cop`` this is coassociativity; otherwise it is the
    right-coaction axiom of ``delta`` over the coproduct ``cop``.
    """
    image = delta(g)
    return delta.apply(image, 0) - cop.apply(image, 1)


def counit_defects(delta: Coproduct, g) -> list[Tensor]:
    """Counit axioms: both sides for a coproduct, the right side for a coaction."""
    image = delta(g)
    expected = _gen(delta.legs[0], g)
    out = [counit_leg(image, 1) - expected]
    if delta.is_coproduct:
        out.append(counit_leg(image, 0) - expected)
    return out


def antipode_defects(cop: Coproduct, g) -> list[Tensor]:
    """``m(S (x) Id) Delta(g)`` and ``m(Id (x) S) Delta(g)`` (the counit of a generator is 0)."""
    return list(antipode_identities(g, cop))


def comodule_coalgebra_defect(delta: Coproduct, cop_inv: Coproduct, g) -> Tensor:
    """``(Delta (x) Id) delta - (Id (x) Id (x) m)(Id (x) tau (x) Id)(delta (x) delta) Delta`` on ``g``."""
    lhs = cop_inv.apply(delta(g), 0)
    rhs = cop_inv(g)
    rhs = delta.apply(delta.apply(rhs, 1), 0)
    # legs are now (inv, dif, inv, dif)
    rhs = rhs.permute((0, 2, 1, 3)).merge_legs(2)
    return lhs - rhs


def morphism_defect(phi: AlgebraMorphism, source_cop: Coproduct, target_cop: Coproduct, g) -> Tensor:
    """``(phi (x) phi) Delta(g) - Delta'(phi(g))``: vanishes for coalgebra morphisms."""
    lhs = phi.apply(source_cop(g))
    rhs = target_cop.apply(phi(g), 0)
    return lhs - rhs


def cocommutativity_defect(cop: Coproduct, g) -> Tensor:
    image = cop(g)
    return image - image.twist()
