"""Counit, antipode, characters and algebra morphisms between the Hopf algebras."""

from __future__ import annotations

import threading
from typing import Callable, Mapping

from .. import trees as T
from ..coeff import RingValue
from .algebra import (
    ALPHA,
    DIF,
    FDB,
    INV_OVER,
    INV_UNDER,
    RHO,
    SYM,
    AlgebraKind,
    Tensor,
    Word,
)
from .coproducts import Coproduct, get_coproduct


def counit(x: Tensor, kind: AlgebraKind | None = None) -> RingValue:
    """Coefficient of the empty word of a rank-1 element."""
    if x.rank != 1:
        raise ValueError("counit applies to rank-1 elements")
    if kind is not None and x.kinds[0] != kind:
        raise ValueError(f"element lives in {x.kinds[0]}, not {kind}")
    return x.coefficient(())


def counit_leg(x: Tensor, leg: int) -> Tensor:
    """Apply the counit to one leg, dropping it."""
    return x.map_leg(leg, lambda w: Tensor._raw((), {(): 1} if not w else {}))


# antipode ------------------------------------------------------------------

_ANTIPODES: dict = {}
_ANTIPODE_LOCK = threading.Lock()


def _require_connected(cop: Coproduct):
    if not cop.is_coproduct:
        raise ValueError(f"{cop.name} is a coaction, not a coproduct of a connected bialgebra")


def antipode(g, coproduct: Coproduct | str, commutative: bool = False) -> Tensor:
    """Antipode of a generator by the left recursion ``S(g) = -sum S(g') g''``."""
    cop = get_coproduct(coproduct, commutative) if isinstance(coproduct, str) else coproduct
    _require_connected(cop)
    kind = cop.source
    kind.check(g)
    if kind.is_unit(g):
        raise ValueError(f"{kind.format_generator(g)} is the unit of {kind}, not a generator")
    cache = _ANTIPODES.setdefault(cop, {})
    hit = cache.get(g)
    if hit is not None:
        return hit
    image = cop(g)
    top = ((g,), ())
    if image.coefficient(*top) != 1:
        raise ValueError(f"{kind.format_generator(g)}: coproduct is not connected (no g (x) 1 term)")
    total = Tensor.zero((kind,))
    for (w1, w2), c in image.items():
        if (w1, w2) == top:
            continue
        total = total + (antipode_word(w1, cop) * Tensor.element(kind, {w2: 1})).scale(c)
    out = -total
    with _ANTIPODE_LOCK:
        return cache.setdefault(g, out)


def antipode_word(w: Word, cop: Coproduct) -> Tensor:
    """Antipode of a word: ``S(g_1 ... g_k) = S(g_k) ... S(g_1)``."""
    out = Tensor.one((cop.source,))
    for g in reversed(w):
        out = out * antipode(g, cop)
    return out


def antipode_identities(g, cop: Coproduct) -> tuple[Tensor, Tensor]:
    """``m(S (x) Id) Delta(g)`` and ``m(Id (x) S) Delta(g)``; both vanish on generators."""
    kind = cop.source
    image = cop(g)
    left = Tensor.zero((kind,))
    right = Tensor.zero((kind,))
    for (w1, w2), c in image.items():
        left = left + (antipode_word(w1, cop) * Tensor.element(kind, {w2: 1})).scale(c)
        right = right + (Tensor.element(kind, {w1: 1}) * antipode_word(w2, cop)).scale(c)
    return left, right


# characters ----------------------------------------------------------------

Character = Mapping | Callable


def _evaluate(chi: Character, kind: AlgebraKind, w: Word) -> RingValue:
    out: RingValue = 1
    for g in w:
        v = chi(g) if callable(chi) else chi.get(g, 0)
        out = out * v
        if not out:
            return 0
    return out


def evaluate(chi: Character, x: Tensor) -> RingValue:
    """Multiplicative extension of ``chi`` applied to a rank-1 element."""
    total: RingValue = 0
    for (w,), c in x.items():
        total = total + c * _evaluate(chi, x.kinds[0], w)
    return total


def character_convolve(chi: Character, xi: Character, g, coproduct: Coproduct | str,
                       commutative: bool = False) -> RingValue:
    """``(chi (x) xi)(Delta(g))``: ``chi`` on left legs, ``xi`` on right legs."""
    cop = get_coproduct(coproduct, commutative) if isinstance(coproduct, str) else coproduct
    left_kind, right_kind = cop.legs
    total: RingValue = 0
    for (w1, w2), c in cop(g).items():
        a = _evaluate(chi, left_kind, w1)
        if a:
            total = total + c * a * _evaluate(xi, right_kind, w2)
    return total


# morphisms -----------------------------------------------------------------

class AlgebraMorphism:
    """An algebra morphism given by its values on generators."""

    def __init__(self, name: str, source: AlgebraKind, target: AlgebraKind,
                 on_generator: Callable[[object], Tensor]):
        self.name = name
        self.source = source
        self.target = target
        self._on_generator = on_generator
        self._cache: dict = {}

    def __call__(self, g) -> Tensor:
        hit = self._cache.get(g)
        if hit is None:
            self.source.check(g)
            hit = Tensor.one((self.target,)) if self.source.is_unit(g) else self._on_generator(g)
            self._cache[g] = hit
        return hit

    def on_word(self, w: Word) -> Tensor:
        out = Tensor.one((self.target,))
        for g in w:
            out = out * self(g)
            if not out:
                break
        return out

    def apply(self, x: Tensor, legs=None) -> Tensor:
        """Apply on the given legs (default: every leg)."""
        legs = range(x.rank) if legs is None else legs
        for leg in legs:
            if x.kinds[leg] != self.source:
                raise ValueError(f"{self.name} maps {self.source}, leg {leg} is {x.kinds[leg]}")
            x = x.map_leg(leg, self.on_word)
        return x

    def __repr__(self) -> str:
        return f"<morphism {self.name}: {self.source} -> {self.target}>"


def hopf_morphism_data(which: str, side: str = "over", commutative: bool = False) -> AlgebraMorphism:
    """Generator data of the comparison morphisms.

    ``embed_b``    b_n -> sum of trees of order n (into inv-over / inv-under)
    ``section_b``  tree -> b_n on the left (over) or right (under) comb, else 0
    ``embed_a``    a_n -> sum of trees of order n + 1 (into dif)
    ``section_a``  tree -> a_{n-1} on the comb of order n, else 0
    ``project_P``  dif -> rho: ``s / vtx`` -> s, other trees -> 0
    ``project_R``  rho -> alpha: tree -> its V-factor word
    """
    c = commutative
    if side not in ("over", "under"):
        raise ValueError(f"side must be 'over' or 'under', got {side!r}")
    shape = "left" if side == "over" else "right"
    inv = (INV_OVER if side == "over" else INV_UNDER).with_commutative(c)
    sym, fdb = SYM.with_commutative(c), FDB.with_commutative(c)
    dif, rho, alpha = DIF.with_commutative(c), RHO.with_commutative(c), ALPHA.with_commutative(c)

    if which == "embed_b":
        return AlgebraMorphism(which, sym, inv, lambda n: Tensor.element(
            inv, {(t,): 1 for t in T.enumerate_trees(n)}))
    if which == "section_b":
        return AlgebraMorphism(which, inv, sym, lambda t: Tensor.element(
            sym, {(t.order,): 1} if T.is_comb(t, shape) else {}))
    if which == "embed_a":
        return AlgebraMorphism(which, fdb, dif, lambda n: Tensor.element(
            dif, {(t,): 1 for t in T.enumerate_trees(n + 1)}))
    if which == "section_a":
        return AlgebraMorphism(which, dif, fdb, lambda t: Tensor.element(
            fdb, {(t.order - 1,): 1} if T.is_comb(t, shape) else {}))
    if which == "project_P":
        return AlgebraMorphism(which, dif, rho, lambda t: Tensor.element(
            rho, {(t.left,): 1} if t.right.is_leaf else {}))
    if which == "project_R":
        return AlgebraMorphism(which, rho, alpha, lambda t: Tensor.element(
            alpha, {tuple(T.v_wrap(x) for x in T.over_factorize(t)): 1}))
    raise ValueError(
        f"unknown morphism {which!r}; expected embed_b, section_b, embed_a, section_a, project_P or project_R"
    )
