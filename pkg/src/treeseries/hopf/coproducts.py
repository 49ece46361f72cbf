"""Coproducts and coactions on generators, extended multiplicatively to words."""

from __future__ import annotations

import itertools
import threading
from math import comb as binomial, factorial
from typing import Callable

from .. import trees as T
from ..operads import AS, DUP, SetOperad
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


class Coproduct:
    """A map from generators to rank-2 tensors, extended as an algebra morphism.

    When both legs live in the source algebra this is a coproduct; otherwise
    (left leg and right leg in different algebras) it is a coaction.
    """

    def __init__(
        self,
        name: str,
        source: AlgebraKind,
        legs: tuple[AlgebraKind, AlgebraKind],
        image: Callable[[object], Tensor],
        coaction: bool = False,
    ):
        self.name = name
        self.source = source
        self.legs = legs
        self._image = image
        self.coaction = coaction
        self._cache: dict = {}
        self._lock = threading.Lock()

    @property
    def is_coproduct(self) -> bool:
        return not self.coaction and self.legs == (self.source, self.source)

    def __call__(self, g) -> Tensor:
        hit = self._cache.get(g)
        if hit is None:
            self.source.check(g)
            if self.source.is_unit(g):
                hit = Tensor.one(self.legs)
            else:
                hit = self._image(g)
            with self._lock:
                hit = self._cache.setdefault(g, hit)
        return hit

    def on_word(self, w: Word) -> Tensor:
        out = Tensor.one(self.legs)
        for g in w:
            out = out * self(g)
        return out

    def apply(self, x: Tensor, leg: int = 0) -> Tensor:
        if x.kinds[leg] != self.source:
            raise ValueError(f"{self.name} acts on {self.source}, leg {leg} is {x.kinds[leg]}")
        return x.map_leg(leg, self.on_word)

    def __repr__(self) -> str:
        return f"<coproduct {self.name}: {self.source} -> {self.legs[0]} (x) {self.legs[1]}>"


def _tensor(legs, pairs) -> Tensor:
    terms: dict = {}
    for left, right in pairs:
        key = (tuple(left), tuple(right))
        terms[key] = terms.get(key, 0) + 1
    return Tensor(legs, terms)


def _kinds(kind: AlgebraKind, commutative: bool) -> AlgebraKind:
    return kind.with_commutative(commutative)


def _rho_args(args) -> list[T.Tree] | None:
    """Return ``[s_i]`` when every argument has the form ``s_i / vtx``."""
    out = []
    for a in args:
        if not a.right.is_leaf:
            return None
        out.append(a.left)
    return out


def _alpha_word(s: T.Tree) -> list[T.Tree]:
    """The V-factor word of a tree (empty for the leaf)."""
    return [] if s.is_leaf else [T.v_wrap(x) for x in T.over_factorize(s)]


def _nonleaf(u: T.Tree):
    if not isinstance(u, T.Tree) or u.is_leaf:
        raise ValueError("expected a tree with at least one vertex")


# tree coproducts -------------------------------------------------------------

def coprod_inv(u: T.Tree, side: str, commutative: bool = False) -> Tensor:
    """Sum over the factorizations ``u = t . s`` in the over or under monoid."""
    _nonleaf(u)
    kind = _kinds(INV_OVER if side == "over" else INV_UNDER, commutative)
    if side not in ("over", "under"):
        raise ValueError(f"side must be 'over' or 'under', got {side!r}")
    return _tensor((kind, kind), (([a], [b]) for a, b in DUP.factorizations(side, u)))


def coprod_dif(u: T.Tree, commutative: bool = False) -> Tensor:
    """Sum of ``t (x) s_1 ... s_k`` over all ``u = mu_t(s_1, ..., s_k)``."""
    _nonleaf(u)
    kind = _kinds(DIF, commutative)
    return _tensor((kind, kind), (([t], args) for t, args in DUP.decompositions(u)))


def coact_inv(u: T.Tree, side: str = "over", commutative: bool = False) -> Tensor:
    """Same index set as :func:`coprod_dif`; the left leg keeps vtx."""
    _nonleaf(u)
    left = _kinds(INV_OVER if side == "over" else INV_UNDER, commutative)
    right = _kinds(DIF, commutative)
    return _tensor((left, right), (([t], args) for t, args in DUP.decompositions(u)))


def coact_dif(u, instance: SetOperad = DUP, commutative: bool = False) -> Tensor:
    """The operad-level coaction, computed from generic enumerated decompositions."""
    if instance is not DUP:
        raise ValueError("only the tree instance has a tree coaction")
    _nonleaf(u)
    left, right = _kinds(RHO, commutative), _kinds(DIF, commutative)
    return _tensor((left, right), (([p], args) for p, args in instance.enumerated_decompositions(u)))


def coprod_rho(u: T.Tree, commutative: bool = False) -> Tensor:
    """``1 (x) u`` plus ``t (x) s_1 ... s_{k+1}`` over ``u = mu_t(s_i / vtx) / s_{k+1}``."""
    _nonleaf(u)
    kind = _kinds(RHO, commutative)
    pairs = [([], [u])]
    for x, last in T.over_splits(u):
        if x.is_leaf:
            continue
        for t, args in DUP.decompositions(x):
            ss = _rho_args(args)
            if ss is not None:
                pairs.append(([t], ss + [last]))
    return _tensor((kind, kind), pairs)


def coact_rho(u: T.Tree, commutative: bool = False) -> Tensor:
    """``t (x) s_1 ... s_k`` over ``u = mu_t(s_1 / vtx, ..., s_k / vtx)``."""
    _nonleaf(u)
    kind = _kinds(RHO, commutative)
    pairs = []
    for t, args in DUP.decompositions(u):
        ss = _rho_args(args)
        if ss is not None:
            pairs.append(([t], ss))
    return _tensor((kind, kind), pairs)


def coprod_alpha(g: T.Tree, commutative: bool = False) -> Tensor:
    """Closed form on a generator ``g = V(u)``.

    ``1 (x) V(u)`` plus ``V(t) (x) word(s_1 / ... / s_k)`` over
    ``u = mu_t(s_i / vtx)``; the generator ``vtx = V(leaf)`` is primitive.
    """
    kind = _kinds(ALPHA, commutative)
    kind.check(g)
    u = T.v_unwrap(g)
    if u.is_leaf:
        return _tensor((kind, kind), [([g], []), ([], [g])])
    pairs = [([], [g])]
    for t, args in DUP.decompositions(u):
        ss = _rho_args(args)
        if ss is not None:
            pairs.append(([T.v_wrap(t)], [x for s in ss for x in _alpha_word(s)]))
    return _tensor((kind, kind), pairs)


_ALPHA_REC: dict = {}
_ALPHA_REC_LOCK = threading.Lock()


def _alpha_delta(g: T.Tree) -> Tensor:
    """Recursive coaction part on ``g = V(t)`` in the free (nc) algebra."""
    hit = _ALPHA_REC.get(g)
    if hit is not None:
        return hit
    t = T.v_unwrap(g)
    if t.is_leaf:
        out = _tensor((ALPHA, ALPHA), [([T.VERTEX], [])])
    else:
        factors = T.over_factorize(t)
        head = [T.v_wrap(x) for x in factors[:-1]]
        prod = Tensor.one((ALPHA, ALPHA))
        for h in head:
            prod = prod * (_tensor((ALPHA, ALPHA), [([], [h])]) + _alpha_delta(h))
        prod = prod * _alpha_delta(T.v_wrap(factors[-1]))
        # (V (x) Id): read each left word as the over-product tree, then wrap it
        terms: dict = {}
        for (left, right), c in prod.items():
            key = ((T.v_wrap(T.over_product(left)),), right)
            terms[key] = terms.get(key, 0) + c
        out = Tensor._raw((ALPHA, ALPHA), terms)
    with _ALPHA_REC_LOCK:
        return _ALPHA_REC.setdefault(g, out)


def coprod_alpha_recursive(g: T.Tree, commutative: bool = False) -> Tensor:
    """``1 (x) V(t)`` plus the coaction obtained by recursion on the last over-factor."""
    ALPHA.check(g)
    out = _tensor((ALPHA, ALPHA), [([], [g])]) + _alpha_delta(g)
    return out.abelianize() if commutative else out


# integer coproducts ------------------------------------------------------------

def _weak_compositions(n: int, parts: int):
    for cuts in itertools.combinations_with_replacement(range(n + 1), parts - 1):
        bounds = (0,) + cuts + (n,)
        yield [bounds[i + 1] - bounds[i] for i in range(parts)]


def _partitions_by_multiplicity(total: int, count: int):
    """Multiplicity vectors ``p`` with ``sum p_i = count`` and ``sum i p_i = total``."""

    def rec(i, remaining_total, remaining_count):
        if i > total:
            if remaining_total == 0 and remaining_count == 0:
                yield []
            return
        for p in range(min(remaining_count, remaining_total // i) + 1):
            for rest in rec(i + 1, remaining_total - i * p, remaining_count - p):
                yield [p] + rest

    if total == 0:
        if count == 0:
            yield []
        return
    yield from rec(1, total, count)


def fdb_coproduct(n: int, variant: str) -> Tensor:
    """Faa di Bruno coproduct of ``a_n`` (``nc`` or ``comm``) or the ``sym`` coproduct of ``b_n``."""
    if n < 1:
        raise ValueError("index must be positive")
    if variant == "sym":
        return _tensor((SYM, SYM), (([k], [n - k]) for k in range(n + 1)))
    if variant == "nc":
        pairs = []
        for m in range(n + 1):
            for ks in _weak_compositions(n - m, m + 1):
                pairs.append(([m], ks))
        return _tensor((FDB, FDB), pairs)
    if variant == "comm":
        kind = FDB.with_commutative(True)
        terms: dict = {}
        for m in range(n + 1):
            rest = n - m
            for l in range(rest + 1):
                for ps in _partitions_by_multiplicity(rest, l):
                    c = binomial(m + 1, l) * factorial(l)
                    denom = 1
                    for p in ps:
                        denom *= factorial(p)
                    word = tuple(i + 1 for i, p in enumerate(ps) for _ in range(p))
                    key = ((m,), word)
                    terms[key] = terms.get(key, 0) + c // denom
        return Tensor((kind, kind), terms)
    raise ValueError(f"variant must be 'nc', 'comm' or 'sym', got {variant!r}")


def monoid_coproduct_as(n: int) -> Tensor:
    """Factorization coproduct of the integer monoid, written on ``b_n``."""
    return _tensor((SYM, SYM), (([a], [b]) for a, b in AS.factorizations(None, n)))


def operad_coproduct_as(n: int) -> Tensor:
    """Decomposition coproduct of the integer operad, arity ``k`` written as ``a_{k-1}``."""
    return _tensor(
        (FDB, FDB),
        (([p - 1], [q - 1 for q in args]) for p, args in AS.decompositions(n + 1)),
    )


# registry ----------------------------------------------------------------------

_REGISTRY: dict = {}
_REGISTRY_LOCK = threading.Lock()

COPRODUCT_NAMES = (
    "inv-over", "inv-under", "dif", "rho", "alpha", "alpha-rec", "fdb", "sym",
    "coact-inv-over", "coact-inv-under", "coact-dif", "coact-rho",
)


def get_coproduct(name: str, commutative: bool = False) -> Coproduct:
    """Look up a (cached) coproduct or coaction by name."""
    key = (name, commutative)
    hit = _REGISTRY.get(key)
    if hit is not None:
        return hit
    c = commutative
    k = lambda kind: kind.with_commutative(c)
    if name in ("inv-over", "inv-under"):
        side = name.split("-")[1]
        kind = k(INV_OVER if side == "over" else INV_UNDER)
        cop = Coproduct(name, kind, (kind, kind), lambda u: coprod_inv(u, side, c))
    elif name == "dif":
        cop = Coproduct(name, k(DIF), (k(DIF), k(DIF)), lambda u: coprod_dif(u, c))
    elif name == "rho":
        cop = Coproduct(name, k(RHO), (k(RHO), k(RHO)), lambda u: coprod_rho(u, c))
    elif name == "alpha":
        cop = Coproduct(name, k(ALPHA), (k(ALPHA), k(ALPHA)), lambda g: coprod_alpha(g, c))
    elif name == "alpha-rec":
        cop = Coproduct(name, k(ALPHA), (k(ALPHA), k(ALPHA)), lambda g: coprod_alpha_recursive(g, c))
    elif name == "fdb":
        cop = Coproduct(name, k(FDB), (k(FDB), k(FDB)), lambda n: fdb_coproduct(n, "comm" if c else "nc"))
    elif name == "sym":
        cop = Coproduct(
            name, k(SYM), (k(SYM), k(SYM)),
            lambda n: fdb_coproduct(n, "sym").abelianize() if c else fdb_coproduct(n, "sym"),
        )
    elif name in ("coact-inv-over", "coact-inv-under"):
        side = name.rsplit("-", 1)[1]
        left = k(INV_OVER if side == "over" else INV_UNDER)
        cop = Coproduct(name, left, (left, k(DIF)), lambda u: coact_inv(u, side, c), True)
    elif name == "coact-dif":
        cop = Coproduct(name, k(RHO), (k(RHO), k(DIF)), lambda u: coact_dif(u, DUP, c), True)
    elif name == "coact-rho":
        cop = Coproduct(name, k(RHO), (k(RHO), k(RHO)), lambda u: coact_rho(u, c), True)
    else:
        raise ValueError(f"unknown coproduct {name!r}; expected one of {', '.join(COPRODUCT_NAMES)}")
    with _REGISTRY_LOCK:
        return _REGISTRY.setdefault(key, cop)
