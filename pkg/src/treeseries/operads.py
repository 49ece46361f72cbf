"""Non-symmetric set-operads and the graded monoids they induce.

Three instances are provided:

* ``as``   -- one operation per arity, elements are positive integers;
* ``dias`` -- pairs ``(n, i)`` with ``1 <= i <= n``;
* ``dup``  -- planar binary trees with at least one vertex, composed by t-products.

Every instance also carries a graded monoid: its elements are the operad
elements plus a neutral element of grading 0, and the product is
``p . q = compose(p2, [p, q])`` for a declared associative element ``p2``.
"""

from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from functools import lru_cache
from typing import Any, Hashable, Sequence

from . import trees as T

Element = Hashable


class SetOperad(ABC):
    """Base class for operad instances.

    Subclasses provide arity, enumeration and composition.  Decompositions and
    monoid factorizations have generic enumerate-and-filter defaults which the
    tree instance overrides with structural versions.
    """

    id: str
    identity: Element
    neutral: Element
    associative_elements: dict[str, Element]

    def __init__(self):
        self._bucket_cache: dict[int, dict[Element, tuple]] = {}
        for name, p2 in self.associative_elements.items():
            lhs = self._compose(p2, [p2, self.identity])
            rhs = self._compose(p2, [self.identity, p2])
            if self.arity(p2) != 2 or lhs != rhs:
                raise ValueError(f"{self.id}: declared element {name!r} is not associative")

    # contract ----------------------------------------------------------
    @abstractmethod
    def arity(self, p: Element) -> int:
        """Arity of an operad element; 0 for the monoid's neutral element."""

    @abstractmethod
    def enumerate(self, n: int) -> tuple:
        """All operad elements of arity ``n >= 1``."""

    @abstractmethod
    def _compose(self, p: Element, args: Sequence[Element]) -> Element:
        ...

    @abstractmethod
    def is_element(self, x: Any) -> bool:
        ...

    @abstractmethod
    def sort_key(self, x: Element):
        ...

    @abstractmethod
    def format_element(self, x: Element):
        ...

    @abstractmethod
    def parse_element(self, obj) -> Element:
        ...

    def compose(self, p: Element, args: Sequence[Element]) -> Element:
        if not self.is_element(p) or p == self.neutral:
            raise ValueError(f"{self.id}: {p!r} is not an operad element")
        if len(args) != self.arity(p):
            raise ValueError(
                f"{self.id}: element of arity {self.arity(p)} expects "
                f"{self.arity(p)} arguments, got {len(args)}"
            )
        for q in args:
            if not self.is_element(q) or q == self.neutral:
                raise ValueError(f"{self.id}: {q!r} is not an operad element")
        return self._compose(p, list(args))

    # monoid ------------------------------------------------------------
    def monoid_elements(self, n: int) -> tuple:
        return (self.neutral,) if n == 0 else self.enumerate(n)

    def resolve_p2(self, p2) -> tuple[str, Element]:
        """Accept a name, an element or ``None`` (first declared) and return both."""
        if p2 is None:
            name = next(iter(self.associative_elements))
            return name, self.associative_elements[name]
        if isinstance(p2, str) and p2 in self.associative_elements:
            return p2, self.associative_elements[p2]
        for name, el in self.associative_elements.items():
            if el == p2:
                return name, el
        raise ValueError(
            f"{self.id}: {p2!r} is not a declared associative element "
            f"(choose from {sorted(self.associative_elements)})"
        )

    def monoid_mul(self, p2, a: Element, b: Element) -> Element:
        _, p = self.resolve_p2(p2)
        if a == self.neutral:
            return b
        if b == self.neutral:
            return a
        return self._compose(p, [a, b])

    def factorizations(self, p2, u: Element) -> tuple[tuple[Element, Element], ...]:
        """All ``(a, b)`` with ``a . b == u`` in the monoid, units included."""
        name, _ = self.resolve_p2(p2)
        return self._factorizations(name, u)

    def _factorizations(self, name: str, u: Element) -> tuple:
        n = self.arity(u)
        out = []
        for k in range(n + 1):
            for a in self.monoid_elements(k):
                for b in self.monoid_elements(n - k):
                    if self.monoid_mul(name, a, b) == u:
                        out.append((a, b))
        return tuple(out)

    # decompositions ------------------------------------------------------
    def decompositions(self, u: Element) -> tuple[tuple[Element, tuple], ...]:
        """All ``(p, args)`` with ``compose(p, args) == u``."""
        return self.enumerated_decompositions(u)

    def enumerated_decompositions(self, u: Element) -> tuple[tuple[Element, tuple], ...]:
        """Generic enumerate-and-bucket decompositions, cached per arity."""
        n = self.arity(u)
        table = self._bucket_cache.get(n)
        if table is None:
            buckets: dict[Element, list] = {}
            for m in range(1, n + 1):
                for p in self.enumerate(m):
                    for sizes in T.compositions(n, m):
                        for args in itertools.product(*(self.enumerate(k) for k in sizes)):
                            buckets.setdefault(self._compose(p, list(args)), []).append((p, tuple(args)))
            key = self._decomposition_key
            table = {r: tuple(sorted(v, key=key)) for r, v in buckets.items()}
            self._bucket_cache[n] = table
        return table.get(u, ())

    def _decomposition_key(self, dec):
        p, args = dec
        return (self.sort_key(p), tuple(self.sort_key(a) for a in args))

    def __repr__(self) -> str:
        return f"<operad {self.id}>"


class AsOperad(SetOperad):
    """One operation per arity; composition adds arities."""

    id = "as"
    identity = 1
    neutral = 0
    associative_elements = {"add": 2}

    def arity(self, p):
        return p

    def enumerate(self, n):
        if n < 1:
            raise ValueError("arity must be positive")
        return (n,)

    def _compose(self, p, args):
        return sum(args)

    def is_element(self, x):
        return isinstance(x, int) and not isinstance(x, bool) and x >= 0

    def sort_key(self, x):
        return x

    def format_element(self, x):
        return x

    def parse_element(self, obj):
        n = int(obj)
        if n < 0:
            raise ValueError(f"as: negative element {obj!r}")
        return n

    def _factorizations(self, name, u):
        return tuple((k, u - k) for k in range(u + 1))

    @lru_cache(maxsize=None)
    def decompositions(self, u):
        out = []
        for m in range(1, u + 1):
            for sizes in T.compositions(u, m):
                out.append((m, sizes))
        return tuple(out)


class DiasOperad(SetOperad):
    """Pairs ``(n, i)``; the composite keeps the marked input of the marked block.

    ``compose((n, i), [(m_k, j_k)]) = (sum m_k, m_1 + ... + m_{i-1} + j_i)``.
    """

    id = "dias"
    identity = (1, 1)
    neutral = (0, 0)
    associative_elements = {"left": (2, 1), "right": (2, 2)}

    def arity(self, p):
        return p[0]

    def enumerate(self, n):
        if n < 1:
            raise ValueError("arity must be positive")
        return tuple((n, i) for i in range(1, n + 1))

    def _compose(self, p, args):
        n, i = p
        offset = sum(a[0] for a in args[: i - 1])
        return (sum(a[0] for a in args), offset + args[i - 1][1])

    def is_element(self, x):
        return (
            isinstance(x, tuple) and len(x) == 2
            and all(isinstance(v, int) for v in x)
            and (x == (0, 0) or 1 <= x[1] <= x[0])
        )

    def sort_key(self, x):
        return x

    def format_element(self, x):
        return "e" if x == self.neutral else f"{x[0]},{x[1]}"

    def parse_element(self, obj):
        if obj == "e":
            return self.neutral
        try:
            n, i = (int(v) for v in str(obj).split(","))
        except ValueError:
            raise ValueError(f"dias: bad element {obj!r}") from None
        if not self.is_element((n, i)):
            raise ValueError(f"dias: bad element {obj!r}")
        return (n, i)


class DupOperad(SetOperad):
    """Trees under t-products; the two binary trees are both associative."""

    id = "dup"
    identity = T.VERTEX
    neutral = T.LEAF
    associative_elements = {"over": T.Tree("11000"), "under": T.Tree("10100")}

    def arity(self, p):
        return p.order

    def enumerate(self, n):
        if n < 1:
            raise ValueError("arity must be positive")
        return T.enumerate_trees(n)

    def _compose(self, p, args):
        return T.mu_apply(p, args)

    def is_element(self, x):
        return isinstance(x, T.Tree)

    def sort_key(self, x):
        return T.tree_key(x)

    def format_element(self, x):
        return x.code

    def parse_element(self, obj):
        return T.parse_tree(str(obj))

    def monoid_mul(self, p2, a, b):
        name, _ = self.resolve_p2(p2)
        return T.over(a, b) if name == "over" else T.under(a, b)

    def _factorizations(self, name, u):
        splits = T.over_splits(u) if name == "over" else T.under_splits(u)
        return tuple(sorted(splits, key=lambda ab: (T.tree_key(ab[0]), T.tree_key(ab[1]))))

    def decompositions(self, u):
        return T._decompositions(u)


AS = AsOperad()
DIAS = DiasOperad()
DUP = DupOperad()

_INSTANCES = {"as": AS, "dias": DIAS, "dup": DUP}


def get_instance(instance_id: str) -> SetOperad:
    try:
        return _INSTANCES[instance_id]
    except KeyError:
        raise ValueError(f"unknown operad instance {instance_id!r}; expected one of {sorted(_INSTANCES)}") from None


def operad_compose(instance: SetOperad | str, p, args) -> Element:
    if isinstance(instance, str):
        instance = get_instance(instance)
    return instance.compose(p, args)


def monoid_mul(instance: SetOperad | str, p2, a, b) -> Element:
    if isinstance(instance, str):
        instance = get_instance(instance)
    return instance.monoid_mul(p2, a, b)
