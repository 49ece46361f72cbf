"""Planar binary rooted trees.

A tree is identified with its preorder bitstring: ``1`` for an internal
node, ``0`` for a leaf.  The leaf is ``"0"``, the single-vertex tree is
``"100"``.  Trees are interned, so equal trees are the same object.

The two grafting products are cheap string splices:

* ``over(t, s)`` puts the root of ``t`` on the leftmost leaf of ``s``;
* ``under(t, s)`` puts the root of ``s`` on the rightmost leaf of ``t``.
"""

from __future__ import annotations

import itertools
import threading
from functools import lru_cache
from typing import Iterable, Sequence

from .coeff import ParseError

_INTERN: dict[str, "Tree"] = {}
_INTERN_LOCK = threading.Lock()


def _valid_code(code: str) -> bool:
    need = 1
    for i, ch in enumerate(code):
        if need == 0:
            return False
        if ch == "1":
            need += 1
        elif ch == "0":
            need -= 1
        else:
            return False
    return need == 0


class Tree:
    """Immutable interned planar binary tree."""

    __slots__ = ("code", "order", "_hash", "_children")

    def __new__(cls, code: str) -> Tree:
        tree = _INTERN.get(code)
        if tree is not None:
            return tree
        if not isinstance(code, str) or not _valid_code(code):
            raise ValueError(f"not a tree code: {code!r}")
        tree = object.__new__(cls)
        tree.code = code
        tree.order = code.count("1")
        tree._hash = hash(code)
        tree._children = None
        with _INTERN_LOCK:
            return _INTERN.setdefault(code, tree)

    def __reduce__(self):
        return (Tree, (self.code,))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return isinstance(other, Tree) and self.code == other.code

    def __lt__(self, other: Tree) -> bool:
        return (self.order, self.code) < (other.order, other.code)

    def __repr__(self) -> str:
        return f"Tree({self.code!r})"

    def __str__(self) -> str:
        return self.code

    @property
    def is_leaf(self) -> bool:
        return self.order == 0

    def _split(self) -> tuple[Tree, Tree]:
        if self._children is None:
            if self.is_leaf:
                raise ValueError("the leaf has no children")
            code = self.code
            need = 1
            i = 1
            while need:
                need += 1 if code[i] == "1" else -1
                i += 1
            self._children = (Tree(code[1:i]), Tree(code[i:]))
        return self._children

    @property
    def left(self) -> Tree:
        return self._split()[0]

    @property
    def right(self) -> Tree:
        return self._split()[1]


LEAF = Tree("0")
VERTEX = Tree("100")


def tree_key(t: Tree) -> tuple[int, str]:
    """Canonical sort key: order first, then the codec string."""
    return (t.order, t.code)


def node(left: Tree, right: Tree) -> Tree:
    return Tree("1" + left.code + right.code)


def over(t: Tree, s: Tree) -> Tree:
    """Graft ``t`` on the leftmost leaf of ``s``."""
    code = s.code
    i = code.index("0")
    return Tree(code[:i] + t.code + code[i + 1:])


def under(t: Tree, s: Tree) -> Tree:
    """Graft ``s`` on the rightmost leaf of ``t``."""
    return Tree(t.code[:-1] + s.code)


def over_product(trees: Iterable[Tree]) -> Tree:
    out = LEAF
    for t in trees:
        out = over(out, t)
    return out


def under_product(trees: Iterable[Tree]) -> Tree:
    out = LEAF
    for t in trees:
        out = under(out, t)
    return out


def v_wrap(t: Tree) -> Tree:
    """The tree with a bare left branch and ``t`` on the right: vtx under t."""
    return Tree("10" + t.code)


def comb(n: int, side: str) -> Tree:
    """Left comb (iterated over-power of vtx) or right comb (under-power)."""
    if n < 0:
        raise ValueError("comb size must be non-negative")
    if side == "left":
        return Tree("1" * n + "0" * (n + 1))
    if side == "right":
        return Tree("10" * n + "0")
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def is_comb(t: Tree, side: str) -> bool:
    return t == comb(t.order, side)


def mirror(t: Tree) -> Tree:
    if t.is_leaf:
        return t
    return node(mirror(t.right), mirror(t.left))


@lru_cache(maxsize=None)
def enumerate_trees(n: int) -> tuple[Tree, ...]:
    """All trees of order ``n``, sorted by code."""
    if n < 0:
        raise ValueError("order must be non-negative")
    if n == 0:
        return (LEAF,)
    out = []
    for k in range(n):
        for l in enumerate_trees(k):
            for r in enumerate_trees(n - 1 - k):
                out.append(node(l, r))
    out.sort(key=lambda t: t.code)
    return tuple(out)


def trees_up_to(n: int, start: int = 0) -> list[Tree]:
    return [t for k in range(start, n + 1) for t in enumerate_trees(k)]


# t-products ----------------------------------------------------------------

def mu_apply(t: Tree, args: Sequence[Tree]) -> Tree:
    """Replace the vertices of ``t`` by ``args`` taken in infix order."""
    if len(args) != t.order:
        raise ValueError(f"tree of order {t.order} needs {t.order} arguments, got {len(args)}")
    if any(a.is_leaf for a in args):
        raise ValueError("arguments must not be the leaf")
    return _mu(t, args, 0)[0]


def _mu(t: Tree, args: Sequence[Tree], i: int) -> tuple[Tree | None, int]:
    if t.is_leaf:
        return None, i
    left, i = _mu(t.left, args, i)
    x = args[i]
    i += 1
    right, i = _mu(t.right, args, i)
    if left is not None:
        x = over(left, x)
    if right is not None:
        x = under(x, right)
    return x, i


def over_splits(u: Tree) -> list[tuple[Tree, Tree]]:
    """All ``(t, s)`` with ``over(t, s) == u``, leaf allowed on either side."""
    code = u.code
    out = [(LEAF, u)]
    depth = 0
    sub = u
    while not sub.is_leaf:
        # the subtree rooted `depth` steps down the left spine starts at index depth
        out.append((sub, Tree(code[:depth] + "0" + code[depth + len(sub.code):])))
        sub = sub.left
        depth += 1
    return out


def under_splits(u: Tree) -> list[tuple[Tree, Tree]]:
    """All ``(t, s)`` with ``under(t, s) == u``, leaf allowed on either side."""
    code = u.code
    out = []
    sub = u
    while not sub.is_leaf:
        out.append((Tree(code[: len(code) - len(sub.code)] + "0"), sub))
        sub = sub.right
    out.append((u, LEAF))
    return out


def _decomposition_key(dec: tuple[Tree, tuple[Tree, ...]]):
    t, args = dec
    return (tree_key(t), tuple(tree_key(a) for a in args))


@lru_cache(maxsize=None)
def _decompositions(u: Tree) -> tuple[tuple[Tree, tuple[Tree, ...]], ...]:
    # u = [A /] S [\ B]: peel an optional right factor B off the right spine,
    # then an optional left factor A off the left spine of what remains.
    out = []
    right_choices: list[tuple[Tree | None, Tree]] = [(None, u)]
    for x, b in under_splits(u):
        if not x.is_leaf and not b.is_leaf:
            right_choices.append((b, x))
    for b, x in right_choices:
        left_choices: list[tuple[Tree | None, Tree]] = [(None, x)]
        for a, s in over_splits(x):
            if not a.is_leaf and not s.is_leaf:
                left_choices.append((a, s))
        right_decs = [(LEAF, ())] if b is None else _decompositions(b)
        for a, s in left_choices:
            left_decs = [(LEAF, ())] if a is None else _decompositions(a)
            for tl, al in left_decs:
                for tr, ar in right_decs:
                    out.append((node(tl, tr), al + (s,) + ar))
    out.sort(key=_decomposition_key)
    return tuple(out)


def substitution_decompositions(u: Tree) -> list[tuple[Tree, tuple[Tree, ...]]]:
    """Every ``(t, args)`` with ``mu_apply(t, args) == u``, each exactly once."""
    if u.is_leaf:
        raise ValueError("the leaf has no substitution decompositions")
    return list(_decompositions(u))


def compositions(n: int, parts: int) -> Iterable[tuple[int, ...]]:
    """Ordered splittings of ``n`` into ``parts`` positive integers."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    for cuts in itertools.combinations(range(1, n), parts - 1):
        bounds = (0,) + cuts + (n,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


@lru_cache(maxsize=None)
def _bruteforce_table(n: int) -> dict[Tree, tuple]:
    table: dict[Tree, list] = {}
    for k in range(1, n + 1):
        for t in enumerate_trees(k):
            for sizes in compositions(n, k):
                for args in itertools.product(*(enumerate_trees(m) for m in sizes)):
                    table.setdefault(mu_apply(t, args), []).append((t, tuple(args)))
    return {u: tuple(sorted(v, key=_decomposition_key)) for u, v in table.items()}


def bruteforce_decompositions(u: Tree) -> list[tuple[Tree, tuple[Tree, ...]]]:
    """Reference enumeration: try every ``t`` and argument tuple, keep the hits."""
    if u.is_leaf:
        raise ValueError("the leaf has no substitution decompositions")
    return list(_bruteforce_table(u.order).get(u, ()))


def over_factorize(u: Tree) -> list[Tree]:
    """The unique ``[u1..un]`` with ``u = V(u1)/V(u2)/.../V(un)``."""
    if u.is_leaf:
        raise ValueError("the leaf has no over-factorization")
    factors = []
    sub = u
    while not sub.is_leaf:
        factors.append(sub.right)
        sub = sub.left
    factors.reverse()
    return factors


def v_unwrap(t: Tree) -> Tree:
    if t.is_leaf or not t.left.is_leaf:
        raise ValueError(f"{t.code} is not of the form V(s)")
    return t.right


# codec ---------------------------------------------------------------------

def format_tree(t: Tree) -> str:
    return t.code


class _TreeParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise ParseError(msg, self.text, self.pos)

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> Tree:
        t = self.expr()
        if self.peek():
            self.error(f"unexpected {self.text[self.pos]!r}")
        return t

    def expr(self) -> Tree:
        acc = self.atom()
        while self.peek() in ("/", "\\") and self.peek():
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.atom()
            acc = over(acc, rhs) if op == "/" else under(acc, rhs)
        return acc

    def atom(self) -> Tree:
        ch = self.peek()
        if not ch:
            self.error("unexpected end of input")
        if ch == "o":
            self.pos += 1
            return LEAF
        if ch == "v":
            self.pos += 1
            return VERTEX
        if ch == "(":
            self.pos += 1
            t = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return t
        if ch in "01":
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos] in "01":
                self.pos += 1
            code = self.text[start:self.pos]
            if not _valid_code(code):
                self.pos = start
                self.error(f"invalid tree code {code!r}")
            return Tree(code)
        self.error(f"unexpected {ch!r}")


def parse_tree(text: str) -> Tree:
    """Parse a bitstring or an expression over ``o``, ``v``, ``/``, ``\\`` and parentheses."""
    return _TreeParser(text).parse()
