"""Free and polynomial algebras on tree or integer generators, and their tensors.

A word is a tuple of generators.  Each :class:`AlgebraKind` decides which
generator is identified with the unit (and erased from words), how
generators are graded, and whether words are sorted (commutative quotient).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .. import trees as T
from ..coeff import as_value, format_value

Word = tuple

FAMILIES = ("inv-over", "inv-under", "dif", "rho", "alpha", "fdb", "sym")


@dataclass(frozen=True)
class AlgebraKind:
    """Generator set, unit convention and grading of one algebra."""

    family: str
    commutative: bool = False

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown algebra family {self.family!r}")

    @property
    def on_trees(self) -> bool:
        return self.family not in ("fdb", "sym")

    def with_commutative(self, flag: bool = True) -> AlgebraKind:
        return AlgebraKind(self.family, flag)

    def is_unit(self, g) -> bool:
        if self.family == "dif":
            return g == T.VERTEX
        if self.on_trees:
            return g == T.LEAF
        return g == 0

    def check(self, g) -> None:
        if self.on_trees:
            if not isinstance(g, T.Tree):
                raise ValueError(f"{self.family}: generator must be a tree, got {g!r}")
            if self.family == "alpha" and not g.is_leaf and not g.left.is_leaf:
                raise ValueError(f"alpha: {g.code} is not of the form V(t)")
        elif not isinstance(g, int) or g < 0:
            raise ValueError(f"{self.family}: generator must be a non-negative integer, got {g!r}")

    def degree(self, g) -> int:
        if self.on_trees:
            return g.order - 1 if self.family == "dif" else g.order
        return g

    def word_degree(self, w: Word) -> int:
        return sum(self.degree(g) for g in w)

    def sort_key(self, g):
        return T.tree_key(g) if self.on_trees else g

    def word(self, gens: Iterable) -> Word:
        """Erase unit generators; sort when commutative."""
        w = [g for g in gens if not self.is_unit(g)]
        if self.commutative:
            w.sort(key=self.sort_key)
        return tuple(w)

    def generators(self, d: int) -> list:
        """All generators of degree ``d >= 1``."""
        if d < 1:
            return []
        if self.family == "dif":
            return list(T.enumerate_trees(d + 1))
        if self.family == "alpha":
            return [T.v_wrap(t) for t in sorted(T.enumerate_trees(d - 1), key=T.tree_key)]
        if self.on_trees:
            return list(T.enumerate_trees(d))
        return [d]

    def format_generator(self, g) -> str:
        if self.on_trees:
            return g.code
        return f"{'a' if self.family == 'fdb' else 'b'}{g}"

    def parse_generator(self, text: str):
        text = text.strip()
        if self.on_trees:
            return T.parse_tree(text)
        prefix = "a" if self.family == "fdb" else "b"
        if not text.startswith(prefix) or not text[1:].isdigit():
            raise ValueError(f"{self.family}: bad generator {text!r}")
        return int(text[1:])

    def __str__(self) -> str:
        return f"{self.family}{'' if self.commutative else '-nc'}"


INV_OVER = AlgebraKind("inv-over")
INV_UNDER = AlgebraKind("inv-under")
DIF = AlgebraKind("dif")
RHO = AlgebraKind("rho")
ALPHA = AlgebraKind("alpha")
FDB = AlgebraKind("fdb")
SYM = AlgebraKind("sym")


def _tensor_key(kinds, key):
    return tuple((len(w), tuple(k.sort_key(g) for g in w)) for k, w in zip(kinds, key))


class Tensor:
    """Finite linear combination of k-tuples of words, one algebra per leg.

    Rank 1 tensors play the role of algebra elements, rank 2 and 3 the role
    of coproduct images and iterated coproducts.
    """

    __slots__ = ("kinds", "_terms")

    def __init__(self, kinds: Sequence[AlgebraKind], terms: Mapping | None = None):
        kinds = tuple(kinds)
        out: dict = {}
        for key, c in (terms or {}).items():
            if len(key) != len(kinds):
                raise ValueError(f"expected {len(kinds)} legs, got {len(key)}")
            nkey = []
            for k, w in zip(kinds, key):
                for g in w:
                    k.check(g)
                nkey.append(k.word(w))
            nkey = tuple(nkey)
            out[nkey] = out.get(nkey, 0) + as_value(c)
        self.kinds = kinds
        self._terms = {k: v for k, v in out.items() if v}

    @classmethod
    def _raw(cls, kinds: tuple, terms: dict) -> Tensor:
        t = object.__new__(cls)
        t.kinds = kinds
        t._terms = {k: v for k, v in terms.items() if v}
        return t

    @classmethod
    def one(cls, kinds: Sequence[AlgebraKind]) -> Tensor:
        kinds = tuple(kinds)
        return cls._raw(kinds, {((),) * len(kinds): 1})

    @classmethod
    def zero(cls, kinds: Sequence[AlgebraKind]) -> Tensor:
        return cls._raw(tuple(kinds), {})

    @classmethod
    def element(cls, kind: AlgebraKind, terms: Mapping[Word, object] | None = None) -> Tensor:
        """A rank-1 tensor, i.e. an element of one algebra."""
        return cls((kind,), {(w,): c for w, c in (terms or {}).items()})

    @classmethod
    def generator(cls, kind: AlgebraKind, g) -> Tensor:
        return cls((kind,), {((g,),): 1})

    @property
    def rank(self) -> int:
        return len(self.kinds)

    def items(self) -> list[tuple[tuple, object]]:
        return sorted(self._terms.items(), key=lambda kv: _tensor_key(self.kinds, kv[0]))

    def coefficient(self, *key) -> object:
        return self._terms.get(tuple(key), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _check(self, other: Tensor):
        if not isinstance(other, Tensor):
            raise TypeError("expected a Tensor")
        if other.kinds != self.kinds:
            raise ValueError(
                f"tensor legs differ: {', '.join(map(str, self.kinds))} vs {', '.join(map(str, other.kinds))}"
            )

    def __add__(self, other: Tensor) -> Tensor:
        self._check(other)
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return Tensor._raw(self.kinds, out)

    def __neg__(self) -> Tensor:
        return Tensor._raw(self.kinds, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other: Tensor) -> Tensor:
        return self + (-other)

    def scale(self, c) -> Tensor:
        c = as_value(c)
        return Tensor._raw(self.kinds, {k: c * v for k, v in self._terms.items()})

    def __mul__(self, other: Tensor) -> Tensor:
        """Legwise product ``(a (x) b)(c (x) d) = ac (x) bd``."""
        if not isinstance(other, Tensor):
            return self.scale(other)
        self._check(other)
        kinds = self.kinds
        if all(not k.commutative for k in kinds):
            join = lambda x, y: tuple(a + b for a, b in zip(x, y))
        else:
            join = lambda x, y: tuple(
                k.word(a + b) if k.commutative else a + b for k, a, b in zip(kinds, x, y)
            )
        out: dict = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                key = join(k1, k2)
                out[key] = out.get(key, 0) + c1 * c2
        return Tensor._raw(kinds, out)

    def __rmul__(self, c) -> Tensor:
        return self.scale(c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.kinds == other.kinds and self._terms == other._terms

    __hash__ = None

    def map_leg(self, leg: int, fn: Callable[[Word], Tensor]) -> Tensor:
        """Replace leg ``leg`` by the tensor ``fn(word)``, splicing its legs in place."""
        cache: dict = {}
        out: dict = {}
        new_kinds = None
        for key, c in self._terms.items():
            w = key[leg]
            image = cache.get(w)
            if image is None:
                image = cache[w] = fn(w)
            if new_kinds is None:
                new_kinds = self.kinds[:leg] + image.kinds + self.kinds[leg + 1:]
            for ikey, ic in image._terms.items():
                nkey = key[:leg] + ikey + key[leg + 1:]
                out[nkey] = out.get(nkey, 0) + c * ic
        if new_kinds is None:
            probe = fn(())
            new_kinds = self.kinds[:leg] + probe.kinds + self.kinds[leg + 1:]
        return Tensor._raw(new_kinds, out)

    def permute(self, order: Sequence[int]) -> Tensor:
        """Reorder legs: leg ``i`` of the result is leg ``order[i]`` of ``self``."""
        kinds = tuple(self.kinds[i] for i in order)
        return Tensor._raw(kinds, {tuple(k[i] for i in order): v for k, v in self._terms.items()})

    def twist(self) -> Tensor:
        if self.rank != 2:
            raise ValueError("twist needs a rank-2 tensor")
        return self.permute((1, 0))

    def merge_legs(self, leg: int) -> Tensor:
        """Multiply legs ``leg`` and ``leg + 1`` together."""
        a, b = self.kinds[leg], self.kinds[leg + 1]
        if a != b:
            raise ValueError(f"cannot multiply legs in different algebras {a} and {b}")
        kinds = self.kinds[:leg + 1] + self.kinds[leg + 2:]
        out: dict = {}
        for key, c in self._terms.items():
            w = a.word(key[leg] + key[leg + 1])
            nkey = key[:leg] + (w,) + key[leg + 2:]
            out[nkey] = out.get(nkey, 0) + c
        return Tensor._raw(kinds, out)

    def abelianize(self) -> Tensor:
        kinds = tuple(k.with_commutative(True) for k in self.kinds)
        out: dict = {}
        for key, c in self._terms.items():
            nkey = tuple(k.word(w) for k, w in zip(kinds, key))
            out[nkey] = out.get(nkey, 0) + c
        return Tensor._raw(kinds, out)

    def single_word(self) -> Word:
        """The one rank-1 word of a monomial element (used for generator images)."""
        if self.rank != 1 or len(self._terms) != 1:
            raise ValueError("not a single word")
        return next(iter(self._terms))[0]

    def __str__(self) -> str:
        return format_tensor(self)

    def __repr__(self) -> str:
        return f"Tensor({format_tensor(self)})"


def format_word(kind: AlgebraKind, w: Word) -> str:
    if not w:
        return "1"
    return "*".join(kind.format_generator(g) for g in w)


def format_tensor(x: Tensor) -> str:
    """Text such as ``11000 (x) 1 + 2*100 (x) 100``."""
    if not x:
        return "0"
    parts = []
    for i, (key, c) in enumerate(x.items()):
        body = " (x) ".join(format_word(k, w) for k, w in zip(x.kinds, key))
        coeff = format_value(c)
        neg = coeff.startswith("-")
        mag = coeff[1:] if neg else coeff
        term = body if mag == "1" else f"{mag}*{body}"
        if i == 0:
            parts.append(f"-{term}" if neg else term)
        else:
            parts.append(f" - {term}" if neg else f" + {term}")
    return "".join(parts)


def tensor_to_json(x: Tensor) -> list:
    """Rank-2 tensors as ``{"left", "right", "q"}`` records; other ranks use ``"legs"``."""
    out = []
    for key, c in x.items():
        q = Fraction(c)
        rec_q = f"{q.numerator}/{q.denominator}"
        words = [[k.format_generator(g) for g in w] for k, w in zip(x.kinds, key)]
        if x.rank == 2:
            out.append({"left": words[0], "right": words[1], "q": rec_q})
        else:
            out.append({"legs": words, "q": rec_q})
    return out
