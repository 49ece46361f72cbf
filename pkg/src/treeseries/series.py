"""Truncated series over graded monoids and set-operads, and their group laws.

A :class:`GradedSeries` is a finite mapping from monoid or operad elements to
exact coefficients, truncated in the carrier's group grading: the order for
monoid series and ``arity - 1`` for operad series.

Coefficients are computed target by target.  For each element ``u`` of the
result we walk the ways of writing ``u`` as a product (monoid) or a
composite (operad) and sum the matching coefficient products.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from . import trees as T
from .coeff import (
    ONE,
    ParseError,
    Poly,
    RingValue,
    as_value,
    format_value,
    parse_value,
    product,
    value_from_json,
    value_to_json,
)
from .operads import AS, DUP, SetOperad, get_instance


@dataclass(frozen=True)
class Carrier:
    """Where a series lives: a monoid (instance + associative element) or an operad."""

    kind: str
    instance: SetOperad
    p2: str | None = None

    def __post_init__(self):
        if self.kind not in ("monoid", "operad"):
            raise ValueError(f"carrier kind must be 'monoid' or 'operad', got {self.kind!r}")
        if self.kind == "monoid":
            name, _ = self.instance.resolve_p2(self.p2)
            object.__setattr__(self, "p2", name)
        elif self.p2 is not None:
            object.__setattr__(self, "p2", None)

    @classmethod
    def monoid(cls, instance: SetOperad | str = "dup", p2: str | None = None) -> Carrier:
        if isinstance(instance, str):
            instance = get_instance(instance)
        return cls("monoid", instance, p2)

    @classmethod
    def operad(cls, instance: SetOperad | str = "dup") -> Carrier:
        if isinstance(instance, str):
            instance = get_instance(instance)
        return cls("operad", instance)

    @property
    def is_monoid(self) -> bool:
        return self.kind == "monoid"

    @property
    def unit(self):
        return self.instance.neutral if self.is_monoid else self.instance.identity

    def grading(self, key) -> int:
        a = self.instance.arity(key)
        return a if self.is_monoid else a - 1

    def elements(self, d: int) -> tuple:
        if self.is_monoid:
            return self.instance.monoid_elements(d)
        return self.instance.enumerate(d + 1)

    def accepts(self, key) -> bool:
        inst = self.instance
        if not inst.is_element(key):
            return False
        return self.is_monoid or key != inst.neutral

    def sort_key(self, key):
        return self.instance.sort_key(key)

    def describe(self) -> str:
        if self.is_monoid:
            return f"monoid({self.instance.id}, {self.p2})"
        return f"operad({self.instance.id})"


class GradedSeries:
    """Truncated series ``sum c_k x^k``; immutable, zero coefficients never stored."""

    __slots__ = ("carrier", "truncation", "_terms")

    def __init__(self, carrier: Carrier, truncation: int, terms: Mapping | None = None):
        if not isinstance(truncation, int) or truncation < 0:
            raise ValueError("truncation must be a non-negative integer")
        clean: dict = {}
        for key, c in (terms or {}).items():
            if not carrier.accepts(key):
                raise ValueError(f"{key!r} is not an element of {carrier.describe()}")
            c = as_value(c)
            if c and carrier.grading(key) <= truncation:
                clean[key] = c
        self.carrier = carrier
        self.truncation = truncation
        self._terms = clean

    @classmethod
    def _raw(cls, carrier: Carrier, truncation: int, terms: dict) -> GradedSeries:
        s = object.__new__(cls)
        s.carrier = carrier
        s.truncation = truncation
        s._terms = {k: v for k, v in terms.items() if v}
        return s

    @classmethod
    def unit(cls, carrier: Carrier, truncation: int) -> GradedSeries:
        return cls._raw(carrier, truncation, {carrier.unit: ONE})

    @classmethod
    def monomial(cls, carrier: Carrier, key, truncation: int, coeff=1) -> GradedSeries:
        return cls(carrier, truncation, {key: coeff})

    # access
    def __getitem__(self, key) -> RingValue:
        return self._terms.get(key, 0)

    def coeff(self, key) -> RingValue:
        return self[key]

    def items(self) -> list[tuple]:
        return sorted(self._terms.items(), key=lambda kv: self.carrier.sort_key(kv[0]))

    def keys(self) -> list:
        return [k for k, _ in self.items()]

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self.keys())

    def truncate(self, n: int) -> GradedSeries:
        if n > self.truncation:
            raise ValueError("cannot raise the truncation of a series")
        g = self.carrier.grading
        return GradedSeries._raw(self.carrier, n, {k: v for k, v in self._terms.items() if g(k) <= n})

    @property
    def is_invertible_form(self) -> bool:
        return self.carrier.is_monoid and self[self.carrier.unit] == 1

    @property
    def is_diffeo_form(self) -> bool:
        return not self.carrier.is_monoid and self[self.carrier.unit] == 1

    # linear structure
    def _check_same(self, other: GradedSeries):
        if not isinstance(other, GradedSeries):
            raise TypeError("expected a GradedSeries")
        if other.carrier != self.carrier:
            raise ValueError(f"carrier mismatch: {self.carrier.describe()} vs {other.carrier.describe()}")

    def __add__(self, other: GradedSeries) -> GradedSeries:
        self._check_same(other)
        n = min(self.truncation, other.truncation)
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return GradedSeries(self.carrier, n, out)

    def __neg__(self) -> GradedSeries:
        return GradedSeries._raw(self.carrier, self.truncation, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other: GradedSeries) -> GradedSeries:
        return self + (-other)

    def scale(self, c) -> GradedSeries:
        c = as_value(c)
        return GradedSeries._raw(self.carrier, self.truncation, {k: c * v for k, v in self._terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedSeries):
            return NotImplemented
        return (
            self.carrier == other.carrier
            and self.truncation == other.truncation
            and self._terms == other._terms
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"GradedSeries({self.carrier.describe()}, N={self.truncation}, {format_series(self)})"


# monoid laws ---------------------------------------------------------------

def _require_monoid(*series: GradedSeries):
    for s in series:
        if not s.carrier.is_monoid:
            raise ValueError(f"expected a monoid series, got {s.carrier.describe()}")
    for s in series[1:]:
        if s.carrier != series[0].carrier:
            raise ValueError(
                f"carrier mismatch: {series[0].carrier.describe()} vs {s.carrier.describe()}"
            )


def _require_operad(*series: GradedSeries):
    for s in series:
        if s.carrier.is_monoid:
            raise ValueError(f"expected an operad series, got {s.carrier.describe()}")
    for s in series[1:]:
        if s.carrier != series[0].carrier:
            raise ValueError(
                f"carrier mismatch: {series[0].carrier.describe()} vs {s.carrier.describe()}"
            )


def mul_monoid(f: GradedSeries, g: GradedSeries) -> GradedSeries:
    """Product ``sum f_p g_q x^{p.q}``."""
    _require_monoid(f, g)
    car = f.carrier
    n = min(f.truncation, g.truncation)
    ft, gt = f._terms, g._terms
    inst = car.instance
    out = {}
    for d in range(n + 1):
        for u in car.elements(d):
            acc = 0
            for a, b in inst.factorizations(car.p2, u):
                x = ft.get(a)
                if x is not None:
                    y = gt.get(b)
                    if y is not None:
                        acc = acc + x * y
            if acc:
                out[u] = acc
    return GradedSeries._raw(car, n, out)


def inv_monoid(f: GradedSeries) -> GradedSeries:
    """Inverse for the monoid product, solved one grading at a time."""
    _require_monoid(f)
    if not f.is_invertible_form:
        raise ValueError("series is not invertible: the coefficient of the neutral element must be 1")
    car = f.carrier
    inst = car.instance
    e = inst.neutral
    ft = f._terms
    g = {e: ONE}
    for d in range(1, f.truncation + 1):
        for u in car.elements(d):
            acc = 0
            for a, b in inst.factorizations(car.p2, u):
                if a == e:
                    continue
                x = ft.get(a)
                if x is not None:
                    y = g.get(b)
                    if y is not None:
                        acc = acc + x * y
            if acc:
                g[u] = -acc
    return GradedSeries._raw(car, f.truncation, g)


# operad laws ---------------------------------------------------------------

def _substitute_degree(inst: SetOperad, outer: Mapping, inner: Mapping, targets: Iterable) -> dict:
    """Coefficients of ``sum outer_p prod inner_q x^{compose(p, q)}`` on ``targets``."""
    out = {}
    for u in targets:
        acc = 0
        for p, args in inst.decompositions(u):
            c = outer.get(p)
            if c is None:
                continue
            for q in args:
                v = inner.get(q)
                if v is None:
                    break
                c = c * v
            else:
                acc = acc + c
        if acc:
            out[u] = acc
    return out


def compose(phi: GradedSeries, psi: GradedSeries) -> GradedSeries:
    """Operadic composition ``sum phi_p psi_q1 ... psi_qn x^{compose(p, q)}``."""
    _require_operad(phi, psi)
    car = phi.carrier
    n = min(phi.truncation, psi.truncation)
    out = {}
    for d in range(n + 1):
        out.update(_substitute_degree(car.instance, phi._terms, psi._terms, car.elements(d)))
    return GradedSeries._raw(car, n, out)


def comp_inverse(phi: GradedSeries) -> GradedSeries:
    """Compositional inverse, solved one shifted degree at a time."""
    _require_operad(phi)
    if not phi.is_diffeo_form:
        raise ValueError("series is not invertible: the coefficient of the identity must be 1")
    car = phi.carrier
    inst = car.instance
    chi = {inst.identity: ONE}
    for d in range(1, phi.truncation + 1):
        # unknowns of degree d only enter through the identity term, with coefficient 1
        residual = _substitute_degree(inst, phi._terms, chi, car.elements(d))
        for u, c in residual.items():
            chi[u] = -c
    return GradedSeries._raw(car, phi.truncation, chi)


def act(f: GradedSeries, psi: GradedSeries) -> GradedSeries:
    """Right action ``f^psi``: substitute ``psi`` into every vertex of ``f``'s terms."""
    if not f.carrier.is_monoid or psi.carrier.is_monoid:
        raise ValueError(
            f"act expects (monoid series, operad series), got "
            f"({f.carrier.describe()}, {psi.carrier.describe()})"
        )
    if f.carrier.instance is not psi.carrier.instance:
        raise ValueError(
            f"carrier mismatch: {f.carrier.describe()} vs {psi.carrier.describe()}"
        )
    car = f.carrier
    inst = car.instance
    n = min(f.truncation, psi.truncation + 1)
    out = {}
    e = inst.neutral
    if e in f._terms:
        out[e] = f._terms[e]
    for d in range(1, n + 1):
        out.update(_substitute_degree(inst, f._terms, psi._terms, inst.enumerate(d)))
    return GradedSeries._raw(car, n, out)


def tree_power(psi: GradedSeries, t: T.Tree) -> GradedSeries:
    """``mu_t(psi, ..., psi)`` expanded with the bilinear over/under products."""
    _require_operad(psi)
    if psi.carrier.instance is not DUP:
        raise ValueError("tree powers are defined for tree series only")
    if t.is_leaf:
        raise ValueError("the leaf has no tree power")
    max_order = psi.truncation + 1
    terms = _tree_power(psi._terms, t, max_order)
    return GradedSeries._raw(psi.carrier, psi.truncation, terms)


def _bilinear(a: Mapping, b: Mapping, op: Callable, max_order: int) -> dict:
    out: dict = {}
    for x, cx in a.items():
        room = max_order - x.order
        for y, cy in b.items():
            if y.order <= room:
                k = op(x, y)
                out[k] = out.get(k, 0) + cx * cy
    return {k: v for k, v in out.items() if v}


def _tree_power(psi: Mapping, t: T.Tree, max_order: int) -> dict:
    x = dict(psi)
    if not t.left.is_leaf:
        x = _bilinear(_tree_power(psi, t.left, max_order), x, T.over, max_order)
    if not t.right.is_leaf:
        x = _bilinear(x, _tree_power(psi, t.right, max_order), T.under, max_order)
    return {k: v for k, v in x.items() if k.order <= max_order}


def compose_by_powers(phi: GradedSeries, psi: GradedSeries) -> GradedSeries:
    """``sum_t phi_t psi^t`` over tree series; an independent route to :func:`compose`."""
    _require_operad(phi, psi)
    n = min(phi.truncation, psi.truncation)
    out: dict = {}
    for t, c in phi._terms.items():
        if t.order - 1 > n:
            continue
        for k, v in _tree_power(psi._terms, t, n + 1).items():
            out[k] = out.get(k, 0) + c * v
    return GradedSeries._raw(phi.carrier, n, out)


# semidirect product --------------------------------------------------------

@dataclass(frozen=True)
class SemidirectElement:
    """Pair ``(phi, f)`` of a diffeomorphism and an invertible series on one instance."""

    phi: GradedSeries
    f: GradedSeries

    def __post_init__(self):
        if self.phi.carrier.is_monoid or not self.f.carrier.is_monoid:
            raise ValueError("expected (operad series, monoid series)")
        if self.phi.carrier.instance is not self.f.carrier.instance:
            raise ValueError(
                f"carrier mismatch: {self.phi.carrier.describe()} vs {self.f.carrier.describe()}"
            )
        if self.phi.truncation != self.f.truncation:
            raise ValueError("components must share the truncation")
        if not self.phi.is_diffeo_form or not self.f.is_invertible_form:
            raise ValueError("components must be a diffeomorphism and an invertible series")


def semidirect_mul(a: SemidirectElement, b: SemidirectElement) -> SemidirectElement:
    """``(phi, f) (psi, g) = (phi o psi, f^psi . g)``."""
    if a.f.carrier != b.f.carrier or a.phi.truncation != b.phi.truncation:
        raise ValueError("semidirect factors must share carriers and truncation")
    return SemidirectElement(compose(a.phi, b.phi), mul_monoid(act(a.f, b.phi), b.f))


def semidirect_unit(carrier: Carrier, truncation: int) -> SemidirectElement:
    return SemidirectElement(
        GradedSeries.unit(Carrier.operad(carrier.instance), truncation),
        GradedSeries.unit(carrier, truncation),
    )


def semidirect_inverse(a: SemidirectElement) -> SemidirectElement:
    phi_inv = comp_inverse(a.phi)
    return SemidirectElement(phi_inv, act(inv_monoid(a.f), phi_inv))


# lambda / rho embeddings -----------------------------------------------------

def embed_lambda_rho(f: GradedSeries, side: str, p2=None) -> GradedSeries:
    """``lambda_f = x^id . f`` or ``rho_f = f . x^id`` as an operad series."""
    _require_monoid(f)
    inst = f.carrier.instance
    name = inst.resolve_p2(p2 if p2 is not None else f.carrier.p2)[0]
    ident = inst.identity
    if side == "lambda":
        move = lambda p: inst.monoid_mul(name, ident, p)
    elif side == "rho":
        move = lambda p: inst.monoid_mul(name, p, ident)
    else:
        raise ValueError(f"side must be 'lambda' or 'rho', got {side!r}")
    return GradedSeries._raw(Carrier.operad(inst), f.truncation, {move(p): c for p, c in f._terms.items()})


def extract_lambda_rho(phi: GradedSeries, side: str, p2) -> GradedSeries:
    """Inverse of :func:`embed_lambda_rho`; rejects series outside the image."""
    _require_operad(phi)
    inst = phi.carrier.instance
    name = inst.resolve_p2(p2)[0]
    ident = inst.identity
    out = {}
    for u, c in phi._terms.items():
        hits = [
            (a, b) for a, b in inst.factorizations(name, u)
            if (a == ident if side == "lambda" else b == ident)
        ]
        if side not in ("lambda", "rho"):
            raise ValueError(f"side must be 'lambda' or 'rho', got {side!r}")
        if not hits:
            raise ValueError(f"term {inst.format_element(u)} is outside the {side} image")
        a, b = hits[0]
        out[b if side == "lambda" else a] = c
    return GradedSeries._raw(Carrier.monoid(inst, name), phi.truncation, out)


# the alpha subgroup ----------------------------------------------------------

def alpha_from(f: GradedSeries) -> GradedSeries:
    """``(x^leaf - x^vtx under f)^{-1} over x^vtx``: the alpha-member built from ``f``."""
    if not f.carrier.is_monoid or f.carrier.instance is not DUP:
        raise ValueError("alpha_from expects a tree monoid series")
    if f.truncation < 1:
        raise ValueError("alpha_from needs truncation at least 1")
    over_car = Carrier.monoid(DUP, "over")
    h = {T.LEAF: ONE}
    for t, c in f._terms.items():
        v = T.v_wrap(t)
        if v.order <= f.truncation:
            h[v] = h.get(v, 0) - c
    g = inv_monoid(GradedSeries._raw(over_car, f.truncation, h))
    return embed_lambda_rho(g, "rho", "over")


def alpha_membership(phi: GradedSeries) -> bool:
    """Whether ``phi = rho_g`` with ``g`` multiplicative along over-factorizations."""
    _require_operad(phi)
    if phi.carrier.instance is not DUP or not phi.is_diffeo_form:
        return False
    g = {}
    for u, c in phi._terms.items():
        if not u.right.is_leaf:
            return False
        g[u.left] = c
    for t in T.trees_up_to(phi.truncation, start=2):
        factors = T.over_factorize(t)
        if len(factors) >= 2:
            expected = product(g.get(T.v_wrap(x), 0) for x in factors)
            if g.get(t, 0) != expected:
                return False
    return True


# order projection and comb sections -----------------------------------------

def project_order(s: GradedSeries) -> GradedSeries:
    """Send every key to its arity: a series over the integers."""
    inst = s.carrier.instance
    car = Carrier.monoid(AS) if s.carrier.is_monoid else Carrier.operad(AS)
    out: dict = {}
    for k, c in s._terms.items():
        n = inst.arity(k)
        out[n] = out.get(n, 0) + c
    return GradedSeries._raw(car, s.truncation, out)


def section_comb(s: GradedSeries, side: str, kind: str | None = None) -> GradedSeries:
    """Send ``x^n`` to ``x^{left comb}`` (over) or ``x^{right comb}`` (under)."""
    if s.carrier.instance is not AS:
        raise ValueError(f"section expects a series over 'as', got {s.carrier.describe()}")
    inferred = "inv" if s.carrier.is_monoid else "dif"
    if kind is not None and kind != inferred:
        raise ValueError(f"kind {kind!r} does not match carrier {s.carrier.describe()}")
    if side not in ("over", "under"):
        raise ValueError(f"side must be 'over' or 'under', got {side!r}")
    shape = "left" if side == "over" else "right"
    car = Carrier.monoid(DUP, side) if s.carrier.is_monoid else Carrier.operad(DUP)
    return GradedSeries._raw(car, s.truncation, {T.comb(n, shape): c for n, c in s._terms.items()})


def factor_under_rho(eta: GradedSeries) -> tuple[GradedSeries, GradedSeries]:
    """Split ``eta = section(psi, under) o rho_g`` into ``(psi, g)``.

    At shifted degree ``d`` the only unknowns are ``psi_{d+1}``, which reaches
    the right comb, and ``g_t`` for ``|t| = d``, which reaches ``t / vtx``.
    Any other nonzero residual means ``eta`` is outside the image of the
    factorization map, and a ``ValueError`` is raised.
    """
    _require_operad(eta)
    if eta.carrier.instance is not DUP or not eta.is_diffeo_form:
        raise ValueError("factor_under_rho expects a tree diffeomorphism")
    outer = {T.VERTEX: ONE}
    rho = {T.VERTEX: ONE}
    for d in range(1, eta.truncation + 1):
        targets = T.enumerate_trees(d + 1)
        current = _substitute_degree(DUP, outer, rho, targets)
        for u in targets:
            r = eta[u] - current.get(u, 0)
            if not r:
                continue
            if u.right.is_leaf:
                rho[u] = r
            elif u == T.comb(d + 1, "right"):
                outer[u] = r
            else:
                raise ValueError(
                    f"series is not of the form section(psi) o rho_g: residual at {u.code}"
                )
    psi = GradedSeries._raw(Carrier.operad(AS), eta.truncation, {t.order: c for t, c in outer.items()})
    g = GradedSeries._raw(Carrier.monoid(DUP, "over"), eta.truncation, {u.left: c for u, c in rho.items()})
    return psi, g


# text and JSON ---------------------------------------------------------------

def _format_key(car: Carrier, key) -> str:
    return str(car.instance.format_element(key))


def format_series(s: GradedSeries) -> str:
    """Canonical text such as ``x^{100} + (a + c)*x^{11000} - 2*x^{10100}``."""
    parts = []
    for i, (k, c) in enumerate(s.items()):
        mono = f"x^{{{_format_key(s.carrier, k)}}}"
        body = format_value(c)
        neg = body.startswith("-") and (not isinstance(c, Poly) or len(c.terms) == 1)
        if neg:
            body = body[1:]
        if body == "1":
            term = mono
        elif isinstance(c, Poly) and len(c.terms) > 1:
            term = f"({body})*{mono}"
        else:
            term = f"{body}*{mono}"
        if i == 0:
            parts.append(f"-{term}" if neg else term)
        else:
            parts.append(f" - {term}" if neg else f" + {term}")
    return "".join(parts) if parts else "0"


_TERM = re.compile(
    r"^(?P<coeff>.*?)(?:^|\*|\s)\s*x(?:\^(?:\{(?P<brace>[^}]*)\}|(?P<bare>[0-9A-Za-z,]+)))?\s*$",
    re.S,
)


def _split_terms(text: str) -> list[tuple[int, int, str]]:
    """Split at top-level ``+``/``-`` signs; returns (start, sign, chunk)."""
    out = []
    depth = 0
    start = 0
    sign = 1
    i = 0
    seen = False
    while i < len(text):
        ch = text[i]
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced {ch!r}", text, i)
        elif ch in "+-" and depth == 0:
            prev = text[start:i].strip()
            if prev or seen:
                if not prev:
                    raise ParseError("empty term", text, i)
                out.append((start, sign, text[start:i]))
            sign = -1 if ch == "-" else 1
            start = i + 1
            seen = True
        i += 1
    if depth:
        raise ParseError("unbalanced brackets", text, len(text))
    chunk = text[start:]
    if not chunk.strip():
        raise ParseError("empty term", text, len(text))
    out.append((start, sign, chunk))
    return out


def parse_series(text: str, carrier: Carrier, truncation: int | None = None) -> GradedSeries:
    """Parse the canonical text form back into a series.

    A term is ``[coeff[*]]x^{key}``.  A bare ``x`` means ``x^{1}`` for the
    integer instance; a bare coefficient multiplies the unit element.
    When ``truncation`` is omitted the largest grading present is used.
    """
    inst = carrier.instance
    terms: dict = {}
    for start, sign, chunk in _split_terms(text):
        m = _TERM.match(chunk)
        if m is not None:
            coeff_text = m.group("coeff").strip()
            raw_key = m.group("brace") if m.group("brace") is not None else m.group("bare")
            try:
                if raw_key is None:
                    if inst is not AS:
                        raise ValueError("bare x is only meaningful over 'as'")
                    key = 1
                else:
                    key = inst.parse_element(raw_key.strip())
            except ValueError as exc:
                msg = str(exc).split(" (line")[0]
                raise ParseError(msg, text, start + chunk.index("x", len(m.group("coeff")))) from None
        else:
            coeff_text = chunk
            key = carrier.unit
        try:
            c = parse_value(coeff_text) if coeff_text.strip() else ONE
        except ParseError as exc:
            raise ParseError(str(exc).split(" (line")[0], text, start + exc.position) from None
        if not carrier.accepts(key):
            raise ParseError(f"{key!r} is not an element of {carrier.describe()}", text, start)
        terms[key] = terms.get(key, 0) + sign * c
    if truncation is None:
        truncation = max((carrier.grading(k) for k in terms), default=0)
    return GradedSeries(carrier, truncation, terms)


def series_to_json(s: GradedSeries) -> dict:
    return {
        "carrier": s.carrier.kind,
        "instance": s.carrier.instance.id,
        "p2": s.carrier.p2 if s.carrier.is_monoid and s.carrier.instance is DUP else None,
        "truncation": s.truncation,
        "terms": [
            {"key": s.carrier.instance.format_element(k), "coeff": value_to_json(c)}
            for k, c in s.items()
        ],
    }


def series_from_json(doc) -> GradedSeries:
    if isinstance(doc, str):
        doc = json.loads(doc)
    try:
        inst = get_instance(doc["instance"])
        kind = doc["carrier"]
        carrier = Carrier(kind, inst, doc.get("p2") if kind == "monoid" else None)
        terms: dict = {}
        for rec in doc["terms"]:
            key = inst.parse_element(rec["key"])
            terms[key] = terms.get(key, 0) + value_from_json(rec["coeff"])
        return GradedSeries(carrier, int(doc["truncation"]), terms)
    except KeyError as exc:
        raise ValueError(f"series document is missing field {exc.args[0]!r}") from None
