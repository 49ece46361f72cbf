"""Verification suites: golden tables, group axioms, Hopf axioms and duality.

Every check returns :class:`CheckResult` records.  Randomized checks draw
from one seeded ``random.Random`` per check, derived from the suite seed and
the check name, so results do not depend on which checks run before them.
"""

from __future__ import annotations

import random
import time
import zlib
from collections import Counter
from dataclasses import dataclass
from math import comb as binomial
from typing import Callable, Iterable

from . import trees as T
from .coeff import Poly
from .hopf import (
    AlgebraKind,
    Tensor,
    coprod_alpha,
    coprod_alpha_recursive,
    fdb_coproduct,
    format_tensor,
    get_coproduct,
    hopf_morphism_data,
    monoid_coproduct_as,
    operad_coproduct_as,
)
from .hopf.axioms import (
    antipode_defects,
    coassociativity_defect,
    cocommutativity_defect,
    comodule_coalgebra_defect,
    counit_defects,
    morphism_defect,
)
from .hopf.structure import character_convolve
from .operads import AS, DUP
from .series import (
    Carrier,
    GradedSeries,
    SemidirectElement,
    act,
    alpha_from,
    alpha_membership,
    comp_inverse,
    compose,
    compose_by_powers,
    embed_lambda_rho,
    extract_lambda_rho,
    factor_under_rho,
    format_series,
    inv_monoid,
    mul_monoid,
    parse_series,
    project_order,
    section_comb,
    semidirect_inverse,
    semidirect_mul,
    semidirect_unit,
)

SUITES = ("trees", "groups", "hopf", "duality")


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {
            "suite": self.suite, "name": self.name, "passed": self.passed,
            "detail": self.detail, "seconds": round(self.seconds, 3),
        }


@dataclass
class Params:
    """Sizes for the randomized and exhaustive checks; ``N`` overrides every size."""

    seed: int = 42
    N: int | None = None
    trials: int | None = None

    def size(self, default: int) -> int:
        return default if self.N is None else self.N

    def count(self, default: int) -> int:
        return default if self.trials is None else self.trials

    def rng(self, name: str) -> random.Random:
        return random.Random(self.seed * 1_000_003 + zlib.crc32(name.encode()))


# named trees of order <= 3 -------------------------------------------------

NAMED = {
    "leaf": T.LEAF, "vtx": T.VERTEX,
    "AB": T.Tree("11000"), "BA": T.Tree("10100"),
    "ABC": T.Tree("1110000"), "BAC": T.Tree("1101000"), "ACA": T.Tree("1100100"),
    "CAB": T.Tree("1011000"), "CBA": T.Tree("1010100"),
}


# random data -----------------------------------------------------------------

def _coef(rng: random.Random) -> int:
    return rng.randint(-3, 3)


def random_monoid_series(rng, carrier: Carrier, n: int) -> GradedSeries:
    terms = {carrier.unit: 1}
    for d in range(1, n + 1):
        for k in carrier.elements(d):
            terms[k] = _coef(rng)
    return GradedSeries(carrier, n, terms)


def random_diffeo(rng, instance, n: int) -> GradedSeries:
    car = Carrier.operad(instance)
    terms = {instance.identity: 1}
    for d in range(1, n + 1):
        for k in car.elements(d):
            terms[k] = _coef(rng)
    return GradedSeries(car, n, terms)


def random_alpha(rng, n: int) -> GradedSeries:
    """An alpha-member built from a random tree series (constant term allowed)."""
    car = Carrier.monoid(DUP, "over")
    terms = {}
    for d in range(0, n):
        for t in T.enumerate_trees(d):
            terms[t] = _coef(rng)
    return alpha_from(GradedSeries(car, n, terms))


# independent oracles ----------------------------------------------------------

def _nested(t: T.Tree):
    """Tree as nested tuples: ``None`` for the leaf, ``(left, right)`` for a vertex."""
    if t.is_leaf:
        return None
    return (_nested(t.left), _nested(t.right))


def _code(x) -> str:
    return "0" if x is None else "1" + _code(x[0]) + _code(x[1])


def graft_over(t, s):
    """Graft ``t`` onto the leftmost leaf of ``s`` (nested tuples)."""
    return t if s is None else (graft_over(t, s[0]), s[1])


def graft_under(t, s):
    """Graft ``s`` onto the rightmost leaf of ``t`` (nested tuples)."""
    return s if t is None else (t[0], graft_under(t[1], s))


def poly_mul(a: list, b: list, n: int) -> list:
    out = [0] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if x:
            for j, y in enumerate(b[: n + 1 - i]):
                out[i + j] += x * y
    return out


def poly_compose(f: list, g: list, n: int) -> list:
    """``f(g(x))`` truncated at degree ``n``; requires ``g[0] == 0``."""
    out = [0] * (n + 1)
    power = [1] + [0] * n
    for k, c in enumerate(f[: n + 1]):
        if c:
            for i in range(n + 1):
                out[i] += c * power[i]
        power = poly_mul(power, g, n)
    return out


def _as_list(s: GradedSeries, n: int) -> list:
    out = [0] * (n + 1)
    for k, c in s.items():
        if k <= n:
            out[k] = c
    return out


def dif_action_formula(phi: list, psi: list, n: int) -> list:
    """Coefficients ``sum_m sum_{k_2+..+k_m=n-1} phi_m psi_{k_2}..psi_{k_m}``, with ``x`` in front."""
    out = [0] * (n + 1)
    out[1] = 1
    for d in range(2, n + 1):
        acc = 0
        for m in range(2, d + 1):
            for ks in T.compositions(d - 1, m - 1):
                term = phi[m]
                for k in ks:
                    term *= psi[k]
                acc += term
        out[d] = acc
    return out


# helpers ---------------------------------------------------------------------

def _timed(suite: str, name: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is reported as a failure with its message
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(suite, name, bool(ok), detail, time.perf_counter() - t0)


def _first_failure(items: Iterable, pred: Callable) -> object | None:
    for x in items:
        if not pred(x):
            return x
    return None


def _describe(x) -> str:
    if isinstance(x, T.Tree):
        return x.code
    if isinstance(x, tuple):
        return "(" + ", ".join(_describe(y) for y in x) + ")"
    return str(x)


def _sweep(items: list, pred: Callable, what: str) -> tuple[bool, str]:
    bad = _first_failure(items, pred)
    if bad is None:
        return True, f"{len(items)} {what}"
    return False, f"fails at {_describe(bad)}"


# trees suite -------------------------------------------------------------------

def check_catalan(p: Params) -> list[CheckResult]:
    def run():
        expected = [binomial(2 * n, n) // (n + 1) for n in range(11)]
        t0 = time.perf_counter()
        got = [len(T.enumerate_trees(n)) for n in range(11)]
        elapsed = time.perf_counter() - t0
        if got != expected:
            return False, f"counts {got} != {expected}"
        return True, f"|Y_n| = {got}, n=10 enumerated in {elapsed:.2f}s"
    return [_timed("trees", "catalan counts n=0..10", run)]


def check_grafting_oracle(p: Params) -> list[CheckResult]:
    n = p.size(6)

    def run():
        pairs = [(a, b) for a in T.trees_up_to(n) for b in T.trees_up_to(n - a.order)]
        def ok(pair):
            a, b = pair
            return (T.over(a, b).code == _code(graft_over(_nested(a), _nested(b)))
                    and T.under(a, b).code == _code(graft_under(_nested(a), _nested(b))))
        return _sweep(pairs, ok, "pairs")
    return [_timed("trees", f"over/under vs nested grafting (total order <= {n})", run)]


def check_decompositions(p: Params) -> list[CheckResult]:
    n = p.size(6)

    def run():
        us = T.trees_up_to(n, start=1)
        return _sweep(us, lambda u: T.substitution_decompositions(u) == T.bruteforce_decompositions(u),
                      "trees")
    return [_timed("trees", f"substitution decompositions vs brute force (order <= {n})", run)]


def check_parse_roundtrip(p: Params) -> list[CheckResult]:
    rng = p.rng("parse")
    max_order = p.size(8)
    n = p.size(5)

    def trees():
        samples = []
        for _ in range(p.count(200)):
            t = rng.choice(T.enumerate_trees(rng.randint(0, min(max_order, 8))))
            samples.append(t)
        return _sweep(samples, lambda t: T.parse_tree(T.format_tree(t)) == t
                      and T.parse_tree(t.code) == t, "trees")

    def series():
        samples = []
        for i in range(p.count(50)):
            m = rng.randint(0, n)
            car = [Carrier.monoid(DUP, "over"), Carrier.operad(DUP), Carrier.operad(AS)][i % 3]
            s = random_monoid_series(rng, car, m) if car.is_monoid else random_diffeo(rng, car.instance, m)
            samples.append(s)
        return _sweep(samples, lambda s: parse_series(format_series(s), s.carrier, s.truncation) == s,
                      "series")

    return [_timed("trees", "tree format/parse round-trip", trees),
            _timed("trees", "series format/parse round-trip", series)]


# golden composition -------------------------------------------------------------

def composition_example() -> GradedSeries:
    a, b, c, d = (Poly.var(v) for v in "abcd")
    car = Carrier.operad(DUP)
    phi = GradedSeries(car, 3, {NAMED["vtx"]: 1, NAMED["AB"]: a, NAMED["BA"]: b})
    psi = GradedSeries(car, 3, {NAMED["vtx"]: 1, NAMED["AB"]: c, NAMED["BA"]: d})
    return compose(phi, psi)


def check_composition_example(p: Params) -> list[CheckResult]:
    def run():
        a, b, c, d = (Poly.var(v) for v in "abcd")
        t0 = time.perf_counter()
        out = composition_example()
        elapsed = time.perf_counter() - t0
        if len(out) != 16:
            return False, f"{len(out)} terms instead of 16"
        low = {
            "vtx": 1, "AB": a + c, "BA": b + d, "ABC": 2 * a * c, "BAC": a * d,
            "ACA": a * d + b * c, "CAB": b * c, "CBA": 2 * b * d,
        }
        for name, want in low.items():
            if out[NAMED[name]] != want:
                return False, f"coefficient of {name} is {out[NAMED[name]]}, expected {want}"
        order4 = [(t, v) for t, v in out.items() if t.order == 4]
        want4 = Counter(str(x) for x in [a * c * c, a * c * d, a * c * d, a * d * d,
                                         b * c * c, b * c * d, b * c * d, b * d * d])
        got4 = Counter(str(v) for _, v in order4)
        if got4 != want4 or len(order4) != 8:
            return False, f"order-4 coefficients {sorted(got4.elements())}"
        if elapsed >= 1.0:
            return False, f"took {elapsed:.2f}s"
        return True, f"16 terms in {elapsed * 1000:.1f}ms"
    return [_timed("groups", "two-parameter tree composition example (N=3)", run)]


# golden coproduct tables ---------------------------------------------------------

def _table_tensor(kinds, rows) -> Tensor:
    terms = {}
    for coef, left, right in rows:
        key = (tuple(NAMED[x] for x in left), tuple(NAMED[x] for x in right))
        terms[key] = terms.get(key, 0) + coef
    return Tensor(kinds, terms)


def _prim(u):
    return [(1, [u], []), (1, [], [u])]


GOLDEN_DIF = {
    "AB": _prim("AB"),
    "BA": _prim("BA"),
    "ABC": _prim("ABC") + [(2, ["AB"], ["AB"])],
    "BAC": _prim("BAC") + [(1, ["AB"], ["BA"])],
    "ACA": _prim("ACA") + [(1, ["AB"], ["BA"]), (1, ["BA"], ["AB"])],
    "CAB": _prim("CAB") + [(1, ["BA"], ["AB"])],
    "CBA": _prim("CBA") + [(2, ["BA"], ["BA"])],
}

GOLDEN_COACT_INV = {"vtx": [(1, ["vtx"], [])]}
GOLDEN_COACT_INV.update({
    u: [(c, l or ["vtx"], r) if (l, r) == ([], [u]) else (c, l, r) for c, l, r in rows]
    for u, rows in GOLDEN_DIF.items()
})

GOLDEN_RHO = {
    "vtx": _prim("vtx"),
    "AB": _prim("AB") + [(2, ["vtx"], ["vtx"])],
    "BA": _prim("BA"),
    "ABC": _prim("ABC") + [(3, ["AB"], ["vtx"]), (2, ["vtx"], ["AB"]), (1, ["vtx"], ["vtx", "vtx"])],
    "BAC": _prim("BAC") + [(1, ["BA"], ["vtx"]), (1, ["vtx"], ["BA"])],
    "ACA": _prim("ACA") + [(1, ["BA"], ["vtx"]), (1, ["vtx"], ["BA"])],
    "CAB": _prim("CAB") + [(1, ["BA"], ["vtx"])],
    "CBA": _prim("CBA"),
}


def check_golden_tables(p: Params) -> list[CheckResult]:
    out = []
    for label, name, table in (("dif coproduct", "dif", GOLDEN_DIF),
                               ("inv coaction", "coact-inv-over", GOLDEN_COACT_INV),
                               ("rho coproduct", "rho", GOLDEN_RHO)):
        def run(name=name, table=table):
            cop = get_coproduct(name)
            for u, rows in table.items():
                got = cop(NAMED[u])
                want = _table_tensor(cop.legs, rows)
                if got != want:
                    return False, f"{u}: got {format_tensor(got)}, expected {format_tensor(want)}"
            return True, f"{len(table)} generators"
        out.append(_timed("hopf", f"golden {label} table", run))
    return out


# groups suite --------------------------------------------------------------------

def _group_axioms(rng, sample: Callable, mul: Callable, inv: Callable, unit, trials: int) -> tuple[bool, str]:
    for i in range(trials):
        f, g, h = sample(rng), sample(rng), sample(rng)
        if mul(mul(f, g), h) != mul(f, mul(g, h)):
            return False, f"associativity fails on triple {i}"
        if mul(unit, f) != f or mul(f, unit) != f:
            return False, f"unit law fails on triple {i}"
        fi = inv(f)
        if mul(f, fi) != unit or mul(fi, f) != unit:
            return False, f"inverse fails on triple {i}"
    return True, f"{trials} triples"


def check_group_axioms(p: Params) -> list[CheckResult]:
    n = p.size(6)
    trials = p.count(50)
    over, under = Carrier.monoid(DUP, "over"), Carrier.monoid(DUP, "under")
    dup_op, as_op = Carrier.operad(DUP), Carrier.operad(AS)
    out = []

    def monoid_group(car, label):
        def run():
            return _group_axioms(p.rng(label), lambda r: random_monoid_series(r, car, n),
                                 mul_monoid, inv_monoid, GradedSeries.unit(car, n), trials)
        out.append(_timed("groups", f"{label} group axioms (N={n})", run))

    monoid_group(over, "over-monoid")
    monoid_group(under, "under-monoid")
    monoid_group(Carrier.monoid(AS), "integer monoid")

    for inst, car, label in ((DUP, dup_op, "tree diffeomorphism"), (AS, as_op, "classic diffeomorphism")):
        def run(inst=inst, car=car, label=label):
            return _group_axioms(p.rng(label), lambda r: random_diffeo(r, inst, n),
                                 compose, comp_inverse, GradedSeries.unit(car, n), trials)
        out.append(_timed("groups", f"{label} group axioms (N={n})", run))

    for side, p2 in (("lambda", "under"), ("rho", "over")):
        label = f"{side} subgroup"

        def run(side=side, p2=p2, label=label):
            car = Carrier.monoid(DUP, p2)
            sample = lambda r: embed_lambda_rho(random_monoid_series(r, car, n), side)
            ok, detail = _group_axioms(p.rng(label), sample, compose, comp_inverse,
                                       GradedSeries.unit(dup_op, n), trials)
            if not ok:
                return ok, detail
            rng = p.rng(label + " closure")
            for i in range(trials):
                f, g = sample(rng), sample(rng)
                extract_lambda_rho(compose(f, g), side, p2)
                extract_lambda_rho(comp_inverse(f), side, p2)
            return True, detail + ", closed under composition and inverse"
        out.append(_timed("groups", f"{label} axioms and closure (N={n})", run))

    def alpha_run():
        rng = p.rng("alpha")
        ok, detail = _group_axioms(rng, lambda r: random_alpha(r, n), compose, comp_inverse,
                                   GradedSeries.unit(dup_op, n), trials)
        if not ok:
            return ok, detail
        for i in range(trials):
            f, g = random_alpha(rng, n), random_alpha(rng, n)
            if not alpha_membership(f):
                return False, f"constructed member {i} fails membership"
            if not alpha_membership(compose(f, g)) or not alpha_membership(comp_inverse(f)):
                return False, f"closure fails on pair {i}"
        return True, detail + ", closed under composition and inverse"
    out.append(_timed("groups", f"alpha subgroup axioms and closure (N={n})", alpha_run))

    for inst, p2 in ((DUP, "over"), (DUP, "under"), (AS, None)):
        car = Carrier.monoid(inst, p2)
        label = f"semidirect product ({car.describe()})"

        def run(inst=inst, car=car, label=label):
            def sample(r):
                return SemidirectElement(random_diffeo(r, inst, n), random_monoid_series(r, car, n))
            return _group_axioms(p.rng(label), sample, semidirect_mul, semidirect_inverse,
                                 semidirect_unit(car, n), trials)
        out.append(_timed("groups", f"{label} axioms (N={n})", run))
    return out


def check_action_axioms(p: Params) -> list[CheckResult]:
    n = p.size(5)
    trials = p.count(20)
    out = []
    for p2 in ("over", "under"):
        car = Carrier.monoid(DUP, p2)

        def run(car=car, p2=p2):
            rng = p.rng(f"action {p2}")
            for i in range(trials):
                f, g = random_monoid_series(rng, car, n), random_monoid_series(rng, car, n)
                phi, psi = random_diffeo(rng, DUP, n), random_diffeo(rng, DUP, n)
                if act(act(f, phi), psi) != act(f, compose(phi, psi)).truncate(n):
                    return False, f"(f^phi)^psi != f^(phi o psi) on sample {i}"
                if act(mul_monoid(f, g), phi) != mul_monoid(act(f, phi), act(g, phi)):
                    return False, f"(f.g)^phi != f^phi . g^phi on sample {i}"
                if act(f, GradedSeries.unit(Carrier.operad(DUP), n)) != f:
                    return False, f"identity does not act trivially on sample {i}"
            return True, f"{trials} samples"
        out.append(_timed("groups", f"action axioms on the {p2}-monoid group (N={n})", run))
    return out


def check_as_oracle(p: Params) -> list[CheckResult]:
    n = p.size(6)
    trials = p.count(30)

    def run():
        rng = p.rng("as oracle")
        mon = Carrier.monoid(AS)
        for i in range(trials):
            f, g = random_monoid_series(rng, mon, n), random_monoid_series(rng, mon, n)
            phi, psi = random_diffeo(rng, AS, n), random_diffeo(rng, AS, n)
            if _as_list(mul_monoid(f, g), n) != poly_mul(_as_list(f, n), _as_list(g, n), n):
                return False, f"product differs from polynomial product on sample {i}"
            if poly_mul(_as_list(inv_monoid(f), n), _as_list(f, n), n) != [1] + [0] * n:
                return False, f"inverse is not the reciprocal series on sample {i}"
            # diffeo grading N reaches x^(N+1)
            got = _as_list(compose(phi, psi), n + 1)
            if got != poly_compose(_as_list(phi, n + 1), _as_list(psi, n + 1), n + 1):
                return False, f"composition differs from substitution on sample {i}"
            got = _as_list(act(f, psi), n)
            if got != poly_compose(_as_list(f, n), _as_list(psi, n), n):
                return False, f"action differs from f(psi(x)) on sample {i}"
            inv = _as_list(comp_inverse(phi), n + 1)
            if poly_compose(_as_list(phi, n + 1), inv, n + 1) != [0, 1] + [0] * n:
                return False, f"compositional inverse fails substitution on sample {i}"
        return True, f"{trials} samples"

    def dif_action():
        rng = p.rng("dif action")
        for i in range(trials):
            phi, psi = random_diffeo(rng, AS, n), random_diffeo(rng, AS, n)
            f = extract_lambda_rho(phi, "lambda", None)
            got = _as_list(embed_lambda_rho(act(f, psi), "lambda"), n + 1)
            want = dif_action_formula(_as_list(phi, n + 1), _as_list(psi, n + 1), n + 1)
            if got != want:
                return False, f"induced self-action differs on sample {i}"
        return True, f"{trials} samples"

    return [_timed("groups", f"integer carrier vs polynomial substitution (order <= {n})", run),
            _timed("groups", f"induced self-action vs explicit formula (N={n})", dif_action)]


def check_power_expansion(p: Params) -> list[CheckResult]:
    n = p.size(4)
    trials = p.count(20)

    def run():
        rng = p.rng("powers")
        for i in range(trials):
            phi, psi = random_diffeo(rng, DUP, n), random_diffeo(rng, DUP, n)
            if compose(phi, psi) != compose_by_powers(phi, psi):
                return False, f"differs on sample {i}"
        return True, f"{trials} samples"
    return [_timed("groups", f"composition vs power expansion (N={n})", run)]


def check_projection_sections(p: Params) -> list[CheckResult]:
    n = p.size(5)
    trials = p.count(20)
    out = []

    def homomorphism():
        rng = p.rng("projection")
        over, under = Carrier.monoid(DUP, "over"), Carrier.monoid(DUP, "under")
        for i in range(trials):
            for car in (over, under):
                f, g = random_monoid_series(rng, car, n), random_monoid_series(rng, car, n)
                if project_order(mul_monoid(f, g)) != mul_monoid(project_order(f), project_order(g)):
                    return False, f"product on sample {i}"
                if project_order(inv_monoid(f)) != inv_monoid(project_order(f)):
                    return False, f"inverse on sample {i}"
            phi, psi = random_diffeo(rng, DUP, n), random_diffeo(rng, DUP, n)
            if project_order(compose(phi, psi)) != compose(project_order(phi), project_order(psi)):
                return False, f"composition on sample {i}"
            if project_order(act(f, psi)) != act(project_order(f), project_order(psi)):
                return False, f"action on sample {i}"
            a = SemidirectElement(phi, f)
            b = SemidirectElement(psi, g)
            ab = semidirect_mul(a, b)
            pa = SemidirectElement(project_order(phi), project_order(f))
            pb = SemidirectElement(project_order(psi), project_order(g))
            pab = semidirect_mul(pa, pb)
            if (project_order(ab.phi), project_order(ab.f)) != (pab.phi, pab.f):
                return False, f"semidirect law on sample {i}"
        return True, f"{trials} samples"

    def sections():
        rng = p.rng("sections")
        mon = Carrier.monoid(AS)
        for i in range(trials):
            for side in ("over", "under"):
                f, g = random_monoid_series(rng, mon, n), random_monoid_series(rng, mon, n)
                sf, sg = section_comb(f, side), section_comb(g, side)
                if mul_monoid(sf, sg) != section_comb(mul_monoid(f, g), side):
                    return False, f"{side} product section on sample {i}"
                if inv_monoid(sf) != section_comb(inv_monoid(f), side):
                    return False, f"{side} inverse section on sample {i}"
                if project_order(sf) != f:
                    return False, f"{side} projection of section on sample {i}"
                phi, psi = random_diffeo(rng, AS, n), random_diffeo(rng, AS, n)
                sphi, spsi = section_comb(phi, side), section_comb(psi, side)
                if compose(sphi, spsi) != section_comb(compose(phi, psi), side):
                    return False, f"{side} composition section on sample {i}"
                if project_order(sphi) != phi:
                    return False, f"{side} projection of diffeo section on sample {i}"
        return True, f"{trials} samples"

    out.append(_timed("groups", f"order projection is a homomorphism (N={n})", homomorphism))
    out.append(_timed("groups", f"comb sections are monomorphisms split by projection (N={n})", sections))
    return out


def _lambda_parts(rng, n):
    car = Carrier.monoid(DUP, "under")
    f, g = random_monoid_series(rng, car, n), random_monoid_series(rng, car, n)
    return f, g, embed_lambda_rho(f, "lambda"), embed_lambda_rho(g, "lambda")


def check_structure(p: Params) -> list[CheckResult]:
    n5 = p.size(5)
    trials = p.count(20)
    out = []

    def closure():
        rng = p.rng("closure")
        over = Carrier.monoid(DUP, "over")
        for i in range(trials):
            f, g, lf, lg = _lambda_parts(rng, n5)
            if compose(lf, lg) != embed_lambda_rho(mul_monoid(g, act(f, lg)), "lambda"):
                return False, f"lambda closure fails on sample {i}"
            f, g = random_monoid_series(rng, over, n5), random_monoid_series(rng, over, n5)
            rf, rg = embed_lambda_rho(f, "rho"), embed_lambda_rho(g, "rho")
            if compose(rf, rg) != embed_lambda_rho(mul_monoid(act(f, rg), g), "rho"):
                return False, f"rho closure fails on sample {i}"
        return True, f"{trials} samples"

    def cocycle():
        rng = p.rng("cocycle")
        for i in range(trials):
            _, _, phi, psi = _lambda_parts(rng, n5)
            c = lambda x: extract_lambda_rho(x, "lambda", "under")
            lhs = mul_monoid(mul_monoid(inv_monoid(c(compose(phi, psi))), c(psi)), act(c(phi), psi))
            if lhs != GradedSeries.unit(lhs.carrier, lhs.truncation):
                return False, f"fails on sample {i}"
        return True, f"[c(phi o psi)]^-1 . c(psi) . c(phi)^psi = unit on {trials} samples"

    def witness():
        n = 3
        car = Carrier.monoid(DUP, "under")
        f = GradedSeries(car, n, {T.LEAF: 1, T.VERTEX: 1})
        g = GradedSeries(car, n, {T.LEAF: 1, T.VERTEX: 1})
        lf, lg = embed_lambda_rho(f, "lambda"), embed_lambda_rho(g, "lambda")
        acted = embed_lambda_rho(act(f, lg), "lambda")
        composed = compose(lf, lg)
        if acted == composed:
            return False, "action and composition agree on the witness"
        return True, f"(lambda_f)^(lambda_g) = {format_series(acted)} differs from {format_series(composed)}"

    def factorization():
        n = p.size(4)
        rng = p.rng("factorization")
        over = Carrier.monoid(DUP, "over")
        for i in range(trials):
            psi = random_diffeo(rng, AS, n)
            g = random_monoid_series(rng, over, n)
            eta = compose(section_comb(psi, "under"), embed_lambda_rho(g, "rho"))
            psi2, g2 = factor_under_rho(eta)
            if (psi2, g2) != (psi, g):
                return False, f"round-trip fails on sample {i}"
        return True, f"{trials} round-trips"

    def outside_image():
        car = Carrier.operad(DUP)
        eta = GradedSeries(car, 3, {NAMED["vtx"]: 1, NAMED["ACA"]: 1})
        try:
            factor_under_rho(eta)
        except ValueError as exc:
            return True, f"x^vtx + x^ACA rejected: {exc}"
        return False, "x^vtx + x^ACA was factored"

    def alpha_multiplicative():
        n = p.size(5)
        rng = p.rng("alpha multiplicativity")
        for i in range(p.count(10)):
            f, g = random_alpha(rng, n), random_alpha(rng, n)
            h = extract_lambda_rho(compose(f, g), "rho", "over")
            for u in T.trees_up_to(n, start=2):
                if u.left.is_leaf:
                    continue
                # u = u_l / V(u_r) splits off the last over-factor
                factors = T.over_factorize(u)
                head = T.over_product(T.v_wrap(x) for x in factors[:-1])
                tail = T.v_wrap(factors[-1])
                if h[u] != h[head] * h[tail]:
                    return False, f"h_{u.code} != h_{head.code} h_{tail.code} on sample {i}"
        return True, f"{p.count(10)} samples"

    out.append(_timed("groups", f"lambda/rho closure constants (N={n5})", closure))
    out.append(_timed("groups", f"1-cocycle identity (N={n5})", cocycle))
    out.append(_timed("groups", "action differs from composition on the lambda subgroup (N=3)", witness))
    out.append(_timed("groups", f"factor-then-recompose round-trip (N={p.size(4)})", factorization))
    out.append(_timed("groups", "factorization image is proper (witness)", outside_image))
    out.append(_timed("groups", f"alpha composite is multiplicative (order <= {p.size(5)})", alpha_multiplicative))
    return out


# hopf suite ------------------------------------------------------------------------

HOPF_COPRODUCTS = ("inv-over", "inv-under", "dif", "rho", "alpha")


def _generators(kind: AlgebraKind, max_degree: int) -> list:
    return [g for d in range(1, max_degree + 1) for g in kind.generators(d)]


def check_hopf_axioms(p: Params) -> list[CheckResult]:
    deg = p.size(5)
    sdeg = p.size(4)
    out = []
    for commutative in (False, True):
        tag = "comm" if commutative else "nc"
        for name in HOPF_COPRODUCTS:
            cop = get_coproduct(name, commutative)

            def coassoc(cop=cop):
                gens = _generators(cop.source, deg)
                return _sweep(gens, lambda g: not coassociativity_defect(cop, cop, g)
                              and not any(counit_defects(cop, g)), "generators")

            def antipode(cop=cop):
                gens = _generators(cop.source, sdeg)
                return _sweep(gens, lambda g: not any(antipode_defects(cop, g)), "generators")

            out.append(_timed("hopf", f"{name} ({tag}) coassociativity and counit (grading <= {deg})", coassoc))
            out.append(_timed("hopf", f"{name} ({tag}) two-sided antipode (grading <= {sdeg})", antipode))
    return out


def check_coactions(p: Params) -> list[CheckResult]:
    n = p.size(4)
    out = []

    def comodule():
        for side in ("over", "under"):
            delta = get_coproduct(f"coact-inv-{side}")
            dif = get_coproduct("dif")
            inv = get_coproduct(f"inv-{side}")
            gens = T.trees_up_to(n, start=1)
            bad = _first_failure(gens, lambda u: not coassociativity_defect(delta, dif, u)
                                 and not any(counit_defects(delta, u))
                                 and not comodule_coalgebra_defect(delta, inv, u))
            if bad is not None:
                return False, f"{side}: fails at {bad.code}"
        return True, f"{len(T.trees_up_to(n, start=1))} generators, over and under"

    def rho_coaction():
        for right in ("dif", "rho"):
            for commutative in (False, True):
                delta = get_coproduct("coact-dif" if right == "dif" else "coact-rho", commutative)
                cop = get_coproduct(right, commutative)
                gens = T.trees_up_to(n, start=1)
                bad = _first_failure(gens, lambda u: not coassociativity_defect(delta, cop, u)
                                     and not any(counit_defects(delta, u)))
                if bad is not None:
                    return False, f"{delta.name} over {right}: fails at {bad.code}"
        return True, "dif coaction over the dif coproduct and rho coaction over the rho coproduct"

    def coincide():
        m = p.size(5)
        dif = get_coproduct("coact-dif")
        inv = get_coproduct("coact-inv-over")
        gens = T.trees_up_to(m, start=1)

        def same(u):
            a, b = dif(u), inv(u)
            return dict(a.items()) == dict(b.items())
        return _sweep(gens, same, "generators")

    out.append(_timed("hopf", f"inv coaction: comodule and comodule-coalgebra axioms (order <= {n})", comodule))
    out.append(_timed("hopf", f"rho-side coaction axioms (order <= {n})", rho_coaction))
    out.append(_timed("hopf", f"dif coaction coincides with inv coaction (order <= {p.size(5)})", coincide))
    return out


def check_morphisms(p: Params) -> list[CheckResult]:
    n = p.size(4)
    out = []

    def embeddings():
        for commutative in (False, True):
            for side in ("over", "under"):
                for which, src, tgt in (("embed_b", "sym", f"inv-{side}"), ("section_b", f"inv-{side}", "sym"),
                                        ("embed_a", "fdb", "dif"), ("section_a", "dif", "fdb")):
                    if which == "embed_a" and commutative:
                        continue
                    phi = hopf_morphism_data(which, side, commutative)
                    s, t = get_coproduct(src, commutative), get_coproduct(tgt, commutative)
                    bad = _first_failure(_generators(phi.source, n),
                                         lambda g: not morphism_defect(phi, s, t, g))
                    if bad is not None:
                        return False, f"{which} ({side}, {'comm' if commutative else 'nc'}) fails at {_describe(bad)}"
        return True, "embeddings and comb sections are coalgebra morphisms"

    def projections():
        for commutative in (False, True):
            P = hopf_morphism_data("project_P", commutative=commutative)
            R = hopf_morphism_data("project_R", commutative=commutative)
            dif, rho, alpha = (get_coproduct(x, commutative) for x in ("dif", "rho", "alpha"))
            for u in T.trees_up_to(n, start=1):
                if P.apply(dif(T.over(u, T.VERTEX))) != rho(u):
                    return False, f"(P (x) P) dif(u/vtx) != rho(u) at {u.code}"
                if R.apply(rho(u)) != alpha.apply(R(u), 0):
                    return False, f"(R (x) R) rho(u) != alpha(R(u)) at {u.code}"
        return True, f"{len(T.trees_up_to(n, start=1))} trees, nc and comm"

    def fdb():
        m = p.size(6)
        for k in range(1, m + 1):
            if fdb_coproduct(k, "comm") != fdb_coproduct(k, "nc").abelianize():
                return False, f"a_{k}"
        return True, f"a_1..a_{m}"

    def as_coproducts():
        m = p.size(6)
        for k in range(1, m + 1):
            if monoid_coproduct_as(k) != fdb_coproduct(k, "sym"):
                return False, f"integer monoid coproduct differs at b_{k}"
            if get_coproduct("fdb")(k) != operad_coproduct_as(k):
                return False, f"integer operad coproduct differs at a_{k}"
        return True, f"n <= {m}"

    def cocommutativity():
        m = p.size(6)
        for k in range(1, m + 1):
            if cocommutativity_defect(get_coproduct("sym"), k):
                return False, f"integer monoid coproduct not cocommutative at b_{k}"
        cop = get_coproduct("inv-over")
        witness = next((u for u in T.trees_up_to(3, start=1) if cocommutativity_defect(cop, u)), None)
        if witness is None:
            return False, "no non-cocommutative tree found up to order 3"
        if any(cocommutativity_defect(cop, u) for u in T.trees_up_to(2, start=1)):
            return False, "unexpected asymmetry below order 3"
        return True, f"integer case cocommutative up to {m}; tree witness {witness.code}"

    def alpha_forms():
        m = p.size(4)
        gens = [T.v_wrap(t) for t in T.trees_up_to(m)]
        for commutative in (False, True):
            bad = _first_failure(gens, lambda g: coprod_alpha(g, commutative)
                                 == coprod_alpha_recursive(g, commutative))
            if bad is not None:
                return False, f"differs at {bad.code}"
        return True, f"{len(gens)} generators, nc and comm"

    out.append(_timed("hopf", f"integer embeddings and comb sections (n <= {n})", embeddings))
    out.append(_timed("hopf", f"projection identities P and R (order <= {n})", projections))
    out.append(_timed("hopf", f"commutative Faa di Bruno = abelianized nc (n <= {p.size(6)})", fdb))
    out.append(_timed("hopf", "integer monoid/operad coproducts match the closed forms", as_coproducts))
    out.append(_timed("hopf", "cocommutativity dichotomy", cocommutativity))
    out.append(_timed("hopf", f"non-recursive vs recursive alpha coproduct (order <= {p.size(4)})", alpha_forms))
    return out


# duality suite -----------------------------------------------------------------------

def _character(s: GradedSeries, wrap: Callable = lambda k: k) -> Callable:
    terms = s.terms
    return lambda g: terms.get(wrap(g), 0)


def check_duality(p: Params) -> list[CheckResult]:
    n = p.size(4)
    trials = p.count(20)
    out = []

    def monoid(side):
        def run():
            rng = p.rng(f"duality {side}")
            car = Carrier.monoid(DUP, side)
            cop = get_coproduct(f"inv-{side}")
            for i in range(trials):
                f, g = random_monoid_series(rng, car, n), random_monoid_series(rng, car, n)
                h = mul_monoid(f, g)
                for u in T.trees_up_to(n, start=1):
                    if h[u] != character_convolve(_character(f), _character(g), u, cop):
                        return False, f"pair {i}, tree {u.code}"
            return True, f"{trials} pairs"
        return run

    def dif():
        rng = p.rng("duality dif")
        cop = get_coproduct("dif")
        for i in range(trials):
            phi, psi = random_diffeo(rng, DUP, n), random_diffeo(rng, DUP, n)
            h = compose(phi, psi)
            for u in T.trees_up_to(n + 1, start=2):
                if h[u] != character_convolve(_character(phi), _character(psi), u, cop):
                    return False, f"pair {i}, tree {u.code}"
        return True, f"{trials} pairs"

    def rho():
        rng = p.rng("duality rho")
        car = Carrier.monoid(DUP, "over")
        cop = get_coproduct("rho")
        for i in range(trials):
            f, g = random_monoid_series(rng, car, n), random_monoid_series(rng, car, n)
            h = extract_lambda_rho(compose(embed_lambda_rho(f, "rho"), embed_lambda_rho(g, "rho")), "rho", "over")
            for u in T.trees_up_to(n, start=1):
                if h[u] != character_convolve(_character(f), _character(g), u, cop):
                    return False, f"pair {i}, tree {u.code}"
        return True, f"{trials} pairs"

    def alpha():
        rng = p.rng("duality alpha")
        cop = get_coproduct("alpha")
        for i in range(trials):
            rf, rg = random_alpha(rng, n), random_alpha(rng, n)
            f, g = (extract_lambda_rho(x, "rho", "over") for x in (rf, rg))
            h = extract_lambda_rho(compose(rf, rg), "rho", "over")
            for t in T.trees_up_to(n - 1):
                v = T.v_wrap(t)
                if h[v] != character_convolve(_character(f), _character(g), v, cop):
                    return False, f"pair {i}, generator {v.code}"
        return True, f"{trials} pairs"

    out.append(_timed("duality", f"over-monoid product vs inv-over convolution (N={n})", monoid("over")))
    out.append(_timed("duality", f"under-monoid product vs inv-under convolution (N={n})", monoid("under")))
    out.append(_timed("duality", f"tree composition vs dif convolution (N={n})", dif))
    out.append(_timed("duality", f"rho subgroup composition vs rho convolution (N={n})", rho))
    out.append(_timed("duality", f"alpha subgroup composition vs alpha convolution (N={n})", alpha))
    return out


# suites ------------------------------------------------------------------------------

SUITE_CHECKS: dict[str, tuple[Callable[[Params], list[CheckResult]], ...]] = {
    "trees": (check_catalan, check_grafting_oracle, check_decompositions, check_parse_roundtrip),
    "groups": (check_composition_example, check_group_axioms, check_action_axioms, check_as_oracle,
               check_power_expansion, check_projection_sections, check_structure),
    "hopf": (check_golden_tables, check_hopf_axioms, check_coactions, check_morphisms),
    "duality": (check_duality,),
}


def run_suite(suite: str = "all", N: int | None = None, seed: int = 42,
              trials: int | None = None) -> list[CheckResult]:
    """Run one suite (or ``all``) and return results in canonical order."""
    if suite != "all" and suite not in SUITE_CHECKS:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)} or all")
    if N is not None and N < 1:
        raise ValueError("N must be at least 1")
    p = Params(seed=seed, N=N, trials=trials)
    names = SUITES if suite == "all" else (suite,)
    results = []
    for name in names:
        for check in SUITE_CHECKS[name]:
            results.extend(check(p))
    return results
