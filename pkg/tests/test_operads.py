import random

import pytest

from treeseries import trees as T
from treeseries.operads import AS, DIAS, DUP, get_instance, monoid_mul, operad_compose

INSTANCES = [AS, DIAS, DUP]


def test_as_composition():
    assert operad_compose("as", 3, [2, 1, 2]) == 5
    for q in range(1, 6):
        assert operad_compose("as", 1, [q]) == q


def test_dias_composition_uses_offset():
    assert operad_compose("dias", (2, 2), [(2, 1), (3, 2)]) == (5, 4)
    assert operad_compose("dias", (2, 1), [(2, 1), (3, 2)]) == (5, 1)


def test_arity_mismatch_message():
    with pytest.raises(ValueError, match="expects 3 arguments, got 2"):
        operad_compose("as", 3, [1, 1])
    with pytest.raises(ValueError, match="expects 2 arguments, got 1"):
        DUP.compose(T.Tree("11000"), [T.VERTEX])


def test_unknown_instance():
    with pytest.raises(ValueError, match="unknown operad instance"):
        get_instance("foo")


def test_monoid_examples():
    assert monoid_mul("dup", "over", T.VERTEX, T.VERTEX) == T.Tree("11000")
    assert monoid_mul("dup", "under", T.VERTEX, T.VERTEX) == T.Tree("10100")
    assert monoid_mul("as", 2, 3, 4) == 7
    for inst in INSTANCES:
        for name in inst.associative_elements:
            for q in inst.enumerate(3):
                assert inst.monoid_mul(name, inst.neutral, q) == q == inst.monoid_mul(name, q, inst.neutral)


def test_monoid_rejects_non_associative_element():
    with pytest.raises(ValueError, match="not a declared associative element"):
        monoid_mul("as", 3, 1, 1)
    with pytest.raises(ValueError):
        monoid_mul("dup", T.Tree("1110000"), T.VERTEX, T.VERTEX)


def test_monoid_grading_is_additive():
    for inst in INSTANCES:
        for name in inst.associative_elements:
            for i in range(4):
                for j in range(4):
                    for a in inst.monoid_elements(i):
                        for b in inst.monoid_elements(j):
                            assert inst.arity(inst.monoid_mul(name, a, b)) == i + j


def test_declared_elements_are_associative():
    for inst in INSTANCES:
        for p2 in inst.associative_elements.values():
            assert inst.compose(p2, [p2, inst.identity]) == inst.compose(p2, [inst.identity, p2])


def test_duplicial_relations_under_compose():
    ab, ba, v = T.Tree("11000"), T.Tree("10100"), T.VERTEX
    assert DUP.compose(ab, [ab, v]) == DUP.compose(ab, [v, ab])
    assert DUP.compose(ba, [ba, v]) == DUP.compose(ba, [v, ba])
    assert DUP.compose(ba, [ab, v]) == DUP.compose(ab, [v, ba])


def _random_element(inst, rng, max_arity):
    return rng.choice(inst.enumerate(rng.randint(1, max_arity)))


@pytest.mark.parametrize("inst", INSTANCES, ids=lambda i: i.id)
def test_operadic_associativity(inst):
    rng = random.Random(11)
    for _ in range(150):
        p = _random_element(inst, rng, 2)
        qs = [_random_element(inst, rng, 2) for _ in range(inst.arity(p))]
        blocks = [[_random_element(inst, rng, 1) for _ in range(inst.arity(q))] for q in qs]
        flat = [u for block in blocks for u in block]
        lhs = inst.compose(inst.compose(p, qs), flat)
        rhs = inst.compose(p, [inst.compose(q, block) for q, block in zip(qs, blocks)])
        assert lhs == rhs
        assert inst.arity(lhs) == sum(inst.arity(u) for u in flat)


@pytest.mark.parametrize("inst", INSTANCES, ids=lambda i: i.id)
def test_identity_laws(inst):
    for n in range(1, 7):
        for p in inst.enumerate(n):
            assert inst.compose(inst.identity, [p]) == p
            assert inst.compose(p, [inst.identity] * n) == p


@pytest.mark.parametrize("inst", INSTANCES, ids=lambda i: i.id)
def test_decompositions_recompose(inst):
    for n in range(1, 5):
        for u in inst.enumerate(n):
            decs = inst.decompositions(u)
            assert decs
            for p, args in decs:
                assert inst.compose(p, list(args)) == u
            assert set(decs) == set(inst.enumerated_decompositions(u))


def test_factorizations():
    ab = T.Tree("11000")
    assert set(DUP.factorizations("over", ab)) == {(T.LEAF, ab), (T.VERTEX, T.VERTEX), (ab, T.LEAF)}
    assert AS.factorizations(None, 2) == ((0, 2), (1, 1), (2, 0))
