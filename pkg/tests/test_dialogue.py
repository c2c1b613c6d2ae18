import threading

import pytest
from hypothesis import given, strategies as st

from systemt.dialogue import (
    Leaf, Node, at_dialogue, deval, dialogue_of, ke_dialogue, path_of, render, to_json,
)
from systemt.evaluator import FuelExhausted, Functional, eval_nat_traced
from systemt.oracles import Oracle, const, identity, prepend, random_oracles
from systemt.syntax import parse_term

from trees import random_dialogue, random_family, window

SUCC_ORACLE = Oracle(lambda i: i + 1, "succ")


def Y(src):
    return parse_term(src)


def test_constant_is_a_leaf():
    assert dialogue_of(Y(r"\a:Nat->Nat. 0")) == Leaf(0)


def test_single_query_tree():
    t = dialogue_of(Y(r"\a:Nat->Nat. a 7"))
    assert window(t) == window(Node(7, Leaf))


def test_nested_query_tree():
    t = dialogue_of(Y(r"\a:Nat->Nat. a (a 2)"))
    assert window(t) == window(Node(2, lambda i: Node(i, Leaf)))


@pytest.mark.parametrize("tree, oracle, value", [
    (Leaf(5), identity(), 5),
    (Node(2, lambda i: Node(i, Leaf)), SUCC_ORACLE, 4),
    (Node(0, Leaf), const(0), 0),
])
def test_deval_examples(tree, oracle, value):
    assert deval(tree, oracle) == value


def test_deval_fuel_on_ill_founded_tree():
    def loop(_):
        return Node(0, loop)
    with pytest.raises(FuelExhausted):
        deval(Node(0, loop), const(0), fuel=100)


def test_ke_examples():
    f = random_family(random_dialogue, 5)
    assert window(ke_dialogue(f, Leaf(3))) == window(f(3))
    t = ke_dialogue(lambda n: Leaf(n + 1), Node(0, Leaf))
    for alpha in random_oracles(20, 1, 8):
        assert deval(t, alpha) == alpha(0) + 1
    for seed in range(20):
        u = random_dialogue(seed)
        for alpha in random_oracles(5, seed, 6):
            assert deval(ke_dialogue(Leaf, u), alpha) == deval(u, alpha)


def test_path_examples():
    assert path_of(Leaf(9), identity()) == []
    assert path_of(Node(7, Leaf), identity()) == [(7, 7)]
    assert path_of(Node(2, lambda i: Node(i, Leaf)), const(0)) == [(2, 0), (0, 0)]


def test_model_agreement_and_path_consistency(corpus):
    for e in corpus:
        t = dialogue_of(e.term)
        f = Functional(e.term)
        for alpha in random_oracles(100, 2, 8):
            value, trace = f.traced(alpha)
            assert deval(t, alpha) == value, e.name
            # The path alone determines the value, and so does the trace.
            table = dict(path_of(t, alpha))
            assert f(Oracle(lambda i: table.get(i, 99), "path")) == value
            assert deval(t, Oracle(lambda i: dict(trace.queries).get(i, 99), "trace")) == value


@given(st.integers(0, 10_000), st.integers(0, 50), st.integers(0, 9))
def test_axiom_laws(seed, n, k):
    alpha = random_oracles(1, seed, 8)[0]
    assert deval(Leaf(n), alpha) == n
    assert deval(at_dialogue(k), alpha) == alpha(k)
    f = random_family(random_dialogue, seed + 1)
    u = random_dialogue(seed)
    assert deval(f(deval(u, alpha)), alpha) == deval(ke_dialogue(f, u), alpha)


def test_memoised_tree_agrees_and_is_thread_safe(corpus):
    e = next(x for x in corpus if x.name == "nested")
    plain, memo = dialogue_of(e.term), dialogue_of(e.term, memo=True)
    oracles = random_oracles(50, 4, 8)
    expected = [deval(plain, a) for a in oracles]
    out = []

    def work():
        out.append([deval(memo, a) for a in oracles])

    threads = [threading.Thread(target=work) for _ in range(4)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    assert all(r == expected for r in out)


def test_json_window():
    j = to_json(Node(2, lambda i: Node(i, Leaf)), width=2, depth=1)
    assert j == {"label": 2, "branches": {
        "0": {"label": 0, "branches": {"...": "truncated"}},
        "1": {"label": 1, "branches": {"...": "truncated"}},
        "...": "truncated"}}
    assert to_json(Leaf(3)) == {"leaf": 3}
    assert "query 2" in render(Node(2, Leaf), width=1, depth=1)


def test_traced_query_matches_path_on_simple_tree():
    Yt = Y(r"\a:Nat->Nat. a 7")
    _, trace = eval_nat_traced(Yt, identity())
    assert path_of(dialogue_of(Yt), identity()) == trace.queries


def test_prepend_oracle():
    alpha = prepend((4, 5), identity())
    assert alpha.prefix(5) == (4, 5, 0, 1, 2)
