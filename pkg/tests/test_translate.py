import pytest
from hypothesis import given, settings, strategies as st

from systemt.evaluator import Compiled, FuelExhausted, NatV, evaluate
from systemt.interp import CONTINUOUS, NEIGHBOURHOOD, SeqInSource, interpret
from systemt.nbhd import HostBacked, NbhFn
from systemt.oracles import random_oracles
from systemt.syntax import (
    NAT, SEQ, App, Arrow, Omega, Rec, Zero, arrow, parse_term, parse_type, typecheck,
)
from systemt.translate import (
    at_term, dagger_term, dagger_type, emit_source, eta_term, gen_term, ke_at_type, ke_nat_term,
    macro, neighbourhood_term,
)
from systemt.evaluator import Functional

from termgen import typed_terms

NBH = Arrow(SEQ, NAT)


def seq_literal(xs):
    src = "empty"
    for x in xs:
        src = f"snoc ({src}) {x}"
    return parse_term(src)


@pytest.mark.parametrize("src, expected", [
    ("Nat", "Seq -> Nat"),
    ("Nat -> Nat", "(Seq -> Nat) -> Seq -> Nat"),
    ("(Nat -> Nat) -> Nat", "((Seq -> Nat) -> Seq -> Nat) -> Seq -> Nat"),
])
def test_dagger_type(src, expected):
    assert dagger_type(parse_type(src)) == parse_type(expected)


def test_dagger_type_rejects_seq():
    with pytest.raises(SeqInSource):
        dagger_type(parse_type("Seq -> Nat"))


def test_eta_ignores_sequence():
    for xs in [(), (1, 2), (9,)]:
        assert evaluate(App(App(eta_term(), parse_term("3")), seq_literal(xs))) == NatV(4)


@pytest.mark.parametrize("xs, value", [((5, 7), 0), ((5, 7, 9), 10), ((), 0), ((1, 1, 0, 4), 1)])
def test_at_reads_guarded_entry(xs, value):
    assert evaluate(App(App(at_term(), parse_term("2")), seq_literal(xs))) == NatV(value)


def test_macro_types():
    assert typecheck([], eta_term()) == arrow(NAT, SEQ, NAT)
    assert typecheck([], at_term()) == arrow(NAT, SEQ, NAT)
    assert typecheck([], ke_nat_term()) == arrow(arrow(NAT, SEQ, NAT), NBH, NBH)
    assert typecheck([], gen_term()) == Arrow(NBH, NBH)


@pytest.mark.parametrize("name, x, y, value", [
    ("monus", 7, 3, 4), ("monus", 3, 7, 0), ("plus", 4, 5, 9), ("mult", 4, 5, 20), ("mult", 0, 5, 0),
])
def test_arithmetic_macros(name, x, y, value):
    t = App(App(macro(name), parse_term(str(x))), parse_term(str(y)))
    assert evaluate(t) == NatV(value)


@pytest.mark.parametrize("x, value", [(0, 0), (1, 1), (6, 1)])
def test_sg(x, value):
    assert evaluate(App(macro("sg"), parse_term(str(x)))) == NatV(value)


@pytest.mark.parametrize("src", ["Nat", "Nat -> Nat", "(Nat -> Nat) -> Nat", "Nat -> Nat -> Nat"])
def test_ke_at_type_typing(src):
    ty = parse_type(src)
    assert typecheck([], ke_at_type(ty)) == arrow(Arrow(NAT, dagger_type(ty)), dagger_type(NAT),
                                                  dagger_type(ty))


def test_dagger_zero():
    t = dagger_term(Zero())
    assert t == App(eta_term(), Zero())
    g = NbhFn.from_term(t)
    assert g.query(()) == 1 and g.query((3, 4)) == 1


def test_dagger_omega_is_gen():
    assert dagger_term(Omega()) == gen_term()


def test_dagger_rec_typing():
    t = parse_term(r"Rec[Nat] 0 (\n:Nat.\m:Nat. Succ m)")
    assert typecheck([], dagger_term(t)) == Arrow(NBH, NBH)


def test_dagger_open_term():
    ctx = [NAT, Arrow(NAT, NAT)]
    t = App(parse_term(r"\f:Nat->Nat. f"), Rec(NAT))  # closed but checked in a context
    with pytest.raises(Exception):
        dagger_term(t, [SEQ])
    body = dagger_term(App(Omega(), Zero()), ctx)
    assert typecheck([dagger_type(x) for x in ctx], body) == NBH


def test_constant_neighbourhood_term():
    g = neighbourhood_term(parse_term(r"\a:Nat->Nat. 0"))
    assert g.query(()) == 1 and g.query((4, 4)) == 1


def test_query7_neighbourhood_term():
    g = neighbourhood_term(parse_term(r"\a:Nat->Nat. a 7"))
    for alpha in random_oracles(10, 0, 8):
        for n in range(11):
            a = alpha.prefix(n)
            assert g.query(a) == (a[7] + 1 if n > 7 else 0)


def test_nested_secured_at_three():
    from systemt.oracles import const
    g = neighbourhood_term(parse_term(r"\a:Nat->Nat. a (a 2)"))
    assert g.secured_at(const(0)) == 3


def test_emit_source_round_trip():
    g = neighbourhood_term(parse_term(r"\a:Nat->Nat. 0"))
    back = parse_term(emit_source(g))
    assert typecheck([], back) == NBH
    assert NbhFn.from_term(back).query(()) == 1


def test_host_backed_has_no_source():
    with pytest.raises(HostBacked):
        emit_source(NbhFn.from_host(lambda a: 1))


def test_nbhfn_rejects_wrong_type():
    with pytest.raises(Exception):
        NbhFn.from_term(parse_term(r"\x:Nat. x"))
    with pytest.raises(ValueError):
        NbhFn()


KE_ARGS = [
    (r"\n:Nat. at n", r"\a:Seq. len a"),
    (r"\n:Nat. eta (plus n 3)", r"at 1"),
    (r"\n:Nat. \a:Seq. mult n (len a)", r"\a:Seq. get a 0"),
    (r"\n:Nat. ke (\m:Nat. at (plus m n)) (at n)", r"at 0"),
]


@pytest.mark.parametrize("g_src, gamma_src", KE_ARGS)
def test_ke_term_law(g_src, gamma_src):
    defs = {k: macro(k) for k in ("sg", "monus", "plus", "mult", "eta", "at", "ke")}
    g = parse_term(g_src, defs)
    gamma = parse_term(gamma_src, defs)
    lifted = Compiled(App(App(ke_nat_term(), g), gamma))
    g_c, gamma_c = Compiled(g), Compiled(gamma)
    for alpha in random_oracles(30, 5, 6):
        for n in range(6):
            a = alpha.prefix(n)
            c = gamma_c(a)
            expected = min(c, 1) * g_c(max(c - 1, 0), a)
            assert lifted(a) == expected


def test_inducement_on_corpus(corpus):
    for e in corpus:
        g = neighbourhood_term(e.term)
        f = Functional(e.term)
        for alpha in random_oracles(30, 9, 8):
            n = g.secured_at(alpha)
            for m in range(n, n + 3):
                assert g.query(alpha.prefix(m)) - 1 == f(alpha), e.name


def test_host_neighbourhood_model_matches_emitted_term(corpus):
    for e in corpus:
        g = neighbourhood_term(e.term)
        host = interpret(App(e.term, Omega()), NEIGHBOURHOOD)
        for alpha in random_oracles(10, 3, 5):
            for n in range(8):
                a = alpha.prefix(n)
                assert host(a) == g.query(a), e.name


def test_continuous_model(corpus):
    for e in corpus:
        f = Functional(e.term)
        cont = interpret(App(e.term, Omega()), CONTINUOUS)
        for alpha in random_oracles(20, 4, 8):
            assert cont(alpha) == f(alpha)


@given(typed_terms(10))
def test_dagger_typing_on_generated_terms(pair):
    ty, t = pair
    assert typecheck([], dagger_term(t)) == dagger_type(ty)


@settings(max_examples=60)
@given(typed_terms(7, ty=NAT), st.integers(0, 1000))
def test_generated_nat_terms_are_induced(pair, seed):
    _, t = pair
    alpha = random_oracles(1, seed, 4)[0]
    try:
        expected = evaluate(t, alpha, fuel=5_000).n
        g = NbhFn.from_term(dagger_term(t), fuel=200_000)
        got = g.induced(alpha, fuel=64)
    except FuelExhausted:
        return
    assert got == expected
