"""Random term generators shared by the fuzz and property tests.

The generators take a ``pick(options)`` callable so the same code serves a
seeded ``random.Random`` (``pick = rng.choice``) and hypothesis
(``pick = lambda xs: draw(st.sampled_from(xs))``).
"""
import random

from hypothesis import strategies as st

from systemt.syntax import (
    NAT, SEQ, App, Arrow, EmptySeq, Get, Lam, Len, Omega, Rec, Snoc, Succ, Var, Zero, arrow,
)

SOURCE_TYPES = [NAT, Arrow(NAT, NAT), arrow(NAT, NAT, NAT), Arrow(Arrow(NAT, NAT), NAT)]
ALL_TYPES = SOURCE_TYPES + [SEQ, Arrow(SEQ, NAT)]


def min_depth(ty):
    return 1 if not isinstance(ty, Arrow) else 1 + min_depth(ty.cod)


def minimal(ty, ctx):
    if isinstance(ty, Arrow):
        return Lam(ty.dom, minimal(ty.cod, ctx + [ty.dom]))
    return Zero()


def typed_term(pick, ty, ctx, budget, omega=True):
    """A term of type ``ty`` in ``ctx`` whose depth is at most ``budget``."""
    if budget <= min_depth(ty):
        return minimal(ty, ctx)
    leaves = [Var(i) for i, t in enumerate(ctx) if t == ty]
    if ty == NAT:
        leaves.append(Zero())
    if ty == Arrow(NAT, NAT):
        leaves.append(Succ())
        if omega:
            leaves.append(Omega())
    forms = ["leaf"] * (2 if leaves else 0) + ["app", "app"]
    if isinstance(ty, Arrow):
        forms += ["lam", "lam"]
    if ty == NAT:
        forms.append("succ")
    if min_depth(arrow(NAT, ty, ty)) <= budget - 2 and min_depth(ty) <= budget - 3:
        forms.append("rec")
    form = pick(forms)
    if form == "leaf":
        return pick(leaves)
    if form == "lam":
        return Lam(ty.dom, typed_term(pick, ty.cod, ctx + [ty.dom], budget - 1, omega))
    if form == "succ":
        return App(Succ(), typed_term(pick, NAT, ctx, budget - 1, omega))
    if form == "rec":
        u = typed_term(pick, ty, ctx, budget - 3, omega)
        f = typed_term(pick, arrow(NAT, ty, ty), ctx, budget - 2, omega)
        n = typed_term(pick, NAT, ctx, budget - 1, omega)
        return App(App(App(Rec(ty), u), f), n)
    doms = [s for s in SOURCE_TYPES if min_depth(s) < budget - 1 and 1 + min_depth(ty) < budget]
    if not doms:
        return minimal(ty, ctx)
    dom = pick(doms)
    return App(typed_term(pick, Arrow(dom, ty), ctx, budget - 1, omega),
               typed_term(pick, dom, ctx, budget - 1, omega))


def random_typed_term(seed, budget=10, ty=None, omega=True):
    rng = random.Random(seed)
    ty = ty if ty is not None else rng.choice(SOURCE_TYPES)
    return ty, typed_term(rng.choice, ty, [], budget, omega)


@st.composite
def typed_terms(draw, budget=10, ty=None, omega=True):
    pick = lambda xs: draw(st.sampled_from(xs))
    ty = ty if ty is not None else pick(SOURCE_TYPES)
    return ty, typed_term(pick, ty, [], budget, omega)


def scoped_term(pick, scope, budget):
    """A well-scoped but not necessarily well-typed term."""
    consts = [Zero(), Succ(), Omega(), EmptySeq(), Snoc(), Len(), Get()]
    if budget <= 1:
        return pick(consts + [Var(i) for i in range(scope)] + [Rec(pick(ALL_TYPES))])
    form = pick(["leaf", "lam", "app", "app"])
    if form == "leaf":
        return scoped_term(pick, scope, 1)
    if form == "lam":
        return Lam(pick(ALL_TYPES), scoped_term(pick, scope + 1, budget - 1))
    return App(scoped_term(pick, scope, budget - 1), scoped_term(pick, scope, budget - 1))


@st.composite
def scoped_terms(draw, budget=12):
    return scoped_term(lambda xs: draw(st.sampled_from(xs)), 0, budget)
