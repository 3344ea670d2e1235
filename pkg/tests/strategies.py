"""Hypothesis strategies shared by the test modules."""

from __future__ import annotations

from functools import lru_cache

from hypothesis import strategies as st

from spherelike import corpus
from spherelike.homcx import hom
from spherelike.perfcx import ChainMap, direct_sum, shift, zero_map


@lru_cache(maxsize=None)
def algebras():
    return {"kron": corpus.kronecker(), "a3": corpus.bound_a3(), "cyc": corpus.nilpotent_cycle()}


@lru_cache(maxsize=None)
def corpora():
    algs = algebras()
    return {
        "kron": list(corpus.kronecker_corpus(algs["kron"]).values()),
        "a3": list(corpus.a3_corpus(algs["a3"]).values()),
        "cyc": list(corpus.cycle_corpus(algs["cyc"]).values()),
    }


@st.composite
def complexes(draw, name=None):
    name = name or draw(st.sampled_from(sorted(corpora())))
    objs = corpora()[name]
    A = draw(st.sampled_from(objs))
    if draw(st.booleans()):
        A = shift(A, draw(st.integers(-2, 2)))
    if draw(st.integers(0, 3)) == 0:
        A = direct_sum(A, draw(st.sampled_from(objs)))
    return A


@st.composite
def pairs(draw):
    name = draw(st.sampled_from(sorted(corpora())))
    return draw(complexes(name)), draw(complexes(name))


def random_chain_map(draw, A, B) -> ChainMap:
    basis = hom(A, B).basis(0)
    f = zero_map(A, B)
    for b in basis:
        c = draw(st.integers(-3, 3))
        if c:
            f = f + b.scale(c)
    return f


@st.composite
def chain_maps(draw):
    A, B = draw(pairs())
    return random_chain_map(draw, A, B)
