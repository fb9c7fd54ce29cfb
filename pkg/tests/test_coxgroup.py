import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coxkit import corpus
from coxkit.coxgroup import (build_system, inv, length, mult, normalize,
                             order_of_product, parse_group_file,
                             serialize_group)
from coxkit.errors import (InvalidMatrix, MixedSystems, UnknownGenerator)
from coxkit.scalar import INFINITY

from groupmodels import MODELS

INF = math.inf


# -- construction --------------------------------------------------------------


def test_gram_matrix_a2(a2):
    half = a2.field.from_rational(Fraction(1, 2))
    assert a2.form[0][0] == a2.field.one
    assert a2.form[0][1] == -half
    assert a2.form[1][0] == -half


def test_gram_matrix_infinite_dihedral(dinf):
    one = dinf.field.one
    assert dinf.form == ((one, -one), (-one, one))


def test_asymmetric_matrix_rejected():
    with pytest.raises(InvalidMatrix):
        build_system(((1, 3), (4, 1)))


def test_bad_labels_rejected():
    with pytest.raises(InvalidMatrix):
        build_system(((1, 3), (3, 1)), labels=("s", "s"))
    with pytest.raises(InvalidMatrix):
        build_system(((1, 3), (3, 1)), labels=("s",))


def test_representation_involution_checked_on_build(b3):
    for s in range(b3.rank):
        M = b3.generator(s).matrix
        assert b3._matmul(M, M) == b3._identity_matrix


# -- the geometric action ------------------------------------------------------


def test_generator_negates_own_root(a2):
    s = a2.generator(0)
    alpha = a2.basis_vector(0)
    assert s.act(alpha) == tuple(-c for c in alpha)


def test_identity_acts_trivially(b3):
    v = tuple(b3.field.from_rational(q) for q in (Fraction(2, 3), -1, 5))
    assert b3.identity.act(v) == v


def test_infinite_dihedral_product_action(dinf):
    st_elt = dinf.element("s t")
    image = st_elt.act(dinf.basis_vector(0))
    three = dinf.field.from_rational(3)
    two = dinf.field.from_rational(2)
    assert image == (three, two)


# -- normal forms --------------------------------------------------------------


def test_square_cancels(a2):
    assert a2.element("s s").is_identity
    assert a2.element("s s").word == ()


def test_braid_normal_form(a2):
    assert a2.element("t s t").word == a2.element("s t s").word == (0, 1, 0)
    assert str(a2.element("t s t")) == "s t s"


def test_four_letter_word_reduces(a2):
    assert str(a2.element("s t s t")) == "t s"


def test_mult_inv_length(a2):
    s, t = a2.generators
    assert mult(s, s).is_identity
    assert inv(a2.element("s t")) == a2.element("t s")
    assert length(a2.element("s t s")) == 3


def test_unknown_label(a2):
    with pytest.raises(UnknownGenerator):
        a2.element("s q")


def test_mixed_systems_rejected(a2, b2):
    with pytest.raises(MixedSystems):
        a2.generator(0) * b2.generator(0)


def test_descents(a2):
    g = a2.element("s t")
    assert g.left_descents == frozenset({0})
    assert g.right_descents == frozenset({1})
    assert a2.identity.left_descents == frozenset()


# -- product orders ------------------------------------------------------------


def test_order_of_product_examples(a2, b2, dinf):
    assert order_of_product(a2, 0, 1) == 3
    assert order_of_product(b2, 0, 1) == 4
    assert order_of_product(dinf, 0, 1) == INFINITY


# -- group files ---------------------------------------------------------------


def test_group_file_round_trip(tmp_path):
    for name in corpus.NAMES:
        text = corpus.source(name)
        system = parse_group_file(text)
        again = parse_group_file(serialize_group(system))
        assert again.matrix == system.matrix
        assert again.labels == system.labels


def test_group_file_rejects_malformed():
    with pytest.raises(InvalidMatrix):
        parse_group_file("rank 2\nlabels s t\n1 3\n")
    with pytest.raises(InvalidMatrix):
        parse_group_file("")


# -- agreement with concrete models ---------------------------------------------


@pytest.mark.parametrize("name", sorted(set(MODELS) - {"dihedral_inf"}))
def test_lengths_match_model(name):
    system = corpus.load(name)
    model = MODELS[name]()
    dist = model.bfs_lengths()
    elements = system.enumerate_elements(1000)
    assert len(elements) == len(dist)
    seen = {}
    for g in elements:
        image = model.word(g.word)
        assert dist[image] == g.length
        assert image not in seen, "two canonical words map to one model element"
        seen[image] = g


@pytest.mark.parametrize("name", sorted(MODELS))
def test_products_match_model(name):
    system = corpus.load(name)
    model = MODELS[name]()
    import random
    rng = random.Random(5)
    for _ in range(150):
        u = [rng.randrange(system.rank) for _ in range(rng.randint(0, 7))]
        v = [rng.randrange(system.rank) for _ in range(rng.randint(0, 7))]
        engine = system.normalize(u) * system.normalize(v)
        assert model.word(engine.word) == model.word(u + v)


def test_infinite_dihedral_lengths_match_model(dinf):
    model = MODELS["dihedral_inf"]()
    dist = model.bfs_lengths(max_length=9)
    layers, closed = dinf.elements_up_to(9)
    assert not closed
    for layer in layers:
        for g in layer:
            assert dist[model.word(g.word)] == g.length


# -- property tests ------------------------------------------------------------


_SYS = corpus.load("b2")
_words = st.lists(st.integers(0, _SYS.rank - 1), max_size=10)


@given(_words)
def test_normalize_idempotent(w):
    g = _SYS.normalize(w)
    assert _SYS.normalize(g.word) == g
    assert len(g.word) <= len(w)
    assert (len(w) - len(g.word)) % 2 == 0


@given(_words)
def test_inverse_involution(w):
    g = _SYS.normalize(w)
    assert g.inverse().inverse() == g
    assert g.inverse().length == g.length
    assert (g * g.inverse()).is_identity


@given(_words, _words)
def test_length_subadditive(u, v):
    a, b = _SYS.normalize(u), _SYS.normalize(v)
    c = a * b
    assert c.length <= a.length + b.length
    assert (c.length - a.length - b.length) % 2 == 0


@given(_words)
def test_descent_shortens(w):
    g = _SYS.normalize(w)
    for s in g.left_descents:
        assert (_SYS.generator(s) * g).length == g.length - 1
    for s in range(_SYS.rank):
        if s not in g.left_descents:
            assert (_SYS.generator(s) * g).length == g.length + 1
