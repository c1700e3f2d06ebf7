import pytest

from homconf.cartan import (
    WElement,
    coxeter_element,
    parse_quiver,
    positive_roots,
    reflection_of_root,
)
from homconf.configs import simples_configuration
from homconf.errors import InputError
from homconf.noncrossing import (
    NCElement,
    absolute_length,
    catalan,
    enumerate_nc,
    is_positive,
    nc_element_json,
    phi,
    positive_fuss_catalan,
    psi,
    rho,
)

EXAMPLE_A4 = "A4:4>3,2>3,2>1"


def test_absolute_length_basics():
    q = parse_quiver("A3")
    assert absolute_length(WElement.identity(3)) == 0
    for b in positive_roots(q):
        assert absolute_length(reflection_of_root(q, b)) == 1
    assert absolute_length(coxeter_element(q)) == 3


@pytest.mark.parametrize(
    "spec,count", [("A1", 2), ("A2", 5), ("A3", 14), ("D4", 50), ("A4", 42)]
)
def test_nc_counts(spec, count):
    q = parse_quiver(spec)
    elements = enumerate_nc(q)
    assert len(elements) == count
    assert len(elements) == catalan(q.diagram_type, q.rank)


def test_identity_and_coxeter_present():
    q = parse_quiver("A3")
    matrices = {u.element.rows for u in enumerate_nc(q)}
    assert WElement.identity(3).rows in matrices
    assert coxeter_element(q).rows in matrices


@pytest.mark.parametrize("spec", ["A2", "A3", "D4", EXAMPLE_A4])
def test_nc_words_are_reduced_and_lengths_add(spec):
    q = parse_quiver(spec)
    c = coxeter_element(q)
    for u in enumerate_nc(q):
        assert absolute_length(u.element) == len(u.word)
        inv_part = u.element  # l(u^{-1} c) = rank(c - u)
        diff = [
            [c.rows[i][j] - inv_part.rows[i][j] for j in range(q.rank)]
            for i in range(q.rank)
        ]
        from homconf.linalg import int_rank

        assert len(u.word) + int_rank(diff) == q.rank
        product = WElement.identity(q.rank)
        for b in u.word:
            product = product @ reflection_of_root(q, b)
        assert product == u.element


def test_positive_filter_counts():
    q = parse_quiver("A3")
    elements = enumerate_nc(q)
    positives = [u for u in elements if is_positive(u)]
    assert len(positives) == 5
    identity = [u for u in elements if u.length == 0][0]
    assert not is_positive(identity)
    cox = [u for u in elements if u.element == coxeter_element(q)][0]
    assert is_positive(cox)


@pytest.mark.parametrize(
    "diagram_type,rank,value",
    [
        ("A", 1, 1), ("A", 2, 2), ("A", 3, 5), ("A", 4, 14), ("A", 5, 42), ("A", 6, 132),
        ("D", 4, 20), ("D", 5, 77), ("D", 6, 294),
        ("E", 6, 418), ("E", 7, 2431), ("E", 8, 17342),
    ],
)
def test_positive_fuss_catalan_table(diagram_type, rank, value):
    assert positive_fuss_catalan(diagram_type, rank) == value


@pytest.mark.parametrize(
    "diagram_type,rank,value",
    [("A", 1, 2), ("A", 2, 5), ("A", 3, 14), ("D", 4, 50), ("E", 6, 833)],
)
def test_catalan_table(diagram_type, rank, value):
    assert catalan(diagram_type, rank) == value


@pytest.mark.parametrize("spec", ["A1", "A2", "A3", "A4", "D4", EXAMPLE_A4])
def test_psi_of_simples_is_coxeter(spec):
    q = parse_quiver(spec)
    simples = [x.root for x in simples_configuration(q).members]
    assert psi(q, simples).element == coxeter_element(q)


def test_psi_single_sincere_root():
    q = parse_quiver("A3")
    u = psi(q, [(1, 1, 1)])
    assert u.word == ((1, 1, 1),)
    assert u.length == 1 and is_positive(u)


def test_psi_a4_pair_is_three_cycle():
    from homconf.typea import perm_of_welement

    q = parse_quiver("A4")
    u = psi(q, [(1, 1, 0, 0), (0, 0, 1, 1)])
    assert perm_of_welement(u.element) == (3, 2, 5, 4, 1)  # the 3-cycle (1 3 5)


def test_phi_inverts_psi():
    q = parse_quiver("A3")
    simples = [x.root for x in simples_configuration(q).members]
    c_elem = psi(q, simples)
    assert phi(q, c_elem) == tuple(sorted(simples))
    u = psi(q, [(1, 1, 1)])
    assert phi(q, u) == ((1, 1, 1),)


def test_phi_rejects_non_positive():
    q = parse_quiver("A3")
    identity = NCElement(WElement.identity(3), ())
    with pytest.raises(InputError):
        phi(q, identity)


def test_phi_rejects_non_noncrossing():
    q = parse_quiver("A3")
    # (1 3)(2 4) corresponds to the crossing partition {13|24}.
    w = reflection_of_root(q, (1, 1, 0)) @ reflection_of_root(q, (0, 1, 1))
    fake = NCElement(w, ((1, 1, 0), (0, 1, 1)))
    with pytest.raises(InputError):
        phi(q, fake)


def test_rho_examples():
    q = parse_quiver("A3")
    simples = [x.root for x in simples_configuration(q).members]
    assert rho(q, psi(q, simples)) == simples_configuration(q)
    conf = rho(q, psi(q, [(1, 1, 1)]))
    assert {(x.root, x.shift) for x in conf.members} == {
        ((1, 1, 1), 0),
        ((1, 0, 0), 1),
        ((0, 1, 0), 1),
    }


@pytest.mark.parametrize("spec", ["A2", "A3", "A4", "D4"])
def test_rho_injective_on_positives(spec):
    q = parse_quiver(spec)
    images = set()
    for u in enumerate_nc(q):
        if not is_positive(u):
            continue
        images.add(rho(q, u).members)
    assert len(images) == positive_fuss_catalan(q.diagram_type, q.rank)


def test_nc_element_json_schema():
    q = parse_quiver("A2")
    u = psi(q, [(1, 1)])
    data = nc_element_json(u)
    assert set(data) == {"matrix", "word", "length", "positive"}
    assert data["word"] == [[1, 1]] and data["length"] == 1 and data["positive"] is True


@pytest.mark.parametrize("spec", ["A2", "A3", "D4"])
def test_word_support_iff_positive(spec):
    q = parse_quiver(spec)
    vertices = set(range(1, q.rank + 1))
    from homconf.cartan import support

    for u in enumerate_nc(q):
        union = set()
        for b in u.word:
            union.update(support(b))
        assert (union == vertices) == is_positive(u)
