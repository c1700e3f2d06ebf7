from itertools import combinations

import pytest

from homconf.cartan import parse_quiver
from homconf.configs import configuration, enumerate_hom_configurations, simples_configuration
from homconf.errors import InputError
from homconf.mutation import (
    biperp_objects,
    configuration_label,
    export_dot,
    graph_json,
    is_connected,
    mutate,
    mutation_graph,
    object_label,
)
from homconf.orbit import obj


def rt(rank, *sup):
    return tuple(1 if i + 1 in sup else 0 for i in range(rank))


def test_biperp_of_adjacent_simples():
    q = parse_quiver("A3")
    simples = simples_configuration(q)
    pair = (obj(rt(3, 1), 0), obj(rt(3, 2), 0))
    found = biperp_objects(q, simples, pair)
    assert set(found) == {
        obj(rt(3, 1), 0),
        obj(rt(3, 2), 0),
        obj(rt(3, 1, 2), 0),
        obj(rt(3, 1), 1),
    }


@pytest.mark.parametrize("spec", ["A2", "A3", "A4", "D4"])
def test_biperp_dichotomy(spec):
    q = parse_quiver(spec)
    for t in enumerate_hom_configurations(q):
        for pair in combinations(t.members, 2):
            found = biperp_objects(q, t, pair)
            assert len(found) in (2, 4)
            if len(found) == 2:
                assert set(found) == set(pair)
                assert mutate(q, t, pair) == t


def test_mutate_known_images():
    q = parse_quiver("A3")
    simples = simples_configuration(q)
    image = mutate(q, simples, (obj(rt(3, 1), 0), obj(rt(3, 2), 0)))
    assert image == configuration(q, [obj(rt(3, 3), 0), obj(rt(3, 1, 2), 0), obj(rt(3, 1), 1)])
    image2 = mutate(q, simples, (obj(rt(3, 1), 0), obj(rt(3, 3), 0)))
    assert image2 == configuration(
        q, [obj(rt(3, 2), 0), obj(rt(3, 1, 2, 3), 0), obj(rt(3, 1, 2), 1)]
    )


@pytest.mark.parametrize("spec", ["A2", "A3", "A4", "D4"])
def test_mutation_is_involution(spec):
    q = parse_quiver(spec)
    for t in enumerate_hom_configurations(q):
        for pair in combinations(t.members, 2):
            image = mutate(q, t, pair)
            if image == t:
                continue
            new_pair = tuple(x for x in image.members if x not in t.members)
            assert len(new_pair) == 2
            assert mutate(q, image, new_pair) == t


def test_mutate_rejects_bad_pair():
    q = parse_quiver("A3")
    simples = simples_configuration(q)
    with pytest.raises(InputError):
        mutate(q, simples, (obj(rt(3, 1), 0), obj(rt(3, 1), 0)))
    with pytest.raises(InputError):
        mutate(q, simples, (obj(rt(3, 1), 0), obj(rt(3, 1, 2), 0)))


def test_graph_a3_exact():
    q = parse_quiver("A3")
    graph = mutation_graph(q)
    labels = {configuration_label(q, c) for c in graph.nodes}
    assert labels == {
        "{1,2,3}",
        "{1,23,2[1]}",
        "{123,2,12[1]}",
        "{12,3,1[1]}",
        "{123,1[1],2[1]}",
    }
    edge_labels = {
        frozenset(
            (configuration_label(q, graph.nodes[i]), configuration_label(q, graph.nodes[j]))
        )
        for (i, j), _ in graph.edges
    }
    assert edge_labels == {
        frozenset(("{1,2,3}", "{1,23,2[1]}")),
        frozenset(("{1,2,3}", "{123,2,12[1]}")),
        frozenset(("{1,2,3}", "{12,3,1[1]}")),
        frozenset(("{123,1[1],2[1]}", "{1,23,2[1]}")),
        frozenset(("{123,1[1],2[1]}", "{123,2,12[1]}")),
        frozenset(("{123,1[1],2[1]}", "{12,3,1[1]}")),
    }
    assert is_connected(graph)


def test_graph_a1_a2():
    g1 = mutation_graph(parse_quiver("A1"))
    assert len(g1.nodes) == 1 and not g1.edges and is_connected(g1)
    g2 = mutation_graph(parse_quiver("A2"))
    assert len(g2.nodes) == 2 and len(g2.edges) == 1 and is_connected(g2)


@pytest.mark.parametrize("spec", ["A2", "A3", "A4", "D4"])
def test_graph_is_simple_with_bounded_degree(spec):
    q = parse_quiver(spec)
    graph = mutation_graph(q)
    degrees = [0] * len(graph.nodes)
    for (i, j), _ in graph.edges:
        assert i != j
        degrees[i] += 1
        degrees[j] += 1
    bound = q.rank * (q.rank - 1) // 2
    assert all(d <= bound for d in degrees)


def test_edges_have_witnesses():
    q = parse_quiver("A3")
    graph = mutation_graph(q)
    for (i, j), witnesses in graph.edges:
        assert witnesses
        for pair in witnesses:
            assert set(pair) <= set(graph.nodes[i].members) or set(pair) <= set(
                graph.nodes[j].members
            )


def test_dot_output_stable_and_shaped():
    q1 = parse_quiver("A1")
    dot = export_dot(mutation_graph(q1))
    assert dot == 'graph {\n  "{1}";\n}\n'
    q3 = parse_quiver("A3")
    dot_a = export_dot(mutation_graph(q3))
    dot_b = export_dot(mutation_graph(q3))
    assert dot_a == dot_b
    assert dot_a.count("--") == 6
    assert dot_a.count(";") == 11  # 5 nodes + 6 edges


def test_object_labels():
    q = parse_quiver("A3")
    assert object_label(q, obj((1, 1, 0), 0)) == "12"
    assert object_label(q, obj((1, 0, 0), 1)) == "1[1]"
    d = parse_quiver("D4")
    assert object_label(d, obj((1, 1, 1, 1), 0)) == "root=(1,1,1,1)[0]"


def test_graph_json_schema():
    q = parse_quiver("A2")
    data = graph_json(mutation_graph(q))
    assert set(data) == {"nodes", "edges"}
    assert data["edges"] == [[0, 1]]
    assert data["nodes"][0] == [
        {"root": [0, 1], "shift": 0},
        {"root": [1, 0], "shift": 0},
    ]


@pytest.mark.parametrize("spec", ["A2", "A3", "A4", "D4"])
def test_graph_isomorphism_invariants_under_reflection(spec):
    from homconf.cartan import reflect_quiver, sinks

    q = parse_quiver(spec)
    g = mutation_graph(q)
    i = sinks(q)[0]
    g2 = mutation_graph(reflect_quiver(q, i))
    assert len(g.nodes) == len(g2.nodes)
    assert len(g.edges) == len(g2.edges)

    def degree_sequence(graph):
        degrees = [0] * len(graph.nodes)
        for (a, b), _ in graph.edges:
            degrees[a] += 1
            degrees[b] += 1
        return sorted(degrees)

    assert degree_sequence(g) == degree_sequence(g2)
