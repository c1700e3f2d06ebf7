"""Mutation of Hom-configurations and the mutation graph.

Removing two members of a Hom-configuration leaves a rank-2
bi-perpendicular subcategory whose objects we list directly; it carries
either four objects (and exactly two ways to complete back to a
configuration; mutation swaps them) or two (the removed pair itself is the
only completion; mutation fixes the configuration).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .cartan import DynkinQuiver
from .configs import Configuration, configuration, enumerate_hom_configurations, is_hom_free
from .errors import InputError, InvariantViolation
from .orbit import OrbitObject, hom_table


@dataclass(frozen=True)
class MutationGraph:
    quiver: DynkinQuiver
    nodes: tuple[Configuration, ...]
    # Each edge {i, j} carries the removed pairs witnessing it.
    edges: tuple[tuple[tuple[int, int], tuple[tuple[OrbitObject, OrbitObject], ...]], ...]

    def edge_set(self) -> set[tuple[int, int]]:
        return {pair for pair, _ in self.edges}


def _validate_pair(t: Configuration, pair) -> tuple[OrbitObject, OrbitObject]:
    x, y = tuple(pair)
    if x == y or x not in t.members or y not in t.members:
        raise InputError("the pair must consist of two distinct members of the configuration")
    return tuple(sorted((x, y)))


def biperp_objects(q: DynkinQuiver, t: Configuration, pair) -> tuple[OrbitObject, ...]:
    """Objects orthogonal (both ways) to everything in t except the pair.

    The result always contains the pair and has four objects (rank-2
    connected case) or two (disconnected case).
    """
    if len(t) != q.rank or not is_hom_free(q, t.members):
        raise InputError("t is not a Hom-configuration")
    x, y = _validate_pair(t, pair)
    table = hom_table(q)
    rest = [table.index(w) for w in t.members if w not in (x, y)]
    found = [
        z
        for zi, z in enumerate(table.objects)
        if all(table.dims[zi][w] == 0 and table.dims[w][zi] == 0 for w in rest)
    ]
    if x not in found or y not in found:
        raise InvariantViolation("bi-perpendicular set lost the removed pair")
    if len(found) not in (2, 4):
        raise InvariantViolation(
            f"bi-perpendicular set has {len(found)} objects; the rank-2 dichotomy allows 2 or 4"
        )
    return tuple(found)


def mutate(q: DynkinQuiver, t: Configuration, pair) -> Configuration:
    """Replace the pair by the only other completion inside its
    bi-perpendicular subcategory, or return t unchanged in the
    disconnected case."""
    x, y = _validate_pair(t, pair)
    candidates = biperp_objects(q, t, pair)
    rest = tuple(w for w in t.members if w not in (x, y))
    completions = []
    for u, v in combinations(candidates, 2):
        members = rest + (u, v)
        if is_hom_free(q, members):
            completions.append(tuple(sorted((u, v))))
    expected = 1 if len(candidates) == 2 else 2
    if len(completions) != expected:
        raise InvariantViolation(
            f"{len(completions)} completions inside a {len(candidates)}-object "
            f"bi-perpendicular set; expected {expected}"
        )
    if expected == 1:
        return t
    other = [c for c in completions if c != (x, y)]
    if len(other) != 1:
        raise InvariantViolation("removed pair is not among the completions")
    return configuration(q, rest + other[0])


def mutation_graph(q: DynkinQuiver, threads: int = 1) -> MutationGraph:
    """Nodes are all Hom-configurations; edges are the non-trivial mutations."""
    nodes = enumerate_hom_configurations(q, threads)
    index = {c: i for i, c in enumerate(nodes)}
    witnesses: dict[tuple[int, int], list[tuple[OrbitObject, OrbitObject]]] = {}
    for i, t in enumerate(nodes):
        for pair in combinations(t.members, 2):
            image = mutate(q, t, pair)
            if image == t:
                continue
            j = index[image]
            key = (min(i, j), max(i, j))
            witnesses.setdefault(key, [])
            if pair not in witnesses[key]:
                witnesses[key].append(pair)
    edges = tuple(
        (key, tuple(sorted(witnesses[key]))) for key in sorted(witnesses)
    )
    return MutationGraph(q, nodes, edges)


def is_connected(graph: MutationGraph) -> bool:
    if not graph.nodes:
        return True
    adjacency: dict[int, set[int]] = {i: set() for i in range(len(graph.nodes))}
    for (i, j), _ in graph.edges:
        adjacency[i].add(j)
        adjacency[j].add(i)
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in adjacency[i]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == len(graph.nodes)


def object_label(q: DynkinQuiver, x: OrbitObject) -> str:
    """Canonical display: interval labels like ``12``/``1[1]`` in small type
    A, ``root=(d1,...,dn)[s]`` otherwise."""
    if q.diagram_type == "A" and q.rank <= 9:
        base = "".join(str(i + 1) for i, v in enumerate(x.root) if v)
        return base + ("[1]" if x.shift else "")
    return "root=(" + ",".join(str(v) for v in x.root) + f")[{x.shift}]"


def display_key(x: OrbitObject):
    sup = tuple(i + 1 for i, v in enumerate(x.root) if v)
    return (x.shift, sup, x.root)


def display_sorted(q: DynkinQuiver, conf: Configuration) -> list[OrbitObject]:
    return sorted(conf.members, key=display_key)


def configuration_label(q: DynkinQuiver, conf: Configuration) -> str:
    return "{" + ",".join(object_label(q, x) for x in display_sorted(q, conf)) + "}"


def export_dot(graph: MutationGraph) -> str:
    """Undirected DOT rendering with canonical configuration labels."""
    q = graph.quiver
    lines = ["graph {"]
    for node in graph.nodes:
        lines.append(f'  "{configuration_label(q, node)}";')
    for (i, j), _ in graph.edges:
        a = configuration_label(q, graph.nodes[i])
        b = configuration_label(q, graph.nodes[j])
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_json(graph: MutationGraph) -> dict:
    from .configs import configuration_json

    return {
        "nodes": [configuration_json(c) for c in graph.nodes],
        "edges": [[i, j] for (i, j), _ in graph.edges],
    }
