"""ADE Dynkin quivers, root systems, Weyl-group matrices and Coxeter data.

Conventions fixed here and used everywhere else:

* Vertices are labeled 1..n.  A_n is the path 1-2-...-n; D_n is the path
  1-...-(n-2) with n-1 and n attached to n-2; E_n uses the Bourbaki
  labeling (chain 1-3-4-...-n with 2 attached to 4).
* Default orientations: A_n linear (n -> n-1 -> ... -> 1); for D and E
  every arrow points toward the lower-numbered endpoint.
* Group elements are n x n integer matrices acting on root coordinates by
  left multiplication on column vectors.  In a product the rightmost
  factor acts first, so the matrix of s_{i_1} ... s_{i_k} is
  M(s_{i_1}) @ ... @ M(s_{i_k}).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InputError, QuiverSpecError
from .linalg import identity_matrix, mat_apply, mat_mul

Root = tuple[int, ...]

_SPEC_RE = re.compile(r"^([ADE])(\d+)(?::(.*))?$")


@dataclass(frozen=True)
class DynkinQuiver:
    """An orientation of an ADE tree with the canonical vertex labeling."""

    diagram_type: str
    rank: int
    arrows: tuple[tuple[int, int], ...]

    def spec_string(self) -> str:
        """Canonical spec string, e.g. ``A4:2>1,2>3,4>3``."""
        arrows = ",".join(f"{s}>{t}" for s, t in sorted(self.arrows))
        return f"{self.diagram_type}{self.rank}:{arrows}"

    def __str__(self) -> str:
        return self.spec_string()


@dataclass(frozen=True)
class CoxeterData:
    h: int
    exponents: tuple[int, ...]


@dataclass(frozen=True)
class WElement:
    """A Weyl-group element as an integer matrix on root coordinates."""

    rows: tuple[tuple[int, ...], ...]

    def __matmul__(self, other: "WElement") -> "WElement":
        return WElement(mat_mul(self.rows, other.rows))

    def apply(self, v: Root) -> Root:
        return mat_apply(self.rows, v)

    @property
    def rank(self) -> int:
        return len(self.rows)

    @staticmethod
    def identity(n: int) -> "WElement":
        return WElement(identity_matrix(n))


def canonical_edges(diagram_type: str, rank: int) -> tuple[tuple[int, int], ...]:
    """Undirected edges {a,b} (a<b) of the ADE tree for (type, rank)."""
    if diagram_type == "A":
        if rank < 1:
            raise QuiverSpecError(f"A{rank}: rank must be at least 1")
        return tuple((i, i + 1) for i in range(1, rank))
    if diagram_type == "D":
        if rank < 4:
            raise QuiverSpecError(f"D{rank}: rank must be at least 4")
        edges = [(i, i + 1) for i in range(1, rank - 2)]
        edges += [(rank - 2, rank - 1), (rank - 2, rank)]
        return tuple(sorted(edges))
    if diagram_type == "E":
        if rank not in (6, 7, 8):
            raise QuiverSpecError(f"E{rank}: rank must be 6, 7 or 8")
        chain = [1, 3, 4, 5, 6, 7, 8][: rank - 1]
        edges = [(a, b) for a, b in zip(chain, chain[1:])]
        edges.append((2, 4))
        return tuple(sorted(edges))
    raise QuiverSpecError(f"unknown diagram type {diagram_type!r}")


def default_arrows(diagram_type: str, rank: int) -> tuple[tuple[int, int], ...]:
    """Documented default orientation: A_n linear, D/E toward lower labels."""
    return tuple(sorted((b, a) for a, b in canonical_edges(diagram_type, rank)))


def build_quiver(
    diagram_type: str,
    rank: int,
    arrows: list[tuple[int, int]] | None = None,
) -> DynkinQuiver:
    """Build a quiver on the canonical ADE tree, validating the arrow set."""
    edges = set(canonical_edges(diagram_type, rank))
    if arrows is None:
        return DynkinQuiver(diagram_type, rank, default_arrows(diagram_type, rank))
    oriented: set[tuple[int, int]] = set()
    covered: set[tuple[int, int]] = set()
    for s, t in arrows:
        edge = (min(s, t), max(s, t))
        if s == t or not (1 <= s <= rank and 1 <= t <= rank):
            raise QuiverSpecError(f"arrow {s}>{t} is not between distinct vertices 1..{rank}")
        if edge not in edges:
            raise QuiverSpecError(
                f"edge {{{edge[0]},{edge[1]}}} is not in the {diagram_type}{rank} tree"
            )
        if edge in covered:
            raise QuiverSpecError(f"edge {{{edge[0]},{edge[1]}}} oriented more than once")
        covered.add(edge)
        oriented.add((s, t))
    if covered != edges:
        missing = sorted(edges - covered)
        raise QuiverSpecError(f"arrow list does not orient every tree edge; missing {missing}")
    return DynkinQuiver(diagram_type, rank, tuple(sorted(oriented)))


def parse_quiver(spec: str) -> DynkinQuiver:
    """Parse a spec string like ``A4`` or ``A4:4>3,2>3,2>1`` (whitespace ignored)."""
    compact = re.sub(r"\s+", "", spec)
    m = _SPEC_RE.match(compact)
    if not m:
        raise QuiverSpecError(f"cannot parse quiver spec {spec!r}")
    diagram_type, rank_s, arrow_part = m.groups()
    rank = int(rank_s)
    if arrow_part is None:
        return build_quiver(diagram_type, rank)
    arrows = []
    for chunk in arrow_part.split(","):
        if not chunk:
            continue
        sm = re.match(r"^(\d+)>(\d+)$", chunk)
        if not sm:
            raise QuiverSpecError(f"bad arrow {chunk!r} in quiver spec {spec!r}")
        arrows.append((int(sm.group(1)), int(sm.group(2))))
    if not arrows:
        raise QuiverSpecError(f"empty arrow list in quiver spec {spec!r}")
    return build_quiver(diagram_type, rank, arrows)


def sinks(q: DynkinQuiver) -> tuple[int, ...]:
    """Vertices with no outgoing arrows."""
    out = {s for s, _ in q.arrows}
    return tuple(v for v in range(1, q.rank + 1) if v not in out)


def sources(q: DynkinQuiver) -> tuple[int, ...]:
    """Vertices with no incoming arrows."""
    inc = {t for _, t in q.arrows}
    return tuple(v for v in range(1, q.rank + 1) if v not in inc)


def reflect_quiver(q: DynkinQuiver, i: int) -> DynkinQuiver:
    """Reverse all arrows incident to the sink or source i."""
    if i not in sinks(q) and i not in sources(q):
        raise InputError(f"vertex {i} is neither a sink nor a source of {q}")
    flipped = tuple(
        sorted((t, s) if i in (s, t) else (s, t) for s, t in q.arrows)
    )
    return DynkinQuiver(q.diagram_type, q.rank, flipped)


@lru_cache(maxsize=None)
def sink_order(q: DynkinQuiver) -> tuple[int, ...]:
    """Enumeration of all vertices, smallest eligible sink first.

    i_1 is a sink of Q and each i_k is a sink of the quiver obtained by
    reflecting at i_1, ..., i_{k-1}.
    """
    order: list[int] = []
    current = q
    remaining = set(range(1, q.rank + 1))
    while remaining:
        eligible = [v for v in sinks(current) if v in remaining]
        v = min(eligible)
        order.append(v)
        remaining.discard(v)
        current = reflect_quiver(current, v)
    return tuple(order)


def neighbors(q: DynkinQuiver, i: int) -> tuple[int, ...]:
    return tuple(sorted({s for s, t in q.arrows if t == i} | {t for s, t in q.arrows if s == i}))


@lru_cache(maxsize=None)
def euler_matrix(q: DynkinQuiver) -> tuple[tuple[int, ...], ...]:
    """Matrix E with <a,b> = a^T E b for the hereditary Euler form of Q."""
    n = q.rank
    e = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for s, t in q.arrows:
        e[s - 1][t - 1] -= 1
    return tuple(tuple(row) for row in e)


def euler_form(q: DynkinQuiver, a: Root, b: Root) -> int:
    """<a,b> = sum_i a_i b_i - sum_{arrows s->t} a_s b_t."""
    total = sum(x * y for x, y in zip(a, b))
    for s, t in q.arrows:
        total -= a[s - 1] * b[t - 1]
    return total


def tits_form(q: DynkinQuiver, a: Root) -> int:
    return euler_form(q, a, a)


@lru_cache(maxsize=None)
def cartan_matrix(diagram_type: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Symmetrized Cartan matrix (2 on the diagonal, -1 on tree edges)."""
    c = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for a, b in canonical_edges(diagram_type, rank):
        c[a - 1][b - 1] = -1
        c[b - 1][a - 1] = -1
    return tuple(tuple(row) for row in c)


_EXPONENTS = {
    "A": lambda n: (n + 1, tuple(range(1, n + 1))),
    "D": lambda n: (2 * n - 2, tuple(sorted(list(range(1, 2 * n - 2, 2)) + [n - 1]))),
    "E": lambda n: {
        6: (12, (1, 4, 5, 7, 8, 11)),
        7: (18, (1, 5, 7, 9, 11, 13, 17)),
        8: (30, (1, 7, 11, 13, 17, 19, 23, 29)),
    }[n],
}


def coxeter_data(diagram_type: str, rank: int) -> CoxeterData:
    """Coxeter number and exponents from the standard tables."""
    canonical_edges(diagram_type, rank)  # validates the (type, rank) pair
    h, exponents = _EXPONENTS[diagram_type](rank)
    if sum(exponents) * 2 != rank * h:
        raise InputError(f"inconsistent Coxeter data for {diagram_type}{rank}")
    return CoxeterData(h, exponents)


@lru_cache(maxsize=None)
def positive_roots(q: DynkinQuiver) -> tuple[Root, ...]:
    """All positive roots in lexicographic order (closure of the simples)."""
    n = q.rank
    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    found: set[Root] = set(simples)
    frontier = list(simples)
    refl = [simple_reflection(q, i + 1) for i in range(n)]
    while frontier:
        nxt: list[Root] = []
        for v in frontier:
            for s in refl:
                w = s.apply(v)
                if all(x >= 0 for x in w) and w not in found:
                    found.add(w)
                    nxt.append(w)
        frontier = nxt
    roots = tuple(sorted(found))
    expected = q.rank * coxeter_data(q.diagram_type, q.rank).h // 2
    if len(roots) != expected:
        raise InputError(f"root count {len(roots)} != n*h/2 = {expected} for {q}")
    return roots


def is_positive_root(q: DynkinQuiver, v: Root) -> bool:
    return len(v) == q.rank and v in set(positive_roots(q))


def support(v: Root) -> tuple[int, ...]:
    """Vertices where the coordinate is nonzero (1-based)."""
    return tuple(i + 1 for i, x in enumerate(v) if x)


@lru_cache(maxsize=None)
def simple_reflection(q: DynkinQuiver, i: int) -> WElement:
    """s_i on root coordinates: s_i(v)_i = -v_i + sum of v over neighbors."""
    n = q.rank
    if not 1 <= i <= n:
        raise InputError(f"vertex {i} out of range for {q}")
    rows = []
    nbrs = set(neighbors(q, i))
    for r in range(1, n + 1):
        if r != i:
            rows.append(tuple(1 if c == r else 0 for c in range(1, n + 1)))
        else:
            rows.append(tuple(-1 if c == i else (1 if c in nbrs else 0) for c in range(1, n + 1)))
    return WElement(tuple(rows))


def reflection_of_root(q: DynkinQuiver, beta: Root) -> WElement:
    """t_beta = I - beta (C beta)^T with C the symmetrized Cartan matrix."""
    if not is_positive_root(q, beta):
        raise InputError(f"{beta} is not a positive root of {q}")
    c = cartan_matrix(q.diagram_type, q.rank)
    cb = mat_apply(c, beta)
    n = q.rank
    rows = tuple(
        tuple((1 if r == col else 0) - beta[r] * cb[col] for col in range(n))
        for r in range(n)
    )
    return WElement(rows)


@lru_cache(maxsize=None)
def coxeter_element(q: DynkinQuiver) -> WElement:
    """c = s_{i_1} ... s_{i_n} along sink_order(q), rightmost factor first."""
    w = WElement.identity(q.rank)
    for i in sink_order(q):
        w = w @ simple_reflection(q, i)
    return w


def check_catalan_integrality(numerators: list[int], denominators: list[int]) -> int:
    """Exact integer value of a product of fractions; raises if non-integral."""
    prod = Fraction(1)
    for a, b in zip(numerators, denominators):
        prod *= Fraction(a, b)
    if prod.denominator != 1:
        raise InputError(f"non-integral Catalan product {prod}")
    return prod.numerator
