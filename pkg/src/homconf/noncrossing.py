"""The noncrossing-partition lattice of the Weyl group and its bijections.

Noncrossing partitions are the absolute-order interval [1, c]; they are
enumerated by an ascending BFS from the identity that keeps one reduced
reflection word per element.  Absolute length is computed as
rank(w - id) (Carter), which the BFS level cross-checks.  Positivity of an
element is read off any one stored word: its roots' supports must cover
every vertex (Reading's parabolic lemma makes one word enough).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import (
    CoxeterData,
    DynkinQuiver,
    Root,
    WElement,
    check_catalan_integrality,
    coxeter_data,
    coxeter_element,
    positive_roots,
    reflection_of_root,
    support,
)
from .configs import (
    Configuration,
    beta,
    check_reflection_product,
    exceptional_order,
    reflection_product,
    sincere_hom_free_sets,
)
from .errors import InputError, InvariantViolation
from .linalg import int_rank
from .orbit import obj

__all__ = [
    "NCElement",
    "absolute_length",
    "enumerate_nc",
    "is_positive",
    "catalan",
    "positive_fuss_catalan",
    "psi",
    "phi",
    "rho",
    "nc_element_json",
    "check_reflection_product",
]


@dataclass(frozen=True)
class NCElement:
    """A Weyl-group element plus one stored reduced reflection word."""

    element: WElement
    word: tuple[Root, ...]

    @property
    def length(self) -> int:
        return len(self.word)


def absolute_length(w: WElement) -> int:
    """Minimal number of reflections multiplying to w: rank(w - id)."""
    n = w.rank
    return int_rank([[w.rows[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)])


def _corank_to_coxeter(c: WElement, w: WElement) -> int:
    """absolute_length(w^{-1} c) without inverting: rank(c - w)."""
    n = w.rank
    return int_rank([[c.rows[i][j] - w.rows[i][j] for j in range(n)] for i in range(n)])


@lru_cache(maxsize=None)
def enumerate_nc(q: DynkinQuiver) -> tuple[NCElement, ...]:
    """All elements below the Coxeter element in absolute order.

    Level-by-level from the identity: u extends by a reflection t when the
    lengths of u.t and (u.t)^{-1} c add up correctly; one reduced word is
    kept per element, the first found in deterministic root order.
    """
    n = q.rank
    c = coxeter_element(q)
    refls = [(b, reflection_of_root(q, b)) for b in positive_roots(q)]
    identity = NCElement(WElement.identity(n), ())
    out: list[NCElement] = [identity]
    frontier = [identity]
    for level in range(n):
        seen: dict[tuple, NCElement] = {}
        for u in frontier:
            for b, t in refls:
                v = u.element @ t
                if v.rows in seen:
                    continue
                if absolute_length(v) != level + 1:
                    continue
                if _corank_to_coxeter(c, v) != n - level - 1:
                    continue
                seen[v.rows] = NCElement(v, u.word + (b,))
        frontier = [seen[k] for k in sorted(seen)]
        out.extend(frontier)
    return tuple(out)


@lru_cache(maxsize=None)
def _nc_matrix_set(q: DynkinQuiver) -> frozenset:
    return frozenset(u.element.rows for u in enumerate_nc(q))


def is_positive(u: NCElement) -> bool:
    """Not contained in any proper standard parabolic subgroup."""
    n = u.element.rank
    seen: set[int] = set()
    for b in u.word:
        seen.update(support(b))
    return seen == set(range(1, n + 1))


def _catalan_product(data: CoxeterData, shift: int) -> int:
    return check_catalan_integrality(
        [e + data.h + shift for e in data.exponents],
        [e + 1 for e in data.exponents],
    )


def catalan(diagram_type: str, rank: int) -> int:
    """Coxeter-Catalan number: product of (e_i + h + 1)/(e_i + 1)."""
    return _catalan_product(coxeter_data(diagram_type, rank), 1)


def positive_fuss_catalan(diagram_type: str, rank: int) -> int:
    """Positive Fuss-Catalan number: product of (e_i + h - 1)/(e_i + 1)."""
    return _catalan_product(coxeter_data(diagram_type, rank), -1)


def psi(q: DynkinQuiver, roots) -> NCElement:
    """Product of the reflections of a sincere Hom-free set in its
    exceptional order; lands in the positive noncrossing partitions."""
    t = tuple(sorted(set(roots)))
    order = exceptional_order(q, [obj(b, 0) for b in t])
    word = tuple(x.root for x in order)
    element = reflection_product(q, word)
    result = NCElement(element, word)
    if absolute_length(element) != len(word):
        raise InvariantViolation(f"psi word for {t} is not reduced")
    if _corank_to_coxeter(coxeter_element(q), element) != q.rank - len(word):
        raise InvariantViolation(f"psi({t}) is not below the Coxeter element")
    if not is_positive(result):
        raise InvariantViolation(f"psi({t}) is not positive")
    return result


@lru_cache(maxsize=None)
def _psi_table(q: DynkinQuiver) -> dict:
    table = {}
    for t in sincere_hom_free_sets(q):
        u = psi(q, t)
        if u.element.rows in table:
            raise InvariantViolation(f"psi is not injective: {t} and {table[u.element.rows]}")
        table[u.element.rows] = t
    return table


def phi(q: DynkinQuiver, u: NCElement) -> tuple[Root, ...]:
    """The unique sincere Hom-free set with psi(T) = u."""
    if u.element.rows not in _nc_matrix_set(q):
        raise InputError("element is not a noncrossing partition of this quiver")
    if not is_positive(u):
        raise InputError("element is not a positive noncrossing partition")
    table = _psi_table(q)
    t = table.get(u.element.rows)
    if t is None:
        raise InvariantViolation("positive noncrossing partition has no psi preimage")
    return t


def rho(q: DynkinQuiver, u: NCElement) -> Configuration:
    """Hom-configuration attached to a positive noncrossing partition."""
    return beta(q, phi(q, u))


def nc_element_json(u: NCElement) -> dict:
    return {
        "matrix": [list(row) for row in u.element.rows],
        "word": [list(b) for b in u.word],
        "length": u.length,
        "positive": is_positive(u),
    }
