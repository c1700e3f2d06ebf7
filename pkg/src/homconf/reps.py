"""Indecomposable quiver representations and exact Hom/Ext dimensions.

Representations carry integer matrices (a special case of exact rational
data); morphism-space dimensions come from the nullspace of the
commutativity system f_tgt . M_a = N_a . f_src over all arrows, computed by
exact elimination.  Ext^1 uses the hereditary identity
dim Ext^1(M,N) = dim Hom(M,N) - <dim M, dim N>.

Indecomposables are built with reflection functors: walk the dimension
vector down to a simple root along the cyclic sink order, then unwind with
inverse reflection functors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import (
    DynkinQuiver,
    Root,
    coxeter_data,
    euler_form,
    is_positive_root,
    positive_roots,
    reflect_quiver,
    simple_reflection,
    sink_order,
    sinks,
    sources,
)
from .errors import InputError, InvariantViolation, ReflectionOnSimpleError
from .linalg import int_left_nullspace, int_nullspace, int_rank

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Representation:
    """A representation of ``quiver``: dims per vertex, one matrix per arrow.

    ``maps[k]`` belongs to ``quiver.arrows[k]`` and has shape
    (dims[target-1], dims[source-1]).
    """

    quiver: DynkinQuiver
    dims: tuple[int, ...]
    maps: tuple[Matrix, ...]

    def __post_init__(self):
        if len(self.dims) != self.quiver.rank or len(self.maps) != len(self.quiver.arrows):
            raise InputError("representation shape does not match the quiver")
        for (s, t), m in zip(self.quiver.arrows, self.maps):
            rows, cols = self.dims[t - 1], self.dims[s - 1]
            if len(m) != rows or any(len(r) != cols for r in m):
                raise InputError(f"map for arrow {s}>{t} has the wrong shape")


def zero_matrix(rows: int, cols: int) -> Matrix:
    return tuple(tuple(0 for _ in range(cols)) for _ in range(rows))


def simple_rep(q: DynkinQuiver, i: int) -> Representation:
    """The simple representation S_i (one-dimensional at i, zero maps)."""
    dims = tuple(1 if v == i else 0 for v in range(1, q.rank + 1))
    maps = tuple(zero_matrix(dims[t - 1], dims[s - 1]) for s, t in q.arrows)
    return Representation(q, dims, maps)


def reflection_functor(q: DynkinQuiver, i: int, m: Representation, direction: str) -> Representation:
    """R_i (``plus``, i a sink) or R_i^- (``minus``, i a source) applied to m.

    The result lives over the reflected quiver and has dimension vector
    s_i(dims m); applying it to S_i is rejected since the functor kills it.
    """
    if m.quiver != q:
        raise InputError("representation is not over the given quiver")
    simple = tuple(1 if v == i else 0 for v in range(1, q.rank + 1))
    if m.dims == simple:
        raise ReflectionOnSimpleError(f"reflection functor at {i} kills the simple S_{i}")
    if direction == "plus":
        if i not in sinks(q):
            raise InputError(f"vertex {i} is not a sink of {q}")
        return _reflect_at_sink(q, i, m)
    if direction == "minus":
        if i not in sources(q):
            raise InputError(f"vertex {i} is not a source of {q}")
        return _reflect_at_source(q, i, m)
    raise InputError(f"direction must be 'plus' or 'minus', got {direction!r}")


def _arrow_index(q: DynkinQuiver) -> dict[tuple[int, int], int]:
    return {a: k for k, a in enumerate(q.arrows)}


def _reflect_at_sink(q: DynkinQuiver, i: int, m: Representation) -> Representation:
    new_q = reflect_quiver(q, i)
    idx = _arrow_index(q)
    in_arrows = [(s, t) for s, t in q.arrows if t == i]
    # phi: direct sum of the M_{source} spaces -> M_i, given by the arrow maps.
    block_sizes = [m.dims[s - 1] for s, _ in in_arrows]
    total = sum(block_sizes)
    phi_rows: list[list[int]] = []
    for r in range(m.dims[i - 1]):
        row: list[int] = []
        for (s, _), size in zip(in_arrows, block_sizes):
            arrow_map = m.maps[idx[(s, i)]]
            row.extend(arrow_map[r][c] for c in range(size))
        phi_rows.append(row)
    kernel = int_nullspace(phi_rows, total)
    new_dim_i = len(kernel)
    new_dims = list(m.dims)
    new_dims[i - 1] = new_dim_i
    expected = simple_reflection(q, i).apply(m.dims)
    if tuple(new_dims) != expected:
        raise InvariantViolation(
            f"reflection functor at sink {i} produced dims {tuple(new_dims)}, expected {expected}"
        )
    # Kernel basis vectors are the columns of the new maps out of i.
    offsets: dict[int, int] = {}
    off = 0
    for (s, _), size in zip(in_arrows, block_sizes):
        offsets[s] = off
        off += size
    new_maps: list[Matrix] = []
    for s, t in new_q.arrows:
        if s == i:
            o = offsets[t]
            size = m.dims[t - 1]
            new_maps.append(
                tuple(tuple(vec[o + r] for vec in kernel) for r in range(size))
            )
        else:
            new_maps.append(m.maps[idx[(s, t)]])
    return Representation(new_q, tuple(new_dims), tuple(new_maps))


def _reflect_at_source(q: DynkinQuiver, i: int, m: Representation) -> Representation:
    new_q = reflect_quiver(q, i)
    idx = _arrow_index(q)
    out_arrows = [(s, t) for s, t in q.arrows if s == i]
    # psi: M_i -> direct sum of the M_{target} spaces, stacked arrow maps.
    psi_rows: list[list[int]] = []
    offsets: dict[int, int] = {}
    off = 0
    for _, t in out_arrows:
        offsets[t] = off
        arrow_map = m.maps[idx[(i, t)]]
        for r in range(m.dims[t - 1]):
            psi_rows.append([arrow_map[r][c] for c in range(m.dims[i - 1])])
        off += m.dims[t - 1]
    # Rows of the left nullspace present the cokernel of psi.
    proj = int_left_nullspace(psi_rows)
    new_dim_i = len(proj)
    new_dims = list(m.dims)
    new_dims[i - 1] = new_dim_i
    expected = simple_reflection(q, i).apply(m.dims)
    if tuple(new_dims) != expected:
        raise InvariantViolation(
            f"reflection functor at source {i} produced dims {tuple(new_dims)}, expected {expected}"
        )
    new_maps: list[Matrix] = []
    for s, t in new_q.arrows:
        if t == i:
            o = offsets[s]
            size = m.dims[s - 1]
            new_maps.append(
                tuple(tuple(vec[o + c] for c in range(size)) for vec in proj)
            )
        else:
            new_maps.append(m.maps[idx[(s, t)]])
    return Representation(new_q, tuple(new_dims), tuple(new_maps))


def _is_simple_root(v: Root) -> int | None:
    if sum(v) == 1 and all(x in (0, 1) for x in v):
        return v.index(1) + 1
    return None


@lru_cache(maxsize=None)
def build_indecomposable(q: DynkinQuiver, beta: Root) -> Representation:
    """The indecomposable representation of q with dimension vector beta."""
    if not is_positive_root(q, beta):
        raise InputError(f"{beta} is not a positive root of {q}")
    order = sink_order(q)
    h = coxeter_data(q.diagram_type, q.rank).h
    cap = q.rank * h
    letters: list[int] = []
    quivers = [q]
    v = beta
    current = q
    step = 0
    while _is_simple_root(v) is None:
        if step >= cap:
            raise InvariantViolation(f"root reduction for {beta} did not terminate in {cap} steps")
        i = order[step % q.rank]
        v = simple_reflection(current, i).apply(v)
        letters.append(i)
        current = reflect_quiver(current, i)
        quivers.append(current)
        step += 1
    rep = simple_rep(current, _is_simple_root(v))
    for k in range(len(letters) - 1, -1, -1):
        rep = reflection_functor(quivers[k + 1], letters[k], rep, "minus")
    if rep.dims != beta:
        raise InvariantViolation(f"built representation has dims {rep.dims}, expected {beta}")
    return rep


def hom_dim(q: DynkinQuiver, m: Representation, n: Representation) -> int:
    """dim Hom(m, n): nullspace dimension of the commutativity system."""
    if m.quiver != q or n.quiver != q:
        raise InputError("hom_dim requires representations over the given quiver")
    offsets = []
    total = 0
    for v in range(q.rank):
        offsets.append(total)
        total += m.dims[v] * n.dims[v]
    if total == 0:
        return 0
    idx = _arrow_index(q)
    rows: list[list[int]] = []
    for (s, t) in q.arrows:
        ms, mt = m.dims[s - 1], m.dims[t - 1]
        ns, nt = n.dims[s - 1], n.dims[t - 1]
        if nt * ms == 0:
            continue
        ma = m.maps[idx[(s, t)]]
        na = n.maps[idx[(s, t)]]
        # Unknown f_v[a][b] sits at offsets[v-1] + a * m.dims[v-1] + b.
        for a in range(nt):
            for b in range(ms):
                row = [0] * total
                for k in range(mt):
                    row[offsets[t - 1] + a * m.dims[t - 1] + k] += ma[k][b]
                for k in range(ns):
                    row[offsets[s - 1] + k * m.dims[s - 1] + b] -= na[a][k]
                if any(row):
                    rows.append(row)
    return total - int_rank(rows)


def ext_dim(q: DynkinQuiver, m: Representation, n: Representation) -> int:
    """dim Ext^1(m, n) = dim Hom(m, n) - <dims m, dims n>; always >= 0."""
    value = hom_dim(q, m, n) - euler_form(q, m.dims, n.dims)
    if value < 0:
        raise InvariantViolation(f"negative Ext dimension {value} for {m.dims} -> {n.dims}")
    return value


class _HomCache:
    """Per-quiver matrix of hom dimensions between all root modules."""

    def __init__(self):
        self.tables: dict[DynkinQuiver, tuple[tuple[int, ...], ...]] = {}

    def get(self, q: DynkinQuiver, threads: int = 1) -> tuple[tuple[int, ...], ...]:
        table = self.tables.get(q)
        if table is None:
            table = _compute_hom_matrix(q, threads)
            self.tables[q] = table
        return table


_HOM_CACHE = _HomCache()


def _hom_matrix_rows(q: DynkinQuiver, row_indices: list[int]) -> list[tuple[int, ...]]:
    roots = positive_roots(q)
    mods = [build_indecomposable(q, b) for b in roots]
    return [
        tuple(hom_dim(q, mods[i], mods[j]) for j in range(len(roots)))
        for i in row_indices
    ]


def _hom_rows_worker(args: tuple[str, list[int]]) -> tuple[list[int], list[tuple[int, ...]]]:
    from .cartan import parse_quiver

    spec, indices = args
    q = parse_quiver(spec)
    return indices, _hom_matrix_rows(q, indices)


def _compute_hom_matrix(q: DynkinQuiver, threads: int) -> tuple[tuple[int, ...], ...]:
    count = len(positive_roots(q))
    if threads <= 1 or count < 8:
        return tuple(_hom_matrix_rows(q, list(range(count))))
    from concurrent.futures import ProcessPoolExecutor

    chunks = [list(range(start, count, threads)) for start in range(threads)]
    result: list[tuple[int, ...] | None] = [None] * count
    spec = q.spec_string()
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for indices, rows in pool.map(_hom_rows_worker, [(spec, c) for c in chunks]):
            for i, row in zip(indices, rows):
                result[i] = row
    return tuple(result)  # type: ignore[arg-type]


def module_hom_matrix(q: DynkinQuiver, threads: int = 1) -> tuple[tuple[int, ...], ...]:
    """hom matrix H with H[i][j] = dim Hom(M_{roots[i]}, M_{roots[j]})."""
    return _HOM_CACHE.get(q, threads)


def seed_module_hom_matrix(q: DynkinQuiver, matrix: tuple[tuple[int, ...], ...]) -> None:
    """Install a precomputed hom matrix (from a validated table file)."""
    _HOM_CACHE.tables.setdefault(q, matrix)


@lru_cache(maxsize=None)
def _root_index(q: DynkinQuiver) -> dict[Root, int]:
    return {b: i for i, b in enumerate(positive_roots(q))}


def hom_root(q: DynkinQuiver, a: Root, b: Root) -> int:
    """dim Hom between the indecomposables with dimension vectors a and b."""
    idx = _root_index(q)
    return module_hom_matrix(q)[idx[a]][idx[b]]


def ext_root(q: DynkinQuiver, a: Root, b: Root) -> int:
    value = hom_root(q, a, b) - euler_form(q, a, b)
    if value < 0:
        raise InvariantViolation(f"negative Ext dimension for roots {a} -> {b}")
    return value


@lru_cache(maxsize=None)
def projective_roots(q: DynkinQuiver) -> frozenset[Root]:
    """Roots beta with Ext^1(M_beta, M_gamma) = 0 for every positive root gamma."""
    roots = positive_roots(q)
    return frozenset(
        b for b in roots if all(ext_root(q, b, g) == 0 for g in roots)
    )


@lru_cache(maxsize=None)
def injective_roots(q: DynkinQuiver) -> frozenset[Root]:
    """Roots beta with Ext^1(M_gamma, M_beta) = 0 for every positive root gamma."""
    roots = positive_roots(q)
    return frozenset(
        b for b in roots if all(ext_root(q, g, b) == 0 for g in roots)
    )


def is_projective(q: DynkinQuiver, beta: Root) -> bool:
    if not is_positive_root(q, beta):
        raise InputError(f"{beta} is not a positive root of {q}")
    return beta in projective_roots(q)


def is_injective(q: DynkinQuiver, beta: Root) -> bool:
    if not is_positive_root(q, beta):
        raise InputError(f"{beta} is not a positive root of {q}")
    return beta in injective_roots(q)


def int_matrix_rank(rows) -> int:
    """Rank helper re-exported for verification code."""
    return int_rank([list(r) for r in rows])
