"""The orbit category: fundamental domain, Hom dimensions and the cached table.

An object of the orbit category is represented by (positive root, shift)
with shift 0 or 1, where shift 1 is only allowed for non-injective roots.
Hom spaces between two such objects reduce to module Hom/Ext via a fixed
four-case table; for each shift pattern exactly one of the two summands of
the orbit-category Hom can be nonzero, so the table below is the whole
story:

    (0,0) -> hom(M,N)    (0,1) -> ext(M,N)
    (1,0) -> hom(N,M)    (1,1) -> hom(M,N)

where M, N are the underlying modules of the first and second argument.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass
from functools import lru_cache

from .cartan import DynkinQuiver, Root, euler_form, is_positive_root, parse_quiver, positive_roots
from .errors import InputError, IntegrityError, InvariantViolation
from .reps import (
    ext_root,
    hom_root,
    injective_roots,
    module_hom_matrix,
    seed_module_hom_matrix,
)


@dataclass(frozen=True, order=True)
class OrbitObject:
    shift: int
    root: Root

    def __post_init__(self):
        if self.shift not in (0, 1):
            raise InputError(f"shift must be 0 or 1, got {self.shift}")


def obj(root: Root, shift: int) -> OrbitObject:
    return OrbitObject(shift=shift, root=root)


@lru_cache(maxsize=None)
def fundamental_domain(q: DynkinQuiver) -> tuple[OrbitObject, ...]:
    """Every root at shift 0, every non-injective root at shift 1."""
    injective = injective_roots(q)
    zero = [obj(b, 0) for b in positive_roots(q)]
    one = [obj(b, 1) for b in positive_roots(q) if b not in injective]
    return tuple(zero + one)


def in_domain(q: DynkinQuiver, x: OrbitObject) -> bool:
    if not is_positive_root(q, x.root):
        return False
    if x.shift == 1 and x.root in injective_roots(q):
        return False
    return True


def hom_orbit(q: DynkinQuiver, x: OrbitObject, y: OrbitObject) -> int:
    """dim Hom in the orbit category between two fundamental-domain objects."""
    if not in_domain(q, x) or not in_domain(q, y):
        raise InputError(f"{x} or {y} is not in the fundamental domain of {q}")
    if x.shift == 0 and y.shift == 0:
        return hom_root(q, x.root, y.root)
    if x.shift == 0 and y.shift == 1:
        return ext_root(q, x.root, y.root)
    if x.shift == 1 and y.shift == 0:
        return hom_root(q, y.root, x.root)
    return hom_root(q, x.root, y.root)


@dataclass(frozen=True)
class HomTable:
    quiver: DynkinQuiver
    objects: tuple[OrbitObject, ...]
    dims: tuple[tuple[int, ...], ...]

    def index(self, x: OrbitObject) -> int:
        return _object_index(self.quiver)[x]

    def dim(self, x: OrbitObject, y: OrbitObject) -> int:
        return self.dims[self.index(x)][self.index(y)]


@lru_cache(maxsize=None)
def _object_index(q: DynkinQuiver) -> dict[OrbitObject, int]:
    return {x: i for i, x in enumerate(fundamental_domain(q))}


_TABLE_CACHE: dict[DynkinQuiver, HomTable] = {}


def hom_table(q: DynkinQuiver, threads: int = 1) -> HomTable:
    """Full matrix of orbit-category Hom dimensions over the fundamental domain."""
    table = _TABLE_CACHE.get(q)
    if table is not None:
        return table
    module_hom_matrix(q, threads)
    objects = fundamental_domain(q)
    dims = tuple(
        tuple(hom_orbit(q, x, y) for y in objects) for x in objects
    )
    for i in range(len(objects)):
        if dims[i][i] != 1:
            raise InvariantViolation(f"brick property failed for {objects[i]}")
    table = HomTable(q, objects, dims)
    _TABLE_CACHE[q] = table
    return table


def _dims_sha256(dims: tuple[tuple[int, ...], ...]) -> str:
    canonical = json.dumps([list(row) for row in dims], separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()


def table_document(table: HomTable) -> dict:
    """JSON document for a Hom table, with embedded quiver spec and hash."""
    return {
        "quiver": table.quiver.spec_string(),
        "objects": [{"root": list(x.root), "shift": x.shift} for x in table.objects],
        "dims": [list(row) for row in table.dims],
        "sha256": _dims_sha256(table.dims),
    }


def save_hom_table(table: HomTable, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(table_document(table), fh, separators=(",", ":"), sort_keys=True)
        fh.write("\n")


def load_hom_table(path: str, quiver: DynkinQuiver | None = None) -> HomTable:
    """Load a table, verifying the content hash and (optionally) the quiver.

    A valid table also seeds the per-quiver module-hom cache, so later
    operations on the same quiver skip the linear algebra entirely.
    """
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise IntegrityError(f"cannot read hom table {path}: {exc}") from exc
    try:
        file_quiver = parse_quiver(doc["quiver"])
        objects = tuple(obj(tuple(o["root"]), int(o["shift"])) for o in doc["objects"])
        dims = tuple(tuple(int(x) for x in row) for row in doc["dims"])
        stated = doc["sha256"]
    except (KeyError, TypeError, ValueError, InputError) as exc:
        raise IntegrityError(f"malformed hom table {path}: {exc}") from exc
    if _dims_sha256(dims) != stated:
        raise IntegrityError(f"hom table {path} failed its integrity hash")
    if quiver is not None and file_quiver != quiver:
        raise IntegrityError(
            f"hom table {path} is for {file_quiver.spec_string()}, not {quiver.spec_string()}"
        )
    roots = positive_roots(file_quiver)
    m = len(roots)
    if len(objects) != len(dims) or any(len(row) != len(objects) for row in dims):
        raise IntegrityError(f"hom table {path} dims matrix is not square over its objects")
    if objects[:m] != tuple(obj(b, 0) for b in roots):
        raise IntegrityError(f"hom table {path} does not list every root at shift 0")
    # The top-left block is the module hom matrix; derive the injectives from
    # it and only seed the per-quiver cache once the object list checks out.
    hom_matrix = tuple(tuple(dims[i][j] for j in range(m)) for i in range(m))
    noninjective = [
        b
        for jb, b in enumerate(roots)
        if any(hom_matrix[ig][jb] != euler_form(file_quiver, g, b) for ig, g in enumerate(roots))
    ]
    expected = tuple(obj(b, 0) for b in roots) + tuple(obj(b, 1) for b in noninjective)
    if objects != expected:
        raise IntegrityError(f"hom table {path} lists unexpected objects")
    seed_module_hom_matrix(file_quiver, hom_matrix)
    return HomTable(file_quiver, objects, dims)


def cache_file_name(q: DynkinQuiver) -> str:
    spec = q.spec_string().replace(":", ".").replace(">", "-").replace(",", "_")
    return f"homtable-{spec}.json"


def hom_table_cached(q: DynkinQuiver, cache_dir: str | None, threads: int = 1) -> HomTable:
    """hom_table with an optional on-disk cache directory (see HOMCONF_CACHE_DIR)."""
    if not cache_dir:
        return hom_table(q, threads)
    path = os.path.join(cache_dir, cache_file_name(q))
    if os.path.exists(path):
        table = load_hom_table(path, q)
        _TABLE_CACHE.setdefault(q, table)
        return table
    table = hom_table(q, threads)
    os.makedirs(cache_dir, exist_ok=True)
    save_hom_table(table, path)
    return table
