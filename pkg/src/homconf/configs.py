"""Hom-free sets, Hom-configurations and their module-level combinatorics.

A configuration is a pairwise orthogonal set of fundamental-domain objects
(orthogonal = vanishing orbit-category Hom in both directions); it is a
Hom-configuration exactly when it has rank-many members.  The bijection
with sincere Hom-free module sets goes through perpendicular categories:
a sincere Hom-free set extends uniquely by the shifted relative simples of
its perpendicular category.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .cartan import (
    DynkinQuiver,
    Root,
    WElement,
    coxeter_element,
    is_positive_root,
    positive_roots,
    reflection_of_root,
    support,
)
from .errors import InputError, InvariantViolation
from .orbit import OrbitObject, hom_table, in_domain, obj
from .reps import ext_root, hom_root


@dataclass(frozen=True)
class Configuration:
    """A Hom-free set of fundamental-domain objects, canonically sorted."""

    members: tuple[OrbitObject, ...]

    def roots_at(self, shift: int) -> tuple[Root, ...]:
        return tuple(x.root for x in self.members if x.shift == shift)

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class ExcSequence:
    """An ordered tuple of positive roots whose modules admit no Hom or Ext^1
    from any earlier term to any later term."""

    roots: tuple[Root, ...]


def _canonical(members) -> tuple[OrbitObject, ...]:
    return tuple(sorted(set(members)))


@lru_cache(maxsize=None)
def _compat_masks(q: DynkinQuiver) -> tuple[int, ...]:
    """Bit i of masks[j]: objects i and j are orthogonal in both directions."""
    table = hom_table(q)
    m = len(table.objects)
    masks = []
    for i in range(m):
        mask = 0
        row = table.dims[i]
        for j in range(m):
            if j != i and row[j] == 0 and table.dims[j][i] == 0:
                mask |= 1 << j
        masks.append(mask)
    return tuple(masks)


def is_hom_free(q: DynkinQuiver, members) -> bool:
    """Pairwise orbit-category orthogonality of a set of domain objects."""
    objs = _canonical(members)
    table = hom_table(q)
    for x in objs:
        if not in_domain(q, x):
            raise InputError(f"{x} is not in the fundamental domain of {q}")
    for a in range(len(objs)):
        for b in range(a + 1, len(objs)):
            if table.dim(objs[a], objs[b]) or table.dim(objs[b], objs[a]):
                return False
    return True


def configuration(q: DynkinQuiver, members) -> Configuration:
    objs = _canonical(members)
    if not is_hom_free(q, objs):
        raise InputError("the given objects are not pairwise orthogonal")
    return Configuration(objs)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _cliques_of_size(masks, universe: int, size: int):
    """All `size`-subsets of the bit universe that are pairwise compatible."""
    found: list[tuple[int, ...]] = []

    def rec(chosen: list[int], cand: int):
        need = size - len(chosen)
        if need == 0:
            found.append(tuple(chosen))
            return
        bits = _bits(cand)
        for k, j in enumerate(bits):
            if len(bits) - k < need:
                break
            chosen.append(j)
            rec(chosen, cand & masks[j] & ~((1 << (j + 1)) - 1))
            chosen.pop()

    rec([], universe)
    return found


def enumerate_hom_configurations(q: DynkinQuiver, threads: int = 1) -> tuple[Configuration, ...]:
    """All Hom-free subsets of the fundamental domain of size rank(q)."""
    table = hom_table(q, threads)
    masks = _compat_masks(q)
    universe = (1 << len(table.objects)) - 1
    objects = table.objects
    return tuple(
        Configuration(tuple(objects[i] for i in idxs))
        for idxs in _cliques_of_size(masks, universe, q.rank)
    )


def complete_to_configurations(q: DynkinQuiver, partial) -> tuple[Configuration, ...]:
    """All Hom-configurations containing the given Hom-free set."""
    objs = _canonical(partial)
    if not is_hom_free(q, objs):
        raise InputError("partial set is not Hom-free")
    table = hom_table(q)
    masks = _compat_masks(q)
    index = {x: i for i, x in enumerate(table.objects)}
    cand = (1 << len(table.objects)) - 1
    for x in objs:
        cand &= masks[index[x]]
    need = q.rank - len(objs)
    if need < 0:
        return ()
    out = []
    for idxs in _cliques_of_size(masks, cand, need):
        members = objs + tuple(table.objects[i] for i in idxs)
        out.append(Configuration(_canonical(members)))
    return tuple(out)


def hom_free_module_sets(q: DynkinQuiver) -> tuple[tuple[Root, ...], ...]:
    """Every nonempty Hom-free set of modules (as sorted root tuples)."""
    table = hom_table(q)
    masks = _compat_masks(q)
    nroots = len(positive_roots(q))
    module_mask = (1 << nroots) - 1
    out: list[tuple[Root, ...]] = []

    def rec(chosen: list[int], cand: int):
        if chosen:
            out.append(tuple(table.objects[i].root for i in chosen))
        for j in _bits(cand):
            chosen.append(j)
            rec(chosen, cand & masks[j] & ~((1 << (j + 1)) - 1))
            chosen.pop()

    rec([], module_mask)
    return tuple(out)


def hom_free_sets(q: DynkinQuiver) -> tuple[tuple[OrbitObject, ...], ...]:
    """Every nonempty Hom-free set in the fundamental domain (exhaustive)."""
    table = hom_table(q)
    masks = _compat_masks(q)
    universe = (1 << len(table.objects)) - 1
    out: list[tuple[OrbitObject, ...]] = []

    def rec(chosen: list[int], cand: int):
        if chosen:
            out.append(tuple(table.objects[i] for i in chosen))
        for j in _bits(cand):
            chosen.append(j)
            rec(chosen, cand & masks[j] & ~((1 << (j + 1)) - 1))
            chosen.pop()

    rec([], universe)
    return tuple(out)


def module_part(t: Configuration) -> tuple[Root, ...]:
    """The shift-0 members, as modules."""
    return t.roots_at(0)


def is_sincere(q: DynkinQuiver, roots) -> bool:
    """True if the supports jointly cover every vertex."""
    seen: set[int] = set()
    for b in roots:
        seen.update(support(b))
    return seen == set(range(1, q.rank + 1))


def perp(q: DynkinQuiver, roots) -> tuple[Root, ...]:
    """Positive roots with vanishing Hom and Ext^1 from every member."""
    t = tuple(roots)
    for b in t:
        if not is_positive_root(q, b):
            raise InputError(f"{b} is not a positive root of {q}")
    return tuple(
        m
        for m in positive_roots(q)
        if all(hom_root(q, x, m) == 0 and ext_root(q, x, m) == 0 for x in t)
    )


def simples_of_wide(q: DynkinQuiver, wide, r: int) -> tuple[Root, ...]:
    """The unique r-subset of a wide subcategory's roots that is pairwise
    Hom-orthogonal; its members are the relative simples."""
    roots = tuple(sorted(set(wide)))
    m = len(roots)
    masks = []
    for i in range(m):
        mask = 0
        for j in range(m):
            if j != i and hom_root(q, roots[i], roots[j]) == 0 and hom_root(q, roots[j], roots[i]) == 0:
                mask |= 1 << j
        masks.append(mask)
    hits = _cliques_of_size(masks, (1 << m) - 1, r)
    if len(hits) != 1:
        raise InvariantViolation(
            f"expected a unique {r}-element orthogonal set in the wide subcategory, found {len(hits)}"
        )
    return tuple(roots[i] for i in hits[0])


def beta(q: DynkinQuiver, roots) -> Configuration:
    """Extend a sincere Hom-free module set by its shifted relative simples."""
    t = tuple(sorted(set(roots)))
    zero = [obj(b, 0) for b in t]
    if not is_hom_free(q, zero):
        raise InputError("the module set is not Hom-free")
    if not is_sincere(q, t):
        raise InputError("the module set is not sincere")
    wide = perp(q, t)
    simples = simples_of_wide(q, wide, q.rank - len(t))
    members = zero + [obj(b, 1) for b in simples]
    result = configuration(q, members)
    if len(result) != q.rank or module_part(result) != t:
        raise InvariantViolation(f"extension of {t} is not a Hom-configuration over {q}")
    return result


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    violations: tuple[str, ...]
    counts: tuple[tuple[str, int], ...] = ()


def sincere_hom_free_sets(q: DynkinQuiver) -> tuple[tuple[Root, ...], ...]:
    return tuple(t for t in hom_free_module_sets(q) if is_sincere(q, t))


def verify_beta_bijection(q: DynkinQuiver) -> VerificationReport:
    """Check both round trips between Hom-configurations and sincere sets."""
    violations: list[str] = []
    configurations = enumerate_hom_configurations(q)
    sincere_sets = set(sincere_hom_free_sets(q))
    for conf in configurations:
        t = module_part(conf)
        if not is_sincere(q, t):
            violations.append(f"module part {t} is not sincere")
            continue
        if t not in sincere_sets:
            violations.append(f"module part {t} is not a Hom-free module set")
            continue
        if beta(q, t) != conf:
            violations.append(f"beta does not invert the restriction on {t}")
    for t in sorted(sincere_sets):
        conf = beta(q, t)
        if module_part(conf) != tuple(sorted(t)):
            violations.append(f"restriction does not invert beta on {t}")
    if len(configurations) != len(sincere_sets):
        violations.append(
            f"{len(configurations)} configurations vs {len(sincere_sets)} sincere Hom-free sets"
        )
    return VerificationReport(
        not violations,
        tuple(violations),
        (("hom_configurations", len(configurations)), ("sincere_hom_free_sets", len(sincere_sets))),
    )


def _order_constraints(q: DynkinQuiver, objs: tuple[OrbitObject, ...]) -> list[set[int]]:
    """preds[a] = indices that must come before a in an exceptional order."""
    k = len(objs)
    preds: list[set[int]] = [set() for _ in range(k)]
    for a in range(k):
        for b in range(k):
            if a == b:
                continue
            ra, rb = objs[a].root, objs[b].root
            if hom_root(q, ra, rb) != 0 or ext_root(q, ra, rb) != 0:
                preds[a].add(b)
    return preds


def exceptional_order(q: DynkinQuiver, members) -> tuple[OrbitObject, ...]:
    """Order a Hom-free set into an exceptional sequence, modules first.

    Topological sort of the pairwise vanishing constraints with the
    canonical (shift, root) tie-break; a constraint cycle is an invariant
    violation, not an input error.
    """
    objs = _canonical(members)
    if not is_hom_free(q, objs):
        raise InputError("members do not form a Hom-free set")
    preds = _order_constraints(q, objs)
    missing = [len(p) for p in preds]
    heap = [i for i in range(len(objs)) if missing[i] == 0]
    heapq.heapify(heap)
    order: list[int] = []
    placed = [False] * len(objs)
    while heap:
        i = heapq.heappop(heap)
        order.append(i)
        placed[i] = True
        for a in range(len(objs)):
            if not placed[a] and i in preds[a]:
                missing[a] -= 1
                if missing[a] == 0:
                    heapq.heappush(heap, a)
    if len(order) != len(objs):
        raise InvariantViolation("constraint cycle: the set admits no exceptional order")
    result = tuple(objs[i] for i in order)
    shifts = [x.shift for x in result]
    if shifts != sorted(shifts):
        raise InvariantViolation("exceptional order failed to place modules first")
    return result


def all_exceptional_orders(q: DynkinQuiver, members) -> tuple[tuple[OrbitObject, ...], ...]:
    """Every constraint-valid order of a Hom-free set (small sets only)."""
    objs = _canonical(members)
    if not is_hom_free(q, objs):
        raise InputError("members do not form a Hom-free set")
    preds = _order_constraints(q, objs)
    out: list[tuple[OrbitObject, ...]] = []
    for perm in permutations(range(len(objs))):
        pos = {i: p for p, i in enumerate(perm)}
        if all(pos[b] < pos[a] for a in range(len(objs)) for b in preds[a]):
            out.append(tuple(objs[i] for i in perm))
    return tuple(out)


def covering_check(q: DynkinQuiver, members) -> bool:
    """Does every fundamental-domain object admit a nonzero map to the set?"""
    objs = _canonical(members)
    if not is_hom_free(q, objs):
        raise InputError("members do not form a Hom-free set")
    table = hom_table(q)
    targets = [table.index(x) for x in objs]
    for zi in range(len(table.objects)):
        if all(table.dims[zi][t] == 0 for t in targets):
            return False
    return True


def is_exceptional_sequence(q: DynkinQuiver, roots) -> bool:
    """hom and Ext^1 vanish from every earlier term to every later term."""
    seq = tuple(roots)
    for b in seq:
        if not is_positive_root(q, b):
            raise InputError(f"{b} is not a positive root of {q}")
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if hom_root(q, seq[i], seq[j]) != 0 or ext_root(q, seq[i], seq[j]) != 0:
                return False
    return True


def reflection_product(q: DynkinQuiver, roots) -> WElement:
    """Product of the reflections of the listed roots, rightmost acting first."""
    w = WElement.identity(q.rank)
    for b in roots:
        w = w @ reflection_of_root(q, b)
    return w


def _positive_form(q: DynkinQuiver, v: Root) -> Root:
    if all(x <= 0 for x in v):
        v = tuple(-x for x in v)
    if not is_positive_root(q, v):
        raise InvariantViolation(f"{v} is not (up to sign) a positive root of {q}")
    return v


def braid_mutate(q: DynkinQuiver, seq: ExcSequence, i: int, inverse: bool = False) -> ExcSequence:
    """Braid-group action on exceptional sequences at slot i (1-based).

    sigma_i replaces (b_i, b_{i+1}) by (b_{i+1}, t_{b_{i+1}}(b_i)); the
    inverse replaces it by (t_{b_i}(b_{i+1}), b_i).  The result is checked
    to be exceptional and to preserve the reflection product.
    """
    roots = seq.roots
    if not 1 <= i < len(roots):
        raise InputError(f"slot {i} out of range for a sequence of length {len(roots)}")
    if not is_exceptional_sequence(q, roots):
        raise InputError("input sequence is not exceptional")
    a, b = roots[i - 1], roots[i]
    if inverse:
        new_pair = (_positive_form(q, reflection_of_root(q, a).apply(b)), a)
    else:
        new_pair = (b, _positive_form(q, reflection_of_root(q, b).apply(a)))
    new_roots = roots[: i - 1] + new_pair + roots[i + 1 :]
    if not is_exceptional_sequence(q, new_roots):
        raise InvariantViolation("braid mutation produced a non-exceptional sequence")
    if reflection_product(q, new_roots) != reflection_product(q, roots):
        raise InvariantViolation("braid mutation changed the reflection product")
    return ExcSequence(new_roots)


def simples_configuration(q: DynkinQuiver) -> Configuration:
    """The configuration made of all simple modules."""
    n = q.rank
    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    return configuration(q, [obj(b, 0) for b in simples])


def ringel_unique_module_configuration(q: DynkinQuiver) -> bool:
    """Exactly one Hom-configuration consists of modules, and it is the simples."""
    all_module = [
        c for c in enumerate_hom_configurations(q) if all(x.shift == 0 for x in c.members)
    ]
    return all_module == [simples_configuration(q)]


def configuration_json(conf: Configuration) -> list[dict]:
    return [{"root": list(x.root), "shift": x.shift} for x in conf.members]


def configuration_from_json(q: DynkinQuiver, data) -> Configuration:
    try:
        members = [obj(tuple(int(v) for v in item["root"]), int(item["shift"])) for item in data]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed configuration JSON: {exc}") from exc
    return configuration(q, members)


def check_reflection_product(q: DynkinQuiver) -> VerificationReport:
    """Brute force: a root tuple is exceptional iff its reflections multiply
    to the Coxeter element (small ranks only)."""
    if q.rank > 4:
        raise InputError("brute-force reflection-product check is limited to rank <= 4")
    c = coxeter_element(q)
    violations: list[str] = []
    checked = 0
    for tup in permutations(positive_roots(q), q.rank):
        checked += 1
        exceptional = is_exceptional_sequence(q, tup)
        matches = reflection_product(q, tup) == c
        if exceptional != matches:
            violations.append(f"{tup}: exceptional={exceptional}, product==c is {matches}")
    return VerificationReport(not violations, tuple(violations), (("tuples", checked),))
