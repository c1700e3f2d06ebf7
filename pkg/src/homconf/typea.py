"""Classical noncrossing partitions of [n] and the linear-orientation dictionary.

The cycle map identifies partitions of [n] with the noncrossing elements
of the symmetric group on n letters (simple reflections are the adjacent
transpositions).  The partition-to-configuration map sends k to the
coordinate (k, step to the next block element mod n, representatives 1..n)
and decodes coordinates (i, j) with i + j > n + 1 as shifted objects.
Appending n+1 to the block of 1 realizes the bijection onto the positive
partitions of [n+1].
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .cartan import DynkinQuiver, Root, WElement, build_quiver
from .configs import Configuration, configuration, module_part
from .errors import InputError, InvariantViolation
from .noncrossing import NCElement, psi
from .orbit import obj


@dataclass(frozen=True)
class SetPartition:
    """Blocks of [n]: disjoint, nonempty, sorted, covering; blocks ordered by minimum."""

    n: int
    blocks: tuple[tuple[int, ...], ...]


def set_partition(n: int, blocks) -> SetPartition:
    cleaned = tuple(sorted(tuple(sorted(b)) for b in blocks))
    flat = [x for b in cleaned for x in b]
    if not cleaned or any(not b for b in cleaned):
        raise InputError("blocks must be nonempty")
    if sorted(flat) != list(range(1, n + 1)):
        raise InputError(f"blocks do not partition 1..{n}")
    return SetPartition(n, cleaned)


def parse_partition(n: int, text: str) -> SetPartition:
    """Parse the text format ``1,3|2|4``."""
    try:
        blocks = [
            [int(x) for x in chunk.split(",") if x.strip() != ""]
            for chunk in text.replace(" ", "").split("|")
        ]
    except ValueError as exc:
        raise InputError(f"cannot parse partition {text!r}: {exc}") from exc
    return set_partition(n, blocks)


def partition_string(p: SetPartition) -> str:
    return "|".join(",".join(str(x) for x in b) for b in p.blocks)


def is_noncrossing_partition(p: SetPartition) -> bool:
    """No a < b < c < d with a, c in one block and b, d in another."""
    block_of = {}
    for i, b in enumerate(p.blocks):
        for x in b:
            block_of[x] = i
    for a, b, c, d in combinations(range(1, p.n + 1), 4):
        if block_of[a] == block_of[c] and block_of[b] == block_of[d] and block_of[a] != block_of[b]:
            return False
    return True


@lru_cache(maxsize=None)
def noncrossing_partitions(n: int) -> tuple[SetPartition, ...]:
    """All noncrossing partitions of [n], in canonical block order."""
    if n < 1:
        raise InputError("n must be at least 1")
    parts: list[list[list[int]]] = [[]]
    for x in range(1, n + 1):
        grown: list[list[list[int]]] = []
        for p in parts:
            grown.append(p + [[x]])
            for i in range(len(p)):
                grown.append([b + [x] if j == i else list(b) for j, b in enumerate(p)])
        parts = grown
    out = [set_partition(n, p) for p in parts]
    result = tuple(sorted((p for p in out if is_noncrossing_partition(p)), key=lambda p: p.blocks))
    return result


def is_positive_classical(p: SetPartition) -> bool:
    """1 and the top element lie in the same block."""
    for b in p.blocks:
        if 1 in b:
            return p.n in b
    raise InputError("partition has no block containing 1")


def f_map(p: SetPartition) -> SetPartition:
    """Append n+1 to the block of 1: the bijection onto positive partitions of [n+1]."""
    if not is_noncrossing_partition(p):
        raise InputError("partition is crossing")
    blocks = [list(b) + [p.n + 1] if 1 in b else list(b) for b in p.blocks]
    return set_partition(p.n + 1, blocks)


def perm_of_welement(w: WElement) -> tuple[int, ...]:
    """Permutation of [rank+1] realized by a type-A Weyl element.

    images[i-1] is the image of i; recovered from the action on the
    vectors e_i - e_{n+1} written in simple-root coordinates.
    """
    rank = w.rank
    n = rank + 1
    images = [0] * n
    for i in range(1, n):
        u = tuple(1 if k >= i - 1 else 0 for k in range(rank))
        v = w.apply(u)
        # Back to standard coordinates: d_1 = c_1, d_k = c_k - c_{k-1}, d_n = -c_{n-1}.
        d = [v[0]] + [v[k] - v[k - 1] for k in range(1, rank)] + [-v[rank - 1]]
        plus = [k for k, x in enumerate(d) if x == 1]
        minus = [k for k, x in enumerate(d) if x == -1]
        if len(plus) != 1 or len(minus) != 1:
            raise InvariantViolation("matrix does not act as a permutation of the e_i")
        images[i - 1] = plus[0] + 1
        images[n - 1] = minus[0] + 1
    return tuple(images)


def _cycles(images: tuple[int, ...]) -> list[list[int]]:
    n = len(images)
    seen = [False] * n
    cycles = []
    for start in range(1, n + 1):
        if seen[start - 1]:
            continue
        cyc = []
        x = start
        while not seen[x - 1]:
            seen[x - 1] = True
            cyc.append(x)
            x = images[x - 1]
        cycles.append(cyc)
    return cycles


def biane_to_partition(w: WElement) -> SetPartition:
    """Partition of [rank+1] given by the disjoint cycles (1-cycles included)."""
    images = perm_of_welement(w)
    return set_partition(len(images), _cycles(images))


def _interval_root(rank: int, a: int, b: int) -> Root:
    """Root of A_rank supported on the interval [a, b]."""
    return tuple(1 if a <= v <= b else 0 for v in range(1, rank + 1))


def biane_to_perm(p: SetPartition) -> WElement:
    """Inverse cycle map: each block, in increasing order, becomes a cycle."""
    rank = p.n - 1
    if rank < 1:
        return WElement.identity(max(rank, 1))
    q = linear_quiver(rank)
    w = WElement.identity(rank)
    from .cartan import reflection_of_root

    for block in p.blocks:
        for a, b in zip(block, block[1:]):
            w = w @ reflection_of_root(q, _interval_root(rank, a, b - 1))
    return w


@lru_cache(maxsize=None)
def linear_quiver(n: int) -> DynkinQuiver:
    """A_n with the linear orientation n -> n-1 -> ... -> 1."""
    return build_quiver("A", n)


def gamma(p: SetPartition) -> Configuration:
    """Riedtmann's map: a noncrossing partition of [n] to a Hom-configuration
    over the linear A_n quiver."""
    if not is_noncrossing_partition(p):
        raise InputError("partition is crossing")
    n = p.n
    q = linear_quiver(n)
    nxt = {}
    for block in p.blocks:
        for r, k in enumerate(block):
            nxt[k] = block[(r + 1) % len(block)]
    members = []
    for i in range(1, n + 1):
        step = (nxt[i] - i) % n
        j = step if step != 0 else n
        if i + j <= n + 1:
            members.append(obj(_interval_root(n, i, i + j - 1), 0))
        else:
            start = i + j - n - 1
            length = n + 1 - j
            members.append(obj(_interval_root(n, start, start + length - 1), 1))
    try:
        conf = configuration(q, members)
    except InputError as exc:
        raise InvariantViolation(f"gamma({partition_string(p)}) is not Hom-free: {exc}") from exc
    if len(conf) != n:
        raise InvariantViolation(f"gamma({partition_string(p)}) has {len(conf)} members, not {n}")
    return conf


def gamma_coordinates(p: SetPartition) -> tuple[tuple[int, int], ...]:
    """The raw (i, step) coordinates of gamma, before decoding."""
    nxt = {}
    for block in p.blocks:
        for r, k in enumerate(block):
            nxt[k] = block[(r + 1) % len(block)]
    out = []
    for i in range(1, p.n + 1):
        step = (nxt[i] - i) % p.n
        out.append((i, step if step != 0 else p.n))
    return tuple(out)


def rho_inverse_of_gamma(p: SetPartition) -> SetPartition:
    """Partition of [n+1] attached to gamma(p) through the module part."""
    conf = gamma(p)
    q = linear_quiver(p.n)
    u: NCElement = psi(q, module_part(conf))
    return biane_to_partition(u.element)


def check_riedtmann_compat(n: int) -> tuple[bool, int]:
    """rho^{-1} . gamma = f over every noncrossing partition of [n]."""
    count = 0
    for p in noncrossing_partitions(n):
        count += 1
        if rho_inverse_of_gamma(p) != f_map(p):
            return False, count
    return True, count
