"""Norm-equation covers of the circle geometry CG(3,q).

A cover is a set of q^2+q+1 points of GF(q^3) u {inf} cut out by a norm
equation over the cubic extension, in one of two families:

    kind 1:  {x : N(x - a) = f}                      a in GF(q^3), f in GF(q)*
    kind 2:  {x : N((x - a)/(x - b)) = f} u {inf?}   a != b, f in GF(q)*

For kind 2 the point at infinity belongs to the cover exactly when f = 1
(the value of the defining fraction at infinity is N(1) = 1), the pole b is
never a member, and neither is a (the fraction vanishes there).  This is
the unique membership convention under which every cover has q^2+q+1
points, which the test suite verifies exhaustively.

Swapping a and b inverts f without changing the point set, so the ordered
kind-2 parameter grid covers each point set exactly twice.  Enumeration
iterates a < b to halve it, and the optional full-grid audit confirms that
key-level deduplication removes exactly those swap pairs.

Counting both families: q^3(q-1) covers of kind 1, q^3(q^3-1)(q-1)/2 of
kind 2, and q^3(q-1)(q^3+1)/2 in total.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .gf import FieldCtx


def kind1_count(q: int) -> int:
    return q**3 * (q - 1)


def kind2_count(q: int) -> int:
    return q**3 * (q**3 - 1) * (q - 1) // 2


def total_count(q: int) -> int:
    return q**3 * (q - 1) * (q**3 + 1) // 2


def cover_size(q: int) -> int:
    return q * q + q + 1


@dataclass(frozen=True)
class Cover:
    """A cover with its defining parameters and canonical sorted key.

    The key lists the member labels ascending; the infinity label q^3 is
    larger than every field index, so it always sorts last.
    """

    kind: int
    a: int
    b: int | None
    f: int
    key: tuple[int, ...]

    @cached_property
    def points(self) -> frozenset[int]:
        return frozenset(self.key)


def _check_f(ctx: FieldCtx, f: int) -> None:
    if not (ctx.is_base(f) and f != 0):
        raise ValueError(f"f = {f} must be a nonzero element of the base field GF({ctx.q})")


def cover_type1(ctx: FieldCtx, a: int, f: int) -> Cover:
    """The cover {x : N(x - a) = f}."""
    _check_f(ctx, f)
    if not 0 <= a < ctx.q3:
        raise ValueError(f"a = {a} is not a GF(q^3) index")
    norm, sub = ctx.norm_table, ctx.sub
    key = tuple(x for x in range(ctx.q3) if norm[sub(x, a)] == f)
    if len(key) != cover_size(ctx.q):
        raise RuntimeError("cover of kind 1 has the wrong size")  # table bug
    return Cover(kind=1, a=a, b=None, f=f, key=key)


def cover_type2(ctx: FieldCtx, a: int, b: int, f: int) -> Cover:
    """The cover {x : N((x - a)/(x - b)) = f}, plus infinity when f = 1."""
    _check_f(ctx, f)
    if not (0 <= a < ctx.q3 and 0 <= b < ctx.q3):
        raise ValueError("a and b must be GF(q^3) indices")
    if a == b:
        raise ValueError("a and b must be distinct")
    norm, sub, div = ctx.norm_table, ctx.sub, ctx.div
    members = [
        x for x in range(ctx.q3)
        if x != b and norm[div(sub(x, a), sub(x, b))] == f
    ]
    if f == 1:
        members.append(ctx.q3)
    key = tuple(members)
    if len(key) != cover_size(ctx.q):
        raise RuntimeError("cover of kind 2 has the wrong size")  # table bug
    return Cover(kind=2, a=a, b=b, f=f, key=key)


@dataclass
class CoverSet:
    """All covers of CG(3,q), deduplicated by canonical key."""

    q: int
    covers: tuple[Cover, ...]
    by_key: dict[tuple[int, ...], Cover]
    count_kind1: int
    count_kind2: int
    total: int
    dedup_exact: bool | None = None  # set by the full-grid audit


def enumerate_covers(ctx: FieldCtx, check_dedup: bool = False) -> CoverSet:
    """Enumerate every cover once: kind 1 by (a, f), kind 2 by (a < b, f).

    With check_dedup=True the full ordered kind-2 grid is also swept and the
    audit confirms each key arises from exactly two parameter triples that
    are (a,b,f) <-> (b,a,1/f) swaps of each other.
    """
    q, q3 = ctx.q, ctx.q3
    norm_np = ctx.norm_np
    neg_np = ctx.ext_neg_np
    add_np = ctx.ext_add_np
    mul_np = ctx.ext_mul_np
    inv_np = ctx.ext_inv_np
    xs = np.arange(q3, dtype=np.int64)

    covers: list[Cover] = []
    by_key: dict[tuple[int, ...], Cover] = {}

    size = cover_size(q)

    def emit(cover: Cover) -> None:
        if len(cover.key) != size:
            raise RuntimeError(f"cover {cover.kind}:{cover.a},{cover.b},{cover.f} "
                               f"has {len(cover.key)} points")  # table bug
        by_key.setdefault(cover.key, cover)
        covers.append(cover)

    diffs = np.empty((q3, q3), dtype=np.uint16)  # diffs[a] = x - a over all x
    for a in range(q3):
        diffs[a] = add_np[xs, neg_np[a]]

    for a in range(q3):
        vals = norm_np[diffs[a]]
        for f in range(1, q):
            key = tuple(int(x) for x in xs[vals == f])
            emit(Cover(kind=1, a=a, b=None, f=f, key=key))
    count_kind1 = len({c.key for c in covers})

    def kind2_keys(a: int, b: int):
        """Keys of the q-1 covers sharing the pole pair (a, b), by f."""
        vals = norm_np[mul_np[diffs[a], inv_np[diffs[b]]]]
        vals[b] = 0  # pole: not a member of any cover
        out = {}
        for f in range(1, q):
            members = [int(x) for x in xs[vals == f]]
            if f == 1:
                members.append(q3)
            out[f] = tuple(members)
        return out

    n_before = len(covers)
    for a in range(q3):
        for b in range(a + 1, q3):
            for f, key in kind2_keys(a, b).items():
                emit(Cover(kind=2, a=a, b=b, f=f, key=key))
    count_kind2 = len({c.key for c in covers[n_before:]})

    result = CoverSet(
        q=q,
        covers=tuple(covers),
        by_key=by_key,
        count_kind1=count_kind1,
        count_kind2=count_kind2,
        total=len(by_key),
    )

    if check_dedup:
        base_inv = ctx.base._inv
        seen: dict[tuple[int, ...], list[tuple[int, int, int]]] = {}
        for a in range(q3):
            for b in range(q3):
                if a == b:
                    continue
                for f, key in kind2_keys(a, b).items():
                    seen.setdefault(key, []).append((a, b, f))
        exact = len(seen) == count_kind2
        for key, params in seen.items():
            if len(params) != 2:
                exact = False
                break
            (a1, b1, f1), (a2, b2, f2) = params
            if (a1, b1, f1) != (b2, a2, base_inv[f2]):
                exact = False
                break
        result.dedup_exact = exact

    return result
