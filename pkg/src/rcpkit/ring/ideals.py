"""Ideals, annihilators, units, idempotents and the Jacobson radical."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from ..errors import InvariantViolation, NotTwoSided, SideMismatch
from .tables import FiniteRing, mask_of, members, to_mask

RIGHT = "right"
LEFT = "left"
TWO_SIDED = "two-sided"
SIDES = (RIGHT, LEFT, TWO_SIDED)


@dataclass(frozen=True)
class IdealSet:
    """A one- or two-sided ideal of ``ring`` as a sorted tuple of elements.

    Equality ignores the generators: two ideals are equal when they have the
    same elements and side.
    """

    ring: FiniteRing = field(compare=False, repr=False)
    elements: tuple[int, ...]
    side: str
    generators: tuple[int, ...] = field(default=(), compare=False)

    @cached_property
    def mask(self) -> int:
        return mask_of(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.elements

    def __iter__(self):
        return iter(self.elements)

    def is_whole(self) -> bool:
        return len(self.elements) == self.ring.size


def additive_closure(R: FiniteRing, mask: int) -> int:
    """Smallest additive subgroup containing the elements of ``mask``."""
    cur = np.array(members(mask | 1), dtype=np.int64)
    while True:
        sums = np.unique(R.add[np.ix_(cur, cur)])
        if sums.size == cur.size:
            return mask_of(cur)
        cur = sums


def _principal_mask(R: FiniteRing, g: int, side: str) -> int:
    if side == RIGHT:
        return R.right_masks[g]
    if side == LEFT:
        return R.left_masks[g]
    return R.memo(f"twosided:{g}", lambda: to_mask(_flags(R, R.mul[:, R.mul[g, :]].ravel())))


def _flags(R: FiniteRing, values) -> np.ndarray:
    flags = np.zeros(R.size, dtype=bool)
    flags[values] = True
    return flags


def generated_mask(R: FiniteRing, generators, side: str) -> int:
    acc = 1
    for g in generators:
        acc |= _principal_mask(R, int(g), side)
    return additive_closure(R, acc)


def greedy_generators(R: FiniteRing, mask: int, side: str) -> tuple[int, ...]:
    """Generators chosen smallest-index-first until they span ``mask``."""
    gens: list[int] = []
    span = 1
    for x in members(mask):
        if not span >> x & 1:
            gens.append(x)
            span = additive_closure(R, span | _principal_mask(R, x, side))
    return tuple(gens)


def make_ideal(R: FiniteRing, mask: int, side: str, generators=None) -> IdealSet:
    if side not in SIDES:
        raise ValueError(f"unknown side {side!r}")
    if generators is None:
        generators = greedy_generators(R, mask, side)
    return IdealSet(R, tuple(members(mask)), side, tuple(int(g) for g in generators))


def generated_ideal(R: FiniteRing, generators, side: str) -> IdealSet:
    gens = tuple(int(g) for g in generators)
    return make_ideal(R, generated_mask(R, gens, side), side, gens)


def is_closed(R: FiniteRing, mask: int, side: str) -> bool:
    """True when ``mask`` is an additive subgroup closed under ``side`` multiplication."""
    idx = np.array(members(mask), dtype=np.int64)
    if idx.size == 0 or idx[0] != 0:
        return False
    inside = np.zeros(R.size, dtype=bool)
    inside[idx] = True
    if not inside[R.add[np.ix_(idx, idx)]].all():
        return False
    if side in (RIGHT, TWO_SIDED) and not inside[R.mul[idx, :]].all():
        return False
    if side in (LEFT, TWO_SIDED) and not inside[R.mul[:, idx]].all():
        return False
    return True


def principal_right_ideal(R: FiniteRing, a: int) -> IdealSet:
    return make_ideal(R, R.right_masks[a], RIGHT, (a,))


def principal_left_ideal(R: FiniteRing, a: int) -> IdealSet:
    return make_ideal(R, R.left_masks[a], LEFT, (a,))


def ideal_sum(I: IdealSet, K: IdealSet) -> IdealSet:
    _check_compatible(I, K)
    R = I.ring
    sums = R.add[np.ix_(np.array(I.elements), np.array(K.elements))]
    return make_ideal(R, to_mask(_flags(R, sums.ravel())), I.side, I.generators + K.generators)


def ideal_intersection(I: IdealSet, K: IdealSet) -> IdealSet:
    _check_compatible(I, K)
    return make_ideal(I.ring, I.mask & K.mask, I.side)


def _check_compatible(I: IdealSet, K: IdealSet) -> None:
    if I.side != K.side:
        raise SideMismatch(f"cannot combine a {I.side} ideal with a {K.side} ideal")
    if I.ring is not K.ring:
        raise SideMismatch("ideals belong to different rings")


def left_annihilator(R: FiniteRing, a: int) -> IdealSet:
    """l(a) = {x : xa = 0}, a left ideal."""
    return make_ideal(R, R.left_ann_masks[a], LEFT)


def right_annihilator(R: FiniteRing, a: int) -> IdealSet:
    """r(a) = {x : ax = 0}, a right ideal."""
    return make_ideal(R, R.right_ann_masks[a], RIGHT)


# -- units and idempotents ---------------------------------------------------


def unit_flags(R: FiniteRing) -> np.ndarray:
    return R.memo("unit_flags", lambda: _unit_data(R)[0])


def inverse_table(R: FiniteRing) -> np.ndarray:
    """inverse_table(R)[u] is u^-1 for units and -1 elsewhere."""
    return R.memo("inverse_table", lambda: _unit_data(R)[1])


def _unit_data(R: FiniteRing):
    is_one = R.mul == R.one
    has_right_inv = is_one.any(axis=1)
    has_left_inv = is_one.any(axis=0)
    if not np.array_equal(has_right_inv, has_left_inv):
        u = int(np.nonzero(has_right_inv != has_left_inv)[0][0])
        raise InvariantViolation(f"element {u} has a one-sided inverse only")
    inv = np.full(R.size, -1, dtype=np.int64)
    for u in np.nonzero(has_right_inv)[0]:
        v = int(np.argmax(is_one[u]))
        if R.mul[v, u] != R.one:
            raise InvariantViolation(f"right inverse {v} of {u} is not a left inverse")
        inv[u] = v
    has_right_inv.setflags(write=False)
    return has_right_inv, inv


def units(R: FiniteRing) -> frozenset[int]:
    return frozenset(int(u) for u in np.nonzero(unit_flags(R))[0])


def is_unit(R: FiniteRing, x: int) -> bool:
    return bool(unit_flags(R)[x])


def idempotent_flags(R: FiniteRing) -> np.ndarray:
    return R.memo("idempotent_flags", lambda: np.diagonal(R.mul) == np.arange(R.size))


def idempotents(R: FiniteRing) -> frozenset[int]:
    return frozenset(int(e) for e in np.nonzero(idempotent_flags(R))[0])


# -- radical and quotients ---------------------------------------------------


def radical_mask(R: FiniteRing) -> int:
    def compute():
        unit = unit_flags(R)
        # one_minus[r, x] = 1 - r*x
        one_minus = R.add[R.one][R.neg[R.mul]]
        left_scan = unit[one_minus].all(axis=0)
        right_scan = unit[one_minus].all(axis=1)
        if not np.array_equal(left_scan, right_scan):
            x = int(np.nonzero(left_scan != right_scan)[0][0])
            raise InvariantViolation(f"quasi-regularity scans disagree at {x}")
        return to_mask(left_scan)

    return R.memo("radical_mask", compute)


def jacobson_radical(R: FiniteRing) -> IdealSet:
    """J(R) as the set of x with 1 - rx a unit for every r (checked on both sides)."""
    return make_ideal(R, radical_mask(R), TWO_SIDED)


def quotient_ring(R: FiniteRing, I: IdealSet, label: str | None = None):
    """Ring of additive cosets of a two-sided ideal and the projection map.

    Cosets are indexed in order of their minimal representative.
    """
    if not is_closed(R, I.mask, TWO_SIDED):
        raise NotTwoSided(f"{I.side} ideal {list(I.elements)[:8]}... is not two-sided")
    ideal = np.array(I.elements, dtype=np.int64)
    coset_min = R.add[:, ideal].min(axis=1)
    reps = np.unique(coset_min)
    index = np.full(R.size, -1, dtype=np.int64)
    index[reps] = np.arange(reps.size)
    proj = index[coset_min]
    add = proj[R.add[np.ix_(reps, reps)]]
    mul = proj[R.mul[np.ix_(reps, reps)]]
    from .spec import quotient_label

    Q = FiniteRing(add, mul, int(proj[R.one]), label or quotient_label(R.label, I.generators))
    proj.setflags(write=False)
    return Q, proj


def radical_quotient(R: FiniteRing):
    """(R/J(R), projection), memoized."""
    return R.memo(
        "radical_quotient",
        lambda: quotient_ring(R, jacobson_radical(R), label=f"{R.label}/J"),
    )


def regular_witness(R: FiniteRing, a: int) -> int | None:
    """Smallest x with axa = a, or None when a is not von Neumann regular."""
    hits = np.nonzero(R.mul[R.mul[a, :], a] == a)[0]
    if hits.size == 0:
        return None
    x = int(hits[0])
    e = int(R.mul[a, x])
    if R.mul[e, e] != e or R.right_masks[e] != R.right_masks[a]:
        raise InvariantViolation(f"a*x for regular witness ({a}, {x}) is not an idempotent generator of aR")
    return x


def regular_flags(R: FiniteRing) -> np.ndarray:
    def compute():
        # axa == a for some x
        axa = R.mul[R.mul, np.arange(R.size)[:, None]]
        return (axa == np.arange(R.size)[:, None]).any(axis=1)

    return R.memo("regular_flags", compute)
