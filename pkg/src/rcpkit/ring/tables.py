"""Finite rings stored as explicit Cayley tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from ..errors import InvalidTable

FULL_ANALYSIS_CAP = 512
ARITHMETIC_CAP = 65536


def to_mask(flags: np.ndarray) -> int:
    """Pack a boolean vector into a Python int bitset (bit i <-> element i)."""
    packed = np.packbits(np.asarray(flags, dtype=bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << int(i)
    return m


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """A unital associative ring on elements ``0..n-1`` with zero at index 0.

    Instances are immutable; derived data (units, masks, radical...) is
    memoized per instance through :meth:`memo`.
    """

    add: np.ndarray
    mul: np.ndarray
    one: int
    label: str = "table"
    zero: int = field(default=0, init=False)
    size: int = field(init=False)
    neg: np.ndarray = field(init=False, repr=False)
    _cache: dict = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        add = np.array(self.add, dtype=np.int64)
        mul = np.array(self.mul, dtype=np.int64)
        n = add.shape[0]
        neg = np.argmax(add == 0, axis=1)
        for arr in (add, mul, neg):
            arr.setflags(write=False)
        object.__setattr__(self, "add", add)
        object.__setattr__(self, "mul", mul)
        object.__setattr__(self, "one", int(self.one))
        object.__setattr__(self, "size", int(n))
        object.__setattr__(self, "neg", neg)

    def __repr__(self) -> str:
        return f"FiniteRing({self.label!r}, size={self.size})"

    def memo(self, key: str, compute: Callable[[], Any]) -> Any:
        try:
            return self._cache[key]
        except KeyError:
            value = self._cache[key] = compute()
            return value

    @property
    def elements(self) -> range:
        return range(self.size)

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def sub(self, x: int, y: int) -> int:
        return int(self.add[x, self.neg[y]])

    def one_minus(self, x: int) -> int:
        return int(self.add[self.one, self.neg[x]])

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    # -- element-indexed tables shared by the analysis modules --------------

    @property
    def right_masks(self) -> list[int]:
        """Bitset of the principal right ideal aR, for every a."""
        return self.memo("right_masks", lambda: _row_masks(self.mul, self.size))

    @property
    def left_masks(self) -> list[int]:
        """Bitset of the principal left ideal Ra, for every a."""
        return self.memo("left_masks", lambda: _row_masks(self.mul.T, self.size))

    @property
    def left_ann_masks(self) -> list[int]:
        """Bitset of l(a) = {x : xa = 0}, for every a."""
        return self.memo(
            "left_ann_masks",
            lambda: [to_mask(self.mul[:, a] == 0) for a in self.elements],
        )

    @property
    def right_ann_masks(self) -> list[int]:
        """Bitset of r(a) = {x : ax = 0}, for every a."""
        return self.memo(
            "right_ann_masks",
            lambda: [to_mask(self.mul[a, :] == 0) for a in self.elements],
        )


def _row_masks(table: np.ndarray, n: int) -> list[int]:
    out = []
    for a in range(n):
        flags = np.zeros(n, dtype=bool)
        flags[table[a]] = True
        out.append(to_mask(flags))
    return out


def validate_tables(add, mul, one: int) -> None:
    """Raise :class:`InvalidTable` unless ``(add, mul, one)`` is a unital ring
    with zero at index 0. Failures carry a witnessing element tuple."""
    add = np.asarray(add)
    mul = np.asarray(mul)
    if add.ndim != 2 or add.shape[0] != add.shape[1] or add.shape != mul.shape:
        raise InvalidTable(f"tables must be square and equal-shaped, got {add.shape} and {mul.shape}")
    n = add.shape[0]
    if n == 0:
        raise InvalidTable("empty ring")
    if add.min() < 0 or add.max() >= n or mul.min() < 0 or mul.max() >= n:
        raise InvalidTable("table entry out of range")
    if not 0 <= one < n:
        raise InvalidTable(f"identity index {one} out of range")
    idx = np.arange(n)

    bad = np.nonzero(add[0] != idx)[0]
    if bad.size:
        raise InvalidTable(f"element 0 is not an additive identity: 0+{bad[0]} != {bad[0]}", (0, int(bad[0])))
    bad = np.argwhere(add != add.T)
    if bad.size:
        x, y = map(int, bad[0])
        raise InvalidTable(f"addition not commutative at ({x}, {y})", (x, y))
    has_neg = (add == 0).any(axis=1)
    if not has_neg.all():
        x = int(np.nonzero(~has_neg)[0][0])
        raise InvalidTable(f"element {x} has no additive inverse", (x,))
    bad = np.nonzero(mul[one] != idx)[0]
    if bad.size:
        raise InvalidTable(f"{one} is not a left identity at {bad[0]}", (one, int(bad[0])))
    bad = np.nonzero(mul[:, one] != idx)[0]
    if bad.size:
        raise InvalidTable(f"{one} is not a right identity at {bad[0]}", (int(bad[0]), one))
    if n > 1 and one == 0:
        raise InvalidTable("zero equals one in a ring with more than one element")

    for x in range(n):
        checks = (
            ("addition not associative", add[add[x]], add[x][add]),
            ("multiplication not associative", mul[mul[x]], mul[x][mul]),
            ("left distributivity fails", mul[x][add], add[mul[x][:, None], mul[x][None, :]]),
            ("right distributivity fails", mul[add, x], add[mul[:, x][:, None], mul[:, x][None, :]]),
        )
        for what, lhs, rhs in checks:
            bad = np.argwhere(lhs != rhs)
            if bad.size:
                y, z = map(int, bad[0])
                raise InvalidTable(f"{what} at triple ({x}, {y}, {z})", (x, y, z))
