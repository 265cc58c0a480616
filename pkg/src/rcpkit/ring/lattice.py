"""Complete one-sided ideal lattices and the continuity conditions on _R R.

Every one-sided ideal of a finite ring is a finite sum of principal ones, so
closing the principal ideals under pairwise sums enumerates the lattice.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import IdealEnumerationCapExceeded, InvariantViolation
from .ideals import LEFT, RIGHT, idempotent_flags
from .tables import FiniteRing, members, to_mask

IDEAL_CAP = 4096


def mask_sum(R: FiniteRing, m1: int, m2: int) -> int:
    flags = np.zeros(R.size, dtype=bool)
    flags[R.add[np.ix_(members(m1), members(m2))]] = True
    return to_mask(flags)


def sort_key(mask: int) -> tuple[int, ...]:
    return tuple(members(mask))


def enumerate_ideals(R: FiniteRing, side: str, cap: int = IDEAL_CAP) -> list[int]:
    """All ``side`` ideals of R as bitmasks, sorted by their element tuples."""

    def compute():
        principal = R.right_masks if side == RIGHT else R.left_masks
        gens = sorted(set(principal))
        found = {1}
        frontier = [1]
        while frontier:
            nxt = []
            for ideal in frontier:
                for p in gens:
                    if p & ~ideal == 0:
                        continue
                    s = mask_sum(R, ideal, p)
                    if s not in found:
                        found.add(s)
                        if len(found) > cap:
                            raise IdealEnumerationCapExceeded(cap, side)
                        nxt.append(s)
            frontier = nxt
        return sorted(found, key=sort_key)

    if side not in (LEFT, RIGHT):
        raise ValueError("lattice enumeration is one-sided only")
    return R.memo(f"ideals:{side}:{cap}", compute)


def maximal_ideals(R: FiniteRing, side: str, cap: int = IDEAL_CAP) -> list[int]:
    full = R.full_mask
    proper = [m for m in enumerate_ideals(R, side, cap) if m != full]
    return [m for m in proper if not any(o != m and m & ~o == 0 for o in proper)]


def left_summands(R: FiniteRing) -> dict[int, int]:
    """Direct summands Re of _R R, mapped to their smallest idempotent generator."""

    def compute():
        out: dict[int, int] = {}
        for e in np.nonzero(idempotent_flags(R))[0]:
            out.setdefault(R.left_masks[int(e)], int(e))
        return dict(sorted(out.items(), key=lambda kv: sort_key(kv[0])))

    return R.memo("left_summands", compute)


def is_essential_in(R: FiniteRing, inner: int, outer: int) -> bool:
    """inner <= outer is essential: every nonzero cyclic Rx inside outer meets inner."""
    if inner & ~outer:
        return False
    return all(R.left_masks[x] & inner != 1 for x in members(outer & ~1))


def left_iso_to_summand(R: FiniteRing, ideal: int, e: int) -> int | None:
    """An element y giving an isomorphism Re -> ideal, z -> zy, or None.

    Maps Re -> M correspond to y in M with ey = y; such a map is onto
    ``ideal`` exactly when Ry = ideal, and then bijective when sizes agree.
    """
    summand = R.left_masks[e]
    if summand.bit_count() != ideal.bit_count():
        return None
    for y in members(ideal):
        if R.mul[e, y] == y and R.left_masks[y] == ideal:
            _check_module_iso(R, summand, y, ideal)
            return y
    return None


def _check_module_iso(R: FiniteRing, summand: int, y: int, ideal: int) -> None:
    dom = np.array(members(summand))
    image = R.mul[dom, y]
    phi = np.full(R.size, -1, dtype=np.int64)
    phi[dom] = image
    additive = (phi[R.add[np.ix_(dom, dom)]] == R.add[image[:, None], image[None, :]]).all()
    linear = (phi[R.mul[:, dom]] == R.mul[:, image]).all()
    onto = to_mask(np.isin(np.arange(R.size), image)) == ideal
    injective = np.unique(image).size == dom.size
    if not (additive and linear and onto and injective):
        raise InvariantViolation(f"z -> z*{y} is not a module isomorphism onto the ideal")


@dataclass
class ContinuityReport:
    """C1/C2/C3 for the left module _R R, with counterexamples when they fail."""

    c1: bool
    c2: bool
    c3: bool
    ideal_count: int
    summand_count: int
    witnesses: dict = field(default_factory=dict)

    @property
    def continuous(self) -> bool:
        return self.c1 and self.c2


def continuity(R: FiniteRing, cap: int = IDEAL_CAP) -> ContinuityReport:
    def compute():
        ideals = enumerate_ideals(R, LEFT, cap)
        summands = left_summands(R)
        witnesses: dict = {}

        c1 = True
        for ideal in ideals:
            if not any(is_essential_in(R, ideal, s) for s in summands):
                c1 = False
                witnesses["c1"] = {"ideal": members(ideal)}
                break

        c2 = True
        for ideal in ideals:
            if ideal in summands:
                continue
            for s, e in summands.items():
                y = left_iso_to_summand(R, ideal, e)
                if y is not None:
                    c2 = False
                    witnesses["c2"] = {"ideal": members(ideal), "summand_idempotent": e, "y": y}
                    break
            if not c2:
                break

        c3 = True
        items = list(summands)
        for i, k in enumerate(items):
            for l in items[i:]:
                if k & l == 1:
                    s = mask_sum(R, k, l)
                    if s not in summands:
                        c3 = False
                        witnesses["c3"] = {"K": members(k), "L": members(l)}
                        break
            if not c3:
                break
        return ContinuityReport(c1, c2, c3, len(ideals), len(summands), witnesses)

    return R.memo(f"continuity:{cap}", compute)


def continuity_by_annihilators(R: FiniteRing, cap: int = IDEAL_CAP) -> ContinuityReport:
    """C1/C2/C3 for _R R along routes independent of :func:`continuity`.

    C1: every closed left ideal (no proper essential extension) is a summand.
    C2: a left ideal is isomorphic to a summand iff it is Ry with l(y) a
    summand (then Ry = R/l(y) is isomorphic to the complement).
    C3: for idempotents e, f with Re & Rf = 0, some idempotent g has
    e, f in Rg and |Rg| = |Re| * |Rf|.
    """

    def compute():
        ideals = enumerate_ideals(R, LEFT, cap)
        summands = left_summands(R)
        witnesses: dict = {}

        c1 = True
        for ideal in ideals:
            closed = not any(o != ideal and is_essential_in(R, ideal, o) for o in ideals)
            if closed and ideal not in summands:
                c1 = False
                witnesses["c1"] = {"closed_ideal": members(ideal)}
                break

        c2 = True
        for ideal in ideals:
            if ideal in summands:
                continue
            y = next((y for y in members(ideal) if R.left_masks[y] == ideal and R.left_ann_masks[y] in summands), None)
            if y is not None:
                c2 = False
                witnesses["c2"] = {"ideal": members(ideal), "y": y}
                break

        c3 = True
        idem = list(summands.values())
        left = R.left_masks
        for i, e in enumerate(idem):
            for f in idem[i:]:
                if left[e] & left[f] != 1:
                    continue
                size = left[e].bit_count() * left[f].bit_count()
                need = (1 << e) | (1 << f)
                if not any(left[g] & need == need and left[g].bit_count() == size for g in idem):
                    c3 = False
                    witnesses["c3"] = {"e": e, "f": f}
                    break
            if not c3:
                break
        return ContinuityReport(c1, c2, c3, len(ideals), len(summands), witnesses)

    return R.memo(f"continuity_alt:{cap}", compute)
