"""The poset RCP(R) of right coprime pairs and the pairwise characterizations.

A right coprime pair <a,b> satisfies aR + bR = R; pairs with the same
principal right ideals are identified, and classes are ordered by
componentwise inclusion of those ideals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import IdealEnumerationCapExceeded, NotCoprime, SizeCapExceeded
from .ring.ideals import (
    RIGHT,
    IdealSet,
    idempotent_flags,
    make_ideal,
    radical_quotient,
    regular_flags,
)
from .ring.lattice import continuity, mask_sum, sort_key
from .ring.tables import FULL_ANALYSIS_CAP, FiniteRing


class Coprimality(NamedTuple):
    coprime: bool
    witness: tuple[int, int] | None

    def __bool__(self) -> bool:
        return self.coprime


@dataclass(frozen=True)
class CoprimePairClass:
    """An equivalence class <a,b>, identified by the ideal pair (aR, bR).

    ``generators`` holds the smallest-index generator of each ideal.
    """

    first: IdealSet
    second: IdealSet
    generators: tuple[int, int] = field(compare=False)

    @property
    def key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (self.first.elements, self.second.elements)

    def __le__(self, other: CoprimePairClass) -> bool:
        return self.first.mask & ~other.first.mask == 0 and self.second.mask & ~other.second.mask == 0

    def __lt__(self, other: CoprimePairClass) -> bool:
        return self <= other and self != other

    def __str__(self) -> str:
        a, b = self.generators
        return f"<{a},{b}>"


# -- principal right ideals --------------------------------------------------


class _Principal(NamedTuple):
    masks: list[int]  # distinct principal right ideals, sorted by element tuple
    ideal_of: list[int]  # element -> index into masks
    generator: list[int]  # smallest generator of each ideal
    coprime: np.ndarray  # coprime[i, j]: masks[i] + masks[j] == R


def _principal(R: FiniteRing) -> _Principal:
    def compute():
        masks = sorted(set(R.right_masks), key=sort_key)
        pos = {m: i for i, m in enumerate(masks)}
        ideal_of = [pos[m] for m in R.right_masks]
        generator = [-1] * len(masks)
        for x in reversed(range(R.size)):
            generator[ideal_of[x]] = x
        full = R.full_mask
        k = len(masks)
        coprime = np.zeros((k, k), dtype=bool)
        for i in range(k):
            for j in range(k):
                coprime[i, j] = mask_sum(R, masks[i], masks[j]) == full
        return _Principal(masks, ideal_of, generator, coprime)

    return R.memo("principal", compute)


def _ideal(R: FiniteRing, idx: int) -> IdealSet:
    p = _principal(R)
    return make_ideal(R, p.masks[idx], RIGHT, (p.generator[idx],))


def _class_from_ids(R: FiniteRing, i: int, j: int) -> CoprimePairClass:
    p = _principal(R)
    return CoprimePairClass(_ideal(R, i), _ideal(R, j), (p.generator[i], p.generator[j]))


def is_right_coprime(R: FiniteRing, a: int, b: int) -> Coprimality:
    """aR + bR = R, with the lexicographically first (r, s) solving ar + bs = 1."""
    p = _principal(R)
    if not p.coprime[p.ideal_of[a], p.ideal_of[b]]:
        return Coprimality(False, None)
    hits = np.argwhere(R.add[R.mul[a][:, None], R.mul[b][None, :]] == R.one)
    r, s = map(int, hits[0])
    return Coprimality(True, (r, s))


def pair_class(R: FiniteRing, a: int, b: int) -> CoprimePairClass:
    if not is_right_coprime(R, a, b):
        raise NotCoprime(f"<{a},{b}> is not a right coprime pair in {R.label}")
    p = _principal(R)
    return _class_from_ids(R, p.ideal_of[a], p.ideal_of[b])


# -- the poset ---------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class RcpPoset:
    ring: FiniteRing = field(repr=False)
    classes: tuple[CoprimePairClass, ...]
    leq: np.ndarray = field(repr=False)  # leq[i, j]: classes[i] <= classes[j]
    minimal: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.classes)

    def index(self, p: CoprimePairClass) -> int:
        return self._index[p.key]

    @property
    def _index(self) -> dict:
        return self.ring.memo("rcp_index", lambda: {c.key: i for i, c in enumerate(self.classes)})

    def below(self, i: int) -> list[int]:
        return [int(j) for j in np.nonzero(self.leq[:, i])[0]]

    def strictly_below(self, i: int) -> list[int]:
        return [j for j in self.below(i) if j != i]

    def covers(self) -> list[tuple[int, int]]:
        """Covering pairs (upper, lower) of the Hasse diagram."""
        strict = self.leq & ~np.eye(len(self.classes), dtype=bool)
        s = strict.astype(np.int64)
        cover = strict & ~((s @ s) > 0)
        return sorted((int(j), int(i)) for i, j in np.argwhere(cover))

    def to_dict(self) -> dict:
        return {
            "ring": self.ring.label,
            "size": self.ring.size,
            "classes": [
                {
                    "generators": list(c.generators),
                    "first_ideal": list(c.first.elements),
                    "second_ideal": list(c.second.elements),
                }
                for c in self.classes
            ],
            "leq": [[int(i), int(j)] for i, j in np.argwhere(self.leq)],
            "minimal": list(self.minimal),
        }

    def to_dot(self) -> str:
        lines = ["digraph rcp {", "  rankdir=TB;"]
        minimal = set(self.minimal)
        for i, c in enumerate(self.classes):
            a, b = c.generators
            shape = "doublecircle" if i in minimal else "circle"
            label = f"⟨{a},{b}⟩ |aR|={len(c.first)} |bR|={len(c.second)}"
            lines.append(f'  c{i} [label="{label}", shape={shape}];')
        for upper, lower in self.covers():
            lines.append(f"  c{upper} -> c{lower};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def enumerate_rcp(R: FiniteRing, cap: int = FULL_ANALYSIS_CAP) -> RcpPoset:
    if R.size > cap:
        raise SizeCapExceeded(R.size, cap)

    def compute():
        p = _principal(R)
        ids = [(i, j) for i, j in np.argwhere(p.coprime)]
        ids.sort(key=lambda ij: (sort_key(p.masks[ij[0]]), sort_key(p.masks[ij[1]])))
        classes = tuple(_class_from_ids(R, int(i), int(j)) for i, j in ids)
        first = np.array([[p.masks[i] & ~p.masks[k] == 0 for k, _ in ids] for i, _ in ids], dtype=bool)
        second = np.array([[p.masks[j] & ~p.masks[l] == 0 for _, l in ids] for _, j in ids], dtype=bool)
        leq = first & second
        leq.setflags(write=False)
        strict = leq & ~np.eye(len(ids), dtype=bool)
        minimal = tuple(int(i) for i in range(len(ids)) if not strict[:, i].any())
        return RcpPoset(R, classes, leq, minimal)

    return R.memo("rcp_poset", compute)


# -- minimality --------------------------------------------------------------


@dataclass
class RouteReport:
    """Value of a property computed along several independent routes."""

    routes: dict[str, bool]
    witnesses: dict = field(default_factory=dict)
    skipped: dict[str, str] = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return len(set(self.routes.values())) <= 1

    @property
    def value(self) -> bool | None:
        """First route's value; None when every route was skipped."""
        return next(iter(self.routes.values()), None)

    def __bool__(self) -> bool:
        return bool(self.value)

    def to_dict(self) -> dict:
        out = {"value": self.value, "agree": self.agree, "routes": dict(self.routes), "witnesses": self.witnesses}
        if self.skipped:
            out["skipped"] = dict(self.skipped)
        return out


def is_minimal(R: FiniteRing, p: CoprimePairClass) -> RouteReport:
    """Minimality of a class by the poset, idempotent and orthogonality routes."""
    poset = enumerate_rcp(R)
    i = poset.index(p)
    witnesses: dict = {}

    below = poset.strictly_below(i)
    poset_route = not below
    if below:
        witnesses["strictly_below"] = list(poset.classes[below[0]].generators)

    idem_route = False
    for e in np.nonzero(idempotent_flags(R))[0]:
        e = int(e)
        if R.right_masks[e] == p.first.mask and R.right_masks[R.one_minus(e)] == p.second.mask:
            idem_route = True
            witnesses["idempotent"] = e
            break

    orth = orthogonal_witness(R, *p.generators)
    if orth is not None:
        witnesses["orthogonal_rs"] = list(orth)

    return RouteReport(
        {"poset": poset_route, "idempotent": idem_route, "orthogonal": orth is not None},
        witnesses,
    )


def orthogonal_witness(R: FiniteRing, a: int, b: int) -> tuple[int, int] | None:
    """First (r, s) with a = ara, b = bsb and ar*bs = bs*ar = 0."""
    rs = np.nonzero(R.mul[R.mul[a, :], a] == a)[0]
    ss = np.nonzero(R.mul[R.mul[b, :], b] == b)[0]
    if rs.size == 0 or ss.size == 0:
        return None
    f = R.mul[a, rs][:, None]
    g = R.mul[b, ss][None, :]
    ok = (R.mul[f, g] == 0) & (R.mul[g, f] == 0)
    hits = np.argwhere(ok)
    if hits.size == 0:
        return None
    i, j = hits[0]
    return int(rs[i]), int(ss[j])


def minimal_below(R: FiniteRing, p: CoprimePairClass) -> CoprimePairClass | None:
    """Smallest-key minimal class below ``p`` (classes are stored in key order)."""
    poset = enumerate_rcp(R)
    i = poset.index(p)
    minimal = set(poset.minimal)
    for j in poset.below(i):
        if j in minimal:
            return poset.classes[j]
    return None


# -- equivalent forms of coprimality for a single pair -----------------------


@dataclass
class CoprimalityReport:
    """Independent evaluations of the equivalent forms of coprimality for (a, b).

    c1 ideal sum; c4 annihilator + direct-summand projector with rows in
    R(a,b); c5 annihilator + idempotent [[ra,rb],[sa,sb]] fixing (a,b);
    c6 annihilator + idempotent matrix with r(r) & r(s) = 0; c7 coprimality
    in R/J(R); c8 l(a) & l(b) = 0 alone.
    """

    a: int
    b: int
    c1: bool
    c4: bool
    c5: bool
    c6: bool
    c7: bool
    c8: bool
    c8_sufficient: bool  # R is vN regular, or _R R has (C3) and a, b are idempotent
    witnesses: dict = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        equal = self.c1 == self.c4 == self.c5 == self.c6 == self.c7
        implied = self.c8 or not self.c1
        converse = self.c1 or not (self.c8 and self.c8_sufficient)
        return equal and implied and converse

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            **{f"c{i}": getattr(self, f"c{i}") for i in (1, 4, 5, 6, 7, 8)},
            "c8_sufficient": self.c8_sufficient,
            "agree": self.agree,
            "witnesses": self.witnesses,
        }


def _matrix_checks(R: FiniteRing, a: int, b: int, m11, m12, m21, m22):
    """Grids of (idempotent, fixes (a,b)) for M = [[m11, m12], [m21, m22]].

    m11, m12 vary along axis 0 and m21, m22 along axis 1.
    """
    add, mul = R.add, R.mul
    idem = (
        (add[mul[m11, m11], mul[m12, m21]] == m11)
        & (add[mul[m11, m12], mul[m12, m22]] == m12)
        & (add[mul[m21, m11], mul[m22, m21]] == m21)
        & (add[mul[m21, m12], mul[m22, m22]] == m22)
    )
    fixes = (add[mul[a, m11], mul[b, m21]] == a) & (add[mul[a, m12], mul[b, m22]] == b)
    return idem, fixes


def _first(grid: np.ndarray) -> tuple[int, int] | None:
    hits = np.argwhere(grid)
    if hits.size == 0:
        return None
    return int(hits[0][0]), int(hits[0][1])


def _right_ann_disjoint(R: FiniteRing) -> np.ndarray:
    def compute():
        z = (R.mul[:, 1:] == 0).astype(np.int64)
        return (z @ z.T) == 0

    return R.memo("right_ann_disjoint", compute)


def c8_sufficient(R: FiniteRing, a: int, b: int) -> bool:
    if is_vn_regular_ring(R):
        return True
    flags = idempotent_flags(R)
    if not (flags[a] and flags[b]):
        return False
    try:
        return continuity(R).c3
    except IdealEnumerationCapExceeded:
        return False


def is_vn_regular_ring(R: FiniteRing) -> bool:
    return bool(regular_flags(R).all())


def coprimality_suite(R: FiniteRing, a: int, b: int) -> CoprimalityReport:
    witnesses: dict = {}
    c1 = is_right_coprime(R, a, b)
    if c1:
        witnesses["c1"] = {"r": c1.witness[0], "s": c1.witness[1]}

    ann_zero = R.left_ann_masks[a] & R.left_ann_masks[b] == 1

    c4 = False
    if ann_zero:
        # rows of a projector onto R(a,b) must themselves lie in R(a,b)
        codes = np.unique(R.mul[:, a] * R.size + R.mul[:, b])
        u, v = codes // R.size, codes % R.size
        idem, fixes = _matrix_checks(R, a, b, u[:, None], v[:, None], u[None, :], v[None, :])
        hit = _first(idem & fixes)
        if hit is not None:
            i, j = hit
            c4 = True
            witnesses["c4"] = {"matrix": [[int(u[i]), int(v[i])], [int(u[j]), int(v[j])]]}

    m11, m12 = R.mul[:, a][:, None], R.mul[:, b][:, None]
    m21, m22 = R.mul[:, a][None, :], R.mul[:, b][None, :]
    idem = fixes = None

    c5 = False
    if ann_zero:
        idem, fixes = _matrix_checks(R, a, b, m11, m12, m21, m22)
        hit = _first(idem & fixes)
        if hit is not None:
            r, s = hit
            c5 = True
            witnesses["c5"] = {
                "r": r,
                "s": s,
                "matrix": [[int(R.mul[r, a]), int(R.mul[r, b])], [int(R.mul[s, a]), int(R.mul[s, b])]],
                # M is idempotent, so (a, b) lies in its image iff (a, b)M = (a, b)
                "x0": a,
                "y0": b,
            }

    c6 = False
    if ann_zero:
        hit = _first(idem & _right_ann_disjoint(R))
        if hit is not None:
            c6 = True
            witnesses["c6"] = {"r": hit[0], "s": hit[1]}

    Q, proj = radical_quotient(R)
    c7 = bool(is_right_coprime(Q, int(proj[a]), int(proj[b])))

    return CoprimalityReport(
        a, b, bool(c1), c4, c5, c6, c7, bool(ann_zero), c8_sufficient(R, a, b), witnesses
    )
