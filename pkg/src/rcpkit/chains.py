"""Descending chains of coprime-pair classes with explicit scalar witnesses.

A chain p0 >= p1 >= ... >= pk is compatible when generators (a_i, b_i) and
scalars r_ij, s_ij exist with a_j = a_i r_ij, b_j = b_i s_ij and
r_ik = r_ij r_jk (same for s). For finite chains the composites of the
consecutive step witnesses always give such a family.

A finite downward-directed system of classes has a least element, so
compatible descending systems reduce to their minimum; only chains are
modelled here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from .errors import InvariantViolation, NotDescending, NotVonNeumannRegular, SizeCapExceeded
from .rcp import CoprimePairClass, RcpPoset, RouteReport, enumerate_rcp, is_vn_regular_ring, minimal_below
from .ring.ideals import idempotent_flags
from .ring.lattice import mask_sum
from .ring.tables import FULL_ANALYSIS_CAP, FiniteRing


@dataclass
class WitnessedChain:
    ring: FiniteRing = field(repr=False)
    pairs: tuple[CoprimePairClass, ...]
    generators: tuple[tuple[int, int], ...]
    step_r: tuple[int, ...]
    step_s: tuple[int, ...]
    r: dict[tuple[int, int], int] = field(repr=False)
    s: dict[tuple[int, int], int] = field(repr=False)
    compatible: bool = True

    def __len__(self) -> int:
        return len(self.pairs)

    def check(self) -> None:
        """Verify the factorization and cocycle identities for every i < j < k."""
        mul = self.ring.mul
        k = len(self.pairs)
        if k < 2:
            return
        gens = np.array(self.generators, dtype=np.int64)
        i, j = np.triu_indices(k, 1)
        upper = np.triu(np.ones((k, k), dtype=bool), 1)
        triple = upper[:, :, None] & upper[None, :, :]
        for name, col, table in (("r", 0, self.r), ("s", 1, self.s)):
            w = np.zeros((k, k), dtype=np.int64)
            for (p, q), v in table.items():
                w[p, q] = v
            bad = mul[gens[i, col], w[i, j]] != gens[j, col]
            if bad.any():
                n = int(np.argmax(bad))
                raise InvariantViolation(f"{name} witness identity fails for chain positions {i[n]} < {j[n]}")
            bad = triple & (mul[w[:, :, None], w[None, :, :]] != w[:, None, :])
            if bad.any():
                a, b, c = (int(t[0]) for t in np.nonzero(bad))
                raise InvariantViolation(f"{name} cocycle identity fails at {a} < {b} < {c}")

    def to_dict(self) -> dict:
        return {
            "pairs": [list(g) for g in self.generators],
            "step_witnesses": [{"r": r, "s": s} for r, s in zip(self.step_r, self.step_s)],
            "composite_witnesses": [
                {"i": i, "j": j, "r": self.r[i, j], "s": self.s[i, j]} for (i, j) in sorted(self.r)
            ],
            "compatible": self.compatible,
        }


def check_descending(pairs) -> None:
    for i in range(1, len(pairs)):
        if not pairs[i] <= pairs[i - 1]:
            raise NotDescending(i)


def _step(R: FiniteRing, x: int, y: int) -> int | None:
    """Some t with x t = y; the identity when x == y, else the smallest."""
    if x == y:
        return R.one
    hits = np.nonzero(R.mul[x] == y)[0]
    return int(hits[0]) if hits.size else None


def _assemble(R, pairs, generators, step_r, step_s) -> WitnessedChain:
    mul = R.mul
    k = len(pairs)
    r: dict[tuple[int, int], int] = {}
    s: dict[tuple[int, int], int] = {}
    for i in range(k):
        for j in range(i + 1, k):
            r[i, j] = step_r[i] if j == i + 1 else int(mul[r[i, j - 1], step_r[j - 1]])
            s[i, j] = step_s[i] if j == i + 1 else int(mul[s[i, j - 1], step_s[j - 1]])
    chain = WitnessedChain(R, tuple(pairs), tuple(generators), tuple(step_r), tuple(step_s), r, s)
    chain.check()
    return chain


def witness_chain(R: FiniteRing, pairs) -> WitnessedChain:
    """Canonical generators plus consecutive step witnesses and their composites."""
    pairs = tuple(pairs)
    check_descending(pairs)
    generators = [p.generators for p in pairs]
    step_r, step_s = [], []
    for i in range(len(pairs) - 1):
        (a0, b0), (a1, b1) = generators[i], generators[i + 1]
        r, s = _step(R, a0, a1), _step(R, b0, b1)
        if r is None or s is None:
            # a1 lies in a0 R whenever the chain descends, so this cannot happen
            raise InvariantViolation(f"no step witness between positions {i} and {i + 1}")
        step_r.append(r)
        step_s.append(s)
    return _assemble(R, pairs, generators, step_r, step_s)


def idempotent_witness_chain(R: FiniteRing, pairs) -> WitnessedChain | None:
    """Witness family r_ij = a_j, s_ij = b_j over idempotent generators.

    Available when every class in the chain is regular; returns None otherwise.
    """
    pairs = tuple(pairs)
    check_descending(pairs)
    idem = [int(e) for e in np.nonzero(idempotent_flags(R))[0]]
    generators = []
    for p in pairs:
        e = next((e for e in idem if R.right_masks[e] == p.first.mask), None)
        f = next((f for f in idem if R.right_masks[f] == p.second.mask), None)
        if e is None or f is None:
            return None
        generators.append((e, f))
    k = len(pairs)
    r = {(i, j): generators[j][0] for i in range(k) for j in range(i + 1, k)}
    s = {(i, j): generators[j][1] for i in range(k) for j in range(i + 1, k)}
    chain = WitnessedChain(
        R,
        pairs,
        tuple(generators),
        tuple(generators[j][0] for j in range(1, k)),
        tuple(generators[j][1] for j in range(1, k)),
        r,
        s,
    )
    chain.check()
    return chain


# -- lower bounds ------------------------------------------------------------


def _intersections(chain: WitnessedChain) -> tuple[int, int]:
    first = reduce(lambda m, p: m & p.first.mask, chain.pairs, chain.ring.full_mask)
    second = reduce(lambda m, p: m & p.second.mask, chain.pairs, chain.ring.full_mask)
    return first, second


def meet_criterion(chain: WitnessedChain) -> bool:
    """(meet of the a_i R) + (meet of the b_i R) = R."""
    first, second = _intersections(chain)
    return mask_sum(chain.ring, first, second) == chain.ring.full_mask


def lower_bounds(chain: WitnessedChain) -> list[CoprimePairClass]:
    """All classes below every member of the chain, in poset order.

    Cross-checked against: a lower bound exists iff (meet of the aR) +
    (meet of the bR) = R.
    """
    poset = enumerate_rcp(chain.ring)
    out = [q for q in poset.classes if all(q <= p for p in chain.pairs)]
    if meet_criterion(chain) != bool(out):
        raise InvariantViolation("lower-bound existence disagrees with the ideal-intersection criterion")
    return out


def minimal_lower_bound(chain: WitnessedChain) -> CoprimePairClass | None:
    R = chain.ring
    poset = enumerate_rcp(R)
    minimal = {poset.classes[i].key for i in poset.minimal}
    found = next((q for q in lower_bounds(chain) if q.key in minimal), None)
    expected = minimal_below(R, chain.pairs[-1]) if chain.pairs else None
    if found != expected:
        raise InvariantViolation("minimal lower bound differs from the minimal class below the last pair")
    return found


def _left_ideal_sum(R: FiniteRing, masks) -> int:
    return reduce(lambda acc, m: mask_sum(R, acc, m), masks, 1)


def annihilator_lower_bound_criterion(chain: WitnessedChain) -> tuple[bool, tuple[int, int] | None]:
    """Over a von Neumann regular ring: is there (a, b) with l(a) & l(b) = 0 and
    sum_i l(a_i) <= l(a), sum_i l(b_i) <= l(b)?  Returns the first such pair.
    """
    R = chain.ring
    if not is_vn_regular_ring(R):
        raise NotVonNeumannRegular(f"{R.label} is not von Neumann regular")
    lann = R.left_ann_masks
    sum_a = _left_ideal_sum(R, (lann[a] for a, _ in chain.generators))
    sum_b = _left_ideal_sum(R, (lann[b] for _, b in chain.generators))
    cand_a = [x for x in R.elements if sum_a & ~lann[x] == 0]
    cand_b = [y for y in R.elements if sum_b & ~lann[y] == 0]
    # group by annihilator so each distinct pair of left ideals is tested once
    first_b: dict[int, int] = {}
    for y in cand_b:
        first_b.setdefault(lann[y], y)
    witness = None
    for x in cand_a:
        ys = [y for m, y in first_b.items() if lann[x] & m == 1]
        if ys:
            witness = (x, min(ys))
            break
    if (witness is not None) != bool(lower_bounds(chain)):
        raise InvariantViolation("annihilator criterion disagrees with direct lower-bound computation")
    return witness is not None, witness


def chain_report(chain: WitnessedChain) -> dict:
    bounds = lower_bounds(chain)
    mlb = minimal_lower_bound(chain)
    out = chain.to_dict()
    out["lower_bounds"] = [list(q.generators) for q in bounds]
    out["minimal_lower_bound"] = list(mlb.generators) if mlb is not None else None
    return out


# -- chain sampling ----------------------------------------------------------


def descending_chains(poset: RcpPoset, max_len: int, strict: bool = False):
    """Every descending chain (as index tuples) of length 1..max_len."""

    def extend(chain):
        yield chain
        if len(chain) == max_len:
            return
        nxt = poset.strictly_below(chain[-1]) if strict else poset.below(chain[-1])
        for j in nxt:
            yield from extend(chain + (j,))

    for i in range(len(poset.classes)):
        yield from extend((i,))


def greedy_maximal_chain(poset: RcpPoset, start: int) -> tuple[int, ...]:
    """Follow the first covering step down from ``start`` until a minimal class."""
    lower = {}
    for upper, low in poset.covers():
        lower.setdefault(upper, low)
    chain = [start]
    while chain[-1] in lower:
        chain.append(lower[chain[-1]])
    return tuple(chain)


def chains_of_length(poset: RcpPoset, length: int):
    """Descending chains with exactly ``length`` members, lexicographically."""

    def extend(chain):
        if len(chain) == length:
            yield chain
            return
        for j in poset.below(chain[-1]):
            yield from extend(chain + (j,))

    for i in range(len(poset.classes)):
        yield from extend((i,))


def sample_chains(poset: RcpPoset, count: int = 1000, exhaustive_len: int = 3) -> list[tuple[int, ...]]:
    """All descending chains up to ``exhaustive_len``, the greedy maximal
    chains, then longer chains by increasing length until ``count`` distinct
    chains are held.  Repeated classes are allowed, so the supply never runs out.
    """
    seen = dict.fromkeys(descending_chains(poset, exhaustive_len))
    for i in range(len(poset.classes)):
        seen.setdefault(greedy_maximal_chain(poset, i))
    length = exhaustive_len
    while len(seen) < count and poset.classes:
        length += 1
        for chain in chains_of_length(poset, length):
            seen.setdefault(chain)
            if len(seen) >= count:
                break
    return list(seen)


def longest_strict_chain(poset: RcpPoset) -> int:
    order = sorted(range(len(poset.classes)), key=lambda i: len(poset.below(i)))
    depth = {}
    for i in order:
        depth[i] = 1 + max((depth[j] for j in poset.strictly_below(i)), default=0)
    return max(depth.values(), default=0)


def is_strongly_exchange_finite(R: FiniteRing, cap: int = FULL_ANALYSIS_CAP, audit_len: int = 4) -> RouteReport:
    """Strong exchange property of a finite ring.

    Chains in a finite poset stabilize at their last member, so the property
    reduces to: every class has a minimal class below it.  The audit route
    walks every strictly descending chain up to ``audit_len`` plus the greedy
    maximal chains and asks each for a minimal lower bound.
    """
    if R.size > cap:
        raise SizeCapExceeded(R.size, cap)
    poset = enumerate_rcp(R, cap)
    classes = poset.classes
    missing = [i for i in range(len(classes)) if minimal_below(R, classes[i]) is None]

    chains = dict.fromkeys(descending_chains(poset, audit_len, strict=True))
    for i in range(len(classes)):
        chains.setdefault(greedy_maximal_chain(poset, i))
    failed = None
    for idx in chains:
        wc = witness_chain(R, [classes[i] for i in idx])
        if minimal_lower_bound(wc) is None:
            failed = [list(classes[i].generators) for i in idx]
            break
    longest = longest_strict_chain(poset)
    witnesses = {
        "chains_audited": len(chains),
        "longest_strict_chain": longest,
        "class_count": len(classes),
        "stabilized": longest <= len(classes),
    }
    if missing:
        witnesses["class_without_minimal_below"] = list(classes[missing[0]].generators)
    if failed:
        witnesses["chain_without_minimal_lower_bound"] = failed
    return RouteReport({"minimal_below_every_class": not missing, "chain_audit": failed is None}, witnesses)


__all__ = [
    "WitnessedChain",
    "annihilator_lower_bound_criterion",
    "chain_report",
    "chains_of_length",
    "descending_chains",
    "greedy_maximal_chain",
    "idempotent_witness_chain",
    "is_strongly_exchange_finite",
    "longest_strict_chain",
    "lower_bounds",
    "meet_criterion",
    "minimal_lower_bound",
    "sample_chains",
    "witness_chain",
]
