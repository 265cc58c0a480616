"""Ring-class predicates, each decided along two or more independent routes.

Every predicate returns a :class:`~rcpkit.rcp.RouteReport`.  One route is a
direct ring-theoretic scan; the other reads the answer off the coprime-pair
poset or an equivalent characterization.  :func:`classify` bundles them,
checks the implication lattice, and :func:`theorem_audit` evaluates the
structural implications for strongly exchange rings pair by pair.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .chains import is_strongly_exchange_finite, longest_strict_chain
from .errors import IdealEnumerationCapExceeded, SizeCapExceeded
from .rcp import RouteReport, enumerate_rcp, is_right_coprime, minimal_below
from .ring.ideals import (
    LEFT,
    RIGHT,
    TWO_SIDED,
    idempotent_flags,
    is_closed,
    radical_mask,
    radical_quotient,
    regular_flags,
    unit_flags,
)
from .ring.lattice import IDEAL_CAP, continuity, continuity_by_annihilators, mask_sum, maximal_ideals
from .ring.tables import FULL_ANALYSIS_CAP, FiniteRing, members, to_mask


def _check_cap(R: FiniteRing, cap: int) -> None:
    if R.size > cap:
        raise SizeCapExceeded(R.size, cap)


def _non_units_form_ideal(R: FiniteRing) -> bool:
    if R.size == 1:
        return False
    return is_closed(R, to_mask(~unit_flags(R)), TWO_SIDED)


# -- poset-readable predicates ---------------------------------------------


def is_local(R: FiniteRing, cap: int = FULL_ANALYSIS_CAP) -> RouteReport:
    _check_cap(R, cap)
    poset = enumerate_rcp(R, cap)
    unit = unit_flags(R)
    witnesses: dict = {}

    nontrivial = next(
        (c for c in poset.classes if not (unit[c.generators[0]] or unit[c.generators[1]])), None
    )
    if nontrivial is not None:
        witnesses["pair_without_unit"] = list(nontrivial.generators)
    witnesses["minimal_classes"] = [list(poset.classes[i].generators) for i in poset.minimal]
    every_below = all(minimal_below(R, c) is not None for c in poset.classes)
    nonzero = R.size > 1
    return RouteReport(
        {
            "non_units_ideal": _non_units_form_ideal(R),
            "every_pair_trivial": nonzero and nontrivial is None,
            "two_minimal_classes": nonzero and len(poset.minimal) == 2 and every_below,
        },
        witnesses,
    )


def is_indecomposable_module(R: FiniteRing, cap: int = FULL_ANALYSIS_CAP) -> RouteReport:
    _check_cap(R, cap)
    idem = [int(e) for e in np.nonzero(idempotent_flags(R))[0]]
    poset = enumerate_rcp(R, cap)
    witnesses = {}
    extra = [e for e in idem if e not in (0, R.one)]
    if extra:
        witnesses["nontrivial_idempotent"] = extra[0]
    return RouteReport(
        {"trivial_idempotents": R.size > 1 and not extra, "two_minimal_classes": len(poset.minimal) == 2},
        witnesses,
    )


def is_vn_regular(R: FiniteRing, cap: int = FULL_ANALYSIS_CAP) -> RouteReport:
    _check_cap(R, cap)
    flags = regular_flags(R)
    poset = enumerate_rcp(R, cap)
    witnesses: dict = {}
    bad = np.nonzero(~flags)[0]
    if bad.size:
        witnesses["non_regular_element"] = int(bad[0])
    bad_pair = next((c for c in poset.classes if not all(flags[g] for g in c.generators)), None)
    if bad_pair is not None:
        witnesses["non_regular_pair"] = list(bad_pair.generators)
    return RouteReport(
        {"elementwise": bool(flags.all()), "every_pair_regular": bad_pair is None},
        witnesses,
    )


def nicholson_witness(R: FiniteRing, r: int) -> int | None:
    """Smallest idempotent e with e in rR and 1 - e in (1 - r)R."""
    idem = np.nonzero(idempotent_flags(R))[0]
    in_rR = [R.right_masks[r] >> int(e) & 1 for e in idem]
    other = R.right_masks[R.one_minus(r)]
    for e, ok in zip(idem, in_rR):
        if ok and other >> R.one_minus(int(e)) & 1:
            return int(e)
    return None


def is_exchange(R: FiniteRing, cap: int = FULL_ANALYSIS_CAP) -> RouteReport:
    _check_cap(R, cap)
    table = {r: nicholson_witness(R, r) for r in range(R.size)}
    poset = enumerate_rcp(R, cap)
    missing = next((c for c in poset.classes if minimal_below(R, c) is None), None)
    witnesses: dict = {"nicholson": {str(r): e for r, e in table.items()}}
    if missing is not None:
        witnesses["class_without_minimal_below"] = list(missing.generators)
    return RouteReport(
        {
            "nicholson": all(e is not None for e in table.values()),
            "minimal_below_every_class": missing is None,
        },
        witnesses,
    )


def is_quasi_duo(R: FiniteRing, cap: int = FULL_ANALYSIS_CAP, ideal_cap: int = IDEAL_CAP) -> RouteReport:
    """Right quasi-duo: maximal right ideals are two-sided, or left coprime pairs are right coprime."""
    _check_cap(R, cap)
    witnesses: dict = {}
    routes: dict = {}
    skipped: dict = {}

    witness = _left_not_right_coprime(R)
    if witness is not None:
        witnesses["left_not_right_coprime"] = list(witness)

    try:
        bad = next((m for m in maximal_ideals(R, RIGHT, ideal_cap) if not is_closed(R, m, LEFT)), None)
        routes["maximal_right_ideals_two_sided"] = bad is None
        if bad is not None:
            witnesses["one_sided_maximal_right_ideal"] = members(bad)
    except IdealEnumerationCapExceeded as exc:
        skipped["maximal_right_ideals_two_sided"] = str(exc)

    routes["left_coprime_implies_right"] = witness is None
    return RouteReport(routes, witnesses, skipped)


def _left_not_right_coprime(R: FiniteRing) -> tuple[int, int] | None:
    """First (a, b) with Ra + Rb = R but aR + bR != R."""
    full = R.full_mask
    left = R.left_masks
    distinct = sorted(set(left))
    pos = {m: i for i, m in enumerate(distinct)}
    k = len(distinct)
    left_coprime = np.array(
        [[mask_sum(R, distinct[i], distinct[j]) == full for j in range(k)] for i in range(k)], dtype=bool
    )
    ids = np.array([pos[m] for m in left])
    for a in range(R.size):
        for b in np.nonzero(left_coprime[ids[a], ids])[0]:
            if not is_right_coprime(R, a, int(b)):
                return a, int(b)
    return None


# -- radical-based predicates -----------------------------------------------


def lift_idempotents(R: FiniteRing) -> dict[int, int | None]:
    """Idempotent coset of R/J -> smallest idempotent of R over it (None when absent)."""
    Q, proj = radical_quotient(R)
    idem = idempotent_flags(R)
    out = {}
    for q in np.nonzero(idempotent_flags(Q))[0]:
        over = np.nonzero((proj == q) & idem)[0]
        out[int(q)] = int(over[0]) if over.size else None
    return out


def _lies_over_summand(R: FiniteRing, a: int) -> int | None:
    """Idempotent e with eR in aR and aR & (1-e)R inside J."""
    J = radical_mask(R)
    aR = R.right_masks[a]
    for e in np.nonzero(idempotent_flags(R))[0]:
        e = int(e)
        if R.right_masks[e] & ~aR == 0 and (aR & R.right_masks[R.one_minus(e)]) & ~J == 0:
            return e
    return None


def is_semiregular(R: FiniteRing, cap: int = FULL_ANALYSIS_CAP) -> RouteReport:
    _check_cap(R, cap)
    Q, _ = radical_quotient(R)
    lifts = lift_idempotents(R)
    over = {a: _lies_over_summand(R, a) for a in range(R.size)}
    witnesses: dict = {"lifts": {str(q): e for q, e in lifts.items()}}
    bad = next((a for a, e in over.items() if e is None), None)
    if bad is not None:
        witnesses["principal_ideal_not_over_summand"] = bad
    return RouteReport(
        {
            "regular_mod_radical_and_lifting": bool(regular_flags(Q).all()) and None not in lifts.values(),
            "principal_ideals_lie_over_summands": bad is None,
        },
        witnesses,
    )


def _idempotent_generated(R: FiniteRing) -> int | None:
    """First a whose aR has no idempotent generator, else None."""
    idem_masks = {R.right_masks[int(e)] for e in np.nonzero(idempotent_flags(R))[0]}
    return next((a for a in range(R.size) if R.right_masks[a] not in idem_masks), None)


def is_semisimple(R: FiniteRing, cap: int = FULL_ANALYSIS_CAP) -> RouteReport:
    _check_cap(R, cap)
    bad = _idempotent_generated(R)
    witnesses = {"radical_size": radical_mask(R).bit_count()}
    if bad is not None:
        witnesses["principal_ideal_without_idempotent_generator"] = bad
    return RouteReport(
        {"zero_radical": radical_mask(R) == 1, "principal_ideals_idempotent_generated": bad is None},
        witnesses,
    )


def corner_ring(R: FiniteRing, e: int) -> tuple[FiniteRing, np.ndarray]:
    """The ring eRe with identity e, and its elements as indices of R."""
    elems = np.unique(R.mul[R.mul[e, :], e])
    index = np.full(R.size, -1, dtype=np.int64)
    index[elems] = np.arange(elems.size)
    add = index[R.add[np.ix_(elems, elems)]]
    mul = index[R.mul[np.ix_(elems, elems)]]
    return FiniteRing(add, mul, int(index[e]), label=f"{e}R{e}"), elems


def local_decomposition(R: FiniteRing, e: int | None = None) -> list[int] | None:
    """Orthogonal idempotents with local corners summing to ``e`` (default 1)."""
    e = R.one if e is None else e
    if e == 0:
        return []
    C, elems = corner_ring(R, e)
    if _non_units_form_ideal(C):
        return [e]
    split = next((int(f) for f in np.nonzero(idempotent_flags(C))[0] if f not in (0, C.one)), None)
    if split is None:
        return None
    f = int(elems[split])
    rest = int(R.add[e, R.neg[f]])
    left, right = local_decomposition(R, f), local_decomposition(R, rest)
    if left is None or right is None:
        return None
    return sorted(left + right)


def is_semiperfect(R: FiniteRing, cap: int = FULL_ANALYSIS_CAP) -> RouteReport:
    _check_cap(R, cap)
    Q, _ = radical_quotient(R)
    lifts = lift_idempotents(R)
    decomposition = local_decomposition(R)
    return RouteReport(
        {
            "semisimple_mod_radical_and_lifting": bool(is_semisimple(Q).value) and None not in lifts.values(),
            "local_idempotent_decomposition": decomposition is not None,
        },
        {"local_idempotents": decomposition},
    )


def clean_witness(R: FiniteRing, x: int) -> tuple[int, int] | None:
    """Smallest idempotent e with x - e a unit, as (e, u)."""
    unit = unit_flags(R)
    for e in np.nonzero(idempotent_flags(R))[0]:
        u = int(R.add[x, R.neg[e]])
        if unit[u]:
            return int(e), u
    return None


def is_clean(R: FiniteRing, cap: int = FULL_ANALYSIS_CAP) -> RouteReport:
    """Every element is an idempotent plus a unit.

    The second route scans units u for x - u idempotent instead of scanning
    idempotents.
    """
    _check_cap(R, cap)
    table = {x: clean_witness(R, x) for x in range(R.size)}
    idem = idempotent_flags(R)
    unit_list = np.nonzero(unit_flags(R))[0]
    by_units = all(idem[R.add[x, R.neg[unit_list]]].any() for x in range(R.size))
    return RouteReport(
        {"idempotent_scan": all(w is not None for w in table.values()), "unit_scan": bool(by_units)},
        {"decompositions": {str(x): (list(w) if w else None) for x, w in table.items()}},
    )


def is_perfect_dcc(R: FiniteRing, cap: int = FULL_ANALYSIS_CAP) -> RouteReport:
    """DCC on coprime-pair classes and on principal right ideals."""
    _check_cap(R, cap)
    poset = enumerate_rcp(R, cap)
    antisymmetric = bool(((poset.leq & poset.leq.T) == np.eye(len(poset), dtype=bool)).all())
    longest = longest_strict_chain(poset)
    masks = sorted(set(R.right_masks), key=lambda m: m.bit_count())
    depth = {}
    for m in masks:
        depth[m] = 1 + max((depth[o] for o in depth if o != m and o & ~m == 0), default=0)
    return RouteReport(
        {
            "class_chains_bounded": antisymmetric and longest <= len(poset),
            "principal_ideal_chains_bounded": max(depth.values()) <= len(masks),
        },
        {"longest_class_chain": longest, "longest_principal_ideal_chain": max(depth.values())},
    )


# -- continuity on _R R --------------------------------------------------------


def check_c_conditions(R: FiniteRing, ideal_cap: int = IDEAL_CAP) -> dict[str, RouteReport]:
    """C1, C2 and C3 on the left module _R R, each by two routes."""
    try:
        a = continuity(R, ideal_cap)
        b = continuity_by_annihilators(R, ideal_cap)
    except IdealEnumerationCapExceeded as exc:
        return {f"c{i}": RouteReport({}, skipped={"all": str(exc)}) for i in (1, 2, 3)}
    names = {
        "c1": ("essential_in_summand", "closed_ideals_are_summands"),
        "c2": ("module_isomorphism_scan", "annihilator_summand_scan"),
        "c3": ("summand_sum_scan", "idempotent_size_scan"),
    }
    out = {}
    for key, (first, second) in names.items():
        w = {}
        if key in a.witnesses:
            w[first] = a.witnesses[key]
        if key in b.witnesses:
            w[second] = b.witnesses[key]
        out[key] = RouteReport({first: getattr(a, key), second: getattr(b, key)}, w)
    return out


def continuous_mod_radical(R: FiniteRing, ideal_cap: int = IDEAL_CAP) -> RouteReport:
    """C1 and C2 for R/J(R) as a left module over itself."""
    Q, _ = radical_quotient(R)
    c = check_c_conditions(Q, ideal_cap)
    if not c["c1"].routes or not c["c2"].routes:
        return RouteReport({}, skipped=dict(c["c1"].skipped))
    routes = {}
    for r1, r2 in zip(c["c1"].routes.items(), c["c2"].routes.items()):
        routes[f"{r1[0]}+{r2[0]}"] = r1[1] and r2[1]
    return RouteReport(routes, {"c1": c["c1"].witnesses, "c2": c["c2"].witnesses})


# -- the report ------------------------------------------------------------------

PREDICATES = (
    "local",
    "indecomposable",
    "vn_regular",
    "exchange",
    "strongly_exchange",
    "semiregular",
    "semiperfect",
    "semisimple",
    "clean",
    "quasi_duo",
    "perfect_dcc",
    "continuous_c1",
    "continuous_c2",
    "continuous_c3",
    "continuous_mod_radical",
)

TRACEABILITY = {
    "local.non_units_ideal": "local: the non-units form an ideal",
    "local.every_pair_trivial": "local iff every right coprime pair is trivial",
    "local.two_minimal_classes": "local iff exactly two minimal pairs, one below every pair",
    "indecomposable.trivial_idempotents": "R_R indecomposable iff 0 and 1 are the only idempotents",
    "indecomposable.two_minimal_classes": "R_R indecomposable iff RCP(R) has exactly two minimal elements",
    "vn_regular.elementwise": "every a has x with axa = a",
    "vn_regular.every_pair_regular": "vN regular iff every right coprime pair is regular",
    "exchange.nicholson": "exchange: e in rR and 1-e in (1-r)R for some idempotent e",
    "exchange.minimal_below_every_class": "exchange iff every pair has a minimal pair below it",
    "strongly_exchange.minimal_below_every_class": "finite chains stabilize, so strong exchange is exchange",
    "strongly_exchange.chain_audit": "every compatible descending chain has a minimal lower bound",
    "semiregular.regular_mod_radical_and_lifting": "R/J vN regular and idempotents lift modulo J",
    "semiregular.principal_ideals_lie_over_summands": "every principal right ideal lies over a summand",
    "semiperfect.semisimple_mod_radical_and_lifting": "R/J semisimple and idempotents lift modulo J",
    "semiperfect.local_idempotent_decomposition": "1 is a sum of orthogonal local idempotents",
    "semisimple.zero_radical": "finite ring with J(R) = 0",
    "semisimple.principal_ideals_idempotent_generated": "every principal right ideal is eR",
    "clean.idempotent_scan": "x - e is a unit for some idempotent e",
    "clean.unit_scan": "x - u is idempotent for some unit u",
    "quasi_duo.maximal_right_ideals_two_sided": "every maximal right ideal is two-sided",
    "quasi_duo.left_coprime_implies_right": "every left coprime pair is right coprime",
    "perfect_dcc.class_chains_bounded": "DCC on coprime-pair classes",
    "perfect_dcc.principal_ideal_chains_bounded": "DCC on principal right ideals",
    "continuous_c1.essential_in_summand": "(C1) every left ideal is essential in a summand",
    "continuous_c1.closed_ideals_are_summands": "(C1) every closed left ideal is a summand",
    "continuous_c2.module_isomorphism_scan": "(C2) a left ideal isomorphic to a summand is a summand",
    "continuous_c2.annihilator_summand_scan": "(C2) Ry with l(y) a summand forces Ry a summand",
    "continuous_c3.summand_sum_scan": "(C3) K + L is a summand when K & L = 0",
    "continuous_c3.idempotent_size_scan": "(C3) Re + Rf equals some Rg when Re & Rf = 0",
    "continuous_mod_radical.essential_in_summand+module_isomorphism_scan": "R/J left continuous",
    "continuous_mod_radical.closed_ideals_are_summands+annihilator_summand_scan": "R/J left continuous",
}

# (name, premise, conclusion); evaluated on predicate values
IMPLICATIONS = (
    ("local=>indecomposable", "local", "indecomposable"),
    ("local=>exchange", "local", "exchange"),
    ("vn_regular=>exchange", "vn_regular", "exchange"),
    ("semisimple=>semiperfect", "semisimple", "semiperfect"),
    ("semiperfect=>semiregular", "semiperfect", "semiregular"),
    ("semiregular=>exchange", "semiregular", "exchange"),
    ("exchange=>strongly_exchange", "exchange", "strongly_exchange"),
    ("strongly_exchange=>exchange", "strongly_exchange", "exchange"),
    ("local=>clean", "local", "clean"),
)

# finite-scale facts that hold for every finite ring
SANITY = ("perfect_dcc", "semiperfect", "exchange")


@dataclass
class ClassificationReport:
    ring: str
    size: int
    class_count: int
    minimal_class_count: int
    predicates: dict[str, RouteReport]
    implications: list[dict] = field(default_factory=list)
    sanity: dict[str, bool] = field(default_factory=dict)

    def __getitem__(self, name: str) -> RouteReport:
        return self.predicates[name]

    @property
    def disagreements(self) -> list[str]:
        return [k for k, v in self.predicates.items() if not v.agree]

    @property
    def ok(self) -> bool:
        return (
            not self.disagreements
            and all(i["holds"] for i in self.implications)
            and all(self.sanity.values())
        )

    def to_dict(self) -> dict:
        return {
            "ring": self.ring,
            "size": self.size,
            "class_count": self.class_count,
            "minimal_class_count": self.minimal_class_count,
            "ok": self.ok,
            "disagreements": self.disagreements,
            "predicates": {k: v.to_dict() for k, v in self.predicates.items()},
            "implications": self.implications,
            "sanity": self.sanity,
            "traceability": {
                k: TRACEABILITY.get(k, "")
                for name, rep in self.predicates.items()
                for k in (f"{name}.{route}" for route in rep.routes)
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def evaluate_implications(values: dict[str, bool | None]) -> list[dict]:
    out = []
    for name, premise, conclusion in IMPLICATIONS:
        p, c = values.get(premise), values.get(conclusion)
        holds = p is None or c is None or (not p) or bool(c)
        out.append({"name": name, "premise": p, "conclusion": c, "holds": holds})
    return out


def classify(R: FiniteRing, cap: int = FULL_ANALYSIS_CAP, ideal_cap: int = IDEAL_CAP) -> ClassificationReport:
    _check_cap(R, cap)
    poset = enumerate_rcp(R, cap)
    c = check_c_conditions(R, ideal_cap)
    predicates = {
        "local": is_local(R, cap),
        "indecomposable": is_indecomposable_module(R, cap),
        "vn_regular": is_vn_regular(R, cap),
        "exchange": is_exchange(R, cap),
        "strongly_exchange": is_strongly_exchange_finite(R, cap),
        "semiregular": is_semiregular(R, cap),
        "semiperfect": is_semiperfect(R, cap),
        "semisimple": is_semisimple(R, cap),
        "clean": is_clean(R, cap),
        "quasi_duo": is_quasi_duo(R, cap, ideal_cap),
        "perfect_dcc": is_perfect_dcc(R, cap),
        "continuous_c1": c["c1"],
        "continuous_c2": c["c2"],
        "continuous_c3": c["c3"],
        "continuous_mod_radical": continuous_mod_radical(R, ideal_cap),
    }
    values = {k: v.value for k, v in predicates.items()}
    return ClassificationReport(
        ring=R.label,
        size=R.size,
        class_count=len(poset),
        minimal_class_count=len(poset.minimal),
        predicates=predicates,
        implications=evaluate_implications(values),
        sanity={k: bool(values[k]) for k in SANITY},
    )


# -- structural audit -----------------------------------------------------------


def intersection_lemma(R: FiniteRing, a: int, b: int) -> bool:
    """(aR + J) & (bR + J) lies in J; meant for pairs with aR & bR inside J."""
    J = radical_mask(R)
    left = mask_sum(R, R.right_masks[a], J)
    right = mask_sum(R, R.right_masks[b], J)
    return (left & right) & ~J == 0


def strict_descent(R: FiniteRing, a: int, b: int) -> dict | None:
    """A strictly smaller pair <a,z> or <z,b> when aR & bR is not inside J.

    For x in (aR & bR) outside J, look for z with zR a proper part of bR and
    xR + zR = bR (then <a,z> works), and symmetrically inside aR.
    """
    J = radical_mask(R)
    meet = R.right_masks[a] & R.right_masks[b]
    outside = members(meet & ~J)
    if not outside:
        return None
    x = outside[0]
    xR = R.right_masks[x]
    for keep, other in ((a, b), (b, a)):
        target = R.right_masks[other]
        for z in members(target):
            zR = R.right_masks[z]
            if zR != target and mask_sum(R, xR, zR) == target:
                pair = (keep, z) if keep == a else (z, keep)
                return {"x": x, "pair": list(pair), "shares": "first" if keep == a else "second"}
    return {"x": x, "pair": None}


@dataclass
class AuditRecord:
    ring: str
    implications: list[dict]
    intersection_checks: int
    intersection_failures: list[list[int]]
    descent_checks: int
    descent_failures: list[list[int]]
    examples: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return (
            all(i["holds"] for i in self.implications)
            and not self.intersection_failures
            and not self.descent_failures
        )

    def to_dict(self) -> dict:
        return {
            "ring": self.ring,
            "ok": self.ok,
            "implications": self.implications,
            "intersection_checks": self.intersection_checks,
            "intersection_failures": self.intersection_failures,
            "descent_checks": self.descent_checks,
            "descent_failures": self.descent_failures,
            "examples": self.examples,
        }


def theorem_audit(
    R: FiniteRing,
    cap: int = FULL_ANALYSIS_CAP,
    ideal_cap: int = IDEAL_CAP,
    report: ClassificationReport | None = None,
) -> AuditRecord:
    """Implications for strongly exchange rings, plus the pairwise radical lemmas.

    Premises and conclusions come from separately computed predicates.  The
    finitely-many-idempotents hypothesis is automatic here, so semiperfectness
    is checked for every strongly exchange ring.
    """
    report = report or classify(R, cap, ideal_cap)
    v = {k: rep.value for k, rep in report.predicates.items()}
    se = v["strongly_exchange"]
    zero_radical = radical_mask(R) == 1

    def item(name, premises: dict, conclusion):
        holds = not all(premises.values()) or conclusion is None or bool(conclusion)
        return {"name": name, "premises": premises, "conclusion": conclusion, "holds": holds}

    implications = [
        item("strongly_exchange=>semiregular", {"strongly_exchange": se}, v["semiregular"]),
        item("strongly_exchange=>continuous_mod_radical", {"strongly_exchange": se}, v["continuous_mod_radical"]),
        item("strongly_exchange=>semiperfect", {"strongly_exchange": se}, v["semiperfect"]),
        item(
            "zero_radical&strongly_exchange=>semisimple",
            {"zero_radical": zero_radical, "strongly_exchange": se},
            v["semisimple"],
        ),
        # evidence only: whether strongly exchange rings are clean is open
        {"name": "strongly_exchange=>clean (evidence)", "premises": {"strongly_exchange": se},
         "conclusion": v["clean"], "holds": True},
    ]

    J = radical_mask(R)
    poset = enumerate_rcp(R, cap)
    n_int = n_desc = 0
    int_fail: list[list[int]] = []
    desc_fail: list[list[int]] = []
    examples: dict = {}
    for c in poset.classes:
        a, b = c.generators
        if (R.right_masks[a] & R.right_masks[b]) & ~J == 0:
            n_int += 1
            if not intersection_lemma(R, a, b):
                int_fail.append([a, b])
        else:
            n_desc += 1
            found = strict_descent(R, a, b)
            ok = found is not None and found["pair"] is not None and _strictly_below(R, found["pair"], (a, b))
            if not ok:
                desc_fail.append([a, b])
            examples.setdefault("descent", {"from": [a, b], **(found or {})})
    return AuditRecord(R.label, implications, n_int, int_fail, n_desc, desc_fail, examples)


def _strictly_below(R: FiniteRing, pair, upper) -> bool:
    (x, y), (a, b) = pair, upper
    if not is_right_coprime(R, x, y):
        return False
    m = R.right_masks
    below = m[x] & ~m[a] == 0 and m[y] & ~m[b] == 0
    return below and (m[x] != m[a] or m[y] != m[b])
