"""Per-ring invariant suites: pair criteria, minimality, chains, classification, audit.

Each check records explicit pass/fail counts instead of raising, so one bad
ring or pair never hides the rest of the run.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chains import (
    annihilator_lower_bound_criterion,
    lower_bounds,
    meet_criterion,
    minimal_lower_bound,
    sample_chains,
    witness_chain,
)
from .classify import classify, theorem_audit
from .errors import InvariantViolation
from .rcp import coprimality_suite, enumerate_rcp, is_minimal, is_vn_regular_ring
from .ring.lattice import IDEAL_CAP
from .ring.tables import FULL_ANALYSIS_CAP, FiniteRing

MAX_LISTED = 10


@dataclass(frozen=True)
class SuiteConfig:
    cap_full: int = FULL_ANALYSIS_CAP
    cap_ideals: int = IDEAL_CAP
    chain_count: int = 1000
    exhaustive_len: int = 3


def pair_criteria(R: FiniteRing) -> dict:
    """Every element pair through the equivalent forms of coprimality."""
    failures = []
    coprime = converse = 0
    for a in range(R.size):
        for b in range(R.size):
            rep = coprimality_suite(R, a, b)
            coprime += rep.c1
            converse += rep.c8 and rep.c8_sufficient
            if not rep.agree:
                failures.append([a, b])
    return {
        "pairs": R.size * R.size,
        "coprime_pairs": coprime,
        "converse_checked": converse,
        "failure_count": len(failures),
        "failures": failures[:MAX_LISTED],
        "ok": not failures,
    }


def minimality(R: FiniteRing, cap: int = FULL_ANALYSIS_CAP) -> dict:
    poset = enumerate_rcp(R, cap)
    failures = []
    minimal = 0
    for c in poset.classes:
        rep = is_minimal(R, c)
        minimal += bool(rep.value)
        if not rep.agree:
            failures.append(list(c.generators))
    return {
        "classes": len(poset),
        "minimal": minimal,
        "failure_count": len(failures),
        "failures": failures[:MAX_LISTED],
        "ok": not failures and minimal == len(poset.minimal),
    }


def chain_audit(R: FiniteRing, config: SuiteConfig = SuiteConfig()) -> dict:
    """Witnessed chains, the meet criterion and (on vN regular rings) the annihilator criterion."""
    poset = enumerate_rcp(R, config.cap_full)
    chains = sample_chains(poset, config.chain_count, config.exhaustive_len)
    regular = is_vn_regular_ring(R)
    failures: list[dict] = []
    annihilator_checked = 0
    for idx in chains:
        pairs = [poset.classes[i] for i in idx]
        try:
            chain = witness_chain(R, pairs)
            direct = bool(lower_bounds(chain))
            if direct != meet_criterion(chain):
                raise InvariantViolation("meet criterion disagrees with the lower-bound scan")
            minimal_lower_bound(chain)
            if regular:
                found, _ = annihilator_lower_bound_criterion(chain)
                annihilator_checked += 1
                if found != direct:
                    raise InvariantViolation("annihilator criterion disagrees with the lower-bound scan")
        except InvariantViolation as exc:
            failures.append({"chain": [list(p.generators) for p in pairs], "error": str(exc)})
    return {
        "chains": len(chains),
        "vn_regular": regular,
        "annihilator_checked": annihilator_checked,
        "failure_count": len(failures),
        "failures": failures[:MAX_LISTED],
        "ok": not failures and len(chains) >= config.chain_count,
    }


def ring_suite(R: FiniteRing, config: SuiteConfig = SuiteConfig()) -> dict:
    report = classify(R, config.cap_full, config.cap_ideals)
    audit = theorem_audit(R, config.cap_full, config.cap_ideals, report=report)
    sections = {
        "pair_criteria": pair_criteria(R),
        "minimality": minimality(R, config.cap_full),
        "chains": chain_audit(R, config),
    }
    classification = {
        "values": {k: v.value for k, v in report.predicates.items()},
        "class_count": report.class_count,
        "minimal_class_count": report.minimal_class_count,
        "disagreements": report.disagreements,
        "implications_hold": all(i["holds"] for i in report.implications),
        "sanity": report.sanity,
        "ok": report.ok,
    }
    ok = all(s["ok"] for s in sections.values()) and report.ok and audit.ok
    return {
        "ring": R.label,
        "size": R.size,
        "ok": ok,
        **sections,
        "classification": classification,
        "audit": audit.to_dict(),
    }
