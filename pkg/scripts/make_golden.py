"""Derive golden values with the brute-force oracles and freeze them to JSON.

The oracles build their rings from scratch and never call rcpkit, so the
frozen numbers are independent of the library under test.

    python scripts/make_golden.py            # writes tests/golden/golden.json
    python scripts/make_golden.py --check    # exit 1 if the file is stale
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

import oracles as o  # noqa: E402

GOLDEN = ROOT / "tests" / "golden" / "golden.json"


def _pairs(classes):
    return sorted([sorted(p), sorted(q)] for p, q in classes)


def derive() -> dict:
    z6, z4 = o.zmod_tables(6), o.zmod_tables(4)
    ut2 = o.matrix_tables(2, 2, upper=True)
    m2 = o.matrix_tables(2, 2)

    z6_classes = o.rcp_classes(z6)
    m2_classes = o.rcp_classes(m2)
    ut2_classes = o.rcp_classes(ut2)
    m2_left_not_right = [
        [a, b]
        for a in m2.R
        for b in m2.R
        if o.additive_closure(m2, o.left_principal(m2, a) | o.left_principal(m2, b)) == frozenset(m2.R)
        and not o.right_coprime(m2, a, b)
    ]
    c1, c2, c3 = o.left_continuity(ut2)
    z4c = o.left_continuity(z4)
    return {
        "zmod6": {
            "class_count": len(z6_classes),
            "minimal_count": len(o.minimal_classes(z6_classes)),
            "idempotents": sorted(o.idempotents(z6)),
            "units": sorted(o.units(z6)),
        },
        "zmod4": {
            "minimal_classes": _pairs(o.minimal_classes(o.rcp_classes(z4))),
            "continuity": list(z4c),
        },
        "ut2_zmod2": {
            "radical": sorted(o.radical_by_maximal_right_ideals(ut2)),
            "class_count": len(ut2_classes),
            "minimal_count": len(o.minimal_classes(ut2_classes)),
            "continuity": [c1, c2, c3],
            "quasi_duo": all(o.is_left_closed(ut2, m) for m in o.maximal(o.all_ideals(ut2, "right"), ut2.n)),
        },
        "m2_zmod2": {
            "nodes": len(m2_classes),
            "minimal_count": len(o.minimal_classes(m2_classes)),
            "edges": o.cover_count(m2_classes),
            "units": len(o.units(m2)),
            "left_not_right_coprime_pairs": len(m2_left_not_right),
            "vn_regular": o.regular(m2) == set(m2.R),
        },
    }


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--check", action="store_true", help="compare instead of writing")
    args = parser.parse_args()
    text = json.dumps(derive(), indent=2, sort_keys=True) + "\n"
    if args.check:
        same = GOLDEN.exists() and GOLDEN.read_text() == text
        print("golden values up to date" if same else "golden values differ from the oracle run")
        return 0 if same else 1
    GOLDEN.write_text(text)
    print(f"wrote {GOLDEN.relative_to(ROOT)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
