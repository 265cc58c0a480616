"""The fixed corpus of small rings used by the audit and the acceptance tests."""

from __future__ import annotations

import json
from pathlib import Path

from .ring.spec import RingSpec, matrix, product, quotient, upper_triangular, zmod


def corpus_specs() -> dict[str, RingSpec]:
    """File stem -> spec, in a fixed order."""
    specs = {f"zmod{n:02d}": zmod(n) for n in range(2, 31)}
    specs.update(
        {
            "ut2_zmod2": upper_triangular(2, zmod(2)),
            "ut2_zmod3": upper_triangular(2, zmod(3)),
            "m2_zmod2": matrix(2, zmod(2)),
            "m2_zmod3": matrix(2, zmod(3)),
            "zmod2_x_zmod2": product(zmod(2), zmod(2)),
            "zmod2_x_zmod4": product(zmod(2), zmod(4)),
            "zmod8_mod_4": quotient(zmod(8), [4]),
        }
    )
    return specs


def write_corpus(directory: str | Path) -> list[Path]:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for stem, spec in corpus_specs().items():
        path = out / f"{stem}.json"
        path.write_text(json.dumps(spec.to_dict(), indent=2) + "\n")
        paths.append(path)
    return paths
