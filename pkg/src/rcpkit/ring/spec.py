"""Ring construction descriptors, their JSON form, and the table builders.

Enumeration orders (zero is always index 0):

* ``zmod(n)``: residues ascending.
* ``matrix(k, base)``: entry tuples in row-major order, compared
  lexicographically over base indices (first entry most significant).
* ``upper_triangular(k, base)``: same, over the entries on or above the
  diagonal only.
* ``product(factors)``: lexicographic over factors, first factor most
  significant.
* ``quotient(base, gens)``: cosets sorted by minimal representative.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import prod
from pathlib import Path
from typing import Any

import numpy as np

from ..errors import InputError, SizeCapExceeded
from .tables import FULL_ANALYSIS_CAP, FiniteRing, validate_tables

TYPES = ("zmod", "matrix", "upper_triangular", "product", "quotient", "table")


@dataclass(frozen=True)
class RingSpec:
    type: str
    n: int | None = None
    k: int | None = None
    base: RingSpec | None = None
    factors: tuple[RingSpec, ...] = ()
    ideal_generators: tuple[int, ...] = ()
    add: tuple[tuple[int, ...], ...] | None = None
    mul: tuple[tuple[int, ...], ...] | None = None
    one: int | None = None

    def to_dict(self) -> dict[str, Any]:
        t = self.type
        if t == "zmod":
            return {"type": t, "n": self.n}
        if t in ("matrix", "upper_triangular"):
            return {"type": t, "k": self.k, "base": self.base.to_dict()}
        if t == "product":
            return {"type": t, "factors": [f.to_dict() for f in self.factors]}
        if t == "quotient":
            return {"type": t, "base": self.base.to_dict(), "ideal_generators": list(self.ideal_generators)}
        return {"type": t, "add": [list(r) for r in self.add], "mul": [list(r) for r in self.mul], "one": self.one}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)

    @classmethod
    def from_dict(cls, data: Any) -> RingSpec:
        if not isinstance(data, dict) or "type" not in data:
            raise InputError("ring spec must be an object with a 'type' field")
        t = data["type"]
        try:
            if t == "zmod":
                return zmod(_int(data["n"], "n"))
            if t == "matrix":
                return matrix(_int(data["k"], "k"), cls.from_dict(data["base"]))
            if t == "upper_triangular":
                return upper_triangular(_int(data["k"], "k"), cls.from_dict(data["base"]))
            if t == "product":
                factors = data["factors"]
                if not isinstance(factors, list) or not factors:
                    raise InputError("'factors' must be a non-empty list")
                return product(*(cls.from_dict(f) for f in factors))
            if t == "quotient":
                gens = data.get("ideal_generators", [])
                if not isinstance(gens, list):
                    raise InputError("'ideal_generators' must be a list")
                return quotient(cls.from_dict(data["base"]), [_int(g, "ideal_generators") for g in gens])
            if t == "table":
                return table(data["add"], data["mul"], _int(data["one"], "one"))
        except KeyError as exc:
            raise InputError(f"spec of type {t!r} is missing field {exc.args[0]!r}") from None
        raise InputError(f"unknown ring spec type {t!r}; expected one of {', '.join(TYPES)}")

    @classmethod
    def from_json(cls, text: str) -> RingSpec:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from None
        return cls.from_dict(data)

    @classmethod
    def load(cls, path: str | Path) -> RingSpec:
        return cls.from_json(Path(path).read_text())

    def predicted_size(self) -> int:
        t = self.type
        if t == "zmod":
            return self.n
        if t == "matrix":
            return self.base.predicted_size() ** (self.k * self.k)
        if t == "upper_triangular":
            return self.base.predicted_size() ** (self.k * (self.k + 1) // 2)
        if t == "product":
            return prod(f.predicted_size() for f in self.factors)
        if t == "quotient":
            return self.base.predicted_size()
        return len(self.add)

    def children(self) -> tuple[RingSpec, ...]:
        if self.base is not None:
            return (self.base,)
        return self.factors


def _int(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"field {name!r} must be an integer, got {value!r}")
    return value


def zmod(n: int) -> RingSpec:
    if n < 1:
        raise InputError(f"zmod needs n >= 1, got {n}")
    return RingSpec("zmod", n=n)


def matrix(k: int, base: RingSpec) -> RingSpec:
    if k < 1:
        raise InputError(f"matrix size must be >= 1, got {k}")
    return RingSpec("matrix", k=k, base=base)


def upper_triangular(k: int, base: RingSpec) -> RingSpec:
    if k < 1:
        raise InputError(f"matrix size must be >= 1, got {k}")
    return RingSpec("upper_triangular", k=k, base=base)


def product(*factors: RingSpec) -> RingSpec:
    if len(factors) == 1 and isinstance(factors[0], (list, tuple)):
        factors = tuple(factors[0])
    if not factors:
        raise InputError("product needs at least one factor")
    return RingSpec("product", factors=tuple(factors))


def quotient(base: RingSpec, generators) -> RingSpec:
    return RingSpec("quotient", base=base, ideal_generators=tuple(int(g) for g in generators))


def table(add, mul, one: int) -> RingSpec:
    try:
        add_t = tuple(tuple(int(v) for v in row) for row in add)
        mul_t = tuple(tuple(int(v) for v in row) for row in mul)
    except (TypeError, ValueError):
        raise InputError("'add' and 'mul' must be lists of integer lists") from None
    n = len(add_t)
    if len(mul_t) != n or any(len(row) != n for row in add_t + mul_t):
        raise InputError(f"operation tables must both be {n} x {n}")
    return RingSpec("table", add=add_t, mul=mul_t, one=int(one))


# -- builders ----------------------------------------------------------------


def build(spec: RingSpec, cap: int = FULL_ANALYSIS_CAP, validate: bool = True) -> FiniteRing:
    """Materialize ``spec`` as explicit tables.

    Every node of the construction tree must predict a size within ``cap``.
    Raw tables are always validated; composite constructions are validated
    when ``validate`` is set.
    """
    _check_caps(spec, cap)
    return _build(spec, validate)


def _check_caps(spec: RingSpec, cap: int) -> None:
    size = spec.predicted_size()
    if size > cap:
        raise SizeCapExceeded(size, cap)
    for child in spec.children():
        _check_caps(child, cap)


def _build(spec: RingSpec, validate: bool) -> FiniteRing:
    t = spec.type
    if t == "table":
        add = np.array(spec.add, dtype=np.int64)
        mul = np.array(spec.mul, dtype=np.int64)
        if add.ndim != 2 or mul.ndim != 2:
            raise InputError("ragged operation table")
        validate_tables(add, mul, spec.one)
        return FiniteRing(add, mul, spec.one, label=f"table({add.shape[0]})")
    if t == "zmod":
        r = np.arange(spec.n)
        add = (r[:, None] + r[None, :]) % spec.n
        mul = (r[:, None] * r[None, :]) % spec.n
        ring = FiniteRing(add, mul, 1 % spec.n, label=f"Z/{spec.n}")
    elif t == "matrix":
        ring = _matrix_ring(_build(spec.base, validate), spec.k, upper=False)
    elif t == "upper_triangular":
        ring = _matrix_ring(_build(spec.base, validate), spec.k, upper=True)
    elif t == "product":
        ring = _product_ring([_build(f, validate) for f in spec.factors])
    elif t == "quotient":
        from .ideals import TWO_SIDED, generated_ideal, quotient_ring

        base = _build(spec.base, validate)
        bad = [g for g in spec.ideal_generators if not 0 <= g < base.size]
        if bad:
            raise InputError(f"ideal generator {bad[0]} out of range for {base.label}")
        ideal = generated_ideal(base, spec.ideal_generators, TWO_SIDED)
        ring, _ = quotient_ring(base, ideal)
    else:
        raise InputError(f"unknown ring spec type {t!r}")
    if validate:
        validate_tables(ring.add, ring.mul, ring.one)
    return ring


def quotient_label(base_label: str, generators) -> str:
    return f"({base_label})/<{','.join(str(g) for g in generators)}>"


def _encode(digits: np.ndarray, m: int) -> np.ndarray:
    weights = m ** np.arange(digits.shape[-1] - 1, -1, -1, dtype=np.int64)
    return (digits * weights).sum(axis=-1)


def _matrix_ring(base: FiniteRing, k: int, upper: bool) -> FiniteRing:
    m = base.size
    cells = [(i, j) for i in range(k) for j in range(k) if not upper or i <= j]
    pos = {c: p for p, c in enumerate(cells)}
    digits = np.array(list(itertools.product(range(m), repeat=len(cells))), dtype=np.int64).reshape(-1, len(cells))
    A = digits[:, None, :]
    B = digits[None, :, :]
    add_digits = base.add[A, B]
    mul_digits = np.zeros((digits.shape[0], digits.shape[0], len(cells)), dtype=np.int64)
    for (i, j), p in pos.items():
        acc = np.zeros(mul_digits.shape[:2], dtype=np.int64)
        for l in range(k):
            if (i, l) in pos and (l, j) in pos:
                term = base.mul[A[..., pos[i, l]], B[..., pos[l, j]]]
                acc = base.add[acc, term]
        mul_digits[..., p] = acc
    ident = np.array([base.one if i == j else 0 for (i, j) in cells], dtype=np.int64)
    name = "UT" if upper else "M"
    return FiniteRing(
        _encode(add_digits, m),
        _encode(mul_digits, m),
        int(_encode(ident, m)),
        label=f"{name}{k}({base.label})",
    )


def _product_ring(factors: list[FiniteRing]) -> FiniteRing:
    sizes = [f.size for f in factors]
    digits = np.array(list(itertools.product(*(range(s) for s in sizes))), dtype=np.int64).reshape(-1, len(sizes))
    weights = np.array([prod(sizes[i + 1 :]) for i in range(len(sizes))], dtype=np.int64)
    A = digits[:, None, :]
    B = digits[None, :, :]
    add = np.zeros((digits.shape[0],) * 2, dtype=np.int64)
    mul = np.zeros_like(add)
    for p, f in enumerate(factors):
        add += f.add[A[..., p], B[..., p]] * weights[p]
        mul += f.mul[A[..., p], B[..., p]] * weights[p]
    one = int(sum(f.one * w for f, w in zip(factors, weights)))
    return FiniteRing(add, mul, one, label=" x ".join(f.label for f in factors))
