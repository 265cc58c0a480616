"""Command-line front end: ``rcpkit {classify,rcp,chains,audit,verify-props}``.

Exit codes: 0 pass, 1 input error, 2 invariant violation, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path

from .chains import chain_report, witness_chain
from .classify import classify
from .errors import IdealEnumerationCapExceeded, InputError, InvariantViolation, RcpError, SizeCapExceeded
from .rcp import enumerate_rcp, pair_class
from .ring.lattice import IDEAL_CAP
from .ring.spec import RingSpec, build
from .ring.tables import ARITHMETIC_CAP, FULL_ANALYSIS_CAP, FiniteRing
from .suite import SuiteConfig, chain_audit, ring_suite

log = logging.getLogger("rcpkit")

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT, EXIT_CAP = 0, 1, 2, 3
MODES = ("classify", "rcp", "chains", "audit", "verify-props")


@dataclass(frozen=True)
class RunConfig:
    mode: str
    inputs: tuple[str, ...]
    cap_full: int = FULL_ANALYSIS_CAP
    cap_arith: int = ARITHMETIC_CAP
    cap_ideals: int = IDEAL_CAP
    format: str = "json"
    out: str | None = None
    dot: str | None = None
    jobs: int = 1
    chain: str | None = None
    chain_count: int = 1000

    def __post_init__(self):
        if self.mode not in MODES:
            raise InputError(f"unknown mode {self.mode!r}")
        for name in ("cap_full", "cap_arith", "cap_ideals", "jobs", "chain_count"):
            if getattr(self, name) < 1:
                raise InputError(f"{name.replace('_', '-')} must be positive")
        if self.format not in ("json", "text"):
            raise InputError(f"unknown format {self.format!r}")

    @property
    def suite(self) -> SuiteConfig:
        return SuiteConfig(self.cap_full, self.cap_ideals, self.chain_count)


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, (SizeCapExceeded, IdealEnumerationCapExceeded)):
        return EXIT_CAP
    if isinstance(exc, InvariantViolation):
        return EXIT_INVARIANT
    return EXIT_INPUT


def load_ring(path: str | Path, config: RunConfig) -> FiniteRing:
    try:
        spec = RingSpec.load(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    R = build(spec, cap=config.cap_arith)
    if R.size > config.cap_full:
        raise SizeCapExceeded(R.size, config.cap_full)
    return R


def _dump(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def _emit(config: RunConfig, json_data, text: str) -> None:
    payload = _dump(json_data) if config.format == "json" else text.rstrip("\n") + "\n"
    if config.out:
        Path(config.out).write_text(payload)
    else:
        sys.stdout.write(payload)


# -- verbs --------------------------------------------------------------------


def run_classify(config: RunConfig) -> int:
    R = load_ring(config.inputs[0], config)
    report = classify(R, config.cap_full, config.cap_ideals)
    lines = [f"{R.label} ({R.size} elements): {report.class_count} classes, {report.minimal_class_count} minimal"]
    for name, rep in report.predicates.items():
        flag = "" if rep.agree else "  ROUTES DISAGREE"
        lines.append(f"  {name:24s} {rep.value}{flag}")
    _emit(config, report.to_dict(), "\n".join(lines))
    return EXIT_OK if report.ok else EXIT_INVARIANT


def run_rcp(config: RunConfig) -> int:
    R = load_ring(config.inputs[0], config)
    poset = enumerate_rcp(R, config.cap_full)
    if config.dot:
        Path(config.dot).write_text(poset.to_dot())
    lines = [f"{R.label}: {len(poset)} classes, {len(poset.minimal)} minimal"]
    minimal = set(poset.minimal)
    for i, c in enumerate(poset.classes):
        lines.append(f"  {c}{' (minimal)' if i in minimal else ''}")
    _emit(config, poset.to_dict(), "\n".join(lines))
    return EXIT_OK


def parse_chain(text: str) -> list[tuple[int, int]]:
    try:
        pairs = [tuple(int(v) for v in part.split(",")) for part in text.split(":")]
    except ValueError:
        raise InputError(f"chain must look like 'a,b:a,b:...', got {text!r}") from None
    if any(len(p) != 2 for p in pairs):
        raise InputError(f"chain must look like 'a,b:a,b:...', got {text!r}")
    return pairs


def run_chains(config: RunConfig) -> int:
    R = load_ring(config.inputs[0], config)
    if config.chain:
        pairs = parse_chain(config.chain)
        bad = [x for p in pairs for x in p if not 0 <= x < R.size]
        if bad:
            raise InputError(f"element {bad[0]} out of range for {R.label}")
        chain = witness_chain(R, [pair_class(R, a, b) for a, b in pairs])
        data = chain_report(chain)
        text = "\n".join(
            [f"{R.label} chain {' >= '.join(f'<{a},{b}>' for a, b in data['pairs'])}"]
            + [f"  {k}: {v}" for k, v in data.items() if k != "pairs"]
        )
        _emit(config, data, text)
        return EXIT_OK
    data = chain_audit(R, config.suite)
    _emit(config, data, f"{R.label}: {data['chains']} chains, {data['failure_count']} failures")
    return EXIT_OK if data["ok"] else EXIT_INVARIANT


def _suite_text(result: dict) -> str:
    status = "PASS" if result["ok"] else "FAIL"
    parts = [
        f"{k}={'ok' if result[k]['ok'] else 'FAIL'}"
        for k in ("pair_criteria", "minimality", "chains", "classification", "audit")
    ]
    return f"{status} {result['ring']} ({result['size']}): {' '.join(parts)}"


def run_verify_props(config: RunConfig) -> int:
    results, worst = [], EXIT_OK
    for path in config.inputs:
        record = audit_one(path, config)
        results.append(record)
        worst = max(worst, record["exit"])
    text = "\n".join(_record_text(r) for r in results)
    _emit(config, {"rings": results}, text)
    return worst


def audit_one(path: str | Path, config: RunConfig) -> dict:
    """Full invariant suite on one spec file, with errors captured per ring."""
    record: dict = {"file": Path(path).name}
    try:
        R = load_ring(path, config)
        result = ring_suite(R, config.suite)
    except RcpError as exc:
        code = exit_code_for(exc)
        record.update(status={1: "input_error", 2: "invariant_violation", 3: "cap_exceeded"}[code], exit=code)
        record["error"] = f"{type(exc).__name__}: {exc}"
        return record
    record.update(status="pass" if result["ok"] else "fail", exit=EXIT_OK if result["ok"] else EXIT_INVARIANT)
    record["result"] = result
    return record


def _audit_worker(args) -> dict:
    path, config_dict = args
    return audit_one(path, RunConfig(**config_dict))


def _record_text(record: dict) -> str:
    if "result" in record:
        return f"{record['file']}: {_suite_text(record['result'])}"
    return f"{record['file']}: {record['status'].upper()} {record['error']}"


def run_audit(config: RunConfig) -> int:
    directory = Path(config.inputs[0])
    if not directory.is_dir():
        raise InputError(f"{directory} is not a directory")
    paths = sorted(directory.glob("*.json"))
    if not paths:
        log.warning("no ring specs found in %s", directory)
    config_dict = asdict(config)
    jobs = [(str(p), config_dict) for p in paths]
    if config.jobs > 1 and len(paths) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            records = list(pool.map(_audit_worker, jobs))
    else:
        records = [_audit_worker(j) for j in jobs]
    worst = max((r["exit"] for r in records), default=EXIT_OK)
    passed = sum(r["status"] == "pass" for r in records)
    aggregate = {
        "ring_count": len(records),
        "passed": passed,
        "failed": len(records) - passed,
        "exit": worst,
        "rings": records,
    }
    text = "\n".join([_record_text(r) for r in records] + [f"{passed}/{len(records)} rings pass"])
    _emit(config, aggregate, text)
    return worst


RUNNERS = {
    "classify": run_classify,
    "rcp": run_rcp,
    "chains": run_chains,
    "audit": run_audit,
    "verify-props": run_verify_props,
}


# -- argument parsing -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--cap-full", type=int, default=FULL_ANALYSIS_CAP, help="largest ring for full analysis")
    common.add_argument("--cap-arith", type=int, default=ARITHMETIC_CAP, help="largest table to materialize")
    common.add_argument("--cap-ideals", type=int, default=IDEAL_CAP, help="largest one-sided ideal lattice")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for audit")
    common.add_argument("--chain-count", type=int, default=1000, help="chains sampled per ring")

    parser = argparse.ArgumentParser(prog="rcpkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="mode", required=True)
    sub.add_parser("classify", parents=[common], help="ring-class predicates").add_argument("spec")
    p = sub.add_parser("rcp", parents=[common], help="coprime-pair poset")
    p.add_argument("spec")
    p.add_argument("--dot", help="write the Hasse diagram as Graphviz DOT")
    p = sub.add_parser("chains", parents=[common], help="witnessed descending chains")
    p.add_argument("spec")
    p.add_argument("--chain", help="explicit chain 'a,b:a,b:...'; omitted means sample")
    sub.add_parser("audit", parents=[common], help="full suite over a directory").add_argument("directory")
    sub.add_parser("verify-props", parents=[common], help="full suite on spec files").add_argument(
        "specs", nargs="+"
    )
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    if args.mode == "audit":
        inputs = (args.directory,)
    elif args.mode == "verify-props":
        inputs = tuple(args.specs)
    else:
        inputs = (args.spec,)
    return RunConfig(
        mode=args.mode,
        inputs=inputs,
        cap_full=args.cap_full,
        cap_arith=args.cap_arith,
        cap_ideals=args.cap_ideals,
        format=args.format,
        out=args.out,
        dot=getattr(args, "dot", None),
        jobs=args.jobs,
        chain=getattr(args, "chain", None),
        chain_count=args.chain_count,
    )


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
        return RUNNERS[config.mode](config)
    except RcpError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exit_code_for(exc)


if __name__ == "__main__":
    sys.exit(main())
