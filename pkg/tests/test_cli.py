import json
import logging
import subprocess
import sys

import pytest

from rcpkit.cli import EXIT_CAP, EXIT_INPUT, EXIT_OK, RunConfig, main, parse_chain
from rcpkit.corpus import corpus_specs, write_corpus
from rcpkit.errors import InputError
from test_ring import nonassociative_table


def write(path, data):
    path.write_text(json.dumps(data))
    return str(path)


@pytest.fixture
def z6(tmp_path):
    return write(tmp_path / "z6.json", {"type": "zmod", "n": 6})


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestClassify:
    def test_zmod6(self, capsys, z6):
        code, out, _ = run(capsys, "classify", z6)
        data = json.loads(out)
        assert code == EXIT_OK
        assert data["class_count"] == 9 and data["minimal_class_count"] == 4
        assert data["predicates"]["local"]["value"] is False

    def test_zmod4_text(self, capsys, tmp_path):
        code, out, _ = run(capsys, "classify", write(tmp_path / "z4.json", {"type": "zmod", "n": 4}), "--format", "text")
        assert code == EXIT_OK
        assert out.startswith("Z/4 (4 elements)")
        assert any(line.split() == ["local", "True"] for line in out.splitlines())

    def test_out_file(self, capsys, tmp_path, z6):
        target = tmp_path / "report.json"
        code, out, _ = run(capsys, "classify", z6, "--out", str(target))
        assert code == EXIT_OK and out == ""
        assert json.loads(target.read_text())["size"] == 6

    def test_nonassociative_table(self, capsys, tmp_path):
        add, mul, one = nonassociative_table()
        path = write(tmp_path / "bad.json", {"type": "table", "add": add, "mul": mul, "one": one})
        code, out, err = run(capsys, "classify", path)
        assert code == EXIT_INPUT and out == ""
        assert "not associative" in err and "(" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "classify", str(tmp_path / "nope.json"))
        assert code == EXIT_INPUT and "cannot read" in err

    def test_cap_exceeded(self, capsys, tmp_path):
        path = write(tmp_path / "m.json", {"type": "matrix", "k": 2, "base": {"type": "zmod", "n": 3}})
        code, _, err = run(capsys, "classify", path, "--cap-full", "16")
        assert code == EXIT_CAP and "error:" in err


class TestRcp:
    def test_dot(self, capsys, tmp_path, z6):
        dot = tmp_path / "z6.dot"
        code, out, _ = run(capsys, "rcp", z6, "--dot", str(dot))
        assert code == EXIT_OK and len(json.loads(out)["classes"]) == 9
        first = dot.read_bytes()
        run(capsys, "rcp", z6, "--dot", str(dot))
        assert dot.read_bytes() == first
        assert first.startswith(b"digraph") and first.count(b"doublecircle") == 4


class TestChains:
    def test_explicit_chain(self, capsys, z6):
        code, out, _ = run(capsys, "chains", z6, "--chain", "1,1:2,3")
        data = json.loads(out)
        assert code == EXIT_OK
        assert data["pairs"] == [[1, 1], [2, 3]] and data["minimal_lower_bound"] == [2, 3]

    def test_not_descending(self, capsys, z6):
        code, _, err = run(capsys, "chains", z6, "--chain", "2,3:1,1")
        assert code == EXIT_INPUT and "error:" in err

    def test_out_of_range(self, capsys, z6):
        assert run(capsys, "chains", z6, "--chain", "1,9")[0] == EXIT_INPUT

    def test_sampled(self, capsys, z6):
        code, out, _ = run(capsys, "chains", z6, "--chain-count", "50")
        data = json.loads(out)
        assert code == EXIT_OK and data["chains"] >= 50 and data["ok"]

    @pytest.mark.parametrize("text", ["1,2,3", "a,b", "1,1:"])
    def test_parse_errors(self, text):
        with pytest.raises(InputError):
            parse_chain(text)


class TestAudit:
    def test_empty_directory(self, capsys, tmp_path, caplog):
        with caplog.at_level(logging.WARNING, logger="rcpkit"):
            code, out, _ = run(capsys, "audit", str(tmp_path))
        data = json.loads(out)
        assert code == EXIT_OK and data["ring_count"] == 0
        assert any("no ring specs" in r.message for r in caplog.records)

    def test_malformed_spec_is_isolated(self, capsys, tmp_path):
        write(tmp_path / "a_z4.json", {"type": "zmod", "n": 4})
        (tmp_path / "b_broken.json").write_text("{oops")
        write(tmp_path / "c_z6.json", {"type": "zmod", "n": 6})
        code, out, _ = run(capsys, "audit", str(tmp_path), "--chain-count", "50")
        data = json.loads(out)
        assert code == EXIT_INPUT
        status = {r["file"]: r["status"] for r in data["rings"]}
        assert status == {"a_z4.json": "pass", "b_broken.json": "input_error", "c_z6.json": "pass"}
        assert data["passed"] == 2 and data["failed"] == 1

    def test_cap_in_audit(self, capsys, tmp_path):
        write(tmp_path / "z9.json", {"type": "zmod", "n": 9})
        code, out, _ = run(capsys, "audit", str(tmp_path), "--cap-full", "8")
        assert code == EXIT_CAP and json.loads(out)["rings"][0]["status"] == "cap_exceeded"

    def test_jobs_match_serial(self, capsys, tmp_path):
        for n in (4, 5, 6):
            write(tmp_path / f"z{n}.json", {"type": "zmod", "n": n})
        serial = run(capsys, "audit", str(tmp_path), "--chain-count", "50")[1]
        parallel = run(capsys, "audit", str(tmp_path), "--chain-count", "50", "--jobs", "2")[1]
        assert serial == parallel

    def test_not_a_directory(self, capsys, z6):
        assert run(capsys, "audit", z6)[0] == EXIT_INPUT

    def test_verify_props(self, capsys, z6, tmp_path):
        code, out, _ = run(capsys, "verify-props", z6, "--format", "text", "--chain-count", "50")
        assert code == EXIT_OK and out.startswith("z6.json: PASS")


class TestConfig:
    def test_rejects_bad_values(self):
        with pytest.raises(InputError):
            RunConfig("audit", (".",), jobs=0)
        with pytest.raises(InputError):
            RunConfig("dance", (".",))

    def test_negative_cap_flag(self, capsys, z6):
        code, _, err = run(capsys, "classify", z6, "--cap-full", "0")
        assert code == EXIT_INPUT and "cap-full" in err


class TestCorpus:
    def test_corpus_contents(self, tmp_path):
        specs = corpus_specs()
        assert len(specs) == 36
        assert {"zmod27", "m2_zmod3", "ut2_zmod3", "zmod8_mod_4"} <= set(specs)
        paths = write_corpus(tmp_path)
        assert sorted(p.name for p in paths) == sorted(f"{k}.json" for k in specs)


def test_module_entry_point(tmp_path, z6):
    proc = subprocess.run(
        [sys.executable, "-m", "rcpkit", "rcp", z6, "--format", "text"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("Z/6: 9 classes, 4 minimal")


def test_committed_corpus_is_current():
    from pathlib import Path

    from rcpkit.ring import RingSpec

    directory = Path(__file__).resolve().parent.parent / "corpus"
    found = {p.stem: RingSpec.load(p) for p in sorted(directory.glob("*.json"))}
    assert found == corpus_specs()
