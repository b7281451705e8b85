import json

import pytest

from coinvariant import cli
from coinvariant.store import (
    CacheStore,
    default_cache_dir,
    payload_bytes,
    report_document,
)


@pytest.fixture
def store(tmp_path):
    return CacheStore(tmp_path / "cache")


class TestCacheStore:
    def test_cold_build_persists(self, store):
        table = store.get_or_build("char", 4)
        assert table.n == 4
        assert (store.root / "char-4.json").exists()
        manifest = json.loads((store.root / "manifest.json").read_text())
        entry = manifest["entries"][0]
        assert (entry["kind"], entry["n"], entry["file"]) == ("char", 4, "char-4.json")

    def test_warm_load_skips_rebuild(self, tmp_path):
        first = CacheStore(tmp_path)
        built = first.get_or_build("graded", 5)
        stamp = (tmp_path / "graded-5.json").stat().st_mtime_ns
        second = CacheStore(tmp_path)
        loaded = second.get_or_build("graded", 5)
        assert (tmp_path / "graded-5.json").stat().st_mtime_ns == stamp
        assert loaded.b == built.b

    def test_live_handle_is_shared(self, store):
        assert store.get_or_build("kron", 4) is store.get_or_build("kron", 4)

    def test_tampered_file_rebuilds(self, tmp_path):
        first = CacheStore(tmp_path)
        built = first.get_or_build("char", 4)
        path = tmp_path / "char-4.json"
        doc = json.loads(path.read_text())
        doc["values"][0][0] = 999
        path.write_text(json.dumps(doc))
        fresh = CacheStore(tmp_path)
        reloaded = fresh.get_or_build("char", 4)
        assert reloaded.values == built.values
        # rebuild restored a digest-valid file
        again = CacheStore(tmp_path).get_or_build("char", 4)
        assert again.values == built.values

    def test_schema_version_mismatch_rebuilds(self, tmp_path):
        first = CacheStore(tmp_path)
        first.get_or_build("graded", 4)
        path = tmp_path / "graded-4.json"
        doc = json.loads(path.read_text())
        doc["schema_version"] = 0
        data = json.dumps(doc, indent=2) + "\n"
        path.write_text(data)
        # keep the digest consistent so only the version check can reject
        manifest = json.loads((tmp_path / "manifest.json").read_text())
        import hashlib

        for entry in manifest["entries"]:
            if entry["kind"] == "graded":
                entry["sha256"] = (
                    "sha256:" + hashlib.sha256(data.encode()).hexdigest()
                )
        (tmp_path / "manifest.json").write_text(json.dumps(manifest))
        table = CacheStore(tmp_path).get_or_build("graded", 4)
        assert table.n == 4
        assert json.loads(path.read_text())["schema_version"] == 1

    def test_unknown_kind(self, store):
        with pytest.raises(ValueError):
            store.get_or_build("bogus", 3)

    def test_cap_enforced_even_on_warm_cache(self, store):
        from coinvariant.errors import LimitExceeded

        store.get_or_build("kron", 4, max_n=4)
        with pytest.raises(LimitExceeded):
            store.get_or_build("kron", 4, max_n=3)
        assert store.get_or_build("kron", 4).n == 4

    def test_env_var_controls_default_dir(self, tmp_path, monkeypatch):
        monkeypatch.setenv("COINVARIANT_CACHE_DIR", str(tmp_path / "viaenv"))
        assert default_cache_dir() == tmp_path / "viaenv"


class TestReportDocuments:
    def test_round_trip(self, store):
        doc = report_document("verify-flag", {"n": 4}, {"status": "pass"}, store)
        data = json.dumps(doc)
        assert json.loads(data) == doc

    def test_payload_bytes_exclude_provenance(self, store):
        a = report_document("x", {}, {"k": 1}, store)
        b = report_document("x", {}, {"k": 1}, store)
        b["provenance"]["generated_at"] = "someday"
        assert payload_bytes(a) == payload_bytes(b)


def run_cli(tmp_path, *args):
    return cli.run([*args, "--cache-dir", str(tmp_path / "cache")])


class TestCli:
    def test_fake_degrees_prints_polynomial(self, tmp_path, capsys):
        assert run_cli(tmp_path, "fake-degrees", "--n", "3", "--lambda", "2,1") == 0
        assert capsys.readouterr().out.strip() == "q + q^2"

    def test_fake_degrees_rejects_wrong_size(self, tmp_path, capsys):
        assert run_cli(tmp_path, "fake-degrees", "--n", "4", "--lambda", "2,1") == 1

    def test_kronecker_prints_integer(self, tmp_path, capsys):
        code = run_cli(
            tmp_path,
            "kronecker",
            "--n", "3",
            "--lambda", "2,1",
            "--mu", "2,1",
            "--nu", "2,1",
        )
        assert code == 0
        assert capsys.readouterr().out.strip() == "1"

    def test_verify_flag_pass(self, tmp_path, capsys):
        out = tmp_path / "report.json"
        code = run_cli(
            tmp_path, "verify-flag", "--n", "5", "--out", str(out)
        )
        assert code == 0
        doc = json.loads(out.read_text())
        assert doc["command"] == "verify-flag"
        assert doc["payload"]["status"] == "pass"
        assert doc["payload"]["kind"] == "flag-lc"
        assert doc["provenance"]["cache_digests"]

    def test_springer_scan_violation_exit_code(self, tmp_path, capsys):
        out = tmp_path / "scan.json"
        code = run_cli(
            tmp_path, "springer-scan", "--n-max", "7", "--out", str(out)
        )
        assert code == 2
        payload = json.loads(out.read_text())["payload"]
        assert [c["mu"] for c in payload["counterexamples"]] == ["4,1,1,1"]

    def test_csv_export(self, tmp_path):
        out = tmp_path / "report.csv"
        assert run_cli(tmp_path, "unimodal", "--n", "4", "--out", str(out)) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "nu,i,d"
        # five partitions of 4, five interior degrees
        assert len(lines) == 1 + 5 * 5

    def test_unknown_flag_is_operational_error(self, tmp_path):
        assert cli.run(["verify-flag", "--n", "5", "--bogus"]) == 1

    def test_unknown_command(self):
        assert cli.run(["frobnicate"]) == 1

    def test_no_command_prints_help(self, capsys):
        assert cli.run([]) == 1
        assert "usage" in capsys.readouterr().out

    def test_help_exits_zero(self):
        assert cli.run(["--help"]) == 0

    def test_selftest(self, tmp_path, capsys):
        assert run_cli(tmp_path, "selftest", "--n-max", "4") == 0
        out = capsys.readouterr().out
        assert "all suites pass" in out

    def test_warm_and_cold_payloads_identical(self, tmp_path):
        out1 = tmp_path / "cold.json"
        out2 = tmp_path / "warm.json"
        assert run_cli(tmp_path, "verify-flag", "--n", "5", "--out", str(out1)) == 0
        assert run_cli(tmp_path, "verify-flag", "--n", "5", "--out", str(out2)) == 0
        cold = json.loads(out1.read_text())
        warm = json.loads(out2.read_text())
        assert payload_bytes(cold) == payload_bytes(warm)

    def test_jobs_payloads_identical(self, tmp_path):
        out1 = tmp_path / "j1.json"
        out2 = tmp_path / "j2.json"
        assert (
            run_cli(
                tmp_path, "springer-scan", "--n-max", "7",
                "--jobs", "1", "--out", str(out1),
            )
            == 2
        )
        assert (
            run_cli(
                tmp_path, "springer-scan", "--n-max", "7",
                "--jobs", "2", "--out", str(out2),
            )
            == 2
        )
        a = json.loads(out1.read_text())
        b = json.loads(out2.read_text())
        assert payload_bytes(a) == payload_bytes(b)

    def test_env_cache_dir_used_when_flag_absent(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("COINVARIANT_CACHE_DIR", str(tmp_path / "envcache"))
        assert cli.run(["kronecker", "--n", "2", "--lambda", "2", "--mu", "2", "--nu", "2"]) == 0
        assert (tmp_path / "envcache" / "char-2.json").exists()
