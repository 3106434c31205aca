import json

import pytest

from kclosure.cli import main
from kclosure.cycles import load_spec
from kclosure.suites import SUITES, run_suite


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_orbits_dump(capsys):
    code, out, _ = run(capsys, "orbits", "C4-regular", "-k", "2")
    assert code == 0
    assert out.splitlines()[:2] == ["0: 4: (1,1)", "1: 4: (1,2)"]


def test_orbits_json(capsys):
    code, out, _ = run(capsys, "orbits", "C2-regular", "-k", "2", "--json")
    record = json.loads(out)
    assert record["count"] == 2
    assert record["orbits"][1] == {"id": 1, "size": 2, "representative": [1, 2]}


@pytest.mark.parametrize("method", ["oracle", "backtrack", "nilpotent", "auto"])
def test_closure_methods(capsys, method):
    code, out, _ = run(capsys, "closure", "C6-regular", "-k", "2", "--method", method, "--json")
    assert code == 0
    record = json.loads(out)
    assert record["order"] == 6 and record["source_order"] == 6


def test_closure_table(capsys):
    code, out, _ = run(capsys, "closure", "V4-three-orbits", "-k", "2")
    assert code == 0 and "|G^(2)| = 8" in out


def test_closure_from_file(capsys, tmp_path):
    path = tmp_path / "g.group"
    path.write_text("degree 4\nname pair\ngen (1 2)\n")
    code, out, _ = run(capsys, "closure", str(path), "-k", "1", "--json")
    assert code == 0 and json.loads(out)["order"] == 2


def test_sylow(capsys):
    code, out, _ = run(capsys, "sylow", "C6-regular", "-p", "3", "--json")
    record = json.loads(out)
    assert record["order"] == 3
    assert record["generators"] == ["(1 5 3)(2 6 4)"]


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "C6-regular", "-p", "2", "--json")
    record = json.loads(out)
    assert record["p_orbits"] == [[1, 4], [2, 5], [3, 6]]
    assert record["P_prime"]["order"] == 2 and record["H_prime"]["order"] == 3
    code, out, _ = run(capsys, "decompose", "C6-regular", "-p", "2")
    assert "rho(1) = (P-orbit 0, H-orbit 0)" in out


def test_verify_json_records(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "dirsum", "-k", "2", "--json")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert records
    for r in records:
        assert {"group", "suite", "k", "method", "order_lhs", "order_rhs", "status",
                "millis"} <= set(r)
        assert r["status"] == "pass"


def test_verify_is_deterministic(capsys):
    first = run(capsys, "verify", "--suite", "chain", "--no-timings")[1]
    second = run(capsys, "verify", "--suite", "chain", "--no-timings")[1]
    assert first == second


def test_non_nilpotent_skipped(capsys):
    _, records = run_suite("main-theorem", 2)
    s3 = [r for r in records if r.group == "S3-natural"]
    assert s3 and all(r.status == "skip" and "NotNilpotent" in r.note for r in s3)


def test_budget_skip_not_fail():
    from kclosure.budgets import Budgets
    code, records = run_suite("chain", 3, Budgets(max_backtrack_degree=6))
    assert code == 0
    assert any(r.status == "skip" for r in records)


def test_catalog_emit(capsys, tmp_path):
    code, out, _ = run(capsys, "catalog", "--emit", str(tmp_path))
    assert code == 0
    spec = load_spec(tmp_path / "Q8-regular.group")
    assert spec.group().order() == 8


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog")
    assert "Q8-regular" in out


def test_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.group"
    bad.write_text("degree 3\ngen (1 1 2)\n")
    assert run(capsys, "orbits", str(bad))[0] == 2
    assert run(capsys, "orbits", "no-such-group")[0] == 2
    assert run(capsys, "closure", "S3-natural", "-k", "2", "--method", "nilpotent")[0] == 1
    assert run(capsys, "closure", "C12-regular", "-k", "2", "--method", "oracle")[0] == 1
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nonsense"])
    assert exc.value.code == 2


def test_unknown_suite_api():
    with pytest.raises(KeyError):
        run_suite("nonsense")
    assert len(SUITES) == 9
