import io
import json

import pytest

from pwlie import cli
from pwlie.pweights import PermutationWeightSet, clear_memory_cache
from pwlie.verify import load_fixtures


def run(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_pweights_depth_three_row(capsys):
    code, out, _ = run(["pweights", "--rank", "5", "--labels", "1,0,0,0,0,0", "--max-depth", "3"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4
    assert set(lines[3].split()) == {"(3,3,2,2,2)_3", "(2,2,2,0,0)_3", "(3,1,1,1,0)_3"}


def test_pweights_depth_zero(capsys):
    code, out, _ = run(["pweights", "--labels", "1,0,0,0,0,0", "--max-depth", "0"], capsys)
    assert code == 0 and out == "(0,0,0,0,0)_0\n"


def test_pweights_json_round_trips(capsys):
    code, out, _ = run(["pweights", "--labels", "0,1,0,0,0,0", "--max-depth", "4", "--format", "json"], capsys)
    assert code == 0
    pws = PermutationWeightSet.from_json(json.loads(out))
    assert pws.horizon == 4 and pws.source.labels == (0, 1, 0, 0, 0, 0)


@pytest.mark.parametrize(
    "argv",
    [
        ["pweights", "--rank", "4", "--labels", "1,0,0,0,0,0"],
        ["pweights", "--labels", "1,x,0"],
        ["pweights", "--labels", "0,0,0"],
        ["pweights", "--labels", "1,0", "--max-depth", "-1"],
        ["strings", "--labels", "1,0", "--spec", "1,1"],
        ["strings", "--labels", "1,0,0", "--spec", "1,-1"],
        ["verify", "--only", "b7"],
    ],
)
def test_usage_errors(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2 and err.startswith("pwlie:")


def test_argparse_errors_exit_two():
    with pytest.raises(SystemExit) as info:
        cli.main(["pweights"])
    assert info.value.code == 2


def test_strings_partitions(capsys):
    code, out, _ = run(["strings", "--rank", "1", "--labels", "1,0", "--max-depth", "9", "--format", "csv"], capsys)
    assert code == 0
    values = [int(line.split(",")[-1]) for line in out.strip().splitlines()[1:]]
    assert values == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]


def test_strings_series_and_table(capsys):
    code, out, _ = run(["strings", "--labels", "1,1,0,0,0,0", "--max-depth", "3", "--series"], capsys)
    assert code == 0
    assert "1 + 10 q + 70 q^2 + 380 q^3" in out
    assert "q (2 + 22 q + 148 q^2" in out
    assert "q^2 (5 + 50 q" in out
    code, out, _ = run(["strings", "--labels", "1,1,0,0,0,0", "--max-depth", "0"], capsys)
    assert code == 0 and "(1,0,0,0,0)_0" in out


def test_strings_json(capsys):
    code, out, _ = run(["strings", "--labels", "1,1,0", "--max-depth", "3", "--format", "json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["rank"] == 2 and all(c["coeffs"] for c in data["classes"])


def test_strings_solver_failure(capsys):
    code, _, err = run(
        ["strings", "--labels", "1,1,0,0,0,0", "--max-depth", "3", "--signature-modulus", "rank"], capsys
    )
    assert code == 4
    assert "order J=" in err and "residual" in err


def test_cache_write_failure_still_prints(tmp_path, capsys):
    blocker = tmp_path / "not-a-dir"
    blocker.write_text("")
    clear_memory_cache()
    code, out, err = run(
        ["pweights", "--labels", "1,0,1,0", "--max-depth", "2", "--cache-dir", str(blocker)], capsys
    )
    assert code == 3
    assert out.startswith("(") and "cannot write cache file" in err


def test_verify_only_a2(capsys):
    code, out, _ = run(["verify", "--only", "a2", "--no-cache"], capsys)
    assert code == 0 and out.strip() == "A.2: OK"


def test_verify_corrupted_fixture(tmp_path, capsys):
    fixtures = load_fixtures()
    entries = fixtures["tables"]["A.2"]["entries"]
    victim = next(e for e in entries if e.endswith("_3"))
    entries.remove(victim)
    entries.append("(9,9,9,9,9)_3")
    path = tmp_path / "fixtures.json"
    path.write_text(json.dumps(fixtures))
    code, out, _ = run(["verify", "--only", "a2", "--fixtures", str(path)], capsys)
    assert code == 5
    assert "A.2: FAIL" in out
    assert f"computed but not printed {victim}" in out
    assert "printed but not computed (9,9,9,9,9)_3" in out


def test_command_functions_take_stream():
    buf = io.StringIO()
    cfg = cli.RunConfig(rank=1, labels=(1, 0), horizon=2, use_cache=False)
    assert cli.cmd_pweights(cfg, buf) == 0
    assert buf.getvalue().splitlines()[0] == "(0)_0"
