import json
from pathlib import Path

import pytest

from cremona_length.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_length_and_chain(capsys):
    assert run(capsys, "length", "(17; 6^8)") == (0, "5\n", "")
    assert run(capsys, "length", "(1)")[1] == "0\n"
    assert run(capsys, "length", "(19; 7^7, 4, 1)")[1] == "4\n"
    _, out, _ = run(capsys, "chain", "(17; 6^8)")
    assert out.splitlines()[1] == "(17; 6^8) -> (14; 6, 5^6, 3) -> (8; 3^7) -> (5; 2^6) -> (3; 2, 1^4) -> (1)"


def test_length_verify(capsys):
    code, out, _ = run(capsys, "--json", "length", "(11; 6, 5, 4^2, 3^2, 2^2, 1)", "--verify")
    record = json.loads(out)
    assert code == 0 and record["verified"] is True


def test_exit_codes(capsys):
    assert run(capsys, "length", "(3; 1, 1")[0] == 1
    assert run(capsys, "length", "(3; 1, 1, 1)")[0] == 2
    code, _, err = run(capsys, "length", "(7; 4^2, 3, 1^7)")
    assert code == 2 and "(3; 1^7, -1)" in err
    assert run(capsys, "mono-length", "[[2,0],[0,1]]")[0] == 3
    assert run(capsys, "factor", "[[1,-1],[0,1]]")[0] == 3
    assert run(capsys, "mono-length", "[[1,2],[3]]")[0] == 1
    assert run(capsys, "table", "0")[0] == 1
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 1


def test_hudson_traces(capsys):
    code, out, err = run(capsys, "hudson", "(-7; -2^12)", "--trace")
    assert code == 2 and "degree -7" in err
    code, _, err = run(capsys, "hudson", "(3; 1^7, -1)", "--trace")
    assert code == 2 and "negative multiplicity" in err
    code, _, err = run(capsys, "hudson", "(7; 3, 4^2, 1^7)", "--trace")
    assert code == 2 and err.splitlines()[1:] == ["(7; 4^2, 3, 1^7)", "(3; 1^7, -1)"]
    code, out, _ = run(capsys, "hudson", "(8; 3^7)", "--trace")
    assert code == 0 and out.splitlines()[-1] == "(1)"
    assert run(capsys, "hudson", "(3; 1^3)")[0] == 2


@pytest.mark.parametrize("d", range(1, 13))
def test_table_matches_golden(capsys, d):
    code, out, _ = run(capsys, "table", str(d))
    assert code == 0
    assert out.encode() == (GOLDEN / f"table_{d:02d}.txt").read_bytes()


def test_table_json_and_enumerate(capsys):
    _, out, _ = run(capsys, "--json", "table", "12")
    rows = json.loads(out)["result"]["rows"]
    assert len(rows) == 29
    assert [r["length"] for r in rows if r["label"] in ("12.27", "12.28")] == [4, 4]
    _, out, _ = run(capsys, "enumerate", "5")
    assert out.splitlines() == ["(5; 4, 1^8)", "(5; 3, 2^3, 1^3)", "(5; 2^6)"]


def test_mono_commands(capsys):
    assert run(capsys, "mono", "[[36,115],[41,131]]", "--length")[1] == "3\n"
    assert run(capsys, "mono", "[[0,1],[1,1]]", "--dyn")[1] == "1/2\n"
    assert run(capsys, "mono-dyn", "1,1,1,1")[1] == "2\n"
    assert run(capsys, "mono-length", "5,1")[1] == "1\n"
    assert run(capsys, "mono", "1", "--factor")[1] == "1\n"
    assert run(capsys, "factor", "[[1,0],[3,1]]")[1] == "3 (after conjugating by tau)\n"
    _, out, _ = run(capsys, "cf", "[[36,115],[41,131]]")
    assert "d/c = 131/41 = [3; 5, 7, 1]" in out
    _, out, _ = run(capsys, "--json", "mono-length", "[[-1,0],[0,-1]]")
    record = json.loads(out)
    assert record["result"]["length"] == 1 and record["result"]["witness_ok"]


def test_wright(capsys):
    assert run(capsys, "wright", "(7; 3^4, 2^3)")[1] == "6\n"


def test_verify_words(capsys):
    code, out, _ = run(capsys, "verify", "words", "--max-letters", "8")
    assert code == 0 and out.startswith("words: PASS")


def test_json_is_deterministic(capsys):
    first = run(capsys, "--json", "table", "9")[1]
    second = run(capsys, "--json", "table", "9")[1]
    assert first == second
