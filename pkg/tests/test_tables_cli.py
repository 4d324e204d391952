import json

import pytest

from cosetcodes import cli, tables
from cosetcodes.tables import TableRow, build_table

# published parameter rows, frozen as plain text
TABLE1_ROWS = [
    "[[24, 18, d >= 3]]_5", "[[24, 10, d >= 5]]_5",
    "[[48, 42, d >= 3]]_7", "[[48, 38, d >= 4]]_7", "[[48, 34, d >= 5]]_7",
    "[[48, 30, d >= 6]]_7", "[[48, 26, d >= 7]]_7",
    "[[63, 57, d >= 3]]_8", "[[63, 53, d >= 4]]_8", "[[63, 49, d >= 5]]_8",
    "[[63, 45, d >= 6]]_8", "[[63, 41, d >= 7]]_8",
    "[[80, 54, d >= 8]]_9", "[[80, 50, d >= 9]]_9",
    "[[120, 114, d >= 3]]_11", "[[120, 106, d >= 5]]_11",
    "[[120, 98, d >= 7]]_11", "[[120, 90, d >= 9]]_11",
    "[[120, 82, d >= 11]]_11",
    "[[168, 162, d >= 3]]_13", "[[168, 154, d >= 5]]_13",
    "[[168, 146, d >= 7]]_13", "[[168, 138, d >= 9]]_13",
    "[[168, 130, d >= 11]]_13", "[[168, 122, d >= 13]]_13",
]

TABLE2_ROWS = [
    "[[15, 9, d >= 3]]_4", "[[15, 5, d >= 4]]_4",
    "[[24, 18, d >= 3]]_5", "[[24, 14, d >= 4]]_5", "[[24, 10, d >= 5]]_5",
    "[[63, 57, d >= 3]]_8", "[[63, 53, d >= 4]]_8", "[[63, 49, d >= 5]]_8",
    "[[63, 45, d >= 6]]_8", "[[63, 41, d >= 7]]_8", "[[63, 37, d >= 8]]_8",
    "[[255, 244, d >= 3]]_4", "[[255, 236, d >= 4]]_4",
    "[[624, 613, d >= 3]]_5", "[[624, 605, d >= 4]]_5", "[[624, 597, d >= 5]]_5",
    "[[124, 102, d >= 5]]_5",
    "[[342, 320, d >= 5]]_7", "[[342, 314, d >= 6]]_7", "[[342, 308, d >= 7]]_7",
    "[[255, 242, d >= 3]]_4", "[[255, 234, d >= 4]]_4",
    "[[624, 611, d >= 3]]_5", "[[624, 603, d >= 4]]_5", "[[624, 595, d >= 5]]_5",
]

TABLE3_ROWS = [
    "(15, 8, 5; 1, dfree >= 9)_4", "(24, 15, 7; 1, dfree >= 11)_5",
    "(48, 35, 11; 1, dfree >= 15)_7", "(63, 48, 13; 1, dfree >= 17)_8",
    "(80, 63, 15; 1, dfree >= 19)_9", "(120, 99, 19; 1, dfree >= 23)_11",
    "(168, 143, 23; 1, dfree >= 27)_13", "(255, 224, 29; 1, dfree >= 33)_16",
    "(15, 7, 4; 1, dfree >= 9)_4", "(24, 14, 6; 1, dfree >= 11)_5",
    "(120, 98, 18; 1, dfree >= 23)_11", "(168, 142, 22; 1, dfree >= 27)_13",
    "(255, 223, 28; 1, dfree >= 33)_16",
    "(15, 5, 2; 1, dfree >= 9)_4",
    "(24, 12, 4; 1, dfree >= 11)_5", "(24, 10, 2; 1, dfree >= 11)_5",
    "(48, 32, 8; 1, dfree >= 15)_7", "(48, 30, 6; 1, dfree >= 15)_7",
    "(48, 28, 4; 1, dfree >= 15)_7", "(48, 26, 2; 1, dfree >= 15)_7",
    "(255, 221, 26; 1, dfree >= 33)_16", "(255, 219, 24; 1, dfree >= 33)_16",
    "(255, 213, 18; 1, dfree >= 33)_16", "(255, 209, 14; 1, dfree >= 33)_16",
    "(255, 203, 8; 1, dfree >= 33)_16", "(255, 197, 2; 1, dfree >= 33)_16",
    "(15, 8, 3; 1, dfree >= 8)_4",
    "(24, 15, 3; 1, dfree >= 9)_5", "(24, 15, 5; 1, dfree >= 10)_5",
    "(48, 35, 3; 1, dfree >= 11)_7", "(48, 35, 5; 1, dfree >= 12)_7",
    "(48, 35, 7; 1, dfree >= 13)_7", "(48, 35, 9; 1, dfree >= 14)_7",
]


def test_table1_rows_exact():
    rows = tables.table1(budget=None)
    assert [r.text for r in rows] == TABLE1_ROWS


def test_table2_rows_exact():
    rows = tables.table2()
    assert [r.text for r in rows] == TABLE2_ROWS


def test_table3_rows_exact():
    rows = tables.table3()
    assert [r.text for r in rows] == TABLE3_ROWS
    assert all(r.mu == 1 for r in rows)


def test_table_regeneration_is_deterministic():
    a = [r.to_dict() for r in tables.table3()]
    b = [r.to_dict() for r in tables.table3()]
    assert a == b


def test_build_table_rejects_unknown():
    with pytest.raises(ValueError):
        build_table(4)


# ---------------------------------------------------------------
# CLI
# ---------------------------------------------------------------

def test_cli_cosets_degenerate(capsys):
    assert cli.main(["cosets", "2", "1"]) == 0
    out = capsys.readouterr().out
    assert "1 cosets" in out
    assert "C_0 = {0}" in out


def test_cli_cosets_counts_lemma_block(capsys):
    assert cli.main(["cosets", "5", "2"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].endswith("14 cosets")
    assert "C_6 = {6}" in out


def test_cli_code(capsys):
    assert cli.main(["code", "5", "2", "0", "1", "2", "3"]) == 0
    out = capsys.readouterr().out
    assert "[24, 17, d >= 5]_5" in out


def test_cli_table_json_roundtrip(tmp_path):
    out_file = tmp_path / "t1.json"
    assert cli.main(["table", "1", "--format", "json",
                     "--out", str(out_file), "--budget", "0"]) == 0
    payload = json.loads(out_file.read_text())
    assert payload["command"] == "table 1"
    assert "tool_version" in payload and payload["discrepancies"] == []
    parsed = [TableRow.from_dict(d) for d in payload["rows"]]
    assert parsed == tables.table1(budget=cli.OracleBudget(max_enumeration=0))


def test_cli_table_csv(tmp_path):
    import csv as csvmod

    out_file = tmp_path / "t3.csv"
    assert cli.main(["table", "3", "--format", "csv", "--out", str(out_file)]) == 0
    with open(out_file, newline="") as fh:
        rows = list(csvmod.DictReader(fh))
    assert len(rows) == len(TABLE3_ROWS)
    assert rows[0]["text"] == TABLE3_ROWS[0]
    assert set(rows[0].keys()) == set(tables.table3()[0].to_dict().keys())


def test_cli_verify_cosets_passes(capsys):
    assert cli.main(["verify", "cosets", "--qmax", "5", "--mmax", "2"]) == 0
    out = capsys.readouterr().out
    assert "0 failures" in out


def test_cli_verify_zero_budget_skips_oracle(capsys):
    assert cli.main(["verify", "css", "--budget", "0"]) == 0
    out = capsys.readouterr().out
    # every oracle check is skipped under a zero budget
    lines = [l for l in out.splitlines() if "distance-oracle" in l]
    assert lines and all("skipped" in l for l in lines)


def test_cli_config_file_and_flag_precedence(tmp_path, capsys):
    cfg = tmp_path / "cfg"
    cfg.write_text("budget = 0\njobs = 2\n# comment\n")
    assert cli.main(["verify", "css", "--config", str(cfg)]) == 0
    out = capsys.readouterr().out
    lines = [l for l in out.splitlines() if "distance-oracle" in l]
    assert lines and all("skipped" in l for l in lines)
    # flag overrides the config: a tiny budget still allows the smallest case
    assert cli.main(["verify", "cosets", "--config", str(cfg),
                     "--qmax", "3", "--mmax", "2"]) == 0


def test_cli_rejects_bad_config(tmp_path):
    cfg = tmp_path / "cfg"
    cfg.write_text("nonsense = 1\n")
    with pytest.raises(SystemExit):
        cli.main(["verify", "css", "--config", str(cfg)])


def test_cli_verify_css_single_q_oracle_confirms(capsys):
    # with a budget covering 4^12 codewords, both length-15 instances are
    # oracle-confirmed
    assert cli.main(["verify", "css", "--q", "4",
                     "--budget", str(4**12)]) == 0
    out = capsys.readouterr().out
    confirmed = [l for l in out.splitlines()
                 if "distance-oracle (q=4, m=2)" in l]
    assert len(confirmed) == 2
    assert all(l.endswith("pass") for l in confirmed)


def test_cli_css_and_conv_single_instances(capsys):
    assert cli.main(["css", "--family", "ladder", "--q", "5",
                     "--m", "3", "--c", "5"]) == 0
    assert "[[124, 102, d >= 5]]_5" in capsys.readouterr().out
    assert cli.main(["conv", "--family", "short-parent", "--q", "7",
                     "--i", "4"]) == 0
    assert "(48, 35, 9; 1, dfree >= 14)_7" in capsys.readouterr().out
