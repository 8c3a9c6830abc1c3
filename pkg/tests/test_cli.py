"""Command line behaviour: exit codes, output formats, determinism."""

import json

import pytest

from madic import codec
from madic.cli import main
from madic.dense_types import enumerate_types, partition_from_type
from madic.reductions import check_reduces
from madic.spaces import PartitionTable

P20_DOC = {"m": 2, "n": 2, "values": [[0, 1], [0, 0]]}
P21_DOC = {"m": 2, "n": 2, "values": [[0, 1], [1, 1]]}
FAM_DOC = {"m": 2, "classes": [[0]]}
GEN_DOC = {"branch": {"stem": [], "period": [0]}, "i": 0, "j": 1, "count": 3}


@pytest.fixture
def write(tmp_path):
    def _write(name, doc):
        path = tmp_path / name
        path.write_text(json.dumps(doc))
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


class TestEnumerate:
    def test_two_colour_table_has_two_rows(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "2", "--format", "table")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "dense types on 2 colours: 2"
        assert lines[1].split()[:2] == ["idx", "m"]
        assert len(lines) == 4

    def test_four_colour_json_has_eight_types(self, capsys):
        doc = run_json(capsys, "enumerate", "--n", "4")
        assert doc["count"] == 8
        assert len(doc["types"]) == 8

    def test_degenerate_count_is_usage_error(self, capsys):
        code, _, err = run(capsys, "enumerate", "--n", "1")
        assert code == 2
        assert "at least 2" in err

    def test_json_tables_parse_back(self, capsys):
        doc = run_json(capsys, "enumerate", "--n", "3")
        tables = [codec.table_from_json(e["table"]) for e in doc["types"]]
        expected = [partition_from_type(t)[1] for t in enumerate_types(3)]
        assert tables == expected

    def test_output_is_deterministic(self, capsys):
        first = run(capsys, "enumerate", "--n", "3")
        second = run(capsys, "enumerate", "--n", "3")
        assert first == second

    def test_tables_command_renders_all_three(self, capsys):
        code, out, _ = run(capsys, "tables")
        assert code == 0
        assert out.count("dense types on") == 3
        assert "dense types on 4 colours: 8" in out


class TestClassify:
    def test_ascending_split_table(self, capsys, write):
        doc = run_json(capsys, "classify", write("g.json", P20_DOC))
        assert doc == {
            "classes": 2,
            "contains_cantor": False,
            "contains_split": True,
            "open_degree": 2,
        }

    def test_one_piece_table(self, capsys, write):
        path = write("g.json", {"m": 2, "n": 1, "values": [[0, 0], [0, 0]]})
        doc = run_json(capsys, "classify", path)
        assert doc["contains_cantor"] is True
        assert doc["contains_split"] is False
        assert doc["open_degree"] == 1

    def test_missing_color_is_validation_error(self, capsys, write):
        path = write("g.json", {"m": 2, "n": 3, "values": [[0, 1], [0, 0]]})
        code, _, err = run(capsys, "classify", path)
        assert code == 3
        assert "error:" in err


class TestConverge:
    def test_scattered_comb_reaches_infinity(self, capsys, write):
        doc = run_json(
            capsys,
            "converge",
            "--space",
            "scattered",
            "--family",
            write("f.json", FAM_DOC),
            "--generator",
            write("g.json", GEN_DOC),
        )
        assert doc["limit"] == {"kind": "infinity"}
        assert doc["all_stable"] is True
        assert all("k0" in r for r in doc["reports"])

    def test_partition_comb_with_explicit_tests(self, capsys, write):
        tests = [
            {"kind": "node", "word": [0, 0]},
            {"kind": "class", "branch": {"stem": [], "period": [0]}, "class": 1},
        ]
        doc = run_json(
            capsys,
            "converge",
            "--space",
            "partition",
            "--table",
            write("t.json", P20_DOC),
            "--generator",
            write("g.json", GEN_DOC),
            "--tests",
            write("tests.json", tests),
        )
        assert doc["limit"]["kind"] == "limit"
        assert doc["reports"][0]["k0"] == 2
        assert doc["reports"][1]["k0"] == 0

    def test_invalid_generator_is_validation_error(self, capsys, write):
        bad = dict(GEN_DOC, i=1)  # the all-zero branch never reads 1
        code, _, err = run(
            capsys,
            "converge",
            "--space",
            "partition",
            "--table",
            write("t.json", P20_DOC),
            "--generator",
            write("g.json", bad),
        )
        assert code == 3
        assert "error:" in err

    def test_space_flag_must_match_data_flag(self, capsys, write):
        code, _, _ = run(
            capsys,
            "converge",
            "--space",
            "partition",
            "--generator",
            write("g.json", GEN_DOC),
        )
        assert code == 3


class TestSeparate:
    POINTS = [
        {"kind": "node", "word": [0]},
        {"kind": "limit", "branch": {"stem": [], "period": [0]}, "class": 0},
        {"kind": "limit", "branch": {"stem": [], "period": [1]}, "class": 0},
    ]

    def test_certified_descriptors(self, capsys, write):
        doc = run_json(
            capsys,
            "separate",
            "--space",
            "partition",
            "--table",
            write("t.json", P20_DOC),
            "--points",
            write("p.json", self.POINTS),
        )
        assert doc["descriptors"] == [
            {"kind": "Wt", "t": [0]},
            {"kind": "NotWt", "t": [0]},
            {"kind": "NotWt", "t": [0]},
        ]
        assert doc["membership"] == [1, 1, 1]
        assert doc["empty_intersection"] is True

    def test_too_few_points_is_validation_error(self, capsys, write):
        code, _, err = run(
            capsys,
            "separate",
            "--space",
            "partition",
            "--table",
            write("t.json", P20_DOC),
            "--points",
            write("p.json", self.POINTS[:2]),
        )
        assert code == 3
        assert "3 points" in err

    def test_scattered_separation_with_infinity(self, capsys, write):
        points = [
            {"kind": "infinity"},
            {"kind": "limit", "branch": {"stem": [], "period": [0]}, "class": 0},
            {"kind": "node", "word": [1]},
        ]
        doc = run_json(
            capsys,
            "separate",
            "--space",
            "scattered",
            "--family",
            write("f.json", FAM_DOC),
            "--points",
            write("p.json", points),
        )
        assert doc["empty_intersection"] is True
        assert doc["membership"] == [1, 1, 1]


class TestReduce:
    def test_search_finds_identity(self, capsys, write):
        path = write("g.json", P20_DOC)
        doc = json.loads(run(capsys, "reduce", "--f", path, "--g", path)[1])
        assert doc["found"] is True
        r = codec.reduction_from_json(doc["reduction"], 2)
        table = codec.table_from_json(P20_DOC)
        assert check_reduces(table, table, r)

    def test_search_miss_exits_not_found(self, capsys, write):
        f = write("f.json", {"m": 2, "n": 1, "values": [[0, 0], [0, 0]]})
        g = write("g.json", {"m": 2, "n": 3, "values": [[0, 1], [2, 0]]})
        code, out, _ = run(capsys, "reduce", "--f", f, "--g", g, "--max-k", "3")
        assert code == 4
        assert json.loads(out) == {"found": False, "max_k": 3}

    def test_check_mode(self, capsys, write):
        path = write("g.json", P20_DOC)
        rpath = write("r.json", {"k": 1, "x": [], "e": [[0], [1]]})
        doc = run_json(capsys, "reduce", "--f", path, "--g", path, "--reduction", rpath)
        assert doc == {"reduces": True}
        other = write("f.json", P21_DOC)
        doc = run_json(capsys, "reduce", "--f", other, "--g", path, "--reduction", rpath)
        assert doc == {"reduces": False}

    def test_construct_mode_verifies(self, capsys, write):
        fa32 = write("g.json", {"m": 2, "n": 3, "values": [[0, 2], [2, 1]]})
        doc = run_json(capsys, "reduce", "--construct", "2", "--g", fa32)
        assert doc["verified"] is True
        assert len(doc["colors"]) == 2
        f = codec.table_from_json(doc["table"])
        g = PartitionTable.dense(2, 3, ((0, 2), (2, 1)))
        r = codec.reduction_from_json(doc["reduction"], 2)
        assert check_reduces(f, g, r)

    def test_construct_target_out_of_range(self, capsys, write):
        code, _, err = run(
            capsys, "reduce", "--construct", "2", "--g", write("g.json", P20_DOC)
        )
        assert code == 3
        assert "error:" in err

    def test_missing_f_without_construct(self, capsys, write):
        code, _, _ = run(capsys, "reduce", "--g", write("g.json", P20_DOC))
        assert code == 3

    def test_malformed_json_is_validation_error(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        code, _, err = run(capsys, "reduce", "--g", str(bad))
        assert code == 3
        assert "not valid JSON" in err

    def test_missing_file_is_validation_error(self, capsys, tmp_path):
        code, _, _ = run(capsys, "reduce", "--g", str(tmp_path / "absent.json"))
        assert code == 3


class TestUsage:
    def test_missing_required_flag(self, capsys):
        code, _, _ = run(capsys, "reduce")
        assert code == 2

    def test_unknown_command(self, capsys):
        code, _, _ = run(capsys, "transmogrify")
        assert code == 2

    def test_help_exits_clean(self, capsys):
        code, _, _ = run(capsys, "--help")
        assert code == 0
