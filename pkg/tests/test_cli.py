"""End-to-end tests of the command-line surface and file formats."""

import json

import pytest

from digitop import AdjacencySpec, DigitalImage, FormatError, canonical
from digitop.cli import main
from digitop.formats import dump_image, load_image, parse_image


@pytest.fixture
def curve_files(tmp_path):
    assert main(["examples", "--out", str(tmp_path)]) == 0
    return tmp_path


def run(capsys, argv):
    capsys.readouterr()  # drop anything earlier in the capture buffer
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def machine(capsys, argv):
    code, out, err = run(capsys, argv + ["--format", "machine"])
    assert code == 0, err
    return json.loads(out)


def write_image(tmp_path, name, points, spec):
    path = tmp_path / name
    path.write_text(dump_image(points, spec), encoding="utf-8")
    return str(path)


def test_parse_image_accepts_t_or_k():
    by_t = parse_image('{"n": 2, "t": 2, "points": [[0, 0], [1, 1]]}')
    by_k = parse_image('{"n": 2, "k": 8, "points": [[0, 0], [1, 1]]}')
    assert by_t == by_k
    assert by_t.spec == AdjacencySpec(2, 2)


@pytest.mark.parametrize(
    "doc,fragment",
    [
        ("{", "line 1"),
        ('{"n": 2, "points": [[0, 0]]}', "exactly one of"),
        ('{"n": 2, "t": 1, "k": 4, "points": [[0, 0]]}', "exactly one of"),
        ('{"n": 2, "k": 7, "points": [[0, 0]]}', "valid values"),
        ('{"n": 2, "t": 1, "points": []}', "non-empty"),
        ('{"n": 2, "t": 1, "points": [[0, 0], [0, 0]]}', "duplicate point"),
        ('{"n": 2, "t": 1, "points": [[0, 0, 0]]}', "list of 2 integers"),
        ('{"n": 2, "t": 1, "points": [[0, 0.5]]}', "non-integer"),
        ('{"n": 2, "t": 1, "points": [[0, 0]], "extra": 1}', "unknown keys"),
    ],
)
def test_parse_image_rejections(doc, fragment):
    with pytest.raises((FormatError, Exception)) as err:
        parse_image(doc)
    assert fragment in str(err.value)


def test_image_files_round_trip(curve_files):
    for name in ("sc4_2_4", "sc8_2_4", "sc8_2_6", "sc26_3_5", "sc18_3_6_ex35", "msc18"):
        image = load_image(curve_files / f"{name}.json")
        stored = canonical(name.upper())
        assert image == stored.as_image()


def test_ktable_rows(capsys):
    payload = machine(capsys, ["ktable", "--max-n", "6"])
    rows = payload["result"]["rows"]
    assert rows[4] == [10, 50, 130, 210, 242]
    assert rows[5] == [12, 72, 232, 472, 664, 728]
    payload = machine(capsys, ["ktable", "--max-n", "1"])
    assert payload["result"]["rows"] == [[2]]


def test_neighborhood_command_five_point_example(capsys, tmp_path):
    y = write_image(
        tmp_path,
        "y.json",
        [(0, 0), (1, 0), (1, 1), (0, 1), (-1, 2)],
        AdjacencySpec(2, 2),
    )
    payload = machine(capsys, ["neighborhood", "--image", y, "--point", "0,0", "--eps", "1"])
    assert payload["result"]["size"] == 4
    assert [-1, 2] not in payload["result"]["members"]
    payload = machine(capsys, ["neighborhood", "--image", y, "--point", "0,0", "--eps", "2"])
    assert payload["result"]["size"] == 5
    assert payload["result"]["members"] == sorted(payload["result"]["members"])


def test_neighborhood_command_errors(capsys, tmp_path):
    y = write_image(tmp_path, "y.json", [(0, 0), (1, 0)], AdjacencySpec(2, 2))
    code, _, err = run(capsys, ["neighborhood", "--image", y, "--point", "9,9", "--eps", "1"])
    assert code == 2 and "not in the image" in err
    code, _, err = run(capsys, ["neighborhood", "--image", y, "--point", "0,0", "--eps", "0"])
    assert code == 2 and "positive" in err
    code, _, err = run(capsys, ["neighborhood", "--image", y, "--point", "zz", "--eps", "1"])
    assert code == 2 and "cannot parse point" in err


def test_connected_command(capsys, curve_files, tmp_path):
    payload = machine(capsys, ["connected", "--image", str(curve_files / "sc8_2_4.json")])
    assert payload["result"] == {
        "connected": True,
        "component_count": 1,
        "components": [[[0, 0], [1, -1], [1, 1], [2, 0]]],
    }
    far = write_image(tmp_path, "far.json", [(0, 0), (3, 0)], AdjacencySpec(1, 2))
    code, out, _ = run(capsys, ["connected", "--image", far])
    assert code == 0 and "not connected (2 components)" in out
    single = write_image(tmp_path, "one.json", [(5, 5)], AdjacencySpec(2, 2))
    code, out, _ = run(capsys, ["connected", "--image", single])
    assert code == 0 and out.startswith("connected")


def test_check_curve_command(capsys, curve_files, tmp_path):
    payload = machine(capsys, ["check-curve", "--image", str(curve_files / "msc18.json")])
    assert payload["result"]["is_curve"] is True
    assert payload["result"]["l"] == 6

    payload = machine(capsys, ["check-curve", "--image", str(curve_files / "sc26_3_5.json")])
    assert payload["result"]["l"] == 5

    unit = write_image(
        tmp_path, "unit.json", [(0, 0), (1, 0), (0, 1), (1, 1)], AdjacencySpec(2, 2)
    )
    code, out, _ = run(capsys, ["check-curve", "--image", unit])
    assert code == 0  # a negative verdict is still a successful analysis
    assert "degree" in out and "(0, 0)" in out

    bad = tmp_path / "bad.json"
    bad.write_text("{nope", encoding="utf-8")
    code, _, err = run(capsys, ["check-curve", "--image", str(bad)])
    assert code == 2 and "invalid JSON" in err


def test_search_curve_command(capsys):
    payload = machine(capsys, ["search-curve", "--n", "2", "--k", "4", "--l", "6"])
    assert payload["result"]["found"] is False
    assert "not a nonexistence proof" in payload["result"]["note"]
    assert payload["result"]["admissibility"] == "inadmissible"
    assert any("even-length" in flag for flag in payload["flags"])

    payload = machine(capsys, ["search-curve", "--n", "2", "--k", "8", "--l", "4"])
    assert payload["result"]["found"] is True
    assert len(payload["result"]["curve"]) == 4

    payload = machine(capsys, ["search-curve", "--n", "2", "--k", "8", "--l", "5"])
    assert payload["result"]["found"] is False


def test_search_curve_rejects_unknown_k(capsys):
    code, _, err = run(capsys, ["search-curve", "--n", "2", "--k", "7", "--l", "4"])
    assert code == 2
    assert "valid values" in err and "4 (t=1)" in err and "8 (t=2)" in err


def test_product_analyze_command(capsys, curve_files):
    sq = str(curve_files / "sc4_2_4.json")
    payload = machine(capsys, ["product-analyze", "--left", sq, "--right", sq])
    result = payload["result"]
    assert result["dimension"] == 4
    assert result["product_size"] == 16
    assert result["c_compatible"] == {"t": [1], "k": [8]}
    assert result["normal"] == {"t": [], "k": []}
    refuted = [o for o in result["outcomes"] if not o["normal"]]
    assert all(o["n_witness"] is not None for o in refuted)
    assert payload["inputs"]["left"]["sha256"] == payload["inputs"]["right"]["sha256"]


def test_product_analyze_negative_verdict_exits_zero(capsys, curve_files):
    code, out, _ = run(
        capsys,
        [
            "product-analyze",
            "--left", str(curve_files / "msc18.json"),
            "--right", str(curve_files / "msc18.json"),
        ],
    )
    assert code == 0
    assert "C-compatible adjacencies: none" in out
    assert "normal adjacencies: none" in out


def test_machine_reports_are_byte_identical(curve_files, tmp_path):
    sq = str(curve_files / "sc26_3_5.json")
    first = tmp_path / "first.json"
    second = tmp_path / "second.json"
    for out in (first, second):
        assert (
            main(
                [
                    "product-analyze",
                    "--left", sq,
                    "--right", sq,
                    "--format", "machine",
                    "--out", str(out),
                ]
            )
            == 0
        )
    assert first.read_bytes() == second.read_bytes()


def test_examples_single_name_and_unknown(capsys, tmp_path):
    code, out, _ = run(capsys, ["examples", "--name", "MSC18", "--out", str(tmp_path)])
    assert code == 0 and (tmp_path / "msc18.json").exists()
    doc = json.loads((tmp_path / "msc18.json").read_text())
    assert doc["n"] == 3 and doc["k"] == 18 and len(doc["points"]) == 6

    code, _, err = run(capsys, ["examples", "--name", "NOPE", "--out", str(tmp_path)])
    assert code == 2 and "valid names" in err and "SC8_2_6" in err


def test_examples_writes_all_six_by_default(capsys, tmp_path):
    payload = machine(capsys, ["examples", "--out", str(tmp_path)])
    assert len(payload["result"]["written"]) == 6
    for entry in payload["result"]["written"]:
        assert (tmp_path / entry["file"]).exists()


def test_missing_file_is_an_input_error(capsys):
    code, _, err = run(capsys, ["connected", "--image", "/nonexistent/x.json"])
    assert code == 2 and "cannot read" in err


def test_usage_error_exits_nonzero():
    with pytest.raises(SystemExit) as exc:
        main(["search-curve", "--n", "2", "--l", "4"])  # missing --t/--k
    assert exc.value.code == 2
