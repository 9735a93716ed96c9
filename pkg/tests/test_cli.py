"""End-to-end tests of the command line interface."""

import json

from click.testing import CliRunner

from oscweb.cli import main
from oscweb.render import parse_dot
from oscweb.strings import string_from_json, string_to_json
from oscweb.webs import Web, grow_web, webs_equal

B, W = "B", "W"

TRIPOD = ((1, B), (0, B), (-1, B))
IDENTITY2 = ((1, B), (1, W))


def run(*args, input=None):
    return CliRunner().invoke(main, args, input=input, catch_exceptions=False)


def lines_of(result):
    return [line for line in result.output.splitlines() if line]


# ---------------------------------------------------------------------------
# enumerate


def test_enumerate_webs_only_two():
    result = run("enumerate", "--length", "2", "--webs-only")
    assert result.exit_code == 0
    strings = [string_from_json(json.loads(line)) for line in lines_of(result)]
    assert strings == [((1, B), (1, W)), ((-1, W), (-1, B))]


def test_enumerate_length_zero():
    result = run("enumerate", "--length", "0")
    assert result.exit_code == 0
    assert lines_of(result) == ['{"n": 3, "k": 0, "shapes": [[0, 0, 0]]}']


def test_enumerate_webs_only_three():
    result = run("enumerate", "--length", "3", "--webs-only")
    assert len(lines_of(result)) == 2


def test_enumerate_got_count():
    result = run("enumerate", "--length", "4", "--parts", "2")
    assert len(lines_of(result)) == sum(
        1 for _ in __import__("oscweb").enumerate_got(4, 2)
    )


def test_enumerate_usage_errors():
    assert run("enumerate", "--length", "-1").exit_code == 2
    assert run("enumerate", "--length", "2", "--webs-only", "--parts", "2").exit_code == 2


# ---------------------------------------------------------------------------
# promote


def test_promote_string_input_with_check():
    payload = json.dumps(string_to_json(IDENTITY2))
    result = run("promote", "--check", input=payload + "\n")
    assert result.exit_code == 0
    assert json.loads(result.output) == {
        "n": 3,
        "k": 2,
        "shapes": [[0, 0, 0], [0, 0, -1], [0, 0, 0]],
    }


def test_promote_steps_round_trip():
    payload = json.dumps(string_to_json(TRIPOD))
    once = run("promote", input=payload)
    thrice = run("promote", "--steps", "3", "--mode", "tableau", input=payload)
    start = run("promote", "--steps", "0", input=payload)
    assert json.loads(thrice.output) == json.loads(start.output)
    assert json.loads(once.output)["k"] == 3


def test_promote_modes_agree():
    payload = json.dumps(string_to_json(TRIPOD))
    growth = run("promote", "--mode", "growth", input=payload)
    tableau = run("promote", "--mode", "tableau", input=payload)
    assert json.loads(growth.output) == json.loads(tableau.output)


def test_promote_bad_input():
    assert run("promote", input="not json\n").exit_code == 2
    assert run("promote", input='{"no": "shapes"}\n').exit_code == 2


# ---------------------------------------------------------------------------
# grow / rotate


def test_grow_word_tripod():
    result = run("grow", "--word", "10m")
    assert result.exit_code == 0
    web = Web.from_json(json.loads(result.output))
    assert webs_equal(web, grow_web(TRIPOD))


def test_grow_stream_with_policy_check():
    payload = "\n".join(
        json.dumps(string_to_json(s)) for s in (IDENTITY2, TRIPOD)
    )
    result = run("grow", "--check-policies", input=payload)
    assert result.exit_code == 0
    assert len(lines_of(result)) == 2


def test_grow_rejects_non_dominant():
    payload = json.dumps(string_to_json(((1, B), (0, B))))
    assert run("grow", input=payload).exit_code == 2


def test_rotate_word():
    result = run("rotate", "--word", "110m0m")
    assert result.exit_code == 0
    assert result.output.strip() == "10m10m"


def test_rotate_identity_needs_search():
    payload = json.dumps(string_to_json(IDENTITY2))
    table = run("rotate", "--method", "table", input=payload)
    assert table.exit_code == 2
    auto = run("rotate", input=payload)
    assert auto.exit_code == 0
    assert string_from_json(json.loads(auto.output)) == ((-1, W), (-1, B))


def test_rotate_orbit_closes():
    payload = json.dumps(string_to_json(TRIPOD))
    result = run("rotate", "--steps", "3", input=payload)
    assert string_from_json(json.loads(result.output)) == TRIPOD


# ---------------------------------------------------------------------------
# verify / csp


def test_verify_main_theorem_summary():
    result = run("verify", "main-theorem", "--max-length", "4")
    assert result.exit_code == 0
    rows = [line.split("\t") for line in lines_of(result)]
    assert rows[0] == ["length", "checked", "failed"]
    assert rows[-1] == ["result", "PASS"]
    by_k = {int(r[0]): int(r[1]) for r in rows[1:-1]}
    assert by_k == {0: 1, 1: 0, 2: 2, 3: 2, 4: 12}


def test_verify_equivalence_two_parts():
    result = run("verify", "equivalence", "--parts", "2", "--max-length", "4")
    assert result.exit_code == 0
    assert "result\tPASS" in result.output


def test_verify_invariants():
    result = run("verify", "invariants", "--max-length", "4")
    assert result.exit_code == 0
    assert "structure" in result.output and "orbit" in result.output
    assert "result\tPASS" in result.output


def test_verify_csp_single_pair(tmp_path):
    figure = tmp_path / "csp.svg"
    result = run(
        "verify", "csp", "--rows", "3", "--cols", "3", "--figure", str(figure)
    )
    assert result.exit_code == 0
    assert "result\tPASS" in result.output
    assert figure.stat().st_size > 0


def test_verify_csp_usage():
    assert run("verify", "csp", "--rows", "3").exit_code == 2


def test_verify_figure_written(tmp_path):
    figure = tmp_path / "mt.svg"
    result = run(
        "verify", "main-theorem", "--max-length", "3", "--figure", str(figure)
    )
    assert result.exit_code == 0
    assert figure.read_bytes().startswith(b"<?xml")


def test_csp_d_table():
    result = run("csp", "--rows", "3", "--cols", "2")
    assert result.exit_code == 0
    rows = [line.split("\t") for line in lines_of(result)]
    assert rows[0] == ["d", "fixed", "value", "error"]
    fixed = [int(r[1]) for r in rows[1:-1]]
    assert fixed == [0, 2, 3, 2, 0, 5]
    assert rows[-1] == ["result", "PASS"]


# ---------------------------------------------------------------------------
# render


def test_render_dot_to_stdout():
    grown = run("grow", "--word", "10m")
    result = run("render", "--format", "dot", "-o", "-", input=grown.output)
    assert result.exit_code == 0
    assert webs_equal(parse_dot(result.output), grow_web(TRIPOD))


def test_render_svg_from_dot(tmp_path):
    grown = run("grow", "--word", "10m")
    dot = run("render", "--format", "dot", "-o", "-", input=grown.output)
    out = tmp_path / "web.svg"
    result = run("render", "-o", str(out), input=dot.output)
    assert result.exit_code == 0
    assert out.read_bytes().startswith(b"<?xml")


def test_render_accepts_string_array(tmp_path):
    out = tmp_path / "four.svg"
    payload = json.dumps(string_to_json(((1, B), (0, B), (0, W), (1, W))))
    result = run("render", "-o", str(out), input=payload)
    assert result.exit_code == 0
    assert out.stat().st_size > 0


def test_render_usage_errors(tmp_path):
    assert run("render", "-o", "-", input="").exit_code == 2
    assert run("render", "-o", "-", input='{"vertices": []}\n{"vertices": []}').exit_code == 2
    payload = run("grow", "--word", "10m").output
    assert run("render", "--format", "svg", "-o", "-", input=payload).exit_code == 2
