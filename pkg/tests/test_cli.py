import json
import subprocess
import sys

import pytest

from instances import diamond, mixed_small

from planar_detours.cli import main
from planar_detours.detour import directed_detour
from planar_detours.errors import ParseError
from planar_detours.generate import GeneratorSpec, generate_instance
from planar_detours.pdg import emit_pdg, parse_pdg, read_pdg_document
from planar_detours.verify import verify_witness

TRIANGLE = """\
pdg 1
n 3
arcs 3
a 0 0 1
a 1 1 2
a 2 2 0
rot 0 0 2
rot 1 1 0
rot 2 2 1
"""


def test_parse_triangle():
    g = parse_pdg(TRIANGLE)
    assert g.vertex_count == 3 and g.arcs == ((0, 1), (1, 2), (2, 0))
    assert len(g.faces) == 2


def test_duplicate_arc_id_reports_its_line():
    text = TRIANGLE.replace("a 2 2 0", "a 1 2 0")
    with pytest.raises(ParseError) as err:
        parse_pdg(text)
    assert err.value.line == 6


@pytest.mark.parametrize(
    "text",
    ["", "graph 1\n", "pdg 2\n", "pdg 1\nn 2\nn 2\n", "pdg 1\nn 2\narcs 1\nfoo 1\n",
     "pdg 1\nn 2\narcs 1\na 0 0 5\n", "pdg 1\nn 2\narcs 2\na 0 0 1\nrot 0 0\nrot 1 0\n"],
)
def test_malformed_documents(text):
    with pytest.raises(ParseError):
        parse_pdg(text)


def test_comments_survive_and_carry_coordinates():
    doc = read_pdg_document("# at 0 0 0\n# at 1 1 0\n# at 2 0 1\n" + TRIANGLE)
    assert doc.coordinates() == {0: (0.0, 0.0), 1: (1.0, 0.0), 2: (0.0, 1.0)}
    assert read_pdg_document(TRIANGLE).coordinates() is None


def test_round_trip_is_byte_identical():
    for inst in mixed_small(200):
        text = emit_pdg(inst.graph)
        again = parse_pdg(text)
        assert again == inst.graph
        assert emit_pdg(again) == text


def test_generator_is_deterministic():
    spec = GeneratorSpec("thinned-grid", 5, 5, "random", 0.7, seed=4)
    a, b = generate_instance(spec), generate_instance(spec)
    assert emit_pdg(a.graph) == emit_pdg(b.graph) and (a.s, a.t) == (b.s, b.t)


def test_small_generated_grids():
    inst = generate_instance(GeneratorSpec("grid", 2, 2, "right-down"))
    assert (inst.graph.vertex_count, inst.graph.arc_count) == (4, 4)
    assert directed_detour(inst.graph, inst.s, inst.t) is None
    inst = generate_instance(GeneratorSpec("grid", 3, 3, "bidirected"))
    assert directed_detour(inst.graph, inst.s, inst.t) is not None


def test_verify_witness_examples():
    g = diamond()
    assert verify_witness(g, 0, 3, 1, [0, 1, 2, 3])
    short = verify_witness(g, 0, 3, 1, [0, 1, 3])
    assert not short and "length" in short.report
    assert not verify_witness(g, 0, 3, 0, [0, 1, 2, 1, 3])
    assert not verify_witness(g, 0, 3, 1, [0, 2, 1, 3])


@pytest.fixture
def diamond_file(tmp_path):
    path = tmp_path / "diamond.pdg"
    path.write_text(emit_pdg(diamond()))
    return str(path)


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_detour_yes_with_json(diamond_file, capsys):
    assert main(["detour", "-i", diamond_file, "-s", "0", "-t", "3", "--json", "--check"]) == 0
    out = _json(capsys)
    assert out["verdict"] == "yes" and out["path"] == [0, 1, 2, 3] and out["dist"] == 2


def test_long_detour_no(diamond_file, capsys):
    assert main(["long-detour", "-i", diamond_file, "-s", "0", "-t", "3", "-k", "2"]) == 0
    assert capsys.readouterr().out.strip() == "no"


def test_long_detour_witness_in_both_modes(diamond_file, capsys):
    for mode in ("mc", "det"):
        args = ["long-detour", "-i", diamond_file, "-s", "0", "-t", "3", "-k", "1",
                "--mode", mode, "--witness"]
        assert main(args) == 0
        assert "path: 0 1 2 3" in capsys.readouterr().out


def test_s_equals_t(diamond_file, capsys):
    assert main(["detour", "-i", diamond_file, "-s", "1", "-t", "1", "--json"]) == 0
    assert _json(capsys) == {"verdict": "no", "path": None, "reason": "s equals t"}


def test_unreachable_exits_one(diamond_file, capsys):
    assert main(["detour", "-i", diamond_file, "-s", "3", "-t", "0"]) == 1
    assert capsys.readouterr().out.strip() == "unreachable"


def test_input_errors_exit_two(diamond_file, tmp_path, capsys):
    bad = tmp_path / "bad.pdg"
    bad.write_text("pdg 1\nn 2\nwhat\n")
    assert main(["detour", "-i", str(bad), "-s", "0", "-t", "1"]) == 2
    assert "line 3" in capsys.readouterr().err
    assert main(["detour", "-i", diamond_file, "-s", "0", "-t", "9"]) == 2
    assert main(["detour", "-i", str(tmp_path / "missing.pdg"), "-s", "0", "-t", "1"]) == 2
    assert main(["long-detour", "-i", diamond_file, "-s", "0", "-t", "3", "-k", "0"]) == 2
    assert main(["detour", "-i", diamond_file]) == 2


def test_timeout_exits_three(tmp_path, capsys):
    path = tmp_path / "grid.pdg"
    assert main(["gen", "--rows", "12", "--cols", "12", "-o", str(path)]) == 0
    capsys.readouterr()
    args = ["long-detour", "-i", str(path), "-s", "0", "-t", "143", "-k", "3", "--budget-ms", "5"]
    assert main(args) == 3
    assert capsys.readouterr().out.strip() == "timeout"


def test_verify_subcommand(diamond_file, capsys):
    assert main(["verify", "-i", diamond_file, "-s", "0", "-t", "3", "-k", "1", "--path", "0 1 2 3"]) == 0
    assert main(["verify", "-i", diamond_file, "-s", "0", "-t", "3", "-k", "1", "--path", "0,1,3"]) == 1
    assert "missing" not in capsys.readouterr().out


def test_faces_subcommand(diamond_file, capsys):
    assert main(["faces", "-i", diamond_file, "--json"]) == 0
    out = _json(capsys)
    assert out["summary"]["faces"] == 3 and out["summary"]["euler_ok"]
    assert sum(f["length"] for f in out["faces"]) == 10
    assert main(["faces", "-i", diamond_file]) == 0
    assert capsys.readouterr().out.count("face ") == 3


def test_gen_then_draw(tmp_path, capsys):
    pdg = tmp_path / "g.pdg"
    assert main(["gen", "--rows", "3", "--cols", "3", "--orient", "bidirected", "-o", str(pdg)]) == 0
    assert "suggested s=0 t=8" in pdg.read_text()
    svg, dot = tmp_path / "g.svg", tmp_path / "g.dot"
    assert main(["draw", "-i", str(pdg), "-o", str(svg), "--path", "0 1 2 5 8"]) == 0
    text = svg.read_text()
    assert text.startswith("<svg") and text.count("<circle") == 9 and "#d62728" in text
    assert main(["draw", "-i", str(pdg), "-o", str(dot)]) == 0
    assert dot.read_text().startswith("digraph")


def test_module_entry_point(diamond_file):
    proc = subprocess.run(
        [sys.executable, "-m", "planar_detours", "detour", "-i", diamond_file, "-s", "0", "-t", "3"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "yes"
