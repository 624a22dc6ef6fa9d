import json
import subprocess
import sys

import pytest

import b3_example as ex
from demazure.character import Character, demazure_character
from demazure.cli import main
from demazure.polytope import build_polytope
from demazure.reduction import ReductionData
from demazure.weyl import weyl_group

B3 = ["B3", "--lambda", "1,1,1", "--word", "1,3,2,3,1,2,3"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    data = json.loads(out)
    assert data["schema"] == "demazure/v1"
    return code, data


class TestCharacter:
    def test_a1(self, capsys):
        code, data = run_json(capsys, "character", "A1", "--lambda", "2", "--word", "1")
        assert code == 0 and len(data["character"]) == 3

    def test_empty_word(self, capsys):
        code, data = run_json(capsys, "character", "B2", "--lambda", "1,2", "--word", "")
        assert code == 0
        assert data["character"] == [{"weight": [1, 2], "mult": 1}]

    def test_round_trip(self, capsys):
        code, data = run_json(capsys, "character", *B3)
        g = weyl_group("B3")
        ch = Character.from_list(data["character"])
        assert ch == demazure_character(ex.LAM, g.from_word(ex.W_WORD))
        for eps, m in ex.FACE:
            assert ch.multiplicity(ex.to_omega(eps)) == m

    def test_table(self, capsys):
        code, out, _ = run(capsys, "character", "A1", "--lambda", "2", "--word", "1")
        assert code == 0
        assert out.splitlines()[0] == "weight\tmult"
        assert len(out.splitlines()) == 4

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "ch.json"
        code, out, _ = run(capsys, "character", "A1", "--lambda", "1", "--word", "1",
                           "--format", "json", "-o", str(path))
        assert code == 0 and out == ""
        assert json.loads(path.read_text())["character"]


class TestErrors:
    def test_non_dominant(self, capsys):
        code, _, err = run(capsys, "character", "A2", "--lambda=-1,1", "--word", "1")
        assert code == 2 and "dominant" in err

    def test_bad_type(self, capsys):
        code, _, err = run(capsys, "character", "Q7", "--lambda", "1")
        assert code == 2

    def test_wrong_length(self, capsys):
        assert run(capsys, "character", "A2", "--lambda", "1", "--word", "1")[0] == 2

    def test_bad_index(self, capsys):
        assert run(capsys, "character", "A2", "--lambda", "1,1", "--word", "3")[0] == 2

    def test_missing_type(self, capsys):
        assert run(capsys, "character", "--lambda", "1,1")[0] == 2

    def test_parse_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["character", "A2", "--lambda", "x,y"])
        assert exc.value.code == 2

    def test_bad_face(self, capsys):
        code, _, err = run(capsys, "reduce", *B3, "--v", "2", "--eta", "1,0,0")
        assert code == 2 and "representative" in err

    def test_face_requires_eta(self, capsys):
        assert run(capsys, "reduce", *B3, "--v", "1")[0] == 2


class TestPolytope:
    def test_a1(self, capsys):
        code, data = run_json(capsys, "polytope", "A1", "--lambda", "2", "--word", "1")
        assert code == 0
        assert len(data["vertices"]) == 2 and len(data["lattice_points"]) == 3

    def test_identity(self, capsys):
        code, data = run_json(capsys, "polytope", "C3", "--lambda", "1,0,1", "--word", "")
        assert data["vertices"] == [[1, 0, 1]]

    def test_round_trip(self, capsys):
        code, data = run_json(capsys, "polytope", *B3, "--with-character")
        g = weyl_group(data["type"])
        P = build_polytope(tuple(data["lambda"]), g.from_word(data["w_word"]))
        rebuilt = P.to_dict()
        assert all(data[k] == rebuilt[k] for k in rebuilt)
        assert sum(p["mult"] for p in data["lattice_points"]) == 288

    def test_plotdata_reproduces_vertices(self, capsys):
        code, out, _ = run(capsys, "polytope", *B3, "--format", "plotdata", "--with-character")
        data = json.loads(out)
        assert "epsilon" in data["metadata"]["embedding"]
        exact = {tuple(v["exact"]) for v in data["vertices"]}
        assert exact == {tuple(str(c) for c in p) for p in ex.VERTICES.values()}
        marks = {tuple(p["exact"]): p["mult"] for p in data["points"]}
        for eps, m in ex.FACE:
            assert marks[tuple(str(c) for c in eps)] == m


class TestFace:
    def test_points(self, capsys):
        code, data = run_json(capsys, "face", *B3, "--v", "1", "--eta", "1,0,0")
        assert code == 0 and len(data["points"]) == 18
        assert data["face"] == {"v_word": [1], "eta": ["1", "0", "0"]}

    def test_faces_through_weight(self, capsys):
        mu = ",".join(map(str, ex.to_omega(ex.FACE[0][0])))
        code, data = run_json(capsys, "face", *B3, f"--mu={mu}")
        assert {"v_word": [1], "eta": ["1", "0", "0"]} in data["faces"]

    def test_plotdata(self, capsys):
        code, out, _ = run(capsys, "face", *B3, "--v", "1", "--eta", "1,0,0", "--format", "plotdata")
        pts = json.loads(out)["points"]
        assert all(p["coords"][1] == -1.5 for p in pts)


class TestReduce:
    def test_b3_example(self, capsys):
        code, data = run_json(capsys, "reduce", *B3, "--v", "1", "--eta", "1,0,0")
        assert code == 0 and data["flags"] == [] and len(data["rows"]) == 18
        rd = ReductionData.from_dict(weyl_group("B3"), data["reduction"])
        assert rd.q == weyl_group("B3").from_word(ex.Q_WORD)
        assert rd.to_dict() == data["reduction"]

    def test_trivial_face(self, capsys):
        code, data = run_json(capsys, "reduce", *B3, "--v", "", "--eta", "1,0,0")
        assert code == 0
        g = weyl_group("B3")
        assert g.from_word(data["reduction"]["q_word"]) == g.from_word(ex.W_WORD)

    def test_rational_eta(self, capsys):
        code, data = run_json(capsys, "reduce", *B3, "--v", "1", "--eta", "1/2,0,0")
        assert code == 0 and len(data["rows"]) == 18

    def test_table(self, capsys):
        code, out, _ = run(capsys, "reduce", *B3, "--v", "1", "--eta", "1,0,0")
        assert code == 0 and out.splitlines()[-1] == "flags\t0"

    def test_sweep(self, capsys):
        code, data = run_json(capsys, "reduce", "--sweep", "A2,B2", "--max-coord", "2")
        assert code == 0
        assert sum(len(s["flags"]) for s in data["sweeps"]) == 0


class TestSaturation:
    def test_sweep_b3(self, capsys):
        code, data = run_json(capsys, "saturation", "--sweep", "B3", "--max-coord", "1")
        assert code == 0 and data["all_saturated"]
        assert len(data["results"]) == 8 * 48

    def test_sweep_g2(self, capsys):
        code, data = run_json(capsys, "saturation", "--sweep", "G2", "--max-coord", "2")
        assert code == 0 and all(r["saturated"] for r in data["results"])

    def test_identity_instance(self, capsys):
        code, data = run_json(capsys, "saturation", "D4", "--lambda", "1,0,2,1", "--word", "")
        assert code == 0 and data["results"][0]["saturated"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "demazure", "character", "A1", "--lambda", "2", "--word", "1",
         "--format", "json"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert len(json.loads(proc.stdout)["character"]) == 3
