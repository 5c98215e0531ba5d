import io
import json

from drinfeld.cli import main

CARLITZ_FAMILY = '{"p":2,"e":1,"r":1,"delta":[[0],[1]],"coeffs":[[[1]]]}'
RANK2_FAMILY = '{"p":2,"e":1,"r":2,"delta":[[0],[1]],"coeffs":[[[1]],[[1]]]}'
SHIFT_FAMILY = '{"p":2,"e":1,"r":1,"delta":[[1],[1]],"coeffs":[[[1]]]}'
BAD_LEAD_FAMILY = '{"p":2,"e":1,"r":1,"delta":[[0],[1]],"coeffs":[[[0],[1]]]}'
CARLITZ_F4_MODULE = ('{"field":{"p":2,"n":2,"modulus":[1,1,1]},'
                     '"theta":[0,1],"coeffs":[[1,0]],"e":1,"twist":0}')
RANK2_F4_MODULE = ('{"field":{"p":2,"n":2,"modulus":[1,1,1]},'
                   '"theta":[0,1],"coeffs":[[1,0],[0,1]],"e":1,"twist":0}')


def run_cli(argv, stdin_text=""):
    out = io.StringIO()
    code = main(argv, stdin=io.StringIO(stdin_text), stdout=out)
    return code, out.getvalue()


def test_ore_mul_json_roundtrip():
    payload = json.dumps({
        "a": {"field": {"p": 2, "n": 2, "modulus": [1, 1, 1]},
              "coeffs": [[0, 1], [1, 0]]},
        "b": {"field": {"p": 2, "n": 2, "modulus": [1, 1, 1]},
              "coeffs": [[0, 1], [1, 0]]}})
    code, out = run_cli(["ore", "mul"], payload)
    assert code == 0
    assert json.loads(out)["coeffs"] == [[1, 1], [1, 0], [1, 0]]


def test_ore_divmod_and_eval():
    payload = json.dumps({
        "a": {"field": {"p": 2, "n": 1, "modulus": [0, 1]},
              "coeffs": [[1], [0], [1]]},
        "b": {"field": {"p": 2, "n": 1, "modulus": [0, 1]},
              "coeffs": [[1], [1]]},
        "side": "left"})
    code, out = run_cli(["ore", "divmod"], payload)
    assert code == 0
    data = json.loads(out)
    assert data["q"]["coeffs"] == [[1], [1]] and data["r"]["coeffs"] == []
    payload = json.dumps({
        "f": {"field": {"p": 2, "n": 2, "modulus": [1, 1, 1]},
              "coeffs": [[0, 1], [1, 0]]},
        "x": [0, 1]})
    code, out = run_cli(["ore", "eval"], payload)
    assert code == 0 and json.loads(out)["value"] == [0, 0]


def test_ore_kernel():
    payload = json.dumps({
        "f": {"field": {"p": 2, "n": 2, "modulus": [1, 1, 1]},
              "coeffs": [[0, 1], [1, 0]]},
        "ext_degree": 1})
    code, out = run_cli(["ore", "kernel"], payload)
    assert code == 0
    data = json.loads(out)
    assert data["dim"] == 1 and [0, 1] in data["points"]


def test_drinfeld_phi_from_module_json():
    code, out = run_cli(["drinfeld", "phi", "--module", "-", "--a", "t^2"],
                        CARLITZ_F4_MODULE)
    assert code == 0
    data = json.loads(out)
    assert data["phi"]["coeffs"] == [[1, 1], [1, 0], [1, 0]]
    assert data["char"] == "t^2+t+1"


def test_drinfeld_torsion_from_family():
    code, out = run_cli(["drinfeld", "torsion", "--family", "-",
                         "--at", "x^2+x+1", "--ell", "t", "--n", "1"],
                        CARLITZ_FAMILY)
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 2
    assert data["frobenius_matrix"] == [["1"]]


def test_drinfeld_frobnorm():
    code, out = run_cli(["drinfeld", "frobnorm", "--family", "-",
                         "--at", "x^2+x+1"], CARLITZ_FAMILY)
    assert code == 0
    data = json.loads(out)
    assert data["s"] == "t^2+t+1" and data["char_power"] == 1


def test_carlitz_table_and_exit_code():
    code, out = run_cli(["carlitz", "table", "--p", "2", "--e", "1",
                         "--max-prime-degree", "2"])
    assert code == 0
    rows = json.loads(out)
    assert [r["place"] for r in rows] == ["x", "x+1", "x^2+x+1"]
    assert all(r["independence"] and r["degree_ok"] and r["char_divides"]
               for r in rows)
    row = rows[2]
    assert row["s"] == "t^2+t+1"


def test_carlitz_table_p3():
    code, out = run_cli(["carlitz", "table", "--p", "3",
                         "--max-prime-degree", "1"])
    assert code == 0
    rows = json.loads(out)
    assert [r["place"] for r in rows] == ["x", "x+1", "x+2"]
    assert [r["s"] for r in rows] == ["t", "t+1", "t+2"]


def test_type2_report_reads_stdin_and_csv():
    code, out = run_cli(["type2", "report", "--max-prime-degree", "1",
                         "--format", "csv", "--cap", "20"], RANK2_FAMILY)
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "place,d,ells,s,independence,deg_check," \
                       "char_divides_check"
    assert len(lines) == 3


def test_type2_report_surfaces_bad_reduction_rows():
    code, out = run_cli(["type2", "report", "--max-prime-degree", "1"],
                        BAD_LEAD_FAMILY)
    assert code == 1
    rows = json.loads(out)
    assert any("error" in r for r in rows)
    assert any("place" in r and "s" in r for r in rows)  # good rows remain


def test_residual_check_pass_and_fail():
    code, out = run_cli(["residual", "check", "--max-prime-degree", "2"],
                        CARLITZ_FAMILY)
    assert code == 0
    assert all(r["k"] == 0 for r in json.loads(out))
    code, out = run_cli(["residual", "check", "--max-prime-degree", "1"],
                        SHIFT_FAMILY)
    assert code == 1
    rows = json.loads(out)
    assert rows[0]["place"] == "x" and rows[0]["k"] is None


def test_motive_det_and_verify():
    code, out = run_cli(["motive", "det", "--module", "-"], RANK2_F4_MODULE)
    assert code == 0
    data = json.loads(out)
    assert data["c"] == [1, 1]
    assert data["psi_t"]["coeffs"] == [[0, 1]]
    code, out = run_cli(["motive", "verify-tate-det", "--module", "-",
                         "--ell", "t", "--n", "2", "--cap", "20"],
                        RANK2_F4_MODULE)
    assert code == 0
    assert json.loads(out)["results"] == {"n=1": True, "n=2": True}


def test_frobrec_subcommands():
    code, out = run_cli(["frobrec", "classify", "--p", "2",
                         "--poly", "Y^2+X"])
    assert code == 0
    assert json.loads(out) == {"k": 1, "variant": "YtoX"}
    code, out = run_cli(["frobrec", "classify", "--p", "2",
                         "--poly", "Y+X^3"])
    assert code == 0
    data = json.loads(out)
    assert data["variant"] == "NotFrobenius" and "witness" in data
    code, out = run_cli(["frobrec", "recover-monomial", "--p", "2",
                         "--num", "X^3", "--den", "1"])
    assert code == 0 and json.loads(out)["n"] == 3
    code, out = run_cli(["frobrec", "theorem", "--p", "2", "--gens", "u",
                         "--images", "u^4"])
    assert code == 0 and json.loads(out)["k"] == 2
    code, out = run_cli(["frobrec", "theorem", "--p", "2", "--gens", "u",
                         "--images", "u+1"])
    assert code == 1 and not json.loads(out)["ok"]


def test_parse_error_exit_code():
    code, out = run_cli(["type2", "report"], "not json")
    assert code == 2
    assert "error" in json.loads(out)


def test_output_file(tmp_path):
    target = tmp_path / "report.json"
    code, out = run_cli(["carlitz", "table", "--p", "2",
                         "--max-prime-degree", "1",
                         "--output", str(target)])
    assert code == 0 and out == ""
    assert json.loads(target.read_text())[0]["place"] == "x"


def test_table_rows_recomputable_from_library():
    from drinfeld import carlitz_family, parse_upoly
    from drinfeld.reports import place_report

    code, out = run_cli(["carlitz", "table", "--p", "2",
                         "--max-prime-degree", "2", "--cap", "12"])
    assert code == 0
    rows = json.loads(out)
    family = carlitz_family(2)
    for row in rows:
        prime = parse_upoly(row["place"], family.constants, var="x")
        rep = place_report(family, prime, cap=12)
        assert rep.to_dict() == row


def test_byte_identical_reruns():
    battery = [
        (["carlitz", "table", "--p", "2", "--max-prime-degree", "2",
          "--seed", "0"], ""),
        (["residual", "check", "--max-prime-degree", "2"], CARLITZ_FAMILY),
        (["frobrec", "classify", "--p", "3", "--poly", "Y+X^9"], ""),
        (["motive", "det", "--module", "-"], RANK2_F4_MODULE),
    ]
    first = [run_cli(argv, text) for argv, text in battery]
    second = [run_cli(argv, text) for argv, text in battery]
    assert first == second
