import json

import pytest

from klr import KLRRing, a2
from klr.cli import (
    main,
    parse_divided,
    parse_element,
    parse_seq,
    parse_weight,
    parse_word,
)


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_seq():
    assert parse_seq("iji") == ("i", "j", "i")
    assert parse_seq("v1 v2 v1") == ("v1", "v2", "v1")
    assert parse_seq("") == ()


def test_parse_divided():
    assert parse_divided("i^(2)j") == (("i", 2), ("j", 1))
    assert parse_divided("i^(2) j i^(3)") == (("i", 2), ("j", 1), ("i", 3))
    assert parse_divided("iji") == (("i", 1), ("j", 1), ("i", 1))


def test_parse_weight():
    assert parse_weight("j:1,i:2") == (("i", 2), ("j", 1))
    assert parse_weight("i:2, j:0") == (("i", 2),)


def test_parse_word():
    assert parse_word("iji: C1 D2") == (("i", "j", "i"),
                                        [("C", 1), ("D", 2)])


def test_parse_element_round_trip(ring_a2):
    import random
    from conftest import label_seqs, random_word
    rng = random.Random(41)
    for _ in range(25):
        seq = rng.choice(label_seqs(ring_a2.graph, 3))
        x = ring_a2.evaluate_word(seq, random_word(rng, 3, 5))
        assert parse_element(ring_a2, str(x)) == x
    assert parse_element(ring_a2, "0").is_zero()


def test_multiply_examples(capsys, graph_files):
    code, out, _ = run(capsys, ["multiply", "-g", graph_files["a2"],
                                "--word", "ii: C1 C1"])
    assert code == 0 and out.strip() == "0"
    code, out, _ = run(capsys, ["multiply", "-g", graph_files["a2"],
                                "--word", "ji: C1", "--word", "ij: C1"])
    assert code == 0 and out.strip() == "x1[ij] + x2[ij]"
    code, out, _ = run(capsys, ["multiply", "-g", graph_files["a1"],
                                "--word", "i: D1"])
    assert code == 0 and out.strip() == "x1[i]"


def test_multiply_json_and_elem_files(capsys, graph_files, tmp_path):
    code, out, _ = run(capsys, ["multiply", "-g", graph_files["a2"], "--json",
                                "--word", "ij: C1"])
    assert code == 0
    obj = json.loads(out)
    ring = KLRRing(a2())
    elem = ring.element_from_json(obj)
    assert elem == ring.evaluate_word(("i", "j"), [("C", 1)])
    path = tmp_path / "elem.json"
    path.write_text(out)
    code, out2, _ = run(capsys, ["multiply", "-g", graph_files["a2"],
                                 "--elem", str(path), "--word", "ji: C1"])
    assert code == 0 and out2.strip() == "x1[ij] + x2[ij]"


def test_gdim(capsys, graph_files):
    code, out, _ = run(capsys, ["gdim", "-g", graph_files["a1"], "i", "i"])
    assert code == 0 and out.strip() == "1 / (1-q^2)"
    code, out, _ = run(capsys, ["gdim", "-g", graph_files["a1"],
                                "ii", "ii", "--expand", "4"])
    assert code == 0
    assert "series up to q^4" in out


def test_pair_examples(capsys, graph_files):
    code, out, _ = run(capsys, ["pair", "-g", graph_files["a1"], "i", "i"])
    assert code == 0 and out.strip() == "1 / (1-q^2)"
    code, out, _ = run(capsys, ["pair", "-g", graph_files["a1"],
                                "i^(2)", "i^(2)"])
    assert code == 0 and out.strip() == "1 / ((1-q^2)(1-q^4))"


def test_shuffle_example(capsys, graph_files):
    code, out, _ = run(capsys, ["shuffle", "-g", graph_files["a2"],
                                "i", "j"])
    assert code == 0 and out.strip() == "ij: 1, ji: q"


def test_char(capsys, graph_files):
    code, out, _ = run(capsys, ["char", "-g", graph_files["a1"], "i^(2)"])
    assert code == 0
    label, _, value = out.strip().partition(": ")
    assert label == "ii"
    from klr import GradedDim, LaurentPoly
    got = GradedDim(LaurentPoly({-1: 1, 1: 1}), (1, 2))
    assert value == str(got)
    assert got == GradedDim(LaurentPoly.q_power(-1), (1, 1))


def test_comul(capsys, graph_files):
    code, out, _ = run(capsys, ["comul", "-g", graph_files["a2"], "ij",
                                "--json"])
    assert code == 0
    terms = json.loads(out)
    lookup = {(t["left"], t["right"]): t["coeff"] for t in terms}
    assert lookup[("j", "i")] == {"1": 1}
    assert lookup[("i", "j")] == {"0": 1}


def test_tight_examples(capsys, graph_files):
    code, out, _ = run(capsys, ["tight", "-g", graph_files["a2"],
                                "i j^(2) i"])
    assert code == 0 and out.startswith("TIGHT")
    code, out, _ = run(capsys, ["tight", "-g", graph_files["a2"], "iji"])
    assert code == 0 and out.strip() == "NOT TIGHT: constant term 2"
    code, out, _ = run(capsys, ["tight", "-g", graph_files["a1"], "i^(3)"])
    assert code == 0 and out.startswith("TIGHT")


def test_check_suites(capsys, graph_files):
    code, out, _ = run(capsys, ["check", "-g", graph_files["cycle3"],
                                "cycle:3"])
    assert code == 0 and out.strip() == "alpha^2 = 0 PASS"
    code, out, _ = run(capsys, ["check", "-g", graph_files["cycle4"],
                                "cycle:4"])
    assert code == 0 and out.strip() == "alpha^2 = -2*alpha PASS"
    code, out, _ = run(capsys, ["check", "-g", graph_files["a2"], "serre"])
    assert code == 0 and "PASS" in out
    code, out, _ = run(capsys, ["check", "-g", graph_files["a2"],
                                "idempotents"])
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, ["check", "-g", graph_files["a2"],
                                "relations"])
    assert code == 0 and "PASS" in out


def test_quotient_examples(capsys, graph_files):
    code, out, _ = run(capsys, ["quotient", "-g", graph_files["a1"],
                                "--nu", "i:1", "--cyclotomic", "i:3"])
    assert code == 0
    assert "deg    0: 1" in out and "deg    2: 1" in out and "deg    4: 1" in out
    assert "total (q=1): 3" in out
    assert "stabilized" in out and "NOT stabilized" not in out

    code, out, _ = run(capsys, ["quotient", "-g", graph_files["a2"],
                                "--nu", "i:1,j:1", "--symplus"])
    assert code == 0 and "total (q=1): 4" in out

    code, out, _ = run(capsys, ["quotient", "-g", graph_files["a1"],
                                "--nu", "i:1", "--cyclotomic", "i:0"])
    assert code == 0 and "all degrees zero" in out

    code, out, _ = run(capsys, ["quotient", "-g", graph_files["a1"], "--json",
                                "--nu", "i:1", "--cyclotomic", "i:2",
                                "--field", "Fp:7"])
    assert code == 0
    obj = json.loads(out)
    assert obj["field"] == "F_7" and obj["stabilized"]


def test_exit_code_2_on_bad_usage(capsys, graph_files):
    cases = [
        ["multiply", "-g", graph_files["a2"]],
        ["multiply", "-g", graph_files["a2"], "--word", "ij: Z9"],
        ["multiply", "-g", graph_files["a2"],
         "--word", "ij: C1", "--word", "ii: C1"],
        ["multiply", "-g", "/nonexistent.json", "--word", "i: D1"],
        ["quotient", "-g", graph_files["a1"], "--nu", "i:1"],
        ["quotient", "-g", graph_files["a1"], "--nu", "i:1",
         "--cyclotomic", "i:1", "--symplus"],
        ["quotient", "-g", graph_files["a1"], "--nu", "i:1",
         "--cyclotomic", "i:1", "--field", "GF(4)"],
        ["quotient", "-g", graph_files["a1"], "--nu", "i:1",
         "--cyclotomic", "i:1", "--cutoff", "1", "--window", "3"],
        ["check", "-g", graph_files["a2"], "nonsense"],
        ["check", "-g", graph_files["a2"], "cycle:x"],
        ["check", "-g", graph_files["a1"], "idempotents"],
    ]
    for argv in cases:
        code, _, err = run(capsys, argv)
        assert code == 2, argv
        assert err.startswith("error:"), argv


def test_exit_code_1_on_failed_check(capsys, graph_files, monkeypatch):
    import klr.cli as cli
    monkeypatch.setattr(cli, "serre_check", lambda *a: False)
    code, out, _ = run(capsys, ["check", "-g", graph_files["a2"], "serre"])
    assert code == 1 and "FAIL" in out


def test_argparse_errors_exit_2(graph_files):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate", "-g", graph_files["a1"]])
    assert exc.value.code == 2
