import json

import pytest

from genautomata.cli import main
from genautomata.textformat import read_gnfa

from conftest import DATA


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_validate(capsys):
    code, out, _ = run(capsys, "validate", DATA / "fig4.gnfa")
    assert code == 0 and "class GDFA" in out
    code, out, _ = run(capsys, "validate", DATA / "fig1.gnfa")
    assert code == 1 and "violation state 1 prefix a ab" in out


def test_malformed_input_is_usage_error(capsys, tmp_path):
    bad = tmp_path / "bad.gnfa"
    bad.write_text("states two\n")
    assert run(capsys, "validate", bad)[0] == 2
    assert run(capsys, "validate", tmp_path / "missing.gnfa")[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_wheeler_and_emit_order(capsys, tmp_path):
    order = tmp_path / "fig4.order"
    code, out, _ = run(capsys, "wheeler", DATA / "fig4.gnfa", "--emit-order", order)
    assert code == 0 and out.split() == ["u1", "u2", "u3"]
    assert order.read_text().split() == ["u1", "u2", "u3"]
    code, out, _ = run(capsys, "wheeler", DATA / "fig5_right.gnfa")
    assert code == 1 and "not Wheeler" in out


def test_check_order(capsys, tmp_path):
    order = tmp_path / "o"
    order.write_text("u1 u2 u3 u4\n")
    code, out, _ = run(capsys, "check-order", DATA / "fig7_right.gnfa", "--order", order)
    assert code == 1 and "co-lex fails" in out and "labels holds" in out
    code, out, _ = run(capsys, "check-order", DATA / "fig5_left.gnfa", "--order", order)
    assert code == 0


def test_trim_expand_minimize_iso(capsys, tmp_path):
    out = tmp_path / "m.gnfa"
    assert run(capsys, "minimize", DATA / "fig2_left.gnfa", "-o", out)[0] == 0
    assert run(capsys, "iso", out, DATA / "fig2_left.gnfa")[0] == 0
    assert run(capsys, "iso", DATA / "fig2_left.gnfa", DATA / "fig2_right.gnfa")[0] == 1
    assert run(capsys, "minimize", DATA / "fig1.gnfa", "-o", out)[0] == 1
    assert run(capsys, "expand", DATA / "fig4.gnfa", "-o", out)[0] == 0
    assert read_gnfa(out).n == 5
    assert run(capsys, "trim", DATA / "fig4.gnfa", "-o", out)[0] == 0
    assert read_gnfa(out).n == 3


def test_bwt_build_and_decode(capsys, tmp_path):
    order, enc, dec = tmp_path / "o", tmp_path / "e.gbwt", tmp_path / "d.gnfa"
    order.write_text("u1 u2 u3\n")
    code, out, _ = run(capsys, "bwt", "build", DATA / "fig4.gnfa", "--order", order, "-o", enc)
    assert code == 0 and "payload" in out
    text = enc.read_text()
    assert "OUT1 001011" in text and "IN2 101001" in text and "FIN 011" in text
    assert run(capsys, "bwt", "decode", enc, "-o", dec)[0] == 0
    assert read_gnfa(dec).edge_set() == read_gnfa(DATA / "fig4.gnfa").edge_set()
    order.write_text("u1 u3 u2\n")
    assert run(capsys, "bwt", "build", DATA / "fig4.gnfa", "--order", order, "-o", enc)[0] == 1
    enc.write_text("gbwt v1\nn 3\n")
    assert run(capsys, "bwt", "decode", enc, "-o", dec)[0] == 2


def test_index_and_query_json(capsys, tmp_path):
    idx = tmp_path / "fig4.idx"
    assert run(capsys, "index", "build", DATA / "fig4.gnfa", "-o", idx)[0] == 0
    code, out, _ = run(capsys, "query", idx, "--pattern", "bc", "--json", "--member")
    assert code == 1  # "bc" is not in the language
    assert json.loads(out) == {
        "pattern": "bc", "interval": [3, 3], "states": ["u3"], "count": 1, "member": False,
    }
    pats = tmp_path / "p.txt"
    pats.write_text('""\nabb\nzz\n')
    code, out, _ = run(capsys, "query", idx, "--patterns", pats, "--json")
    records = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert [r["count"] for r in records] == [3, 1, 0]
    assert records[2]["states"] == []
    code, out, _ = run(capsys, "query", idx, "--pattern", "abb", "--member")
    assert code == 0 and out.strip().endswith("member")


def test_index_build_rejects_non_wheeler(capsys, tmp_path):
    assert run(capsys, "index", "build", DATA / "fig5_right.gnfa", "-o", tmp_path / "x")[0] == 1


def test_xcheck(capsys, tmp_path):
    pats = tmp_path / "p.txt"
    pats.write_text("b\nbc\nabb\n")
    code, out, _ = run(capsys, "xcheck", DATA / "fig4.gnfa", "--patterns", pats, "--random", 50)
    assert code == 0 and "53/53 patterns agree" in out


def test_gen_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.gnfa", tmp_path / "b.gnfa"
    args = ["--states", 8, "--max-label", 3, "--alphabet", "ab", "--seed", 7]
    assert run(capsys, "gen", *args, "-o", a)[0] == 0
    assert run(capsys, "gen", *args, "-o", b)[0] == 0
    assert a.read_text() == b.read_text()
    g = read_gnfa(a)
    assert g.n == 8
    assert run(capsys, "wheeler", a)[0] == 0


@pytest.mark.parametrize("argv", [["query"], ["gen", "--states", "x"], ["bwt"]])
def test_bad_arguments(capsys, argv):
    assert run(capsys, *argv)[0] == 2
