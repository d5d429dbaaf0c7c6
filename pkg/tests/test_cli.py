import pytest

from msalg import io
from msalg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check(capsys):
    code, out, _ = run(capsys, "check", "l1.alg")
    assert code == 0
    assert "principal_ms: true" in out and "d: (1,0)" in out


def test_check_plain_lattice(capsys, tmp_path):
    f = tmp_path / "n5.alg"
    f.write_text('{"elements":["0","a","b","c","1"],"covers":[["0","a"],["a","b"],["b","1"],["0","c"],["c","1"]]}')
    code, out, _ = run(capsys, "check", str(f))
    assert code == 0 and "distributive: false" in out


def test_con_oracle(capsys):
    code, out, _ = run(capsys, "con", "m1.alg", "--oracle")
    assert code == 0
    assert "congruences: 2" in out and "oracle: agrees" in out


def test_con_too_large_for_oracle(capsys):
    code, _, err = run(capsys, "con", "l2.alg", "--oracle", "--max-oracle", "8")
    assert code == 1 and err.startswith("error:too-large:")


def test_construct_to_file(capsys, tmp_path):
    dest = tmp_path / "out.alg"
    code, _, _ = run(capsys, "construct", "l1_triple.trp", "-o", str(dest))
    assert code == 0
    from msalg.lattice import find_isomorphism

    A, B = io.load_algebra(str(dest)), io.load_algebra("l1.alg")
    assert find_isomorphism(A.lattice, B.lattice, A.neg, B.neg) is not None


def test_pairs(capsys):
    code, out, _ = run(capsys, "pairs", "l1.alg")
    assert code == 0 and "pairs: 3" in out


def test_perfect(capsys):
    code, out, _ = run(capsys, "perfect", "l1.alg", "--stone")
    assert code == 0 and "perfect: true" in out
    code, out, _ = run(capsys, "perfect", "l2.alg", "--stone")
    assert code == 0 and "perfect: false" in out
    code, out, _ = run(capsys, "perfect", "m2.alg", "--sub", "a")
    assert "subalgebra: {0,a,a',1}" in out


def test_represent(capsys):
    code, out, _ = run(capsys, "represent", "a_bad.prs")
    assert code == 0 and out.startswith("not representable: condition(2) witness=")
    code, out, _ = run(capsys, "represent", "a_good.prs")
    assert out.startswith("representable: phi = ")


def test_dot(capsys):
    code, out, _ = run(capsys, "dot", "s.alg", "--congruence", "1")
    assert code == 0 and "subgraph cluster_0" in out
    code, _, err = run(capsys, "dot", "s.alg", "--congruence", "7")
    assert code == 1 and err.startswith("error:")


def test_errors_are_prefixed(capsys, tmp_path):
    bad = tmp_path / "bad.alg"
    bad.write_text('{"elements": ["0"], "covers": [], "color": 1}')
    code, _, err = run(capsys, "check", str(bad))
    assert code == 1 and err.startswith("error:parse:")
    code, _, err = run(capsys, "pairs", "m1.alg")
    assert code == 0  # de Morgan algebras are principal with d = 1
    notms = tmp_path / "ms3.alg"
    notms.write_text('{"elements":["0","1"],"covers":[["0","1"]],"neg":{"0":"1","1":"1"}}')
    code, _, err = run(capsys, "check", str(notms))
    assert code == 1 and err.startswith("error:axiom:")


def test_output_is_deterministic(capsys):
    _, a, _ = run(capsys, "perfect", "l2.alg", "--stone")
    _, b, _ = run(capsys, "perfect", "l2.alg", "--stone")
    assert a == b


def test_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["perfect", "l1.alg"])
    assert exc.value.code == 2
