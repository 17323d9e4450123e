import json
import random
from fractions import Fraction

import pytest

import novikov as nv
from novikov.cli import fixture_to_dicts, main
from novikov.kernel import Matrix, Tensor2, Tensor3
from novikov.serialize import (
    DefinitionError,
    algebra_to_dict,
    coproduct_to_dict,
    form_to_dict,
    map_to_dict,
    parse_definition,
    parse_poly_literal,
    rmatrix_to_dict,
)


# ---------------------------------------------------------------------------
# round trips
# ---------------------------------------------------------------------------


def _random_labels(rng, n):
    return tuple(f"b{i}" for i in range(n))


def _random_fraction(rng):
    return Fraction(rng.randint(-9, 9), rng.randint(1, 4))


def test_round_trip_random_definitions():
    rng = random.Random(424242)
    for case in range(100):
        n = rng.randint(1, 4)
        basis = _random_labels(rng, n)
        kind = ("algebra", "coproduct", "rmatrix", "map", "form")[case % 5]
        if kind == "algebra":
            entries = {
                (rng.randrange(n), rng.randrange(n), rng.randrange(n)): _random_fraction(rng)
                for _ in range(rng.randint(0, 6))
            }
            cube = Tensor3.from_entries(n, entries)
            alg = nv.Algebra(cube, basis=basis)
            doc = algebra_to_dict(alg, f"case{case}")
            parsed = parse_definition(doc)
            assert parsed.algebra().c == cube
            assert parsed.basis == basis
        elif kind == "coproduct":
            entries = {
                (rng.randrange(n), rng.randrange(n), rng.randrange(n)): _random_fraction(rng)
                for _ in range(rng.randint(0, 6))
            }
            cop = nv.Coproduct(Tensor3.from_entries(n, entries))
            doc = coproduct_to_dict(cop, basis, f"case{case}")
            parsed = parse_definition(doc)
            assert parsed.coproduct().d == cop.d
        elif kind == "rmatrix":
            entries = {
                (rng.randrange(n), rng.randrange(n)): _random_fraction(rng)
                for _ in range(rng.randint(0, 5))
            }
            t = Tensor2.from_entries(n, entries)
            doc = rmatrix_to_dict(t, basis, f"case{case}")
            parsed = parse_definition(doc)
            assert parsed.tensor2() == t
        elif kind == "map":
            entries = {
                (rng.randrange(n), rng.randrange(n)): _random_fraction(rng)
                for _ in range(rng.randint(0, 5))
            }
            m = Matrix.from_entries(n, n, entries)
            doc = map_to_dict(m, basis, f"case{case}", role="generic")
            parsed = parse_definition(doc)
            assert parsed.matrix() == m
        else:
            entries = {
                (rng.randrange(n), rng.randrange(n)): _random_fraction(rng)
                for _ in range(rng.randint(0, 5))
            }
            m = Matrix.from_entries(n, n, entries)
            doc = form_to_dict(m, basis, f"case{case}", flavor="plain")
            parsed = parse_definition(doc)
            assert parsed.matrix() == m


def test_round_trip_fixture_files(fix):
    for name, fx in fix.items():
        for doc in fixture_to_dicts(fx):
            parsed = parse_definition(doc)
            assert parsed.name == doc["name"]
            # serialize the parsed payload again: byte-identical documents
            if doc["kind"] == "algebra":
                again = algebra_to_dict(parsed.algebra(), parsed.name)
                assert again == doc


def test_parse_rejects_malformed():
    with pytest.raises(DefinitionError):
        parse_definition({"kind": "algebra"})
    with pytest.raises(DefinitionError):
        parse_definition(
            {"kind": "algebra", "name": "x", "dim": 2, "basis": ["a", "a"], "entries": []}
        )
    with pytest.raises(DefinitionError):
        parse_definition(
            {
                "kind": "rmatrix",
                "name": "x",
                "dim": 2,
                "basis": ["a", "b"],
                "entries": [{"left": "a", "right": "zz", "value": "1"}],
            }
        )
    with pytest.raises(DefinitionError):
        parse_definition(
            {
                "kind": "rmatrix",
                "name": "x",
                "dim": 1,
                "basis": ["a"],
                "entries": [{"left": "a", "right": "a", "value": 1}],  # number, not string
            }
        )


def test_poly_literal_parser():
    p = parse_poly_literal("-1/2*k*l^2 + 3 - k", ("k", "l"))
    assert str(p) == "-1/2*k*l^2 - k + 3"
    assert parse_poly_literal("0", ("k",)).is_zero()
    assert str(parse_poly_literal("k^2", ("k",))) == "k^2"
    with pytest.raises(DefinitionError):
        parse_poly_literal("k+", ("k",))
    with pytest.raises(ValueError):
        parse_poly_literal("z", ("k",))


# ---------------------------------------------------------------------------
# CLI behavior
# ---------------------------------------------------------------------------


def test_check_fixture_bialgebra(capsys):
    assert main(["check", "FIX-NB2", "--flavor", "novikov-bialgebra"]) == 0
    out = capsys.readouterr().out
    assert "verdict: pass" in out


def test_check_corrupted_algebra(tmp_path, capsys):
    doc = algebra_to_dict(nv.fixture("FIX-N2").algebra, "corrupt")
    doc["entries"].append({"left": "e2", "right": "e1", "result": [["e1", "1"]]})
    path = tmp_path / "corrupt.json"
    path.write_text(json.dumps(doc))
    assert main(["check", str(path), "--flavor", "left-novikov"]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out and "witness" in out


def test_check_missing_file(capsys):
    assert main(["check", "no-such-file.json", "--flavor", "left-novikov"]) == 2


def test_check_exit_codes_match_reports(tmp_path):
    report = tmp_path / "r.json"
    code = main(["check", "FIX-RN2", "--flavor", "form", "--report", str(report)])
    assert code == 0
    data = json.loads(report.read_text())
    assert data["verdict"] == "pass"
    assert all(c["pass"] for c in data["checks"])


def test_reports_are_byte_deterministic(tmp_path):
    r1, r2 = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["check", "FIX-NF4", "--flavor", "nybe"]
    assert main(argv + ["--report", str(r1)]) == 0
    assert main(argv + ["--report", str(r2)]) == 0
    assert r1.read_bytes() == r2.read_bytes()


def test_construct_double_emits_example(tmp_path, capsys):
    out = tmp_path / "out"
    code = main(["construct", "double", "FIX-NB2", "--out", str(out)])
    assert code == 0
    doc = json.loads((out / "FIX-NB2-double.json").read_text())
    assert doc["dim"] == 4
    products = {
        (e["left"], e["right"]): e["result"] for e in doc["entries"]
    }
    assert products[("e1", "f2")] == [["e2", "1"], ["f1", "-2"]]
    assert products[("f2", "e1")] == [["e2", "-2"], ["f1", "1"]]


def test_construct_classify_prints_verdict(capsys):
    assert main(["construct", "classify", "FIX-NF4"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "factorizable"


def test_construct_rb_zero_weight(capsys):
    assert main(["construct", "rb-from-r", "FIX-NF4", "--weight", "0"]) == 2


def test_construct_self_verification(tmp_path):
    # outputs of construct re-pass their own checkers through nova check
    out = tmp_path / "cob"
    assert main(["construct", "cobound", "FIX-NF4", "--out", str(out)]) == 0
    alg = tmp_path / "alg.json"
    from novikov.serialize import dump_definition

    dump_definition(algebra_to_dict(nv.fixture("FIX-NF4").algebra, "a"), str(alg))
    delta = out / "FIX-NF4-r-cobound.json"
    assert main(["check", str(alg), str(delta), "--flavor", "novikov-bialgebra"]) == 0


def test_fixtures_list(capsys):
    assert main(["fixtures", "list"]) == 0
    lines = [ln for ln in capsys.readouterr().out.splitlines() if ln.strip()]
    assert len(lines) == 8


def test_fixtures_emit_rn2(tmp_path):
    assert main(["fixtures", "emit", "FIX-RN2", str(tmp_path / "fx")]) == 0
    form = json.loads((tmp_path / "fx" / "FIX-RN2-form.json").read_text())
    pairs = {(e["left"], e["right"]): e["value"] for e in form["entries"]}
    assert pairs == {("x1", "x2"): "1", ("x2", "x1"): "1"}
    alg = json.loads((tmp_path / "fx" / "FIX-RN2.json").read_text())
    assert len(alg["entries"]) == 3  # x1x2, x2x1, x2x2


def test_fixtures_emit_nf4(tmp_path):
    assert main(["fixtures", "emit", "FIX-NF4", str(tmp_path / "fx")]) == 0
    alg = json.loads((tmp_path / "fx" / "FIX-NF4.json").read_text())
    products = {(e["left"], e["right"]): e["result"] for e in alg["entries"]}
    assert products[("e1", "e1")] == [["e2", "1"]]
    assert products[("e1", "e4")] == [["e2", "1"], ["e3", "-2"]]
    assert products[("e4", "e1")] == [["e2", "-2"], ["e3", "1"]]
    assert products[("e4", "e4")] == [["e3", "1"]]


def test_fixtures_emit_unknown(capsys):
    assert main(["fixtures", "emit", "FIX-NOPE", "/tmp/x"]) == 2


def test_parametric_cli(tmp_path, capsys):
    rdoc = {
        "kind": "rmatrix",
        "name": "family",
        "dim": 2,
        "basis": ["e1", "e2"],
        "entries": [
            {"left": "e1", "right": "e2", "value": "k"},
            {"left": "e2", "right": "e1", "value": "-k"},
            {"left": "e2", "right": "e2", "value": "l"},
        ],
    }
    path = tmp_path / "family.json"
    path.write_text(json.dumps(rdoc))
    # on the defective table the family leaves a k^2 residual: exit 1
    code = main(["construct", "parametric", "FIX-NT2", str(path), "--params", "k,l"])
    assert code == 1
    out = capsys.readouterr().out
    assert "k^2" in out
    # the l-only subfamily is a genuine solution family
    sub = {
        "kind": "rmatrix",
        "name": "subfamily",
        "dim": 2,
        "basis": ["e1", "e2"],
        "entries": [{"left": "e2", "right": "e2", "value": "l"}],
    }
    path2 = tmp_path / "sub.json"
    path2.write_text(json.dumps(sub))
    assert main(["construct", "parametric", "FIX-NT2", str(path2), "--params", "l"]) == 0


def test_search_cli(capsys):
    code = main(
        ["construct", "search", "FIX-NT2", "--support", "e1,e2;e2,e1;e2,e2", "--grid=-1,0,1"]
    )
    assert code == 0
    out = capsys.readouterr().out
    hits = [json.loads(line) for line in out.splitlines() if line.startswith("{")]
    assert len(hits) == 15


def test_factorize_cli(capsys):
    code = main(["construct", "factorize", "FIX-NF4", "--element", "1,0,0,0"])
    assert code == 0
    out = capsys.readouterr().out
    assert "x_plus  = 0" in out
    assert "x_minus = 1*e1" in out
