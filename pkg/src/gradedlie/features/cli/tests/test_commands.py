"""Tests for the command line verbs."""

import itertools
import json

import pytest

from ....models.algebra import AlgebraFamily, AlgebraSpec, GeneratorSetDocument
from ...algebra import GradedMatrix
from ...catalog import build
from ...exact import Scalar
from ...structure import (
    antisymmetry_failures,
    jacobi_failures_from_constants,
    rebuild_bracket_from_constants,
)
from .. import commands
from ..commands import EXIT_FAILED, EXIT_OK, EXIT_USAGE, run
from ..documents import document_degrees, export_structure_constants, load_structure_constants


def run_json(capsys, argv):
    code = run(argv)
    return code, json.loads(capsys.readouterr().out)


def test_build_so_q_dims(capsys):
    """Test the so_1(7) build document."""
    code, doc = run_json(capsys, ["build", "--family", "so_q", "--n", "3", "--q", "1", "--output", "json"])

    assert code == EXIT_OK
    assert doc["dims"] == {"00": 7, "01": 2, "10": 4, "11": 8}
    assert doc["dimension"] == 21
    assert doc["partition"] == ["00", "11", "11", "00", "11", "11", "01"]
    assert [x["index"] for x in doc["basis"]] == list(range(1, 22))
    assert list(doc) == ["spec", "size", "partition", "dimension", "dims", "basis"]


@pytest.mark.parametrize(
    "argv",
    [
        ["build", "--family", "osp", "--n1", "1", "--n2", "1"],
        ["roots", "--family", "so_q", "--n", "2", "--q", "1"],
        ["relations", "--family", "paraboson", "--n1", "1", "--n2", "1"],
        ["export", "--family", "gl_super", "--m1", "1", "--m2", "0", "--n1", "1", "--n2", "0"],
    ],
)
def test_output_is_deterministic(capsys, argv):
    """Test that two identical invocations write identical bytes."""
    assert run(argv) == EXIT_OK
    first = capsys.readouterr().out
    assert run(argv) == EXIT_OK
    assert capsys.readouterr().out == first


def test_table_output(capsys):
    """Test the aligned text rendering."""
    assert run(["build", "--family", "so_q", "--n", "2", "--q", "1", "--output", "table"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "so_q(2,1)  size 5  dimension 10" in out
    assert "degree" in out


def test_relations_pf_same(capsys):
    """Test the parafermion relation count on so_1(5)."""
    code, doc = run_json(
        capsys, ["relations", "--family", "parafermion", "--n", "2", "--q", "1", "--set", "pf_same"]
    )
    assert code == EXIT_OK
    assert doc == {"relation": "pf_same", "checked": 16, "failures": []}


def test_relations_default_set(capsys):
    """Test that parabosons default to the paraboson relations."""
    code, doc = run_json(capsys, ["relations", "--family", "paraboson", "--n1", "1", "--n2", "1"])
    assert code == EXIT_OK
    assert doc["relation"] == "pb_same"


@pytest.mark.parametrize(
    "argv",
    [
        ["roots", "--family", "osp", "--n1", "0", "--n2", "1"],
        ["build", "--family", "so_q", "--n", "2", "--q", "2"],
        ["build", "--family", "e8", "--n", "2"],
        ["build", "--family", "so_q", "--n", "2"],
        ["build", "--family", "gl_pqrs", "--p", "9", "--q", "9", "--r", "0", "--s", "0"],
        ["build", "--family", "so_q", "--n", "2", "--q", "1", "--output", "xml"],
        ["relations", "--family", "parafermion", "--n", "2", "--q", "1", "--set", "rel_pf"],
        ["relations", "--family", "paraboson", "--n1", "1", "--n2", "1", "--set", "pf_same"],
        ["relations", "--family", "so_q", "--n", "2", "--q", "1"],
        ["generate", "--family", "parafermion", "--n", "2"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    """Test that bad requests exit 2 with a diagnostic on stderr."""
    assert run(argv) == EXIT_USAGE
    captured = capsys.readouterr()
    assert captured.out == ""
    assert captured.err


def test_usage_error_is_one_line(capsys):
    """Test the diagnostic for an out-of-range parameter."""
    run(["build", "--family", "osp", "--n1", "0", "--n2", "1"])
    err = capsys.readouterr().err
    assert err.count("\n") == 1
    assert "n1" in err


def test_help_exits_0(capsys):
    assert run(["--help"]) == EXIT_OK
    assert "verify" in capsys.readouterr().out


def test_roots_document(capsys):
    """Test the root table of so_1(5)."""
    code, doc = run_json(capsys, ["roots", "--family", "so_q", "--n", "2", "--q", "1"])

    assert code == EXIT_OK
    assert doc["matches_expected"] is True
    assert doc["rank"] == 2
    assert len(doc["roots"]) == 8
    assert [row["label"] for row in doc["simple"]] == ["eps1-eps2", "eps2"]
    assert [row["degree"] for row in doc["simple"]] == ["11", "10"]


def test_roots_of_osp_use_delta(capsys):
    code, doc = run_json(capsys, ["roots", "--family", "osp", "--n1", "1", "--n2", "1"])
    assert code == EXIT_OK
    assert doc["coordinates"] == "delta"
    assert doc["positive"]["00"] == ["2delta1", "2delta2"]


def test_verify_single_algebra(capsys):
    code, doc = run_json(capsys, ["verify", "--family", "so_q", "--n", "2", "--q", "1"])
    assert code == EXIT_OK
    assert doc["is_valid"] is True
    assert [s["name"] for s in doc["suites"]][:2] == ["jacobi", "symmetry"]


def test_verify_sweep(capsys, monkeypatch):
    """Test --sweep with a reduced spec list."""
    specs = [AlgebraSpec.so_q(2, 1), AlgebraSpec(family=AlgebraFamily.SL_PQRS, params=[1, 1, 0, 0])]
    monkeypatch.setattr(commands, "desk_scale_specs", lambda max_total: specs)

    code, doc = run_json(capsys, ["verify", "--sweep", "--max-total", "2"])

    assert code == EXIT_OK
    assert doc["suites"][0]["target"] == "so_q(2,1)"
    assert doc["suites"][-1]["target"] == "sl_pqrs(1,1,0,0)"


def test_verify_failure_exits_1(capsys, monkeypatch):
    """Test that a failing suite gives exit code 1."""

    def broken_jacobi(x, y, z, conv):
        return False

    monkeypatch.setattr("gradedlie.features.verification.verifier.jacobi_check", broken_jacobi)
    code, doc = run_json(capsys, ["verify", "--family", "gl_pqrs", "--p", "1", "--q", "1", "--r", "0", "--s", "0"])
    assert code == EXIT_FAILED
    assert doc["is_valid"] is False


def test_generate_parafermions(capsys):
    """Test that parafermions generate so_1(5)."""
    code, doc = run_json(capsys, ["generate", "--family", "parafermion", "--n", "2", "--q", "1"])

    assert code == EXIT_OK
    assert doc["generators"] == 4
    assert doc["dimension"] == 10
    assert doc["matches_build"] is True


def test_generate_from_file(capsys, tmp_path):
    """Test the closure of a generator set read from a file."""
    path = tmp_path / "generators.json"
    data = GeneratorSetDocument.model_config["json_schema_extra"]["example"]
    path.write_text(json.dumps(data), encoding="utf-8")

    code, doc = run_json(capsys, ["generate", "--from-file", str(path)])

    assert code == EXIT_OK
    assert doc["generators"] == 1
    assert doc["dimension"] == 1
    assert doc["dims"]["01"] == 1
    assert doc["matches_build"] is None


def test_export_round_trip(capsys, tmp_path, so_q_2_1):
    """Test that re-imported constants reproduce every bracket of so_1(5)."""
    path = tmp_path / "so_q.json"
    assert run(["export", "--family", "so_q", "--n", "2", "--q", "1", "--out", str(path)]) == EXIT_OK
    assert capsys.readouterr().out == ""

    doc, constants = load_structure_constants(path)
    assert doc.dimension == so_q_2_1.dimension
    for alpha, beta in itertools.product(range(so_q_2_1.dimension), repeat=2):
        expected = so_q_2_1.bracket(alpha, beta).mat
        assert rebuild_bracket_from_constants(so_q_2_1, constants, alpha, beta) == expected

    degrees = document_degrees(doc)
    assert antisymmetry_failures(constants, degrees, doc.convention) == []
    assert jacobi_failures_from_constants(constants, degrees, doc.convention) == []


def test_export_records_are_sorted(so_q_2_1):
    doc = json.loads(export_structure_constants(so_q_2_1))
    keys = [(r["alpha"], r["beta"], r["gamma"]) for r in doc["records"]]
    assert keys == sorted(keys)
    assert all(r["value"] != {"r": "0/1", "s": "0/1"} for r in doc["records"])


def test_export_empty_algebra(capsys):
    """Test that the zero algebra exports an empty, valid document."""
    code, doc = run_json(capsys, ["export", "--family", "sl_pqrs", "--p", "1", "--q", "0", "--r", "0", "--s", "0"])
    assert code == EXIT_OK
    assert doc["dimension"] == 0
    assert doc["records"] == []


def test_export_gl_commutator_sign(capsys):
    """Test that [[e12, e21]] in gl_{1,1,1,1}(4) is the commutator e11 - e22."""
    spec = AlgebraSpec(family=AlgebraFamily.GL_PQRS, params=[1, 1, 1, 1])
    basis = build(spec)
    units = [x.mat for x in basis.basis]

    def index(i, j):
        return units.index(GradedMatrix.unit(basis.partition, i, j).mat) + 1

    code, doc = run_json(capsys, ["export", "--family", "gl_pqrs", "--p", "1", "--q", "1", "--r", "1", "--s", "1"])
    assert code == EXIT_OK

    got = {
        r["gamma"]: Scalar.from_json(r["value"])
        for r in doc["records"]
        if (r["alpha"], r["beta"]) == (index(1, 2), index(2, 1))
    }
    assert got == {index(1, 1): Scalar(1), index(2, 2): Scalar(-1)}


def test_unwritable_out_path(tmp_path, capsys):
    path = tmp_path / "missing" / "out.json"
    assert run(["build", "--family", "so_q", "--n", "2", "--q", "1", "--out", str(path)]) == EXIT_USAGE
    assert "gradedlie build" in capsys.readouterr().err


def test_failed_self_check_exits_1(capsys, monkeypatch):
    """Test that a build whose self-check fails is an invariant failure, not a usage error."""

    def violated(x, cond):
        return False

    monkeypatch.setattr("gradedlie.features.catalog.builders.form_membership", violated)
    argv = ["build", "--family", "osp", "--n1", "1", "--n2", "1", "--partition", "00,10,01,10,01"]

    assert run(argv) == EXIT_FAILED
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "violates the form" in captured.err


def test_generate_from_empty_file(capsys, tmp_path):
    """Test that no generators close to the zero subalgebra."""
    path = tmp_path / "empty.json"
    path.write_text(json.dumps({"partition": ["00", "01"], "convention": "lie_algebra"}), encoding="utf-8")

    code, doc = run_json(capsys, ["generate", "--from-file", str(path)])

    assert code == EXIT_OK
    assert doc["generators"] == 0
    assert doc["dimension"] == 0
    assert doc["partition"] == ["00", "01"]
