"""Command-line interface: subcommand behavior, output formats, exit codes
and reproducibility."""

import io
import json
import math

import numpy as np
import pytest

from trunctet import L0, Tetrahedron
from trunctet.cli import main

PI6 = ",".join([repr(math.pi / 6)] * 6)


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


class TestConvert:
    def test_angles_to_json(self):
        code, out, _ = run(["convert", "--angles", PI6])
        assert code == 0
        record = json.loads(out)
        assert np.allclose(record["lengths"], L0, atol=1e-12)

    def test_degrees(self):
        code, out, _ = run(["convert", "--angles", "30,30,30,30,30,30", "--degrees"])
        assert code == 0
        assert np.allclose(json.loads(out)["lengths"], L0, atol=1e-12)

    def test_lengths_input(self):
        code, out, _ = run(["convert", "--lengths", ",".join([repr(L0)] * 6)])
        assert code == 0
        assert np.allclose(json.loads(out)["angles"], math.pi / 6, atol=1e-9)

    def test_csv(self):
        code, out, _ = run(["convert", "--angles", PI6, "--csv"])
        assert code == 0
        assert out.splitlines()[0] == "l12,l13,l14,l34,l24,l23"


class TestVolume:
    def test_golden(self):
        code, out, _ = run(["volume", "--angles", PI6])
        assert code == 0
        assert float(out) == pytest.approx(3.226, abs=1e-3)

    def test_json_round_trips_record(self):
        code, out, _ = run(["volume", "--angles", PI6, "--json"])
        assert code == 0
        tet = Tetrahedron.from_json_dict(json.loads(out))
        assert tet.volume == pytest.approx(3.226, abs=1e-3)


class TestGrad:
    def test_both_charts(self):
        code, out, _ = run(["grad", "--angles", PI6])
        assert code == 0
        record = json.loads(out)
        assert np.allclose(record["dvol_dangles"], -L0 / 2.0, atol=1e-9)
        assert all(v < 0 for v in record["dvol_dlengths"])


class TestVerify:
    def test_theorem_passes(self):
        code, out, _ = run(
            ["verify", "theorem", "--ell", "0.59", "--samples", "200", "--seed", "7"]
        )
        assert code == 0
        record = json.loads(out)
        assert record["report"]["passes"] == 200
        assert record["defaults"]["seed"] == 7

    def test_anglesum(self):
        code, out, _ = run(
            ["verify", "anglesum", "--sum", "3.0", "--samples", "50", "--seed", "8"]
        )
        assert code == 0
        assert json.loads(out)["report"]["failures"] == 0

    def test_missing_ell_is_usage_error(self):
        code, _, err = run(["verify", "theorem", "--samples", "5"])
        assert code == 1
        assert "ell" in err


class TestFlow:
    def test_csv_output(self):
        code, out, _ = run(
            ["flow", "--lengths", "0.9,0.8,0.7,0.9,0.8,0.7", "--ell", "0.3"]
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "t,l12,l13,l14,l34,l24,l23,volume"
        rows = [line.split(",") for line in lines[1:]]
        assert all(len(r) == 8 for r in rows)
        assert all(min(map(float, r[1:7])) >= 0.3 - 1e-9 for r in rows)

    def test_json_output(self):
        code, out, _ = run(
            ["flow", "--lengths", "0.7,0.7,0.7,0.7,0.7,0.7", "--ell", "0.5", "--json"]
        )
        assert code == 0
        record = json.loads(out)
        assert record["reason"] == "regular"
        Tetrahedron.from_json_dict(record["points"][0]["tetrahedron"])


class TestOtherSubcommands:
    def test_degenerate(self):
        code, out, _ = run(["degenerate", "--steps", "5"])
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 6
        assert float(lines[-1].split(",")[-1]) == pytest.approx(0.0, abs=1e-9)

    def test_scan(self):
        code, out, _ = run(["scan", "--grid", "0.2:2.0:10"])
        assert code == 0
        values = [float(line.split(",")[1]) for line in out.splitlines()[1:]]
        assert all(b < a for a, b in zip(values, values[1:]))

    def test_sample(self):
        code, out, _ = run(["sample", "--constraint", "acute", "--seed", "3"])
        assert code == 0
        Tetrahedron.from_json_dict(json.loads(out))

    def test_conjecture_prima(self):
        code, out, _ = run(
            ["conjecture", "prima", "--angles", "0.4,0.5,0.3,0.45,0.35,0.5",
             "--ell", "0.3"]
        )
        assert code == 0
        assert json.loads(out)["holds"] is True


class TestErrorsAndDeterminism:
    def test_malformed_vector(self):
        code, _, err = run(["volume", "--angles", "1,2,3"])
        assert code == 1
        assert err

    def test_missing_input(self):
        code, _, _ = run(["volume"])
        assert code == 1

    def test_numerical_failure(self):
        code, _, err = run(["volume", "--angles", "2,2,2,2,2,2"])
        assert code == 2
        assert "error" in err

    def test_unknown_flag(self):
        code, _, _ = run(["volume", "--bogus", "1"])
        assert code == 1

    def test_byte_determinism(self):
        argv = ["verify", "theorem", "--ell", "0.3", "--samples", "100", "--seed", "5"]
        results = [run(argv) for _ in range(2)]
        assert results[0] == results[1]
        assert results[0][0] == 0
