import io
import json

import numpy as np
import pytest

from meyerwave import export
from meyerwave.cli import main
from meyerwave.export import ExportRequest, InvalidRequest, evaluate_series
from meyerwave.spectral import W_MID


class TestExportRequest:
    def test_valid(self):
        req = ExportRequest("phi", -1.0, 1.0, 0.5)
        assert req.format == "csv"

    def test_rejects_bad_range(self):
        with pytest.raises(InvalidRequest):
            ExportRequest("phi", 1.0, -1.0, 0.5)

    def test_rejects_bad_step(self):
        with pytest.raises(InvalidRequest):
            ExportRequest("phi", 0.0, 1.0, 0.0)

    def test_rejects_unknown_function(self):
        with pytest.raises(InvalidRequest):
            ExportRequest("nonesuch", 0.0, 1.0, 0.5)

    def test_rejects_runaway_export(self):
        with pytest.raises(InvalidRequest):
            ExportRequest("phi", 0.0, 1e6, 1e-6)


class TestSeries:
    def test_row_count(self):
        _, axis, values = evaluate_series(ExportRequest("phi", -8.0, 8.0, 0.01))
        assert len(axis) == 1601
        assert len(values) == 1601

    def test_spectrum_support(self):
        label, w, v = evaluate_series(
            ExportRequest("phi_spectrum", 0.0, W_MID + 1.0, 0.01))
        assert label == "w"
        assert np.all(v[w > W_MID + 1e-9] == 0.0)

    def test_wavelet_band_centre(self):
        _, w, v = evaluate_series(
            ExportRequest("psi_spectrum_magnitude", 0.0, 10.0, 0.001))
        support = w[v > 0.0]
        centre = 0.5 * (support[0] + support[-1])
        assert centre == pytest.approx(5.0 * np.pi / 3.0, abs=0.01)

    def test_csv_round_trip_exact(self):
        req = ExportRequest("psi", -3.0, 3.0, 0.07)
        label, axis, values = evaluate_series(req)
        buf = io.StringIO()
        export.write_csv(buf, "psi", label, axis, values)
        header, axis2, values2 = export.parse_csv(buf.getvalue())
        assert header == "t,psi"
        assert np.array_equal(axis, axis2)
        assert np.array_equal(values, values2)


class TestCli:
    def test_sample_csv(self, tmp_path):
        out = tmp_path / "phi.csv"
        code = main(["sample", "--function", "phi", "--from", "-8",
                     "--to", "8", "--step", "0.01", "--output", str(out)])
        assert code == 0
        lines = out.read_text().strip().splitlines()
        assert lines[0] == "t,phi"
        assert len(lines) == 1602

    def test_sample_json(self, tmp_path):
        out = tmp_path / "psi.json"
        code = main(["sample", "--function", "psi", "--from", "0",
                     "--to", "1", "--step", "0.25", "--format", "json",
                     "--output", str(out)])
        assert code == 0
        payload = json.loads(out.read_text())
        assert payload["grid"]["count"] == 5
        assert payload["t"] == pytest.approx([0.0, 0.25, 0.5, 0.75, 1.0])
        assert payload["value"][2] == pytest.approx(4.0 / np.pi)

    def test_sample_oracle(self, tmp_path):
        out = tmp_path / "o.csv"
        code = main(["sample", "--function", "phi_oracle", "--from", "0",
                     "--to", "1", "--step", "0.5", "--output", str(out)])
        assert code == 0
        _, _, values = export.parse_csv(out.read_text())
        assert values[0] == pytest.approx(2.0 / 3.0 + 4.0 / (3.0 * np.pi),
                                          abs=1e-9)

    def test_usage_error_exit_code(self, capsys):
        assert main(["sample", "--function", "phi", "--from", "2",
                     "--to", "1", "--step", "0.1"]) == 2

    def test_unknown_function_is_argparse_error(self):
        with pytest.raises(SystemExit) as exc_info:
            main(["sample", "--function", "bogus", "--from", "0",
                  "--to", "1", "--step", "0.1"])
        assert exc_info.value.code == 2

    def test_coarse_signal_grid_is_usage_error(self, tmp_path):
        code = main(["sample", "--function", "s_c", "--from", "-8",
                     "--to", "8", "--step", "0.5",
                     "--output", str(tmp_path / "x.csv")])
        assert code == 2

    def test_decompose_writes_files(self, tmp_path):
        code = main(["decompose", "--output", str(tmp_path),
                     "--grid-dt", "0.03125", "--grid-span", "8"])
        assert code == 0
        names = {p.name for p in tmp_path.iterdir()}
        assert names == {"meyer_s_c.csv", "meyer_s_s.csv",
                         "meyer_reconstruction.csv",
                         "meyer_reconstruction_error.csv"}
        _, _, err = export.parse_csv(
            (tmp_path / "meyer_reconstruction_error.csv").read_text())
        n = len(err)
        margin = n // 10
        assert np.max(np.abs(err[margin:n - margin])) <= 1e-3
