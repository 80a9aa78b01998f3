"""Rendering against small synthetic input files."""

import json

import numpy as np
import pytest
from matplotlib.patches import Rectangle

from cra_figures import MissingInput, render_dynamics, render_phasemap, render_spectrum
from cra_figures.cli import main


def spectrum_record(g, bound=(), bic=None):
    return {
        "params": {"omega_c": 0.0, "xi": 1.0, "delta_c": 0.0, "g": g, "d": 3,
                   "n_sites": 102},
        "omega_emitter": 0.0,
        "band": [-2.0, 2.0],
        "thresholds": {"g_upper": 0.8165, "g_lower": 0.8165},
        "n_out_of_band": len(bound),
        "eigenvalues": [-2.0, 0.0, 2.0],
        "emitter_weights": [0.1, 0.8, 0.1],
        "bound_states_outside": [
            {"branch": branch, "kappa": 0.3, "energy": energy,
             "c_emitter": 0.4, "a_norm": 0.2, "shallow": False}
            for branch, energy in bound
        ],
        "bound_state_in_continuum": bic,
    }


def write_sweep(root, n=5):
    for i, g in enumerate(np.linspace(0.2, 1.6, n)):
        sub = root / f"g{i:02d}"
        sub.mkdir(parents=True)
        bound = []
        if g > 0.8165:
            bound = [("lower", -2.0 - (g - 0.8165)), ("upper", 2.0 + (g - 0.8165))]
        record = spectrum_record(float(g), bound,
                                 bic={"mode_index": 2, "wavenumber": 1.5708,
                                      "energy": 0.0, "c_emitter": 0.8,
                                      "a_photon": -0.4})
        (sub / "spectrum.json").write_text(json.dumps(record))


def write_trajectory(path, n=200):
    t = np.linspace(0.0, 20.0, n)
    pe = 0.2 + 0.1 * np.cos(1.3 * t)
    rows = ["t,re_u,im_u,p_e"]
    rows += [f"{ti},{np.sqrt(p)},0.0,{p}" for ti, p in zip(t, pe)]
    path.write_text("\n".join(rows) + "\n")


class TestSpectrum:
    def test_band_patch_and_branch_curves(self, tmp_path):
        write_sweep(tmp_path)
        fig = render_spectrum(tmp_path, tmp_path / "spectrum.pdf")
        ax = fig.axes[0]
        assert any(isinstance(p, Rectangle) for p in ax.patches)  # shaded band
        assert len(ax.lines) >= 2  # the two detached branches
        assert len(ax.collections) >= 1  # the horizontal in-band level
        assert (tmp_path / "spectrum.pdf").stat().st_size > 0

    def test_empty_directory_is_missing_input(self, tmp_path):
        with pytest.raises(MissingInput):
            render_spectrum(tmp_path)

    def test_records_are_sorted_by_coupling(self, tmp_path):
        (tmp_path / "spectrum_b.json").write_text(json.dumps(spectrum_record(1.5)))
        (tmp_path / "spectrum_a.json").write_text(json.dumps(spectrum_record(0.5)))
        fig = render_spectrum(tmp_path)
        assert fig.axes[0].get_xlim()[0] == pytest.approx(0.5)


class TestDynamics:
    def test_four_panels(self, tmp_path):
        for name in ("run_a", "run_b", "run_c", "run_d"):
            (tmp_path / name).mkdir()
            write_trajectory(tmp_path / name / "trajectory.csv")
        fig = render_dynamics(tmp_path, tmp_path / "dynamics.svg")
        visible = [ax for ax in fig.axes if ax.get_visible()]
        assert len(visible) == 4
        assert all(len(ax.lines) == 1 for ax in visible)
        assert (tmp_path / "dynamics.svg").stat().st_size > 0

    def test_single_panel(self, tmp_path):
        write_trajectory(tmp_path / "trajectory.csv")
        fig = render_dynamics(tmp_path)
        assert len([ax for ax in fig.axes if ax.get_visible()]) == 1

    def test_empty_directory_is_missing_input(self, tmp_path):
        with pytest.raises(MissingInput):
            render_dynamics(tmp_path)


class TestPhasemap:
    def write_map(self, root, with_boundaries=True):
        rows = ["g,delta_c,n_boc,has_bic,n_total"]
        for g in (0.0, 0.5, 1.0):
            for dc in (-1.0, 0.0, 1.0):
                n = int(g > 0.7)
                rows.append(f"{g},{dc},{n},0,{n}")
        (root / "phasemap.csv").write_text("\n".join(rows) + "\n")
        if with_boundaries:
            curve = "delta_c,g_crit\n-1.0,0.9\n0.0,0.8\n1.0,0.7\n"
            (root / "boundary_u.csv").write_text(curve)
            (root / "boundary_l.csv").write_text(curve)

    def test_heatmap_with_curves(self, tmp_path):
        self.write_map(tmp_path)
        fig = render_phasemap(tmp_path, tmp_path / "map.png")
        ax = fig.axes[0]
        assert len(ax.collections) >= 1  # the mesh
        assert len(ax.lines) == 2  # both threshold curves
        assert (tmp_path / "map.png").stat().st_size > 0

    def test_missing_boundary_warns_but_renders(self, tmp_path):
        self.write_map(tmp_path, with_boundaries=False)
        with pytest.warns(UserWarning):
            fig = render_phasemap(tmp_path)
        assert len(fig.axes[0].lines) == 0

    def test_missing_table_is_an_error(self, tmp_path):
        with pytest.raises(MissingInput):
            render_phasemap(tmp_path)


class TestCli:
    def test_render_spectrum_command(self, tmp_path):
        write_sweep(tmp_path / "in")
        out = tmp_path / "fig" / "spectrum.pdf"
        assert main(["spectrum", "--in", str(tmp_path / "in"), "--out", str(out)]) == 0
        assert out.stat().st_size > 0

    def test_missing_input_reports_error(self, tmp_path, capsys):
        (tmp_path / "in").mkdir()
        code = main(["dynamics", "--in", str(tmp_path / "in"),
                     "--out", str(tmp_path / "x.png")])
        assert code == 1
        assert capsys.readouterr().err.startswith("error: ")
