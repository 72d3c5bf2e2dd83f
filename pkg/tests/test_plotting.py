import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from neflab.catalog import Generality, GenusContext
from neflab.certifier import certify
from neflab.neronseveri import SurfaceClass
from neflab.plotting import (
    CONJECTURAL,
    Overlays,
    PlotRow,
    PlotSpec,
    plot_rows,
    render,
    render_csv,
    render_svg,
    write_plot,
)

G10_ARBITRARY = GenusContext(10, Generality.ARBITRARY)
G10_VG = GenusContext(10, Generality.VERY_GENERAL)


def fig1_spec(**overrides):
    defaults = dict(g=10, contexts=(G10_ARBITRARY,), a_min=Fraction(2),
                    a_max=Fraction(20), step=Fraction(1))
    defaults.update(overrides)
    return PlotSpec(**defaults)


def test_csv_is_byte_stable():
    spec = fig1_spec()
    assert render_csv(spec) == render_csv(spec)


def test_csv_layout():
    lines = render_csv(fig1_spec()).splitlines()
    assert lines[0] == "family,a,b,status"
    assert all(len(line.split(",")) == 4 for line in lines[1:])
    # deterministic order: conjectural overlay first
    assert lines[1].startswith("conjectural_boundary,")


def test_fig1_contains_pinned_rows():
    csv_text = render_csv(fig1_spec())
    assert "vojta,2,20,certified" in csv_text
    assert "vojta_mirror,20,2,certified" in csv_text
    assert "jacobian,2,101,certified" in csv_text
    assert "jacobian_mirror,101,2,certified" in csv_text


def test_only_boundary_overlay_is_conjectural():
    for row in plot_rows(fig1_spec()):
        assert (row.status == CONJECTURAL) == (row.family == "conjectural_boundary")


def test_certified_rows_certify():
    spec = fig1_spec(a_max=Fraction(6), contexts=(G10_VG,))
    rows = plot_rows(spec)
    sampled = [r for r in rows if r.status != CONJECTURAL
               and not r.family.startswith("tangent")][::7]
    assert sampled
    for row in sampled:
        verdict = certify(SurfaceClass(row.a, row.b, -1), G10_VG)
        assert verdict.status == "nef", (row, verdict.status)


def test_overlay_switches_remove_rows():
    spec = fig1_spec(overlays=Overlays(conjectural_boundary=False, vojta=False,
                                       jacobian=False, tangent_segment=False,
                                       catalog_points=False))
    families = {row.family for row in plot_rows(spec)}
    assert families == {"boundary:arbitrary"}


def test_tangent_segment_endpoints():
    rows = [r for r in plot_rows(fig1_spec()) if r.family == "tangent_segment"]
    assert rows == [PlotRow("tangent_segment", 2, 20, "certified"),
                    PlotRow("tangent_segment", 20, 2, "certified")]


def test_catalog_point_rows_present_at_very_general():
    rows = plot_rows(fig1_spec(contexts=(G10_VG,)))
    points = {(r.family.split(":")[-1], r.a, r.b) for r in rows
              if r.family.startswith("catalog:very-general:")}
    assert ("very_general_a2", 2, 11) in points
    r = Fraction(34533, 8000)  # 1 + sqrt(11) rounded up to the 10^-6 grid
    assert ("ross_symmetric", r, r) in points
    # delta-edge and mixed rays sit on the c = +1 sheet and stay off this plot
    assert not any(name == "vojta_mixed" for name, _, _ in points)


def test_svg_well_formed_with_dashes_and_points():
    svg = render_svg(fig1_spec(contexts=(G10_VG,)))
    root = ET.fromstring(svg)
    assert root.tag.endswith("svg")
    body = svg
    assert 'stroke-dasharray="6 4"' in body
    assert "<circle" in body
    assert "genus 10" in body


def test_render_dispatches_on_output():
    assert render(fig1_spec()).startswith("family,")
    assert render(fig1_spec(output="svg")).startswith("<svg")


def test_write_plot(tmp_path):
    target = tmp_path / "fig.csv"
    write_plot(fig1_spec(), target)
    assert target.read_text(encoding="utf-8") == render_csv(fig1_spec())


@pytest.mark.parametrize("overrides", [
    dict(a_min=Fraction(1)),
    dict(step=Fraction(0)),
    dict(a_max=Fraction(1)),
    dict(output="png"),
    dict(contexts=(GenusContext(3, Generality.ARBITRARY),)),
])
def test_spec_validation(overrides):
    with pytest.raises(ValueError):
        fig1_spec(**overrides)
