import json

import pytest

from cherngeo.cli import main, parse_block_specs
from cherngeo.catalog import elliptic_surface, ruled_spheres


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_block_specs():
    blocks = parse_block_specs(["elliptic", "--m", "3", "ruled-spheres"])
    assert blocks == [elliptic_surface(3), ruled_spheres()]
    blocks = parse_block_specs(["knot-elliptic", "--k", "2", "--knot-genus", "0"])
    assert blocks[0].fiber_genus == 1


def test_block_command(capsys):
    code, out, err = run(capsys, "block", "elliptic", "--m", "2")
    assert code == 0
    assert "chi_h             2" in out
    assert "sigma             -16" in out
    assert "euler             24" in out


def test_block_command_json(capsys):
    code, out, _ = run(capsys, "block", "ruled-spheres", "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert record["chi_h"] == 1
    assert record["c1_sq"] == 8
    assert record["sigma"] == 0
    assert record["euler"] == 4


def test_block_usage_error(capsys):
    code, _, err = run(capsys, "block", "elliptic", "--m", "0")
    assert code == 2
    assert "usage error" in err


def test_block_validation_failure(capsys):
    code, _, err = run(
        capsys, "block", "generic", "--chi", "1", "--c1sq", "0", "--genus", "1", "--n", "0"
    )
    assert code == 1
    assert "violation" in err


def test_product_command(capsys):
    code, out, _ = run(
        capsys, "product", "ruled-spheres", "--surface-genus", "0", "--format", "json"
    )
    assert code == 0
    assert json.loads(out) == {"c3": 8, "c1_cubed": 48, "c1c2": 24}


def test_fibersum_worked_example(capsys):
    code, out, _ = run(capsys, "fibersum", "elliptic", "--m", "3", "ruled-spheres")
    assert code == 0
    assert "c3    = 72" in out
    assert "c1c2  = 72" in out


def test_fibersum_calabi_yau(capsys):
    code, out, _ = run(
        capsys, "fibersum", "elliptic", "--m", "2",
        "knot-elliptic", "--k", "2", "--knot-genus", "0", "--format", "json",
    )
    assert code == 0
    assert json.loads(out) == {"c3": 0, "c1_cubed": 0, "c1c2": 0}


def test_fibersum_oracle_flag(capsys):
    code, out, err = run(
        capsys, "fibersum", "elliptic", "--m", "1",
        "knot-elliptic", "--k", "1", "--knot-genus", "1", "--oracle", "--format", "json",
    )
    assert code == 0
    assert "oracle: agreed" in err
    assert json.loads(out) == {"c3": -24, "c1_cubed": 0, "c1c2": -24}


def test_search_worked_example(capsys):
    code, out, _ = run(capsys, "search", "--target", "24,0,24", "--max-m", "5")
    assert code == 0
    assert "E(1) + S2xS2" in out


def test_search_obstruction(capsys):
    code, out, err = run(capsys, "search", "--target", "2,2,24")
    assert code == 0
    assert out.strip() == ""
    assert "divisible by 6" in err


def test_search_divisibility_failure(capsys):
    code, _, err = run(capsys, "search", "--target", "0,0,1")
    assert code == 0
    assert "divisible by 24" in err


def test_search_json_deterministic(capsys):
    argv = ["search", "--target", "24,0,24", "--max-m", "3", "--format", "json"]
    _, out1, _ = run(capsys, *argv)
    _, out2, _ = run(capsys, *argv)
    assert out1 == out2
    payload = json.loads(out1)
    assert any(r["block1"]["name"] == "E(1)" for r in payload)


def test_search_config_file(capsys, tmp_path):
    config = tmp_path / "bounds.json"
    config.write_text(json.dumps({"families": ["elliptic", "ruled-spheres"], "max_m": 4}))
    code, out, _ = run(
        capsys, "search", "--target", "48,0,48", "--config", str(config)
    )
    assert code == 0
    assert "E(2) + S2xS2" in out


def test_classify_elliptic_point(capsys):
    code, out, _ = run(capsys, "classify", "--chi", "2", "--c1sq", "0")
    assert code == 0
    assert "elliptic axis     yes" in out
    assert "sigma < 0" in out


def test_classify_sigma_zero(capsys):
    code, out, _ = run(capsys, "classify", "--chi", "1", "--c1sq", "8", "--format", "json")
    assert code == 0
    assert json.loads(out)["signature_sign"] == 0


def test_plot_csv(capsys):
    code, out, _ = run(capsys, "plot", "--chi", "0..2", "--c1sq", "-1..1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("chi_h,c1_sq,labels")
    assert len(lines) == 1 + 3 * 3


def test_plot_svg_file(capsys, tmp_path):
    out_file = tmp_path / "fig.svg"
    code, _, _ = run(
        capsys, "plot", "--chi", "0..10", "--c1sq", "-5..95",
        "--format", "svg", "--output", str(out_file),
    )
    assert code == 0
    svg = out_file.read_text()
    assert svg.startswith("<svg")
    assert "stroke-dasharray" in svg  # dashed elliptic axis
    assert "c1^2 = 9*chi_h" in svg


def test_plot_bad_format(capsys):
    code, _, err = run(capsys, "plot", "--chi", "0..2", "--c1sq", "0..2", "--format", "svgz")
    assert code == 2


def test_catalog_default(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    assert "E(1)" in out
    assert "S2xS2" in out


def test_catalog_file(capsys, tmp_path):
    path = tmp_path / "cat.json"
    path.write_text(json.dumps([{"family": "elliptic", "m": 7}]))
    code, out, _ = run(capsys, "catalog", "--catalog", str(path), "--format", "json")
    assert code == 0
    assert json.loads(out)[0]["name"] == "E(7)"


def test_missing_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as excinfo:
        main([])
    assert excinfo.value.code == 2
