import io
from pathlib import Path

import pytest

from app.modules.cli import run, sha256_of


FIXTURES = Path(__file__).parent / "fixtures"


def fixture(name: str) -> str:
    return str(FIXTURES / name)


def diffchar(tmp_path: Path, *argv: str) -> tuple[int, str, str]:
    """Запускает CLI с логами в `tmp_path` и возвращает код, stdout и stderr."""
    stdout, stderr = io.StringIO(), io.StringIO()
    code = run(["--log-dir", str(tmp_path / "logs"), *argv], stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


def entries(report: str) -> dict[str, str]:
    return dict(line.split(" = ", 1) for line in report.splitlines())


def test_cohomology_of_torus(tmp_path: Path) -> None:
    code, out, _ = diffchar(tmp_path, "cohomology", "--complex", fixture("torus.dcx"), "--degree", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("command = diffchar --log-dir")
    assert lines[1] == f"input complex = torus.dcx sha256:{sha256_of(FIXTURES / 'torus.dcx')}"
    report = entries(out)
    assert report["space"] == "torus"
    assert report["group"] == "Z^2"
    assert lines[-1] == "status = OK"


@pytest.mark.parametrize(("ring", "expected"), [("Z", "Z^2"), ("Q", "Q^2"), ("QZ", "(Q/Z)^2")])
def test_cohomology_rings(tmp_path: Path, ring: str, expected: str) -> None:
    code, out, _ = diffchar(tmp_path, "cohomology", "--complex", "torus_min", "--ring", ring, "--degree", "1")
    assert code == 0
    assert entries(out)["group"] == expected


def test_dc_cohomology(tmp_path: Path) -> None:
    code, out, _ = diffchar(tmp_path, "dc-cohomology", "--complex", "circle_3", "--s", "1", "--degree", "1")
    assert code == 0
    assert entries(out)["group"] == "Z^1 + Q^2 + (Q/Z)^1"


def test_chern_number_of_unit_flux(tmp_path: Path) -> None:
    code, out, _ = diffchar(tmp_path, "chern", "--gauge", fixture("flux1.gau"))
    assert code == 0
    report = entries(out)
    assert report["space"] == "sphere_octahedron"
    assert report["chern_number"] == "1"
    assert report["omega[Nab]"] == "1/8"
    assert report["c[Nad]"] == "-1"


def test_holonomy(tmp_path: Path) -> None:
    code, out, _ = diffchar(
        tmp_path, "holonomy", "--gauge", fixture("flux1.gau"), "--cycle", fixture("nab_loop.chain")
    )
    assert code == 0
    assert entries(out)["holonomy"] == "1/8"
    assert "input cycle = nab_loop.chain sha256:" in out


def test_prequantization_round_trip(tmp_path: Path) -> None:
    code, out, _ = diffchar(tmp_path, "preq", "--dc", fixture("circle_flat.dc"))
    assert code == 0
    report = entries(out)
    assert report["a[e01]"] == "1/3"
    assert report["roundtrip"] == "isomorphic"


def test_weil_lift_is_certified(tmp_path: Path) -> None:
    code, out, _ = diffchar(
        tmp_path, "weil", "--complex", "sphere_octahedron", "--cocycle", fixture("nab.cocycle")
    )
    assert code == 0
    report = entries(out)
    assert report["h2_integral"] == "Z^1"
    assert report["h2_dc1"] == "Z^1"
    assert report["lift.c[Nab]"] == "1"
    assert report["status"] == "CERTIFIED"


def test_equivariant_cohomology(tmp_path: Path) -> None:
    argv = ("equivariant", "--complex", "point", "--group", fixture("z2.grp"), "--degree", "2")
    code, out, _ = diffchar(tmp_path, *argv)
    assert code == 0
    report = entries(out)
    assert report["group_order"] == "2"
    assert (report["group_Z"], report["group_Q"], report["group_QZ"]) == ("Z/2", "0", "0")
    code, out, _ = diffchar(tmp_path, *argv, "--s", "2")
    assert code == 0
    assert entries(out)["group"] == "Z/2"


def test_kostant_is_certified(tmp_path: Path) -> None:
    code, out, _ = diffchar(
        tmp_path, "--samples", "3", "kostant", "--complex", fixture("point.dcx"), "--group", fixture("z2.grp")
    )
    assert code == 0
    report = entries(out)
    assert (report["kernel"], report["curvature"], report["h2"]) == ("Z/2", "0", "Z/2")
    assert report["samples_checked"] == "3"
    assert report["status"] == "CERTIFIED"


def test_descent_check(tmp_path: Path) -> None:
    code, out, _ = diffchar(tmp_path, "descent-check", "--complex", "circle_3", "--cover", fixture("circle_half.cov"))
    assert code == 0
    report = entries(out)
    assert report["rho"] == "partition"
    assert report["h1_base"] == report["h1_total"] == "Z^1"
    assert report["status"] == "CERTIFIED"


def test_reports_are_reproducible(tmp_path: Path) -> None:
    argv = ("--seed", "5", "descent-check", "--complex", "circle_3", "--cover", fixture("circle_arcs.cov"))
    first = diffchar(tmp_path, *argv)
    second = diffchar(tmp_path, *argv)
    assert first[0] == 0
    assert first[1] == second[1]


def test_broken_cover_is_an_input_error(tmp_path: Path) -> None:
    code, out, err = diffchar(tmp_path, "descent-check", "--complex", "circle_3", "--cover", fixture("broken.cov"))
    assert code == 2
    assert out == ""
    assert err.startswith("error:")
    assert "broken.cov" in err


def test_monopole_fails_the_command(tmp_path: Path) -> None:
    gauge = tmp_path / "monopole.gau"
    gauge.write_text("space tetrahedron\ngauge\n01 = 1/4\n12 = 3/4\n13 = 1/4\n", encoding="utf-8")
    code, out, err = diffchar(tmp_path, "chern", "--gauge", str(gauge))
    assert code == 1
    report = entries(out)
    assert report["error"] == "MonopoleError"
    assert report["status"] == "FAILED"
    assert "0123" in err


@pytest.mark.parametrize(
    "argv",
    [
        ("cohomology", "--degree", "1"),
        ("cohomology", "--complex", "no_such_space", "--degree", "1"),
        ("chern", "--gauge", "missing.gau"),
    ],
)
def test_missing_inputs(tmp_path: Path, argv: tuple[str, ...]) -> None:
    code, out, err = diffchar(tmp_path, *argv)
    assert code == 2
    assert out == ""
    assert "error:" in err
