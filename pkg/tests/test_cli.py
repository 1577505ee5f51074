import json

from kreps.cli import (
    EXIT_FAMILY_ASSERTION,
    EXIT_NOT_A_KNOT,
    EXIT_NOT_COMMUTING,
    EXIT_OK,
    EXIT_USAGE,
    main,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == EXIT_OK, err
    return json.loads(out)


def test_knot_trefoil_json(capsys):
    report = run_json(capsys, "knot", "1^3", "-n", "2", "--json")
    assert report["determinant"] == "3"
    assert report["alexander_poly"] == "1 - t + t^2"
    assert report["rep_count"] == 1
    assert len(report["classes"]) == 1
    assert report["classes"][0]["modulus"] == 3
    assert all(report["checks"].values())


def test_knot_figure_eight(capsys):
    report = run_json(capsys, "knot", "1 -2 1 -2", "-n", "3", "--json")
    assert report["determinant"] == "5"
    assert report["rep_count"] == 2


def test_knot_unknot(capsys):
    report = run_json(capsys, "knot", "1", "-n", "2", "--json")
    assert report["determinant"] == "1"
    assert report["rep_count"] == 0
    assert report["classes"] == []


def test_knot_profile(capsys):
    report = run_json(capsys, "knot", "1^3", "-n", "2", "--rmax", "9", "--json")
    profile = {entry["r"]: entry for entry in report["colorings"]}
    assert profile[3]["condition_o"] == 3
    assert profile[3]["total"] == 9
    assert profile[4]["condition_o"] == 1


def test_knot_table_output(capsys):
    code, out, _ = run(capsys, "knot", "1^3", "-n", "2")
    assert code == EXIT_OK
    assert "determinant" in out
    assert "3" in out


def test_surface_pair(capsys):
    report = run_json(capsys, "surface", "1^3", "1^6", "-n", "2", "--json")
    assert report["determinant"] == "3"
    assert report["rep_count"] == 1
    assert report["checks"]["determinant_odd"]


def test_surface_fulltwist_flag(capsys):
    report = run_json(
        capsys, "surface", "1^3 2^3", "--fulltwist", "2", "-n", "3", "--json"
    )
    assert report["determinant"] == "9"
    assert report["rep_count"] == 4


def test_surface_only_p_cross_check(capsys):
    report = run_json(
        capsys,
        "surface", "1^3 2^3", "--fulltwist", "2", "-n", "3", "--rmax", "12", "--json",
    )
    assert report["checks"]["only_3_count_rule"] is True
    profile = {entry["r"]: entry["condition_o"] for entry in report["colorings"]}
    assert set(profile.values()) == {1, 9}


def test_surface_empty_second_braid(capsys):
    report = run_json(capsys, "surface", "1^3", "", "-n", "2", "--json")
    knot = run_json(capsys, "knot", "1^3", "-n", "2", "--json")
    assert report["determinant"] == knot["determinant"]


def test_family_cases(capsys):
    for n, p, m, count in ((2, 3, 1, 1), (3, 3, 1, 4), (2, 5, 1, 2)):
        report = run_json(capsys, "family", str(n), str(p), str(m), "--json")
        assert report["family"]["passed"]
        assert report["rep_count"] == count
        assert report["family"]["colorings_mod_p"] == p**n


def test_family_with_signs_and_perm(capsys):
    report = run_json(
        capsys, "family", "3", "3", "1", "--signs", "+-", "--perm", "2,1", "--json"
    )
    assert report["family"]["passed"]
    assert report["rep_count"] == 4


def test_exit_code_family_assertion(capsys, monkeypatch):
    import kreps.cli as cli
    from kreps.colorings import ColoringCensus

    def broken_census(a, b, r, cap=None):
        return ColoringCensus(modulus=r, total=1, nontrivial=0, nondegenerate=False, condition_o=1)

    monkeypatch.setattr(cli, "surface_coloring_census", broken_census)
    code, _, err = run(capsys, "family", "2", "3", "1", "--json")
    assert code == EXIT_FAMILY_ASSERTION
    assert "diverged" in err


def test_exit_code_parse_error(capsys):
    code, _, err = run(capsys, "knot", "9", "-n", "2", "--json")
    assert code == EXIT_USAGE
    assert "error" in err


def test_exit_code_not_a_knot(capsys):
    code, _, _ = run(capsys, "knot", "1^2", "-n", "2", "--json")
    assert code == EXIT_NOT_A_KNOT


def test_exit_code_not_commuting(capsys):
    code, _, _ = run(capsys, "surface", "1 2", "1", "-n", "3", "--json")
    assert code == EXIT_NOT_COMMUTING


def test_surface_rejects_double_second_braid(capsys):
    code, _, _ = run(capsys, "surface", "1^3", "1^6", "--fulltwist", "1", "-n", "2")
    assert code == EXIT_USAGE


def test_verify_mismatch_path(capsys, monkeypatch):
    import kreps.cli as cli

    monkeypatch.setattr(cli, "_braid_mismatch", lambda a: "synthetic mismatch")
    code, out, _ = run(capsys, "verify", "--seed", "3", "--trials", "2", "--json")
    assert code == cli.EXIT_VERIFY_MISMATCH
    report = json.loads(out)
    assert not report["passed"]
    assert "synthetic mismatch" in report["failure"]


def test_verify_deterministic(capsys):
    first = run_json(capsys, "verify", "--seed", "7", "--trials", "6", "--json")
    second = run_json(capsys, "verify", "--seed", "7", "--trials", "6", "--json")
    assert first == second
    assert first["passed"]
    assert first["braids_checked"] == 6


def test_json_round_trip(capsys):
    report = run_json(capsys, "knot", "1^5", "-n", "2", "--json")
    again = json.loads(json.dumps(report))
    assert again == report
    assert int(report["determinant"]) == 5
