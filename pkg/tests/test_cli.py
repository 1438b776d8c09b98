import json


from projstat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_stats_single_element(capsys):
    code, out, _ = run(
        capsys, "stats", "G(6,2,3,8)", "[2^2,7^3,6^3,4^5,8^1,1^1,5^3,3^2]"
    )
    assert code == 0
    assert "des      15" in out
    assert "fdes     30" in out
    assert "col      6" in out
    assert "fmaj     106" in out


def test_stats_single_row_group(capsys):
    code, out, _ = run(capsys, "stats", "G(1,1,1,1)")
    assert code == 0
    assert out.splitlines()[1].split() == ["0", "0", "0", "1"]


def test_stats_distribution_b2(capsys):
    code, out, _ = run(capsys, "stats", "G(2,1,1,2)", "--dist", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert sum(row["count"] for row in payload["distribution"]) == 8
    fmaj_poly = {}
    for row in payload["distribution"]:
        fmaj_poly[row["fmaj"]] = fmaj_poly.get(row["fmaj"], 0) + row["count"]
    # [2]_q [4]_q = (1+q)(1+q+q^2+q^3) = 1 + 2q + 2q^2 + 2q^3 + q^4
    assert fmaj_poly == {0: 1, 1: 2, 2: 2, 3: 2, 4: 1}


def test_stats_csv(capsys):
    code, out, _ = run(capsys, "stats", "G(2,1,1,1)", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "des,fmaj,col,count"
    assert lines[1:] == ["0,0,0,1", "1,1,1,1"]


def test_verify_exit_codes(capsys):
    code, out, _ = run(
        capsys, "verify", "character-fmaj",
        "--r", "2", "--p", "1", "--s", "1", "--n", "3", "--eps", "-1", "--k", "1",
    )
    assert code == 0
    assert "MATCH" in out

    code, _, err = run(
        capsys, "verify", "character-fmaj",
        "--r", "6", "--p", "2", "--s", "3", "--n", "4", "--k", "1",
    )
    assert code == 2
    assert "error:" in err


def test_verify_carlitz_fdes_classical(capsys):
    code, out, _ = run(
        capsys, "verify", "carlitz-fdes",
        "--r", "1", "--p", "1", "--s", "1", "--n", "3", "--tmax", "6",
    )
    assert code == 0


def test_verify_json_schema(capsys):
    code, out, _ = run(
        capsys, "verify", "hilbert",
        "--r", "1", "--p", "1", "--s", "1", "--nmax", "3", "--caps", "6", "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["outcome"] == "MATCH"
    assert payload["firstMismatch"] is None
    assert payload["params"]["nmax"] == 3


def test_verify_signed_multinomial_parts(capsys):
    code, _, _ = run(capsys, "verify", "signed-multinomial", "--n", "4", "--parts", "2,2")
    assert code == 0


def test_bijection_rs(capsys):
    code, out, _ = run(capsys, "bijection", "rs", "[5,-2,-1,-4,6,-3,-7]", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["P0"] == [[5, 6]]
    assert payload["P1"] == [[1, 3, 7], [2, 4]]
    assert payload["Q0"] == [[1, 5]]
    assert payload["Q1"] == [[2, 4, 7], [3, 6]]


def test_bijection_rs_transpose(capsys):
    code, out, _ = run(capsys, "bijection", "rs-transpose", "[5,-2,-1,-4,6,-3,-7]")
    assert code == 0
    assert "[5,3^1,7^1,1^1,6,4^1,2^1]" in out
    assert "negPreserved    true" in out


def test_bijection_nvec(capsys):
    code, out, _ = run(
        capsys, "bijection", "nvec", "--group", "G(2,1,1,2)", "--f", "3,1",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["element"] == "[1^1,2^1]"
    assert payload["lambda"] == [1, 0]
    assert payload["h"] == 0
    assert payload["roundTrip"] is True


def test_bijection_bipartite(capsys):
    code, out, _ = run(
        capsys, "bijection", "bipartite", "[1^1,2^1]", "--group", "G(2,1,1,2)",
        "--lam", "1,0", "--mu", "0,0", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["row1"] == [3, 1]
    assert payload["row2"] == [1, 1]


def test_bijection_order_involution(capsys):
    code, out, _ = run(
        capsys, "bijection", "order-involution", "[1^1,2^1]", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["image"] == "[2^1,1^1]"
    assert payload["colPreserved"] is True


def test_budget_env_and_flag(capsys, monkeypatch):
    monkeypatch.setenv("PROJSTAT_BUDGET", "4")
    code, _, err = run(capsys, "stats", "G(2,1,1,2)")
    assert code == 2
    assert "budget" in err
    code, out, _ = run(capsys, "--budget", "100", "stats", "G(2,1,1,2)")
    assert code == 0


def test_parse_error_exits_2(capsys):
    code, _, err = run(capsys, "stats", "G(2,1,1,2)", "[1,1]")
    assert code == 2
    assert "error:" in err


def test_mismatch_exits_1(capsys, monkeypatch):
    import projstat.cli as cli
    from projstat.identities import VerificationReport

    report = VerificationReport(
        identity="signed-wreath",
        params={"r": 2, "n": 1},
        region={"q": 2},
        outcome="MISMATCH",
        first_mismatch={"monomial": {"q": 1}, "lhs": 0, "rhs": 1},
        element_count=2,
        elapsed_ms=0.1,
    )
    monkeypatch.setitem(cli.VERIFIERS, "signed-wreath", lambda a, budget: report)
    code, out, _ = run(capsys, "verify", "signed-wreath", "--r", "2", "--n", "1")
    assert code == 1
    assert "MISMATCH" in out
    assert "firstMismatch" in out
