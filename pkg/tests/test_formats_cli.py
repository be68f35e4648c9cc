import pytest
from hypothesis import given, strategies as st

from latinop import (
    FormatError,
    LatinOp,
    RawOp,
    emit_lhc,
    emit_lhcs,
    emit_tsv,
    parse_lhc,
    parse_lhcs,
    parse_tsv,
)
from latinop.cli import main
from latinop.enumeration import enumerate_all

from oracles import cyclic_table

ADD3 = "3 2\n0 1 2\n1 2 0\n2 0 1\n"


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


# ---------------------------------------------------------------- formats


def test_parse_identity_permutation():
    op = parse_lhc("2 1\n0 1\n")
    assert (op.n, op.d, op.table) == (2, 1, (0, 1))


def test_parse_addition_table():
    op = parse_lhc(ADD3)
    assert op.table == cyclic_table(3)


def test_parse_accepts_non_latin():
    op = parse_lhc("2 2\n0 1\n0 1\n")
    assert isinstance(op, RawOp)
    from latinop import is_latin

    assert not is_latin(op)


def test_round_trip_all_enumerated_small():
    for n in (1, 2, 3):
        for d in (1, 2):
            for op in enumerate_all(n, d):
                assert parse_lhc(emit_lhc(op)) == RawOp(op.n, op.d, op.table)


@given(st.integers(1, 4), st.integers(1, 3), st.randoms(use_true_random=False))
def test_round_trip_random_tables(n, d, rnd):
    table = tuple(rnd.randrange(n) for _ in range(n ** d))
    op = RawOp(n, d, table)
    assert parse_lhc(emit_lhc(op)) == op


def test_parse_error_positions():
    with pytest.raises(FormatError, match="line 2, column 3"):
        parse_lhc("2 1\n0 x\n")
    with pytest.raises(FormatError, match="out of range"):
        parse_lhc("2 1\n0 2\n")
    with pytest.raises(FormatError, match="trailing"):
        parse_lhc("2 1\n0 1 0\n")
    with pytest.raises(FormatError, match="end of input"):
        parse_lhc("3 2\n0 1 2\n")
    with pytest.raises(FormatError, match="header"):
        parse_lhc("")


def test_lhcs_stream_round_trip():
    ops = list(enumerate_all(3, 1))
    text = emit_lhcs(ops)
    parsed = parse_lhcs(text)
    assert [p.table for p in parsed] == [op.table for op in ops]


def test_tsv_round_trip():
    from latinop import Transversal

    t = Transversal(3, 2, ((0, 0, 0), (1, 1, 1), (2, 2, 2)))
    assert parse_tsv(emit_tsv(t), 3, 2) == t


def test_tsv_errors():
    with pytest.raises(FormatError, match="expected 3 entries"):
        parse_tsv("0 0\n1 1\n2 2\n", 3, 2)
    with pytest.raises(FormatError, match="out of range"):
        parse_tsv("0 0 9\n1 1 1\n2 2 2\n", 3, 2)


# ---------------------------------------------------------------- CLI


def test_check_true(tmp_path, capsys):
    path = write(tmp_path, "f.lhc", ADD3)
    assert main(["check", path]) == 0
    assert capsys.readouterr().out == "latin: true\n"


def test_check_false(tmp_path, capsys):
    path = write(tmp_path, "f.lhc", "2 2\n0 1\n0 1\n")
    assert main(["check", path]) == 1
    assert capsys.readouterr().out == "latin: false\n"


def test_check_malformed_exits_2(tmp_path, capsys):
    path = write(tmp_path, "f.lhc", "2 1\n0 7\n")
    assert main(["check", path]) == 2
    assert "error:" in capsys.readouterr().err


def test_missing_file_exits_2(capsys):
    assert main(["check", "/nonexistent.lhc"]) == 2


def test_compose_cli(tmp_path, capsys):
    path = write(tmp_path, "f.lhc", ADD3)
    assert main(["compose", path, path, "--slot", "2"]) == 0
    out = capsys.readouterr().out
    assert parse_lhc(out).table == cyclic_table(3, d=3)


def test_conjugate_cli(tmp_path, capsys):
    path = write(tmp_path, "f.lhc", "3 1\n1 2 0\n")
    assert main(["conjugate", path, "--slot", "1"]) == 0
    assert parse_lhc(capsys.readouterr().out).table == (2, 0, 1)


def test_act_cli(tmp_path, capsys):
    sub3 = "3 2\n" + "\n".join(
        " ".join(str((x - y) % 3) for y in range(3)) for x in range(3)
    )
    path = write(tmp_path, "f.lhc", sub3)
    assert main(["act", path, "--perm", "2 1"]) == 0
    got = parse_lhc(capsys.readouterr().out)
    assert got.table == tuple((y - x) % 3 for x in range(3) for y in range(3))


def test_restrict_cli(tmp_path, capsys):
    path = write(tmp_path, "f.lhc", ADD3)
    assert main(["restrict", path, "--slot", "3", "--value", "1"]) == 0
    got = parse_lhc(capsys.readouterr().out)
    assert got.table == tuple((1 - x) % 3 for x in range(3))


def test_enumerate_count_cli(capsys):
    assert main(["enumerate", "--n", "4", "--d", "2", "--count"]) == 0
    assert capsys.readouterr().out == "576\n"


def test_enumerate_stream_cli(tmp_path):
    out = str(tmp_path / "out.lhcs")
    assert main(["enumerate", "--n", "3", "--d", "1", "--stream", out]) == 0
    ops = parse_lhcs(open(out).read())
    assert len(ops) == 6
    assert [op.table for op in ops] == sorted(op.table for op in ops)


def test_enumerate_ceiling_exits_3(capsys):
    assert main(["enumerate", "--n", "10", "--d", "2", "--cell-ceiling", "5"]) == 3


def test_random_cli_deterministic(capsys):
    assert main(["random", "--n", "4", "--d", "2", "--seed", "9"]) == 0
    first = capsys.readouterr().out
    assert main(["random", "--n", "4", "--d", "2", "--seed", "9"]) == 0
    assert capsys.readouterr().out == first
    from latinop import is_latin

    assert is_latin(parse_lhc(first))


def test_transversals_cli_count(tmp_path, capsys):
    path = write(tmp_path, "f.lhc", ADD3)
    assert main(["transversals", path, "--count"]) == 0
    assert capsys.readouterr().out == "transversals: 3\n"


def test_transversals_cli_listing(tmp_path, capsys):
    path = write(tmp_path, "f.lhc", ADD3)
    assert main(["transversals", path]) == 0
    out = capsys.readouterr().out
    blocks = [b for b in out.strip().split("\n\n") if b]
    assert len(blocks) == 3


def test_delta_cli(tmp_path, capsys):
    path = write(tmp_path, "f.lhc", ADD3)
    tsv = write(tmp_path, "t.tsv", "0 0 0\n1 1 2\n2 2 1\n")
    assert main(["delta", path, "--transversal", tsv]) == 0
    out = capsys.readouterr().out
    assert "computed: 0" in out and "expected: 0" in out and "pass: true" in out


def test_canon_cli(tmp_path, capsys):
    path = write(tmp_path, "f.lhc", ADD3)
    assert main(["canon", path]) == 0
    first = parse_lhc(capsys.readouterr().out)
    # canonical form is an orbit invariant: a paratopic square agrees
    shifted = "3 2\n1 2 0\n2 0 1\n0 1 2\n"
    path2 = write(tmp_path, "g.lhc", shifted)
    assert main(["canon", path2]) == 0
    assert parse_lhc(capsys.readouterr().out) == first


def test_canon_ceiling_exits_3(tmp_path, capsys):
    n = 5
    text = f"{n} 2\n" + "\n".join(
        " ".join(str((x + y) % n) for y in range(n)) for x in range(n)
    )
    path = write(tmp_path, "f.lhc", text)
    assert main(["canon", path]) == 3


def test_orbits_cli(capsys):
    assert main(["orbits", "--n", "4", "--d", "2"]) == 0
    out = capsys.readouterr().out
    assert "classes: 2" in out
    assert "total: 576" in out


def test_graph_cli_stats(tmp_path, capsys):
    path = write(tmp_path, "f.lhc", ADD3)
    assert main(["graph", path, "--stats"]) == 0
    out = capsys.readouterr().out
    assert "vertices: 9" in out and "degree: 6" in out


def test_graph_cli_edges(tmp_path):
    path = write(tmp_path, "f.lhc", "2 2\n0 1\n1 0\n")
    out = str(tmp_path / "edges.txt")
    assert main(["graph", path, "--edges", out]) == 0
    assert open(out).read().splitlines() == [
        "0 1", "0 2", "0 3", "1 2", "1 3", "2 3",
    ]


def test_verify_operad_cli(capsys):
    assert main(["verify-operad", "--n", "3", "--max-degree", "2"]) == 0
    out = capsys.readouterr().out
    assert out.count("pass") == 5 and "fail" not in out


def test_autos_cli(tmp_path, capsys):
    path = write(tmp_path, "f.lhc", ADD3)
    assert main(["autos", path]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[-1] == "count: 2"
    assert out[0] == "0 1 2"


def test_pullback_compose_cli_matches_compose(tmp_path, capsys):
    path = write(tmp_path, "f.lhc", ADD3)
    assert main(["pullback-compose", path, path, "--slot", "1"]) == 0
    via_join = parse_lhc(capsys.readouterr().out)
    assert main(["compose", path, path, "--slot", "1"]) == 0
    via_table = parse_lhc(capsys.readouterr().out)
    assert via_join == via_table


def test_jobs_flag_does_not_change_output(capsys):
    outputs = []
    for jobs in ("1", "4"):
        assert main(["--jobs", jobs, "enumerate", "--n", "3", "--d", "2",
                     "--stream", "-"]) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]


def test_seeded_runs_byte_identical(capsys):
    outputs = []
    for _ in range(2):
        assert main(["verify-operad", "--n", "2", "--max-degree", "2",
                     "--budget", "1", "--seed", "3"]) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
