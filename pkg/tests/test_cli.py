import pytest

from spreadcodes.cli import main
from spreadcodes.spread import SpreadCode, format_subspace


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestParams:
    def test_smallest_code(self, capsys):
        code, out, _ = run(capsys, "params", "--q", "2", "--k", "2",
                           "--r", "2")
        assert code == 0
        assert out.splitlines() == ["2 2 2 1 1", "|S|=5 dmin=4"]

    def test_cubic_code(self, capsys):
        code, out, _ = run(capsys, "params", "--q", "2", "--k", "3",
                           "--r", "2")
        assert code == 0
        assert out.splitlines()[1] == "|S|=9 dmin=6"

    def test_nonprime_order_is_usage_error(self, capsys):
        code, _, err = run(capsys, "params", "--q", "4", "--k", "2",
                           "--r", "2")
        assert code == 1 and "prime" in err

    def test_modulus_override(self, capsys):
        code, out, _ = run(capsys, "params", "--q", "2", "--k", "3",
                           "--r", "2", "--p", "1", "0", "1")
        assert code == 0
        assert out.splitlines()[0] == "2 3 2 1 0 1"

    def test_reducible_modulus_rejected(self, capsys):
        code, _, err = run(capsys, "params", "--q", "2", "--k", "2",
                           "--r", "2", "--p", "1", "0")
        assert code == 1 and "reducible" in err


class TestEncodeDecode:
    def test_round_trip(self, tmp_path, capsys):
        point = tmp_path / "point.txt"
        encoded = tmp_path / "space.txt"
        decoded = tmp_path / "out.txt"
        point.write_text("1 0\n0 0\n")
        code, _, _ = run(capsys, "encode", "--q", "2", "--k", "2", "--r", "2",
                         "--in", str(point), "--out", str(encoded))
        assert code == 0
        ref = SpreadCode(2, 2, 2)
        want = format_subspace(ref, ref.encode((1, 0)).subspace)
        assert encoded.read_text() == want
        code, _, _ = run(capsys, "decode", "--q", "2", "--k", "2", "--r", "2",
                         "--in", str(encoded), "--out", str(decoded))
        assert code == 0
        assert decoded.read_text() == want

    @pytest.mark.parametrize("q,k", [(2, 2), (2, 3)])
    def test_round_trip_all_points(self, q, k, tmp_path, capsys):
        ref = SpreadCode(q, k, 2)
        qs, ks = str(q), str(k)
        for idx, cw in enumerate(ref.codeword_list()):
            point = tmp_path / f"p{idx}.txt"
            out = tmp_path / f"s{idx}.txt"
            back = tmp_path / f"d{idx}.txt"
            point.write_text("".join(ref.ext.to_str(v) + "\n"
                                     for v in cw.point))
            assert main(["encode", "--q", qs, "--k", ks, "--r", "2",
                         "--in", str(point), "--out", str(out)]) == 0
            assert main(["decode", "--q", qs, "--k", ks, "--r", "2",
                         "--in", str(out), "--out", str(back)]) == 0
            assert back.read_text() == out.read_text()
        capsys.readouterr()

    def test_decode_failure_exits_two(self, tmp_path, capsys):
        # three rank-one blocks: every block sits below the rank
        # threshold, the no-codeword branch fires
        space = tmp_path / "bad.txt"
        space.write_text("2 3 3 1 1 0\n3 9\n"
                         "1 0 0 0 0 0 0 0 0\n"
                         "0 0 0 1 0 0 0 0 0\n"
                         "0 0 0 0 0 0 1 0 0\n")
        code, _, err = run(capsys, "decode", "--q", "2", "--k", "3",
                           "--r", "3", "--in", str(space))
        assert code == 2 and "failed" in err

    def test_malformed_file_is_line_numbered(self, tmp_path, capsys):
        space = tmp_path / "bad.txt"
        space.write_text("2 2 2 1 1\n2 4\n1 0 0 0\n0 1 0\n")
        code, _, err = run(capsys, "decode", "--q", "2", "--k", "2",
                           "--r", "2", "--in", str(space))
        assert code == 1 and "line 4" in err

    def test_wrong_header_rejected(self, tmp_path, capsys):
        space = tmp_path / "bad.txt"
        space.write_text("2 3 2 1 1 0\n1 6\n1 0 0 0 0 0\n")
        code, _, err = run(capsys, "decode", "--q", "2", "--k", "2",
                           "--r", "2", "--in", str(space))
        assert code == 1 and "line 1" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "decode", "--q", "2", "--k", "2",
                           "--r", "2", "--in", "/nonexistent/file")
        assert code == 1

    def test_point_file_wrong_width(self, tmp_path, capsys):
        point = tmp_path / "point.txt"
        point.write_text("1 0 0\n0 0\n")
        code, _, err = run(capsys, "encode", "--q", "2", "--k", "2",
                           "--r", "2", "--in", str(point))
        assert code == 1 and "line 1" in err

    def test_zero_point_rejected(self, tmp_path, capsys):
        point = tmp_path / "point.txt"
        point.write_text("0 0\n0 0\n")
        code, _, err = run(capsys, "encode", "--q", "2", "--k", "2",
                           "--r", "2", "--in", str(point))
        assert code == 1


class TestSimulateAndBench:
    def test_simulate_line_and_determinism(self, capsys):
        args = ["simulate", "--q", "2", "--k", "3", "--r", "2",
                "--trials", "15", "--errors", "1", "--erasures", "1",
                "--seed", "4"]
        code1, out1, _ = run(capsys, *args)
        code2, out2, _ = run(capsys, *args)
        assert code1 == code2 == 0 and out1 == out2
        fields = out1.split()
        assert fields[:5] == ["1", "1", "15", "15", "0"]

    def test_bench_table(self, capsys):
        code, out, _ = run(capsys, "bench", "--q", "2", "--k", "2,3",
                           "--trials", "3", "--seed", "1")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "k n mean_ops max_ops"
        assert lines[1].startswith("2 4 ") and lines[2].startswith("3 6 ")

    def test_bench_bad_list(self, capsys):
        code, _, err = run(capsys, "bench", "--q", "2", "--k", "2,x",
                           "--trials", "3")
        assert code == 1

    def test_missing_subcommand_usage_error(self, capsys):
        assert main([]) == 1
