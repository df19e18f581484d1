"""Command-line behaviour: outputs, exit codes and diagnostics."""

import json

import pytest

from topolab import cli, formats
from topolab.harness import registry
from topolab.harness.registry import JobResult, register
from topolab.space import count_topologies, diagonal_class, sierpinski


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def sierpinski_file(tmp_path):
    path = tmp_path / "s.json"
    path.write_text(formats.dumps(formats.space_to_json(sierpinski())))
    return str(path)


@pytest.fixture
def bad_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"points": 3, "opens": [[], [0, 1], [1, 2], [0, 1, 2]]}))
    return str(path)


class TestEnumerate:
    def test_count_three_points(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--points", "3", "--count")
        assert code == 0
        assert out.strip() == str(count_topologies(3)) == "29"

    def test_listing_matches_count(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--points", "2")
        assert code == 0
        assert len(json.loads(out)) == 4

    def test_start_skips(self, capsys):
        _, out, _ = run(capsys, "enumerate", "--points", "2", "--start", "3")
        assert len(json.loads(out)) == 1

    def test_dot(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--points", "2", "--dot")
        assert code == 0 and out.count("digraph") == 4


class TestCheck:
    def test_valid(self, capsys, sierpinski_file):
        code, out, _ = run(capsys, "check", sierpinski_file)
        data = json.loads(out)
        assert code == 0
        assert data["valid"] and data["opens"] == 3 and not data["hausdorff"]

    def test_not_closed_under_intersection(self, capsys, bad_file):
        code, out, err = run(capsys, "check", bad_file)
        assert code == 3
        assert out == ""
        assert "[0, 1], [1, 2]" in err

    def test_malformed_json(self, capsys, tmp_path):
        path = tmp_path / "junk.json"
        path.write_text("{not json")
        assert run(capsys, "check", str(path))[0] == 3

    def test_missing_file_is_usage(self, capsys, tmp_path):
        code, _, err = run(capsys, "check", str(tmp_path / "absent.json"))
        assert code == 2 and "cannot read" in err

    def test_dot(self, capsys, sierpinski_file):
        code, out, _ = run(capsys, "check", sierpinski_file, "--dot")
        assert code == 0 and out.startswith("digraph")


class TestConstructions:
    def test_product_to_file(self, capsys, tmp_path, sierpinski_file):
        target = tmp_path / "ss.json"
        code, out, _ = run(capsys, "product", sierpinski_file, sierpinski_file, "-o", str(target))
        assert code == 0 and out == ""
        ss = formats.space_from_json(json.loads(target.read_text()))
        assert ss.n == 4 and len(ss.opens) == 6

    def test_exponential_to_file(self, capsys, tmp_path, sierpinski_file):
        target = tmp_path / "f.json"
        code, _, _ = run(capsys, "exponential", sierpinski_file, sierpinski_file, "-o", str(target))
        data = json.loads(target.read_text())
        assert code == 0
        # monotone self-maps of the two-element chain
        assert data["maps"] == [[0, 0], [0, 1], [1, 1]]
        assert not diagonal_class(formats.space_from_json(data["space"])).hausdorff

    def test_waybelow(self, capsys, sierpinski_file):
        code, out, _ = run(capsys, "waybelow", sierpinski_file, "--s", "0", "--t", "0")
        data = json.loads(out)
        assert code == 0 and data["way_below"] is (0 in data["min_open_nbhd_T"])

    def test_waybelow_bad_points(self, capsys, sierpinski_file):
        assert run(capsys, "waybelow", sierpinski_file, "--s", "5", "--t", "0")[0] == 2
        assert run(capsys, "waybelow", sierpinski_file, "--s", "a", "--t", "0")[0] == 2

    def test_witness_inline_cover(self, capsys, sierpinski_file):
        s = sierpinski()
        open_point = next(p for p in range(2) if s.is_open(1 << p))
        cover = json.dumps([[open_point], [0, 1]])
        code, out, _ = run(capsys, "witness", sierpinski_file, "--cover", cover)
        assert code == 0
        assert json.loads(out)["member_containing_target"] == [0, 1]

    def test_witness_non_open_member(self, capsys, sierpinski_file):
        s = sierpinski()
        closed_point = next(p for p in range(2) if not s.is_open(1 << p))
        code, _, err = run(capsys, "witness", sierpinski_file, "--cover", json.dumps([[closed_point]]))
        assert code == 3 and "open" in err


class TestVerify:
    def test_list(self, capsys):
        code, out, _ = run(capsys, "verify", "--list")
        assert code == 0
        assert [line.split(":")[0] for line in out.splitlines()] == registry.theorem_ids()

    def test_proper_json(self, capsys):
        code, out, _ = run(capsys, "verify", "--theorem", "proper-equiv", "--json",
                           "--max-x", "2", "--max-y", "2", "--max-z", "2")
        data = json.loads(out)
        assert code == 0
        assert data["theorem"] == "proper-equiv" and data["verdict"] == "pass"
        assert data["bounds"] == {"max_x": 2, "max_y": 2, "max_z": 2}
        assert "wall_time" not in data

    def test_timing_flag(self, capsys):
        _, out, _ = run(capsys, "verify", "--theorem", "closed-projection-equiv",
                        "--max-x", "1", "--max-z", "1", "--json", "--timing")
        assert json.loads(out)["wall_time"] >= 0

    def test_unknown_theorem(self, capsys):
        code, _, err = run(capsys, "verify", "--theorem", "no-such-claim")
        assert code == 2 and "no-such-claim" in err

    def test_bound_exceeded(self, capsys):
        assert run(capsys, "verify", "--theorem", "proper-equiv", "--max-x", "9")[0] == 2

    def test_nothing_selected(self, capsys):
        assert run(capsys, "verify")[0] == 2

    def test_argparse_usage(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["enumerate"])
        assert exc.value.code == 2

    def test_counterexample_exit(self, capsys, monkeypatch):
        monkeypatch.setattr(registry, "THEOREMS", dict(registry.THEOREMS))
        registry.get("proper-equiv")  # make sure the real claims are loaded first

        @register("test-cli-all-hausdorff", "Every space is Hausdorff.",
                  axes="x", jobs=registry.space_jobs("x"), defaults=(2,), limits=(2,))
        def _claim(job, b):
            res = JobResult(instances=1)
            x = registry.spaces(b.max_x)[job[0]]
            if not diagonal_class(x).hausdorff:
                res.fail(job, "not Hausdorff", X=formats.space_to_json(x))
            return res

        code, out, _ = run(capsys, "verify", "--theorem", "test-cli-all-hausdorff")
        assert code == 1
        assert "fail" in out and "not Hausdorff" in out
