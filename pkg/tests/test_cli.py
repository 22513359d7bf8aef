import json
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from forestcount.cli import (
    EdgeListDocument,
    main,
    parse_edge_list,
    run,
    serialize_edge_list,
)
from forestcount.errors import DuplicateEdgeError, ParseError, RangeError, SelfLoopError


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


class TestParse:
    def test_plain(self):
        doc = parse_edge_list("n 4\n1 2\n3 4\n")
        assert doc.declared_n == 4
        assert doc.edge_records == ((1, 2, 1), (3, 4, 1))

    def test_multiplicity_and_comment(self):
        doc = parse_edge_list("n 3\n1 2 5\n# comment\n2 3 2\n")
        assert doc.edge_records == ((1, 2, 5), (2, 3, 2))

    def test_leading_comments_and_blank_lines(self):
        doc = parse_edge_list("# header\n\n  n 2   # two vertices\n\n1 2 # edge\n")
        assert doc == EdgeListDocument(2, ((1, 2, 1),))

    def test_self_loop_line(self):
        with pytest.raises(SelfLoopError) as info:
            parse_edge_list("n 3\n1 1\n")
        assert info.value.line == 2

    def test_range(self):
        with pytest.raises(RangeError) as info:
            parse_edge_list("n 3\n1 2\n\n2 9\n")
        assert info.value.line == 4

    def test_duplicate_reversed(self):
        with pytest.raises(DuplicateEdgeError) as info:
            parse_edge_list("n 3\n1 2\n2 1 4\n")
        assert info.value.line == 3

    @pytest.mark.parametrize(
        "text,line",
        [
            ("1 2\n", 1),
            ("n three\n", 1),
            ("n 3\n1 2 3 4\n", 2),
            ("n 3\n1 x\n", 2),
            ("n 3\n1 -2\n", 2),
            ("", 1),
        ],
    )
    def test_parse_errors(self, text, line):
        with pytest.raises(ParseError) as info:
            parse_edge_list(text)
        assert info.value.line == line

    def test_forest_rejects_multiplicity(self):
        with pytest.raises(ParseError):
            parse_edge_list("n 3\n1 2 2\n", allow_multiplicity=False)

    @given(
        st.integers(2, 12).flatmap(
            lambda n: st.tuples(
                st.just(n),
                st.lists(
                    st.tuples(st.sampled_from(list(combinations(range(1, n + 1), 2))), st.integers(1, 10**30), st.booleans()),
                    unique_by=lambda r: r[0],
                ),
            )
        )
    )
    @settings(max_examples=150)
    def test_round_trip(self, data):
        n, recs = data
        records = tuple((v, u, k) if flip else (u, v, k) for (u, v), k, flip in recs)
        doc = EdgeListDocument(n, records)
        assert parse_edge_list(serialize_edge_list(doc)) == doc


class TestCount:
    def test_k4(self):
        assert run(["count", "--complete", "4"]) == (0, "16\n", "")

    def test_formula(self):
        assert run(["formula", "--n", "5", "--sizes", "2,2,1"]).stdout == "20\n"

    def test_formula_mismatch(self):
        res = run(["formula", "--n", "6", "--sizes", "2,2,1"])
        assert res.status == 1
        assert "SizeMismatchError" in res.stderr

    def test_k7_with_path_forest(self, write):
        forest = write("f.txt", "n 7\n1 2\n2 3\n")
        values = {run(["count", "--complete", "7", "--forest", forest, "--method", m]).stdout for m in ("brute", "matrix", "closed")}
        # enumeration decides: 3 * 7**3
        assert values == {"1029\n"}

    def test_json_report(self, write):
        forest = write("f.txt", "n 5\n1 2\n4 5\n")
        res = run(["count", "--complete", "5", "--forest", forest, "--json"])
        report = json.loads(res.stdout)
        assert set(report) == {"count", "method", "n", "component_sizes", "elapsed_ms"}
        assert report["count"] == "20"
        assert report["method"] == "closed_form"
        assert report["n"] == 5
        assert report["component_sizes"] == [2, 1, 2]
        assert report["elapsed_ms"] >= 0

    def test_graph_defaults_to_matrix(self, write):
        g = write("g.txt", "n 3\n1 2 2\n1 3 2\n2 3\n")
        report = json.loads(run(["count", "--graph", g, "--json"]).stdout)
        assert report["method"] == "matrix_tree"
        assert report["count"] == "8"
        assert run(["count", "--graph", g, "--method", "brute"]).stdout == "8\n"

    def test_graph_with_forest(self, write):
        g = write("g.txt", "n 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n")
        f = write("f.txt", "n 4\n1 2\n")
        for m in ("matrix", "brute"):
            assert run(["count", "--graph", g, "--forest", f, "--method", m]).stdout == "8\n"

    def test_closed_form_on_graph_is_error(self, write):
        g = write("g.txt", "n 2\n1 2\n")
        res = run(["count", "--graph", g, "--method", "closed"])
        assert res.status == 1
        assert res.stdout == ""
        assert len(res.stderr.strip().splitlines()) == 1

    def test_forest_absent_from_graph(self, write):
        g = write("g.txt", "n 3\n1 2\n2 3\n")
        f = write("f.txt", "n 3\n1 3\n")
        res = run(["count", "--graph", g, "--forest", f])
        assert res.status == 1
        assert "EdgeAbsentError" in res.stderr

    def test_cyclic_forest(self, write):
        f = write("f.txt", "n 3\n1 2\n2 3\n1 3\n")
        assert run(["count", "--complete", "3", "--forest", f]).status == 1

    def test_forest_size_mismatch(self, write):
        f = write("f.txt", "n 4\n1 2\n")
        assert run(["count", "--complete", "5", "--forest", f]).status == 1

    def test_parse_error_reports_line(self, write):
        g = write("g.txt", "n 3\n1 2\n3 3\n")
        res = run(["count", "--graph", g])
        assert res.status == 1
        assert "line 3" in res.stderr

    def test_missing_file(self):
        assert run(["count", "--graph", "/nonexistent/graph.txt"]).status == 1

    @pytest.mark.parametrize(
        "argv",
        [[], ["count"], ["count", "--complete", "0"], ["count", "--complete", "3", "--graph", "x"], ["bogus"]],
    )
    def test_usage_errors_exit_1(self, argv):
        assert run(argv).status == 1

    def test_brute_guard(self):
        res = run(["count", "--complete", "12", "--method", "brute"])
        assert res.status == 1
        assert "TooLargeError" in res.stderr

    @pytest.mark.parametrize("n", range(1, 9))
    def test_methods_agree(self, n):
        outs = {run(["count", "--complete", str(n), "--method", m]).stdout for m in ("closed", "matrix", "brute")}
        assert len(outs) == 1

    def test_large_count_printed_in_full(self):
        out = run(["count", "--complete", "2500"]).stdout.strip()
        assert out == str(pow(2500, 2498))
        assert "e" not in out


class TestVerify:
    def test_passes(self):
        res = run(["verify", "--max-n", "5", "--seed", "3"])
        assert res.status == 0
        lines = res.stdout.splitlines()
        assert all(line.startswith("PASS") for line in lines[:-1])

    def test_deterministic(self):
        a = run(["verify", "--max-n", "4", "--seed", "9"]).stdout
        b = run(["verify", "--max-n", "4", "--seed", "9"]).stdout
        assert a == b

    def test_failure_exits_2(self, monkeypatch):
        from forestcount import verify

        monkeypatch.setattr(verify, "moon_count", lambda n, sizes: 0)
        res = run(["verify", "--max-n", "3"])
        assert res.status == 2
        assert "FAIL" in res.stdout

    def test_max_n_guard(self):
        assert run(["verify", "--max-n", "12"]).status == 1


def test_main_writes_streams(capsys):
    assert main(["count", "--complete", "5"]) == 0
    assert capsys.readouterr().out == "125\n"
