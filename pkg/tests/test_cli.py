import json

import pytest

from citemetrics.cli import main
from citemetrics.fixture import load_fixture

from conftest import DATA

MJM = str(DATA / "mjm_fixture.json")

PUBS_CSV = "year,count\n2004,3\n2005,2\n"
CITES_CSV = (
    "cited_article_id,cited_pub_year,citing_journal,citing_year,citing_article_id\n"
    "a1,2004,Lancet,2005,c1\n"
    "a1,2004,LANCET.,2005,c2\n"
    "a2,2005,Lancet,2005,c3\n"
    "a1,2004,Med J Malaysia,2006,c4\n"
    "a2,2005,lancet,2006,c5\n"
    "a1,2004,Lancet,2005,c1\n"     # exact duplicate of the first row
    "a9,2003,Gut,2005,c6\n"        # publication year outside the ledger
    "b1,2006,BMJ,2004,c7\n"        # backdated and outside the ledger
)

# Derived by hand from the rows above: c1/c2 hit (2005, 2004), c3 (2005, 2005),
# c4 (2006, 2004), c5 (2006, 2005); the duplicate goes away, c6/c7 get clipped.
EXPECTED_INGEST_DOC = {
    "pub_years": [2004, 2005],
    "cite_years": [2004, 2006],
    "publications": {"2004": 3, "2005": 2},
    "citations": [[2005, 2004, 2], [2005, 2005, 1], [2006, 2004, 1], [2006, 2005, 1]],
    "unique_new_sync": [[2005, 2005, 1], [2006, 2004, 1], [2006, 2005, 1]],
    "unique_new_diach": [[2005, 2004, 1], [2005, 2005, 1], [2006, 2004, 1]],
}


@pytest.fixture()
def corpus(tmp_path):
    pubs = tmp_path / "pubs.csv"
    cites = tmp_path / "cites.csv"
    pubs.write_text(PUBS_CSV)
    cites.write_text(CITES_CSV)
    return pubs, cites, tmp_path / "fx.json"


class TestIngest:
    def test_writes_the_expected_fixture(self, corpus, capsys):
        pubs, cites, out = corpus
        code = main(["ingest", "--pubs", str(pubs), "--cites", str(cites), "--matrix", str(out)])
        assert code == 0
        assert json.loads(out.read_text()) == EXPECTED_INGEST_DOC
        stdout = capsys.readouterr().out
        assert "duplicate rows removed: 1" in stdout
        assert "clipped): 2" in stdout
        assert "before publication (kept): 1" in stdout

    def test_alias_table_merges_spellings(self, corpus, capsys):
        pubs, cites, out = corpus
        aliases = pubs.parent / "aliases.csv"
        aliases.write_text("raw,canonical\nmed j malaysia,lancet\n")
        code = main(
            ["ingest", "--pubs", str(pubs), "--cites", str(cites), "--aliases", str(aliases), "--matrix", str(out)]
        )
        assert code == 0
        doc = json.loads(out.read_text())
        # with everything collapsing into one journal, the 2006 row scan
        # credits only the newer publication year
        assert doc["unique_new_sync"] == [[2005, 2005, 1], [2006, 2005, 1]]

    def test_empty_citations_file_yields_zero_matrix(self, tmp_path, capsys):
        pubs = tmp_path / "pubs.csv"
        cites = tmp_path / "cites.csv"
        out = tmp_path / "fx.json"
        pubs.write_text("year,count\n2004,139\n")
        cites.write_text("cited_article_id,cited_pub_year,citing_journal,citing_year\n")
        assert main(["ingest", "--pubs", str(pubs), "--cites", str(cites), "--matrix", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert doc["publications"] == {"2004": 139}
        assert doc["citations"] == []
        assert doc["cite_years"] == [2004, 2004]

    def test_missing_input_file_exits_1(self, tmp_path, capsys):
        out = tmp_path / "fx.json"
        code = main(["ingest", "--pubs", str(tmp_path / "nope.csv"), "--cites", str(tmp_path / "c.csv"), "--matrix", str(out)])
        assert code == 1
        assert "nope.csv" in capsys.readouterr().err

    def test_malformed_row_exits_1_with_line(self, corpus, capsys):
        pubs, cites, out = corpus
        cites.write_text(
            "cited_article_id,cited_pub_year,citing_journal,citing_year\n"
            "a1,2004,Lancet,2005\n"
            "a1,2004,Lancet,soon\n"
        )
        code = main(["ingest", "--pubs", str(pubs), "--cites", str(cites), "--matrix", str(out)])
        assert code == 1
        assert "line 3" in capsys.readouterr().err


class TestMetric:
    def test_text_output_carries_the_exact_fraction(self, capsys):
        code = main(["metric", "--matrix", MJM, "--kind", "diach_rdf", "--year", "2006", "--window", "5"])
        assert code == 0
        assert capsys.readouterr().out.strip() == "0.81 (exact 206/253)"

    def test_max_window_and_precision(self, capsys):
        code = main(
            ["metric", "--matrix", MJM, "--kind", "sync_jdf", "--year", "2005", "--window", "max", "--precision", "3"]
        )
        assert code == 0
        assert capsys.readouterr().out.strip() == "0.141 (exact 34/241)"

    def test_garfield_needs_no_window(self, capsys):
        assert main(["metric", "--matrix", MJM, "--kind", "garfield_if", "--year", "2009"]) == 0
        assert capsys.readouterr().out.strip() == "0.37 (exact 87/235)"

    def test_structured_output(self, capsys):
        code = main(
            ["metric", "--matrix", MJM, "--kind", "sync_if", "--year", "2009", "--window", "3", "--format", "structured"]
        )
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["numerator"] == 174
        assert doc["denominator"] == 339
        assert doc["value"] == "0.51"
        assert doc["cells"] == [[2009, 2008], [2009, 2007], [2009, 2006]]

    def test_undefined_metric_exits_2(self, capsys):
        code = main(["metric", "--matrix", MJM, "--kind", "garfield_if", "--year", "2004"])
        assert code == 2
        err = capsys.readouterr().err
        assert "undefined" in err
        assert "2003" in err and "2002" in err

    def test_no_clip_turns_short_windows_undefined(self, capsys):
        argv = ["metric", "--matrix", MJM, "--kind", "sync_if", "--year", "2005", "--window", "2"]
        assert main(argv) == 0
        assert capsys.readouterr().out.strip() == "0.27 (exact 37/139)"
        assert main(argv + ["--no-clip"]) == 2

    def test_missing_window_is_a_usage_error(self, capsys):
        assert main(["metric", "--matrix", MJM, "--kind", "sync_if", "--year", "2009"]) == 1
        assert "--window" in capsys.readouterr().err

    def test_bad_window_string_is_a_usage_error(self, capsys):
        code = main(["metric", "--matrix", MJM, "--kind", "sync_if", "--year", "2009", "--window", "several"])
        assert code == 1

    def test_unknown_kind_is_a_usage_error(self, capsys):
        code = main(["metric", "--matrix", MJM, "--kind", "h_index", "--year", "2009", "--window", "2"])
        assert code == 1

    def test_fixture_without_unique_blocks_exits_3(self, tmp_path, mjm_doc, capsys):
        del mjm_doc["unique_new_sync"]
        stripped = tmp_path / "stripped.json"
        stripped.write_text(json.dumps(mjm_doc))
        code = main(["metric", "--matrix", str(stripped), "--kind", "sync_rdf", "--year", "2006", "--window", "3"])
        assert code == 3
        assert "unique_new_sync" in capsys.readouterr().err

    def test_invalid_fixture_exits_3(self, tmp_path, mjm_doc, capsys):
        mjm_doc["surprise"] = 1
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(mjm_doc))
        code = main(["metric", "--matrix", str(bad), "--kind", "sync_if", "--year", "2009", "--window", "2"])
        assert code == 3
        assert "bad fixture" in capsys.readouterr().err

    def test_missing_fixture_file_exits_1(self, tmp_path, capsys):
        code = main(["metric", "--matrix", str(tmp_path / "none.json"), "--kind", "sync_if", "--year", "2009", "--window", "2"])
        assert code == 1


class TestReport:
    def test_csv_format_matches_the_golden_file(self, capsys, golden_report_csv):
        assert main(["report", "--matrix", MJM, "--format", "csv"]) == 0
        assert capsys.readouterr().out == golden_report_csv

    def test_table_format_has_header_and_rows(self, capsys):
        assert main(["report", "--matrix", MJM]) == 0
        lines = capsys.readouterr().out.strip().split("\n")
        assert lines[0].split() == list(
            ("year", "garfield_if", "sync_if2", "diach_if2s1", "sync_rdf_max", "diach_rdf_max", "sync_jdf_max", "diach_jdf_max")
        )
        assert len(lines) == 9  # header + rule + 7 years

    def test_structured_format(self, capsys):
        assert main(["report", "--matrix", MJM, "--format", "structured"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert [row["year"] for row in doc["rows"]] == list(range(2004, 2011))
        assert doc["rows"][0]["garfield_if"] is None

    def test_fixture_without_blocks_exits_3(self, tmp_path, mjm_doc, capsys):
        del mjm_doc["unique_new_diach"]
        path = tmp_path / "partial.json"
        path.write_text(json.dumps(mjm_doc))
        assert main(["report", "--matrix", str(path)]) == 3
        assert "ingest" in capsys.readouterr().err


class TestUsage:
    def test_no_arguments_is_usage_error(self, capsys):
        assert main([]) == 1

    def test_unknown_subcommand(self, capsys):
        assert main(["frobnicate"]) == 1

    def test_help_exits_0(self, capsys):
        assert main(["--help"]) == 0
        assert "ingest" in capsys.readouterr().out


def test_round_trip_ingest_then_report(corpus, capsys):
    pubs, cites, out = corpus
    assert main(["ingest", "--pubs", str(pubs), "--cites", str(cites), "--matrix", str(out)]) == 0
    capsys.readouterr()
    assert main(["report", "--matrix", str(out), "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert lines[1].startswith("2004,x,x,1.00,x,0.67,0.000,0.67")
    fx = load_fixture(out)
    assert fx.matrix.cit(2005, 2004) == 2
