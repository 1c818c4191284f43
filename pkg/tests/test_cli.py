import json
import shutil

import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from framelex.cli import main
from framelex.service import ApiConfig, create_app


@pytest.fixture()
def runner():
    return CliRunner()


def run(runner, *args):
    return runner.invoke(main, [str(a) for a in args])


class TestIngest:
    def test_fixture_corpus_summary(self, runner, corpus_dir):
        result = run(runner, "ingest", "--dir", corpus_dir)
        assert result.exit_code == 0
        assert result.output.strip() == "20 entries, 0 warnings, 0 errors"

    def test_empty_directory(self, runner, tmp_path):
        result = run(runner, "ingest", "--dir", tmp_path)
        assert result.exit_code == 0
        assert result.output.strip() == "0 entries, 0 warnings, 0 errors"

    def test_broken_file_nonzero_exit_and_named(self, runner, corpus_dir,
                                                data_dir, tmp_path):
        for path in corpus_dir.glob("*.xml"):
            shutil.copy(path, tmp_path / path.name)
        shutil.copy(data_dir / "malformed.xml", tmp_path / "깨지다.vv.1.xml")
        result = run(runner, "ingest", "--dir", tmp_path)
        assert result.exit_code == 1
        assert "깨지다.vv.1.xml" in result.stderr
        assert "20 entries" in result.output
        assert "1 errors" in result.output

    def test_unreadable_directory_exit_2(self, runner, tmp_path):
        result = run(runner, "ingest", "--dir", tmp_path / "missing")
        assert result.exit_code == 2

    def test_report_file(self, runner, corpus_dir, tmp_path):
        out = tmp_path / "report.json"
        result = run(runner, "ingest", "--dir", corpus_dir, "--report", out)
        assert result.exit_code == 0
        payload = json.loads(out.read_text(encoding="utf-8"))
        assert len(payload) == 20
        assert all(item["ok"] for item in payload)


class TestQuery:
    def test_lemma_pos_output_golden(self, runner, corpus_dir, golden_dir):
        result = run(runner, "query", "수정하다.vv", "--dir", corpus_dir)
        assert result.exit_code == 0
        assert result.output == (golden_dir / "query_sujeong.txt").read_text(encoding="utf-8")

    def test_keyed_sense_output_golden(self, runner, corpus_dir, golden_dir):
        result = run(runner, "query", "수정하다.vv", "--sense", "vv.3:1",
                     "--dir", corpus_dir)
        assert result.exit_code == 0
        assert result.output == (golden_dir / "query_sense.txt").read_text(encoding="utf-8")

    def test_unknown_lemma_no_entries_exit_0(self, runner, corpus_dir):
        result = run(runner, "query", "없는동사", "--dir", corpus_dir)
        assert result.exit_code == 0
        assert result.output.strip() == "no entries"

    def test_missing_sense_key_exit_1(self, runner, corpus_dir):
        result = run(runner, "query", "수정하다.vv", "--sense", "vv.3:99",
                     "--dir", corpus_dir)
        assert result.exit_code == 1
        assert "Entry not found for the specified key" in result.stderr

    def test_query_fields_match_service_payload(self, runner, corpus_dir):
        result = run(runner, "query", "가감하다", "--dir", corpus_dir)
        assert result.exit_code == 0
        app = create_app(ApiConfig(corpus_dir=str(corpus_dir)))
        with TestClient(app) as client:
            records = client.get("/api/verbs", params={"q": "가감하다"}).json()["results"]
        assert len(records) == 1
        record = records[0]
        header = result.output.splitlines()[0]
        assert header == f"{record['lemma']} {record['homographId']}"
        for key, sem in zip(record["senseKeys"], record["semClass"]):
            assert any(f"sense {key}  [{sem}]" in line
                       for line in result.output.splitlines())


class TestProject:
    def test_standoff_golden(self, runner, corpus_dir, golden_dir):
        result = run(runner, "project", "--lemma", "확립하다", "--homograph", "vv.1",
                     "--sense", "1", "--frame", "0", "--format", "standoff",
                     "--dir", corpus_dir)
        assert result.exit_code == 0
        assert result.output == (golden_dir / "project_standoff.txt").read_text(encoding="utf-8")

    def test_text_golden(self, runner, corpus_dir, golden_dir):
        result = run(runner, "project", "--lemma", "확립하다", "--homograph", "vv.1",
                     "--sense", "1", "--frame", "0", "--format", "text",
                     "--dir", corpus_dir)
        assert result.exit_code == 0
        assert result.output == (golden_dir / "project_text.txt").read_text(encoding="utf-8")

    def test_records_format_is_jsonl(self, runner, corpus_dir):
        result = run(runner, "project", "--lemma", "확립하다", "--homograph", "vv.1",
                     "--sense", "1", "--frame", "0", "--format", "records",
                     "--dir", corpus_dir)
        assert result.exit_code == 0
        lines = [json.loads(line) for line in result.output.splitlines() if line]
        assert len(lines) == 2
        assert lines[0]["spans"][0] == {"start": 0, "end": 7, "label": "AGT",
                                        "text": "많은 사람들이"}

    def test_deps_input_gives_identical_spans_on_figure_tree(self, runner, corpus_dir,
                                                             data_dir):
        without = run(runner, "project", "--lemma", "확립하다", "--homograph", "vv.1",
                      "--sense", "1", "--frame", "0", "--format", "standoff",
                      "--dir", corpus_dir)
        with_deps = run(runner, "project", "--lemma", "확립하다", "--homograph", "vv.1",
                        "--sense", "1", "--frame", "0", "--format", "standoff",
                        "--deps", data_dir / "figure2.deps", "--dir", corpus_dir)
        assert with_deps.exit_code == 0
        assert with_deps.output == without.output

    def test_deps_block_count_mismatch_exit_1(self, runner, corpus_dir, tmp_path):
        deps = tmp_path / "one.deps"
        deps.write_text("1\t많은\t0\tROOT\n", encoding="utf-8")
        result = run(runner, "project", "--lemma", "확립하다", "--homograph", "vv.1",
                     "--sense", "1", "--frame", "0", "--deps", deps,
                     "--dir", corpus_dir)
        assert result.exit_code == 1

    def test_missing_frame_exit_1(self, runner, corpus_dir):
        result = run(runner, "project", "--lemma", "확립하다", "--homograph", "vv.1",
                     "--sense", "1", "--frame", "7", "--dir", corpus_dir)
        assert result.exit_code == 1
        result = run(runner, "project", "--lemma", "확립하다", "--homograph", "vv.9",
                     "--sense", "1", "--frame", "0", "--dir", corpus_dir)
        assert result.exit_code == 1
        assert "Entry not found" in result.stderr

    def test_frame_with_no_examples_empty_output(self, runner, tmp_path):
        (tmp_path / "벗다.vv.1.xml").write_text(
            """<entry pos="vv" homograph="vv.1">
  <orth>벗다</orth>
  <sense n="1">
    <sem_class>행위</sem_class>
    <trans>to take off</trans>
    <frame_grp type="1">
      <frame>X=N0-이 V<sel_rst arg="X" tht="AGT">인간</sel_rst></frame>
    </frame_grp>
  </sense>
</entry>
""", encoding="utf-8")
        result = run(runner, "project", "--lemma", "벗다", "--homograph", "vv.1",
                     "--sense", "1", "--frame", "0", "--dir", tmp_path)
        assert result.exit_code == 0
        assert result.output == ""


class TestStats:
    def test_fixture_counts(self, runner, corpus_dir):
        result = run(runner, "stats", "--dir", corpus_dir)
        assert result.exit_code == 0
        assert result.output.strip() == "20 1.150"

    def test_empty_directory(self, runner, tmp_path):
        result = run(runner, "stats", "--dir", tmp_path)
        assert result.exit_code == 0
        assert result.output.strip() == "0 0.000"


class TestServe:
    def test_invalid_port_exit_2(self, runner, corpus_dir):
        result = run(runner, "serve", "--port", "70000", "--dir", corpus_dir)
        assert result.exit_code == 2


class TestCrossInterface:
    def test_cli_standoff_agrees_with_service_byte_for_byte(self, runner, corpus_dir):
        """CLI standoff output and the projections endpoint must agree on
        every fixture frame once both are rendered through the same
        normalization (standoff lines, blocks separated by blank lines)."""
        app = create_app(ApiConfig(corpus_dir=str(corpus_dir)))
        from framelex import FrameLexicon
        lexicon = FrameLexicon(corpus_dir)
        with TestClient(app) as client:
            for entry in lexicon.all_entries():
                for sense in entry.senses:
                    for fi, frame in enumerate(sense.frames):
                        cli_result = run(runner, "project",
                                         "--lemma", entry.orth,
                                         "--homograph", entry.homograph_id,
                                         "--sense", sense.key, "--frame", fi,
                                         "--format", "standoff",
                                         "--dir", corpus_dir)
                        assert cli_result.exit_code == 0
                        payload = client.get(
                            f"/api/verbs/{entry.orth}/{entry.homograph_id}"
                            f"/senses/{sense.key}/frames/{fi}/projections").json()
                        blocks = []
                        for item in payload:
                            lines = [f"T{k}\t{s['label']} {s['start']} {s['end']}\t{s['text']}"
                                     for k, s in enumerate(item["spans"], start=1)]
                            blocks.append("".join(line + "\n" for line in lines))
                        assert cli_result.output == "\n".join(blocks)
