"""Command-line driver: ingest, query, project, stats, serve.

Exit codes are a stable contract: 0 success, 1 data-level failure
(missing entry, all projections failed, parse errors in the corpus),
2 environment failure (unreadable directory, port in use).
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .chunking import parse_dependency_file
from .index import FrameLexicon, LoadMode
from .postpositions import load_table
from .projection import ProjectionError, project_frame, render_standoff
from .xml_ingest import IngestError, ingest_directory

EXIT_DATA = 1
EXIT_ENV = 2


def _corpus_options(f):
    f = click.option("--dir", "corpus_dir", required=True,
                     type=click.Path(), help="Corpus directory of entry XML files.")(f)
    f = click.option("--glob", "glob_pattern", default="*.xml", show_default=True,
                     help="Glob selecting entry files.")(f)
    f = click.option("--lazy", is_flag=True,
                     help="Defer indexing until the first query.")(f)
    return f


def _open_lexicon(corpus_dir: str, glob_pattern: str, lazy: bool) -> FrameLexicon:
    mode = LoadMode.LAZY if lazy else LoadMode.EAGER
    try:
        return FrameLexicon(corpus_dir, glob_pattern, mode)
    except IngestError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_ENV)


@click.group()
def main():
    """Verb frame lexicon tools."""


@main.command()
@click.option("--dir", "corpus_dir", required=True, type=click.Path())
@click.option("--glob", "glob_pattern", default="*.xml", show_default=True)
@click.option("--report", "report_path", type=click.Path(), default=None,
              help="Write the full diagnostic report as JSON.")
def ingest(corpus_dir, glob_pattern, report_path):
    """Parse a corpus directory and summarize diagnostics."""
    try:
        reports = ingest_directory(corpus_dir, glob_pattern)
    except IngestError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_ENV)

    entries = sum(1 for r in reports if r.ok)
    warnings = sum(len(r.warnings) for r in reports)
    errors = sum(len(r.errors) for r in reports)
    for r in reports:
        for d in r.errors:
            click.echo(f"error: {r.file_path}: {d.message} (at {d.xml_path})", err=True)
    click.echo(f"{entries} entries, {warnings} warnings, {errors} errors")

    if report_path:
        payload = [
            {
                "file": r.file_path,
                "ok": r.ok,
                "diagnostics": [
                    {"severity": d.severity, "message": d.message, "xmlPath": d.xml_path}
                    for d in r.diagnostics
                ],
            }
            for r in reports
        ]
        Path(report_path).write_text(
            json.dumps(payload, ensure_ascii=False, indent=2) + "\n", encoding="utf-8")
    if errors:
        sys.exit(EXIT_DATA)


@main.command()
@click.argument("query_string", metavar="LEMMA[.POS]")
@click.option("--sense", "sense_ref", default=None, metavar="HOMOGRAPH:KEY",
              help="Print one keyed sense, e.g. vv.3:1.")
@_corpus_options
def query(query_string, sense_ref, corpus_dir, glob_pattern, lazy):
    """Look up entries for a lemma, or one keyed sense."""
    lexicon = _open_lexicon(corpus_dir, glob_pattern, lazy)
    entries = lexicon.entries(query_string)

    if sense_ref is not None:
        homograph_key, _, sense_key = sense_ref.partition(":")
        try:
            sense = entries[homograph_key][sense_key]
        except KeyError as exc:
            click.echo(f"Entry not found for the specified key: {exc.args[0]}", err=True)
            sys.exit(EXIT_DATA)
        lemma = query_string.split(".")[0]
        click.echo(f"{lemma} {homograph_key} sense {sense_key}")
        click.echo(f"category: {sense.category}")
        click.echo(f"trans: {sense.trans}")
        click.echo("frames:")
        for i, frame in enumerate(sense.frames, start=1):
            click.echo(f"  {i}. {frame.pattern}")
        return

    if not entries:
        click.echo("no entries")
        return
    for entry in entries:
        click.echo(f"{entry.orth} {entry.homograph_id}")
        for sense in entry.senses:
            click.echo(f"  sense {sense.key}  [{sense.sem_class}] {sense.trans}")
            for frame in sense.frames:
                click.echo(f"    frame {frame.pattern}")


@main.command()
@click.option("--lemma", required=True)
@click.option("--homograph", "homograph_id", required=True)
@click.option("--sense", "sense_key", required=True)
@click.option("--frame", "frame_index", required=True, type=int)
@click.option("--deps", "deps_path", type=click.Path(exists=True), default=None,
              help="Dependency file; one blank-line-separated block per example.")
@click.option("--format", "fmt", type=click.Choice(["text", "standoff", "records"]),
              default="text", show_default=True)
@click.option("--table", "table_path", type=click.Path(exists=True), default=None,
              help="Alternative postposition table (TSV).")
@_corpus_options
def project(lemma, homograph_id, sense_key, frame_index, deps_path, fmt,
            table_path, corpus_dir, glob_pattern, lazy):
    """Project one frame onto its example sentences."""
    lexicon = _open_lexicon(corpus_dir, glob_pattern, lazy)
    table = load_table(table_path)
    try:
        sense = lexicon.entries(lemma)[homograph_id][sense_key]
    except KeyError as exc:
        click.echo(f"Entry not found for the specified key: {exc.args[0]}", err=True)
        sys.exit(EXIT_DATA)
    frames = sense.frames
    if not (0 <= frame_index < len(frames)):
        click.echo(f"error: no frame index {frame_index} "
                   f"(sense has {len(frames)} frames)", err=True)
        sys.exit(EXIT_DATA)
    frame = frames[frame_index]

    deps_blocks = None
    if deps_path is not None:
        deps_blocks = parse_dependency_file(Path(deps_path).read_text(encoding="utf-8"))
        if len(deps_blocks) != len(frame.examples):
            click.echo(f"error: dependency file has {len(deps_blocks)} blocks "
                       f"but the frame has {len(frame.examples)} examples", err=True)
            sys.exit(EXIT_DATA)

    failures = 0
    blocks: list[str] = []
    for i, example in enumerate(frame.examples):
        deps = deps_blocks[i] if deps_blocks is not None else None
        try:
            annotation = project_frame(frame, example.text, lemma, table, deps=deps)
        except (ProjectionError, ValueError) as exc:
            failures += 1
            click.echo(f"warning: example {i + 1}: {exc}", err=True)
            if fmt == "records":
                blocks.append(json.dumps(
                    {"example": i, "sentence": example.text, "spans": [],
                     "unmatchedSlots": [s.position_label for s in frame.slots],
                     "error": str(exc)},
                    ensure_ascii=False, sort_keys=True) + "\n")
            continue
        if fmt == "standoff":
            blocks.append(render_standoff(annotation))
        elif fmt == "records":
            blocks.append(json.dumps(
                {"example": i, "sentence": annotation.sentence,
                 "spans": [{"start": s.start, "end": s.end, "label": s.label,
                            "text": annotation.sentence[s.start:s.end]}
                           for s in annotation.spans],
                 "unmatchedSlots": list(annotation.unmatched_slots),
                 "error": None},
                ensure_ascii=False, sort_keys=True) + "\n")
        else:
            lines = [f"example {i + 1}: {annotation.sentence}"]
            for k, span in enumerate(annotation.spans, start=1):
                text = annotation.sentence[span.start:span.end]
                lines.append(f"  T{k} {span.label} [{span.start},{span.end}) {text}")
            for label in annotation.unmatched_slots:
                lines.append(f"  unmatched: {label}")
            blocks.append("\n".join(lines) + "\n")

    separator = "" if fmt == "records" else "\n"
    click.echo(separator.join(blocks), nl=False)
    if frame.examples and failures == len(frame.examples):
        sys.exit(EXIT_DATA)


@main.command()
@_corpus_options
def stats(corpus_dir, glob_pattern, lazy):
    """Print verb count and average frames per verb (3 decimals)."""
    lexicon = _open_lexicon(corpus_dir, glob_pattern, lazy)
    s = lexicon.stats()
    click.echo(f"{s.verb_count} {s.formatted_avg()}")


@main.command()
@click.option("--port", default=8000, show_default=True, type=int)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--ui", "static_dir", type=click.Path(), default=None,
              help="Directory of built web UI assets to serve at /.")
@click.option("--table", "table_path", type=click.Path(exists=True), default=None)
@_corpus_options
def serve(port, host, static_dir, table_path, corpus_dir, glob_pattern, lazy):
    """Run the HTTP API until interrupted."""
    import uvicorn

    from .service import ApiConfig, create_app

    mode = LoadMode.LAZY if lazy else LoadMode.EAGER
    try:
        config = ApiConfig(corpus_dir=corpus_dir, bind_address=host, port=port,
                           mode=mode, glob_pattern=glob_pattern,
                           table_path=table_path, static_dir=static_dir)
        app = create_app(config)
    except (IngestError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_ENV)
    try:
        uvicorn.run(app, host=host, port=port, log_level="warning")
    except (OSError, SystemExit) as exc:
        click.echo(f"error: cannot serve on {host}:{port}: {exc}", err=True)
        sys.exit(EXIT_ENV)


if __name__ == "__main__":
    main()
