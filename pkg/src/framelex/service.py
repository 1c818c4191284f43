"""Read-only HTTP JSON API over the lexicon: search, entry detail,
frame-to-sentence projections, and corpus statistics.

Every payload is UTF-8 JSON; all offsets are Unicode code points. The API
is a pure function of the corpus directory: restarting the service over
the same files yields identical payloads. Errors use a stable body shape
{code, message, detail}.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from fastapi import FastAPI, Query
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .index import FrameLexicon, LoadMode
from .model import Frame, Sense, VerbEntry
from .postpositions import PostpositionTable, load_table
from .projection import ProjectionError, project_frame

__all__ = ["ApiConfig", "create_app", "entry_payload"]

SEARCH_FACETS = ("lemma", "frame", "role", "semclass", "inflection")
DEFAULT_LIMIT = 50


@dataclass(frozen=True)
class ApiConfig:
    """Service configuration; also readable from PORT/CORPUS_DIR/LOAD_MODE."""

    corpus_dir: str
    bind_address: str = "127.0.0.1"
    port: int = 8000
    mode: LoadMode = LoadMode.EAGER
    glob_pattern: str = "*.xml"
    table_path: str | None = None
    static_dir: str | None = None  # optional built web UI to serve at /

    def __post_init__(self):
        if not (1 <= self.port <= 65535):
            raise ValueError(f"port must be in [1, 65535], got {self.port}")

    @classmethod
    def from_env(cls) -> "ApiConfig":
        mode = LoadMode(os.environ.get("LOAD_MODE", "eager"))
        return cls(
            corpus_dir=os.environ.get("CORPUS_DIR", "."),
            bind_address=os.environ.get("BIND_ADDRESS", "127.0.0.1"),
            port=int(os.environ.get("PORT", "8000")),
            mode=mode,
        )


def _error(status: int, code: str, message: str, detail: str | None = None) -> JSONResponse:
    return JSONResponse(status_code=status,
                        content={"code": code, "message": message, "detail": detail})


def create_app(config: ApiConfig) -> FastAPI:
    app = FastAPI(title="framelex", version="0.1.0")
    lexicon = FrameLexicon(config.corpus_dir, config.glob_pattern, config.mode)
    table = load_table(config.table_path)

    @app.get("/api/verbs")
    def search(q: str = Query(..., min_length=1),
               by: str = "lemma",
               offset: int = Query(0, ge=0),
               limit: int = Query(DEFAULT_LIMIT, ge=1, le=500)):
        if by not in SEARCH_FACETS:
            return _error(400, "invalid_facet",
                          f"unknown search facet {by!r}",
                          f"valid facets: {', '.join(SEARCH_FACETS)}")
        records = _search_records(lexicon, q, by)
        return {
            "total": len(records),
            "offset": offset,
            "limit": limit,
            "results": records[offset:offset + limit],
        }

    @app.get("/api/verbs/{lemma}/{homograph_id}")
    def detail(lemma: str, homograph_id: str):
        entry = _find_entry(lexicon, lemma, homograph_id)
        if entry is None:
            return _error(404, "not_found",
                          f"no entry {homograph_id!r} for lemma {lemma!r}")
        return entry_payload(entry)

    @app.get("/api/verbs/{lemma}/{homograph_id}/senses/{sense_key}/frames/{frame_index}/projections")
    def projections(lemma: str, homograph_id: str, sense_key: str, frame_index: int):
        entry = _find_entry(lexicon, lemma, homograph_id)
        if entry is None:
            return _error(404, "not_found",
                          f"no entry {homograph_id!r} for lemma {lemma!r}")
        try:
            sense = entry.sense(sense_key)
        except KeyError:
            return _error(404, "not_found", f"no sense {sense_key!r}")
        frames = sense.frames
        if not (0 <= frame_index < len(frames)):
            return _error(404, "not_found", f"no frame index {frame_index}")
        return [_projection_payload(frames[frame_index], example.text, entry.orth, table)
                for example in frames[frame_index].examples]

    @app.get("/api/stats")
    def stats():
        s = lexicon.stats()
        return {
            "verbCount": s.verb_count,
            "avgFramesPerVerb": float(s.formatted_avg()),
        }

    if config.static_dir and Path(config.static_dir).is_dir():
        app.mount("/", StaticFiles(directory=config.static_dir, html=True), name="ui")

    return app


def _find_entry(lexicon: FrameLexicon, lemma: str, homograph_id: str) -> VerbEntry | None:
    for entry in lexicon.entries(lemma):
        if entry.homograph_id == homograph_id:
            return entry
    return None


def _search_records(lexicon: FrameLexicon, q: str, by: str) -> list[dict]:
    """One record per entry hit: matched sense keys plus their classes."""
    hits: dict[tuple[str, str], list[str]] = {}

    def add(lemma: str, homograph_id: str, sense_keys: list[str]) -> None:
        hits.setdefault((lemma, homograph_id), []).extend(sense_keys)

    if by == "lemma":
        # prefix match on the lemma; other facets match exactly
        for entry in lexicon.all_entries():
            if entry.orth.startswith(q):
                add(entry.orth, entry.homograph_id, [s.key for s in entry.senses])
    elif by == "frame":
        for lemma, homograph_id, sense_key in lexicon.search_by_frame(q):
            add(lemma, homograph_id, [sense_key])
    elif by == "role":
        for lemma, homograph_id, sense_key in lexicon.search_by_role(q):
            add(lemma, homograph_id, [sense_key])
    elif by == "semclass":
        for entry in lexicon.search_by_sem_class(q):
            add(entry.orth, entry.homograph_id,
                [s.key for s in entry.senses if s.sem_class == q])
    elif by == "inflection":
        for entry in lexicon.search_by_inflection(q):
            add(entry.orth, entry.homograph_id, [s.key for s in entry.senses])

    records = []
    for (lemma, homograph_id), keys in sorted(hits.items()):
        entry = _find_entry(lexicon, lemma, homograph_id)
        sem_classes = []
        for key in keys:
            sem_class = entry.sense(key).sem_class
            if sem_class and sem_class not in sem_classes:
                sem_classes.append(sem_class)
        records.append({
            "lemma": lemma,
            "homographId": homograph_id,
            "senseKeys": keys,
            "semClass": sem_classes,
        })
    return records


def entry_payload(entry: VerbEntry) -> dict:
    """Lossless JSON rendering of an entry, field for field."""
    return {
        "orth": entry.orth,
        "pos": entry.pos,
        "homographId": entry.homograph_id,
        "morph": {
            "variants": [{"type": v.variant_type, "form": v.form}
                         for v in entry.morph.variants],
            "structure": entry.morph.structure,
            "origin": ({"language": entry.morph.origin.language,
                        "form": entry.morph.origin.form}
                       if entry.morph.origin else None),
            "inflectionClass": entry.morph.inflection_class,
        },
        "senses": [_sense_payload(s) for s in entry.senses],
    }


def _sense_payload(sense: Sense) -> dict:
    return {
        "key": sense.key,
        "semClass": sense.sem_class,
        "trans": sense.trans,
        "subsense": sense.subsense,
        "frameGroups": [
            {
                "label": group.label,
                "frames": [_frame_payload(f) for f in group.frames],
            }
            for group in sense.frame_groups
        ],
    }


def _frame_payload(frame: Frame) -> dict:
    return {
        "pattern": frame.pattern,
        "slots": [
            {
                "positionLabel": s.position_label,
                "nounIndex": s.noun_index,
                "postposition": s.postposition,
                "thematicRole": s.thematic_role,
                "selectionRestrictions": list(s.selection_restrictions),
            }
            for s in frame.slots
        ],
        "examples": [
            {
                "text": e.text,
                "goldSpans": ([{"start": sp.start, "end": sp.end, "label": sp.label}
                               for sp in e.gold_spans]
                              if e.gold_spans is not None else None),
            }
            for e in frame.examples
        ],
    }


def _projection_payload(frame: Frame, sentence: str, lemma: str,
                        table: PostpositionTable) -> dict:
    try:
        annotation = project_frame(frame, sentence, lemma, table)
    except (ProjectionError, ValueError) as exc:
        return {
            "sentence": sentence,
            "spans": [],
            "unmatchedSlots": [s.position_label for s in frame.slots],
            "error": str(exc),
        }
    return {
        "sentence": annotation.sentence,
        "spans": [
            {
                "start": span.start,
                "end": span.end,
                "label": span.label,
                "text": annotation.sentence[span.start:span.end],
            }
            for span in annotation.spans
        ],
        "unmatchedSlots": list(annotation.unmatched_slots),
        "error": None,
    }
