"""framelex: a verb subcategorization frame lexicon engine.

Parses frame-dictionary XML into a typed model, answers indexed queries
over lemmas, frames, roles, semantic classes and inflection classes, and
projects frames onto example sentences to recover role-labeled argument
spans with code-point offsets.
"""

from .chunking import (
    CHUNKER_BACKEND,
    Chunk,
    DependencyInput,
    DependencyMismatchError,
    chunk_sentence,
    parse_dependency_file,
)
from .index import FrameLexicon, LoadMode, Stats, load, sense_at
from .model import (
    ArgumentSlot,
    EntryList,
    ExampleSentence,
    Frame,
    FrameGroup,
    MorphGroup,
    MorphVariant,
    Origin,
    RoleSpan,
    Sense,
    VerbEntry,
    argument_of,
    validate,
)
from .postpositions import PostpositionTable, load_table
from .projection import (
    CorpusProjection,
    ProjectedAnnotation,
    ProjectionError,
    parse_standoff,
    project_corpus,
    project_frame,
    render_standoff,
    standoff_records,
)
from .xml_ingest import (
    Diagnostic,
    IngestError,
    InvalidEntryError,
    ParseReport,
    ingest_directory,
    parse_entry,
    serialize_entry,
)

__version__ = "0.1.0"

__all__ = [
    "ArgumentSlot",
    "CHUNKER_BACKEND",
    "Chunk",
    "CorpusProjection",
    "DependencyInput",
    "DependencyMismatchError",
    "Diagnostic",
    "EntryList",
    "ExampleSentence",
    "Frame",
    "FrameGroup",
    "FrameLexicon",
    "IngestError",
    "InvalidEntryError",
    "LoadMode",
    "MorphGroup",
    "MorphVariant",
    "Origin",
    "ParseReport",
    "PostpositionTable",
    "ProjectedAnnotation",
    "ProjectionError",
    "RoleSpan",
    "Sense",
    "Stats",
    "VerbEntry",
    "argument_of",
    "chunk_sentence",
    "ingest_directory",
    "load",
    "load_table",
    "parse_dependency_file",
    "parse_entry",
    "parse_standoff",
    "project_corpus",
    "project_frame",
    "render_standoff",
    "sense_at",
    "serialize_entry",
    "standoff_records",
    "validate",
]
