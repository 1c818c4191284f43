import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from framelex.model import RoleSpan
from framelex.projection import (
    ProjectedAnnotation,
    parse_standoff,
    project_corpus,
    render_standoff,
    standoff_records,
)

FIGURE_SENTENCE = "많은 사람들이 사회의 질서를 확립하려는 …"
FIGURE_ANNOTATION = ProjectedAnnotation(
    sentence=FIGURE_SENTENCE,
    spans=(RoleSpan(0, 7, "AGT"), RoleSpan(8, 15, "THM"), RoleSpan(16, 21, "TARGET")),
    unmatched_slots=(),
)


class TestRender:
    def test_figure_lines(self):
        rendered = render_standoff(FIGURE_ANNOTATION)
        assert rendered.splitlines() == [
            "T1\tAGT 0 7\t많은 사람들이",
            "T2\tTHM 8 15\t사회의 질서를",
            "T3\tTARGET 16 21\t확립하려는",
        ]
        assert rendered.endswith("\n")

    def test_empty_spans_render_empty(self):
        empty = ProjectedAnnotation("간다", (), ())
        assert render_standoff(empty) == ""

    def test_records_mirror_text_fields(self):
        records = standoff_records(FIGURE_ANNOTATION)
        assert records[0] == {"id": "T1", "label": "AGT", "start": 0, "end": 7,
                              "text": "많은 사람들이"}
        assert [r["id"] for r in records] == ["T1", "T2", "T3"]
        for record, line in zip(records, render_standoff(FIGURE_ANNOTATION).splitlines()):
            assert line == (f"{record['id']}\t{record['label']} "
                            f"{record['start']} {record['end']}\t{record['text']}")


class TestParseBack:
    def test_round_trip_figure(self):
        assert parse_standoff(render_standoff(FIGURE_ANNOTATION)) == FIGURE_ANNOTATION.spans

    def test_round_trip_full_fixture_projection_set(self, lexicon, table):
        projections = project_corpus(lexicon, table)
        assert projections
        for p in projections:
            assert p.annotation is not None
            rendered = render_standoff(p.annotation)
            assert parse_standoff(rendered) == p.annotation.spans

    def test_malformed_line_rejected(self):
        with pytest.raises(ValueError, match="line 1"):
            parse_standoff("not a span line\n")
        with pytest.raises(ValueError):
            parse_standoff("T1\tAGT zero 7\ttext\n")

    def test_empty_input(self):
        assert parse_standoff("") == ()


@st.composite
def annotation_with_spans(draw):
    sentence = draw(st.text(
        alphabet="가나다라마바사 아자차카타파하",
        min_size=1, max_size=40).filter(lambda s: s.strip()))
    n = len(sentence)
    count = draw(st.integers(min_value=0, max_value=min(4, (n + 1) // 2)))
    cuts = sorted(draw(st.lists(st.integers(0, n), min_size=2 * count,
                                max_size=2 * count, unique=True)))
    labels = st.sampled_from(["AGT", "THM", "LOC", "GOL", "TARGET"])
    spans = []
    for i in range(count):
        start, end = cuts[2 * i], cuts[2 * i + 1]
        if start < end and "\n" not in sentence[start:end] and "\t" not in sentence[start:end]:
            spans.append(RoleSpan(start, end, draw(labels)))
    return ProjectedAnnotation(sentence, tuple(spans), ())


class TestRoundTripProperty:
    @settings(max_examples=200, deadline=None)
    @given(annotation_with_spans())
    def test_parse_inverts_render(self, annotation):
        assert parse_standoff(render_standoff(annotation)) == annotation.spans
