import pytest

from framelex.model import (
    ArgumentSlot,
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
    parse_pattern,
    validate,
)


def make_frame(slots=None, examples=()):
    if slots is None:
        slots = (
            ArgumentSlot("X", 0, "이", "AGT", ("인간",)),
            ArgumentSlot("Y", 1, "을", "THM", ("사실명제",)),
        )
    return Frame(slots=tuple(slots), examples=tuple(examples))


def make_entry(**overrides):
    frame = make_frame()
    fields = dict(
        orth="확립하다",
        pos="vv",
        homograph_id="vv.1",
        morph=MorphGroup(
            variants=(MorphVariant("spr", "확립을 하다"),),
            structure="N.하",
            origin=Origin("si", "確立_"),
            inflection_class="irregular:여",
        ),
        senses=(Sense("1", "행위", "to establish", (FrameGroup("1", (frame,)),)),),
    )
    fields.update(overrides)
    return VerbEntry(**fields)


class TestValidate:
    def test_reference_entry_is_valid(self):
        assert validate(make_entry()) == []

    def test_empty_orth_names_the_field(self):
        violations = validate(make_entry(orth=""))
        assert len(violations) == 1
        assert violations[0].type_name == "VerbEntry"
        assert violations[0].field_name == "orth"

    def test_no_senses(self):
        violations = validate(make_entry(senses=()))
        assert any(v.field_name == "senses" for v in violations)

    def test_duplicate_sense_keys(self):
        sense = make_entry().senses[0]
        dup = Sense("1", "행위", "other", sense.frame_groups)
        violations = validate(make_entry(senses=(sense, dup)))
        assert any("unique" in v.rule for v in violations)

    def test_empty_variant_form(self):
        entry = make_entry(morph=MorphGroup(variants=(MorphVariant("spr", ""),)))
        assert any(v.type_name == "MorphGroup" for v in validate(entry))

    def test_duplicate_slot_labels(self):
        frame = make_frame(slots=(
            ArgumentSlot("X", 0, "이", "AGT"),
            ArgumentSlot("X", 1, "을", "THM"),
        ))
        entry = make_entry(senses=(Sense("1", "행위", "t", (FrameGroup("1", (frame,)),)),))
        assert any("position labels" in v.rule for v in validate(entry))

    def test_empty_thematic_role(self):
        frame = make_frame(slots=(ArgumentSlot("X", 0, "이", ""),))
        entry = make_entry(senses=(Sense("1", "행위", "t", (FrameGroup("1", (frame,)),)),))
        assert any(v.field_name == "thematic_role" for v in validate(entry))

    def test_unknown_postposition_checked_against_table(self):
        frame = make_frame(slots=(ArgumentSlot("X", 0, "보다", "AGT"),))
        entry = make_entry(senses=(Sense("1", "행위", "t", (FrameGroup("1", (frame,)),)),))
        assert validate(entry) == []
        violations = validate(entry, known_postpositions=frozenset({"이", "을"}))
        assert any(v.field_name == "postposition" for v in violations)

    def test_frame_shared_between_groups(self):
        frame = make_frame()
        sense = Sense("1", "행위", "t", (FrameGroup("1", (frame,)), FrameGroup("2", (frame,))))
        assert any("shared" in v.rule for v in validate(make_entry(senses=(sense,))))

    def test_gold_span_bounds_and_target(self):
        ex = ExampleSentence("아이가 간다", gold_spans=(
            RoleSpan(0, 3, "AGT"), RoleSpan(4, 6, "TARGET")))
        frame = make_frame(examples=(ex,))
        entry = make_entry(senses=(Sense("1", "행위", "t", (FrameGroup("1", (frame,)),)),))
        assert validate(entry) == []

        bad = ExampleSentence("아이가 간다", gold_spans=(RoleSpan(0, 99, "TARGET"),))
        frame = make_frame(examples=(bad,))
        entry = make_entry(senses=(Sense("1", "행위", "t", (FrameGroup("1", (frame,)),)),))
        assert any("out of bounds" in v.rule for v in validate(entry))

        overlapping = ExampleSentence("아이가 간다", gold_spans=(
            RoleSpan(0, 4, "AGT"), RoleSpan(3, 6, "TARGET")))
        frame = make_frame(examples=(overlapping,))
        entry = make_entry(senses=(Sense("1", "행위", "t", (FrameGroup("1", (frame,)),)),))
        assert any("overlap" in v.rule for v in validate(entry))

        no_target = ExampleSentence("아이가 간다", gold_spans=(RoleSpan(0, 3, "AGT"),))
        frame = make_frame(examples=(no_target,))
        entry = make_entry(senses=(Sense("1", "행위", "t", (FrameGroup("1", (frame,)),)),))
        assert any("TARGET" in v.rule for v in validate(entry))

    def test_validate_is_pure(self):
        entry = make_entry(orth="")
        assert validate(entry) == validate(entry)

    def test_all_fixtures_valid_against_audited_list(self, lexicon, table):
        # the hand-audited fixture inventory: every entry must parse and validate
        audited = {
            ("가감하다", "vv.1"), ("가다", "vv.1"), ("걷다", "vv.1"), ("넣다", "vv.1"),
            ("돕다", "vv.1"), ("만나다", "vv.1"), ("먹다", "vv.1"), ("받다", "vv.1"),
            ("배우다", "vv.1"), ("보내다", "vv.1"), ("부르다", "vv.1"), ("살다", "vv.1"),
            ("수정하다", "vv.1"), ("수정하다", "vv.2"), ("수정하다", "vv.3"),
            ("쓰다", "vv.1"), ("의지하다", "vv.1"), ("주다", "vv.1"), ("짓다", "vv.1"),
            ("확립하다", "vv.1"),
        }
        entries = lexicon.all_entries()
        assert {(e.orth, e.homograph_id) for e in entries} == audited
        known = frozenset(table.forms)
        for entry in entries:
            assert validate(entry, known_postpositions=known) == []


class TestStructure:
    def test_structural_equality(self):
        assert make_entry() == make_entry()
        assert make_entry() != make_entry(orth="다르다")

    def test_pattern_round_trips_through_slots(self):
        frame = make_frame()
        assert frame.pattern == "X=N0-이 Y=N1-을 V"
        assert parse_pattern(frame.pattern) == (("X", 0, "이"), ("Y", 1, "을"))

    def test_slot_count_matches_pattern_equals_signs(self, lexicon):
        for entry in lexicon.all_entries():
            for sense in entry.senses:
                for frame in sense.frames:
                    assert len(frame.slots) == frame.pattern.count("=")

    def test_zero_slot_pattern(self):
        assert Frame(slots=()).pattern == "V"
        assert parse_pattern("V") == ()

    def test_pattern_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_pattern("X=N0-이")  # no terminal V
        with pytest.raises(ValueError):
            parse_pattern("X;N0 V")

    def test_slot_text_rendering(self):
        frame = make_frame()
        assert str(frame.argument("Y")) == "Y=N1-을"

    def test_attribute_style_slot_access(self):
        frame = make_frame()
        assert frame.Y.thematic_role == "THM"
        assert frame.X.thematic_role == "AGT"
        with pytest.raises(KeyError):
            frame.Z

    def test_argument_of(self):
        frame = make_frame()
        assert argument_of(frame, "X").postposition == "이"
        with pytest.raises(KeyError):
            argument_of(frame, "Q")

    def test_sense_category_and_frames(self):
        sense = make_entry().senses[0]
        assert sense.category == "행위"
        assert len(sense.frames) == 1

    def test_entry_keyed_sense_access(self):
        entry = make_entry()
        assert entry["1"].trans == "to establish"
        with pytest.raises(KeyError):
            entry["9"]
