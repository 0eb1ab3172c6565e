import pytest
from hypothesis import given, strategies as st

from valuelens.bundle import Bundle
from valuelens.kb import (
    KnowledgeBase,
    Kind,
    OppositionTable,
    Prototype,
    TypicalityInclusion,
    prototype_from_record,
    prototype_to_record,
    validate_knowledge_base,
)


def test_inclusion_probability_must_exceed_half():
    with pytest.raises(ValueError, match="0.5"):
        TypicalityInclusion(subject="c", feature="d", probability=0.5)
    TypicalityInclusion(subject="c", feature="d", probability=1.0)  # 1 is allowed


def test_prototype_rejects_rigid_typical_overlap():
    with pytest.raises(ValueError, match="overlap"):
        Prototype.make("x", Kind.VALUE, typical={"war": 0.8}, rigid={"war"})


def test_compound_iff_parents():
    with pytest.raises(ValueError, match="compound"):
        Prototype.make("x", Kind.VALUE, typical={"a": 0.8}, parents=("h", "m"))
    with pytest.raises(ValueError, match="compound"):
        Prototype.make("x", Kind.COMPOUND, typical={"a": 0.8})


def test_typical_kept_in_canonical_order():
    proto = Prototype.make("x", Kind.VALUE, typical={"b": 0.8, "a": 0.8, "c": 0.9})
    assert [t for t, _ in proto.typical] == ["c", "a", "b"]


def test_empty_kb_is_valid():
    assert validate_knowledge_base(KnowledgeBase()) == []


def test_dangling_parent_reported():
    head = Prototype.make("head", Kind.VALUE, typical={"a": 0.8})
    compound = Prototype.make(
        "head-degradationX", Kind.COMPOUND, typical={"a": 0.8}, parents=("head", "degradationX")
    )
    kb = KnowledgeBase.from_prototypes([head, compound])
    report = validate_knowledge_base(kb)
    assert any("dangling parent" in v.message for v in report)


def test_duplicate_name_rejected_by_constructor():
    proto = Prototype.make("x", Kind.VALUE, typical={"a": 0.8})
    with pytest.raises(ValueError, match="duplicate"):
        KnowledgeBase.from_prototypes([proto, proto])


def test_validation_is_idempotent():
    head = Prototype.make("head", Kind.VALUE, typical={"a": 0.8})
    kb = KnowledgeBase.from_prototypes([head])
    assert validate_knowledge_base(kb) == validate_knowledge_base(kb)


def test_opposition_table_symmetric():
    table = OppositionTable.from_pairs([("joy", "sadness")])
    assert table.opposed("joy", "sadness")
    assert table.opposed("sadness", "joy")
    assert not table.opposed("joy", "trust")
    with pytest.raises(ValueError):
        OppositionTable.from_pairs([("joy", "joy")])


@given(
    st.dictionaries(
        st.text(alphabet="abcdefgh", min_size=1, max_size=6),
        st.floats(min_value=0.5, max_value=1.0, exclude_min=True),
        min_size=1,
        max_size=7,
    )
)
def test_constructed_prototypes_always_validate(typical):
    proto = Prototype.make("p", Kind.EMOTION, typical=typical)
    kb = KnowledgeBase.from_prototypes([proto])
    assert validate_knowledge_base(kb) == []


def test_prototype_record_roundtrip():
    proto = Prototype.make(
        "degradation-disgust",
        Kind.COMPOUND,
        typical={"weapon": 0.9, "molestation": 0.925},
        rigid={"artifact"},
        parents=("degradation", "disgust"),
    )
    assert prototype_from_record(proto.name, prototype_to_record(proto)) == proto


def test_bundle_roundtrip_is_byte_identical():
    proto = Prototype.make("disgust", Kind.EMOTION, typical={"molestation": 0.925})
    bundle = Bundle(prototypes={"disgust": proto}, manifest={"k": 10})
    text = bundle.to_text()
    assert Bundle.from_text(text).to_text() == text
