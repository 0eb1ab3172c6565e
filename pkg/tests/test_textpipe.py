import random

import pytest
from hypothesis import given, strategies as st

from valuelens.errors import EmptyProfileError
from valuelens.textpipe import (
    STOPWORDS,
    STOPWORDS_HASH,
    CulturalItem,
    extract_feature_profile,
    lemmatize,
)


def test_lemmatize_example_sentence():
    assert lemmatize("Weapons were violently used") == ["weapon", "violently", "use"]


def test_lemmatize_empty_and_stopwords():
    assert lemmatize("") == []
    assert lemmatize("a an the of") == []


def test_lemmatize_suffix_rules():
    assert lemmatize("cities") == ["city"]
    assert lemmatize("classes glasses") == ["class", "glass"]
    assert lemmatize("killing killed") == ["kill", "kill"]
    assert lemmatize("tortured surprised") == ["torture", "surprise"]
    assert lemmatize("status basis fortress") == ["status", "basis", "fortress"]


def test_lemmatize_case_folding_and_punctuation():
    assert lemmatize("WEAPON, weapon; WeApOn!") == ["weapon"] * 3


def test_lemmatize_drops_single_letters():
    assert lemmatize("a b c war") == ["war"]


def test_lemmatize_idempotent_on_own_output():
    text = "The catapults were violently hurled against besieged temples and killed defenders"
    lemmas = lemmatize(text)
    assert lemmatize(" ".join(lemmas)) == lemmas


def item(description, item_id="x"):
    return CulturalItem(id=item_id, title="t", description=description)


def test_profile_proportions():
    profile = extract_feature_profile(item("war war weapon siege"))
    assert profile.frequencies == {"war": 0.5, "weapon": 0.25, "siege": 0.25}
    assert profile.token_count == 4


def test_profile_singleton():
    profile = extract_feature_profile(item("catapult"))
    assert profile.frequencies == {"catapult": 1.0}


def test_profile_stopword_only_text_fails():
    with pytest.raises(EmptyProfileError, match="empty profile"):
        extract_feature_profile(item("the of and"))


def test_profile_frequencies_sum_to_one():
    profile = extract_feature_profile(
        item("catapult siege engine siege stone weapon catapult war war war")
    )
    assert sum(profile.frequencies.values()) == pytest.approx(1.0, abs=1e-9)
    assert all(f > 0 for f in profile.frequencies.values())


def test_profile_permutation_invariant():
    words = "catapult siege engine stone weapon war battle wall".split()
    rng = random.Random(3)
    shuffled = words[:]
    rng.shuffle(shuffled)
    a = extract_feature_profile(item(" ".join(words)))
    b = extract_feature_profile(item(" ".join(shuffled)))
    assert a.frequencies == b.frequencies
    assert a.token_count == b.token_count


@given(st.text(max_size=200))
def test_lemmatize_never_returns_stopwords_or_short_tokens(text):
    for lemma in lemmatize(text):
        assert len(lemma) >= 2
        assert lemma not in STOPWORDS
        assert lemma.islower()


def test_stopword_hash_is_stable_string():
    assert len(STOPWORDS_HASH) == 64
