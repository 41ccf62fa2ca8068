"""Three-valued guard evaluation."""

import pytest
from hypothesis import given, strategies as st

from msa_decide import ContextFacts, Guard, eval_guard
from msa_decide.errors import UnknownFactError
from msa_decide.model import CONTEXT_FACT_DOMAINS


def test_single_clause_truth_table():
    guard = Guard.of({"legacy_code_available": "yes"})
    assert eval_guard(guard, ContextFacts(legacy_code_available="yes")) is True
    assert eval_guard(guard, ContextFacts(legacy_code_available="no")) is False
    assert eval_guard(guard, ContextFacts(legacy_code_available="unknown")) is None


def test_conjunction_false_dominates_unknown():
    guard = Guard.of({"legacy_code_available": "yes", "dfds_available": "yes"})
    context = ContextFacts(legacy_code_available="unknown", dfds_available="no")
    assert eval_guard(guard, context) is False


def test_conjunction_unknown_when_no_clause_fails():
    guard = Guard.of({"legacy_code_available": "yes", "dfds_available": "yes"})
    context = ContextFacts(legacy_code_available="unknown", dfds_available="yes")
    assert eval_guard(guard, context) is None


def test_requiring_unknown_never_holds():
    guard = Guard.of({"legacy_code_available": "unknown"})
    assert eval_guard(guard, ContextFacts(legacy_code_available="yes")) is False
    assert eval_guard(guard, ContextFacts(legacy_code_available="unknown")) is None


def test_otherwise_cannot_be_evaluated_alone():
    with pytest.raises(ValueError):
        eval_guard(Guard(otherwise=True), ContextFacts())


def test_guard_rejects_unknown_fact():
    with pytest.raises(UnknownFactError):
        Guard.of({"budget": "yes"})


def test_guard_text_is_sorted_and_readable():
    guard = Guard.of({"legacy_code_available": "yes", "dfds_available": "no"})
    assert str(guard) == "dfds_available = no and legacy_code_available = yes"


facts = st.sampled_from(sorted(CONTEXT_FACT_DOMAINS))
contexts = st.builds(
    ContextFacts,
    **{
        fact: st.sampled_from(values)
        for fact, values in CONTEXT_FACT_DOMAINS.items()
    },
)


@st.composite
def guards(draw):
    chosen = draw(st.sets(facts, min_size=1, max_size=4))
    return Guard.of({fact: draw(st.sampled_from(CONTEXT_FACT_DOMAINS[fact])) for fact in sorted(chosen)})


@given(guards(), contexts)
def test_evaluation_matches_clause_semantics(guard, context):
    states = [
        "unknown" if context.value(fact) == "unknown" else ("match" if context.value(fact) == required else "miss")
        for fact, required in guard.clauses
    ]
    expected = False if "miss" in states else (None if "unknown" in states else True)
    assert eval_guard(guard, context) is expected


@given(guards(), contexts)
def test_adding_a_clause_never_relaxes(guard, context):
    base = eval_guard(guard, context)
    for fact, values in CONTEXT_FACT_DOMAINS.items():
        if any(f == fact for f, _ in guard.clauses):
            continue
        for value in values:
            extended = Guard(clauses=guard.clauses + ((fact, value),))
            stricter = eval_guard(extended, context)
            if base is False:
                assert stricter is False
            elif base is None:
                assert stricter in (False, None)
        break


@given(contexts)
def test_answering_facts_resolves_unknown(context):
    guard = Guard.of({"business_understanding": "yes"})
    value = eval_guard(guard, context)
    if value is None:
        import dataclasses

        answered = dataclasses.replace(context, business_understanding="yes")
        assert eval_guard(guard, answered) is True
        refused = dataclasses.replace(context, business_understanding="no")
        assert eval_guard(guard, refused) is False
