import json

import httpx
import pytest

from scenesmith.annotate import (
    LocalHeuristicProvider,
    RemoteLLM,
    ReplayProvider,
    SCRIPT_MARKER,
    annotate_script,
    build_parse_prompt,
    build_regen_prompt,
    build_summary_prompt,
    extract_json_array,
    extract_json_object,
    prompt_key,
    regenerate_line,
    summarize_script,
    validate_records,
)
from scenesmith.errors import ProviderUnavailable, UnparseableResponse
from scenesmith.model import RawScript, parse_speaker_lines, validate_line
from scenesmith.vocab import SHOT_ANGLES, SHOT_TYPES, STYLES

from tests.reference_fixtures import TOM_BOB_RECORDS, TOM_BOB_SCRIPT


class ScriptedProvider:
    """Returns canned responses in order; records the prompts it saw."""

    def __init__(self, *responses):
        self.responses = list(responses)
        self.prompts = []

    def complete(self, prompt):
        self.prompts.append(prompt)
        if not self.responses:
            raise ProviderUnavailable("out of canned responses")
        return self.responses.pop(0)


class TestPrompts:
    def test_parse_prompt_carries_vocabularies_and_script(self):
        prompt = build_parse_prompt("A: hi")
        for style in STYLES:
            assert style in prompt
        for term in SHOT_TYPES + SHOT_ANGLES:
            assert term in prompt
        assert SCRIPT_MARKER in prompt
        assert prompt.rstrip().endswith("A: hi")

    def test_summary_prompt_has_example_shape(self):
        prompt = build_summary_prompt("A: hi")
        assert '"title"' in prompt and '"synopsis"' in prompt

    def test_regen_prompt_names_the_style(self):
        prompt = build_regen_prompt("{}", "Sad", "A: hi")
        assert "Sad" in prompt
        assert '"speech"' in prompt

    def test_prompt_key_is_stable_and_short(self):
        assert prompt_key("abc") == prompt_key("abc")
        assert prompt_key("abc") != prompt_key("abd")
        assert len(prompt_key("abc")) == 16


class TestExtraction:
    def test_bare_array(self):
        assert extract_json_array('[1, 2, {"a": "b"}]') == [1, 2, {"a": "b"}]

    def test_fenced_with_prose(self):
        text = 'Sure! Here you go:\n```json\n[{"x": 1}]\n```\nHope that helps.'
        assert extract_json_array(text) == [{"x": 1}]

    def test_brackets_inside_strings_ignored(self):
        text = '[{"a": "not ] the end"}, {"b": "nor [ this"}]'
        assert extract_json_array(text) == [{"a": "not ] the end"}, {"b": "nor [ this"}]

    def test_skips_invalid_candidates(self):
        text = "[broken, , ] then the real one: [3, 4]"
        assert extract_json_array(text) == [3, 4]

    def test_no_array_raises(self):
        with pytest.raises(UnparseableResponse):
            extract_json_array("no json here at all")

    def test_object_extraction(self):
        assert extract_json_object('noise {"t": "x"} noise') == {"t": "x"}
        with pytest.raises(UnparseableResponse):
            extract_json_object("[1,2]")


class TestValidateRecords:
    def _parsed(self):
        return parse_speaker_lines(RawScript(TOM_BOB_SCRIPT))

    def test_good_records_pass(self):
        assert validate_records(TOM_BOB_RECORDS, self._parsed()) == []

    def test_count_mismatch_flagged(self):
        problems = validate_records(TOM_BOB_RECORDS[:1], self._parsed())
        assert any("2 dialogue lines" in p for p in problems)

    def test_id_mismatch_flagged(self):
        records = [dict(TOM_BOB_RECORDS[0], id="Tim"), TOM_BOB_RECORDS[1]]
        assert any("does not match speaker" in p for p in validate_records(records, self._parsed()))

    def test_text_alteration_flagged(self):
        records = [dict(TOM_BOB_RECORDS[0], text="Hi."), TOM_BOB_RECORDS[1]]
        assert any("altered" in p for p in validate_records(records, self._parsed()))


class TestAnnotateScript:
    def test_accepts_valid_first_response(self):
        provider = ScriptedProvider(json.dumps(TOM_BOB_RECORDS))
        lines, warnings = annotate_script(RawScript(TOM_BOB_SCRIPT), provider)
        assert warnings == []
        assert [l.to_record() for l in lines] == TOM_BOB_RECORDS

    def test_repair_round_trip_quotes_problems(self):
        bad = [dict(TOM_BOB_RECORDS[0], style="Furious"), TOM_BOB_RECORDS[1]]
        provider = ScriptedProvider(json.dumps(bad), json.dumps(TOM_BOB_RECORDS))
        lines, warnings = annotate_script(RawScript(TOM_BOB_SCRIPT), provider)
        assert warnings == []
        assert len(provider.prompts) == 2
        assert "Furious" in provider.prompts[1]
        assert lines[0].style == "Happy"

    def test_salvage_after_two_bad_responses(self):
        bad = [dict(TOM_BOB_RECORDS[0], style="Furious"), TOM_BOB_RECORDS[1]]
        provider = ScriptedProvider(json.dumps(bad), json.dumps(bad))
        lines, warnings = annotate_script(RawScript(TOM_BOB_SCRIPT), provider)
        assert warnings
        assert lines[0].style in STYLES
        assert "substituted" in lines[0].emotion_analysis
        # the salvage keeps the good fields from the candidate
        assert lines[0].speech == TOM_BOB_RECORDS[0]["speech"]
        assert lines[1].to_record() == TOM_BOB_RECORDS[1]

    def test_provider_down_falls_back_to_heuristics(self):
        lines, warnings = annotate_script(RawScript(TOM_BOB_SCRIPT), ScriptedProvider())
        assert len(lines) == 2
        assert warnings and "unavailable" in warnings[0]
        for line, parsed in zip(lines, parse_speaker_lines(RawScript(TOM_BOB_SCRIPT)).lines):
            assert line.id == parsed.speaker
            assert line.text == parsed.utterance
            validate_line(line.to_record())

    def test_ids_and_text_always_pinned_to_script(self):
        forged = [dict(r, id="Mallory", text="something else") for r in TOM_BOB_RECORDS]
        provider = ScriptedProvider(json.dumps(forged), json.dumps(forged))
        lines, warnings = annotate_script(RawScript(TOM_BOB_SCRIPT), provider)
        assert [l.id for l in lines] == ["Tom", "Bob"]
        assert warnings


class TestSummarize:
    def test_valid_summary_accepted(self):
        provider = ScriptedProvider('{"title": "T", "synopsis": "S"}')
        summary, warnings = summarize_script(RawScript(TOM_BOB_SCRIPT), provider)
        assert (summary.title, summary.synopsis) == ("T", "S")
        assert warnings == []

    def test_missing_synopsis_repaired_once(self):
        provider = ScriptedProvider('{"title": "T"}', '{"title": "T", "synopsis": "S"}')
        summary, warnings = summarize_script(RawScript(TOM_BOB_SCRIPT), provider)
        assert summary.synopsis == "S"
        assert len(warnings) == 1

    def test_fallback_summary_when_provider_down(self):
        summary, warnings = summarize_script(RawScript(TOM_BOB_SCRIPT), ScriptedProvider())
        assert summary.title and summary.synopsis
        assert "Tom" in summary.synopsis and "Bob" in summary.synopsis
        assert warnings


class TestRegenerate:
    def _line(self):
        return validate_line(TOM_BOB_RECORDS[1], index=1)

    def test_only_delivery_fields_move(self):
        response = json.dumps(
            {
                "id": "HACKED",
                "text": "HACKED",
                "speech": "Honestly? Never better.",
                "style": "Happy",
                "emotionAnalysis": "Now upbeat.",
                "shotType": "Long shot",
                "shotAngle": "Low angle",
                "shotAnalysis": "Different take.",
            }
        )
        out = regenerate_line(self._line(), "Sarcastic", TOM_BOB_SCRIPT, ScriptedProvider(response))
        assert out.style == "Sarcastic"  # requested, not the provider's claim
        assert out.speech == "Honestly? Never better."
        assert out.emotion_analysis == "Now upbeat."
        assert out.shot_analysis == "Different take."
        assert (out.id, out.text) == ("Bob", TOM_BOB_RECORDS[1]["text"])
        assert (out.shot_type, out.shot_angle) == ("Medium shot", "Eye level")
        assert out.index == 1

    def test_unusable_response_keeps_old_speech(self):
        out = regenerate_line(self._line(), "Angry", TOM_BOB_SCRIPT, ScriptedProvider("garbage"))
        assert out.style == "Angry"
        assert out.speech == TOM_BOB_RECORDS[1]["speech"]

    def test_bad_style_rejected_before_any_call(self):
        provider = ScriptedProvider("should never be used")
        from scenesmith.errors import UnknownStyle

        with pytest.raises(UnknownStyle):
            regenerate_line(self._line(), "Dramatic", TOM_BOB_SCRIPT, provider)
        assert provider.prompts == []


class TestProviders:
    def test_replay_round_trip(self, tmp_path):
        provider = ReplayProvider(tmp_path)
        prompt = build_parse_prompt(TOM_BOB_SCRIPT)
        provider.record(prompt, json.dumps(TOM_BOB_RECORDS))
        assert json.loads(provider.complete(prompt)) == TOM_BOB_RECORDS

    def test_replay_missing_fixture_names_key(self, tmp_path):
        provider = ReplayProvider(tmp_path)
        with pytest.raises(ProviderUnavailable) as exc:
            provider.complete("never recorded")
        assert prompt_key("never recorded") in str(exc.value)

    def test_heuristic_provider_answers_all_three_prompt_shapes(self):
        provider = LocalHeuristicProvider()
        parse = extract_json_array(provider.complete(build_parse_prompt(TOM_BOB_SCRIPT)))
        assert [r["id"] for r in parse] == ["Tom", "Bob"]
        summary = extract_json_object(provider.complete(build_summary_prompt(TOM_BOB_SCRIPT)))
        assert set(summary) == {"title", "synopsis"}
        line_json = json.dumps(TOM_BOB_RECORDS[0])
        regen = extract_json_object(
            provider.complete(build_regen_prompt(line_json, "Sad", TOM_BOB_SCRIPT))
        )
        assert regen["style"] == "Sad"

    def test_remote_llm_chat_contract(self):
        def handler(request):
            body = json.loads(request.content)
            assert body["model"] == "m1"
            assert body["messages"][0]["role"] == "user"
            return httpx.Response(
                200, json={"choices": [{"message": {"content": "[1]"}}]}
            )

        client = httpx.Client(transport=httpx.MockTransport(handler), base_url="http://llm.test")
        provider = RemoteLLM("http://llm.test", "m1", "key", client=client)
        assert provider.complete("hi") == "[1]"

    def test_remote_llm_malformed_envelope(self):
        def handler(request):
            return httpx.Response(200, json={"nope": True})

        client = httpx.Client(transport=httpx.MockTransport(handler), base_url="http://llm.test")
        provider = RemoteLLM("http://llm.test", "m1", "key", client=client)
        with pytest.raises(UnparseableResponse):
            provider.complete("hi")
