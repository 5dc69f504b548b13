from .annotator import (
    annotate_script,
    extract_json_array,
    extract_json_object,
    regenerate_line,
    summarize_script,
    validate_records,
)
from .heuristics import fallback_annotate, fallback_records, fallback_summary
from .prompts import (
    SCRIPT_MARKER,
    build_parse_prompt,
    build_regen_prompt,
    build_summary_prompt,
)
from .providers import (
    LLMProvider,
    LocalHeuristicProvider,
    RemoteLLM,
    ReplayProvider,
    make_llm_provider,
    prompt_key,
)

__all__ = [
    "annotate_script",
    "extract_json_array",
    "extract_json_object",
    "regenerate_line",
    "summarize_script",
    "validate_records",
    "fallback_annotate",
    "fallback_records",
    "fallback_summary",
    "SCRIPT_MARKER",
    "build_parse_prompt",
    "build_regen_prompt",
    "build_summary_prompt",
    "LLMProvider",
    "LocalHeuristicProvider",
    "RemoteLLM",
    "ReplayProvider",
    "make_llm_provider",
    "prompt_key",
]
