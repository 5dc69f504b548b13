"""Exception hierarchy shared across the pipeline."""

from __future__ import annotations


class ScenesmithError(Exception):
    """Base class for every error raised by this package."""

    code = "internal"


# --- script parsing / line validation -----------------------------------

class NoDialogueFound(ScenesmithError):
    code = "no_dialogue_found"


class LineValidationError(ScenesmithError):
    """Aggregates every violation found while validating one line record."""

    code = "invalid_line"

    def __init__(self, violations: list["LineValidationError"]):
        self.violations = violations
        super().__init__("; ".join(str(v) for v in violations))


class MissingField(LineValidationError):
    code = "missing_field"

    def __init__(self, name: str):
        self.name = name
        self.violations = [self]
        Exception.__init__(self, f"missing field {name!r}")


class EmptyField(LineValidationError):
    code = "empty_field"

    def __init__(self, name: str):
        self.name = name
        self.violations = [self]
        Exception.__init__(self, f"field {name!r} must be a non-empty string")


class UnknownStyle(LineValidationError):
    code = "unknown_style"

    def __init__(self, value: object):
        self.value = value
        self.violations = [self]
        Exception.__init__(self, f"unknown gesture style {value!r}")


class UnknownShot(LineValidationError):
    code = "unknown_shot"

    def __init__(self, value: object):
        self.value = value
        self.violations = [self]
        Exception.__init__(self, f"unknown shot type {value!r}")


class UnknownAngle(LineValidationError):
    code = "unknown_angle"

    def __init__(self, value: object):
        self.value = value
        self.violations = [self]
        Exception.__init__(self, f"unknown shot angle {value!r}")


# --- providers ------------------------------------------------------------

class ProviderTimeout(ScenesmithError):
    code = "provider_timeout"


class ProviderUnavailable(ScenesmithError):
    code = "provider_unavailable"

    def __init__(self, message: str, status: int | None = None):
        self.status = status
        super().__init__(message)


class UnparseableResponse(ScenesmithError):
    code = "unparseable_response"


# --- speech ---------------------------------------------------------------

class EmptySpeech(ScenesmithError):
    code = "empty_speech"


class BatchEmpty(ScenesmithError):
    code = "batch_empty"


# --- motion ---------------------------------------------------------------

class ClipTooShort(ScenesmithError):
    code = "clip_too_short"


class AdapterUnavailable(ScenesmithError):
    code = "adapter_unavailable"


class AdapterOutputInvalid(ScenesmithError):
    code = "adapter_output_invalid"


# --- BVH / kinematics -------------------------------------------------------

class BvhError(ScenesmithError):
    code = "bvh_error"


class BvhSyntaxError(BvhError):
    code = "bvh_syntax"

    def __init__(self, line: int, expected: str):
        self.line = line
        self.expected = expected
        super().__init__(f"line {line}: expected {expected}")


class ChannelCountMismatch(BvhError):
    code = "channel_count_mismatch"


class FrameCountMismatch(BvhError):
    code = "frame_count_mismatch"


class EmptyClip(BvhError):
    code = "empty_clip"


class MapInvalid(ScenesmithError):
    code = "map_invalid"


class DegenerateBone(ScenesmithError):
    code = "degenerate_bone"


class IndexOutOfRange(ScenesmithError, IndexError):
    code = "index_out_of_range"


# --- camera -----------------------------------------------------------------

class SubjectsCoincident(ScenesmithError):
    code = "subjects_coincident"


# --- service ------------------------------------------------------------------

class SceneNotFound(ScenesmithError):
    code = "scene_not_found"


class JobNotFound(ScenesmithError):
    code = "job_not_found"


class AssetNotFound(ScenesmithError):
    code = "asset_not_found"


class CastIncomplete(ScenesmithError):
    code = "cast_incomplete"


class SceneBusy(ScenesmithError):
    code = "scene_busy"


class UnknownCharacter(ScenesmithError):
    code = "unknown_character"
