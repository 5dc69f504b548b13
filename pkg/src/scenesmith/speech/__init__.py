from .audio import SAMPLE_RATE, AudioClip, read_wav, read_wav_bytes, write_wav, write_wav_bytes
from .batch import BatchItemError, BatchResult, synthesize_batch
from .offline import duration_samples, synthesize_offline, voice_frequency
from .providers import OFFLINE_VOICES, OfflineTTS, RemoteTTS, TTSProvider, Voice, make_tts_provider

__all__ = [
    "SAMPLE_RATE",
    "AudioClip",
    "read_wav",
    "read_wav_bytes",
    "write_wav",
    "write_wav_bytes",
    "BatchItemError",
    "BatchResult",
    "synthesize_batch",
    "duration_samples",
    "synthesize_offline",
    "voice_frequency",
    "OFFLINE_VOICES",
    "OfflineTTS",
    "RemoteTTS",
    "TTSProvider",
    "Voice",
    "make_tts_provider",
]
