import threading
import time

import pytest

from ugc_audio.backends import (BackendDescriptor, BackendError, BackendKind,
                                BackendMode, generate_audio)
from ugc_audio.orchestrator import Orchestrator, UnknownIdError, cache_key
from ugc_audio.prompt_synthesis import (PromptKind, PromptSource, PromptSpec,
                                        music_prompt, caption_prompt)
from ugc_audio.wav import decode_wav

MOCK_MUSIC = BackendDescriptor(kind=BackendKind.MUSIC_GEN, mode=BackendMode.MOCK)
MOCK_SFX = BackendDescriptor(kind=BackendKind.SFX_GEN, mode=BackendMode.MOCK)


class CountingGenerator:
    def __init__(self, fail=False, delay_s=0.0):
        self.calls = 0
        self.in_flight = 0
        self.high_water = 0
        self.fail = fail
        self.delay_s = delay_s
        self._lock = threading.Lock()

    def __call__(self, prompt, backend, seed=None, melody_wav=None):
        with self._lock:
            self.calls += 1
            self.in_flight += 1
            self.high_water = max(self.high_water, self.in_flight)
        try:
            if self.delay_s:
                time.sleep(self.delay_s)
            if self.fail:
                raise BackendError(backend.kind, "synthetic failure")
            return generate_audio(prompt, backend, seed=seed)
        finally:
            with self._lock:
                self.in_flight -= 1


@pytest.fixture
def orch_factory(tmp_path):
    created = []

    def make(generator=None, **kwargs):
        orch = Orchestrator(tmp_path, MOCK_MUSIC, MOCK_SFX,
                            generator=generator or generate_audio, **kwargs)
        created.append(orch)
        return orch

    yield make
    for o in created:
        o.shutdown()


def test_cache_key_deterministic_and_sensitive():
    p = music_prompt("peaceful")
    assert cache_key(p) == cache_key(music_prompt("peaceful"))
    assert cache_key(p) != cache_key(music_prompt("intense"))
    assert cache_key(p, seed=1) != cache_key(p)
    short = PromptSpec(text=p.text, kind=p.kind, duration_s=5.0,
                       sample_rate_hz=p.sample_rate_hz, source=p.source)
    assert cache_key(short) != cache_key(p)


def test_cache_key_golden():
    from pathlib import Path
    expected = (Path(__file__).parent / "golden" /
                "cache_key_music_peaceful.sha256").read_text().strip()
    assert cache_key(music_prompt("peaceful")) == expected


def test_submit_generates_and_caches(orch_factory):
    gen = CountingGenerator()
    orch = orch_factory(gen)
    job = orch.wait(orch.submit(music_prompt("peaceful")).id)
    assert job.status == "done"
    assert gen.calls == 1

    asset, data = orch.get_asset(job.asset_id)
    clip = decode_wav(data)
    assert len(clip.samples) == 256000
    assert asset.id == cache_key(music_prompt("peaceful"))

    # identical prompt: served from cache with zero further backend calls
    second = orch.submit(music_prompt("peaceful"))
    assert second.status == "done"
    assert second.asset_id == job.asset_id
    assert gen.calls == 1


def test_failed_backend_no_asset(orch_factory, tmp_path):
    gen = CountingGenerator(fail=True)
    orch = orch_factory(gen)
    job = orch.wait(orch.submit(music_prompt("peaceful")).id)
    assert job.status == "failed"
    assert "synthetic failure" in job.failure_reason
    assert job.asset_id is None
    assert not list((tmp_path / "assets").glob("*.wav"))
    # failures never populate the cache: retrying calls the backend again
    orch.wait(orch.submit(music_prompt("peaceful")).id)
    assert gen.calls == 2


def test_unknown_ids(orch_factory):
    orch = orch_factory()
    with pytest.raises(UnknownIdError):
        orch.job_status("nope")
    with pytest.raises(UnknownIdError):
        orch.get_asset("nope")


def test_done_always_preceded_by_running(orch_factory):
    orch = orch_factory(CountingGenerator())
    job = orch.wait(orch.submit(music_prompt("lively")).id)
    assert job.history.index("running") < job.history.index("done")


def test_concurrency_bound(orch_factory):
    gen = CountingGenerator(delay_s=0.05)
    orch = orch_factory(gen, max_concurrent_jobs=2)
    jobs = [orch.submit(music_prompt(f"mood{i}")) for i in range(6)]
    for j in jobs:
        orch.wait(j.id)
    assert gen.calls == 6
    assert gen.high_water <= 2


def test_asset_filename_matches_recomputed_key(orch_factory, tmp_path):
    orch = orch_factory()
    prompt = caption_prompt("vehicle on gravel", PromptKind.SFX)
    job = orch.wait(orch.submit(prompt).id)
    asset, _ = orch.get_asset(job.asset_id)
    recomputed = cache_key(PromptSpec(
        text=asset.prompt_text, kind=PromptKind.SFX,
        duration_s=asset.duration_s, sample_rate_hz=asset.sample_rate_hz,
        source=PromptSource.CAPTION))
    assert (tmp_path / asset.wav_path).stem == recomputed


def test_restart_reloads_index(orch_factory, tmp_path):
    orch = orch_factory()
    job = orch.wait(orch.submit(music_prompt("peaceful")).id)
    orch.shutdown()

    gen = CountingGenerator()
    reloaded = orch_factory(gen)
    second = reloaded.submit(music_prompt("peaceful"))
    assert second.status == "done"
    assert second.asset_id == job.asset_id
    assert gen.calls == 0


def test_restart_ignores_missing_files(orch_factory, tmp_path):
    orch = orch_factory()
    job = orch.wait(orch.submit(music_prompt("peaceful")).id)
    asset, _ = orch.get_asset(job.asset_id)
    orch.shutdown()
    (tmp_path / asset.wav_path).unlink()

    gen = CountingGenerator()
    reloaded = orch_factory(gen)
    refreshed = reloaded.wait(reloaded.submit(music_prompt("peaceful")).id)
    assert refreshed.status == "done"
    assert gen.calls == 1


def test_no_partial_wav_visible_on_failure(orch_factory, tmp_path):
    orch = orch_factory(CountingGenerator(fail=True))
    orch.wait(orch.submit(music_prompt("peaceful")).id)
    leftovers = list((tmp_path / "assets").iterdir())
    assert leftovers == []
