"""Command-line access to every pipeline stage, plus the service launcher."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .backends import BackendError, generate_audio
from .color_mood import Rgb, classify_color, gradient_mood, mood_word
from .config import ConfigError, load_config
from .content_model import (ContentError, LevelSpec, VehicleSpec, loads,
                            validate_level, validate_vehicle)
from .prompt_synthesis import (PromptError, PromptKind, caption_prompt,
                               music_prompt, sfx_prompt)
from .sim import simulate as run_simulation
from .sim import trace_checksum
from .terrain import generate_terrain
from .wav import encode_wav


def _fail(message: str, code: int = 2):
    click.echo(message, err=True)
    sys.exit(code)


def _load_doc(path: str, want):
    try:
        doc = loads(Path(path).read_text())
    except (OSError, ContentError) as exc:
        _fail(f"error: {exc}")
    if not isinstance(doc, want):
        _fail(f"error: {path} is not a {want.__name__} document")
    return doc


@click.group()
@click.option("--config", "config_path", type=click.Path(exists=True),
              default=None, help="TOML or JSON config file.")
@click.pass_context
def main(ctx, config_path):
    """Generative-audio tooling for user-built levels and vehicles."""
    try:
        ctx.obj = load_config(config_path)
    except ConfigError as exc:
        _fail(f"error: {exc}")


@main.command("classify-color")
@click.argument("r", type=click.IntRange(0, 255))
@click.argument("g", type=click.IntRange(0, 255))
@click.argument("b", type=click.IntRange(0, 255))
@click.option("--json", "as_json", is_flag=True)
@click.pass_obj
def classify_color_cmd(cfg, r, g, b, as_json):
    """Name the closest catalog color and its mood word."""
    named = classify_color(Rgb(r, g, b), cfg.color_table)
    mood = mood_word(named, cfg.color_table)
    if as_json:
        click.echo(json.dumps({"color": named.value, "mood": mood}))
    else:
        click.echo(f"{named.value} {mood}")


@main.command("mood")
@click.option("--level", "level_path", required=True, type=click.Path(exists=True))
@click.option("--json", "as_json", is_flag=True)
@click.pass_obj
def mood_cmd(cfg, level_path, as_json):
    """Mood phrase for a level's background gradient."""
    level = _load_doc(level_path, LevelSpec)
    phrase = gradient_mood(level.gradient, cfg.color_table)
    click.echo(json.dumps({"mood": phrase}) if as_json else phrase)


@main.group("prompt")
def prompt_group():
    """Synthesize generation prompts."""


@prompt_group.command("music")
@click.option("--level", "level_path", required=True, type=click.Path(exists=True))
@click.option("--from-caption", "caption_path", type=click.Path(exists=True))
@click.option("--json", "as_json", is_flag=True)
@click.pass_obj
def prompt_music_cmd(cfg, level_path, caption_path, as_json):
    level = _load_doc(level_path, LevelSpec)
    report = validate_level(level)
    if not report.ok:
        _fail("error: " + "; ".join(report.violations))
    try:
        if caption_path:
            spec = caption_prompt(Path(caption_path).read_text(), PromptKind.MUSIC)
        else:
            mood = gradient_mood(level.gradient, cfg.color_table)
            spec = (music_prompt(mood, template=cfg.music_template)
                    if cfg.music_template else music_prompt(mood))
    except PromptError as exc:
        _fail(f"error: {exc}")
    click.echo(json.dumps(spec.to_dict()) if as_json else spec.text)


@prompt_group.command("sfx")
@click.option("--vehicle", "vehicle_path", required=True, type=click.Path(exists=True))
@click.option("--from-caption", "caption_path", type=click.Path(exists=True))
@click.option("--json", "as_json", is_flag=True)
@click.pass_obj
def prompt_sfx_cmd(cfg, vehicle_path, caption_path, as_json):
    vehicle = _load_doc(vehicle_path, VehicleSpec)
    report = validate_vehicle(vehicle, cfg.catalog)
    if not report.ok:
        _fail("error: " + "; ".join(report.violations))
    try:
        if caption_path:
            spec = caption_prompt(Path(caption_path).read_text(), PromptKind.SFX)
        else:
            spec = sfx_prompt(vehicle, cfg.catalog, cfg.light_max_kg,
                              cfg.medium_max_kg)
    except PromptError as exc:
        _fail(f"error: {exc}")
    click.echo(json.dumps(spec.to_dict()) if as_json else spec.text)


@main.command("simulate")
@click.option("--vehicle", "vehicle_path", required=True, type=click.Path(exists=True))
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--trace", "trace_path", type=click.Path(), default=None,
              help="Write the full trace as JSON.")
@click.option("--report", "report_dir", type=click.Path(), default=None,
              help="Render trace.csv and figures into this directory.")
@click.option("--json", "as_json", is_flag=True)
@click.pass_obj
def simulate_cmd(cfg, vehicle_path, seed, trace_path, report_dir, as_json):
    """Run the terrain-crossing test; exit 0 finished, 1 stuck, 2 timeout."""
    vehicle = _load_doc(vehicle_path, VehicleSpec)
    terrain = generate_terrain(seed)
    trace, outcome = run_simulation(vehicle, terrain, cfg.sim, cfg.catalog)
    if trace_path:
        Path(trace_path).write_text(json.dumps(trace.to_dict()))
    if report_dir:
        from .report import render_run_report
        render_run_report(trace, outcome, terrain, report_dir)
    if as_json:
        click.echo(json.dumps({"outcome": outcome.to_dict(),
                               "trace_checksum": trace_checksum(trace)}))
    elif outcome.verdict == "finished":
        click.echo(f"FINISHED t={outcome.t_s:.3f}")
    elif outcome.verdict == "stuck":
        click.echo(f"STUCK t={outcome.t_s:.3f}")
    else:
        click.echo("TIMEOUT")
    sys.exit({"finished": 0, "stuck": 1, "timeout": 2}[outcome.verdict])


@main.command("generate")
@click.option("--prompt", "prompt_text", required=True)
@click.option("--kind", type=click.Choice(["music", "sfx"]), required=True)
@click.option("--duration", type=float, default=None)
@click.option("--seed", type=int, default=None)
@click.option("--out", "out_path", required=True, type=click.Path())
@click.option("--json", "as_json", is_flag=True)
@click.pass_obj
def generate_cmd(cfg, prompt_text, kind, duration, seed, out_path, as_json):
    """Generate a clip for an explicit prompt and write it as WAV."""
    try:
        spec = caption_prompt(prompt_text, PromptKind(kind))
        if duration is not None:
            from .prompt_synthesis import PromptSpec
            spec = PromptSpec(text=spec.text, kind=spec.kind, duration_s=duration,
                              sample_rate_hz=spec.sample_rate_hz, source=spec.source)
    except PromptError as exc:
        _fail(f"error: {exc}")
    backend = cfg.music_backend if spec.kind is PromptKind.MUSIC else cfg.sfx_backend
    try:
        clip = generate_audio(spec, backend, seed=seed)
    except BackendError as exc:
        _fail(f"error: {exc}")
    Path(out_path).write_bytes(encode_wav(clip))
    if as_json:
        click.echo(json.dumps({"out": out_path, "duration_s": clip.duration_s,
                               "sample_rate_hz": clip.sample_rate_hz}))
    else:
        click.echo(f"wrote {out_path} ({clip.duration_s:.3f}s @ {clip.sample_rate_hz} Hz)")


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--static", "static_dir", type=click.Path(), default=None,
              help="Directory with the web UI bundle to serve at /.")
@click.pass_obj
def serve_cmd(cfg, host, port, static_dir):
    """Run the HTTP service."""
    import uvicorn

    from .service_api import create_app
    app = create_app(cfg, static_dir=static_dir)
    uvicorn.run(app, host=host, port=port)


@main.command("openapi")
@click.option("--out", "out_path", type=click.Path(), default="docs/api.yaml",
              show_default=True)
@click.pass_obj
def openapi_cmd(cfg, out_path):
    """Write the OpenAPI document for the REST surface."""
    import tempfile

    import yaml

    from .service_api import create_app
    with tempfile.TemporaryDirectory() as tmp:  # no data dir side effects
        cfg.data_dir = tmp
        app = create_app(cfg)
        app.state.orchestrator.shutdown()
    Path(out_path).parent.mkdir(parents=True, exist_ok=True)
    Path(out_path).write_text(yaml.safe_dump(app.openapi(), sort_keys=False))
    click.echo(f"wrote {out_path}")


if __name__ == "__main__":
    main()
