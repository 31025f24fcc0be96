"""Reproducible file output: canonical JSON payloads and annotated CSV.

Every payload embeds the tool version, the full configuration and a hash
over the deterministic part of the content, so a reader can verify that a
rerun with the same configuration reproduces the file byte for byte apart
from the timestamp.
"""

from __future__ import annotations

import csv
import datetime
import hashlib
import json
import math
from pathlib import Path
from typing import Iterable, Sequence

from . import __version__

__all__ = ["build_payload", "canonical_json", "write_csv", "write_json"]


def _sanitize(obj):
    """Make a structure JSON-strict: non-finite floats become None."""
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    if isinstance(obj, dict):
        return {k: _sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_sanitize(v) for v in obj]
    return obj


def canonical_json(obj) -> str:
    return json.dumps(_sanitize(obj), sort_keys=True, separators=(",", ":"))


def build_payload(subcommand: str, config: dict, result: dict) -> dict:
    core = {
        "tool": "driftlab",
        "version": __version__,
        "subcommand": subcommand,
        "config": _sanitize(config),
        "result": _sanitize(result),
    }
    digest = hashlib.sha256(canonical_json(core).encode()).hexdigest()
    core["payload_sha256"] = digest
    core["generated_at"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
    return core


def write_json(path: str | Path, payload: dict) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(_sanitize(payload), indent=2, sort_keys=True) + "\n")
    return path


def write_csv(
    path: str | Path,
    schema: str,
    config: dict,
    columns: Sequence[str],
    rows: Iterable[Sequence],
) -> Path:
    """CSV with provenance comment lines, readable by comment-aware loaders."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        fh.write(f"# driftlab {__version__}\n")
        fh.write(f"# schema: {schema}\n")
        fh.write(f"# config: {canonical_json(config)}\n")
        writer = csv.writer(fh)
        writer.writerow(columns)
        writer.writerows(rows)
    return path
