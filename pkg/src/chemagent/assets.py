"""Location helpers for the packaged data assets.

Every table the kernel and descriptor layers need (element masses, atom-type
contributions, alert pattern sets, prompt texts, the benchmark molecule list)
ships as a plain text file under ``chemagent/data``.  A different directory can
be supplied to the loaders for experimentation; files missing from an override
directory fall back to the packaged copy.
"""

from __future__ import annotations

import os
from importlib import resources
from pathlib import Path


def default_data_dir() -> Path:
    """Directory holding the packaged data assets."""
    return Path(str(resources.files("chemagent").joinpath("data")))


def resolve_asset(name: str, data_dir: str | os.PathLike | None = None) -> Path:
    """Find ``name`` in ``data_dir`` (if given) or the packaged assets.

    Raises FileNotFoundError if the asset exists in neither place.
    """
    if data_dir is not None:
        candidate = Path(data_dir) / name
        if candidate.exists():
            return candidate
    packaged = default_data_dir() / name
    if packaged.exists():
        return packaged
    raise FileNotFoundError(f"data asset {name!r} not found (searched {data_dir!r} and packaged data)")


def read_table(path: Path, columns: int, sep: str = "\t") -> list[list[str]]:
    """Read a tab-separated asset, skipping blank lines and # comments.

    Rows shorter than ``columns`` are padded with empty strings so optional
    trailing fields can be omitted.
    """
    rows = []
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split(sep)
        if len(parts) > columns:
            raise ValueError(f"{path.name}:{lineno}: expected at most {columns} columns, got {len(parts)}")
        parts += [""] * (columns - len(parts))
        rows.append(parts)
    return rows
