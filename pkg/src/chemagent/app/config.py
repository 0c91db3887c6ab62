"""Application configuration with flags > environment > config file
precedence.  The config file is plain ``key = value`` lines (# comments);
keys match the field names below.  Environment variables use the
``CHEMAGENT_`` prefix with the upper-cased field name."""

from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from ..agent import AgentConfig, BackendConfig, make_template
from ..assets import resolve_asset

ENV_PREFIX = "CHEMAGENT_"

REQUIRED_ASSETS = (
    "periodic_table.tsv",
    "crippen.tsv",
    "tpsa.tsv",
    "qed_params.tsv",
    "sa_params.tsv",
    "egg.tsv",
    "brenk.smarts",
    "pains.smarts",
    "molecules.txt",
    "prompts/minimal.txt",
    "prompts/domain.txt",
    "prompts/model_tokens.tsv",
)


@dataclass(frozen=True)
class AppConfig:
    backend_kind: str = "rule_oracle"
    endpoint_url: Optional[str] = None
    model_id: Optional[str] = None
    api_flavor: str = "completions"
    temperature: float = 0.0
    max_tokens: int = 256
    timeout: float = 60.0
    retry_count: int = 2
    prompt_strategy: str = "domain"
    model_family: str = "default"
    max_steps: int = 5
    parse_retry_limit: int = 2
    data_dir: Optional[str] = None
    listen_address: str = "127.0.0.1:8000"
    log_level: str = "INFO"

    def backend_config(self) -> BackendConfig:
        return BackendConfig(
            kind=self.backend_kind,
            endpoint_url=self.endpoint_url,
            model_id=self.model_id,
            temperature=self.temperature,
            max_tokens=self.max_tokens,
            timeout=self.timeout,
            retry_count=self.retry_count,
            api_flavor=self.api_flavor,
        )

    def agent_config(self, prompt_strategy: Optional[str] = None) -> AgentConfig:
        strategy = prompt_strategy or self.prompt_strategy
        return AgentConfig(
            max_steps=self.max_steps,
            parse_retry_limit=self.parse_retry_limit,
            prompt=make_template(strategy, self.model_family, self.data_dir),
            backend=self.backend_config(),
            data_dir=self.data_dir,
        )


_FIELD_TYPES = {f.name: f.type for f in dataclasses.fields(AppConfig)}


def _coerce(name: str, raw: str):
    if raw == "":
        return None
    kind = _FIELD_TYPES[name]
    if "int" in str(kind):
        return int(raw)
    if "float" in str(kind):
        return float(raw)
    return raw


def read_config_file(path: str | Path) -> dict:
    values = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _FIELD_TYPES:
            raise ValueError(f"{path}:{lineno}: unknown configuration key {key!r}")
        values[key] = _coerce(key, value.strip())
    return values


def env_values(environ=None) -> dict:
    environ = environ if environ is not None else os.environ
    values = {}
    for name in _FIELD_TYPES:
        raw = environ.get(ENV_PREFIX + name.upper())
        if raw is not None:
            values[name] = _coerce(name, raw)
    return values


def load_config(
    config_file: str | None = None,
    overrides: dict | None = None,
    environ=None,
) -> AppConfig:
    """Assemble configuration: file first, environment on top, flags last."""
    values: dict = {}
    if config_file:
        values.update(read_config_file(config_file))
    values.update(env_values(environ))
    for key, value in (overrides or {}).items():
        if value is not None:
            values[key] = value
    config = AppConfig(**values)
    validate_data_dir(config.data_dir)
    return config


def validate_data_dir(data_dir: str | None) -> None:
    """Every descriptor asset must be resolvable (override or packaged)."""
    for asset in REQUIRED_ASSETS:
        resolve_asset(asset, data_dir)
