#  hashtag_drift Copyright (c) 2024
#  See LICENCE in project root

"""Run and synth options.

Values resolve as command line flag > ``HASHDRIFT_<FIELD>`` environment variable > dataclass default. Defaults are
a 200-node window, tags valid after 5 posts, tags shorter than 3 characters dropped, yearly snapshots and top-5
reports.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field, fields
from datetime import timedelta
from typing import Optional, Tuple

from hashtag_drift.analytics import CADENCES
from hashtag_drift.graph import GraphConfig
from hashtag_drift.registry import BETWEENNESS_REGISTRY, EXPORTER_REGISTRY, READER_REGISTRY

logger = logging.getLogger(__name__)

__all__ = ["ENV_PREFIX", "ConfigError", "RunOptions", "SynthOptions", "env_default"]

ENV_PREFIX = "HASHDRIFT_"


class ConfigError(ValueError):
    pass


def _to_bool(value):
    if isinstance(value, bool):
        return value
    lowered = str(value).strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off", ""):
        return False
    raise ValueError("not a boolean: {!r}".format(value))


def _to_tuple(value):
    if isinstance(value, (list, tuple)):
        return tuple(value)
    return tuple(v.strip() for v in str(value).split(",") if v.strip())


def _to_optional_int(value):
    if value is None or str(value).strip().lower() in ("", "none"):
        return None
    return int(value)


_CASTS = {bool: _to_bool, int: int, float: float, str: str, "tuple": _to_tuple, "optional_int": _to_optional_int}


def env_default(name, default, cast=str, environ=None):
    """Value of ``HASHDRIFT_<NAME>`` cast with ``cast``, or ``default`` when unset

    Raises:
        ConfigError: If the variable is set but can't be cast
    """
    environ = os.environ if environ is None else environ
    key = ENV_PREFIX + name.upper()
    if key not in environ:
        return default
    try:
        value = _CASTS.get(cast, cast)(environ[key])
    except (TypeError, ValueError) as e:
        raise ConfigError("Invalid value for {}: {}".format(key, e))
    logger.debug("Using {}={!r} from the environment".format(key, value))
    return value


class _EnvOptions:
    """Mixin adding environment resolution to option dataclasses. Field metadata 'cast' names the parser."""
    @classmethod
    def from_env(cls, environ=None, **overrides):
        values = {}
        for f in fields(cls):
            default = f.default_factory() if callable(f.default_factory) else f.default
            cast = f.metadata.get("cast", f.type if f.type in ("int", "float", "bool", "str") else str)
            cast = {"int": int, "float": float, "bool": bool, "str": str}.get(cast, cast)
            values[f.name] = env_default(f.name, default, cast, environ)
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


@dataclass
class RunOptions(_EnvOptions):
    inputs: Tuple[str, ...] = field(default=("-",), metadata={"cast": "tuple"})
    format: Optional[str] = field(default=None, metadata={"cast": str})
    window_size: int = 200
    min_freq: int = 5
    min_len: int = 3
    query_tag: str = "mybodymychoice"
    cadence: str = "year"
    k: int = 5
    out: str = "out"
    exports: Tuple[str, ...] = field(default=(), metadata={"cast": "tuple"})
    literal_counting: bool = False
    pregraph_cap: int = 10000
    slack_hours: float = 24.0
    skip_retweets: bool = True
    betweenness: str = "brandes"
    max_levels: Optional[int] = field(default=None, metadata={"cast": "optional_int"})
    timestamp_field: str = "timestamp"
    text_field: str = "text"
    hashtags_field: str = "hashtags"
    retweet_field: str = "is_retweet"
    progress: bool = False

    def validate(self):
        for name in ("window_size", "min_freq", "min_len", "k", "pregraph_cap"):
            if getattr(self, name) < 1:
                raise ConfigError("{} must be >= 1, got {}".format(name, getattr(self, name)))
        if self.slack_hours < 0:
            raise ConfigError("slack_hours must be >= 0, got {}".format(self.slack_hours))
        if self.max_levels is not None and self.max_levels < 1:
            raise ConfigError("max_levels must be >= 1, got {}".format(self.max_levels))
        if self.cadence not in CADENCES:
            raise ConfigError("cadence must be one of {}, got '{}'".format(CADENCES, self.cadence))
        if self.format is not None and self.format not in READER_REGISTRY:
            raise ConfigError("format must be one of {}, got '{}'".format(READER_REGISTRY.available(), self.format))
        unknown = [e for e in self.exports if e not in EXPORTER_REGISTRY]
        if unknown:
            raise ConfigError("Unknown export format(s) {}; available: {}".format(
                ", ".join(unknown), EXPORTER_REGISTRY.available()))
        if self.betweenness not in BETWEENNESS_REGISTRY:
            raise ConfigError("betweenness must be one of {}, got '{}'".format(
                BETWEENNESS_REGISTRY.available(), self.betweenness))
        if not self.inputs:
            raise ConfigError("At least one input is required")
        return self

    def graph_config(self):
        return GraphConfig(window_size=self.window_size, min_freq=self.min_freq, pregraph_cap=self.pregraph_cap,
                           literal_counting=self.literal_counting)

    def reader_options(self):
        return dict(timestamp_field=self.timestamp_field, text_field=self.text_field,
                    hashtags_field=self.hashtags_field, retweet_field=self.retweet_field)

    @property
    def slack(self):
        return timedelta(hours=self.slack_hours)


@dataclass
class SynthOptions(_EnvOptions):
    seed: int = 42
    posts: int = 1000
    phases: int = 2
    pools: int = 3
    pool_size: int = 6
    min_tags: int = 2
    max_tags: int = 4
    intensity: float = 0.9
    start: str = "2018-02-11T00:00:00Z"
    step: int = 600
    query_tag: str = "MyBodyMyChoice"
    output: str = "-"

    def validate(self):
        if self.posts < 0:
            raise ConfigError("posts must be >= 0, got {}".format(self.posts))
        for name in ("phases", "pools", "pool_size", "min_tags"):
            if getattr(self, name) < 1:
                raise ConfigError("{} must be >= 1, got {}".format(name, getattr(self, name)))
        if self.max_tags < self.min_tags:
            raise ConfigError("max_tags ({}) must be >= min_tags ({})".format(self.max_tags, self.min_tags))
        if not 0.0 <= self.intensity <= 1.0:
            raise ConfigError("intensity must be within [0, 1], got {}".format(self.intensity))
        if self.step < 0:
            raise ConfigError("step must be >= 0, got {}".format(self.step))
        return self
