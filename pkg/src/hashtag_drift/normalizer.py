#  hashtag_drift Copyright (c) 2024
#  See LICENCE in project root

"""Hashtag extraction and normalisation.

Turns raw post text (or tags already pulled out of a post object) into the canonical, deduplicated hashtag list
consumed by the windowed graph. All functions here are pure.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from datetime import datetime
from typing import Iterable, List, Optional

__all__ = ["PostRecord", "extract_raw_hashtags", "normalize", "prepare_post", "strip_links", "DEFAULT_MIN_LEN"]

DEFAULT_MIN_LEN = 3

# Only the last '#' of a run starts a tag, so "##double" yields "#double"
_HASHTAG_RE = re.compile(r"#\w+", re.UNICODE)
_LINK_RE = re.compile(r"(?:https?://|www\.)\S+", re.IGNORECASE)
_REJECTED_RE = re.compile(r"[^a-z0-9_]")


@dataclass(frozen=True)
class PostRecord:
    """A single stream element: when it was posted and the canonical tags it carries.

    Args:
        timestamp (datetime): UTC instant of the post
        hashtags (tuple): Normalised hashtags, deduplicated, in order of first appearance, never the query tag
    """
    timestamp: datetime
    hashtags: tuple = field(default_factory=tuple)


def strip_links(text):
    """Remove URLs so anchors such as ``https://x.org/#top`` are not mistaken for hashtags"""
    return _LINK_RE.sub(" ", text)


def extract_raw_hashtags(text: str) -> List[str]:
    """Return every '#' token followed by word characters, in order of appearance.

    Examples:
        >>> extract_raw_hashtags("Go #Vote! see #2024now")
        ['#Vote', '#2024now']
    """
    if not text:
        return []
    return _HASHTAG_RE.findall(text)


def normalize(raw: str, min_len: int = DEFAULT_MIN_LEN) -> Optional[str]:
    """Canonical form of a raw tag: no leading '#', lowercase, only [a-z0-9_].

    Args:
        raw (str): Tag as it appeared in the post
        min_len (int): Shortest accepted result

    Returns:
        str or None: None when the cleaned tag is shorter than min_len
    """
    if min_len < 1:
        raise ValueError("min_len must be >= 1, got {}".format(min_len))
    value = _REJECTED_RE.sub("", raw.lstrip("#").lower())
    if len(value) < min_len:
        return None
    return value


def prepare_post(timestamp: datetime, raw_tags: Iterable[str], query_tag: Optional[str],
                 min_len: int = DEFAULT_MIN_LEN) -> PostRecord:
    """Normalise, drop rejects and the query tag, and deduplicate keeping the first occurrence."""
    seen = set()
    hashtags = []
    for raw in raw_tags:
        tag = normalize(raw, min_len)
        if tag is None or tag == query_tag or tag in seen:
            continue
        seen.add(tag)
        hashtags.append(tag)
    return PostRecord(timestamp=timestamp, hashtags=tuple(hashtags))
