#  hashtag_drift Copyright (c) 2024
#  See LICENCE in project root

from __future__ import annotations

import logging
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Optional, Tuple

from hashtag_drift.normalizer import extract_raw_hashtags, strip_links

logger = logging.getLogger(__name__)

__all__ = ["StreamRecord", "RecordError", "BaseRecordReader", "parse_timestamp"]


class RecordError(ValueError):
    """A line that could not be turned into a StreamRecord. The run skips it and carries on."""
    def __init__(self, line_number, reason):
        ValueError.__init__(self, "line {}: {}".format(line_number, reason))
        self.line_number = line_number
        self.reason = reason


@dataclass(frozen=True)
class StreamRecord:
    """One collected post: a timestamp and either its text or its already extracted tags"""
    timestamp: datetime
    text: Optional[str] = None
    hashtags: Optional[Tuple[str, ...]] = None
    is_retweet: bool = False
    line_number: int = 0

    def raw_tags(self):
        if self.hashtags is not None:
            return list(self.hashtags)
        return extract_raw_hashtags(strip_links(self.text))


def parse_timestamp(value) -> datetime:
    """ISO-8601 string (a trailing 'Z' is accepted) or epoch seconds, returned as an aware UTC datetime.

    Naive ISO timestamps are taken to be UTC.
    """
    if isinstance(value, bool):
        raise ValueError("Boolean is not a timestamp")
    if isinstance(value, (int, float)):
        return datetime.fromtimestamp(value, tz=timezone.utc)
    if not isinstance(value, str) or not value.strip():
        raise ValueError("Missing timestamp")
    text = value.strip()
    try:
        return datetime.fromtimestamp(float(text), tz=timezone.utc)
    except ValueError:
        pass
    if text.endswith(("Z", "z")):
        text = text[:-1] + "+00:00"
    ts = datetime.fromisoformat(text)
    if ts.tzinfo is None:
        return ts.replace(tzinfo=timezone.utc)
    return ts.astimezone(timezone.utc)


def _as_bool(value):
    if isinstance(value, str):
        return value.strip().lower() in ("1", "true", "yes", "y", "t")
    return bool(value)


class BaseRecordReader:
    """Base for all record readers. Internal use only.

    Readers turn lines of a source into StreamRecord objects. The field names are configurable so differently shaped
        exports of collected posts can be replayed without conversion.

    The .parse() method must be overridden; it receives a single non-blank line and returns a StreamRecord or raises
        RecordError. .read() drives parse over a whole source and yields errors instead of raising them.

    Args:
        timestamp_field (str): Name of the timestamp field
        text_field (str): Name of the post text field
        hashtags_field (str): Name of the pre-extracted hashtags field
        retweet_field (str): Name of the boolean retweet marker field
    """
    def __init__(self, timestamp_field="timestamp", text_field="text", hashtags_field="hashtags",
                 retweet_field="is_retweet"):
        self.timestamp_field = timestamp_field
        self.text_field = text_field
        self.hashtags_field = hashtags_field
        self.retweet_field = retweet_field

    def parse(self, line, line_number=0):
        raise NotImplementedError("This is the base record reader intended for internal use only.")

    def read(self, lines):
        """Yield a StreamRecord or a RecordError for every non-blank line, in order"""
        for line_number, line in enumerate(lines, 1):
            if not line.strip():
                continue
            try:
                self._check_decoded(line, line_number)
                yield self.parse(line, line_number)
            except RecordError as e:
                yield e

    @staticmethod
    def _check_decoded(line, line_number):
        # Sources are opened with surrogateescape, so undecodable bytes surface here as lone surrogates
        try:
            line.encode("utf-8")
        except UnicodeEncodeError:
            raise RecordError(line_number, "invalid UTF-8")

    def _build(self, fields, line_number):
        if self.timestamp_field not in fields:
            raise RecordError(line_number, "no '{}' field".format(self.timestamp_field))
        try:
            timestamp = parse_timestamp(fields[self.timestamp_field])
        except (ValueError, TypeError, OverflowError, OSError) as e:
            raise RecordError(line_number, "bad timestamp {!r} ({})".format(fields[self.timestamp_field], e))

        text = fields.get(self.text_field)
        hashtags = fields.get(self.hashtags_field)
        if (text is None) == (hashtags is None):
            raise RecordError(line_number, "exactly one of '{}' and '{}' is required".format(
                self.text_field, self.hashtags_field))
        if text is not None and not isinstance(text, str):
            raise RecordError(line_number, "'{}' must be a string".format(self.text_field))
        if hashtags is not None:
            if not isinstance(hashtags, (list, tuple)) or not all(isinstance(h, str) for h in hashtags):
                raise RecordError(line_number, "'{}' must be a list of strings".format(self.hashtags_field))
            hashtags = tuple(hashtags)

        is_retweet = _as_bool(fields.get(self.retweet_field, False))
        if text is not None and text.startswith("RT @"):
            is_retweet = True
        return StreamRecord(timestamp=timestamp, text=text, hashtags=hashtags, is_retweet=is_retweet,
                            line_number=line_number)
