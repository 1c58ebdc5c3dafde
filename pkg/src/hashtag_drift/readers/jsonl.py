#  hashtag_drift Copyright (c) 2024
#  See LICENCE in project root

from __future__ import annotations

import json

from hashtag_drift.readers.default import BaseRecordReader, RecordError
from hashtag_drift.registry import READER_REGISTRY


@READER_REGISTRY.register("jsonl")
class JsonLinesReader(BaseRecordReader):
    """One JSON object per line.

    Examples:
        {"timestamp": "2018-02-11T00:00:00Z", "hashtags": ["#ProChoice"]}
        {"timestamp": 1518307200, "text": "hi #a #LongTag", "is_retweet": false}
    """
    def parse(self, line, line_number=0):
        try:
            fields = json.loads(line)
        except ValueError as e:
            raise RecordError(line_number, "invalid JSON ({})".format(e))
        if not isinstance(fields, dict):
            raise RecordError(line_number, "expected a JSON object")
        return self._build(fields, line_number)
