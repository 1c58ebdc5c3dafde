#  hashtag_drift Copyright (c) 2024
#  See LICENCE in project root

from __future__ import annotations

import csv

from hashtag_drift.readers.default import BaseRecordReader, RecordError
from hashtag_drift.registry import READER_REGISTRY


@READER_REGISTRY.register("csv")
class CsvReader(BaseRecordReader):
    """Comma separated rows under a header line, tags joined with ``tag_separator``.

    The first non-blank line is the header; columns are matched to fields by name, so extra columns are ignored and
        column order is free. A row carries text when the header has the text column and no hashtags column.

    Examples:
        timestamp,hashtags
        2018-02-11T00:00:00Z,#ProChoice;#MeToo
    """
    def __init__(self, timestamp_field="timestamp", text_field="text", hashtags_field="hashtags",
                 retweet_field="is_retweet", tag_separator=";"):
        BaseRecordReader.__init__(self, timestamp_field, text_field, hashtags_field, retweet_field)
        self.tag_separator = tag_separator
        self._columns = None

    def read(self, lines):
        self._columns = None
        for line_number, line in enumerate(lines, 1):
            if not line.strip():
                continue
            if self._columns is None:
                self._columns = self._parse_header(line)
                continue
            try:
                self._check_decoded(line, line_number)
                yield self.parse(line, line_number)
            except RecordError as e:
                yield e

    def _parse_header(self, line):
        return [c.strip() for c in next(csv.reader([line]))]

    def parse(self, line, line_number=0):
        if self._columns is None:
            raise RecordError(line_number, "row before the header line")
        try:
            row = next(csv.reader([line]))
        except csv.Error as e:
            raise RecordError(line_number, "invalid CSV ({})".format(e))
        if len(row) != len(self._columns):
            raise RecordError(line_number, "expected {} columns, got {}".format(len(self._columns), len(row)))
        fields = dict(zip(self._columns, row))
        if self.hashtags_field in fields:
            fields.pop(self.text_field, None)
            raw = fields[self.hashtags_field]
            fields[self.hashtags_field] = [t.strip() for t in raw.split(self.tag_separator) if t.strip()]
        return self._build(fields, line_number)
