#  hashtag_drift Copyright (c) 2024
#  See LICENCE in project root

# Import all the readers here so that they're all registered
from .default import BaseRecordReader, RecordError, StreamRecord, parse_timestamp
from .jsonl import JsonLinesReader
from .delimited import CsvReader

__all__ = ["BaseRecordReader", "RecordError", "StreamRecord", "parse_timestamp", "JsonLinesReader", "CsvReader"]
