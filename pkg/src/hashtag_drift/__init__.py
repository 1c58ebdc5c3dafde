# -*- coding: utf-8 -*-
#  hashtag_drift Copyright (c) 2024
#  See LICENCE in project root

"""
hashtag_drift python package for following how the context of a hashtag changes over time
Builds a bounded, aging co-occurrence graph from a stream of posts and snapshots its communities per period
"""

__author__ = 'hashtag_drift developers'
__maintainer__ = __author__
__copyright__ = 'Copyright 2024, hashtag_drift'
__license__ = 'See LICENCE in project root'
__version__ = '0.1.0'

from .normalizer import (PostRecord,
                         extract_raw_hashtags,
                         normalize,
                         prepare_post)
from .graph import (GraphConfig,
                    WindowedGraph,
                    PromotionStatus)
from .community import (FrozenGraph,
                        Partition,
                        edge_betweenness,
                        girvan_newman,
                        modularity,
                        best_partition)
from .analytics import (PeriodTally,
                        Snapshot,
                        drift_report,
                        top_k)
from .engine import StreamEngine
from .ingest import (parse_record,
                     run_stream)
from .synthetic import (SynthConfig,
                        generate_synthetic)
from .exporters import (export_graph,
                        snapshot_to_json)
