"""Persistent cache of solved (graph, error set, solver) results."""

import json
import logging
from datetime import datetime, timezone
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from dateutil import parser as date_parser

from ..models import GraphResult

logger = logging.getLogger(__name__)

CacheKey = Tuple[str, str, str]


class ResultCache:
    """Append-only JSON-lines cache keyed by (graph6, error-set hash, solver spec)."""

    def __init__(self, cache_file: Path):
        self.cache_file = Path(cache_file)
        self.records: Dict[CacheKey, Dict] = {}
        self.pending: List[Dict] = []
        self._load()

    def _load(self):
        if not self.cache_file.exists():
            return
        bad = 0
        try:
            with open(self.cache_file, "r", encoding="utf-8") as f:
                for line in f:
                    if not line.strip():
                        continue
                    try:
                        record = json.loads(line)
                        self.records[self._key_of(record)] = record
                    except (json.JSONDecodeError, KeyError, TypeError):
                        bad += 1
        except IOError as e:
            logger.warning(f"Failed to load result cache: {e}")
            return
        if bad:
            logger.warning(f"Skipped {bad} corrupt cache lines in {self.cache_file}")
        logger.info(f"Loaded {len(self.records)} cached results")

    @staticmethod
    def _key_of(record: Dict) -> CacheKey:
        return (record["graph6"], record["error_set_hash"], record["solver"])

    def __len__(self):
        return len(self.records)

    def get(self, graph6: str, error_set_hash: str, solver: str) -> Optional[GraphResult]:
        record = self.records.get((graph6, error_set_hash, solver))
        if record is None:
            return None
        return GraphResult(
            graph6=record["graph6"],
            order=record["order"],
            clique_size=record["clique_size"],
            K=record["K"],
            pure=record["pure"],
            codewords=list(record["codewords"]),
            cached=True,
        )

    def put(self, result: GraphResult, error_set_hash: str, solver: str):
        record = {
            "graph6": result.graph6,
            "error_set_hash": error_set_hash,
            "solver": solver,
            "order": result.order,
            "clique_size": result.clique_size,
            "K": result.K,
            "pure": result.pure,
            "codewords": list(result.codewords),
            "solved_at": datetime.now(timezone.utc).isoformat(),
        }
        self.records[self._key_of(record)] = record
        self.pending.append(record)

    def save(self):
        """Append records added since the last save."""
        if not self.pending:
            return
        self.cache_file.parent.mkdir(parents=True, exist_ok=True)
        try:
            with open(self.cache_file, "a", encoding="utf-8") as f:
                for record in self.pending:
                    f.write(json.dumps(record, sort_keys=True) + "\n")
            logger.info(f"Cached {len(self.pending)} results in {self.cache_file}")
            self.pending = []
        except IOError as e:
            logger.error(f"Failed to save result cache: {e}")

    def last_run(self) -> Optional[datetime]:
        """Timestamp of the newest cached record."""
        newest = None
        for record in self.records.values():
            try:
                stamp = date_parser.isoparse(record["solved_at"])
            except (KeyError, ValueError):
                continue
            if newest is None or stamp > newest:
                newest = stamp
        return newest
