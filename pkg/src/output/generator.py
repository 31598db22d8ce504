"""Writers for class listings, search reports, tables and code files."""

import csv
import io
import json
import logging
from pathlib import Path
from typing import Dict, Iterable, List, Sequence, Tuple

from ..bitgraph import to_graph6
from ..cwsmap import format_code_file
from ..models import CwsCode, ErrorSet, GaOutcome, GraphClass, SearchReport

logger = logging.getLogger(__name__)


def _csv_text(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


class ReportWriter:
    """Write result files into one output directory."""

    def __init__(self, output_dir: Path):
        self.output_dir = Path(output_dir)
        self.output_dir.mkdir(parents=True, exist_ok=True)

    def _write(self, name: str, content: str) -> Path:
        path = self.output_dir / name
        path.write_text(content, encoding="utf-8")
        logger.info(f"Output written to: {path}")
        return path

    def write_classes(self, n: int, relation: str, classes: List[GraphClass]) -> Tuple[Path, Path]:
        """graph6 listing plus a CSV sidecar with class statistics."""
        stem = f"classes_n{n}_{relation}"
        listing = "".join(to_graph6(c.representative) + "\n" for c in classes)
        rows = [(to_graph6(c.representative), c.class_size, c.aut_size, c.iso_classes) for c in classes]
        return (
            self._write(f"{stem}.g6", listing),
            self._write(f"{stem}.csv", _csv_text(("graph6", "class_size", "aut_size", "iso_classes"), rows)),
        )

    def write_search_report(self, report: SearchReport, stem: str) -> Tuple[Path, Path]:
        lines = "".join(json.dumps(row.to_dict(), sort_keys=True) + "\n" for row in report.rows)
        summary = json.dumps(report.summary(), indent=2, sort_keys=True) + "\n"
        return self._write(f"{stem}.jsonl", lines), self._write(f"{stem}_summary.json", summary)

    def write_table(self, name: str, header: Sequence[str], rows: Iterable[Sequence]) -> Path:
        return self._write(name, _csv_text(header, rows))

    def write_histogram(self, name: str, histogram: Dict[int, int], key: str = "order") -> Path:
        return self.write_table(name, (key, "count"), sorted(histogram.items()))

    def write_ga_campaign(self, outcomes: Dict[str, List[GaOutcome]], stem: str) -> Tuple[Path, Path]:
        """One JSON line per GA instance, plus the per-generation mean of best fitness per kind."""
        lines = []
        for kind, runs in outcomes.items():
            for outcome in runs:
                lines.append(json.dumps({
                    "crossover": kind,
                    "seed": outcome.seed,
                    "best_graph6": to_graph6(outcome.best_graph),
                    "best_fitness": outcome.best_fitness,
                    "best_history": outcome.best_history,
                    "mean_history": outcome.mean_history,
                }, sort_keys=True) + "\n")
        kinds = list(outcomes)
        length = max((len(o.best_history) for runs in outcomes.values() for o in runs), default=0)
        rows = []
        for generation in range(length):
            row = [generation]
            for kind in kinds:
                values = [o.best_history[generation] for o in outcomes[kind] if generation < len(o.best_history)]
                row.append(f"{sum(values) / len(values):.4f}" if values else "")
            rows.append(row)
        return (
            self._write(f"{stem}.jsonl", "".join(lines)),
            self.write_table(f"{stem}_mean_best.csv", ["generation", *kinds], rows),
        )

    def write_code(self, code: CwsCode, error_set: ErrorSet, name: str) -> Path:
        return self._write(name, format_code_file(code, error_set))
