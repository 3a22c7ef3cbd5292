"""Analysis reports, the on-disk result cache and graph export."""
from __future__ import annotations

import json
import os
import tempfile
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional

import platformdirs

from . import __version__
from . import formations as FM
from . import graphs as GR
from .core import FiniteGroup, is_subgroup_bits
from .errors import NoResidual

CACHE_ENV = "FORMAGRAPH_CACHE_DIR"
# bump when report contents change shape or meaning
CACHE_VERSION = f"{__version__}/1"


@dataclass
class AnalysisReport:
    group: str
    content_hash: str
    order: int
    formation: str
    full_vertices: int
    full_edges: int
    pruned_vertices: int
    pruned_edges: int
    isolated_size: int
    isolated_labels: list[str]
    isolated_is_subgroup: bool
    phi_size: int
    residual_size: Optional[int]
    components: int
    planar: bool
    planarity_certificate: str
    timings_ms: dict[str, float] = field(default_factory=dict)

    def to_json(self, timing: bool = True) -> dict:
        out = asdict(self)
        if not timing:
            out.pop("timings_ms")
        return out

    def dumps(self, timing: bool = True) -> str:
        return json.dumps(self.to_json(timing), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, obj: dict) -> "AnalysisReport":
        obj = dict(obj)
        obj.setdefault("timings_ms", {})
        return cls(**obj)


class ResultCache:
    """One JSON file per (content_hash, formation, operation) record.

    Records are written to a temporary file and renamed into place, so
    concurrent writers of the same key never leave a torn file behind.
    """

    def __init__(self, root=None):
        if root is None:
            root = os.environ.get(CACHE_ENV) or platformdirs.user_cache_dir("formagraph")
        self.root = Path(root)

    def _path(self, content_hash: str, formation: str, op: str) -> Path:
        safe = formation.replace(":", "_")
        return self.root / content_hash[:2] / f"{content_hash}.{safe}.{op}.json"

    def get(self, content_hash: str, formation: str, op: str):
        path = self._path(content_hash, formation, op)
        try:
            record = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, ValueError):
            return None
        key = [content_hash, formation, op]
        if record.get("version") != CACHE_VERSION or record.get("key") != key:
            return None
        return record["value"]

    def put(self, content_hash: str, formation: str, op: str, value) -> None:
        path = self._path(content_hash, formation, op)
        path.parent.mkdir(parents=True, exist_ok=True)
        record = {"key": [content_hash, formation, op], "version": CACHE_VERSION,
                  "value": value}
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(record, fh, sort_keys=True)
            os.replace(tmp, path)
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise


def _formation(F) -> FM.FormationSpec:
    return FM.parse_formation(F) if isinstance(F, str) else F


def analyze(G: FiniteGroup, F, cache: Optional[ResultCache] = None) -> AnalysisReport:
    """Full report for one group and formation; ``cache`` is optional."""
    F = _formation(F)
    if cache is not None:
        hit = cache.get(G.content_hash, str(F), "analyze")
        if hit is not None:
            # names and labels are not part of the table hash
            hit = dict(hit)
            iso_indices = hit.pop("isolated", [])
            hit["group"] = G.name
            hit["isolated_labels"] = [G.labels[i] for i in iso_indices]
            return AnalysisReport.from_json(hit)
    timings = {}

    def timed(stage, fn):
        t0 = time.perf_counter()
        value = fn()
        timings[stage] = round((time.perf_counter() - t0) * 1000, 3)
        return value

    full = timed("graph", lambda: GR.build_nonf_graph(G, F))
    iso = GR.isolated_bits(full)
    pruned = GR.prune(full)
    is_sub = timed("subgroup_test", lambda: is_subgroup_bits(G, iso))
    phi = timed("phi", lambda: FM.phi_F(G, F))

    def residual_size():
        try:
            return FM.residual(G, F).size
        except NoResidual:
            return None

    res = timed("residual", residual_size)
    comps = timed("components", lambda: GR.components(pruned))
    planar = timed("planarity", lambda: GR.is_planar(pruned))
    report = AnalysisReport(
        group=G.name,
        content_hash=G.content_hash,
        order=G.order,
        formation=str(F),
        full_vertices=full.vertex_count,
        full_edges=full.edge_count,
        pruned_vertices=pruned.vertex_count,
        pruned_edges=pruned.edge_count,
        isolated_size=iso.bit_count(),
        isolated_labels=[G.labels[i] for i in sorted(GR.isolated_set(full))],
        isolated_is_subgroup=is_sub,
        phi_size=phi.size,
        residual_size=res,
        components=comps.count,
        planar=planar.planar,
        planarity_certificate=planar.certificate,
        timings_ms=timings,
    )
    if cache is not None:
        value = report.to_json(timing=False)
        value["isolated"] = sorted(GR.isolated_set(full))
        cache.put(G.content_hash, str(F), "analyze", value)
    return report


def export_graph(G: FiniteGroup, F, fmt: str, path=None, include_isolated: bool = False) -> str:
    """Render the non-F-graph as ``dot`` or ``graphml``; write it when ``path`` is given."""
    graph = GR.build_nonf_graph(G, _formation(F))
    if fmt == "dot":
        text = GR.to_dot(graph, include_isolated, name=G.name)
    elif fmt == "graphml":
        text = GR.to_graphml(graph, include_isolated)
    else:
        raise ValueError(f"unknown graph format {fmt!r}")
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text
