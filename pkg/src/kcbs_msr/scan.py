"""Parameter-space scans over (theta1, theta2, delta_phi) and their serialization.

A scan evaluates S, the concurrence and the regime on a regular grid of
cell centers: theta axes over (0, pi), delta_phi over [0, 2*pi).  Cell
centers keep delta_phi meaningful (at theta = 0 or pi it is pure gauge);
the exact extremes live on the closed boundary and are the business of the
extremal module, not the scan.  Only the phase difference is stored since
S and C depend on the azimuths through it alone.

Output is CSV (header ``theta1,theta2,delta_phi,s,c,regime``) or JSON (an
array of objects with the same keys), UTF-8 with LF newlines, values at 12
significant digits, so a fixed configuration yields byte-identical files.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .classify import Regime
from .extremal import LOCAL_BOUND
from .observables import CLASSICAL_BOUND, SQRT5
from .states import DEFAULT_SEED

__all__ = [
    "ScanConfig",
    "ScanRecord",
    "ScanSummary",
    "compute_scan",
    "regime_counts",
    "render_csv",
    "render_json",
    "theta_centers",
    "dphi_centers",
    "write_scan",
]

CSV_HEADER = "theta1,theta2,delta_phi,s,c,regime"

OUTPUT_FORMATS = ("csv", "json")


@dataclass(frozen=True)
class ScanConfig:
    """Scan resolution, output format/path, and the recorded RNG seed.

    The grid itself is deterministic; the seed is carried so that a config
    fully identifies a run.
    """

    resolution: int
    output_path: str | Path
    output_format: str = "csv"
    seed: int = DEFAULT_SEED

    def __post_init__(self) -> None:
        if self.resolution < 2:
            raise ValueError(f"resolution must be at least 2: got {self.resolution}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(
                f"output format must be one of {OUTPUT_FORMATS}: got {self.output_format!r}"
            )


@dataclass(frozen=True)
class ScanRecord:
    """One grid point with its S value, concurrence and regime label."""

    theta1: float
    theta2: float
    delta_phi: float
    s: float
    c: float
    regime: str


@dataclass(frozen=True)
class ScanSummary:
    """Per-regime record counts of a completed scan."""

    total: int
    counts: dict[str, int]
    path: Path


def theta_centers(resolution: int) -> np.ndarray:
    """Cell centers (k + 1/2) pi / resolution over (0, pi)."""
    return (np.arange(resolution) + 0.5) * math.pi / resolution


def dphi_centers(resolution: int) -> np.ndarray:
    """Cell centers (k + 1/2) 2 pi / resolution over (0, 2 pi)."""
    return (np.arange(resolution) + 0.5) * 2.0 * math.pi / resolution


def compute_scan(resolution: int) -> list[ScanRecord]:
    """Evaluate the grid in row-major order (theta1 outer, delta_phi inner)."""
    th = theta_centers(resolution)
    dp = dphi_centers(resolution)
    t1, t2, dphi = np.meshgrid(th, th, dp, indexing="ij")
    f = np.sin(t1) * np.sin(t2) * np.cos(dphi) + np.cos(t1) * np.cos(t2)
    y = np.cos(t1) * np.cos(t2)
    s = 4.0 * (3.0 * SQRT5 - 5.0) * (y + 1.0) / (f + 3.0) + (5.0 - 4.0 * SQRT5)
    c = (1.0 - f) / (3.0 + f)
    labels = np.where(
        s < CLASSICAL_BOUND,
        Regime.CONTEXTUAL_NONLOCAL.value,
        np.where(
            s < LOCAL_BOUND, Regime.NONLOCAL_NONCONTEXTUAL.value, Regime.LOCAL.value
        ),
    )
    flat = zip(
        t1.ravel(), t2.ravel(), dphi.ravel(), s.ravel(), c.ravel(), labels.ravel()
    )
    return [
        ScanRecord(float(a), float(b), float(d), float(sv), float(cv), str(lab))
        for a, b, d, sv, cv, lab in flat
    ]


def regime_counts(records: list[ScanRecord]) -> dict[str, int]:
    """Records per regime label, keyed by label, all three labels present."""
    counts = {regime.value: 0 for regime in Regime}
    for record in records:
        counts[record.regime] += 1
    return counts


def _fmt(value: float) -> str:
    return f"{value:.12g}"


def render_csv(records: list[ScanRecord]) -> str:
    lines = [CSV_HEADER]
    lines.extend(
        f"{_fmt(r.theta1)},{_fmt(r.theta2)},{_fmt(r.delta_phi)},"
        f"{_fmt(r.s)},{_fmt(r.c)},{r.regime}"
        for r in records
    )
    return "\n".join(lines) + "\n"


def render_json(records: list[ScanRecord]) -> str:
    rows = [
        {
            "theta1": float(_fmt(r.theta1)),
            "theta2": float(_fmt(r.theta2)),
            "delta_phi": float(_fmt(r.delta_phi)),
            "s": float(_fmt(r.s)),
            "c": float(_fmt(r.c)),
            "regime": r.regime,
        }
        for r in records
    ]
    return json.dumps(rows, separators=(",", ":")) + "\n"


def write_scan(config: ScanConfig) -> ScanSummary:
    """Run the scan and write it to the configured path.

    Returns the per-regime summary; the counts always equal what a reader
    of the emitted file would recompute.
    """
    records = compute_scan(config.resolution)
    text = render_csv(records) if config.output_format == "csv" else render_json(records)
    path = Path(config.output_path)
    path.write_bytes(text.encode("utf-8"))
    return ScanSummary(total=len(records), counts=regime_counts(records), path=path)
