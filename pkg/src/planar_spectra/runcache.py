"""On-disk cache for exhaustive runs, one directory per order.

Layout of ``<root>/n<NN>/``:

``family.g6``
    canonical representatives, one graph6 line each, sorted.
``spectra.csv``
    header ``graph6,rho_lo,rho_hi,iterations`` then one row per
    representative, in the same order as ``family.g6``.
``report.json``
    the extremal report under ``"report"``, plus ``"files"`` mapping each
    data file to its SHA-256 and ``"schema"`` (currently 1).
"""

from __future__ import annotations

import csv
import hashlib
import json
import os
from pathlib import Path

from .errors import CacheIntegrityError, Graph6ParseError
from .extremal import ExtremalReport, FamilyClasses
from .graph6 import graph6_decode
from .spectral import SpectralResult

ENV_CACHE_DIR = "PLANAR_SPECTRA_CACHE"
SCHEMA = 1
FAMILY = "family.g6"
SPECTRA = "spectra.csv"
REPORT = "report.json"


def default_root() -> Path:
    return Path(os.environ.get(ENV_CACHE_DIR, "runs"))


def run_dir(root: Path, n: int) -> Path:
    return Path(root) / f"n{n:02d}"


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def write_run(root: Path, fam: FamilyClasses, results: list[SpectralResult], report: ExtremalReport) -> Path:
    d = run_dir(root, fam.n)
    d.mkdir(parents=True, exist_ok=True)
    with open(d / FAMILY, "w", newline="\n") as fh:
        for key in fam.keys:
            fh.write(key + "\n")
    with open(d / SPECTRA, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["graph6", "rho_lo", "rho_hi", "iterations"])
        for key, r in zip(fam.keys, results):
            w.writerow([key, repr(r.rho_lo), repr(r.rho_hi), r.iterations])
    payload = {
        "schema": SCHEMA,
        "files": {FAMILY: _sha256(d / FAMILY), SPECTRA: _sha256(d / SPECTRA)},
        "report": report.to_dict(),
    }
    (d / REPORT).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return d


def verify_run(root: Path, n: int) -> dict:
    """Check a cached run; returns the stored report or raises ``CacheIntegrityError``."""
    d = run_dir(root, n)
    report_path = d / REPORT
    if not report_path.is_file():
        raise CacheIntegrityError("missing report", str(report_path))
    try:
        payload = json.loads(report_path.read_text())
        files = payload["files"]
        report = payload["report"]
    except (ValueError, KeyError, TypeError) as exc:
        raise CacheIntegrityError(f"unreadable report ({exc})", str(report_path)) from exc
    for name in (FAMILY, SPECTRA):
        path = d / name
        if not path.is_file():
            raise CacheIntegrityError("missing file", str(path))
        if _sha256(path) != files.get(name):
            raise CacheIntegrityError("checksum mismatch", str(path))
    keys = (d / FAMILY).read_text().split()
    for key in keys:
        try:
            g = graph6_decode(key)
        except Graph6ParseError as exc:
            raise CacheIntegrityError(f"bad graph6 line ({exc})", str(d / FAMILY)) from exc
        if g.n != n:
            raise CacheIntegrityError(f"graph of order {g.n} in run for n={n}", str(d / FAMILY))
    with open(d / SPECTRA, newline="") as fh:
        rows = list(csv.reader(fh))
    if [r[0] for r in rows[1:]] != keys:
        raise CacheIntegrityError("rows do not match family.g6", str(d / SPECTRA))
    if report.get("iso_classes") != len(keys):
        raise CacheIntegrityError("class count disagrees with family.g6", str(report_path))
    return report
