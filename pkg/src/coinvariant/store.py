"""Persistent caches for expensive tables and report emission.

One JSON document per (kind, n) with a schema version, the canonical
partition order embedded, and exact decimal integers.  A manifest records
a sha256 digest per entry; a digest mismatch or version mismatch triggers
a rebuild, never a partial read.  Writes go through write-then-rename, so
concurrent writers can at worst drop a manifest entry, which costs one
rebuild on the next access.

Reports are wrapped in a document {schema_version, command, parameters,
provenance, payload}.  Timestamps and machine facts live only in
provenance: payloads produced from the same inputs are byte-identical.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import logging
import os
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable

from . import __version__, characters, graded, kronecker
from .characters import CharacterTable, build_character_table
from .combinatorics import format_partition, parse_partition
from .errors import LimitExceeded
from .graded import GradedMultiplicityTable, build_graded_table, _supports
from .kronecker import KroneckerTable, build_kronecker_table

log = logging.getLogger("coinvariant.store")

SCHEMA_VERSION = 1
ENV_CACHE_DIR = "COINVARIANT_CACHE_DIR"

CONVENTIONS = {
    "partition_order": "descending lexicographic from (n)",
    "degree_normalization": "q^i per single grading step",
    "charge_reading_word": "rows left-to-right, bottom row first",
    "springer_grading": "coefficient of q^i in q^(n(mu)) * K(lam,mu)(1/q)",
}


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_CACHE_DIR)
    if env:
        return Path(env)
    xdg = os.environ.get("XDG_CACHE_HOME")
    base = Path(xdg) if xdg else Path.home() / ".cache"
    return base / "coinvariant"


def _atomic_write(path: Path, data: bytes) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_bytes(data)
    os.replace(tmp, path)


def _digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


# -- table (de)serialization -------------------------------------------------


def _char_doc(table: CharacterTable) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "char",
        "n": table.n,
        "partitions": [format_partition(p) for p in table.partitions],
        "class_sizes": list(table.class_sizes),
        "values": [list(row) for row in table.values],
    }


def _char_from_doc(doc: dict) -> CharacterTable:
    return CharacterTable(
        n=doc["n"],
        partitions=tuple(parse_partition(p) for p in doc["partitions"]),
        values=tuple(tuple(row) for row in doc["values"]),
        class_sizes=tuple(doc["class_sizes"]),
    )


def _kron_doc(table: KroneckerTable) -> dict:
    triples = sorted(table.entries.items())
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "kron",
        "n": table.n,
        "partitions": [format_partition(p) for p in table.partitions],
        "entries": [[a, b, c, g] for (a, b, c), g in triples],
    }


def _kron_from_doc(doc: dict) -> KroneckerTable:
    return KroneckerTable(
        n=doc["n"],
        partitions=tuple(parse_partition(p) for p in doc["partitions"]),
        entries={(a, b, c): g for a, b, c, g in doc["entries"]},
    )


def _graded_doc(table: GradedMultiplicityTable) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "graded",
        "n": table.n,
        "partitions": [format_partition(p) for p in table.partitions],
        "b": [list(row) for row in table.b],
    }


def _graded_from_doc(doc: dict) -> GradedMultiplicityTable:
    rows = tuple(tuple(row) for row in doc["b"])
    degrees = len(rows[0]) if rows else 0
    return GradedMultiplicityTable(
        n=doc["n"],
        partitions=tuple(parse_partition(p) for p in doc["partitions"]),
        b=rows,
        supports=_supports(rows, degrees),
    )


_KINDS: dict[str, tuple[Callable, Callable, Callable, Callable]] = {
    "char": (build_character_table, _char_doc, _char_from_doc, characters.install),
    "kron": (build_kronecker_table, _kron_doc, _kron_from_doc, kronecker.install),
    "graded": (build_graded_table, _graded_doc, _graded_from_doc, graded.install),
}

_DEFAULT_CAPS = {"char": characters.DEFAULT_MAX_N, "kron": kronecker.DEFAULT_MAX_N}


def _check_cap(kind: str, n: int, build_kwargs: dict) -> None:
    """Size caps hold whether the table is built or read back warm."""
    cap = build_kwargs.get("max_n", _DEFAULT_CAPS.get(kind))
    if cap is not None and not 1 <= n <= cap:
        raise LimitExceeded(f"{kind} table size {n} outside [1, {cap}]")
    if cap is None and n < 1:
        raise LimitExceeded(f"{kind} table size {n} must be positive")


class CacheStore:
    """Digest-checked table cache rooted at one directory."""

    def __init__(self, root: Path | None = None):
        self.root = Path(root) if root is not None else default_cache_dir()
        # warm handles so repeated gets in one process share table objects
        # (and their lazily computed pair vectors)
        self._live: dict[tuple[str, int], object] = {}

    # manifest ---------------------------------------------------------

    @property
    def manifest_path(self) -> Path:
        return self.root / "manifest.json"

    def _read_manifest(self) -> dict:
        try:
            doc = json.loads(self.manifest_path.read_text())
            if doc.get("schema_version") != SCHEMA_VERSION:
                return {"schema_version": SCHEMA_VERSION, "entries": []}
            return doc
        except (OSError, ValueError):
            return {"schema_version": SCHEMA_VERSION, "entries": []}

    def _manifest_entry(self, kind: str, n: int) -> dict | None:
        for entry in self._read_manifest()["entries"]:
            if entry["kind"] == kind and entry["n"] == n:
                return entry
        return None

    def _update_manifest(self, kind: str, n: int, filename: str, digest: str) -> None:
        doc = self._read_manifest()
        doc["entries"] = [
            e for e in doc["entries"] if not (e["kind"] == kind and e["n"] == n)
        ]
        doc["entries"].append(
            {"kind": kind, "n": n, "file": filename, "sha256": digest}
        )
        doc["entries"].sort(key=lambda e: (e["kind"], e["n"]))
        _atomic_write(self.manifest_path, _json_bytes(doc))

    def digests(self) -> dict[str, str]:
        """kind-n -> digest map for report provenance."""
        return {
            f"{e['kind']}-{e['n']}": e["sha256"]
            for e in self._read_manifest()["entries"]
        }

    # tables -----------------------------------------------------------

    def get_or_build(self, kind: str, n: int, **build_kwargs):
        """Digest-valid cached table, else build + validate + persist."""
        if kind not in _KINDS:
            raise ValueError(f"unknown cache kind {kind!r}")
        _check_cap(kind, n, build_kwargs)
        live = self._live.get((kind, n))
        if live is not None:
            return live
        builder, to_doc, from_doc, install = _KINDS[kind]
        path = self.root / f"{kind}-{n}.json"
        entry = self._manifest_entry(kind, n)
        if entry is not None and path.exists():
            data = path.read_bytes()
            if _digest(data) == entry["sha256"]:
                try:
                    doc = json.loads(data)
                except ValueError:
                    doc = None
                if doc is not None and doc.get("schema_version") == SCHEMA_VERSION:
                    table = install(from_doc(doc))
                    self._live[(kind, n)] = table
                    return table
                log.warning("cache %s-%s has a stale schema; rebuilding", kind, n)
            else:
                log.warning("cache %s-%s failed its digest; rebuilding", kind, n)
        table = install(builder(n, **build_kwargs))
        self.root.mkdir(parents=True, exist_ok=True)
        data = _json_bytes(to_doc(table))
        _atomic_write(path, data)
        self._update_manifest(kind, n, path.name, _digest(data))
        self._live[(kind, n)] = table
        return table


# -- report documents --------------------------------------------------------


def _json_bytes(obj) -> bytes:
    return (json.dumps(obj, indent=2) + "\n").encode()


def payload_bytes(document: dict) -> bytes:
    """Canonical serialization of just the payload (determinism contract)."""
    return _json_bytes(document["payload"])


def report_document(
    command: str,
    parameters: dict,
    payload: dict,
    store: CacheStore | None = None,
    extra_provenance: dict | None = None,
) -> dict:
    provenance = {
        "tool_version": __version__,
        "generated_at": datetime.now(timezone.utc).isoformat(),
        "conventions": dict(CONVENTIONS),
        "cache_digests": store.digests() if store is not None else {},
    }
    if extra_provenance:
        provenance.update(extra_provenance)
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "parameters": parameters,
        "provenance": provenance,
        "payload": payload,
    }


def write_report(path: Path, document: dict) -> None:
    """JSON by default; entries-only CSV when the suffix is .csv."""
    path = Path(path)
    if path.suffix.lower() == ".csv":
        _atomic_write(path, _csv_bytes(document["payload"]))
    else:
        _atomic_write(path, _json_bytes(document))


def _csv_bytes(payload: dict) -> bytes:
    entries = payload.get("entries", [])
    columns: list[str] = []
    for entry in entries:
        for key in entry:
            if key not in columns:
                columns.append(key)
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns)
    writer.writeheader()
    for entry in entries:
        writer.writerow(entry)
    return buffer.getvalue().encode()
