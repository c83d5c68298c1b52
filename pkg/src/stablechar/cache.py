"""Optional on-disk persistence for the integer tableau caches.

Pointing the ``STABLECHAR_CACHE_DIR`` environment variable at a directory
makes the command line load previously memoized Littlewood-Richardson data
on startup and write the merged state back on exit (atomic rename, single
writer).  Everything stored is integer-valued, so the file is plain JSON.
"""

from __future__ import annotations

import json
import os
import tempfile

from . import bcd, schur
from .partitions import Partition

ENV_VAR = "STABLECHAR_CACHE_DIR"
_FILENAME = "stablechar-cache.json"
_SCHEMA = 1


def _encode_partition(parts: tuple) -> str:
    return ",".join(str(p) for p in parts)


def _decode_partition(text: str) -> Partition:
    return Partition(int(p) for p in text.split(",")) if text else Partition()


def _encode_table(table: dict) -> dict:
    return {
        "|".join(_encode_partition(k) for k in key): {
            _encode_partition(lam.parts): c for lam, c in value.items()
        }
        for key, value in table.items()
    }


def _decode_table(data: dict) -> dict:
    out = {}
    for key, value in data.items():
        parts_key = tuple(_decode_partition(k).parts for k in key.split("|"))
        out[parts_key] = {_decode_partition(k): c for k, c in value.items()}
    return out


def cache_file(directory: str) -> str:
    return os.path.join(directory, _FILENAME)


def load(directory: str) -> None:
    """Merge a cache file into the in-memory caches; silently skip junk."""
    path = cache_file(directory)
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except (OSError, json.JSONDecodeError):
        return
    if data.get("schema") != _SCHEMA:
        return
    try:
        schur._skew_cache.update(_decode_table(data.get("skew", {})))
        schur._product_cache.update(_decode_table(data.get("product", {})))
        bcd._nl_cache.update(_decode_table(data.get("nl", {})))
        for key, c in data.get("lr", {}).items():
            parts_key = tuple(_decode_partition(k).parts for k in key.split("|"))
            schur._lr_cache[parts_key] = c
    except (ValueError, AttributeError):
        return


def save(directory: str) -> None:
    os.makedirs(directory, exist_ok=True)
    payload = {
        "schema": _SCHEMA,
        "skew": _encode_table(schur._skew_cache),
        "product": _encode_table(schur._product_cache),
        "nl": _encode_table(bcd._nl_cache),
        "lr": {
            "|".join(_encode_partition(k) for k in key): c
            for key, c in schur._lr_cache.items()
        },
    }
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".cache-", suffix=".json")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            json.dump(payload, handle)
        os.replace(tmp, cache_file(directory))
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
