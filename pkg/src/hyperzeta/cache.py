"""On-disk cache for prime lists and sieve tables.

The file is an ``.npz`` archive whose ``header`` entry records a format
version, the payload kind and its limit. Any mismatch rebuilds the payload
and overwrites the file.
"""

from __future__ import annotations

import logging
import os
import tempfile
import zipfile

import numpy as np

from .dirichlet import SieveTables, primes_upto, sieve_tables
from . import squareclass

log = logging.getLogger(__name__)

FORMAT_VERSION = 1
_MAGIC = "hyperzeta-cache"


def _header(kind: str, limit: int) -> np.ndarray:
    return np.array([_MAGIC, str(FORMAT_VERSION), kind, str(limit)])


def _read(path: str, kind: str, limit: int) -> dict | None:
    try:
        with np.load(path, allow_pickle=False) as z:
            head = [str(x) for x in z["header"]]
            if head[:3] != [_MAGIC, str(FORMAT_VERSION), kind] or int(head[3]) != limit:
                log.info("cache %s does not match %s/%d, rebuilding", path, kind, limit)
                return None
            return {k: z[k] for k in z.files if k != "header"}
    except (OSError, KeyError, ValueError, IndexError, zipfile.BadZipFile):
        return None


def _write(path: str, kind: str, limit: int, **arrays):
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, suffix=".npz")
    os.close(fd)
    np.savez(tmp, header=_header(kind, limit), **arrays)
    os.replace(tmp, path)


def cached_primes(path: str, P: int) -> np.ndarray:
    """Primes <= P, read from ``path`` when valid; registers them for reuse."""
    data = _read(path, "primes", P)
    if data is None:
        primes = primes_upto(P)
        _write(path, "primes", P, primes=primes)
    else:
        primes = data["primes"]
    squareclass.register_primes(P, primes)
    return primes


def cached_sieve(path: str, N: int) -> SieveTables:
    data = _read(path, "sieve", N)
    if data is None:
        t = sieve_tables(N)
        _write(path, "sieve", N, spf=t.spf, mu=t.mu, phi=t.phi, sigma1=t.sigma1)
        return t
    for arr in data.values():
        arr.setflags(write=False)
    return SieveTables(N, data["spf"], data["mu"], data["phi"], data["sigma1"])
