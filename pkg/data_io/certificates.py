"""JSON cache of exact certificates, keyed by what was verified."""

import hashlib
import json
import logging
from pathlib import Path
from typing import Callable

from misc.config import config
from models.reports import Certificate

logger = logging.getLogger(__name__)

# bump when Certificate gains fields that decide whether it passes
CERTIFICATE_FORMAT = 2


def certificate_key(kind: str, name: str, signature: tuple[int, int, int] | None = None,
                    parameters: dict | None = None) -> str:
    payload = json.dumps({'format': CERTIFICATE_FORMAT, 'kind': kind, 'id': name, 'signature': signature,
                          'parameters': parameters or {}}, sort_keys=True, default=str)
    return hashlib.sha512(payload.encode()).hexdigest()


def certificate_path(key: str, cache_dir: Path | None = None) -> Path:
    return (cache_dir or config.cache_dir) / f'certificate_{key[:32]}.json'


def cached_certificate(kind: str, name: str, compute: Callable[[], Certificate],
                       signature: tuple[int, int, int] | None = None,
                       parameters: dict | None = None,
                       cache_dir: Path | None = None) -> tuple[Certificate, Path]:
    """
    Load a certificate from the cache, or compute and store it.

    A cache entry that fails to parse is logged and recomputed; a failure to write
    the new entry is logged and otherwise ignored.

    Returns
    -------
    (certificate, path of its cache file)
    """
    path = certificate_path(certificate_key(kind, name, signature, parameters), cache_dir)
    if path.exists():
        try:
            cert = Certificate(**json.loads(path.read_text()))
            logger.debug(f"Loaded certificate {kind}:{name} from cache: {path}")
            return cert, path
        except Exception as e:
            logger.warning(f"Failed to load certificate cache {path}: {e}, recomputing")

    cert = compute()
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(cert.model_dump_json(indent=2))
        logger.debug(f"Saved certificate {kind}:{name} to {path}")
    except Exception as e:
        logger.warning(f"Failed to save certificate cache {path}: {e}")
    return cert, path
