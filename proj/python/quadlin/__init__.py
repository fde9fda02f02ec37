"""Python front end for the quadlin core.

A group is either a catalog name, or a dict in the JSON group format:
``{"generators": [...], "gram": [...]}`` or ``{"catalog": name, "params": {...}}``.
Scalars are strings such as ``"E(8)-E(8)^3"``.
"""

import json

from . import _quadlin
from ._quadlin import QuadlinError

__all__ = [
    "QuadlinError",
    "analyze",
    "verify",
    "character_table",
    "witt",
    "scan",
    "catalog_names",
    "catalog_families",
    "catalog_entry",
    "normalize",
    "error_kind",
]


def _group(group, params=None):
    if isinstance(group, str):
        group = {"catalog": group, "params": dict(params or {})}
    elif params:
        raise ValueError("params only apply to catalog names")
    return json.dumps(group)


def error_kind(exc):
    """The error kind carried by a QuadlinError, e.g. "NotGenericallyFree"."""
    return exc.args[0]


def analyze(group, params=None, **options):
    return json.loads(_quadlin.analyze(_group(group, params), **options))


def verify(group, certificate, params=None, **options):
    """Problems found when re-checking the certificate; empty when it holds."""
    if not isinstance(certificate, str):
        certificate = json.dumps(certificate)
    return json.loads(_quadlin.verify(_group(group, params), certificate, **options))


def character_table(group, params=None, **options):
    return json.loads(_quadlin.character_table(_group(group, params), **options))


def witt(group, params=None, **options):
    return json.loads(_quadlin.witt(_group(group, params), **options))


def scan(group, params=None, **options):
    return json.loads(_quadlin.scan(_group(group, params), **options))


def catalog_names():
    return list(_quadlin.catalog_names())


def catalog_families():
    return list(_quadlin.catalog_families())


def catalog_entry(name, params=None):
    return json.loads(_quadlin.catalog_entry(name, dict(params or {})))


def normalize(scalar):
    return _quadlin.normalize(scalar)
