"""Exact polynomial-identity computations on group-graded algebras.

Thin wrapper over the `_gpi` extension module. JSON-producing calls are
decoded into plain dictionaries.
"""

import json
import os
import sys

try:
    from gpi import _gpi  # installed layout: gpi/_gpi.so
except ImportError:
    _dir = os.environ.get("GPI_MODULE_DIR")
    if _dir and _dir not in sys.path:
        sys.path.insert(0, _dir)
    import _gpi  # build-tree layout


def catalog_list():
    return _gpi.catalog_list()


def catalog_emit(spec):
    """JSON document (as a dict) of a catalog algebra body."""
    return json.loads(_gpi.catalog_emit(spec))


def validate(algebra):
    return _gpi.validate(algebra)


def codim(algebra, n=4, jobs=1):
    return json.loads(_gpi.codim_json(algebra, n, jobs))


def exponent(algebra, max_degree=4, mode="template"):
    return json.loads(_gpi.exponent_json(algebra, max_degree, mode))


def classify_poly(algebra, poly):
    return _gpi.classify_poly(algebra, poly)


def verify_suite(suite, max_degree=3):
    return json.loads(_gpi.verify_suite_json(suite, max_degree))


def suite_names():
    return _gpi.suite_names()
