"""GIT stability of multidegree hypersurfaces.

The *_report functions return parsed JSON documents.
"""
import json
import os
import pathlib

# wheels ship the fixtures next to the package
_bundled = pathlib.Path(__file__).with_name("fixtures")
if "GITSTAB_FIXTURES" not in os.environ and _bundled.is_dir():
    os.environ["GITSTAB_FIXTURES"] = str(_bundled)

from . import _gitstab  # noqa: E402
from ._gitstab import (  # noqa: E402
    SCHEMA_VERSION,
    DegreeMismatchError,
    FixtureError,
    ParseError,
    ProfileError,
    candidates,
    milnor_number,
    monomial_count,
    signature,
    singularity_label,
)


def _wrap(fn):
    def call(*args, **kwargs):
        return json.loads(fn(*args, **kwargs))

    call.__name__ = fn.__name__
    call.__doc__ = fn.__doc__
    return call


ops_report = _wrap(_gitstab.ops_report)
classify_report = _wrap(_gitstab.classify_report)
classify_fixture_report = _wrap(_gitstab.classify_fixture_report)
sing_report = _wrap(_gitstab.sing_report)
lattice_report = _wrap(_gitstab.lattice_report)
ledger_report = _wrap(_gitstab.ledger_report)

__all__ = [
    "SCHEMA_VERSION",
    "DegreeMismatchError",
    "FixtureError",
    "ParseError",
    "ProfileError",
    "candidates",
    "classify_fixture_report",
    "classify_report",
    "ledger_report",
    "lattice_report",
    "milnor_number",
    "monomial_count",
    "ops_report",
    "signature",
    "sing_report",
    "singularity_label",
]
