"""Python access to the lietools C++ core."""

import json

from ._lietools import *  # noqa: F401,F403
from ._lietools import (
    __version__,
    _appendix_report,
    _embed_report,
    _lnd_report,
    _orbits_report,
)


def orbits_report(lie_type):
    return json.loads(_orbits_report(lie_type))


def embed_report(g, r, l=None):
    return json.loads(_embed_report(g, r, l))


def appendix_report(lmax=50):
    return json.loads(_appendix_report(lmax))


def lnd_report(cap=64):
    return json.loads(_lnd_report(cap))
