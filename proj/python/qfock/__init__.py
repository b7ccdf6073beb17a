"""Exact computations on the q-deformed Fock space."""

import json

from ._qfock import NotSl2Strip, RingElem, run, sl2_factorize
from . import _qfock

__all__ = [
    "NotSl2Strip",
    "RingElem",
    "run",
    "sl2_factorize",
    "decompose",
    "character_identity",
    "macdonald",
    "straighten",
    "strip_module",
    "level1_character",
]


def decompose(n, M, degree, intertwining=True):
    """Decomposition report of the degree component of F_M modulo the Heisenberg ideal."""
    return json.loads(_qfock.decompose_json(n, M, degree, intertwining))


def character_identity(n, k, cutoff):
    """Fock-quotient character against the border-strip sum, grade by grade."""
    return json.loads(_qfock.character_identity_json(n, k, cutoff))


def macdonald(lambda_, sigma=None, p1=False):
    """Non-symmetric Macdonald polynomial; sigma defaults to the minimal element."""
    return json.loads(_qfock.macdonald_json(list(lambda_), list(sigma or []), p1))


def straighten(word, n):
    """Normally ordered expansion as a list of (word, coefficient) pairs."""
    return [(tuple(t["word"]), RingElem(t["coefficient"])) for t in json.loads(_qfock.straighten_json(list(word), n))]


def strip_module(strip, n, a0=0):
    """Dimension and character of the image of the R-matrix product of a strip."""
    return json.loads(_qfock.strip_module_json(list(strip), n, a0))


def level1_character(n, k, cutoff):
    """Border-strip character of the level-1 module, keyed by grade."""
    return {int(g): c for g, c in json.loads(_qfock.level1_character_json(n, k, cutoff)).items()}
