"""Exact computations with quiver representations.

Representations travel as JSON documents in the same format the ``qrep``
CLI reads and writes.  The helpers here decode the JSON-string results of
the compiled core into plain Python objects.
"""

import json as _json

try:
    from . import _qrep as _core
except ImportError:  # build-tree layout: extension sits directly on sys.path
    import _qrep as _core

effective_m = _core.effective_m
euler_pairing = _core.euler_pairing
lambda_bound = _core.lambda_bound
tits_form = _core.tits_form

__all__ = [
    "check",
    "effective_m",
    "euler_pairing",
    "hn",
    "hom_ext",
    "jh",
    "lambda_bound",
    "langton",
    "random_rep",
    "semi_invariant",
    "tau",
    "tits_form",
]


def _doc(rep):
    return rep if isinstance(rep, str) else _json.dumps(rep)


def random_rep(quiver, dims, field="rat", seed=0):
    return _json.loads(_core.random_rep(quiver, dims, field, seed))


def check(rep, theta, strategy="auto", samples=100, seed=0, cap=1_000_000):
    return _json.loads(_core.check(_doc(rep), theta, strategy, samples, seed, cap))


def hn(rep, theta, cap=1_000_000):
    return _json.loads(_core.hn(_doc(rep), theta, cap))


def jh(rep, theta, cap=1_000_000):
    return _json.loads(_core.jh(_doc(rep), theta, cap))


def tau(rep, inverse=False):
    return _json.loads(_core.tau(_doc(rep), inverse))


def hom_ext(m, n):
    return _json.loads(_core.hom_ext(_doc(m), _doc(n)))


def semi_invariant(m, v):
    return _json.loads(_core.semi_invariant(_doc(m), _doc(v)))


def langton(rep, theta, max_iter=100):
    return _json.loads(_core.langton(_doc(rep), theta, max_iter))
