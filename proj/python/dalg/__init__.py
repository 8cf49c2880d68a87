"""Exact differential algebra: Ritt reduction, Groebner elimination and the checkers built on them."""

from ._dalg import (  # noqa: F401
    DalgError,
    __version__,
    catalog,
    derive,
    info,
    member,
    normalize,
    prolong,
    ritt_reduce,
    run,
    trdeg_check,
    witness_check,
    wronskian,
)
