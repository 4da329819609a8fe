"""Exact q-series congruence toolkit: mock theta and eta-quotient coefficients,
congruence scanning, necessary-condition verdicts, Dedekind sums, multiplier
systems, and exact cusp leading-constant checks."""

from ._qcong import *  # noqa: F401,F403
