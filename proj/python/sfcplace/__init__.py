"""Exact placement of service function chains on edge clouds."""

import json
from fractions import Fraction

from . import _core
from ._core import InputError, IntegrityError, Model, Scenario, SpaceTooLarge, base_tags, generate

__all__ = [
    "InputError",
    "IntegrityError",
    "Model",
    "Scenario",
    "SpaceTooLarge",
    "base_tags",
    "brute_force",
    "generate",
    "solve",
    "sweep",
    "validate",
]


def _fraction(text):
    return None if text is None else Fraction(text)


def solve(scenario_or_model, *, max_nodes=0, time_limit_ms=0.0, backend="bnb", delay_tiebreak=False):
    """Solve to optimality. Objective and bound come back as Fractions and
    the placement as a dict (None when no solution is known)."""
    model = scenario_or_model if isinstance(scenario_or_model, Model) else Model(scenario_or_model)
    out = _core.solve(model, max_nodes=max_nodes, time_limit_ms=time_limit_ms, backend=backend,
                      delay_tiebreak=delay_tiebreak)
    out["objective"] = _fraction(out["objective"])
    out["lower_bound"] = _fraction(out["lower_bound"])
    if out["placement"] is not None:
        out["placement"] = json.loads(out["placement"])
    return out


def validate(scenario, placement, *, bandwidth=False, endpoints=False):
    """List of (kind, subject, detail) violations; empty when valid."""
    doc = placement if isinstance(placement, str) else json.dumps(placement)
    return _core.validate(scenario, doc, bandwidth=bandwidth, endpoints=endpoints)


def brute_force(scenario, *, max_points=10_000_000):
    out = _core.brute_force(scenario, max_points=max_points)
    out["objective"] = _fraction(out["objective"])
    if out["placement"] is not None:
        out["placement"] = json.loads(out["placement"])
    return out


def sweep(axis, points, *, reps=10, seed=1, nested=False, jobs=1, clouds=10, sfcs=4, max_nodes=2_000_000):
    """Run a sweep; returns (rows_csv, summary_csv) as text."""
    return _core.sweep(axis, list(points), reps=reps, seed=seed, nested=nested, jobs=jobs, clouds=clouds,
                       sfcs=sfcs, max_nodes=max_nodes)
