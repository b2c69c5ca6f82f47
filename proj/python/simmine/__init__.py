"""Translate process models between Declare and imperative control flow by
simulating the source model and mining a model of the other paradigm."""

from ._simmine import (
    Log,
    Model,
    SimmineError,
    appropriateness,
    bundled,
    bundled_names,
    equivalent,
    fitness,
    load_model,
    load_xes,
    log_from_traces,
    mine,
    params,
    read_model,
    read_xes,
    simulate,
    translate,
)

__all__ = [
    "Log",
    "Model",
    "SimmineError",
    "appropriateness",
    "bundled",
    "bundled_names",
    "equivalent",
    "fitness",
    "load_model",
    "load_xes",
    "log_from_traces",
    "mine",
    "params",
    "read_model",
    "read_xes",
    "simulate",
    "translate",
]
__version__ = "0.1.0"
