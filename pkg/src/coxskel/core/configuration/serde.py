"""Serialization helpers for persisting CLI configuration."""

from __future__ import annotations

from collections.abc import Mapping
from typing import Any

from .models import AnalysisPreferences, CLIConfig, OutputPreferences
from .utils import coerce_bool, coerce_positive_int, normalize_output_format, normalize_verbosity_label


def config_from_dict(payload: Mapping[str, Any]) -> CLIConfig:
    raw_verbosity = payload.get("verbosity")
    verbosity = normalize_verbosity_label(raw_verbosity if isinstance(raw_verbosity, str) else None)

    outputs_payload = payload.get("outputs")
    outputs = OutputPreferences(
        format=normalize_output_format(
            outputs_payload.get("format") if isinstance(outputs_payload, Mapping) else None,
        ),
    )

    analysis_payload = payload.get("analysis")
    if not isinstance(analysis_payload, Mapping):
        analysis_payload = {}
    analysis = AnalysisPreferences(
        strict=coerce_bool(analysis_payload.get("strict"), default=False),
        verify_lp=coerce_bool(analysis_payload.get("verify_lp"), default=False),
        workers=coerce_positive_int(analysis_payload.get("workers"), minimum=1, default=None),
        added_invariant_m=coerce_positive_int(analysis_payload.get("added_invariant_m"), minimum=1, default=None),
    )

    return CLIConfig(verbosity=verbosity, outputs=outputs, analysis=analysis)


def config_to_dict(config: CLIConfig) -> dict[str, Any]:
    payload: dict[str, Any] = {}

    if config.verbosity:
        normalized = normalize_verbosity_label(config.verbosity)
        if normalized:
            payload["verbosity"] = normalized

    if config.outputs.format != "human":
        payload["outputs"] = {"format": config.outputs.format}

    if not config.analysis.is_default():
        analysis_payload: dict[str, Any] = {}
        if config.analysis.strict:
            analysis_payload["strict"] = True
        if config.analysis.verify_lp:
            analysis_payload["verify_lp"] = True
        if config.analysis.workers is not None:
            analysis_payload["workers"] = config.analysis.workers
        if config.analysis.added_invariant_m is not None:
            analysis_payload["added_invariant_m"] = config.analysis.added_invariant_m
        payload["analysis"] = analysis_payload

    return payload
