"""Writing skeleton documents to a file or the output stream."""

from __future__ import annotations

import logging
from pathlib import Path

from coxskel.core.errors import OutputError
from coxskel.core.io import SkeletonDocument, format_skeleton_document

from ..context import CliContext

logger = logging.getLogger("coxskel")


def write_document(document: SkeletonDocument, out: Path | None, context: CliContext) -> None:
    text = format_skeleton_document(document)
    if out is None:
        context.write_text(text)
        return
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OutputError(f"cannot write {out}: {exc.strerror or exc}") from exc
    logger.info("Wrote %s", out)
