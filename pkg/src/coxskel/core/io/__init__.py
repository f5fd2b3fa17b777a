"""Reading and writing skeleton files."""

from __future__ import annotations

from .skeleton_file import (
    Conventions,
    SkeletonDocument,
    decode_skeleton_document,
    document_to_dict,
    format_skeleton,
    format_skeleton_document,
    load_skeleton_document,
    parse_skeleton_file,
    read_skeleton_document,
    read_text,
    skeleton_to_dict,
)

__all__ = [
    "Conventions",
    "SkeletonDocument",
    "decode_skeleton_document",
    "document_to_dict",
    "format_skeleton",
    "format_skeleton_document",
    "load_skeleton_document",
    "parse_skeleton_file",
    "read_skeleton_document",
    "read_text",
    "skeleton_to_dict",
]
