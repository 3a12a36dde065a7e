"""Command-line front end: argument parsing, documents, tables and export."""

from .commands import build_parser, run
from .documents import (
    algebra_document,
    closure_document,
    constants_document,
    dump_document,
    export_structure_constants,
    load_structure_constants,
    root_table_document,
)
from .tables import render_table

__all__ = [
    "algebra_document",
    "build_parser",
    "closure_document",
    "constants_document",
    "dump_document",
    "export_structure_constants",
    "load_structure_constants",
    "render_table",
    "root_table_document",
    "run",
]
