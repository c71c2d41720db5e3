"""Deterministic emitters: JSON, CSV, DOT and SVG for word-addressed trees.

All emitters take a mapping from L/R words to already-formatted label
strings (insertion order is preserved), so the same code renders form
topographs, Markov trees, shadow trees and Euclid trees.  Numeric
content must arrive as decimal strings; nothing here touches numbers.
"""

from __future__ import annotations

import json
from xml.sax.saxutils import escape

__all__ = ["json_text", "csv_text", "dot_tree", "svg_tree"]


def json_text(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def csv_text(rows, header: tuple[str, ...] | None = None) -> str:
    lines = []
    if header is not None:
        lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(str(c) for c in row))
    return "\n".join(lines) + ("\n" if lines else "")


def _node_id(word: str) -> str:
    return "n" + word


def dot_tree(labels: dict[str, str], graph_name: str = "topograph") -> str:
    lines = [f"digraph {graph_name} {{", "  node [shape=box, fontname=monospace];"]
    for word, label in labels.items():
        lines.append(f'  {_node_id(word)} [label="{label}"];')
    for word in labels:
        if word and word[:-1] in labels:
            lines.append(f'  {_node_id(word[:-1])} -> {_node_id(word)} [label="{word[-1]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def svg_tree(labels: dict[str, str], cell_width: int = 110, row_height: int = 64) -> str:
    """Rows-per-level layout; node x-position comes from reading the word
    as a binary fraction (L=0, R=1)."""
    depth = max((len(w) for w in labels), default=0)
    leaves = 1 << depth
    width = max(leaves * cell_width, 3 * cell_width)
    height = (depth + 1) * row_height + row_height // 2

    def pos(word: str) -> tuple[int, int]:
        level = len(word)
        index = 0
        for ch in word:
            index = 2 * index + (1 if ch == "R" else 0)
        cells = 1 << level
        x = (2 * index + 1) * width // (2 * cells)
        y = row_height // 2 + level * row_height
        return x, y

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<style>text{font-family:monospace;font-size:12px;text-anchor:middle;}'
        'line{stroke:#888;}</style>',
    ]
    for word in labels:
        if word and word[:-1] in labels:
            x1, y1 = pos(word[:-1])
            x2, y2 = pos(word)
            parts.append(f'<line x1="{x1}" y1="{y1 + 8}" x2="{x2}" y2="{y2 - 12}"/>')
    for word, label in labels.items():
        x, y = pos(word)
        parts.append(f'<text x="{x}" y="{y}">{escape(label)}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
