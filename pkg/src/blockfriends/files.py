"""Text format for design files.

Lines starting with `#` are comments, blank lines are ignored.  The first
data line may be `v=<int>`; every other data line is one block written as
whitespace-separated 1-based labels.  When `v=` is absent the ground-set
size is the largest label seen.  The writer emits `v=<int>` followed by the
blocks sorted lexicographically, single-space separated.
"""

from __future__ import annotations

from .blocks import labels_from_mask, mask_from_labels, MAX_GROUND
from .designs import BlockDesign, DesignError, design, family


class DesignFileError(DesignError):
    """Parse failure, with the 1-based line number where it happened."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _parse(text: str) -> tuple[int, list[int]]:
    v_declared: int | None = None
    raw: list[tuple[int, tuple[int, ...]]] = []
    seen_data = False
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped.startswith("v="):
            if seen_data or v_declared is not None:
                raise DesignFileError(lineno, "v= must be the first data line")
            try:
                v_declared = int(stripped[2:])
            except ValueError:
                raise DesignFileError(lineno, f"bad ground-set size {stripped!r}") from None
            if not 1 <= v_declared <= MAX_GROUND:
                raise DesignFileError(lineno, f"v={v_declared} outside 1..{MAX_GROUND}")
            continue
        seen_data = True
        try:
            labels = tuple(int(tok) for tok in stripped.split())
        except ValueError:
            raise DesignFileError(lineno, f"non-integer token in {stripped!r}") from None
        if any(x < 1 for x in labels):
            raise DesignFileError(lineno, "labels must be positive")
        raw.append((lineno, labels))
    if not raw:
        raise DesignFileError(1, "no blocks in file")
    max_label = max(max(labels) for _, labels in raw)
    v = v_declared if v_declared is not None else max_label
    masks: list[int] = []
    seen: set[int] = set()
    for lineno, labels in raw:
        try:
            m = mask_from_labels(labels, v)
        except ValueError as exc:
            raise DesignFileError(lineno, str(exc)) from None
        if m in seen:
            raise DesignFileError(lineno, f"duplicate block {stripped_labels(labels)}")
        seen.add(m)
        masks.append(m)
    return v, masks


def stripped_labels(labels: tuple[int, ...]) -> str:
    return " ".join(str(x) for x in sorted(labels))


def load_design(text: str, name: str = "") -> BlockDesign:
    """Parse and validate; raises DesignError with a witness if the axioms fail."""
    v, masks = _parse(text)
    return design(v, masks, name)


def load_family(text: str, name: str = "") -> BlockDesign:
    """Parse without insisting on the BIBD axioms (blocks must still be uniform)."""
    v, masks = _parse(text)
    return family(v, masks, name)


def save_design(d: BlockDesign, comment: str = "") -> str:
    """Render a design in the file format; blocks come out sorted lexicographically."""
    if d.b == 1 and d.blocks[0] == 0:
        raise DesignError("the empty-block design has no file representation")
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"# {part}")
    lines.append(f"v={d.v}")
    for labels in sorted(labels_from_mask(m) for m in d.blocks):
        lines.append(" ".join(str(x) for x in labels))
    return "\n".join(lines) + "\n"
