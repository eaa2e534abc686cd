"""Reader for the identity catalog text format."""
import re
from pathlib import Path

from pydantic import ValidationError

from ..exceptions import FormatError
from ..logs.logger import setup_logger
from ..models.catalog_model import Catalog, IdentityEntry, Tag

logger = setup_logger("prodcheck: Catalog Store")

ENTRY_KEYS = ("ref", "tags", "covers", "args", "lhs", "rhs")
LET_RE = re.compile(r"^let\s+([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.*)$")


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


def load_catalog(text: str) -> Catalog:
    """Parse ``let`` definitions and ``entry ... end`` blocks.

    Raises:
        FormatError: on unknown keys, unknown tags, duplicate ids or missing fields.
    """
    macros: dict[str, str] = {}
    entries: list[IdentityEntry] = []
    seen: set[str] = set()
    current: dict | None = None
    entry_line = 0
    last_key: str | None = None
    last_macro: str | None = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        stripped = line.strip()
        words = stripped.split(maxsplit=1)

        if current is None:
            if line[0].isspace() and last_macro is not None:
                macros[last_macro] += " " + stripped
                continue
            last_macro = None
            if match := LET_RE.match(stripped):
                name, body = match.groups()
                if name in macros:
                    raise FormatError(lineno, f"definition {name} repeated")
                macros[name] = body
                last_macro = name
            elif words[0] == "entry" and len(words) == 2:
                if words[1] in seen:
                    raise FormatError(lineno, f"duplicate entry id {words[1]}")
                current, entry_line, last_key = {"id": words[1]}, lineno, None
            else:
                raise FormatError(lineno, "expected 'let <name> = <term>' or 'entry <id>'")
            continue

        if stripped == "end":
            entries.append(_build_entry(current, entry_line))
            seen.add(current["id"])
            current = None
            continue
        if words[0] in ENTRY_KEYS:
            if words[0] in current:
                raise FormatError(lineno, f"field {words[0]} repeated in entry {current['id']}")
            last_key = words[0]
            current[last_key] = words[1] if len(words) > 1 else ""
        elif last_key is not None:
            current[last_key] += " " + stripped
        else:
            raise FormatError(lineno, f"expected one of {', '.join(ENTRY_KEYS)}")

    if current is not None:
        raise FormatError(entry_line, f"entry {current['id']} is not closed with 'end'")
    logger.info(f"Loaded catalog: {len(entries)} entries, {len(macros)} definitions")
    return Catalog(entries=entries, macros=macros)


def _build_entry(fields: dict, lineno: int) -> IdentityEntry:
    for key in ("lhs", "rhs", "tags"):
        if not fields.get(key):
            raise FormatError(lineno, f"entry {fields['id']} lacks {key}")
    try:
        tags = frozenset(Tag(t) for t in fields["tags"].split())
    except ValueError as e:
        raise FormatError(lineno, f"entry {fields['id']}: {e}") from None
    args = tuple(fields["args"].split()) if "args" in fields else None
    try:
        return IdentityEntry(id=fields["id"], lhs=fields["lhs"], rhs=fields["rhs"],
                             ref=fields.get("ref", ""), tags=tags, args=args,
                             covers=frozenset(fields.get("covers", "").split()))
    except ValidationError as e:
        raise FormatError(lineno, f"entry {fields['id']}: {e.errors()[0]['msg']}") from None


def read_catalog(path: str | Path) -> Catalog:
    try:
        text = Path(path).read_text()
    except OSError as e:
        logger.error(f"Could not read catalog {path}: {e}")
        raise FormatError(0, f"cannot read {path}: {e.strerror}") from None
    return load_catalog(text)


def load_coverage(text: str) -> dict[str, str]:
    """Parse a coverage manifest: one ``<topic> <description>`` per line.

    Raises:
        FormatError: on a repeated topic.
    """
    topics: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        topic, _, description = line.partition(" ")
        if topic in topics:
            raise FormatError(lineno, f"topic {topic} repeated")
        topics[topic] = description.strip()
    return topics


def read_coverage(path: str | Path) -> dict[str, str]:
    try:
        text = Path(path).read_text()
    except OSError as e:
        logger.error(f"Could not read coverage manifest {path}: {e}")
        raise FormatError(0, f"cannot read {path}: {e.strerror}") from None
    return load_coverage(text)
