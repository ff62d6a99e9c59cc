"""Identifiers: ordering and string encoding.

In memory an id is a str, a non-negative int, or a tuple of ids.  On disk
every id is a single token over ``[A-Za-z0-9_.-]``: digits decode to ints,
``-k.`` opens a k-tuple in prefix form, anything else is a plain string.
"""
import re

from .errors import FormatError

_ATOM = re.compile(r"[A-Za-z0-9_]+\Z")


def sort_key(v):
    if isinstance(v, bool):
        raise TypeError("bool is not an id")
    if isinstance(v, int):
        return (0, v)
    if isinstance(v, str):
        return (1, v)
    if isinstance(v, tuple):
        return (2, tuple(sort_key(x) for x in v))
    raise TypeError(f"not an id: {v!r}")


def sorted_ids(items):
    return sorted(items, key=sort_key)


def encode_id(v):
    if isinstance(v, bool):
        raise FormatError("bool is not an id")
    if isinstance(v, int):
        if v < 0:
            raise FormatError(f"negative integer id {v}")
        return str(v)
    if isinstance(v, str):
        if not _ATOM.match(v) or v.isdigit():
            raise FormatError(f"id {v!r} is not encodable")
        return v
    if isinstance(v, tuple):
        return ".".join([f"-{len(v)}"] + [encode_id(x) for x in v])
    raise FormatError(f"not an id: {v!r}")


def decode_id(s):
    if not isinstance(s, str) or not s:
        raise FormatError(f"bad id token {s!r}")
    parts = s.split(".")
    value, pos = _decode(parts, 0, s)
    if pos != len(parts):
        raise FormatError(f"trailing data in id {s!r}")
    return value


def _decode(parts, pos, whole):
    if pos >= len(parts):
        raise FormatError(f"truncated id {whole!r}")
    tok = parts[pos]
    if tok.startswith("-"):
        if not tok[1:].isdigit():
            raise FormatError(f"bad tuple header in {whole!r}")
        items = []
        pos += 1
        for _ in range(int(tok[1:])):
            item, pos = _decode(parts, pos, whole)
            items.append(item)
        return tuple(items), pos
    if tok.isdigit():
        return int(tok), pos + 1
    if not _ATOM.match(tok):
        raise FormatError(f"bad id token {tok!r} in {whole!r}")
    return tok, pos + 1
