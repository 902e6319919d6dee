"""Complex-pair JSON encoding and atomic file output."""
import json
import os
import tempfile

from .exceptions import ParseError


def pair(z):
    z = complex(z)
    return [z.real, z.imag]


def pairs(values):
    return [pair(z) for z in values]


def unpair(obj, field):
    if (
        not isinstance(obj, (list, tuple))
        or len(obj) != 2
        or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in obj)
    ):
        raise ParseError(field, f"expected [re, im] number pair, got {obj!r}")
    return complex(float(obj[0]), float(obj[1]))


def loads_object(text, what):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(what, f"invalid JSON ({exc.msg} at line {exc.lineno})") from None
    if not isinstance(data, dict):
        raise ParseError(what, "top level must be a JSON object")
    return data


def dumps(data):
    return json.dumps(data, indent=2, allow_nan=False) + "\n"


def atomic_write(path, text):
    """Write ``text`` to ``path`` via a temporary file in the same directory."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
