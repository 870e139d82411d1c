"""OEIS b-file reading, writing, comparison and fetching."""

from __future__ import annotations

import logging
import os
import re
import time
import urllib.error
import urllib.request
from dataclasses import dataclass

__all__ = [
    "BFileFormatError",
    "FetchError",
    "SequenceTerms",
    "Comparison",
    "parse_bfile",
    "emit_bfile",
    "compare_terms",
    "bfile_url",
    "fetch_bfile",
    "DEFAULT_BASE_URL",
    "BASE_URL_ENV",
]

log = logging.getLogger(__name__)

DEFAULT_BASE_URL = "https://oeis.org"
BASE_URL_ENV = "PRIVPERM_OEIS_BASE_URL"

_ID_RE = re.compile(r"A\d{6}")


class BFileFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class FetchError(RuntimeError):
    def __init__(self, message: str, status: int | None = None) -> None:
        self.status = status
        super().__init__(message)


@dataclass(frozen=True)
class SequenceTerms:
    oeis_id: str
    offset: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.oeis_id and not _ID_RE.fullmatch(self.oeis_id):
            raise ValueError(f"malformed OEIS id {self.oeis_id!r}")
        if not self.values:
            raise ValueError("a sequence needs at least one term")
        object.__setattr__(self, "values", tuple(self.values))

    @classmethod
    def from_pairs(cls, pairs, oeis_id: str = "") -> SequenceTerms:
        pairs = list(pairs)
        if not pairs:
            raise ValueError("a sequence needs at least one term")
        offset = pairs[0][0]
        for j, (idx, _) in enumerate(pairs):
            if idx != offset + j:
                raise ValueError(f"indices must be consecutive, got {idx} after {offset + j - 1}")
        return cls(oeis_id, offset, tuple(v for _, v in pairs))

    @property
    def terms(self) -> list[tuple[int, int]]:
        return [(self.offset + j, v) for j, v in enumerate(self.values)]

    @property
    def last_index(self) -> int:
        return self.offset + len(self.values) - 1

    def __getitem__(self, index: int) -> int:
        if not self.offset <= index <= self.last_index:
            raise IndexError(index)
        return self.values[index - self.offset]


def parse_bfile(text: bytes | str, oeis_id: str = "") -> SequenceTerms:
    """Parse ``<index> <value>`` lines; ``#`` comments and blank lines are skipped."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r").rstrip()
        if not line or line.lstrip().startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise BFileFormatError(f"expected '<index> <value>', got {raw!r}", lineno)
        try:
            idx, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise BFileFormatError(f"non-integer field in {raw!r}", lineno) from None
        if pairs and idx != pairs[-1][0] + 1:
            raise BFileFormatError(f"index {idx} does not follow {pairs[-1][0]}", lineno)
        pairs.append((idx, value))
    if not pairs:
        raise BFileFormatError("no terms found")
    return SequenceTerms.from_pairs(pairs, oeis_id)


def emit_bfile(t: SequenceTerms) -> bytes:
    return "".join(f"{i} {v}\n" for i, v in t.terms).encode("ascii")


@dataclass(frozen=True)
class Comparison:
    first: int
    last: int
    compared: int
    matched: int
    mismatch: tuple[int, int, int] | None  # (index, computed, reference)

    @property
    def ok(self) -> bool:
        return self.mismatch is None

    def summary(self) -> str:
        span = f"indices {self.first}..{self.last}"
        if self.ok:
            return f"all {self.compared} match ({span})"
        idx, got, want = self.mismatch
        return (
            f"mismatch at index {idx}: computed {got}, reference {want} "
            f"({self.matched}/{self.compared} match, {span})"
        )


def compare_terms(computed: SequenceTerms, reference: SequenceTerms) -> Comparison:
    first = max(computed.offset, reference.offset)
    last = min(computed.last_index, reference.last_index)
    if first > last:
        raise ValueError(
            f"no overlap between {computed.offset}..{computed.last_index} "
            f"and {reference.offset}..{reference.last_index}"
        )
    matched = 0
    mismatch = None
    for idx in range(first, last + 1):
        if computed[idx] == reference[idx]:
            matched += 1
        elif mismatch is None:
            mismatch = (idx, computed[idx], reference[idx])
    return Comparison(first, last, last - first + 1, matched, mismatch)


def bfile_url(oeis_id: str, base_url: str | None = None) -> str:
    if not _ID_RE.fullmatch(oeis_id):
        raise ValueError(f"malformed OEIS id {oeis_id!r}")
    base = base_url or os.environ.get(BASE_URL_ENV) or DEFAULT_BASE_URL
    return f"{base.rstrip('/')}/{oeis_id}/b{oeis_id[1:]}.txt"


def fetch_bfile(
    oeis_id: str, base_url: str | None = None, retries: int = 0, timeout: float = 30.0
) -> bytes:
    """GET the b-file for ``oeis_id``. 404 is never retried."""
    url = bfile_url(oeis_id, base_url)
    attempt = 0
    while True:
        try:
            with urllib.request.urlopen(url, timeout=timeout) as resp:
                return resp.read()
        except urllib.error.HTTPError as exc:
            if exc.code == 404:
                raise FetchError(f"{oeis_id}: b-file not found at {url}", 404) from exc
            err = FetchError(f"{oeis_id}: HTTP {exc.code} from {url}", exc.code)
        except urllib.error.URLError as exc:
            err = FetchError(f"{oeis_id}: cannot reach {url}: {exc.reason}")
        if attempt >= retries:
            raise err
        attempt += 1
        log.warning("%s, retry %d/%d", err, attempt, retries)
        time.sleep(min(2.0**attempt, 10.0) * 0.1)
