"""Memoised evaluation of U_r(n) and S_r(n) by their order-2 recurrences.

    4 U_{r+2}(n) = n^2 U_r(n) - 4n(n-1) U_r(n-2)
      S_{r+2}(n) = n^2 S_r(n) - 2n(2n-1) S_r(n-1)

Both split by the parity of r, so a request touches only seeds of its own
parity: U_0/S_0 for even r, U_1/S_1 for odd r.
"""
from __future__ import annotations

import os
import threading
from collections import OrderedDict
from fractions import Fraction
from typing import Callable

from .numeric_core import binomial

__all__ = [
    "RecurrenceTable",
    "u_recurrence",
    "s_recurrence",
    "u_seed",
    "s_seed",
    "default_tables",
]

CACHE_CAP_ENV = "CENTRED_SUMS_CACHE_CAP"


def u_seed(r: int, n: int) -> Fraction:
    if n < 0:
        return Fraction(0)
    if r == 0:
        return Fraction(1 << n)
    if r == 1:
        m, odd = divmod(n, 2)
        if odd:
            return Fraction((2 * m + 1) * binomial(2 * m, m))
        return Fraction(m * binomial(2 * m, m))
    raise ValueError(f"no seed for r={r}")


def s_seed(r: int, n: int) -> Fraction:
    if n < 0:
        return Fraction(0)
    if r == 0:
        return Fraction(1 << (2 * n))
    if r == 1:
        return Fraction(n * binomial(2 * n, n))
    raise ValueError(f"no seed for r={r}")


class RecurrenceTable:
    """Memo table for one of the two recurrences.

    ``kind`` is ``"U"`` (argument step 2) or ``"S"`` (argument step 1).
    Inserts are insert-if-absent under a lock, so concurrent readers only
    ever see fully computed entries. ``cap`` bounds the number of entries
    (oldest evicted first); ``None`` means unbounded.
    """

    def __init__(self, kind: str, cap: int | None = None):
        if kind not in ("U", "S"):
            raise ValueError(f"kind must be 'U' or 'S', got {kind!r}")
        self.kind = kind
        self.cap = cap
        self._memo: OrderedDict[tuple[int, int], Fraction] = OrderedDict()
        self._lock = threading.Lock()
        self.seeds_touched: set[tuple[int, int]] = set()

    def __len__(self) -> int:
        return len(self._memo)

    def __contains__(self, key: tuple[int, int]) -> bool:
        return key in self._memo

    def get(self, r: int, n: int) -> Fraction | None:
        return self._memo.get((r, n))

    def entries(self) -> dict[tuple[int, int], Fraction]:
        with self._lock:
            return dict(self._memo)

    def clear(self) -> None:
        with self._lock:
            self._memo.clear()
            self.seeds_touched.clear()

    def _put(self, r: int, n: int, value: Fraction) -> Fraction:
        with self._lock:
            existing = self._memo.get((r, n))
            if existing is not None:
                return existing
            self._memo[(r, n)] = value
            if self.cap is not None:
                while len(self._memo) > self.cap:
                    self._memo.popitem(last=False)
            return value

    def _seed(self, r: int, n: int) -> Fraction:
        self.seeds_touched.add((r, n))
        return (u_seed if self.kind == "U" else s_seed)(r, n)

    def value(self, r: int, n: int) -> Fraction:
        if r < 0 or n < 0:
            raise ValueError(f"r and n must be >= 0, got r={r}, n={n}")
        hit = self._memo.get((r, n))
        if hit is not None:
            return hit

        step = 2 if self.kind == "U" else 1
        base = r % 2
        levels = (r - base) // 2
        # Level i (order base + 2i) is needed at arguments n - j*step, j <= levels - i.
        column: dict[int, Fraction] = {}
        for j in range(levels + 1):
            a = n - j * step
            column[a] = self._cached_or(base, a, self._seed) if a >= 0 else Fraction(0)
        for i in range(1, levels + 1):
            order = base + 2 * i
            nxt: dict[int, Fraction] = {}
            for j in range(levels - i + 1):
                a = n - j * step
                if a < 0:
                    nxt[a] = Fraction(0)
                    continue
                hit = self._memo.get((order, a))
                if hit is None:
                    hit = self._put(order, a, self._step(a, column[a], column[a - step]))
                nxt[a] = hit
            column = nxt
        return column[n]

    def _cached_or(self, r: int, n: int, compute: Callable[[int, int], Fraction]) -> Fraction:
        hit = self._memo.get((r, n))
        if hit is not None:
            return hit
        return self._put(r, n, compute(r, n))

    def _step(self, n: int, same: Fraction, lower: Fraction) -> Fraction:
        if self.kind == "U":
            return (n * n * same - 4 * n * (n - 1) * lower) / 4
        return n * n * same - 2 * n * (2 * n - 1) * lower


def _cap_from_env() -> int | None:
    raw = os.environ.get(CACHE_CAP_ENV)
    if not raw:
        return None
    cap = int(raw)
    if cap < 1:
        raise ValueError(f"{CACHE_CAP_ENV} must be a positive integer, got {raw!r}")
    return cap


_TABLES: dict[str, RecurrenceTable] = {}
_TABLES_LOCK = threading.Lock()


def default_tables() -> dict[str, RecurrenceTable]:
    with _TABLES_LOCK:
        if not _TABLES:
            cap = _cap_from_env()
            _TABLES["U"] = RecurrenceTable("U", cap)
            _TABLES["S"] = RecurrenceTable("S", cap)
        return _TABLES


def u_recurrence(r: int, n: int, table: RecurrenceTable | None = None) -> Fraction:
    """U_r(n) from the recurrence in r, seeded by U_0 and U_1."""
    if table is None:
        table = default_tables()["U"]
    if table.kind != "U":
        raise ValueError("u_recurrence needs a 'U' table")
    return table.value(r, n)


def s_recurrence(r: int, n: int, table: RecurrenceTable | None = None) -> Fraction:
    """S_r(n) from its own order-2 recurrence, seeded by S_0 and S_1."""
    if table is None:
        table = default_tables()["S"]
    if table.kind != "S":
        raise ValueError("s_recurrence needs an 'S' table")
    return table.value(r, n)
