"""Minimum/maximum finding with exact query accounting.

Three finder modes share one contract: the returned key is always the true
minimum, only the charge differs.

* ``Classical``: a scan, charging ``N`` queries for ``N`` candidates.
* ``IdealQuantum``: charges ``ceil(sqrt(N))``.
* ``DHSim``: simulates the Durr-Hoyer threshold walk and charges the Grover
  iterations it would spend; see :func:`_dh_walk`.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from typing import Callable, Sequence, Union

import numpy as np

__all__ = [
    "Classical",
    "DHSim",
    "FinderMode",
    "IdealQuantum",
    "QueryLedger",
    "ceil_sqrt",
    "find_max",
    "find_min",
    "find_min_columns",
    "parse_mode",
]

KINDS = ("search", "update")


def ceil_sqrt(n: int) -> int:
    """Exact ``ceil(sqrt(n))`` for nonnegative integers."""
    r = math.isqrt(n)
    return r + (r * r < n)


class QueryLedger:
    """Counts oracle queries, keyed by kind (search/update) and phase label.

    ``setup_reads`` tallies the plain weight reads done while initialising an
    algorithm's tables. They are recorded but kept out of ``total``, which
    covers the main loop only.
    """

    def __init__(self):
        self._counts: dict[str, Counter] = {k: Counter() for k in KINDS}
        self.setup_reads = 0

    def charge(self, count: int, kind: str = "search", phase: str | None = None) -> None:
        count = int(count)
        if count < 0:
            raise ValueError(f"negative charge {count}")
        if kind == "setup":
            self.setup_reads += count
            return
        if kind not in KINDS:
            raise ValueError(f"unknown ledger kind {kind!r}")
        self._counts[kind][phase or kind] += count

    @property
    def search_queries(self) -> int:
        return sum(self._counts["search"].values())

    @property
    def update_queries(self) -> int:
        return sum(self._counts["update"].values())

    @property
    def total(self) -> int:
        return self.search_queries + self.update_queries

    @property
    def phase_breakdown(self) -> dict[str, int]:
        out: Counter = Counter()
        for kind in KINDS:
            out.update(self._counts[kind])
        return dict(out)

    def entries(self):
        """Yield ``(kind, phase, count)`` for every nonzero counter."""
        for kind in KINDS:
            for phase, c in self._counts[kind].items():
                yield kind, phase, c

    def merge(self, other: "QueryLedger", scale: Fraction | int = 1) -> None:
        """Add ``other`` into this ledger, each counter scaled and rounded up."""
        scale = Fraction(scale)
        for kind, phase, c in other.entries():
            self._counts[kind][phase] += math.ceil(c * scale)
        self.setup_reads += math.ceil(other.setup_reads * scale)

    def as_dict(self) -> dict:
        return {
            "search_queries": self.search_queries,
            "update_queries": self.update_queries,
            "total": self.total,
            "setup_reads": self.setup_reads,
            "phases": self.phase_breakdown,
        }

    def __repr__(self):
        return (
            f"QueryLedger(search={self.search_queries}, update={self.update_queries}, "
            f"setup={self.setup_reads})"
        )


class FinderMode:
    """Base class for finder modes. ``code`` selects the compiled kernel path."""

    name = ""
    code: int | None = None

    def cost(self, n: int) -> int:
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}()"

    def __eq__(self, other):
        return type(self) is type(other)

    def __hash__(self):
        return hash(type(self))


class Classical(FinderMode):
    name = "classical"
    code = 0

    def cost(self, n: int) -> int:
        return n


class IdealQuantum(FinderMode):
    name = "ideal-quantum"
    code = 1

    def cost(self, n: int) -> int:
        return ceil_sqrt(n)


class DHSim(FinderMode):
    """Simulated Durr-Hoyer minimum finding.

    Holds its own random stream; one instance belongs to one run.
    """

    name = "dh-sim"

    def __init__(self, seed: int = 0):
        self.seed = seed
        self.rng = np.random.default_rng(seed)

    def __repr__(self):
        return f"DHSim(seed={self.seed})"

    def __eq__(self, other):
        return isinstance(other, DHSim) and other.seed == self.seed

    def __hash__(self):
        return hash((DHSim, self.seed))


MODE_NAMES = ("classical", "ideal-quantum", "dh-sim")


def parse_mode(mode: Union[str, FinderMode], seed: int = 0) -> FinderMode:
    if isinstance(mode, FinderMode):
        return mode
    key = mode.lower().replace("_", "-")
    if key in ("classical", "c"):
        return Classical()
    if key in ("ideal-quantum", "ideal", "quantum", "q"):
        return IdealQuantum()
    if key in ("dh-sim", "dhsim", "dh"):
        return DHSim(seed)
    raise ValueError(f"unknown finder mode {mode!r}; expected one of {MODE_NAMES}")


def _dh_walk(keys: np.ndarray, rng: np.random.Generator) -> tuple[int, int]:
    """Return ``(argmin, charge)`` for one simulated Durr-Hoyer run.

    Start from a uniformly random threshold. While some key is strictly
    below the threshold key, pay ``ceil(pi/4 * sqrt(N/|B|))`` for a Grover
    search that finds a uniform element of the set ``B`` of better
    candidates, and move the threshold there. The final, unsuccessful search
    costs ``ceil(pi/4 * sqrt(N))``.
    """
    n = keys.size
    y = int(rng.integers(n))
    charge = 0
    while True:
        below = np.flatnonzero(keys < keys[y])
        if below.size == 0:
            break
        charge += math.ceil(math.pi / 4 * math.sqrt(n / below.size))
        y = int(below[rng.integers(below.size)])
    charge += math.ceil(math.pi / 4 * math.sqrt(n))
    return y, charge


def _as_keys(keys, size):
    if callable(keys):
        if size is None:
            raise TypeError("a callable key needs an explicit size")
        keys = [keys(i) for i in range(size)]
    arr = np.asarray(keys, dtype=np.float64).ravel()
    if arr.size == 0:
        raise ValueError("cannot search an empty candidate set")
    return arr


def find_min(
    keys: Union[Sequence[float], np.ndarray, Callable[[int], float]],
    mode: FinderMode,
    ledger: QueryLedger,
    *,
    size: int | None = None,
    kind: str = "search",
    phase: str | None = None,
) -> tuple[int, float]:
    """Locate a minimal key and charge the ledger.

    Parameters
    ----------
    keys : array-like or callable
        Candidate keys, or ``key(i)`` together with ``size``.
    mode : FinderMode
    ledger : QueryLedger
    kind, phase : str
        Ledger counter to charge.

    Returns
    -------
    (index, key)
        Classical and IdealQuantum return the lowest minimal index. DHSim may
        return any minimal index.
    """
    arr = _as_keys(keys, size)
    if isinstance(mode, DHSim):
        idx, charge = _dh_walk(arr, mode.rng)
    else:
        idx, charge = int(np.argmin(arr)), mode.cost(arr.size)
    ledger.charge(charge, kind=kind, phase=phase)
    return idx, float(arr[idx])


def find_max(keys, mode: FinderMode, ledger: QueryLedger, **kw) -> tuple[int, float]:
    """Locate a maximal key; same contract as :func:`find_min`."""
    arr = _as_keys(keys, kw.pop("size", None))
    idx, neg = find_min(-arr, mode, ledger, **kw)
    return idx, -neg


def find_min_columns(
    keys: np.ndarray,
    mode: FinderMode,
    ledger: QueryLedger,
    *,
    kind: str = "search",
    phase: str | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """One independent :func:`find_min` per column of a 2-D key table.

    Returns the row index and value of each column minimum.
    """
    keys = np.asarray(keys, dtype=np.float64)
    rows, cols = keys.shape
    if rows == 0:
        raise ValueError("cannot search an empty candidate set")
    if cols == 0:
        return np.empty(0, dtype=np.int64), np.empty(0)
    if isinstance(mode, DHSim):
        arg = np.empty(cols, dtype=np.int64)
        total = 0
        for c in range(cols):
            arg[c], charge = _dh_walk(keys[:, c], mode.rng)
            total += charge
    else:
        arg = np.argmin(keys, axis=0)
        total = cols * mode.cost(rows)
    ledger.charge(total, kind=kind, phase=phase)
    return arg, keys[arg, np.arange(cols)]
