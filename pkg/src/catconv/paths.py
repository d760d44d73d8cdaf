"""Up/down lattice paths, signed Dyck paths and their enumerators.

A path is stored as its canonical UD-string; ``U`` is the step (1, 1) and
``D`` the step (1, -1). Paths start at the origin. Position ``t`` is the
x-coordinate after ``t`` steps, so the x-intercepts of a path are the
positions where its running height is zero. Position 0 always counts.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import accumulate, combinations, product
from typing import Iterable, Iterator

from . import caps as _caps
from .errors import DomainError, PathSyntaxError


class Step(str, enum.Enum):
    UP = "U"
    DOWN = "D"


class Sign(str, enum.Enum):
    PLUS = "+"
    MINUS = "-"


_SORT_KEY = str.maketrans("UD", "01")
_REFLECT = str.maketrans("UD", "DU")


class Path:
    """Immutable finite sequence of up and down steps."""

    __slots__ = ("steps",)

    def __init__(self, steps: str | Iterable[Step] = ""):
        if not isinstance(steps, str):
            steps = "".join(Step(s).value for s in steps)
        for i, ch in enumerate(steps):
            if ch != "U" and ch != "D":
                raise PathSyntaxError(steps, i)
        object.__setattr__(self, "steps", steps)

    @classmethod
    def _trusted(cls, steps: str) -> "Path":
        # skips validation; only for strings built from "U"/"D" internally
        p = object.__new__(cls)
        object.__setattr__(p, "steps", steps)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("Path is immutable")

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[Step]:
        return (Step(ch) for ch in self.steps)

    def __str__(self) -> str:
        return self.steps

    def __repr__(self) -> str:
        return f"Path({self.steps!r})"

    def __eq__(self, other) -> bool:
        if isinstance(other, Path):
            return self.steps == other.steps
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.steps)

    def __lt__(self, other: "Path") -> bool:
        # lexicographic with U < D
        return self.steps.translate(_SORT_KEY) < other.steps.translate(_SORT_KEY)

    def __add__(self, other: "Path") -> "Path":
        return concat(self, other)

    @property
    def length(self) -> int:
        return len(self.steps)

    def heights(self) -> list[int]:
        """Running heights ``height(0..length)``; always starts at 0."""
        return list(accumulate((1 if ch == "U" else -1 for ch in self.steps), initial=0))

    def height(self, t: int) -> int:
        if not 0 <= t <= len(self.steps):
            raise IndexError(t)
        ups = self.steps.count("U", 0, t)
        return 2 * ups - t

    @property
    def endpoint(self) -> tuple[int, int]:
        n = len(self.steps)
        return n, 2 * self.steps.count("U") - n


EMPTY = Path._trusted("")


def parse_path(text: str) -> Path:
    """Parse a canonical UD-string; raises PathSyntaxError with the bad position."""
    return Path(text)


def sort_key(p: Path) -> str:
    return p.steps.translate(_SORT_KEY)


def x_intercepts(p: Path) -> list[int]:
    out = [0]
    h = 0
    for t, ch in enumerate(p.steps, 1):
        h += 1 if ch == "U" else -1
        if h == 0:
            out.append(t)
    return out


def is_even_zeroed(p: Path) -> bool:
    """True iff every x-intercept of ``p`` is divisible by 4."""
    h = 0
    for t, ch in enumerate(p.steps, 1):
        h += 1 if ch == "U" else -1
        if h == 0 and t & 3:
            return False
    return True


def is_balanced(p: Path) -> bool:
    return 2 * p.steps.count("U") == len(p.steps)


def is_dyck(p: Path) -> bool:
    h = 0
    for ch in p.steps:
        h += 1 if ch == "U" else -1
        if h < 0:
            return False
    return h == 0


def require_balanced(p: Path) -> Path:
    if not is_balanced(p):
        raise DomainError("path is not balanced", p.steps)
    return p


def require_dyck(p: Path) -> Path:
    if not is_dyck(p):
        raise DomainError("path is not a Dyck path", p.steps)
    return p


def parameter(p: "Path | SignedDyckPath") -> int:
    """Number of up-steps of a balanced (possibly signed) path."""
    if isinstance(p, SignedDyckPath):
        p = p.path
    require_balanced(p)
    return len(p.steps) // 2


def reflect(p: Path) -> Path:
    return Path._trusted(p.steps.translate(_REFLECT))


def concat(p: Path, q: Path) -> Path:
    return Path._trusted(p.steps + q.steps)


@dataclass(frozen=True)
class SignedDyckPath:
    sign: Sign
    path: Path

    def __post_init__(self):
        object.__setattr__(self, "sign", Sign(self.sign))
        require_dyck(self.path)

    @property
    def parameter(self) -> int:
        return len(self.path.steps) // 2

    def __str__(self) -> str:
        return f"{self.sign.value}({self.path.steps})"

    @classmethod
    def parse(cls, text: str) -> "SignedDyckPath":
        text = text.strip()
        if len(text) < 3 or text[0] not in "+-" or text[1] != "(" or text[-1] != ")":
            raise DomainError("signed Dyck path must look like +(UD..) or -(UD..)", text)
        return cls(Sign(text[0]), parse_path(text[2:-1]))


@dataclass(frozen=True)
class SignedSeq:
    """Ordered sequence of signed Dyck paths.

    The weight is the sum of ``parameter + 1`` over the items; for the
    image of a balanced n-path under the axis decomposition it equals n.
    """

    items: tuple[SignedDyckPath, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))

    @property
    def weight(self) -> int:
        return sum(item.parameter + 1 for item in self.items)

    def all_odd(self) -> bool:
        return all(item.parameter % 2 == 1 for item in self.items)

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[SignedDyckPath]:
        return iter(self.items)

    def __getitem__(self, i):
        return self.items[i]

    def __str__(self) -> str:
        return " ".join(str(item) for item in self.items)

    @classmethod
    def parse(cls, text: str) -> "SignedSeq":
        """Inverse of ``str``: items like ``+(UD)`` or ``-()`` separated by spaces."""
        return cls(tuple(SignedDyckPath.parse(tok) for tok in text.split()))


def enumerate_paths(length: int, cap: int | None = None) -> Iterator[Path]:
    """All 2**length paths, lexicographic with U < D."""
    cap = _caps.current().paths_length if cap is None else cap
    _caps.check("path length", length, cap)
    trusted = Path._trusted
    for steps in product("UD", repeat=length):
        yield trusted("".join(steps))


def enumerate_balanced(n: int, cap: int | None = None) -> Iterator[Path]:
    """All binom(2n, n) balanced n-paths, lexicographic with U < D.

    Built from the positions of the up-steps; combinations() emits those in
    exactly the string order we want.
    """
    cap = _caps.current().paths_parameter if cap is None else cap
    _caps.check("balanced parameter", n, cap)
    trusted = Path._trusted
    length = 2 * n
    for ups in combinations(range(length), n):
        buf = bytearray(b"D" * length)
        for i in ups:
            buf[i] = 85  # "U"
        yield trusted(buf.decode())


def enumerate_dyck(n: int, cap: int | None = None) -> Iterator[Path]:
    """All C_n Dyck paths of parameter n, lexicographic with U < D."""
    cap = _caps.current().paths_parameter if cap is None else cap
    _caps.check("Dyck parameter", n, cap)
    trusted = Path._trusted
    length = 2 * n
    # explicit stack of (prefix, ups, height); D pushed before U so U pops first
    stack = [("", 0, 0)]
    while stack:
        prefix, ups, h = stack.pop()
        if len(prefix) == length:
            yield trusted(prefix)
            continue
        if h > 0:
            stack.append((prefix + "D", ups, h - 1))
        if ups < n:
            stack.append((prefix + "U", ups + 1, h + 1))


def enumerate_even_zeroed_balanced(n: int, cap: int | None = None) -> Iterator[Path]:
    """Even-zeroed balanced paths of parameter 2n (filter over the balanced ones)."""
    for p in enumerate_balanced(2 * n, cap):
        if is_even_zeroed(p):
            yield p
