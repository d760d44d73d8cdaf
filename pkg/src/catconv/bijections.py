"""The bijections between path families, each with its inverse.

* ``chi``: balanced n-path -> sequence of signed Dyck paths of weight n,
  cutting at the x-axis. Restricted to even-zeroed paths it lands in the
  sequences whose items all have odd parameter.
* ``psi``: Dyck path of even parameter -> sequence of odd-parameter signed
  Dyck paths, by repeated first-return splitting ``U L D R``.
* ``even_zeroed_from_dyck`` = ``chi_inv . psi`` and its inverse.
* ``theorem9_forward`` / ``theorem9_backward``: the splice map between
  pairs of even-parameter and pairs of odd-parameter balanced paths.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError
from .paths import (
    Path,
    Sign,
    SignedDyckPath,
    SignedSeq,
    concat,
    is_balanced,
    is_even_zeroed,
    require_balanced,
    require_dyck,
)

_REFLECT = str.maketrans("UD", "DU")


def chi(b: Path) -> SignedSeq:
    """Cut a balanced path at every x-intercept into signed Dyck paths.

    An excursion above the axis gives ``+inner``, one below gives
    ``-reflect(inner)``, where ``inner`` drops the first and last step.
    The empty path maps to the empty sequence.
    """
    require_balanced(b)
    s = b.steps
    items = []
    h = 0
    start = 0
    for t, ch in enumerate(s, 1):
        h += 1 if ch == "U" else -1
        if h == 0:
            inner = s[start + 1 : t - 1]
            if s[start] == "U":
                items.append(SignedDyckPath(Sign.PLUS, Path._trusted(inner)))
            else:
                items.append(SignedDyckPath(Sign.MINUS, Path._trusted(inner.translate(_REFLECT))))
            start = t
    return SignedSeq(tuple(items))


def chi_inv(seq: SignedSeq) -> Path:
    parts = []
    for item in seq:
        if item.sign is Sign.PLUS:
            parts.append("U" + item.path.steps + "D")
        else:
            parts.append("D" + item.path.steps.translate(_REFLECT) + "U")
    return Path._trusted("".join(parts))


@dataclass(frozen=True)
class DyckSplit:
    """``source = U + left + D + right`` with both parts Dyck paths."""

    left: Path
    right: Path

    def join(self) -> Path:
        return Path._trusted("U" + self.left.steps + "D" + self.right.steps)


def _first_return(s: str) -> int:
    h = 0
    for t, ch in enumerate(s, 1):
        h += 1 if ch == "U" else -1
        if h == 0:
            return t
    raise AssertionError("balanced input has a return")


def dyck_split(d: Path) -> DyckSplit:
    require_dyck(d)
    if not d.steps:
        raise DomainError("cannot split the empty Dyck path", d.steps)
    r = _first_return(d.steps)
    return DyckSplit(Path._trusted(d.steps[1 : r - 1]), Path._trusted(d.steps[r:]))


@dataclass(frozen=True)
class PsiStep:
    """One emitted item of ``psi`` together with where it sits in the source.

    ``start``/``end`` are positions in the original path and ``base`` is the
    height of the segment's floor. ``side`` is "L" for a left part (sign -)
    and "R" for a right part (sign +).
    """

    item: SignedDyckPath
    start: int
    end: int
    base: int
    side: str


def psi_with_provenance(d: Path) -> list[PsiStep]:
    require_dyck(d)
    if (len(d) // 2) % 2:
        raise DomainError("psi needs a Dyck path of even parameter", d.steps)
    s = d.steps
    out = []
    lo, hi, base = 0, len(s), 0
    # loop instead of recursion: depth would equal the parameter
    while lo < hi:
        r = lo + _first_return(s[lo:hi])
        left = s[lo + 1 : r - 1]
        if (len(left) // 2) % 2:
            out.append(PsiStep(SignedDyckPath(Sign.MINUS, Path._trusted(left)), lo + 1, r - 1, base + 1, "L"))
            lo = r
        else:
            right = s[r:hi]
            out.append(PsiStep(SignedDyckPath(Sign.PLUS, Path._trusted(right)), r, hi, base, "R"))
            lo, hi, base = lo + 1, r - 1, base + 1
    return out


def psi(d: Path) -> SignedSeq:
    return SignedSeq(tuple(step.item for step in psi_with_provenance(d)))


def psi_inv(seq: SignedSeq) -> Path:
    """Rebuild the Dyck path from the back: ``-P`` gives ``U P D T``, ``+P`` gives ``U T D P``."""
    for item in seq:
        if item.parameter % 2 == 0:
            raise DomainError("psi_inv needs every item to have odd parameter", str(item))
    tail = ""
    for item in reversed(seq.items):
        p = item.path.steps
        if item.sign is Sign.MINUS:
            tail = "U" + p + "D" + tail
        else:
            tail = "U" + tail + "D" + p
    return Path._trusted(tail)


def even_zeroed_from_dyck(d: Path) -> Path:
    """Dyck path of parameter 2n -> even-zeroed balanced path of parameter 2n."""
    return chi_inv(psi(d))


def dyck_from_even_zeroed(b: Path) -> Path:
    require_balanced(b)
    if not is_even_zeroed(b):
        raise DomainError("path is not even-zeroed", b.steps)
    seq = chi(b)
    # even-zeroed is the same as every excursion having odd parameter
    assert seq.all_odd(), b.steps
    return psi_inv(seq)


def split_at_first_2mod4_intercept(p: Path) -> tuple[Path, Path]:
    """Cut ``p`` at its leftmost x-intercept of the form 4t+2."""
    s = p.steps
    h = 0
    for t, ch in enumerate(s, 1):
        h += 1 if ch == "U" else -1
        if h == 0 and t % 4 == 2:
            return Path._trusted(s[:t]), Path._trusted(s[t:])
    raise DomainError("path has no x-intercept congruent to 2 mod 4", s)


def _has_2mod4_intercept(s: str) -> bool:
    h = 0
    for t, ch in enumerate(s, 1):
        h += 1 if ch == "U" else -1
        if h == 0 and t % 4 == 2:
            return True
    return False


@dataclass(frozen=True)
class PairE:
    """Two balanced paths of even parameter; ``first`` touches the axis at some 4t+2."""

    first: Path
    second: Path
    parameter_sum: int = field(init=False)

    def __post_init__(self):
        a, b = self.first, self.second
        if not (is_balanced(a) and is_balanced(b)):
            raise DomainError("pair entries must be balanced", f"{a} {b}")
        if (len(a) // 2) % 2 or (len(b) // 2) % 2:
            raise DomainError("pair entries must have even parameter", f"{a} {b}")
        if not _has_2mod4_intercept(a.steps):
            raise DomainError("first entry needs an x-intercept congruent to 2 mod 4", a.steps)
        object.__setattr__(self, "parameter_sum", (len(a) + len(b)) // 2)


@dataclass(frozen=True)
class PairO:
    """Two balanced paths of odd parameter."""

    first: Path
    second: Path
    parameter_sum: int = field(init=False)

    def __post_init__(self):
        a, b = self.first, self.second
        if not (is_balanced(a) and is_balanced(b)):
            raise DomainError("pair entries must be balanced", f"{a} {b}")
        if (len(a) // 2) % 2 == 0 or (len(b) // 2) % 2 == 0:
            raise DomainError("pair entries must have odd parameter", f"{a} {b}")
        object.__setattr__(self, "parameter_sum", (len(a) + len(b)) // 2)


def theorem9_forward(e: PairE) -> PairO:
    """``(E1, E2) -> (L + E2, R)`` where ``E1 = L + R`` is cut at its first 4t+2 intercept."""
    left, rest = split_at_first_2mod4_intercept(e.first)
    return PairO(concat(left, e.second), rest)


def theorem9_backward(o: PairO) -> PairE:
    # o.first has odd parameter, so it ends at a 4t+2 intercept and the cut exists
    left, e2 = split_at_first_2mod4_intercept(o.first)
    return PairE(concat(left, o.second), e2)


__all__ = [
    "DyckSplit",
    "PairE",
    "PairO",
    "PsiStep",
    "chi",
    "chi_inv",
    "dyck_from_even_zeroed",
    "dyck_split",
    "even_zeroed_from_dyck",
    "psi",
    "psi_inv",
    "psi_with_provenance",
    "split_at_first_2mod4_intercept",
    "theorem9_backward",
    "theorem9_forward",
]
