"""Registry of runnable identity checks.

Every identity has a numeric mode (closed forms from :mod:`catconv.counting`),
an exhaustive mode (enumeration plus the maps in :mod:`catconv.bijections`),
or both. ``verify`` runs one identity at one index and returns a
:class:`VerificationReport`; it never raises on a failed identity, only on
bad input or exceeded caps.
"""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Callable

from . import bijections as bij
from . import caps as _caps
from . import counting as cnt
from .errors import DomainError
from .paths import (
    Path,
    enumerate_balanced,
    enumerate_dyck,
    enumerate_paths,
    is_even_zeroed,
    reflect,
    x_intercepts,
)
from .triangle import grid

IDENTITIES = (
    "thm1",
    "thm2",
    "thm8",
    "thm9",
    "lemma3",
    "lemma4",
    "lemma5",
    "lemma6a",
    "lemma6b",
    "lemma7",
    "cor10",
    "equiv-1-2",
    "z-recursion",
    "sixteen-recursion",
    "wrong-extensions",
    "triangle",
)

MODES = ("numeric", "exhaustive", "both")

# how many sample paths a failing group contributes to the witness
_SAMPLES = 3


@dataclass
class VerificationReport:
    identity: str
    n: int
    mode: str
    expected: int
    actual: int
    passed: bool
    witness: list[str] | None = None
    elapsed: float = 0.0
    checks: dict[str, bool] = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "identity": self.identity,
            "n": self.n,
            "mode": self.mode,
            "expected": str(self.expected),
            "actual": str(self.actual),
            "passed": self.passed,
            "checks": dict(self.checks),
        }
        if self.witness is not None:
            out["witness"] = list(self.witness)
        out["elapsed_ms"] = round(self.elapsed * 1000.0, 3)
        return out

    def deterministic_json(self) -> dict:
        """``to_json`` without the timing field."""
        out = self.to_json()
        del out["elapsed_ms"]
        return out


REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["identity", "n", "mode", "expected", "actual", "passed", "checks", "elapsed_ms"],
    "additionalProperties": False,
    "properties": {
        "identity": {"enum": list(IDENTITIES)},
        "n": {"type": "integer", "minimum": 0},
        "mode": {"enum": list(MODES)},
        "expected": {"type": "string", "pattern": "^-?[0-9]+$"},
        "actual": {"type": "string", "pattern": "^-?[0-9]+$"},
        "passed": {"type": "boolean"},
        "checks": {"type": "object", "additionalProperties": {"type": "boolean"}},
        "witness": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        "elapsed_ms": {"type": "number", "minimum": 0},
    },
}


@dataclass
class _Outcome:
    expected: int
    actual: int
    checks: dict[str, bool] = field(default_factory=dict)
    witness: list[str] = field(default_factory=list)


# -- enumeration helpers -------------------------------------------------------


@lru_cache(maxsize=16)
def _even_zeroed_free(length: int) -> tuple[str, ...]:
    """Every even-zeroed path of the given length, by filtering all 2**length."""
    return tuple(p.steps for p in enumerate_paths(length, cap=length) if is_even_zeroed(p))


def _final_height(s: str) -> int:
    return 2 * s.count("U") - len(s)


def _rightmost_intercept(s: str) -> int:
    h = 0
    last = 0
    for t, ch in enumerate(s, 1):
        h += 1 if ch == "U" else -1
        if h == 0:
            last = t
    return last


def _ez_to_height_one(n: int) -> list[str]:
    """Even-zeroed paths from the origin to (4n+1, 1)."""
    return [s for s in _even_zeroed_free(4 * n + 1) if _final_height(s) == 1]


def _group_check(groups: dict[int, list[str]], predicted: dict[int, int]) -> tuple[dict, list]:
    checks = {}
    witness = []
    for key in sorted(set(groups) | set(predicted)):
        got = len(groups.get(key, ()))
        want = predicted.get(key, 0)
        checks[f"group {key}"] = got == want
        if got != want:
            witness.append(f"group {key}: expected {want}, got {got}")
            witness.extend(groups.get(key, [])[:_SAMPLES])
    return checks, witness


def _bijection_checks(
    domain: list, image_of: Callable, codomain: set, inverse: Callable, show: Callable = str
) -> tuple[dict, list]:
    """Injectivity, surjectivity onto ``codomain`` and inverse round-trip."""
    images = {}
    dup = []
    bad_trip = []
    for x in domain:
        y = image_of(x)
        if y in images:
            dup.append(f"{show(images[y])} and {show(x)} both map to {show(y)}")
        images[y] = x
        if inverse(y) != x:
            bad_trip.append(show(x))
    image_set = set(images)
    missing = sorted(show(y) for y in codomain - image_set)
    extra = sorted(show(y) for y in image_set - codomain)
    checks = {
        "injective": not dup,
        "surjective": not missing and not extra,
        "round-trip": not bad_trip,
    }
    witness = dup[:_SAMPLES] + missing[:_SAMPLES] + extra[:_SAMPLES] + bad_trip[:_SAMPLES]
    return checks, witness


# -- numeric checks -----------------------------------------------------------


def _num_thm1(n):
    return _Outcome(4**n * cnt.catalan(n), cnt.shapiro_lhs(n))


def _num_thm2(n):
    return _Outcome(4**n * cnt.central_binom(n), cnt.mixed_lhs(n))


def _num_thm8(n):
    return _Outcome(4**n * cnt.central_binom(n), cnt.alternating_lhs(n))


def _num_thm9(n):
    left, right = cnt.theorem9_sides(n)
    return _Outcome(right, left)


def _num_lemma4(n):
    return _Outcome(cnt.binom(4 * n + 2, 2 * n + 1), cnt.triple_conv(n))


def _num_lemma7(n):
    expected = 4**n * cnt.central_binom(n)
    if n == 0:
        return _Outcome(expected, 1)
    # induction step: 16 S - 8 L, with S and L taken at n - 1
    return _Outcome(expected, 16 * cnt.mixed_lhs(n - 1) - 8 * cnt.shapiro_lhs(n - 1))


def _num_cor10(n):
    left, right = cnt.corollary10_sides(n)
    return _Outcome(right, left)


def _num_equiv(n):
    return _Outcome(cnt.mixed_lhs(n), (n + 1) * cnt.shapiro_lhs(n))


def _num_z(n):
    return _Outcome(cnt.catalan(2 * n), cnt.z_recursion(n)[-1])


def _num_sixteen(n):
    return _Outcome(16**n, sum(cnt.mixed_lhs(i) * cnt.mixed_lhs(n - i) for i in range(n + 1)))


def _num_triangle(n):
    g = grid(4 * n + 1)
    label0 = g.label(4 * n, 0)
    up, down = g.label(4 * n + 1, 1), g.label(4 * n + 1, -1)
    checks = {
        "label(4n,0) = C(2n)": label0 == cnt.catalan(2 * n),
        "label(4n+1,+1) = L(n)": up == cnt.shapiro_lhs(n),
        "label(4n+1,-1) = L(n)": down == cnt.shapiro_lhs(n),
    }
    witness = [
        f"label({4 * n},0)={label0}",
        f"label({4 * n + 1},1)={up}",
        f"label({4 * n + 1},-1)={down}",
    ]
    return _Outcome(cnt.mixed_lhs(n), g.row_sum(4 * n), checks, witness)


# -- exhaustive checks --------------------------------------------------------


def _ex_thm1(n):
    return _Outcome(4**n * cnt.catalan(n), len(_ez_to_height_one(n)))


def _ex_thm2(n):
    return _Outcome(4**n * cnt.central_binom(n), len(_even_zeroed_free(4 * n)))


def _ex_lemma3(n):
    ez = [p for p in enumerate_balanced(2 * n, cap=2 * n) if is_even_zeroed(p)]
    dycks = list(enumerate_dyck(2 * n, cap=2 * n))
    checks, witness = _bijection_checks(
        dycks, bij.even_zeroed_from_dyck, set(ez), bij.dyck_from_even_zeroed
    )
    checks["count = C(2n)"] = len(ez) == cnt.catalan(2 * n)
    return _Outcome(cnt.catalan(2 * n), len(ez), checks, witness)


def _ex_lemma4(n):
    groups: dict[tuple, list[str]] = {}
    for b in enumerate_balanced(2 * n + 1, cap=2 * n + 1):
        pos = 0
        for item in bij.chi(b):
            # an excursion wrapping an item of parameter p has parameter p + 1
            if item.parameter % 2 == 0:
                key = (pos // 4, item.parameter // 2)
                break
            pos += 2 * (item.parameter + 1)
        else:
            raise AssertionError(f"no odd excursion in {b}")
        if pos % 4:
            raise AssertionError(f"odd excursion of {b} starts at {pos}")
        groups.setdefault(key, []).append(b.steps)
    predicted = {}
    for i in range(n + 1):
        for j in range(n - i + 1):
            k = n - i - j
            predicted[(i, j)] = cnt.catalan(2 * i) * 2 * cnt.catalan(2 * j) * cnt.central_binom(2 * k)
    checks = {}
    witness = []
    for key in sorted(set(groups) | set(predicted)):
        got, want = len(groups.get(key, ())), predicted.get(key, 0)
        checks[f"cell i={key[0]} j={key[1]}"] = got == want
        if got != want:
            witness.append(f"cell {key}: expected {want}, got {got}")
            witness.extend(groups.get(key, [])[:_SAMPLES])
    total = sum(len(v) for v in groups.values())
    checks["total = B(2n+1)"] = total == cnt.central_binom(2 * n + 1)
    return _Outcome(cnt.triple_conv(n), total, checks, witness)


def _never_returns(s: str) -> bool:
    h = 0
    for ch in s:
        h += 1 if ch == "U" else -1
        if h == 0:
            return False
    return True


def _ex_lemma5(n):
    count = sum(1 for p in enumerate_paths(2 * n, cap=2 * n) if _never_returns(p.steps))
    return _Outcome(cnt.central_binom(n), count)


def _ex_lemma6a(n):
    groups: dict[int, list[str]] = {}
    for s in _even_zeroed_free(4 * n):
        groups.setdefault(_rightmost_intercept(s), []).append(s)
    predicted = {4 * i: cnt.catalan(2 * i) * cnt.central_binom(2 * (n - i)) for i in range(n + 1)}
    checks, witness = _group_check(groups, predicted)
    return _Outcome(cnt.mixed_lhs(n), sum(map(len, groups.values())), checks, witness)


def _ex_lemma6b(n):
    groups: dict[int, list[str]] = {}
    for s in _ez_to_height_one(n):
        groups.setdefault(_rightmost_intercept(s), []).append(s)
    predicted = {4 * i: cnt.catalan(2 * i) * cnt.catalan(2 * (n - i)) for i in range(n + 1)}
    checks, witness = _group_check(groups, predicted)
    return _Outcome(cnt.shapiro_lhs(n), sum(map(len, groups.values())), checks, witness)


def _ex_lemma7(n):
    s_n = len(_even_zeroed_free(4 * n))
    checks = {}
    witness = []
    if n >= 1:
        s_prev = len(_even_zeroed_free(4 * n - 4))
        l_prev = len(_ez_to_height_one(n - 1))
        induction = 16 * s_prev - 8 * l_prev
        checks["16 S(n-1) - 8 L(n-1) = S(n)"] = induction == s_n
        if induction != s_n:
            witness.append(f"S(n-1)={s_prev} L(n-1)={l_prev} S(n)={s_n}")
    return _Outcome(4**n * cnt.central_binom(n), s_n, checks, witness)


_FOUR_STEPS = tuple("".join(t) for t in product("UD", repeat=4))
_TWO_STEPS = tuple("".join(t) for t in product("UD", repeat=2))


def _ex_wrong_extensions(n):
    wrong = set()
    for s in _even_zeroed_free(4 * n):
        for ext in _FOUR_STEPS:
            q = Path._trusted(s + ext)
            if not is_even_zeroed(q):
                wrong.add(q.steps)
    predicted = set()
    for s in _ez_to_height_one(n):
        for tail in _TWO_STEPS:
            q = Path._trusted(s + "D" + tail)
            predicted.add(q.steps)
            predicted.add(reflect(q).steps)
    missing = sorted(predicted - wrong)
    extra = sorted(wrong - predicted)
    checks = {"wrong set = predicted set": not missing and not extra}
    return _Outcome(8 * cnt.shapiro_lhs(n), len(wrong), checks, (missing + extra)[: 2 * _SAMPLES])


def _pairs(total: int, parity: int) -> list[tuple[Path, Path]]:
    out = []
    for a in range(parity, total + 1, 2):
        firsts = list(enumerate_balanced(a, cap=a))
        seconds = list(enumerate_balanced(total - a, cap=total - a))
        out.extend((x, y) for x in firsts for y in seconds)
    return out


def _ex_thm9(n):
    evens = [(x, y) for x, y in _pairs(2 * n, 0) if any(t % 4 == 2 for t in x_intercepts(x))]
    odds = {(x, y) for x, y in _pairs(2 * n, 1)}

    def forward(pair):
        o = bij.theorem9_forward(bij.PairE(*pair))
        return o.first, o.second

    def backward(pair):
        e = bij.theorem9_backward(bij.PairO(*pair))
        return e.first, e.second

    def show(pair):
        return f"({pair[0]}, {pair[1]})"

    checks, witness = _bijection_checks(evens, forward, odds, backward, show)
    back_trip = [show(o) for o in sorted(odds, key=show) if forward(backward(o)) != o]
    checks["inverse round-trip"] = not back_trip
    witness += back_trip[:_SAMPLES]
    return _Outcome(len(odds), len(evens), checks, witness)


def _ex_triangle(n):
    # rows 4n-3 .. 4n (row 0 alone for n = 0), DP against brute force; the
    # headline numbers are the row-4n sums so they line up with numeric mode
    rows = [0] if n == 0 else list(range(4 * n - 3, 4 * n + 1))
    g = grid(rows[-1])
    checks = {}
    witness = []
    brute_row = 0
    for t in rows:
        tally = Counter(_final_height(s) for s in _even_zeroed_free(t))
        ok = True
        for h in range(t, -t - 1, -2):
            dp, brute = g.label(t, h), tally.get(h, 0)
            if dp != brute:
                ok = False
                witness.append(f"node ({t},{h}): dp {dp}, enumeration {brute}")
        checks[f"row {t}"] = ok
        brute_row = sum(tally.values())
    return _Outcome(brute_row, g.row_sum(rows[-1]), checks, witness)


_NUMERIC: dict[str, Callable[[int], _Outcome]] = {
    "thm1": _num_thm1,
    "thm2": _num_thm2,
    "thm8": _num_thm8,
    "thm9": _num_thm9,
    "lemma4": _num_lemma4,
    "lemma7": _num_lemma7,
    "cor10": _num_cor10,
    "equiv-1-2": _num_equiv,
    "z-recursion": _num_z,
    "sixteen-recursion": _num_sixteen,
    "triangle": _num_triangle,
}

_EXHAUSTIVE: dict[str, Callable[[int], _Outcome]] = {
    "thm1": _ex_thm1,
    "thm2": _ex_thm2,
    "thm9": _ex_thm9,
    "lemma3": _ex_lemma3,
    "lemma4": _ex_lemma4,
    "lemma5": _ex_lemma5,
    "lemma6a": _ex_lemma6a,
    "lemma6b": _ex_lemma6b,
    "lemma7": _ex_lemma7,
    "wrong-extensions": _ex_wrong_extensions,
    "triangle": _ex_triangle,
}


def supported_modes(identity: str) -> tuple[str, ...]:
    _require_identity(identity)
    modes = []
    if identity in _NUMERIC:
        modes.append("numeric")
    if identity in _EXHAUSTIVE:
        modes.append("exhaustive")
    if len(modes) == 2:
        modes.append("both")
    return tuple(modes)


def _require_identity(identity: str) -> None:
    if identity not in IDENTITIES:
        raise DomainError(f"unknown identity (choose from {', '.join(IDENTITIES)})", identity)


def _exhaustive_sizes(identity: str, n: int) -> list[tuple[str, int, str]]:
    """(what, size, cap field) triples an exhaustive run at ``n`` needs."""
    free = {
        "thm1": 4 * n + 1,
        "thm2": 4 * n,
        "lemma5": 2 * n,
        "lemma6a": 4 * n,
        "lemma6b": 4 * n + 1,
        "lemma7": 4 * n,
        "wrong-extensions": 4 * n + 4,
        "triangle": 4 * n,
    }
    if identity in free:
        return [("path length", free[identity], "free")]
    if identity == "lemma3":
        return [("balanced parameter", 2 * n, "balanced"), ("Dyck parameter", 2 * n, "dyck")]
    if identity == "lemma4":
        return [("balanced parameter", 2 * n + 1, "balanced")]
    if identity == "thm9":
        return [("balanced parameter", 2 * n, "balanced")]
    raise AssertionError(identity)


def check_request(identity: str, n: int, mode: str, limits: _caps.Caps | None = None) -> None:
    """Validate a request without running it; raises DomainError or CapExceeded."""
    _require_identity(identity)
    if mode not in MODES:
        raise DomainError(f"unknown mode (choose from {', '.join(MODES)})", mode)
    if mode not in supported_modes(identity):
        raise DomainError(
            f"{identity} supports modes {', '.join(supported_modes(identity))}, not", mode
        )
    if n < 0:
        raise DomainError("index must be nonnegative", str(n))
    if identity == "cor10" and n < 1:
        raise DomainError("cor10 needs n >= 1", str(n))
    limits = _caps.current() if limits is None else limits
    if mode in ("numeric", "both"):
        if identity == "triangle":
            _caps.check("triangle columns", 4 * n + 1, limits.triangle)
        else:
            _caps.check("numeric index", n, limits.numeric)
    if mode in ("exhaustive", "both"):
        for what, size, cap_field in _exhaustive_sizes(identity, n):
            _caps.check(what, size, getattr(limits, cap_field))


def verify(identity: str, n: int, mode: str = "numeric") -> VerificationReport:
    check_request(identity, n, mode)
    start = time.perf_counter()
    if mode == "numeric":
        out = _NUMERIC[identity](n)
    elif mode == "exhaustive":
        out = _EXHAUSTIVE[identity](n)
    else:
        num = _NUMERIC[identity](n)
        ex = _EXHAUSTIVE[identity](n)
        checks = {f"numeric: {k}": v for k, v in num.checks.items()}
        checks.update({f"exhaustive: {k}": v for k, v in ex.checks.items()})
        checks["numeric expected = actual"] = num.expected == num.actual
        checks["numeric = exhaustive"] = num.expected == ex.actual
        out = _Outcome(num.expected, ex.actual, checks, num.witness + ex.witness)
    elapsed = time.perf_counter() - start

    passed = out.expected == out.actual and all(out.checks.values())
    witness = None
    if not passed:
        failing = [name for name, ok in out.checks.items() if not ok]
        witness = [f"expected {out.expected}, actual {out.actual}"]
        witness += [f"failed check: {name}" for name in failing]
        # numeric triangle carries node values even on success; only keep them on failure
        witness += out.witness
    return VerificationReport(
        identity, n, mode, out.expected, out.actual, passed, witness, elapsed, out.checks
    )


def _verify_args(args):
    return verify(*args)


def verify_range(
    identity: str, n_from: int, n_to: int, mode: str = "numeric", workers: int = 1
) -> list[VerificationReport]:
    """One report per index in ``n_from..n_to`` (inclusive), ascending.

    Every index is validated before any work starts, so a cap violation
    aborts the whole request up front; failed identities never stop the run.
    """
    if n_from > n_to:
        raise DomainError("empty range", f"{n_from}..{n_to}")
    for n in range(n_from, n_to + 1):
        check_request(identity, n, mode)
    jobs = [(identity, n, mode) for n in range(n_from, n_to + 1)]
    if workers <= 1 or len(jobs) == 1:
        return [verify(*job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_verify_args, jobs))


def triangle_checks(N: int) -> list[VerificationReport]:
    """Closed-form checks of the grid for every n <= N, plus the brute-force
    cross-check for every row up to min(4N, 16)."""
    reports = [verify("triangle", n, "numeric") for n in range(N + 1)]
    reports += [verify("triangle", n, "exhaustive") for n in range(min(N, 4) + 1)]
    return reports
