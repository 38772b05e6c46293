"""Closed forms, classification tables, and batch verification suites.

The closed forms gathered here describe the k-set minimum exactly on
special families:

* coefficients (1, 2, ..., m) realize the least possible minimum among
  strictly increasing coefficient vectors:
  ((m^2+m)/2) k - (m^2+m-2)/2, on {0, ..., k-1};
* forms whose coefficients hit every subset sum in [0, u_total]
  ("complete" forms) have minimum u_total*(k-1) + 1, minimized exactly
  by arithmetic progressions;
* two-variable forms split into (1,1) -> 2k-1, (1,2) -> 3k-2, and the
  rest, where the 3-set value is exactly 8 and the block bound gives
  (7k-5)/2 for odd k, (7k-6)/2 for even k;
* three-variable minimum 2-set images follow a six-case table in the
  coefficient pattern, and strictly increasing coefficients give
  6k-5 in general, 7k-6 when u1 + u2 != u3.

Each suite replays one of these statements against the engine over a
bounded slice of form space and reports mismatches instead of raising,
so a failing suite is data, not a crash.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .engine import NfConfig, compute_mf, compute_nf, enumerate_minimizers, exact_nf2
from .errors import (
    BudgetExceeded,
    InputError,
    NotBinary,
    NotStrictlyIncreasing,
    NotTernary,
)
from .forms import (
    LinearForm,
    enumerate_normalized,
    has_distinct_subset_sums,
    is_complete,
)
from .sets import is_arithmetic_progression

SUITES = ("thm23", "thm31", "lem32", "thm41", "mf_bounds")

#: A verify run touching more than this many (form, k) instances is refused.
DEFAULT_INSTANCE_BUDGET = 100_000


def nstar_formula(m: int, k: int) -> int:
    """Least k-set minimum over strictly increasing coefficient vectors."""
    if m < 1 or k < 1:
        raise InputError(f"need m, k >= 1, got m={m}, k={k}")
    return ((m * m + m) // 2) * k - ((m * m + m - 2) // 2)


def complete_formula(u_total: int, k: int) -> int:
    """k-set minimum for a complete form with coefficient sum u_total."""
    if u_total < 1 or k < 1:
        raise InputError(f"need u_total, k >= 1, got {u_total}, {k}")
    return u_total * k - u_total + 1


@dataclass(frozen=True)
class BinaryClass:
    """Classification of a two-variable form with its k-set bound.

    exact is True when bound(k) is the minimum itself, False when it is
    a certified lower bound.
    """

    tag: str
    exact: bool

    def bound(self, k: int) -> int:
        if k < 1:
            raise InputError(f"need k >= 1, got {k}")
        if self.tag == "x1+x2":
            return 2 * k - 1
        if self.tag == "x1+2x2":
            return 3 * k - 2
        # (7k-5)/2 rounds down to (7k-6)/2 at even k: both block cases.
        return (7 * k - 5) // 2


def classify_binary(f: LinearForm) -> BinaryClass:
    """Sort a two-variable form into its minimum-image regime."""
    if f.m != 2:
        raise NotBinary(f"need a two-variable form, got {f}")
    if f.coeffs == (1, 1):
        return BinaryClass(tag="x1+x2", exact=True)
    if f.coeffs == (1, 2):
        return BinaryClass(tag="x1+2x2", exact=True)
    return BinaryClass(tag="general", exact=False)


def ternary_nf2_table(f: LinearForm) -> int:
    """2-set minimum for a three-variable form, by coefficient pattern.

    The six patterns classify which subset sums collide on {0, 1}:
    all equal -> 4; u1 = u2 with u3 = 2u1 -> 5; u1 = u2 otherwise -> 6;
    u1 < u2 = u3 -> 6; strictly increasing with u1 + u2 = u3 -> 7;
    strictly increasing otherwise -> 8 (all sums distinct).
    """
    if f.m != 3:
        raise NotTernary(f"need a three-variable form, got {f}")
    u1, u2, u3 = f.coeffs
    if u1 == u2 == u3:
        return 4
    if u1 == u2:
        return 5 if u3 == 2 * u1 else 6
    if u2 == u3:
        return 6
    return 7 if u1 + u2 == u3 else 8


def ternary_lower(f: LinearForm, k: int) -> int:
    """Certified k-set lower bound for strictly increasing ternary forms.

    6k-5 always; 7k-6 when u1 + u2 != u3 (then the 2-set value is 8 and
    the block bound with ell = 2 takes over).  Only strict increase is
    required; no further condition on u1 is needed.
    """
    if f.m != 3:
        raise NotTernary(f"need a three-variable form, got {f}")
    if not f.strictly_increasing:
        raise NotStrictlyIncreasing(f"need u1 < u2 < u3, got {f}")
    if k < 1:
        raise InputError(f"need k >= 1, got {k}")
    u1, u2, u3 = f.coeffs
    if u1 + u2 != u3:
        return max(6 * k - 5, 7 * k - 6)
    return 6 * k - 5


@dataclass(frozen=True)
class SuiteBounds:
    """Slice of form space a verification suite walks."""

    max_m: int
    max_coeff: int
    max_k: int
    diameter: int | None = None
    instance_budget: int = DEFAULT_INSTANCE_BUDGET


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one suite: instance count and any mismatches found."""

    suite: str
    bounds: SuiteBounds
    checked: int
    mismatches: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "bounds": {
                "max_m": self.bounds.max_m,
                "max_coeff": self.bounds.max_coeff,
                "max_k": self.bounds.max_k,
                "diameter": self.bounds.diameter,
            },
            "checked": self.checked,
            "mismatches": list(self.mismatches),
            "passed": self.passed,
        }


def _forms_in(bounds: SuiteBounds, m: int, strictly_increasing: bool = False) -> list[LinearForm]:
    if m > bounds.max_m:
        return []
    return list(enumerate_normalized(m, bounds.max_coeff, strictly_increasing))


def _guard_budget(instances: int, bounds: SuiteBounds) -> None:
    if instances > bounds.instance_budget:
        raise BudgetExceeded(
            f"suite would touch {instances} instances, budget {bounds.instance_budget}"
        )


def _cfg(bounds: SuiteBounds) -> NfConfig:
    return NfConfig(diameter=bounds.diameter)


def _suite_thm23(bounds: SuiteBounds) -> tuple[int, list[str]]:
    """Strictly increasing forms never beat the (1..m) formula, which is tight."""
    checked = 0
    bad: list[str] = []
    for m in range(2, bounds.max_m + 1):
        forms = _forms_in(bounds, m, strictly_increasing=True)
        _guard_budget(len(forms) * bounds.max_k, bounds)
        for k in range(2, bounds.max_k + 1):
            target = nstar_formula(m, k)
            for f in forms:
                res = compute_nf(f, k, _cfg(bounds))
                checked += 1
                if res.best < target:
                    bad.append(f"{f} k={k}: best {res.best} beats the floor {target}")
                if f.coeffs == tuple(range(1, m + 1)):
                    if not res.exact or res.best != target:
                        bad.append(
                            f"{f} k={k}: expected exact {target}, got "
                            f"[{res.lower},{res.best}] exact={res.exact}"
                        )
    return checked, bad


def _suite_thm31(bounds: SuiteBounds) -> tuple[int, list[str]]:
    """Two-variable classification against the engine."""
    checked = 0
    bad: list[str] = []
    forms = _forms_in(bounds, 2)
    _guard_budget(len(forms) * bounds.max_k, bounds)
    for f in forms:
        cls = classify_binary(f)
        for k in range(1, bounds.max_k + 1):
            res = compute_nf(f, k, _cfg(bounds))
            checked += 1
            want = cls.bound(k)
            if cls.exact:
                if not res.exact or res.best != want:
                    bad.append(
                        f"{f} k={k}: expected exact {want}, got "
                        f"[{res.lower},{res.best}] exact={res.exact}"
                    )
            else:
                if res.lower < want or res.best < want:
                    bad.append(
                        f"{f} k={k}: bracket [{res.lower},{res.best}] under the bound {want}"
                    )
                if k == 3 and (not res.exact or res.best != 8):
                    bad.append(
                        f"{f} k=3: expected exact 8, got "
                        f"[{res.lower},{res.best}] exact={res.exact}"
                    )
    return checked, bad


def _suite_lem32(bounds: SuiteBounds) -> tuple[int, list[str]]:
    """Ternary 2-set table against the subset-sum count."""
    checked = 0
    bad: list[str] = []
    forms = _forms_in(bounds, 3)
    _guard_budget(len(forms), bounds)
    for f in forms:
        checked += 1
        table = ternary_nf2_table(f)
        direct = exact_nf2(f)
        if table != direct:
            bad.append(f"{f}: table {table} != subset-sum count {direct}")
    return checked, bad


def _suite_thm41(bounds: SuiteBounds) -> tuple[int, list[str]]:
    """Complete forms: exact formula and progressions as sole minimizers."""
    checked = 0
    bad: list[str] = []
    seen: set[tuple[int, ...]] = set()
    forms: list[LinearForm] = []
    for m in range(1, bounds.max_m + 1):
        for f in _forms_in(bounds, m):
            if f.coeffs not in seen and is_complete(f):
                seen.add(f.coeffs)
                forms.append(f)
    _guard_budget(len(forms) * bounds.max_k, bounds)
    for f in forms:
        for k in range(1, bounds.max_k + 1):
            res = compute_nf(f, k, _cfg(bounds))
            checked += 1
            want = complete_formula(f.u_total, k)
            if not res.exact or res.best != want:
                bad.append(
                    f"{f} k={k}: expected exact {want}, got "
                    f"[{res.lower},{res.best}] exact={res.exact}"
                )
                continue
            if f.u_total == 1:
                # The single-unit form maps every k-set to exactly k values,
                # so every set minimizes; uniqueness only holds from sum 2 up.
                continue
            mins = enumerate_minimizers(f, k, diameter=bounds.diameter)
            expected = (tuple(range(k)),)
            if tuple(w.elems for w in mins) != expected:
                bad.append(
                    f"{f} k={k}: minimizers {[list(w.elems) for w in mins]}, "
                    f"expected only the progression"
                )
            if not all(is_arithmetic_progression(w.elems) for w in mins):
                bad.append(f"{f} k={k}: non-progression minimizer found")
    return checked, bad


def _falling_factorial(k: int, m: int) -> int:
    out = 1
    for i in range(m):
        out *= max(k - i, 0)
    return out


def _suite_mf_bounds(bounds: SuiteBounds) -> tuple[int, list[str]]:
    """Maximum image size: sandwich, strict-increase floor, distinctness law."""
    checked = 0
    bad: list[str] = []
    for m in range(1, bounds.max_m + 1):
        forms = _forms_in(bounds, m)
        _guard_budget(len(forms) * bounds.max_k, bounds)
        for f in forms:
            dss = has_distinct_subset_sums(f)
            for k in range(1, bounds.max_k + 1):
                res = compute_mf(f, k)
                checked += 1
                lo, hi = math.comb(k, m), k**m
                if not (lo <= res.value <= hi):
                    bad.append(f"{f} k={k}: M={res.value} outside [{lo},{hi}]")
                if f.strictly_increasing and res.value < _falling_factorial(k, m):
                    bad.append(
                        f"{f} k={k}: M={res.value} under the strict-increase "
                        f"floor {_falling_factorial(k, m)}"
                    )
                # At k = 1 every form has M = 1 = k^m; the equivalence with
                # distinct subset sums only speaks for k >= 2.
                if k >= 2 and (res.value == hi) != dss:
                    bad.append(
                        f"{f} k={k}: M={res.value}, k^m={hi}, distinct subset "
                        f"sums={dss}: equivalence broken"
                    )
    return checked, bad


_SUITE_RUNNERS = {
    "thm23": _suite_thm23,
    "thm31": _suite_thm31,
    "lem32": _suite_lem32,
    "thm41": _suite_thm41,
    "mf_bounds": _suite_mf_bounds,
}


def verify_suite(suite: str, bounds: SuiteBounds) -> VerificationReport:
    """Replay one named statement against the engine over bounded forms."""
    if suite not in _SUITE_RUNNERS:
        raise InputError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    checked, bad = _SUITE_RUNNERS[suite](bounds)
    return VerificationReport(
        suite=suite, bounds=bounds, checked=checked, mismatches=tuple(bad)
    )
