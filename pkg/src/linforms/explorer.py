"""Image-size spectra and conjecture scans over bounded form families.

Beyond the two extremes, the full spectrum E = { |f(A)| : A canonical,
diameter <= D } says how image sizes are distributed, and two converse
questions about complete forms are worth scanning for counterexamples:

* does an incomplete form ever attain the complete-form minimum
  u_total*(k-1) + 1?
* does an incomplete form ever have arithmetic progressions as its
  only minimizers?

A scan never treats an open bracket as evidence: a form whose minimum
is not certified exact is reported inconclusive, and candidate
counterexamples are only flagged on exact values.  Everything is
relative to the searched diameter, which is recorded in each finding.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .engine import NfConfig, compute_mf, compute_nf
from .errors import BudgetExceeded, DiameterTooSmall, InputError
from .forms import LinearForm, enumerate_normalized, is_complete
from .sets import image_mask, is_arithmetic_progression
from .theory import complete_formula

STATUS_CONSISTENT = "consistent"
STATUS_CANDIDATE = "candidate-counterexample"
STATUS_INCONCLUSIVE = "inconclusive"
#: A certified-exact observation contradicting a proved statement: a bug,
#: flagged loudly rather than folded into the conjecture statuses.
STATUS_THEOREM_CONFLICT = "theorem-conflict"

#: Spectrum enumeration refuses more candidate sets than this.
DEFAULT_SPECTRUM_BUDGET = 10**6

#: A scan refuses to walk more forms than this.
DEFAULT_SCAN_BUDGET = 10_000


@dataclass(frozen=True)
class SpectrumReport:
    """Every attained image size at (f, k, diameter), with multiplicities.

    census counts canonical, reflection-deduplicated k-sets per value;
    its totals therefore count equivalence classes, not raw sets.
    """

    form: LinearForm
    k: int
    diameter: int
    values: tuple[int, ...]
    census: tuple[tuple[int, int], ...]
    mf_value: int

    @property
    def is_interval(self) -> bool:
        return not self.values or len(self.values) == self.values[-1] - self.values[0] + 1

    @property
    def mf_reached(self) -> bool:
        return bool(self.values) and self.values[-1] == self.mf_value

    def to_json(self) -> dict:
        return {
            "coeffs": list(self.form.coeffs),
            "k": self.k,
            "diameter": self.diameter,
            "values": list(self.values),
            "census": [[v, c] for v, c in self.census],
            "is_interval": self.is_interval,
            "mf_value": self.mf_value,
            "mf_reached": self.mf_reached,
        }


@dataclass(frozen=True)
class ScanFinding:
    """One form's verdict under one conjecture scan."""

    problem: str
    form: LinearForm
    k: int
    diameter: int
    lower: int
    best: int
    exact: bool
    predicted: int
    complete: bool
    status: str
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "problem": self.problem,
            "coeffs": list(self.form.coeffs),
            "k": self.k,
            "diameter": self.diameter,
            "lower": self.lower,
            "best": self.best,
            "exact": self.exact,
            "predicted": self.predicted,
            "complete": self.complete,
            "status": self.status,
            "detail": self.detail,
        }


def spectrum(
    f: LinearForm,
    k: int,
    diameter: int | None = None,
    budget: int = DEFAULT_SPECTRUM_BUDGET,
) -> SpectrumReport:
    """Census of |f(A)| over canonical k-sets with diameter <= D.

    Enumerates every canonical set (gcd 1, counted once per reflection
    pair), so the candidate count C(D, k-1) is checked against the
    budget first.
    """
    if k < 1:
        raise InputError(f"need k >= 1, got {k}")
    D = diameter if diameter is not None else f.u_total * (k - 1)
    if D < k - 1:
        raise DiameterTooSmall(f"diameter {D} cannot hold {k} distinct integers")
    if math.comb(D, k - 1) > budget:
        raise BudgetExceeded(
            f"{math.comb(D, k - 1)} candidate sets exceed the spectrum budget {budget}"
        )
    counts: Counter[int] = Counter()
    if k == 1:
        counts[1] = 1
    else:
        for rest in combinations(range(1, D + 1), k - 1):
            elems = (0,) + rest
            if math.gcd(*elems) != 1:
                continue
            mirrored = tuple(elems[-1] - x for x in reversed(elems))
            if mirrored < elems:
                continue  # the reflection partner is counted instead
            counts[image_mask(f, elems).bit_count()] += 1
    mf_value = compute_mf(f, k).value
    return SpectrumReport(
        form=f,
        k=k,
        diameter=D,
        values=tuple(sorted(counts)),
        census=tuple(sorted(counts.items())),
        mf_value=mf_value,
    )


def _scan_forms(m: int, max_coeff: int, budget: int) -> list[LinearForm]:
    if m < 1:
        raise InputError(f"need m >= 1, got {m}")
    forms = list(enumerate_normalized(m, max_coeff))
    if len(forms) > budget:
        raise BudgetExceeded(f"{len(forms)} forms exceed the scan budget {budget}")
    return forms


def scan_completeness_converse(
    m: int,
    max_coeff: int,
    k: int,
    diameter: int | None = None,
    budget: int = DEFAULT_SCAN_BUDGET,
) -> tuple[ScanFinding, ...]:
    """Hunt incomplete forms attaining the complete-form minimum.

    For every incomplete normalized form, compare the certified bracket
    with u_total*(k-1) + 1.  An exact match is a candidate
    counterexample; a best value below it is consistent; an open
    bracket that still allows equality is inconclusive.
    """
    findings: list[ScanFinding] = []
    for f in _scan_forms(m, max_coeff, budget):
        if is_complete(f):
            continue
        res = compute_nf(f, k, NfConfig(diameter=diameter))
        predicted = complete_formula(f.u_total, k)
        if res.best < predicted:
            status, detail = STATUS_CONSISTENT, ""
        elif res.exact:
            status = STATUS_CANDIDATE
            detail = "incomplete form attains the complete-form minimum"
        else:
            status = STATUS_INCONCLUSIVE
            detail = f"bracket [{res.lower},{res.best}] still allows {predicted}"
        findings.append(
            ScanFinding(
                problem="completeness",
                form=f,
                k=k,
                diameter=res.diameter_searched,
                lower=res.lower,
                best=res.best,
                exact=res.exact,
                predicted=predicted,
                complete=False,
                status=status,
                detail=detail,
            )
        )
    return tuple(findings)


def scan_ap_minimizer_converse(
    m: int,
    max_coeff: int,
    k: int,
    diameter: int | None = None,
    budget: int = DEFAULT_SCAN_BUDGET,
) -> tuple[ScanFinding, ...]:
    """Hunt incomplete forms whose only minimizers are progressions.

    Complete forms must have progressions as their sole minimizers; an
    exact observation violating that is flagged as theorem-conflict
    (an engine bug, not number theory).  For incomplete forms,
    progression-only minimizers make a candidate counterexample.
    Minimizer lists are only trusted when the minimum is exact.
    """
    findings: list[ScanFinding] = []
    for f in _scan_forms(m, max_coeff, budget):
        res = compute_nf(f, k, NfConfig(diameter=diameter, witness_cap=None))
        complete = is_complete(f)
        predicted = complete_formula(f.u_total, k)
        if not res.exact:
            status = STATUS_INCONCLUSIVE
            detail = f"bracket [{res.lower},{res.best}] open; minimizers unverified"
        elif f.u_total == 1:
            # Single-unit form: every k-set attains the minimum k, so the
            # progression-uniqueness dichotomy is vacuous either way.
            status = STATUS_CONSISTENT
            detail = "degenerate single-unit form: every set minimizes"
        elif k <= 2:
            # Every set of one or two integers is a progression, so
            # "all minimizers are progressions" carries no information.
            status = STATUS_CONSISTENT
            detail = "every set of size <= 2 is a progression; vacuous"
        else:
            all_ap = all(is_arithmetic_progression(w.elems) for w in res.witnesses)
            if complete:
                if all_ap:
                    status, detail = STATUS_CONSISTENT, ""
                else:
                    non_ap = next(
                        w for w in res.witnesses if not is_arithmetic_progression(w.elems)
                    )
                    status = STATUS_THEOREM_CONFLICT
                    detail = f"complete form has non-progression minimizer {non_ap}"
            else:
                if all_ap:
                    status = STATUS_CANDIDATE
                    detail = "incomplete form, yet every minimizer is a progression"
                else:
                    status, detail = STATUS_CONSISTENT, ""
        findings.append(
            ScanFinding(
                problem="ap-minimizers",
                form=f,
                k=k,
                diameter=res.diameter_searched,
                lower=res.lower,
                best=res.best,
                exact=res.exact,
                predicted=predicted,
                complete=complete,
                status=status,
                detail=detail,
            )
        )
    return tuple(findings)
