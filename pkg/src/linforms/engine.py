"""Certified extremes of |f(A)| over k-element integer sets.

The minimum image size over all k-sets is pinned from two sides.

*Lower bounds* come from a block decomposition: order a k-set, cut it
into consecutive blocks of ell elements overlapping in one point, and
observe that each block contributes at least (its own minimum image
size) - 1 new values, because a block whose least element is b only
takes values in [u_total*b, u_total*(max of block)] and meets the
previous blocks' values exactly in u_total*b.  Writing
k - 1 = q*(ell - 1) + r with 0 <= r <= ell - 2, a ladder of exact small
values lambda_ell yields

    min image size  >=  (lambda_ell - 1) * q  +  (exact value at r + 1),

which dominates the q-only form (lambda - 1)/(ell - 1) * k - lambda + 2.
For two-variable forms with largest coefficient >= 3 a separate case
elimination pins the 3-element minimum at exactly 8.

*Upper bounds* come from exhaustive search over canonical k-sets
(least element 0, gcd 1) up to a diameter.  The search prunes with the
same block argument run backwards: a partial set with image size v and
t slots still open can only finish at v + cb(t) or more, where cb(t) is
the ladder bound for t + 1 elements minus one (appending elements above
the current maximum glues a (t+1)-block onto the partial set in a
single shared value).  Pruning is strict, so every set achieving the
final minimum survives; the pruned search returns the same best value
and witness set as naive enumeration.

When the certified lower bound meets the searched minimum the value is
exact; otherwise the honest answer is the bracket [lower, best].

The maximum image size needs no search: distinct values correspond
one-to-one with distinct coefficient-mass vectors once the k-set is
geometric with a base larger than any digit, so the maximum equals the
number of composition vectors and {1, g, g^2, ...} witnesses it.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import (
    BudgetExceeded,
    CapacityExceeded,
    DiameterTooSmall,
    InconsistentKnown,
    InputError,
    LinformsError,
    MissingBaseValue,
    NotBinary,
    NotCertifiedExact,
    NotCoprime,
)
from .forms import LinearForm, subset_sums
from .sets import KSet, composition_vectors, image

#: Search bitmasks may span at most this many bits (u_total * diameter).
SEARCH_BITS_CAP = 10**7

KIND_TRIVIAL = "trivial-k1"
KIND_NF2 = "nf2-subset-sums"
KIND_BLOCK = "lemma-block"
KIND_BINARY_NF3 = "binary-nf3-case-analysis"


@dataclass(frozen=True)
class Certificate:
    """A machine-checkable lower bound for the minimum image size.

    kind identifies the argument; ell and lam are the block length and
    the exact ell-element value it leans on; chain lists every
    (set size, exact value) rung available when the bound was formed, so
    the bound can be recomputed from the certificate alone.
    """

    kind: str
    ell: int
    lam: int
    bound: int
    chain: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "ell": self.ell,
            "lambda": self.lam,
            "chain": [list(pair) for pair in self.chain],
        }


@dataclass(frozen=True)
class SearchOutcome:
    """Raw result of one exhaustive search: value, witnesses, node count."""

    best: int | None
    witnesses: tuple[KSet, ...]
    nodes: int
    witness_overflow: bool = False


@dataclass(frozen=True)
class NfConfig:
    """Tuning for compute_nf.

    diameter None means u_total * (k - 1); ladder_max_ell caps the
    bootstrap of exact small values; witness_cap None keeps every
    witness; threads None defers to LINFORM_THREADS / cpu count;
    node_budget None is unlimited.
    """

    diameter: int | None = None
    ladder_max_ell: int = 4
    witness_cap: int | None = 64
    threads: int | None = None
    node_budget: int | None = None


@dataclass(frozen=True)
class ExtremalResult:
    """Outcome of compute_nf: a certified bracket, exact when closed."""

    form: LinearForm
    k: int
    diameter_searched: int
    lower: int
    certificate: Certificate
    best: int
    witnesses: tuple[KSet, ...]
    exact: bool
    nodes_explored: int
    witness_overflow: bool = False

    def to_json(self) -> dict:
        return {
            "coeffs": list(self.form.coeffs),
            "k": self.k,
            "diameter": self.diameter_searched,
            "lower": self.lower,
            "certificate": self.certificate.to_json(),
            "best": self.best,
            "exact": self.exact,
            "witnesses": [list(w.elems) for w in self.witnesses],
            "nodes": self.nodes_explored,
        }


@dataclass(frozen=True)
class MaxResult:
    """Exact maximum image size with its geometric witness set."""

    value: int
    witness: tuple[int, ...]
    base: int


def exact_nf2(f: LinearForm) -> int:
    """Minimum image size over 2-sets: exactly the subset-sum count.

    Every 2-set is equivalent to {0, 1}, where f takes each subset sum
    of the coefficients once.
    """
    return len(subset_sums(f))


def binary_nf3_certificate(f: LinearForm) -> Certificate | None:
    """Exact 3-set minimum for two-variable forms beyond the first cases.

    For coprime u1 <= u2 with u2 >= 3 the nine values on {a < b < c}
    admit at most one coincidence: the orderings force any collision
    into u1*(c - a) = u2*(b - a) or its mirror, and the arithmetic facts
    u2 != 2*u1 and u1^2 + u1*u2 - u2^2 != 0 rule out a second collision
    occurring together with the first.  Hence the minimum is exactly 8
    (witnessed by {0, u1, u2}).  Returns None for (1,1) and (1,2),
    where smaller images exist.
    """
    if f.m != 2:
        raise NotBinary(f"need a two-variable form, got {f}")
    u1, u2 = f.coeffs
    if math.gcd(u1, u2) != 1:
        raise NotCoprime(f"need coprime coefficients, got {f}")
    if u2 < 3:
        return None
    # Both checks are consequences of coprimality with u2 >= 3; they are
    # asserted because the exactness of 8 stands on them.
    if u2 == 2 * u1 or u1 * u1 + u1 * u2 - u2 * u2 == 0:
        raise LinformsError(f"internal: case analysis hypotheses fail for {f}")
    nf2 = exact_nf2(f)
    return Certificate(
        kind=KIND_BINARY_NF3,
        ell=3,
        lam=8,
        bound=8,
        chain=((1, 1), (2, nf2), (3, 8)),
    )


def _validate_known(known: dict[int, int]) -> list[tuple[int, int]]:
    """Check the exact-value ladder and return it sorted."""
    if 1 not in known or 2 not in known:
        raise MissingBaseValue("ladder must contain the 1- and 2-element values")
    if known[1] != 1:
        raise InconsistentKnown("the 1-element value is always 1")
    items = sorted(known.items())
    for (s1, v1), (s2, v2) in zip(items, items[1:]):
        if s1 < 1:
            raise InconsistentKnown(f"set sizes start at 1, got {s1}")
        if v1 >= v2:
            raise InconsistentKnown(
                f"exact values must increase strictly with size: {s1}->{v1}, {s2}->{v2}"
            )
    return items


def _block_bound(known: dict[int, int], k: int, ell: int) -> int:
    """The refined block bound for k-sets using block length ell."""
    lam = known[ell]
    q, r = divmod(k - 1, ell - 1)
    mu_size = max(s for s in known if s <= r + 1)
    return (lam - 1) * q + known[mu_size]


def lower_certificate(f: LinearForm, k: int, known: dict[int, int]) -> Certificate:
    """Best block-decomposition lower bound available from a ladder.

    known maps set sizes to exact minimum image sizes and must contain
    sizes 1 and 2.  The refined bound is compared rung by rung and must
    dominate the unrefined form ((lam-1)/(ell-1))k - lam + 2; violating
    that would mean an arithmetic slip, so it is checked outright.
    """
    items = _validate_known(known)
    chain = tuple(items)
    if k < 1:
        raise InputError(f"need k >= 1, got {k}")
    if k == 1:
        return Certificate(KIND_TRIVIAL, 1, 1, 1, chain)
    if k == 2:
        return Certificate(KIND_NF2, 2, known[2], known[2], chain)
    best_bound = 0
    best_ell = 2
    for ell, lam in items:
        if ell < 2:
            continue
        bound = _block_bound(known, k, ell)
        unrefined = -(-((lam - 1) * k) // (ell - 1)) - lam + 2
        if bound < unrefined:
            raise LinformsError(
                f"internal: refined bound {bound} under unrefined {unrefined} at ell={ell}"
            )
        if bound > best_bound:
            best_bound = bound
            best_ell = ell
    return Certificate(KIND_BLOCK, best_ell, known[best_ell], best_bound, chain)


def _completion_bounds(known: dict[int, int], k: int) -> list[int]:
    """cb[t]: certified extra values forced by t more, larger elements.

    Appending t elements above the current maximum splices a (t+1)-set
    onto the partial set sharing exactly one value, so at least
    (block bound for t+1) - 1 new values appear.  cb[t] >= t always.
    """
    cb = [0] * max(k, 1)
    for t in range(1, k):
        size = t + 1
        if size == 1:
            bound = 1
        else:
            bound = max(
                _block_bound(known, size, ell) for ell in known if ell >= 2
            )
        cb[t] = bound - 1
    return cb


def _thread_count(threads: int | None) -> int:
    if threads is not None:
        return max(1, threads)
    env = os.environ.get("LINFORM_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _explore_binary(
    u1: int,
    u2: int,
    k: int,
    diameter: int,
    a1: int,
    seed: int | None,
    cb: list[int],
    budget: int | None,
) -> tuple[int | None, list[tuple[int, ...]], int]:
    """DFS over canonical k-sets {0, a1, ...} for a two-variable form.

    The image bitmask is maintained incrementally: with dilate masks
    D1 = {u1*a} and D2 = {u2*a}, appending e updates the image M by
    M |= (D2 << u1*e) | ((D1 | bit(u1*e)) << u2*e) -- constant work per
    node instead of a full chain recompute.
    """
    gcd = math.gcd
    best = seed
    wits: list[tuple[int, ...]] = []
    nodes = 0

    def rec(elems: tuple[int, ...], g: int, D1: int, D2: int, M: int, size: int, t: int) -> None:
        nonlocal best, wits, nodes
        if t == 0:
            if g == 1:
                if best is None or size < best:
                    best = size
                    wits = [elems]
                elif size == best:
                    wits.append(elems)
            return
        cbt = cb[t - 1]
        last = elems[-1]
        for e in range(last + 1, diameter - t + 2):
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceeded(f"node budget {budget} exhausted in one partition")
            sh1 = u1 * e
            sh2 = u2 * e
            D1e = D1 | (1 << sh1)
            Me = M | (D2 << sh1) | (D1e << sh2)
            size_e = Me.bit_count()
            if best is not None and size_e + cbt > best:
                continue
            rec(elems + (e,), g if g == 1 else gcd(g, e), D1e, D2 | (1 << sh2), Me, size_e, t - 1)

    nodes += 1
    D1 = 1 | (1 << (u1 * a1))
    D2 = 1 | (1 << (u2 * a1))
    M = D1 | (D1 << (u2 * a1))
    size = M.bit_count()
    if k == 2:
        if a1 == 1:
            if best is None or size < best:
                best, wits = size, [(0, a1)]
            elif size == best:
                wits.append((0, a1))
    elif best is None or size + cb[k - 2] <= best:
        rec((0, a1), a1, D1, D2, M, size, k - 2)
    if not wits:
        return None, [], nodes
    return best, wits, nodes


def _explore_general(
    coeffs: tuple[int, ...],
    k: int,
    diameter: int,
    a1: int,
    seed: int | None,
    cb: list[int],
    budget: int | None,
) -> tuple[int | None, list[tuple[int, ...]], int]:
    """DFS over canonical k-sets {0, a1, ...}; image via the dilate chain."""
    gcd = math.gcd
    best = seed
    wits: list[tuple[int, ...]] = []
    nodes = 0

    def mask_of(elems: tuple[int, ...]) -> int:
        mask = 1
        for u in coeffs:
            s = 0
            for a in elems:
                s |= mask << (u * a)
            mask = s
        return mask

    def rec(elems: tuple[int, ...], g: int, size: int, t: int) -> None:
        nonlocal best, wits, nodes
        if t == 0:
            if g == 1:
                if best is None or size < best:
                    best = size
                    wits = [elems]
                elif size == best:
                    wits.append(elems)
            return
        cbt = cb[t - 1]
        last = elems[-1]
        for e in range(last + 1, diameter - t + 2):
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceeded(f"node budget {budget} exhausted in one partition")
            child = elems + (e,)
            size_e = mask_of(child).bit_count()
            if best is not None and size_e + cbt > best:
                continue
            rec(child, g if g == 1 else gcd(g, e), size_e, t - 1)

    nodes += 1
    start = (0, a1)
    size = mask_of(start).bit_count()
    if k == 2:
        if a1 == 1:
            if best is None or size < best:
                best, wits = size, [(0, a1)]
            elif size == best:
                wits.append((0, a1))
    elif best is None or size + cb[k - 2] <= best:
        rec(start, a1, size, k - 2)
    if not wits:
        return None, [], nodes
    return best, wits, nodes


def _reflection_reps(raw: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Lexicographically smaller of each witness and its reflection, deduplicated."""
    reps = set()
    for elems in raw:
        d = elems[-1]
        mirrored = tuple(d - x for x in reversed(elems))
        reps.add(min(elems, mirrored))
    return sorted(reps)


def search_min(
    f: LinearForm,
    k: int,
    diameter: int,
    *,
    prune_at: int | None = None,
    known: dict[int, int] | None = None,
    witness_cap: int | None = None,
    threads: int | None = None,
    node_budget: int | None = None,
) -> SearchOutcome:
    """Exhaustive minimum of |f(A)| over canonical k-sets within a diameter.

    Explores {0 = a_0 < a_1 < ... < a_{k-1} <= diameter, gcd 1} in
    lexicographic order, pruning with the ladder completion bound; ties
    with the running best are never pruned, so the witness list is the
    full set of minimizers (deduplicated under reflection, then capped).

    Work is partitioned on a_1.  The a_1 = 1 partition (which contains
    the progression {0..k-1}) runs first and its best seeds the pruning
    of the remaining partitions, which then run independently -- the
    result, including node counts, is identical for every worker count.

    prune_at ignores any set with more values than it; if nothing at or
    under prune_at exists, best is None.  known supplies exact small
    values for pruning (defaults to the sizes 1 and 2).
    """
    if k < 1:
        raise InputError(f"need k >= 1, got {k}")
    if diameter < k - 1:
        raise DiameterTooSmall(f"diameter {diameter} cannot hold {k} distinct integers")
    if f.u_total * diameter + 1 > SEARCH_BITS_CAP:
        raise CapacityExceeded(
            f"image bitmask would need {f.u_total * diameter + 1} bits (cap {SEARCH_BITS_CAP})"
        )
    if k == 1:
        return SearchOutcome(best=1, witnesses=(KSet((0,)),), nodes=1)
    ladder = dict(known) if known else {1: 1, 2: exact_nf2(f)}
    _validate_known(ladder)
    cb = _completion_bounds(ladder, k)

    if f.m == 2:
        u1, u2 = f.coeffs

        def explore(a1: int, seed: int | None):
            return _explore_binary(u1, u2, k, diameter, a1, seed, cb, node_budget)

    else:
        coeffs = f.coeffs

        def explore(a1: int, seed: int | None):
            return _explore_general(coeffs, k, diameter, a1, seed, cb, node_budget)

    nodes = 1  # the root {0}
    best1, wits1, n1 = explore(1, prune_at)
    nodes += n1

    seed2 = best1 if best1 is not None else prune_at
    rest = range(2, diameter - (k - 2) + 1)
    outcomes: list[tuple[int | None, list[tuple[int, ...]], int]] = []
    workers = _thread_count(threads)
    if workers <= 1 or len(rest) <= 1:
        for a1 in rest:
            outcomes.append(explore(a1, seed2))
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(explore, a1, seed2) for a1 in rest]
            outcomes = [fut.result() for fut in futures]

    candidates: list[tuple[int, list[tuple[int, ...]]]] = []
    if best1 is not None:
        candidates.append((best1, wits1))
    for b, w, n in outcomes:
        nodes += n
        if b is not None:
            candidates.append((b, w))
    if node_budget is not None and nodes > node_budget:
        raise BudgetExceeded(f"node budget {node_budget} exhausted ({nodes} nodes)")
    if not candidates:
        return SearchOutcome(best=None, witnesses=(), nodes=nodes)

    best = min(b for b, _ in candidates)
    raw = [elems for b, w in candidates if b == best for elems in w]
    reps = _reflection_reps(raw)
    overflow = witness_cap is not None and len(reps) > witness_cap
    if overflow:
        reps = reps[:witness_cap]
    return SearchOutcome(
        best=best,
        witnesses=tuple(KSet(elems) for elems in reps),
        nodes=nodes,
        witness_overflow=overflow,
    )


def compute_nf(f: LinearForm, k: int, config: NfConfig | None = None) -> ExtremalResult:
    """Certified bracket (exact when closed) for the k-set minimum of |f(A)|.

    Bootstraps a ladder of exact small values -- sizes 1 and 2 are free,
    each further rung is an exhaustive search at its own natural
    diameter accepted only when it meets its certificate -- then runs
    the main search and pairs it with the best available certificate.
    """
    cfg = config or NfConfig()
    if k < 1:
        raise InputError(f"need k >= 1, got {k}")
    diameter = cfg.diameter if cfg.diameter is not None else f.u_total * (k - 1)
    if diameter < k - 1:
        raise DiameterTooSmall(f"diameter {diameter} cannot hold {k} distinct integers")

    nodes_total = 0

    def remaining_budget() -> int | None:
        if cfg.node_budget is None:
            return None
        left = cfg.node_budget - nodes_total
        if left <= 0:
            raise BudgetExceeded(f"node budget {cfg.node_budget} exhausted")
        return left

    nf2 = exact_nf2(f)
    ladder: dict[int, int] = {1: 1, 2: nf2}
    certs: dict[int, Certificate] = {
        1: Certificate(KIND_TRIVIAL, 1, 1, 1, ((1, 1),)),
        2: Certificate(KIND_NF2, 2, nf2, nf2, ((1, 1), (2, nf2))),
    }

    binary_cert = binary_nf3_certificate(f) if f.m == 2 else None

    for ell in range(3, min(cfg.ladder_max_ell, k - 1) + 1):
        cand = lower_certificate(f, ell, ladder)
        if ell == 3 and binary_cert is not None and binary_cert.bound >= cand.bound:
            cand = binary_cert
        rung = search_min(
            f,
            ell,
            f.u_total * (ell - 1),
            known=ladder,
            threads=cfg.threads,
            node_budget=remaining_budget(),
        )
        nodes_total += rung.nodes
        if rung.best is None or rung.best < cand.bound:
            raise LinformsError(
                f"internal: rung {ell} search found {rung.best} under certificate {cand.bound}"
            )
        if rung.best == cand.bound:
            ladder[ell] = rung.best
            certs[ell] = cand

    if k in ladder:
        cert = certs[k]
    else:
        cert = lower_certificate(f, k, ladder)
        if k == 3 and binary_cert is not None and binary_cert.bound >= cert.bound:
            cert = binary_cert

    out = search_min(
        f,
        k,
        diameter,
        known=ladder,
        witness_cap=cfg.witness_cap,
        threads=cfg.threads,
        node_budget=remaining_budget(),
    )
    nodes_total += out.nodes
    if out.best is None or out.best < cert.bound:
        raise LinformsError(
            f"internal: search found {out.best} under certificate {cert.bound} for {f}, k={k}"
        )
    return ExtremalResult(
        form=f,
        k=k,
        diameter_searched=diameter,
        lower=cert.bound,
        certificate=cert,
        best=out.best,
        witnesses=out.witnesses,
        exact=out.best == cert.bound,
        nodes_explored=nodes_total,
        witness_overflow=out.witness_overflow,
    )


def compute_mf(f: LinearForm, k: int) -> MaxResult:
    """Exact k-set maximum of |f(A)|, with a verified geometric witness.

    The maximum equals the number of composition vectors: no set does
    better (values are determined by mass vectors), and {g^0, ..., g^{k-1}}
    with g = m * u_m + 1 achieves it, because every value's base-g digits
    (each at most u_total < g) recover its mass vector.  The witness is
    verified by an independent image computation before returning.
    """
    if k < 1:
        raise InputError(f"need k >= 1, got {k}")
    vectors = composition_vectors(f, k)
    g = f.m * f.coeffs[-1] + 1
    witness = tuple(g**i for i in range(k))
    achieved = image(f, witness).size
    if achieved != len(vectors):
        raise LinformsError(
            f"internal: geometric witness hit {achieved} values, expected {len(vectors)}"
        )
    return MaxResult(value=len(vectors), witness=witness, base=g)


def enumerate_minimizers(
    f: LinearForm, k: int, diameter: int | None = None, threads: int | None = None
) -> tuple[KSet, ...]:
    """Every canonical minimizing k-set within the diameter, up to reflection.

    Only meaningful when the minimum is certified exact; otherwise the
    listed sets might not be true minimizers, so NotCertifiedExact is
    raised.  The witness list is uncapped.
    """
    res = compute_nf(f, k, NfConfig(diameter=diameter, witness_cap=None, threads=threads))
    if not res.exact:
        raise NotCertifiedExact(
            f"bracket [{res.lower}, {res.best}] is open for {f}, k={k}, "
            f"diameter {res.diameter_searched}"
        )
    return res.witnesses
