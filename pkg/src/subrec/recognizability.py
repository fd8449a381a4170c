"""Recognizability machinery: injectivity exponent, interpretations and
synchronizing delay, the window-based verifier, and the bound calculators.

Two kinds of answers come out of this module and they are never conflated:
counterexamples found by :func:`verify_constant` are globally valid facts
(cut status and preimage letters are ground truth from the window tower),
while an "ok" verdict is relative to the scanned window.  Similarly the
bound calculators label every quantity as exact, certified, or heuristic.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Literal

from .bignum import digits10, int_log10
from .errors import (
    BadParametersError,
    InputError,
    NotAFactorError,
    NotAperiodicError,
    NotPrimitiveError,
    WindowTooSmallError,
)
from .fixedpoint import Window, cutting_points
from .language import (
    aperiodicity_check,
    language_of,
    power_free_index,
    recurrence_constant_empirical,
)
from .morphism import (
    Morphism,
    Word,
    extreme_lengths,
    incidence_matrix,
    is_primitive,
)

DEFAULT_EXACT_CAP = 10**6  # decimal digits; SUBREC_EXACT_CAP overrides via CLI


def exact_digit_cap() -> int:
    raw = os.environ.get("SUBREC_EXACT_CAP")
    if raw is None:
        return DEFAULT_EXACT_CAP
    try:
        return max(1, int(raw))
    except ValueError:
        raise InputError(f"SUBREC_EXACT_CAP must be an integer, got {raw!r}") from None


# ---------------------------------------------------------------------------
# Injectivity exponent (letter-level kernel chain)


@dataclass(frozen=True)
class KernelChain:
    """levels[n] is the partition of the alphabet by sigma^n-image equality,
    for n = 0 .. #A.  d is the smallest level whose partition already equals
    the stable one; d_safe = #A covers the word-level statement."""

    levels: tuple[tuple[tuple[str, ...], ...], ...]
    d: int
    d_safe: int


def _image_letters(m: Morphism, letter: str, n: int) -> Iterator[str]:
    if n == 0:
        yield letter
        return
    for c in m.images[ord(letter)]:
        yield from _image_letters(m, c, n - 1)


def _images_equal(m: Morphism, a: str, b: str, n: int) -> bool:
    from .morphism import image_lengths

    if a == b:
        return True
    if image_lengths(m, n)[ord(a)] != image_lengths(m, n)[ord(b)]:
        return False
    return all(x == y for x, y in zip(_image_letters(m, a, n), _image_letters(m, b, n)))


def _kernel_partition(m: Morphism, n: int) -> tuple[tuple[str, ...], ...]:
    classes: list[list[str]] = []
    for i in range(m.size):
        letter = chr(i)
        for cls in classes:
            if _images_equal(m, cls[0], letter, n):
                cls.append(letter)
                break
        else:
            classes.append([letter])
    return tuple(tuple(cls) for cls in classes)


def injectivity_exponent(m: Morphism) -> KernelChain:
    """Kernel chain of sigma^n on letters, with image lengths compared via
    matrix powers before any materialization.

    The chain refines upward and is constant from level #A - 1 on, so d is
    read off by comparing each level to the stable partition.  This
    letter-level d is what the two-step bound argument consumes; forcing
    d = #A (d_safe) covers the statement quantified over words.
    """
    size = m.size
    levels = tuple(_kernel_partition(m, n) for n in range(size + 1))
    stable = levels[size - 1]
    d = next(n + 1 for n in range(size) if levels[n] == stable)
    return KernelChain(levels, d, size)


# ---------------------------------------------------------------------------
# Interpretations, synchronizing points, synchronizing delay


@dataclass(frozen=True)
class Interpretation:
    """A triple (prefix, core, suffix) with sigma(core) = prefix.u.suffix,
    tight on both ends, plus the image-boundary positions inside u.

    cuts holds every k in [0, |u|] where a boundary of sigma(core) lands;
    k = 0 appears exactly when prefix is empty, k = |u| exactly when the
    suffix is empty.  Synchronization only counts boundaries with at least
    one whole image before them, i.e. cuts >= 1.
    """

    prefix: Word
    core: Word
    suffix: Word
    cuts: tuple[int, ...]

    @property
    def sync_cuts(self) -> tuple[int, ...]:
        return tuple(k for k in self.cuts if k >= 1)


@dataclass(frozen=True)
class SyncPointVerdict:
    positions: tuple[int, ...]

    @property
    def synchronized(self) -> bool:
        return bool(self.positions)


@dataclass(frozen=True)
class SyncResult:
    """Outcome of the delay search.

    delay is the first length at which every factor has a synchronizing
    point (None if not reached by n_max); per_length records the
    unsynchronized words for each tested length.  screened_periodic marks
    inputs rejected by the aperiodicity screening, for which no finite
    delay is reported.
    """

    delay: int | None
    n_max: int
    per_length: tuple[tuple[int, tuple[Word, ...]], ...]
    L_from_C: int | None
    screened_periodic: bool = False


def interpretations(m: Morphism, u: Word) -> tuple[Interpretation, ...]:
    """All tight interpretations of u.

    Candidate cores are enumerated from the factor language over the
    provably complete length range |u|/|sigma| <= |v| <=
    (|u| + 2(|sigma|-1)) / <sigma>, and every candidate is checked by
    direct matching, so the range is a pruning device only.
    """
    if not u:
        raise BadParametersError("u must be non-empty")
    lang = language_of(m)
    if u not in lang:
        raise NotAFactorError(f"{m.decode(u)!r} is not a factor")
    widest, narrowest = m.widest, m.narrowest
    lo = max(1, -((-len(u)) // widest))
    hi = (len(u) + 2 * (widest - 1)) // narrowest
    found: list[Interpretation] = []
    for t in range(lo, hi + 1):
        for v in lang.slice(t):
            sv = m.apply(v)
            if len(sv) < len(u):
                continue
            first_len = len(m.images[ord(v[0])])
            last_len = len(m.images[ord(v[-1])])
            off = sv.find(u)
            while 0 <= off < first_len:
                s_len = len(sv) - off - len(u)
                if s_len < last_len:
                    found.append(_make_interpretation(m, u, v, off))
                off = sv.find(u, off + 1)
    return tuple(sorted(found, key=lambda it: (it.core, len(it.prefix))))


def _make_interpretation(m: Morphism, u: Word, v: Word, off: int) -> Interpretation:
    sv_len = off
    cuts = [0] if off == 0 else []
    cum = 0
    for c in v:
        cum += len(m.images[ord(c)])
        k = cum - off
        if 1 <= k <= len(u):
            cuts.append(k)
    image = m.apply(v)
    return Interpretation(image[:off], v, image[off + len(u) :], tuple(cuts))


def synchronizing_point(m: Morphism, u: Word, interior_only: bool = False) -> SyncPointVerdict:
    """Positions k where every interpretation of u places an image boundary.

    k ranges over 1..|u|; the boundary k = |u| (suffix aligned with a full
    image) is allowed unless interior_only restricts to 1..|u|-1.
    """
    interps = interpretations(m, u)
    assert interps, "every factor has at least one tight interpretation"
    common = set(interps[0].sync_cuts)
    for it in interps[1:]:
        common &= set(it.sync_cuts)
        if not common:
            break
    if interior_only:
        common -= {len(u)}
    return SyncPointVerdict(tuple(sorted(common)))


def synchronizing_delay(
    m: Morphism, n_max: int, interior_only: bool = False
) -> SyncResult:
    """Smallest length C <= n_max at which every factor is synchronized.

    A word containing a synchronized factor is itself synchronized (its
    interpretations induce interpretations of the factor and inherit the
    common boundary), so the first all-synchronized length is the delay.
    Periodic fixed points never have one; they are screened out first and
    reported as delay None.
    """
    if n_max < 1:
        raise BadParametersError("n_max must be >= 1")
    if not is_primitive(incidence_matrix(m)).primitive:
        raise NotPrimitiveError("synchronizing delay requires a primitive morphism")
    if aperiodicity_check(m).periodic:
        return SyncResult(None, n_max, (), None, screened_periodic=True)
    lang = language_of(m)
    per_length: list[tuple[int, tuple[Word, ...]]] = []
    for n in range(1, n_max + 1):
        bad = tuple(
            u for u in sorted(lang.slice(n))
            if not synchronizing_point(m, u, interior_only).synchronized
        )
        per_length.append((n, bad))
        if not bad:
            return SyncResult(n, n_max, tuple(per_length), n // 2)
    return SyncResult(None, n_max, tuple(per_length), None)


# ---------------------------------------------------------------------------
# Window-based verifier


@dataclass(frozen=True)
class Counterexample:
    """A pair refuting constant L at the given level: the context around
    position m equals the context around the cut at cut_position (whose
    level-p preimage index is preimage_index), yet m is not a cut with the
    same preimage letter."""

    preimage_index: int
    cut_position: int
    position: int
    kind: Literal["not_a_cut", "preimage_mismatch"]


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    constant: int
    level: int
    counterexample: Counterexample | None = None


@dataclass(frozen=True)
class EmpiricalConstant:
    """certified_lower is 1 + the largest refuted L (a global fact);
    heuristic is the smallest window-ok L, None if every L <= L_max fails."""

    certified_lower: int
    heuristic: int | None
    level: int
    L_max: int
    last_counterexample: Counterexample | None


def verify_constant(window: Window, L: int, p: int) -> VerifyResult:
    """Check the recognizability property for constant L at level p.

    Every position is bucketed by its (2L+1)-letter context; a bucket
    containing a cut must contain only cuts carrying the same preimage
    letter.  Counterexamples are globally valid; "ok" only says the window
    exhibited no conflict.  Ties: smallest |m|, then smallest preimage |i|.
    """
    if L < 0:
        raise BadParametersError("L must be >= 0")
    cuts = cutting_points(window, p)
    widest_p = extreme_lengths(window.morphism, p)[0]
    lo, hi = window.lo, window.hi
    span_lo, span_hi = lo + L, hi - 1 - L
    if span_hi - span_lo < 2 * widest_p:
        raise WindowTooSmallError(
            f"window [{lo},{hi}) too small for L={L} at level {p}"
        )
    content = window.content
    buckets: dict[Word, list[int]] = {}
    for pos in range(span_lo, span_hi + 1):
        idx = pos - lo
        buckets.setdefault(content[idx - L : idx + L + 1], []).append(pos)

    junction_ordinal = len(window.tower[p][0])
    cut_info: dict[int, tuple[int, str]] = {}
    for ordinal, (pos, letter) in enumerate(zip(cuts.positions, cuts.preimages)):
        cut_info[pos] = (ordinal - junction_ordinal, letter)

    best: tuple[int, int, Counterexample] | None = None
    for members in buckets.values():
        tagged = [(pos, cut_info.get(pos)) for pos in members]
        cut_members = [(pos, info) for pos, info in tagged if info is not None]
        if not cut_members:
            continue
        non_cuts = [pos for pos, info in tagged if info is None]
        preimages = {info[1] for _, info in cut_members}
        if not non_cuts and len(preimages) == 1:
            continue
        for m_pos in non_cuts:
            c_pos, (i, _) = min(cut_members, key=lambda cm: abs(cm[1][0]))
            cand = Counterexample(i, c_pos, m_pos, "not_a_cut")
            key = (abs(m_pos), abs(i))
            if best is None or key < (best[0], best[1]):
                best = (key[0], key[1], cand)
        if len(preimages) > 1:
            for m_pos, m_info in cut_members:
                conflicting = [cm for cm in cut_members if cm[1][1] != m_info[1]]
                if not conflicting:
                    continue
                c_pos, (i, _) = min(conflicting, key=lambda cm: abs(cm[1][0]))
                cand = Counterexample(i, c_pos, m_pos, "preimage_mismatch")
                key = (abs(m_pos), abs(i))
                if best is None or key < (best[0], best[1]):
                    best = (key[0], key[1], cand)
    if best is None:
        return VerifyResult(True, L, p)
    return VerifyResult(False, L, p, best[2])


def minimal_constant_empirical(window: Window, p: int, L_max: int) -> EmpiricalConstant:
    """Ascending scan of verify_constant over L = 0..L_max.

    Window-relative "ok" is monotone in L (a longer context only refines
    the buckets), so the first passing L is the heuristic minimum."""
    if L_max < 0:
        raise BadParametersError("L_max must be >= 0")
    last: Counterexample | None = None
    for L in range(L_max + 1):
        result = verify_constant(window, L, p)
        if result.ok:
            return EmpiricalConstant(L, L, p, L_max, last)
        last = result.counterexample
    return EmpiricalConstant(L_max + 1, None, p, L_max, last)


# ---------------------------------------------------------------------------
# Certified constants and bounds


@dataclass(frozen=True)
class CertifiedConstants:
    """Alphabet-and-width certificates: N_cert bounds |sigma^n|/<sigma^n>
    for every n, Rret_cert bounds return words to length-2 factors, and
    K_cert = Rret_cert * N_cert * |sigma| bounds linear recurrence, making
    the fixed point (K_cert + 1)-power-free."""

    N_cert: int
    Rret_cert: int
    K_cert: int
    k_cert: int


@dataclass(frozen=True)
class BigValue:
    """An exact big natural, or its symbolic/logarithmic stand-in once the
    exact form would blow past the digit cap."""

    expr: str
    log10: float
    exact: int | None = None

    @classmethod
    def from_int(cls, x: int, expr: str | None = None) -> "BigValue":
        return cls(expr if expr is not None else "exact", int_log10(x) if x > 0 else 0.0, x)

    @property
    def digits(self) -> int | None:
        return None if self.exact is None else digits10(self.exact)


@dataclass(frozen=True)
class BoundBreakdown:
    mode: Literal["empirical_exact", "certified"]
    N: int
    k: int
    K: Fraction | int
    d: int
    R: int
    Q: int
    M: BigValue
    bound: BigValue
    warnings: tuple[str, ...]


def certified_constants(m: Morphism) -> CertifiedConstants:
    """Exact big-integer certificates from matrix powers alone."""
    if not is_primitive(incidence_matrix(m)).primitive:
        raise NotPrimitiveError("certified constants require a primitive morphism")
    a2 = m.size * m.size
    n_cert = extreme_lengths(m, a2)[0]
    rret = 2 * extreme_lengths(m, 2 * a2)[0]
    k_big = rret * n_cert * m.widest
    return CertifiedConstants(n_cert, rret, k_big, k_big + 1)


def exact_ratio_constant(m: Morphism) -> tuple[int, tuple[str, ...]]:
    """Smallest N certified to satisfy |sigma^n| <= N <sigma^n> for all n.

    Exact ratios are sampled for n <= 4 (#A)^2; the tail is certified by
    induction with a positivity stride t (M^t > 0): the one-step estimate
    r(n) <= |sigma^t| r(n-t) / (r(n-t) + <sigma^t> - 1) keeps any bound
    B >= |sigma^t| - <sigma^t> + 1 invariant.  The result is the sampled
    maximum, escalated to the best stride bound when necessary."""
    verdict = is_primitive(incidence_matrix(m))
    if not verdict.primitive:
        raise NotPrimitiveError("ratio constant requires a primitive morphism")
    span = 4 * m.size * m.size
    sampled = Fraction(1)
    for n in range(1, span + 1):
        widest, narrowest = extreme_lengths(m, n)
        sampled = max(sampled, Fraction(widest, narrowest))
    stride_bounds = []
    for t in range(verdict.witness, span + 1):
        widest, narrowest = extreme_lengths(m, t)
        stride_bounds.append(widest - narrowest + 1)
    sampled_int = -(-sampled.numerator // sampled.denominator)
    n_exact = max(sampled_int, min(stride_bounds))
    warnings = ()
    if n_exact > sampled_int:
        warnings = (
            f"N escalated from sampled {sampled_int} to {n_exact} by the tail certificate",
        )
    return n_exact, warnings


def _sigma_power_log10(m: Morphism, n: int) -> float:
    """Approximate log10 |sigma^n| for n past the exact cap: linear
    extrapolation from two exact sample points, which cancels the constant
    in front of the dominant growth term."""
    base = 1024
    l1 = int_log10(extreme_lengths(m, base)[0])
    l2 = int_log10(extreme_lengths(m, 2 * base)[0])
    rate = (l2 - l1) / base
    try:
        return l1 + float(n - base) * rate
    except OverflowError:
        return math.inf


def recognizability_bound(
    m: Morphism,
    mode: Literal["empirical_exact", "certified"],
    safe_d: bool = False,
    exact_cap: int | None = None,
) -> BoundBreakdown:
    """Evaluate the recognizability bound R |sigma^(dQ)| + |sigma^d| with

        R = ceil(N^2 (k+1) + 2N),
        Q = 1 + p(R) * sum of p(i) for ceil(R/N) <= i <= RN + 2.

    In empirical_exact mode k, N and every p(i) are exact values computed
    by the language/morphism modules; in certified mode they are the
    alphabet-and-width certificates, with p(i) replaced by its certified
    ceiling K*i.  Values whose exact form would exceed the digit cap are
    returned in logarithmic form, labeled approximate."""
    if exact_cap is None:
        exact_cap = exact_digit_cap()
    if not is_primitive(incidence_matrix(m)).primitive:
        raise NotPrimitiveError("the bound requires a primitive morphism")
    screening = aperiodicity_check(m)
    if screening.periodic:
        raise NotAperiodicError(
            f"fixed point is periodic (period {screening.period}); not recognizable"
        )
    warnings = [f"aperiodicity screened to n={screening.n_max}, not proven"]
    chain = injectivity_exponent(m)
    d = chain.d_safe if safe_d else chain.d

    if mode == "empirical_exact":
        pf = power_free_index(m)
        if pf.kind != "bounded":
            raise InputError(f"power-free index not pinned (verdict {pf.kind})")
        k = pf.k
        n_value, n_warnings = exact_ratio_constant(m)
        warnings.extend(n_warnings)
        k_ratio: Fraction | int = recurrence_constant_empirical(m, 4).ratio
        warnings.append("K is an empirical lower bound (scan up to length 4)")
    elif mode == "certified":
        certs = certified_constants(m)
        k = certs.k_cert
        n_value = certs.N_cert
        k_ratio = certs.K_cert
    else:
        raise BadParametersError(f"unknown mode {mode!r}")

    r_value = n_value * n_value * (k + 1) + 2 * n_value
    i_lo = -((-r_value) // n_value)
    i_hi = r_value * n_value + 2
    if mode == "empirical_exact":
        lang = language_of(m)
        lang.ensure(max(r_value, i_hi))
        q_value = 1 + lang.complexity(r_value) * sum(
            lang.complexity(i) for i in range(i_lo, i_hi + 1)
        )
    else:
        total = (i_hi * (i_hi + 1) - (i_lo - 1) * i_lo) // 2
        q_value = 1 + (k_ratio * r_value) * (k_ratio * total)

    dq = d * q_value
    est_digits = _sigma_power_log10(m, dq) + int_log10(r_value) + 1
    if est_digits <= exact_cap:
        widest_dq = extreme_lengths(m, dq)[0]
        m_value = BigValue.from_int(r_value * widest_dq, f"{r_value}*|sigma^{dq}|")
        bound_int = m_value.exact + extreme_lengths(m, d)[0]
        bound = BigValue.from_int(bound_int, f"{r_value}*|sigma^{dq}| + |sigma^{d}|")
    else:
        log_m = est_digits - 1
        m_value = BigValue(f"{r_value}*|sigma^{dq}|", log_m)
        bound = BigValue(f"{r_value}*|sigma^{dq}| + |sigma^{d}|", log_m)
        warnings.append(
            "bound exceeds the exact digit cap; logarithmic form uses measured growth"
        )

    return BoundBreakdown(
        mode, n_value, k, k_ratio, d, r_value, q_value, m_value, bound, tuple(warnings)
    )


@dataclass(frozen=True)
class ClosedFormBound:
    """2 |sigma|^exponent + |sigma|^addend_power, with the exponent always
    exact and the value materialized only under the digit cap."""

    base: int
    exponent: int
    addend_power: int
    value: BigValue


def closed_form_bound(
    m: Morphism, injective_hint: bool = False, exact_cap: int | None = None
) -> ClosedFormBound:
    """Alphabet-and-width-only bound 2|sigma|^(6(#A)^2 + 6(#A)|sigma|^(28(#A)^2))
    + |sigma|^(#A); with the injectivity hint the inner factor #A and the
    addend power drop to 1."""
    if exact_cap is None:
        exact_cap = exact_digit_cap()
    if not is_primitive(incidence_matrix(m)).primitive:
        raise NotPrimitiveError("the bound requires a primitive morphism")
    base = m.widest
    size = m.size
    tower = base ** (28 * size * size)
    factor = 6 if injective_hint else 6 * size
    exponent = 6 * size * size + factor * tower
    addend_power = 1 if injective_hint else size
    expr = f"2*{base}^{exponent if digits10(exponent) <= 40 else '<exponent>'} + {base}^{addend_power}"
    if base == 1:
        return ClosedFormBound(base, exponent, addend_power, BigValue.from_int(3, expr))
    try:
        log10_value = int_log10(2) + float(exponent) * int_log10(base)
    except OverflowError:
        log10_value = math.inf
    if log10_value + 1 <= exact_cap:
        value = 2 * base**exponent + base**addend_power
        return ClosedFormBound(base, exponent, addend_power, BigValue.from_int(value, expr))
    return ClosedFormBound(base, exponent, addend_power, BigValue(expr, log10_value))


def _least_divisor(k: int) -> int:
    d = 2
    while d * d <= k:
        if k % d == 0:
            return d
        d += 1
    return k


def klouda_medkova_bound(k: int, least_divisor: int | None = None) -> int:
    """Synchronizing-delay bound for k-uniform morphisms on two letters:
    8 when k = 2; k^2 + 3k - 4 when k is an odd prime;
    k^2 (k/d - 1) + 5k - 4 otherwise, d the least divisor of k above 1."""
    if k < 2:
        raise BadParametersError("k must be >= 2")
    expected = _least_divisor(k)
    if least_divisor is not None and least_divisor != expected:
        raise BadParametersError(
            f"{least_divisor} is not the least divisor of {k} greater than 1"
        )
    if k == 2:
        return 8
    if k % 2 == 1 and expected == k:
        return k * k + 3 * k - 4
    return k * k * (k // expected - 1) + 5 * k - 4
