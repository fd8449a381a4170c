"""Factor language of a primitive substitution and derived statistics.

The factor sets are exact: they are computed as the fixed point of a
monotone closure map (seeded from single letters, which is equivalent to
seeding from an admissible pair when the morphism is primitive), not by
scanning a finite window and hoping it was long enough.  Window scans are
used only where the result is explicitly labeled heuristic (return-word
completeness) or where the window provably suffices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal

import numpy as np

from .errors import (
    BadParametersError,
    NotAFactorError,
    NotPrimitiveError,
    WindowCapExceededError,
)
from .morphism import Morphism, Word, incidence_matrix, is_primitive

DEFAULT_SCAN_LEN = 10_000
DEFAULT_MAX_K = 64
DEFAULT_APERIODICITY_N = 200


@dataclass(frozen=True)
class FactorSet:
    """All factors of a given length, as a frozen set of words."""

    length: int
    words: frozenset[Word]

    def __len__(self):
        return len(self.words)

    def __contains__(self, word: Word) -> bool:
        return word in self.words


@dataclass(frozen=True)
class ReturnWordSet:
    """Return words to a base word u: each r has ru in the language, u as a
    prefix of ru, and exactly two occurrences of u inside ru."""

    base: Word
    returns: frozenset[Word]
    completeness: Literal["certified", "heuristic"]
    window_scanned: int


@dataclass(frozen=True)
class RecurrenceEstimate:
    ratio: Fraction
    witness: Word  # the base word achieving the ratio
    longest_return: Word


@dataclass(frozen=True)
class AperiodicityVerdict:
    kind: Literal["periodic", "aperiodic_upto"]
    period: int | None
    n_max: int

    @property
    def periodic(self) -> bool:
        return self.kind == "periodic"


@dataclass(frozen=True)
class PowerFreeResult:
    kind: Literal["bounded", "unbounded", "inconclusive"]
    k: int | None
    max_exponent: int | None
    scan_len: int


class FactorLanguage:
    """Lazily computed exact factor sets of one primitive morphism.

    The closure is run at a single target length c: starting from the
    length-c factors of a long enough image of one letter, repeatedly
    collect length-c factors of sigma-images of the current words until
    stable.  Any length-c factor of any sigma^m(letter) is a length-c
    factor of sigma(w) for some length-c factor w of sigma^(m-1)(letter),
    so the fixed point is exactly the length-c slice of the language.
    Shorter slices are prefix sets of longer ones.
    """

    def __init__(self, m: Morphism):
        if not is_primitive(incidence_matrix(m)).primitive:
            raise NotPrimitiveError("factor language requires a primitive morphism")
        self.morphism = m
        self._slices: dict[int, frozenset[Word]] = {}
        self._closed_at = 0

    def _closure(self, c: int) -> frozenset[Word]:
        m = self.morphism
        if m.widest == 1:
            return frozenset({chr(0) * c})  # one-letter identity morphism
        seed = chr(0)
        while len(seed) < c:
            seed = m.apply(seed)
        current = {seed[i : i + c] for i in range(len(seed) - c + 1)}
        while True:
            fresh = set()
            for word in current:
                image = m.apply(word)
                fresh.update(image[i : i + c] for i in range(len(image) - c + 1))
            if fresh <= current:
                return frozenset(current)
            current |= fresh

    def ensure(self, n: int):
        """Pre-run the closure at length n; shorter slices then derive by
        prefix-slicing.  Call before ascending complexity loops."""
        if n > self._closed_at:
            self._slices[n] = self._closure(n)
            self._closed_at = n

    def slice(self, n: int) -> frozenset[Word]:
        if n < 0:
            raise BadParametersError("factor length must be >= 0")
        if n == 0:
            return frozenset({""})
        cached = self._slices.get(n)
        if cached is not None:
            return cached
        if n > self._closed_at:
            self.ensure(n)
        else:
            longer = self.slice(self._closed_at)
            self._slices[n] = frozenset({w[:n] for w in longer})
        return self._slices[n]

    def complexity(self, n: int) -> int:
        return len(self.slice(n))

    def __contains__(self, word: Word) -> bool:
        return word in self.slice(len(word))


@lru_cache(maxsize=None)
def language_of(m: Morphism) -> FactorLanguage:
    """Shared per-morphism factor-language cache."""
    return FactorLanguage(m)


def factor_language(m: Morphism, n: int) -> FactorSet:
    """The exact set of length-n factors of the substitution language."""
    if n < 1:
        raise BadParametersError("n must be >= 1")
    return FactorSet(n, language_of(m).slice(n))


def complexity(m: Morphism, n: int) -> int:
    """Number of distinct length-n factors; p(0) = 1."""
    if n == 0:
        return 1
    return language_of(m).complexity(n)


def right_prolongable_letter(m: Morphism) -> tuple[str, int]:
    """A letter b and minimal power e with sigma^e(b) starting with b."""
    first = [ord(image[0]) for image in m.images]
    for e in range(1, m.size + 1):
        cur = list(range(m.size))
        for _ in range(e):
            cur = [first[i] for i in cur]
        for i in range(m.size):
            if cur[i] == i:
                return chr(i), e
    raise NotPrimitiveError("no right-prolongable letter found")  # unreachable for #A >= 1


def fixed_point_prefix(m: Morphism, length: int) -> Word:
    """A prefix of a one-sided fixed point of some power of sigma.

    For primitive sigma the factor set of this ray equals the two-sided
    language, so it is a valid scan substrate.
    """
    if m.widest == 1:
        return chr(0) * length
    letter, e = right_prolongable_letter(m)
    word = letter
    while len(word) < length:
        for _ in range(e):
            word = m.apply(word)
    return word[:length]


def _occurrences(text: Word, u: Word) -> list[int]:
    out = []
    i = text.find(u)
    while i != -1:
        out.append(i)
        i = text.find(u, i + 1)
    return out


def return_words(m: Morphism, u: Word, window_cap: int = 1_000_000) -> ReturnWordSet:
    """Return words to u, by scanning fixed-point windows of doubling length.

    The scan stops when the set is unchanged across two consecutive
    doublings and every return word fits in a quarter of the window.  The
    result is labeled "certified" only when the window provably contains
    every return word (linear recurrence with the certified constant),
    which at desk scale essentially never happens; otherwise "heuristic".
    """
    if not u:
        raise BadParametersError("u must be non-empty")
    if u not in language_of(m):
        raise NotAFactorError(f"{m.decode(u)!r} is not a factor")

    from .recognizability import certified_constants  # cycle-free at runtime

    window = max(64, 16 * len(u))
    previous: frozenset[Word] | None = None
    stable_streak = 0
    while True:
        if window > window_cap:
            raise WindowCapExceededError(
                f"return-word scan needs window > cap {window_cap}"
            )
        text = fixed_point_prefix(m, window)
        pos = _occurrences(text, u)
        found = frozenset(text[i:j] for i, j in zip(pos, pos[1:]))
        if found and previous == found:
            stable_streak += 1
        else:
            stable_streak = 0
        previous = found
        longest = max((len(r) for r in found), default=window)
        if stable_streak >= 2 and longest <= window // 4:
            break
        window *= 2

    k_cert = certified_constants(m).K_cert
    certified_window = (k_cert + 1) * (k_cert + 1) * len(u)
    completeness = "certified" if window >= certified_window else "heuristic"
    return ReturnWordSet(u, found, completeness, window)


def aperiodicity_check(m: Morphism, n_max: int = DEFAULT_APERIODICITY_N) -> AperiodicityVerdict:
    """Morse-Hedlund screening: p(n) <= n for some n forces periodicity.

    For a recurrent word the complexity is strictly increasing until it
    stabilizes at the period, so the first n with p(n) <= n already has
    p(n) equal to the period.  "aperiodic_upto" is a screening verdict,
    not a proof.
    """
    lang = language_of(m)
    # a periodic word stabilizes early, so probe cheap prefixes before
    # paying for the closure at n_max
    for probe in (8, 32, n_max):
        lang.ensure(min(probe, n_max))
        for n in range(1, min(probe, n_max) + 1):
            p = lang.complexity(n)
            if p <= n:
                return AperiodicityVerdict("periodic", p, n_max)
        if probe >= n_max:
            break
    return AperiodicityVerdict("aperiodic_upto", None, n_max)


def _max_power_exponent(text: Word) -> int:
    """Largest k such that some u^k (u non-empty) occurs in text.

    For each candidate period p, the longest run where text agrees with
    its own p-shift gives the maximal exponent floor(run/p) + 1.
    """
    n = len(text)
    if n < 2:
        return 1
    try:
        arr = np.frombuffer(text.encode("latin-1"), dtype=np.uint8)
    except UnicodeEncodeError:
        arr = np.fromiter(map(ord, text), dtype=np.uint32, count=n)
    best = 1
    for p in range(1, n // 2 + 1):
        eq = arr[p:] == arr[:-p]
        if not eq.any():
            continue
        padded = np.concatenate(([False], eq, [False]))
        edges = np.flatnonzero(padded[1:] != padded[:-1])
        run = int((edges[1::2] - edges[0::2]).max())
        exponent = run // p + 1
        if exponent > best:
            best = exponent
    return best


def power_free_index(
    m: Morphism,
    scan_len: int = DEFAULT_SCAN_LEN,
    max_k: int = DEFAULT_MAX_K,
) -> PowerFreeResult:
    """Smallest k such that no k-th power occurs, from an exhaustive scan.

    The window is long enough that, by linear recurrence, any u^k with
    |u| <= scan_len/(2k) would show up in it; periodic fixed points are
    screened out first and reported as "unbounded".
    """
    if aperiodicity_check(m).periodic:
        return PowerFreeResult("unbounded", None, None, scan_len)
    text = fixed_point_prefix(m, scan_len)
    max_exp = _max_power_exponent(text)
    if max_exp + 1 > max_k:
        return PowerFreeResult("inconclusive", None, max_exp, scan_len)
    return PowerFreeResult("bounded", max_exp + 1, max_exp, scan_len)


def recurrence_constant_empirical(
    m: Morphism, max_len: int, window_cap: int = 1_000_000
) -> RecurrenceEstimate:
    """Lower bound for the linear-recurrence constant K.

    Maximizes (longest return word to u) / |u| over all factors u of
    length <= max_len; exact rational, with the achieving word.
    """
    if max_len < 1:
        raise BadParametersError("max_len must be >= 1")
    if aperiodicity_check(m).periodic:
        raise BadParametersError("recurrence ratio needs an aperiodic fixed point")
    lang = language_of(m)
    best: RecurrenceEstimate | None = None
    for n in range(1, max_len + 1):
        for u in sorted(lang.slice(n)):
            rws = return_words(m, u, window_cap)
            if not rws.returns:
                continue
            longest = max(rws.returns, key=len)
            ratio = Fraction(len(longest), n)
            if best is None or ratio > best.ratio:
                best = RecurrenceEstimate(ratio, u, longest)
    assert best is not None
    return best
