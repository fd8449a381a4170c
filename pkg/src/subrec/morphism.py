"""Alphabet and morphism algebra.

Letters are stored as dense indices; a word is a ``str`` whose characters
are ``chr(index)``.  Display tokens exist only at the I/O boundary
(:func:`parse_morphism`, :meth:`Morphism.encode`, :meth:`Morphism.decode`).
All length computations that could blow up go through exact big-integer
powers of the incidence matrix, never through word expansion.

Every value here is immutable after construction and safe to share
between threads; all operations are pure functions.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    BadParametersError,
    DegenerateWidthError,
    DuplicateRuleError,
    EmptyImageError,
    InputError,
    MorphismSyntaxError,
    NotPrimitiveError,
    SizeExceededError,
    UnknownLetterError,
)

Word = str  # characters are chr(letter index)

_BRACKETED = re.compile(r"^\[[^\[\]\s]+\]$")


@dataclass(frozen=True)
class Letter:
    """A letter of the alphabet: dense index plus display token."""

    index: int
    display: str


@dataclass(frozen=True)
class Morphism:
    """A non-erasing morphism, given by one image word per letter.

    ``images[i]`` is the image of letter ``i``; all words are index-encoded
    strings.  Instances are hashable and compared by value.
    """

    letters: tuple[Letter, ...]
    images: tuple[Word, ...]

    def __post_init__(self):
        size = len(self.letters)
        if size == 0:
            raise InputError("empty alphabet")
        if len(self.images) != size:
            raise InputError("one image per letter required")
        displays = [letter.display for letter in self.letters]
        if len(set(displays)) != size:
            raise InputError("display tokens must be pairwise distinct")
        for i, image in enumerate(self.images):
            if not image:
                raise InputError(f"image of letter {displays[i]!r} is empty")
            for ch in image:
                if ord(ch) >= size:
                    raise InputError(f"image of {displays[i]!r} uses an unknown letter")

    @property
    def size(self) -> int:
        return len(self.letters)

    @property
    def widest(self) -> int:
        """max |sigma(a)| over letters a."""
        return max(len(w) for w in self.images)

    @property
    def narrowest(self) -> int:
        """min |sigma(a)| over letters a."""
        return min(len(w) for w in self.images)

    def letter(self, index: int) -> str:
        return chr(index)

    def apply(self, word: Word) -> Word:
        images = self.images
        return "".join(images[ord(ch)] for ch in word)

    def encode(self, text: str) -> Word:
        """Convert display tokens (contiguous or whitespace-separated) to a word."""
        by_display = {letter.display: letter.index for letter in self.letters}
        tokens: list[str] = []
        if any(ch.isspace() for ch in text):
            tokens = text.split()
        else:
            pos = 0
            while pos < len(text):
                if text[pos] == "[":
                    end = text.find("]", pos)
                    if end == -1:
                        raise InputError(f"unterminated bracket token in {text!r}")
                    tokens.append(text[pos : end + 1])
                    pos = end + 1
                else:
                    tokens.append(text[pos])
                    pos += 1
        try:
            return "".join(chr(by_display[token]) for token in tokens)
        except KeyError as exc:
            raise InputError(f"unknown letter {exc.args[0]!r}") from None

    def decode(self, word: Word, sep: str | None = None) -> str:
        """Render an index-encoded word with display tokens."""
        displays = [self.letters[ord(ch)].display for ch in word]
        if sep is None:
            sep = " " if any(len(d) > 1 for d in displays) else ""
        return sep.join(displays)

    def rules_text(self) -> str:
        lines = []
        for letter, image in zip(self.letters, self.images):
            rhs = " ".join(self.letters[ord(ch)].display for ch in image)
            lines.append(f"{letter.display} -> {rhs}")
        return "\n".join(lines)


@dataclass(frozen=True)
class IncidenceMatrix:
    """Square matrix of arbitrary-precision naturals.

    For a morphism, entry (a, b) counts occurrences of letter a in the
    image of letter b, so column sums are image lengths.
    """

    rows: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __matmul__(self, other: "IncidenceMatrix") -> "IncidenceMatrix":
        n = self.dim
        cols = tuple(zip(*other.rows))
        return IncidenceMatrix(
            tuple(
                tuple(sum(row[k] * col[k] for k in range(n)) for col in cols)
                for row in self.rows
            )
        )

    def power(self, n: int) -> "IncidenceMatrix":
        """Exact n-th power by square-and-multiply."""
        if n < 0:
            raise BadParametersError("negative matrix power")
        dim = self.dim
        result = identity_matrix(dim)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base if n > 1 else base
            n >>= 1
        return result

    def column_sums(self) -> tuple[int, ...]:
        return tuple(sum(col) for col in zip(*self.rows))

    def is_positive(self) -> bool:
        return all(entry > 0 for row in self.rows for entry in row)


def identity_matrix(dim: int) -> IncidenceMatrix:
    return IncidenceMatrix(tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim)))


@dataclass(frozen=True)
class FixedPointSeed:
    """Two-sided fixed point seed: sigma^power(left) ends with left,
    sigma^power(right) starts with right, and left+right is admissible."""

    power: int
    left: str
    right: str


@dataclass(frozen=True)
class PrimitivityResult:
    primitive: bool
    witness: int | None  # smallest k with M^k > 0, when primitive


def _is_token(token: str) -> bool:
    """A token is one grapheme cluster (base char plus combining marks)
    or a bracketed identifier."""
    if _BRACKETED.match(token):
        return True
    if not token:
        return False
    if any(unicodedata.combining(ch) for ch in token[:1]):
        return False
    return all(unicodedata.combining(ch) for ch in token[1:])


def parse_morphism(text: str) -> Morphism:
    """Parse the line-oriented rule grammar ``LHS -> RHS``.

    Comment lines start with ``#``; blank lines are skipped; rule order
    defines letter indices.  Raises the specific parse error subclasses
    with 1-based line/column positions.
    """
    order: list[str] = []
    raw_rules: dict[str, list[str]] = {}
    positions: dict[str, tuple[int, int]] = {}
    image_tokens: list[tuple[str, int, int]] = []

    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        spans = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]
        tokens = [t for t, _ in spans]
        if len(tokens) < 2 or tokens[1] != "->":
            col = spans[1][1] if len(spans) > 1 else spans[0][1]
            raise MorphismSyntaxError("expected 'LHS -> RHS'", line_no, col)
        lhs, lhs_col = spans[0]
        if not _is_token(lhs):
            raise MorphismSyntaxError(f"bad token {lhs!r}", line_no, lhs_col)
        if lhs in raw_rules:
            raise DuplicateRuleError(f"duplicate rule for {lhs!r}", line_no, lhs_col)
        rhs = spans[2:]
        if not rhs:
            raise EmptyImageError(f"rule for {lhs!r} has an empty image", line_no, len(line) + 1)
        for token, col in rhs:
            if not _is_token(token):
                raise MorphismSyntaxError(f"bad token {token!r}", line_no, col)
            image_tokens.append((token, line_no, col))
        order.append(lhs)
        raw_rules[lhs] = [t for t, _ in rhs]
        positions[lhs] = (line_no, lhs_col)

    if not order:
        raise MorphismSyntaxError("no rules found", 1, 1)
    index = {token: i for i, token in enumerate(order)}
    for token, line_no, col in image_tokens:
        if token not in index:
            raise UnknownLetterError(f"no rule for letter {token!r}", line_no, col)

    letters = tuple(Letter(i, token) for i, token in enumerate(order))
    images = tuple("".join(chr(index[t]) for t in raw_rules[tok]) for tok in order)
    return Morphism(letters, images)


def apply(m: Morphism, word: Word) -> Word:
    """Image of a word: concatenation of letter images (monoid homomorphism)."""
    return m.apply(word)


def incidence_matrix(m: Morphism) -> IncidenceMatrix:
    size = m.size
    rows = [[0] * size for _ in range(size)]
    for b, image in enumerate(m.images):
        for ch in image:
            rows[ord(ch)][b] += 1
    return IncidenceMatrix(tuple(tuple(row) for row in rows))


@lru_cache(maxsize=None)
def _matrix_power_cached(m: Morphism, n: int) -> IncidenceMatrix:
    return incidence_matrix(m).power(n)


def image_lengths(m: Morphism, n: int) -> tuple[int, ...]:
    """|sigma^n(a)| for every letter a, via matrix powers (exact)."""
    return _matrix_power_cached(m, n).column_sums()


def extreme_lengths(m: Morphism, n: int) -> tuple[int, int]:
    """(|sigma^n|, <sigma^n>): widest and narrowest image lengths of sigma^n."""
    sums = image_lengths(m, n)
    return max(sums), min(sums)


def iterate(m: Morphism, letter: str, n: int, cap: int) -> Word:
    """sigma^n(letter), refusing to materialize words longer than cap.

    The length is predicted from the incidence matrix before any expansion,
    so the error is deterministic and cheap.
    """
    if len(letter) != 1 or ord(letter) >= m.size:
        raise InputError("letter out of range")
    predicted = image_lengths(m, n)[ord(letter)]
    if predicted > cap:
        raise SizeExceededError(predicted, cap)
    word = letter
    for _ in range(n):
        word = m.apply(word)
    return word


def power(m: Morphism, n: int) -> Morphism:
    """The morphism sigma^n over the same alphabet (n >= 1)."""
    if n < 1:
        raise BadParametersError("power must be >= 1")
    images = []
    for i in range(m.size):
        word = chr(i)
        for _ in range(n):
            word = m.apply(word)
        images.append(word)
    return Morphism(m.letters, tuple(images))


def wielandt_bound(dim: int) -> int:
    return dim * dim - 2 * dim + 2


def is_primitive(matrix) -> PrimitivityResult:
    """Primitivity test with the smallest positivity witness.

    Accepts an IncidenceMatrix or a plain sequence of rows.  Only the
    positivity pattern matters, so powers are taken over booleans; the
    verdict is conclusive either way because a primitive d x d matrix
    must have M^k > 0 for some k <= d^2 - 2d + 2.
    """
    rows = matrix.rows if isinstance(matrix, IncidenceMatrix) else tuple(matrix)
    dim = len(rows)
    pattern = [[bool(entry) for entry in row] for row in rows]
    current = pattern
    for k in range(1, wielandt_bound(dim) + 1):
        if k > 1:
            current = [
                [any(current[i][t] and pattern[t][j] for t in range(dim)) for j in range(dim)]
                for i in range(dim)
            ]
        if all(all(row) for row in current):
            return PrimitivityResult(True, k)
    return PrimitivityResult(False, None)


def _letter_map_power(mapping: list[int], e: int) -> list[int]:
    result = list(range(len(mapping)))
    for _ in range(e):
        result = [mapping[i] for i in result]
    return result


def default_seed_power_cap(m: Morphism) -> int:
    """First/last-letter maps have cycles of length <= #A, so a valid power
    <= lcm of two cycle lengths <= (#A)^2 exists; the scan cap doubles that."""
    return max(2, 2 * m.size * m.size)


def admissible_seeds(m: Morphism, max_power: int | None = None) -> list[FixedPointSeed]:
    """All admissible seeds at the minimal power e <= max_power.

    A seed (e, a, b) needs sigma^e(a) to end with a, sigma^e(b) to start
    with b, and ab to occur in the language.  Returns [] when no power up
    to the cap works (callers should surface that as a warning).
    """
    if not is_primitive(incidence_matrix(m)).primitive:
        raise NotPrimitiveError("admissible seeds require a primitive morphism")
    if max_power is None:
        max_power = default_seed_power_cap(m)
    if max_power < 1:
        raise BadParametersError("max_power must be >= 1")
    if m.widest == 1:
        return []  # single-letter identity: no growing fixed point

    from .language import factor_language  # deferred: language builds on this module

    pairs = factor_language(m, 2).words if m.size > 1 else {chr(0) * 2}
    first = [ord(image[0]) for image in m.images]
    last = [ord(image[-1]) for image in m.images]
    for e in range(1, max_power + 1):
        first_e = _letter_map_power(first, e)
        last_e = _letter_map_power(last, e)
        lefts = [i for i in range(m.size) if last_e[i] == i]
        rights = [i for i in range(m.size) if first_e[i] == i]
        seeds = [
            FixedPointSeed(e, chr(a), chr(b))
            for a in lefts
            for b in rights
            if chr(a) + chr(b) in pairs
        ]
        if seeds:
            return sorted(seeds, key=lambda s: (s.left, s.right))
    return []


def power_scaled_constant(L: int, k: int, widest: int, allow_limit: bool = False) -> int:
    """Scale a level-1 recognizability constant to level k:
    L * (widest^k - 1) / (widest - 1), exactly.

    widest == 1 means every image is a single letter and the fixed point is
    periodic; that degenerate case is rejected unless the caller opts into
    the limit convention L*k.
    """
    if k < 1:
        raise BadParametersError("k must be >= 1")
    if widest < 1:
        raise BadParametersError("widest must be >= 1")
    if widest == 1:
        if allow_limit:
            return L * k
        raise DegenerateWidthError("widest image length is 1 (periodic fixed point)")
    return L * (widest**k - 1) // (widest - 1)
