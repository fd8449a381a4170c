"""Two-sided fixed-point windows with exact desubstitution towers.

A window materializes x[lo, hi) around the seed junction of an admissible
fixed point of sigma^e, together with the whole chain of preimage words
(one per sigma-level), so cut positions and preimage letters at every
level are exact by construction.  Nothing here ever searches for a
desubstitution; that would presuppose the recognizability the verifier
is trying to test.

Window coordinates are absolute integers: position 0 is the first letter
of the right ray, position -1 the last letter of the left ray.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadParametersError,
    InvalidSeedError,
    LevelUnavailableError,
    OutOfWindowError,
    SizeExceededError,
)
from .morphism import (
    FixedPointSeed,
    Morphism,
    Word,
    extreme_lengths,
    image_lengths,
)


@dataclass(frozen=True)
class Window:
    """A slice x[lo, hi) of a two-sided fixed point of sigma^e.

    ``tower[p]`` is the level-p preimage pair (left, right): applying
    sigma^p to it, junction-anchored, reproduces the window content.
    ``level`` counts sigma^e applications, so tower depth is level * e.
    """

    morphism: Morphism
    seed: FixedPointSeed
    level: int
    tower: tuple[tuple[Word, Word], ...]

    @property
    def lo(self) -> int:
        return -len(self.tower[0][0])

    @property
    def hi(self) -> int:
        return len(self.tower[0][1])

    @property
    def max_level(self) -> int:
        return len(self.tower) - 1

    @property
    def content(self) -> Word:
        return self.tower[0][0] + self.tower[0][1]

    def letter_at(self, position: int) -> str:
        if not self.lo <= position < self.hi:
            raise OutOfWindowError(f"position {position} outside [{self.lo}, {self.hi})")
        return self.content[position - self.lo]

    def segment(self, start: int, stop: int) -> Word:
        if not (self.lo <= start <= stop <= self.hi):
            raise OutOfWindowError(f"[{start}, {stop}) outside [{self.lo}, {self.hi})")
        return self.content[start - self.lo : stop - self.lo]

    def preimage_pair(self, p: int) -> tuple[Word, Word]:
        if not 0 <= p <= self.max_level:
            raise LevelUnavailableError(
                f"level {p} unavailable (tower holds 0..{self.max_level})"
            )
        return self.tower[p]

    def dump(self) -> str:
        """Debug dump: one line ``pos<TAB>letter<TAB>cutlevels`` per position,
        listing every level p >= 1 whose cut set contains pos."""
        levels = []
        for p in range(1, self.max_level + 1):
            levels.append(set(cutting_points(self, p).positions))
        lines = []
        for pos in range(self.lo, self.hi):
            at = ",".join(str(p + 1) for p, cuts in enumerate(levels) if pos in cuts)
            lines.append(f"{pos}\t{self.morphism.letters[ord(self.letter_at(pos))].display}\t{at}")
        return "\n".join(lines)


@dataclass(frozen=True)
class CuttingSet:
    """Level-p image boundaries inside a window.

    ``positions[k]`` is where the sigma^p-image of ``preimages[k]`` starts;
    positions are sorted, cover [lo, hi), and include 0 (the junction).
    """

    p: int
    positions: tuple[int, ...]
    preimages: tuple[str, ...]

    def as_dict(self) -> dict[int, str]:
        return dict(zip(self.positions, self.preimages))


def _validate_seed(m: Morphism, seed: FixedPointSeed):
    if seed.power < 1:
        raise InvalidSeedError("seed power must be >= 1")
    for letter in (seed.left, seed.right):
        if len(letter) != 1 or ord(letter) >= m.size:
            raise InvalidSeedError("seed letter out of range")
    last = [ord(im[-1]) for im in m.images]
    first = [ord(im[0]) for im in m.images]
    a, b = ord(seed.left), ord(seed.right)
    x = a
    y = b
    for _ in range(seed.power):
        x = last[x]
        y = first[y]
    if x != a:
        raise InvalidSeedError(
            f"sigma^{seed.power}({m.letters[a].display}) does not end with it"
        )
    if y != b:
        raise InvalidSeedError(
            f"sigma^{seed.power}({m.letters[b].display}) does not start with it"
        )
    if m.widest == 1:
        raise InvalidSeedError("images of length 1 only: no growing fixed point")

    from .language import language_of

    if seed.left + seed.right not in language_of(m).slice(2):
        raise InvalidSeedError("seed pair is not admissible (not a factor)")


def build_window(
    m: Morphism,
    seed: FixedPointSeed,
    radius: int,
    min_level: int = 0,
    max_letters: int | None = None,
) -> Window:
    """Grow the window by repeated sigma^e application, keeping every
    intermediate preimage pair as the desubstitution tower.

    The result has lo <= -radius and hi >= radius, and its tower reaches
    at least min_level sigma-steps.  Growth is predicted per step and
    refused with SizeExceededError once it would pass max_letters.
    """
    if radius < 1:
        raise BadParametersError("radius must be >= 1")
    _validate_seed(m, seed)
    e = seed.power
    lengths = image_lengths(m, 1)
    pairs = [(seed.left, seed.right)]
    left, right = seed.left, seed.right
    k = 0
    while len(left) < radius or len(right) < radius or k * e < min_level:
        for _ in range(e):
            predicted = sum(lengths[ord(c)] for c in left) + sum(
                lengths[ord(c)] for c in right
            )
            if max_letters is not None and predicted > max_letters:
                raise SizeExceededError(predicted, max_letters)
            left = m.apply(left)
            right = m.apply(right)
            pairs.append((left, right))
        k += 1
    tower = tuple(reversed(pairs))
    return Window(m, seed, k, tower)


def cut_position(window: Window, i: int, p: int) -> int:
    """Window position of the i-th level-p image boundary.

    Index i counts level-p preimage letters from the junction: boundary 0
    sits at position 0, boundary i > 0 after the first i letters of the
    right preimage ray, boundary i < 0 before the last |i| letters of the
    left one.  The image of this map, restricted to the window, is exactly
    the level-p cutting set.
    """
    if not 0 <= p <= window.max_level:
        raise LevelUnavailableError(
            f"level {p} unavailable (tower holds 0..{window.max_level})"
        )
    left, right = window.tower[p]
    lengths = image_lengths(window.morphism, p)
    if i >= 0:
        if i > len(right):
            raise OutOfWindowError(f"preimage index {i} beyond level-{p} ray")
        pos = sum(lengths[ord(c)] for c in right[:i])
        if pos > window.hi:
            raise OutOfWindowError(f"cut {pos} beyond window end {window.hi}")
    else:
        if -i > len(left):
            raise OutOfWindowError(f"preimage index {i} beyond level-{p} ray")
        pos = -sum(lengths[ord(c)] for c in left[i:])
        if pos < window.lo:
            raise OutOfWindowError(f"cut {pos} before window start {window.lo}")
    return pos


def cutting_points(window: Window, p: int) -> CuttingSet:
    """All level-p cuts in [lo, hi) with their preimage letters, read off
    the stored tower."""
    if not 0 <= p <= window.max_level:
        raise LevelUnavailableError(
            f"level {p} unavailable (tower holds 0..{window.max_level})"
        )
    left, right = window.tower[p]
    lengths = image_lengths(window.morphism, p)
    positions: list[int] = []
    preimages: list[str] = []
    pos = -sum(lengths[ord(c)] for c in left)
    for c in left:
        positions.append(pos)
        preimages.append(c)
        pos += lengths[ord(c)]
    for c in right:
        positions.append(pos)
        preimages.append(c)
        pos += lengths[ord(c)]
    return CuttingSet(p, tuple(positions), tuple(preimages))


def interpretation_length_bounds(u_len: int, m: Morphism, n: int) -> tuple[int, int]:
    """Admissible inner-word lengths t for the level-n sandwich
    sigma^n(v[1..t]) inside sigma^n(u) inside sigma^n(v):

        ceil(<sigma^n> * |u| / |sigma^n|) - 2  <=  t  <=
        floor(|sigma^n| * |u| / <sigma^n>).

    Raw values are returned (the lower bound may be negative)."""
    if u_len < 1 or n < 1:
        raise BadParametersError("u_len and n must be >= 1")
    widest, narrowest = extreme_lengths(m, n)
    t_min = -((-narrowest * u_len) // widest) - 2  # exact ceiling division
    t_max = (widest * u_len) // narrowest
    return t_min, t_max
