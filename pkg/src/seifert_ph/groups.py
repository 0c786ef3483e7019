"""Word arithmetic for fundamental groups of circle bundles.

Elements are modeled in ``F(a_1, b_1, ..., a_g, b_g) x Z`` where the
``Z`` factor counts powers of the central fiber class ``c``.  Letters are
strings such as ``"a1"``; an uppercase first character denotes the
inverse (``"A1"`` is ``a1^-1``, ``"C"`` is ``c^-1``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .errors import GenusTooSmall, OffsetArityMismatch, UnknownSymbol

Word = Tuple[str, ...]

_SURFACE_LETTER = re.compile(r"[abAB][1-9][0-9]*\Z")
_FIBER_LETTER = re.compile(r"[cC]\Z")


def _check(letter: str, allow_fiber: bool) -> None:
    if _SURFACE_LETTER.match(letter):
        return
    if allow_fiber and _FIBER_LETTER.match(letter):
        return
    raise UnknownSymbol(f"unknown letter {letter!r}")


def invert_letter(letter: str) -> str:
    return letter[0].swapcase() + letter[1:]


def reduce_word(w: Iterable[str], allow_fiber: bool = True) -> Word:
    """Freely reduce ``w`` with a single left-to-right stack pass."""
    stack: List[str] = []
    for letter in w:
        _check(letter, allow_fiber)
        if stack and stack[-1] == invert_letter(letter):
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def invert_word(w: Sequence[str]) -> Word:
    return tuple(invert_letter(x) for x in reversed(w))


def parse_word(text: str) -> Word:
    """Split ``"a1 b1 A1 B1"`` into letters (no reduction)."""
    return tuple(text.split())


def format_word(w: Sequence[str]) -> str:
    return " ".join(w) if w else "1"


@dataclass(frozen=True)
class CentralWord:
    """Element ``word * c^center`` with ``c`` central."""

    word: Word = ()
    center: int = 0

    def __post_init__(self):
        object.__setattr__(self, "word", reduce_word(self.word, allow_fiber=False))

    def __mul__(self, other: "CentralWord") -> "CentralWord":
        return multiply(self, other)

    def inverse(self) -> "CentralWord":
        return CentralWord(invert_word(self.word), -self.center)

    def __str__(self):
        return f"{format_word(self.word)} ; c^{self.center}"


IDENTITY = CentralWord()


def multiply(u: CentralWord, v: CentralWord) -> CentralWord:
    return CentralWord(u.word + v.word, u.center + v.center)


def commutator(u: CentralWord, v: CentralWord) -> CentralWord:
    return u * v * u.inverse() * v.inverse()


def product(elements: Iterable[CentralWord]) -> CentralWord:
    acc = IDENTITY
    for x in elements:
        acc = acc * x
    return acc


def surface_generators(genus: int) -> List[Tuple[CentralWord, CentralWord]]:
    return [(CentralWord((f"a{i}",)), CentralWord((f"b{i}",))) for i in range(1, genus + 1)]


def surface_relator(genus: int) -> CentralWord:
    """``prod [a_i, b_i]`` as an element of the free group."""
    return product(commutator(a, b) for a, b in surface_generators(genus))


@dataclass(frozen=True)
class Presentation:
    generators: Tuple[str, ...]
    relators: Tuple[Word, ...]
    genus: int
    euler: int

    def render(self) -> str:
        rels = ", ".join(format_word(r) for r in self.relators)
        return f"{' '.join(self.generators)} | {rels}"


def circle_bundle_presentation(genus: int, eu: int) -> Presentation:
    """pi_1 of the circle bundle with Euler number ``eu`` over the genus-``genus`` surface.

    Relators are ``prod [a_i, b_i] * c^-eu`` followed by ``[a_i, c]`` and
    ``[b_i, c]`` for each ``i``.
    """
    if genus < 2:
        raise GenusTooSmall(f"genus must be >= 2, got {genus}")
    gens: List[str] = []
    for i in range(1, genus + 1):
        gens += [f"a{i}", f"b{i}"]
    fiber_power = ("C",) * eu if eu > 0 else ("c",) * (-eu)
    relators = [surface_relator(genus).word + fiber_power]
    for g in gens:
        relators.append((g, "c", invert_letter(g), "C"))
    return Presentation(tuple(gens) + ("c",), tuple(relators), genus, eu)


@dataclass(frozen=True)
class HurwitzReport:
    ok: bool
    genus: int
    degree: int
    eu_hat: int
    forced_euler: int
    image_of_relator: CentralWord
    target_relator: CentralWord

    def __str__(self):
        status = "OK" if self.ok else "BROKEN"
        return (
            f"{status}: H*(prod[a^_i,b^_i]) = {self.image_of_relator}; "
            f"prod[a_i,b_i] = {self.target_relator}; forced eu = {self.forced_euler}"
        )


def verify_hurwitz_symbolic(genus: int, eu_hat: int, degree: int, offsets: Sequence[int]) -> HurwitzReport:
    """Push the surface relator of ``M^`` through a fiber-preserving map ``H``.

    ``H`` sends ``a^_i -> a_i c^(offsets[2i])``, ``b^_i -> b_i c^(offsets[2i+1])``
    and ``c^ -> c^degree``.  The image of ``prod [a^_i, b^_i]`` must equal
    ``prod [a_i, b_i]`` on the nose; applying ``H`` to the relation
    ``prod [a^_i, b^_i] = c^^eu_hat`` then forces ``eu(M) = degree * eu_hat``.
    """
    if genus < 2:
        raise GenusTooSmall(f"genus must be >= 2, got {genus}")
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    if len(offsets) != 2 * genus:
        raise OffsetArityMismatch(f"expected {2 * genus} offsets, got {len(offsets)}")

    images = []
    for (a, b), i_a, i_b in zip(surface_generators(genus), offsets[0::2], offsets[1::2]):
        images.append((CentralWord(a.word, i_a), CentralWord(b.word, i_b)))
    image = product(commutator(x, y) for x, y in images)
    target = surface_relator(genus)

    # H*(c^^eu_hat) = c^(degree * eu_hat); its center is the forced Euler number
    fiber_image = CentralWord((), degree * eu_hat)
    ok = image == target and image.center == 0
    return HurwitzReport(ok, genus, degree, eu_hat, fiber_image.center, image, target)
