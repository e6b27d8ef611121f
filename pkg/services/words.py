"""
Alfabeto {L, R}, parole, code (tails), dualità e ordine shortlex

Vocabolario condiviso da tutti gli altri servizi. Tutti i valori sono immutabili.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import total_ordering
from itertools import product
from typing import Callable, Iterable, Iterator

from services.errors import InvalidLetter

# Token testuale della parola vuota (la figura di riferimento disegna "{}")
EMPTY_TOKEN = "e"


class Letter(str, Enum):
    """Lettera dell'alfabeto: L (si muove a sinistra) o R (a destra)"""
    L = "L"
    R = "R"

    @property
    def dual(self) -> Letter:
        return Letter.R if self is Letter.L else Letter.L

    def __str__(self) -> str:
        return self.value


@total_ordering
@dataclass(frozen=True, slots=True)
class Word:
    """Parola finita su {L, R}: il tag di un'orbita eventualmente fissa"""
    letters: str = ""

    def __post_init__(self):
        for position, char in enumerate(self.letters):
            if char not in "LR":
                raise InvalidLetter(self.letters, position)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return (Letter(char) for char in self.letters)

    def __getitem__(self, index: int) -> Letter:
        return Letter(self.letters[index])

    def __lt__(self, other: Word) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.shortlex_key() < other.shortlex_key()

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)})"

    @property
    def first(self) -> Letter | None:
        """Prima lettera, None per la parola vuota"""
        return Letter(self.letters[0]) if self.letters else None

    def prepend(self, letter: Letter) -> Word:
        return Word(letter.value + self.letters)

    def suffix(self, start: int) -> Word:
        """Coda che inizia all'indice `start`"""
        return Word(self.letters[start:])

    def shortlex_key(self) -> tuple[int, str]:
        # 'L' < 'R' anche in ASCII
        return len(self.letters), self.letters


EMPTY = Word()

_SWAP = str.maketrans("LR", "RL")


def parse_word(text: str) -> Word:
    """
    Converte una stringa in parola

    Args:
        text: lettere 'L'/'R' senza spazi, oppure il token "e" per la parola vuota

    Returns:
        Word corrispondente

    Raises:
        InvalidLetter: se compare un carattere fuori dall'alfabeto
    """
    if text == EMPTY_TOKEN:
        return EMPTY
    return Word(text)


def format_word(w: Word) -> str:
    """Inversa di parse_word; la parola vuota diventa "e" """
    return w.letters or EMPTY_TOKEN


def tails(w: Word) -> list[Word]:
    """Tutti i suffissi di w, da w stessa fino alla parola vuota inclusa"""
    return [w.suffix(start) for start in range(len(w) + 1)]


def dual(w: Word) -> Word:
    """Scambia L e R lettera per lettera (involuzione)"""
    return Word(w.letters.translate(_SWAP))


def shortlex_compare(a: Word, b: Word) -> int:
    """
    Confronto shortlex: prima la lunghezza, poi lessicografico con L < R

    Returns:
        -1 se a precede b, 0 se uguali, 1 altrimenti
    """
    key_a, key_b = a.shortlex_key(), b.shortlex_key()
    return (key_a > key_b) - (key_a < key_b)


def all_words(max_len: int) -> Iterator[Word]:
    """Tutte le parole di lunghezza <= max_len, in ordine shortlex"""
    for length in range(max_len + 1):
        for letters in product("LR", repeat=length):
            yield Word("".join(letters))


@dataclass(frozen=True)
class PatternSet:
    """Insieme finito di parole; l'iterazione segue l'ordine shortlex"""
    members: frozenset[Word] = frozenset()

    @classmethod
    def of(cls, *words: Word | str) -> PatternSet:
        """Costruisce l'insieme da parole o dalla loro forma testuale"""
        return cls(frozenset(w if isinstance(w, Word) else parse_word(w) for w in words))

    @classmethod
    def from_iterable(cls, words: Iterable[Word]) -> PatternSet:
        return cls(frozenset(words))

    def __iter__(self) -> Iterator[Word]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, word: object) -> bool:
        return word in self.members

    def __or__(self, other: PatternSet) -> PatternSet:
        return PatternSet(self.members | other.members)

    def __le__(self, other: PatternSet) -> bool:
        return self.members <= other.members

    def __sub__(self, other: PatternSet) -> PatternSet:
        return PatternSet(self.members - other.members)

    def __xor__(self, other: PatternSet) -> PatternSet:
        return PatternSet(self.members ^ other.members)

    def filter(self, predicate: Callable[[Word], bool]) -> PatternSet:
        return PatternSet(frozenset(w for w in self.members if predicate(w)))

    def map(self, fn: Callable[[Word], Word]) -> PatternSet:
        return PatternSet(frozenset(fn(w) for w in self.members))

    def formatted(self) -> list[str]:
        """Forme testuali in ordine shortlex"""
        return [format_word(w) for w in self]

    def __str__(self) -> str:
        return "{" + ", ".join(self.formatted()) + "}"
