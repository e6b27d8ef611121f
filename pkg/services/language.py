"""
Linguaggio costruito L_w: definizione ricorsiva ed estensione incrementale di un prefisso

Per parole che iniziano con L:
    L_{LRw'}  = L_{Rw'}  ∪ L(L^R_{Rw'})
    L_{LLLw'} = L_{LLw'} ∪ L(L^L_{LLw'})
    L_{LLRw'} = L_{LRw'} ∪ L(L_{LRw'})
e le stesse formule con L e R scambiate per parole che iniziano con R.
"""
from __future__ import annotations

import logging

from services.errors import InconsistentInput
from services.words import EMPTY, Letter, PatternSet, Word, dual, tails

logger = logging.getLogger(__name__)


def filter_by_first_letter(s: PatternSet, letter: Letter) -> PatternSet:
    """Parole non vuote di s che iniziano con `letter`"""
    return s.filter(lambda u: u.first is letter)


def prepend_letter(s: PatternSet, letter: Letter) -> PatternSet:
    """{letter·u : u in s}"""
    return s.map(lambda u: u.prepend(letter))


def _tail_set(w: Word) -> PatternSet:
    return PatternSet.from_iterable(tails(w))


class LanguageTable:
    """Cache dei linguaggi L_w già calcolati"""

    def __init__(self):
        self.entries: dict[Word, PatternSet] = {}

    def __len__(self) -> int:
        return len(self.entries)

    def clear(self):
        self.entries.clear()

    def get(self, w: Word) -> PatternSet:
        """
        Restituisce L_w, calcolandolo (e memorizzandolo) se necessario

        Chiamanti concorrenti possono calcolare due volte la stessa voce: il risultato
        è identico, quindi la sovrascrittura è innocua.
        """
        cached = self.entries.get(w)
        if cached is None:
            cached = self._construct(w)
            self.entries[w] = cached
        return cached

    def _construct(self, w: Word) -> PatternSet:
        if len(w) <= 2:
            return _tail_set(w)

        x = w.first
        y = x.dual
        # in tutti e tre i casi il sottolinguaggio è quello di w senza la prima lettera
        rest = self.get(w.suffix(1))

        if w[1] is y:
            # w = x y w'
            return rest | prepend_letter(filter_by_first_letter(rest, y), x)
        if w[2] is x:
            # w = x x x w'
            return rest | prepend_letter(filter_by_first_letter(rest, x), x)
        # w = x x y w'
        return rest | prepend_letter(rest, x)


# Istanza globale della cache
language_table = LanguageTable()


def construct_language(w: Word) -> PatternSet:
    """L_w secondo la definizione ricorsiva"""
    return language_table.get(w)


def construct_language_dual(w: Word) -> PatternSet:
    """Secondo percorso: dual(L_{dual(w)}), deve coincidere con construct_language"""
    return construct_language(dual(w)).map(dual)


def check_language_entry(w: Word, lw: PatternSet):
    """
    Verifica gli invarianti di una voce della tabella

    Raises:
        InconsistentInput: se lw non può essere L_w
    """
    if w not in lw:
        raise InconsistentInput(f"L_{w} deve contenere {w}")
    if EMPTY not in lw:
        raise InconsistentInput(f"L_{w} deve contenere la parola vuota")
    too_long = [u for u in lw if len(u) > len(w)]
    if too_long:
        raise InconsistentInput(f"L_{w} contiene parole più lunghe di {w}: {too_long[0]}")
    if len(w) <= 2 and lw != _tail_set(w):
        raise InconsistentInput(f"Per |w| <= 2, L_{w} deve essere l'insieme delle code di {w}")


def extend_language(letter: Letter, w: Word, lw: PatternSet) -> PatternSet:
    """
    Calcola L_{letter·w} a partire da L_w con le regole di estensione di una lettera

    Args:
        letter: lettera da anteporre
        w: parola di partenza
        lw: L_w già calcolato

    Returns:
        L_{letter·w}

    Raises:
        InconsistentInput: se lw viola gli invarianti di L_w
    """
    check_language_entry(w, lw)
    if len(w) <= 1:
        return _tail_set(w.prepend(letter))

    other = letter.dual
    if w[0] is letter and w[1] is letter:
        extension = prepend_letter(filter_by_first_letter(lw, letter), letter)
    elif w[0] is letter:
        extension = prepend_letter(lw, letter)
    else:
        extension = prepend_letter(filter_by_first_letter(lw, other), letter)
    return lw | extension
