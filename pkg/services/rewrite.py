"""
Motore di derivazione: quattro regole di riduzione più la formazione di code

Le parole derivabili da w sono le code delle parole ottenute da w con sole riduzioni:
riduzione e formazione di code commutano, quindi basta ridurre prima e prendere le code
alla fine.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from services.errors import InconsistentInput
from services.words import EMPTY_TOKEN, PatternSet, Word, tails

logger = logging.getLogger(__name__)


class RuleKind(Enum):
    """Regole di riduzione: finestra di due lettere -> sostituto"""
    RR_TO_R = ("RR", "R")
    LL_TO_L = ("LL", "L")
    LR_TO_EMPTY = ("LR", "")
    RL_TO_EMPTY = ("RL", "")

    @property
    def pattern(self) -> str:
        return self.value[0]

    @property
    def replacement(self) -> str:
        return self.value[1]

    @property
    def label(self) -> str:
        return f"{self.pattern}→{self.replacement or EMPTY_TOKEN}"

    @classmethod
    def for_window(cls, window: str) -> RuleKind:
        """Ogni finestra di due lettere corrisponde ad esattamente una regola"""
        return _RULE_BY_PATTERN[window]


_RULE_BY_PATTERN = {kind.pattern: kind for kind in RuleKind}


@dataclass(frozen=True)
class ReductionRule:
    """Applicazione di una regola alla finestra che inizia in `position`"""
    kind: RuleKind
    position: int

    def apply(self, w: Word) -> Word:
        letters = w.letters
        if self.position < 0 or self.position + 2 > len(letters):
            raise InconsistentInput(
                f"Finestra {self.position}..{self.position + 1} fuori dalla parola {w}"
            )
        if letters[self.position:self.position + 2] != self.kind.pattern:
            raise InconsistentInput(
                f"La regola {self.kind.label} non si applica a {w} in posizione {self.position}"
            )
        return Word(letters[:self.position] + self.kind.replacement + letters[self.position + 2:])

    def describe(self) -> str:
        return f"regola {self.kind.label} in posizione {self.position}"


@dataclass(frozen=True)
class TailStep:
    """Formazione di una coda: scarta i primi `drop` simboli"""
    drop: int

    def apply(self, w: Word) -> Word:
        if not 0 <= self.drop <= len(w):
            raise InconsistentInput(f"Impossibile scartare {self.drop} simboli da {w}")
        return w.suffix(self.drop)

    def describe(self) -> str:
        return f"coda: scarta i primi {self.drop} simboli"


DerivationStep = ReductionRule | TailStep


def applicable_rules(w: Word) -> list[ReductionRule]:
    """Tutte le riduzioni applicabili a w, per posizione crescente"""
    letters = w.letters
    return [
        ReductionRule(RuleKind.for_window(letters[i:i + 2]), i)
        for i in range(len(letters) - 1)
    ]


def one_step_reductions(w: Word) -> PatternSet:
    """Parole ottenute da w con esattamente una riduzione (senza code)"""
    return PatternSet.from_iterable(rule.apply(w) for rule in applicable_rules(w))


@lru_cache(maxsize=None)
def _reduction_closure(w: Word) -> frozenset[Word]:
    seen = {w}
    queue = deque([w])
    while queue:
        current = queue.popleft()
        for rule in applicable_rules(current):
            reduced = rule.apply(current)
            if reduced not in seen:
                seen.add(reduced)
                queue.append(reduced)
    return frozenset(seen)


def reduction_closure(w: Word) -> PatternSet:
    """
    Tutte le parole raggiungibili da w con sole riduzioni, w inclusa

    Visita in ampiezza; termina perché ogni passo accorcia la parola.
    """
    return PatternSet(_reduction_closure(w))


@lru_cache(maxsize=None)
def _derivable_set(w: Word) -> frozenset[Word]:
    members = frozenset(tail for reduced in _reduction_closure(w) for tail in tails(reduced))
    logger.debug(f"Derivabili da {w}: {len(members)} parole")
    return members


def derivable_set(w: Word) -> PatternSet:
    """Unione delle code di ogni parola della chiusura per riduzione di w"""
    return PatternSet(_derivable_set(w))


def is_derivable(w: Word, u: Word) -> bool:
    """True se u è derivabile da w con le cinque regole"""
    return u in _derivable_set(w)


def interleaved_derivable_set(w: Word) -> PatternSet:
    """
    Derivabili da w esplorando tutte e cinque le regole in qualsiasi ordine

    Implementazione indipendente (e più lenta) della stessa definizione: riduzioni e
    formazione di code si alternano liberamente. Serve da oracolo per derivable_set.
    """
    seen = {w}
    queue = deque([w])
    while queue:
        current = queue.popleft()
        successors = [rule.apply(current) for rule in applicable_rules(current)]
        successors.extend(TailStep(drop).apply(current) for drop in range(1, len(current) + 1))
        for successor in successors:
            if successor not in seen:
                seen.add(successor)
                queue.append(successor)
    return PatternSet(frozenset(seen))


def derivation_witness(w: Word, u: Word) -> list[DerivationStep] | None:
    """
    Una derivazione di u da w: riduzioni, poi al più una formazione di coda finale

    Args:
        w: parola di partenza
        u: parola da derivare

    Returns:
        Lista di passi (vuota se u == w) oppure None se u non è derivabile
    """
    parents: dict[Word, tuple[Word, ReductionRule] | None] = {w: None}
    queue = deque([w])
    while queue:
        current = queue.popleft()
        if current.letters.endswith(u.letters):
            steps: list[DerivationStep] = []
            if len(current) > len(u):
                steps.append(TailStep(len(current) - len(u)))
            node = current
            while parents[node] is not None:
                previous, rule = parents[node]
                steps.append(rule)
                node = previous
            steps.reverse()
            return steps
        # finestre più a destra per prime
        for rule in reversed(applicable_rules(current)):
            reduced = rule.apply(current)
            if reduced not in parents:
                parents[reduced] = (current, rule)
                queue.append(reduced)
    return None
