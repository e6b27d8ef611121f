"""
Handler per il comando verify: confronto incrociato delle tre caratterizzazioni
"""
import logging
from dataclasses import dataclass

from config import config
from handlers.commands import EXIT_FAILED, EXIT_OK, CommandResult, usage_error
from services.errors import ForcingError
from services.language import construct_language, construct_language_dual
from services.realization import forced_set_via_realization
from services.rewrite import derivable_set, interleaved_derivable_set
from services.words import PatternSet, Word, all_words

logger = logging.getLogger(__name__)


@dataclass
class Disagreement:
    """Parola su cui due calcoli dell'insieme forzato non coincidono"""
    word: Word
    left: str
    right: str
    difference: PatternSet | None = None
    error: str = ""

    def describe(self) -> str:
        if self.error:
            return f"❌ {self.word}: {self.right} fallito ({self.error})"
        return f"❌ {self.word}: {self.left} ≠ {self.right}, differenza simmetrica {self.difference}"


def _compare(w: Word, reference: PatternSet, left: str, right: str, compute) -> Disagreement | None:
    try:
        other = compute(w)
    except ForcingError as e:
        return Disagreement(word=w, left=left, right=right, error=str(e))
    if other != reference:
        return Disagreement(word=w, left=left, right=right, difference=reference ^ other)
    return None


def cmd_verify(max_len: int, realize_bound: int | None = None, normal_form: bool = False,
               cap: int | None = None) -> CommandResult:
    """
    Handler per comando verify

    Args:
        max_len: lunghezza massima delle parole verificate
        realize_bound: lunghezza massima per la realizzazione (default min(max_len, limite))
        normal_form: confronta anche con l'esplorazione interlacciata delle cinque regole
        cap: limite superiore di max_len

    Returns:
        stato 0 se tutte le caratterizzazioni concordano, 1 altrimenti
    """
    cap = config.limits.max_len_cap if cap is None else cap
    if not 0 <= max_len <= cap:
        return usage_error(f"--max-len deve stare tra 0 e {cap} (ricevuto {max_len})")
    if realize_bound is None:
        realize_bound = min(max_len, config.limits.realize_bound)
    if realize_bound < 0:
        return usage_error("--realize-bound deve essere >= 0")
    normal_form_bound = min(max_len, config.limits.normal_form_bound) if normal_form else -1

    checks = {"derive = construct": 0, "construct = dual(construct(dual))": 0, "derive = realize": 0}
    if normal_form:
        checks["derive = interleaved"] = 0
    disagreements: list[Disagreement] = []
    total = 0

    for w in all_words(max_len):
        total += 1
        derived = derivable_set(w)
        comparisons = [
            ("derive = construct", "derive", "construct", derived, construct_language),
            ("construct = dual(construct(dual))", "construct", "construct_dual",
             construct_language(w), construct_language_dual),
        ]
        if len(w) <= realize_bound:
            comparisons.append(
                ("derive = realize", "derive", "realize", derived, forced_set_via_realization)
            )
        if len(w) <= normal_form_bound:
            comparisons.append(
                ("derive = interleaved", "derive", "interleaved", derived, interleaved_derivable_set)
            )
        for check, left, right, reference, compute in comparisons:
            found = _compare(w, reference, left, right, compute)
            if found is None:
                checks[check] += 1
            else:
                logger.warning(found.describe())
                disagreements.append(found)

    logger.info(f"Verifica completata: {total} parole, {len(disagreements)} discordanze")

    text = f"🔍 Verifica su {total} parole (lunghezza <= {max_len})\n"
    bounds = {
        "derive = construct": max_len,
        "construct = dual(construct(dual))": max_len,
        "derive = realize": realize_bound,
        "derive = interleaved": normal_form_bound,
    }
    for check, passed in checks.items():
        text += f"   {check}: {passed} concordi (lunghezza <= {min(bounds[check], max_len)})\n"
    for found in disagreements:
        text += f"{found.describe()}\n"
    if disagreements:
        text += f"❌ {len(disagreements)} discordanze trovate\n"
        return CommandResult(status=EXIT_FAILED, output=text)
    text += "✅ Tutte le caratterizzazioni concordano\n"
    return CommandResult(status=EXIT_OK, output=text)
