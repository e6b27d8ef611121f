"""
Handlers per i comandi derive, forced e hasse
"""
import json
import logging
from dataclasses import dataclass

from config import config
from services.errors import ForcingError, InvalidLetter
from services.poset import Method, export_dot, export_json, forced_set, forcing_graph, hasse
from services.rewrite import derivation_witness
from services.words import format_word, parse_word

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


@dataclass
class CommandResult:
    """Esito di un comando: stato di uscita, output (stdout) ed eventuale errore (stderr)"""
    status: int
    output: str = ""
    error: str = ""


def usage_error(message: str) -> CommandResult:
    logger.error(f"❌ {message}")
    return CommandResult(status=EXIT_USAGE, error=message)


def cmd_derive(w_text: str, u_text: str) -> CommandResult:
    """
    Handler per comando derive: u è derivabile da w?

    Args:
        w_text: parola di partenza
        u_text: parola da derivare

    Returns:
        stato 0 con una derivazione testimone se derivabile, 1 altrimenti, 2 se l'input è malformato
    """
    try:
        w, u = parse_word(w_text), parse_word(u_text)
    except InvalidLetter as e:
        return usage_error(str(e))

    steps = derivation_witness(w, u)
    if steps is None:
        logger.info(f"{u} non derivabile da {w}")
        return CommandResult(status=EXIT_FAILED, output=f"❌ {u} non è derivabile da {w}\n")

    text = f"✅ {u} è derivabile da {w}\n"
    if not steps:
        text += "   (derivazione banale: nessun passo)\n"
    current = w
    for index, step in enumerate(steps, start=1):
        current = step.apply(current)
        text += f"   {index}. {step.describe()} -> {current}\n"
    return CommandResult(status=EXIT_OK, output=text)


def cmd_forced(w_text: str, method: str = 'derive', fmt: str = 'text') -> CommandResult:
    """Handler per comando forced: insieme forzato da w, una parola per riga o array JSON"""
    if fmt == 'dot':
        return usage_error("Il formato dot è disponibile solo per hasse")
    try:
        w = parse_word(w_text)
        method = Method(method)
    except (InvalidLetter, ValueError) as e:
        return usage_error(str(e))

    try:
        words = forced_set(w, method).formatted()
    except ForcingError as e:
        logger.error(f"❌ Errore calcolo insieme forzato di {w} ({method}): {e}")
        return CommandResult(status=EXIT_FAILED, error=str(e))

    if fmt == 'json':
        return CommandResult(status=EXIT_OK, output=json.dumps(words) + "\n")
    return CommandResult(status=EXIT_OK, output="\n".join(words) + "\n")


def cmd_hasse(max_len: int, method: str = 'derive', fmt: str = 'text',
              cap: int | None = None) -> CommandResult:
    """Handler per comando hasse: diagramma di Hasse fino a lunghezza max_len"""
    cap = config.limits.max_len_cap if cap is None else cap
    if not 0 <= max_len <= cap:
        return usage_error(f"--max-len deve stare tra 0 e {cap} (ricevuto {max_len})")
    try:
        method = Method(method)
    except ValueError as e:
        return usage_error(str(e))

    try:
        diagram = hasse(forcing_graph(max_len, method))
    except ForcingError as e:
        logger.error(f"❌ Errore costruzione diagramma: {e}")
        return CommandResult(status=EXIT_FAILED, error=str(e))

    if fmt == 'dot':
        return CommandResult(status=EXIT_OK, output=export_dot(diagram))
    if fmt == 'json':
        return CommandResult(status=EXIT_OK, output=export_json(diagram) + "\n")

    text = ""
    for w in diagram.nodes:
        covers = diagram.successors(w).formatted()
        text += f"{format_word(w)} -> {', '.join(covers)}\n" if covers else f"{format_word(w)}\n"
    return CommandResult(status=EXIT_OK, output=text)
