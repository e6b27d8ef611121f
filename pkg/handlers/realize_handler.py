"""
Handler per il comando realize: orbita canonica, mappa lineare a tratti e bande di tag
"""
import logging

from handlers.commands import EXIT_FAILED, EXIT_OK, CommandResult, usage_error
from services.errors import ForcingError, InvalidLetter
from services.realization import (
    canonical_orbit,
    enumerate_tags,
    interpolate,
    map_to_json,
    tag_bands,
    verify_collapse,
)
from services.words import parse_word
from utils.rationals import format_rational

logger = logging.getLogger(__name__)


def cmd_realize(w_text: str, fmt: str = 'text') -> CommandResult:
    """
    Handler per comando realize

    Args:
        w_text: tag da realizzare
        fmt: 'text' per il resoconto completo, 'json' per l'esportazione della mappa
    """
    if fmt == 'dot':
        return usage_error("Il formato dot è disponibile solo per hasse")
    try:
        w = parse_word(w_text)
    except InvalidLetter as e:
        return usage_error(str(e))

    orbit = canonical_orbit(w)
    f = interpolate(orbit)
    if fmt == 'json':
        return CommandResult(status=EXIT_OK, output=map_to_json(f) + "\n")

    depth = len(w)
    try:
        bands = tag_bands(f, depth)
        enumeration = enumerate_tags(f, depth)
    except ForcingError as e:
        logger.error(f"❌ Errore realizzazione di {w}: {e}")
        return CommandResult(status=EXIT_FAILED, error=str(e))

    text = f"📈 Orbita canonica di {w}:\n"
    text += "   " + " -> ".join(format_rational(x) for x in orbit.points) + "\n"
    text += "📐 Punti di rottura (x, f(x)):\n"
    for x, y in f.breakpoints:
        text += f"   ({format_rational(x)}, {format_rational(y)})\n"
    collapsed = verify_collapse(f, depth)
    text += f"🎯 f^{depth}([m, M]) = {{0}}: {'sì' if collapsed else 'no'}\n"
    text += "🧩 Bande di tag:\n"
    for band in bands:
        text += f"   {band.describe()}\n"
    text += f"🏷 Tag ammessi: {enumeration.tags}\n"
    return CommandResult(status=EXIT_OK, output=text)
