"""
Eccezioni condivise dai servizi
"""


class ForcingError(Exception):
    """Errore base della libreria"""


class InvalidLetter(ForcingError, ValueError):
    """Carattere non appartenente all'alfabeto {L, R}"""

    def __init__(self, text: str, position: int | None = None):
        self.text = text
        self.position = position
        where = f" (posizione {position})" if position is not None else ""
        super().__init__(f"Parola non valida {text!r}{where}: ammessi solo 'L', 'R' oppure 'e'")


class InconsistentInput(ForcingError):
    """Dati in ingresso che violano un invariante dichiarato"""


class DegenerateOrbit(ForcingError):
    """Orbita con punti coincidenti: impossibile interpolare"""


class OutOfDomain(ForcingError):
    """Punto fuori dal dominio [m, M] della mappa"""


class NotEventuallyFixed(ForcingError):
    """Il punto non raggiunge un punto fisso entro il limite di passi"""


class NotAPartialOrder(ForcingError):
    """La relazione non è un ordine parziale stretto"""
