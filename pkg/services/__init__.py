"""
Servizi per il forcing tra pattern di orbite eventualmente fisse
"""

from .words import Letter, PatternSet, Word, parse_word, format_word
from .rewrite import derivable_set, is_derivable
from .language import construct_language, extend_language
from .realization import forced_set_via_realization
from .poset import ForcingGraph, forcing_graph, hasse

__all__ = [
    'Letter', 'PatternSet', 'Word', 'parse_word', 'format_word',
    'derivable_set', 'is_derivable',
    'construct_language', 'extend_language',
    'forced_set_via_realization',
    'ForcingGraph', 'forcing_graph', 'hasse',
]
