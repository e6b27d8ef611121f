"""
Ordine parziale di forcing sulle parole fino a una lunghezza massima, diagramma di Hasse
ed esportazione DOT/JSON
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, replace
from enum import Enum

import networkx as nx

from services.errors import InconsistentInput, NotAPartialOrder
from services.language import construct_language
from services.realization import forced_set_via_realization
from services.rewrite import derivable_set
from services.words import PatternSet, Word, all_words, format_word, parse_word

logger = logging.getLogger(__name__)

Edge = tuple[Word, Word]


class Method(str, Enum):
    """Caratterizzazione usata per calcolare l'insieme forzato"""
    DERIVE = "derive"
    CONSTRUCT = "construct"
    REALIZE = "realize"

    def __str__(self) -> str:
        return self.value


_FORCED_SET = {
    Method.DERIVE: derivable_set,
    Method.CONSTRUCT: construct_language,
    Method.REALIZE: forced_set_via_realization,
}


def forced_set(w: Word, method: Method) -> PatternSet:
    """Insieme forzato da w secondo la caratterizzazione scelta"""
    return _FORCED_SET[Method(method)](w)


def _edge_key(edge: Edge) -> tuple:
    return edge[0].shortlex_key(), edge[1].shortlex_key()


@dataclass(frozen=True)
class ForcingGraph:
    """
    Relazione di forcing sulle parole di lunghezza <= max_len

    Gli archi (w, u) significano "w forza u" con w != u; normalmente sono chiusi per
    transitività, mentre `reduced` indica la vista di Hasse (solo coperture).
    """
    max_len: int
    method: Method
    nodes: tuple[Word, ...]
    edges: frozenset[Edge]
    reduced: bool = False

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges, key=_edge_key)

    def successors(self, w: Word) -> PatternSet:
        """Parole raggiunte da w con un arco (le coperture, nella vista di Hasse)"""
        return PatternSet.from_iterable(u for source, u in self.edges if source == w)


def forcing_graph(max_len: int, method: Method = Method.DERIVE) -> ForcingGraph:
    """
    Grafo di forcing chiuso per transitività

    Le parole forzate non superano mai la lunghezza di chi le forza, quindi la restrizione
    a lunghezza <= max_len è chiusa verso il basso.
    """
    if max_len < 0:
        raise InconsistentInput(f"max_len deve essere >= 0, ricevuto {max_len}")
    method = Method(method)
    nodes = tuple(all_words(max_len))
    edges = frozenset(
        (w, u) for w in nodes for u in forced_set(w, method) if u != w
    )
    logger.info(f"Grafo di forcing ({method}, max_len={max_len}): {len(nodes)} nodi, {len(edges)} archi")
    return ForcingGraph(max_len=max_len, method=method, nodes=nodes, edges=edges)


def to_networkx(g: ForcingGraph) -> nx.DiGraph:
    dg = nx.DiGraph()
    dg.add_nodes_from(g.nodes)
    dg.add_edges_from(g.edges)
    return dg


def hasse(g: ForcingGraph) -> ForcingGraph:
    """
    Riduzione transitiva (diagramma di Hasse)

    Raises:
        NotAPartialOrder: se la relazione contiene cicli (antisimmetria violata)
    """
    dg = to_networkx(g)
    if not nx.is_directed_acyclic_graph(dg):
        cycle = nx.find_cycle(dg)
        raise NotAPartialOrder(
            "Relazione non antisimmetrica: ciclo "
            + " -> ".join(format_word(source) for source, _ in cycle)
        )
    reduction = nx.transitive_reduction(dg)
    logger.info(f"Diagramma di Hasse: {reduction.number_of_edges()} coperture")
    return replace(g, edges=frozenset(reduction.edges()), reduced=True)


def export_dot(g: ForcingGraph) -> str:
    """Testo DOT con nodi e archi in ordine shortlex (output stabile byte per byte)"""
    lines = ["digraph forcing {"]
    lines.extend(f"\t{format_word(w)};" for w in g.nodes)
    lines.extend(f"\t{format_word(w)} -> {format_word(u)};" for w, u in g.sorted_edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(g: ForcingGraph) -> str:
    """{"max_len", "method", "reduced", "nodes", "edges"} in ordine shortlex"""
    payload = {
        "max_len": g.max_len,
        "method": g.method.value,
        "reduced": g.reduced,
        "nodes": [format_word(w) for w in g.nodes],
        "edges": [[format_word(w), format_word(u)] for w, u in g.sorted_edges()],
    }
    return json.dumps(payload)


def graph_from_json(text: str) -> ForcingGraph:
    """Inversa di export_json"""
    payload = json.loads(text)
    return ForcingGraph(
        max_len=payload["max_len"],
        method=Method(payload["method"]),
        nodes=tuple(sorted(parse_word(token) for token in payload["nodes"])),
        edges=frozenset((parse_word(w), parse_word(u)) for w, u in payload["edges"]),
        reduced=payload.get("reduced", False),
    )
