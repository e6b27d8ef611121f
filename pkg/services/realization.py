"""
Oracolo geometrico: mappa lineare a tratti canonica di un tag, iterazione esatta ed
enumerazione di tutti i tag di orbita che la mappa ammette

Tutta l'aritmetica è razionale esatta (fractions.Fraction), nessun float.
"""
from __future__ import annotations

import json
import logging
from bisect import bisect_left
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from itertools import pairwise

from services.errors import DegenerateOrbit, InconsistentInput, NotEventuallyFixed, OutOfDomain
from services.words import Letter, PatternSet, Word
from utils.rationals import format_rational, midpoint, parse_rational, to_q

logger = logging.getLogger(__name__)

Breakpoint = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class CanonicalOrbit:
    """Orbita x_1 .. x_{n+1} che realizza il tag `word`, con x_{n+1} = 0 fisso"""
    word: Word
    points: tuple[Fraction, ...]

    def validate(self):
        """
        Controlla gli invarianti dell'orbita

        Raises:
            DegenerateOrbit: punti coincidenti
            InconsistentInput: lunghezza, punto finale, segno o direzione errati
        """
        if len(self.points) != len(self.word) + 1:
            raise InconsistentInput(
                f"L'orbita di {self.word} deve avere {len(self.word) + 1} punti, "
                f"trovati {len(self.points)}"
            )
        if len(set(self.points)) != len(self.points):
            raise DegenerateOrbit(f"Punti coincidenti nell'orbita di {self.word}")
        if self.points[-1] != 0:
            raise InconsistentInput("L'ultimo punto dell'orbita deve essere 0")
        for i, letter in enumerate(self.word):
            x, image = self.points[i], self.points[i + 1]
            if letter is Letter.L and not (x > 0 and image < x):
                raise InconsistentInput(f"x_{i + 1} = {x} non rispetta la lettera L")
            if letter is Letter.R and not (x < 0 and image > x):
                raise InconsistentInput(f"x_{i + 1} = {x} non rispetta la lettera R")


def canonical_orbit(w: Word) -> CanonicalOrbit:
    """x_i = +1/i se la lettera i è L, -1/i se è R; x_{n+1} = 0"""
    points = tuple(
        Fraction(1 if letter is Letter.L else -1, i) for i, letter in enumerate(w, start=1)
    )
    return CanonicalOrbit(word=w, points=points + (Fraction(0),))


def orbit_from_points(w: Word, points: list[int | str | Fraction]) -> CanonicalOrbit:
    """Orbita importata da coordinate arbitrarie, validata"""
    orbit = CanonicalOrbit(word=w, points=tuple(to_q(p) for p in points))
    orbit.validate()
    return orbit


@dataclass(frozen=True)
class PLMap:
    """Mappa continua lineare a tratti su [m, M], data dai suoi punti di rottura"""
    breakpoints: tuple[Breakpoint, ...]

    def __post_init__(self):
        if not self.breakpoints:
            raise InconsistentInput("Serve almeno un punto di rottura")
        for (x0, _), (x1, _) in pairwise(self.breakpoints):
            if not x0 < x1:
                raise InconsistentInput(f"Punti di rottura non crescenti: {x0}, {x1}")
        m, big_m = self.domain
        for _, y in self.breakpoints:
            if not m <= y <= big_m:
                raise InconsistentInput(f"Immagine {y} fuori dal dominio [{m}, {big_m}]")

    @cached_property
    def xs(self) -> list[Fraction]:
        return [x for x, _ in self.breakpoints]

    @property
    def domain(self) -> tuple[Fraction, Fraction]:
        return self.breakpoints[0][0], self.breakpoints[-1][0]

    def __call__(self, x: Fraction) -> Fraction:
        return eval_map(self, x)


def interpolate(orbit: CanonicalOrbit) -> PLMap:
    """
    Interpolante lineare dell'orbita: x_i -> x_{i+1}, 0 -> 0

    Raises:
        DegenerateOrbit: se due punti dell'orbita coincidono
    """
    points = orbit.points
    if len(set(points)) != len(points):
        raise DegenerateOrbit(f"Punti coincidenti nell'orbita di {orbit.word}")
    images = points[1:] + points[-1:]
    return PLMap(breakpoints=tuple(sorted(zip(points, images))))


def eval_map(f: PLMap, x: Fraction) -> Fraction:
    """
    Valore esatto di f in x per interpolazione lineare

    Raises:
        OutOfDomain: se x è fuori da [m, M]
    """
    m, big_m = f.domain
    if x < m or x > big_m:
        raise OutOfDomain(f"{x} fuori dal dominio [{m}, {big_m}]")
    xs = f.xs
    i = bisect_left(xs, x)
    if xs[i] == x:
        return f.breakpoints[i][1]
    (x0, y0), (x1, y1) = f.breakpoints[i - 1], f.breakpoints[i]
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0)


def tag_of_point(f: PLMap, x: Fraction, max_steps: int) -> Word:
    """
    Tag dell'orbita di x: L se il passo successivo va a sinistra, R se a destra

    Raises:
        NotEventuallyFixed: se x non raggiunge un punto fisso entro max_steps passi
    """
    letters = []
    y = x
    for step in range(max_steps + 1):
        image = eval_map(f, y)
        if image == y:
            return Word("".join(letters))
        if step == max_steps:
            break
        letters.append("L" if image < y else "R")
        y = image
    raise NotEventuallyFixed(f"{x} non raggiunge un punto fisso in {max_steps} passi")


def image_of_interval(f: PLMap, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Immagine esatta di [lo, hi]: inviluppo dei valori agli estremi e ai punti di rottura interni"""
    values = [eval_map(f, lo), eval_map(f, hi)]
    values.extend(y for x, y in f.breakpoints if lo < x < hi)
    return min(values), max(values)


def verify_collapse(f: PLMap, n: int) -> bool:
    """True se f^n([m, M]) è il solo punto fisso 0"""
    lo, hi = f.domain
    for _ in range(n):
        lo, hi = image_of_interval(f, lo, hi)
    return lo == hi == 0


def preimages(f: PLMap, target: Fraction) -> set[Fraction]:
    """
    Controimmagini di `target` ottenute tratto per tratto

    Se un tratto costante vale `target` se ne prendono solo gli estremi.
    """
    result = set()
    if len(f.breakpoints) == 1 and f.breakpoints[0][1] == target:
        result.add(f.breakpoints[0][0])
    for (x0, y0), (x1, y1) in pairwise(f.breakpoints):
        if y0 == y1:
            if y0 == target:
                result.update((x0, x1))
            continue
        if min(y0, y1) <= target <= max(y0, y1):
            result.add(x0 + (target - y0) * (x1 - x0) / (y1 - y0))
    return result


def critical_partition(f: PLMap, depth: int) -> tuple[Fraction, ...]:
    """
    Partizione di [m, M] su cui i tag sono costanti sulle celle aperte

    Contiene i punti di rottura, le loro controimmagini sotto f^k (k = 1..depth) e, in
    ogni cella, la radice di f^{k+1}(x) = f^k(x) per k < depth quando vi cade dentro.
    """
    points = set(f.xs)
    frontier = set(points)
    for _ in range(depth):
        pulled = set()
        for target in frontier:
            pulled |= preimages(f, target)
        frontier = pulled - points
        if not frontier:
            break
        points |= frontier

    # f^k è affine su ogni cella per k <= depth + 1
    roots = set()
    for p, q in pairwise(sorted(points)):
        yp, yq = p, q
        for _ in range(depth):
            fp, fq = eval_map(f, yp), eval_map(f, yq)
            gp, gq = fp - yp, fq - yq
            if gp * gq < 0:
                roots.add(p + gp * (q - p) / (gp - gq))
            yp, yq = fp, fq
    return tuple(sorted(points | roots))


def _bisect(points: list[Fraction]) -> list[Fraction]:
    refined = []
    for p, q in pairwise(points):
        refined.extend((p, midpoint(p, q)))
    refined.extend(points[-1:])
    return refined


@dataclass(frozen=True)
class TagEnumeration:
    """Tag ammessi da una mappa, con la partizione critica usata"""
    tags: PatternSet
    partition_points: tuple[Fraction, ...]
    depth_bound: int


def enumerate_tags(f: PLMap, depth: int, refine: int = 0) -> TagEnumeration:
    """
    Tutti i tag di orbita ammessi da f

    Args:
        f: mappa eventualmente fissa entro `depth` passi
        depth: massimo numero di iterazioni
        refine: bisezioni aggiuntive dei rappresentanti delle celle

    Returns:
        TagEnumeration con i tag dei punti della partizione e dei punti medi delle celle

    Raises:
        NotEventuallyFixed: se un punto campione non si fissa entro `depth` passi
    """
    if not verify_collapse(f, depth):
        logger.warning(f"⚠️ f^{depth}([m, M]) non collassa su 0: enumerazione non garantita")
    partition = critical_partition(f, depth)
    samples = list(partition)
    for _ in range(refine + 1):
        samples = _bisect(samples)
    tags = PatternSet.from_iterable(tag_of_point(f, x, depth) for x in samples)
    logger.debug(f"Partizione di {len(partition)} punti, {len(tags)} tag")
    return TagEnumeration(tags=tags, partition_points=partition, depth_bound=depth)


@dataclass(frozen=True)
class TagBand:
    """Intervallo massimale di punti con lo stesso tag"""
    left: Fraction
    right: Fraction
    left_closed: bool
    right_closed: bool
    tag: Word

    def contains(self, x: Fraction) -> bool:
        above = x > self.left or (self.left_closed and x == self.left)
        below = x < self.right or (self.right_closed and x == self.right)
        return above and below

    def describe(self) -> str:
        if self.left == self.right:
            interval = "{" + format_rational(self.left) + "}"
        else:
            interval = (
                ("[" if self.left_closed else "(")
                + f"{format_rational(self.left)}, {format_rational(self.right)}"
                + ("]" if self.right_closed else ")")
            )
        return f"{interval}: {self.tag}"


def tag_bands(f: PLMap, depth: int) -> list[TagBand]:
    """Partizione del dominio in bande massimali di tag costante, da sinistra a destra"""
    partition = critical_partition(f, depth)
    pieces = []
    for i, p in enumerate(partition):
        pieces.append(TagBand(p, p, True, True, tag_of_point(f, p, depth)))
        if i + 1 < len(partition):
            q = partition[i + 1]
            pieces.append(TagBand(p, q, False, False, tag_of_point(f, midpoint(p, q), depth)))

    bands: list[TagBand] = []
    for piece in pieces:
        if bands and bands[-1].tag == piece.tag:
            last = bands[-1]
            bands[-1] = TagBand(last.left, piece.right, last.left_closed, piece.right_closed, last.tag)
        else:
            bands.append(piece)
    return bands


def base_case_map(letter: Letter) -> PLMap:
    """
    Mappa a gradino su [-1, 1] che ammette solo {letter, e}

    Per L: identità su [-1, 0], costante 0 su [0, 1]; per R simmetricamente.
    """
    if letter is Letter.L:
        points = ((-1, -1), (0, 0), (1, 0))
    else:
        points = ((-1, 0), (0, 0), (1, 1))
    return PLMap(breakpoints=tuple((Fraction(x), Fraction(y)) for x, y in points))


def canonical_map(w: Word) -> PLMap:
    return interpolate(canonical_orbit(w))


def forced_set_via_realization(w: Word) -> PatternSet:
    """Tag ammessi dalla mappa canonica di w"""
    return enumerate_tags(canonical_map(w), len(w)).tags


def map_to_json(f: PLMap) -> str:
    """{"domain": [m, M], "breakpoints": [[x, y], ...]} con razionali "p/q" """
    m, big_m = f.domain
    payload = {
        "domain": [format_rational(m), format_rational(big_m)],
        "breakpoints": [[format_rational(x), format_rational(y)] for x, y in f.breakpoints],
    }
    return json.dumps(payload)


def map_from_json(text: str) -> PLMap:
    """
    Inversa di map_to_json

    Raises:
        InconsistentInput: se il dominio dichiarato non coincide con i punti di rottura
    """
    payload = json.loads(text)
    f = PLMap(breakpoints=tuple(
        (parse_rational(x), parse_rational(y)) for x, y in payload["breakpoints"]
    ))
    declared = tuple(parse_rational(v) for v in payload["domain"])
    if declared != f.domain:
        raise InconsistentInput(f"Dominio dichiarato {declared} diverso da {f.domain}")
    return f
