"""Published solution lists and counts for x^2 + y^2 + z^2 = d*x*y*z.

Entries are transcribed verbatim as "first term and difference" pairs in a
generator ``a``.  For D = 2, 3 (mod 4) the generator is sqrt(D).  For
D = 1 (mod 4) the tables use a root of x^2 + x - (D-1)/4, i.e.
(-1 + sqrt(D))/2; this is ``w - 1`` in the package's own integral basis.
Both roots give the same solution set because every set here is closed
under conjugation.
"""

from __future__ import annotations

from .qfield import AlgInt, Field, parse_element
from .solver import APTriple

# progressions over Q, as explicit triples
RATIONAL = {
    1: [(0, 0, 0), (3, 3, 3), (-15, -6, 3), (3, -6, -15)],
    3: [(0, 0, 0), (1, 1, 1), (-5, -2, 1), (1, -2, -5)],
}

# Gaussian integers, as explicit triples with "i"; the (4i+2, 2i+2, 2) family
# is listed with the sign on the middle term following the outer ones
GAUSSIAN = {
    1: [
        "0,0,0", "3,3,3", "-15,-6,3", "3,-6,-15",
        "2,2i+2,4i+2", "2,-2i+2,-4i+2",
        "i+2,2,-i+2", "-i+2,2,i+2",
        "i+2,2i-1,3i-4", "-i+2,-2i-1,-3i-4",
        "2i-1,-1,-2i-1", "-2i-1,-1,2i-1",
        "4i+2,2i+2,2", "-4i+2,-2i+2,2",
        "3i-4,2i-1,i+2", "-3i-4,-2i-1,-i+2",
    ],
    2: [
        "0,0,0",
        "2i+1,i+1,1", "-2i+1,-i+1,1",
        "1,i+1,2i+1", "1,-i+1,-2i+1",
    ],
}

# (d, D) -> non-rational progressions, "first, difference"
REAL_TABLE: dict[tuple[int, int], list[str]] = {
    (1, -1): [
        "a + 2, a - 3", "-a + 2, a", "2a - 1, -2a", "a + 2, -a", "-4a + 2, 2a",
        "-3a - 4, a + 3", "-2a - 1, 2a", "4a + 2, -2a", "2, 2a", "2, -2a",
        "3a - 4, -a + 3", "-a + 2, -a - 3",
    ],
    (1, 2): [
        "4a + 8, -4a", "11a - 13, -23a - 6", "-4a + 8, 4a", "-7a - 7, 7a",
        "-11a - 13, 23a - 6", "-35a - 25, 23a + 6", "35a - 25, -23a + 6",
        "7a - 7, -7a",
    ],
    (1, 3): ["9a + 18, -9a", "-9a + 18, 9a"],
    (1, 5): [
        "-35a - 5, 22a + 11", "22a - 11, -22a - 11", "-7a - 6, 4a + 5",
        "-9a + 8, 22a + 11", "35a + 30, -22a - 11", "-7a - 9, 2a + 7",
        "a + 4, -5a + 2", "-3a + 5, -2a - 7", "-a + 3, 4a - 1",
        "7a + 1, -4a + 1", "-a + 3, 5a + 7", "14a - 3, -10a - 2",
        "-14a - 17, 10a + 8", "9a + 17, -22a - 11", "-22a - 33, 22a + 11",
        "3a + 8, 2a - 5", "7a - 2, -2a + 5", "-9a + 8, 5a - 2", "9a + 17, -5a - 7",
        "6a - 1, -10a - 8", "-6a - 7, 10a + 2", "a + 4, -4a - 5",
    ],
    (1, 6): ["-6a - 12, 6a", "6a - 12, -6a", "3a - 3, -3a", "-3a - 3, 3a"],
    (1, 11): ["-2a - 4, 4a - 6", "6a - 16, -4a + 6", "-6a - 16, 4a + 6", "2a - 4, -4a - 6"],
    (1, 14): ["-2a - 4, 2a", "2a - 4, -2a"],
    (1, 17): ["4a + 13, a - 10", "-4a + 9, -a - 11", "6a - 7, -a + 10", "-6a - 13, a + 11"],
    (1, 21): ["3a - 3, 9", "-3a + 12, -9", "-3a - 6, 9", "3a + 15, -9"],
    (1, 29): [
        "-11a - 32, 7a + 14", "11a - 21, -7a + 7", "3a - 4, -2a + 5",
        "-3a - 7, 2a + 7", "a + 7, -2a - 7", "-3a - 7, 7a - 7", "-a + 6, 2a - 5",
        "3a - 4, -7a - 14",
    ],
    (1, 41): [
        "-4a + 15, a - 10", "2a - 3, -a + 4", "5, -a - 5", "2a - 3, a + 11",
        "-2a - 5, a + 5", "5, a - 4", "4a + 19, -a - 11", "-2a - 5, -a + 10",
    ],
    (2, -1): ["1, -a", "2a + 1, -a", "1, a", "-2a + 1, a"],
    (2, 2): ["-2a + 4, 2a", "2a + 4, -2a"],
    (2, 6): ["3a - 6, -3a", "-3a - 6, 3a"],
    (2, 11): ["-3a - 8, 2a + 3", "3a - 8, -2a + 3", "a - 2, -2a - 3", "-a - 2, 2a - 3"],
    (2, 14): ["-a - 2, a", "a - 2, -a"],
    (3, 3): ["3a + 6, -3a", "-3a + 6, 3a"],
    (3, 6): ["a - 1, -a", "-2a - 4, 2a", "-a - 1, a", "2a - 4, -2a"],
    (3, 21): ["a + 5, -3", "a - 1, 3", "-a + 4, -3", "-a - 2, 3"],
    (4, 2): ["a + 2, -a", "-a + 2, a"],
    (6, 6): ["-a - 2, a", "a - 2, -a"],
    (7, 2): ["a - 1, -a", "-a - 1, a"],
    (9, 3): ["a + 2, -a", "-a + 2, a"],
    (11, 5): ["-2a - 3, 2a + 1", "2a - 1, -2a - 1"],
}

# (d, D) -> #AP_{(1,1,1,d)}(Q(sqrt(D))), rational progressions included
COUNTS: dict[tuple[int, int], int] = {
    (1, -1): 16, (1, 2): 12, (1, 3): 6, (1, 5): 26, (1, 6): 8, (1, 11): 8,
    (1, 14): 6, (1, 17): 8, (1, 21): 8, (1, 29): 12, (1, 41): 12,
    (2, -1): 5, (2, 2): 3, (2, 6): 3, (2, 11): 5, (2, 14): 3,
    (3, 3): 6, (3, 6): 8, (3, 21): 8,
    (4, 2): 3, (6, 6): 3, (7, 2): 3, (9, 3): 3, (11, 5): 3,
}

CONJECTURED_TOTAL = 178

# fields where (1,1,1,d) has nothing beyond Q, d in {1, 2, 3}
IMAGINARY_STABLE = (-2, -3, -5, -7, -11, -19, -43, -163)

# (d, D) pairs where the Gaussian/imaginary theorem finds extra progressions
IMAGINARY_EXCEPTIONS = {(1, -1), (2, -1)}

ROSENBERGER = [(1, 1, 1, 1), (1, 1, 1, 3), (1, 1, 2, 2), (1, 1, 2, 4), (1, 2, 3, 6), (1, 1, 5, 5)]
ROSENBERGER_CLAUSE_A = ROSENBERGER[:5]
ROSENBERGER_155_EXTRA = [(-3, -1, 1), (-7, -1, 5)]


def table_generator(field: Field) -> AlgInt:
    """The table's ``a`` expressed in the package's integral basis."""
    w = field.omega
    return w - 1 if field.wt else w


def _table_element(text: str, field: Field) -> AlgInt:
    x = parse_element(text, field)
    return x.u + x.v * table_generator(field) if field.D != 1 else x


def table_triples(d: int, D: int) -> set[APTriple]:
    """Non-rational progressions the table lists for (d, D)."""
    field = Field(D)
    out = set()
    for entry in REAL_TABLE[(d, D)]:
        first, diff = (_table_element(s, field) for s in entry.split(","))
        out.add(APTriple(first, diff))
    return out


def _gauss(text: str, field: Field) -> AlgInt:
    return parse_element(text.replace("i", "a"), field)


def gaussian_triples(d: int) -> set[APTriple]:
    field = Field(-1)
    out = set()
    for entry in GAUSSIAN[d]:
        x, y, z = (_gauss(s, field) for s in entry.split(","))
        if y - x != z - y:
            raise ValueError(f"{entry} is not a progression")
        out.add(APTriple(x, y - x))
    return out


def rational_triples(d: int) -> set[APTriple]:
    from .qfield import QQ

    return {APTriple(QQ.elt(x), QQ.elt(y - x)) for x, y, _ in RATIONAL.get(d, [(0, 0, 0)])}
