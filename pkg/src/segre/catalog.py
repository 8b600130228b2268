"""The quartic-surface catalog: 16 admissible symbols and their data.

A weight-5 Segre symbol describes a quartic surface exactly when every
bracketed group has two exponents one of which is 1; the sixteen such
symbols are tabulated here with their singularities, line counts, dual
2-plane counts and automorphism data.  The class degree (the degree of the
projective dual variety) is never stored: it is recomputed from the
singularity list through the elliptic-fibration Euler-number formula

    class = 12 - sum of euler numbers,   e(A_n) = n+1, e(D_n) = n+2,

which cross-checks every tabulated row.  One tabulated value disagrees
with this formula ([2111], printed as 8 where the formula and the
degeneration narrative give 10); the row carries the printed value as a
flagged discrepancy and the catalog stores 10.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .symbol import SegreSymbol, canonicalize

__all__ = [
    "SingularityType",
    "AutE",
    "CatalogRow",
    "Table2Row",
    "VertexCode",
    "class_degree",
    "CATALOG",
    "CATALOG_ORDER",
    "TABLE1_ORDER",
    "TABLE2_ROWS",
    "TABLE3_ORDER",
    "catalog_row",
    "in_catalog",
    "transitions",
    "TRANSITIONS",
]


@dataclass(frozen=True)
class SingularityType:
    """A rational double point of type A_n (n >= 1) or D_n (n in {4, 5})."""

    family: str
    index: int

    def __post_init__(self):
        if self.family == "A":
            if self.index < 1:
                raise ValueError(f"A_n needs n >= 1, got {self.index}")
        elif self.family == "D":
            if self.index not in (4, 5):
                raise ValueError(f"D_n supported for n in 4..5, got {self.index}")
        else:
            raise ValueError(f"unknown singularity family {self.family!r}")

    @property
    def euler(self) -> int:
        """Euler number of the extended-Dynkin elliptic fiber over the point."""
        return self.index + 1 if self.family == "A" else self.index + 2

    @classmethod
    def parse(cls, text: str) -> "SingularityType":
        return cls(text[0], int(text[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.index}"


def _A(n: int) -> SingularityType:
    return SingularityType("A", n)


def _D(n: int) -> SingularityType:
    return SingularityType("D", n)


class AutE(Enum):
    """Identity component of the automorphism group, as tabulated."""

    TRIVIAL = "{id}"
    C_STAR = "C*"
    C_STAR_SQUARED = "C*xC*"
    C_STAR_OR_TRIVIAL = "C* or {id}"


def class_degree(singularities: tuple[SingularityType, ...] | list[SingularityType]) -> int:
    """Degree of the dual variety: 12 minus the fiber Euler numbers."""
    total = sum(s.euler for s in singularities)
    if total > 12:
        raise ValueError(f"euler numbers sum to {total} > 12")
    return 12 - total


@dataclass(frozen=True)
class CatalogRow:
    symbol: str
    singularities: tuple[SingularityType, ...]
    lines_total: int
    planes_in_dual: int
    aut_e: AutE
    # value printed in the source table when it contradicts the class formula
    printed_class_discrepancy: int | None = None

    @property
    def class_degree(self) -> int:
        return class_degree(self.singularities)

    @property
    def q_star_count(self) -> int:
        """Number of unbracketed 1s: one double cover over a smooth quadric each."""
        return SegreSymbol.parse(self.symbol).unbracketed_ones()


CATALOG_ORDER: tuple[str, ...] = (
    "[11111]",
    "[2111]",
    "[(11)111]",
    "[311]",
    "[221]",
    "[2(11)1]",
    "[(21)11]",
    "[(11)(11)1]",
    "[41]",
    "[(31)1]",
    "[3(11)]",
    "[32]",
    "[(21)2]",
    "[(21)(11)]",
    "[5]",
    "[(41)]",
)

CATALOG: dict[str, CatalogRow] = {
    row.symbol: row
    for row in (
        CatalogRow("[11111]", (), 16, 16, AutE.TRIVIAL),
        CatalogRow("[2111]", (_A(1),), 12, 8, AutE.TRIVIAL, printed_class_discrepancy=8),
        CatalogRow("[(11)111]", (_A(1), _A(1)), 8, 0, AutE.C_STAR),
        CatalogRow("[311]", (_A(2),), 8, 4, AutE.TRIVIAL),
        CatalogRow("[221]", (_A(1), _A(1)), 9, 4, AutE.TRIVIAL),
        CatalogRow("[2(11)1]", (_A(1), _A(1), _A(1)), 6, 0, AutE.C_STAR),
        CatalogRow("[(21)11]", (_A(3),), 4, 0, AutE.TRIVIAL),
        CatalogRow("[(11)(11)1]", (_A(1), _A(1), _A(1), _A(1)), 4, 0, AutE.C_STAR_SQUARED),
        CatalogRow("[41]", (_A(3),), 5, 2, AutE.C_STAR),
        CatalogRow("[(31)1]", (_D(4),), 2, 0, AutE.C_STAR_OR_TRIVIAL),
        CatalogRow("[3(11)]", (_A(1), _A(1), _A(2)), 4, 0, AutE.C_STAR_SQUARED),
        CatalogRow("[32]", (_A(1), _A(2)), 6, 3, AutE.C_STAR),
        CatalogRow("[(21)2]", (_A(1), _A(3)), 3, 0, AutE.C_STAR),
        CatalogRow("[(21)(11)]", (_A(1), _A(1), _A(3)), 2, 0, AutE.C_STAR_SQUARED),
        CatalogRow("[5]", (_A(4),), 3, 1, AutE.C_STAR),
        CatalogRow("[(41)]", (_D(5),), 1, 0, AutE.C_STAR_OR_TRIVIAL),
    )
}

# Rows realizable as a double cover over a smooth quadric, in table order.
TABLE1_ORDER: tuple[str, ...] = (
    "[11111]",
    "[2111]",
    "[(11)111]",
    "[2(11)1]",
    "[(11)(11)1]",
    "[311]",
    "[221]",
    "[(21)11]",
    "[41]",
    "[(31)1]",
)


class VertexCode(Enum):
    """Position of the cone vertex relative to the branch curve."""

    OFF_BRANCH = "off branch"
    NODE = "node of branch"
    CUSP = "cusp of branch"
    IS_SINGULAR_LOCUS = "the singular point of branch"


@dataclass(frozen=True)
class Table2Row:
    """One cone-cover row: the bracketed group supplying the removed 1
    identifies the projection when a symbol admits more than one."""

    symbol: str
    source_group: tuple[int, ...]
    vertex: VertexCode


# Rows realizable as a double cover over a quadratic cone, in table order.
# [(21)(11)] appears twice: the two bracketed-1 choices give different
# projections of the same surface.
TABLE2_ROWS: tuple[Table2Row, ...] = (
    Table2Row("[(11)111]", (1, 1), VertexCode.OFF_BRANCH),
    Table2Row("[(21)11]", (2, 1), VertexCode.NODE),
    Table2Row("[2(11)1]", (1, 1), VertexCode.OFF_BRANCH),
    Table2Row("[(11)(11)1]", (1, 1), VertexCode.OFF_BRANCH),
    Table2Row("[3(11)]", (1, 1), VertexCode.OFF_BRANCH),
    Table2Row("[(31)1]", (3, 1), VertexCode.CUSP),
    Table2Row("[(21)2]", (2, 1), VertexCode.NODE),
    Table2Row("[(21)(11)]", (2, 1), VertexCode.NODE),
    Table2Row("[(21)(11)]", (1, 1), VertexCode.OFF_BRANCH),
    Table2Row("[(41)]", (4, 1), VertexCode.IS_SINGULAR_LOCUS),
)

# Rows with no double-cover structure at all.
TABLE3_ORDER: tuple[str, ...] = ("[32]", "[5]")


def _canonical_key(s: SegreSymbol | str) -> str:
    return canonicalize(s).render()


def in_catalog(s: SegreSymbol | str) -> bool:
    return _canonical_key(s) in CATALOG


def catalog_row(s: SegreSymbol | str) -> CatalogRow:
    key = _canonical_key(s)
    row = CATALOG.get(key)
    if row is None:
        raise ValueError(f"{key} is not one of the 16 catalog symbols")
    return row


# Degeneration edges: class drops along every edge except [3(11)] -> [(31)1],
# where it rises from 5 to 6.
TRANSITIONS: dict[str, tuple[str, ...]] = {
    "[11111]": ("[2111]",),
    "[2111]": ("[311]", "[(11)111]"),
    "[(11)111]": ("[2(11)1]",),
    "[2(11)1]": ("[(11)(11)1]",),
    "[221]": ("[41]",),
    "[3(11)]": ("[(31)1]",),
    "[(21)2]": ("[(41)]",),
}


def transitions(s: SegreSymbol | str) -> list[SegreSymbol]:
    """Adjacent degenerations of a catalog symbol (may be empty)."""
    key = _canonical_key(s)
    if key not in CATALOG:
        raise ValueError(f"{key} is not one of the 16 catalog symbols")
    return [SegreSymbol.parse(t) for t in TRANSITIONS.get(key, ())]
