"""Reference catalog of named quintic families in five variables.

Supports are stored as expressions in the q-pattern notation and expanded on
demand. Terms whose degree differs from five are discarded at expansion time
and reported, so that every stored expression can be used unchanged.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import Monomial, Weight
from .notation import parse_support

N_VARS = 5
DEGREE = 5


@dataclass(frozen=True)
class TopFamily:
    label: str
    destabilizer: Weight
    maximal_monomials: tuple[Monomial, ...]
    expression: str
    degeneration: str
    flag: tuple[tuple[int, ...], ...]


TOP_FAMILIES: tuple[TopFamily, ...] = (
    TopFamily("SS1", (2, 2, 2, -3, -3), ((3, 0, 0, 2, 0),),
              "q3,2(x0,x1,x2|x3,x4)+q2,3(x0,x1,x2|x3,x4)+q1,4(x0,x1,x2|x3,x4)+q5(x3,x4)",
              "MO-A", ((3, 4),)),
    TopFamily("SS2", (1, 1, 1, 1, -4), ((4, 0, 0, 0, 1),), "x4*q4(x0,x1,x2,x3,x4)", "MO-D", ((4,),)),
    TopFamily("SS3", (3, 3, -2, -2, -2), ((2, 0, 3, 0, 0),),
              "q2,3(x0,x1|x2,x3,x4)+q1,4(x0,x1|x2,x3,x4)+q5(x2,x3,x4)", "MO-A", ((2, 3, 4),)),
    TopFamily("SS4", (4, -1, -1, -1, -1), ((1, 4, 0, 0, 0),), "x0*q4(x1,x2,x3,x4)+q5(x1,x2,x3,x4)", "MO-D",
              ((1, 2, 3, 4),)),
    TopFamily("SS5", (1, 0, 0, 0, -1), ((0, 5, 0, 0, 0), (1, 3, 0, 0, 1), (2, 1, 0, 0, 2)),
              "x0^2*x4^2*q1(x1,x2,x3,x4)+x0*x4*q3(x1,x2,x3,x4)+q5(x1,x2,x3,x4)", "MO-B",
              ((1, 2, 3, 4), (4,))),
    TopFamily("SS6", (4, 4, -1, -1, -6), ((1, 0, 4, 0, 0), (3, 0, 0, 0, 2), (2, 0, 2, 0, 1)),
              "x4^2*q3(x0,x1)+x4*q2,2(x0,x1|x2,x3,x4)+q1,4(x0,x1|x2,x3,x4)+q5(x2,x3,x4)", "MO-C",
              ((2, 3, 4), (4,))),
    TopFamily("SS7", (6, 1, 1, -4, -4), ((0, 4, 0, 1, 0), (1, 2, 0, 2, 0), (2, 0, 0, 3, 0)),
              "x0^2*q3(x3,x4)+x0*(q2,2(x1,x2|x3,x4)+q1,3(x1,x2|x3,x4)+q4(x3,x4))"
              "+q4,1(x1,x2|x3,x4)+q3,2(x1,x2|x3,x4)+q2,3(x1,x2|x3,x4)+q1,4(x1,x2|x3,x4)+q5(x3,x4)",
              "MO-C", ((1, 2, 3, 4), (3, 4))),
)

TOPMOST_NONSTABLE: tuple[Monomial, ...] = ((3, 0, 0, 2, 0), (4, 0, 0, 0, 1), (2, 0, 3, 0, 0), (1, 4, 0, 0, 0))

# closed-orbit families with their listed invariant one-parameter subgroups
MINIMAL_ORBITS: dict[str, str] = {
    "MO-A": "q2,3(x0,x1|x2,x3,x4)",
    "MO-B": "q5(x1,x2,x3)+x0x4q3(x1,x2,x3)+x0^2x4^2q1(x1,x2,x3)",
    "MO-C": "q1,4(x0,x1|x2,x3)+x4q2,2(x0,x1|x2,x3)+x4^2q3(x0,x1)",
    "MO-D": "x0q4(x1,x2,x3,x4)",
    "MO2-I": "x0^2x2x4^2+x0x1x2x3x4+x1^2x2x3^2",
    "MO2-II": "x0^2x3x4^2+x0x1(x3^3+x2x3x4)+x1^2x2^2x3",
    "MO2-III": "x0^2(x2x4^2+x3^2x4)+x0x1(x3^3+x2x3x4)+x1^2(x2x3^2+x2^2x4)",
    "MO2-IV": "x0x1x4q2(x2,x3)",
    "MO2-V": "x0x1x2x3x4",
    "MO2-VI": "x1x2^3x3+x1^2x2x3^2+x0x1x2x3x4",
    "MO2-VII": "x4x0^2x3^2+x4x0x1x2x3+x4x1^2x2^2",
    "MO2-VIII": "x0x1q3(x2,x3,x4)",
    "MO2-IX": "x0q2,2(x1,x2|x3,x4)",
    "MO2-X": "x0(q4(x2,x3)+x1x4q2(x2,x3)+x1^2x4^2)",
}

LISTED_INVARIANT: dict[str, tuple[int, ...]] = {
    "MO-A": (3, 3, -2, -2, -2),
    "MO-B": (1, 0, 0, 0, -1),
    "MO-C": (4, 4, -1, -1, -6),
    "MO-D": (4, -1, -1, -1, -1),
    "MO2-I": (6, 0, 2, -3, -5),
    "MO2-II": (4, 2, -1, -2, -3),
    "MO2-III": (4, 2, 0, -2, -4),
    "MO2-IV": (4, 2, -1, -1, -5),
    "MO2-V": (5, 3, -1, -2, -7),
    "MO2-VI": (2, 1, 0, -1, -2),
    "MO2-VII": (5, 3, 0, -2, -6),
    "MO2-VIII": (4, 2, -2, -2, -2),
    "MO2-IX": (4, 0, 0, -2, -2),
    "MO2-X": (4, 0, -1, -1, -2),
}

# degenerations expected between closed-orbit families
EXPECTED_EDGES: tuple[tuple[str, str], ...] = (
    ("MO-A", "MO2-I"), ("MO-A", "MO2-II"), ("MO-A", "MO2-III"), ("MO-A", "MO2-IV"),
    ("MO-B", "MO2-IV"), ("MO-B", "MO2-V"), ("MO-B", "MO2-VI"),
    ("MO-C", "MO2-VII"),
    ("MO-D", "MO2-VIII"), ("MO-D", "MO2-IX"), ("MO-D", "MO2-X"),
    ("MO2-I", "MO2-V"), ("MO2-II", "MO2-V"), ("MO2-III", "MO2-V"), ("MO2-IV", "MO2-V"),
    ("MO2-VI", "MO2-V"), ("MO2-VII", "MO2-V"), ("MO2-VIII", "MO2-V"), ("MO2-X", "MO2-V"),
)

EXPECTED_SUBLEVEL_COUNTS: dict[str, int] = {"MO-A": 5, "MO-B": 4, "MO-C": 1, "MO-D": 4}

# listed destabilizers of sub-families; None means "no destabilizer"
SUB_DESTABILIZERS: dict[str, tuple[int, ...] | None] = {
    "SS1-A": (1, -1, 4, -1, -3), "SS2-A": (1, -1, 2, -1, -1), "SS3-A": (1, -1, 1, 1, -2),
    "SS4-A": (1, -1, 1, 0, -1), "SS5-A": (1, -1, 2, 0, -2),
    "SS1-B": (1, 2, -1, -1, -1), "SS2-B": (1, 3, -1, -2, -1), "SS3-B": (1, 1, 1, -2, -1),
    "SS4-B": (1, 1, 0, -1, -1),
    "SS1-C": (1, -1, 1, -1, 0),
    "SS1-D": (0, 3, -1, -1, -1), "SS2-D": (0, 1, 1, 1, -3), "SS3-D": (0, 1, 1, -1, -1),
    "SS4-D": (0, 1, 0, 0, -1),
    "SS1-I": (1, 1, -1, 0, -1), "SS2-I": (1, -1, 0, 0, 0),
    "SS1-II": (1, 1, 0, -1, -1), "SS2-II": (1, 0, 0, -1, 0), "SS3-II": (1, -1, 0, 0, 0),
    "SS4-II": (1, 1, 0, -1, -1), "SS5-II": (1, -2, 0, 0, 1), "SS6-II": None,
    "SS1-III": (1, 3, 3, -4, -3), "SS2-III": (1, -8, 1, 2, 4), "SS3-III": (1, 2, 0, 0, -3),
    "SS4-III": (1, -1, 0, 0, 0), "SS5-III": (1, 1, 2, -7, 3), "SS6-III": (1, 0, 0, -2, 1),
    "SS7-III": (1, 0, -1, 1, -1), "SS8-III": (1, 1, 1, -1, -2), "SS9-III": (1, 0, 0, -2, 1),
    "SS10-III": (1, -2, 0, 0, 1), "SS11-III": (1, -2, 0, 0, 1), "SS12-III": (1, 0, 0, 0, -1),
    "SS13-III": (1, -1, 0, 0, 0), "SS14-III": (1, 1, -1, 0, -1), "SS15-III": (1, 2, 0, 0, -3),
    "SS16-III": (1, -2, 0, 0, 1), "SS17-III": None,
    "SS1-IV": (1, 0, 1, 0, -2),
    "SS1-V": None,
    "SS1-VI": (1, 0, -1, 0, 0), "SS2-VI": (1, 0, -1, 0, 0), "SS3-VI": (1, 0, -1, 0, 0), "SS4-VI": None,
    "SS1-VII": (1, 2, 0, 0, 0), "SS2-VII": (1, 0, 0, 0, -1), "SS3-VII": None,
    "SS1-VIII": (1, -1, 2, -1, -1), "SS2-VIII": (1, -1, 1, 1, -2),
    "SS1-IX": (0, 1, -1, 1, -1),
}


@dataclass(frozen=True)
class SubFamily:
    label: str  # e.g. "SS2-A" or "US4-III"
    expression: str
    amendment: str = ""

    @property
    def context(self) -> str:
        suffix = self.label.split("-", 1)[1]
        return ("MO-" if suffix in "ABCD" else "MO2-") + suffix

    @property
    def unstable(self) -> bool:
        return self.label.startswith("US")


SUB_FAMILIES: tuple[SubFamily, ...] = tuple(SubFamily(*row) for row in (
    ('SS1-A', 'x0^2(q3(x3,x4)+q1(x2,x3)x4^2+x4^3)+x0x1(q3(x3,x4)+x2x3x4+q1(x2,x3)x4^2+x3x4^2+x3^2x4+x4^3)+x1^2(x2q2(x3,x4)+q3(x3,x4))', ''),
    ('SS2-A', 'x0^2(q3(x3,x4))+x0x1(x2q2(x3,x4)+q3(x3,x4))+x1^2(x2q2(x3,x4)+q3(x3,x4))', ''),
    ('SS3-A', 'x0^2(q1(x2,x3)x4^2+x4^3)+x0x1(q2(x2,x3)x4+q1(x2,x3)x4^2+x4^3)+x1^2(q2(x2,x3)x4+q1(x2,x3)x4^2+x4^3)', ''),
    ('SS4-A', 'x0^2(x3x4^2+x4^3)+x0x1(q3(x3,x4)+x2x3x4+q1(x2,x3)x4^2+x3x4^2+x3^2x4+x4^3)+x1^2(x2^2q1(x3,x4)+x2q2(x3,x4)+q3(x3,x4))', ''),
    ('SS5-A', 'x0^2(q1(x2,x3)x4^2+x3^2x4+x4^3)+x0x1(q3(x3,x4)+x2x3x4+q1(x2,x3)x4^2+x3x4^2+x3^2x4+x4^3)+x1^2(x2q2(x3,x4)+q3(x3,x4)+q2(x2,x3)x4+x4^3)', ''),
    ('US1-A', 'x0^2(q3(x3,x4)+x2x4^2)+x0x1(q3(x3,x4)+x2x4^2)+x1^2(q3(x3,x4)+x2x3x4+x2x4^2)', ''),
    ('US2-A', 'x0^2(q3(x3,x4))+x0x1(q3(x3,x4))+x1^2(q3(x3,x4)+x2q2(x3,x4))', ''),
    ('US3-A', 'x0^2(x2x4^2+x3^2x4+x3x4^2+x4^3)+x0x1(x2x4^2+x3^2x4+x3x4^2+x4^3)+x1^2(q3(x3,x4)+x2x3x4+x2x4^2)', ''),
    ('US4-A', 'x0^2(x2x4^2+x3x4^2+x4^3)+x0x1(x2x4^2+x3^2x4+x3x4^2+x4^3)+x1^2(q2(x2,x3)x4+q1(x2,x3)x4^2+x4^3)', ''),
    ('US5-A', 'x0^2(x4^3)+x0x1(q1(x2,x3)x4^2+x3^2x4+x4^3)+x1^2(q3(x3,x4)+x2^2x4+x2x3x4+x2x4^2)', ''),
    ('US6-A', 'x0^2(x3x4^2+x4^3)+x0x1(q1(x2,x3)x4^2+x3^2x4+x4^3)+x1^2(q3(x3,x4)+x2x3x4+x2x4^2)', ''),
    ('US7-A', 'x0^2(x3x4^2+x4^3)+x0x1(q1(x2,x3)x4^2+x3^2x4+x4^3)+x1^2(q2(x2,x3)x4+q1(x2,x3)x4^2+x4^3)', ''),
    ('US8-A', 'x0^2(x3^2x4+x3x4^2+x4^3)+x0x1(q1(x2,x3)x4^2+x3^2x4+x4^3)+x1^2(x2q2(x3,x4)+q3(x3,x4))', ''),
    ('US9-A', 'x0^2(x3x4^2+x4^3)+x0x1(q1(x2,x3)x4^2+x3^2x4+x4^3)+x1^2(x2q2(x3,x4)+q3(x3,x4))', ''),
    ('US10-A', 'x0^2(x4^3)+x0x1(q1(x2,x3)x4^2+x3^2x4+x4^3)+x1^2(x2q2(x3,x4)+q3(x3,x4))', ''),
    ('US11-A', 'x0^2(x3x4^2+x4^3)+x0x1(q1(x2,x3)x4^2+x3^2x4+x4^3)+x1^2(x2x3x4+x2x4^2+q3(x3,x4))', ''),
    ('US12-A', 'x0^2(x3x4^2+x4^3)+x0x1(q1(x2,x3)x4^2+x3^2x4+x4^3)+x1^2(q2(x2,x3)x4+q1(x2,x3)x4^2+x4^3)', ''),
    ('US13-A', 'x0^2(x4^3)+x0x1(q1(x2,x3)x4^2+x3^2x4+x4^3)+x1^2(q2(x2,x3)x4+q1(x2,x3)x4^2+x4^3+x3^3)', ''),
    ('US14-A', 'x0^2(x4^3+x3^2x4)+x0x1(x4^3+x3^2x4)+x1^2(x2q2(x3,x4)+q3(x3,x4))', ''),
    ('US15-A', 'x0^2(x4^3)+x0x1(x4^3+x3^2x4)+x1^2(x2q2(x3,x4)+q3(x3,x4)+x2^3x4)', ''),
    ('US16-A', 'x0^2(x3^2x4+x4^3)+x0x1(x4^3+x3^2x4)+x1^2(q3(x3,x4)+x2x3x4+x2x4^2)', ''),
    ('US17-A', 'x0^2(x3^2x4+x4^3)+x0x1(x4^3+x3^2x4)+x1^2(q2(x2,x3)x4+q1(x2,x3)x4+x4^3)', ''),
    ('US18-A', 'x0^2(x4^3)+x0x1(x4^3+x3^2x4)+x1^2(q3(x3,x4)+x2x3x4+x2x4^2+x3^3)', ''),
    ('SS1-B', '(x1q4(x2,x3)+q5(x2,x3))+x0x4(x1q2(x2,x3)+q3(x2,x3))+x0^2x4^2(q1(x2,x3))', ''),
    ('SS2-B', '(x1q4(x2,x3)+q5(x2,x3)+q2(x1,x2)x3^2)+x0x4(q3(x2,x3)+x1x2x3+q1(x1,x2)x3^2)+x0^2x4^2(q1(x2,x3))', ''),
    ('SS3-B', '(q3(x1,x2)x3^2+q2(x1,x2)x3^3+q1(x1,x2)x3^4+x3^5)+x0x4(q2(x1,x2)x3+q1(x1,x2)x3^2+x3^3)+x0^2x4^2(x3)', ''),
    ('SS4-B', '(q5(x2,x3)+x1x2^3x3+x1x2^2x3^2+x1x2x3^3+x1x3^4+x1^2x2x3^2+q2(x1,x2)x3^3)+x0x4(q3(x2,x3)+x1x2x3+q1(x1,x2)x3^2)+x0^2x4^2(q1(x2,x3))', ''),
    ('US1-B', '(x1q4(x2,x3)+x1^2x3)+x0x4(q3(x2,x3)+x1x3^2)+x0^2x4^2(x2+x3)', ''),
    ('US2-B', '(q5(x2,x3)+x1x2^3x3+x1x2^2x3^2+x1^2x3^3+x1x2x3^3+x1x3^4)+x0x4(q1(x1,x2)x3^2+x2^2x3+x3^3)+x0^2x4^2(x3)', ''),
    ('US3-B', '(x1^2x2x3^2+x1x2^2x3^2+x2^4x3+x2^3x3^2+x2^2x3^3+q2(x1,x2)x3^3+q1(x1,x2)x3^4+x3^5)+x0x4(q1(x1,x2)x3^2+x2^2x3+x3^3)+x0^2x4^2(x3)', ''),
    ('US4-B', '(q3(x1,x2)x3^2+q2(x1,x2)x3^3+q1(x1,x2)x3^4+x4^5)+x0x4(q1(x1,x2)x3^2+x2^2x3+x3^3)+x0^2x4^2(x3)', ''),
    ('SS1-C', '(x0(x2x3^3+x3^4)+x1(x2^2x3^2+x2x3^3+x3^4))+x4^2(x0x1^2+x1^3)+x4(x0^2(x3^2)+x0x1(x2x3+x3^2)+x1^2(x2^2+x2x3+x3^2))', ''),
    ('US1-C', 'x0(x2x3^3+x3^4)+x1(x2^2x3^2+x2x3^3+x3^3)+x4^2(x0x1^2+x1^3)+x4x0x1(x3^2)+x4x1^2(x2x3+x3^2)', ''),
    ('SS1-D', 'x0(x1q3(x2,x3,x4)+q4(x2,x3,x4))', ''),
    ('SS2-D', 'x0(q3(x1,x2,x3)x4+q2(x1,x2,x3)x4^2+q1(x1,x2,x3)x4^3+x4^4)', ''),
    ('SS3-D', 'x0(q2,2(x1,x2|x3,x4)+q1,3(x1,x2|x3,x4)+q4(x3,x4))', ''),
    ('SS4-D', 'x0(q4(x2,x3,x4)+x1q2(x2,x3)x4+q2(x1,x2,x3)x4^2+q1(x1,x2,x3)x4^3)', ''),
    ('US1-D', 'x0(q4(x2,x3,x4)+q1,3(x1,x2|x3,x4)+q4(x3,x4)+x1x2x4^2)', 'common factor x0 of the context restored'),
    ('US2-D', 'x0(x2^2x3x4+q1,3(x1,x2|x3,x4)+q4(x3,x4)+q2(x1,x2,x3)x4^2+q1(x1,x2,x3)x4^3)', 'common factor x0 of the context restored'),
    ('US3-D', 'x0(x2q3(x3,x4)+q4(x3,x4)+q3(x2,x3)x4+q2(x2,x3)x4^2+q1(x2,x3)x4^3+q1(x1,x2)x3^2x4+q2(x1,x2,x3)x4^2+q1(x1,x2,x3)x4^3)', 'common factor x0 of the context restored'),
    ('SS1-I', 'x0^2(x2x4^2)+x0x1(x2x3x4)', ''),
    ('SS2-I', 'x0x1(x2x3x4)+x1^2(x2x3^2)', ''),
    ('US1-I', 'x0^2x2x4^2', ''),
    ('US2-I', 'x1^2x2x3^2', ''),
    ('SS1-II', 'x0^2(x3x4^2)+x0x1(x3^3+x2x3x4)', ''),
    ('SS2-II', 'x0x1(x3^3+x2x3x4)+x1^2(x2^2x3)', ''),
    ('SS3-II', 'x0x1(x2x3x4)+x1^2(x2^2x3)', ''),
    ('SS4-II', 'x0^2(x3x4^2)+x0x1(x2x3x4)', ''),
    ('SS5-II', 'x0x1(x3^3+x2x3x4)', ''),
    ('SS6-II', 'x0x1(x2x3x4)', ''),
    ('US1-II', 'x0^2x3x4^2+x0x1x3^2', ''),
    ('US2-II', 'x0x1x3^2+x1^2x2^2x3', ''),
    ('US3-II', 'x0x1x3^2', ''),
    ('US4-II', 'x0^2x3x4^2', ''),
    ('US5-II', 'x1^2x2^2x3', ''),
    ('SS1-III', 'x0^2(x2x4^2+x3^2x4)+x0x1(x3^3+x2x3x4)', ''),
    ('SS2-III', 'x0x1(x3^3+x2x3x4)+x1^2(x2x3^2+x2^2x4)', ''),
    ('SS3-III', 'x0^2(x2x4^2+x3^2x4)+x0x1(x2x3x4)', ''),
    ('SS4-III', 'x0x1(x2x3x4)+x1^2(x2x3^2+x2^2x4)', ''),
    ('SS5-III', 'x0^2(x3^2x4)+x0x1(x3^3+x2x3x4)+x1^2(x2x3^2)', ''),
    ('SS6-III', 'x0^2(x3^2x4)+x0x1(x2x3x4)+x1^2(x2x3^2)', ''),
    ('SS7-III', 'x0^2(x2x4^2)+x0x1(x2x3x4)+x1^2(x2^2x4)', ''),
    ('SS8-III', 'x0^2(x2x4^2)+x0x1(x3^3+x2x3x4)', ''),
    ('SS9-III', 'x0^2(x3^2x4)+x0x1(x3^3+x2x3x4)', ''),
    ('SS10-III', 'x0x1(x3^3+x2x3x4)+x1^2(x2^2x4)', ''),
    ('SS11-III', 'x0x1(x3^3+x2x3x4)+x1^2(x2x3^2)', ''),
    ('SS12-III', 'x0x1(x2x3x4)+x1^2(x2^2x4)', ''),
    ('SS13-III', 'x0x1(x2x3x4)+x1^2(x2x3^2)', ''),
    ('SS14-III', 'x0^2(x2x4^2)+x0x1(x2x3x4)', ''),
    ('SS15-III', 'x0^2(x3^2x4)+x0x1(x2x3x4)', ''),
    ('SS16-III', 'x0x1(x3^3+x2x3x4)', ''),
    ('SS17-III', 'x0x1(x2x3x4)', ''),
    ('US1-III', 'x0^2(x2x4^2+x3^2x4)+x0x1(x3^3)', ''),
    ('US2-III', 'x0x1(x3^3)+x1^2(x2x3^2+x2^2x4)', "dangling '+' removed"),
    ('US3-III', 'x0^2(x3^2x4)+x0x1(x3^3)+x1^2(x2x3^2)', ''),
    ('US4-III', 'x0^2(x2x4^2)+x0x1(x3^3)+x1^2(x2^2x4)', ''),
    ('US5-III', 'x0^2(x2x4^2+x3^2x4)', ''),
    ('US6-III', 'x1^2(x2x3^2+x2^2x4)', ''),
    ('US7-III', 'x0^2(x3^2x4)+x1^2(x2x3^2)', ''),
    ('US8-III', 'x0^2(x2x4^2)+x1^2(x2^2x4)', ''),
    ('US9-III', 'x0^2(x2x4^2)+x0x1(x3^3)', ''),
    ('US10-III', 'x0x1(x3^3)+x1^2(x2^2x4)', "dangling '+' removed"),
    ('US11-III', 'x0^2(x3^2x4)+x0x1(x3^3)', ''),
    ('US12-III', 'x0x1(x3^3)+x1^2(x2x3^2)', "dangling '+' removed"),
    ('US13-III', 'x0^2(x2x4^2)', ''),
    ('US14-III', 'x0^2(x3^2x4)', ''),
    ('US15-III', 'x0x1(x3^3)', ''),
    ('US16-III', 'x1^2(x2x3^2)', ''),
    ('US17-III', 'x1^2(x2^2x4)', ''),
    ('SS1-IV', 'x0x4(x1x2x3+x1x3^2)', ''),
    ('US1-IV', 'x0x4x1x3^2', ''),
    ('SS1-V', 'x0x4x2x3x1', ''),
    ('SS1-VI', '(x1x2^3x3+x1^2x2x3^2)+x0x4(x1x2x3)', ''),
    ('SS2-VI', '(x1x2^3x3)+x0x4(x1x2x3)', ''),
    ('SS3-VI', '(x1^2x2x3^2)+x0x4(x1x2x3)', ''),
    ('SS4-VI', 'x0x4(x1x2x3)', ''),
    ('US1-VI', '(x1x2^3x3+x1^2x2x3^2)', ''),
    ('US2-VI', '(x1x2^3x3)', ''),
    ('US3-VI', '(x1^2x2x3^2)', ''),
    ('SS1-VII', 'x4x0^2x3^2+x4x0x1x2x3', ''),
    ('SS2-VII', 'x4x0x1x2x3+x4x1^2x2^2', ''),
    ('SS3-VII', 'x4x0x1x2x3', ''),
    ('US1-VII', 'x4x1^2x2^2', ''),
    ('US2-VII', 'x4x0^2x3^2', ''),
    ('SS1-VIII', 'x0x1(x2q2(x3,x4)+q3(x3,x4))', ''),
    ('SS2-VIII', 'x0x1(q2(x2,x3)x4+q1(x2,x3)x4^2+x4^3)', ''),
    ('US1-VIII', 'x0x1(q3(x3,x4)+x2x4^2)', ''),
    ('SS1-IX', 'x0(x1x2+x2^2)(x3x4+x4^2)', 'bidegree bar read as a product of the two factors'),
    ('US1-IX', 'x0(x2^2)(x3x4+x4^2)', 'bidegree bar read as a product of the two factors'),
    ('US2-IX', 'x0(x1x2+x2^2)(x4^2)', 'bidegree bar read as a product of the two factors'),
    ('US3-IX', 'x0(x2^2)(x4^2)', 'bidegree bar read as a product of the two factors'),
    ('SS1-X', 'x0(q4(x2,x3)+x1(x2x3+x3^2)x4+x1^2x4^2)', ''),
    ('SS2-X', 'x0(q4(x2,x3)+x1(x2x3+x2^2)x4+x1^2x4^2)', ''),
    ('US1-X', 'x0(x2^2x3^2+x2x3^3+x3^4+x1x3^2x4+x1^2x4^2)', ''),
    ('US2-X', 'x0(x2x3^3+x3^4+x1(x2x3+x3^2)x4+x1^2x4^2)', ''),
))


@dataclass(frozen=True)
class Expansion:
    support: frozenset
    dropped: tuple[Monomial, ...]  # terms of the wrong degree


@lru_cache(maxsize=None)
def expand(expression: str) -> Expansion:
    raw = parse_support(expression, N_VARS)
    keep = frozenset(m for m in raw if sum(m) == DEGREE)
    return Expansion(keep, tuple(sorted(raw - keep, reverse=True)))


def top_support(label: str) -> frozenset:
    return expand(next(f for f in TOP_FAMILIES if f.label == label).expression).support


def orbit_support(label: str) -> frozenset:
    if label not in MINIMAL_ORBITS:
        raise KeyError(f"unknown family {label!r}")
    return expand(MINIMAL_ORBITS[label]).support


def sub_family(label: str) -> SubFamily:
    for f in SUB_FAMILIES:
        if f.label == label:
            return f
    raise KeyError(f"unknown family {label!r}")


def sub_families(context: str, unstable: bool | None = None) -> list[SubFamily]:
    return [f for f in SUB_FAMILIES if f.context == context and (unstable is None or f.unstable == unstable)]
