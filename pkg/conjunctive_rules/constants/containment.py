from enum import Enum


class ContainmentRelation(Enum):
    EQUIVALENT = 'equivalent'
    FIRST_IN_SECOND = 'q1 ⊂ q2'
    SECOND_IN_FIRST = 'q2 ⊂ q1'
    FIRST_DIAGONALLY_IN_SECOND = 'q1 ⊂Δ q2 (diagonal only)'
    SECOND_DIAGONALLY_IN_FIRST = 'q2 ⊂Δ q1 (diagonal only)'
    INCOMPARABLE = 'incomparable'
