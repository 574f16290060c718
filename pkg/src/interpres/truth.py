"""Three-valued truth values with witnesses and counterexamples.

A definite ``true`` carries the witnesses chosen at existential quantifiers
on the accepting path; a definite ``false`` carries the instantiations of
universal quantifiers on the refuting path.  ``unknown`` records the bound
that was in force when the search gave up, plus a short note saying how the
search ended (e.g. every enumerated instance of a universal held, but the
carrier is infinite).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

TRUE = "true"
FALSE = "false"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class TruthValue3:
    status: str
    witness: tuple[tuple[str, Any], ...] = ()
    counterexample: tuple[tuple[str, Any], ...] = ()
    bound: Any = None
    note: str = ""

    @property
    def is_true(self) -> bool:
        return self.status == TRUE

    @property
    def is_false(self) -> bool:
        return self.status == FALSE

    @property
    def is_unknown(self) -> bool:
        return self.status == UNKNOWN

    @property
    def definite(self) -> bool:
        return self.status != UNKNOWN

    def __bool__(self) -> bool:
        raise TypeError(
            "TruthValue3 is three-valued; test .is_true / .is_false explicitly"
        )

    def negate(self) -> "TruthValue3":
        if self.is_true:
            return TruthValue3(FALSE, counterexample=self.witness, note=self.note)
        if self.is_false:
            return TruthValue3(TRUE, witness=self.counterexample, note=self.note)
        return self


def t3_true(witness: tuple[tuple[str, Any], ...] = ()) -> TruthValue3:
    return TruthValue3(TRUE, witness=witness)


def t3_false(counterexample: tuple[tuple[str, Any], ...] = ()) -> TruthValue3:
    return TruthValue3(FALSE, counterexample=counterexample)


def t3_unknown(bound: Any = None, note: str = "") -> TruthValue3:
    return TruthValue3(UNKNOWN, bound=bound, note=note)


def t3_from_bool(value: bool) -> TruthValue3:
    return t3_true() if value else t3_false()
