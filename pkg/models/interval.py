# models/interval.py
import sys
import os
# Adiciona o diretório raiz do projeto ao path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

from models.group_element import Generator, GroupElement
from models.group_params import GroupParams
from utils.error_handler import ParameterError


class Side(Enum):
    LEFT = "left"     # ⪯  : a ⪯ b se b = a·c com comprimentos somando
    RIGHT = "right"   # ⪯_r: a ⪯_r b se b = c·a com comprimentos somando


class _NoCommonBound:
    """Sentinela: os dois elementos não têm cota comum"""
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NoCommonBound"

    def __bool__(self):
        return False


NO_COMMON_BOUND = _NoCommonBound()


@dataclass(frozen=True)
class LatticeViolation:
    """Par cujo encontro/junção não é único; antichain = elementos maximais (ou minimais) encontrados"""
    side: Side
    operation: str
    pair: Tuple[int, int]
    antichain: Tuple[int, ...]

    def describe(self) -> str:
        return (
            f"{self.operation} ({self.side.value}) de {self.pair} "
            f"não é único: candidatos {list(self.antichain)}"
        )

    def to_dict(self) -> dict:
        return {
            "side": self.side.value,
            "operation": self.operation,
            "pair": list(self.pair),
            "antichain": list(self.antichain),
        }


@dataclass(frozen=True)
class LatticeReport:
    is_meet_lattice_left: bool
    is_join_lattice_left: bool
    is_meet_lattice_right: bool
    is_join_lattice_right: bool
    pairs_checked: int = 0
    counterexample: Optional[Tuple[int, int]] = None
    violation: Optional[LatticeViolation] = None

    @property
    def ok(self) -> bool:
        return all((
            self.is_meet_lattice_left, self.is_join_lattice_left,
            self.is_meet_lattice_right, self.is_join_lattice_right,
        ))

    def to_dict(self) -> dict:
        return {
            "is_meet_lattice_left": self.is_meet_lattice_left,
            "is_join_lattice_left": self.is_join_lattice_left,
            "is_meet_lattice_right": self.is_meet_lattice_right,
            "is_join_lattice_right": self.is_join_lattice_right,
            "pairs_checked": self.pairs_checked,
            "counterexample": list(self.counterexample) if self.counterexample else None,
            "violation": self.violation.to_dict() if self.violation else None,
        }


@dataclass(frozen=True, eq=False)
class Interval:
    """
    O intervalo [1, λ^k] = D_k com as relações de divisibilidade em bitsets sobre os ordinais.

    left_up[a]    = {b : a ⪯ b}       left_down[a]  = {b : b ⪯ a}
    right_up[a]   = {b : a ⪯_r b}     right_down[a] = {b : b ⪯_r a}
    """
    params: GroupParams
    elements: Tuple[GroupElement, ...]
    index: Dict[GroupElement, int]
    lengths: Tuple[int, ...]
    left_up: Tuple[int, ...]
    left_down: Tuple[int, ...]
    right_up: Tuple[int, ...]
    right_down: Tuple[int, ...]
    atoms: Dict[Generator, int]
    identity: int
    delta: int
    left_covers: Tuple[Tuple[Tuple[Generator, int], ...], ...] = field(default=())

    @property
    def k(self) -> int:
        return self.params.require_k()

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, w: GroupElement) -> bool:
        return w in self.index

    def ordinal(self, w: GroupElement) -> int:
        try:
            return self.index[w]
        except KeyError:
            raise ParameterError("Elemento fora do intervalo", elemento=w.to_dict(), params=self.params.label)

    def element(self, ordinal: int) -> GroupElement:
        return self.elements[ordinal]

    def up(self, side: Side) -> Tuple[int, ...]:
        return self.left_up if side == Side.LEFT else self.right_up

    def down(self, side: Side) -> Tuple[int, ...]:
        return self.left_down if side == Side.LEFT else self.right_down

    def divides(self, side: Side, a: int, b: int) -> bool:
        """a ⪯ b (ou a ⪯_r b) entre membros"""
        return bool((self.up(side)[a] >> b) & 1)

    def atom_of(self, x: Generator) -> int:
        return self.atoms[x]

    def __repr__(self):
        return f"<Interval {self.params.label} |D_k|={len(self.elements)}>"
