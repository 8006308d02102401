# models/garside_structure.py
import sys
import os
# Adiciona o diretório raiz do projeto ao path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from models.group_element import Generator
from models.group_params import GroupParams
from models.interval import Interval
from models.word import Relation


@dataclass(frozen=True, eq=False)
class GarsideStructure:
    """
    Monoide de intervalo M([1, λ^k]) com Δ = λ^k. As tabelas são indexadas pelos ordinais do intervalo:
    complement[s] = ∂(s) = s^{-1}Δ, left_complement[s] = ∂'(s) = Δs^{-1}, tau[s] = Δ^{-1}sΔ.
    """
    interval: Interval
    complement: Tuple[int, ...]
    left_complement: Tuple[int, ...]
    tau: Tuple[int, ...]
    tau_inverse: Tuple[int, ...]

    @property
    def params(self) -> GroupParams:
        return self.interval.params

    @property
    def delta(self) -> int:
        return self.interval.delta

    @property
    def identity(self) -> int:
        return self.interval.identity

    @property
    def tau_is_trivial(self) -> bool:
        return all(s == t for s, t in enumerate(self.tau))

    def __repr__(self):
        return f"<GarsideStructure {self.params.label} simples={len(self.interval)}>"


@dataclass(frozen=True)
class NormalForm:
    """Forma normal gulosa à esquerda: Δ^delta_power · factors[0] ⋯ factors[-1]"""
    delta_power: int = 0
    factors: Tuple[int, ...] = ()

    def to_dict(self, interval: Interval) -> dict:
        return {
            "delta_power": self.delta_power,
            "factors": [interval.element(s).to_dict() for s in self.factors],
        }


@dataclass(frozen=True)
class Presentation:
    params: GroupParams
    generators: Tuple[Generator, ...]
    relations: Tuple[Relation, ...]

    def counts(self) -> Dict[str, int]:
        return dict(Counter(r.kind for r in self.relations))

    def to_dict(self) -> dict:
        return {
            "params": self.params.to_dict(),
            "generators": [str(x) for x in self.generators],
            "relations": [r.to_dict() for r in self.relations],
            "counts": self.counts(),
        }


@dataclass(frozen=True)
class IsomorphismWitness:
    """Mapa t_i -> t_{(i+1)k}, s_j -> s_j do monoide CP para B^⊕k(e,e,n), quando k ∧ e = 1"""
    e: int
    k: int
    n: int
    isomorphic: bool
    mapping: Dict[Generator, Generator] = field(default_factory=dict)
    relations_preserved: bool = False
    inverse_relations_preserved: bool = False
    bijective_on_generators: bool = False
    failed_relations: List[str] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        if not self.isomorphic:
            return True
        return self.relations_preserved and self.inverse_relations_preserved and self.bijective_on_generators

    def to_dict(self) -> dict:
        return {
            "e": self.e,
            "k": self.k,
            "n": self.n,
            "isomorphic": self.isomorphic,
            "mapping": {str(x): str(y) for x, y in self.mapping.items()},
            "relations_preserved": self.relations_preserved,
            "inverse_relations_preserved": self.inverse_relations_preserved,
            "bijective_on_generators": self.bijective_on_generators,
            "failed_relations": list(self.failed_relations),
        }
