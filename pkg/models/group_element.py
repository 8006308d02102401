# models/group_element.py
import sys
import os
# Adiciona o diretório raiz do projeto ao path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import re
from dataclasses import dataclass
from typing import Tuple

from models.group_params import GroupParams
from utils.error_handler import ParameterError, InvalidTokenError

_TOKEN_GERADOR = re.compile(r"^([ts])(\d+)$")


@dataclass(frozen=True)
class Generator:
    """
    Átomo do conjunto CP: T(i) com i em Z/eZ ou S(j) com 3 <= j <= n.
    """
    kind: str   # "T" ou "S"
    index: int

    @classmethod
    def T(cls, i: int) -> "Generator":
        return cls("T", i)

    @classmethod
    def S(cls, j: int) -> "Generator":
        return cls("S", j)

    @classmethod
    def parse(cls, token: str) -> "Generator":
        """Converte 't0', 's3' etc. em Generator (sem validar contra e, n)"""
        match = _TOKEN_GERADOR.match(token.strip())
        if not match:
            raise InvalidTokenError(token)
        letra, numero = match.groups()
        return cls("T" if letra == "t" else "S", int(numero))

    @property
    def is_t(self) -> bool:
        return self.kind == "T"

    @property
    def is_s(self) -> bool:
        return self.kind == "S"

    @property
    def dl_key(self) -> Tuple[int, int]:
        """Ordem s_n < ... < s_3 < t_0 < ... < t_{e-1} usada nas células"""
        return (1, self.index) if self.is_t else (0, -self.index)

    def is_valid_for(self, params: GroupParams) -> bool:
        if self.is_t:
            return 0 <= self.index < params.e
        return 3 <= self.index <= params.n

    def validate(self, params: GroupParams) -> "Generator":
        if not self.is_valid_for(params):
            raise InvalidTokenError(str(self), f"fora do intervalo para {params.label}")
        return self

    def __str__(self):
        return f"{self.kind.lower()}{self.index}"

    def __repr__(self):
        return f"<Generator {self}>"


@dataclass(frozen=True)
class GroupElement:
    """
    Matriz monomial de G(e,e,n): a linha i tem a entrada não nula na coluna perm[i-1]
    com valor ζ_e^{exps[i-1]}. Índices 1-based, expoentes mod e.
    """
    e: int
    perm: Tuple[int, ...]
    exps: Tuple[int, ...]

    def __post_init__(self):
        n = len(self.perm)
        if len(self.exps) != n:
            raise ParameterError("perm e exps com tamanhos diferentes", perm=self.perm, exps=self.exps)
        if sorted(self.perm) != list(range(1, n + 1)):
            raise ParameterError(f"perm não é permutação de 1..{n}", perm=self.perm)
        if any(not 0 <= a < self.e for a in self.exps):
            raise ParameterError(f"expoentes devem estar em 0..{self.e - 1}", exps=self.exps)
        if sum(self.exps) % self.e != 0:
            raise ParameterError("soma dos expoentes não é 0 mod e", exps=self.exps, e=self.e)

    @classmethod
    def unchecked(cls, e: int, perm: Tuple[int, ...], exps: Tuple[int, ...]) -> "GroupElement":
        """Construção sem validação, para valores já produzidos pela aritmética do grupo"""
        obj = object.__new__(cls)
        object.__setattr__(obj, "e", e)
        object.__setattr__(obj, "perm", perm)
        object.__setattr__(obj, "exps", exps)
        return obj

    @classmethod
    def from_lists(cls, e: int, perm, exps) -> "GroupElement":
        return cls(e, tuple(int(c) for c in perm), tuple(int(a) % e for a in exps))

    @classmethod
    def from_dict(cls, data: dict) -> "GroupElement":
        perm = data.get("perm", [])
        if "n" in data and int(data["n"]) != len(perm):
            raise ParameterError("n não confere com o tamanho de perm", n=data["n"], perm=perm)
        return cls.from_lists(int(data["e"]), perm, data.get("exps", []))

    def to_dict(self) -> dict:
        return {"e": self.e, "n": self.n, "perm": list(self.perm), "exps": list(self.exps)}

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def params(self) -> GroupParams:
        return GroupParams.build(self.e, self.n)

    def column(self, row: int) -> int:
        """c_i: coluna da entrada não nula da linha i"""
        return self.perm[row - 1]

    def exponent(self, row: int) -> int:
        """ε(i), com a_i = ζ_e^{ε(i)}"""
        return self.exps[row - 1]

    @property
    def is_diagonal(self) -> bool:
        return all(c == i for i, c in enumerate(self.perm, start=1))

    def __repr__(self):
        return f"<GroupElement e={self.e} perm={list(self.perm)} exps={list(self.exps)}>"
