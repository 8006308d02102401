# models/group_params.py
import sys
import os
# Adiciona o diretório raiz do projeto ao path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from math import factorial
from typing import Optional
from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from utils.error_handler import ParameterError


class GroupParams(BaseModel):
    """Parâmetros (e, n) do grupo G(e,e,n) e, quando há um intervalo fixado, o expoente k de λ^k."""

    model_config = ConfigDict(frozen=True)

    e: int
    n: int
    k: Optional[int] = None

    @model_validator(mode="after")
    def _validar_intervalos(self) -> "GroupParams":
        if self.e < 2:
            raise ValueError(f"e deve ser >= 2 (recebido {self.e})")
        if self.n < 2:
            raise ValueError(f"n deve ser >= 2 (recebido {self.n})")
        if self.k is not None and not 1 <= self.k <= self.e - 1:
            raise ValueError(f"k deve estar entre 1 e e-1={self.e - 1} (recebido {self.k})")
        return self

    @classmethod
    def build(cls, e: int, n: int, k: Optional[int] = None) -> "GroupParams":
        """Cria os parâmetros convertendo erros de validação em ParameterError"""
        try:
            return cls(e=e, n=n, k=k)
        except ValidationError as exc:
            mensagens = "; ".join(err["msg"] for err in exc.errors())
            raise ParameterError(mensagens, e=e, n=n, k=k) from exc

    @classmethod
    def from_dict(cls, data: dict) -> "GroupParams":
        return cls.build(int(data["e"]), int(data["n"]), data.get("k"))

    def to_dict(self) -> dict:
        data = {"e": self.e, "n": self.n}
        if self.k is not None:
            data["k"] = self.k
        return data

    @property
    def order(self) -> int:
        """|G(e,e,n)| = e^(n-1) · n!"""
        return self.e ** (self.n - 1) * factorial(self.n)

    @property
    def max_length(self) -> int:
        """Comprimento de λ^k, o maior comprimento em G(e,e,n)"""
        return self.n * (self.n - 1)

    @property
    def atom_count(self) -> int:
        return self.e + self.n - 2

    def with_k(self, k: int) -> "GroupParams":
        return GroupParams.build(self.e, self.n, k)

    def without_k(self) -> "GroupParams":
        return GroupParams.build(self.e, self.n)

    def require_k(self) -> int:
        if self.k is None:
            raise ParameterError("Operação exige k (intervalo [1, λ^k])", e=self.e, n=self.n)
        return self.k

    @property
    def label(self) -> str:
        base = f"e={self.e},n={self.n}"
        return base if self.k is None else f"{base},k={self.k}"

    def __repr__(self):
        return f"<GroupParams {self.label}>"
