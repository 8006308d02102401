# models/run_config.py
import sys
import os
# Adiciona o diretório raiz do projeto ao path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from typing import Literal, Optional
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from config.settings import settings
from models.group_params import GroupParams
from utils.error_handler import ParameterError


class RunConfig(BaseModel):
    """Parâmetros de uma execução: (e, n, k), limites, formato de saída e semente"""

    model_config = ConfigDict(frozen=True)

    e: int
    n: int
    k: Optional[int] = None
    group_cap: int = Field(default_factory=lambda: settings.GROUP_CAP, gt=0)
    rewrite_cap: int = Field(default_factory=lambda: settings.REWRITE_CAP, gt=0)
    recursion_cap: int = Field(default_factory=lambda: settings.RECURSION_CAP, gt=0)
    output_format: Literal["json", "dot", "text"] = "json"
    seed: int = Field(default_factory=lambda: settings.SEED)

    @classmethod
    def build(cls, **dados) -> "RunConfig":
        try:
            config = cls(**{k: v for k, v in dados.items() if v is not None})
        except ValidationError as exc:
            mensagens = "; ".join(err["msg"] for err in exc.errors())
            raise ParameterError(mensagens, **{k: v for k, v in dados.items() if k in ("e", "n", "k")}) from exc
        _ = config.params  # valida (e, n, k)
        return config

    @property
    def params(self) -> GroupParams:
        return GroupParams.build(self.e, self.n, self.k)

    @property
    def key(self) -> str:
        return self.params.label

    def to_dict(self) -> dict:
        return self.model_dump()


class RegressionRecord(BaseModel):
    """Registro congelado: chave (comando + parâmetros), valor JSON canônico e versão da ferramenta"""

    model_config = ConfigDict(frozen=True)

    key: str
    value: str
    version: str = settings.VERSION

    @classmethod
    def from_dict(cls, data: dict) -> "RegressionRecord":
        return cls(key=data["key"], value=data["value"], version=data.get("version", settings.VERSION))

    def to_dict(self) -> dict:
        return {"key": self.key, "value": self.value, "version": self.version}
