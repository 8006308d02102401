# config/settings.py
import sys
import os
# Adiciona o diretório raiz do projeto ao path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from dotenv import load_dotenv

load_dotenv()


def _env_int(nome: str, padrao: int) -> int:
    valor = os.getenv(nome)
    if valor is None or valor.strip() == "":
        return padrao
    return int(valor)


def _env_bool(nome: str, padrao: bool = False) -> bool:
    valor = os.getenv(nome)
    if valor is None:
        return padrao
    return valor.strip().lower() in ("1", "true", "sim", "yes", "on")


class Settings:
    VERSION = "1.0.0"

    DEFAULT_GROUP_CAP = 1_000_000
    DEFAULT_REWRITE_CAP = 100_000
    DEFAULT_RECURSION_CAP = 5_000
    DEFAULT_PAIR_CAP = 10_000_000
    DEFAULT_GRID_GROUP_CAP = 100_000
    DEFAULT_SAMPLES = 10_000

    LOG_FILE = os.getenv("GARSIDE_LOG_FILE", "logs/garside.log")
    REGRESSION_FILE = os.getenv("GARSIDE_REGRESSION_FILE", "data/regressions.jsonl")

    # Os limites são lidos a cada acesso para que GARSIDE_CAP possa ser trocado em tempo de execução
    @property
    def GROUP_CAP(self) -> int:
        """Limite de elementos ao enumerar G(e,e,n)"""
        return _env_int("GARSIDE_CAP", self.DEFAULT_GROUP_CAP)

    @property
    def REWRITE_CAP(self) -> int:
        """Limite de palavras na reescrita (BFS) e na busca de expressões reduzidas"""
        return _env_int("GARSIDE_REWRITE_CAP", self.DEFAULT_REWRITE_CAP)

    @property
    def RECURSION_CAP(self) -> int:
        """Profundidade máxima da recursão do diferencial genérico"""
        return _env_int("GARSIDE_RECURSION_CAP", self.DEFAULT_RECURSION_CAP)

    @property
    def PAIR_CAP(self) -> int:
        """Limite de |D_k|² para a verificação de reticulado na grade padrão"""
        return _env_int("GARSIDE_PAIR_CAP", self.DEFAULT_PAIR_CAP)

    @property
    def GRID_GROUP_CAP(self) -> int:
        """Limite de |G| para a grade padrão de regressão"""
        return _env_int("GARSIDE_GRID_GROUP_CAP", self.DEFAULT_GRID_GROUP_CAP)

    @property
    def SAMPLES(self) -> int:
        """Palavras aleatórias da suíte garside"""
        return _env_int("GARSIDE_SAMPLES", self.DEFAULT_SAMPLES)

    @property
    def DEBUG(self) -> bool:
        return _env_bool("GARSIDE_DEBUG")

    @property
    def SEED(self) -> int:
        """Semente das verificações por amostragem"""
        return _env_int("GARSIDE_SEED", 0)


settings = Settings()
