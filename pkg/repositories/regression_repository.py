# repositories/regression_repository.py
import sys
import os
# Adiciona o diretório raiz do projeto ao path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import json
from typing import Dict, List

from models.run_config import RegressionRecord
from utils.error_handler import ArquivoError
from utils.helpers import canonical_json
from utils.logger import logger


class RegressionRepository:
    """Arquivo de regressão em linhas JSON canônicas, somente acréscimo"""

    def __init__(self, path: str):
        self.path = path

    def carregar(self) -> Dict[str, RegressionRecord]:
        if not os.path.exists(self.path):
            return {}
        registros: Dict[str, RegressionRecord] = {}
        try:
            with open(self.path, "r", encoding="utf-8") as arquivo:
                for linha in arquivo:
                    linha = linha.strip()
                    if not linha:
                        continue
                    registro = RegressionRecord.from_dict(json.loads(linha))
                    registros[registro.key] = registro
        except (OSError, ValueError, KeyError) as exc:
            raise ArquivoError(self.path, exc)
        logger.debug("Registros de regressão carregados", self.path, total=len(registros))
        return registros

    def acrescentar(self, registros: List[RegressionRecord]):
        if not registros:
            return
        diretorio = os.path.dirname(self.path)
        try:
            if diretorio:
                os.makedirs(diretorio, exist_ok=True)
            with open(self.path, "a", encoding="utf-8") as arquivo:
                for registro in registros:
                    arquivo.write(canonical_json(registro.to_dict()) + "\n")
        except OSError as exc:
            raise ArquivoError(self.path, exc)
        for registro in registros:
            logger.log_regressao(registro.key, "gravada")

    def garantir_arquivo(self):
        """Cria o arquivo vazio se ainda não existe"""
        try:
            diretorio = os.path.dirname(self.path)
            if diretorio:
                os.makedirs(diretorio, exist_ok=True)
            if not os.path.exists(self.path):
                open(self.path, "w", encoding="utf-8").close()
        except OSError as exc:
            raise ArquivoError(self.path, exc)
