import sys
import os
# Adiciona o diretório raiz do projeto ao path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))

import pytest
from models.run_config import RegressionRecord
from repositories.regression_repository import RegressionRepository
from utils.error_handler import ArquivoError


@pytest.fixture
def repositorio(tmp_path):
    return RegressionRepository(str(tmp_path / "dados" / "regressoes.jsonl"))


def test_arquivo_inexistente_carrega_vazio(repositorio):
    assert repositorio.carregar() == {}


def test_garantir_arquivo_cria_diretorio(repositorio):
    repositorio.garantir_arquivo()
    assert os.path.exists(repositorio.path)
    assert repositorio.carregar() == {}


def test_acrescentar_e_carregar(repositorio):
    repositorio.acrescentar([
        RegressionRecord(key="interval:e=3,n=3,k=1", value='{"size":35}'),
        RegressionRecord(key="tau:e=3,n=3,k=1", value='{"trivial":true}'),
    ])
    repositorio.acrescentar([])
    registros = repositorio.carregar()
    assert set(registros) == {"interval:e=3,n=3,k=1", "tau:e=3,n=3,k=1"}
    assert registros["interval:e=3,n=3,k=1"].value == '{"size":35}'

    with open(repositorio.path, encoding="utf-8") as arquivo:
        primeira = arquivo.readline().strip()
    # JSON canônico: chaves ordenadas e sem espaços
    assert primeira.startswith('{"key":"interval:e=3,n=3,k=1","value":')


def test_linhas_em_branco_sao_ignoradas(repositorio):
    repositorio.garantir_arquivo()
    with open(repositorio.path, "w", encoding="utf-8") as arquivo:
        arquivo.write('\n{"key":"a","value":"1"}\n\n')
    registros = repositorio.carregar()
    assert registros["a"].value == "1"


@pytest.mark.parametrize("linha", ["{nao e json", '{"value":"1"}'])
def test_linha_corrompida(repositorio, linha):
    repositorio.garantir_arquivo()
    with open(repositorio.path, "w", encoding="utf-8") as arquivo:
        arquivo.write(linha + "\n")
    with pytest.raises(ArquivoError):
        repositorio.carregar()
