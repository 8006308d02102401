import sys
import os
# Adiciona o diretório raiz do projeto ao path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))

import pytest
from config.settings import settings
from models.run_config import RegressionRecord, RunConfig
from utils.error_handler import ParameterError


def test_config_padrao_vem_do_settings(monkeypatch):
    monkeypatch.setenv("GARSIDE_CAP", "1234")
    config = RunConfig.build(e=3, n=3, k=1)
    assert config.group_cap == 1234
    assert config.output_format == "json"
    assert config.key == "e=3,n=3,k=1"


def test_none_usa_padrao():
    config = RunConfig.build(e=3, n=3, k=None, group_cap=None, output_format=None)
    assert config.k is None
    assert config.group_cap == settings.GROUP_CAP


@pytest.mark.parametrize("dados", [
    {"e": 3, "n": 3, "group_cap": 0},
    {"e": 3, "n": 3, "output_format": "xml"},
    {"e": 3, "n": 3, "k": 3},
    {"e": 1, "n": 3},
])
def test_config_invalida(dados):
    with pytest.raises(ParameterError):
        RunConfig.build(**dados)


def test_registro_de_regressao():
    registro = RegressionRecord.from_dict({"key": "interval:e=3,n=3,k=1", "value": '{"size":35}'})
    assert registro.version == settings.VERSION
    assert registro.to_dict()["value"] == '{"size":35}'
