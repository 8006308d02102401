import sys
import os
# Adiciona o diretório raiz do projeto ao path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))

import pytest
from models.group_params import GroupParams
from utils.error_handler import ParameterError


def test_parametros_basicos():
    params = GroupParams.build(3, 3, 1)
    assert params.order == 54
    assert params.max_length == 6
    assert params.atom_count == 4
    assert params.label == "e=3,n=3,k=1"
    assert params.to_dict() == {"e": 3, "n": 3, "k": 1}


def test_sem_k_nao_serializa_k():
    params = GroupParams.build(4, 2)
    assert params.to_dict() == {"e": 4, "n": 2}
    assert params.label == "e=4,n=2"


@pytest.mark.parametrize("e, n, k", [(1, 3, None), (3, 1, None), (3, 3, 0), (3, 3, 3)])
def test_parametros_invalidos(e, n, k):
    with pytest.raises(ParameterError):
        GroupParams.build(e, n, k)


def test_require_k():
    assert GroupParams.build(5, 3, 2).require_k() == 2
    with pytest.raises(ParameterError):
        GroupParams.build(5, 3).require_k()


def test_with_e_without_k():
    params = GroupParams.build(6, 3)
    assert params.with_k(4).k == 4
    assert params.with_k(4).without_k() == params
    with pytest.raises(ParameterError):
        params.with_k(6)


def test_from_dict():
    assert GroupParams.from_dict({"e": 3, "n": 4, "k": 2}) == GroupParams.build(3, 4, 2)
