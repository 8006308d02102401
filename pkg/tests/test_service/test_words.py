import sys
import os
# Adiciona o diretório raiz do projeto ao path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))

import pytest
from models.group_element import Generator, GroupElement
from models.group_params import GroupParams
from services.geen_core import (
    enumerate_group, evaluate, generator_matrix, generators, identity, lambda_power, multiply,
)
from services.words import (
    all_reduced_expressions, cayley_distances, length, length_decreases, maximal_length_elements,
    reduced_expression, reduced_expression_blockwise, right_length_decreases,
)
from utils.error_handler import CapExceededError

T, S = Generator.T, Generator.S


@pytest.fixture
def exemplo():
    '''Elemento de G(3,3,4) com σ=[4,2,3,1] e ε=[0,2,1,0]'''
    return GroupElement(3, (4, 2, 3, 1), (0, 2, 1, 0))


def test_expressao_reduzida_do_exemplo(exemplo):
    palavra = reduced_expression(exemplo)
    assert str(palavra) == "t0 s3 t1 t0 s4 s3 t0"
    assert length(exemplo) == 7
    assert evaluate(palavra, GroupParams.build(3, 4)) == exemplo


def test_blocos_do_exemplo(exemplo):
    blocos = reduced_expression_blockwise(exemplo)
    assert str(blocos.block(2).word) == "t0"
    assert str(blocos.block(3).word) == "s3 t1 t0"
    assert str(blocos.block(4).word) == "s4 s3 t0"
    assert blocos.word() == reduced_expression(exemplo)


def test_identidade_tem_palavra_vazia():
    params = GroupParams.build(4, 3)
    w = identity(params)
    assert len(reduced_expression(w)) == 0
    assert all(len(b.word) == 0 for b in reduced_expression_blockwise(w).blocks)
    assert all(not length_decreases(x, w) for x in generators(params))


def test_expressao_de_lambda():
    params = GroupParams.build(3, 4)
    assert str(reduced_expression(lambda_power(params, 1))) == "t1 t0 s3 t1 t0 s3 s4 s3 t1 t0 s3 s4"


@pytest.mark.parametrize("e, n", [(3, 3), (4, 3)])
def test_blocos_concordam_com_o_algoritmo(e, n):
    for w in enumerate_group(GroupParams.build(e, n)):
        assert reduced_expression_blockwise(w).word() == reduced_expression(w)


@pytest.mark.parametrize("e, n", [(2, 2), (3, 2), (6, 2), (2, 3), (3, 3), (4, 3), (2, 4), (3, 4)])
def test_comprimento_igual_distancia_bfs(e, n):
    params = GroupParams.build(e, n)
    distancias = cayley_distances(params)
    assert len(distancias) == params.order
    for w, d in distancias.items():
        assert length(w) == d


@pytest.mark.parametrize("e, n", [(3, 3), (2, 4)])
def test_passo_unitario_e_criterio_de_reducao(e, n):
    params = GroupParams.build(e, n)
    for w in enumerate_group(params):
        comprimento = length(w)
        assert evaluate(reduced_expression(w), params) == w
        for x in generators(params):
            m = generator_matrix(x, params)
            esquerda = length(multiply(m, w)) - comprimento
            direita = length(multiply(w, m)) - comprimento
            assert abs(esquerda) == 1
            assert (esquerda == -1) == length_decreases(x, w)
            assert (direita == -1) == right_length_decreases(x, w)


def test_t_k_reduz_lambda():
    params = GroupParams.build(5, 3)
    for k in range(1, 5):
        assert length_decreases(T(k), lambda_power(params, k))


@pytest.mark.parametrize("e, n, total", [(3, 3, 4), (2, 4, 1), (4, 3, 9)])
def test_elementos_de_comprimento_maximo(e, n, total):
    params = GroupParams.build(e, n)
    maximos = maximal_length_elements(params)
    assert len(maximos) == total
    assert all(w.is_diagonal and length(w) == n * (n - 1) for w in maximos)


def test_todas_as_expressoes_reduzidas():
    params = GroupParams.build(3, 2)
    assert all_reduced_expressions(identity(params)) == [reduced_expression(identity(params))]
    assert [str(p) for p in all_reduced_expressions(generator_matrix(T(0), params))] == ["t0"]

    palavras = all_reduced_expressions(evaluate(reduced_expression(lambda_power(params, 1)), params))
    assert sorted(str(p) for p in palavras) == ["t0 t2", "t1 t0", "t2 t1"]


def test_expressoes_reduzidas_acima_do_limite():
    params = GroupParams.build(3, 3)
    with pytest.raises(CapExceededError):
        all_reduced_expressions(lambda_power(params, 1), cap=2)


def test_bfs_acima_do_limite():
    with pytest.raises(CapExceededError):
        cayley_distances(GroupParams.build(3, 3), cap=5)
