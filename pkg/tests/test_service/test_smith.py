import sys
import os
# Adiciona o diretório raiz do projeto ao path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))

import random

import pytest
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from services.smith import invariant_factors, smith_normal_form


def _multiplicar(a, b):
    return [[sum(x * y for x, y in zip(linha, coluna)) for coluna in zip(*b)] for linha in a]


def _referencia(dados):
    '''Diagonal não nula da forma de Smith calculada pelo sympy'''
    d = sympy_snf(Matrix(dados), domain=ZZ)
    return sorted(abs(int(d[i, i])) for i in range(min(d.shape)) if d[i, i] != 0)


MATRIZES = [
    [[2, 4], [6, 8]],
    [[1, -1, 0], [0, 1, -1], [-1, 0, 1]],
    [[3, 0], [0, 0], [0, 6]],
    [[0, 0, 0], [0, 0, 0]],
    [[4, 6, 10], [6, 9, 15]],
]


@pytest.mark.parametrize("dados", MATRIZES)
def test_diagonal_bate_com_sympy(dados):
    snf = smith_normal_form(dados)
    assert sorted(snf.diagonal) == _referencia(dados)
    assert snf.rank == len(snf.diagonal)


def test_cadeia_de_divisibilidade():
    assert invariant_factors([[2, 0], [0, 3]]) == [1, 6]
    assert invariant_factors([[2, 4], [6, 8]]) == [2, 4]


@pytest.mark.parametrize("semente", range(5))
def test_transformacoes_reconstroem_a_diagonal(semente):
    gerador = random.Random(semente)
    dados = [[gerador.randint(-4, 4) for _ in range(5)] for _ in range(4)]
    snf = smith_normal_form(dados, with_transforms=True)

    produto = _multiplicar(_multiplicar([list(l) for l in snf.U], dados), [list(l) for l in snf.V])
    for i, linha in enumerate(produto):
        for j, valor in enumerate(linha):
            esperado = snf.diagonal[i] if i == j and i < snf.rank else 0
            assert valor == esperado

    identidade = _multiplicar([list(l) for l in snf.V], [list(l) for l in snf.V_inverse])
    assert identidade == [[int(i == j) for j in range(5)] for i in range(5)]
    assert sorted(snf.diagonal) == _referencia(dados)
    for a, b in zip(snf.diagonal, snf.diagonal[1:]):
        assert b % a == 0


def test_matriz_vazia():
    snf = smith_normal_form([], with_transforms=True)
    assert snf.diagonal == ()
    assert snf.rank == 0
