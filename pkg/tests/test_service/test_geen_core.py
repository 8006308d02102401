import sys
import os
# Adiciona o diretório raiz do projeto ao path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))

import pytest
from models.group_element import Generator, GroupElement
from models.group_params import GroupParams
from models.word import Word
from services.geen_core import (
    cp_relations, enumerate_group, evaluate, generator_matrix, generators, identity, inverse,
    lambda_power, multiply, presentation_relations, relation_holds_in_group, transpose,
)
from services.words import length
from utils.error_handler import CapExceededError, InvalidTokenError, ParameterError

T, S = Generator.T, Generator.S


@pytest.fixture
def g333():
    return GroupParams.build(3, 3)


def test_identidade(g333):
    w = identity(g333)
    assert w.perm == (1, 2, 3)
    assert w.exps == (0, 0, 0)
    assert length(w) == 0


def test_matrizes_dos_geradores(g333):
    assert generator_matrix(T(0), g333) == GroupElement(3, (2, 1, 3), (0, 0, 0))
    assert generator_matrix(T(1), g333) == GroupElement(3, (2, 1, 3), (2, 1, 0))
    assert generator_matrix(S(3), g333) == GroupElement(3, (1, 3, 2), (0, 0, 0))


def test_gerador_fora_do_intervalo(g333):
    with pytest.raises(InvalidTokenError):
        generator_matrix(S(4), g333)


@pytest.mark.parametrize("e, n", [(2, 2), (3, 3), (4, 3), (3, 4)])
def test_geradores_sao_involucoes(e, n):
    params = GroupParams.build(e, n)
    for x in generators(params):
        m = generator_matrix(x, params)
        assert multiply(m, m) == identity(params)
        assert inverse(m) == m


def test_trança_e_relacao_dual():
    params4 = GroupParams.build(3, 4)
    assert evaluate(Word.parse("s3 s4 s3"), params4) == evaluate(Word.parse("s4 s3 s4"), params4)
    params2 = GroupParams.build(3, 2)
    assert evaluate(Word.parse("t1 t0"), params2) == evaluate(Word.parse("t2 t1"), params2)


def test_inverso_exaustivo(g333):
    id_ = identity(g333)
    grupo = enumerate_group(g333)
    assert len(grupo) == 54
    for w in grupo:
        assert multiply(w, inverse(w)) == id_
        assert multiply(inverse(w), w) == id_
        assert sum(multiply(w, w).exps) % 3 == 0


def test_transposta_e_anti_automorfismo(g333):
    grupo = enumerate_group(g333)
    for u in grupo[::7]:
        for v in grupo[::5]:
            assert transpose(multiply(u, v)) == multiply(transpose(v), transpose(u))
    assert transpose(generator_matrix(T(1), g333)) == generator_matrix(T(2), g333)


def test_enumeracao_deterministica():
    params = GroupParams.build(2, 2)
    grupo = enumerate_group(params)
    assert len(grupo) == 4
    assert len(set(grupo)) == 4
    assert grupo == enumerate_group(params)
    assert identity(params) in grupo
    assert lambda_power(params, 1) in grupo


def test_enumeracao_acima_do_limite(g333):
    with pytest.raises(CapExceededError):
        enumerate_group(g333, cap=10)


def test_lambda_power(g333):
    assert lambda_power(g333, 1).exps == (1, 1, 1)
    assert lambda_power(g333, 0) == identity(g333)
    assert lambda_power(GroupParams.build(5, 3), 2).exps == (1, 2, 2)
    with pytest.raises(ParameterError):
        lambda_power(g333, -1)
    for k in (1, 2):
        assert length(lambda_power(g333, k)) == 6


def test_multiplicacao_de_grupos_diferentes():
    with pytest.raises(ParameterError):
        multiply(identity(GroupParams.build(3, 3)), identity(GroupParams.build(4, 3)))


@pytest.mark.parametrize("e", [2, 3, 4, 5, 6])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_relacoes_cp_valem_nas_matrizes(e, n):
    params = GroupParams.build(e, n)
    for relacao in cp_relations(params):
        assert relation_holds_in_group(relacao, params), str(relacao)


def test_relacoes_de_bk_valem_nas_matrizes():
    params = GroupParams.build(6, 4)
    for k in range(1, 6):
        for relacao in presentation_relations(params, k):
            assert relation_holds_in_group(relacao, params), str(relacao)


def test_contagem_de_relacoes():
    relacoes = presentation_relations(GroupParams.build(3, 4), 1)
    tipos = [r.kind for r in relacoes]
    assert tipos.count("trança_s") == 1
    assert tipos.count("trança_s3_t") == 3
    assert tipos.count("comutação_s_t") == 3
    assert tipos.count("dual") == 2
