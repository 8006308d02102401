import sys
import os
# Adiciona o diretório raiz do projeto ao path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))

import dataclasses
import random

import pytest
from models.garside_structure import NormalForm
from models.group_element import Generator
from models.group_params import GroupParams
from services.garside import (
    atom_simples, check_greedy, embedding_lcm_check, emit_presentation, evaluate_normal_form,
    garside_for, is_isomorphic_to_CP, is_positive, matsumoto_check, nf_inverse, nf_multiply,
    nf_of_simple, normal_form, normalize_pair, t_cycle_components, tau_compatibility, words_equal,
)
from services.geen_core import lambda_power
from services.verification import evaluate_signed
from services.words import reduced_expression
from utils.error_handler import InvalidTokenError, ParameterError
from utils.helpers import DELTA_TOKEN

T, S = Generator.T, Generator.S


@pytest.fixture(scope="module")
def g331():
    return garside_for(GroupParams.build(3, 3, 1))


@pytest.fixture(scope="module")
def g321():
    return garside_for(GroupParams.build(3, 2, 1))


@pytest.fixture(scope="module")
def g432():
    return garside_for(GroupParams.build(4, 3, 2))


def _palavra_aleatoria(gerador, g, tamanho):
    letras = list(g.interval.atoms)
    tokens = []
    for _ in range(tamanho):
        if gerador.random() < 0.1:
            tokens.append((DELTA_TOKEN, gerador.choice((1, -1))))
        else:
            tokens.append((gerador.choice(letras), gerador.choice((1, -1))))
    return tokens


def test_estrutura_basica(g331):
    assert g331.params.label == "e=3,n=3,k=1"
    assert len(atom_simples(g331)) == 4
    assert g331.complement[g331.identity] == g331.delta
    assert g331.complement[g331.delta] == g331.identity
    assert sorted(g331.tau) == list(range(len(g331.interval)))


def test_formas_normais_triviais(g331):
    assert normal_form(g331, "") == NormalForm()
    assert normal_form(g331, "D") == NormalForm(1, ())
    assert normal_form(g331, "D^-1 D") == NormalForm()
    assert normal_form(g331, "t0 t0^-1") == NormalForm()
    assert normal_form(g331, "s3^-1 s3") == NormalForm()


def test_palavra_de_lambda_vira_delta(g331, g432):
    for g in (g331, g432):
        palavra = reduced_expression(lambda_power(g.params.without_k(), g.params.k))
        assert normal_form(g, palavra) == NormalForm(1, ())


def test_inverso_de_atomo_e_negativo(g331):
    nf = normal_form(g331, "t1^-1")
    assert nf.delta_power == -1
    assert not is_positive(nf)
    assert is_positive(normal_form(g331, "t1 s3"))


def test_relacao_dual_n2(g321):
    assert words_equal(g321, "t1 t0", "t2 t1")
    assert words_equal(g321, "t1 t0", "t0 t2")
    assert not words_equal(g321, "t1 t0", "t0 t1")


def test_relacoes_da_apresentacao(g331, g432):
    for g in (g331, g432):
        for relacao in emit_presentation(g.params).relations:
            assert words_equal(g, relacao.left, relacao.right), str(relacao)


def test_token_invalido(g331):
    with pytest.raises(InvalidTokenError):
        normal_form(g331, "t3")
    with pytest.raises(InvalidTokenError):
        normal_form(g331, "x1 t0")


def test_formas_normais_aleatorias(g331, g432):
    gerador = random.Random(7)
    for g in (g331, g432):
        for _ in range(150):
            tokens = _palavra_aleatoria(gerador, g, gerador.randint(0, 10))
            nf = normal_form(g, tokens)
            assert check_greedy(g, nf)
            assert evaluate_normal_form(g, nf) == evaluate_signed(tokens, g.params)

            inverso = nf_inverse(g, nf)
            assert nf_multiply(g, nf, inverso) == NormalForm()
            assert nf_multiply(g, inverso, nf) == NormalForm()


def test_par_normalizado_e_estavel(g331):
    for a in range(len(g331.interval)):
        for b in range(0, len(g331.interval), 3):
            novo = normalize_pair(g331, a, b)
            assert normalize_pair(g331, *novo) == novo


def test_forma_normal_de_simples(g331):
    assert nf_of_simple(g331, g331.identity) == NormalForm()
    assert nf_of_simple(g331, g331.delta) == NormalForm(1, ())
    s = g331.interval.atom_of(S(3))
    assert nf_of_simple(g331, s) == NormalForm(0, (s,))
    assert nf_of_simple(g331, s).to_dict(g331.interval)["factors"][0]["perm"] == [1, 3, 2]


def test_compatibilidade_com_tau(g331, g432):
    assert tau_compatibility(g331)
    assert tau_compatibility(g432)


def test_tau_adulterado_e_detectado(g331):
    # troca as imagens de t0 e t1 nas duas tabelas; τ continua bijetivo e coerente com τ^{-1}
    a, b = g331.interval.atom_of(T(0)), g331.interval.atom_of(T(1))
    troca = {a: b, b: a}
    tau = tuple(troca.get(t, t) for t in g331.tau)
    tau_inv = [0] * len(tau)
    for s, t in enumerate(tau):
        tau_inv[t] = s
    adulterada = dataclasses.replace(g331, tau=tau, tau_inverse=tuple(tau_inv))
    assert not tau_compatibility(adulterada)


def test_apresentacao_emitida():
    apresentacao = emit_presentation(GroupParams.build(3, 3, 1))
    assert [str(x) for x in apresentacao.generators] == ["t0", "t1", "t2", "s3"]
    assert apresentacao.counts() == {"trança_s3_t": 3, "dual": 2}
    with pytest.raises(ParameterError):
        emit_presentation(GroupParams.build(3, 3))


@pytest.mark.parametrize("e, k, componentes", [(8, 2, 2), (6, 3, 3), (5, 2, 1), (6, 4, 2)])
def test_componentes_do_ciclo_t(e, k, componentes):
    assert t_cycle_components(e, k) == componentes


def test_ciclo_t_com_k_invalido():
    with pytest.raises(ParameterError):
        t_cycle_components(4, 0)


@pytest.mark.parametrize("e", [2, 3, 4, 5, 6])
def test_criterio_de_isomorfismo(e):
    for k in range(1, e):
        testemunha = is_isomorphic_to_CP(e, k)
        assert testemunha.isomorphic == (t_cycle_components(e, k) == 1)
        assert testemunha.verified, testemunha.failed_relations


def test_testemunha_do_isomorfismo():
    testemunha = is_isomorphic_to_CP(3, 2)
    assert testemunha.to_dict()["mapping"] == {"t0": "t0", "t1": "t2", "t2": "t1"}
    assert not is_isomorphic_to_CP(4, 2).isomorphic


@pytest.mark.parametrize("e", [2, 3, 4, 5])
def test_testemunha_com_k1_e_a_identidade(e):
    testemunha = is_isomorphic_to_CP(e, 1)
    assert testemunha.verified
    assert all(x == y for x, y in testemunha.mapping.items())


@pytest.mark.parametrize("e, n", [(2, 2), (3, 2), (2, 3), (3, 3)])
def test_propriedade_de_matsumoto(e, n):
    for k in range(1, e):
        g = garside_for(GroupParams.build(e, n, k), check_lattice=False)
        for s in range(len(g.interval)):
            assert matsumoto_check(g, s)


def test_mergulho_preserva_mmc(g331, g432):
    for g in (g331, g432):
        for i in range(g.params.e):
            assert embedding_lcm_check(g, i)


def test_mergulho_exige_n3(g321):
    with pytest.raises(ParameterError):
        embedding_lcm_check(g321)
