import sys
import os
# Adiciona o diretório raiz do projeto ao path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))

import pytest
from models.run_config import RunConfig
from services.garside import garside_for, normal_form
from services.verification import (
    SUITES, VerificationService, evaluate_signed, normal_form_tokens, run_verification,
)
from utils.error_handler import ErrorType, GarsideError
from utils.helpers import parse_signed_word


@pytest.fixture(scope="module")
def servico_331():
    return VerificationService(RunConfig.build(e=3, n=3, k=1, seed=11), samples=30)


@pytest.mark.parametrize("suite", SUITES)
def test_suites_passam_em_331(servico_331, suite):
    relatorio, = servico_331.run(suite)
    assert relatorio.skipped is None
    assert relatorio.checks
    assert relatorio.passed, [c for c in relatorio.checks if not c["passed"]]


def test_suites_em_n2():
    relatorios = run_verification(RunConfig.build(e=3, n=2, k=1), suite="all", samples=20)
    por_nome = {r.suite: r for r in relatorios}
    assert set(por_nome) == set(SUITES)
    assert por_nome["homology"].skipped == "exige n >= 3"
    assert por_nome["embedding"].skipped == "exige n >= 3"
    assert all(r.passed for r in relatorios)


def test_suites_sem_k_sao_puladas():
    servico = VerificationService(RunConfig.build(e=3, n=3))
    lattice, = servico.run("lattice")
    assert lattice.skipped == "k ausente"
    assert lattice.checks == []

    iso, = servico.run("iso")
    assert iso.skipped is None
    # sem k a suíte percorre k = 1 e k = 2
    assert len(iso.checks) == 4
    assert iso.passed


def test_relatorio_serializavel(servico_331):
    relatorio, = servico_331.run("balanced")
    dados = relatorio.to_dict()
    assert dados["suite"] == "balanced"
    assert dados["params"] == "e=3,n=3,k=1"
    assert dados["passed"] is True


def test_suite_desconhecida():
    with pytest.raises(GarsideError) as exc:
        run_verification(RunConfig.build(e=3, n=3, k=1), suite="tudo")
    assert exc.value.error_type == ErrorType.ERRO_USO


def test_tokens_da_forma_normal():
    config = RunConfig.build(e=4, n=3, k=2)
    g = garside_for(config.params, check_lattice=False)
    tokens = parse_signed_word("t1^-1 s3 t3 D^-1 t0")
    nf = normal_form(g, tokens)
    assert normal_form(g, normal_form_tokens(g, nf)) == nf
    assert evaluate_signed(normal_form_tokens(g, nf), config.params) == evaluate_signed(tokens, config.params)


def test_amostras_padrao_vem_do_settings(monkeypatch):
    monkeypatch.delenv("GARSIDE_SAMPLES", raising=False)
    assert VerificationService(RunConfig.build(e=3, n=2, k=1)).samples == 10_000

    monkeypatch.setenv("GARSIDE_SAMPLES", "25")
    servico = VerificationService(RunConfig.build(e=3, n=2, k=1))
    assert servico.samples == 25
    garside, = servico.run("garside")
    amostras = [c for c in garside.checks if c["name"] == "forma normal (amostras)"]
    assert amostras[0]["amostras"] == 25


@pytest.mark.slow
def test_suite_garside_com_dez_mil_amostras(monkeypatch):
    monkeypatch.delenv("GARSIDE_SAMPLES", raising=False)
    relatorio, = run_verification(RunConfig.build(e=3, n=3, k=1, seed=7), suite="garside")
    assert relatorio.passed, [c for c in relatorio.checks if not c["passed"]]
    assert any(c.get("amostras") == 10_000 for c in relatorio.checks)
