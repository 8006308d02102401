import sys
import os
# Adiciona o diretório raiz do projeto ao path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))

import json

import pytest
from models.run_config import RunConfig
from services.regression_service import compute_records, default_grid, freeze_regressions, parse_grid
from utils.error_handler import ParameterError, RegressionDriftError


def _ler(caminho):
    with open(caminho, encoding="utf-8") as arquivo:
        return [json.loads(linha) for linha in arquivo if linha.strip()]


def test_grade_vazia():
    assert parse_grid("") == []
    assert parse_grid("  ;  ") == []


def test_grade_explicita():
    grade = parse_grid("3,3,1; 4,2,3")
    assert [c.key for c in grade] == ["e=3,n=3,k=1", "e=4,n=2,k=3"]


@pytest.mark.parametrize("texto", ["3,3", "a,b,c", "3,3,1,2"])
def test_grade_invalida(texto):
    with pytest.raises(ParameterError):
        parse_grid(texto)


def test_grade_com_k_fora_do_intervalo():
    with pytest.raises(ParameterError):
        parse_grid("3,3,3")


def test_grade_padrao_respeita_limites(monkeypatch):
    monkeypatch.setenv("GARSIDE_GRID_GROUP_CAP", "60")
    grade = default_grid()
    # |G(e,e,n)| <= 60: todo n = 2 e também e = 2, 3 com n = 3
    pontos = {(c.e, c.n) for c in grade}
    assert pontos == {(2, 2), (3, 2), (4, 2), (5, 2), (6, 2), (2, 3), (3, 3)}
    assert len(grade) == sum(e - 1 for e, _ in pontos)

    monkeypatch.setenv("GARSIDE_PAIR_CAP", "30")
    # |D_k|² <= 30 deixa só n = 2 com e <= 3
    assert {(c.e, c.n) for c in default_grid()} == {(2, 2), (3, 2)}


def test_registros_de_um_ponto():
    registros = {r.key: r.value for r in compute_records(RunConfig.build(e=6, n=3, k=2))}
    assert registros["interval:e=6,n=3,k=2"] == '{"size":80}'
    assert json.loads(registros["homology2:e=6,n=3,k=2"]) == {"free_rank": 1, "torsion": [3]}
    assert json.loads(registros["homology1:e=6,n=3,k=2"]) == {"free_rank": 1, "torsion": []}
    assert "tau:e=6,n=3,k=2" in registros


@pytest.mark.slow
def test_registros_n4_com_e_prima_par():
    registros = {r.key: r.value for r in compute_records(RunConfig.build(e=4, n=4, k=2))}
    assert json.loads(registros["homology2:e=4,n=4,k=2"]) == {"free_rank": 1, "torsion": [2, 2, 2, 2]}


def test_registros_n2_sem_homologia():
    chaves = [r.key for r in compute_records(RunConfig.build(e=3, n=2, k=1))]
    assert chaves == ["interval:e=3,n=2,k=1", "tau:e=3,n=2,k=1"]


def test_congelar_com_grade_vazia(tmp_path):
    caminho = tmp_path / "regressoes.jsonl"
    resumo = freeze_regressions([], path=str(caminho))
    assert resumo == {"points": 0, "written": 0, "matched": 0}
    assert caminho.exists()
    assert caminho.read_text(encoding="utf-8") == ""


def test_congelar_duas_vezes(tmp_path):
    caminho = str(tmp_path / "regressoes.jsonl")
    grade = parse_grid("3,3,1;3,2,2")
    primeiro = freeze_regressions(grade, path=caminho)
    assert primeiro == {"points": 2, "written": 6, "matched": 0}

    segundo = freeze_regressions(grade, path=caminho)
    assert segundo == {"points": 2, "written": 0, "matched": 6}
    assert len(_ler(caminho)) == 6


def test_valor_alterado_gera_divergencia(tmp_path):
    caminho = tmp_path / "regressoes.jsonl"
    freeze_regressions(parse_grid("3,2,1"), path=str(caminho))

    linhas = _ler(caminho)
    for linha in linhas:
        if linha["key"].startswith("interval:"):
            linha["value"] = '{"size":6}'
    caminho.write_text("".join(json.dumps(l) + "\n" for l in linhas), encoding="utf-8")

    with pytest.raises(RegressionDriftError) as exc:
        freeze_regressions(parse_grid("3,2,1"), path=str(caminho))
    assert exc.value.details["chave"] == "interval:e=3,n=2,k=1"
    assert exc.value.details["atual"] == '{"size":5}'


def test_chaves_novas_sao_acrescentadas(tmp_path):
    caminho = str(tmp_path / "regressoes.jsonl")
    freeze_regressions(parse_grid("3,2,1"), path=caminho)
    resumo = freeze_regressions(parse_grid("3,2,1;3,2,2"), path=caminho)
    assert resumo == {"points": 2, "written": 2, "matched": 2}
    assert [l["key"] for l in _ler(caminho)][-2:] == ["interval:e=3,n=2,k=2", "tau:e=3,n=2,k=2"]
