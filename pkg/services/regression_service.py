# services/regression_service.py
import sys
import os
# Adiciona o diretório raiz do projeto ao path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import time
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Sequence

from config.settings import settings
from models.group_params import GroupParams
from models.run_config import RegressionRecord, RunConfig
from repositories.regression_repository import RegressionRepository
from services.garside import build_garside
from services.geen_core import group_order
from services.homology import expected_h2, homology_group
from services.interval import build_interval, interval_size_formula
from utils.error_handler import ParameterError, RegressionDriftError, TheoremViolationError
from utils.helpers import canonical_json
from utils.logger import logger

GRID_E = (2, 3, 4, 5, 6)
GRID_N = (2, 3, 4)


def default_grid() -> List[RunConfig]:
    """e ∈ {2..6}, n ∈ {2,3,4}, todo k, com |G| e |D_k|² dentro dos limites"""
    grade = []
    for e in GRID_E:
        for n in GRID_N:
            if group_order(GroupParams.build(e, n)) > settings.GRID_GROUP_CAP:
                continue
            if interval_size_formula(e, n) ** 2 > settings.PAIR_CAP:
                continue
            grade.extend(RunConfig.build(e=e, n=n, k=k) for k in range(1, e))
    return grade


def parse_grid(texto: str) -> List[RunConfig]:
    """'default' ou 'e,n,k;e,n,k;...' (vazio = grade vazia)"""
    texto = texto.strip()
    if texto == "default":
        return default_grid()
    grade = []
    for item in filter(None, (parte.strip() for parte in texto.split(";"))):
        try:
            e, n, k = (int(x) for x in item.split(","))
        except ValueError:
            raise ParameterError(f"Ponto de grade inválido: '{item}' (esperado e,n,k)", ponto=item)
        grade.append(RunConfig.build(e=e, n=n, k=k))
    return grade


def compute_records(config: RunConfig) -> List[RegressionRecord]:
    """Registros de um ponto: |D_k|, τ trivial e, para n >= 3, H_1 e H_2 (conferido com a fórmula)"""
    params = config.params
    params.require_k()
    label = params.label
    if group_order(params.without_k()) > config.group_cap:
        raise ParameterError("Ponto de grade acima do limite de grupo", params=label, cap=config.group_cap)

    inicio = time.time()
    intervalo = build_interval(params, verify=True, cap=config.group_cap)
    g = build_garside(intervalo, check_lattice=True)

    registros = [
        RegressionRecord(key=f"interval:{label}", value=canonical_json({"size": len(intervalo)})),
        RegressionRecord(key=f"tau:{label}", value=canonical_json({"trivial": g.tau_is_trivial})),
    ]
    if len(intervalo) != interval_size_formula(params.e, params.n):
        raise TheoremViolationError("|D_k| difere da fórmula do censo", params=label, tamanho=len(intervalo))

    if params.n >= 3:
        h1 = homology_group(g, 1)
        h2 = homology_group(g, 2)
        esperado = expected_h2(params.e, params.n, params.k)
        if h2 != esperado:
            logger.log_violacao_teorema("H_2 pela fórmula", label, obtido=str(h2), esperado=str(esperado))
            raise TheoremViolationError("H_2 difere da fórmula fechada", params=label, obtido=str(h2),
                                        esperado=str(esperado))
        registros.append(RegressionRecord(key=f"homology1:{label}", value=canonical_json(h1.to_dict())))
        registros.append(RegressionRecord(key=f"homology2:{label}", value=canonical_json(h2.to_dict())))

    logger.log_performance("freeze:ponto", time.time() - inicio, {"params": label})
    return registros


def freeze_regressions(
    grid: Sequence[RunConfig],
    path: Optional[str] = None,
    workers: int = 1,
    repository: Optional[RegressionRepository] = None,
) -> Dict[str, int]:
    """
    Calcula os registros da grade e compara com o arquivo: chaves já congeladas devem coincidir
    byte a byte (RegressionDriftError caso contrário); chaves novas são acrescentadas.
    """
    repositorio = repository or RegressionRepository(path or settings.REGRESSION_FILE)
    repositorio.garantir_arquivo()
    congelados = repositorio.carregar()

    if workers > 1 and len(grid) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            por_ponto = list(pool.map(compute_records, grid))
    else:
        por_ponto = [compute_records(config) for config in grid]

    novos, conferidos = [], 0
    for registros in por_ponto:
        for registro in registros:
            anterior = congelados.get(registro.key)
            if anterior is None:
                novos.append(registro)
                continue
            if anterior.value != registro.value:
                logger.log_regressao(registro.key, "divergente")
                raise RegressionDriftError(registro.key, anterior.value, registro.value)
            conferidos += 1
            logger.log_regressao(registro.key, "conferida")

    repositorio.acrescentar(novos)
    logger.info("Regressões congeladas", repositorio.path, pontos=len(grid), novos=len(novos),
                conferidos=conferidos)
    return {"points": len(grid), "written": len(novos), "matched": conferidos}
