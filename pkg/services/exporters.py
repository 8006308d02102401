# services/exporters.py
import sys
import os
# Adiciona o diretório raiz do projeto ao path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from typing import Union

import pydotplus
from pydotplus.graphviz import Edge, Node

from models.garside_structure import Presentation
from models.homology import IntMatrix
from models.interval import Interval
from services.words import reduced_expression
from utils.error_handler import ArquivoError
from utils.helpers import bits_to_base64, pretty_json
from utils.logger import logger


def interval_to_dot(intervalo: Interval) -> str:
    """Diagrama de Hasse de ⪯ restrito às coberturas, rotulado por RE(w)"""
    grafo = pydotplus.Dot(graph_type="digraph")
    grafo.set_rankdir("BT")
    for ordinal, w in enumerate(intervalo.elements):
        rotulo = str(reduced_expression(w)) or "1"
        grafo.add_node(Node(f"w{ordinal}", label=f'"{rotulo}"'))
    for ordinal, coberturas in enumerate(intervalo.left_covers):
        for gerador, destino in coberturas:
            grafo.add_edge(Edge(f"w{ordinal}", f"w{destino}", label=f'"{gerador}"'))
    return grafo.to_string()


def interval_to_json(intervalo: Interval) -> dict:
    """Membros, comprimentos e linhas de bitset em base64 (bit i = ordinal i)"""
    total = len(intervalo)
    return {
        "params": intervalo.params.to_dict(),
        "size": total,
        "identity": intervalo.identity,
        "delta": intervalo.delta,
        "elements": [w.to_dict() for w in intervalo.elements],
        "lengths": list(intervalo.lengths),
        "left_divides": [bits_to_base64(linha, total) for linha in intervalo.left_up],
        "right_divides": [bits_to_base64(linha, total) for linha in intervalo.right_up],
    }


def presentation_to_dot(apresentacao: Presentation) -> str:
    """
    Diagrama em pipa: cadeia s_n - ... - s_3, s_3 ligado a cada t_i e o ciclo dual
    t_i - t_{i-k} em arestas tracejadas.
    """
    params = apresentacao.params
    e, n, k = params.e, params.n, params.require_k()
    grafo = pydotplus.Dot(graph_type="graph")
    for x in apresentacao.generators:
        grafo.add_node(Node(str(x), shape="circle"))
    for j in range(3, n):
        grafo.add_edge(Edge(f"s{j}", f"s{j + 1}"))
    if n >= 3:
        for i in range(e):
            grafo.add_edge(Edge("s3", f"t{i}"))

    vistos = set()
    for i in range(e):
        par = frozenset((i, (i - k) % e))
        if par in vistos:
            continue
        vistos.add(par)
        grafo.add_edge(Edge(f"t{i}", f"t{(i - k) % e}", style="dashed"))
    return grafo.to_string()


def matrices_to_json(*matrizes: IntMatrix) -> dict:
    return {f"d{r}": m.to_dict() for r, m in zip(range(2, 2 + len(matrizes)), matrizes)}


def write_export(path: str, conteudo: Union[str, dict]):
    """Grava texto (DOT) ou dicionário (JSON indentado) no caminho dado"""
    texto = conteudo if isinstance(conteudo, str) else pretty_json(conteudo)
    try:
        diretorio = os.path.dirname(path)
        if diretorio:
            os.makedirs(diretorio, exist_ok=True)
        with open(path, "w", encoding="utf-8") as arquivo:
            arquivo.write(texto)
    except OSError as exc:
        raise ArquivoError(path, exc)
    logger.debug("Exportação gravada", path, bytes=len(texto))
