# services/words.py
import sys
import os
# Adiciona o diretório raiz do projeto ao path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from collections import deque
from typing import Dict, Iterator, List, Optional, Tuple

from config.settings import settings
from models.group_element import Generator, GroupElement
from models.group_params import GroupParams
from models.word import Block, BlockDecomposition, Word
from services.geen_core import (
    enumerate_group, generator_matrix, generators, identity, multiply, params_of,
    transpose, transpose_generator,
)
from utils.error_handler import CapExceededError, TheoremViolationError
from utils.logger import logger


def _letra(j: int) -> Generator:
    """s_j com a convenção s_2 := t_0"""
    return Generator.T(0) if j == 2 else Generator.S(j)


def reduced_expression(w: GroupElement) -> Word:
    """
    Algoritmo literal: para i = n, ..., 2 localiza a coluna c e o expoente k da linha i
    da cópia de trabalho, multiplica à direita por s_c ... s_2 t_k (se k != 0) e depois
    por s_{c+1} ... s_i, prefixando as letras correspondentes.
    """
    params = params_of(w)
    atual = w  # cópia de trabalho; GroupElement é imutável
    palavra: List[Generator] = []

    for i in range(w.n, 1, -1):
        c = atual.column(i)
        k = atual.exponent(i)
        if k != 0:
            t_k = Generator.T(k)
            for letra in [_letra(j) for j in range(c, 1, -1)] + [t_k]:
                atual = multiply(atual, generator_matrix(letra, params))
            palavra = [t_k] + [_letra(j) for j in range(2, c + 1)] + palavra
            c = 2
        for j in range(c + 1, i + 1):
            atual = multiply(atual, generator_matrix(_letra(j), params))
        palavra = [_letra(j) for j in range(i, c, -1)] + palavra

    if atual != identity(params):
        raise TheoremViolationError("RE(w) não reduz w à identidade", elemento=w.to_dict())
    return Word(tuple(palavra))


def _block_word(i: int, c: int, a: int) -> Word:
    """RE_i(w) a partir da posição (i, c) e do expoente a de w_i[i, c]"""
    descida = [_letra(j) for j in range(i, 2, -1)]  # s_i ... s_3
    if a != 0:
        if c == 1:
            letras = descida + [Generator.T(a)]
        else:
            letras = descida + [Generator.T(a), Generator.T(0)] + [Generator.S(j) for j in range(3, c + 1)]
    else:
        letras = [_letra(j) for j in range(i, c, -1)]
    return Word(tuple(letras))


def _iter_blocks(w: GroupElement) -> Iterator[Tuple[int, Tuple[int, ...], Tuple[int, ...], int, int]]:
    """
    Percorre w_n, ..., w_2: remove a linha i e a coluna c, e multiplica a nova
    primeira coluna por w_i[i, c].
    """
    e = w.e
    perm = list(w.perm)
    exps = list(w.exps)
    for i in range(w.n, 1, -1):
        c = perm[i - 1]
        a = exps[i - 1]
        yield i, tuple(perm), tuple(exps), c, a
        novo_perm = [col - 1 if col > c else col for col in perm[: i - 1]]
        novo_exps = exps[: i - 1]
        for r, col in enumerate(novo_perm):
            if col == 1:
                novo_exps[r] = (novo_exps[r] + a) % e
        perm, exps = novo_perm, novo_exps


def reduced_expression_blockwise(w: GroupElement) -> BlockDecomposition:
    blocos = tuple(
        Block(i, perm, exps, c, a, _block_word(i, c, a))
        for i, perm, exps, c, a in _iter_blocks(w)
    )
    return BlockDecomposition(blocos)


def length(w: GroupElement) -> int:
    """ℓ(w) somando |RE_i(w)| bloco a bloco: i + c - 2 se a != 0, i - c caso contrário"""
    total = 0
    for i, _, _, c, a in _iter_blocks(w):
        total += i + c - 2 if a != 0 else i - c
    return total


def length_decreases(x: Generator, w: GroupElement) -> bool:
    """ℓ(xw) = ℓ(w) - 1, decidido direto sobre (σ, ε)"""
    if x.is_s:
        i = x.index
        if w.column(i - 1) < w.column(i):
            return w.exponent(i) != 0
        return w.exponent(i - 1) == 0
    if w.column(1) < w.column(2):
        return w.exponent(2) != 0
    return w.exponent(1) == (-x.index) % w.e


def right_length_decreases(x: Generator, w: GroupElement) -> bool:
    """ℓ(wx) = ℓ(w) - 1, via φ: ℓ(wx) = ℓ(φ(x)φ(w))"""
    return length_decreases(transpose_generator(x, params_of(w)), transpose(w))


def maximal_length_elements(params: GroupParams, cap: Optional[int] = None) -> List[GroupElement]:
    maximo = params.max_length
    return [w for w in enumerate_group(params, cap) if length(w) == maximo]


def all_reduced_expressions(w: GroupElement, cap: Optional[int] = None) -> List[Word]:
    """Todas as palavras de comprimento ℓ(w) que avaliam em w (busca em profundidade à esquerda)"""
    cap = settings.REWRITE_CAP if cap is None else cap
    params = params_of(w)
    atomos = generators(params)
    id_ = identity(params)
    resultado: List[Word] = []

    def descer(atual: GroupElement, prefixo: Tuple[Generator, ...]):
        if atual == id_:
            resultado.append(Word(prefixo))
            if len(resultado) > cap:
                logger.log_limite_excedido("all_reduced_expressions", cap)
                raise CapExceededError("all_reduced_expressions", cap)
            return
        for x in atomos:
            if length_decreases(x, atual):
                descer(multiply(generator_matrix(x, params), atual), prefixo + (x,))

    descer(w, ())
    return resultado


def cayley_distances(params: GroupParams, cap: Optional[int] = None) -> Dict[GroupElement, int]:
    """Distâncias no grafo de Cayley de (G, X) a partir da identidade (oráculo BFS)"""
    cap = settings.GROUP_CAP if cap is None else cap
    if params.order > cap:
        logger.log_limite_excedido("cayley_distances", cap, params.order)
        raise CapExceededError("cayley_distances", cap, params.order)

    matrizes = [generator_matrix(x, params) for x in generators(params)]
    origem = identity(params)
    distancias = {origem: 0}
    fila = deque([origem])
    while fila:
        atual = fila.popleft()
        for m in matrizes:
            vizinho = multiply(m, atual)
            if vizinho not in distancias:
                distancias[vizinho] = distancias[atual] + 1
                fila.append(vizinho)
    return distancias
