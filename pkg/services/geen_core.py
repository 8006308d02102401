# services/geen_core.py
import sys
import os
# Adiciona o diretório raiz do projeto ao path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, List, Optional

from config.settings import settings
from models.group_element import Generator, GroupElement
from models.group_params import GroupParams
from models.word import Relation, Word
from utils.error_handler import CapExceededError, ParameterError
from utils.logger import logger


@lru_cache(maxsize=None)
def params_of_shape(e: int, n: int) -> GroupParams:
    return GroupParams.build(e, n)


def params_of(w: GroupElement) -> GroupParams:
    """Parâmetros (e, n) do elemento, sem k"""
    return params_of_shape(w.e, w.n)


def identity(params: GroupParams) -> GroupElement:
    n = params.n
    return GroupElement.unchecked(params.e, tuple(range(1, n + 1)), (0,) * n)


@lru_cache(maxsize=None)
def generator_matrix(g: Generator, params: GroupParams) -> GroupElement:
    """
    t_i = (0, ζ^{-i}; ζ^{i}, 0 | I_{n-2}) e s_j = matriz da transposição (j-1, j).
    """
    g.validate(params)
    e, n = params.e, params.n
    perm = list(range(1, n + 1))
    exps = [0] * n
    if g.is_t:
        perm[0], perm[1] = 2, 1
        exps[0] = (-g.index) % e
        exps[1] = g.index % e
    else:
        j = g.index
        perm[j - 2], perm[j - 1] = j, j - 1
    return GroupElement.unchecked(e, tuple(perm), tuple(exps))


def _checar_compativeis(u: GroupElement, v: GroupElement):
    if u.e != v.e or u.n != v.n:
        raise ParameterError(
            "Elementos de grupos diferentes",
            u=f"G({u.e},{u.e},{u.n})", v=f"G({v.e},{v.e},{v.n})"
        )


def multiply(u: GroupElement, v: GroupElement) -> GroupElement:
    """Produto matricial u·v: linha i de uv fica na coluna σ_v(σ_u(i))"""
    _checar_compativeis(u, v)
    e, pv, ev = u.e, v.perm, v.exps
    perm = tuple(pv[c - 1] for c in u.perm)
    exps = tuple((a + ev[c - 1]) % e for a, c in zip(u.exps, u.perm))
    return GroupElement.unchecked(e, perm, exps)


def multiply_all(elements: Iterable[GroupElement], params: GroupParams) -> GroupElement:
    resultado = identity(params)
    for w in elements:
        resultado = multiply(resultado, w)
    return resultado


def inverse(w: GroupElement) -> GroupElement:
    """Transposta conjugada: σ^{-1} e ε'(i) = -ε(σ^{-1}(i))"""
    n, e = w.n, w.e
    perm = [0] * n
    exps = [0] * n
    for i, (c, a) in enumerate(zip(w.perm, w.exps), start=1):
        perm[c - 1] = i
        exps[c - 1] = (-a) % e
    return GroupElement.unchecked(e, tuple(perm), tuple(exps))


def transpose(w: GroupElement) -> GroupElement:
    """
    Anti-automorfismo φ (t_i -> t_{-i}, s_j -> s_j). Nas matrizes é a transposta,
    e preserva o comprimento.
    """
    n = w.n
    perm = [0] * n
    exps = [0] * n
    for i, (c, a) in enumerate(zip(w.perm, w.exps), start=1):
        perm[c - 1] = i
        exps[c - 1] = a
    return GroupElement.unchecked(w.e, tuple(perm), tuple(exps))


def transpose_generator(g: Generator, params: GroupParams) -> Generator:
    if g.is_t:
        return Generator.T((-g.index) % params.e)
    return g


def group_order(params: GroupParams) -> int:
    return params.order


def enumerate_group(params: GroupParams, cap: Optional[int] = None) -> List[GroupElement]:
    """
    Todos os elementos de G(e,e,n), cada um uma vez, em ordem lexicográfica de (σ, ε).
    """
    cap = settings.GROUP_CAP if cap is None else cap
    ordem = params.order
    if ordem > cap:
        logger.log_limite_excedido("enumerate_group", cap, ordem)
        raise CapExceededError("enumerate_group", cap, ordem)

    e, n = params.e, params.n
    elementos = []
    for perm in permutations(range(1, n + 1)):
        for prefixo in product(range(e), repeat=n - 1):
            ultimo = (-sum(prefixo)) % e
            elementos.append(GroupElement.unchecked(e, perm, prefixo + (ultimo,)))
    logger.debug("Grupo enumerado", params.label, elementos=len(elementos))
    return elementos


def lambda_power(params: GroupParams, k: int) -> GroupElement:
    """λ^k = diag(ζ^{-k(n-1)}, ζ^k, ..., ζ^k)"""
    if k < 0:
        raise ParameterError("lambda_power exige k >= 0", k=k)
    e, n = params.e, params.n
    exps = ((-k * (n - 1)) % e,) + ((k % e),) * (n - 1)
    return GroupElement.unchecked(e, tuple(range(1, n + 1)), exps)


def generators(params: GroupParams) -> List[Generator]:
    """Conjunto CP: t_0, ..., t_{e-1}, s_3, ..., s_n"""
    return [Generator.T(i) for i in range(params.e)] + [Generator.S(j) for j in range(3, params.n + 1)]


def evaluate(word: Word, params: GroupParams) -> GroupElement:
    """Imagem da palavra em G(e,e,n)"""
    return multiply_all((generator_matrix(x, params) for x in word), params)


def _w(*letras: Generator) -> Word:
    return Word(tuple(letras))


def presentation_relations(params: GroupParams, k: int) -> List[Relation]:
    """
    Relações positivas do monoide B^⊕k(e,e,n). As relações duais são emitidas contra j = 0:
    t_i t_{i-k} = t_0 t_{-k} para 1 <= i <= e-1. Com k = 1 é a apresentação CP.
    """
    e, n = params.e, params.n
    T, S = Generator.T, Generator.S
    relacoes: List[Relation] = []

    for j in range(3, n):
        relacoes.append(Relation(_w(S(j), S(j + 1), S(j)), _w(S(j + 1), S(j), S(j + 1)), "trança_s"))
    for i in range(3, n + 1):
        for j in range(i + 2, n + 1):
            relacoes.append(Relation(_w(S(i), S(j)), _w(S(j), S(i)), "comutação_s"))
    if n >= 3:
        for i in range(e):
            relacoes.append(Relation(_w(S(3), T(i), S(3)), _w(T(i), S(3), T(i)), "trança_s3_t"))
    for j in range(4, n + 1):
        for i in range(e):
            relacoes.append(Relation(_w(S(j), T(i)), _w(T(i), S(j)), "comutação_s_t"))
    for i in range(1, e):
        relacoes.append(Relation(_w(T(i), T((i - k) % e)), _w(T(0), T((-k) % e)), "dual"))
    return relacoes


def cp_relations(params: GroupParams) -> List[Relation]:
    return presentation_relations(params, 1)


def relation_holds_in_group(relation: Relation, params: GroupParams) -> bool:
    return evaluate(relation.left, params) == evaluate(relation.right, params)
