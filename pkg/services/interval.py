# services/interval.py
import sys
import os
# Adiciona o diretório raiz do projeto ao path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import time
from math import prod
from typing import Dict, List, Optional, Set, Tuple, Union

from config.settings import settings
from models.group_element import Generator, GroupElement
from models.group_params import GroupParams
from models.interval import (
    Interval, LatticeReport, LatticeViolation, NO_COMMON_BOUND, Side, _NoCommonBound,
)
from models.word import Word
from services.geen_core import (
    enumerate_group, evaluate, generator_matrix, generators, identity, inverse,
    lambda_power, multiply, params_of, transpose,
)
from services.words import (
    length, length_decreases, maximal_length_elements, reduced_expression,
    reduced_expression_blockwise,
)
from utils.error_handler import (
    CapExceededError, LatticeViolationError, ParameterError, TheoremViolationError,
)
from utils.helpers import highest_bit, iter_bits, lowest_bit
from utils.logger import logger


# ---------------------------------------------------------------------------
# Divisibilidade no grupo inteiro
# ---------------------------------------------------------------------------

def left_divides(a: GroupElement, b: GroupElement) -> bool:
    """
    a ⪯ b: percorre RE(a) = x_1 ... x_m exigindo que cada letra reduza o comprimento
    de x_{i-1} ... x_1 b. Os geradores são involuções.
    """
    if a.e != b.e or a.n != b.n:
        raise ParameterError("Elementos de grupos diferentes", a=a.to_dict(), b=b.to_dict())
    params = params_of(b)
    atual = b
    for x in reduced_expression(a):
        if not length_decreases(x, atual):
            return False
        atual = multiply(generator_matrix(x, params), atual)
    return True


def right_divides(a: GroupElement, b: GroupElement) -> bool:
    """a ⪯_r b  ⇔  φ(a) ⪯ φ(b)"""
    return left_divides(transpose(a), transpose(b))


# ---------------------------------------------------------------------------
# Critérios de pertinência em D_k
# ---------------------------------------------------------------------------

def bullets(w: GroupElement) -> List[int]:
    """Linhas cuja coluna é um mínimo estrito da esquerda para a direita de (c_1, ..., c_n)"""
    linhas = []
    minimo = w.n + 1
    for i, c in enumerate(w.perm, start=1):
        if c < minimo:
            linhas.append(i)
            minimo = c
    return linhas


def in_Dk(w: GroupElement, k: int) -> bool:
    if not 1 <= k <= w.e - 1:
        raise ParameterError(f"k deve estar entre 1 e {w.e - 1}", k=k)
    marcadas = set(bullets(w))
    for i, a in enumerate(w.exps, start=1):
        if i not in marcadas and a not in (0, k % w.e):
            return False
    return True


def block_word_criterion(w: GroupElement, k: int) -> bool:
    """
    Pertinência lida nas palavras de bloco: cada RE_i(w) contém no máximo uma letra t,
    ou começa o trecho de letras t por t_k t_0.
    """
    for bloco in reduced_expression_blockwise(w).blocks:
        letras_t = [x for x in bloco.word if x.is_t]
        if len(letras_t) == 2 and letras_t[0].index != k % w.e:
            return False
    return True


def interval_size_formula(e: int, n: int) -> int:
    """|D_k| = ∏_{i=1}^{n-1} (e + 2i), independente de k"""
    return prod(e + 2 * i for i in range(1, n))


# ---------------------------------------------------------------------------
# Construção do intervalo
# ---------------------------------------------------------------------------

def _fechamento(ordem: List[int], vizinhos: List[List[int]]) -> List[int]:
    """Conjuntos alcançáveis (incluindo o próprio) percorrendo os ordinais na ordem dada"""
    alcance = [0] * len(vizinhos)
    for a in ordem:
        mascara = 1 << a
        for b in vizinhos[a]:
            mascara |= alcance[b]
        alcance[a] = mascara
    return alcance


def build_interval(params: GroupParams, verify: bool = True, cap: Optional[int] = None) -> Interval:
    """
    Membros de D_k em ordem (comprimento, lexicográfica) com as tabelas de ⪯ e ⪯_r em bitsets.
    Como os ordinais crescem com o comprimento, o bit mais alto de um conjunto é um elemento
    de comprimento máximo e o mais baixo um de comprimento mínimo.
    """
    k = params.require_k()
    grupo_params = params.without_k()
    inicio = time.time()

    grupo = enumerate_group(grupo_params, cap)
    candidatos = [w for w in grupo if in_Dk(w, k)]
    comprimentos = {w: length(w) for w in candidatos}
    membros = tuple(sorted(candidatos, key=lambda w: (comprimentos[w], w.perm, w.exps)))
    indice = {w: i for i, w in enumerate(membros)}
    tamanhos = tuple(comprimentos[w] for w in membros)

    atomos = {x: indice[generator_matrix(x, grupo_params)] for x in generators(grupo_params)}
    matrizes = [(x, generator_matrix(x, grupo_params)) for x in atomos]

    cobre_esq: List[List[int]] = [[] for _ in membros]   # a ⋖ a·x
    cobre_dir: List[List[int]] = [[] for _ in membros]   # a ⋖_r x·a
    abaixo_esq: List[List[int]] = [[] for _ in membros]
    abaixo_dir: List[List[int]] = [[] for _ in membros]
    rotulos: List[List[Tuple[Generator, int]]] = [[] for _ in membros]

    for a, w in enumerate(membros):
        for x, m in matrizes:
            b = indice.get(multiply(w, m))
            if b is not None and tamanhos[b] == tamanhos[a] + 1:
                cobre_esq[a].append(b)
                abaixo_esq[b].append(a)
                rotulos[a].append((x, b))
            b = indice.get(multiply(m, w))
            if b is not None and tamanhos[b] == tamanhos[a] + 1:
                cobre_dir[a].append(b)
                abaixo_dir[b].append(a)

    decrescente = list(range(len(membros) - 1, -1, -1))
    crescente = list(range(len(membros)))

    delta = lambda_power(grupo_params, k)
    if delta not in indice:
        raise TheoremViolationError("λ^k não pertence a D_k", params=params.label)

    intervalo = Interval(
        params=params,
        elements=membros,
        index=indice,
        lengths=tamanhos,
        left_up=tuple(_fechamento(decrescente, cobre_esq)),
        left_down=tuple(_fechamento(crescente, abaixo_esq)),
        right_up=tuple(_fechamento(decrescente, cobre_dir)),
        right_down=tuple(_fechamento(crescente, abaixo_dir)),
        atoms=atomos,
        identity=indice[identity(grupo_params)],
        delta=indice[delta],
        left_covers=tuple(tuple(r) for r in rotulos),
    )

    if verify:
        _verificar_intervalo(intervalo, grupo)

    logger.log_intervalo_construido(params.label, len(membros), tamanhos[intervalo.delta])
    logger.log_performance("build_interval", time.time() - inicio, {"params": params.label})
    return intervalo


def _verificar_intervalo(intervalo: Interval, grupo: List[GroupElement]):
    """Os divisores de λ^k no grupo todo, à esquerda e à direita, são exatamente os membros"""
    todos = (1 << len(intervalo)) - 1
    delta = intervalo.element(intervalo.delta)
    label = intervalo.params.label

    if intervalo.left_up[intervalo.identity] != todos or intervalo.right_up[intervalo.identity] != todos:
        raise TheoremViolationError("identidade não divide todos os membros", params=label)
    if intervalo.left_down[intervalo.delta] != todos or intervalo.right_down[intervalo.delta] != todos:
        raise TheoremViolationError("λ^k não é múltiplo de todos os membros", params=label)

    for w in grupo:
        membro = w in intervalo.index
        esquerda = left_divides(w, delta)
        direita = right_divides(w, delta)
        if not (membro == esquerda == direita):
            logger.log_violacao_teorema("[1, λ^k] = D_k", label, elemento=w.to_dict())
            raise TheoremViolationError(
                "[1, λ^k] difere de D_k",
                params=label, elemento=w.to_dict(), membro=membro, esquerda=esquerda, direita=direita,
            )
    logger.check("[1, λ^k] = D_k", True, label, tamanho=len(intervalo))


# ---------------------------------------------------------------------------
# Elementos equilibrados
# ---------------------------------------------------------------------------

def divisor_sets(w: GroupElement, cap: Optional[int] = None) -> Tuple[Set[GroupElement], Set[GroupElement]]:
    """(divisores à esquerda, divisores à direita) de w no grupo todo"""
    esquerda, direita = set(), set()
    for a in enumerate_group(params_of(w), cap):
        if length(a) > length(w):
            continue
        if left_divides(a, w):
            esquerda.add(a)
        if right_divides(a, w):
            direita.add(a)
    return esquerda, direita


def is_balanced(w: GroupElement, cap: Optional[int] = None) -> bool:
    esquerda, direita = divisor_sets(w, cap)
    return esquerda == direita


def balanced_max_length(params: GroupParams, cap: Optional[int] = None) -> List[GroupElement]:
    """Elementos equilibrados de comprimento máximo; devem ser exatamente λ^k, 1 <= k <= e-1"""
    grupo_params = params.without_k()
    equilibrados = [w for w in maximal_length_elements(grupo_params, cap) if is_balanced(w, cap)]
    esperados = {lambda_power(grupo_params, k) for k in range(1, params.e)}
    if set(equilibrados) != esperados:
        logger.log_violacao_teorema("equilibrados de comprimento máximo = {λ^k}", grupo_params.label)
        raise TheoremViolationError(
            "Equilibrados de comprimento máximo diferem de {λ^k}",
            params=grupo_params.label,
            encontrados=[w.to_dict() for w in equilibrados],
        )
    return equilibrados


# ---------------------------------------------------------------------------
# Encontros e junções
# ---------------------------------------------------------------------------

def _antichain(intervalo: Interval, side: Side, comum: int, maximais: bool) -> Tuple[int, ...]:
    acima = intervalo.up(side)
    abaixo = intervalo.down(side)
    resultado = []
    for c in iter_bits(comum):
        outros = (acima[c] if maximais else abaixo[c]) & comum
        if outros == 1 << c:
            resultado.append(c)
    return tuple(resultado)


def meet(intervalo: Interval, side: Side, a: int, b: int) -> Union[int, _NoCommonBound]:
    """Maior divisor comum de dois membros (ordinais) na ordem escolhida"""
    abaixo = intervalo.down(side)
    comum = abaixo[a] & abaixo[b]
    if not comum:
        return NO_COMMON_BOUND
    candidato = highest_bit(comum)
    if abaixo[candidato] != comum:
        violacao = LatticeViolation(side, "meet", (a, b), _antichain(intervalo, side, comum, True))
        raise LatticeViolationError(violacao)
    return candidato


def join(intervalo: Interval, side: Side, a: int, b: int) -> Union[int, _NoCommonBound]:
    """Menor múltiplo comum de dois membros dentro do intervalo"""
    acima = intervalo.up(side)
    comum = acima[a] & acima[b]
    if not comum:
        return NO_COMMON_BOUND
    candidato = lowest_bit(comum)
    if acima[candidato] != comum:
        violacao = LatticeViolation(side, "join", (a, b), _antichain(intervalo, side, comum, False))
        raise LatticeViolationError(violacao)
    return candidato


def meet_elements(intervalo: Interval, side: Side, a: GroupElement, b: GroupElement) -> GroupElement:
    resultado = meet(intervalo, side, intervalo.ordinal(a), intervalo.ordinal(b))
    return intervalo.element(resultado)


def join_elements(intervalo: Interval, side: Side, a: GroupElement, b: GroupElement) -> GroupElement:
    resultado = join(intervalo, side, intervalo.ordinal(a), intervalo.ordinal(b))
    return intervalo.element(resultado)


def verify_lattice(intervalo: Interval, cap: Optional[int] = None) -> LatticeReport:
    """Encontro e junção de todos os pares, nos dois lados. Violações viram dados do relatório"""
    cap = settings.PAIR_CAP if cap is None else cap
    total = len(intervalo)
    if total * total > cap:
        logger.log_limite_excedido("verify_lattice", cap, total * total)
        raise CapExceededError("verify_lattice", cap, total * total)

    flags = {}
    contraexemplo = None
    violacao = None
    pares = 0
    for side in (Side.LEFT, Side.RIGHT):
        for operacao, funcao in (("meet", meet), ("join", join)):
            ok = True
            for a in range(total):
                for b in range(a, total):
                    pares += 1
                    try:
                        funcao(intervalo, side, a, b)
                    except LatticeViolationError as exc:
                        ok = False
                        if violacao is None:
                            violacao = exc.violation
                            contraexemplo = (a, b)
                        break
                if not ok:
                    break
            flags[(side, operacao)] = ok

    relatorio = LatticeReport(
        is_meet_lattice_left=flags[(Side.LEFT, "meet")],
        is_join_lattice_left=flags[(Side.LEFT, "join")],
        is_meet_lattice_right=flags[(Side.RIGHT, "meet")],
        is_join_lattice_right=flags[(Side.RIGHT, "join")],
        pairs_checked=pares,
        counterexample=contraexemplo,
        violation=violacao,
    )
    logger.check("reticulado", relatorio.ok, intervalo.params.label, pares=pares)
    return relatorio


# ---------------------------------------------------------------------------
# mmc dos átomos
# ---------------------------------------------------------------------------

def expected_atom_lcm(x: Generator, y: Generator, k: int) -> Optional[Word]:
    """Fórmula fechada de x ∨ y para átomos distintos"""
    T, S = Generator.T, Generator.S
    if x.is_s and y.is_t:
        x, y = y, x
    if x.is_t and y.is_t:
        return Word((T(k), T(0)))
    if x.is_t:
        if y.index == 3:
            return Word((S(3), x, S(3)))
        return Word((x, y))
    i, j = sorted((x.index, y.index))
    if j == i + 1:
        return Word((S(i), S(j), S(i)))
    return Word((S(i), S(j)))


def atom_lcm_table(intervalo: Interval) -> Dict[Tuple[Generator, Generator], GroupElement]:
    """
    x ∨ y para todo par de átomos distintos. Confere as fórmulas fechadas e que x ∨_r y = x ∨ y.
    """
    k = intervalo.k
    grupo_params = intervalo.params.without_k()
    atomos = list(intervalo.atoms)
    tabela = {}
    for p, x in enumerate(atomos):
        for y in atomos[p + 1:]:
            a, b = intervalo.atoms[x], intervalo.atoms[y]
            esquerda = intervalo.element(join(intervalo, Side.LEFT, a, b))
            direita = intervalo.element(join(intervalo, Side.RIGHT, a, b))
            esperado = evaluate(expected_atom_lcm(x, y, k), grupo_params)
            if esquerda != esperado or direita != esquerda:
                logger.log_violacao_teorema(f"{x} ∨ {y}", intervalo.params.label)
                raise TheoremViolationError(
                    f"mmc de {x} e {y} diverge da fórmula",
                    params=intervalo.params.label,
                    esquerda=esquerda.to_dict(), direita=direita.to_dict(), esperado=esperado.to_dict(),
                )
            tabela[(x, y)] = esquerda
    logger.check("mmc dos átomos", True, intervalo.params.label, pares=len(tabela))
    return tabela


def complement_closure(intervalo: Interval) -> List[GroupElement]:
    """Membros w com w^{-1}λ^k ou λ^k w^{-1} fora de D_k (lista vazia = fechado)"""
    delta = intervalo.element(intervalo.delta)
    falhas = []
    for w in intervalo.elements:
        w_inv = inverse(w)
        if multiply(w_inv, delta) not in intervalo.index or multiply(delta, w_inv) not in intervalo.index:
            falhas.append(w)
    logger.check("fechamento por complemento", not falhas, intervalo.params.label)
    return falhas


def lcm_lemma_check(intervalo: Interval) -> List[Tuple[Generator, Generator, GroupElement]]:
    """
    Para todo membro w e átomos x != y com x ⪯ w e y ⪯ w, a fórmula de x ∨ y também divide w.
    Devolve os contraexemplos (x, y, w).
    """
    k = intervalo.k
    grupo_params = intervalo.params.without_k()
    atomos = list(intervalo.atoms.items())
    esperados = {}
    for p, (x, _) in enumerate(atomos):
        for y, _ in atomos[p + 1:]:
            esperados[(x, y)] = intervalo.ordinal(evaluate(expected_atom_lcm(x, y, k), grupo_params))

    falhas = []
    acima = intervalo.left_up
    for w in range(len(intervalo)):
        divisores = [(x, o) for x, o in atomos if (acima[o] >> w) & 1]
        for p, (x, _) in enumerate(divisores):
            for y, _ in divisores[p + 1:]:
                if not (acima[esperados[(x, y)]] >> w) & 1:
                    falhas.append((x, y, intervalo.element(w)))
    logger.check("lemas de mmc", not falhas, intervalo.params.label, falhas=len(falhas))
    return falhas
