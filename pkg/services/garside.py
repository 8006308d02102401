# services/garside.py
import sys
import os
# Adiciona o diretório raiz do projeto ao path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from collections import deque
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from config.settings import settings
from models.garside_structure import GarsideStructure, IsomorphismWitness, NormalForm, Presentation
from models.group_element import Generator, GroupElement
from models.group_params import GroupParams
from models.interval import Interval, Side
from models.word import Relation, Word
from services.geen_core import (
    cp_relations, evaluate, generators, inverse, lambda_power, multiply, presentation_relations,
)
from services.interval import build_interval, join, meet, verify_lattice
from services.words import all_reduced_expressions, reduced_expression
from utils.error_handler import (
    CapExceededError, LatticeViolationError, ParameterError, TheoremViolationError,
)
from utils.helpers import DELTA_TOKEN, parse_signed_word
from utils.logger import logger

SignedLetter = Tuple[Union[Generator, str], int]


# ---------------------------------------------------------------------------
# Estrutura de Garside
# ---------------------------------------------------------------------------

def build_garside(interval: Interval, check_lattice: bool = True) -> GarsideStructure:
    """Tabelas de complemento e de τ sobre os simples de [1, λ^k]"""
    if check_lattice:
        relatorio = verify_lattice(interval)
        if not relatorio.ok:
            raise LatticeViolationError(relatorio.violation)

    label = interval.params.label
    delta = interval.element(interval.delta)
    delta_inv = inverse(delta)
    comprimento_delta = interval.lengths[interval.delta]

    complemento, complemento_esq, tau = [], [], []
    for s, w in enumerate(interval.elements):
        w_inv = inverse(w)
        direita = interval.index.get(multiply(w_inv, delta))
        esquerda = interval.index.get(multiply(delta, w_inv))
        conjugado = interval.index.get(multiply(multiply(delta_inv, w), delta))
        if direita is None or esquerda is None or conjugado is None:
            logger.log_violacao_teorema("complementos e τ dentro do intervalo", label, simples=s)
            raise TheoremViolationError("Complemento ou τ fora do intervalo", params=label, elemento=w.to_dict())
        if interval.lengths[s] + interval.lengths[direita] != comprimento_delta:
            raise TheoremViolationError("ℓ(s) + ℓ(∂(s)) != ℓ(Δ)", params=label, elemento=w.to_dict())
        complemento.append(direita)
        complemento_esq.append(esquerda)
        tau.append(conjugado)

    if sorted(tau) != list(range(len(interval))):
        raise TheoremViolationError("τ não é bijeção dos simples", params=label)
    tau_inv = [0] * len(tau)
    for s, t in enumerate(tau):
        tau_inv[t] = s

    estrutura = GarsideStructure(
        interval=interval,
        complement=tuple(complemento),
        left_complement=tuple(complemento_esq),
        tau=tuple(tau),
        tau_inverse=tuple(tau_inv),
    )
    logger.debug("Estrutura de Garside construída", label, tau_trivial=estrutura.tau_is_trivial)
    return estrutura


def garside_for(params: GroupParams, check_lattice: bool = True) -> GarsideStructure:
    return build_garside(build_interval(params), check_lattice=check_lattice)


# ---------------------------------------------------------------------------
# Forma normal
# ---------------------------------------------------------------------------

def normalize_pair(g: GarsideStructure, a: int, b: int) -> Tuple[int, int]:
    """(a, b) -> (a·t, t^{-1}·b) com t = ∂(a) ∧ b"""
    intervalo = g.interval
    t = meet(intervalo, Side.LEFT, g.complement[a], b)
    if t == g.identity:
        return a, b
    elemento_t = intervalo.element(t)
    novo_a = multiply(intervalo.element(a), elemento_t)
    novo_b = multiply(inverse(elemento_t), intervalo.element(b))
    return intervalo.index[novo_a], intervalo.index[novo_b]


def _normalizar(g: GarsideStructure, delta_power: int, fatores: List[int]) -> NormalForm:
    mudou = True
    while mudou:
        mudou = False
        for i in range(len(fatores) - 1):
            par = normalize_pair(g, fatores[i], fatores[i + 1])
            if par != (fatores[i], fatores[i + 1]):
                fatores[i], fatores[i + 1] = par
                mudou = True

    fatores = [s for s in fatores if s != g.identity]
    while fatores and fatores[0] == g.delta:
        delta_power += 1
        fatores.pop(0)
    return NormalForm(delta_power, tuple(fatores))


class _Acumulador:
    """Δ^p · A sendo multiplicado à direita"""

    def __init__(self, g: GarsideStructure, delta_power: int = 0, fatores: Iterable[int] = ()):
        self.g = g
        self.p = delta_power
        self.fatores = list(fatores)

    def simples(self, s: int):
        self.fatores.append(s)

    def delta(self, sinal: int):
        # A·Δ = Δ·τ(A) e A·Δ^{-1} = Δ^{-1}·τ^{-1}(A)
        tabela = self.g.tau if sinal > 0 else self.g.tau_inverse
        self.p += sinal
        self.fatores = [tabela[s] for s in self.fatores]

    def inverso_simples(self, s: int):
        # s^{-1} = Δ^{-1} · ∂'(s)
        self.delta(-1)
        self.fatores.append(self.g.left_complement[s])

    def resultado(self) -> NormalForm:
        return _normalizar(self.g, self.p, self.fatores)


def _ordinal_do_gerador(g: GarsideStructure, x: Generator) -> int:
    x.validate(g.params)
    return g.interval.atoms[x]


def normal_form(g: GarsideStructure, word: Union[str, Word, Sequence[SignedLetter]]) -> NormalForm:
    """Forma normal de uma palavra com inversos ('t0 s3 t1^-1', também aceita D e D^-1)"""
    if isinstance(word, str):
        letras = parse_signed_word(word)
    elif isinstance(word, Word):
        letras = [(x, 1) for x in word]
    else:
        letras = list(word)

    acumulador = _Acumulador(g)
    for letra, sinal in letras:
        if letra == DELTA_TOKEN:
            acumulador.delta(sinal)
        elif sinal > 0:
            acumulador.simples(_ordinal_do_gerador(g, letra))
        else:
            acumulador.inverso_simples(_ordinal_do_gerador(g, letra))
    return acumulador.resultado()


def words_equal(g: GarsideStructure, w1, w2) -> bool:
    return normal_form(g, w1) == normal_form(g, w2)


def nf_of_simple(g: GarsideStructure, s: int) -> NormalForm:
    if s == g.identity:
        return NormalForm()
    if s == g.delta:
        return NormalForm(1, ())
    return NormalForm(0, (s,))


def nf_multiply(g: GarsideStructure, x: NormalForm, y: NormalForm) -> NormalForm:
    """Δ^p A · Δ^q B = Δ^{p+q} τ^q(A) B"""
    acumulador = _Acumulador(g, x.delta_power, x.factors)
    sinal = 1 if y.delta_power > 0 else -1
    for _ in range(abs(y.delta_power)):
        acumulador.delta(sinal)
    for s in y.factors:
        acumulador.simples(s)
    return acumulador.resultado()


def nf_inverse(g: GarsideStructure, x: NormalForm) -> NormalForm:
    acumulador = _Acumulador(g)
    for s in reversed(x.factors):
        acumulador.inverso_simples(s)
    sinal = -1 if x.delta_power > 0 else 1
    for _ in range(abs(x.delta_power)):
        acumulador.delta(sinal)
    return acumulador.resultado()


def is_positive(nf: NormalForm) -> bool:
    return nf.delta_power >= 0


def evaluate_normal_form(g: GarsideStructure, nf: NormalForm) -> GroupElement:
    """Imagem da forma normal em G(e,e,n)"""
    grupo_params = g.params.without_k()
    k = g.params.require_k()
    resultado = lambda_power(grupo_params, (k * nf.delta_power) % g.params.e)
    for s in nf.factors:
        resultado = multiply(resultado, g.interval.element(s))
    return resultado


def check_greedy(g: GarsideStructure, nf: NormalForm) -> bool:
    """Fatores próprios e ∂(a) ∧ b = 1 em cada par adjacente"""
    if any(s in (g.identity, g.delta) for s in nf.factors):
        return False
    for a, b in zip(nf.factors, nf.factors[1:]):
        if meet(g.interval, Side.LEFT, g.complement[a], b) != g.identity:
            return False
    return True


# ---------------------------------------------------------------------------
# Apresentação e isomorfismo com CP
# ---------------------------------------------------------------------------

def emit_presentation(params: GroupParams) -> Presentation:
    k = params.require_k()
    return Presentation(
        params=params,
        generators=tuple(generators(params.without_k())),
        relations=tuple(presentation_relations(params.without_k(), k)),
    )


def t_cycle_components(e: int, k: int) -> int:
    """Componentes conexas do grafo em Z/eZ com arestas {i, i-k}"""
    if not 1 <= k <= e - 1:
        raise ParameterError(f"k deve estar entre 1 e {e - 1}", e=e, k=k)
    visitados = set()
    componentes = 0
    for inicio in range(e):
        if inicio in visitados:
            continue
        componentes += 1
        fila = deque([inicio])
        visitados.add(inicio)
        while fila:
            i = fila.popleft()
            for vizinho in ((i - k) % e, (i + k) % e):
                if vizinho not in visitados:
                    visitados.add(vizinho)
                    fila.append(vizinho)
    return componentes


def _aplicar(mapa: Dict[Generator, Generator], palavra: Word) -> Word:
    return Word(tuple(mapa.get(x, x) for x in palavra))


def _relacoes_preservadas(g: GarsideStructure, relacoes: Iterable[Relation], mapa) -> List[str]:
    falhas = []
    for relacao in relacoes:
        if not words_equal(g, _aplicar(mapa, relacao.left), _aplicar(mapa, relacao.right)):
            falhas.append(str(relacao))
    return falhas


def is_isomorphic_to_CP(e: int, k: int, n: int = 3) -> IsomorphismWitness:
    """
    B^⊕k(e,e,n) ≅ monoide CP sse k ∧ e = 1. Quando isomórfico, o mapa t_i -> t_{ik} (a identidade
    para k = 1) e seu inverso são conferidos nas relações dos dois lados. O mapa t_i -> t_{(i+1)k}
    é este composto com a rotação t_i -> t_{i+1}, que é automorfismo de CP.
    """
    params = GroupParams.build(e, n, k)
    if gcd(k, e) != 1:
        return IsomorphismWitness(e=e, k=k, n=n, isomorphic=False)

    T = Generator.T
    mapa = {T(i): T((i * k) % e) for i in range(e)}
    inverso = {y: x for x, y in mapa.items()}
    bijetivo = len(inverso) == e

    alvo = garside_for(params, check_lattice=False)
    origem = alvo if k == 1 else garside_for(params.with_k(1), check_lattice=False)

    falhas = _relacoes_preservadas(alvo, cp_relations(params.without_k()), mapa)
    falhas_inv = _relacoes_preservadas(origem, presentation_relations(params.without_k(), k), inverso)

    testemunha = IsomorphismWitness(
        e=e, k=k, n=n, isomorphic=True, mapping=mapa,
        relations_preserved=not falhas,
        inverse_relations_preserved=not falhas_inv,
        bijective_on_generators=bijetivo,
        failed_relations=falhas + falhas_inv,
    )
    logger.check("isomorfismo com CP", testemunha.verified, params.label)
    return testemunha


# ---------------------------------------------------------------------------
# Matsumoto e mergulho de B(2,1,n-1)
# ---------------------------------------------------------------------------

def _reescritas(palavra: Tuple[Generator, ...], regras: List[Tuple[Tuple[Generator, ...], Tuple[Generator, ...]]]):
    for esquerda, direita in regras:
        m = len(esquerda)
        for pos in range(len(palavra) - m + 1):
            if palavra[pos:pos + m] == esquerda:
                yield palavra[:pos] + direita + palavra[pos + m:]


def matsumoto_check(g: GarsideStructure, w: Union[int, GroupElement], cap: Optional[int] = None) -> bool:
    """Todas as expressões reduzidas de w ficam numa única classe sob as relações de B^⊕k"""
    cap = settings.REWRITE_CAP if cap is None else cap
    elemento = g.interval.element(w) if isinstance(w, int) else w
    reduzidas = {x.letters for x in all_reduced_expressions(elemento, cap)}
    if len(reduzidas) <= 1:
        return True

    regras = []
    for relacao in emit_presentation(g.params).relations:
        regras.append((relacao.left.letters, relacao.right.letters))
        regras.append((relacao.right.letters, relacao.left.letters))

    inicio = min(reduzidas, key=lambda p: [str(x) for x in p])
    classe = {inicio}
    fila = deque([inicio])
    while fila:
        atual = fila.popleft()
        for vizinha in _reescritas(atual, regras):
            if vizinha not in classe:
                classe.add(vizinha)
                if len(classe) > cap:
                    logger.log_limite_excedido("matsumoto_check", cap)
                    raise CapExceededError("matsumoto_check", cap)
                fila.append(vizinha)
    return reduzidas <= classe


def _artin_lcm_word(a: List[Generator], b: List[Generator], m: int) -> Word:
    """Palavra alternada a b a b ... de comprimento m, com a e b já substituídos pelas imagens"""
    letras: List[Generator] = []
    for p in range(m):
        letras.extend(a if p % 2 == 0 else b)
    return Word(tuple(letras))


def embedding_lcm_check(g: GarsideStructure, i: int = 0) -> bool:
    """
    q_1 -> t_i t_{i-k}, q_m -> s_{m+1}: o mmc no intervalo das imagens de dois geradores de
    B(2,1,n-1) coincide com a imagem do mmc de Artin.
    """
    params = g.params
    n, e, k = params.n, params.e, params.require_k()
    if n < 3:
        raise ParameterError("embedding_lcm_check exige n >= 3", n=n)

    grupo_params = params.without_k()
    imagens = {1: [Generator.T(i % e), Generator.T((i - k) % e)]}
    for m in range(2, n):
        imagens[m] = [Generator.S(m + 1)]

    def ordem_artin(a: int, b: int) -> int:
        if {a, b} == {1, 2}:
            return 4
        if abs(a - b) == 1:
            return 3
        return 2

    tudo_ok = True
    for a in range(1, n):
        for b in range(a + 1, n):
            sa = g.interval.ordinal(evaluate(Word(tuple(imagens[a])), grupo_params))
            sb = g.interval.ordinal(evaluate(Word(tuple(imagens[b])), grupo_params))
            juncao = join(g.interval, Side.LEFT, sa, sb)
            artin = normal_form(g, _artin_lcm_word(imagens[a], imagens[b], ordem_artin(a, b)))
            ok = nf_of_simple(g, juncao) == artin
            logger.check(f"mergulho q{a} ∨ q{b}", ok, params.label)
            tudo_ok = tudo_ok and ok
    return tudo_ok


def tau_compatibility(g: GarsideStructure) -> bool:
    """
    A forma normal de D·RE(s)·D^-1 é um único simples cuja imagem em G(e,e,n) é λ^k s λ^{-k},
    calculado direto nas matrizes, para todo simples próprio s.
    """
    grupo_params = g.params.without_k()
    lam = lambda_power(grupo_params, g.params.require_k())
    lam_inv = inverse(lam)
    for s in range(len(g.interval)):
        if s in (g.identity, g.delta):
            continue
        x = g.interval.element(s)
        esperado = multiply(multiply(lam, x), lam_inv)
        expressao = reduced_expression(x)
        if evaluate(expressao, grupo_params) != x:
            return False
        palavra = [(DELTA_TOKEN, 1)] + [(y, 1) for y in expressao] + [(DELTA_TOKEN, -1)]
        nf = normal_form(g, palavra)
        if nf.delta_power != 0 or len(nf.factors) != 1:
            logger.debug("τ: forma normal com mais de um fator", g.params.label, simples=s)
            return False
        if esperado not in g.interval or evaluate_normal_form(g, nf) != esperado:
            logger.debug("τ: imagem no grupo diverge", g.params.label, simples=s)
            return False
        if nf.factors[0] != g.interval.ordinal(esperado):
            return False
    return True


def atom_simples(g: GarsideStructure) -> List[int]:
    return [s for s, comprimento in enumerate(g.interval.lengths) if comprimento == 1]
