# services/verification.py
import sys
import os
# Adiciona o diretório raiz do projeto ao path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import random
import time
from dataclasses import dataclass, field
from math import gcd
from typing import Any, Callable, Dict, List, Optional

from config.settings import settings
from models.garside_structure import GarsideStructure, NormalForm
from models.group_element import GroupElement
from models.group_params import GroupParams
from models.homology import AbelianGroup
from models.interval import Interval
from models.run_config import RunConfig
from services.garside import (
    build_garside, check_greedy, embedding_lcm_check, emit_presentation, evaluate_normal_form,
    is_isomorphic_to_CP, matsumoto_check, normal_form, t_cycle_components, tau_compatibility, words_equal,
)
from services.geen_core import (
    enumerate_group, evaluate, generator_matrix, generators, identity, inverse, lambda_power, multiply,
    relation_holds_in_group,
)
from services.homology import (
    check_chain_condition, compare_differentials, differential_closed_form, expected_h2,
    homology_group, v_basis_check,
)
from services.interval import (
    atom_lcm_table, balanced_max_length, block_word_criterion, build_interval, complement_closure,
    in_Dk, interval_size_formula, lcm_lemma_check, verify_lattice,
)
from services.words import (
    cayley_distances, length, length_decreases, reduced_expression, reduced_expression_blockwise,
)
from utils.error_handler import ErrorType, GarsideError, LatticeViolationError, TheoremViolationError
from utils.helpers import DELTA_TOKEN
from utils.logger import logger

SUITES = (
    "lengths", "interval", "balanced", "lattice", "lcm", "garside",
    "matsumoto", "iso", "homology", "embedding",
)

GENERIC_DIFFERENTIAL_MAX_SIMPLES = 400


@dataclass
class SuiteReport:
    suite: str
    params: str
    checks: List[Dict[str, Any]] = field(default_factory=list)
    skipped: Optional[str] = None
    duration: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c["passed"] for c in self.checks)

    def add(self, nome: str, passou: bool, **detalhes):
        self.checks.append({"name": nome, "passed": bool(passou), **detalhes})
        logger.check(nome, passou, self.params, **{k: v for k, v in detalhes.items() if k != "counterexample"})

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "passed": self.passed,
            "skipped": self.skipped,
            "checks": self.checks,
        }


def evaluate_signed(tokens, params: GroupParams) -> GroupElement:
    """Imagem em G(e,e,n) de uma palavra com inversos e Δ^{±1}"""
    grupo_params = params.without_k()
    k = params.require_k()
    delta = lambda_power(grupo_params, k)
    resultado = identity(grupo_params)
    for letra, sinal in tokens:
        if letra == DELTA_TOKEN:
            fator = delta if sinal > 0 else inverse(delta)
        else:
            fator = generator_matrix(letra, grupo_params)  # geradores são involuções em G
        resultado = multiply(resultado, fator)
    return resultado


def normal_form_tokens(g: GarsideStructure, nf: NormalForm):
    """Palavra assinada que representa a forma normal: Δ^p seguido das RE dos fatores"""
    sinal = 1 if nf.delta_power > 0 else -1
    tokens = [(DELTA_TOKEN, sinal)] * abs(nf.delta_power)
    for s in nf.factors:
        tokens.extend((x, 1) for x in reduced_expression(g.interval.element(s)))
    return tokens


class VerificationService:
    """Suítes de verificação exaustiva para um ponto (e, n, k)"""

    def __init__(self, config: RunConfig, samples: Optional[int] = None):
        self.config = config
        self.params = config.params
        self.samples = settings.SAMPLES if samples is None else samples
        self.random = random.Random(config.seed)
        self._intervalo: Optional[Interval] = None
        self._garside: Optional[GarsideStructure] = None

    # -- estruturas compartilhadas --------------------------------------------------

    @property
    def intervalo(self) -> Interval:
        if self._intervalo is None:
            self._intervalo = build_interval(self.params, verify=True, cap=self.config.group_cap)
        return self._intervalo

    @property
    def garside(self) -> GarsideStructure:
        if self._garside is None:
            self._garside = build_garside(self.intervalo, check_lattice=False)
        return self._garside

    def run(self, suite: str) -> List[SuiteReport]:
        nomes = SUITES if suite == "all" else (suite,)
        relatorios = []
        for nome in nomes:
            relatorios.append(self._executar(nome))
        return relatorios

    def _executar(self, nome: str) -> SuiteReport:
        metodo: Callable[[SuiteReport], None] = getattr(self, f"suite_{nome}")
        relatorio = SuiteReport(nome, self.params.label)
        logger.log_inicio_verificacao(nome, self.params.label)
        inicio = time.time()
        try:
            metodo(relatorio)
        except LatticeViolationError as exc:
            relatorio.add("reticulado", False, violation=exc.violation.to_dict())
        except TheoremViolationError as exc:
            relatorio.add("teorema", False, message=exc.message, details={k: str(v) for k, v in exc.details.items()})
        relatorio.duration = time.time() - inicio
        falhas = sum(1 for c in relatorio.checks if not c["passed"])
        logger.log_fim_verificacao(nome, self.params.label, len(relatorio.checks) - falhas, falhas)
        logger.log_performance(f"verify:{nome}", relatorio.duration, {"params": self.params.label})
        return relatorio

    def _exige_k(self, relatorio: SuiteReport) -> bool:
        if self.params.k is None:
            relatorio.skipped = "k ausente"
            return False
        return True

    def _exige_n3(self, relatorio: SuiteReport) -> bool:
        if self.params.n < 3:
            relatorio.skipped = "exige n >= 3"
            return False
        return self._exige_k(relatorio)

    # -- suítes ------------------------------------------------------------------------

    def suite_lengths(self, relatorio: SuiteReport):
        grupo_params = self.params.without_k()
        grupo = enumerate_group(grupo_params, self.config.group_cap)
        distancias = cayley_distances(grupo_params, self.config.group_cap)
        matrizes = [(x, generator_matrix(x, grupo_params)) for x in generators(grupo_params)]

        divergentes, passo, palavras = [], [], []
        for w in grupo:
            comprimento = length(w)
            if comprimento != distancias[w]:
                divergentes.append(w.to_dict())
            palavra = reduced_expression(w)
            if len(palavra) != comprimento or evaluate(palavra, grupo_params) != w:
                palavras.append(w.to_dict())
            elif evaluate(reduced_expression_blockwise(w).word(), grupo_params) != w:
                palavras.append(w.to_dict())
            for x, m in matrizes:
                diferenca = length(multiply(m, w)) - comprimento
                if abs(diferenca) != 1 or (diferenca == -1) != length_decreases(x, w):
                    passo.append((str(x), w.to_dict()))

        maximo = grupo_params.max_length
        censo = sum(1 for w in grupo if length(w) == maximo)
        relatorio.add("comprimento = distância BFS", not divergentes, counterexample=divergentes[:5])
        relatorio.add("RE(w) reduzida e correta", not palavras, counterexample=palavras[:5])
        relatorio.add("|ℓ(xw) - ℓ(w)| = 1", not passo, counterexample=passo[:5])
        relatorio.add(
            "censo de comprimento máximo", censo == (grupo_params.e - 1) ** (grupo_params.n - 1),
            encontrados=censo, maximo=max(distancias.values()) == maximo,
        )

    def suite_interval(self, relatorio: SuiteReport):
        if not self._exige_k(relatorio):
            return
        intervalo = self.intervalo  # build_interval já confronta D_k com os divisores de λ^k
        k = self.params.k
        relatorio.add("[1, λ^k] = D_k", True, tamanho=len(intervalo))
        esperado = interval_size_formula(self.params.e, self.params.n)
        relatorio.add("|D_k| pela fórmula", len(intervalo) == esperado, tamanho=len(intervalo), esperado=esperado)
        divergentes = [
            w.to_dict() for w in enumerate_group(self.params.without_k(), self.config.group_cap)
            if in_Dk(w, k) != block_word_criterion(w, k)
        ]
        relatorio.add("critério de escada = critério por blocos", not divergentes, counterexample=divergentes[:5])
        falhas = complement_closure(intervalo)
        relatorio.add("fechamento por complemento", not falhas, counterexample=[w.to_dict() for w in falhas[:5]])

    def suite_balanced(self, relatorio: SuiteReport):
        equilibrados = balanced_max_length(self.params, self.config.group_cap)
        relatorio.add("equilibrados de comprimento máximo = {λ^k}", len(equilibrados) == self.params.e - 1,
                      total=len(equilibrados))

    def suite_lattice(self, relatorio: SuiteReport):
        if not self._exige_k(relatorio):
            return
        resultado = verify_lattice(self.intervalo)
        relatorio.add("reticulados (⪯ e ⪯_r)", resultado.ok, **resultado.to_dict())

    def suite_lcm(self, relatorio: SuiteReport):
        if not self._exige_k(relatorio):
            return
        tabela = atom_lcm_table(self.intervalo)
        relatorio.add("mmc dos átomos", True, pares=len(tabela))
        falhas = lcm_lemma_check(self.intervalo)
        relatorio.add(
            "lemas de mmc", not falhas,
            counterexample=[(str(x), str(y), w.to_dict()) for x, y, w in falhas[:5]],
        )

    def _palavra_aleatoria(self, tamanho: int):
        letras = list(self.garside.interval.atoms)
        tokens = []
        for _ in range(tamanho):
            if self.random.random() < 0.05:
                tokens.append((DELTA_TOKEN, self.random.choice((1, -1))))
            else:
                tokens.append((self.random.choice(letras), self.random.choice((1, 1, -1))))
        return tokens

    def suite_garside(self, relatorio: SuiteReport):
        if not self._exige_k(relatorio):
            return
        g = self.garside
        atomos = sum(1 for c in g.interval.lengths if c == 1)
        relatorio.add("número de átomos", atomos == self.params.atom_count, atomos=atomos)

        apresentacao = emit_presentation(self.params)
        falhas = [
            str(r) for r in apresentacao.relations
            if not words_equal(g, r.left, r.right) or not relation_holds_in_group(r, self.params.without_k())
        ]
        relatorio.add("relações definidoras", not falhas, counterexample=falhas[:5])
        relatorio.add("compatibilidade com τ", tau_compatibility(g), tau_trivial=g.tau_is_trivial)

        relatores = [(r.left, r.right) for r in apresentacao.relations]
        problemas = []
        for _ in range(self.samples):
            tokens = self._palavra_aleatoria(self.random.randint(0, 8))
            nf = normal_form(g, tokens)
            if not check_greedy(g, nf):
                problemas.append(("gulosa", tokens))
            elif normal_form(g, normal_form_tokens(g, nf)) != nf:
                problemas.append(("idempotente", tokens))
            elif evaluate_normal_form(g, nf) != evaluate_signed(tokens, self.params):
                problemas.append(("imagem no grupo", tokens))
            elif relatores:
                esquerda, direita = self.random.choice(relatores)
                posicao = self.random.randint(0, len(tokens))
                relator = [(x, 1) for x in esquerda] + [(x, -1) for x in reversed(direita.letters)]
                if normal_form(g, tokens[:posicao] + relator + tokens[posicao:]) != nf:
                    problemas.append(("confluência", tokens))
        relatorio.add(
            "forma normal (amostras)", not problemas, amostras=self.samples,
            counterexample=[(motivo, [(str(x), s) for x, s in t]) for motivo, t in problemas[:5]],
        )

    def suite_matsumoto(self, relatorio: SuiteReport):
        if not self._exige_k(relatorio):
            return
        g = self.garside
        falhas = [
            g.interval.element(s).to_dict() for s in range(len(g.interval))
            if not matsumoto_check(g, s, self.config.rewrite_cap)
        ]
        relatorio.add("expressões reduzidas numa única classe", not falhas, counterexample=falhas[:5])

    def suite_iso(self, relatorio: SuiteReport):
        e = self.params.e
        ks = [self.params.k] if self.params.k is not None else list(range(1, e))
        for k in ks:
            testemunha = is_isomorphic_to_CP(e, k, n=self.params.n)
            relatorio.add(
                f"isomorfismo com CP (k={k})",
                testemunha.isomorphic == (gcd(e, k) == 1) and testemunha.verified,
                **testemunha.to_dict(),
            )
            componentes = t_cycle_components(e, k)
            relatorio.add(f"componentes do ciclo t (k={k})", componentes == gcd(e, k), componentes=componentes)

    def suite_homology(self, relatorio: SuiteReport):
        if not self._exige_n3(relatorio):
            return
        g = self.garside
        d2, d3 = differential_closed_form(g, 2), differential_closed_form(g, 3)
        relatorio.add("d_2 ∘ d_3 = 0", check_chain_condition(d2, d3))
        relatorio.add("identidades da base v", v_basis_check(g))

        h1 = homology_group(g, 1)
        relatorio.add("H_1 = ℤ", h1 == AbelianGroup(1, ()), obtido=h1.to_dict())
        h2 = homology_group(g, 2)
        esperado = expected_h2(self.params.e, self.params.n, self.params.k)
        relatorio.add("H_2 pela fórmula", h2 == esperado, obtido=h2.to_dict(), esperado=esperado.to_dict())

        if len(g.interval) <= GENERIC_DIFFERENTIAL_MAX_SIMPLES:
            for r in (2, 3):
                divergencias = compare_differentials(g, r)
                relatorio.add(f"d_{r} fechado = genérico", not divergencias, counterexample=divergencias[:3])

    def suite_embedding(self, relatorio: SuiteReport):
        if not self._exige_n3(relatorio):
            return
        resultados = [embedding_lcm_check(self.garside, i) for i in range(self.params.e)]
        relatorio.add("mmc compatível com o mergulho de B(2,1,n-1)", all(resultados))


def run_verification(config: RunConfig, suite: str = "all", samples: Optional[int] = None) -> List[SuiteReport]:
    if suite != "all" and suite not in SUITES:
        raise GarsideError(f"Suíte desconhecida: {suite}", error_type=ErrorType.ERRO_USO)
    return VerificationService(config, samples).run(suite)
