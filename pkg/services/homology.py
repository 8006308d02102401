# services/homology.py
import sys
import os
# Adiciona o diretório raiz do projeto ao path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import time
from collections import defaultdict
from itertools import combinations
from math import gcd
from typing import Dict, List, Optional, Tuple

from config.settings import settings
from models.garside_structure import GarsideStructure, NormalForm
from models.group_element import Generator
from models.homology import AbelianGroup, Cell, IntMatrix
from models.interval import Side
from services.geen_core import inverse, multiply
from services.garside import is_positive, nf_inverse, nf_multiply, nf_of_simple
from services.interval import join
from services.smith import smith_normal_form
from utils.error_handler import CapExceededError, ParameterError, TheoremViolationError
from utils.logger import logger

Chain = Dict[Tuple[NormalForm, Cell], int]

EMPTY_CELL = Cell(())


# ---------------------------------------------------------------------------
# Células
# ---------------------------------------------------------------------------

def _atomos_ordenados(g: GarsideStructure) -> List[Generator]:
    return sorted(g.interval.atoms, key=lambda x: x.dl_key)


def _lcm(g: GarsideStructure, atomos) -> int:
    """mmc à direita de um conjunto de átomos, como ordinal de simples"""
    intervalo = g.interval
    resultado = intervalo.identity
    for x in atomos:
        resultado = join(intervalo, Side.RIGHT, resultado, intervalo.atoms[x])
    return resultado


def _menor_divisor_direito_simples(g: GarsideStructure, s: int) -> Optional[Generator]:
    acima = g.interval.right_up
    for x in _atomos_ordenados(g):
        if (acima[g.interval.atoms[x]] >> s) & 1:
            return x
    return None


def is_cell(g: GarsideStructure, atomos: Tuple[Generator, ...]) -> bool:
    """x_i = d(lcm(x_i, ..., x_r)) para toda posição i"""
    for i in range(len(atomos)):
        if _menor_divisor_direito_simples(g, _lcm(g, atomos[i:])) != atomos[i]:
            return False
    return True


def enumerate_cells(g: GarsideStructure, r: int) -> List[Cell]:
    if r < 0:
        raise ParameterError("dimensão de célula negativa", r=r)
    if r == 0:
        return [EMPTY_CELL]
    atomos = _atomos_ordenados(g)
    return [Cell(c) for c in combinations(atomos, r) if is_cell(g, c)]


# ---------------------------------------------------------------------------
# Diferenciais em forma fechada (coeficientes triviais)
# ---------------------------------------------------------------------------

def _tipo_par(x: Generator, y: Generator) -> str:
    """'t' para pares de t's, 'b' se xyx = yxy, 'c' se comutam"""
    if x.is_t and y.is_t:
        return "t"
    if x.is_s and y.is_s:
        return "b" if abs(x.index - y.index) == 1 else "c"
    s = x if x.is_s else y
    return "b" if s.index == 3 else "c"


def _somar(coluna: Dict[Cell, int], coef: int, *atomos: Generator):
    celula = Cell(tuple(sorted(atomos, key=lambda x: x.dl_key)))
    coluna[celula] += coef


def _d2_fechado(cell: Cell, e: int, k: int) -> Dict[Cell, int]:
    x, y = cell.atoms
    T = Generator.T
    coluna: Dict[Cell, int] = defaultdict(int)
    tipo = _tipo_par(x, y)
    if tipo == "t":
        i = y.index
        _somar(coluna, 1, T(i))
        _somar(coluna, -1, T(0))
        _somar(coluna, -1, T(k % e))
        _somar(coluna, 1, T((i + k) % e))
    elif tipo == "b":
        _somar(coluna, 1, y)
        _somar(coluna, -1, x)
    return {c: v for c, v in coluna.items() if v}


def _d3_fechado(cell: Cell, e: int, k: int) -> Dict[Cell, int]:
    x, y, z = cell.atoms
    T = Generator.T
    coluna: Dict[Cell, int] = defaultdict(int)

    if y.is_t:
        # [s_j, t_0, t_i]
        if y.index != 0 or not x.is_s:
            raise TheoremViolationError("3-célula fora dos casos conhecidos", celula=str(cell))
        s, j = x, z.index
        if s.index == 3:
            termos = [
                (1, (T(0), T(j))), (-1, (s, T(j))), (1, (T(0), T(k % e))),
                (1, (s, T(0))), (-1, (s, T(2 * k % e))),
            ]
            if (j + k) % e != 0:
                termos += [(-1, (T(0), T((j + k) % e))), (1, (s, T((j + 2 * k) % e)))]
            else:
                termos += [(1, (s, T(k % e)))]
        else:
            termos = [
                (-1, (s, T(j))), (1, (s, T(0))), (-1, (s, T((j + k) % e))), (1, (s, T(k % e))),
            ]
        for coef, par in termos:
            _somar(coluna, coef, *par)
        return {c: v for c, v in coluna.items() if v}

    tipos = (_tipo_par(x, y), _tipo_par(x, z), _tipo_par(y, z))
    if tipos == ("b", "c", "b"):
        _somar(coluna, -2, x, z)
    elif tipos == ("b", "c", "c"):
        _somar(coluna, 1, y, z)
        _somar(coluna, -1, x, z)
    elif tipos == ("c", "c", "b"):
        _somar(coluna, 1, x, y)
        _somar(coluna, -1, x, z)
    elif tipos != ("c", "c", "c"):
        raise TheoremViolationError("3-célula fora dos casos conhecidos", celula=str(cell), tipos=tipos)
    return {c: v for c, v in coluna.items() if v}


def differential_closed_form(g: GarsideStructure, r: int) -> IntMatrix:
    if r not in (1, 2, 3):
        raise ParameterError("differential_closed_form cobre r = 1, 2, 3", r=r)
    e, k = g.params.e, g.params.require_k()
    linhas = enumerate_cells(g, r - 1)
    colunas = enumerate_cells(g, r)
    if r == 1:
        return IntMatrix.zeros(linhas, colunas)
    formula = _d2_fechado if r == 2 else _d3_fechado
    return IntMatrix.from_columns(linhas, colunas, [formula(c, e, k) for c in colunas])


# ---------------------------------------------------------------------------
# Diferencial genérico (recursão ∂ / s / u com coeficientes no monoide)
# ---------------------------------------------------------------------------

class _ComplexoGenerico:
    """
    ∂_{r+1}[α, A] = α_{/A}[A] - u_r(α_{/A}[A]), u_0(f[∅]) = [∅], u_{r+1} = s_r ∘ ∂_{r+1}.
    s_r(x[A]) = 0 se α = d(x·lcm(A)) é o primeiro átomo de A (ou x·lcm(A) = 1); senão, com
    x = y·α_{/A}, s_r(x[A]) = y[α, A] + s_r(y·u_r(α_{/A}[A])).
    """

    def __init__(self, g: GarsideStructure, recursion_cap: Optional[int] = None):
        self.g = g
        self.cap = settings.RECURSION_CAP if recursion_cap is None else recursion_cap
        self.profundidade = 0
        self.atomos = _atomos_ordenados(g)
        self.inverso_atomo = {x: nf_inverse(g, nf_of_simple(g, g.interval.atoms[x])) for x in self.atomos}
        self.celulas = {c for r in range(0, 4) for c in enumerate_cells(g, r)}
        self._bordo: Dict[Cell, Chain] = {}
        self._s: Dict[Tuple[NormalForm, Cell], Chain] = {}
        self._lcm: Dict[Cell, int] = {}
        self._quociente: Dict[Tuple[Generator, Cell], int] = {}

    # -- auxiliares sobre simples ---------------------------------------------------

    def lcm(self, cell: Cell) -> int:
        if cell not in self._lcm:
            self._lcm[cell] = _lcm(self.g, cell.atoms)
        return self._lcm[cell]

    def quociente(self, alpha: Generator, cell: Cell) -> int:
        """α_{/A} = lcm(α, A)·lcm(A)^{-1}"""
        chave = (alpha, cell)
        if chave not in self._quociente:
            intervalo = self.g.interval
            topo = intervalo.element(self.lcm(cell.prepend(alpha)))
            base = intervalo.element(self.lcm(cell))
            self._quociente[chave] = intervalo.ordinal(multiply(topo, inverse(base)))
        return self._quociente[chave]

    def menor_divisor_direito(self, f: NormalForm) -> Optional[Generator]:
        for x in self.atomos:
            if is_positive(nf_multiply(self.g, f, self.inverso_atomo[x])):
                return x
        return None

    # -- cadeias ------------------------------------------------------------------

    @staticmethod
    def _acumular(destino: Chain, origem: Chain, fator: int = 1):
        for chave, coef in origem.items():
            destino[chave] = destino.get(chave, 0) + fator * coef
            if destino[chave] == 0:
                del destino[chave]

    def _multiplicar_esquerda(self, f: NormalForm, cadeia: Chain) -> Chain:
        resultado: Chain = {}
        for (coef_nf, celula), coef in cadeia.items():
            self._acumular(resultado, {(nf_multiply(self.g, f, coef_nf), celula): coef})
        return resultado

    def bordo(self, cell: Cell) -> Chain:
        if cell not in self._bordo:
            if cell.dimension == 0:
                raise ParameterError("∂_0 não é definido aqui")
            alpha, resto = cell.head(), cell.tail()
            q = nf_of_simple(self.g, self.quociente(alpha, resto))
            termo = {(q, resto): 1}
            resultado = dict(termo)
            self._acumular(resultado, self.u(termo, resto.dimension), -1)
            self._bordo[cell] = resultado
        return self._bordo[cell]

    def u(self, cadeia: Chain, r: int) -> Chain:
        """u_r sobre uma cadeia de r-células"""
        if r == 0:
            total = sum(cadeia.values())
            return {(NormalForm(), EMPTY_CELL): total} if total else {}
        resultado: Chain = {}
        for (f, celula), coef in cadeia.items():
            imagem = self._multiplicar_esquerda(f, self.bordo(celula))
            self._acumular(resultado, self.s(imagem), coef)
        return resultado

    def s(self, cadeia: Chain) -> Chain:
        resultado: Chain = {}
        for (x, celula), coef in cadeia.items():
            self._acumular(resultado, self.s_termo(x, celula), coef)
        return resultado

    def s_termo(self, x: NormalForm, cell: Cell) -> Chain:
        chave = (x, cell)
        if chave in self._s:
            return self._s[chave]

        self.profundidade += 1
        if self.profundidade > self.cap:
            logger.log_limite_excedido("differential_generic", self.cap)
            raise CapExceededError("differential_generic (recursão)", self.cap)
        try:
            produto = nf_multiply(self.g, x, nf_of_simple(self.g, self.lcm(cell)))
            alpha = self.menor_divisor_direito(produto)
            if alpha is None or (cell.dimension and alpha == cell.head()):
                resultado: Chain = {}
            else:
                nova = cell.prepend(alpha)
                if nova not in self.celulas:
                    raise TheoremViolationError("s_r produziu uma não-célula", celula=str(nova))
                q = self.quociente(alpha, cell)
                q_nf = nf_of_simple(self.g, q)
                y = nf_multiply(self.g, x, nf_inverse(self.g, q_nf))
                resultado = {(y, nova): 1}
                correcao = self._multiplicar_esquerda(y, self.u({(q_nf, cell): 1}, cell.dimension))
                self._acumular(resultado, self.s(correcao))
        finally:
            self.profundidade -= 1

        self._s[chave] = resultado
        return resultado


def boundary_chain(g: GarsideStructure, cell: Cell) -> Chain:
    """∂_r[A] com coeficientes no monoide (formas normais)"""
    return _ComplexoGenerico(g).bordo(cell)


def differential_generic(g: GarsideStructure, r: int, recursion_cap: Optional[int] = None) -> IntMatrix:
    if r not in (1, 2, 3):
        raise ParameterError("differential_generic cobre r = 1, 2, 3", r=r)
    inicio = time.time()
    complexo = _ComplexoGenerico(g, recursion_cap)
    linhas = enumerate_cells(g, r - 1)
    colunas = enumerate_cells(g, r)

    aumentadas = []
    for celula in colunas:
        coluna: Dict[Cell, int] = defaultdict(int)
        for (_, destino), coef in complexo.bordo(celula).items():
            coluna[destino] += coef
        aumentadas.append({c: v for c, v in coluna.items() if v})

    logger.log_performance("differential_generic", time.time() - inicio, {"r": r, "params": g.params.label})
    return IntMatrix.from_columns(linhas, colunas, aumentadas)


def compare_differentials(g: GarsideStructure, r: int) -> List[dict]:
    """Colunas em que a forma fechada difere da genérica (lista vazia = iguais)"""
    fechada = differential_closed_form(g, r)
    generica = differential_generic(g, r)
    divergencias = []
    for celula in fechada.cols:
        a, b = fechada.column(celula), generica.column(celula)
        if a != b:
            divergencias.append({
                "cell": str(celula),
                "closed": {str(c): v for c, v in a.items()},
                "generic": {str(c): v for c, v in b.items()},
            })
    logger.check(f"d_{r} fechado = genérico", not divergencias, g.params.label)
    return divergencias


# ---------------------------------------------------------------------------
# Homologia
# ---------------------------------------------------------------------------

def _diferenciais(g: GarsideStructure, method: str) -> Tuple[IntMatrix, IntMatrix]:
    if method == "closed":
        return differential_closed_form(g, 2), differential_closed_form(g, 3)
    if method == "generic":
        return differential_generic(g, 2), differential_generic(g, 3)
    if method == "both":
        for r in (2, 3):
            divergencias = compare_differentials(g, r)
            if divergencias:
                raise TheoremViolationError(
                    f"d_{r} em forma fechada difere do genérico", params=g.params.label,
                    divergencias=divergencias,
                )
        return differential_closed_form(g, 2), differential_closed_form(g, 3)
    raise ParameterError("method deve ser closed, generic ou both", method=method)


def check_chain_condition(d2: IntMatrix, d3: IntMatrix) -> bool:
    return d2.compose(d3).is_zero()


def homology_group(g: GarsideStructure, r: int, method: str = "closed") -> AbelianGroup:
    """H_1 = ℤ^{#átomos}/im(d_2); H_2 = ker(d_2)/im(d_3)"""
    if r not in (1, 2):
        raise ParameterError("homology_group cobre r = 1, 2", r=r)
    d2, d3 = _diferenciais(g, method)
    if not check_chain_condition(d2, d3):
        logger.log_violacao_teorema("d_2 ∘ d_3 = 0", g.params.label)
        raise TheoremViolationError("d_2 ∘ d_3 != 0", params=g.params.label)

    if r == 1:
        snf = smith_normal_form(d2)
        return AbelianGroup.from_orders(len(d2.rows) - snf.rank, snf.diagonal)

    snf = smith_normal_form(d2, with_transforms=True)
    posto2 = snf.rank
    colunas2 = len(d2.cols)
    # coordenadas de im(d_3) na base de V; as primeiras posto2 linhas são nulas
    coordenadas = [
        [sum(a * b for a, b in zip(linha_vinv, coluna)) for coluna in zip(*d3.entries)] if d3.entries else []
        for linha_vinv in snf.V_inverse
    ]
    if any(v for linha in coordenadas[:posto2] for v in linha):
        raise TheoremViolationError("im(d_3) fora de ker(d_2)", params=g.params.label)
    nucleo = coordenadas[posto2:]
    snf3 = smith_normal_form(nucleo)
    livre = (colunas2 - posto2) - snf3.rank
    return AbelianGroup.from_orders(livre, snf3.diagonal)


def expected_h2(e: int, n: int, k: int) -> AbelianGroup:
    """
    ℤ^{d-1} × ℤ/e' com d = e ∧ k e e' = e/d, acrescido de ℤ/2 para n >= 5.
    Para n = 4 somam-se (ℤ/2)^c: as células [s_4, t_0, t_i] impõem x_i + x_{i+k} = x_0 + x_k
    sobre x_i = [s_4, t_i] mod 2, o que deixa c = d se e' é ímpar e c = d + 1 se e' é par.
    """
    if n < 3:
        raise ParameterError("expected_h2 exige n >= 3", n=n)
    if not 1 <= k <= e - 1:
        raise ParameterError(f"k deve estar entre 1 e {e - 1}", e=e, k=k)
    d = gcd(e, k)
    ordens = [e // d]
    if n == 4:
        ordens += [2] * (d if (e // d) % 2 else d + 1)
    elif n >= 5:
        ordens.append(2)
    return AbelianGroup.from_orders(d - 1, ordens)


def distinguishes_from_braid_groups(e: int, n: int, k: int) -> bool:
    """
    H_2 de B(d,d,n) é finito para todo d >= 2; se e ∧ k != 1 o H_2 de B^(k)(e,e,n) tem parte livre
    e o grupo não é um B(d,d,n).
    """
    return expected_h2(e, n, k).free_rank > 0


def v_vector(g: GarsideStructure, i: int) -> Dict[Cell, int]:
    """v_i = [t_0,t_i] + [s_3,t_0] + [s_3,t_k] - [s_3,t_i] - [s_3,t_{i+k}], com [t_0,t_0] = 0"""
    e, k = g.params.e, g.params.require_k()
    T, S = Generator.T, Generator.S
    v: Dict[Cell, int] = defaultdict(int)
    if i % e:
        _somar(v, 1, T(0), T(i % e))
    _somar(v, 1, S(3), T(0))
    _somar(v, 1, S(3), T(k % e))
    _somar(v, -1, S(3), T(i % e))
    _somar(v, -1, S(3), T((i + k) % e))
    return {c: x for c, x in v.items() if x}


def v_basis_check(g: GarsideStructure) -> bool:
    """d_3[s_3,t_0,t_j] = v_j - v_{j+k} + v_k (j != -k) e d_3[s_3,t_0,t_{-k}] = v_{-k} + v_k"""
    if g.params.n < 3:
        raise ParameterError("v_basis_check exige n >= 3", n=g.params.n)
    e, k = g.params.e, g.params.require_k()
    T, S = Generator.T, Generator.S
    d3 = differential_closed_form(g, 3)
    ok = True
    for j in range(1, e):
        esperado: Dict[Cell, int] = defaultdict(int)
        if (j + k) % e:
            partes = [(1, j), (-1, j + k), (1, k)]
        else:
            partes = [(1, j), (1, k)]
        for sinal, indice in partes:
            for celula, coef in v_vector(g, indice).items():
                esperado[celula] += sinal * coef
        esperado = {c: x for c, x in esperado.items() if x}
        obtido = d3.column(Cell((S(3), T(0), T(j))))
        if obtido != esperado:
            ok = False
            logger.check(f"base v para j={j}", False, g.params.label)
    logger.check("identidades da base v", ok, g.params.label)
    return ok
