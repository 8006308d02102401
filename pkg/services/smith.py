# services/smith.py
import sys
import os
# Adiciona o diretório raiz do projeto ao path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from typing import List, Sequence, Union

from models.homology import IntMatrix, SmithForm


def _identidade(n: int) -> List[List[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _congelar(m: List[List[int]]):
    return tuple(tuple(linha) for linha in m)


class _Eliminacao:
    """Eliminação inteira acompanhando U (linhas), V (colunas) e V^{-1}"""

    def __init__(self, dados: List[List[int]], transforms: bool):
        self.a = dados
        self.linhas = len(dados)
        self.colunas = len(dados[0]) if dados else 0
        self.transforms = transforms
        if transforms:
            self.U = _identidade(self.linhas)
            self.V = _identidade(self.colunas)
            self.Vinv = _identidade(self.colunas)

    # operações de linha: aplicadas em A e em U
    def trocar_linhas(self, i: int, j: int):
        if i == j:
            return
        self.a[i], self.a[j] = self.a[j], self.a[i]
        if self.transforms:
            self.U[i], self.U[j] = self.U[j], self.U[i]

    def somar_linha(self, destino: int, origem: int, fator: int):
        """linha_destino += fator · linha_origem"""
        self.a[destino] = [x + fator * y for x, y in zip(self.a[destino], self.a[origem])]
        if self.transforms:
            self.U[destino] = [x + fator * y for x, y in zip(self.U[destino], self.U[origem])]

    def negar_linha(self, i: int):
        self.a[i] = [-x for x in self.a[i]]
        if self.transforms:
            self.U[i] = [-x for x in self.U[i]]

    # operações de coluna: A e V à direita, V^{-1} à esquerda com a operação inversa
    def trocar_colunas(self, i: int, j: int):
        if i == j:
            return
        for linha in self.a:
            linha[i], linha[j] = linha[j], linha[i]
        if self.transforms:
            for linha in self.V:
                linha[i], linha[j] = linha[j], linha[i]
            self.Vinv[i], self.Vinv[j] = self.Vinv[j], self.Vinv[i]

    def somar_coluna(self, destino: int, origem: int, fator: int):
        """coluna_destino += fator · coluna_origem"""
        for linha in self.a:
            linha[destino] += fator * linha[origem]
        if self.transforms:
            for linha in self.V:
                linha[destino] += fator * linha[origem]
            self.Vinv[origem] = [x - fator * y for x, y in zip(self.Vinv[origem], self.Vinv[destino])]

    def menor_pivo(self, t: int):
        melhor = None
        for i in range(t, self.linhas):
            for j in range(t, self.colunas):
                v = self.a[i][j]
                if v and (melhor is None or abs(v) < abs(self.a[melhor[0]][melhor[1]])):
                    melhor = (i, j)
        return melhor

    def diagonalizar(self) -> List[int]:
        diagonal = []
        for t in range(min(self.linhas, self.colunas)):
            pivo = self.menor_pivo(t)
            if pivo is None:
                break
            while True:
                self.trocar_linhas(t, pivo[0])
                self.trocar_colunas(t, pivo[1])
                p = self.a[t][t]

                sobra = False
                for i in range(t + 1, self.linhas):
                    q = self.a[i][t] // p
                    if q:
                        self.somar_linha(i, t, -q)
                    sobra = sobra or self.a[i][t] != 0
                for j in range(t + 1, self.colunas):
                    q = self.a[t][j] // p
                    if q:
                        self.somar_coluna(j, t, -q)
                    sobra = sobra or self.a[t][j] != 0
                if sobra:
                    pivo = self.menor_pivo(t)
                    continue

                # o pivô precisa dividir todo o bloco restante
                indivisivel = next(
                    (i for i in range(t + 1, self.linhas)
                     for j in range(t + 1, self.colunas) if self.a[i][j] % p),
                    None,
                )
                if indivisivel is None:
                    break
                self.somar_linha(t, indivisivel, 1)
                pivo = (t, t)

            if self.a[t][t] < 0:
                self.negar_linha(t)
            diagonal.append(self.a[t][t])
        return diagonal


def smith_normal_form(m: Union[IntMatrix, Sequence[Sequence[int]]], with_transforms: bool = False) -> SmithForm:
    """
    Forma normal de Smith sobre ℤ. Com with_transforms=True devolve U, V e V^{-1} unimodulares
    com U·M·V = D.
    """
    if isinstance(m, IntMatrix):
        dados = m.as_lists()
        colunas = len(m.cols)
    else:
        dados = [list(map(int, linha)) for linha in m]
        colunas = len(dados[0]) if dados else 0

    eliminacao = _Eliminacao([list(linha) for linha in dados], with_transforms)
    if not dados or colunas == 0:
        vazio_v = _congelar(_identidade(colunas)) if with_transforms else ()
        vazio_u = _congelar(_identidade(len(dados))) if with_transforms else ()
        return SmithForm((), 0, vazio_u, vazio_v, vazio_v)

    diagonal = eliminacao.diagonalizar()
    if not with_transforms:
        return SmithForm(tuple(diagonal), len(diagonal))
    return SmithForm(
        tuple(diagonal), len(diagonal),
        _congelar(eliminacao.U), _congelar(eliminacao.V), _congelar(eliminacao.Vinv),
    )


def invariant_factors(m: Union[IntMatrix, Sequence[Sequence[int]]]) -> List[int]:
    return list(smith_normal_form(m).diagonal)
