# models/homology.py
import sys
import os
# Adiciona o diretório raiz do projeto ao path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from sympy import ImmutableMatrix, factorint

from models.group_element import Generator


@dataclass(frozen=True, order=False)
class Cell:
    """r-célula [x_1, ..., x_r] na ordem s_n < ... < s_3 < t_0 < ... < t_{e-1}"""
    atoms: Tuple[Generator, ...] = ()

    @property
    def dimension(self) -> int:
        return len(self.atoms)

    def prepend(self, x: Generator) -> "Cell":
        return Cell((x,) + self.atoms)

    def head(self) -> Generator:
        return self.atoms[0]

    def tail(self) -> "Cell":
        return Cell(self.atoms[1:])

    def __str__(self):
        return "[" + ",".join(str(x) for x in self.atoms) + "]"

    def __repr__(self):
        return f"<Cell {self}>"


@dataclass(frozen=True)
class IntMatrix:
    """Matriz inteira com linhas e colunas indexadas por bases de células"""
    rows: Tuple[Cell, ...]
    cols: Tuple[Cell, ...]
    entries: Tuple[Tuple[int, ...], ...]

    @classmethod
    def zeros(cls, rows: Sequence[Cell], cols: Sequence[Cell]) -> "IntMatrix":
        return cls(tuple(rows), tuple(cols), tuple((0,) * len(cols) for _ in rows))

    @classmethod
    def from_columns(cls, rows: Sequence[Cell], cols: Sequence[Cell], columns: Sequence[Dict[Cell, int]]) -> "IntMatrix":
        posicao = {c: i for i, c in enumerate(rows)}
        dados = [[0] * len(cols) for _ in rows]
        for j, coluna in enumerate(columns):
            for celula, coef in coluna.items():
                dados[posicao[celula]][j] += coef
        return cls(tuple(rows), tuple(cols), tuple(tuple(linha) for linha in dados))

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.cols)

    def as_lists(self) -> List[List[int]]:
        return [list(linha) for linha in self.entries]

    def to_sympy(self) -> ImmutableMatrix:
        linhas, colunas = self.shape
        if linhas == 0 or colunas == 0:
            return ImmutableMatrix.zeros(linhas, colunas)
        return ImmutableMatrix(self.as_lists())

    def column(self, cell: Cell) -> Dict[Cell, int]:
        j = self.cols.index(cell)
        return {r: linha[j] for r, linha in zip(self.rows, self.entries) if linha[j]}

    def is_zero(self) -> bool:
        return all(v == 0 for linha in self.entries for v in linha)

    def compose(self, other: "IntMatrix") -> "IntMatrix":
        """self ∘ other (produto de matrizes self·other)"""
        colunas = list(zip(*other.entries)) if other.entries else [() for _ in other.cols]
        produto = tuple(
            tuple(sum(a * b for a, b in zip(linha, coluna)) for coluna in colunas)
            for linha in self.entries
        )
        return IntMatrix(self.rows, other.cols, produto)

    def to_dict(self) -> dict:
        return {
            "rows": [str(c) for c in self.rows],
            "cols": [str(c) for c in self.cols],
            "entries": self.as_lists(),
        }


@dataclass(frozen=True)
class SmithForm:
    """U·M·V = D, com D diagonal em cadeia de divisibilidade"""
    diagonal: Tuple[int, ...]
    rank: int
    U: Tuple[Tuple[int, ...], ...] = ()
    V: Tuple[Tuple[int, ...], ...] = ()
    V_inverse: Tuple[Tuple[int, ...], ...] = ()


@dataclass(frozen=True)
class AbelianGroup:
    """ℤ^free_rank × ℤ/t_1 × ... × ℤ/t_m com t_i | t_{i+1} e t_i > 1"""
    free_rank: int = 0
    torsion: Tuple[int, ...] = field(default_factory=tuple)

    @classmethod
    def from_orders(cls, free_rank: int, orders: Sequence[int]) -> "AbelianGroup":
        """Soma direta de cíclicos de ordens dadas, reescrita em fatores invariantes"""
        expoentes: Dict[int, List[int]] = defaultdict(list)
        for ordem in orders:
            ordem = abs(int(ordem))
            if ordem == 0:
                free_rank += 1
                continue
            for p, e in factorint(ordem).items():
                expoentes[int(p)].append(int(e))

        tamanho = max((len(v) for v in expoentes.values()), default=0)
        fatores = [1] * tamanho
        for p, lista in expoentes.items():
            # o maior expoente de cada primo vai para o último fator
            for i, e in enumerate(sorted(lista, reverse=True)):
                fatores[tamanho - 1 - i] *= p ** e
        return cls(free_rank, tuple(f for f in fatores if f > 1))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self):
        partes = ["Z"] * self.free_rank + [f"Z/{t}" for t in self.torsion]
        return " x ".join(partes) if partes else "0"
