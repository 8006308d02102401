# models/word.py
import sys
import os
# Adiciona o diretório raiz do projeto ao path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from dataclasses import dataclass, field
from typing import Iterator, Tuple

from models.group_element import Generator


@dataclass(frozen=True)
class Word:
    """Palavra positiva sobre os geradores CP"""
    letters: Tuple[Generator, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "Word":
        """'t0 s3 t1' -> Word; aceita palavra vazia"""
        return cls(tuple(Generator.parse(token) for token in text.split()))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.letters[item])
        return self.letters[item]

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def reversed(self) -> "Word":
        return Word(tuple(reversed(self.letters)))

    def __str__(self):
        return " ".join(str(letter) for letter in self.letters)

    def __repr__(self):
        return f"<Word '{self}'>"


@dataclass(frozen=True)
class Block:
    """
    Bloco w_i (i x i) da decomposição: posição (i, c) da entrada da última linha,
    seu expoente e a palavra RE_i(w) correspondente.
    """
    i: int
    perm: Tuple[int, ...]
    exps: Tuple[int, ...]
    column: int
    exponent: int
    word: Word = field(default_factory=Word)


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocos w_n, ..., w_2 (nesta ordem) e suas palavras RE_i"""
    blocks: Tuple[Block, ...]

    def block(self, i: int) -> Block:
        for bloco in self.blocks:
            if bloco.i == i:
                return bloco
        raise KeyError(i)

    def word(self) -> Word:
        """RE(w) = RE_2(w) RE_3(w) ... RE_n(w)"""
        resultado = Word()
        for bloco in reversed(self.blocks):
            resultado = resultado + bloco.word
        return resultado

    def __repr__(self):
        partes = " | ".join(f"RE_{b.i}='{b.word}'" for b in reversed(self.blocks))
        return f"<BlockDecomposition {partes}>"


@dataclass(frozen=True)
class Relation:
    """Relação positiva left = right de uma apresentação"""
    left: Word
    right: Word
    kind: str = ""

    def __str__(self):
        return f"{self.left} = {self.right}"

    def to_dict(self) -> dict:
        return {"left": str(self.left), "right": str(self.right), "kind": self.kind}
