import sys
import os
# Adiciona o diretório raiz do projeto ao path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))

from models.group_element import Generator
from models.homology import AbelianGroup, Cell, IntMatrix

T, S = Generator.T, Generator.S


def test_celula_basica():
    celula = Cell((S(3), T(0), T(1)))
    assert celula.dimension == 3
    assert str(celula) == "[s3,t0,t1]"
    assert celula.head() == S(3)
    assert celula.tail() == Cell((T(0), T(1)))
    assert Cell((T(1),)).prepend(T(0)) == Cell((T(0), T(1)))


def test_grupo_abeliano_fatores_invariantes():
    # ℤ/2 × ℤ/3 = ℤ/6; ℤ/2 × ℤ/2 × ℤ/4 fica como está
    assert AbelianGroup.from_orders(0, [2, 3]) == AbelianGroup(0, (6,))
    assert AbelianGroup.from_orders(1, [4, 2, 2]) == AbelianGroup(1, (2, 2, 4))
    assert AbelianGroup.from_orders(0, [1, 1]) == AbelianGroup(0, ())


def test_ordem_zero_conta_como_livre():
    assert AbelianGroup.from_orders(0, [0, 3]) == AbelianGroup(1, (3,))


def test_grupo_abeliano_str_e_dict():
    grupo = AbelianGroup(2, (2,))
    assert str(grupo) == "Z x Z x Z/2"
    assert grupo.to_dict() == {"free_rank": 2, "torsion": [2]}
    assert not grupo.is_finite
    assert str(AbelianGroup()) == "0"
    assert AbelianGroup().is_trivial


def test_matriz_por_colunas_e_composicao():
    a, b = Cell((T(0),)), Cell((T(1),))
    ab = Cell((T(0), T(1)))
    d2 = IntMatrix.from_columns([a, b], [ab], [{a: 1, b: -1}])
    assert d2.as_lists() == [[1], [-1]]
    assert d2.column(ab) == {a: 1, b: -1}

    zero = IntMatrix.from_columns([a, b], [ab], [{}])
    assert zero.is_zero()

    linha = IntMatrix.from_columns([Cell(())], [a, b], [{Cell(()): 1}, {Cell(()): 1}])
    assert linha.compose(d2).is_zero()
    assert linha.compose(d2).shape == (1, 1)


def test_composicao_com_matriz_vazia():
    a = Cell((T(0),))
    m = IntMatrix.from_columns([a], [a], [{a: 2}])
    vazia = IntMatrix.zeros([a], [])
    assert m.compose(vazia).shape == (1, 0)
    assert m.to_sympy().shape == (1, 1)
