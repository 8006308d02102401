import sys
import os
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))

import pytest
from models.group_element import Generator
from utils.error_handler import InvalidTokenError
from utils.helpers import (
    DELTA_TOKEN, base64_to_bits, bits_to_base64, canonical_json, format_signed_word, highest_bit,
    iter_bits, lowest_bit, parse_signed_word,
)


def test_palavra_assinada():
    letras = parse_signed_word("t0 s3^-1 D D^-1 t2^1")
    assert letras == [
        (Generator.T(0), 1), (Generator.S(3), -1), (DELTA_TOKEN, 1), (DELTA_TOKEN, -1), (Generator.T(2), 1),
    ]
    assert format_signed_word(letras) == "t0 s3^-1 D D^-1 t2"


def test_palavra_vazia_e_virgulas():
    assert parse_signed_word("") == []
    assert parse_signed_word("t0,t1") == [(Generator.T(0), 1), (Generator.T(1), 1)]


@pytest.mark.parametrize("texto", ["x1", "t0^2", "D^-2", "t"])
def test_token_assinado_invalido(texto):
    with pytest.raises(InvalidTokenError):
        parse_signed_word(texto)


def test_bits():
    assert list(iter_bits(0b101001)) == [0, 3, 5]
    assert list(iter_bits(0)) == []
    assert lowest_bit(0b10100) == 2
    assert highest_bit(0b10100) == 4


def test_bitset_em_base64():
    mascara = (1 << 34) | 0b1011
    texto = bits_to_base64(mascara, 35)
    assert base64_to_bits(texto) == mascara
    assert bits_to_base64(0, 0) == "AA=="


def test_json_canonico():
    assert canonical_json({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'
