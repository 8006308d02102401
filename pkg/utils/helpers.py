import re
import json
import base64
from typing import Iterator, List, Tuple, Union

from models.group_element import Generator
from utils.error_handler import InvalidTokenError

DELTA_TOKEN = "D"

_TOKEN_ASSINADO = re.compile(r"^(D|[ts]\d+)(\^(-?1))?$")


def parse_signed_word(texto: str) -> List[Tuple[Union[Generator, str], int]]:
    """
    Interpreta uma palavra com inversos: 't0 s3^-1 D D^-1'.
    Devolve pares (gerador ou DELTA_TOKEN, expoente ±1).
    """
    if not texto:
        return []

    letras = []
    for token in texto.replace(",", " ").split():
        match = _TOKEN_ASSINADO.match(token)
        if not match:
            raise InvalidTokenError(token)
        base, _, expoente = match.groups()
        sinal = -1 if expoente == "-1" else 1
        if base == DELTA_TOKEN:
            letras.append((DELTA_TOKEN, sinal))
        else:
            letras.append((Generator.parse(base), sinal))
    return letras


def format_signed_word(letras: List[Tuple[Union[Generator, str], int]]) -> str:
    partes = []
    for letra, sinal in letras:
        partes.append(f"{letra}^-1" if sinal < 0 else str(letra))
    return " ".join(partes)


def iter_bits(mascara: int) -> Iterator[int]:
    """Posições dos bits ligados, em ordem crescente"""
    while mascara:
        menor = mascara & -mascara
        yield menor.bit_length() - 1
        mascara ^= menor


def lowest_bit(mascara: int) -> int:
    return (mascara & -mascara).bit_length() - 1


def highest_bit(mascara: int) -> int:
    return mascara.bit_length() - 1


def bits_to_base64(mascara: int, largura: int) -> str:
    """Linha de bitset em base64 (bytes little-endian, bit 0 = ordinal 0)"""
    tamanho = max(1, (largura + 7) // 8)
    return base64.b64encode(mascara.to_bytes(tamanho, "little")).decode("ascii")


def base64_to_bits(texto: str) -> int:
    return int.from_bytes(base64.b64decode(texto), "little")


def canonical_json(dados) -> str:
    """JSON determinístico: chaves ordenadas, sem espaços"""
    return json.dumps(dados, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def pretty_json(dados) -> str:
    return json.dumps(dados, indent=2, ensure_ascii=False)
