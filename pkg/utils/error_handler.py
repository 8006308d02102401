# utils/error_handler.py
import sys
from datetime import datetime
from typing import Optional, Dict, Any
from enum import Enum


class ErrorType(Enum):
    PARAMETRO_INVALIDO = "PARAMETRO_INVALIDO"
    TOKEN_INVALIDO = "TOKEN_INVALIDO"
    LIMITE_EXCEDIDO = "LIMITE_EXCEDIDO"
    VIOLACAO_RETICULADO = "VIOLACAO_RETICULADO"
    VIOLACAO_TEOREMA = "VIOLACAO_TEOREMA"
    REGRESSAO_DIVERGENTE = "REGRESSAO_DIVERGENTE"
    ERRO_ARQUIVO = "ERRO_ARQUIVO"
    ERRO_USO = "ERRO_USO"
    ERRO_PROCESSAMENTO = "ERRO_PROCESSAMENTO"


class GarsideError(Exception):
    """Classe base para erros do sistema"""
    def __init__(self, message: str, error_type: ErrorType, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.error_type = error_type
        self.details = details or {}
        self.timestamp = datetime.now()
        super().__init__(self.message)


class ParameterError(GarsideError):
    """Parâmetros (e, n, k) inválidos ou incompatíveis"""
    def __init__(self, message: str, **details):
        super().__init__(message, ErrorType.PARAMETRO_INVALIDO, details)


class InvalidTokenError(GarsideError):
    """Token de palavra que não corresponde a nenhum gerador"""
    def __init__(self, token: str, reason: str = ""):
        details = {"token": token}
        if reason:
            details["motivo"] = reason
        super().__init__(
            f"Token inválido: '{token}'" + (f" ({reason})" if reason else ""),
            ErrorType.TOKEN_INVALIDO,
            details
        )


class CapExceededError(GarsideError):
    """Erro quando um limite configurado é ultrapassado"""
    def __init__(self, what: str, cap: int, requested: Optional[int] = None):
        details = {"o_que": what, "limite": cap}
        if requested is not None:
            details["solicitado"] = requested
        super().__init__(
            f"Limite excedido em {what}: limite={cap}" + (f", solicitado={requested}" if requested is not None else ""),
            ErrorType.LIMITE_EXCEDIDO,
            details
        )


class TheoremViolationError(GarsideError):
    """Um resultado provado falhou na verificação: sinal de bug na implementação"""
    def __init__(self, statement: str, **details):
        super().__init__(
            f"Violação de teorema: {statement}",
            ErrorType.VIOLACAO_TEOREMA,
            details
        )


class LatticeViolationError(GarsideError):
    """Encontro ou junção sem elemento único no intervalo"""
    def __init__(self, violation):
        super().__init__(
            f"Violação de reticulado: {violation.describe()}",
            ErrorType.VIOLACAO_RETICULADO,
            {"violacao": violation}
        )
        self.violation = violation


class RegressionDriftError(GarsideError):
    """Registro de regressão diverge do valor congelado"""
    def __init__(self, key: str, frozen: str, current: str):
        super().__init__(
            f"Regressão divergente para '{key}'",
            ErrorType.REGRESSAO_DIVERGENTE,
            {"chave": key, "congelado": frozen, "atual": current}
        )


class ArquivoError(GarsideError):
    """Erro de leitura/escrita de arquivo"""
    def __init__(self, path: str, original_error: Exception):
        super().__init__(
            f"Erro de arquivo em {path}: {original_error}",
            ErrorType.ERRO_ARQUIVO,
            {"path": path, "original_error": str(original_error), "error_class": original_error.__class__.__name__}
        )


class ErrorHandler:
    """Classe para tratamento centralizado de erros"""

    EXIT_CODES = {
        ErrorType.PARAMETRO_INVALIDO: 2,
        ErrorType.TOKEN_INVALIDO: 2,
        ErrorType.ERRO_USO: 2,
        ErrorType.ERRO_ARQUIVO: 2,
        ErrorType.LIMITE_EXCEDIDO: 3,
        ErrorType.VIOLACAO_RETICULADO: 4,
        ErrorType.VIOLACAO_TEOREMA: 4,
        ErrorType.REGRESSAO_DIVERGENTE: 4,
        ErrorType.ERRO_PROCESSAMENTO: 4,
    }

    @staticmethod
    def exit_code_for(error: GarsideError) -> int:
        """Código de saída da CLI para cada tipo de erro"""
        return ErrorHandler.EXIT_CODES.get(error.error_type, 4)

    @staticmethod
    def log_error(error: GarsideError, logger=None):
        """Log estruturado de erros"""
        error_msg = f"[{error.error_type.value}] {error.message}"

        if error.details:
            details_str = " | ".join([f"{k}={v}" for k, v in error.details.items()])
            error_msg += f" | {details_str}"

        if logger:
            logger.error(error_msg)
        else:
            print(f"ERROR: {error_msg}", file=sys.stderr)

    @staticmethod
    def format_error_for_cli(error: GarsideError) -> str:
        """Formata erro para exibição no terminal"""
        if error.error_type == ErrorType.LIMITE_EXCEDIDO:
            return f"⛔ Limite excedido ({error.details.get('o_que', 'N/A')}, limite={error.details.get('limite', 'N/A')})"
        elif error.error_type == ErrorType.TOKEN_INVALIDO:
            return f"❌ Token inválido: {error.details.get('token', 'N/A')}"
        elif error.error_type == ErrorType.PARAMETRO_INVALIDO:
            return f"❌ Parâmetros inválidos: {error.message}"
        elif error.error_type in (ErrorType.VIOLACAO_TEOREMA, ErrorType.VIOLACAO_RETICULADO):
            return f"🧨 {error.message}"
        elif error.error_type == ErrorType.REGRESSAO_DIVERGENTE:
            return f"⚠️ Regressão divergente ({error.details.get('chave', 'N/A')})"
        else:
            return f"❌ {error.message}"


def safe_execute(func, *args, **kwargs):
    """
    Wrapper para execução segura de funções com tratamento de erro
    """
    try:
        return func(*args, **kwargs)
    except GarsideError:
        raise
    except Exception as e:
        raise GarsideError(
            f"Erro inesperado: {str(e)}",
            ErrorType.ERRO_PROCESSAMENTO,
            {"original_error": str(e), "function": getattr(func, "__name__", repr(func))}
        )
