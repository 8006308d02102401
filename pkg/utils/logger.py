# utils/logger.py
import os
import sys
import logging
from datetime import datetime
from typing import Optional, Any, Dict, List
from enum import Enum

import colorlog


class LogLevel(Enum):
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    DEBUG = "DEBUG"
    CHECK = "CHECK"  # Nível específico para resultados de verificação


class Logger:
    def __init__(self, log_file: Optional[str] = "logs/garside.log", console_output: bool = True, debug_mode: bool = False):
        self.log_file = log_file or None
        self.console_output = console_output
        self.debug_mode = debug_mode  # Controla se logs de DEBUG/CHECK aparecem no console

        # Criar diretório se não existe
        if self.log_file and os.path.dirname(self.log_file):
            os.makedirs(os.path.dirname(self.log_file), exist_ok=True)

        self._setup_logging()

        # Histórico das verificações executadas nesta sessão
        self._check_buffer: List[Dict[str, Any]] = []
        self._max_check_buffer = 200

    def _setup_logging(self):
        """Configura o sistema de logging"""
        self.logger = logging.getLogger('GarsideInterval')
        self.logger.setLevel(logging.DEBUG if self.debug_mode else logging.INFO)

        # Limpar handlers existentes
        self.logger.handlers.clear()

        # Handler para arquivo (sempre inclui DEBUG)
        if self.log_file:
            file_handler = logging.FileHandler(self.log_file, encoding='utf-8')
            file_handler.setFormatter(logging.Formatter(
                '[%(asctime)s] [%(levelname)s] %(message)s',
                datefmt='%Y-%m-%d %H:%M:%S'
            ))
            file_handler.setLevel(logging.DEBUG)
            self.logger.addHandler(file_handler)
            self.logger.setLevel(logging.DEBUG)

        # Console sempre em stderr: stdout é reservado para a saída da CLI
        if self.console_output:
            console_handler = colorlog.StreamHandler(sys.stderr)
            console_handler.setFormatter(colorlog.ColoredFormatter(
                '%(log_color)s[%(levelname)s]%(reset)s %(message)s',
                log_colors={
                    'DEBUG': 'cyan',
                    'INFO': 'green',
                    'WARNING': 'yellow',
                    'ERROR': 'red',
                    'CRITICAL': 'red,bg_white',
                },
            ))
            console_handler.setLevel(logging.DEBUG if self.debug_mode else logging.INFO)
            self.logger.addHandler(console_handler)

    def enable_debug_mode(self):
        """Ativa o modo debug"""
        self.debug_mode = True
        self._setup_logging()
        self.info("🔧 Modo debug ativado")

    def disable_debug_mode(self):
        """Desativa o modo debug"""
        self.debug_mode = False
        self._setup_logging()
        self.info("🔧 Modo debug desativado")

    def log(self, nivel: LogLevel, mensagem: str, contexto: Optional[str] = None, **kwargs):
        """Log genérico com nível especificado"""
        if contexto:
            mensagem = f"{mensagem} | {contexto}"

        if kwargs:
            extras = " | ".join([f"{k}={v}" for k, v in kwargs.items()])
            mensagem = f"{mensagem} | {extras}"

        if nivel == LogLevel.INFO:
            self.logger.info(mensagem)
        elif nivel == LogLevel.WARNING:
            self.logger.warning(mensagem)
        elif nivel == LogLevel.ERROR:
            self.logger.error(mensagem)
        elif nivel == LogLevel.DEBUG:
            self.logger.debug(mensagem)
        elif nivel == LogLevel.CHECK:
            self.logger.debug(f"[CHECK] {mensagem}")

    def info(self, mensagem: str, contexto: Optional[str] = None, **kwargs):
        """Log de informação"""
        self.log(LogLevel.INFO, mensagem, contexto, **kwargs)

    def warning(self, mensagem: str, contexto: Optional[str] = None, **kwargs):
        """Log de aviso"""
        self.log(LogLevel.WARNING, mensagem, contexto, **kwargs)

    def error(self, mensagem: str, contexto: Optional[str] = None, **kwargs):
        """Log de erro"""
        self.log(LogLevel.ERROR, mensagem, contexto, **kwargs)

    def debug(self, mensagem: str, contexto: Optional[str] = None, **kwargs):
        """Log de debug"""
        self.log(LogLevel.DEBUG, mensagem, contexto, **kwargs)

    def check(self, nome: str, passou: bool, contexto: Optional[str] = None, **kwargs):
        """
        Registra o resultado de uma verificação e guarda no buffer da sessão
        """
        marcador = "✅" if passou else "❌"
        self.log(LogLevel.CHECK, f"{marcador} {nome}", contexto, **kwargs)

        self._check_buffer.append({
            'timestamp': datetime.now(),
            'nome': nome,
            'passou': passou,
            'contexto': contexto,
            'detalhes': kwargs,
        })
        if len(self._check_buffer) > self._max_check_buffer:
            self._check_buffer.pop(0)

    def get_recent_checks(self, limit: int = 10) -> List[Dict]:
        """Retorna as verificações mais recentes do buffer"""
        return self._check_buffer[-limit:]

    def get_failed_checks(self) -> List[Dict]:
        """Retorna apenas as verificações que falharam"""
        return [entry for entry in self._check_buffer if not entry['passou']]

    def clear_check_buffer(self):
        self._check_buffer.clear()

    def log_inicio_verificacao(self, suite: str, contexto: str):
        """Log específico para início de uma suíte de verificação"""
        self.info(f"🚀 Iniciando verificação '{suite}'", contexto)

    def log_fim_verificacao(self, suite: str, contexto: str, aprovadas: int, falhas: int):
        """Log específico para fim de uma suíte de verificação"""
        self.info(f"🏁 Verificação '{suite}' concluída", contexto, aprovadas=aprovadas, falhas=falhas)

    def log_intervalo_construido(self, contexto: str, tamanho: int, comprimento_max: int):
        """Log específico para intervalo [1, λ^k] construído"""
        self.info("🧱 Intervalo construído", contexto, tamanho=tamanho, comprimento_delta=comprimento_max)

    def log_limite_excedido(self, o_que: str, limite: int, solicitado: Optional[int] = None):
        """Log específico para limite excedido"""
        if solicitado is None:
            self.warning(f"⚠️ Limite excedido em {o_que}", limite=limite)
        else:
            self.warning(f"⚠️ Limite excedido em {o_que}", limite=limite, solicitado=solicitado)

    def log_violacao_teorema(self, enunciado: str, contexto: Optional[str] = None, **detalhes):
        """Log específico para violação de resultado teórico (indica bug)"""
        self.error(f"🧨 Violação de teorema: {enunciado}", contexto, **detalhes)

    def log_regressao(self, chave: str, status: str):
        """Log específico para registros de regressão"""
        self.debug(f"📌 Regressão {status}", chave=chave)

    def log_performance(self, operation: str, duration_seconds: float, details: Dict[str, Any] = None):
        """Log específico para métricas de performance"""
        perf_msg = f"⏱️ Performance [{operation}]: {duration_seconds:.3f}s"

        if details:
            detail_items = [f"{key}={value}" for key, value in details.items()]
            perf_msg += f" | {' | '.join(detail_items)}"

        self.debug(perf_msg)


def _criar_logger_padrao() -> Logger:
    from config.settings import settings
    return Logger(log_file=settings.LOG_FILE, debug_mode=settings.DEBUG)


# Instância global do logger
logger = _criar_logger_padrao()


def enable_debug_logging():
    """Ativa logs de debug globalmente"""
    logger.enable_debug_mode()


def disable_debug_logging():
    """Desativa logs de debug globalmente"""
    logger.disable_debug_mode()
