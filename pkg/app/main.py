import sys
import os
# Adiciona o diretório raiz do projeto ao path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import argparse
import json
import time
from collections import Counter
from typing import Callable, List, Optional, TextIO

from config.settings import settings
from models.group_element import GroupElement
from models.run_config import RunConfig
from services.exporters import (
    interval_to_dot, interval_to_json, matrices_to_json, presentation_to_dot, write_export,
)
from services.garside import build_garside, emit_presentation, normal_form, words_equal
from services.homology import differential_closed_form, differential_generic, homology_group
from services.interval import build_interval, verify_lattice
from services.regression_service import freeze_regressions, parse_grid
from services.verification import SUITES, run_verification
from services.words import cayley_distances, length, reduced_expression
from utils.error_handler import (
    ErrorHandler, ErrorType, GarsideError, LatticeViolationError, ParameterError, safe_execute,
)
from utils.helpers import pretty_json
from utils.logger import enable_debug_logging, logger

EXIT_OK = 0
EXIT_FALSE = 1

COMANDOS_VISIVEIS = "reduce,length,interval,nf,equal,presentation,homology,verify,freeze"


class _Parser(argparse.ArgumentParser):
    """argparse que sinaliza erro de uso com exceção em vez de sys.exit"""

    def error(self, message):
        raise _ErroDeUso(message)


class _ErroDeUso(Exception):
    pass


def _config(args, precisa_k: bool = False) -> RunConfig:
    if precisa_k and args.k is None:
        raise ParameterError("--k é obrigatório para este comando")
    return RunConfig.build(
        e=args.e, n=args.n, k=args.k,
        group_cap=args.cap, output_format=getattr(args, "format", None), seed=getattr(args, "seed", None),
    )


def _ler_elemento(texto: str, config: RunConfig) -> GroupElement:
    try:
        dados = json.loads(texto)
    except ValueError as exc:
        raise ParameterError(f"--element não é JSON válido: {exc}")
    if not isinstance(dados, dict):
        raise ParameterError("--element deve ser um objeto JSON {perm, exps}")
    dados.setdefault("e", config.e)
    w = GroupElement.from_dict(dados)
    if (w.e, w.n) != (config.e, config.n):
        raise ParameterError("Elemento não pertence a G(e,e,n)", e=w.e, n=w.n)
    return w


def _garside(config: RunConfig):
    intervalo = build_interval(config.params, verify=True, cap=config.group_cap)
    return build_garside(intervalo, check_lattice=False)


# ---------------------------------------------------------------------------
# Comandos
# ---------------------------------------------------------------------------

def cmd_reduce(args, out: TextIO) -> int:
    config = _config(args)
    out.write(str(reduced_expression(_ler_elemento(args.element, config))) + "\n")
    return EXIT_OK


def cmd_length(args, out: TextIO) -> int:
    config = _config(args)
    out.write(f"{length(_ler_elemento(args.element, config))}\n")
    return EXIT_OK


def cmd_interval(args, out: TextIO) -> int:
    config = _config(args, precisa_k=True)
    intervalo = build_interval(config.params, verify=True, cap=config.group_cap)
    resumo = {
        "params": config.params.to_dict(),
        "size": len(intervalo),
        "delta_length": intervalo.lengths[intervalo.delta],
        "atoms": sum(1 for c in intervalo.lengths if c == 1),
    }
    if args.verify_lattice:
        relatorio = verify_lattice(intervalo)
        if not relatorio.ok:
            raise LatticeViolationError(relatorio.violation)
        resumo["lattice"] = relatorio.to_dict()
    if args.export:
        formato, caminho = args.export
        if formato == "dot":
            write_export(caminho, interval_to_dot(intervalo))
        elif formato == "json":
            write_export(caminho, interval_to_json(intervalo))
        else:
            raise ParameterError("--export aceita dot ou json", formato=formato)
        resumo["export"] = {"format": formato, "path": caminho}
    out.write(pretty_json(resumo) + "\n")
    return EXIT_OK


def cmd_nf(args, out: TextIO) -> int:
    config = _config(args, precisa_k=True)
    g = _garside(config)
    nf = normal_form(g, args.word)
    if config.output_format == "text":
        partes = [f"D^{nf.delta_power}"] if nf.delta_power else []
        partes += [f"({reduced_expression(g.interval.element(s))})" for s in nf.factors]
        out.write((" ".join(partes) or "1") + "\n")
    else:
        out.write(pretty_json(nf.to_dict(g.interval)) + "\n")
    return EXIT_OK


def cmd_equal(args, out: TextIO) -> int:
    config = _config(args, precisa_k=True)
    iguais = words_equal(_garside(config), args.w1, args.w2)
    out.write(pretty_json({"equal": iguais}) + "\n")
    return EXIT_OK if iguais else EXIT_FALSE


def cmd_presentation(args, out: TextIO) -> int:
    config = _config(args, precisa_k=True)
    apresentacao = emit_presentation(config.params)
    if args.dot:
        write_export(args.dot, presentation_to_dot(apresentacao))
    if config.output_format == "dot":
        out.write(presentation_to_dot(apresentacao) + "\n")
    else:
        out.write(pretty_json(apresentacao.to_dict()) + "\n")
    return EXIT_OK


def cmd_homology(args, out: TextIO) -> int:
    config = _config(args, precisa_k=True)
    if args.order == 2 and config.n < 3:
        raise ParameterError("H_2 exige n >= 3", n=config.n)
    g = _garside(config)
    grupo = homology_group(g, args.order, method=args.method)
    if args.dump_matrices:
        if args.method == "generic":
            d2 = differential_generic(g, 2, config.recursion_cap)
            d3 = differential_generic(g, 3, config.recursion_cap)
        else:
            d2, d3 = differential_closed_form(g, 2), differential_closed_form(g, 3)
        write_export(args.dump_matrices, matrices_to_json(d2, d3))
    out.write(pretty_json(grupo.to_dict()) + "\n")
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    config = _config(args)
    relatorios = run_verification(config, args.suite, args.samples)
    out.write(pretty_json([r.to_dict() for r in relatorios]) + "\n")
    falhas = [r.suite for r in relatorios if not r.passed]
    if falhas:
        logger.error("❌ Suítes com falha", config.key, suites=",".join(falhas))
        return ErrorHandler.EXIT_CODES[ErrorType.VIOLACAO_TEOREMA]
    return EXIT_OK


def cmd_freeze(args, out: TextIO) -> int:
    grade = parse_grid(args.grid)
    resumo = freeze_regressions(grade, args.out, workers=args.workers)
    out.write(pretty_json(resumo) + "\n")
    return EXIT_OK


def cmd_bfs(args, out: TextIO) -> int:
    config = _config(args)
    distancias = cayley_distances(config.params.without_k(), config.group_cap)
    histograma = Counter(distancias.values())
    out.write(pretty_json({
        "order": len(distancias),
        "max_distance": max(histograma),
        "histogram": {str(c): histograma[c] for c in sorted(histograma)},
    }) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _parametros(sub: argparse.ArgumentParser, com_k: bool = True):
    sub.add_argument("--e", type=int, required=True)
    sub.add_argument("--n", type=int, required=True)
    if com_k:
        sub.add_argument("--k", type=int, default=None)
    else:
        sub.set_defaults(k=None)
    sub.add_argument("--cap", type=int, default=None, help="limite de |G| (padrão: GARSIDE_CAP)")
    sub.add_argument("--format", choices=("json", "dot", "text"), default=None)
    sub.add_argument("--seed", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="garside-interval", description="Estruturas de Garside de intervalo B^(k)(e,e,n)")
    parser.add_argument("--debug", action="store_true", help="logs de debug no stderr")
    subparsers = parser.add_subparsers(dest="command", metavar=f"{{{COMANDOS_VISIVEIS}}}", parser_class=_Parser)
    subparsers.required = True

    sub = subparsers.add_parser("reduce", help="RE(w) de um elemento")
    _parametros(sub, com_k=False)
    sub.add_argument("--element", required=True, help='JSON {"perm": [...], "exps": [...]}')
    sub.set_defaults(handler=cmd_reduce)

    sub = subparsers.add_parser("length", help="ℓ(w) de um elemento")
    _parametros(sub, com_k=False)
    sub.add_argument("--element", required=True)
    sub.set_defaults(handler=cmd_length)

    sub = subparsers.add_parser("interval", help="constrói [1, λ^k]")
    _parametros(sub)
    sub.add_argument("--verify-lattice", action="store_true")
    sub.add_argument("--export", nargs=2, metavar=("FORMAT", "PATH"))
    sub.set_defaults(handler=cmd_interval)

    sub = subparsers.add_parser("nf", help="forma normal gulosa de uma palavra")
    _parametros(sub)
    sub.add_argument("--word", required=True)
    sub.set_defaults(handler=cmd_nf)

    sub = subparsers.add_parser("equal", help="problema da palavra (saída 1 se diferentes)")
    _parametros(sub)
    sub.add_argument("--w1", required=True)
    sub.add_argument("--w2", required=True)
    sub.set_defaults(handler=cmd_equal)

    sub = subparsers.add_parser("presentation", help="apresentação de B^(k)(e,e,n)")
    _parametros(sub)
    sub.add_argument("--dot", metavar="PATH")
    sub.set_defaults(handler=cmd_presentation)

    sub = subparsers.add_parser("homology", help="H_1 ou H_2 inteiros")
    _parametros(sub)
    sub.add_argument("--order", type=int, choices=(1, 2), required=True)
    sub.add_argument("--method", choices=("closed", "generic", "both"), default="closed")
    sub.add_argument("--dump-matrices", metavar="PATH")
    sub.set_defaults(handler=cmd_homology)

    sub = subparsers.add_parser("verify", help="suítes de verificação")
    _parametros(sub)
    sub.add_argument("--suite", choices=SUITES + ("all",), default="all")
    sub.add_argument("--samples", type=int, default=None, help="padrão: GARSIDE_SAMPLES")
    sub.set_defaults(handler=cmd_verify)

    sub = subparsers.add_parser("freeze", help="congela/compara registros de regressão")
    sub.add_argument("--out", default=settings.REGRESSION_FILE)
    sub.add_argument("--grid", default="default")
    sub.add_argument("--workers", type=int, default=1)
    sub.set_defaults(handler=cmd_freeze)

    sub = subparsers.add_parser("bfs")
    _parametros(sub, com_k=False)
    sub.set_defaults(handler=cmd_bfs)
    return parser


def run(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    """Despacha o subcomando; JSON/texto no stdout, logs e erros no stderr"""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _ErroDeUso as exc:
        sys.stderr.write(f"❌ Uso inválido: {exc}\n")
        return ErrorHandler.EXIT_CODES[ErrorType.ERRO_USO]
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.debug or settings.DEBUG:
        enable_debug_logging()

    handler: Callable = args.handler
    inicio = time.time()
    try:
        codigo = safe_execute(handler, args, out)
    except GarsideError as error:
        ErrorHandler.log_error(error, logger)
        sys.stderr.write(ErrorHandler.format_error_for_cli(error) + "\n")
        return ErrorHandler.exit_code_for(error)
    logger.log_performance(f"cli:{args.command}", time.time() - inicio)
    return codigo


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
