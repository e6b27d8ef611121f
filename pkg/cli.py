"""
CLI per il forcing tra pattern di orbite eventualmente fisse di mappe dell'intervallo

Sottocomandi:
- derive W U   - U è derivabile da W? (con derivazione testimone)
- forced W     - insieme forzato da W (--method derive|construct|realize)
- realize W    - orbita canonica, mappa lineare a tratti, bande di tag
- hasse        - diagramma di Hasse fino a --max-len (--format text|json|dot)
- verify       - confronto delle tre caratterizzazioni fino a --max-len
"""
import argparse
import logging
import sys
from pathlib import Path

from config import FORMATS, METHODS, CliConfig, config
from handlers import CommandResult, cmd_derive, cmd_forced, cmd_hasse, cmd_realize, cmd_verify
from handlers.commands import EXIT_FAILED, EXIT_USAGE
from utils.logging_setup import setup_logging

logger = logging.getLogger(__name__)


class _Parser(argparse.ArgumentParser):
    """Stampa l'uso e il messaggio d'errore in italiano, poi esce con stato 2"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: errore: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="forcing", description="Forcing tra pattern di orbite eventualmente fisse")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    def add_output(sub: argparse.ArgumentParser):
        sub.add_argument("--format", choices=FORMATS, default=config.output.default_format)
        sub.add_argument("--out", default=None, help="scrive l'output su file invece che su stdout")

    derive = subparsers.add_parser("derive", help="U è derivabile da W?")
    derive.add_argument("words", nargs=2, metavar="WORD")
    derive.add_argument("--out", default=None)

    forced = subparsers.add_parser("forced", help="insieme forzato da W")
    forced.add_argument("words", nargs=1, metavar="WORD")
    forced.add_argument("--method", choices=METHODS, default=config.output.default_method)
    add_output(forced)

    realize = subparsers.add_parser("realize", help="mappa lineare a tratti canonica di W")
    realize.add_argument("words", nargs=1, metavar="WORD")
    add_output(realize)

    hasse = subparsers.add_parser("hasse", help="diagramma di Hasse")
    hasse.add_argument("--max-len", type=int, default=config.limits.default_max_len)
    hasse.add_argument("--method", choices=METHODS, default=config.output.default_method)
    add_output(hasse)

    verify = subparsers.add_parser("verify", help="verifica incrociata delle caratterizzazioni")
    verify.add_argument("--max-len", type=int, default=config.limits.default_max_len)
    verify.add_argument("--realize-bound", type=int, default=None)
    verify.add_argument("--normal-form", action="store_true")
    verify.add_argument("--out", default=None)

    return parser


def parse_cli_config(argv: list[str] | None = None) -> CliConfig:
    """Converte gli argomenti in CliConfig"""
    args = build_parser().parse_args(argv)
    return CliConfig(
        subcommand=args.subcommand,
        words=list(getattr(args, "words", [])),
        max_len=getattr(args, "max_len", config.limits.default_max_len),
        method=getattr(args, "method", config.output.default_method),
        format=getattr(args, "format", "text"),
        out=args.out,
        realize_bound=getattr(args, "realize_bound", None),
        normal_form=getattr(args, "normal_form", False)
    )


def dispatch(cli_config: CliConfig) -> CommandResult:
    """Esegue il sottocomando richiesto"""
    errors = cli_config.validate(config.limits.max_len_cap)
    if errors:
        return CommandResult(status=EXIT_USAGE, error="\n".join(errors))

    if cli_config.subcommand == "derive":
        return cmd_derive(*cli_config.words)
    if cli_config.subcommand == "forced":
        return cmd_forced(cli_config.words[0], cli_config.method, cli_config.format)
    if cli_config.subcommand == "realize":
        return cmd_realize(cli_config.words[0], cli_config.format)
    if cli_config.subcommand == "hasse":
        return cmd_hasse(cli_config.max_len, cli_config.method, cli_config.format)
    return cmd_verify(cli_config.max_len, cli_config.realize_bound, cli_config.normal_form)


def write_result(result: CommandResult, out: str | None):
    if result.output:
        if out:
            Path(out).write_text(result.output, encoding="utf-8")
            logger.info(f"Output scritto in {out}")
        else:
            sys.stdout.write(result.output)
    if result.error:
        sys.stderr.write(result.error.rstrip("\n") + "\n")


def main(argv: list[str] | None = None) -> int:
    """Entry point"""
    setup_logging(config.log_level)

    errors = config.validate()
    if errors:
        logger.error("⚠️ Errori configurazione:")
        for error in errors:
            logger.error(f"  - {error}")
        return EXIT_USAGE

    try:
        cli_config = parse_cli_config(argv)
        result = dispatch(cli_config)
        write_result(result, cli_config.out)
        return result.status
    except KeyboardInterrupt:
        logger.info("⚠️ Interruzione da tastiera")
        return 130
    except Exception as e:
        logger.error(f"❌ Errore fatale: {e}", exc_info=True)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
