"""Command-line entry point: interactive console, script runner, one-shot eval."""

from __future__ import annotations

import argparse
import sys
from typing import TextIO

from .errors import NeutrosophicError
from .interpreter import Session, eval_statement

PROMPT = ">>> "

EXIT_OK = 0
EXIT_SCRIPT_ERROR = 1
EXIT_USAGE = 2


def _emit(out: TextIO, text: str) -> None:
    if text:
        out.write(text if text.endswith("\n") else text + "\n")


def _diagnostic(exc: BaseException) -> str:
    return f"{type(exc).__name__}: {exc}"


def run_lines(
    lines,
    out: TextIO,
    err: TextIO,
    session: Session | None = None,
    stop_on_error: bool = False,
    prompt: str = "",
) -> int:
    """Evaluate ``lines`` one by one, writing results to ``out``.

    Errors go to ``err`` and either abort (``stop_on_error``, exit status 1)
    or are reported and skipped.
    """
    session = session if session is not None else Session()
    if prompt:
        out.write(prompt)
        out.flush()
    for lineno, line in enumerate(lines, start=1):
        try:
            session, output = eval_statement(session, line.rstrip("\n"))
        except (NeutrosophicError, ValueError, TypeError, IndexError, OSError) as exc:
            if stop_on_error:
                err.write(f"line {lineno}: {_diagnostic(exc)}\n")
                return EXIT_SCRIPT_ERROR
            err.write(_diagnostic(exc) + "\n")
        else:
            _emit(out, output)
            if session.closed:
                return EXIT_OK
        if prompt:
            out.write(prompt)
            out.flush()
    return EXIT_OK


def run_repl(stream: TextIO, out: TextIO, err: TextIO | None = None) -> int:
    """Read statements until end of stream or ``quit``; errors never end the loop."""
    err = err if err is not None else sys.stderr
    interactive = stream.isatty() if hasattr(stream, "isatty") else False
    status = run_lines(stream, out, err, prompt=PROMPT if interactive else "")
    if interactive:
        out.write("\n")
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="svns",
        description="Single-valued neutrosophic set calculator.",
    )
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--script", metavar="PATH", help="run a statement file, then exit")
    group.add_argument("--eval", metavar="STMT", help="run one statement, then exit")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if args.script is not None:
        try:
            with open(args.script, encoding="utf-8") as fh:
                lines = fh.readlines()
        except OSError as exc:
            sys.stderr.write(_diagnostic(exc) + "\n")
            return EXIT_USAGE
        return run_lines(lines, sys.stdout, sys.stderr, stop_on_error=True)
    if args.eval is not None:
        return run_lines([args.eval], sys.stdout, sys.stderr, stop_on_error=True)
    return run_repl(sys.stdin, sys.stdout, sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
