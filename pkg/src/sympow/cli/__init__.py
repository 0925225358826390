"""Command-line front end.

Kept import-light: :mod:`sympow.cli.expr` is used by the presentations, so
the command machinery lives in :mod:`sympow.cli.main` and is loaded lazily.
"""


def main(argv=None) -> int:
    from .main import main as _main

    return _main(argv)
