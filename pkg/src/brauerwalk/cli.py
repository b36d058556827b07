# src/brauerwalk/cli.py

from typing import Dict, List, Optional
import argparse
import sys

from .api.platform import BrauerWalkPlatform
from .core.errors import BrauerWalkError
from .core.settings import default_config
from .io.emitters import emit_json

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:

    parser = argparse.ArgumentParser(
        prog="brauerwalk",
        description="Green hyperwalks, tubes and W-strings of Brauer configuration algebras"
    )
    parser.add_argument('--log-level', default=None, help="logging level (default WARNING)")
    parser.add_argument('--out', default=None, help="write the report to this file instead of stdout")
    sub = parser.add_subparsers(dest='command', required=True)

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument('config', help=".bcf configuration file")
        return p

    command('validate', "check a configuration and list diagnostics")
    command('build', "build the quiver with relations")

    p = command('walk', "run the Green hyperwalk from a step")
    p.add_argument('--from', dest='start', required=True,
                   help="comma separated germ references, e.g. y4.v2 or z.v8,z.v9")

    p = command('tubes', "list the tubes indexed by periodic walks")
    p.add_argument('--with-wchi', action='store_true', help="also list the rank 2 tubes of W-strings")

    p = command('wchi', "enumerate W-strings and their involutions")
    p.add_argument('--max-len', type=int, default=None)

    p = command('resolve', "projective resolution of a module")
    p.add_argument('--module', required=True, help="S(x), {germ refs} or a word like 'x.v2 y1.v2^-1'")
    p.add_argument('--steps', type=int, default=8)

    p = command('ext', "extension partition of a W-string")
    p.add_argument('--word', required=True)
    p.add_argument('--seed', type=int, default=None)
    p.add_argument('--prime', type=int, default=None)

    p = command('verify', "run the oracle suite on the configuration")
    p.add_argument('--seed', type=int, default=None)
    p.add_argument('--prime', type=int, default=None)
    p.add_argument('--max-len', type=int, default=None)
    p.add_argument('--string-len', type=int, default=2, help="longest strings in the Hom and inverse checks")

    p = command('render', "emit Graphviz DOT")
    p.add_argument('--dot', action='store_true', help="DOT output (the only format)")
    p.add_argument('--kind', choices=['config', 'quiver', 'walk'], default='config')
    p.add_argument('--from', dest='start', default=None, help="starting step for --kind walk")
    return parser


def _dispatch(platform: BrauerWalkPlatform, args: argparse.Namespace) -> Dict:

    if args.command == 'validate':
        return platform.validate()
    if args.command == 'build':
        return platform.build()
    if args.command == 'walk':
        return platform.walk(args.start)
    if args.command == 'tubes':
        return platform.tubes(args.with_wchi)
    if args.command == 'wchi':
        return platform.wchi(args.max_len)
    if args.command == 'resolve':
        return platform.resolve(args.module, args.steps)
    if args.command == 'ext':
        return platform.ext(args.word, args.seed, args.prime)
    if args.command == 'verify':
        result = platform.verify(args.seed, args.prime, args.max_len, args.string_len)
        result.pop('table', None)
        return result
    return platform.render(args.kind, args.start)


def _write(text: str, out: Optional[str]):
    if out:
        with open(out, 'w', encoding='utf-8') as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[List[str]] = None) -> int:

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    try:
        config = default_config().with_overrides(log_level=args.log_level)
        problems = config.validate()
        if problems:
            raise BrauerWalkError("; ".join(problems))
    except BrauerWalkError as e:
        sys.stderr.write(f"brauerwalk: {e}\n")
        return EXIT_USAGE

    platform = BrauerWalkPlatform(config)
    loaded = platform.load(args.config)
    if not loaded['success']:
        _write(emit_json(args.command, loaded), args.out)
        return EXIT_DOMAIN

    result = _dispatch(platform, args)
    if args.command == 'render' and result.get('success'):
        _write(result['dot'], args.out)
    else:
        _write(emit_json(args.command, result, platform.input_hash), args.out)
    return EXIT_OK if result.get('success') else EXIT_DOMAIN


if __name__ == '__main__':
    sys.exit(main())
