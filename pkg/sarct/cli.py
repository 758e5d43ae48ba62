# -*- coding: utf-8 -*-
# ***************************************************************************
# *                                                                         *
# * This program is free software: you can redistribute it and/or modify    *
# * it under the terms of the GNU General Public License as published by    *
# * the Free Software Foundation, either version 3 of the License, or       *
# * (at your option) any later version.                                     *
# *                                                                         *
# * This program is distributed in the hope that it will be useful,         *
# * but WITHOUT ANY WARRANTY; without even the implied warranty of          *
# * MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the           *
# * GNU General Public License for more details.                            *
# *                                                                         *
# * You should have received a copy of the GNU General Public License       *
# * along with this program.  If not, see <http://www.gnu.org/licenses/>.   *
# *                                                                         *
# ***************************************************************************

import argparse
import logging
import sys

from pysarct.errors import SarctError
from pysarct.pipeline import IntegratorMode
from pysarct.rules import WeightMetric

from . import __version__
from .commands import COMMANDS, MODEL_DIR_ENV, RunConfig

logger = logging.getLogger(__name__)


def _common_arguments(parser, needs_corpus):
    parser.add_argument("--corpus", required=needs_corpus, help="id<TAB>text<TAB>target corpus file")
    parser.add_argument(
        "--mode",
        choices=[mode.value for mode in IntegratorMode],
        default=IntegratorMode.HYBRID_OR.value,
    )
    parser.add_argument("--lexicon", help="word<TAB>score polarity lexicon (bundled list by default)")
    parser.add_argument("--stopwords", help="stopword list of the objective-words baseline")
    parser.add_argument(
        "--model-dir",
        help="directory of tagger.tsv, linear.model and rule_weights.tsv "
        "(default ${} or ./models)".format(MODEL_DIR_ENV),
    )
    parser.add_argument("--tagger-model", help="tagger model file")
    parser.add_argument("--linear-model", help="linear model file")
    parser.add_argument("--rule-weights", help="rule weights file")
    parser.add_argument(
        "--weight-metric",
        choices=[metric.value for metric in WeightMetric],
        default=WeightMetric.OVERALL_DICE.value,
    )
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--jobs", type=int, default=1, help="threads for per-document extraction")
    parser.add_argument("--format", choices=["text", "records"], default="text")
    parser.add_argument("--output", help="write the result to this file instead of standard output")
    parser.add_argument("-v", "--verbose", action="store_true")
    parser.add_argument("-q", "--quiet", action="store_true")


def build_parser():
    parser = argparse.ArgumentParser(prog="sarct", description="sarcasm target extraction")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True
    for command_class in COMMANDS:
        command = command_class()
        sub = subparsers.add_parser(command.NAME, help=command.HELP)
        _common_arguments(sub, command.NEEDS_CORPUS)
        command.add_arguments(sub)
        sub.set_defaults(command_object=command)
    return parser


def _configure_logging(args):
    level = logging.INFO
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def dispatch(argv):
    """runs one subcommand

    Args:
        argv (list of str): arguments without the program name

    Returns:
        int: 0 on success, 1 on an operational error, 2 on a usage error
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    _configure_logging(args)
    try:
        config = RunConfig.from_args(args)
        return args.command_object.run(config, args)
    except (SarctError, OSError, ValueError) as exc:
        print("error: {}".format(exc), file=sys.stderr)
        return 1


def main():
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
