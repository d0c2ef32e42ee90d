# Copyright (c) 2020, NVIDIA CORPORATION. All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import sys
import logging
from argparse import ArgumentParser

from zafa.zafa_exceptions import ZAFAException
from zafa.config.run_config import TASKS, FORMATS

logger = logging.getLogger(__name__)


class CLI:
    """
    CLI class to parse the commandline arguments
    """

    def __init__(self):
        self._parser = ArgumentParser(prog='zafa')
        self._add_arguments()

    def _add_common_arguments(self, parser):
        # yapf:disable
        parser.add_argument(
            '--catalog',
            type=str,
            default=None,
            help='Comma-delimited list of catalog groups, e.g. Z6,S3,Q8,S3xZ2')
        parser.add_argument(
            '--out',
            type=str,
            default=None,
            help='Path of the report file. Writes to stdout if omitted')
        parser.add_argument(
            '--format',
            type=str,
            choices=list(FORMATS),
            default='json',
            help='Report format; csv is a projection of the json rows')
        parser.add_argument(
            '--tol',
            type=float,
            default=None,
            help='Orthogonality tolerance accepted for character tables')
        parser.add_argument(
            '--cache-dir',
            type=str,
            default=None,
            help='Character table cache directory. Defaults to '
                 '$ZAFA_CACHE_DIR, then ./.zafa-cache')
        parser.add_argument(
            '--workers',
            type=int,
            default=1,
            help='Number of groups processed concurrently')
        parser.add_argument(
            '--seed',
            type=int,
            default=0,
            help='Seed of the random class-matrix combinations and samples')
        parser.add_argument(
            '--log-level',
            default='INFO',
            type=str,
            choices=['INFO', 'DEBUG', 'ERROR', 'WARNING'],
            help='Logging levels')
        # yapf:enable

    def _add_arguments(self):
        subparsers = self._parser.add_subparsers(dest='command')
        subparsers.required = True

        run = subparsers.add_parser(
            'run', help='Run tasks on groups and hypergroups')
        self._add_common_arguments(run)
        # yapf:disable
        run.add_argument(
            '--spec',
            type=str,
            action='append',
            default=[],
            help='Group-spec or hypergroup-spec JSON file. May be repeated')
        run.add_argument(
            '--task',
            type=str,
            action='append',
            default=[],
            help=f"Task to run, one of {', '.join(TASKS)}. May be repeated "
                 "or comma-delimited")
        run.add_argument(
            '--timings',
            action='store_true',
            help='Adds the wall time of every task to its rows')
        run.add_argument(
            '--max-level',
            type=int,
            default=200,
            help='Largest level of the su2-deriv bound sweep')
        run.add_argument(
            '--points',
            type=int,
            default=100,
            help='Number of circle points of the su2-deriv bound sweep')
        # yapf:enable

        verify = subparsers.add_parser(
            'verify', help='Run the verification suite on a catalog')
        self._add_common_arguments(verify)

    def _preprocess_and_verify_arguments(self, args):
        """
        Splits comma-delimited lists and checks
        numeric arguments.

        Parameters
        ----------
        args : argparse.Namespace
            containing all the parsed arguments

        Raises
        ------
        ZAFAException
            If arguments are passed in incorrectly
        """

        if args.catalog is not None:
            args.catalog = [
                name.strip() for name in args.catalog.split(',')
                if name.strip()
            ]
        if args.command == 'run':
            args.task = [
                task.strip() for value in args.task
                for task in value.split(',') if task.strip()
            ]
            if args.catalog is None:
                args.catalog = []
        if args.tol is not None and not args.tol > 0:
            raise ZAFAException(f"--tol must be positive, got {args.tol}")
        if args.workers < 1:
            raise ZAFAException(
                f"--workers must be positive, got {args.workers}")

    def _setup_logger(self, args):
        """
        Setup logger format
        """

        log_level = logging.getLevelName(args.log_level)
        logging.basicConfig(level=log_level,
                            format="%(asctime)s.%(msecs)d %(levelname)-4s"
                            "[%(filename)s:%(lineno)d] %(message)s",
                            datefmt="%Y-%m-%d %H:%M:%S")

    def parse(self, argv=None):
        """
        Retrieves the arguments from the command line and loads them into an
        ArgumentParser. Also does some sanity checks for arguments.

        Parameters
        ----------
        argv : list of str
            Arguments without the program name,
            sys.argv[1:] when None

        Returns
        -------
        argparse.Namespace
            containing all the parsed arguments

        Raises
        ------
        ZAFAException
            For arguments passed incorrectly
        """

        if argv is None:
            argv = sys.argv[1:]
        args = self._parser.parse_args(argv)
        self._preprocess_and_verify_arguments(args)
        self._setup_logger(args)
        return args
