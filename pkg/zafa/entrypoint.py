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
import signal
import logging

from . import __version__
from .cli.cli import CLI
from .runner import Runner
from .zafa_exceptions import ZAFAException
from .config.run_config import RunConfig
from .config.tolerances import Tolerances
from .character.table_cache import TableCache
from .verify.verify_suite import verify_suite, DEFAULT_CATALOG
from .output.file_writer import FileWriter
from .output.report_document import ReportDocument

logger = logging.getLogger(__name__)
MAX_NUMBER_OF_INTERRUPTS = 3

# Number of Times User Requested Exit
exiting = 0

EXIT_SUCCESS = 0
EXIT_FAILURES = 1
EXIT_ERROR = 2


def create_tolerances(args):
    if args.tol is None:
        return Tolerances()
    return Tolerances(orthogonality=args.tol)


def create_run_config(args):
    """
    Parameters
    ----------
    args : namespace
        The arguments of the run subcommand

    Returns
    -------
    RunConfig
        Validated, with every spec file read

    Raises
    ------
    ZAFAException
        For unknown tasks or unreadable spec files
    """

    config = RunConfig()
    config['specs'] = args.spec
    config['catalog'] = args.catalog
    config['tasks'] = args.task
    config['out'] = args.out
    config['format'] = args.format
    config['tolerance'] = create_tolerances(args)
    config['cache-dir'] = args.cache_dir
    config['workers'] = args.workers
    config['seed'] = args.seed
    config['timings'] = args.timings
    config['max-level'] = args.max_level
    config['points'] = args.points
    config.validate()
    config.documents()
    return config


def run(args):
    """
    Runs the requested tasks and writes the
    report

    Returns
    -------
    int
        Exit status: 1 if any task failed

    Raises
    ------
    ZAFAException
        For configuration, spec or I/O errors
    """

    config = create_run_config(args)
    runner = Runner(config, __version__)
    subjects = runner.prepare()
    if exiting:
        return EXIT_ERROR
    document = runner.run(subjects)
    FileWriter(filename=config['out']).write(
        document.render(config['format']))
    if document.failed():
        logger.error("Some tasks failed, see the report rows "
                     "with status 'error'")
        return EXIT_FAILURES
    return EXIT_SUCCESS


def verify(args):
    """
    Runs the verification suite, prints the
    summary table and writes the residual rows
    when --out is given

    Returns
    -------
    int
        Exit status: 1 if any check failed
    """

    tolerances = create_tolerances(args)
    catalog = DEFAULT_CATALOG if args.catalog is None else args.catalog
    cache = TableCache(args.cache_dir)

    def table_fn(group):
        return cache.table_for(group, seed=args.seed,
                               tolerances=tolerances)[0]

    result = verify_suite(catalog,
                          table_fn=table_fn,
                          tolerances=tolerances,
                          seed=args.seed,
                          workers=args.workers)
    FileWriter().write(result.summary_table().to_formatted_string() + '\n')
    if args.out:
        document = ReportDocument(['verify'], __version__)
        document.add_rows(result.to_rows())
        FileWriter(filename=args.out).write(document.render(args.format))
    logger.info(f"{result.total()} checks, max residual "
                f"{result.max_residual():.3e}")
    return EXIT_SUCCESS if result.passed() else EXIT_FAILURES


def main():
    """
    Main entrypoint of zafa
    """

    global exiting
    exiting = 0

    def interrupt_handler(signal, frame):
        global exiting
        exiting += 1
        logging.info(
            f'Received SIGINT. Exiting ({exiting}/{MAX_NUMBER_OF_INTERRUPTS})...'
        )

        if exiting == MAX_NUMBER_OF_INTERRUPTS:
            sys.exit(EXIT_FAILURES)
        return

    signal.signal(signal.SIGINT, interrupt_handler)

    try:
        args = CLI().parse()
    except ZAFAException as e:
        logging.error(f'zafa encountered an error: {e}')
        sys.exit(EXIT_ERROR)

    logging.info(f'zafa {__version__} started with {args} arguments')
    try:
        if args.command == 'run':
            status = run(args)
        else:
            status = verify(args)
    except ZAFAException as e:
        logging.error(f'zafa encountered an error: {e}')
        status = EXIT_ERROR
    sys.exit(status)


if __name__ == '__main__':
    main()
