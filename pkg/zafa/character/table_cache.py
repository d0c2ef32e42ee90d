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

import json
import logging
import os

from zafa.zafa_exceptions import ZAFAException
from zafa.output.file_writer import FileWriter
from zafa.group.conjugacy import conjugacy_classes
from .character_table import CharacterTable, compute_character_table

logger = logging.getLogger(__name__)

CACHE_DIR_ENV = 'ZAFA_CACHE_DIR'
DEFAULT_CACHE_DIR = './.zafa-cache'


def resolve_cache_dir(cache_dir=None):
    """
    Returns the explicit directory, else the
    ZAFA_CACHE_DIR environment variable, else
    ./.zafa-cache
    """

    if cache_dir:
        return cache_dir
    return os.environ.get(CACHE_DIR_ENV, DEFAULT_CACHE_DIR)


class TableCache:
    """
    Character tables stored as JSON documents
    keyed by group digest
    """

    def __init__(self, cache_dir=None):
        self._cache_dir = resolve_cache_dir(cache_dir)

    def cache_dir(self):
        return self._cache_dir

    def _path(self, digest):
        return os.path.join(self._cache_dir, f"{digest}.json")

    def get(self, group):
        """
        Parameters
        ----------
        group : FiniteGroup

        Returns
        -------
        CharacterTable or None
            The cached table with class data recomputed
            for the group, None on a miss or an unreadable
            entry
        """

        path = self._path(group.digest())
        if not os.path.isfile(path):
            return None
        try:
            with open(path, 'r') as f:
                document = json.load(f)
            table = CharacterTable.from_document(document)
        except (OSError, ValueError, ZAFAException) as e:
            logger.warning(f"Ignoring unreadable cache entry {path}: {e}")
            return None
        if table.digest() != group.digest():
            logger.warning(f"Ignoring cache entry {path}: digest mismatch")
            return None
        # the stored label may belong to another group with this digest
        return CharacterTable.from_document(document,
                                            conjugacy=conjugacy_classes(group),
                                            label=group.label())

    def put(self, table):
        """
        Raises
        ------
        ZAFAException
            If the cache directory cannot be written
        """

        writer = FileWriter(filename=self._path(table.digest()))
        writer.write(json.dumps(table.to_document(), sort_keys=True) + '\n')

    def table_for(self, group, **kwargs):
        """
        Returns the cached table of the group,
        computing and storing it on a miss.

        Returns
        -------
        CharacterTable, bool
            The table and whether it came from the cache.
            A table that cannot be stored is still returned.
        """

        table = self.get(group)
        if table is not None:
            logger.info(f"Character table of {group.label()} served from cache")
            return table, True
        table = compute_character_table(group, **kwargs)
        try:
            self.put(table)
        except ZAFAException as e:
            logger.warning(
                f"Character table of {group.label()} not cached: {e}")
        return table, False
