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

import logging
import math
from functools import lru_cache
from types import MappingProxyType

import numpy as np

from ._functions import data_path, iter_records
from .errors import ParseError, RangeError

logger = logging.getLogger(__name__)


class Lexicon:
    """word polarities in [-1, +1]; absent words score 0.0

    Args:
        entries (dict): lowercase word -> polarity
        duplicates (int): number of words that were defined more than once
    """

    def __init__(self, entries=None, duplicates=0):
        entries = {word.lower(): float(score) for word, score in (entries or {}).items()}
        for word, score in entries.items():
            if not -1.0 <= score <= 1.0:
                raise RangeError("polarity of '{}' outside [-1, 1]: {}".format(word, score))
        self.entries = MappingProxyType(entries)
        self.duplicates = duplicates

    def get(self, word):
        return self.entries.get(word.lower(), 0.0)

    def __contains__(self, word):
        return word.lower() in self.entries

    def __len__(self):
        return len(self.entries)


def load_lexicon(path):
    """reads a `word<TAB>score` lexicon file

    Args:
        path (str): UTF-8 file, '#' lines are comments

    Returns:
        Lexicon: duplicates keep the last score and are counted
    """
    entries = {}
    duplicates = 0
    for line_no, fields in iter_records(path):
        if len(fields) != 2 or not fields[0].strip():
            raise ParseError("expected word<TAB>score", line=line_no)
        word = fields[0].strip().lower()
        try:
            score = float(fields[1])
        except ValueError:
            raise ParseError("score is not a number: {}".format(fields[1]), line=line_no)
        if math.isnan(score) or not -1.0 <= score <= 1.0:
            raise RangeError("score outside [-1, 1]: {}".format(fields[1]), line=line_no)
        if word in entries:
            duplicates += 1
        entries[word] = score
    if duplicates:
        logger.warning("%s: %d duplicate word(s), last definition kept", path, duplicates)
    return Lexicon(entries, duplicates=duplicates)


@lru_cache(maxsize=None)
def default_lexicon():
    """the bundled polarity list (scores mapped to +1 / -1 by class)"""
    return load_lexicon(data_path("lexicon.tsv"))


def word_polarity(lex, word):
    return lex.get(word)


def trigram_polarity(lex, s, i):
    """mean polarity of the previous, current and next word

    Out of range neighbours count as 0.0.

    Args:
        lex (Lexicon): polarity lexicon
        s (TaggedSentence): tagged sentence
        i (int): token index

    Returns:
        float: value in [-1, 1]
    """
    if not 0 <= i < len(s):
        raise IndexError(i)
    scores = [
        lex.get(s.tokens[j].surface) if 0 <= j < len(s) else 0.0
        for j in (i - 1, i, i + 1)
    ]
    return float(np.clip(np.mean(scores), -1.0, 1.0))


def polarity_strength(lex, words):
    """sum of absolute word polarities"""
    return float(sum(abs(lex.get(word)) for word in words))


def signed_polarity_strength(lex, words):
    return float(sum(lex.get(word) for word in words))
