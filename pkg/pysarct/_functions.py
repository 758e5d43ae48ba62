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

import os

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")

NOUN_TAGS = frozenset(["NN", "NNS", "NNP", "NNPS"])
ADJECTIVE_TAGS = frozenset(["JJ", "JJR", "JJS"])
ADVERB_TAGS = frozenset(["RB", "RBR", "RBS"])
VERB_TAGS = frozenset(["VB", "VBD", "VBG", "VBN", "VBP", "VBZ", "MD"])
FINITE_VERB_TAGS = frozenset(["VBD", "VBP", "VBZ", "MD"])
PUNCTUATION_TAGS = frozenset([".", ",", ":", "``", "''", "(", ")", "#", "$"])
SENTENCE_FINAL = frozenset([".", "!", "?"])

# tags after which a word with a noun reading is read as a noun
NOUN_CONTEXT_TAGS = frozenset(["DT", "PRP$", "IN", "CD", "POS"]) | ADJECTIVE_TAGS

QUESTION_WORDS = frozenset(
    [
        "what", "who", "whom", "whose", "which", "when", "where", "why", "how",
        "do", "does", "did", "can", "could", "will", "would", "should",
        "is", "are", "was", "were",
    ]
)

AUXILIARIES = frozenset(
    [
        "be", "am", "is", "are", "was", "were", "been", "being", "'m", "'re", "'s",
        "have", "has", "had", "'ve", "'d",
        "do", "does", "did",
    ]
)

BE_FORMS = frozenset(["be", "am", "is", "are", "was", "were", "been", "'m", "'re", "'s"])

DEMONSTRATIVES = frozenset(["this", "that", "these", "those"])


def data_path(name):
    """path of a file shipped in the package data directory

    Args:
        name (str): file name inside pysarct/data

    Returns:
        str: absolute path
    """
    return os.path.join(DATA_DIR, name)


def iter_records(path, tabbed_hash_lines=False):
    """yields the tab separated records of a text resource

    Blank lines and lines starting with '#' are skipped.

    Args:
        path (str): UTF-8 text file
        tabbed_hash_lines (bool): a '#' line holding a tab is a record, not a
            comment (a text that opens with a hashtag)

    Returns:
        generator of (int, list of str): 1-based line number and the fields
    """
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            line = line.rstrip("\r\n")
            if not line.strip():
                continue
            if line.lstrip().startswith("#") and not (tabbed_hash_lines and "\t" in line):
                continue
            yield line_no, line.split("\t")


def read_word_list(path):
    """one lowercase word per line, returned as a frozenset"""
    return frozenset(fields[0].strip().lower() for _, fields in iter_records(path))


def is_interrogative_form(lowers):
    """True if the token sequence ends with '?' or starts with a question word"""
    if not lowers:
        return False
    return lowers[-1] == "?" or lowers[0] in QUESTION_WORDS
