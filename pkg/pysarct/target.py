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

"""Sarcasm targets and extractor candidates, both as token index sets."""

from dataclasses import dataclass

from .errors import InvalidAnnotation

OUTSIDE_LABEL = "OUTSIDE"

# stands in for the Outside label when targets are compared as sets
OUTSIDE_ELEMENT = -1


@dataclass(frozen=True)
class TargetAnnotation:
    """either a non-empty set of token indices or the Outside label"""

    words: frozenset = frozenset()
    is_outside: bool = True

    def __post_init__(self):
        object.__setattr__(self, "words", frozenset(self.words))
        if self.is_outside and self.words:
            raise InvalidAnnotation("Outside annotation cannot carry words")
        if not self.is_outside and not self.words:
            raise InvalidAnnotation("word annotation needs at least one word")

    @classmethod
    def of(cls, indices):
        """word annotation for `indices`, Outside when empty"""
        indices = frozenset(indices)
        if not indices:
            return OUTSIDE
        return cls(indices, is_outside=False)

    def elements(self):
        """the set compared by the metrics, Outside as a pseudo element"""
        if self.is_outside:
            return frozenset([OUTSIDE_ELEMENT])
        return self.words

    def check_bounds(self, n):
        for index in self.words:
            if not 0 <= index < n:
                raise InvalidAnnotation("index {} outside a {}-token sentence".format(index, n))
        return self

    def __str__(self):
        if self.is_outside:
            return OUTSIDE_LABEL
        return " ".join(str(i) for i in sorted(self.words))


OUTSIDE = TargetAnnotation()


@dataclass(frozen=True)
class CandidateSet:
    """one extractor's proposal: token indices or an Outside vote"""

    word_indices: frozenset = frozenset()
    outside_vote: bool = False

    def __post_init__(self):
        object.__setattr__(self, "word_indices", frozenset(self.word_indices))
        if self.outside_vote and self.word_indices:
            raise ValueError("an Outside vote cannot carry words")

    @classmethod
    def outside(cls):
        return cls(outside_vote=True)

    def check_bounds(self, n):
        for index in self.word_indices:
            if not 0 <= index < n:
                raise IndexError("candidate index {} outside a {}-token sentence".format(index, n))
        return self

    def to_annotation(self):
        if self.outside_vote:
            return OUTSIDE
        return TargetAnnotation.of(self.word_indices)
