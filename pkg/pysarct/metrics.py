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

"""Sentence level Exact Match and Dice, macro averaged into an EvalReport.

Outside is compared as a singleton pseudo element, so Outside against
Outside scores 1.0 and Outside against words scores 0.0 on both metrics.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np


class Slice(Enum):
    OVERALL = "Overall"
    CONDITIONAL = "Conditional"
    OUTSIDE_ONLY = "OutsideOnly"


@dataclass(frozen=True)
class EvalReport:
    exact_match_accuracy: float
    dice_score: float
    n_instances: int
    slice: Slice = Slice.OVERALL
    name: str = ""

    def __post_init__(self):
        if self.n_instances == 0:
            return
        for value in (self.exact_match_accuracy, self.dice_score):
            if not 0.0 <= value <= 1.0:
                raise ValueError("metric outside [0, 1]: {}".format(value))

    @property
    def applicable(self):
        return self.n_instances > 0

    def as_record(self):
        return {
            "name": self.name,
            "slice": self.slice.value,
            "em": self.exact_match_accuracy,
            "dice": self.dice_score,
            "n": self.n_instances,
        }


def exact_match(pred, gold):
    """1 if both annotations name the same words (or both are Outside)

    Args:
        pred (TargetAnnotation): predicted target
        gold (TargetAnnotation): gold target

    Returns:
        int: 0 or 1
    """
    return int(pred.elements() == gold.elements())


def dice(pred, gold):
    """2 |P & G| / (|P| + |G|) over the annotations' element sets"""
    p, g = pred.elements(), gold.elements()
    return 2.0 * len(p & g) / (len(p) + len(g))


def summarize(pairs, slice=Slice.OVERALL, name=""):
    """macro average of both metrics over (pred, gold) pairs

    Args:
        pairs (iterable of (TargetAnnotation, TargetAnnotation)): one per sentence
        slice (Slice): recorded in the report
        name (str): system or rule name

    Returns:
        EvalReport: metrics are None when there are no pairs
    """
    pairs = list(pairs)
    if not pairs:
        return EvalReport(None, None, 0, slice=slice, name=name)
    em = np.array([exact_match(p, g) for p, g in pairs], dtype=float)
    ds = np.array([dice(p, g) for p, g in pairs], dtype=float)
    return EvalReport(float(em.mean()), float(ds.mean()), len(pairs), slice=slice, name=name)
