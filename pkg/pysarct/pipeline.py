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

"""Integration of the rule based and the statistical extractor."""

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .errors import ModelNotFound
from .rules import RuleExtractor, RuleWeights, load_rule_weights
from .sentiment import Lexicon, default_lexicon, load_lexicon
from .statistical import LinearModel, extract_candidates, load_model
from .tagging import load_tagger, tag_text
from .target import CandidateSet, TargetAnnotation

__all__ = [
    "Extraction",
    "IntegratorMode",
    "Models",
    "TargetAnnotation",
    "analyze",
    "extract_batch",
    "extract_target",
    "integrate",
]

logger = logging.getLogger(__name__)


class IntegratorMode(Enum):
    RULE_ONLY = "rule-only"
    STAT_ONLY = "stat-only"
    HYBRID_OR = "hybrid-or"
    HYBRID_AND = "hybrid-and"

    @property
    def uses_rules(self):
        return self is not IntegratorMode.STAT_ONLY

    @property
    def uses_statistics(self):
        return self is not IntegratorMode.RULE_ONLY


def integrate(rule_cand, stat_cand, mode):
    """fuses both candidates into the final target

    An Outside vote contributes no words; an empty result is Outside.

    Args:
        rule_cand (CandidateSet): rule based candidate
        stat_cand (CandidateSet): statistical candidate
        mode (IntegratorMode): fusion mode

    Returns:
        TargetAnnotation
    """
    if mode is IntegratorMode.RULE_ONLY:
        words = rule_cand.word_indices
    elif mode is IntegratorMode.STAT_ONLY:
        words = stat_cand.word_indices
    elif mode is IntegratorMode.HYBRID_OR:
        words = rule_cand.word_indices | stat_cand.word_indices
    elif mode is IntegratorMode.HYBRID_AND:
        words = rule_cand.word_indices & stat_cand.word_indices
    else:
        raise ValueError("unknown integrator mode: {}".format(mode))
    return TargetAnnotation.of(words)


class Extraction(NamedTuple):
    sentence: object
    target: TargetAnnotation


@dataclass(frozen=True)
class Models:
    """everything `extract_target` needs; `linear` may be None for rule-only use"""

    tagger: object
    lexicon: Lexicon
    weights: RuleWeights
    linear: LinearModel = None

    @classmethod
    def load(cls, tagger_path=None, lexicon_path=None, weights_path=None, linear_path=None):
        """loads the given files, falling back to the bundled resources

        A missing tagger or weights path means the bundled rule tagger and
        uniform weights; a missing linear path leaves `linear` unset.
        """
        tagger = load_tagger(tagger_path)
        lexicon = load_lexicon(lexicon_path) if lexicon_path else default_lexicon()
        weights = load_rule_weights(weights_path) if weights_path else RuleWeights()
        linear = load_model(linear_path) if linear_path else None
        return cls(tagger, lexicon, weights, linear)

    @classmethod
    def from_directory(cls, model_dir, lexicon_path=None):
        """picks up `tagger.tsv`, `rule_weights.tsv` and `linear.model` if present"""

        def existing(name):
            path = os.path.join(model_dir, name)
            return path if os.path.exists(path) else None

        return cls.load(
            tagger_path=existing("tagger.tsv"),
            lexicon_path=lexicon_path,
            weights_path=existing("rule_weights.tsv"),
            linear_path=existing("linear.model"),
        )


def candidates_for(s, models, mode):
    """rule and statistical candidates of one tagged sentence"""
    rule_cand = stat_cand = CandidateSet()
    if mode.uses_rules:
        rule_cand = RuleExtractor(models.lexicon, models.weights).extract(s)
    if mode.uses_statistics:
        if models.linear is None:
            raise ModelNotFound("mode {} needs a linear model".format(mode.value))
        stat_cand = extract_candidates(models.linear, s, models.lexicon)
    return rule_cand, stat_cand


def extract_sentence(s, models, mode):
    rule_cand, stat_cand = candidates_for(s, models, mode)
    return integrate(rule_cand, stat_cand, mode)


def analyze(text, models, mode=IntegratorMode.HYBRID_OR):
    """tokenize, tag, run both extractors and integrate

    Args:
        text (str): raw text
        models (Models): loaded models
        mode (IntegratorMode): fusion mode

    Returns:
        Extraction: the tagged sentence and its target
    """
    s = tag_text(text, models.tagger)
    return Extraction(s, extract_sentence(s, models, mode))


def extract_target(text, models, mode=IntegratorMode.HYBRID_OR):
    return analyze(text, models, mode).target


def extract_batch(texts, models, mode=IntegratorMode.HYBRID_OR, jobs=1):
    """`analyze` over many texts, results in input order"""
    texts = list(texts)
    if jobs <= 1 or len(texts) < 2:
        return [analyze(text, models, mode) for text in texts]
    logger.debug("extracting %d texts with %d threads", len(texts), jobs)
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(lambda text: analyze(text, models, mode), texts))
