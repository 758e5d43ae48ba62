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

"""Word level target classifier.

A sentence of n tokens becomes n binary instances; the words classified as
positive form the candidate target.
"""

import logging
import math
import os
from dataclasses import dataclass
from types import MappingProxyType

import numpy as np
from scipy import sparse

from .errors import EmptyTrainingSet, ModelNotFound, ParseError
from .sentiment import default_lexicon, trigram_polarity
from .target import CandidateSet

logger = logging.getLogger(__name__)

MODEL_HEADER = "sarct-model v1"
BIAS_KEY = "__bias__"

BOS = "BOS"
EOS = "EOS"


@dataclass(frozen=True)
class WordInstance:
    sentence_id: object
    token_index: int
    features: dict
    label: int


def featurize(s, i, lex):
    """sparse features of token `i`

    Args:
        s (TaggedSentence): tagged sentence
        i (int): token index
        lex (Lexicon): polarity lexicon

    Returns:
        dict: feature name -> value
    """
    if not 0 <= i < len(s):
        raise IndexError(i)
    token = s.tokens[i]
    return {
        "w=" + token.lower: 1.0,
        "pos=" + token.pos: 1.0,
        "prev_pos=" + (s.tokens[i - 1].pos if i > 0 else BOS): 1.0,
        "next_pos=" + (s.tokens[i + 1].pos if i + 1 < len(s) else EOS): 1.0,
        "polarity": lex.get(token.surface),
        "trigram_polarity": trigram_polarity(lex, s, i),
        "caps": float(token.capital_count),
    }


def decompose(s, gold, lex=None, sentence_id=None):
    """one labelled instance per token

    Args:
        s (TaggedSentence): tagged sentence
        gold (TargetAnnotation): gold target, Outside labels every word 0
        lex (Lexicon): polarity lexicon, bundled list by default
        sentence_id: carried into every instance

    Returns:
        list of WordInstance
    """
    gold.check_bounds(len(s))
    lex = lex or default_lexicon()
    return [
        WordInstance(sentence_id, i, featurize(s, i, lex), int(i in gold.words))
        for i in range(len(s))
    ]


class TrainConfig:
    """hinge loss trainer settings

    Args:
        epochs (int): passes over the instances
        learning_rate (float): initial step size, decays as 1 / sqrt(epoch)
        regularization (float): L2 penalty
        seed (int): shuffling seed
        positive_weight (float): loss weight of target words, by default the
            ratio of negative to positive instances
        batch_size (int): instances per subgradient step
    """

    def __init__(
        self,
        epochs=60,
        learning_rate=0.5,
        regularization=1e-4,
        seed=42,
        positive_weight=None,
        batch_size=16,
    ):
        if epochs < 1 or batch_size < 1:
            raise ValueError("epochs and batch_size must be positive")
        if learning_rate <= 0 or regularization < 0:
            raise ValueError("learning_rate must be positive, regularization non-negative")
        self.epochs = epochs
        self.learning_rate = learning_rate
        self.regularization = regularization
        self.seed = seed
        self.positive_weight = positive_weight
        self.batch_size = batch_size


class LinearModel:
    """thresholded linear scorer over named features

    Args:
        weights (dict): feature -> weight, features not listed weigh 0
        bias (float): added to every score
        threshold (float): a word is positive iff its score is above it
    """

    def __init__(self, weights=None, bias=0.0, threshold=0.0):
        weights = {name: float(value) for name, value in (weights or {}).items()}
        for name, value in list(weights.items()) + [(BIAS_KEY, bias)]:
            if not math.isfinite(value):
                raise ValueError("weight of {} is not finite".format(name))
        self.weights = MappingProxyType(weights)
        self.bias = float(bias)
        self.threshold = float(threshold)

    def score(self, fv):
        return sum(self.weights.get(name, 0.0) * value for name, value in fv.items()) + self.bias

    def classify(self, fv):
        return int(self.score(fv) > self.threshold)

    def __eq__(self, other):
        return (
            isinstance(other, LinearModel)
            and dict(self.weights) == dict(other.weights)
            and self.bias == other.bias
            and self.threshold == other.threshold
        )


def _design_matrix(instances, index):
    rows, cols, data = [], [], []
    for row, instance in enumerate(instances):
        for name, value in instance.features.items():
            col = index.get(name)
            if col is not None and value != 0.0:
                rows.append(row)
                cols.append(col)
                data.append(value)
    return sparse.csr_matrix((data, (rows, cols)), shape=(len(instances), len(index)))


def train(instances, config=None):
    """class weighted hinge loss, minimised by minibatch subgradient descent

    Args:
        instances (list of WordInstance): training data
        config (TrainConfig): trainer settings

    Returns:
        LinearModel
    """
    instances = list(instances)
    if not instances:
        raise EmptyTrainingSet("no training instances")
    config = config or TrainConfig()
    names = sorted({name for instance in instances for name in instance.features})
    index = {name: col for col, name in enumerate(names)}
    x = _design_matrix(instances, index)
    labels = np.array([instance.label for instance in instances])
    y = np.where(labels == 1, 1.0, -1.0)
    n_pos = int(labels.sum())
    positive_weight = config.positive_weight
    if positive_weight is None:
        positive_weight = (len(labels) - n_pos) / n_pos if n_pos else 1.0
    cost = np.where(labels == 1, positive_weight, 1.0)

    rng = np.random.default_rng(config.seed)
    w = np.zeros(len(names))
    b = 0.0
    for epoch in range(config.epochs):
        rate = config.learning_rate / math.sqrt(epoch + 1)
        order = rng.permutation(len(instances))
        for start in range(0, len(order), config.batch_size):
            batch = order[start:start + config.batch_size]
            xb = x[batch]
            margins = y[batch] * (xb @ w + b)
            coef = cost[batch] * y[batch] * (margins < 1.0)
            w -= rate * (config.regularization * w - xb.T @ coef / len(batch))
            b += rate * coef.sum() / len(batch)
        if logger.isEnabledFor(logging.DEBUG):
            loss = cost * np.maximum(0.0, 1.0 - y * (x @ w + b))
            logger.debug("epoch %d: weighted hinge loss %.6f", epoch + 1, loss.mean())
    weights = {name: float(value) for name, value in zip(names, w) if value != 0.0}
    return LinearModel(weights, bias=float(b))


def predict_word(m, fv):
    return m.classify(fv)


def extract_candidates(m, s, lex):
    """the words the classifier labels 1, or an Outside vote if there are none"""
    indices = [i for i in range(len(s)) if predict_word(m, featurize(s, i, lex))]
    if not indices:
        return CandidateSet.outside()
    return CandidateSet(indices)


class StatisticalExtractor:
    def __init__(self, model, lexicon=None):
        self.model = model
        self.lexicon = lexicon or default_lexicon()

    def extract(self, s):
        return extract_candidates(self.model, s, self.lexicon)


def save_model(m, path):
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(MODEL_HEADER + "\n")
        for name in sorted(m.weights):
            handle.write("{}\t{!r}\n".format(name, m.weights[name]))
        handle.write("{}\t{!r}\n".format(BIAS_KEY, m.bias))
    logger.debug("saved linear model with %d weights to %s", len(m.weights), path)


def load_model(path, threshold=0.0):
    """reads a model written by `save_model`"""
    if not os.path.exists(path):
        raise ModelNotFound("linear model not found: {}".format(path))
    weights = {}
    bias = None
    with open(path, encoding="utf-8") as handle:
        header = handle.readline().rstrip("\r\n")
        if header != MODEL_HEADER:
            raise ParseError("expected header '{}'".format(MODEL_HEADER), line=1)
        for line_no, line in enumerate(handle, start=2):
            line = line.rstrip("\r\n")
            if not line:
                continue
            name, sep, value = line.rpartition("\t")
            if not sep or not name:
                raise ParseError("expected feature<TAB>weight", line=line_no)
            try:
                value = float(value)
            except ValueError:
                raise ParseError("weight is not a number: {}".format(value), line=line_no)
            if not math.isfinite(value):
                raise ParseError("weight is not finite", line=line_no)
            if name == BIAS_KEY:
                bias = value
            else:
                weights[name] = value
    if bias is None:
        raise ParseError("missing {} line".format(BIAS_KEY))
    logger.debug("loaded linear model with %d weights from %s", len(weights), path)
    return LinearModel(weights, bias=bias, threshold=threshold)
