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

"""Averaged structured perceptron labelling every token 0 or 1."""

import logging

import numpy as np
from scipy import sparse

from .errors import EmptyTrainingSet
from .sentiment import default_lexicon
from .statistical import featurize

logger = logging.getLogger(__name__)

N_LABELS = 2
_START = N_LABELS


def viterbi(emission, transition):
    """best label path

    Args:
        emission (np.ndarray): (n, 2) label scores per token
        transition (np.ndarray): (3, 2) scores, row 2 is the start state

    Returns:
        list of int: one label per token, ties resolved towards 0
    """
    n = emission.shape[0]
    score = transition[_START] + emission[0]
    back = np.zeros((n, N_LABELS), dtype=int)
    for i in range(1, n):
        candidates = score[:, None] + transition[:N_LABELS]
        back[i] = np.argmax(candidates, axis=0)
        score = candidates[back[i], np.arange(N_LABELS)] + emission[i]
    path = [int(np.argmax(score))]
    for i in range(n - 1, 0, -1):
        path.append(int(back[i][path[-1]]))
    return path[::-1]


class SequenceLabeler:
    """first order 0/1 tagger over the word classifier's features

    Args:
        epochs (int): passes over the training sentences
        seed (int): shuffling seed
        lexicon (Lexicon): polarity lexicon, bundled list by default
    """

    def __init__(self, epochs=10, seed=42, lexicon=None):
        self.epochs = epochs
        self.seed = seed
        self.lexicon = lexicon or default_lexicon()
        self.index = {}
        self.emission = np.zeros((N_LABELS, 0))
        self.transition = np.zeros((N_LABELS + 1, N_LABELS))

    def _features(self, s, grow=False):
        rows, cols, data = [], [], []
        for i in range(len(s)):
            for name, value in featurize(s, i, self.lexicon).items():
                if grow and name not in self.index:
                    self.index[name] = len(self.index)
                col = self.index.get(name)
                if col is not None and value != 0.0:
                    rows.append(i)
                    cols.append(col)
                    data.append(value)
        return sparse.csr_matrix((data, (rows, cols)), shape=(len(s), len(self.index)))

    def _decode(self, x, emission, transition):
        return viterbi(np.asarray(x @ emission.T), transition)

    def fit(self, corpus):
        """trains on (TaggedSentence, TargetAnnotation) pairs"""
        corpus = [(s, gold) for s, gold in corpus if len(s)]
        if not corpus:
            raise EmptyTrainingSet("no training sentences")
        self.index = {}
        data = []
        for s, gold in corpus:
            x = self._features(s, grow=True)
            data.append((x, [int(i in gold.words) for i in range(len(s))]))
        d = len(self.index)
        data = [(x if x.shape[1] == d else _widen(x, d), labels) for x, labels in data]

        emission = np.zeros((N_LABELS, d))
        transition = np.zeros((N_LABELS + 1, N_LABELS))
        # running sums for averaging: w_avg = w - u / c
        emission_u = np.zeros_like(emission)
        transition_u = np.zeros_like(transition)
        c = 1
        rng = np.random.default_rng(self.seed)
        for epoch in range(self.epochs):
            mistakes = 0
            for k in rng.permutation(len(data)):
                x, gold = data[k]
                predicted = self._decode(x, emission, transition)
                if predicted != gold:
                    mistakes += 1
                    for i, (g, p) in enumerate(zip(gold, predicted)):
                        prev_g = gold[i - 1] if i else _START
                        prev_p = predicted[i - 1] if i else _START
                        if g == p and prev_g == prev_p:
                            continue
                        row = x.getrow(i).toarray().ravel()
                        emission[g] += row
                        emission[p] -= row
                        emission_u[g] += c * row
                        emission_u[p] -= c * row
                        transition[prev_g, g] += 1.0
                        transition[prev_p, p] -= 1.0
                        transition_u[prev_g, g] += c
                        transition_u[prev_p, p] -= c
                c += 1
            logger.debug("sequence epoch %d: %d mistaken sentences", epoch + 1, mistakes)
        self.emission = emission - emission_u / c
        self.transition = transition - transition_u / c
        return self

    def predict(self, s):
        if not len(s):
            return []
        return self._decode(self._features(s), self.emission, self.transition)


def _widen(x, d):
    x = x.tocoo()
    return sparse.csr_matrix((x.data, (x.row, x.col)), shape=(x.shape[0], d))
