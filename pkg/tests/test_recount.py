import csv
import os
import unittest

from nltk.tokenize import PunktSentenceTokenizer, TreebankWordTokenizer

from pysarct.corpus import corpus_stats, load_corpus

from helpers import FIXTURE

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
LEXICON = os.path.join(ROOT, "pysarct", "data", "lexicon.tsv")
MEANS = ("avg_words", "avg_target_length", "avg_target_polarity_strength", "avg_rest_polarity_strength")


def read_rows(path):
    rows = []
    with open(path, encoding="utf-8", newline="") as handle:
        for row in csv.reader(handle, delimiter="\t", quoting=csv.QUOTE_NONE):
            if not row or (row[0].startswith("#") and len(row) == 1):
                continue
            rows.append(row[-2:])
    return rows


def read_scores(path):
    scores = {}
    with open(path, encoding="utf-8", newline="") as handle:
        for row in csv.reader(handle, delimiter="\t", quoting=csv.QUOTE_NONE):
            if row and not row[0].startswith("#"):
                scores[row[0].strip().lower()] = float(row[1])
    return scores


def words_of(text):
    sentences = PunktSentenceTokenizer().tokenize(text)
    return [word.lower() for sentence in sentences for word in TreebankWordTokenizer().tokenize(sentence)]


def recount(rows, scores):
    lengths, vocabulary = [], set()
    target_lengths, target_strengths, rest_strengths = [], [], []
    for text, target in rows:
        words = words_of(text)
        lengths.append(len(words))
        vocabulary.update(words)
        gold = [] if target == "OUTSIDE" else [word.lower() for word in target.split("|")]
        rest = list(words)
        for word in gold:
            rest.remove(word)
        if gold:
            target_lengths.append(len(gold))
            target_strengths.append(sum(abs(scores.get(word, 0.0)) for word in gold))
        rest_strengths.append(sum(abs(scores.get(word, 0.0)) for word in rest))
    return {
        "count": len(rows),
        "avg_words": sum(lengths) / len(lengths),
        "vocabulary": len(vocabulary),
        "total_words": sum(lengths),
        "avg_target_length": sum(target_lengths) / len(target_lengths),
        "avg_target_polarity_strength": sum(target_strengths) / len(target_strengths),
        "avg_rest_polarity_strength": sum(rest_strengths) / len(rest_strengths),
    }


class FixtureRecountTests(unittest.TestCase):
    def test_statistics_match_a_separate_count(self):
        expected = recount(read_rows(FIXTURE), read_scores(LEXICON))
        stats = corpus_stats(load_corpus(FIXTURE))
        for name in ("count", "vocabulary", "total_words"):
            self.assertEqual(getattr(stats, name), expected[name], name)
        for name in MEANS:
            self.assertAlmostEqual(getattr(stats, name), expected[name], delta=1e-9, msg=name)
        self.assertEqual(expected["count"], 20)
        self.assertFalse(stats.outside_only)


if __name__ == "__main__":
    unittest.main(verbosity=4)
