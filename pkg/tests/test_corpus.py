import os
import tempfile
import unittest

from pysarct.corpus import (
    Document,
    check_gold,
    corpus_stats,
    format_stats,
    load_corpus,
    parse_target,
    resolve_gold_indices,
    save_corpus,
    storable_target,
)
from pysarct.errors import AnnotationMismatch, ParseError
from pysarct.sentiment import Lexicon
from pysarct.target import OUTSIDE

from helpers import FIXTURE, fixture_corpus, fixture_documents, tagged, write_file

STATS_DOCUMENTS = [
    Document("a", "I love being ignored .", ("being", "ignored")),
    Document("b", "Oh , I love this jacket !", ("this", "jacket")),
    Document("c", "Tooth-ache is fun", ("Tooth-ache",)),
    Document("d", "Your parents must be so proud today !"),
]
STATS_LEXICON = Lexicon({"love": 1.0, "fun": 0.5, "proud": 0.75})


class LoadCorpusTests(unittest.TestCase):
    def test_fixture(self):
        documents = load_corpus(FIXTURE)
        self.assertEqual(len(documents), 20)
        self.assertEqual(documents[0].id, "t01")
        self.assertEqual(documents[0].gold, ("Microsoft",))
        self.assertTrue(documents[3].is_outside)
        self.assertEqual(documents[3].target_field, "OUTSIDE")

    def test_missing_id(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = write_file(tmp, "c.tsv", "# header\nI love being ignored.\tbeing|ignored\n\tOk.\tOUTSIDE\n")
            documents = load_corpus(path)
        self.assertEqual([d.id for d in documents], ["2", "3"])
        self.assertEqual(documents[0].gold, ("being", "ignored"))

    def test_text_opening_with_a_hashtag(self):
        with tempfile.TemporaryDirectory() as tmp:
            text = "# comment\n#Mondays are so much fun.\tMondays\n#x\t#Exams are fun.\tExams\n"
            documents = load_corpus(write_file(tmp, "h.tsv", text))
        self.assertEqual([d.id for d in documents], ["2", "#x"])
        self.assertEqual(documents[0].text, "#Mondays are so much fun.")
        self.assertEqual(documents[0].gold, ("Mondays",))
        self.assertEqual(documents[1].gold, ("Exams",))

    def test_errors(self):
        with tempfile.TemporaryDirectory() as tmp:
            with self.assertRaises(FileNotFoundError):
                load_corpus(os.path.join(tmp, "missing.tsv"))
            with self.assertRaises(AnnotationMismatch) as ctx:
                load_corpus(write_file(tmp, "a.tsv", "x\tI love it.\tlove\ny\tI love it.\thate\n"))
            self.assertEqual(ctx.exception.line, 2)
            with self.assertRaises(ParseError):
                load_corpus(write_file(tmp, "b.tsv", "x\tI love it.\t\n"))
            with self.assertRaises(ParseError):
                load_corpus(write_file(tmp, "c.tsv", "x\tI love it.\tit\textra\n"))
            with self.assertRaises(ParseError):
                load_corpus(write_file(tmp, "d.tsv", "x\t \tit\n"))

    def test_save_and_load(self):
        documents = list(fixture_documents())
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "out.tsv")
            save_corpus(documents, path)
            self.assertEqual(load_corpus(path), documents)


class TargetFieldTests(unittest.TestCase):
    def test_parse(self):
        self.assertEqual(parse_target("OUTSIDE"), ())
        self.assertEqual(parse_target("my|job"), ("my", "job"))
        for bad in ("", "my||job", "OUTSIDE|job"):
            with self.assertRaises(ParseError):
                parse_target(bad)
        with self.assertRaises(ParseError):
            Document("x", "text", ("OUTSIDE",))

    def test_storable_target(self):
        self.assertEqual(storable_target(["this", "|", "jacket"]), ("this", "jacket"))
        self.assertEqual(storable_target(["a|b", "OUTSIDE"]), ())
        document = Document("x", "I love this | OUTSIDE jacket", storable_target(["|", "OUTSIDE", "jacket"]))
        self.assertEqual(parse_target(document.target_field), ("jacket",))

    def test_repeated_words(self):
        check_gold(Document("x", "to be or not to be", ("to", "to")))
        with self.assertRaises(AnnotationMismatch):
            check_gold(Document("x", "to be or not to be", ("to", "to", "to")))

    def test_resolve(self):
        s, gold = fixture_corpus()[7]
        self.assertEqual(s.words(sorted(gold.words)), ["to", "wake", "up", "early", "to", "babysit"])
        self.assertEqual(gold.words, set(range(3, 9)))
        self.assertIs(resolve_gold_indices(Document("x", "Ok."), tagged("Ok.")), OUTSIDE)
        with self.assertRaises(AnnotationMismatch):
            resolve_gold_indices(Document("x", "Ok.", ("fine",)), tagged("Ok."))

    def test_case_insensitive(self):
        s, gold = fixture_corpus()[13]
        self.assertEqual(s.words(sorted(gold.words)), ["Tooth-ache"])


class CorpusStatsTests(unittest.TestCase):
    def test_against_recount(self):
        stats = corpus_stats(STATS_DOCUMENTS, STATS_LEXICON)
        tokens = [d.text.lower().split() for d in STATS_DOCUMENTS]
        self.assertEqual(stats.count, 4)
        self.assertEqual(stats.total_words, sum(len(t) for t in tokens))
        self.assertAlmostEqual(stats.avg_words, sum(len(t) for t in tokens) / 4.0)
        self.assertEqual(stats.vocabulary, len(set(w for t in tokens for w in t)))
        self.assertAlmostEqual(stats.avg_target_length, 5.0 / 3.0)
        self.assertAlmostEqual(stats.avg_target_polarity_strength, 0.0)
        self.assertAlmostEqual(stats.avg_rest_polarity_strength, (1.0 + 1.0 + 0.5 + 0.75) / 4.0)
        self.assertFalse(stats.outside_only)

    def test_outside_only(self):
        stats = corpus_stats(STATS_DOCUMENTS[3:], STATS_LEXICON)
        self.assertTrue(stats.outside_only)
        self.assertEqual(stats.avg_target_length, 0.0)
        self.assertAlmostEqual(stats.avg_rest_polarity_strength, 0.75)
        self.assertIn("every target is Outside", format_stats(stats))

    def test_format(self):
        text = format_stats(corpus_stats(STATS_DOCUMENTS, STATS_LEXICON))
        self.assertIn("Count", text)
        self.assertIn("1.67", text)

    def test_empty(self):
        with self.assertRaises(ValueError):
            corpus_stats([])


if __name__ == "__main__":
    unittest.main(verbosity=4)
