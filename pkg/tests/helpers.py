import os
from functools import lru_cache

from pysarct.corpus import load_corpus, prepare_corpus
from pysarct.tagging import RuleTagger, tag_text

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")
FIXTURE = os.path.join(DATA_DIR, "fixture.tsv")


@lru_cache(maxsize=None)
def rule_tagger():
    return RuleTagger()


def tagged(text):
    return tag_text(text, rule_tagger())


@lru_cache(maxsize=None)
def fixture_documents():
    return tuple(load_corpus(FIXTURE))


@lru_cache(maxsize=None)
def fixture_corpus():
    return tuple(prepare_corpus(fixture_documents(), rule_tagger()))


def write_file(directory, name, text):
    path = os.path.join(directory, name)
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
    return path
