"""Shared fixtures: built groups and tables are cached per session."""

import pytest

from cheblab.corpus import default_corpus
from cheblab.groups import build_group
from cheblab.chartab import character_table

_GROUPS: dict = {}


def group(label_or_spec):
    """Session-cached group constructor (tables cache on the group itself)."""
    key = label_or_spec if isinstance(label_or_spec, str) else label_or_spec.label()
    if key not in _GROUPS:
        _GROUPS[key] = build_group(label_or_spec)
    return _GROUPS[key]


@pytest.fixture(scope="session")
def corpus_groups():
    out = []
    for label, spec in default_corpus().entries:
        if label not in _GROUPS:
            _GROUPS[label] = build_group(spec)
        out.append((label, _GROUPS[label]))
    return out


@pytest.fixture(scope="session")
def s3():
    return group("symmetric:3")


@pytest.fixture(scope="session")
def s4():
    return group("symmetric:4")


@pytest.fixture(scope="session")
def s3_table(s3):
    return character_table(s3)


@pytest.fixture(scope="session")
def s4_table(s4):
    return character_table(s4)
