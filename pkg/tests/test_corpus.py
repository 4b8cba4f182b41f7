import pytest

from maghom.corpus import run_corpus


@pytest.mark.parametrize("tier", ["theorem", "paper-tables"])
def test_corpus_tier_passes(tier):
    reports = run_corpus(tier)
    assert reports
    failed = [r.format() for r in reports if not r.passed]
    assert not failed, "\n".join(failed)
