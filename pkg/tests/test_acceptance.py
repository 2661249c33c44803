"""The ten bundled acceptance checks, one test and one verdict line each."""

import pytest

from bicatkit import acceptance

_SLUGS = {num: slug for num, slug, _ in acceptance.CRITERIA}


@pytest.fixture(scope="module")
def rows():
    return {num: (ok, detail)
            for num, _, ok, detail in acceptance.run_all()}


@pytest.mark.parametrize(
    "num", sorted(_SLUGS), ids=[f"{n}-{_SLUGS[n]}" for n in sorted(_SLUGS)])
def test_criterion(num, rows):
    ok, detail = rows[num]
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'} — {detail}")
    assert ok, f"criterion {num} ({_SLUGS[num]}): {detail}"


def test_every_criterion_reports():
    assert sorted(_SLUGS) == list(range(1, 11))
    assert len({slug for slug in _SLUGS.values()}) == 10
