import json
import random

import pytest

from idealpowers.cache import ResultCache
from idealpowers.errors import CacheAuditError


def test_put_get_roundtrip(tmp_path):
    rc = ResultCache(tmp_path, "0.1.0")
    key = rc.key(ideal="ideal(x1)", operation="regularity", parameters={"cap": 5})
    assert rc.get(key) is None
    rc.put(key, {"module_reg": 3, "sheaf_reg": 3})
    assert rc.get(key) == {"module_reg": 3, "sheaf_reg": 3}


def test_key_depends_on_every_component(tmp_path):
    rc = ResultCache(tmp_path, "0.1.0")
    base = dict(ideal="ideal(x1)", operation="regularity", parameters={"cap": 5})
    k0 = rc.key(**base)
    assert rc.key(**{**base, "ideal": "ideal(x2)"}) != k0
    assert rc.key(**{**base, "operation": "betti"}) != k0
    assert rc.key(**{**base, "parameters": {"cap": 6}}) != k0


def test_version_bump_invalidates(tmp_path):
    old = ResultCache(tmp_path, "0.1.0")
    new = ResultCache(tmp_path, "0.2.0")
    args = dict(ideal="ideal(x1)", operation="regularity", parameters={})
    old.put(old.key(**args), {"v": 1})
    assert new.get(new.key(**args)) is None


def test_get_or_compute_counts_calls(tmp_path):
    rc = ResultCache(tmp_path, "0.1.0", audit_rate=0.0)
    calls = []

    def compute():
        calls.append(1)
        return {"value": 42}

    args = dict(ideal="ideal(x1)", operation="op", parameters={})
    assert rc.get_or_compute(**args, compute=compute) == {"value": 42}
    assert rc.get_or_compute(**args, compute=compute) == {"value": 42}
    assert len(calls) == 1


def test_corruption_is_detected_and_recomputed(tmp_path):
    rc = ResultCache(tmp_path, "0.1.0", audit_rate=0.0)
    args = dict(ideal="ideal(x1)", operation="op", parameters={})
    key = rc.key(**args)
    rc.put(key, {"value": 1})
    path = rc._path(key)
    entry = json.loads(path.read_text())
    entry["payload"] = '{"value":999}'  # checksum now wrong
    path.write_text(json.dumps(entry))
    with pytest.warns(UserWarning, match="corrupted"):
        assert rc.get(key) is None
    assert rc.get_or_compute(**args, compute=lambda: {"value": 1}) == {"value": 1}


def test_unreadable_entry_is_discarded(tmp_path):
    rc = ResultCache(tmp_path, "0.1.0")
    key = rc.key(ideal="i", operation="o", parameters={})
    rc.put(key, {"v": 1})
    rc._path(key).write_text("not json at all")
    with pytest.warns(UserWarning, match="unreadable"):
        assert rc.get(key) is None


def test_audit_passes_on_honest_recomputation(tmp_path):
    rc = ResultCache(tmp_path, "0.1.0", audit_rate=1.0, rng=random.Random(0))
    args = dict(ideal="i", operation="o", parameters={})
    rc.get_or_compute(**args, compute=lambda: {"v": 7})
    assert rc.get_or_compute(**args, compute=lambda: {"v": 7}) == {"v": 7}


def test_audit_catches_drift(tmp_path):
    rc = ResultCache(tmp_path, "0.1.0", audit_rate=1.0, rng=random.Random(0))
    args = dict(ideal="i", operation="o", parameters={})
    rc.get_or_compute(**args, compute=lambda: {"v": 7})
    with pytest.raises(CacheAuditError):
        rc.get_or_compute(**args, compute=lambda: {"v": 8})


def test_hits_are_bit_identical_to_recomputation(tmp_path):
    rc = ResultCache(tmp_path, "0.1.0", audit_rate=0.0)
    payload = {"b": [1, 2, 3], "a": {"nested": True}}
    args = dict(ideal="i", operation="o", parameters={})
    first = rc.get_or_compute(**args, compute=lambda: payload)
    second = rc.get_or_compute(**args, compute=lambda: (_ for _ in ()).throw(AssertionError))
    assert json.dumps(first, sort_keys=True) == json.dumps(second, sort_keys=True)
