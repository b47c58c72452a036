"""Smoke tests for the python surface of the core library."""

import json
import sys

import pxmod


def main() -> int:
    # generation yields validated instances of both kinds
    instances = pxmod.generate(seed=3, count=5, max_order=8, max_dim=3)
    assert len(instances) == 10
    kinds = {p.kind for p in instances}
    assert kinds == {"group", "algebra"}

    # serialization round-trips bit for bit
    for p in instances[:4]:
        text = p.dumps()
        again = pxmod.loads(text)
        assert again.dumps() == text, p.name

    # the worked examples: commutator, reflection, crossedness
    group = next(p for p in instances if p.kind == "group")
    crossed, witness = group.is_crossed()
    assert isinstance(crossed, bool)
    sub = json.loads(pxmod.commutator(group))
    assert "elements" in sub

    refl = pxmod.reflect(group)
    rc, _ = refl["pcm"].is_crossed()
    assert rc, "reflection must be crossed"

    prod = pxmod.product(group, group)
    assert prod["pcm"].size >= 1
    assert json.loads(prod["lx"])["map"] is not None

    # coproduct of the reflection with itself is crossed
    co = pxmod.coproduct(refl["pcm"], refl["pcm"])
    cc, _ = co["pcm"].is_crossed()
    assert cc

    # theorem checks pass at a small scale and are deterministic
    a = pxmod.check_theorems(seed=1, max_order=4, max_dim=1, count=4)
    b = pxmod.check_theorems(seed=1, max_order=4, max_dim=1, count=4)
    assert [r["check"] for r in a] == [r["check"] for r in b]
    assert all(r["pass"] for r in a), [r for r in a if not r["pass"]][:1]

    # the negative path surfaces as a failing report, not an exception
    bad = pxmod.check_theorems(seed=1, max_order=4, max_dim=1, count=2, corrupt=True)
    assert any(not r["pass"] and r["witness"] for r in bad)

    # malformed input raises the dedicated parse error
    try:
        pxmod.loads("{broken")
    except pxmod.ParseError:
        pass
    else:
        raise AssertionError("expected ParseError")

    print("python smoke: ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())
