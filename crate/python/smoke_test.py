"""Smoke test for the `sda` extension module.

Build and install first:  pip install maturin && maturin develop -m crates/py/Cargo.toml
"""

import json

import sda

corner = sda.Layout(100, 100, [("o1", 10, 10, 20, 20)])
report = corner.measure()
assert sda.round4(report.aesthetic_value) == "0.4800", report
assert sda.round4(report.equilibrium) == "0.4000"
assert report.components() == (
    report.balance, report.equilibrium, report.symmetry, report.sequence, report.rhythm
)
assert set(report.intermediates()) >= {"balance_vertical", "reading_order", "weight_order"}

centred = sda.Layout(100, 100, [("o1", 40, 40, 20, 20)])
assert centred.measure().aesthetic_value == 1.0

# documents round-trip and agree with the in-memory constructor
again = sda.Layout.from_json(corner.to_json())
assert again.objects == corner.objects and len(again) == 1
assert json.loads(corner.render("json"))["aesthetic_value"] == report.aesthetic_value
assert corner.render().endswith("Aesthetic value (av) 0.4800\n")

# geometric invariances
# sequence follows reading order, so only the other four survive mirroring
m = corner.mirrored().measure()
for name in ("balance", "equilibrium", "symmetry", "rhythm"):
    assert abs(getattr(m, name) - getattr(report, name)) < 1e-12, name
assert abs(corner.scaled(3.5).measure().aesthetic_value - report.aesthetic_value) < 1e-12

assert sda.aesthetic_value([1, 1, 1, 1, 0]) == 0.8
assert sda.round4(0.95065) == "0.9507"
assert [r for _, _, r in sda.rank([("a", 0.5), ("b", 0.9), ("c", 0.5)])] == [1, 2, 2]

assert sda.validate(corner.to_json()) == []
problems = sda.validate('{"version":1,"frame":{"width":100,"height":100},"objects":['
                        '{"id":"a","x":90,"y":0,"width":20,"height":10},'
                        '{"id":"a","x":0,"y":0,"width":10,"height":10}]}')
assert len(problems) == 2, problems

try:
    sda.Layout(100, 100, [("bad", 0, 0, -5, 10)])
except sda.LayoutError as err:
    assert "bad" in str(err)
else:
    raise AssertionError("negative width accepted")
assert issubclass(sda.LayoutError, ValueError)

print(f"sda {sda.__version__}: ok")
