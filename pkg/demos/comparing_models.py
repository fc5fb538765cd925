"""
Comparing the grey family on your own series
============================================

Load a CSV, fit every model with a held-out tail and rank them.
"""

import tempfile
from pathlib import Path

from nipgm import ModelKind, load_csv
from nipgm.workflows import grey_result, poly_result

# any file with a header `label,value` works
path = Path(tempfile.mkdtemp()) / "sales.csv"
path.write_text("label,value\n" + "\n".join(
    f"{2010 + i},{v}" for i, v in enumerate([112, 121, 135, 146, 163, 178, 197, 214, 238, 259])
))
raw = load_csv(path, train=7)

candidates = {
    "gm11": ModelKind.gm11(),
    "dgm11": ModelKind.dgm11(),
    "ngm_kc": ModelKind.ngm_kc(),
    "gm_talpha": ModelKind.gm_talpha(0.8),
    "nipgm": ModelKind.nipgm(0.9, 0.8),
}
results = [grey_result(kind, raw, name=name) for name, kind in candidates.items()]
results.append(poly_result(raw, 2))

for r in sorted(results, key=lambda r: r.rmsepo):
    print(f"{r.label:18s} fit {r.rmsepr:6.3f}  hold-out {r.rmsepo:6.3f}  overall {r.rmse:6.3f}")
