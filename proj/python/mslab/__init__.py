"""Python face of the mslab core.

The compiled module speaks JSON in the same schemas as the CLI; this package
decodes everything into plain dicts, lists, and complex numbers.
"""

import json

try:
    from . import _mslab as _impl  # installed layout: mslab/_mslab.so
except ImportError:  # pragma: no cover - build-tree layout
    import _mslab as _impl

__all__ = [
    "ac_test",
    "build_system",
    "clark_atoms",
    "eval_inner",
    "kernel_eval",
    "kernel_norm",
    "run_and_emit",
    "run_scenario",
    "spec",
]


def spec(domain="disc", zeros=(), singular_atoms=(), tail=None,
         mass_at_infinity=0.0):
    """Assemble a spec JSON string from python values.

    zeros are complex numbers; singular_atoms are (position, mass) pairs;
    tail is None or a dict {"name": ..., "params": {...}, "truncation_N": n}.
    """
    j = {
        "domain": domain,
        "zeros": [[complex(z).real, complex(z).imag] for z in zeros],
        "singular_atoms": [[float(p), float(m)] for p, m in singular_atoms],
    }
    if mass_at_infinity:
        j["mass_at_infinity"] = float(mass_at_infinity)
    if tail is not None:
        j["tail"] = tail
    return json.dumps(j)


def eval_inner(spec_json, z):
    return _impl.eval_inner(spec_json, complex(z))


def kernel_eval(spec_json, lam, z):
    return _impl.kernel_eval(spec_json, complex(lam), complex(z))


def kernel_norm(spec_json, z):
    return _impl.kernel_norm(spec_json, complex(z))


def ac_test(spec_json, point=None, order=0):
    """Order-n convergence report as a dict; point=None probes infinity."""
    p = None if point is None else complex(point)
    return json.loads(_impl.ac_test(spec_json, p, order))


def clark_atoms(spec_json, alpha=1.0 + 0.0j):
    mu = json.loads(_impl.clark_atoms(spec_json, complex(alpha)))
    mu["alpha"] = complex(*mu["alpha"])
    mu["atoms"] = [(complex(re, im), w) for re, im, w in mu["atoms"]]
    return mu


def build_system(spec_json, points):
    sys = json.loads(_impl.build_system(spec_json, [complex(p) for p in points]))
    sys["points"] = [complex(re, im) for re, im in sys["points"]]
    sys["gram"] = [[complex(re, im) for re, im in row] for row in sys["gram"]]
    return sys


def run_scenario(config):
    """Run a workbench scenario from a config dict (or JSON string)."""
    if not isinstance(config, str):
        config = json.dumps(config)
    return json.loads(_impl.run_scenario(config))


def run_and_emit(config):
    """Run a scenario and write its report files; returns the paths."""
    if not isinstance(config, str):
        config = json.dumps(config)
    return list(_impl.run_and_emit(config))
