"""One-shot analysis of a density matrix, as emitted by ``blochmat analyze``."""

from .bloch import density_to_bloch, split
from .canonical import canonical_decompose, sphere_geometry
from .entanglement import is_entangled
from .positivity import POSITIVITY_TOL, positivity_lhs
from .unitary import bloch_invariants


def analyze(rho, tol=POSITIVITY_TOL):
    """Return ``(report_dict, physical)`` for a Hermitian unit-trace 4x4 matrix.

    The positivity section is always filled in; the entanglement section is
    ``None`` for unphysical input since the criterion only applies to states.
    """
    r = density_to_bloch(rho)
    c = split(r)
    form = canonical_decompose(c)
    positivity = positivity_lhs(c, tol)
    first, second = sphere_geometry(c, form)
    report = {
        "bloch_matrix": r.tolist(),
        "components": {"u": c.u.tolist(), "v": c.v.tolist(), "R": c.R.tolist()},
        "canonical": form.to_dict(),
        "positivity": positivity.to_dict(),
        "invariants": dict(zip(("B1", "B2", "B3"), bloch_invariants(c).as_tuple())),
        "entanglement": is_entangled(c, tol).to_dict() if positivity.is_positive else None,
        "spheres": [first.to_dict(), second.to_dict()],
    }
    return report, positivity.is_positive
