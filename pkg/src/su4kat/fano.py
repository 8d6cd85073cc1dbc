"""The tensor-product basis of su(4) and its structure constants.

The 15 basis matrices are lambda_i = sigma_mu (x) sigma_nu / (2i), ordered
sigma_10, sigma_20, sigma_30, sigma_01, ..., sigma_33.  They are
anti-Hermitian, traceless, and orthonormal in the sense
Tr(lambda_i lambda_j) = -delta_ij.

Five index subsets split the basis into the chart's building blocks:

    A_SET      {1, 4, 7}     first abelian block   (alpha coordinates)
    AP_SET     {9, 11, 13}   second abelian block  (beta coordinates)
    K_U_SET    {2, 8, 14}    one su(2) of the k block  (u coordinates)
    K_V_SET    {5, 10, 12}   other su(2) of the k block (v coordinates)
    T_SET      {3, 6, 15}    diagonal torus block  (theta coordinates)

The reference tables for the commutator and symmetric constants ship as
JSON data files so the tests are table-driven; see data/ and the notes
embedded in those files about how the printed source tables map onto
commutator facts.
"""

import json
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from su4kat.linalg import as_complex_matrix, frob

INTEGRALITY_TOL = 1e-12
PROJECT_TOL = 1e-10

A_SET = (1, 4, 7)
AP_SET = (9, 11, 13)
K_U_SET = (2, 8, 14)
K_V_SET = (5, 10, 12)
T_SET = (3, 6, 15)
K_SET = K_U_SET + K_V_SET

SUBSETS = {"a": A_SET, "a_prime": AP_SET, "k_u": K_U_SET, "k_v": K_V_SET, "t": T_SET}

_PAULI = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

# (mu, nu) pairs in basis order: sigma_10 ... sigma_33.
_ORDER = (
    (1, 0), (2, 0), (3, 0),
    (0, 1), (0, 2), (0, 3),
    (1, 1), (1, 2), (1, 3),
    (2, 1), (2, 2), (2, 3),
    (3, 1), (3, 2), (3, 3),
)


class NonIntegralError(ValueError):
    """A structure constant came out non-integral: the basis is broken."""


class NotInAlgebraError(ValueError):
    """The matrix is not (close to) a real combination of the basis."""


def _build_basis():
    mats = np.empty((15, 4, 4), dtype=complex)
    for idx, (mu, nu) in enumerate(_ORDER):
        mats[idx] = np.kron(_PAULI[mu], _PAULI[nu]) / 2j
    mats.setflags(write=False)
    return mats

_LAMBDA = _build_basis()

# Normalized identity: with lambda_0 = I/(2i) the closed-form expansion
# coefficients of the abelian factors come out exactly as the trig forms
# used in chart.a1_coefficients.
LAMBDA0 = np.eye(4, dtype=complex) / 2j
LAMBDA0.setflags(write=False)


def lambda_basis():
    """The full (15, 4, 4) stack, 0-indexed (entry i-1 is lambda_i)."""
    return _LAMBDA


def fano_lambda(i):
    """Basis matrix lambda_i for 1 <= i <= 15."""
    if not 1 <= i <= 15:
        raise IndexError(f"lambda index must be in 1..15, got {i}")
    return _LAMBDA[i - 1]


@dataclass(frozen=True)
class StructureConstants:
    """Antisymmetric (f) and symmetric (d) constants, 0-indexed dense arrays.

    f[i, j, k] is the coefficient of lambda_{k+1} in [lambda_{i+1}, lambda_{j+1}];
    d[i, j, k] is -i Tr({lambda_{i+1}, lambda_{j+1}} lambda_{k+1}).  Both take
    values in {-1, 0, +1}.  With this d-convention the product expansion reads

        lambda_i lambda_j = -1/4 delta_ij I + 1/2 (f_ij^k - i d_ij^k) lambda_k.
    """

    f: np.ndarray = field(repr=False)
    d: np.ndarray = field(repr=False)


def structure_constants():
    """Compute f and d from the basis matrices and round to exact integers.

    Raises NonIntegralError if any constant deviates from an integer by
    more than 1e-12, which would signal a broken basis construction.
    """
    lam = _LAMBDA
    # comm[i, j] = [lambda_i, lambda_j], acomm likewise for the anticommutator.
    prod = np.einsum("iab,jbc->ijac", lam, lam)
    comm = prod - prod.transpose(1, 0, 2, 3)
    acomm = prod + prod.transpose(1, 0, 2, 3)
    # Orthonormality Tr(lambda_k lambda_l) = -delta_kl turns the expansions
    # into traces against the basis.
    f_raw = -np.einsum("ijab,kba->ijk", comm, lam)
    d_raw = -1j * np.einsum("ijab,kba->ijk", acomm, lam)
    out = []
    for name, raw in (("f", f_raw), ("d", d_raw)):
        if np.max(np.abs(raw.imag)) > INTEGRALITY_TOL:
            raise NonIntegralError(f"{name} has imaginary part; basis is broken")
        vals = raw.real
        rounded = np.round(vals)
        if np.max(np.abs(vals - rounded)) > INTEGRALITY_TOL:
            raise NonIntegralError(f"{name} deviates from integers; basis is broken")
        if not np.all(np.isin(rounded, (-1.0, 0.0, 1.0))):
            raise NonIntegralError(f"{name} has values outside {{-1, 0, 1}}")
        rounded.setflags(write=False)
        out.append(rounded)
    return StructureConstants(f=out[0], d=out[1])


def _load_table(name):
    with resources.files("su4kat.data").joinpath(name).open("r") as fh:
        return json.load(fh)


def load_table1():
    """Commutator table entries: [lambda_i, lambda_j] = sign * lambda_k."""
    return _load_table("table1_commutators.json")


def load_table2():
    """Nonzero symmetric constants, one representative triple per orbit."""
    return _load_table("table2_dsym.json")


def verify_table1(sc=None):
    """Compare computed f against the encoded commutator table.

    Returns a list of mismatch records (empty on success).  Entries the
    data file flags as typographically ambiguous in the source are checked
    like any other but carry their flag through to the mismatch record, so
    callers can report rather than fail them.
    """
    if sc is None:
        sc = structure_constants()
    table = load_table1()
    mismatches = []
    listed = {}
    for entry in table["entries"]:
        i, j, k, sign = entry["i"], entry["j"], entry["k"], entry["sign"]
        listed[(i, j)] = (k, sign)
        row = sc.f[i - 1, j - 1]
        expected = np.zeros(15)
        expected[k - 1] = sign
        if not np.array_equal(row, expected):
            got = {kk + 1: int(v) for kk, v in enumerate(row) if v != 0}
            mismatches.append(
                {
                    "i": i,
                    "j": j,
                    "table": {k: sign},
                    "computed": got,
                    "flagged": bool(entry.get("flagged")),
                }
            )
    # Cells absent from the table must be zero commutators.
    for i in range(1, 16):
        for j in range(1, 16):
            if i == j or (i, j) in listed:
                continue
            row = sc.f[i - 1, j - 1]
            if np.any(row != 0):
                got = {kk + 1: int(v) for kk, v in enumerate(row) if v != 0}
                mismatches.append(
                    {"i": i, "j": j, "table": {}, "computed": got, "flagged": False}
                )
    return mismatches


def verify_table2(sc=None):
    """Check the nonzero set of d equals the encoded table up to symmetry.

    d is fully symmetric, so the table's sorted triples are compared with
    the computed nonzero support reduced to sorted triples.  Returns a list
    of mismatch records (empty on success).
    """
    if sc is None:
        sc = structure_constants()
    table = load_table2()
    expected = {}
    for entry in table["entries"]:
        key = tuple(sorted((entry["i"], entry["j"], entry["k"])))
        expected[key] = entry["value"]
    computed = {}
    nz = np.argwhere(sc.d != 0)
    for i, j, k in nz:
        key = tuple(sorted((int(i) + 1, int(j) + 1, int(k) + 1)))
        val = int(sc.d[i, j, k])
        prev = computed.get(key)
        if prev is not None and prev != val:
            return [{"triple": key, "error": "inconsistent symmetric values"}]
        computed[key] = val
    mismatches = []
    for key in sorted(set(expected) | set(computed)):
        if expected.get(key) != computed.get(key):
            mismatches.append(
                {"triple": key, "table": expected.get(key), "computed": computed.get(key)}
            )
    return mismatches


@dataclass(frozen=True)
class InclusionReport:
    """Outcome of the subalgebra / bracket-inclusion scan."""

    checks: tuple
    violations: tuple

    @property
    def ok(self):
        return not self.violations


# (name, left subset, right subset, allowed target subset); empty target
# means the bracket must vanish.
_INCLUSIONS = (
    ("[a, a] = 0", A_SET, A_SET, ()),
    ("[a', a'] = 0", AP_SET, AP_SET, ()),
    ("[t, t] = 0", T_SET, T_SET, ()),
    ("[a', a] in k", AP_SET, A_SET, K_SET),
    ("[k, k] in k", K_SET, K_SET, K_SET),
    ("[t, a] in k", T_SET, A_SET, K_SET),
    ("[t, a'] in k", T_SET, AP_SET, K_SET),
    ("[k, t] in a + a'", K_SET, T_SET, A_SET + AP_SET),
)


def verify_proposition1(sc=None):
    """Exhaustively scan brackets for the direct-sum inclusion relations.

    Checks, over every index pair, that the three abelian blocks commute
    internally, that brackets between the abelian blocks and the torus land
    in k, that k closes, and that [k, t] lands in the two abelian blocks.
    """
    if sc is None:
        sc = structure_constants()
    checks = []
    violations = []
    for name, left, right, target in _INCLUSIONS:
        bad = []
        for i in left:
            for j in right:
                support = np.nonzero(sc.f[i - 1, j - 1])[0] + 1
                for k in support:
                    if int(k) not in target:
                        bad.append((i, j, int(k)))
        checks.append((name, not bad))
        violations.extend(bad)
    return InclusionReport(checks=tuple(checks), violations=tuple(violations))


def element_matrix(coeffs):
    """Matrix form sum_i c_i lambda_i of a coefficient vector."""
    c = np.asarray(coeffs, dtype=float)
    if c.shape != (15,):
        raise ValueError(f"expected 15 coefficients, got shape {c.shape}")
    return np.einsum("i,iab->ab", c, _LAMBDA)


def project(x, tol=PROJECT_TOL):
    """Expand an anti-Hermitian traceless matrix over the basis.

    Returns the 15 real coefficients c with sum c_i lambda_i = x.  Raises
    NotInAlgebraError when the reconstruction misses x by more than tol
    (x was not anti-Hermitian traceless, or not in the span).
    """
    x = as_complex_matrix(x, dim=4)
    coeffs = -np.einsum("ab,iba->i", x, _LAMBDA).real
    defect = frob(element_matrix(coeffs) - x)
    if defect > tol:
        raise NotInAlgebraError(
            f"projection residual {defect:.3e} > {tol:.1e}; "
            "matrix is not in the algebra's span"
        )
    return coeffs
