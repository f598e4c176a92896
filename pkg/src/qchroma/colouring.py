"""The main pipeline: proper colourings of J_q(n, m, t) from MRD-code cosets.

Parameters fall into three regimes:

* direct (n >= 2m): identifying vectors are partitioned by a proper
  colouring of the Johnson graph power J(n, m, t); within one identifying
  vector, vertices are split by the coset of their non-pivot block in an
  MRD code of rank distance m - t + 1.  Same Johnson class with different
  identifying vectors forces intersection <= t - 1 through the Hamming
  weight of the Schur product; same identifying vector and same coset
  forces it through the code distance.  Palette: palette(Johnson) *
  q^((n-m)(m-t)) colour ids, packed as class * block + coset.
* dual (m < n < 2m, n - 2m + t >= 1): vertices are sent through the
  orthogonal-complement isomorphism onto J_q(n, n-m, n-2m+t) and coloured
  there (that graph is in the direct regime).
* complete (t <= 2m - n): any two m-subspaces of F_q^n already intersect
  in dimension >= 2m - n >= t, so the graph is complete and every vertex
  gets its own colour (the enumeration index).

`full_colouring` colours every vertex, reports exact integer bounds, and
(optionally but by default at desk scale) verifies properness pair by
pair before sealing the certificate.  Certificates serialize to a single
JSON document with all integers as decimal strings; byte-identical across
runs for equal inputs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .grassmann import (GrassmannParams, Subspace, decode_subspace, dualize,
                        degree_formula, encode_subspace, enumerate_subspaces,
                        enumeration_index)
from .johnson import JohnsonColouring, greedy_colouring, gs_colouring
from .matq import gaussian_binomial, intersection_dim
from .rankmetric import (GabidulinCode, coset_index, gabidulin_build,
                         min_rank_distance, unlift)

DEFAULT_VERTEX_CAP = 100_000
AUTO_VERIFY_LIMIT = 20_000
DISTANCE_VERIFY_LIMIT = 2 ** 20

DIRECT, DUAL, COMPLETE = "direct", "dual", "complete"


def regime_of(params: GrassmannParams) -> str:
    if params.n >= 2 * params.m:
        return DIRECT
    if params.n - 2 * params.m + params.t >= 1:
        return DUAL
    return COMPLETE


@dataclass
class ColourContext:
    """Everything needed to colour one graph's vertices deterministically."""

    params: GrassmannParams
    regime: str
    johnson: JohnsonColouring | None
    code: GabidulinCode | None
    class_of_idvec: dict[tuple[int, ...], int] | None
    coset_block: int
    distance_verified: bool
    inner: "ColourContext | None" = None

    @property
    def effective(self) -> "ColourContext":
        """The direct-regime context that actually assigns colours."""
        return self.inner if self.regime == DUAL else self


def make_context(params: GrassmannParams, johnson_method: str = "greedy") -> ColourContext:
    """Build the Johnson partition and MRD code for the active regime."""
    regime = regime_of(params)
    if regime == COMPLETE:
        return ColourContext(params, regime, None, None, None, 1, True)
    if regime == DUAL:
        dual_params = GrassmannParams(params.q, params.n,
                                      params.n - params.m,
                                      params.n - 2 * params.m + params.t)
        inner = make_context(dual_params, johnson_method)
        return ColourContext(params, regime, inner.johnson, inner.code,
                             inner.class_of_idvec, inner.coset_block,
                             inner.distance_verified, inner)
    q, n, m, t = params.q, params.n, params.m, params.t
    if johnson_method == "greedy":
        jc = greedy_colouring(n, m, t)
    elif johnson_method == "gs":
        jc = gs_colouring(n, m, t)
    else:
        raise ValueError(f"unknown johnson method {johnson_method!r}")
    # dense class ids, in ascending order of the raw colour values
    raw = sorted(set(jc.colours.values()))
    dense = {c: i for i, c in enumerate(raw)}
    class_of_idvec = {}
    for subset, c in jc.colours.items():
        idvec = tuple(1 if i + 1 in subset else 0 for i in range(n))
        class_of_idvec[idvec] = dense[c]
    code = gabidulin_build(q, m, n - m, m - t + 1)
    distance_verified = code.size <= DISTANCE_VERIFY_LIMIT
    if distance_verified and min_rank_distance(code) != code.d:
        raise AssertionError("constructed code misses its design distance")
    return ColourContext(params, regime, jc, code, class_of_idvec,
                         code.num_cosets, distance_verified)


def _direct_colour(ctx: ColourContext, S: Subspace) -> tuple[int, tuple[int, ...], int]:
    u, A = unlift(S)
    i = coset_index(ctx.code, A)
    return ctx.class_of_idvec[u] * ctx.coset_block + i, u, i


def colour_subspace(ctx: ColourContext, S: Subspace) -> int:
    """Colour id of one vertex; deterministic and context-pure."""
    p = ctx.params
    if S.q != p.q or S.n != p.n or S.m != p.m:
        raise ValueError("subspace does not belong to this graph")
    if ctx.regime == COMPLETE:
        return enumeration_index(S)
    if ctx.regime == DUAL:
        return colour_subspace(ctx.inner, dualize(S))
    return _direct_colour(ctx, S)[0]


@dataclass
class VerificationReport:
    proper: bool
    pairs_checked: int
    counterexample: tuple[str, str, int] | None
    coverage_ok: bool
    missing: tuple[str, ...]
    unexpected: tuple[str, ...]

    def message(self) -> str:
        if not self.coverage_ok:
            return (f"coverage error: {len(self.missing)} missing, "
                    f"{len(self.unexpected)} unexpected vertices")
        if self.proper:
            return f"proper colouring; {self.pairs_checked} vertex pairs checked"
        a, b, dim = self.counterexample
        return f"NOT proper: {a} and {b} share a colour but intersect in dim {dim}"


@dataclass
class ColourCertificate:
    """A full colour assignment plus bounds and verification status."""

    params: GrassmannParams
    regime: str
    johnson_method: str | None
    johnson_palette: int | None
    code_params: dict | None          # q, m, h, d, distance_verified
    colours: tuple[tuple[str, int], ...]  # (vertex key, colour), key-sorted
    palette_used: int
    bounds: dict                      # lower, theorem_upper, trivial_upper
    proper: bool | None
    pairs_checked: int
    family_sizes: dict[str, dict[int, int]]

    def colour_map(self) -> dict[str, int]:
        return dict(self.colours)


def bounds_report(params: GrassmannParams, johnson_method: str = "greedy",
                  johnson_palette: int | None = None) -> dict:
    """Exact integer bounds for chi(J_q(n, m, t)).

    lower: the larger of the two fixed-subspace clique counts (in the
    complete regime the whole vertex set is a clique, so the count itself).
    theorem_upper: Johnson palette times the coset count of the regime's
    code.  trivial_upper: vertex degree plus one.
    """
    q, n, m, t = params.q, params.n, params.m, params.t
    regime = regime_of(params)
    vertices = params.vertex_count()
    trivial_upper = degree_formula(params) + 1
    if regime == COMPLETE:
        return {"regime": regime, "vertices": vertices, "lower": vertices,
                "theorem_upper": vertices, "trivial_upper": trivial_upper,
                "johnson_palette": None}
    lower = max(gaussian_binomial(n - t, m - t, q),
                gaussian_binomial(2 * m - t, m - t, q))
    if regime == DIRECT:
        jn, jm, jt = n, m, t
        exponent = (n - m) * (m - t)
    else:
        jn, jm, jt = n, n - m, n - 2 * m + t
        exponent = m * (m - t)
    if johnson_palette is None:
        if johnson_method == "greedy":
            johnson_palette = greedy_colouring(jn, jm, jt).palette
        else:
            johnson_palette = gs_colouring(jn, jm, jt).palette
    return {"regime": regime, "vertices": vertices, "lower": lower,
            "theorem_upper": johnson_palette * q ** exponent,
            "trivial_upper": trivial_upper, "johnson_palette": johnson_palette}


def full_colouring(ctx: ColourContext, verify: bool | None = None,
                   vertex_cap: int = DEFAULT_VERTEX_CAP) -> ColourCertificate:
    """Colour every vertex; verify properness by default at desk scale."""
    params = ctx.params
    total = params.vertex_count()
    if total > vertex_cap:
        raise ValueError(f"vertex count {total} exceeds the cap {vertex_cap}")
    if verify is None:
        verify = total <= AUTO_VERIFY_LIMIT

    entries: list[tuple[str, int]] = []
    vertices: list[Subspace] = []
    colours: list[int] = []
    families: dict[str, dict[int, int]] = {}
    eff = ctx.effective
    for S in enumerate_subspaces(params.q, params.n, params.m):
        if ctx.regime == COMPLETE:
            c = enumeration_index(S)
        else:
            inner_S = dualize(S) if ctx.regime == DUAL else S
            c, u, i = _direct_colour(eff, inner_S)
            ukey = "".join(str(b) for b in u)
            fam = families.setdefault(ukey, {})
            fam[i] = fam.get(i, 0) + 1
        entries.append((encode_subspace(S), c))
        vertices.append(S)
        colours.append(c)

    proper: bool | None = None
    pairs_checked = 0
    if verify:
        proper, pairs_checked, cex = _check_pairs(vertices, colours, params.t)
        if not proper:
            raise AssertionError(f"construction produced an improper colouring: {cex}")

    palette_used = len(set(colours))
    bounds = bounds_report(params, ctx.johnson.method if ctx.johnson else "greedy",
                           ctx.johnson.palette if ctx.johnson else None)
    if palette_used > bounds["theorem_upper"]:
        raise AssertionError("palette exceeds the theorem bound")
    code_params = None
    if ctx.code is not None:
        code_params = {"q": ctx.code.q, "m": ctx.code.m, "h": ctx.code.h,
                       "d": ctx.code.d, "distance_verified": ctx.distance_verified}
    entries.sort(key=lambda e: e[0])
    return ColourCertificate(
        params=params, regime=ctx.regime,
        johnson_method=ctx.johnson.method if ctx.johnson else None,
        johnson_palette=ctx.johnson.palette if ctx.johnson else None,
        code_params=code_params, colours=tuple(entries),
        palette_used=palette_used,
        bounds={k: bounds[k] for k in ("lower", "theorem_upper", "trivial_upper")},
        proper=proper, pairs_checked=pairs_checked, family_sizes=families)


def _check_pairs(vertices: list[Subspace], colours: list[int], t: int
                 ) -> tuple[bool, int, tuple[str, str, int] | None]:
    """Walk all unordered pairs; intersection work only on colour clashes."""
    nv = len(vertices)
    pairs = 0
    for i in range(nv):
        ci = colours[i]
        bi = vertices[i].basis
        for j in range(i + 1, nv):
            pairs += 1
            if ci == colours[j]:
                dim = intersection_dim(bi, vertices[j].basis)
                if dim >= t:
                    return (False, pairs,
                            (encode_subspace(vertices[i]),
                             encode_subspace(vertices[j]), dim))
    return True, pairs, None


def verify_properness(cert: ColourCertificate) -> VerificationReport:
    """Re-check a certificate from scratch: coverage first, then all pairs."""
    params = cert.params
    expected = {encode_subspace(S) for S in
                enumerate_subspaces(params.q, params.n, params.m)}
    seen: dict[str, int] = {}
    invalid: list[str] = []
    vertices: list[Subspace] = []
    colours: list[int] = []
    for key, colour in cert.colours:
        try:
            S = decode_subspace(key)
            canon = encode_subspace(S)
        except ValueError:
            invalid.append(key)
            continue
        if canon != key or key in seen:
            invalid.append(key)
            continue
        seen[key] = colour
        vertices.append(S)
        colours.append(colour)
    missing = tuple(sorted(expected - set(seen)))
    unexpected = tuple(sorted((set(seen) - expected) | set(invalid)))
    if missing or unexpected:
        return VerificationReport(False, 0, None, False, missing, unexpected)
    ok, pairs, cex = _check_pairs(vertices, colours, params.t)
    return VerificationReport(ok, pairs, cex, True, (), ())


# -- certificate JSON ---------------------------------------------------------

def _stringify(value):
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    raise TypeError(f"unexpected certificate value {value!r}")


def certificate_to_json(cert: ColourCertificate) -> str:
    doc = {
        "params": {"q": str(cert.params.q), "n": str(cert.params.n),
                   "m": str(cert.params.m), "t": str(cert.params.t)},
        "regime": cert.regime,
        "johnson": (None if cert.johnson_method is None else
                    {"method": cert.johnson_method,
                     "palette": str(cert.johnson_palette)}),
        "code": (None if cert.code_params is None else
                 {k: _stringify(v) for k, v in cert.code_params.items()}),
        "colours": [{"vertex": k, "colour": str(c)} for k, c in cert.colours],
        "bounds": {k: str(v) for k, v in cert.bounds.items()},
        "verified": {"proper": cert.proper,
                     "pairs_checked": str(cert.pairs_checked)},
        "provenance": {
            "palette_used": str(cert.palette_used),
            "family_sizes": {u: {str(i): str(s) for i, s in sorted(fam.items())}
                             for u, fam in sorted(cert.family_sizes.items())},
        },
    }
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def certificate_from_json(text: str) -> ColourCertificate:
    doc = json.loads(text)
    try:
        p = doc["params"]
        params = GrassmannParams(int(p["q"]), int(p["n"]), int(p["m"]), int(p["t"]))
        johnson = doc.get("johnson")
        code = doc.get("code")
        colours = tuple(sorted((e["vertex"], int(e["colour"]))
                               for e in doc["colours"]))
        verified = doc.get("verified") or {}
        prov = doc.get("provenance") or {}
        fam = {u: {int(i): int(s) for i, s in d.items()}
               for u, d in (prov.get("family_sizes") or {}).items()}
        return ColourCertificate(
            params=params, regime=doc["regime"],
            johnson_method=johnson["method"] if johnson else None,
            johnson_palette=int(johnson["palette"]) if johnson else None,
            code_params=(None if code is None else {
                "q": int(code["q"]), "m": int(code["m"]), "h": int(code["h"]),
                "d": int(code["d"]),
                "distance_verified": bool(code["distance_verified"])}),
            colours=colours,
            palette_used=int(prov.get("palette_used", len({c for _, c in colours}))),
            bounds={k: int(v) for k, v in doc["bounds"].items()},
            proper=verified.get("proper"),
            pairs_checked=int(verified.get("pairs_checked", "0")),
            family_sizes=fam)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed certificate: {exc}") from exc


def save_certificate(cert: ColourCertificate, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(certificate_to_json(cert))


def load_certificate(path: str) -> ColourCertificate:
    with open(path) as fh:
        return certificate_from_json(fh.read())
