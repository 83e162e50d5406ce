#pragma once

#include <json.hpp>
#include <string>

#include "kanform/cyclelift.hpp"
#include "kanform/moduli.hpp"

namespace kanform {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json read_json(const std::string& path);
/// Writes through a temporary file and renames it into place.
void write_json(const std::string& path, const json& j);

/// Builds K from a complex description:
///   {"kind": "surface", "genus": l}
///   {"kind": "threefold", "generators": [...], "relators": [{"name", "word"}],
///    "sigma": name, "sigma_faces": [w0, w1, w2]}   (or "minimal_s3": true)
///   {"kind": "one_relator", "generators": [...], "relator": word}
///   {"kind": "simplicial_set", "simplices": [[...], ...], "faces": {...}}
///   {"kind": "free", "generators": [{"name", "degree", "faces"}]}
/// A serialized kan.json (kind plus a generator list) is read back as "free"
/// with its kind preserved.  Optional "max_degree".
FreeSimplicialGroup group_from_json(const json& j);
json group_to_json(const FreeSimplicialGroup& k);

json chain_to_json(const Chain& c);
Chain chain_from_json(const json& j);

json certificate_to_json(const LiftCertificate& c);
json cycle_to_json(const FreeSimplicialGroup& k, const CycleResult& r);

/// "basic", "trace:<scale>", "chern:<r>".
InvariantPolynomial polynomial_from_string(const std::string& s);

/// Accepts the short form or a JSON descriptor:
///   {"kind": "trace_form", "normalization": "basic"} or {"kind": "trace_form", "scale": s}
///   {"kind": "chern", "r": k}
InvariantPolynomial polynomial_from_descriptor(const std::string& text);
/// "SU2" or {"family": "SU", "n": 2}.
MatrixGroup group_from_descriptor(const std::string& text);

/// Plot descriptor:
///   {"family": "s3_sweep", "degree": d}
///   {"family": "constant", "domain": {"kind", "dim", "bounds": [[lo, hi], ...]}}
/// or the per-degree form {"domain": ..., "degrees": {"2": "s3_sweep"},
/// "params": {...}, "equivariant": true}.
struct PlotSpec {
  Plot plot;
  ParamField field;  // conjugation field on W, empty when not equivariant
  std::string family;
  json descriptor;
};
PlotSpec plot_from_json(const json& j, const FreeSimplicialGroup& k, const MatrixGroup& g);

/// {"base": [...], "direction": [...], "points": n, "closed": bool}
LoopSpec loop_from_json(const json& j);

json matrix_to_json(const Mat& m);

}  // namespace kanform
