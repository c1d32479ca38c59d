#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "monogroup/corpus.hpp"
#include "monogroup/group.hpp"
#include "monogroup/reduce.hpp"
#include "monogroup/subspace.hpp"

namespace mono::io {

using Json = nlohmann::ordered_json;

// CycNum <-> JSON. Emitted as an array of "num/den" strings, coefficient of
// zeta_m^i at index i. Accepted inputs: that array form, {"root": k,
// "order": m}, a bare integer, or a "num/den" string (rational value).
Json cyc_to_json(const CycNum& z);
CycNum cyc_from_json(const Json& j);

// Matrix file schema:
//   {"n": int, "order": m, "kind": "monomial", "perm": [...], "exps": [...]}
//   {"n": int, "kind": "dense", "entries": [[cyc, ...], ...]}
// perm is 0-based: column j has its nonzero entry in row perm[j].
Json monomial_to_json(const MonomialMatrix& x);
Json dense_to_json(const DenseMatrix& x);
MonomialMatrix monomial_from_json(const Json& j);
DenseMatrix dense_matrix_from_json(const Json& j);

using AnyMatrix = std::variant<MonomialMatrix, DenseMatrix>;
AnyMatrix matrix_from_json(const Json& j);
DenseMatrix any_to_dense(const AnyMatrix& m);

// A generators file is either a single matrix object, a JSON array of
// matrix objects, or {"generators": [...]}.
std::vector<AnyMatrix> generators_from_json(const Json& j);
std::vector<AnyMatrix> load_generators(const std::string& path);

Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j);

Json invariants_to_json(const InvariantsReport& r);
Json decomposition_to_json(const DecompositionReport& r);
Json theorem_report_to_json(const TheoremReport& r);
Json sweep_to_json(const SweepResult& r);

// Versioned report envelope. The payload is deterministic; wall-clock and
// environment data live only in meta.
Json wrap_report(const std::string& command, Json payload, Json meta = Json::object());

}  // namespace mono::io
