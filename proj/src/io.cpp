#include "monogroup/io.hpp"

#include <fstream>

#include "monogroup/errors.hpp"

namespace mono::io {

namespace {

std::string rat_str(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rat_parse(const std::string& s) {
  try {
    Rational r(s);
    r.canonicalize();
    return r;
  } catch (const std::exception&) {
    throw InputError("bad rational literal: " + s);
  }
}

}  // namespace

Json cyc_to_json(const CycNum& z) {
  Json arr = Json::array();
  for (const auto& c : z.coeffs()) arr.push_back(rat_str(c));
  return arr;
}

CycNum cyc_from_json(const Json& j) {
  if (j.is_number_integer()) return CycNum(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return CycNum(rat_parse(j.get<std::string>()));
  if (j.is_object()) {
    if (!j.contains("root") || !j.contains("order"))
      throw InputError("cyclotomic object form needs \"root\" and \"order\"");
    return CycNum::root_of_unity(j.at("root").get<long>(), j.at("order").get<long>());
  }
  if (j.is_array()) {
    if (j.empty()) throw InputError("empty coefficient array");
    std::vector<Rational> coeffs;
    for (const auto& e : j) {
      if (e.is_number_integer())
        coeffs.emplace_back(static_cast<long>(e.get<long long>()));
      else if (e.is_string())
        coeffs.push_back(rat_parse(e.get<std::string>()));
      else
        throw InputError("coefficient entries must be integers or \"num/den\" strings");
    }
    const long m = static_cast<long>(coeffs.size());
    return CycNum::from_coeffs(m, std::move(coeffs));
  }
  throw InputError("unrecognized cyclotomic value");
}

Json monomial_to_json(const MonomialMatrix& x) {
  Json j;
  j["n"] = x.n;
  j["order"] = x.m;
  j["kind"] = "monomial";
  j["perm"] = x.perm;
  j["exps"] = x.exps;
  return j;
}

Json dense_to_json(const DenseMatrix& x) {
  Json j;
  j["n"] = x.rows();
  j["kind"] = "dense";
  Json rows = Json::array();
  for (int i = 0; i < x.rows(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < x.cols(); ++c) row.push_back(cyc_to_json(x.at(i, c)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

MonomialMatrix monomial_from_json(const Json& j) {
  MonomialMatrix x;
  x.n = j.at("n").get<int>();
  x.m = j.at("order").get<long>();
  if (x.n < 1 || x.m < 1) throw InputError("matrix dimensions must be positive");
  x.perm = j.at("perm").get<std::vector<int>>();
  x.exps = j.at("exps").get<std::vector<long>>();
  if (static_cast<int>(x.perm.size()) != x.n || static_cast<int>(x.exps.size()) != x.n)
    throw InputError("perm and exps must have length n");
  std::vector<bool> seen(x.n, false);
  for (int v : x.perm) {
    if (v < 0 || v >= x.n || seen[v]) throw InputError("perm must be a 0-based permutation");
    seen[v] = true;
  }
  for (auto& e : x.exps) {
    e %= x.m;
    if (e < 0) e += x.m;
  }
  return x;
}

DenseMatrix dense_matrix_from_json(const Json& j) {
  const auto& rows = j.at("entries");
  if (!rows.is_array() || rows.empty()) throw InputError("dense matrix needs entries");
  int n = static_cast<int>(rows.size());
  int cols = static_cast<int>(rows.front().size());
  DenseMatrix m(n, cols);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      throw InputError("ragged dense matrix");
    for (int c = 0; c < cols; ++c) m.at(i, c) = cyc_from_json(rows[i][c]);
  }
  if (j.contains("n") && j.at("n").get<int>() != n)
    throw InputError("declared n disagrees with the entry grid");
  return m;
}

AnyMatrix matrix_from_json(const Json& j) {
  std::string kind = j.value("kind", j.contains("entries") ? "dense" : "monomial");
  if (kind == "monomial") return monomial_from_json(j);
  if (kind == "dense") return dense_matrix_from_json(j);
  throw InputError("matrix kind must be \"monomial\" or \"dense\"");
}

DenseMatrix any_to_dense(const AnyMatrix& m) {
  if (std::holds_alternative<MonomialMatrix>(m))
    return mono_dense(std::get<MonomialMatrix>(m));
  return std::get<DenseMatrix>(m);
}

std::vector<AnyMatrix> generators_from_json(const Json& j) {
  std::vector<AnyMatrix> out;
  if (j.is_array()) {
    for (const auto& e : j) out.push_back(matrix_from_json(e));
  } else if (j.is_object() && j.contains("generators")) {
    for (const auto& e : j.at("generators")) out.push_back(matrix_from_json(e));
  } else if (j.is_object()) {
    out.push_back(matrix_from_json(j));
  } else {
    throw InputError("generators input must be a matrix, an array, or {\"generators\": [...]}");
  }
  if (out.empty()) throw InputError("no generators given");
  return out;
}

std::vector<AnyMatrix> load_generators(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InputError(std::string("JSON parse error: ") + e.what());
  }
  return generators_from_json(j);
}

Json subspace_to_json(const Subspace& s) {
  Json j;
  j["n"] = s.ambient_dim();
  j["dim"] = s.dim();
  Json basis = Json::array();
  for (const auto& row : s.basis()) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(cyc_to_json(c));
    basis.push_back(std::move(r));
  }
  j["basis"] = std::move(basis);
  return j;
}

Subspace subspace_from_json(const Json& j) {
  int n = j.at("n").get<int>();
  std::vector<std::vector<CycNum>> rows;
  for (const auto& r : j.at("basis")) {
    std::vector<CycNum> row;
    for (const auto& c : r) row.push_back(cyc_from_json(c));
    rows.push_back(std::move(row));
  }
  return Subspace::from_vectors(n, std::move(rows));
}

Json invariants_to_json(const InvariantsReport& r) {
  Json j;
  j["order"] = r.order;
  j["abelian"] = r.abelian;
  j["rho_defined"] = r.rho_defined;
  if (r.rho_defined) {
    j["rho"] = r.rho;
    j["rho_witness"] = monomial_to_json(*r.rho_witness);
  } else {
    j["rho"] = nullptr;
    j["rho_witness"] = nullptr;
  }
  j["r"] = r.r;
  if (r.r_witness) {
    j["r_witness"] = Json::array({monomial_to_json(r.r_witness->first),
                                  monomial_to_json(r.r_witness->second)});
  } else {
    j["r_witness"] = nullptr;
  }
  j["rank_one_commutator_seen"] = r.rank_one_commutator_seen;
  return j;
}

Json decomposition_to_json(const DecompositionReport& r) {
  Json j;
  j["max_comm_rank"] = r.max_comm_rank;
  j["found"] = r.found;
  j["strategy_gap"] = r.strategy_gap;
  if (r.found) {
    j["m"] = subspace_to_json(r.m);
    j["dim_m"] = r.m.dim();
  } else {
    j["m"] = nullptr;
    j["dim_m"] = nullptr;
  }
  j["blocks_verified"] = r.blocks_verified;
  j["complement_abelian"] = r.complement_abelian;
  j["component_dims"] = r.component_dims;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

Json theorem_report_to_json(const TheoremReport& r) {
  Json j;
  j["id"] = r.id;
  j["instance"] = r.instance;
  j["pass"] = r.pass;
  j["vacuous"] = r.vacuous;
  j["capped"] = r.capped;
  j["failures"] = r.failures;
  j["findings"] = r.findings;
  j["notes"] = r.notes;
  return j;
}

Json sweep_to_json(const SweepResult& r) {
  Json j;
  j["instances"] = r.instances;
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["vacuous"] = r.vacuous;
  j["capped_instances"] = r.capped_instances;
  j["all_pass"] = r.all_pass;
  Json reports = Json::array();
  for (const auto& rep : r.reports) {
    // Keep the serialized sweep compact: list only reports that failed or
    // carry findings; passing reports are represented by the counters.
    if (!rep.pass || !rep.findings.empty()) reports.push_back(theorem_report_to_json(rep));
  }
  j["reports"] = std::move(reports);
  return j;
}

Json wrap_report(const std::string& command, Json payload, Json meta) {
  Json j;
  j["schema"] = "report-v1";
  j["command"] = command;
  j["payload"] = std::move(payload);
  j["meta"] = std::move(meta);
  return j;
}

}  // namespace mono::io
