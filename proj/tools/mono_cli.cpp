#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monogroup/corpus.hpp"
#include "monogroup/errors.hpp"
#include "monogroup/io.hpp"

namespace {

using mono::io::Json;

struct Common {
  std::string format = "text";
  std::string out;
  size_t cap = mono::kDefaultCap;
  int threads = 1;
};

void add_common(CLI::App* cmd, Common* c) {
  cmd->add_option("--format", c->format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", c->out, "Write the report to this file instead of stdout");
  cmd->add_option("--cap", c->cap, "Element cap for enumerations")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--threads", c->threads, "Worker threads for pair scans and sweeps")
      ->check(CLI::PositiveNumber);
}

void apply_env_cap(Common* c, bool cap_given) {
  if (cap_given) return;
  if (const char* env = std::getenv("MONO_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw mono::InputError("MONO_CAP must be a positive integer");
    c->cap = static_cast<size_t>(v);
  }
}

void emit(const Common& c, const Json& report, const std::string& text) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!c.out.empty()) {
    file.open(c.out);
    if (!file) throw mono::InputError("cannot open output file: " + c.out);
    os = &file;
  }
  if (c.format == "json")
    *os << report.dump(2) << "\n";
  else
    *os << text;
}

Json make_meta(std::chrono::steady_clock::time_point start) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  Json meta;
  meta["runtime_ms"] = ms;
  return meta;
}

std::vector<long> parse_a(const std::string& csv) {
  std::vector<long> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t pos = 0;
      long v = std::stol(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw mono::InputError("bad exponent list entry: " + tok);
    }
  }
  if (out.empty()) throw mono::InputError("empty exponent list");
  return out;
}

std::string mono_brief(const mono::MonomialMatrix& x) {
  std::ostringstream os;
  os << "perm=[";
  for (size_t i = 0; i < x.perm.size(); ++i) os << (i ? "," : "") << x.perm[i];
  os << "] exps=[";
  for (size_t i = 0; i < x.exps.size(); ++i) os << (i ? "," : "") << x.exps[i];
  os << "] order=" << x.m;
  return os.str();
}

int run_gpqa(const Common& c, int p, long q, const std::string& a_csv) {
  auto start = std::chrono::steady_clock::now();
  std::vector<long> a = parse_a(a_csv);
  mono::GpqaAnalysis an = mono::analyze_gpqa(p, q, a, c.cap);
  if (an.capped)
    throw mono::CapExceeded("group order " + std::to_string(an.group_order) +
                            " exceeds cap " + std::to_string(c.cap));
  Json payload;
  payload["p"] = p;
  payload["q"] = q;
  payload["a"] = a;
  payload["order"] = an.group_order;
  payload["diagonal_order"] = an.diag_order;
  payload["commutator_order"] = an.comm_order;
  payload["rho"] = an.rho;
  payload["r"] = an.r;
  payload["rank_one_commutator_seen"] = an.rank_one_seen;
  payload["rho_witness"] =
      mono::io::monomial_to_json(mono::monomial_from_exponents(q, an.rho_witness, 0));
  payload["r_witness"] = Json::array(
      {mono::io::monomial_to_json(mono::monomial_from_exponents(q, an.r_d1, an.r_shift1)),
       mono::io::monomial_to_json(mono::monomial_from_exponents(q, an.r_d2, an.r_shift2))});
  std::ostringstream text;
  text << "G(" << p << "," << q << ",A)\n"
       << "  order        " << an.group_order << "\n"
       << "  |D|          " << an.diag_order << "\n"
       << "  |C|          " << an.comm_order << "\n"
       << "  rho          " << an.rho << "\n"
       << "  r            " << an.r << "\n"
       << "  rho witness  "
       << mono_brief(mono::monomial_from_exponents(q, an.rho_witness, 0)) << "\n"
       << "  r witness X  "
       << mono_brief(mono::monomial_from_exponents(q, an.r_d1, an.r_shift1)) << "\n"
       << "  r witness Y  "
       << mono_brief(mono::monomial_from_exponents(q, an.r_d2, an.r_shift2)) << "\n";
  emit(c, mono::io::wrap_report("gpqa", payload, make_meta(start)), text.str());
  return 0;
}

// True when every generator in the file is monomial.
bool all_monomial(const std::vector<mono::io::AnyMatrix>& gens) {
  for (const auto& g : gens)
    if (!std::holds_alternative<mono::MonomialMatrix>(g)) return false;
  return true;
}

std::vector<mono::DenseMatrix> to_dense(const std::vector<mono::io::AnyMatrix>& gens) {
  std::vector<mono::DenseMatrix> out;
  for (const auto& g : gens) out.push_back(mono::io::any_to_dense(g));
  return out;
}

int run_invariants(const Common& c, const std::string& path) {
  auto start = std::chrono::steady_clock::now();
  auto gens = mono::io::load_generators(path);
  Json payload;
  std::ostringstream text;
  if (all_monomial(gens)) {
    std::vector<mono::MonomialMatrix> mg;
    for (const auto& g : gens) mg.push_back(std::get<mono::MonomialMatrix>(g));
    mono::GroupSet group = mono::closure(mg, c.cap);
    mono::InvariantsReport rep = mono::compute_invariants(group, c.threads);
    payload = mono::io::invariants_to_json(rep);
    text << "order                " << rep.order << "\n"
         << "abelian              " << (rep.abelian ? "true" : "false") << "\n"
         << "rho                  "
         << (rep.rho_defined ? std::to_string(rep.rho) : std::string("undefined")) << "\n"
         << "r                    " << rep.r << "\n"
         << "rank-1 commutator    " << (rep.rank_one_commutator_seen ? "yes" : "no")
         << "\n";
  } else {
    mono::DenseGroup group = mono::dense_closure(to_dense(gens), c.cap);
    mono::DenseScanResult scan = mono::dense_commutator_scan(group.elements, c.threads);
    payload["order"] = group.elements.size();
    payload["abelian"] = scan.max_rank == 0;
    payload["rho"] = nullptr;  // diagonal structure is a monomial notion
    payload["r"] = scan.max_rank;
    payload["rank_one_commutator_seen"] = scan.rank_one_seen;
    text << "order                " << group.elements.size() << "\n"
         << "abelian              " << (scan.max_rank == 0 ? "true" : "false") << "\n"
         << "r                    " << scan.max_rank << "\n"
         << "rank-1 commutator    " << (scan.rank_one_seen ? "yes" : "no") << "\n";
  }
  emit(c, mono::io::wrap_report("invariants", payload, make_meta(start)), text.str());
  return 0;
}

int run_burnside(const Common& c, const std::string& path) {
  auto start = std::chrono::steady_clock::now();
  auto gens = to_dense(mono::io::load_generators(path));
  bool irr = mono::is_irreducible(gens);
  int n = gens.front().rows();
  int dim = mono::algebra_span(gens, true).dim();
  Json payload;
  payload["n"] = n;
  payload["algebra_dim"] = dim;
  payload["irreducible"] = irr;
  std::ostringstream text;
  text << "n            " << n << "\n"
       << "algebra dim  " << dim << " of " << n * n << "\n"
       << "irreducible: " << (irr ? "true" : "false") << "\n";
  emit(c, mono::io::wrap_report("burnside", payload, make_meta(start)), text.str());
  return 0;
}

int run_decompose(const Common& c, const std::string& path) {
  auto start = std::chrono::steady_clock::now();
  auto gens = to_dense(mono::io::load_generators(path));
  mono::DenseGroup group = mono::dense_closure(gens, c.cap);
  mono::DecompositionReport rep = mono::decompose_rank2_group(group.elements, c.threads);
  Json payload = mono::io::decomposition_to_json(rep);
  std::ostringstream text;
  text << "group order          " << group.elements.size() << "\n"
       << "max commutator rank  " << rep.max_comm_rank << "\n"
       << "found M              " << (rep.found ? "yes" : "no") << "\n";
  if (rep.found) {
    text << "dim M                " << rep.m.dim() << "\n"
         << "blocks verified      " << (rep.blocks_verified ? "yes" : "no") << "\n"
         << "complement abelian   " << (rep.complement_abelian ? "yes" : "no") << "\n";
  }
  if (!rep.detail.empty()) text << "detail               " << rep.detail << "\n";
  emit(c, mono::io::wrap_report("decompose", payload, make_meta(start)), text.str());
  return rep.found ? 0 : 1;
}

int run_stabilizer(const Common& c, const std::string& path, const std::string& sub_path) {
  auto start = std::chrono::steady_clock::now();
  auto gens = mono::io::load_generators(path);
  if (!all_monomial(gens))
    throw mono::InputError("stabilizer requires monomial generators");
  std::vector<mono::MonomialMatrix> mg;
  for (const auto& g : gens) mg.push_back(std::get<mono::MonomialMatrix>(g));
  mono::GroupSet group = mono::closure(mg, c.cap);

  std::ifstream in(sub_path);
  if (!in) throw mono::InputError("cannot open file: " + sub_path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw mono::InputError(std::string("JSON parse error: ") + e.what());
  }
  mono::Subspace m = mono::io::subspace_from_json(j);

  mono::StabilizerDichotomyReport rep = mono::check_stabilizer_dichotomy(group, m);
  Json payload;
  payload["group_order"] = group.order();
  payload["dim_m"] = m.dim();
  payload["stabilizer_order"] = rep.stabilizer_order;
  payload["m_restriction_abelian"] = rep.m_restriction_abelian;
  payload["perp_restriction_abelian"] = rep.perp_restriction_abelian;
  payload["dichotomy_holds"] = rep.holds;
  std::ostringstream text;
  text << "group order               " << group.order() << "\n"
       << "dim M                     " << m.dim() << "\n"
       << "stabilizer order          " << rep.stabilizer_order << "\n"
       << "M restriction abelian     " << (rep.m_restriction_abelian ? "yes" : "no") << "\n"
       << "perp restriction abelian  " << (rep.perp_restriction_abelian ? "yes" : "no")
       << "\n"
       << "dichotomy holds           " << (rep.holds ? "yes" : "no") << "\n";
  emit(c, mono::io::wrap_report("stabilizer", payload, make_meta(start)), text.str());
  return rep.holds ? 0 : 1;
}

int run_verify_paper(const Common& c, const std::string& case_filter, int p_max,
                     long q_max) {
  auto start = std::chrono::steady_clock::now();
  auto wants = [&](const std::string& id) {
    return case_filter == "all" || case_filter == id;
  };
  std::vector<mono::TheoremReport> reports;
  if (wants("1.4")) reports.push_back(mono::verify_example_1_4(4, c.threads));
  if (wants("2.4")) reports.push_back(mono::verify_prop_2_4());
  if (wants("2.5")) reports.push_back(mono::verify_lemma_2_5());
  if (wants("2.6")) reports.push_back(mono::verify_lemma_2_6());
  if (wants("2.7")) reports.push_back(mono::verify_thm_2_7(c.threads));
  if (wants("2.8")) reports.push_back(mono::verify_prop_2_8());

  std::vector<std::string> sweep_cases;
  for (const std::string& id : {"2.2", "3.1", "3.2", "3.3", "3.4", "3.5"})
    if (wants(id)) sweep_cases.push_back(id);
  mono::SweepResult sw;
  if (!sweep_cases.empty()) sw = mono::sweep(p_max, q_max, sweep_cases, c.cap, c.threads);

  bool all_pass = sw.all_pass;
  for (const auto& r : reports) all_pass = all_pass && r.pass;

  Json payload;
  payload["case"] = case_filter;
  payload["p_max"] = p_max;
  payload["q_max"] = q_max;
  Json named = Json::array();
  for (const auto& r : reports) named.push_back(mono::io::theorem_report_to_json(r));
  payload["named_reports"] = std::move(named);
  payload["sweep"] = sweep_cases.empty() ? Json(nullptr) : mono::io::sweep_to_json(sw);
  payload["all_pass"] = all_pass;

  std::ostringstream text;
  for (const auto& r : reports) {
    text << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.instance << "\n";
    for (const auto& f : r.failures) text << "      failure: " << f << "\n";
    for (const auto& f : r.findings) text << "      finding: " << f << "\n";
  }
  if (!sweep_cases.empty()) {
    text << (sw.all_pass ? "PASS" : "FAIL") << "  sweep p<=" << p_max << " q<=" << q_max
         << ": " << sw.instances << " instances, " << sw.passed << " checks passed, "
         << sw.failed << " failed, " << sw.vacuous << " vacuous, "
         << sw.capped_instances << " capped\n";
    std::vector<std::string> findings;
    for (const auto& r : sw.reports) {
      for (const auto& f : r.failures)
        text << "      failure [" << r.id << " " << r.instance << "]: " << f << "\n";
      for (const auto& f : r.findings) findings.push_back("[" + r.id + " " + r.instance + "] " + f);
    }
    if (!findings.empty()) {
      text << "findings (" << findings.size() << "):\n";
      for (const auto& f : findings) text << "      " << f << "\n";
    }
  }
  text << (all_pass ? "RESULT pass" : "RESULT fail") << "\n";
  emit(c, mono::io::wrap_report("verify-paper", payload, make_meta(start)), text.str());
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for finite monomial unitary groups"};
  app.require_subcommand(1);

  Common common;
  int p = 0;
  long q = 0;
  std::string a_csv, gens_path, sub_path;
  std::string case_filter = "all";
  int p_max = 7;
  long q_max = 5;

  CLI::App* gpqa = app.add_subcommand("gpqa", "Analyze G(p,q,A)");
  gpqa->add_option("--p", p, "Prime p")->required();
  gpqa->add_option("--q", q, "Prime q")->required();
  gpqa->add_option("--a", a_csv, "Comma-separated exponents of A")->required();
  add_common(gpqa, &common);

  CLI::App* inv = app.add_subcommand("invariants", "Group order, rho, r from generators");
  inv->add_option("--gens", gens_path, "Generators JSON file")->required();
  add_common(inv, &common);

  CLI::App* burn = app.add_subcommand("burnside", "Burnside irreducibility test");
  burn->add_option("--gens", gens_path, "Generators JSON file")->required();
  add_common(burn, &common);

  CLI::App* dec = app.add_subcommand("decompose", "Invariant block search for rank-2 groups");
  dec->add_option("--gens", gens_path, "Generators JSON file")->required();
  add_common(dec, &common);

  CLI::App* stab = app.add_subcommand("stabilizer", "Stabilizer dichotomy for a subspace");
  stab->add_option("--gens", gens_path, "Generators JSON file")->required();
  stab->add_option("--subspace", sub_path, "Subspace JSON file")->required();
  add_common(stab, &common);

  CLI::App* ver = app.add_subcommand("verify-paper", "Run the verification corpus");
  ver->add_option("--case", case_filter, "Case id or 'all'")
      ->check(CLI::IsMember({"all", "1.4", "2.2", "2.4", "2.5", "2.6", "2.7", "2.8",
                             "3.1", "3.2", "3.3", "3.4", "3.5"}));
  ver->add_option("--p-max", p_max, "Largest p for the sweep");
  ver->add_option("--q-max", q_max, "Largest q for the sweep");
  add_common(ver, &common);

  CLI11_PARSE(app, argc, argv);

  try {
    bool cap_given = gpqa->count("--cap") || inv->count("--cap") ||
                     burn->count("--cap") || dec->count("--cap") ||
                     stab->count("--cap") || ver->count("--cap");
    apply_env_cap(&common, cap_given);
    if (gpqa->parsed()) return run_gpqa(common, p, q, a_csv);
    if (inv->parsed()) return run_invariants(common, gens_path);
    if (burn->parsed()) return run_burnside(common, gens_path);
    if (dec->parsed()) return run_decompose(common, gens_path);
    if (stab->parsed()) return run_stabilizer(common, gens_path, sub_path);
    if (ver->parsed()) return run_verify_paper(common, case_filter, p_max, q_max);
  } catch (const mono::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const mono::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
