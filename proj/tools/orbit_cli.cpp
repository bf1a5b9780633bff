#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "nilorb/json_io.hpp"

using namespace nilorb;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBadInput = 2;

FieldSpec parse_field_or_throw(const std::string& s) {
  return FieldSpec::parse(s);  // throws std::invalid_argument
}

FieldMode mode_for_field(const FieldSpec& spec) {
  switch (spec.kind) {
    case FieldSpec::Kind::ComplexFloat64: return FieldMode::closed_char0();
    case FieldSpec::Kind::Rationals: return FieldMode::guaranteed_only();
    case FieldSpec::Kind::Prime: return FieldMode::finite(spec.p);
  }
  return FieldMode::closed_char0();
}

int run_enumerate(long n, const std::string& field_str,
                  const std::string& cases_str, bool as_json) {
  FieldSpec spec = parse_field_or_throw(field_str);
  std::vector<OrbitClass> classes;
  if (cases_str.empty()) {
    classes = enumerate_orbits(n, mode_for_field(spec));
  } else {
    std::map<Partition, OrbitClass, std::greater<Partition>> merged;
    std::istringstream is(cases_str);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      CaseId id = parse_case_id(tok);
      for (auto& [part, params] : case_partitions(id, n)) {
        auto& oc = merged[part];
        oc.partition = part;
        oc.provenance.push_back(params);
      }
    }
    for (auto& [part, oc] : merged) {
      oc.guaranteed = std::any_of(
          oc.provenance.begin(), oc.provenance.end(),
          [](const CaseParams& c) { return is_guaranteed_case(c.id); });
      oc.field_dependent = !oc.guaranteed;
      classes.push_back(oc);
    }
  }
  if (as_json) {
    std::cout << to_json(classes).dump(2) << "\n";
  } else {
    for (const auto& oc : classes) {
      std::cout << oc.partition.to_exponent_string();
      std::cout << "  [";
      for (std::size_t i = 0; i < oc.provenance.size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << to_string(oc.provenance[i].id);
        if (i + 1 < oc.provenance.size() &&
            oc.provenance[i + 1].id == oc.provenance[i].id) {
          // collapse repeated case ids in the human-readable listing
          while (i + 1 < oc.provenance.size() &&
                 oc.provenance[i + 1].id == oc.provenance[i].id)
            ++i;
        }
      }
      std::cout << ']';
      if (oc.field_dependent) std::cout << "  (field-dependent)";
      std::cout << "\n";
    }
    std::cout << classes.size() << " classes\n";
  }
  return kExitOk;
}

template <class F>
int run_witness_typed(const F& field, const FieldSpec& spec, long n,
                      const Partition& target, bool as_json) {
  FieldMode mode = spec.kind == FieldSpec::Kind::Prime
                       ? FieldMode::finite(spec.p)
                       : FieldMode::closed_char0();
  auto classes = enumerate_orbits(n, mode);
  const OrbitClass* found = nullptr;
  for (const auto& oc : classes)
    if (oc.partition == target) {
      found = &oc;
      break;
    }
  if (!found) {
    std::cerr << "error: " << target.to_exponent_string()
              << " is not an enumerated orbit class for n = " << n << "\n";
    return kExitBadInput;
  }
  try {
    auto w = build_witness(field, n, *found);
    if (as_json)
      std::cout << witness_to_json(spec, w).dump(2) << "\n";
    else
      std::cout << witness_to_json(spec, w).dump(2) << "\n";
    return kExitOk;
  } catch (const WitnessNotFound& e) {
    std::cerr << "witness-not-found: " << e.what() << "\n";
    if (found->field_dependent)
      std::cerr << "note: class is field-dependent (P8/P9); this signals "
                   "recipe-absence over " << spec.to_string() << "\n";
    else
      std::cerr << "warning: class is guaranteed (P1-P7); this is a "
                   "consistency alarm\n";
    std::cerr << "attempted recipes: " << e.attempted().size() << "\n";
    return kExitMismatch;
  }
}

int run_witness(long n, const std::string& field_str,
                const std::string& partition_str, bool as_json) {
  FieldSpec spec = parse_field_or_throw(field_str);
  if (spec.kind == FieldSpec::Kind::ComplexFloat64) {
    std::cerr << "error: witness requires an exact field (Q or Fp:<p>)\n";
    return kExitBadInput;
  }
  Partition target = Partition::parse(partition_str);
  if (spec.kind == FieldSpec::Kind::Prime)
    return run_witness_typed(PrimeField(spec.p), spec, n, target, as_json);
  return run_witness_typed(RationalField{}, spec, n, target, as_json);
}

template <class F>
int run_jordan_typed(const F& field, const json& j) {
  auto e = element_from_json(field, j);
  if (!is_nilpotent(e)) {
    std::cerr << "error: element is not nilpotent\n";
    return kExitBadInput;
  }
  std::cout << jordan_type(e).to_exponent_string() << "\n";
  return kExitOk;
}

int run_jordan(const std::string& field_str, const std::string& path) {
  FieldSpec spec = parse_field_or_throw(field_str);
  if (spec.kind == FieldSpec::Kind::ComplexFloat64) {
    std::cerr << "error: jordan requires an exact field (Q or Fp:<p>)\n";
    return kExitBadInput;
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return kExitBadInput;
  }
  json j = json::parse(in);
  if (spec.kind == FieldSpec::Kind::Prime)
    return run_jordan_typed(PrimeField(spec.p), j);
  return run_jordan_typed(RationalField{}, j);
}

int run_verify(long n, const std::string& field_str, const std::string& mode_str,
               long samples, std::uint64_t seed, int threads, bool as_json) {
  FieldSpec spec = parse_field_or_throw(field_str);
  if (spec.kind != FieldSpec::Kind::Prime) {
    std::cerr << "error: verify needs a finite field (Fp:<p>)\n";
    return kExitBadInput;
  }
  OracleMode mode;
  if (mode_str == "exhaustive") {
    mode.exhaustive = true;
  } else if (mode_str == "sample") {
    mode.exhaustive = false;
    mode.samples = samples;
    mode.seed = seed;
  } else {
    std::cerr << "error: --mode must be exhaustive or sample\n";
    return kExitBadInput;
  }
  mode.threads = threads;
  VerificationReport rep;
  try {
    rep = cross_check(n, spec.p, mode);
  } catch (const OracleBudgetError& e) {
    std::cerr << "budget-error: " << e.what() << "\n";
    return kExitBadInput;
  }
  if (as_json) {
    std::cout << to_json(rep).dump(2) << "\n";
  } else {
    std::cout << "n=" << rep.n << " p=" << rep.p
              << (rep.exhaustive ? " exhaustive" : " sampled") << "\n";
    std::cout << "observed types: " << rep.observed.size() << "\n";
    std::cout << "extras: " << rep.extras.size() << "\n";
    for (const auto& p : rep.extras)
      std::cout << "  EXTRA " << p.to_exponent_string() << "\n";
    std::cout << "missing guaranteed: " << rep.missing_guaranteed.size() << "\n";
    for (const auto& p : rep.missing_guaranteed)
      std::cout << "  MISSING " << p.to_exponent_string() << "\n";
    for (const auto& [p, ok] : rep.field_dependent_resolution)
      std::cout << "field-dependent " << p.to_exponent_string() << ": "
                << (ok ? "realized" : "not realized by recipe family") << "\n";
  }
  bool mismatch = !rep.extras.empty() ||
                  (rep.exhaustive && !rep.missing_guaranteed.empty());
  return mismatch ? kExitMismatch : kExitOk;
}

int run_special_u(long j, long alpha, const std::string& field_str) {
  FieldSpec spec = parse_field_or_throw(field_str);
  switch (spec.kind) {
    case FieldSpec::Kind::ComplexFloat64: {
      double u = special_u_complex(j);
      auto h = h_sequence_complex(u, j);
      std::cout << "u_" << j << " = " << u << "  |h_j(u)| = "
                << std::abs(h[static_cast<std::size_t>(j)]) << "\n";
      return kExitOk;
    }
    case FieldSpec::Kind::Rationals: {
      auto u = find_special_u(RationalField{}, j, alpha);
      std::cout << (u ? u->get_str() : std::string("none")) << "\n";
      return kExitOk;
    }
    case FieldSpec::Kind::Prime: {
      auto u = find_special_u(PrimeField(spec.p), j, alpha);
      std::cout << (u ? std::to_string(*u) : std::string("none")) << "\n";
      return kExitOk;
    }
  }
  return kExitBadInput;
}

int run_table(long n) {
  auto classes = enumerate_orbits(n, FieldMode::closed_char0());
  // attribute each partition to the first row that produces it
  std::map<CaseId, std::vector<const OrbitClass*>> rows;
  for (const auto& oc : classes) {
    CaseId first = oc.provenance.front().id;  // provenance sorted by case id
    rows[first].push_back(&oc);
  }
  for (int c = 0; c < 9; ++c) {
    CaseId id = static_cast<CaseId>(c);
    std::cout << '(' << to_string(id) << "):";
    bool first = true;
    for (const auto* oc : rows[id]) {
      std::cout << (first ? " " : ", ") << oc->partition.to_exponent_string();
      first = false;
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int default_threads() {
  if (const char* env = std::getenv("NILORB_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nilpotent orbits meeting the nilpotent centralizer of a "
               "two-equal-blocks Jordan matrix"};
  app.require_subcommand(1);

  long n = 0, j = 0, alpha = 0, samples = 100000;
  std::string field = "Q", partition, element_path, cases, mode = "exhaustive";
  std::uint64_t seed = 0;
  int threads = default_threads();
  bool as_json = false;

  auto* enumerate = app.add_subcommand("enumerate", "list orbit classes");
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--field", field);
  enumerate->add_option("--cases", cases, "comma-separated row filter, e.g. P1,P3");
  enumerate->add_flag("--json", as_json);

  auto* witness = app.add_subcommand("witness", "build a verified witness");
  witness->add_option("--n", n)->required();
  witness->add_option("--field", field);
  witness->add_option("--partition", partition)->required();
  witness->add_flag("--json", as_json);

  auto* jordan = app.add_subcommand("jordan", "Jordan type of an element");
  jordan->add_option("--field", field);
  jordan->add_option("--element", element_path)->required();

  auto* verify = app.add_subcommand("verify", "brute-force cross-check");
  verify->add_option("--n", n)->required();
  verify->add_option("--field", field)->required();
  verify->add_option("--mode", mode);
  verify->add_option("--samples", samples);
  verify->add_option("--seed", seed);
  verify->add_option("--threads", threads);
  verify->add_flag("--json", as_json);

  auto* specialu = app.add_subcommand("special-u", "root search for h_j");
  specialu->add_option("--j", j)->required();
  specialu->add_option("--alpha", alpha);
  specialu->add_option("--field", field);

  auto* table = app.add_subcommand("table", "grouped class table");
  table->add_option("--n", n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << app.help();
    return app.exit(e) == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (enumerate->parsed()) return run_enumerate(n, field, cases, as_json);
    if (witness->parsed()) return run_witness(n, field, partition, as_json);
    if (jordan->parsed()) return run_jordan(field, element_path);
    if (verify->parsed())
      return run_verify(n, field, mode, samples, seed, threads, as_json);
    if (specialu->parsed()) {
      if (alpha == 0) alpha = j + 1;  // lone-root query
      return run_special_u(j, alpha, field);
    }
    if (table->parsed()) return run_table(n);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
