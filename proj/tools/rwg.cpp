// Command line front end: descriptor analysis, the built-in catalog,
// root-table dumps, and exhaustive verification campaigns.
//
// Exit codes: 0 success, 1 structural identity failed, 2 bad input,
// 3 enumeration budget exceeded.

#include "rwg/descriptor.hpp"
#include "rwg/error.hpp"
#include "rwg/oracle.hpp"
#include "rwg/realweyl.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

rwg::Descriptor load_descriptor(const std::string& source) {
  if (source.rfind("catalog:", 0) == 0)
    return rwg::catalog_entry(source.substr(8));
  std::ifstream in(source);
  if (!in)
    throw rwg::validation_error(rwg::errc::descriptor_malformed,
                                "cannot open " + source);
  std::ostringstream buf;
  buf << in.rdbuf();
  return rwg::descriptor_from_json(buf.str());
}

void print_error(bool json_mode, const std::string& kind, const std::string& what) {
  if (json_mode) {
    json j;
    j["error"] = {{"kind", kind}, {"message", what}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cerr << "error (" << kind << "): " << what << "\n";
  }
}

int run_analyze(const std::string& source, const std::string& format,
                const std::string& lattice_flag) {
  bool json_mode = format == "json";
  try {
    rwg::Descriptor d = load_descriptor(source);
    if (lattice_flag == "weight") d.lattice = rwg::LatticeMode::weight;
    if (lattice_flag == "root") d.lattice = rwg::LatticeMode::root;
    rwg::InvolutionDatum datum = rwg::realize(d);
    rwg::RealWeylDecomposition dec = rwg::compute(datum, d.lattice);
    std::cout << (json_mode ? rwg::report_json(dec) : rwg::report_text(dec));
    return kExitOk;
  } catch (const rwg::validation_error& e) {
    print_error(json_mode, rwg::errc_name(e.code()), e.what());
    return kExitInput;
  } catch (const rwg::budget_exceeded& e) {
    print_error(json_mode, "budget_exceeded", e.what());
    return kExitBudget;
  } catch (const rwg::invariant_violation& e) {
    print_error(json_mode, e.identity(), e.what());
    return kExitInvariant;
  }
}

int run_catalog_list() {
  for (const auto& id : rwg::catalog_ids()) std::cout << id << "\n";
  return kExitOk;
}

int run_catalog_show(const std::string& id) {
  try {
    std::cout << rwg::descriptor_to_json(rwg::catalog_entry(id));
    return kExitOk;
  } catch (const rwg::validation_error& e) {
    print_error(false, rwg::errc_name(e.code()), e.what());
    return kExitInput;
  }
}

int run_roots(const std::string& type_label, const std::string& format) {
  try {
    rwg::CartanType type = rwg::CartanType::parse(type_label);
    rwg::RootSystem rs = rwg::RootSystem::build(type);
    if (format == "json") {
      json j;
      j["type"] = type.str();
      j["rank"] = rs.rank();
      j["cartan_matrix"] = rs.cartan();
      j["num_roots"] = rs.size();
      j["num_positive"] = rs.num_positive();
      json roots = json::array();
      for (int i = 0; i < rs.size(); ++i) {
        int height = 0;
        for (int c : rs.root(i)) height += c;
        roots.push_back({{"index", i},
                         {"coords", rs.root(i)},
                         {"height", height},
                         {"positive", rs.is_positive(i)},
                         {"length_sq", rs.form(i, i)}});
      }
      j["roots"] = std::move(roots);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << type.str() << ": " << rs.size() << " roots, "
                << rs.num_positive() << " positive\n";
      for (int i = 0; i < rs.size(); ++i) {
        std::cout << i << ":";
        for (int c : rs.root(i)) std::cout << " " << c;
        std::cout << "  (" << (rs.is_positive(i) ? "+" : "-") << ", len^2 "
                  << rs.form(i, i) << ")\n";
      }
    }
    return kExitOk;
  } catch (const rwg::validation_error& e) {
    print_error(format == "json", rwg::errc_name(e.code()), e.what());
    return kExitInput;
  }
}

int report_verdict(const rwg::Verdict& verdict, const std::string& label) {
  for (const auto& c : verdict.checks) {
    std::cout << label << c.identity << ": " << (c.pass ? "pass" : "FAIL");
    if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
    std::cout << "\n";
  }
  return verdict.all_pass() ? kExitOk : kExitInvariant;
}

int run_oracle(const std::string& source, int fuzz_count, int fuzz_rank,
               std::uint64_t max_order, std::uint64_t seed,
               const std::string& lattice_flag) {
  rwg::OracleBudget budget;
  budget.max_group_order = max_order;
  budget.max_rank = fuzz_rank > budget.max_rank ? fuzz_rank : budget.max_rank;
  rwg::LatticeMode mode = lattice_flag == "root" ? rwg::LatticeMode::root
                                                 : rwg::LatticeMode::weight;
  try {
    if (fuzz_count > 0) {
      std::vector<rwg::CartanType> types;
      for (rwg::Series s : {rwg::Series::A, rwg::Series::B, rwg::Series::C,
                            rwg::Series::D, rwg::Series::E, rwg::Series::F,
                            rwg::Series::G}) {
        rwg::CartanType t{s, fuzz_rank};
        if (rwg::is_valid_type(t)) types.push_back(t);
      }
      std::mt19937_64 rng(seed);
      std::map<std::string, std::shared_ptr<const rwg::RootSystem>> cache;
      int failures = 0;
      for (int i = 0; i < fuzz_count; ++i) {
        const auto& t = types[i % types.size()];
        auto& rs = cache[t.str()];
        if (!rs)
          rs = std::make_shared<const rwg::RootSystem>(rwg::RootSystem::build(t));
        rwg::InvolutionDatum datum = rwg::fuzz_datum(rs, rng, budget);
        // Fuzzed data need not come from a real form, so only the
        // definitional identities apply.
        rwg::Verdict verdict = rwg::check_definitional(datum, budget);
        if (!verdict.all_pass()) {
          ++failures;
          std::cout << "datum " << i << " (" << t.str() << "):\n";
          report_verdict(verdict, "  ");
        }
      }
      std::cout << (fuzz_count - failures) << "/" << fuzz_count
                << " fuzzed data passed every identity\n";
      return failures == 0 ? kExitOk : kExitInvariant;
    }
    rwg::Descriptor d = load_descriptor(source);
    rwg::InvolutionDatum datum = rwg::realize(d);
    rwg::Verdict verdict = rwg::check_all(datum, mode, budget);
    return report_verdict(verdict, "");
  } catch (const rwg::validation_error& e) {
    print_error(false, rwg::errc_name(e.code()), e.what());
    return kExitInput;
  } catch (const rwg::budget_exceeded& e) {
    print_error(false, "budget_exceeded", e.what());
    return kExitBudget;
  } catch (const rwg::invariant_violation& e) {
    print_error(false, e.identity(), e.what());
    return kExitInvariant;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"real Weyl group computations from root-system data"};
  app.require_subcommand(1);

  std::string source, format = "text", lattice_flag, type_label, catalog_id;

  auto* analyze = app.add_subcommand("analyze", "decompose a datum");
  analyze->add_option("file", source, "descriptor file or catalog:<id>")
      ->required();
  analyze->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  analyze->add_option("--lattice", lattice_flag, "weight or root")
      ->check(CLI::IsMember({"weight", "root"}));

  auto* catalog = app.add_subcommand("catalog", "built-in data");
  auto* list = catalog->add_subcommand("list", "print catalog ids");
  auto* show = catalog->add_subcommand("show", "emit a descriptor");
  show->add_option("id", catalog_id, "catalog id")->required();
  catalog->require_subcommand(1);

  auto* roots = app.add_subcommand("roots", "dump a root table");
  roots->add_option("--type", type_label, "Cartan type, e.g. G2")->required();
  roots->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  int fuzz_count = 0, fuzz_rank = 3;
  std::uint64_t max_order = 200000, seed = 12345;
  auto* oracle = app.add_subcommand("oracle", "verify identities exhaustively");
  oracle->add_option("file", source, "descriptor file or catalog:<id>");
  oracle->add_option("--fuzz", fuzz_count, "number of random data");
  oracle->add_option("--rank", fuzz_rank, "rank for fuzzed data");
  oracle->add_option("--max-order", max_order, "enumeration budget");
  oracle->add_option("--seed", seed, "fuzz seed");
  oracle->add_option("--lattice", lattice_flag, "weight or root")
      ->check(CLI::IsMember({"weight", "root"}));

  CLI11_PARSE(app, argc, argv);

  if (*analyze) return run_analyze(source, format, lattice_flag);
  if (*list) return run_catalog_list();
  if (*show) return run_catalog_show(catalog_id);
  if (*roots) return run_roots(type_label, format);
  if (*oracle) {
    if (fuzz_count == 0 && source.empty()) {
      std::cerr << "oracle needs a descriptor or --fuzz N\n";
      return kExitInput;
    }
    return run_oracle(source, fuzz_count, fuzz_rank, max_order, seed,
                      lattice_flag);
  }
  return kExitInput;
}
