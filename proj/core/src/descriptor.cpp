#include "rwg/descriptor.hpp"

#include "rwg/error.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace rwg {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& why) {
  throw validation_error(errc::descriptor_malformed, why);
}

std::vector<int> int_vector(const json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) malformed(std::string(what) + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::vector<CartanType> all_types_rank_le_8() {
  std::vector<CartanType> out;
  for (Series s : {Series::A, Series::B, Series::C, Series::D, Series::E,
                   Series::F, Series::G})
    for (int r = 1; r <= 8; ++r) {
      CartanType t{s, r};
      if (is_valid_type(t)) out.push_back(t);
    }
  return out;
}

}  // namespace

Descriptor descriptor_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) malformed("descriptor must be a JSON object");

  Descriptor d;
  if (!j.contains("type") || !j["type"].is_object() ||
      !j["type"].contains("series") || !j["type"].contains("rank"))
    malformed("missing type {series, rank}");
  std::string series = j["type"]["series"].get<std::string>();
  if (!j["type"]["rank"].is_number_integer()) malformed("rank must be an integer");
  d.type = CartanType::parse(series + std::to_string(j["type"]["rank"].get<int>()));
  const int n = d.type.rank;

  bool has_theta = j.contains("theta"), has_vogan = j.contains("vogan");
  if (has_theta == has_vogan)
    malformed("exactly one of theta / vogan must be present");
  if (has_theta) {
    if (!j["theta"].is_array() || static_cast<int>(j["theta"].size()) != n)
      malformed("theta must be a rank x rank matrix");
    std::vector<std::vector<int>> rows;
    for (const auto& row : j["theta"]) {
      rows.push_back(int_vector(row, "theta row"));
      if (static_cast<int>(rows.back().size()) != n)
        malformed("theta must be a rank x rank matrix");
    }
    d.theta_rows = std::move(rows);
  } else {
    const auto& v = j["vogan"];
    if (!v.is_object() || !v.contains("involution") || !v.contains("painted"))
      malformed("vogan must hold {involution, painted}");
    VoganDiagram diagram;
    diagram.type = d.type;
    auto inv = int_vector(v["involution"], "vogan involution");
    if (static_cast<int>(inv.size()) != n)
      malformed("vogan involution must list all nodes");
    for (int& x : inv) --x;  // 1-based nodes in JSON
    diagram.involution = std::move(inv);
    for (int node : int_vector(v["painted"], "painted"))
      diagram.painted.push_back(node - 1);
    d.vogan = std::move(diagram);
  }

  if (j.contains("grading_seed")) {
    if (!j["grading_seed"].is_array()) malformed("grading_seed must be an array");
    for (const auto& s : j["grading_seed"]) {
      if (!s.is_object() || !s.contains("root") || !s.contains("sign"))
        malformed("grading seed must hold {root, sign}");
      GradingSeed seed;
      seed.root = int_vector(s["root"], "seed root");
      if (static_cast<int>(seed.root.size()) != n)
        malformed("seed root has wrong length");
      if (!s["sign"].is_number_integer()) malformed("seed sign must be +-1");
      seed.sign = s["sign"].get<int>();
      if (seed.sign != 1 && seed.sign != -1) malformed("seed sign must be +-1");
      d.seeds.push_back(std::move(seed));
    }
  }

  if (j.contains("lattice")) {
    std::string mode = j["lattice"].get<std::string>();
    if (mode == "weight")
      d.lattice = LatticeMode::weight;
    else if (mode == "root")
      d.lattice = LatticeMode::root;
    else
      malformed("lattice must be 'weight' or 'root'");
  }
  return d;
}

std::string descriptor_to_json(const Descriptor& d) {
  json j;
  j["type"] = {{"series", std::string(1, static_cast<char>(d.type.series))},
               {"rank", d.type.rank}};
  if (d.theta_rows) {
    json rows = json::array();
    for (const auto& row : *d.theta_rows) rows.push_back(row);
    j["theta"] = std::move(rows);
  } else if (d.vogan) {
    json inv = json::array();
    for (int x : d.vogan->involution) inv.push_back(x + 1);
    json painted = json::array();
    for (int x : d.vogan->painted) painted.push_back(x + 1);
    j["vogan"] = {{"involution", std::move(inv)}, {"painted", std::move(painted)}};
  }
  json seeds = json::array();
  for (const auto& s : d.seeds)
    seeds.push_back({{"root", s.root}, {"sign", s.sign}});
  j["grading_seed"] = std::move(seeds);
  j["lattice"] = lattice_mode_name(d.lattice);
  return j.dump(2) + "\n";
}

InvolutionDatum realize(const Descriptor& d) {
  if (d.vogan) {
    InvolutionDatum datum = from_vogan(*d.vogan);
    datum.seeds.insert(datum.seeds.end(), d.seeds.begin(), d.seeds.end());
    return datum;
  }
  InvolutionDatum datum;
  datum.rs = std::make_shared<RootSystem>(RootSystem::build(d.type));
  const int n = d.type.rank;
  datum.theta.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) datum.theta[i][j] = (*d.theta_rows)[j][i];
  datum.seeds = d.seeds;
  return datum;
}

std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids;
  for (const auto& t : all_types_rank_le_8()) ids.push_back("compact:" + t.str());
  for (const auto& t : all_types_rank_le_8()) ids.push_back("split:" + t.str());
  for (const auto& t : all_types_rank_le_8()) {
    if (t.series != Series::A && t.series != Series::B &&
        t.series != Series::C && t.series != Series::D)
      continue;
    for (int node = 1; node <= t.rank; ++node)
      ids.push_back("painted:" + t.str() + ":" + std::to_string(node));
  }
  ids.push_back("sl2R:compactCSA");
  ids.push_back("g2:intermediate");
  return ids;
}

Descriptor catalog_entry(const std::string& id) {
  auto vogan_descriptor = [](const CartanType& t, std::vector<int> painted) {
    Descriptor d;
    d.type = t;
    VoganDiagram diagram;
    diagram.type = t;
    for (int i = 0; i < t.rank; ++i) diagram.involution.push_back(i);
    diagram.painted = std::move(painted);
    d.vogan = std::move(diagram);
    return d;
  };

  if (id.rfind("compact:", 0) == 0)
    return vogan_descriptor(CartanType::parse(id.substr(8)), {});
  if (id.rfind("split:", 0) == 0) {
    CartanType t = CartanType::parse(id.substr(6));
    Descriptor d;
    d.type = t;
    std::vector<std::vector<int>> rows(t.rank, std::vector<int>(t.rank, 0));
    for (int i = 0; i < t.rank; ++i) rows[i][i] = -1;
    d.theta_rows = std::move(rows);
    return d;
  }
  if (id.rfind("painted:", 0) == 0) {
    auto rest = id.substr(8);
    auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw validation_error(errc::unknown_catalog_id, "unknown catalog id " + id);
    CartanType t = CartanType::parse(rest.substr(0, colon));
    int node = std::stoi(rest.substr(colon + 1));
    if (node < 1 || node > t.rank)
      throw validation_error(errc::unknown_catalog_id, "painted node out of range");
    return vogan_descriptor(t, {node - 1});
  }
  if (id == "sl2R:compactCSA")
    return vogan_descriptor(CartanType{Series::A, 1}, {0});
  if (id == "g2:intermediate") {
    // theta = reflection in the first (short) simple root; the orthogonal
    // imaginary pair +-(3 a1 + 2 a2) graded noncompact.
    Descriptor d;
    d.type = CartanType{Series::G, 2};
    d.theta_rows = std::vector<std::vector<int>>{{-1, 0}, {3, 1}};
    d.seeds.push_back({{3, 2}, -1});
    return d;
  }
  throw validation_error(errc::unknown_catalog_id, "unknown catalog id " + id);
}

}  // namespace rwg
