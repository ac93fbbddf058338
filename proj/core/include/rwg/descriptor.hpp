#pragma once

#include "rwg/involution.hpp"
#include "rwg/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rwg {

/// JSON-facing description of an input datum. Exactly one of `theta_rows`
/// (row i = image of simple root i, simple-root coordinates) and `vogan`
/// is present. Extra grading seeds supplement the painting when the
/// diagram involution fixes non-simple imaginary roots.
struct Descriptor {
  CartanType type{Series::A, 1};
  std::optional<std::vector<std::vector<int>>> theta_rows;
  std::optional<VoganDiagram> vogan;
  std::vector<GradingSeed> seeds;
  LatticeMode lattice = LatticeMode::weight;
};

/// Parse a descriptor from JSON text. Throws
/// validation_error(errc::descriptor_malformed) on schema violations.
Descriptor descriptor_from_json(const std::string& text);

/// Deterministic serialization; accepted unchanged by descriptor_from_json.
std::string descriptor_to_json(const Descriptor& d);

/// Build the root system and datum a descriptor denotes.
InvolutionDatum realize(const Descriptor& d);

/// Built-in data: compact:<type> and split:<type> for every valid type of
/// rank <= 8, painted:<type>:<node> single-painted inner classical
/// diagrams, and the special entries sl2R:compactCSA and g2:intermediate.
std::vector<std::string> catalog_ids();
Descriptor catalog_entry(const std::string& id);

}  // namespace rwg
