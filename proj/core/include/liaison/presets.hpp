#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "liaison/poly_matrix.hpp"
#include "liaison/resolution.hpp"

namespace liaison {

struct SpecPreset {
  std::string name;
  std::vector<std::string> aliases;
  std::string description;
  GSpec g;
  std::vector<int> e_twists;  // t of O(t)
  std::vector<int> f_twists;

  RawResolution raw() const;
};

struct MatrixPreset {
  std::string name;
  std::string description;
  std::string text;  // matrix file contents
  int generic_rank = 0;

  PolyMatrix matrix(std::uint32_t p) const;
};

const std::vector<SpecPreset>& spec_presets();
const std::vector<MatrixPreset>& matrix_presets();

/// Lookup by name or alias; nullptr when absent.
const SpecPreset* find_spec_preset(std::string_view name);
const MatrixPreset* find_matrix_preset(std::string_view name);

/// Validated spec for a preset. Throws UnknownPreset.
ResolutionSpec spec_preset(std::string_view name);
PolyMatrix matrix_preset(std::string_view name, std::uint32_t p);

/// Validates every spec preset and parses every matrix preset over F_2, F_3
/// and F_5. Throws on the first failure.
void validate_presets();

}  // namespace liaison
