#include "liaison/presets.hpp"

#include <algorithm>

#include "liaison/error.hpp"

namespace liaison {

RawResolution SpecPreset::raw() const {
  return RawResolution::from_twists(name, g, e_twists, f_twists);
}

PolyMatrix MatrixPreset::matrix(std::uint32_t p) const { return PolyMatrix::parse(text, p); }

const std::vector<SpecPreset>& spec_presets() {
  static const std::vector<SpecPreset> presets = {
      {"explicitA",
       {"explicitB"},
       "Rank-2 G with a = 5; E = O(3) + O^2 + O(-1) + O(-4)^2 + O(-5), "
       "F = O(5) + O(4)^2 + O(1)^2 + G + O(-3). Height 23, alpha = (2, 3), theta connected about 28.",
       {2, 5},
       {3, 0, 0, -1, -4, -4, -5},
       {5, 4, 4, 1, 1, -3}},
      {"hm-minimal",
       {},
       "Minimal abelian surface of degree ten from a section of the Horrocks-Mumford bundle: "
       "0 -> O -> G -> I(5) -> 0 with G of rank 2. Height 0, eta identically zero.",
       {2, 5},
       {0},
       {}},
      {"alpha-fail",
       {},
       "Rank-2 G with a = 2, E = O(1) + O(-2)^2, F = O(2)^2 + G. Height 7, alpha_1 = 1; "
       "theta support {7, 9, 10} is not connected about 9.",
       {2, 2},
       {1, -2, -2},
       {2, 2}},
  };
  return presets;
}

const std::vector<MatrixPreset>& matrix_presets() {
  static const std::vector<MatrixPreset> presets = {
      {"embedded-point",
       "Column (x, y, z^2 w^2, z w^3) of a rank-3 sheaf; its singular scheme is x = y = 0, zw = 0 "
       "with an embedded point at the origin.",
       "x\ny\nz^2*w^2\nz*w^3\n",
       3},
      {"line-xyz",
       "Column (x, y, z, 0): rank-3 sheaf singular along the line x = y = z = 0.",
       "x\ny\nz\n0\n",
       3},
      {"generic-2x2",
       "Generic 2 x 2 matrix; its determinant cuts out the rank <= 1 stratum.",
       "x, y\nz, w\n",
       0},
  };
  return presets;
}

const SpecPreset* find_spec_preset(std::string_view name) {
  for (const auto& p : spec_presets()) {
    if (p.name == name || std::find(p.aliases.begin(), p.aliases.end(), name) != p.aliases.end()) {
      return &p;
    }
  }
  return nullptr;
}

const MatrixPreset* find_matrix_preset(std::string_view name) {
  for (const auto& p : matrix_presets()) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

ResolutionSpec spec_preset(std::string_view name) {
  const auto* p = find_spec_preset(name);
  if (!p) throw Error(ErrorCode::UnknownPreset, "no spec preset named '" + std::string(name) + "'");
  return validate_resolution(p->raw());
}

PolyMatrix matrix_preset(std::string_view name, std::uint32_t p) {
  const auto* m = find_matrix_preset(name);
  if (!m) throw Error(ErrorCode::UnknownPreset, "no matrix preset named '" + std::string(name) + "'");
  return m->matrix(p);
}

void validate_presets() {
  for (const auto& p : spec_presets()) validate_resolution(p.raw());
  for (const auto& m : matrix_presets()) {
    for (std::uint32_t p : {2U, 3U, 5U}) m.matrix(p);
  }
}

}  // namespace liaison
