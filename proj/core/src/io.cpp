#include "liaison/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "liaison/error.hpp"

namespace liaison {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorCode::Parse, "spec file: " + what);
}

const json& member(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) parse_fail(std::string("missing \"") + key + "\"");
  return *it;
}

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) parse_fail(where + " must be an integer");
  const auto wide = v.get<std::int64_t>();
  if (wide < std::numeric_limits<int>::min() / 4 || wide > std::numeric_limits<int>::max() / 4) {
    parse_fail(where + " is out of range");
  }
  return static_cast<int>(wide);
}

std::vector<int> as_int_array(const json& v, const std::string& where) {
  if (!v.is_array()) parse_fail(where + " must be an array");
  std::vector<int> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(as_int(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace

RawResolution parse_spec_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(e.what());
  }
  if (!doc.is_object()) parse_fail("top level must be an object");

  const json& name = member(doc, "name");
  if (!name.is_string()) parse_fail("\"name\" must be a string");
  const json& g = member(doc, "g");
  if (!g.is_object()) parse_fail("\"g\" must be an object");

  GSpec gspec{as_int(member(g, "rank"), "g.rank"), as_int(member(g, "a"), "g.a")};
  return RawResolution::from_twists(name.get<std::string>(), gspec,
                                    as_int_array(member(doc, "e_twists"), "e_twists"),
                                    as_int_array(member(doc, "f_twists"), "f_twists"));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RawResolution read_spec_file(const std::filesystem::path& path) {
  return parse_spec_json(read_text_file(path));
}

std::string spec_to_json(const ResolutionSpec& spec, int indent) {
  json doc = {
      {"name", spec.name()},
      {"g", {{"rank", spec.g().rank}, {"a", spec.g().a}}},
      {"e_twists", spec.e_twists()},
      {"f_twists", spec.f_twists()},
  };
  return doc.dump(indent);
}

void write_eta_theta_csv(std::ostream& out, const StepFn& eta_fn, const StepFn& theta_fn) {
  out << "l,eta,theta\n";
  const int lo = std::min(eta_fn.lo(), theta_fn.lo());
  const int hi = std::max(eta_fn.hi(), theta_fn.hi());
  for (int l = lo; l <= hi; ++l) {
    out << l << ',' << eta_fn.eval(l) << ',' << theta_fn.eval(l) << '\n';
  }
}

}  // namespace liaison
