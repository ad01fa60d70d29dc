#include "cvent/json_io.hpp"

#include "cvent/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cvent {

namespace {

using nlohmann::json;

struct FamilyInfo {
  StateFamily family;
  std::string_view tag;
};

constexpr FamilyInfo kFamilies[] = {
    {StateFamily::Standard2, "standard2"},
    {StateFamily::TwoTwo, "two_two"},
    {StateFamily::PhotonAddedSts, "photon_added_sts"},
    {StateFamily::SqueezedThermal, "squeezed_thermal"},
    {StateFamily::CoherentMixture, "coherent_mixture"},
    {StateFamily::RawCovariance, "raw_covariance"},
};

double number_field(const json& j, const std::string& key) {
  if (!j.contains(key)) throw InvalidArgument("state descriptor is missing \"" + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number()) throw InvalidArgument("\"" + key + "\" must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw InvalidArgument("\"" + key + "\" must be finite");
  return x;
}

std::complex<double> complex_field(const json& j, const std::string& key) {
  if (!j.contains(key)) throw InvalidArgument("state descriptor is missing \"" + key + "\"");
  const json& v = j.at(key);
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw InvalidArgument("\"" + key + "\" must be [re, im]");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

std::string_view to_string(StateFamily f) {
  for (const auto& info : kFamilies) {
    if (info.family == f) return info.tag;
  }
  return "unknown";
}

StateFamily parse_family(std::string_view tag) {
  for (const auto& info : kFamilies) {
    if (info.tag == tag) return info.family;
  }
  throw InvalidArgument("unknown state family \"" + std::string(tag) + "\"");
}

const std::vector<std::string>& family_parameters(StateFamily f) {
  static const std::vector<std::string> standard2{"a", "b", "c1", "c2"};
  static const std::vector<std::string> two_two{"a", "b", "c"};
  static const std::vector<std::string> thermal{"n", "r"};
  static const std::vector<std::string> mixture{"p", "alpha1_re", "alpha1_im", "alpha2_re", "alpha2_im"};
  static const std::vector<std::string> none;
  switch (f) {
    case StateFamily::Standard2:
      return standard2;
    case StateFamily::TwoTwo:
      return two_two;
    case StateFamily::PhotonAddedSts:
    case StateFamily::SqueezedThermal:
      return thermal;
    case StateFamily::CoherentMixture:
      return mixture;
    case StateFamily::RawCovariance:
      return none;
  }
  return none;
}

double StateDescriptor::get(const std::string& name) const {
  const auto it = params.find(name);
  if (it == params.end()) throw InvalidArgument("parameter \"" + name + "\" is not set");
  return it->second;
}

void StateDescriptor::set(const std::string& name, double value) {
  const auto& names = family_parameters(family);
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw InvalidArgument("family " + std::string(to_string(family)) + " has no parameter \"" + name + "\"");
  }
  if (!std::isfinite(value)) throw InvalidArgument("parameter \"" + name + "\" must be finite");
  params[name] = value;
}

json covariance_to_json(const CovarianceMatrix& v) {
  std::string ordering;
  for (int k = 1; k <= v.modes(); ++k) {
    if (k > 1) ordering += ",";
    ordering += "x" + std::to_string(k) + ",p" + std::to_string(k);
  }
  json rows = json::array();
  for (int i = 0; i < v.dimension(); ++i) {
    json row = json::array();
    for (int j = 0; j < v.dimension(); ++j) row.push_back(v(i, j));
    rows.push_back(std::move(row));
  }
  return {{"modes", v.modes()}, {"ordering", ordering}, {"matrix", rows}};
}

CovarianceMatrix covariance_from_json(const json& j) {
  if (!j.is_object() || !j.contains("matrix")) throw InvalidArgument("covariance JSON needs a \"matrix\" field");
  const json& rows = j.at("matrix");
  if (!rows.is_array() || rows.empty()) throw InvalidArgument("\"matrix\" must be a non-empty array of rows");
  const auto dim = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
      throw InvalidArgument("\"matrix\" must be square");
    }
    for (Eigen::Index k = 0; k < dim; ++k) {
      if (!row[static_cast<std::size_t>(k)].is_number()) throw InvalidArgument("\"matrix\" entries must be numbers");
      m(i, k) = row[static_cast<std::size_t>(k)].get<double>();
    }
  }
  if (j.contains("modes")) {
    if (!j.at("modes").is_number_integer() || 2 * j.at("modes").get<long long>() != dim) {
      throw InvalidArgument("\"modes\" does not match the matrix size");
    }
  }
  if (j.contains("ordering")) {
    if (!j.at("ordering").is_string()) throw InvalidArgument("\"ordering\" must be a string");
    const auto& ord = j.at("ordering").get_ref<const std::string&>();
    if (ord != "x1,p1,...,xm,pm" && ord != covariance_to_json(CovarianceMatrix::vacuum(static_cast<int>(dim / 2)))["ordering"]) {
      throw InvalidArgument("unsupported quadrature ordering \"" + ord + "\"");
    }
  }
  return CovarianceMatrix(m);
}

StateDescriptor state_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("state descriptor must be a JSON object");
  if (!j.contains("family") || !j.at("family").is_string()) {
    throw InvalidArgument("state descriptor needs a string \"family\"");
  }
  StateDescriptor s;
  s.family = parse_family(j.at("family").get<std::string>());
  if (s.family == StateFamily::RawCovariance) {
    s.raw = covariance_from_json(j.contains("covariance") ? j.at("covariance") : j);
    return s;
  }
  if (s.family == StateFamily::CoherentMixture) {
    s.set("p", number_field(j, "p"));
    const auto a1 = complex_field(j, "alpha1");
    const auto a2 = complex_field(j, "alpha2");
    s.set("alpha1_re", a1.real());
    s.set("alpha1_im", a1.imag());
    s.set("alpha2_re", a2.real());
    s.set("alpha2_im", a2.imag());
    return s;
  }
  for (const auto& name : family_parameters(s.family)) s.set(name, number_field(j, name));
  return s;
}

json state_to_json(const StateDescriptor& s) {
  json j;
  j["family"] = std::string(to_string(s.family));
  if (s.family == StateFamily::RawCovariance) {
    if (s.raw) j["covariance"] = covariance_to_json(*s.raw);
    return j;
  }
  if (s.family == StateFamily::CoherentMixture) {
    j["p"] = s.get("p");
    j["alpha1"] = {s.get("alpha1_re"), s.get("alpha1_im")};
    j["alpha2"] = {s.get("alpha2_re"), s.get("alpha2_im")};
    return j;
  }
  for (const auto& name : family_parameters(s.family)) j[name] = s.get(name);
  return j;
}

json realignment_to_json(const RealignmentResult& r) {
  return {{"norm", finite_or_null(r.norm)},
          {"nus", r.spectrum.nus},
          {"a0", r.spectrum.a0},
          {"verdict", std::string(to_string(r.verdict))}};
}

json classification_to_json(const TwoTwoClassification& c) {
  return {{"verdict", std::string(to_string(c.verdict))}, {"norm", finite_or_null(c.norm)}};
}

json bounds_to_json(const BoundReport& b) {
  json j = {{"cren_lower", b.cren_lower},
            {"concurrence_lower", b.concurrence_lower},
            {"eof_lower", b.eof_lower},
            {"tangle_lower", b.tangle_lower}};
  j["witness_value01"] = b.witness_value01 ? json(*b.witness_value01) : json(nullptr);
  j["swap_value"] = b.swap_value ? json(*b.swap_value) : json(nullptr);
  return j;
}

}  // namespace cvent
