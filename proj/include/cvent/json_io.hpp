#pragma once

#include "cvent/bounds.hpp"
#include "cvent/realignment.hpp"
#include "cvent/symplectic.hpp"

#include <json.hpp>

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cvent {

enum class StateFamily { Standard2, TwoTwo, PhotonAddedSts, SqueezedThermal, CoherentMixture, RawCovariance };

[[nodiscard]] std::string_view to_string(StateFamily f);
[[nodiscard]] StateFamily parse_family(std::string_view tag);

/// Names accepted for each family, in canonical order. Coherent-mixture
/// amplitudes appear as alpha1_re, alpha1_im, alpha2_re, alpha2_im.
[[nodiscard]] const std::vector<std::string>& family_parameters(StateFamily f);

struct StateDescriptor {
  StateFamily family = StateFamily::Standard2;
  std::map<std::string, double> params;
  std::optional<CovarianceMatrix> raw;

  [[nodiscard]] double get(const std::string& name) const;
  /// Throws InvalidArgument for names the family does not define.
  void set(const std::string& name, double value);

  [[nodiscard]] std::complex<double> alpha1() const { return {get("alpha1_re"), get("alpha1_im")}; }
  [[nodiscard]] std::complex<double> alpha2() const { return {get("alpha2_re"), get("alpha2_im")}; }
};

[[nodiscard]] nlohmann::json covariance_to_json(const CovarianceMatrix& v);
[[nodiscard]] CovarianceMatrix covariance_from_json(const nlohmann::json& j);

[[nodiscard]] StateDescriptor state_from_json(const nlohmann::json& j);
[[nodiscard]] nlohmann::json state_to_json(const StateDescriptor& s);

[[nodiscard]] nlohmann::json realignment_to_json(const RealignmentResult& r);
[[nodiscard]] nlohmann::json classification_to_json(const TwoTwoClassification& c);
[[nodiscard]] nlohmann::json bounds_to_json(const BoundReport& b);

}  // namespace cvent
