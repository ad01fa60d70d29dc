#include "cvent/cli.hpp"

#include "cvent/bounds.hpp"
#include "cvent/errors.hpp"
#include "cvent/fock.hpp"
#include "cvent/gaussian_model.hpp"
#include "cvent/realignment.hpp"
#include "cvent/witness.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

namespace cvent::cli {

namespace {

using nlohmann::json;

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

struct QuantityInfo {
  Quantity quantity;
  std::string_view name;
};

constexpr QuantityInfo kQuantities[] = {
    {Quantity::OptimalWitness, "optimal_witness"},
    {Quantity::Witness01, "witness01"},
    {Quantity::Witness, "witness"},
    {Quantity::RealignmentNorm, "realignment_norm"},
    {Quantity::Classify, "classify"},
    {Quantity::Bounds, "bounds"},
    {Quantity::Swap, "swap"},
};

bool is_gaussian(StateFamily f) {
  return f == StateFamily::Standard2 || f == StateFamily::SqueezedThermal || f == StateFamily::TwoTwo ||
         f == StateFamily::RawCovariance;
}

CovarianceMatrix gaussian_covariance(const StateDescriptor& s) {
  switch (s.family) {
    case StateFamily::Standard2:
      return TwoModeStandardForm::make(s.get("a"), s.get("b"), s.get("c1"), s.get("c2")).covariance();
    case StateFamily::SqueezedThermal:
      return squeezed_thermal_params(s.get("n"), s.get("r")).covariance();
    case StateFamily::TwoTwo:
      return two_two_family(s.get("a"), s.get("b"), s.get("c"));
    case StateFamily::RawCovariance:
      if (!s.raw) throw InvalidArgument("raw_covariance descriptor has no matrix");
      return *s.raw;
    default:
      throw InvalidArgument("family " + std::string(to_string(s.family)) + " is not Gaussian");
  }
}

std::optional<TwoModeStandardForm> standard_form(const StateDescriptor& s) {
  if (s.family == StateFamily::Standard2) {
    return TwoModeStandardForm::make(s.get("a"), s.get("b"), s.get("c1"), s.get("c2"));
  }
  if (s.family == StateFamily::SqueezedThermal) return squeezed_thermal_params(s.get("n"), s.get("r"));
  if (s.family == StateFamily::RawCovariance && s.raw && s.raw->modes() == 2) {
    const CovarianceMatrix& v = *s.raw;
    const double tol = 1e-12 * std::max(1.0, v.matrix().cwiseAbs().maxCoeff());
    const bool diagonal_blocks = std::abs(v(0, 1)) <= tol && std::abs(v(2, 3)) <= tol && std::abs(v(0, 3)) <= tol &&
                                 std::abs(v(1, 2)) <= tol && std::abs(v(0, 0) - v(1, 1)) <= tol &&
                                 std::abs(v(2, 2) - v(3, 3)) <= tol;
    if (diagonal_blocks) return TwoModeStandardForm::make(v(0, 0), v(2, 2), v(0, 2), v(1, 3));
  }
  return std::nullopt;
}

std::optional<WignerSpec> two_mode_wigner(const StateDescriptor& s) {
  if (s.family == StateFamily::PhotonAddedSts) return photon_added_sts_wigner(s.get("n"), s.get("r"));
  if (is_gaussian(s.family) && s.family != StateFamily::TwoTwo) {
    CovarianceMatrix v = gaussian_covariance(s);
    if (v.modes() == 2) {
      if (!is_physical(v)) throw InvalidArgument("covariance matrix violates the uncertainty relation");
      return gaussian_wigner(v);
    }
  }
  return std::nullopt;
}

double witness_value(const StateDescriptor& s, const WitnessParams& w, const EvalOptions& o) {
  if (s.family == StateFamily::PhotonAddedSts && w.mu1() == 0.0 && w.mu2() == 1.0) {
    return witness_photon_added_closed(s.get("n"), s.get("r"));
  }
  if (auto sf = standard_form(s)) return witness_expectation_gaussian(*sf, w);
  auto wspec = two_mode_wigner(s);
  if (!wspec) {
    throw InvalidArgument("the witness is not available for family " + std::string(to_string(s.family)));
  }
  return o.route == IntegrationRoute::Exact ? witness_expectation_moments(*wspec, w)
                                            : witness_expectation_wigner(*wspec, w, o.quadrature);
}

double swap_value(const StateDescriptor& s, const EvalOptions& o) {
  if (s.family == StateFamily::CoherentMixture) {
    return swap_expectation_coherent_mixture(s.get("p"), s.alpha1(), s.alpha2());
  }
  auto wspec = two_mode_wigner(s);
  if (!wspec) {
    throw InvalidArgument("the SWAP witness is not available for family " + std::string(to_string(s.family)));
  }
  return o.route == IntegrationRoute::Exact ? std::numbers::pi * wigner_slice_integral_moments(*wspec, swap_slice_map())
                                            : swap_expectation(*wspec, o.quadrature);
}

std::string_view witness_verdict(double value) { return certifies_entanglement(value) ? "entangled" : "undetected"; }

Evaluation witness_record(const StateDescriptor& s, double mu1, double mu2, double value) {
  Evaluation e;
  e.value = value;
  e.verdict = witness_verdict(value);
  e.record = {{"state", state_to_json(s)},
              {"mu1", mu1},
              {"mu2", mu2},
              {"value", value},
              {"entangled", certifies_entanglement(value)}};
  return e;
}

std::optional<double> available(const std::function<double()>& f) {
  try {
    return f();
  } catch (const InvalidArgument&) {
    return std::nullopt;
  }
}

std::string cell_text(double a, double b, double value, std::string_view verdict) {
  std::string line = format_double(a);
  line += ',';
  line += format_double(b);
  line += ',';
  line += format_double(value);
  line += ',';
  line += verdict;
  line += '\n';
  return line;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

Quantity parse_quantity(std::string_view name) {
  for (const auto& info : kQuantities) {
    if (info.name == name) return info.quantity;
  }
  throw InvalidArgument("unknown quantity \"" + std::string(name) + "\"");
}

std::string_view to_string(Quantity q) {
  for (const auto& info : kQuantities) {
    if (info.quantity == q) return info.name;
  }
  return "unknown";
}

Evaluation evaluate(const StateDescriptor& state, Quantity quantity, const EvalOptions& options) {
  switch (quantity) {
    case Quantity::OptimalWitness: {
      auto sf = standard_form(state);
      if (!sf) throw InvalidArgument("optimal_witness needs a two-mode standard-form Gaussian state");
      const OptimalWitness opt = optimal_witness(*sf);
      return witness_record(state, 0.5 * (opt.mu_plus + opt.mu_minus), 0.5 * (opt.mu_plus - opt.mu_minus),
                            opt.value);
    }
    case Quantity::Witness01:
      return witness_record(state, 0.0, 1.0, witness_value(state, WitnessParams(0.0, 1.0), options));
    case Quantity::Witness: {
      if (!options.mu1 || !options.mu2) throw InvalidArgument("quantity witness needs --mu1 and --mu2");
      const WitnessParams w(*options.mu1, *options.mu2);
      return witness_record(state, w.mu1(), w.mu2(), witness_value(state, w, options));
    }
    case Quantity::Swap: {
      const double value = swap_value(state, options);
      Evaluation e;
      e.value = value;
      e.verdict = witness_verdict(value);
      e.record = {{"state", state_to_json(state)},
                  {"observable", "swap"},
                  {"value", value},
                  {"entangled", certifies_entanglement(value)}};
      return e;
    }
    case Quantity::RealignmentNorm: {
      const RealignmentResult r = realignment_norm(gaussian_covariance(state));
      Evaluation e;
      e.value = r.norm;
      e.verdict = to_string(r.verdict);
      e.record = realignment_to_json(r);
      e.record["state"] = state_to_json(state);
      return e;
    }
    case Quantity::Classify: {
      if (state.family != StateFamily::TwoTwo) throw InvalidArgument("classify applies to the two_two family only");
      const TwoTwoClassification c = classify_two_two(state.get("a"), state.get("b"), state.get("c"));
      Evaluation e;
      e.value = c.norm;
      e.verdict = to_string(c.verdict);
      e.record = classification_to_json(c);
      e.record["state"] = state_to_json(state);
      return e;
    }
    case Quantity::Bounds: {
      const auto w01 = available([&] { return witness_value(state, WitnessParams(0.0, 1.0), options); });
      const auto swap = available([&] { return swap_value(state, options); });
      if (!w01 && !swap) {
        throw InvalidArgument("no witness is available for family " + std::string(to_string(state.family)));
      }
      const BoundReport report = make_bound_report(w01, swap);
      Evaluation e;
      e.value = swap ? report.eof_lower : report.cren_lower;
      e.verdict = e.value > 0.0 ? "entangled" : "undetected";
      e.record = bounds_to_json(report);
      e.record["state"] = state_to_json(state);
      return e;
    }
  }
  throw InvalidArgument("unhandled quantity");
}

double Axis::value(int k) const {
  if (k == 0) return min;
  if (k == steps - 1) return max;
  return min + (max - min) * static_cast<double>(k) / static_cast<double>(steps - 1);
}

Axis parse_axis(std::string_view text) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : text) {
    if (ch == ':') {
      parts.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  parts.push_back(current);
  if (parts.size() != 4 || parts[0].empty()) {
    throw InvalidArgument("axis \"" + std::string(text) + "\" must look like name:min:max:steps");
  }
  auto number = [&](const std::string& s) {
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(x)) {
      throw InvalidArgument("axis bound \"" + s + "\" is not a finite number");
    }
    return x;
  };
  Axis axis;
  axis.name = parts[0];
  axis.min = number(parts[1]);
  axis.max = number(parts[2]);
  const auto [ptr, ec] = std::from_chars(parts[3].data(), parts[3].data() + parts[3].size(), axis.steps);
  if (ec != std::errc() || ptr != parts[3].data() + parts[3].size() || axis.steps < 2) {
    throw InvalidArgument("axis steps must be an integer >= 2, got \"" + parts[3] + "\"");
  }
  if (axis.max < axis.min) throw InvalidArgument("axis " + axis.name + " has max < min");
  return axis;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) throw std::logic_error("to_chars failed");
  return std::string(buf, ptr);
}

std::string scan_csv(const ScanSpec& spec) {
  for (const Axis& axis : spec.axes) {
    StateDescriptor probe = spec.base;
    probe.set(axis.name, axis.min);
  }
  const Axis& outer = spec.axes[0];
  const Axis& inner = spec.axes[1];
  std::vector<std::string> rows(static_cast<std::size_t>(outer.steps));
  std::vector<std::exception_ptr> failures(rows.size());
  std::atomic<int> next{0};

  auto work = [&] {
    for (int i = next++; i < outer.steps; i = next++) {
      try {
        std::string text;
        StateDescriptor state = spec.base;
        const double a = outer.value(i);
        state.set(outer.name, a);
        for (int j = 0; j < inner.steps; ++j) {
          const double b = inner.value(j);
          state.set(inner.name, b);
          double value = kNan;
          std::string verdict;
          try {
            const Evaluation e = evaluate(state, spec.quantity, spec.options);
            value = e.value;
            verdict = e.verdict;
          } catch (const InvalidArgument&) {
            verdict = "unphysical";
          } catch (const NumericDomainError&) {
            verdict = "singular";
          } catch (const ConvergenceError&) {
            verdict = "error";
          }
          text += cell_text(a, b, value, verdict);
        }
        rows[static_cast<std::size_t>(i)] = std::move(text);
      } catch (...) {
        failures[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  };

  const int workers = std::clamp(spec.workers, 1, outer.steps);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  std::string csv = "param1,param2,value,verdict\n";
  for (const auto& row : rows) csv += row;
  return csv;
}

void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".partial";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw IoError("write to " + tmp.string() + " failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw IoError("cannot move output into " + path.string() + ": " + ec.message());
  }
}

bool VerifyReport::ok() const {
  return std::all_of(cases.begin(), cases.end(), [](const VerifyCase& c) { return c.ok(); });
}

json VerifyReport::to_json() const {
  json list = json::array();
  for (const auto& c : cases) {
    json entry = {{"case", c.name}, {"max_deviation", c.max_deviation}, {"tolerance", c.tolerance}, {"ok", c.ok()}};
    if (!c.failure.empty()) entry["failure"] = c.failure;
    list.push_back(std::move(entry));
  }
  return {{"cutoff", cutoff}, {"r_max", r_max}, {"cases", list}, {"ok", ok()}};
}

VerifyReport run_verify(int cutoff, double r_max, const std::optional<std::filesystem::path>& dump_dir) {
  if (cutoff < 4 || cutoff > 64) throw InvalidArgument("verify: cutoff must lie in [4, 64]");
  if (!(r_max >= 0.0) || !std::isfinite(r_max)) throw InvalidArgument("verify: rmax must be finite and >= 0");
  if (dump_dir) {
    std::error_code ec;
    std::filesystem::create_directories(*dump_dir, ec);
    if (ec) throw IoError("cannot create " + dump_dir->string() + ": " + ec.message());
  }

  constexpr double kValueTolerance = 1e-3;
  constexpr double kCovarianceTolerance = 1e-6;
  constexpr double kThermalPhotons = 0.5;
  constexpr int kRadii = 5;

  VerifyReport report;
  report.cutoff = cutoff;
  report.r_max = r_max;

  struct Group {
    std::string name;
    std::vector<std::pair<std::string, double>> quantities;
  };
  const std::vector<Group> groups{
      {"tmsv", {{"witness01", kValueTolerance}, {"swap", kValueTolerance}, {"realignment", kValueTolerance},
                {"negativity", kValueTolerance}}},
      {"squeezed_thermal",
       {{"witness01", kValueTolerance}, {"swap", kValueTolerance}, {"realignment", kValueTolerance},
        {"covariance", kCovarianceTolerance}}},
      {"photon_added", {{"witness01", kValueTolerance}, {"swap", kValueTolerance}}},
      {"coherent_mixture", {{"swap", kValueTolerance}}},
  };

  auto dump = [&](const std::string& tag, const FockDensityMatrix& rho) {
    if (!dump_dir) return;
    try {
      write_fock_dump(*dump_dir / (tag + ".cvfock"), rho);
    } catch (const std::runtime_error& e) {
      throw IoError(e.what());
    }
  };
  const EvalOptions exact{std::nullopt, std::nullopt, IntegrationRoute::Exact, {}};

  for (const Group& g : groups) {
    const std::size_t first = report.cases.size();
    for (const auto& [q, tol] : g.quantities) report.cases.push_back({g.name + "." + q, 0.0, tol, {}});
    auto record = [&](std::size_t k, double deviation) {
      auto& c = report.cases[first + k];
      c.max_deviation = std::max(c.max_deviation, std::isnan(deviation) ? std::numeric_limits<double>::infinity()
                                                                        : std::abs(deviation));
    };
    const int radii = g.name == "coherent_mixture" ? 1 : kRadii;
    for (int k = 0; k < radii; ++k) {
      const double r = r_max * k / (kRadii - 1);
      const std::string tag = g.name + "_r" + std::to_string(k);
      try {
        if (g.name == "tmsv") {
          const FockDensityMatrix rho = tmsv_fock(r, cutoff);
          dump(tag, rho);
          StateDescriptor s;
          s.family = StateFamily::SqueezedThermal;
          s.set("n", 0.0);
          s.set("r", r);
          record(0, witness_fock(rho, FockObservable::W01) - (1.0 - std::exp(2.0 * r)));
          record(1, witness_fock(rho, FockObservable::Swap) - swap_value(s, exact));
          record(2, realignment_trace_norm_fock(rho) - std::exp(2.0 * r));
          record(3, negativity_fock(rho) - (std::exp(2.0 * r) - 1.0));
        } else if (g.name == "squeezed_thermal") {
          const FockDensityMatrix rho = squeezed_thermal_fock(kThermalPhotons, r, cutoff);
          dump(tag, rho);
          const TwoModeStandardForm sf = squeezed_thermal_params(kThermalPhotons, r);
          StateDescriptor s;
          s.family = StateFamily::SqueezedThermal;
          s.set("n", kThermalPhotons);
          s.set("r", r);
          record(0, witness_fock(rho, FockObservable::W01) - witness_expectation_gaussian(sf, WitnessParams(0.0, 1.0)));
          record(1, witness_fock(rho, FockObservable::Swap) - swap_value(s, exact));
          record(2, realignment_trace_norm_fock(rho) - realignment_norm_two_mode(sf));
          record(3, (fock_covariance(rho) - sf.covariance().matrix()).cwiseAbs().maxCoeff());
        } else if (g.name == "photon_added") {
          const FockDensityMatrix rho = photon_added_sts_fock(kThermalPhotons, r, cutoff);
          dump(tag, rho);
          StateDescriptor s;
          s.family = StateFamily::PhotonAddedSts;
          s.set("n", kThermalPhotons);
          s.set("r", r);
          record(0, witness_fock(rho, FockObservable::W01) - witness_photon_added_closed(kThermalPhotons, r));
          record(1, witness_fock(rho, FockObservable::Swap) - swap_value(s, exact));
        } else {
          const std::complex<double> a1{1.0, 0.0}, a2{-1.0, 0.0};
          const FockDensityMatrix rho = coherent_mixture_fock(0.6, a1, a2, cutoff);
          dump(tag, rho);
          record(0, witness_fock(rho, FockObservable::Swap) - swap_expectation_coherent_mixture(0.6, a1, a2));
        }
      } catch (const TruncationError& e) {
        for (std::size_t q = 0; q < g.quantities.size(); ++q) {
          auto& c = report.cases[first + q];
          if (c.failure.empty()) c.failure = "truncation insufficient at r=" + format_double(r) + ": " + e.what();
        }
      }
    }
  }
  return report;
}

json load_state_json(const std::string& text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  const bool inline_json = start != std::string::npos && text[start] == '{';
  const std::string body = inline_json ? text : read_text_file(text);
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("state descriptor is not valid JSON: ") + e.what());
  }
}

int default_workers() {
  if (const char* env = std::getenv("CV_ENTANGLE_WORKERS"); env != nullptr && *env != '\0') {
    int n = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec != std::errc() || ptr != s.data() + s.size() || n < 1) {
      throw InvalidArgument("CV_ENTANGLE_WORKERS must be a positive integer, got \"" + std::string(s) + "\"");
    }
    return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const InvalidArgument*>(&e) != nullptr) return kExitInvalidInput;
  if (dynamic_cast<const NumericDomainError*>(&e) != nullptr || dynamic_cast<const ConvergenceError*>(&e) != nullptr ||
      dynamic_cast<const TruncationError*>(&e) != nullptr) {
    return kExitNumeric;
  }
  if (dynamic_cast<const IoError*>(&e) != nullptr || dynamic_cast<const std::filesystem::filesystem_error*>(&e) != nullptr) {
    return kExitIo;
  }
  return kExitInternal;
}

int run(int argc, char** argv) {
  CLI::App app{"Continuous-variable entanglement detection: witnesses, realignment, bounds and a Fock-space cross-check."};
  app.require_subcommand(1);

  std::string state_text;
  std::string quantity_text = "optimal_witness";
  std::string route_text = "quadrature";
  std::string out_path;
  std::vector<std::string> axes_text;
  double mu1 = 0.0, mu2 = 0.0;
  int order = 80;
  int workers = 0;
  int cutoff = 40;
  double r_max = 0.6;
  std::string dump_dir;

  auto add_eval_flags = [&](CLI::App* sub) -> std::pair<CLI::Option*, CLI::Option*> {
    sub->add_option("--state", state_text, "state descriptor: inline JSON or a file path")->required();
    sub->add_option("--quantity", quantity_text,
                    "optimal_witness | witness01 | witness | realignment_norm | classify | bounds | swap")
        ->capture_default_str();
    auto* m1 = sub->add_option("--mu1", mu1, "witness parameter mu1 (quantity witness)");
    auto* m2 = sub->add_option("--mu2", mu2, "witness parameter mu2 (quantity witness)");
    sub->add_option("--route", route_text, "phase-space integration: quadrature | exact")
        ->check(CLI::IsMember({"quadrature", "exact"}))
        ->capture_default_str();
    sub->add_option("--order", order, "Gauss-Hermite nodes per axis")->capture_default_str();
    return {m1, m2};
  };

  auto* eval = app.add_subcommand("eval", "evaluate one quantity for one state, JSON on stdout");
  const auto [eval_mu1, eval_mu2] = add_eval_flags(eval);

  auto* scan = app.add_subcommand("scan", "evaluate a quantity over a two-parameter grid, CSV to --out");
  const auto [scan_mu1, scan_mu2] = add_eval_flags(scan);
  scan->add_option("--axes", axes_text, "two axes, each name:min:max:steps")->required()->expected(2);
  scan->add_option("--out", out_path, "CSV destination")->required();
  scan->add_option("--workers", workers, "worker threads (default: CV_ENTANGLE_WORKERS or all cores)");

  auto* verify = app.add_subcommand("verify", "cross-check analytic routes against the Fock-space oracle");
  verify->add_option("--cutoff", cutoff, "Fock cutoff per mode")->capture_default_str();
  verify->add_option("--rmax", r_max, "largest squeezing parameter")->capture_default_str();
  verify->add_option("--dump-dir", dump_dir, "write every oracle density matrix here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    auto options_for = [&](CLI::Option* m1, CLI::Option* m2) {
      EvalOptions o;
      if (m1->count() > 0) o.mu1 = mu1;
      if (m2->count() > 0) o.mu2 = mu2;
      o.route = route_text == "exact" ? IntegrationRoute::Exact : IntegrationRoute::Quadrature;
      o.quadrature.order = order;
      return o;
    };

    if (eval->parsed()) {
      const StateDescriptor state = state_from_json(load_state_json(state_text));
      const Evaluation e = evaluate(state, parse_quantity(quantity_text), options_for(eval_mu1, eval_mu2));
      std::cout << e.record.dump() << '\n';
      return kExitOk;
    }

    if (scan->parsed()) {
      ScanSpec spec;
      spec.axes = {parse_axis(axes_text.at(0)), parse_axis(axes_text.at(1))};
      if (spec.axes[0].name == spec.axes[1].name) throw InvalidArgument("the two axes must name different parameters");
      json base = load_state_json(state_text);
      if (!base.is_object()) throw InvalidArgument("state descriptor must be a JSON object");
      // axis parameters may be left out of the descriptor
      for (const Axis& axis : spec.axes) {
        if (axis.name.rfind("alpha", 0) == 0 && axis.name.size() > 6) {
          const std::string key = axis.name.substr(0, 6);
          if (!base.contains(key)) base[key] = {0.0, 0.0};
        } else if (!base.contains(axis.name)) {
          base[axis.name] = axis.min;
        }
      }
      spec.base = state_from_json(base);
      spec.quantity = parse_quantity(quantity_text);
      spec.options = options_for(scan_mu1, scan_mu2);
      spec.workers = workers > 0 ? workers : default_workers();
      write_file_atomically(out_path, scan_csv(spec));
      return kExitOk;
    }

    if (verify->parsed()) {
      std::optional<std::filesystem::path> dir;
      if (!dump_dir.empty()) dir = dump_dir;
      const VerifyReport report = run_verify(cutoff, r_max, dir);
      std::cout << report.to_json().dump(2) << '\n';
      if (!report.ok()) {
        for (const auto& c : report.cases) {
          if (c.ok()) continue;
          std::cerr << "verify: " << c.name << " failed: "
                    << (c.failure.empty() ? "deviation " + format_double(c.max_deviation) + " exceeds " +
                                                format_double(c.tolerance)
                                          : c.failure)
                    << '\n';
        }
        return kExitVerifyBreach;
      }
      return kExitOk;
    }
  } catch (const std::exception& e) {
    const int code = exit_code_for(e);
    std::cerr << (code == kExitInvalidInput ? "invalid input: "
                  : code == kExitNumeric    ? "numeric failure: "
                  : code == kExitIo         ? "I/O error: "
                                            : "internal error: ")
              << e.what() << '\n';
    return code;
  }
  return kExitInvalidInput;
}

}  // namespace cvent::cli
