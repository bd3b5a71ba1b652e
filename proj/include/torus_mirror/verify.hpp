#pragma once

// Verification suites and command reports. Every check carries the predicate
// it evaluated; exact checks never carry residuals.

#include <cstdint>
#include <string>
#include <vector>

#include "torus_mirror/fukaya.hpp"
#include "torus_mirror/json_io.hpp"

namespace torus_mirror {

inline constexpr const char* kReportSchema = "torus-mirror.report/v1";

enum class CheckKind { Exact, Numeric };

struct CheckRecord {
  std::string name;
  std::string predicate;
  bool pass = false;
  CheckKind kind = CheckKind::Exact;
  double residual = 0;  // numeric checks only
  double tol = 0;       // numeric checks only
  Json witnesses = Json::array();
  Json details = Json::object();
};

struct Report {
  std::string command;
  Json config = Json::object();
  Json result = Json::object();
  std::vector<CheckRecord> checks;

  bool pass() const;
  Json to_json() const;
};

struct VerifyConfig {
  std::uint64_t seed = 0;
  std::size_t samples = 50;
  double tol = 1e-8;
  int bound = 1;
  NumberMode mode = NumberMode::Exact;
};

Json config_json(const VerifyConfig& cfg);

/// Suite names accepted by run_suite, without "all".
const std::vector<std::string>& suite_names();

/// Throws UnknownSuite for names outside suite_names() and "all".
Report run_suite(const std::string& suite, const VerifyConfig& cfg);

/// T = [[i, 1], [-1, i]] with delta = diag(0, 1).
TorusInput section5_torus();

Report find_delta_report(const TorusInput& in, const VerifyConfig& cfg);
Report mirror_report(const TorusInput& in, const VerifyConfig& cfg);
Report check_bundle_report(const BundleInput& in, const VerifyConfig& cfg);
Report build_unitaries_report(const UnitaryInput& in, const VerifyConfig& cfg);
Report enumerate_report(const TorusInput& in, const VerifyConfig& cfg);

/// Mirror objects of all holomorphic E_(r,A,0,U) with r in {1, 2}, entries of
/// A in [-bound, bound], every sign twist of the V_j and U_k (the
/// determinant-phase branches) and both sides.
struct InjectivityResult {
  std::size_t bundles = 0;
  std::size_t objects = 0;
  std::size_t distinct_keys = 0;
  std::size_t collisions = 0;       // equal keys with different complex data
  std::size_t fukaya_failures = 0;  // objects failing (f1) or (f2)
  std::size_t cocycle_failures = 0; // unitary sets or pullbacks failing their relations
  Json witnesses = Json::array();
};

InjectivityResult injectivity_check(const ComplexMatrix& T, const IntMatrix& delta, int bound);

/// Index of Z^n in Z^n + (A/r) Z^n, from the Hermite basis of [rI | A].
Integer lattice_index_rank(const Integer& r, const IntMatrix& A);

}  // namespace torus_mirror
