#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kanform/chains.hpp"

namespace kanform {

/// A lifting equation has no solution because the target is nonzero in
/// homology.  The CLI maps it to exit code 4.
class ObstructionError : public std::runtime_error {
 public:
  ObstructionError(const std::string& what, ExponentVector cls)
      : std::runtime_error(what), obstruction(std::move(cls)) {}
  ExponentVector obstruction;  // per-generator class in H_1, when k = 1
};

enum class LiftMethod {
  telescoping,  // leading-letter telescope (k = 1), bar contracting homotopy (k >= 2)
  fox,          // Fox-derivative homotopy at every k; a second canonical choice
  linear,       // integer solve over a candidate basis
};

std::string to_string(LiftMethod m);
LiftMethod lift_method_from_string(const std::string& s);

struct LiftCertificate {
  Chain target;
  Chain solution;
  Chain residual;  // boundary_bar(solution) - target, always zero when returned
  LiftMethod method = LiftMethod::telescoping;
  int depth = 0;          // closure depth for the linear method
  std::size_t basis = 0;  // candidate count for the linear method
  std::string note;
};

struct LiftOptions {
  /// Defaults follow the usual choice: telescoping at k = 1, linear above.
  std::optional<LiftMethod> method;
  int depth = 3;
  std::size_t max_candidates = 4000;
  /// Fall back to the contracting homotopy when the linear support runs out.
  bool fallback = true;
};

/// Solves boundary_bar(z) = b for b homogeneous of bar degree k.  Throws
/// ObstructionError (k = 1, nonzero exponent sums) or, for the linear method
/// without fallback, std::runtime_error when the candidate support is
/// exhausted.  The result is verified exactly before returning.
LiftCertificate bar_lift(const Chain& b, const LiftOptions& opts = {});

struct CycleResult {
  Chain cycle;  // sharp-normalized total cycle
  std::vector<LiftCertificate> steps;
};

/// Completes the column c_{1,r-1} to a total cycle by solving
/// d_bar c_{k,r-k} = (-1)^k d_simp c_{k-1,r-k+1} for k = 2..r.
CycleResult complete_cycle(const FreeSimplicialGroup& k, const Chain& top,
                           const LiftOptions& opts = {});

CycleResult surface_cycle(const FreeSimplicialGroup& k, const LiftOptions& opts = {});
CycleResult threefold_cycle(const FreeSimplicialGroup& k, const LiftOptions& opts = {});

/// Lift of a cellular cycle of degree 1..3: c_{1,r-1} = sum n_g [g].
CycleResult cycle_from_cellular(const FreeSimplicialGroup& k, const CellComplex& y,
                                const CellularChain& z, const LiftOptions& opts = {});

}  // namespace kanform
