#pragma once

#include "qprobe/diagnostics.hpp"

namespace qprobe {

/// Local filters A, B with A†A ≤ I and B†B ≤ I.
class FilterPair {
 public:
  /// Throws InvalidOperator if either filter is not a contraction within 1e-10.
  FilterPair(ComplexMatrix a, ComplexMatrix b);

  const ComplexMatrix& a() const { return a_; }
  const ComplexMatrix& b() const { return b_; }

 private:
  ComplexMatrix a_;
  ComplexMatrix b_;
};

inline constexpr double kAnnihilationThreshold = 1e-14;

/// (A ⊗ B) rho (A ⊗ B)† / Tr[...]; throws AnnihilatedState if the trace is
/// at most 1e-14.
DensityMatrix local_filter(const DensityMatrix& rho, const FilterPair& f);

/// A = σz ⊕ 0_{d-2}, B = σx ⊕ 0_{d-2}; d >= 3.
FilterPair werner_filters(int d);

FilterPair identity_filters(Dims dims);

struct FilterAnalysis {
  DiagnosticsReport before;
  DiagnosticsReport after;
  bool ccnr_increased = false;
  bool faithfulness_lost = false;
};

FilterAnalysis filter_analysis(const DensityMatrix& rho, const FilterPair& f);

}  // namespace qprobe
