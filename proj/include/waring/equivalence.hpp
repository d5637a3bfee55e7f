#pragma once

// Decide whether a rational cubic form f(x1..xn) can be written as
// l_1(x)^3 + ... + l_n(x)^3 with linearly independent linear forms over C or R.

#include <cstdint>
#include <optional>
#include <string>

#include "waring/slices.hpp"
#include "waring/sparse_poly.hpp"

namespace waring {

enum class Field { Complex, Real };

enum class RejectReason { SingularSlicePencil, NonCommuting, NotDiagonalizable, NotRealDiagonalizable };

std::string to_string(Field f);
std::string to_string(RejectReason r);

struct Verdict {
  bool accept = false;
  std::optional<RejectReason> trace;  // set iff rejected

  static Verdict Accept() { return {true, std::nullopt}; }
  static Verdict Reject(RejectReason r) { return {false, r}; }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// "ACCEPT" or "REJECT trace=<reason>"
std::string to_string(const Verdict& v);

/// Optional instrumentation of a run.
struct EquivalenceStats {
  std::size_t peak_bits = 0;          // largest numerator/denominator bit length seen
  std::optional<long> moment_parameter;  // t of the moment point used (deterministic mode)
  void observe(std::size_t bits) { peak_bits = bits > peak_bits ? bits : peak_bits; }
};

/// Accept iff the matrices T1^{-1} T_k commute pairwise and are each
/// diagonalizable over the field. Throws SingularMatrix when T1 is singular.
Verdict simdiag_decision(const CubicSlices& s, Field field, EquivalenceStats* stats = nullptr);

/// ceil(log2(4 n^2))
unsigned default_sample_bits(std::size_t n);

/// One-sided Monte Carlo test: never accepts an inequivalent form. The change
/// of variables is unit lower triangular with a random first column drawn from
/// {0, ..., 2^sample_bits - 1}. Throws NotCubic.
Verdict randomized_equivalence(const SparsePoly& f, Field field, std::uint64_t seed,
                               std::optional<unsigned> sample_bits = std::nullopt);

/// Exact decision. Scans moment points (1, t, ..., t^{n-1}), t = 1..n(n-1)+1,
/// for one making the slice combination invertible. Throws NotCubic.
Verdict deterministic_equivalence(const SparsePoly& f, Field field, EquivalenceStats* stats = nullptr);

}  // namespace waring
