#include "waring/equivalence.hpp"

#include <random>

#include "waring/errors.hpp"
#include "waring/linalg.hpp"
#include "waring/parallel.hpp"
#include "waring/univariate.hpp"

namespace waring {

std::string to_string(Field f) { return f == Field::Complex ? "C" : "R"; }

std::string to_string(RejectReason r) {
  switch (r) {
    case RejectReason::SingularSlicePencil: return "SingularSlicePencil";
    case RejectReason::NonCommuting: return "NonCommuting";
    case RejectReason::NotDiagonalizable: return "NotDiagonalizable";
    case RejectReason::NotRealDiagonalizable: return "NotRealDiagonalizable";
  }
  return "?";
}

std::string to_string(const Verdict& v) {
  return v.accept ? "ACCEPT" : "REJECT trace=" + to_string(*v.trace);
}

namespace {

void observe(EquivalenceStats* stats, std::size_t bits) {
  if (stats != nullptr) stats->observe(bits);
}

std::size_t poly_bits(const UniPoly& p) { return max_bit_length(p.coefficients()); }

// Diagonalizability check with the intermediates reported to the meter.
std::optional<RejectReason> check_diagonalizable(const QMatrix& m, Field field, EquivalenceStats* stats) {
  const UniPoly chi = char_poly(m);
  observe(stats, poly_bits(chi));
  const UniPoly pm = squarefree_part(chi);
  observe(stats, poly_bits(pm));
  const std::size_t n = m.rows();
  QMatrix acc(n, n);
  for (int k = pm.degree(); k >= 0; --k) {
    acc = acc * m;
    const Rational c = pm.coeff(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c;
    observe(stats, acc.max_bit_length());
  }
  if (!acc.is_zero()) return RejectReason::NotDiagonalizable;
  if (field == Field::Real && count_real_roots(pm) != static_cast<std::size_t>(pm.degree())) {
    return RejectReason::NotRealDiagonalizable;
  }
  return std::nullopt;
}

void require_cubic(const SparsePoly& f) {
  if (!f.is_zero() && !f.is_homogeneous(3)) throw NotCubic();
}

// Unit lower triangular matrix whose first column is r (r[0] = 1).
QMatrix first_column_matrix(const Vector& r) {
  QMatrix m = QMatrix::identity(r.size());
  for (std::size_t i = 1; i < r.size(); ++i) m(i, 0) = r[i];
  return m;
}

QMatrix slice_combination(const CubicSlices& s, const Vector& r) {
  QMatrix d(s.n, s.n);
  for (std::size_t i = 0; i < s.n; ++i) {
    if (!r[i].is_zero()) d += s.slices[i] * r[i];
  }
  return d;
}

std::optional<Verdict> trivial_cases(const SparsePoly& f) {
  if (f.is_zero()) return Verdict::Reject(RejectReason::SingularSlicePencil);
  // n = 1: c x^3 is the cube of c^{1/3} x over both fields
  if (f.nvars() == 1) return Verdict::Accept();
  return std::nullopt;
}

}  // namespace

Verdict simdiag_decision(const CubicSlices& s, Field field, EquivalenceStats* stats) {
  const std::size_t n = s.n;
  observe(stats, s.max_bit_length());
  const QMatrix t1_inv = inverse(s.slices[0]);
  observe(stats, t1_inv.max_bit_length());
  std::vector<QMatrix> m;
  m.reserve(n > 0 ? n - 1 : 0);
  for (std::size_t k = 1; k < n; ++k) {
    m.push_back(t1_inv * s.slices[k]);
    observe(stats, m.back().max_bit_length());
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!commute(m[i], m[j])) return Verdict::Reject(RejectReason::NonCommuting);
    }
  }
  // per-matrix checks are independent; keep the first failure in index order
  std::vector<EquivalenceStats> local(m.size());
  const auto results = parallel_map(m.size(), [&](std::size_t k) {
    return check_diagonalizable(m[k], field, stats ? &local[k] : nullptr);
  });
  for (const auto& l : local) observe(stats, l.peak_bits);
  for (const auto& r : results) {
    if (r) return Verdict::Reject(*r);
  }
  return Verdict::Accept();
}

unsigned default_sample_bits(std::size_t n) {
  const std::size_t target = 4 * n * n;
  unsigned bits = 0;
  while ((std::size_t{1} << bits) < target) ++bits;
  return bits;
}

Verdict randomized_equivalence(const SparsePoly& f, Field field, std::uint64_t seed,
                               std::optional<unsigned> sample_bits) {
  require_cubic(f);
  if (auto v = trivial_cases(f)) return *v;
  const std::size_t n = f.nvars();
  const unsigned bits = sample_bits.value_or(default_sample_bits(n));
  if (bits == 0 || bits > 62) throw std::invalid_argument("sample bits must be in 1..62");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, (std::uint64_t{1} << bits) - 1);
  Vector r(n);
  r[0] = 1;
  for (std::size_t i = 1; i < n; ++i) r[i] = Rational(Integer(static_cast<unsigned long>(dist(rng))));
  const CubicSlices s = slices_of(f);
  if (determinant(slice_combination(s, r)).is_zero()) {
    return Verdict::Reject(RejectReason::SingularSlicePencil);
  }
  return simdiag_decision(transformed_slices(s, first_column_matrix(r)), field);
}

Verdict deterministic_equivalence(const SparsePoly& f, Field field, EquivalenceStats* stats) {
  require_cubic(f);
  if (f.nvars() == 1 && !f.is_zero()) observe(stats, f.max_bit_length());
  if (auto v = trivial_cases(f)) return *v;
  const std::size_t n = f.nvars();
  const CubicSlices s = slices_of(f);
  observe(stats, s.max_bit_length());
  const long count = static_cast<long>(n * (n - 1) + 1);
  auto moment = [n](long t) {
    Vector r(n);
    Rational p(1);
    for (std::size_t i = 0; i < n; ++i) {
      r[i] = p;
      p *= Rational(t);
    }
    return r;
  };
  // scan in batches of the thread count; the smallest good t wins
  const long batch = static_cast<long>(thread_count());
  for (long start = 1; start <= count; start += batch) {
    const long len = std::min(batch, count - start + 1);
    const auto good = parallel_map(static_cast<std::size_t>(len), [&](std::size_t i) {
      const QMatrix d = slice_combination(s, moment(start + static_cast<long>(i)));
      return std::make_pair(!determinant(d).is_zero(), d.max_bit_length());
    });
    for (long i = 0; i < len; ++i) {
      observe(stats, good[static_cast<std::size_t>(i)].second);
      if (!good[static_cast<std::size_t>(i)].first) continue;
      const long t = start + i;
      if (stats != nullptr) stats->moment_parameter = t;
      const CubicSlices ts = transformed_slices(s, first_column_matrix(moment(t)));
      return simdiag_decision(ts, field, stats);
    }
  }
  return Verdict::Reject(RejectReason::SingularSlicePencil);
}

}  // namespace waring
